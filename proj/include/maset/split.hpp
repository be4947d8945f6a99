// split.hpp -- partitioning a game state by the answer to a question

#pragma once

#include <vector>

#include "maset/pattern.hpp"

namespace maset {

struct PatternSplit {
  Pattern extended;              ///< input after extension (input itself when v == u)
  int extension_target;          ///< v = max(u, 1 + max explicit question color)
  std::vector<Pattern> buckets;  ///< P patterns in answer-index order
};

/// Splits a tight normalized pattern by a question: extends so that every
/// question color is explicit, then routes each clause to the bucket of its
/// answer.  Buckets partition the extended pattern's clauses; an impossible
/// answer yields the empty pattern.
PatternSplit split_pattern(const Pattern& pattern, const Question& q);

/// Concrete analogue: partitions the secrets by their answer to `q`.
std::vector<Maset> split_concrete(const Maset& maset, const Question& q);

}  // namespace maset
