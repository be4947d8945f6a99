// questions.hpp -- enumeration of pairwise non-isomorphic questions

#pragma once

#include <vector>

#include "maset/pattern.hpp"

namespace maset {

/// All pairwise non-isomorphic questions with respect to a tight normalized
/// pattern, one representative per class, in ascending lexicographic order.
/// Candidate pegs draw from the u explicit colors, up to `pegs` fresh colors
/// u..u+p-1 (appearing in ascending first-use order), and the additional
/// color.  The all-additional question is excluded; AB questions never
/// repeat a peg.
std::vector<Question> gen_questions(const Pattern& pattern);

/// Non-isomorphic questions for a concrete maset.  Pegs draw from all
/// `colors()` colors plus the additional color when the maset allows it.
/// Questions that leave the maset whole (a single non-(p,0) answer class
/// equal to the input) are dropped, so asking any returned question makes
/// progress.
std::vector<Question> gen_questions_concrete(const Maset& maset);

}  // namespace maset
