// canon.hpp -- canonical forms under row, column and color permutations

#pragma once

#include <string>

#include "maset/pattern.hpp"

namespace maset {

/// Byte string identifying an isomorphism class.  Keys from different
/// entry points (pattern, pattern+question, concrete maset) never collide
/// because each carries its own tag and shape header.
using CanonicalKey = std::string;

/// Key of a normalized pattern under row, column and explicit-color
/// permutations.  Star indices (the deficit) are ignored, so a pattern and
/// its tightened form share a key.
CanonicalKey canonical_pattern(const Pattern& pattern);

/// As canonical_pattern, with the question pinned as an extra row that
/// never permutes into the clause rows.  The additional color is fixed by
/// all color permutations and orders after the star.
CanonicalKey canonical_with_question(const Pattern& pattern, const Question& q);

/// Key of a concrete maset under permutations of all `colors()` colors and
/// of the peg positions.  The color count is part of the key.
CanonicalKey canonical_concrete(const Maset& maset);

/// Concrete-maset key extended with a pinned question row.
CanonicalKey canonical_concrete_with_question(const Maset& maset,
                                              const Question& q);

}  // namespace maset
