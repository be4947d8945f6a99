// solver.hpp -- exact optimal expected-case solving

#pragma once

#include <cstdint>
#include <unordered_map>

#include "maset/canon.hpp"
#include "maset/pattern.hpp"
#include "maset/rational.hpp"

namespace maset {

/// Minimal external path length for star-free maset patterns, memoized on
/// canonical keys.  Base cases: 0 for the just-guessed state and the empty
/// pattern, 1 for one secret, 3 for two; otherwise the minimum over the
/// generated questions of m plus the children's path lengths, where the
/// (p,0) child counts as just guessed.
class StarFreeSolver {
 public:
  std::int64_t solve(const Pattern& pattern, bool just_guessed = false);

 private:
  std::int64_t solve_search(const Pattern& normalized);
  std::unordered_map<CanonicalKey, std::int64_t> memo_;
};

/// Brute-force optimal solver for concrete masets: the ground truth the
/// recurrence system is verified against.  Explores every non-isomorphic
/// question over all colors (plus the additional color when allowed) and
/// memoizes on canonical keys, so results are deterministic and invariant
/// under color/position symmetries of the input.
class Oracle {
 public:
  std::int64_t solve(const Maset& maset);

  std::size_t memo_size() const { return memo_.size(); }

 private:
  std::unordered_map<CanonicalKey, std::int64_t> memo_;
};

/// Minimal expected number of questions, solve / |S|, as an exact rational.
Rational expected_questions(const Maset& maset);

/// Closed form for the expected number of questions in two-peg Mastermind
/// with n colors; valid for n >= 3.
Rational closed_form_mm(int colors);

/// Closed form for the expected number of questions in the two-peg AB game
/// with n colors; valid for n >= 2.
Rational closed_form_ab(int colors);

}  // namespace maset
