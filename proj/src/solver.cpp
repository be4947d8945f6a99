#include "maset/solver.hpp"

#include <limits>
#include <stdexcept>

#include "maset/answers.hpp"
#include "maset/questions.hpp"
#include "maset/split.hpp"

namespace maset {

std::int64_t StarFreeSolver::solve(const Pattern& pattern, bool just_guessed) {
  if (pattern.has_star())
    throw std::invalid_argument("solve_star_free expects a star-free pattern");
  if (just_guessed || pattern.is_empty()) return 0;
  const int m = pattern.clause_count();
  if (m == 1) return 1;
  if (m == 2) return 3;
  Pattern normalized = tighten(normalize(pattern)).pattern;
  CanonicalKey key = canonical_pattern(normalized);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  std::int64_t value = solve_search(normalized);
  memo_.emplace(std::move(key), value);
  return value;
}

std::int64_t StarFreeSolver::solve_search(const Pattern& normalized) {
  const int m = normalized.clause_count();
  const int p = normalized.pegs();
  const int last = answer_count(p) - 1;
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (const Question& q : gen_questions(normalized)) {
    auto split = split_pattern(normalized, q);
    bool splits = true;
    for (int k = 0; k < last && splits; ++k)
      splits = split.buckets[static_cast<std::size_t>(k)].clause_count() < m;
    if (!splits) continue;
    std::int64_t total = m;
    for (int k = 0; k <= last && total < best; ++k)
      total += solve(split.buckets[static_cast<std::size_t>(k)], k == last);
    best = std::min(best, total);
  }
  if (best == std::numeric_limits<std::int64_t>::max())
    throw std::logic_error("no splitting question for a star-free pattern");
  return best;
}

std::int64_t Oracle::solve(const Maset& maset) {
  const int size = maset.size();
  if (size == 0) return 0;
  if (size == 1) return 1;
  CanonicalKey key = canonical_concrete(maset);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  const int last = answer_count(maset.pegs()) - 1;
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  auto questions = gen_questions_concrete(maset);
  if (questions.empty())
    throw std::logic_error("no splitting question for a maset of size >= 2");
  for (const Question& q : questions) {
    auto buckets = split_concrete(maset, q);
    std::int64_t total = size;
    for (int k = 0; k < last && total < best; ++k)
      total += solve(buckets[static_cast<std::size_t>(k)]);
    best = std::min(best, total);
  }
  memo_.emplace(std::move(key), best);
  return best;
}

Rational expected_questions(const Maset& maset) {
  if (maset.is_empty())
    throw std::invalid_argument("expected_questions needs a nonempty maset");
  Oracle oracle;
  return Rational(oracle.solve(maset), maset.size());
}

Rational closed_form_mm(int colors) {
  if (colors < 3)
    throw std::invalid_argument("closed form for MM requires n >= 3");
  const std::int64_t n = colors;
  std::int64_t numerator = colors % 2 == 0
                               ? 8 * n * n * n + 51 * n * n - 74 * n + 48
                               : 8 * n * n * n + 51 * n * n - 80 * n + 69;
  return Rational(numerator, 24 * n * n);
}

Rational closed_form_ab(int colors) {
  if (colors < 2)
    throw std::invalid_argument("closed form for AB requires n >= 2");
  const std::int64_t n = colors;
  std::int64_t numerator = colors % 2 == 0
                               ? 4 * n * n * n + 21 * n * n - 76 * n + 72
                               : 4 * n * n * n + 21 * n * n - 82 * n + 105;
  return Rational(numerator, 12 * n * (n - 1));
}

}  // namespace maset
