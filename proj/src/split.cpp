#include "maset/split.hpp"

#include <stdexcept>

#include "maset/answers.hpp"

namespace maset {

PatternSplit split_pattern(const Pattern& pattern, const Question& q) {
  if (!pattern.is_tight())
    throw std::invalid_argument("split_pattern expects a tight pattern");
  if (static_cast<int>(q.pegs.size()) != pattern.pegs())
    throw std::invalid_argument("question peg count mismatch");

  const int u = pattern.explicit_color_count();
  int v = u;
  for (Sym s : q.pegs)
    if (is_color(s)) v = std::max(v, static_cast<int>(s) + 1);

  Pattern extended = v > u ? extend(pattern, v) : pattern;
  const int p = pattern.pegs();
  const int P = answer_count(p);

  std::vector<std::vector<Sym>> cells(static_cast<std::size_t>(P));
  for (int i = 0; i < extended.clause_count(); ++i) {
    auto cl = extended.clause(i);
    int k = answer_index(clause_answer(cl, q.pegs, extended.deficit()), p);
    cells[static_cast<std::size_t>(k)].insert(
        cells[static_cast<std::size_t>(k)].end(), cl.begin(), cl.end());
  }
  std::vector<Pattern> buckets;
  buckets.reserve(static_cast<std::size_t>(P));
  for (auto& c : cells)
    buckets.emplace_back(pattern.game(), p, extended.deficit(), std::move(c));
  return {std::move(extended), v, std::move(buckets)};
}

std::vector<Maset> split_concrete(const Maset& maset, const Question& q) {
  if (static_cast<int>(q.pegs.size()) != maset.pegs())
    throw std::invalid_argument("question peg count mismatch");
  const int p = maset.pegs();
  const int P = answer_count(p);
  std::vector<std::vector<Sym>> cells(static_cast<std::size_t>(P));
  for (int i = 0; i < maset.size(); ++i) {
    auto s = maset.secret(i);
    int k = answer_index(secret_answer(s, q.pegs), p);
    cells[static_cast<std::size_t>(k)].insert(
        cells[static_cast<std::size_t>(k)].end(), s.begin(), s.end());
  }
  std::vector<Maset> buckets;
  buckets.reserve(static_cast<std::size_t>(P));
  for (auto& c : cells)
    buckets.emplace_back(maset.game(), p, maset.colors(),
                         maset.additional_allowed(), std::move(c));
  return buckets;
}

}  // namespace maset
