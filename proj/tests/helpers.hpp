// Shared test utilities: pattern literals, random permutations, and a
// brute-force isomorphism oracle kept independent of the canon module.

#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "maset/io.hpp"
#include "maset/pattern.hpp"

namespace testutil {

using maset::Game;
using maset::Pattern;
using maset::Question;
using maset::Sym;

inline Pattern mm(const std::string& text, int pegs = 2) {
  return maset::parse_pattern(text, Game::mm, pegs);
}

inline Pattern ab(const std::string& text, int pegs = 2) {
  return maset::parse_pattern(text, Game::ab, pegs);
}

inline Question q(const std::string& text) { return maset::parse_question(text); }

// Applies a row order, column permutation and color permutation to the
// clause table of a pattern.  `colors` maps old explicit ids to new ones.
inline Pattern permute_pattern(const Pattern& p, const std::vector<int>& rows,
                               const std::vector<int>& cols,
                               const std::vector<int>& colors) {
  std::vector<Sym> cells;
  for (int r : rows) {
    auto clause = p.clause(r);
    for (int j = 0; j < p.pegs(); ++j) {
      Sym s = clause[static_cast<std::size_t>(cols[static_cast<std::size_t>(j)])];
      cells.push_back(maset::is_color(s)
                          ? static_cast<Sym>(colors[static_cast<std::size_t>(s)])
                          : s);
    }
  }
  return Pattern(p.game(), p.pegs(), p.deficit(), std::move(cells));
}

inline Question permute_question(const Question& question,
                                 const std::vector<int>& cols,
                                 const std::vector<int>& colors) {
  Question out;
  for (std::size_t j = 0; j < question.pegs.size(); ++j) {
    Sym s = question.pegs[static_cast<std::size_t>(cols[j])];
    out.pegs.push_back(maset::is_color(s)
                           ? static_cast<Sym>(colors[static_cast<std::size_t>(s)])
                           : s);
  }
  return out;
}

inline std::vector<int> random_perm(int n, std::mt19937& rng) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

// Sorted multiset view of a clause table under a fixed relabeling; the
// comparison form used by the brute-force isomorphism check.
inline std::multiset<std::vector<Sym>> table_view(const Pattern& p,
                                                  const std::vector<int>& cols,
                                                  const std::vector<int>& colors) {
  std::multiset<std::vector<Sym>> rows;
  for (int i = 0; i < p.clause_count(); ++i) {
    std::vector<Sym> row;
    for (int j = 0; j < p.pegs(); ++j) {
      Sym s = p.clause(i)[static_cast<std::size_t>(cols[static_cast<std::size_t>(j)])];
      row.push_back(maset::is_color(s)
                        ? static_cast<Sym>(colors[static_cast<std::size_t>(s)])
                        : s);
    }
    rows.insert(std::move(row));
  }
  return rows;
}

// Exhaustive isomorphism test for pattern tables with a pinned question
// row, over all column permutations and all permutations of the explicit
// colors of the combined tables.  Tiny inputs only.
inline bool brute_isomorphic_with_question(const Pattern& a, const Question& qa,
                                           const Pattern& b,
                                           const Question& qb) {
  if (a.clause_count() != b.clause_count() || a.pegs() != b.pegs())
    return false;
  int domain = 0;
  for (Sym s : a.cells()) if (maset::is_color(s)) domain = std::max(domain, s + 1);
  for (Sym s : b.cells()) if (maset::is_color(s)) domain = std::max(domain, s + 1);
  for (Sym s : qa.pegs) if (maset::is_color(s)) domain = std::max(domain, s + 1);
  for (Sym s : qb.pegs) if (maset::is_color(s)) domain = std::max(domain, s + 1);

  std::vector<int> cols(static_cast<std::size_t>(a.pegs()));
  std::iota(cols.begin(), cols.end(), 0);
  std::vector<int> id(static_cast<std::size_t>(domain));
  std::iota(id.begin(), id.end(), 0);
  auto target_rows = table_view(b, cols, id);
  Question target_q = qb;

  do {
    std::vector<int> colors = id;
    do {
      if (table_view(a, cols, colors) == target_rows &&
          permute_question(qa, cols, colors) == target_q)
        return true;
    } while (std::next_permutation(colors.begin(), colors.end()));
  } while (std::next_permutation(cols.begin(), cols.end()));
  return false;
}

// Exhaustive isomorphism test for concrete masets over all peg-position
// permutations and all permutations of the full color range.
inline bool brute_isomorphic_concrete(const maset::Maset& a,
                                      const maset::Maset& b) {
  if (a.size() != b.size() || a.pegs() != b.pegs() || a.colors() != b.colors())
    return false;
  std::vector<int> cols(static_cast<std::size_t>(a.pegs()));
  std::iota(cols.begin(), cols.end(), 0);
  std::vector<int> id(static_cast<std::size_t>(a.colors()));
  std::iota(id.begin(), id.end(), 0);

  auto view = [](const maset::Maset& m, const std::vector<int>& c,
                 const std::vector<int>& colors) {
    std::multiset<std::vector<Sym>> rows;
    for (int i = 0; i < m.size(); ++i) {
      std::vector<Sym> row;
      for (int j = 0; j < m.pegs(); ++j)
        row.push_back(static_cast<Sym>(
            colors[m.secret(i)[static_cast<std::size_t>(c[static_cast<std::size_t>(j)])]]));
      rows.insert(std::move(row));
    }
    return rows;
  };
  auto target = view(b, cols, id);
  do {
    std::vector<int> colors = id;
    do {
      if (view(a, cols, colors) == target) return true;
    } while (std::next_permutation(colors.begin(), colors.end()));
  } while (std::next_permutation(cols.begin(), cols.end()));
  return false;
}

// Exhaustive isomorphism test over all column and color permutations.
// Quadratic and slow; only for tiny fixtures.
inline bool brute_isomorphic(const Pattern& a, const Pattern& b) {
  if (a.clause_count() != b.clause_count() || a.pegs() != b.pegs())
    return false;
  int ua = a.explicit_color_count();
  int ub = b.explicit_color_count();
  if (ua != ub) return false;

  std::vector<int> cols(static_cast<std::size_t>(a.pegs()));
  std::iota(cols.begin(), cols.end(), 0);
  std::vector<int> id_cols = cols;
  std::vector<int> colors(static_cast<std::size_t>(ua));
  std::iota(colors.begin(), colors.end(), 0);
  std::vector<int> id_colors = colors;

  auto target = table_view(b, id_cols, id_colors);
  do {
    std::vector<int> perm = colors;
    do {
      if (table_view(a, cols, perm) == target) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
  } while (std::next_permutation(cols.begin(), cols.end()));
  return false;
}

}  // namespace testutil
