#include "maset/pattern.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace maset {

namespace {

void sort_rows(std::vector<Sym>& cells, int width) {
  if (cells.empty()) return;
  const std::size_t w = static_cast<std::size_t>(width);
  std::vector<std::vector<Sym>> rows(cells.size() / w);
  for (std::size_t i = 0; i < rows.size(); ++i)
    rows[i].assign(cells.begin() + static_cast<std::ptrdiff_t>(i * w),
                   cells.begin() + static_cast<std::ptrdiff_t>((i + 1) * w));
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  cells.clear();
  for (const auto& r : rows) cells.insert(cells.end(), r.begin(), r.end());
}

}  // namespace

Pattern::Pattern(Game game, int pegs, int deficit, std::vector<Sym> cells)
    : game_(game), pegs_(pegs), deficit_(deficit), cells_(std::move(cells)) {
  if (pegs_ < 1) throw std::invalid_argument("pattern needs at least one peg");
  if (deficit_ < 0) throw std::invalid_argument("negative deficit");
  if (cells_.size() % static_cast<std::size_t>(pegs_) != 0)
    throw std::invalid_argument("clause table size not a multiple of pegs");
  for (int i = 0; i < clause_count(); ++i) {
    auto cl = clause(i);
    for (int j = 0; j < pegs_; ++j) {
      Sym s = cl[j];
      if (s == additional_sym)
        throw std::invalid_argument("additional color cannot occur in a clause");
      if (s != star_sym && static_cast<int>(s) >= deficit_)
        throw std::invalid_argument("explicit clause color must be < deficit");
      if (game_ == Game::ab && is_color(s)) {
        for (int k = j + 1; k < pegs_; ++k)
          if (cl[k] == s)
            throw std::invalid_argument("AB clause repeats an explicit color");
      }
    }
  }
}

Pattern Pattern::empty(Game game, int pegs, int deficit) {
  return Pattern(game, pegs, deficit, {});
}

Pattern Pattern::full(Game game, int pegs) {
  return Pattern(game, pegs, 0,
                 std::vector<Sym>(static_cast<std::size_t>(pegs), star_sym));
}

bool Pattern::has_star() const {
  return std::find(cells_.begin(), cells_.end(), star_sym) != cells_.end();
}

int Pattern::explicit_color_count() const {
  std::array<bool, 256> seen{};
  int count = 0;
  for (Sym s : cells_)
    if (is_color(s) && !seen[s]) {
      seen[s] = true;
      ++count;
    }
  return count;
}

bool Pattern::is_normalized() const {
  std::array<bool, 256> seen{};
  int count = 0;
  Sym max_seen = 0;
  bool any = false;
  for (Sym s : cells_)
    if (is_color(s)) {
      if (!seen[s]) {
        seen[s] = true;
        ++count;
      }
      max_seen = std::max(max_seen, s);
      any = true;
    }
  return !any || count == static_cast<int>(max_seen) + 1;
}

bool Question::contains_additional() const {
  return std::find(pegs.begin(), pegs.end(), additional_sym) != pegs.end();
}

Pattern normalize(const Pattern& pattern) {
  if (pattern.is_normalized()) return pattern;
  std::array<Sym, 256> rename{};
  std::array<bool, 256> assigned{};
  Sym next = 0;
  std::vector<Sym> cells = pattern.cells();
  for (Sym& s : cells)
    if (is_color(s)) {
      if (!assigned[s]) {
        assigned[s] = true;
        rename[s] = next++;
      }
      s = rename[s];
    }
  return Pattern(pattern.game(), pattern.pegs(), pattern.deficit(),
                 std::move(cells));
}

Tightened tighten(const Pattern& pattern) {
  if (!pattern.is_normalized())
    throw std::invalid_argument("tighten expects a normalized pattern");
  int u = pattern.explicit_color_count();
  int r = pattern.deficit() - u;
  if (r < 0) throw std::logic_error("pattern deficit below color count");
  return {Pattern(pattern.game(), pattern.pegs(), u, pattern.cells()), r};
}

Pattern extend(const Pattern& pattern, int v) {
  if (!pattern.is_normalized())
    throw std::invalid_argument("extend expects a normalized pattern");
  int u = pattern.explicit_color_count();
  if (v <= u) throw std::invalid_argument("extension target must exceed u");
  int t = pattern.deficit();
  int new_deficit = t - u + v;
  const int p = pattern.pegs();

  // Cross product of {u..v-1, star} over the star positions of each clause.
  std::vector<Sym> out;
  std::vector<int> star_pos;
  std::vector<int> choice;  // index into the v-u+1 options, star last
  const int options = v - u + 1;
  for (int i = 0; i < pattern.clause_count(); ++i) {
    auto cl = pattern.clause(i);
    star_pos.clear();
    for (int j = 0; j < p; ++j)
      if (cl[j] == star_sym) star_pos.push_back(j);
    if (star_pos.empty()) {
      out.insert(out.end(), cl.begin(), cl.end());
      continue;
    }
    choice.assign(star_pos.size(), 0);
    while (true) {
      std::vector<Sym> row(cl.begin(), cl.end());
      bool ok = true;
      for (std::size_t k = 0; k < star_pos.size(); ++k) {
        Sym s = choice[k] == options - 1 ? star_sym
                                         : static_cast<Sym>(u + choice[k]);
        row[static_cast<std::size_t>(star_pos[k])] = s;
      }
      if (pattern.game() == Game::ab) {
        for (std::size_t a = 0; a + 1 < star_pos.size() && ok; ++a)
          for (std::size_t b = a + 1; b < star_pos.size(); ++b) {
            Sym sa = row[static_cast<std::size_t>(star_pos[a])];
            if (sa != star_sym && sa == row[static_cast<std::size_t>(star_pos[b])]) {
              ok = false;
              break;
            }
          }
      }
      if (ok) out.insert(out.end(), row.begin(), row.end());
      int k = static_cast<int>(choice.size()) - 1;
      while (k >= 0 && ++choice[static_cast<std::size_t>(k)] == options)
        choice[static_cast<std::size_t>(k--)] = 0;
      if (k < 0) break;
    }
  }
  return Pattern(pattern.game(), p, new_deficit, std::move(out));
}

Polynomial count_secrets(const Pattern& pattern) {
  Polynomial total;
  const std::int64_t t = pattern.deficit();
  for (int i = 0; i < pattern.clause_count(); ++i) {
    auto cl = pattern.clause(i);
    int stars = static_cast<int>(std::count(cl.begin(), cl.end(), star_sym));
    Polynomial term = Polynomial::constant(1);
    for (int k = 0; k < stars; ++k) {
      std::int64_t offset = pattern.game() == Game::ab ? t + k : t;
      term = term * Polynomial::x_minus(offset);
    }
    total += term;
  }
  return total;
}

Maset instantiate(const Pattern& pattern, int colors) {
  if (colors < pattern.deficit())
    throw std::invalid_argument("cannot instantiate below the deficit");
  const int p = pattern.pegs();
  const int t = pattern.deficit();
  std::vector<Sym> cells;
  std::vector<int> star_pos;
  std::vector<int> choice;
  for (int i = 0; i < pattern.clause_count(); ++i) {
    auto cl = pattern.clause(i);
    star_pos.clear();
    for (int j = 0; j < p; ++j)
      if (cl[j] == star_sym) star_pos.push_back(j);
    const int range = colors - t;
    if (star_pos.empty()) {
      cells.insert(cells.end(), cl.begin(), cl.end());
      continue;
    }
    if (range <= 0) continue;  // stars have no colors to take
    choice.assign(star_pos.size(), 0);
    while (true) {
      bool ok = true;
      if (pattern.game() == Game::ab) {
        for (std::size_t a = 0; a + 1 < choice.size() && ok; ++a)
          for (std::size_t b = a + 1; b < choice.size(); ++b)
            if (choice[a] == choice[b]) {
              ok = false;
              break;
            }
      }
      if (ok) {
        std::vector<Sym> row(cl.begin(), cl.end());
        for (std::size_t k = 0; k < star_pos.size(); ++k)
          row[static_cast<std::size_t>(star_pos[k])] =
              static_cast<Sym>(t + choice[k]);
        cells.insert(cells.end(), row.begin(), row.end());
      }
      int k = static_cast<int>(choice.size()) - 1;
      while (k >= 0 && ++choice[static_cast<std::size_t>(k)] == range)
        choice[static_cast<std::size_t>(k--)] = 0;
      if (k < 0) break;
    }
  }
  Maset result(pattern.game(), p, colors, true, std::move(cells));
  if (result.size() != count_secrets(pattern)(colors))
    throw std::logic_error("clause images overlap: pattern is not a maset");
  return result;
}

Maset::Maset(Game game, int pegs, int colors, bool additional_allowed,
             std::vector<Sym> cells)
    : game_(game),
      pegs_(pegs),
      colors_(colors),
      additional_allowed_(additional_allowed),
      cells_(std::move(cells)) {
  if (pegs_ < 1) throw std::invalid_argument("maset needs at least one peg");
  if (colors_ < 0 || colors_ > max_color_id)
    throw std::invalid_argument("color count out of range");
  if (cells_.size() % static_cast<std::size_t>(pegs_) != 0)
    throw std::invalid_argument("secret table size not a multiple of pegs");
  for (int i = 0; i < size(); ++i) {
    auto s = secret(i);
    for (int j = 0; j < pegs_; ++j) {
      if (!is_color(s[j]) || static_cast<int>(s[j]) >= colors_)
        throw std::invalid_argument("secret entry out of color range");
      if (game_ == Game::ab)
        for (int k = j + 1; k < pegs_; ++k)
          if (s[k] == s[j])
            throw std::invalid_argument("AB secret repeats a color");
    }
  }
  sort_rows(cells_, pegs_);
}

Maset Maset::full(Game game, int pegs, int colors, bool additional_allowed) {
  std::vector<Sym> cells;
  std::vector<int> tuple(static_cast<std::size_t>(pegs), 0);
  if (colors > 0) {
    while (true) {
      bool ok = true;
      if (game == Game::ab) {
        for (std::size_t a = 0; a + 1 < tuple.size() && ok; ++a)
          for (std::size_t b = a + 1; b < tuple.size(); ++b)
            if (tuple[a] == tuple[b]) {
              ok = false;
              break;
            }
      }
      if (ok)
        for (int x : tuple) cells.push_back(static_cast<Sym>(x));
      std::size_t k = 0;
      while (k < tuple.size() && ++tuple[k] == colors) tuple[k++] = 0;
      if (k == tuple.size()) break;
    }
  }
  return Maset(game, pegs, colors, additional_allowed, std::move(cells));
}

bool Maset::contains(std::span<const Sym> secret) const {
  for (int i = 0; i < size(); ++i) {
    auto s = this->secret(i);
    if (std::equal(s.begin(), s.end(), secret.begin(), secret.end()))
      return true;
  }
  return false;
}

}  // namespace maset
