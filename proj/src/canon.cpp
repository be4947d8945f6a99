#include "maset/canon.hpp"

#include <algorithm>
#include <array>
#include <cstring>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace maset {

namespace {

constexpr Sym unassigned = 0xFD;
constexpr int max_cols = 8;

using Row = std::array<Sym, max_cols>;

// Lexicographically minimal relabeled table over all column permutations,
// all orders of the unpinned rows, and all injective color relabelings.
// Labels are assigned in first-occurrence order while rows are placed; the
// minimal table always has that form, so nothing is lost.  Star and
// additional color are fixed points that order after every label.
class CanonSearch {
 public:
  CanonSearch(int rows, int cols, const Sym* cells, const Sym* pinned)
      : m_(rows), p_(cols), cells_(cells), pinned_(pinned) {
    if (p_ > max_cols) throw std::invalid_argument("too many pegs");
  }

  std::vector<Sym> run() {
    const int total = (m_ + (pinned_ ? 1 : 0)) * p_;
    out_.assign(static_cast<std::size_t>(total), 0);
    best_.clear();
    used_.assign(static_cast<std::size_t>(m_), false);
    std::array<int, max_cols> colperm{};
    std::iota(colperm.begin(), colperm.begin() + p_, 0);
    do {
      colperm_ = colperm;
      label_.fill(unassigned);
      next_label_ = 0;
      place(0, false);
    } while (std::next_permutation(colperm.begin(), colperm.begin() + p_));
    return best_;
  }

 private:
  Sym cell(int r, int j) const { return cells_[r * p_ + colperm_[j]]; }

  void fetch_raw(int r, Row& raw) const {
    for (int j = 0; j < p_; ++j) raw[j] = cell(r, j);
  }

  // Relabels a raw row with the current label map; colors met for the first
  // time take the next free labels in order of appearance.  The virtual
  // assignments are reported so the caller can commit them.
  void relabel(const Sym* raw, Row& out, Row& fresh, int& fresh_count) const {
    fresh_count = 0;
    for (int j = 0; j < p_; ++j) {
      Sym s = raw[j];
      if (!is_color(s)) {
        out[j] = s;
        continue;
      }
      Sym lab = label_[s];
      if (lab == unassigned) {
        int k = 0;
        while (k < fresh_count && fresh[k] != s) ++k;
        if (k == fresh_count) fresh[fresh_count++] = s;
        lab = static_cast<Sym>(next_label_ + k);
      }
      out[j] = lab;
    }
  }

  int compare(const Row& a, const Row& b) const {
    return std::memcmp(a.data(), b.data(), static_cast<std::size_t>(p_));
  }

  // improving: the rows placed so far already compare strictly below best_.
  void place(int depth, bool improving) {
    if (depth == m_) {
      finish();
      return;
    }
    Row raw, row, fresh, minrow;
    int fresh_count = 0;
    std::vector<int> cand;
    for (int r = 0; r < m_; ++r) {
      if (used_[static_cast<std::size_t>(r)]) continue;
      fetch_raw(r, raw);
      relabel(raw.data(), row, fresh, fresh_count);
      if (cand.empty() || compare(row, minrow) < 0) {
        minrow = row;
        cand.assign(1, r);
      } else if (compare(row, minrow) == 0) {
        cand.push_back(r);
      }
    }
    if (!improving && !best_.empty()) {
      int cmp = std::memcmp(minrow.data(), best_.data() + depth * p_,
                            static_cast<std::size_t>(p_));
      if (cmp > 0) return;
      if (cmp < 0) improving = true;
    }
    Row prev_raw;
    for (std::size_t ci = 0; ci < cand.size(); ++ci) {
      int r = cand[ci];
      fetch_raw(r, raw);
      bool duplicate = false;
      for (std::size_t cj = 0; cj < ci && !duplicate; ++cj) {
        fetch_raw(cand[cj], prev_raw);
        duplicate = compare(raw, prev_raw) == 0;
      }
      if (duplicate) continue;
      relabel(raw.data(), row, fresh, fresh_count);
      for (int k = 0; k < fresh_count; ++k)
        label_[fresh[k]] = static_cast<Sym>(next_label_ + k);
      next_label_ = static_cast<Sym>(next_label_ + fresh_count);
      used_[static_cast<std::size_t>(r)] = true;
      std::memcpy(out_.data() + depth * p_, row.data(),
                  static_cast<std::size_t>(p_));
      place(depth + 1, improving);
      used_[static_cast<std::size_t>(r)] = false;
      next_label_ = static_cast<Sym>(next_label_ - fresh_count);
      for (int k = 0; k < fresh_count; ++k) label_[fresh[k]] = unassigned;
    }
  }

  void finish() {
    if (pinned_) {
      Row raw, row, fresh;
      int fresh_count = 0;
      for (int j = 0; j < p_; ++j) raw[j] = pinned_[colperm_[j]];
      relabel(raw.data(), row, fresh, fresh_count);
      std::memcpy(out_.data() + m_ * p_, row.data(),
                  static_cast<std::size_t>(p_));
    }
    if (best_.empty() || out_ < best_) best_ = out_;
  }

  int m_;
  int p_;
  const Sym* cells_;
  const Sym* pinned_;
  std::array<int, max_cols> colperm_{};
  std::array<Sym, 256> label_{};
  Sym next_label_ = 0;
  std::vector<bool> used_;
  std::vector<Sym> out_;
  std::vector<Sym> best_;
};

std::vector<Sym> canonical_cells(int rows, int cols, const Sym* cells,
                                 const Sym* pinned) {
  return CanonSearch(rows, cols, cells, pinned).run();
}

void append_u16(CanonicalKey& key, int v) {
  key.push_back(static_cast<char>(v & 0xFF));
  key.push_back(static_cast<char>((v >> 8) & 0xFF));
}

CanonicalKey assemble(char tag, Game game, int pegs, int rows,
                      const std::vector<Sym>& cells, int colors = -1,
                      int additional = -1) {
  CanonicalKey key;
  key.reserve(cells.size() + 8);
  key.push_back(tag);
  key.push_back(static_cast<char>(game));
  key.push_back(static_cast<char>(pegs));
  append_u16(key, rows);
  if (colors >= 0) {
    key.push_back(static_cast<char>(colors));
    key.push_back(static_cast<char>(additional));
  }
  key.append(reinterpret_cast<const char*>(cells.data()), cells.size());
  return key;
}

void check_question(int pegs, const Question& q) {
  if (static_cast<int>(q.pegs.size()) != pegs)
    throw std::invalid_argument("question peg count mismatch");
  for (Sym s : q.pegs)
    if (s != additional_sym && !is_color(s))
      throw std::invalid_argument("question may not contain a star");
}

}  // namespace

CanonicalKey canonical_pattern(const Pattern& pattern) {
  if (!pattern.is_normalized())
    throw std::invalid_argument("canonical_pattern expects a normalized pattern");
  auto cells = canonical_cells(pattern.clause_count(), pattern.pegs(),
                               pattern.cells().data(), nullptr);
  return assemble('P', pattern.game(), pattern.pegs(), pattern.clause_count(),
                  cells);
}

CanonicalKey canonical_with_question(const Pattern& pattern, const Question& q) {
  if (!pattern.is_normalized())
    throw std::invalid_argument(
        "canonical_with_question expects a normalized pattern");
  check_question(pattern.pegs(), q);
  auto cells = canonical_cells(pattern.clause_count(), pattern.pegs(),
                               pattern.cells().data(), q.pegs.data());
  return assemble('Q', pattern.game(), pattern.pegs(), pattern.clause_count(),
                  cells);
}

CanonicalKey canonical_concrete(const Maset& maset) {
  auto cells = canonical_cells(maset.size(), maset.pegs(),
                               maset.cells().data(), nullptr);
  return assemble('C', maset.game(), maset.pegs(), maset.size(), cells,
                  maset.colors(), maset.additional_allowed() ? 1 : 0);
}

CanonicalKey canonical_concrete_with_question(const Maset& maset,
                                              const Question& q) {
  check_question(maset.pegs(), q);
  auto cells = canonical_cells(maset.size(), maset.pegs(),
                               maset.cells().data(), q.pegs.data());
  return assemble('D', maset.game(), maset.pegs(), maset.size(), cells,
                  maset.colors(), maset.additional_allowed() ? 1 : 0);
}

}  // namespace maset
