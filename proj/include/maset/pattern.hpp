// pattern.hpp -- maset patterns, concrete masets, questions

#pragma once

#include <span>
#include <vector>

#include "maset/polynomial.hpp"
#include "maset/symbols.hpp"

namespace maset {

class Maset;

/// Symbolic game state: an alternative of clauses over explicit colors and
/// stars.  A clause is a tuple of `pegs` symbols and represents the set of
/// secrets obtained by letting each star range over the implicit colors.
/// The deficit t fixes the star meaning: every star stands for the n - t
/// colors outside {0..t-1}, so all stars of one pattern share it.
///
/// Invariants enforced on construction:
///  - every explicit color in a clause is < deficit;
///  - stars and explicit colors are the only clause symbols;
///  - in the AB variant, explicit colors within a clause are distinct.
class Pattern {
 public:
  /// `cells` is the row-major m x pegs symbol table.
  Pattern(Game game, int pegs, int deficit, std::vector<Sym> cells);

  static Pattern empty(Game game, int pegs, int deficit);
  /// The all-stars pattern (every secret possible), deficit 0.
  static Pattern full(Game game, int pegs);

  Game game() const { return game_; }
  int pegs() const { return pegs_; }
  int deficit() const { return deficit_; }
  int clause_count() const { return static_cast<int>(cells_.size()) / pegs_; }
  bool is_empty() const { return cells_.empty(); }
  bool has_star() const;

  std::span<const Sym> clause(int i) const {
    return {cells_.data() + static_cast<std::size_t>(i) * pegs_,
            static_cast<std::size_t>(pegs_)};
  }
  const std::vector<Sym>& cells() const { return cells_; }

  /// Number of distinct explicit colors (the u of the model).
  int explicit_color_count() const;
  /// True when the explicit color set is exactly {0..u-1}.
  bool is_normalized() const;
  /// Normalized and deficit == u: the storage form of queue patterns.
  bool is_tight() const { return is_normalized() && deficit_ == explicit_color_count(); }

  bool operator==(const Pattern&) const = default;

 private:
  Game game_;
  int pegs_;
  int deficit_;
  std::vector<Sym> cells_;
};

/// Question: `pegs` symbols, each an explicit color or the additional
/// color.  Never all-additional; in the AB variant all pegs are distinct.
struct Question {
  std::vector<Sym> pegs;

  bool contains_additional() const;
  bool operator==(const Question&) const = default;
  bool operator<(const Question& other) const { return pegs < other.pegs; }
};

/// Renames explicit colors to {0..u-1} when the color set is not already
/// consecutive from 0; colors are numbered by first occurrence in row-major
/// scan order.  A pattern whose color set is already {0..u-1} is returned
/// unchanged, matching the convention that listing stages print.
Pattern normalize(const Pattern& pattern);

struct Tightened {
  Pattern pattern;  // same clauses, deficit lowered to u
  int shift;        // r = t - u
};

/// Drops the dead colors {u..t-1} from the star block of a normalized
/// pattern.  Solving the result with n - r colors is the same game as
/// solving the input with n colors.
Tightened tighten(const Pattern& pattern);

/// Replaces each star of a normalized pattern by the explicit colors
/// {u..v-1} plus the residual star (cross product over the star positions
/// of a clause).  The new deficit is t - u + v.  AB drops assignments that
/// would repeat a color within a clause.  Requires v > u.
Pattern extend(const Pattern& pattern, int v);

/// Secret count as a polynomial in n.  A clause with k stars contributes
/// (n-t)^k for MM and the falling factorial (n-t)(n-t-1)...(n-t-k+1) for
/// AB; star-free clauses contribute 1.
Polynomial count_secrets(const Pattern& pattern);

/// Explicit secret set of `pattern` at a concrete color count, with stars
/// ranging over {t..n-1}.  Requires n >= t.  Throws std::logic_error when
/// the clause images overlap (a violation of the pattern invariants).
/// The result allows additional-color questions.
Maset instantiate(const Pattern& pattern, int colors);

/// An explicit finite set of secrets at a fixed color count: the oracle's
/// notion of a game state.  Rows are kept sorted and deduplicated.
class Maset {
 public:
  Maset(Game game, int pegs, int colors, bool additional_allowed,
        std::vector<Sym> cells);

  /// Every secret of the full game with `colors` colors.
  static Maset full(Game game, int pegs, int colors, bool additional_allowed);

  Game game() const { return game_; }
  int pegs() const { return pegs_; }
  int colors() const { return colors_; }
  bool additional_allowed() const { return additional_allowed_; }
  int size() const { return static_cast<int>(cells_.size()) / pegs_; }
  bool is_empty() const { return cells_.empty(); }

  std::span<const Sym> secret(int i) const {
    return {cells_.data() + static_cast<std::size_t>(i) * pegs_,
            static_cast<std::size_t>(pegs_)};
  }
  const std::vector<Sym>& cells() const { return cells_; }
  bool contains(std::span<const Sym> secret) const;

  bool operator==(const Maset&) const = default;

 private:
  Game game_;
  int pegs_;
  int colors_;
  bool additional_allowed_;
  std::vector<Sym> cells_;
};

}  // namespace maset
