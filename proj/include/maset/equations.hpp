// equations.hpp -- recurrence generation and numeric evaluation

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "maset/pattern.hpp"
#include "maset/polynomial.hpp"
#include "maset/solver.hpp"

namespace maset {

/// One reference A_{p,l}(n - r) on the right-hand side of an equation.
struct Term {
  std::int32_t pattern = 0;  ///< queue index l of the isomorphic pattern
  std::int32_t shift = 0;    ///< r = t - u of the child that produced it
  bool operator==(const Term&) const = default;
};

/// One recurrence A_{p,i}(n) = sum of terms + w(n), produced by asking
/// question number `question_no` in queue pattern i.  Star-free children
/// contribute their external path lengths to w, which also carries the
/// secret count of pattern i.  The equation is meaningful for
/// n >= valid_from (the extension target used by the split).
struct Equation {
  std::int32_t pattern = 0;
  std::int32_t question_no = 0;  ///< 1-based, following question order
  Question question;
  std::vector<Term> terms;
  Polynomial w;
  std::int32_t valid_from = 0;
  bool operator==(const Equation&) const = default;
};

/// Output of the breadth-first closure: the queue of tight normalized
/// patterns (index 0 is the all-stars pattern) and every equation, grouped
/// by pattern in discovery order.
struct Derivation {
  Game game = Game::mm;
  int pegs = 0;
  std::vector<Pattern> queue;
  std::vector<Equation> equations;

  bool operator==(const Derivation&) const = default;
};

/// Equation tag in the form "(MM.2.0.1)".
std::string equation_id(Game game, int pegs, int pattern, int question_no);

/// Composes the equation for queue pattern i under question `q`, given the
/// split buckets.  `queue_index` resolves a canonical key to the queue slot
/// of the isomorphic pattern and must already know every star child.
Equation build_equation(const Derivation& derivation, int pattern_index,
                        int question_no, const Question& q,
                        const std::vector<Pattern>& buckets, int valid_from,
                        const std::vector<CanonicalKey>& queue_keys,
                        StarFreeSolver& star_free);

/// Runs the full closure for a game: seeds the queue with the all-stars
/// pattern, then for each pattern generates its questions, splits, enqueues
/// unseen star children (tightened and normalized), and emits one equation
/// per question.  Deterministic.
Derivation derive(Game game, int pegs);

/// Sentinel for table cells that no equation can produce.
inline constexpr std::int64_t undefined_value =
    std::numeric_limits<std::int64_t>::max();

/// Base values A_i(n) for n in [0, base_max], computed by the oracle on the
/// instantiated queue patterns (0 when the instantiation is empty or the
/// color count is below the deficit).
std::vector<std::vector<std::int64_t>> oracle_base(const Derivation& derivation,
                                                   int base_max, Oracle& oracle);

/// Largest shift r appearing in the derivation; base values must cover it.
int max_shift(const Derivation& derivation);

/// Least-fixpoint evaluation of the recurrence system.  `base[i][n]` seeds
/// n in [0, base.size()-1]; for each larger n the values A_i(n) are relaxed
/// from +infinity, reading already-fixed smaller-n cells for shifted terms.
/// Equations below their valid_from or referencing undefined cells are
/// skipped.  Returns values[i][n] for n in [0, n_max]; cells that never
/// acquire a value hold undefined_value.  Throws if a round of relaxations
/// exceeds the queue size without converging.
std::vector<std::vector<std::int64_t>> eval_system(
    const Derivation& derivation, int n_max,
    const std::vector<std::vector<std::int64_t>>& base);

struct FixpointCell {
  int pattern = 0;
  int colors = 0;
  std::int64_t oracle_value = 0;
  std::int64_t equations_min = 0;
  int argmin_question_no = 0;  ///< 1-based j of the first optimal equation
  bool ok = false;
};

struct FixpointReport {
  bool ok = false;
  std::vector<FixpointCell> cells;
};

/// Checks, for every queue pattern and every n in [n_lo, n_hi], that the
/// minimum of the equations evaluated on oracle values equals the oracle
/// value of the instantiated pattern, and reports the optimal question.
FixpointReport verify_fixpoint(const Derivation& derivation, int n_lo, int n_hi,
                               Oracle& oracle);

}  // namespace maset
