#include "maset/equations.hpp"

#include <limits>
#include <stdexcept>
#include <unordered_map>

#include "maset/answers.hpp"
#include "maset/canon.hpp"
#include "maset/questions.hpp"
#include "maset/split.hpp"

namespace maset {

std::string equation_id(Game game, int pegs, int pattern, int question_no) {
  return "(" + std::string(game_tag(game)) + "." + std::to_string(pegs) + "." +
         std::to_string(pattern) + "." + std::to_string(question_no) + ")";
}

namespace {

int find_queue_index(const std::vector<CanonicalKey>& queue_keys,
                     const CanonicalKey& key) {
  for (std::size_t l = 0; l < queue_keys.size(); ++l)
    if (queue_keys[l] == key) return static_cast<int>(l);
  return -1;
}

}  // namespace

Equation build_equation(const Derivation& derivation, int pattern_index,
                        int question_no, const Question& q,
                        const std::vector<Pattern>& buckets, int valid_from,
                        const std::vector<CanonicalKey>& queue_keys,
                        StarFreeSolver& star_free) {
  Equation eq;
  eq.pattern = pattern_index;
  eq.question_no = question_no;
  eq.question = q;
  eq.valid_from = valid_from;
  eq.w = count_secrets(
      derivation.queue[static_cast<std::size_t>(pattern_index)]);

  const int last = static_cast<int>(buckets.size()) - 1;
  for (int k = 0; k <= last; ++k) {
    const Pattern& child = buckets[static_cast<std::size_t>(k)];
    if (child.has_star()) {
      Pattern normalized = normalize(child);
      int l = find_queue_index(queue_keys, canonical_pattern(normalized));
      if (l < 0)
        throw std::logic_error("star child missing from the pattern queue");
      eq.terms.push_back(
          {l, normalized.deficit() - normalized.explicit_color_count()});
    } else {
      eq.w += star_free.solve(child, k == last);
    }
  }
  return eq;
}

Derivation derive(Game game, int pegs) {
  if (pegs < 1) throw std::invalid_argument("pegs must be positive");
  Derivation out;
  out.game = game;
  out.pegs = pegs;
  out.queue.push_back(Pattern::full(game, pegs));

  std::vector<CanonicalKey> queue_keys{canonical_pattern(out.queue.front())};
  std::unordered_map<CanonicalKey, int> index{{queue_keys.front(), 0}};
  StarFreeSolver star_free;

  for (int i = 0; i < static_cast<int>(out.queue.size()); ++i) {
    auto questions = gen_questions(out.queue[static_cast<std::size_t>(i)]);
    for (int j = 0; j < static_cast<int>(questions.size()); ++j) {
      const Question& q = questions[static_cast<std::size_t>(j)];
      auto split = split_pattern(out.queue[static_cast<std::size_t>(i)], q);
      for (const Pattern& child : split.buckets) {
        if (!child.has_star()) continue;
        Pattern normalized = normalize(child);
        CanonicalKey key = canonical_pattern(normalized);
        if (index.emplace(key, static_cast<int>(out.queue.size())).second) {
          out.queue.push_back(tighten(normalized).pattern);
          queue_keys.push_back(std::move(key));
        }
      }
      out.equations.push_back(build_equation(out, i, j + 1, q, split.buckets,
                                             split.extension_target,
                                             queue_keys, star_free));
    }
  }
  return out;
}

std::vector<std::vector<std::int64_t>> oracle_base(const Derivation& derivation,
                                                   int base_max,
                                                   Oracle& oracle) {
  std::vector<std::vector<std::int64_t>> base(derivation.queue.size());
  for (std::size_t i = 0; i < derivation.queue.size(); ++i) {
    const Pattern& pattern = derivation.queue[i];
    base[i].resize(static_cast<std::size_t>(base_max) + 1, 0);
    for (int n = 0; n <= base_max; ++n)
      base[i][static_cast<std::size_t>(n)] =
          n < pattern.deficit() ? 0 : oracle.solve(instantiate(pattern, n));
  }
  return base;
}

int max_shift(const Derivation& derivation) {
  int shift = 0;
  for (const Equation& eq : derivation.equations)
    for (const Term& term : eq.terms) shift = std::max(shift, term.shift);
  return shift;
}

std::vector<std::vector<std::int64_t>> eval_system(
    const Derivation& derivation, int n_max,
    const std::vector<std::vector<std::int64_t>>& base) {
  const int patterns = static_cast<int>(derivation.queue.size());
  if (static_cast<int>(base.size()) != patterns)
    throw std::invalid_argument("base table size mismatch");
  const int base_max = static_cast<int>(base.front().size()) - 1;
  if (base_max < max_shift(derivation))
    throw std::invalid_argument("base values do not cover the maximum shift");

  std::vector<std::vector<std::int64_t>> values(
      static_cast<std::size_t>(patterns));
  for (int i = 0; i < patterns; ++i) {
    values[static_cast<std::size_t>(i)].assign(
        static_cast<std::size_t>(n_max) + 1, undefined_value);
    for (int n = 0; n <= std::min(base_max, n_max); ++n)
      values[static_cast<std::size_t>(i)][static_cast<std::size_t>(n)] =
          base[static_cast<std::size_t>(i)][static_cast<std::size_t>(n)];
  }

  for (int n = base_max + 1; n <= n_max; ++n) {
    bool changed = true;
    int rounds = 0;
    while (changed) {
      changed = false;
      if (++rounds > patterns + 1)
        throw std::runtime_error(
            "fixpoint iteration did not converge at n = " + std::to_string(n));
      for (const Equation& eq : derivation.equations) {
        if (n < eq.valid_from) continue;
        std::int64_t rhs = eq.w(n);
        bool defined = true;
        for (const Term& term : eq.terms) {
          std::int64_t ref =
              values[static_cast<std::size_t>(term.pattern)]
                    [static_cast<std::size_t>(n - term.shift)];
          if (ref == undefined_value) {
            defined = false;
            break;
          }
          rhs += ref;
        }
        if (!defined) continue;
        auto& cell = values[static_cast<std::size_t>(eq.pattern)]
                           [static_cast<std::size_t>(n)];
        if (rhs < cell) {
          cell = rhs;
          changed = true;
        }
      }
    }
  }
  return values;
}

FixpointReport verify_fixpoint(const Derivation& derivation, int n_lo, int n_hi,
                               Oracle& oracle) {
  const int shift = max_shift(derivation);
  const int lo = std::max(0, n_lo - shift);
  std::vector<std::vector<std::int64_t>> truth(derivation.queue.size());
  for (std::size_t i = 0; i < derivation.queue.size(); ++i) {
    const Pattern& pattern = derivation.queue[i];
    truth[i].assign(static_cast<std::size_t>(n_hi) + 1, 0);
    for (int n = lo; n <= n_hi; ++n)
      truth[i][static_cast<std::size_t>(n)] =
          n < pattern.deficit() ? 0 : oracle.solve(instantiate(pattern, n));
  }

  FixpointReport report;
  report.ok = true;
  for (int i = 0; i < static_cast<int>(derivation.queue.size()); ++i) {
    for (int n = n_lo; n <= n_hi; ++n) {
      FixpointCell cell;
      cell.pattern = i;
      cell.colors = n;
      cell.oracle_value = truth[static_cast<std::size_t>(i)]
                               [static_cast<std::size_t>(n)];
      cell.equations_min = undefined_value;
      for (const Equation& eq : derivation.equations) {
        if (eq.pattern != i || n < eq.valid_from) continue;
        std::int64_t rhs = eq.w(n);
        for (const Term& term : eq.terms)
          rhs += truth[static_cast<std::size_t>(term.pattern)]
                      [static_cast<std::size_t>(n - term.shift)];
        if (rhs < cell.equations_min) {
          cell.equations_min = rhs;
          cell.argmin_question_no = eq.question_no;
        }
      }
      cell.ok = cell.equations_min == cell.oracle_value;
      report.ok = report.ok && cell.ok;
      report.cells.push_back(cell);
    }
  }
  return report;
}

}  // namespace maset
