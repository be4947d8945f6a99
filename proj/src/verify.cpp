#include "maset/verify.hpp"

#include <algorithm>
#include <sstream>

#include "maset/canon.hpp"
#include "maset/equations.hpp"
#include "maset/io.hpp"
#include "maset/solver.hpp"

namespace maset {

namespace {

struct ExpectedEquation {
  const char* question;
  std::vector<std::pair<int, int>> terms;     // (pattern l, shift r)
  std::vector<std::int64_t> w;                // ascending coefficients
};

struct ExpectedDerivation {
  std::vector<const char*> patterns;                    // queue literals
  std::vector<std::vector<ExpectedEquation>> equations; // grouped by pattern
};

// The 6 patterns and 47 equations of the published two-peg Mastermind
// derivation.
ExpectedDerivation paper_mm2() {
  ExpectedDerivation d;
  d.patterns = {
      "(*_n,*_n)",
      "(0,*_{n-1}) | (*_{n-1},0)",
      "(1,*_{n-2}) | (*_{n-2},0)",
      "(0,0) | (0,*_{n-2}) | (1,1) | (*_{n-2},1)",
      "(*_{n-1},0)",
      "(0,0) | (0,*_{n-1})",
  };
  d.equations = {
      {
          {"(0,0)", {{0, 1}, {1, 0}}, {0, 0, 1}},
          {"(0,1)", {{0, 2}, {2, 0}, {3, 0}}, {1, 0, 1}},
          {"(0,a)", {{0, 1}, {4, 0}, {5, 0}}, {0, 0, 1}},
      },
      {
          {"(0,0)", {{1, 0}}, {-2, 2}},
          {"(0,1)", {{4, 1}, {4, 1}}, {-1, 2}},
          {"(0,a)", {{4, 0}, {4, 0}}, {-2, 2}},
          {"(1,1)", {{1, 1}}, {1, 2}},
          {"(1,2)", {{1, 2}}, {4, 2}},
          {"(1,a)", {{1, 1}}, {0, 2}},
      },
      {
          {"(0,0)", {{4, 1}, {4, 1}}, {-4, 2}},
          {"(0,1)", {{2, 0}}, {-4, 2}},
          {"(0,2)", {{4, 2}, {4, 2}}, {-2, 2}},
          {"(0,a)", {{4, 1}, {4, 1}}, {-4, 2}},
          {"(1,0)", {{2, 0}}, {-4, 2}},
          {"(1,2)", {{4, 2}, {4, 2}}, {-3, 2}},
          {"(1,a)", {{4, 1}, {4, 1}}, {-4, 2}},
          {"(2,2)", {{2, 1}}, {-1, 2}},
          {"(2,3)", {{2, 2}}, {2, 2}},
          {"(2,a)", {{2, 1}}, {-2, 2}},
      },
      {
          {"(0,0)", {{5, 1}, {4, 1}}, {-2, 2}},
          {"(0,1)", {{3, 0}}, {-2, 2}},
          {"(0,2)", {{5, 2}, {5, 2}}, {-1, 2}},
          {"(0,a)", {{5, 1}, {5, 1}}, {-2, 2}},
          {"(1,0)", {{2, 0}}, {1, 2}},
          {"(1,2)", {{5, 2}, {4, 2}}, {2, 2}},
          {"(1,a)", {{5, 1}, {4, 1}}, {-1, 2}},
          {"(2,2)", {{3, 1}}, {1, 2}},
          {"(2,3)", {{3, 2}}, {4, 2}},
          {"(2,a)", {{3, 1}}, {0, 2}},
      },
      {
          {"(0,0)", {{4, 0}}, {-1, 1}},
          {"(0,1)", {{4, 1}}, {0, 1}},
          {"(0,a)", {{4, 0}}, {-1, 1}},
          {"(1,0)", {{4, 1}}, {-1, 1}},
          {"(1,1)", {{4, 1}}, {0, 1}},
          {"(1,2)", {{4, 2}}, {1, 1}},
          {"(1,a)", {{4, 1}}, {0, 1}},
          {"(a,0)", {{4, 0}}, {-1, 1}},
          {"(a,1)", {{4, 1}}, {0, 1}},
      },
      {
          {"(0,0)", {{4, 0}}, {0, 1}},
          {"(0,1)", {{5, 1}}, {0, 1}},
          {"(0,a)", {{5, 0}}, {0, 1}},
          {"(1,0)", {{4, 1}}, {2, 1}},
          {"(1,1)", {{5, 1}}, {1, 1}},
          {"(1,2)", {{5, 2}}, {2, 1}},
          {"(1,a)", {{5, 1}}, {1, 1}},
          {"(a,0)", {{4, 0}}, {1, 1}},
          {"(a,1)", {{5, 1}}, {1, 1}},
      },
  };
  return d;
}

// The 3 patterns and 17 equations of the published two-peg AB derivation.
ExpectedDerivation paper_ab2() {
  ExpectedDerivation d;
  d.patterns = {
      "(*_n,*_n)",
      "(1,*_{n-2}) | (*_{n-2},0)",
      "(*_{n-1},0)",
  };
  d.equations = {
      {
          {"(0,1)", {{0, 2}, {1, 0}, {1, 0}}, {1, -1, 1}},
          {"(0,a)", {{0, 1}, {2, 0}, {2, 0}}, {0, -1, 1}},
      },
      {
          {"(0,1)", {{1, 0}}, {-4, 2}},
          {"(0,2)", {{2, 2}, {2, 2}}, {-2, 2}},
          {"(0,a)", {{2, 1}, {2, 1}}, {-4, 2}},
          {"(1,0)", {{1, 0}}, {-4, 2}},
          {"(1,2)", {{2, 2}, {2, 2}}, {-3, 2}},
          {"(1,a)", {{2, 1}, {2, 1}}, {-4, 2}},
          {"(2,3)", {{1, 2}}, {2, 2}},
          {"(2,a)", {{1, 1}}, {-2, 2}},
      },
      {
          {"(0,1)", {{2, 1}}, {0, 1}},
          {"(0,a)", {{2, 0}}, {-1, 1}},
          {"(1,0)", {{2, 1}}, {-1, 1}},
          {"(1,2)", {{2, 2}}, {1, 1}},
          {"(1,a)", {{2, 1}}, {0, 1}},
          {"(a,0)", {{2, 0}}, {-1, 1}},
          {"(a,1)", {{2, 1}}, {0, 1}},
      },
  };
  return d;
}

// Published minimal external path lengths for small color counts; -1 marks
// table cells left blank there.
const std::int64_t mm2_values[4][6] = {
    {8, 3, -1, -1, 1, 3},
    {21, 7, 3, 7, 3, 6},
    {45, 13, 7, 13, 6, 9},
    {81, 21, 13, 21, 9, 13},
};
const std::int64_t ab2_values[4][3] = {
    {3, -1, 1},
    {13, 3, 3},
    {30, 7, 6},
    {60, 13, 9},
};

std::string normalized_equation_repr(const std::string& question,
                                     std::vector<std::pair<int, int>> terms,
                                     const std::vector<std::int64_t>& w) {
  std::sort(terms.begin(), terms.end());
  std::ostringstream os;
  os << question << " :";
  for (auto [l, r] : terms) os << " A" << l << "-" << r;
  os << " | w";
  for (auto c : w) os << " " << c;
  return os.str();
}

struct Checker {
  bool ok = true;
  std::ostringstream report;

  void check(bool condition, const std::string& line) {
    ok = ok && condition;
    report << (condition ? "ok   " : "FAIL ") << line << "\n";
  }
  SuiteResult result() && { return {ok, std::move(report).str()}; }
};

bool derivation_matches(Checker& c, const Derivation& d,
                        const ExpectedDerivation& expected) {
  c.check(d.queue.size() == expected.patterns.size(),
          "queue size " + std::to_string(d.queue.size()) + " (expected " +
              std::to_string(expected.patterns.size()) + ")");
  if (d.queue.size() != expected.patterns.size()) return false;
  for (std::size_t i = 0; i < d.queue.size(); ++i) {
    Pattern want = parse_pattern(expected.patterns[i], d.game, d.pegs);
    c.check(canonical_pattern(d.queue[i]) == canonical_pattern(want),
            "pattern " + std::to_string(i) + " isomorphic to " +
                expected.patterns[i]);
  }

  std::size_t expected_total = 0;
  for (const auto& group : expected.equations) expected_total += group.size();
  c.check(d.equations.size() == expected_total,
          "equation count " + std::to_string(d.equations.size()) +
              " (expected " + std::to_string(expected_total) + ")");

  for (std::size_t i = 0; i < expected.equations.size(); ++i) {
    std::vector<std::string> got, want;
    for (const Equation& eq : d.equations) {
      if (eq.pattern != static_cast<int>(i)) continue;
      std::vector<std::pair<int, int>> terms;
      for (const Term& t : eq.terms) terms.emplace_back(t.pattern, t.shift);
      got.push_back(normalized_equation_repr(question_to_string(eq.question),
                                             std::move(terms),
                                             eq.w.coefficients()));
    }
    for (const ExpectedEquation& eq : expected.equations[i])
      want.push_back(normalized_equation_repr(eq.question, eq.terms, eq.w));
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    c.check(got == want, "equations of pattern " + std::to_string(i) +
                             " match the published set (" +
                             std::to_string(want.size()) + ")");
  }
  return true;
}

void check_spot(Checker& c, const Derivation& d, int pattern, int question_no,
                const ExpectedEquation& expected) {
  for (const Equation& eq : d.equations) {
    if (eq.pattern != pattern || eq.question_no != question_no) continue;
    std::vector<std::pair<int, int>> terms;
    for (const Term& t : eq.terms) terms.emplace_back(t.pattern, t.shift);
    bool same = normalized_equation_repr(question_to_string(eq.question),
                                         std::move(terms),
                                         eq.w.coefficients()) ==
                normalized_equation_repr(expected.question, expected.terms,
                                         expected.w);
    c.check(same, "spot check " +
                      equation_id(d.game, d.pegs, pattern, question_no));
    return;
  }
  c.check(false, "spot check " +
                     equation_id(d.game, d.pegs, pattern, question_no) +
                     " (equation missing)");
}

}  // namespace

SuiteResult verify_p1() {
  Checker c;
  Derivation d = derive(Game::mm, 1);
  c.check(d.queue.size() == 1, "one queue pattern");
  c.check(d.equations.size() == 1, "one equation");
  if (d.equations.size() == 1) {
    const Equation& eq = d.equations.front();
    c.check(eq.terms == std::vector<Term>{{0, 1}} &&
                eq.w == Polynomial({0, 1}),
            "equation is A(n) = A(n-1) + n");
  }
  Oracle oracle;
  auto values = eval_system(d, 50, oracle_base(d, max_shift(d), oracle));
  bool all = true;
  for (std::int64_t n = 1; n <= 50; ++n)
    all = all && values[0][static_cast<std::size_t>(n)] == n * (n + 1) / 2;
  c.check(all, "A(n) = n(n+1)/2 for 1 <= n <= 50");
  return std::move(c).result();
}

SuiteResult verify_mm2() {
  Checker c;
  Derivation d = derive(Game::mm, 2);
  ExpectedDerivation expected = paper_mm2();
  derivation_matches(c, d, expected);
  check_spot(c, d, 0, 2, expected.equations[0][1]);  // (MM.2.0.2)
  check_spot(c, d, 1, 2, expected.equations[1][1]);  // (MM.2.1.2)
  check_spot(c, d, 3, 1, expected.equations[3][0]);  // (MM.2.3.1)
  c.report << d.queue.size() << " patterns, " << d.equations.size()
           << " equations\n";
  return std::move(c).result();
}

SuiteResult verify_ab2() {
  Checker c;
  Derivation d = derive(Game::ab, 2);
  ExpectedDerivation expected = paper_ab2();
  derivation_matches(c, d, expected);
  check_spot(c, d, 0, 1, expected.equations[0][0]);  // (AB.2.0.1)
  check_spot(c, d, 1, 5, expected.equations[1][4]);  // (AB.2.1.5)
  check_spot(c, d, 2, 3, expected.equations[2][2]);  // (AB.2.2.3)
  c.report << d.queue.size() << " patterns, " << d.equations.size()
           << " equations\n";
  return std::move(c).result();
}

SuiteResult verify_formulas() {
  Checker c;
  {
    Derivation d = derive(Game::mm, 2);
    Oracle oracle;
    auto values = eval_system(d, 100, oracle_base(d, max_shift(d), oracle));
    bool all = true;
    for (int n = 3; n <= 100; ++n) {
      Rational lhs(values[0][static_cast<std::size_t>(n)]);
      Rational rhs = Rational(static_cast<std::int64_t>(n) * n) *
                     closed_form_mm(n);
      all = all && lhs == rhs;
    }
    c.check(all, "MM: A_{2,0}(n) = n^2 * closed form for 3 <= n <= 100");
  }
  {
    Derivation d = derive(Game::ab, 2);
    Oracle oracle;
    auto values = eval_system(d, 100, oracle_base(d, max_shift(d), oracle));
    bool all = true;
    for (int n = 2; n <= 100; ++n) {
      Rational lhs(values[0][static_cast<std::size_t>(n)]);
      Rational rhs = Rational(static_cast<std::int64_t>(n) * (n - 1)) *
                     closed_form_ab(n);
      all = all && lhs == rhs;
    }
    c.check(all, "AB: A_{2,0}(n) = n(n-1) * closed form for 2 <= n <= 100");
  }
  return std::move(c).result();
}

SuiteResult verify_oracle_tables() {
  Checker c;
  for (Game game : {Game::mm, Game::ab}) {
    Derivation d = derive(game, 2);
    Oracle oracle;

    // Published value tables for n in [2,5]; blank cells are skipped.
    bool tables_ok = true;
    for (int n = 2; n <= 5; ++n) {
      for (std::size_t i = 0; i < d.queue.size(); ++i) {
        std::int64_t want = game == Game::mm ? mm2_values[n - 2][i]
                                             : ab2_values[n - 2][i];
        if (want < 0) continue;
        const Pattern& pattern = d.queue[i];
        std::int64_t got = n < pattern.deficit()
                               ? 0
                               : oracle.solve(instantiate(pattern, n));
        tables_ok = tables_ok && got == want;
      }
    }
    c.check(tables_ok, std::string(game_tag(game)) +
                           ": oracle reproduces the published value table");
  }
  return std::move(c).result();
}

SuiteResult verify_fixpoint_equivalence() {
  Checker c;
  for (Game game : {Game::mm, Game::ab}) {
    Derivation d = derive(game, 2);
    Oracle oracle;
    FixpointReport report = verify_fixpoint(d, 3, 7, oracle);
    c.check(report.ok, std::string(game_tag(game)) +
                           ": equations minimum equals oracle for n in [3,7]");

    int full_game_optimal = game == Game::mm ? 2 : 1;  // question (0,1)
    bool argmin_ok = true;
    bool degenerate_ok = true;
    for (const FixpointCell& cell : report.cells) {
      if (cell.pattern == 0)
        argmin_ok = argmin_ok && cell.argmin_question_no == full_game_optimal;
      for (const Equation& eq : d.equations) {
        if (eq.pattern != cell.pattern ||
            eq.question_no != cell.argmin_question_no)
          continue;
        for (const Term& t : eq.terms)
          degenerate_ok =
              degenerate_ok && !(t.pattern == cell.pattern && t.shift == 0);
      }
    }
    c.check(argmin_ok, std::string(game_tag(game)) +
                           ": optimal question for the full game is (0,1)");
    c.check(degenerate_ok, std::string(game_tag(game)) +
                               ": self-referencing equations never optimal");
  }
  return std::move(c).result();
}

SuiteResult verify_fixpoint_suite() {
  SuiteResult tables = verify_oracle_tables();
  SuiteResult equivalence = verify_fixpoint_equivalence();
  return {tables.ok && equivalence.ok, tables.report + equivalence.report};
}

SuiteResult verify_counts3() {
  Checker c;
  {
    Derivation d = derive(Game::mm, 3);
    c.check(d.queue.size() == 13388 && d.equations.size() == 9096599,
            "MM p=3: " + std::to_string(d.queue.size()) + " patterns, " +
                std::to_string(d.equations.size()) + " equations");
  }
  {
    Derivation d = derive(Game::ab, 3);
    c.check(d.queue.size() == 7496 && d.equations.size() == 4188421,
            "AB p=3: " + std::to_string(d.queue.size()) + " patterns, " +
                std::to_string(d.equations.size()) + " equations");
  }
  return std::move(c).result();
}

SuiteResult run_suite(const std::string& name, bool slow) {
  if (name == "p1") return verify_p1();
  if (name == "mm2") return verify_mm2();
  if (name == "ab2") return verify_ab2();
  if (name == "formulas") return verify_formulas();
  if (name == "fixpoint") return verify_fixpoint_suite();
  if (name == "counts3") {
    if (!slow)
      throw std::invalid_argument("suite counts3 requires --slow");
    return verify_counts3();
  }
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace maset
