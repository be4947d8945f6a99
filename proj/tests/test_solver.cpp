#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "maset/equations.hpp"
#include "maset/solver.hpp"
#include "maset/split.hpp"

using namespace maset;
using testutil::mm;

TEST_CASE("star-free base cases") {
  StarFreeSolver solver;
  CHECK(solver.solve(Pattern(Game::mm, 2, 2, {1, 0})) == 1);
  CHECK(solver.solve(Pattern(Game::mm, 2, 2, {0, 1, 1, 0})) == 3);
  CHECK(solver.solve(Pattern::empty(Game::mm, 2, 0)) == 0);
  CHECK(solver.solve(Pattern(Game::mm, 2, 2, {1, 0}), true) == 0);
}

TEST_CASE("star-free search solves the full two-color game") {
  StarFreeSolver solver;
  Pattern all(Game::mm, 2, 2, {0, 0, 0, 1, 1, 0, 1, 1});
  CHECK(solver.solve(all) == 8);
}

TEST_CASE("oracle reproduces the published full-game values") {
  Oracle oracle;
  CHECK(oracle.solve(Maset::full(Game::mm, 2, 3, true)) == 21);
  CHECK(oracle.solve(Maset::full(Game::ab, 2, 4, true)) == 30);
  CHECK(oracle.solve(Maset::full(Game::mm, 1, 4, true)) == 10);
  CHECK(oracle.solve(instantiate(
            mm("(0,0) | (0,*_{n-2}) | (1,1) | (*_{n-2},1)"), 4)) == 13);
}

TEST_CASE("expected question counts are exact rationals") {
  CHECK(expected_questions(Maset::full(Game::mm, 2, 5, true)) ==
        Rational(81, 25));
  CHECK(expected_questions(Maset::full(Game::mm, 1, 3, true)) == Rational(2));
  CHECK(expected_questions(Maset::full(Game::ab, 2, 5, true)) == Rational(3));
  CHECK_THROWS_AS(expected_questions(Maset::full(Game::ab, 2, 1, true)),
                  std::invalid_argument);
}

TEST_CASE("closed forms match the published tables") {
  CHECK(closed_form_mm(4) == Rational(45, 16));
  CHECK(closed_form_mm(5) == Rational(81, 25));
  CHECK(closed_form_ab(4) == Rational(5, 2));
  CHECK_THROWS_AS(closed_form_mm(2), std::invalid_argument);
  CHECK_THROWS_AS(closed_form_ab(1), std::invalid_argument);
}

TEST_CASE("any two-secret maset costs exactly three") {
  std::mt19937 rng(11);
  for (int it = 0; it < 100; ++it) {
    Game game = it % 2 == 0 ? Game::mm : Game::ab;
    int pegs = 2 + static_cast<int>(rng() % 2);
    int colors = std::max(pegs, 2 + static_cast<int>(rng() % 4));
    Maset full = Maset::full(game, pegs, colors, true);
    int a = static_cast<int>(rng() % static_cast<unsigned>(full.size()));
    int b = static_cast<int>(rng() % static_cast<unsigned>(full.size() - 1));
    if (b >= a) ++b;
    std::vector<Sym> cells(full.secret(a).begin(), full.secret(a).end());
    cells.insert(cells.end(), full.secret(b).begin(), full.secret(b).end());
    Maset two(game, pegs, colors, true, std::move(cells));
    Oracle oracle;
    CHECK(oracle.solve(two) == 3);
  }
}

TEST_CASE("the oracle is invariant under input symmetries") {
  Maset base = instantiate(mm("(0,0) | (0,*_{n-2}) | (1,1) | (*_{n-2},1)"), 4);
  Oracle oracle;
  std::int64_t want = oracle.solve(base);
  std::mt19937 rng(5);
  for (int it = 0; it < 20; ++it) {
    auto colors = testutil::random_perm(base.colors(), rng);
    auto cols = testutil::random_perm(base.pegs(), rng);
    std::vector<Sym> cells;
    for (int i = 0; i < base.size(); ++i)
      for (int j = 0; j < base.pegs(); ++j)
        cells.push_back(static_cast<Sym>(
            colors[base.secret(i)[static_cast<std::size_t>(
                cols[static_cast<std::size_t>(j)])]]));
    Maset permuted(base.game(), base.pegs(), base.colors(), true,
                   std::move(cells));
    Oracle fresh;
    CHECK(fresh.solve(permuted) == want);
  }
}

TEST_CASE("path length dominates the secret count") {
  Oracle oracle;
  for (int n = 1; n <= 4; ++n) {
    Maset full = Maset::full(Game::mm, 2, n, true);
    CHECK(oracle.solve(full) >= full.size());
  }
}

TEST_CASE("oracle agrees with the star-free solver on derivation children") {
  // Every star-free child produced while deriving the two-peg systems
  // solves to the same value as the explicit maset over its color range.
  for (Game game : {Game::mm, Game::ab}) {
    Derivation d = derive(game, 2);
    StarFreeSolver star_free;
    Oracle oracle;
    int checked = 0;
    for (const Equation& eq : d.equations) {
      auto split = split_pattern(d.queue[static_cast<std::size_t>(eq.pattern)],
                                 eq.question);
      for (const Pattern& child : split.buckets) {
        if (child.has_star() || child.is_empty()) continue;
        Pattern tight = tighten(normalize(child)).pattern;
        int u = tight.explicit_color_count();
        Maset concrete(game, 2, u, true, tight.cells());
        CHECK(star_free.solve(child) == oracle.solve(concrete));
        ++checked;
      }
    }
    CHECK(checked > 0);
  }
}
