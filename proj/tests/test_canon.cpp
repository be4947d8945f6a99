#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "maset/canon.hpp"

using namespace maset;
using testutil::mm;
using testutil::q;

TEST_CASE("isomorphic pattern pairs share a key") {
  CHECK(canonical_pattern(mm("(0,*_{n-2})")) ==
        canonical_pattern(mm("(*_{n-2},0)")));
  // Star indices are ignored.
  CHECK(canonical_pattern(Pattern::full(Game::mm, 2)) ==
        canonical_pattern(mm("(*_{n-1},*_{n-1})")));
  CHECK(canonical_pattern(mm("(0,0) | (*_{n-2},0)")) ==
        canonical_pattern(mm("(0,0) | (0,*_{n-2})")));
  CHECK(canonical_pattern(mm("(0,*_{n-2}) | (*_{n-2},1)")) ==
        canonical_pattern(mm("(1,*_{n-2}) | (*_{n-2},0)")));
  CHECK(canonical_pattern(mm("(0,0)")) != canonical_pattern(mm("(0,1)")));
}

TEST_CASE("question tables pin the question row") {
  Pattern full = Pattern::full(Game::mm, 2);
  CHECK(canonical_with_question(full, q("(0,1)")) ==
        canonical_with_question(full, q("(1,0)")));
  CanonicalKey same = canonical_with_question(full, q("(0,0)"));
  CanonicalKey split = canonical_with_question(full, q("(0,1)"));
  CanonicalKey extra = canonical_with_question(full, q("(0,a)"));
  CHECK(same != split);
  CHECK(same != extra);
  CHECK(split != extra);

  // The additional color is fixed by every permutation.
  Pattern m3 = mm("(0,0) | (0,*_{n-2}) | (1,1) | (*_{n-2},1)");
  CHECK(canonical_with_question(m3, q("(2,a)")) !=
        canonical_with_question(m3, q("(2,3)")));
  CHECK(canonical_with_question(m3, q("(2,3)")) ==
        canonical_with_question(m3, q("(3,2)")));

  // Both outcomes agree with the exhaustive permutation search.
  CHECK(testutil::brute_isomorphic_with_question(m3, q("(2,3)"), m3,
                                                 q("(3,2)")));
  CHECK_FALSE(testutil::brute_isomorphic_with_question(m3, q("(2,a)"), m3,
                                                       q("(2,3)")));
  CHECK_FALSE(testutil::brute_isomorphic_with_question(m3, q("(0,0)"), m3,
                                                       q("(1,0)")));
  CHECK(testutil::brute_isomorphic_with_question(m3, q("(0,0)"), m3,
                                                 q("(1,1)")));
  CHECK(canonical_with_question(m3, q("(0,0)")) ==
        canonical_with_question(m3, q("(1,1)")));
}

TEST_CASE("concrete keys respect color and position symmetries") {
  Maset a(Game::mm, 2, 2, true, {0, 1});
  Maset b(Game::mm, 2, 2, true, {1, 0});
  CHECK(canonical_concrete(a) == canonical_concrete(b));

  Maset diag(Game::mm, 2, 2, true, {0, 0, 1, 1});
  Maset anti(Game::mm, 2, 2, true, {0, 1, 1, 0});
  CHECK(canonical_concrete(diag) != canonical_concrete(anti));
  CHECK_FALSE(testutil::brute_isomorphic_concrete(diag, anti));
  CHECK(testutil::brute_isomorphic_concrete(a, b));

  // Same secrets at a different color count are different games.
  Maset wide(Game::mm, 2, 3, true, {0, 1});
  CHECK(canonical_concrete(a) != canonical_concrete(wide));

  Maset full = Maset::full(Game::mm, 2, 3, true);
  CanonicalKey key = canonical_concrete(full);
  std::mt19937 rng(7);
  for (int it = 0; it < 100; ++it) {
    auto colors = testutil::random_perm(3, rng);
    auto cols = testutil::random_perm(2, rng);
    std::vector<Sym> cells;
    for (int i = 0; i < full.size(); ++i)
      for (int j = 0; j < 2; ++j)
        cells.push_back(static_cast<Sym>(
            colors[full.secret(i)[static_cast<std::size_t>(cols[static_cast<std::size_t>(j)])]]));
    CHECK(canonical_concrete(Maset(Game::mm, 2, 3, true, std::move(cells))) ==
          key);
  }
}

TEST_CASE("keys are invariant under 1000 random permutations") {
  std::vector<Pattern> fixtures = {
      mm("(0,*_{n-1}) | (*_{n-1},0)"),
      mm("(1,*_{n-2}) | (*_{n-2},0)"),
      mm("(0,0) | (0,*_{n-2}) | (1,1) | (*_{n-2},1)"),
      mm("(0,0) | (0,*_{n-1})"),
      mm("(0,1,*_{n-3}) | (*_{n-3},0,1) | (2,*_{n-3},*_{n-3})", 3),
  };
  std::mt19937 rng(42);
  for (const Pattern& p : fixtures) {
    CanonicalKey key = canonical_pattern(p);
    int u = p.explicit_color_count();
    for (int it = 0; it < 1000; ++it) {
      auto rows = testutil::random_perm(p.clause_count(), rng);
      auto cols = testutil::random_perm(p.pegs(), rng);
      auto colors = testutil::random_perm(u, rng);
      Pattern permuted = testutil::permute_pattern(p, rows, cols, colors);
      CHECK(canonical_pattern(permuted) == key);
    }
  }
}

TEST_CASE("key equality coincides with brute-force isomorphism") {
  // Every normalized pattern with up to two clauses over {0, 1, *}.
  std::vector<Pattern> family;
  std::vector<std::vector<Sym>> rows;
  for (Sym x : {Sym(0), Sym(1), star_sym})
    for (Sym y : {Sym(0), Sym(1), star_sym}) rows.push_back({x, y});
  for (const auto& row : rows) {
    Pattern p(Game::mm, 2, 2, {row[0], row[1]});
    if (p.is_normalized()) family.push_back(p);
  }
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = i; j < rows.size(); ++j) {
      std::vector<Sym> cells = {rows[i][0], rows[i][1], rows[j][0], rows[j][1]};
      Pattern p(Game::mm, 2, 2, std::move(cells));
      if (p.is_normalized()) family.push_back(p);
    }

  for (const Pattern& a : family)
    for (const Pattern& b : family) {
      bool same_key = canonical_pattern(a) == canonical_pattern(b);
      CHECK(same_key == testutil::brute_isomorphic(a, b));
    }
}

TEST_CASE("three-peg patterns canonicalize soundly") {
  Pattern a = mm("(0,1,2) | (2,*_{n-3},0)", 3);
  std::mt19937 rng(3);
  for (int it = 0; it < 50; ++it) {
    auto rows = testutil::random_perm(a.clause_count(), rng);
    auto cols = testutil::random_perm(3, rng);
    auto colors = testutil::random_perm(3, rng);
    Pattern b = testutil::permute_pattern(a, rows, cols, colors);
    CHECK(canonical_pattern(a) == canonical_pattern(normalize(b)));
    CHECK(testutil::brute_isomorphic(a, b));
  }
  CHECK_FALSE(testutil::brute_isomorphic(a, mm("(0,1,2) | (2,*_{n-3},1)", 3)));
  CHECK(canonical_pattern(a) != canonical_pattern(mm("(0,1,2) | (2,*_{n-3},1)", 3)));
}
