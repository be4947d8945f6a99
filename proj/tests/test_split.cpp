#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "maset/answers.hpp"
#include "maset/questions.hpp"
#include "maset/split.hpp"

using namespace maset;
using testutil::mm;
using testutil::q;

TEST_CASE("answer counts") {
  CHECK(answer_count(2) == 5);
  CHECK(answer_count(3) == 9);
  CHECK(answer_count(4) == 14);
}

TEST_CASE("answer numbering skips the impossible pair") {
  CHECK(answer_index({1, 0}, 2) == 2);
  CHECK(answer_index({2, 0}, 2) == 4);
  CHECK(answer_index({1, 2}, 3) == 7);
  CHECK_THROWS_AS(answer_index({2, 1}, 3), std::invalid_argument);
  CHECK_THROWS_AS(answer_index({1, 1}, 2), std::invalid_argument);
  CHECK_THROWS_AS(answer_index({3, 0}, 2), std::invalid_argument);
}

TEST_CASE("answer numbering is a bijection") {
  for (int p : {1, 2, 3, 4}) {
    for (int k = 0; k < answer_count(p); ++k)
      CHECK(answer_index(index_to_answer(k, p), p) == k);
    CHECK(index_to_answer(answer_count(p) - 1, p) == AnswerPair{p, 0});
  }
}

TEST_CASE("secret answers") {
  std::vector<Sym> s1 = {1, 0}, q1 = {0, 1};
  CHECK(secret_answer(s1, q1) == AnswerPair{0, 2});
  std::vector<Sym> s2 = {0, 1};
  CHECK(secret_answer(s2, q1) == AnswerPair{2, 0});
  std::vector<Sym> s3 = {2, 2}, q3 = {0, additional_sym};
  CHECK(secret_answer(s3, q3) == AnswerPair{0, 0});
}

TEST_CASE("clause answers treat stars as unmatchable") {
  std::vector<Sym> q01 = {0, 1};
  std::vector<Sym> c1 = {0, star_sym};
  CHECK(clause_answer(c1, q01, 2) == AnswerPair{1, 0});
  std::vector<Sym> c2 = {star_sym, 0}, qa = {0, additional_sym};
  CHECK(clause_answer(c2, qa, 1) == AnswerPair{0, 1});
  std::vector<Sym> c3 = {star_sym, star_sym};
  CHECK(clause_answer(c3, q01, 2) == AnswerPair{0, 0});
  // A question color the extension did not cover is a contract violation.
  CHECK_THROWS_AS(clause_answer(c1, q01, 1), std::invalid_argument);
}

TEST_CASE("splitting the full pattern matches the published tree") {
  auto split = split_pattern(Pattern::full(Game::mm, 2), q("(0,1)"));
  CHECK(split.extension_target == 2);
  CHECK(split.buckets[answer_index({1, 0}, 2)] ==
        mm("(0,0) | (0,*_{n-2}) | (1,1) | (*_{n-2},1)"));
  CHECK(split.buckets[answer_index({0, 1}, 2)] ==
        mm("(1,*_{n-2}) | (*_{n-2},0)"));
  CHECK(split.buckets[answer_index({0, 0}, 2)] == mm("(*_{n-2},*_{n-2})"));
  CHECK(split.buckets[answer_index({0, 2}, 2)] ==
        Pattern(Game::mm, 2, 2, {1, 0}));
  CHECK(split.buckets[answer_index({2, 0}, 2)] ==
        Pattern(Game::mm, 2, 2, {0, 1}));

  auto with_additional = split_pattern(Pattern::full(Game::mm, 2), q("(0,a)"));
  CHECK(with_additional.extension_target == 1);
  CHECK(with_additional.buckets[answer_index({1, 0}, 2)] ==
        mm("(0,0) | (0,*_{n-1})"));
  CHECK(with_additional.buckets[answer_index({0, 1}, 2)] == mm("(*_{n-1},0)"));
  CHECK(with_additional.buckets[answer_index({0, 0}, 2)] ==
        mm("(*_{n-1},*_{n-1})"));
  CHECK(with_additional.buckets[answer_index({0, 2}, 2)].is_empty());
  CHECK(with_additional.buckets[answer_index({2, 0}, 2)].is_empty());
}

TEST_CASE("a non-distinguishing question leaves one full bucket") {
  auto split = split_pattern(mm("(*_{n-1},0)"), q("(a,0)"));
  CHECK(split.buckets[answer_index({1, 0}, 2)] == mm("(*_{n-1},0)"));
  for (int k = 0; k < 5; ++k)
    if (k != answer_index({1, 0}, 2))
      CHECK(split.buckets[static_cast<std::size_t>(k)].is_empty());
}

TEST_CASE("concrete split partitions the full two-color game") {
  Maset full = Maset::full(Game::mm, 2, 2, true);
  auto buckets = split_concrete(full, q("(0,1)"));
  CHECK(buckets[answer_index({0, 0}, 2)].size() == 0);
  CHECK(buckets[answer_index({0, 1}, 2)].size() == 0);
  CHECK(buckets[answer_index({1, 0}, 2)].size() == 2);
  CHECK(buckets[answer_index({0, 2}, 2)].size() == 1);
  CHECK(buckets[answer_index({2, 0}, 2)].size() == 1);
}

TEST_CASE("a uniformly-answered maset lands in one bucket") {
  Maset m = instantiate(testutil::mm("(*_{n-1},0)"), 4);
  auto buckets = split_concrete(m, q("(a,0)"));
  CHECK(buckets[answer_index({1, 0}, 2)] == m);
  int nonempty = 0;
  for (const Maset& bucket : buckets)
    if (!bucket.is_empty()) ++nonempty;
  CHECK(nonempty == 1);
}

TEST_CASE("pattern split commutes with instantiation") {
  std::vector<Pattern> patterns = {
      Pattern::full(Game::mm, 2),
      mm("(0,*_{n-1}) | (*_{n-1},0)"),
      mm("(1,*_{n-2}) | (*_{n-2},0)"),
      mm("(0,0) | (0,*_{n-2}) | (1,1) | (*_{n-2},1)"),
      mm("(*_{n-1},0)"),
      mm("(0,0) | (0,*_{n-1})"),
      Pattern::full(Game::ab, 2),
      testutil::ab("(1,*_{n-2}) | (*_{n-2},0)"),
      testutil::ab("(*_{n-1},0)"),
  };
  for (const Pattern& p : patterns) {
    for (const Question& question : gen_questions(p)) {
      auto split = split_pattern(p, question);

      // Conservation at the polynomial level: bucket counts sum to the
      // extended pattern's count.
      Polynomial sum;
      for (const Pattern& bucket : split.buckets) sum += count_secrets(bucket);
      CHECK(sum == count_secrets(split.extended));
      CHECK(count_secrets(split.extended) == count_secrets(p));

      for (int n = split.extended.deficit(); n <= split.extended.deficit() + 3;
           ++n) {
        auto concrete = split_concrete(instantiate(split.extended, n), question);
        for (std::size_t k = 0; k < split.buckets.size(); ++k)
          CHECK(instantiate(split.buckets[k], n) == concrete[k]);
      }
    }
  }
}

TEST_CASE("clauses answer uniformly across their secrets") {
  std::vector<Pattern> patterns = {
      Pattern::full(Game::mm, 2),
      mm("(0,0) | (0,*_{n-2}) | (1,1) | (*_{n-2},1)"),
      testutil::ab("(1,*_{n-2}) | (*_{n-2},0)"),
  };
  for (const Pattern& p : patterns)
    for (const Question& question : gen_questions(p)) {
      auto split = split_pattern(p, question);
      const Pattern& e = split.extended;
      int n = e.deficit() + 3;
      for (int i = 0; i < e.clause_count(); ++i) {
        Pattern single(e.game(), e.pegs(), e.deficit(),
                       {e.clause(i).begin(), e.clause(i).end()});
        AnswerPair expected =
            clause_answer(e.clause(i), question.pegs, e.deficit());
        Maset secrets = instantiate(single, n);
        for (int s = 0; s < secrets.size(); ++s)
          CHECK(secret_answer(secrets.secret(s), question.pegs) == expected);
      }
    }
}
