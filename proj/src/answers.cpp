#include "maset/answers.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace maset {

namespace {

bool impossible(AnswerPair a, int pegs) {
  return a.black == pegs - 1 && a.white == 1;
}

// Shared by secret_answer and clause_answer; a clause may contain stars,
// which match nothing.
AnswerPair answer_over_explicit(std::span<const Sym> row,
                                std::span<const Sym> question) {
  const int p = static_cast<int>(row.size());
  int black = 0;
  for (int i = 0; i < p; ++i)
    if (is_color(row[i]) && row[i] == question[i]) ++black;
  int common = 0;
  for (int i = 0; i < p; ++i) {
    Sym c = question[i];
    if (!is_color(c)) continue;
    bool first = true;
    for (int j = 0; j < i; ++j)
      if (question[j] == c) first = false;
    if (!first) continue;
    int in_question = 0;
    int in_row = 0;
    for (int j = 0; j < p; ++j) {
      if (question[j] == c) ++in_question;
      if (row[j] == c) ++in_row;
    }
    common += std::min(in_question, in_row);
  }
  return {black, common - black};
}

}  // namespace

int answer_count(int pegs) {
  if (pegs < 1) throw std::invalid_argument("pegs must be positive");
  return pegs * (pegs + 3) / 2;
}

int answer_index(AnswerPair answer, int pegs) {
  if (answer.black < 0 || answer.white < 0 ||
      answer.black + answer.white > pegs)
    throw std::invalid_argument("answer out of range");
  if (impossible(answer, pegs))
    throw std::invalid_argument("answer (" + std::to_string(pegs - 1) +
                                ",1) is impossible");
  int index = 0;
  for (int sum = 0; sum <= pegs; ++sum)
    for (int black = 0; black <= sum; ++black) {
      AnswerPair a{black, sum - black};
      if (impossible(a, pegs)) continue;
      if (a == answer) return index;
      ++index;
    }
  throw std::logic_error("unreachable: answer enumeration exhausted");
}

AnswerPair index_to_answer(int index, int pegs) {
  if (index < 0 || index >= answer_count(pegs))
    throw std::invalid_argument("answer index out of range");
  int i = 0;
  for (int sum = 0; sum <= pegs; ++sum)
    for (int black = 0; black <= sum; ++black) {
      AnswerPair a{black, sum - black};
      if (impossible(a, pegs)) continue;
      if (i == index) return a;
      ++i;
    }
  throw std::logic_error("unreachable: answer enumeration exhausted");
}

AnswerPair secret_answer(std::span<const Sym> secret,
                         std::span<const Sym> question) {
  if (secret.size() != question.size())
    throw std::invalid_argument("secret/question length mismatch");
  return answer_over_explicit(secret, question);
}

AnswerPair clause_answer(std::span<const Sym> clause,
                         std::span<const Sym> question, int deficit) {
  if (clause.size() != question.size())
    throw std::invalid_argument("clause/question length mismatch");
  for (Sym c : question)
    if (is_color(c) && static_cast<int>(c) >= deficit)
      throw std::invalid_argument(
          "question color not covered by the pattern deficit");
  return answer_over_explicit(clause, question);
}

}  // namespace maset
