// answers.hpp -- black/white answer pairs, their numbering, and answer
// computation for secrets and clauses

#pragma once

#include <compare>
#include <span>

#include "maset/symbols.hpp"

namespace maset {

/// A codemaker answer: `black` pegs correct in position and color, `white`
/// correct in color only.  The pair (p-1, 1) is impossible.
struct AnswerPair {
  int black = 0;
  int white = 0;
  auto operator<=>(const AnswerPair&) const = default;
};

/// Number of possible answers, p(p+3)/2.
int answer_count(int pegs);

/// Index of an answer in the 0..P-1 numbering: ascending black+white, then
/// ascending black, skipping the impossible (p-1, 1); index P-1 is (p, 0).
/// Throws std::invalid_argument for (p-1, 1) or an out-of-range pair.
int answer_index(AnswerPair answer, int pegs);

/// Inverse of answer_index.
AnswerPair index_to_answer(int index, int pegs);

/// Answer of a secret to a question.  The additional color matches nothing.
AnswerPair secret_answer(std::span<const Sym> secret,
                         std::span<const Sym> question);

/// Answer of a clause to a question, computed over explicit pegs only: the
/// star matches neither explicit colors nor the additional color.  Requires
/// every explicit question color to be below `deficit`, which prior
/// extension guarantees; then every secret of the clause answers alike.
AnswerPair clause_answer(std::span<const Sym> clause,
                         std::span<const Sym> question, int deficit);

}  // namespace maset
