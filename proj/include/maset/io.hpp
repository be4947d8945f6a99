// io.hpp -- text rendering, parsing, and the derivation document format

#pragma once

#include <string>
#include <string_view>

#include "maset/equations.hpp"

namespace maset {

/// "0", "a", "*_n" / "*_{n-2}" depending on the deficit.
std::string symbol_to_string(Sym sym, int deficit);

/// "(0,*_{n-2})"
std::string clause_to_string(std::span<const Sym> clause, int deficit);

/// "(0,0) | (0,*_{n-2})" or the empty-set sign.  `deficit_override`
/// substitutes the star index without touching the clauses (used when a
/// queue pattern is shown inside a derivation step at the child's deficit).
std::string pattern_to_string(const Pattern& pattern,
                              int deficit_override = -1);

/// "(0,a)"
std::string question_to_string(const Question& q);

/// "A_{2,0}(n) = A_{2,0}(n-2) + A_{2,2}(n) + A_{2,3}(n) + n^2 + 1"
std::string equation_to_string(const Derivation& derivation,
                               const Equation& eq);

/// Parses "(0,0)|(0,*_{n-2})" (clause separators "|" with optional spaces).
/// The deficit is read off the star indices; star-free patterns take it
/// from the explicit colors.  Inverse of pattern_to_string.
Pattern parse_pattern(std::string_view text, Game game, int pegs);

/// Parses "(0,a)".
Question parse_question(std::string_view text);

/// Paper-style listing: every queue pattern, its questions, all answer
/// lines with the raw/normalized/queue stages, and the equation per
/// question.
std::string emit_listing(const Derivation& derivation);

/// Structured document (JSON text): schema, game, pegs, queue patterns,
/// and per equation the id, question, per-answer derivation stages, terms,
/// w coefficients (ascending) and validity threshold.  Deterministic bytes.
std::string emit_document(const Derivation& derivation);

/// Inverse of emit_document.  Throws std::runtime_error with a location
/// message on malformed input.
Derivation parse_document(std::string_view bytes);

}  // namespace maset
