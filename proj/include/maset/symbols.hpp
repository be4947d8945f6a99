// symbols.hpp -- peg symbols and game variants shared by the whole library

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace maset {

/// A peg symbol: an explicit color id, the star, or the additional color.
///
/// Explicit colors are small non-negative integers.  The star stands for
/// the block of implicit colors of a maset pattern and may appear only in
/// clauses.  The additional color is legal in questions but can never be
/// part of a secret.  The numeric encoding keeps the comparison order
/// explicit colors < star < additional, which every canonical form and
/// every lexicographic question order in this library relies on.
using Sym = std::uint8_t;

inline constexpr Sym star_sym = 0xFE;
inline constexpr Sym additional_sym = 0xFF;

/// Upper bound for explicit color ids (leaves room for the sentinels).
inline constexpr int max_color_id = 0xF0;

constexpr bool is_color(Sym s) { return s < max_color_id; }

/// Game variant: classic Mastermind (repetition allowed) or the AB game
/// ("Bulls and Cows"), where secrets and questions never repeat a color.
enum class Game : std::uint8_t { mm, ab };

inline const char* game_name(Game g) { return g == Game::mm ? "mm" : "ab"; }

inline const char* game_tag(Game g) { return g == Game::mm ? "MM" : "AB"; }

inline Game parse_game(const std::string& name) {
  if (name == "mm" || name == "MM") return Game::mm;
  if (name == "ab" || name == "AB") return Game::ab;
  throw std::invalid_argument("unknown game variant: " + name);
}

}  // namespace maset
