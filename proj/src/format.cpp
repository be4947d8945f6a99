#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include "maset/io.hpp"

namespace maset {

std::string symbol_to_string(Sym sym, int deficit) {
  if (sym == additional_sym) return "a";
  if (sym == star_sym) {
    if (deficit == 0) return "*_n";
    return "*_{n-" + std::to_string(deficit) + "}";
  }
  return std::to_string(static_cast<int>(sym));
}

std::string clause_to_string(std::span<const Sym> clause, int deficit) {
  std::string out = "(";
  for (std::size_t j = 0; j < clause.size(); ++j) {
    if (j > 0) out += ",";
    out += symbol_to_string(clause[j], deficit);
  }
  return out + ")";
}

std::string pattern_to_string(const Pattern& pattern, int deficit_override) {
  if (pattern.is_empty()) return "∅";
  int deficit = deficit_override >= 0 ? deficit_override : pattern.deficit();
  std::string out;
  for (int i = 0; i < pattern.clause_count(); ++i) {
    if (i > 0) out += " | ";
    out += clause_to_string(pattern.clause(i), deficit);
  }
  return out;
}

std::string question_to_string(const Question& q) {
  std::string out = "(";
  for (std::size_t j = 0; j < q.pegs.size(); ++j) {
    if (j > 0) out += ",";
    out += q.pegs[j] == additional_sym
               ? "a"
               : std::to_string(static_cast<int>(q.pegs[j]));
  }
  return out + ")";
}

std::string equation_to_string(const Derivation& derivation,
                               const Equation& eq) {
  std::ostringstream os;
  os << "A_{" << derivation.pegs << "," << eq.pattern << "}(n) =";
  for (const Term& term : eq.terms) {
    os << " A_{" << derivation.pegs << "," << term.pattern << "}(n";
    if (term.shift > 0) os << "-" << term.shift;
    os << ") +";
  }
  os << " " << eq.w.to_string();
  return os.str();
}

namespace {

class TextCursor {
 public:
  explicit TextCursor(std::string_view text) : text_(text) {}

  void skip_spaces() {
    while (pos_ < text_.size() && text_[pos_] == ' ') ++pos_;
  }
  bool done() {
    skip_spaces();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_spaces();
    if (pos_ >= text_.size()) throw std::invalid_argument("unexpected end of pattern text");
    return text_[pos_];
  }
  void expect(char c) {
    if (peek() != c)
      throw std::invalid_argument(std::string("expected '") + c + "' in pattern text");
    ++pos_;
  }
  bool accept(char c) {
    if (!done() && peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  int number() {
    skip_spaces();
    int value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_,
                                     text_.data() + text_.size(), value);
    if (ec != std::errc() || ptr == text_.data() + pos_)
      throw std::invalid_argument("expected a number in pattern text");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return value;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

// Star spelled "*", "*_n" or "*_{n-k}"; returns the deficit it implies
// (-1 for a bare "*" or "*_n").
int parse_star_index(TextCursor& cur) {
  if (!cur.accept('_')) return -1;
  if (cur.accept('{')) {
    cur.expect('n');
    int deficit = 0;
    if (cur.accept('-')) deficit = cur.number();
    cur.expect('}');
    return deficit;
  }
  cur.expect('n');
  return 0;
}

}  // namespace

Pattern parse_pattern(std::string_view text, Game game, int pegs) {
  if (text.find("∅") != std::string_view::npos)
    return Pattern::empty(game, pegs, 0);

  TextCursor cur(text);
  std::vector<Sym> cells;
  int deficit = -1;
  bool any_star = false;
  while (true) {
    cur.expect('(');
    for (int j = 0; j < pegs; ++j) {
      if (j > 0) cur.expect(',');
      char c = cur.peek();
      if (c == '*') {
        cur.expect('*');
        any_star = true;
        int t = parse_star_index(cur);
        if (t >= 0) {
          if (deficit >= 0 && deficit != t)
            throw std::invalid_argument("stars with inconsistent indices");
          deficit = t;
        }
        cells.push_back(star_sym);
      } else if (c == 'a') {
        throw std::invalid_argument("additional color cannot occur in a clause");
      } else {
        cells.push_back(static_cast<Sym>(cur.number()));
      }
    }
    cur.expect(')');
    if (!cur.accept('|')) break;
  }
  if (!cur.done()) throw std::invalid_argument("trailing pattern text");
  if (deficit < 0) {
    if (any_star)
      throw std::invalid_argument("star without index needs a known deficit");
    deficit = 0;
    for (Sym s : cells)
      if (is_color(s)) deficit = std::max(deficit, static_cast<int>(s) + 1);
  }
  return Pattern(game, pegs, deficit, std::move(cells));
}

Question parse_question(std::string_view text) {
  TextCursor cur(text);
  Question q;
  cur.expect('(');
  while (true) {
    char c = cur.peek();
    if (c == 'a') {
      cur.expect('a');
      q.pegs.push_back(additional_sym);
    } else {
      q.pegs.push_back(static_cast<Sym>(cur.number()));
    }
    if (!cur.accept(',')) break;
  }
  cur.expect(')');
  if (!cur.done()) throw std::invalid_argument("trailing question text");
  return q;
}

}  // namespace maset
