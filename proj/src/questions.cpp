#include "maset/questions.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "maset/answers.hpp"
#include "maset/canon.hpp"
#include "maset/split.hpp"

namespace maset {

namespace {

// Enumerates all tuples over `alphabet` in lexicographic order, calling
// `sink` for each tuple that passes the variant filters.
template <typename Sink>
void for_each_candidate(Game game, int pegs, const std::vector<Sym>& alphabet,
                        Sink&& sink) {
  std::vector<int> idx(static_cast<std::size_t>(pegs), 0);
  std::vector<Sym> tuple(static_cast<std::size_t>(pegs), 0);
  while (true) {
    bool ok = true;
    int additional = 0;
    for (int j = 0; j < pegs && ok; ++j) {
      tuple[static_cast<std::size_t>(j)] = alphabet[static_cast<std::size_t>(idx[static_cast<std::size_t>(j)])];
      if (tuple[static_cast<std::size_t>(j)] == additional_sym) ++additional;
      if (game == Game::ab) {
        for (int k = 0; k < j; ++k)
          if (tuple[static_cast<std::size_t>(k)] == tuple[static_cast<std::size_t>(j)]) {
            ok = false;
            break;
          }
      }
    }
    if (ok && additional == pegs) ok = false;  // never all-additional
    if (ok) sink(tuple);
    int j = pegs - 1;
    while (j >= 0 && ++idx[static_cast<std::size_t>(j)] ==
                         static_cast<int>(alphabet.size()))
      idx[static_cast<std::size_t>(j--)] = 0;
    if (j < 0) break;
  }
}

// Fresh colors (>= u) must appear in ascending first-use order.
bool fresh_order_ok(const std::vector<Sym>& tuple, int u) {
  int max_seen = u - 1;
  for (Sym s : tuple) {
    if (!is_color(s)) continue;
    int c = static_cast<int>(s);
    if (c >= u) {
      if (c > max_seen + 1) return false;
      max_seen = std::max(max_seen, c);
    }
  }
  return true;
}

}  // namespace

std::vector<Question> gen_questions(const Pattern& pattern) {
  if (!pattern.is_tight())
    throw std::invalid_argument("gen_questions expects a tight pattern");
  const int u = pattern.explicit_color_count();
  const int p = pattern.pegs();

  std::vector<Sym> alphabet;
  for (int c = 0; c < u + p; ++c) alphabet.push_back(static_cast<Sym>(c));
  alphabet.push_back(additional_sym);

  std::vector<Question> out;
  std::unordered_set<CanonicalKey> seen;
  for_each_candidate(pattern.game(), p, alphabet, [&](const std::vector<Sym>& tuple) {
    if (!fresh_order_ok(tuple, u)) return;
    Question q{tuple};
    if (seen.insert(canonical_with_question(pattern, q)).second)
      out.push_back(std::move(q));
  });
  return out;
}

std::vector<Question> gen_questions_concrete(const Maset& maset) {
  const int p = maset.pegs();
  std::vector<Sym> alphabet;
  for (int c = 0; c < maset.colors(); ++c)
    alphabet.push_back(static_cast<Sym>(c));
  if (maset.additional_allowed()) alphabet.push_back(additional_sym);

  const int whole = answer_index({p, 0}, p);
  std::vector<Question> out;
  std::unordered_set<CanonicalKey> seen;
  for_each_candidate(maset.game(), p, alphabet, [&](const std::vector<Sym>& tuple) {
    Question q{tuple};
    if (!seen.insert(canonical_concrete_with_question(maset, q)).second)
      return;
    auto buckets = split_concrete(maset, q);
    for (int k = 0; k < static_cast<int>(buckets.size()); ++k)
      if (k != whole && buckets[static_cast<std::size_t>(k)].size() == maset.size())
        return;  // does not distinguish any secret
    out.push_back(std::move(q));
  });
  return out;
}

}  // namespace maset
