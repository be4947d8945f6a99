#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "maset/answers.hpp"
#include "maset/canon.hpp"
#include "maset/io.hpp"
#include "maset/split.hpp"

namespace maset {

namespace {

// Clause multiset comparison, star indices ignored.
bool same_clauses(const Pattern& a, const Pattern& b) {
  if (a.clause_count() != b.clause_count() || a.pegs() != b.pegs())
    return false;
  std::vector<std::vector<Sym>> ra, rb;
  for (int i = 0; i < a.clause_count(); ++i) {
    ra.emplace_back(a.clause(i).begin(), a.clause(i).end());
    rb.emplace_back(b.clause(i).begin(), b.clause(i).end());
  }
  std::sort(ra.begin(), ra.end());
  std::sort(rb.begin(), rb.end());
  return ra == rb;
}

}  // namespace

std::string emit_listing(const Derivation& derivation) {
  std::unordered_map<CanonicalKey, int> index;
  for (int l = 0; l < static_cast<int>(derivation.queue.size()); ++l)
    index.emplace(canonical_pattern(derivation.queue[static_cast<std::size_t>(l)]), l);

  std::ostringstream os;
  const int P = answer_count(derivation.pegs);
  int pattern = -1;
  for (const Equation& eq : derivation.equations) {
    if (eq.pattern != pattern) {
      pattern = eq.pattern;
      os << "M_{" << derivation.pegs << "," << pattern << "} = "
         << pattern_to_string(derivation.queue[static_cast<std::size_t>(pattern)])
         << "\n";
    }
    os << "  " << question_to_string(eq.question) << "\n";
    auto split = split_pattern(derivation.queue[static_cast<std::size_t>(pattern)],
                               eq.question);
    for (int k = 0; k < P; ++k) {
      const Pattern& raw = split.buckets[static_cast<std::size_t>(k)];
      AnswerPair answer = index_to_answer(k, derivation.pegs);
      os << "    " << answer.black << "," << answer.white << " → "
         << pattern_to_string(raw);
      if (raw.has_star()) {
        Pattern normalized = normalize(raw);
        if (normalized.cells() != raw.cells())
          os << " ⇒ " << pattern_to_string(normalized);
        const Pattern& entry =
            derivation.queue[static_cast<std::size_t>(index.at(
                canonical_pattern(normalized)))];
        if (!same_clauses(entry, normalized))
          os << " ⇛ " << pattern_to_string(entry, normalized.deficit());
      }
      os << "\n";
    }
    os << "    " << equation_to_string(derivation, eq) << "  "
       << equation_id(derivation.game, derivation.pegs, eq.pattern,
                      eq.question_no)
       << "\n";
  }
  return os.str();
}

}  // namespace maset
