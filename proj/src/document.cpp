#include <json.hpp>

#include "maset/answers.hpp"
#include "maset/canon.hpp"
#include "maset/io.hpp"
#include "maset/split.hpp"

#include <unordered_map>

namespace maset {

namespace {

using json = nlohmann::ordered_json;

constexpr int schema_version = 1;

json clauses_to_json(const Pattern& pattern) {
  json rows = json::array();
  for (int i = 0; i < pattern.clause_count(); ++i) {
    json row = json::array();
    for (Sym s : pattern.clause(i))
      row.push_back(s == star_sym ? std::string("*")
                                  : std::to_string(static_cast<int>(s)));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<Sym> clauses_from_json(const json& rows, int pegs) {
  std::vector<Sym> cells;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != pegs)
      throw std::runtime_error("document clause width mismatch");
    for (const auto& item : row) {
      std::string s = item.template get<std::string>();
      if (s == "*")
        cells.push_back(star_sym);
      else
        cells.push_back(static_cast<Sym>(std::stoi(s)));
    }
  }
  return cells;
}

json question_to_json(const Question& q) {
  json row = json::array();
  for (Sym s : q.pegs)
    row.push_back(s == additional_sym ? std::string("a")
                                      : std::to_string(static_cast<int>(s)));
  return row;
}

Question question_from_json(const json& row) {
  Question q;
  for (const auto& item : row) {
    std::string s = item.template get<std::string>();
    q.pegs.push_back(s == "a" ? additional_sym
                              : static_cast<Sym>(std::stoi(s)));
  }
  return q;
}

int question_no_from_id(const std::string& id) {
  auto dot = id.rfind('.');
  auto close = id.rfind(')');
  if (dot == std::string::npos || close == std::string::npos || close <= dot)
    throw std::runtime_error("malformed equation id: " + id);
  return std::stoi(id.substr(dot + 1, close - dot - 1));
}

}  // namespace

std::string emit_document(const Derivation& derivation) {
  std::unordered_map<CanonicalKey, int> index;
  for (int l = 0; l < static_cast<int>(derivation.queue.size()); ++l)
    index.emplace(canonical_pattern(derivation.queue[static_cast<std::size_t>(l)]), l);

  json doc;
  doc["schema"] = schema_version;
  doc["game"] = game_name(derivation.game);
  doc["pegs"] = derivation.pegs;

  json patterns = json::array();
  for (int i = 0; i < static_cast<int>(derivation.queue.size()); ++i) {
    const Pattern& pattern = derivation.queue[static_cast<std::size_t>(i)];
    json entry;
    entry["index"] = i;
    entry["deficit"] = pattern.deficit();
    entry["clauses"] = clauses_to_json(pattern);
    patterns.push_back(std::move(entry));
  }
  doc["patterns"] = std::move(patterns);

  json equations = json::array();
  for (const Equation& eq : derivation.equations) {
    json entry;
    entry["id"] = equation_id(derivation.game, derivation.pegs, eq.pattern,
                              eq.question_no);
    entry["pattern"] = eq.pattern;
    entry["question"] = question_to_json(eq.question);

    auto split = split_pattern(
        derivation.queue[static_cast<std::size_t>(eq.pattern)], eq.question);
    json answers = json::array();
    for (int k = 0; k < static_cast<int>(split.buckets.size()); ++k) {
      const Pattern& raw = split.buckets[static_cast<std::size_t>(k)];
      AnswerPair a = index_to_answer(k, derivation.pegs);
      json step;
      step["answer"] = json::array({a.black, a.white});
      step["raw"] = clauses_to_json(raw);
      if (raw.has_star()) {
        Pattern normalized = normalize(raw);
        step["normalized"] = normalized.cells() == raw.cells()
                                 ? json(nullptr)
                                 : clauses_to_json(normalized);
        step["queue"] = index.at(canonical_pattern(normalized));
      } else {
        step["normalized"] = nullptr;
        step["queue"] = nullptr;
      }
      answers.push_back(std::move(step));
    }
    entry["answers"] = std::move(answers);

    json terms = json::array();
    for (const Term& term : eq.terms)
      terms.push_back(json::array({term.pattern, term.shift}));
    entry["terms"] = std::move(terms);
    entry["w"] = eq.w.coefficients();
    entry["valid_from"] = eq.valid_from;
    equations.push_back(std::move(entry));
  }
  doc["equations"] = std::move(equations);
  return doc.dump(2) + "\n";
}

Derivation parse_document(std::string_view bytes) {
  json doc;
  try {
    doc = json::parse(bytes);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error(std::string("document parse error: ") + e.what());
  }
  try {
    if (doc.at("schema").template get<int>() != schema_version)
      throw std::runtime_error("unsupported document schema");
    Derivation out;
    out.game = parse_game(doc.at("game").template get<std::string>());
    out.pegs = doc.at("pegs").template get<int>();
    for (const auto& entry : doc.at("patterns")) {
      int deficit = entry.at("deficit").template get<int>();
      out.queue.emplace_back(out.game, out.pegs, deficit,
                             clauses_from_json(entry.at("clauses"), out.pegs));
    }
    for (const auto& entry : doc.at("equations")) {
      Equation eq;
      eq.pattern = entry.at("pattern").template get<int>();
      eq.question_no =
          question_no_from_id(entry.at("id").template get<std::string>());
      eq.question = question_from_json(entry.at("question"));
      for (const auto& term : entry.at("terms"))
        eq.terms.push_back({term.at(0).template get<std::int32_t>(),
                            term.at(1).template get<std::int32_t>()});
      eq.w = Polynomial(
          entry.at("w").template get<std::vector<std::int64_t>>());
      eq.valid_from = entry.at("valid_from").template get<int>();
      out.equations.push_back(std::move(eq));
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("document structure error: ") +
                             e.what());
  }
}

}  // namespace maset
