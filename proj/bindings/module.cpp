// pymaset._core -- bindings for the main operations

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "maset/answers.hpp"
#include "maset/equations.hpp"
#include "maset/io.hpp"
#include "maset/solver.hpp"
#include "maset/verify.hpp"

namespace py = pybind11;
using namespace maset;

namespace {

std::vector<std::string> pattern_strings(const Derivation& d) {
  std::vector<std::string> out;
  out.reserve(d.queue.size());
  for (const Pattern& p : d.queue) out.push_back(pattern_to_string(p));
  return out;
}

std::vector<std::vector<std::optional<std::int64_t>>> eval_table(
    const Derivation& d, int n_max) {
  Oracle oracle;
  auto values = eval_system(d, n_max, oracle_base(d, max_shift(d), oracle));
  std::vector<std::vector<std::optional<std::int64_t>>> out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::int64_t v : values[i])
      out[i].push_back(v == undefined_value
                           ? std::nullopt
                           : std::optional<std::int64_t>(v));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact expected-case analysis of Mastermind and AB games";

  py::class_<Derivation>(m, "Derivation")
      .def_property_readonly(
          "game", [](const Derivation& d) { return game_name(d.game); })
      .def_property_readonly("pegs",
                             [](const Derivation& d) { return d.pegs; })
      .def_property_readonly(
          "pattern_count",
          [](const Derivation& d) { return d.queue.size(); })
      .def_property_readonly(
          "equation_count",
          [](const Derivation& d) { return d.equations.size(); })
      .def_property_readonly("patterns", &pattern_strings)
      .def("listing", &emit_listing)
      .def("document", &emit_document)
      .def("eval_table", &eval_table, py::arg("n_max"),
           "A_i(n) for every queue pattern, n in [0, n_max]; None for "
           "cells no equation defines")
      .def("__repr__", [](const Derivation& d) {
        return "<Derivation " + std::string(game_name(d.game)) + " p=" +
               std::to_string(d.pegs) + ": " + std::to_string(d.queue.size()) +
               " patterns, " + std::to_string(d.equations.size()) +
               " equations>";
      });

  m.def(
      "derive",
      [](const std::string& game, int pegs) {
        return derive(parse_game(game), pegs);
      },
      py::arg("game"), py::arg("pegs"),
      "Generate the pattern queue and recurrence system for a game");

  m.def("parse_document",
        [](const std::string& bytes) { return parse_document(bytes); },
        py::arg("text"));

  m.def(
      "solve",
      [](const std::string& game, int pegs, int colors, bool additional) {
        Maset maset = Maset::full(parse_game(game), pegs, colors, additional);
        Oracle oracle;
        return py::make_tuple(oracle.solve(maset), maset.size());
      },
      py::arg("game"), py::arg("pegs"), py::arg("colors"),
      py::arg("additional") = true,
      "Optimal external path length and secret count of the full game");

  m.def(
      "expected_raw",
      [](const std::string& game, int pegs, int colors, bool additional) {
        Rational r = expected_questions(
            Maset::full(parse_game(game), pegs, colors, additional));
        return py::make_tuple(r.num, r.den);
      },
      py::arg("game"), py::arg("pegs"), py::arg("colors"),
      py::arg("additional") = true);

  m.def(
      "closed_form_raw",
      [](const std::string& game, int colors) {
        Rational r = parse_game(game) == Game::mm ? closed_form_mm(colors)
                                                  : closed_form_ab(colors);
        return py::make_tuple(r.num, r.den);
      },
      py::arg("game"), py::arg("colors"));

  m.def("answer_count", &answer_count, py::arg("pegs"));
  m.def(
      "answer_index",
      [](int black, int white, int pegs) {
        return answer_index({black, white}, pegs);
      },
      py::arg("black"), py::arg("white"), py::arg("pegs"));
  m.def(
      "index_to_answer",
      [](int index, int pegs) {
        AnswerPair a = index_to_answer(index, pegs);
        return py::make_tuple(a.black, a.white);
      },
      py::arg("index"), py::arg("pegs"));

  m.def(
      "run_verify",
      [](const std::string& suite, bool slow) {
        SuiteResult r = run_suite(suite, slow);
        return py::make_tuple(r.ok, r.report);
      },
      py::arg("suite"), py::arg("slow") = false,
      "Run a verification suite; returns (ok, report)");
}
