#include "maset/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "maset/equations.hpp"
#include "maset/io.hpp"
#include "maset/solver.hpp"
#include "maset/verify.hpp"

namespace maset {

namespace {

std::pair<int, int> parse_color_range(const std::string& text) {
  auto sep = text.find("..");
  if (sep == std::string::npos) {
    int n = std::stoi(text);
    return {n, n};
  }
  int lo = std::stoi(text.substr(0, sep));
  int hi = std::stoi(text.substr(sep + 2));
  if (lo > hi) throw CLI::ValidationError("--colors", "empty color range");
  return {lo, hi};
}

int cmd_derive(const std::string& game_name, int pegs, const std::string& out,
               const std::string& format) {
  Derivation d = derive(parse_game(game_name), pegs);
  std::string text = format == "listing" ? emit_listing(d) : emit_document(d);
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream file(out, std::ios::binary);
    if (!file) {
      std::cerr << "cannot open " << out << " for writing\n";
      return 1;
    }
    file << text;
  }
  return 0;
}

int cmd_solve(const std::string& game_name, int pegs, int colors,
              bool no_additional) {
  Game game = parse_game(game_name);
  Maset maset = Maset::full(game, pegs, colors, !no_additional);
  Oracle oracle;
  std::int64_t length = oracle.solve(maset);
  std::cout << "L=" << length << " N=" << maset.size() << " expected=";
  if (maset.is_empty())
    std::cout << "-";
  else
    std::cout << Rational(length, maset.size()).to_string();
  std::cout << "\n";
  return 0;
}

int cmd_eval(const std::string& in, const std::string& range_text) {
  std::ifstream file(in, std::ios::binary);
  if (!file) {
    std::cerr << "cannot open " << in << "\n";
    return 1;
  }
  std::stringstream buffer;
  buffer << file.rdbuf();
  Derivation d = parse_document(buffer.str());

  auto [lo, hi] = parse_color_range(range_text);
  Oracle oracle;
  auto values = eval_system(d, hi, oracle_base(d, max_shift(d), oracle));

  std::cout << "n";
  for (std::size_t i = 0; i < d.queue.size(); ++i) std::cout << " A_" << i;
  std::cout << "\n";
  for (int n = std::max(0, lo); n <= hi; ++n) {
    std::cout << n;
    for (std::size_t i = 0; i < d.queue.size(); ++i) {
      std::int64_t v = values[i][static_cast<std::size_t>(n)];
      if (v == undefined_value)
        std::cout << " -";
      else
        std::cout << " " << v;
    }
    std::cout << "\n";
  }
  return 0;
}

int cmd_verify(const std::string& suite, bool slow) {
  SuiteResult result = run_suite(suite, slow);
  std::cout << result.report;
  std::cout << "suite " << suite << ": " << (result.ok ? "PASS" : "FAIL")
            << "\n";
  return result.ok ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"Expected-case analysis of Mastermind and AB games"};
  app.require_subcommand(1);

  std::string game = "mm";
  int pegs = 2;
  int colors = 0;
  std::string out_file;
  std::string format = "doc";
  std::string in_file;
  std::string color_range;
  std::string suite;
  bool no_additional = false;
  bool slow = false;

  auto* derive_cmd = app.add_subcommand(
      "derive", "Generate the pattern queue and recurrence system");
  derive_cmd->add_option("--game", game, "mm or ab")->required();
  derive_cmd->add_option("--pegs", pegs, "number of pegs")->required();
  derive_cmd->add_option("--out", out_file, "output file (default stdout)");
  derive_cmd->add_option("--format", format, "doc or listing")
      ->check(CLI::IsMember({"doc", "listing"}));

  auto* solve_cmd = app.add_subcommand(
      "solve", "Optimal external path length of a full game");
  solve_cmd->add_option("--game", game, "mm or ab")->required();
  solve_cmd->add_option("--pegs", pegs, "number of pegs")->required();
  solve_cmd->add_option("--colors", colors, "number of colors")->required();
  solve_cmd->add_flag("--no-additional", no_additional,
                      "forbid the question-only additional color");

  auto* eval_cmd = app.add_subcommand(
      "eval", "Evaluate a derivation document over a color range");
  eval_cmd->add_option("--in", in_file, "derivation document")->required();
  eval_cmd->add_option("--colors", color_range, "range A..B or single value")
      ->required();

  auto* verify_cmd =
      app.add_subcommand("verify", "Run a verification suite");
  verify_cmd
      ->add_option("--suite", suite,
                   "p1, mm2, ab2, formulas, fixpoint or counts3")
      ->required();
  verify_cmd->add_flag("--slow", slow, "allow slow suites");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (derive_cmd->parsed()) return cmd_derive(game, pegs, out_file, format);
    if (solve_cmd->parsed())
      return cmd_solve(game, pegs, colors, no_additional);
    if (eval_cmd->parsed()) return cmd_eval(in_file, color_range);
    if (verify_cmd->parsed()) return cmd_verify(suite, slow);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace maset
