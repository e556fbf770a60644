#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "hazkit/cli.hpp"
#include "hazkit/version.hpp"

namespace {

int emit_error(const std::exception& e) {
  if (const auto* he = dynamic_cast<const hazkit::error*>(&e))
    std::cerr << hazkit::cli::error_document(*he).dump(2) << std::endl;
  else
    std::cerr << hazkit::cli::error_document(e).dump(2) << std::endl;
  return 2;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"hazard analysis and hazard-free synthesis for DeMorgan circuits"};
  app.set_version_flag("--version", std::string(hazkit::tool_version));
  app.require_subcommand(1);

  std::string input, method = "all", what = "dnf";
  std::optional<std::string> expect, out_path, at_a, at_x;
  std::optional<int> split_m;
  bool as_expression = false;

  auto* check = app.add_subcommand("check", "detect static logical hazards");
  check->add_option("input", input, "netlist file, family:SPEC, or expression")->required();
  check->add_option("--method", method, "oracle | prime-witness | structural | all")
      ->default_val("all");
  check->add_option("--expect", expect, "hazard-free | 0-hazard | 1-hazard | hazard");
  check->add_flag("--expr", as_expression, "treat the input as an infix expression");

  auto* synth = app.add_subcommand("synth", "build a provably hazard-free circuit");
  synth->add_option("input", input, "function source: .tt file, netlist, family:SPEC")
      ->required();
  std::string synth_method = "huffman";
  synth->add_option("--method", synth_method, "huffman | shannon")->default_val("huffman");
  synth->add_option("--m", split_m, "shannon split parameter (2..4)");
  synth->add_option("-o,--output", out_path, "write the netlist here instead of inline");

  auto* show = app.add_subcommand("show", "print derived objects in text form");
  show->add_option("input", input, "netlist file, family:SPEC, or expression")->required();
  show->add_option("--what", what,
                   "dnf | cnf | primes | implicates | closure | dual | monotone | derivative")
      ->required();
  show->add_option("--at", at_a, "point a for --what derivative (bits, e.g. 110)");
  show->add_option("--dir", at_x, "direction x for --what derivative (bits)");
  show->add_flag("--expr", as_expression, "treat the input as an infix expression");

  auto* gap = app.add_subcommand("gap", "hazard-free vs unrestricted size report");
  gap->add_option("family", input, "family:SPEC")->required();

  app.add_subcommand("selftest", "run the built-in golden example suite");

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) {
      hazkit::cli::check_options options;
      options.method = method;
      options.expect = expect;
      options.expression = as_expression;
      auto result = hazkit::cli::cmd_check(input, options);
      std::cout << result.doc.dump(2) << std::endl;
      return result.expect_matched ? 0 : 1;
    }
    if (synth->parsed()) {
      hazkit::cli::synth_options options;
      options.method = synth_method;
      options.m = split_m;
      options.output_path = out_path;
      std::cout << hazkit::cli::cmd_synth(input, options).dump(2) << std::endl;
      return 0;
    }
    if (show->parsed()) {
      std::cout << hazkit::cli::cmd_show(input, what, at_a, at_x, as_expression);
      return 0;
    }
    if (gap->parsed()) {
      std::cout << hazkit::cli::cmd_gap(input).dump(2) << std::endl;
      return 0;
    }
    // selftest
    auto result = hazkit::cli::cmd_selftest();
    for (const auto& entry : result.doc["checks"])
      std::cerr << (entry["pass"].get<bool>() ? "ok   " : "FAIL ")
                << entry["name"].get<std::string>() << '\n';
    std::cout << result.doc.dump(2) << std::endl;
    return result.all_passed ? 0 : 1;
  } catch (const std::exception& e) {
    return emit_error(e);
  }
}
