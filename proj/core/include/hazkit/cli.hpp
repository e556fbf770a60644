#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "hazkit/circuit.hpp"
#include "hazkit/errors.hpp"

namespace hazkit::cli {

using document = nlohmann::ordered_json;

/// Resolves an input descriptor: `family:...` specs, existing files
/// (.tt as a truth table source, anything else as a netlist), or an
/// inline infix expression. `force_expression` skips the detection and
/// parses the input as an expression outright.
circuit load_circuit(const std::string& input, bool force_expression = false);
truth_table load_function(const std::string& input, bool force_expression = false);

struct check_options {
  std::string method = "all"; // oracle | prime-witness | structural | all
  std::optional<std::string> expect;
  bool expression = false;
  std::size_t max_cubes = 1'000'000;
  std::size_t witness_limit = 16; // per document, not per analysis
};

struct check_result {
  document doc;
  bool expect_matched = true;
};
check_result cmd_check(const std::string& input, const check_options& options = {});

struct synth_options {
  std::string method = "huffman"; // huffman | shannon
  std::optional<int> m;
  std::optional<std::string> output_path;
  std::size_t gate_budget = 2'000'000;
};
document cmd_synth(const std::string& input, const synth_options& options = {});

/// Raw text output in the cube/netlist/table file forms.
std::string cmd_show(const std::string& input, const std::string& what,
                     const std::optional<std::string>& at_a = {},
                     const std::optional<std::string>& at_x = {},
                     bool expression = false);

document cmd_gap(const std::string& family);

struct selftest_result {
  document doc;
  bool all_passed = false;
};
selftest_result cmd_selftest();

document error_document(const error& e);
document error_document(const std::exception& e);

} // namespace hazkit::cli
