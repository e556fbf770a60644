#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hazkit/errors.hpp"
#include "hazkit/truth_table.hpp"

namespace hazkit {

using node_id = std::uint32_t;

struct literal {
  std::uint32_t var = 0;
  bool negated = false;

  bool operator==(const literal&) const = default;
};

enum class node_kind : std::uint8_t { input, constant, and_gate, or_gate };

/// One node of a fanin-2 DAG. Gate operands always have smaller ids, so
/// node order is a topological order. Negation appears only inside
/// input nodes.
struct node {
  node_kind kind;
  literal lit;       // input nodes
  bool value = false; // constant nodes
  node_id a = 0, b = 0;

  bool operator==(const node&) const = default;
};

struct circuit_stats {
  std::size_t size = 0;   // AND/OR gates only
  std::size_t depth = 0;  // wires on the longest input-to-output path
  std::size_t negated_inputs = 0;
  bool monotone = false;
};

/// Immutable after construction; all operations on circuits are pure.
class circuit {
public:
  circuit() = default;
  circuit(std::size_t arity, std::vector<node> nodes, node_id output,
          std::vector<std::string> input_names = {});

  std::size_t arity() const { return arity_; }
  const std::vector<node>& nodes() const { return nodes_; }
  node_id output() const { return output_; }
  const std::vector<std::string>& input_names() const { return names_; }

  bool operator==(const circuit& other) const {
    return arity_ == other.arity_ && nodes_ == other.nodes_ && output_ == other.output_;
  }

private:
  std::size_t arity_ = 0;
  std::vector<node> nodes_;
  node_id output_ = 0;
  std::vector<std::string> names_;
};

/// Appends nodes in topological order; with hashing enabled, structurally
/// identical nodes are shared (AND/OR operands are order-normalized).
class circuit_builder {
public:
  explicit circuit_builder(std::size_t arity, bool structural_hashing = false,
                           std::vector<std::string> input_names = {});

  node_id add_input(std::uint32_t var, bool negated = false);
  node_id add_constant(bool value);
  node_id add_and(node_id a, node_id b);
  node_id add_or(node_id a, node_id b);

  /// Left-associative AND/OR chain; empty chains yield the neutral constant.
  node_id add_and_chain(const std::vector<node_id>& ids);
  node_id add_or_chain(const std::vector<node_id>& ids);

  /// Copies every node of `sub` into this builder (same arity space) and
  /// returns the id corresponding to sub's output.
  node_id append(const circuit& sub);

  std::size_t size() const { return nodes_.size(); }
  std::size_t arity() const { return arity_; }

  circuit build(node_id output) const;

private:
  node_id push(node n);

  std::size_t arity_;
  bool hashing_;
  std::vector<node> nodes_;
  std::vector<std::string> names_;
  std::unordered_map<std::uint64_t, node_id> dedup_;
};

std::vector<std::string> default_input_names(std::size_t arity);

/// Netlist text form. Grammar: '#' comments; `inputs <name>+` first;
/// `<gid> = AND|OR <operand>{2,}`; `output <operand>` last. `~` is legal
/// only on input names; gates with more than two operands expand
/// left-associatively.
circuit parse_netlist(const std::string& text);
std::string to_netlist(const circuit& c);

/// Infix sugar over the netlist: `&`, `|`, `~` (inputs only), parentheses.
/// Variables are ordered alphabetically.
circuit parse_expression(const std::string& text);

bool eval_boolean(const circuit& c, std::uint32_t assignment);

/// Whole truth table of the computed function, evaluated word-parallel.
truth_table truth_table_of(const circuit& c);

/// AND and OR exchanged, input constants 0 and 1 exchanged, literals
/// unchanged. Involution: dual(dual(c)) == c node for node.
circuit dual(const circuit& c);

/// Every negated input literal replaced by constant 1.
circuit monotone_version(const circuit& c);

/// Folds gates whose operands are constants; off by default everywhere
/// else so produced-set semantics stay exactly syntactic.
circuit propagate_constants(const circuit& c);

circuit_stats stats(const circuit& c);

std::vector<bool> reachable_from_output(const circuit& c);

/// The reachable cone of the output, renumbered.
circuit cone(const circuit& c);

} // namespace hazkit
