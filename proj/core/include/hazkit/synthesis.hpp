#pragma once

#include <optional>
#include <unordered_map>

#include "hazkit/circuit.hpp"
#include "hazkit/cubes.hpp"
#include "hazkit/truth_table.hpp"

namespace hazkit {

struct synthesis_options {
  std::size_t gate_budget = 2'000'000;
};

/// Two-level OR-of-ANDs over exactly the prime implicants; hazard-free
/// for every function. Constant functions yield constant circuits.
circuit huffman_dnf(const truth_table& f, const synthesis_options& options = {});

/// F = ~xn*F0 | xn*F1 | F0*F1 with F0 and F1 shared; preserves
/// hazard-freeness of the operands. `xn` is the 0-based index of the new
/// variable and must equal the operands' arity.
circuit consensus_combine(const circuit& f0, const circuit& f1, std::uint32_t xn);

/// Shared fragment simultaneously computing every function of m
/// variables, each output hazard-free, at most 5 * 2^(2^m) gates.
/// Function tables are keyed little-endian in at most 16 bits.
struct universal_block {
  int m = 0;
  circuit nodes; // output field points at the last tap; use at()
  std::unordered_map<std::uint16_t, node_id> index;

  /// Cone of the output computing the given function table.
  circuit at(std::uint16_t table) const;
  std::size_t gate_count() const { return stats(nodes).size; }
};

universal_block build_universal_block(int m);

struct shannon_metadata {
  int m = 0;
  int m_alternate = 0; // the other rounding candidate for the split
  std::size_t universal_gates = 0;
  std::size_t combiner_gates = 0;
  std::size_t distinct_leaf_subfunctions = 0;
  std::size_t shared_subfunction_hits = 0;
  std::size_t gate_bound = 0; // 5 * (2^(2^m) + 2^(n-m))
};

/// Universal block plus a consensus-combiner tree over the remaining
/// n-m variables; subfunctions are deduplicated by truth table. The
/// result computes f, is hazard-free, and stays within
/// 5 * (2^(2^m) + 2^(n-m)) gates.
circuit synthesize_shannon(const truth_table& f, std::optional<int> m = {},
                           shannon_metadata* metadata = nullptr);

} // namespace hazkit
