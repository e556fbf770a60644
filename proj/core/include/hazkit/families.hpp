#pragma once

#include <optional>
#include <string>

#include "hazkit/circuit.hpp"
#include "hazkit/synthesis.hpp"

namespace hazkit {

enum class pm_variant { formula, counting };

/// Addressable benchmark functions: family:multiplexer, family:parity:4,
/// family:exact_k:4:2, family:exact_pm:3:formula, family:exact_clique:4:2.
struct family_spec {
  std::string name;
  std::size_t n = 0; // parity
  std::size_t m = 0; // exact_k / exact_pm / exact_clique
  std::size_t k = 0; // exact_k / exact_clique
  pm_variant variant = pm_variant::formula;

  static family_spec parse(const std::string& text);
  std::string to_string() const;
};

circuit mk_multiplexer();

/// Balanced tree of dual-rail XOR blocks; negations only at inputs.
circuit mk_parity(std::size_t n);

/// Accepts inputs with exactly k ones: a binary popcount counter built
/// from dual-rail adders, then an equality comparator against k.
circuit mk_exact_k(std::size_t m, std::size_t k);

/// Accepts exactly the m! permutation matrices, variables row-major.
/// `formula` is the flat row/column product; `counting` composes
/// exact-1 tests per row and per column.
circuit mk_exact_pm(std::size_t m, pm_variant variant);

/// Accepts graphs that are a k-clique plus isolated vertices, edge
/// variables in lexicographic order. For k >= 2 this tests for exactly
/// k vertices of degree k-1 and k(k-1)/2 edges; a 1-clique is the empty
/// graph, so k = 1 degenerates to the all-edges-absent test.
circuit mk_exact_clique(std::size_t m, std::size_t k);

circuit make_family(const family_spec& spec);

struct gap_report_data {
  family_spec spec;
  std::size_t arity = 0;
  circuit_stats unrestricted;
  circuit_stats huffman;
  std::size_t huffman_prime_implicants = 0;
  std::size_t huffman_literals = 0;
  std::optional<circuit_stats> shannon;
  std::optional<shannon_metadata> shannon_meta;
  std::size_t closure_prime_implicants = 0;
  std::string verification; // "exhaustive" or "sampled"
};

/// Builds the unrestricted circuit and its hazard-free counterparts,
/// verifies they compute the same function, and reports the sizes.
gap_report_data gap_report(const family_spec& spec);

} // namespace hazkit
