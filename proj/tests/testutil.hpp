#pragma once

#include <bit>
#include <random>
#include <vector>

#include "hazkit/circuit.hpp"
#include "hazkit/cubes.hpp"
#include "hazkit/truth_table.hpp"

namespace hazkit::testutil {

inline constexpr std::uint32_t default_seed = 0x5eed;

/// Seeded random DAG over literals, occasional constants, and prior
/// gates; output is the last gate (or a random leaf for gate-free draws).
inline circuit random_circuit(std::mt19937& rng, std::size_t max_arity = 6,
                              std::size_t max_gates = 30, bool allow_negation = true) {
  const std::size_t n = 1 + rng() % max_arity;
  circuit_builder b(n);
  std::vector<node_id> pool;
  for (std::uint32_t v = 0; v < n; ++v) {
    pool.push_back(b.add_input(v, false));
    if (allow_negation) pool.push_back(b.add_input(v, true));
  }
  if (rng() % 8 == 0) pool.push_back(b.add_constant(rng() % 2 == 0));

  const std::size_t gates = rng() % (max_gates + 1);
  node_id out = pool[rng() % pool.size()];
  for (std::size_t g = 0; g < gates; ++g) {
    node_id a = pool[rng() % pool.size()];
    node_id c = pool[rng() % pool.size()];
    out = rng() % 2 == 0 ? b.add_and(a, c) : b.add_or(a, c);
    pool.push_back(out);
  }
  return b.build(out);
}

/// Prime implicants by exhaustive cube enumeration: independent of both
/// the merging and the consensus implementations.
inline term_set primes_brute(const truth_table& f) {
  const std::uint32_t full = static_cast<std::uint32_t>(f.size() - 1);
  const std::uint32_t vars = static_cast<std::uint32_t>(f.arity());

  term_set implicants;
  for (std::uint32_t pos = 0; pos <= full; ++pos) {
    for (std::uint32_t neg = 0; neg <= full; ++neg) {
      if (pos & neg) continue;
      term t = (pos | neg) ? term::of_literals(pos, neg) : term::constant(true);
      if (is_implicant(t, f)) implicants.push_back(t);
    }
  }

  term_set primes;
  for (const term& t : implicants) {
    bool prime = true;
    if (!t.is_constant()) {
      for (std::uint32_t v = 0; v < vars && prime; ++v) {
        if ((t.pos >> v) & 1u) {
          term sub = (t.pos ^ (1u << v)) || t.neg
                         ? term::of_literals(t.pos ^ (1u << v), t.neg)
                         : term::constant(true);
          if (is_implicant(sub, f)) prime = false;
        }
        if ((t.neg >> v) & 1u) {
          term sub = t.pos || (t.neg ^ (1u << v))
                         ? term::of_literals(t.pos, t.neg ^ (1u << v))
                         : term::constant(true);
          if (is_implicant(sub, f)) prime = false;
        }
      }
    }
    if (prime) primes.push_back(t);
  }
  canonicalize(primes);
  return primes;
}

inline bool is_permutation_matrix(std::uint32_t a, std::size_t m) {
  for (std::size_t i = 0; i < m; ++i) {
    std::uint32_t row = (a >> (i * m)) & ((1u << m) - 1);
    if (std::popcount(row) != 1) return false;
  }
  for (std::size_t j = 0; j < m; ++j) {
    int ones = 0;
    for (std::size_t i = 0; i < m; ++i) ones += (a >> (i * m + j)) & 1u;
    if (ones != 1) return false;
  }
  return true;
}

/// Edge mask of the complete graph on the vertex subset.
inline std::uint32_t clique_edges(std::uint32_t subset, std::size_t m) {
  std::uint32_t mask = 0;
  std::uint32_t e = 0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j, ++e)
      if (((subset >> i) & 1u) && ((subset >> j) & 1u)) mask |= 1u << e;
  return mask;
}

/// Graph is a complete graph on some k vertices plus isolated vertices.
inline bool is_exact_clique(std::uint32_t edges, std::size_t m, std::size_t k) {
  for (std::uint32_t subset = 0; subset < (1u << m); ++subset) {
    if (static_cast<std::size_t>(std::popcount(subset)) != k) continue;
    if (edges == clique_edges(subset, m)) return true;
  }
  return false;
}

} // namespace hazkit::testutil
