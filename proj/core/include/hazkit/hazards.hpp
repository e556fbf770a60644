#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hazkit/circuit.hpp"
#include "hazkit/cubes.hpp"
#include "hazkit/eval.hpp"
#include "hazkit/ternary.hpp"

namespace hazkit {

enum class detect_method { oracle, prime_witness, structural };

const char* method_name(detect_method m);

struct hazard_witness {
  bool polarity; // true: 1-hazard, false: 0-hazard
  tri_vector at;
  int condition = 1;                      // which equivalent condition was established
  std::optional<std::string> missing_cube; // structural detector only

  bool operator<(const hazard_witness& other) const {
    if (at.entries() != other.at.entries()) return at < other.at;
    return polarity < other.polarity;
  }
};

/// Verdict per polarity with witnesses sorted lexicographically
/// (0 < u < 1 per position); the first witness is canonical.
struct hazard_report {
  bool has_0_hazard = false;
  bool has_1_hazard = false;
  std::vector<hazard_witness> witnesses;
  detect_method method = detect_method::oracle;

  bool hazard_free() const { return !has_0_hazard && !has_1_hazard; }
  std::string verdict() const;
};

/// Polarity of a hazard of `c` at `v`, if any: the computed function is
/// constant on the subcube while the circuit output is unstable.
std::optional<bool> hazard_at(const circuit& c, const truth_table& f, const tri_vector& v);

/// Exhaustive scan of {0,u,1}^n (arity <= 12). Exact.
hazard_report detect_oracle(const circuit& c);

/// Checks the circuit only at prime witnesses of the computed function;
/// same verdict as the oracle.
hazard_report detect_prime_witness(const circuit& c);

/// Compares produced sets against the prime implicants and implicates:
/// a missing prime cube is exactly a hazard, and its u-pattern is the
/// witness.
hazard_report detect_structural(const circuit& c, const produce_options& options = {});

/// Both produced sets of the output cone.
struct produced_sets {
  term_set dnf;
  clause_set cnf;
};
produced_sets produce_both(const circuit& c, const produce_options& options = {});

/// The five equivalent characterizations of a 1-hazard at a prime
/// 1-witness; the result is all of {1..5} or empty, never a proper
/// nonempty subset.
std::set<int> check_thm5_conditions(const circuit& c, const tri_vector& alpha);
std::set<int> thm5_conditions(const circuit& c, const produced_sets& p, const term_set& primes,
                              const tri_vector& alpha);

/// Dual story for 0-hazards at prime 0-witnesses.
std::set<int> check_thm6_conditions(const circuit& c, const tri_vector& alpha);
std::set<int> thm6_conditions(const circuit& c, const produced_sets& p,
                              const clause_set& implicates, const tri_vector& alpha);

/// A produced zero-term whose positive factor is not an implicant of the
/// upwards closure certifies a 0-hazard; absence of such a certificate
/// proves nothing.
std::optional<term> check_cor34(const circuit& c, const produce_options& options = {});

/// No 0-hazards implies the monotone version computes the upwards
/// closure. Returns whether the implication holds (always true).
bool verify_thm1(const circuit& c);

/// The monotone version computes the upwards closure iff the positive
/// factor of every produced zero-term is an implicant of it. Returns
/// whether the biconditional holds (always true).
bool verify_thm2(const circuit& c, const produce_options& options = {});

} // namespace hazkit
