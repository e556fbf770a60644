#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hazkit/circuit.hpp"
#include "hazkit/ternary.hpp"
#include "hazkit/truth_table.hpp"

namespace hazkit {

/// AND of literals as a pair of variable masks, or one of the two
/// constant terms. The constant terms carry no literals; in particular
/// the constant-0 term is not a zero-term.
struct term {
  std::uint32_t pos = 0;
  std::uint32_t neg = 0;
  std::optional<bool> constant_value;

  static term constant(bool value) { return term{0, 0, value}; }
  static term single(std::uint32_t var, bool negated) {
    return negated ? term{0, 1u << var, {}} : term{1u << var, 0, {}};
  }
  /// Empty literal sets collapse to the constant-1 term (empty AND).
  static term of_literals(std::uint32_t pos, std::uint32_t neg) {
    if (pos == 0 && neg == 0) return constant(true);
    return term{pos, neg, {}};
  }

  bool is_constant() const { return constant_value.has_value(); }
  bool is_zero_term() const { return !is_constant() && (pos & neg) != 0; }
  std::size_t literal_count() const;

  std::uint64_t key() const;
  bool operator==(const term&) const = default;
  bool operator<(const term& other) const { return key() < other.key(); }
};

/// OR of literals; the dual story. A clause containing a variable and
/// its negation is a one-clause.
struct clause {
  std::uint32_t pos = 0;
  std::uint32_t neg = 0;
  std::optional<bool> constant_value;

  static clause constant(bool value) { return clause{0, 0, value}; }
  static clause single(std::uint32_t var, bool negated) {
    return negated ? clause{0, 1u << var, {}} : clause{1u << var, 0, {}};
  }
  /// Empty literal sets collapse to the constant-0 clause (empty OR).
  static clause of_literals(std::uint32_t pos, std::uint32_t neg) {
    if (pos == 0 && neg == 0) return constant(false);
    return clause{pos, neg, {}};
  }

  bool is_constant() const { return constant_value.has_value(); }
  bool is_one_clause() const { return !is_constant() && (pos & neg) != 0; }
  std::size_t literal_count() const;

  std::uint64_t key() const;
  bool operator==(const clause&) const = default;
  bool operator<(const clause& other) const { return key() < other.key(); }
};

// Canonical cube sets: sorted, no duplicates.
using term_set = std::vector<term>;
using clause_set = std::vector<clause>;

/// Conjunction of two terms: constant 0 absorbs, constant 1 drops out,
/// literal sets merge idempotently (a cube is a set of literals).
term conjoin(const term& a, const term& b);
/// Disjunction of two clauses: constant 1 absorbs, constant 0 drops out.
clause disjoin(const clause& a, const clause& b);

/// Dual cube: same literals; the constant flips because the empty AND
/// is 1 while the empty OR is 0.
clause dual_of(const term& t);
term dual_of(const clause& c);

term positive_factor(const term& t);

bool term_value(const term& t, std::uint32_t assignment);
bool clause_value(const clause& c, std::uint32_t assignment);
tri term_value(const term& t, const tri_vector& input);
tri clause_value(const clause& c, const tri_vector& input);

/// Literal-set intersection across a term and a clause.
bool literals_intersect(const term& t, const clause& c);

/// True iff `inner`'s literals are a subset of `outer`'s (so inner
/// absorbs outer).
bool subsumes(const term& inner, const term& outer);

std::string to_string(const term& t, const std::vector<std::string>& names);
std::string to_string(const clause& c, const std::vector<std::string>& names);

bool set_contains(const term_set& set, const term& t);
bool set_contains(const clause_set& set, const clause& c);
void canonicalize(term_set& set);
void canonicalize(clause_set& set);

struct produce_options {
  std::size_t max_cubes = 1'000'000;
};

/// Syntactic produced-term set of the output gate. Unions at OR gates,
/// pairwise conjunctions at AND gates; no absorption and no
/// annihilation, so zero-terms are kept.
term_set formal_dnf(const circuit& c, const produce_options& options = {});
/// Dual production: unions at AND gates, pairwise disjunctions at OR.
clause_set formal_cnf(const circuit& c, const produce_options& options = {});

/// Cube forms of a ternary vector: the term (clause) over the stable
/// positions whose solution set (zero set) is exactly the subcube.
term witness_term(const tri_vector& v);
clause witness_clause(const tri_vector& v);

/// Witness vector of a cube: stable on the cube's variables, unstable
/// elsewhere.
tri_vector witness_vector(const term& t, std::size_t arity);
tri_vector witness_vector(const clause& c, std::size_t arity);

bool is_implicant(const term& t, const truth_table& f);
bool is_implicate(const clause& c, const truth_table& f);

/// All prime implicants, by iterated minterm merging. f == 0 gives the
/// empty set; f == 1 gives the constant-1 term.
term_set prime_implicants_qmc(const truth_table& f);

/// Blake canonical form by consensus + absorption. Zero-terms in the
/// input denote empty cubes and are dropped first. Agrees with
/// prime_implicants_qmc on the represented function.
term_set prime_implicants_consensus(const term_set& dnf);

/// Prime implicates, as duals of the prime implicants of the dual
/// function.
clause_set prime_implicates(const truth_table& f);

tri dnf_value(const term_set& dnf, const tri_vector& input);
tri cnf_value(const clause_set& cnf, const tri_vector& input);

} // namespace hazkit
