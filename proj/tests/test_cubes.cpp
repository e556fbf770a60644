#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hazkit/cubes.hpp"
#include "hazkit/eval.hpp"
#include "hazkit/selftest.hpp"
#include "testutil.hpp"

using namespace hazkit;

namespace {
const std::vector<std::string> xyz = {"x", "y", "z"};
}

TEST_CASE("cube algebra around the constants") {
  term x = term::single(0, false);
  term nx = term::single(0, true);
  term zero = term::constant(false);
  term one = term::constant(true);

  CHECK(conjoin(x, one) == x);          // conjunction with 1 drops the 1
  CHECK(conjoin(x, zero) == zero);      // conjunction with 0 is the constant-0 term
  CHECK(conjoin(x, x) == x);            // idempotent within a cube
  CHECK(conjoin(x, nx).is_zero_term());
  CHECK_FALSE(zero.is_zero_term());     // 0 is a constant term, not a zero-term
  CHECK_FALSE(one.is_zero_term());
  CHECK(term::of_literals(0, 0) == one);

  clause cx = clause::single(0, false);
  clause cnx = clause::single(0, true);
  CHECK(disjoin(cx, clause::constant(false)) == cx);
  CHECK(disjoin(cx, clause::constant(true)) == clause::constant(true));
  CHECK(disjoin(cx, cnx).is_one_clause());
  CHECK(clause::of_literals(0, 0) == clause::constant(false));
}

TEST_CASE("duals exchange the cube kinds and flip constants") {
  term t = term::of_literals(0b001, 0b100); // x~z
  clause c = dual_of(t);
  CHECK(c.pos == t.pos);
  CHECK(c.neg == t.neg);
  CHECK(dual_of(c) == t);
  CHECK(dual_of(term::constant(true)) == clause::constant(false));
  CHECK(dual_of(clause::constant(true)) == term::constant(false));
}

TEST_CASE("positive factor clears negations") {
  CHECK(positive_factor(term::of_literals(0b101, 0b010)) == term::of_literals(0b101, 0));
  CHECK(positive_factor(term::single(0, true)) == term::constant(true));
  CHECK(positive_factor(term::of_literals(0b011, 0b001)) == term::of_literals(0b011, 0));
  CHECK(positive_factor(term::constant(false)) == term::constant(false));
}

TEST_CASE("witness cubes of a ternary vector") {
  tri_vector v = tri_vector::parse("1u0u");
  term t = witness_term(v);
  CHECK(t == term::of_literals(0b0001, 0b0100)); // x1 ~x3
  CHECK(to_string(t, default_input_names(4)) == "x1~x3");
  clause c = witness_clause(v);
  CHECK(c == clause::of_literals(0b0100, 0b0001)); // ~x1 | x3
  CHECK(to_string(c, default_input_names(4)) == "~x1|x3");

  CHECK(witness_term(tri_vector::parse("uu")) == term::constant(true));
  CHECK(witness_clause(tri_vector::parse("uu")) == clause::constant(false));
  CHECK(witness_term(tri_vector::parse("01")) == term::of_literals(0b10, 0b01));

  CHECK(term_value(t, v) == tri::one);
  CHECK(clause_value(c, v) == tri::zero);
}

TEST_CASE("witness cubes carve out exactly the subcube") {
  std::mt19937 rng(3);
  for (int round = 0; round < 20; ++round) {
    std::size_t n = 1 + rng() % 4;
    for_each_ternary(n, 0, ternary_space_size(n), [&](const tri_vector& v) {
      term t = witness_term(v);
      clause c = witness_clause(v);
      auto inside = resolutions(v);
      for (std::uint32_t a = 0; a < (1u << n); ++a) {
        bool in_cube = std::find(inside.begin(), inside.end(), a) != inside.end();
        CHECK(term_value(t, a) == in_cube);
        CHECK(clause_value(c, a) == !in_cube);
      }
    });
    tri_vector back = witness_vector(witness_term(tri_vector::parse("1u0")), 3);
    CHECK(back.to_string() == "1u0");
  }
}

TEST_CASE("formal production on the worked circuits") {
  circuit h = parse_netlist(goldens::multiplexer_pos);
  term_set dnf = formal_dnf(h);
  REQUIRE(dnf.size() == 4);
  CHECK(set_contains(dnf, term::of_literals(0b011, 0)));     // xy
  CHECK(set_contains(dnf, term::of_literals(0b101, 0)));     // xz
  CHECK(set_contains(dnf, term::of_literals(0b010, 0b100))); // y~z
  CHECK(set_contains(dnf, term::of_literals(0b100, 0b100))); // z~z
  std::size_t zero_terms = 0;
  for (const term& t : dnf) zero_terms += t.is_zero_term();
  CHECK(zero_terms == 1);

  circuit lit = parse_netlist("inputs x\noutput x\n");
  CHECK(formal_dnf(lit) == term_set{term::single(0, false)});
  CHECK(formal_cnf(lit) == clause_set{clause::single(0, false)});

  // Idempotent literal merge inside a cube: (y|z) | z stays a set.
  circuit f = parse_netlist(goldens::multiplexer_free);
  clause_set cnf = formal_cnf(f);
  CHECK(set_contains(cnf, clause::of_literals(0b110, 0)));     // y|z
  CHECK(set_contains(cnf, clause::of_literals(0b110, 0b100))); // y|z|~z
}

TEST_CASE("produced DNF and CNF compute the circuit's ternary function") {
  std::mt19937 rng(17);
  for (int i = 0; i < 25; ++i) {
    circuit c = testutil::random_circuit(rng, 4, 14);
    term_set dnf = formal_dnf(c);
    clause_set cnf = formal_cnf(c);
    for_each_ternary(c.arity(), 0, ternary_space_size(c.arity()), [&](const tri_vector& v) {
      tri expected = eval_ternary(c, v);
      CHECK(dnf_value(dnf, v) == expected);
      CHECK(cnf_value(cnf, v) == expected);
    });
  }
}

TEST_CASE("produced cubes are sound for the computed function") {
  std::mt19937 rng(19);
  for (int i = 0; i < 40; ++i) {
    circuit c = testutil::random_circuit(rng, 5, 18);
    truth_table f = truth_table_of(c);
    for (const term& t : formal_dnf(c))
      if (!t.is_zero_term()) CHECK(is_implicant(t, f));
    for (const clause& cl : formal_cnf(c))
      if (!cl.is_one_clause()) CHECK(is_implicate(cl, f));
  }
}

TEST_CASE("monotone circuits never produce contradictory cubes") {
  std::mt19937 rng(29);
  for (int i = 0; i < 40; ++i) {
    circuit c = testutil::random_circuit(rng, 5, 18, /*allow_negation=*/false);
    for (const term& t : formal_dnf(c)) CHECK_FALSE(t.is_zero_term());
    for (const clause& cl : formal_cnf(c)) CHECK_FALSE(cl.is_one_clause());
  }
}

TEST_CASE("produced clauses of a circuit are produced terms of its dual") {
  std::mt19937 rng(31);
  for (int i = 0; i < 40; ++i) {
    circuit c = testutil::random_circuit(rng, 5, 16);
    clause_set cnf = formal_cnf(c);
    term_set dual_terms = formal_dnf(dual(c));
    term_set mapped;
    for (const clause& cl : cnf) mapped.push_back(dual_of(cl));
    canonicalize(mapped);
    CHECK(mapped == dual_terms);
  }
}

TEST_CASE("the produced-set cap raises instead of truncating") {
  // Parity DNFs double per level; a tiny cap must trip.
  circuit c = parse_expression("((a&~b)|(~a&b)) & ((c&~d)|(~c&d))");
  produce_options options;
  options.max_cubes = 3;
  CHECK_THROWS_AS((void)formal_dnf(c, options), error);
}

TEST_CASE("implicant and implicate checks") {
  circuit mux = parse_netlist(goldens::multiplexer);
  truth_table f = truth_table_of(mux);
  CHECK(is_implicant(term::of_literals(0b101, 0), f));           // xz
  CHECK(is_implicate(clause::of_literals(0b011, 0), f));         // x|y
  CHECK_FALSE(is_implicant(term::constant(true), f));            // f is not constant 1
  CHECK(is_implicant(term::constant(true), truth_table::constant(2, true)));
  CHECK_THROWS_AS((void)is_implicant(term::of_literals(1, 1), f), error);
  CHECK_THROWS_AS((void)is_implicate(clause::of_literals(1, 1), f), error);
}

TEST_CASE("prime implicants of the worked functions") {
  circuit mux = parse_netlist(goldens::multiplexer);
  term_set primes = prime_implicants_qmc(truth_table_of(mux));
  term_set expected{term::of_literals(0b011, 0), term::of_literals(0b101, 0),
                    term::of_literals(0b010, 0b100)};
  canonicalize(expected);
  CHECK(primes == expected);

  // xy | x~yz: x~yz is an implicant but not prime; xz is.
  truth_table g = truth_table_of(parse_expression("(x&y) | (x & ~y & z)"));
  term_set gp = prime_implicants_qmc(g);
  term_set gexp{term::of_literals(0b011, 0), term::of_literals(0b101, 0)};
  canonicalize(gexp);
  CHECK(gp == gexp);

  // Two-variable equality: both minterms are prime.
  truth_table eq = truth_table_of(parse_expression("(x&y) | (~x&~y)"));
  term_set eqp = prime_implicants_qmc(eq);
  term_set eqexp{term::of_literals(0b11, 0), term::of_literals(0, 0b11)};
  canonicalize(eqexp);
  CHECK(eqp == eqexp);

  CHECK(prime_implicants_qmc(truth_table::constant(3, false)).empty());
  CHECK(prime_implicants_qmc(truth_table::constant(3, true)) ==
        term_set{term::constant(true)});
}

TEST_CASE("merging, consensus, and brute enumeration agree") {
  for (std::uint32_t bits = 0; bits < 16; ++bits) {
    truth_table f(2);
    for (std::uint32_t a = 0; a < 4; ++a) f.set(a, (bits >> a) & 1u);
    CHECK(prime_implicants_qmc(f) == testutil::primes_brute(f));
  }
  for (std::uint32_t bits = 0; bits < 256; ++bits) {
    truth_table f(3);
    for (std::uint32_t a = 0; a < 8; ++a) f.set(a, (bits >> a) & 1u);
    CHECK(prime_implicants_qmc(f) == testutil::primes_brute(f));
  }
  std::mt19937 rng(41);
  for (int i = 0; i < 25; ++i) {
    truth_table f = truth_table::random(4 + i % 2, rng);
    CHECK(prime_implicants_qmc(f) == testutil::primes_brute(f));
  }
}

TEST_CASE("consensus closure reproduces the prime implicants") {
  // {xz, y~z} closes with the consensus xy.
  term_set start{term::of_literals(0b101, 0), term::of_literals(0b010, 0b100)};
  canonicalize(start);
  term_set closed = prime_implicants_consensus(start);
  circuit mux = parse_netlist(goldens::multiplexer);
  CHECK(closed == prime_implicants_qmc(truth_table_of(mux)));

  CHECK(prime_implicants_consensus({term::single(0, false)}) ==
        term_set{term::single(0, false)});

  term_set absorb{term::of_literals(0b011, 0), term::of_literals(0b101, 0b010)};
  canonicalize(absorb); // {xy, x~yz}
  truth_table g = truth_table_of(parse_expression("(x&y) | (x & ~y & z)"));
  CHECK(prime_implicants_consensus(absorb) == prime_implicants_qmc(g));

  // x | ~x covers everything.
  term_set tauto{term::single(0, false), term::single(0, true)};
  canonicalize(tauto);
  CHECK(prime_implicants_consensus(tauto) == term_set{term::constant(true)});

  // Zero-terms denote empty cubes and drop out first.
  term_set with_zero{term::of_literals(0b101, 0), term::of_literals(0b010, 0b100),
                     term::of_literals(0b100, 0b100)};
  canonicalize(with_zero);
  CHECK(prime_implicants_consensus(with_zero) ==
        prime_implicants_qmc(truth_table_of(mux)));
}

TEST_CASE("consensus equals merging on random functions") {
  std::mt19937 rng(43);
  for (int i = 0; i < 200; ++i) {
    std::size_t n = 2 + rng() % 4; // up to 5 variables
    truth_table f = truth_table::random(n, rng);
    // Feed the consensus the minterm DNF of f.
    term_set minterms;
    const std::uint32_t full = static_cast<std::uint32_t>(f.size() - 1);
    for (std::uint32_t a = 0; a < f.size(); ++a)
      if (f.get(a)) minterms.push_back(term::of_literals(a, ~a & full));
    canonicalize(minterms);
    CHECK(prime_implicants_consensus(minterms) == prime_implicants_qmc(f));
  }
}

TEST_CASE("prime implicates dualize the dual function's implicants") {
  circuit mux = parse_netlist(goldens::multiplexer);
  clause_set implicates = prime_implicates(truth_table_of(mux));
  clause_set expected{clause::of_literals(0b011, 0), clause::of_literals(0b001, 0b100),
                      clause::of_literals(0b110, 0)};
  canonicalize(expected); // x|y, x|~z, y|z
  CHECK(implicates == expected);

  CHECK(prime_implicates(truth_table::constant(2, true)).empty());
  CHECK(prime_implicates(truth_table::constant(2, false)) ==
        clause_set{clause::constant(false)});

  clause_set par = prime_implicates(truth_table::parity(2));
  clause_set par_expected{clause::of_literals(0b11, 0), clause::of_literals(0, 0b11)};
  canonicalize(par_expected); // x|y and ~x|~y
  CHECK(par == par_expected);
}

TEST_CASE("upwards closure") {
  CHECK(upwards_closure(truth_table::parity(4)) == truth_table::any_one(4));
  std::mt19937 rng(47);
  for (int i = 0; i < 30; ++i) {
    truth_table f = truth_table::random(1 + rng() % 6, rng);
    truth_table up = upwards_closure(f);
    CHECK(up.is_monotone());
    // Brute closure.
    for (std::uint32_t a = 0; a < f.size(); ++a) {
      bool any = false;
      for (std::uint32_t z = 0; z <= a; ++z)
        if ((z & a) == z && f.get(z)) any = true;
      CHECK(up.get(a) == any);
    }
    if (f.is_monotone()) CHECK(up == f);
  }
  truth_table mono = upwards_closure(truth_table::random(5, rng));
  CHECK(upwards_closure(mono) == mono);
}

TEST_CASE("cube text forms") {
  CHECK(to_string(term::constant(false), xyz) == "0");
  CHECK(to_string(term::of_literals(0b001, 0b100), xyz) == "x~z");
  CHECK(to_string(term::of_literals(0b100, 0b100), xyz) == "z~z");
  CHECK(to_string(clause::of_literals(0b010, 0b001), xyz) == "~x|y");
  CHECK(to_string(clause::constant(true), xyz) == "1");
}
