#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hazkit/eval.hpp"
#include "hazkit/families.hpp"
#include "hazkit/selftest.hpp"
#include "testutil.hpp"

using namespace hazkit;

TEST_CASE("ternary evaluation on the worked circuits") {
  circuit mux = parse_netlist(goldens::multiplexer);
  CHECK(eval_ternary(mux, tri_vector::parse("11u")) == tri_u);
  CHECK(eval_ternary(mux, tri_vector::parse("110")) == tri::one);

  circuit pos = parse_netlist(goldens::multiplexer_pos);
  CHECK(eval_ternary(pos, tri_vector::parse("00u")) == tri_u);

  circuit free = parse_netlist(goldens::multiplexer_free);
  CHECK(eval_ternary(free, tri_vector::parse("1u1")) == tri::one);
  CHECK(eval_ternary(free, tri_vector::parse("u10")) == tri::one);
  CHECK(eval_ternary(free, tri_vector::parse("11u")) == tri::one);

  CHECK_THROWS_AS((void)eval_ternary(mux, tri_vector::parse("11")), error);
}

TEST_CASE("ternary evaluation restricts to boolean evaluation") {
  std::mt19937 rng(3);
  for (int i = 0; i < 30; ++i) {
    circuit c = testutil::random_circuit(rng, 5, 20);
    for (std::uint32_t a = 0; a < (1u << c.arity()); ++a) {
      tri v = eval_ternary(c, tri_vector::of_bits(a, c.arity()));
      CHECK(v == tri_of(eval_boolean(c, a)));
    }
  }
}

TEST_CASE("evaluation is monotone in the refinement order") {
  std::mt19937 rng(5);
  for (int i = 0; i < 15; ++i) {
    circuit c = testutil::random_circuit(rng, 4, 16);
    const auto total = ternary_space_size(c.arity());
    for_each_ternary(c.arity(), 0, total, [&](const tri_vector& coarse) {
      tri at_coarse = eval_ternary(c, coarse);
      for_each_resolution(coarse, [&](std::uint32_t a) {
        tri_vector fine = tri_vector::of_bits(a, c.arity());
        // fine resolves coarse completely.
        CHECK(refines(coarse, fine));
        tri at_fine = eval_ternary(c, fine);
        if (at_fine == tri_u) CHECK(at_coarse == tri_u);
        if (is_stable(at_coarse)) CHECK(at_fine == at_coarse);
      });
    });
  }
}

TEST_CASE("a constant subcube never flips to the stable complement") {
  std::mt19937 rng(7);
  for (int i = 0; i < 15; ++i) {
    circuit c = testutil::random_circuit(rng, 4, 16);
    truth_table f = truth_table_of(c);
    for_each_ternary(c.arity(), 0, ternary_space_size(c.arity()), [&](const tri_vector& v) {
      bool first = true, value = false, constant = true;
      for_each_resolution(v, [&](std::uint32_t a) {
        if (first) {
          value = f.get(a);
          first = false;
        } else if (f.get(a) != value) {
          constant = false;
        }
      });
      if (constant) {
        tri out = eval_ternary(c, v);
        CHECK((out == tri_u || out == tri_of(value)));
      }
    });
  }
}

TEST_CASE("duality of the ternary extension") {
  std::mt19937 rng(11);
  for (int i = 0; i < 15; ++i) {
    circuit c = testutil::random_circuit(rng, 4, 16);
    circuit d = dual(c);
    for_each_ternary(c.arity(), 0, ternary_space_size(c.arity()), [&](const tri_vector& v) {
      CHECK(eval_ternary(d, v.complement()) == tri_not(eval_ternary(c, v)));
    });
  }
}

TEST_CASE("circuit hazard derivative on the multiplexer") {
  circuit mux = parse_netlist(goldens::multiplexer);
  CHECK(hazard_derivative_circuit(mux, 0b011, 0b100) == 1); // a=110, x=001 in input order
  CHECK(hazard_derivative_circuit(mux, 0b011, 0) == 0);
  CHECK(hazard_derivative_circuit(mux, 0b101, 0b010) == 0); // f constant 1 around x=1,z=1
}

TEST_CASE("function hazard derivative by brute force") {
  truth_table f2 = truth_table_of(parse_expression("x | y"));
  CHECK(hazard_derivative_function(f2, 0b00, 0b01) == 1);
  CHECK(hazard_derivative_function(f2, 0b11, 0b01) == 0);
  CHECK(hazard_derivative_function(f2, 0b00, 0) == 0);

  // Parity changes on every flip.
  truth_table p = truth_table::parity(4);
  circuit pc = mk_parity(4);
  for (std::uint32_t a = 0; a < 16; ++a)
    for (std::uint32_t x = 1; x < 16; ++x) {
      CHECK(hazard_derivative_function(p, a, x) == 1);
      CHECK(hazard_derivative_circuit(pc, a, x) == 1);
    }
}

TEST_CASE("derivative at the all-zero point is the upwards closure") {
  std::mt19937 rng(13);
  for (int i = 0; i < 40; ++i) {
    truth_table f = truth_table::random(1 + rng() % 5, rng);
    if (f.get(0)) f.set(0, false);
    truth_table up = upwards_closure(f);
    for (std::uint32_t x = 0; x < f.size(); ++x)
      CHECK(hazard_derivative_function(f, 0, x) == up.get(x));
  }
}

TEST_CASE("the function derivative is monotone in the direction") {
  std::mt19937 rng(17);
  for (int i = 0; i < 25; ++i) {
    truth_table f = truth_table::random(4, rng);
    for (std::uint32_t a = 0; a < f.size(); ++a)
      for (std::uint32_t x = 0; x < f.size(); ++x)
        for (std::uint32_t y = x;; y = (y + 1) | x) {
          if (y < f.size() && hazard_derivative_function(f, a, x))
            CHECK(hazard_derivative_function(f, a, y));
          if (y >= f.size() - 1) break;
        }
  }
}

TEST_CASE("circuit and function derivatives coincide exactly on hazard-free circuits") {
  circuit free = parse_netlist(goldens::multiplexer_free);
  circuit mux = parse_netlist(goldens::multiplexer);
  truth_table f = truth_table_of(mux);

  bool mux_matches = true;
  for (std::uint32_t a = 0; a < 8 && mux_matches; ++a)
    for (std::uint32_t x = 0; x < 8 && mux_matches; ++x)
      mux_matches = hazard_derivative_circuit(mux, a, x) == hazard_derivative_function(f, a, x);
  CHECK_FALSE(mux_matches); // the 1-hazard shows up as a derivative mismatch

  for (std::uint32_t a = 0; a < 8; ++a)
    for (std::uint32_t x = 0; x < 8; ++x)
      CHECK(hazard_derivative_circuit(free, a, x) == hazard_derivative_function(f, a, x));
}
