#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hazkit/circuit.hpp"
#include "hazkit/selftest.hpp"
#include "testutil.hpp"

using namespace hazkit;

TEST_CASE("multiplexer netlist parses to a 3-gate circuit") {
  circuit c = parse_netlist(goldens::multiplexer);
  CHECK(c.arity() == 3);
  auto s = stats(c);
  CHECK(s.size == 3);
  CHECK(s.depth == 2);
  CHECK(s.negated_inputs == 1);
  CHECK_FALSE(s.monotone);
  CHECK(eval_boolean(c, 0b011) == true);  // x=1 y=1 z=0: paper's glitch input
  CHECK(eval_boolean(c, 0b000) == false);
}

TEST_CASE("identity and constant outputs") {
  circuit id = parse_netlist("inputs x\noutput x\n");
  CHECK(stats(id).size == 0);
  CHECK(stats(id).depth == 0);
  CHECK(eval_boolean(id, 1));
  CHECK_FALSE(eval_boolean(id, 0));

  circuit one = parse_netlist("inputs x\noutput 1\n");
  CHECK(eval_boolean(one, 0));
  CHECK(eval_boolean(one, 1));
}

TEST_CASE("wide gates expand left-associatively") {
  circuit c = parse_netlist("inputs a b c d\ng = AND a b c d\noutput g\n");
  CHECK(stats(c).size == 3);
  CHECK(stats(c).depth == 3);
  for (std::uint32_t x = 0; x < 16; ++x) CHECK(eval_boolean(c, x) == (x == 15));
}

TEST_CASE("parse errors carry their reason") {
  auto code_of = [](const std::string& text) {
    try {
      parse_netlist(text);
      return std::string("none");
    } catch (const error& e) {
      return std::string(errc_name(e.code()));
    }
  };
  CHECK(code_of("inputs x\ng1 = AND ~g1 x\noutput g1\n") == "negation-on-gate");
  CHECK(code_of("inputs x\ng1 = AND ~1 x\noutput g1\n") == "negation-on-gate");
  CHECK(code_of("inputs x\ng1 = AND x y\noutput g1\n") == "unknown-identifier");
  CHECK(code_of("inputs x y\ng1 = AND x y\n") == "no-output");
  CHECK(code_of("inputs x y\noutput x\ng1 = AND x y\n") == "syntax-error");
  CHECK(code_of("inputs x x\noutput x\n") == "syntax-error");
  CHECK(code_of("inputs x\ng1 = AND x\noutput g1\n") == "syntax-error");
  CHECK(code_of("inputs x\ng1 = XOR x x\noutput g1\n") == "syntax-error");
  CHECK(code_of("g1 = AND x y\noutput g1\n") == "syntax-error");
  CHECK(code_of("") == "syntax-error");

  try {
    parse_netlist("inputs x\nbad line here\noutput x\n");
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("netlist round trip preserves structure") {
  std::mt19937 rng(testutil::default_seed);
  for (int i = 0; i < 50; ++i) {
    circuit c = testutil::random_circuit(rng, 5, 15);
    circuit back = parse_netlist(to_netlist(c));
    CHECK(back.arity() == c.arity());
    CHECK(stats(back).size == stats(c).size);
    CHECK(truth_table_of(back) == truth_table_of(c));
  }
}

TEST_CASE("word-parallel tables agree with single evaluation") {
  std::mt19937 rng(7);
  for (int i = 0; i < 30; ++i) {
    circuit c = testutil::random_circuit(rng, 7, 25);
    truth_table t = truth_table_of(c);
    for (std::uint32_t a = 0; a < t.size(); ++a) CHECK(t.get(a) == eval_boolean(c, a));
  }
}

TEST_CASE("dual is an involution and computes the dual function") {
  circuit c = parse_netlist(goldens::multiplexer_pos); // (x|~z)(y|z)
  circuit d = dual(c);
  CHECK(dual(d) == c);
  // Worked dual: x~z | yz.
  circuit expected = parse_expression("(x & ~z) | (y & z)");
  CHECK(truth_table_of(d) == truth_table_of(expected));

  // (~x|y)(y|~z) | xyz dualizes to (~xy | y~z)(x|y|z).
  circuit f = parse_expression("((~x|y) & (y|~z)) | (x & y & z)");
  circuit fd = dual(f);
  circuit fd_expected = parse_expression("((~x&y) | (y&~z)) & (x|y|z)");
  CHECK(truth_table_of(fd) == truth_table_of(fd_expected));

  std::mt19937 rng(11);
  for (int i = 0; i < 40; ++i) {
    circuit r = testutil::random_circuit(rng, 5, 20);
    CHECK(dual(dual(r)) == r);
    truth_table t = truth_table_of(r);
    truth_table td = truth_table_of(dual(r));
    CHECK(td == t.dual());
  }

  circuit lit = parse_netlist("inputs x\noutput x\n");
  CHECK(dual(lit) == lit);
}

TEST_CASE("monotone version replaces negated inputs by constant 1") {
  circuit c = parse_netlist(goldens::closure_example);
  circuit pos = monotone_version(c);
  CHECK(stats(pos).monotone);
  truth_table x_or_y(3);
  for (std::uint32_t a = 0; a < 8; ++a) x_or_y.set(a, (a & 1u) || (a & 2u));
  CHECK(truth_table_of(pos) == x_or_y);

  // Already monotone circuits keep their function and structure size.
  circuit mono = parse_expression("(x & y) | z");
  CHECK(monotone_version(mono) == mono);

  circuit neg = parse_netlist("inputs x\noutput ~x\n");
  circuit pos_neg = monotone_version(neg);
  CHECK(truth_table_of(pos_neg).is_constant(true));
  CHECK(stats(propagate_constants(pos_neg)).size == 0);
}

TEST_CASE("monotone version dominates the upwards closure") {
  std::mt19937 rng(23);
  for (int i = 0; i < 60; ++i) {
    circuit c = testutil::random_circuit(rng, 5, 20);
    truth_table f = truth_table_of(c);
    truth_table up = upwards_closure(f);
    truth_table pos = truth_table_of(monotone_version(c));
    CHECK(pos.is_monotone());
    for (std::uint32_t a = 0; a < f.size(); ++a) {
      CHECK(pos.get(a) >= up.get(a));
      CHECK(up.get(a) >= f.get(a));
    }
  }
}

TEST_CASE("constant propagation folds gates") {
  circuit c = parse_netlist("inputs x y\ng1 = AND x 0\ng2 = OR g1 y\noutput g2\n");
  circuit folded = propagate_constants(c);
  CHECK(stats(folded).size == 0);
  CHECK(truth_table_of(folded) == truth_table_of(parse_netlist("inputs x y\noutput y\n")));
}

TEST_CASE("expression sugar matches the explicit netlist") {
  circuit e = parse_expression("(x|~z)&(y|z)");
  circuit n = parse_netlist(goldens::multiplexer_pos);
  CHECK(e.arity() == 3);
  CHECK(e.input_names() == std::vector<std::string>{"x", "y", "z"});
  CHECK(truth_table_of(e) == truth_table_of(n));
  CHECK_THROWS_AS(parse_expression("~(x&y)"), error);
  CHECK_THROWS_AS(parse_expression("x &"), error);
  CHECK_THROWS_AS(parse_expression("3 & x"), error);
}

TEST_CASE("builder structural hashing shares identical gates") {
  circuit_builder b(2, true);
  node_id x = b.add_input(0, false);
  node_id y = b.add_input(1, false);
  node_id g1 = b.add_and(x, y);
  node_id g2 = b.add_and(y, x); // commutative normalization
  CHECK(g1 == g2);
  CHECK(b.add_input(0, false) == x);

  circuit_builder plain(2, false);
  node_id p1 = plain.add_and(plain.add_input(0, false), plain.add_input(1, false));
  node_id p2 = plain.add_and(plain.add_input(0, false), plain.add_input(1, false));
  CHECK(p1 != p2);
}

TEST_CASE("reachability and cone extraction") {
  circuit c = parse_netlist("inputs x y\ng1 = AND x y\ng2 = OR x y\noutput g1\n");
  CHECK(stats(c).size == 2); // size is syntactic
  circuit pruned = cone(c);
  CHECK(stats(pruned).size == 1);
  CHECK(truth_table_of(pruned) == truth_table_of(c));
}
