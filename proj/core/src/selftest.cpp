#include "hazkit/selftest.hpp"

#include <cmath>
#include <functional>
#include <sstream>

#include "hazkit/families.hpp"
#include "hazkit/hazards.hpp"
#include "hazkit/synthesis.hpp"

namespace hazkit {

namespace {

struct runner {
  std::vector<selftest_check> checks;

  void add(const std::string& name, const std::function<bool(std::string&)>& body) {
    selftest_check c;
    c.name = name;
    try {
      c.pass = body(c.detail);
    } catch (const std::exception& e) {
      c.pass = false;
      c.detail = e.what();
    }
    checks.push_back(c);
  }
};

bool witness_present(const hazard_report& r, bool polarity, const std::string& at) {
  for (const auto& w : r.witnesses)
    if (w.polarity == polarity && w.at.to_string() == at) return true;
  return false;
}

term_set terms_of(const std::vector<std::string>& cubes) {
  // Literal positions follow x=0, y=1, z=2.
  term_set out;
  for (const auto& c : cubes) {
    std::uint32_t pos = 0, neg = 0;
    bool negate = false;
    for (char ch : c) {
      if (ch == '~') {
        negate = true;
        continue;
      }
      std::uint32_t v = ch == 'x' ? 0 : ch == 'y' ? 1 : 2;
      (negate ? neg : pos) |= 1u << v;
      negate = false;
    }
    out.push_back(term::of_literals(pos, neg));
  }
  canonicalize(out);
  return out;
}

clause_set clauses_of(const std::vector<std::string>& cubes) {
  clause_set out;
  for (const term& t : terms_of(cubes)) out.push_back(clause{t.pos, t.neg, t.constant_value});
  canonicalize(out);
  return out;
}

double tri_level(tri v) {
  switch (v) {
  case tri::zero: return 0.0;
  case tri::unstable: return 0.5;
  case tri::one: return 1.0;
  }
  return -1.0;
}

} // namespace

std::vector<selftest_check> run_selftest() {
  runner r;

  r.add("ternary-truth-tables", [](std::string& detail) {
    const tri vals[3] = {tri::zero, tri::unstable, tri::one};
    for (tri a : vals) {
      for (tri b : vals) {
        if (tri_level(tri_and(a, b)) != std::min(tri_level(a), tri_level(b)) ||
            tri_level(tri_or(a, b)) != std::max(tri_level(a), tri_level(b))) {
          detail = "and/or disagree with min/max";
          return false;
        }
      }
      if (tri_level(tri_not(a)) != 1.0 - tri_level(a)) {
        detail = "not disagrees with 1-x";
        return false;
      }
    }
    return tri_and(tri::one, tri_u) == tri_u && tri_or(tri::one, tri_u) == tri::one &&
           tri_not(tri_u) == tri_u;
  });

  r.add("multiplexer-1-hazard", [](std::string& detail) {
    circuit c = parse_netlist(goldens::multiplexer);
    if (eval_ternary(c, tri_vector::parse("11u")) != tri_u) {
      detail = "expected unstable output at 11u";
      return false;
    }
    auto report = detect_oracle(c);
    if (report.has_0_hazard) {
      detail = "unexpected 0-hazard";
      return false;
    }
    return report.has_1_hazard && witness_present(report, true, "11u");
  });

  r.add("multiplexer-pos-0-hazard", [](std::string& detail) {
    circuit c = parse_netlist(goldens::multiplexer_pos);
    auto report = detect_oracle(c);
    if (!witness_present(report, false, "00u")) {
      detail = "missing witness 00u";
      return false;
    }
    return !report.has_1_hazard;
  });

  r.add("produced-terms-with-zero-term", [](std::string& detail) {
    circuit c = parse_netlist(goldens::multiplexer_pos);
    term_set expected = terms_of({"xy", "xz", "y~z", "z~z"});
    if (formal_dnf(c) != expected) {
      detail = "produced term set differs";
      return false;
    }
    return true;
  });

  r.add("hazard-free-multiplexer", [](std::string& detail) {
    circuit c = parse_netlist(goldens::multiplexer_free);
    if (eval_ternary(c, tri_vector::parse("1u1")) != tri::one ||
        eval_ternary(c, tri_vector::parse("u10")) != tri::one ||
        eval_ternary(c, tri_vector::parse("11u")) != tri::one) {
      detail = "stable values at the prime witnesses expected";
      return false;
    }
    return detect_oracle(c).hazard_free();
  });

  r.add("trivial-constant-hazards", [](std::string&) {
    auto and_report = detect_oracle(parse_netlist(goldens::contradiction));
    auto or_report = detect_oracle(parse_netlist(goldens::excluded_middle));
    return and_report.has_0_hazard && !and_report.has_1_hazard &&
           witness_present(and_report, false, "u") && or_report.has_1_hazard &&
           !or_report.has_0_hazard && witness_present(or_report, true, "u");
  });

  r.add("closure-example-hazards", [](std::string& detail) {
    circuit c = parse_netlist(goldens::closure_example);
    auto report = detect_oracle(c);
    if (!witness_present(report, false, "u11")) {
      detail = "missing 0-hazard witness u11";
      return false;
    }
    if (!witness_present(report, true, "1u0")) {
      detail = "missing 1-hazard witness 1u0";
      return false;
    }
    return true;
  });

  r.add("closure-example-monotone-version", [](std::string& detail) {
    circuit c = parse_netlist(goldens::closure_example);
    truth_table closure = upwards_closure(truth_table_of(c));
    truth_table x_or_y(3);
    for (std::uint32_t a = 0; a < 8; ++a) x_or_y.set(a, (a & 1u) || (a & 2u));
    if (closure != x_or_y) {
      detail = "closure is not x|y";
      return false;
    }
    return truth_table_of(monotone_version(c)) == closure;
  });

  r.add("missing-prime-produced-sets", [](std::string& detail) {
    circuit c = parse_netlist(goldens::missing_prime);
    if (formal_dnf(c) != terms_of({"x~y", "x~z", "~xy"})) {
      detail = "formal DNF differs";
      return false;
    }
    if (formal_cnf(c) != clauses_of({"x~x", "~x~y~z", "xy", "y~y~z"})) {
      detail = "formal CNF differs";
      return false;
    }
    return true;
  });

  r.add("missing-prime-diagnostics", [](std::string& detail) {
    circuit c = parse_netlist(goldens::missing_prime);
    const tri_vector alpha = tri_vector::parse("u10");

    term yz = term::of_literals(0b010, 0b100); // y~z
    if (witness_term(alpha) != yz) {
      detail = "witness term is not y~z";
      return false;
    }
    auto dnf = formal_dnf(c);
    auto cnf = formal_cnf(c);
    clause middle{0b001, 0b001, {}}; // x|~x
    if (!set_contains(cnf, middle)) {
      detail = "one-clause x|~x not produced";
      return false;
    }
    if (clause_value(middle, alpha) != tri_u) {
      detail = "x|~x is not unstable at u10";
      return false;
    }
    if (literals_intersect(yz, middle)) {
      detail = "y~z unexpectedly meets x|~x";
      return false;
    }
    for (const term& t : dnf)
      if (term_value(t, alpha) == tri::one) {
        detail = "a produced term is stable 1 at u10";
        return false;
      }
    if (set_contains(dnf, yz)) {
      detail = "y~z unexpectedly produced";
      return false;
    }
    auto conditions = check_thm5_conditions(c, alpha);
    if (conditions != std::set<int>{1, 2, 3, 4, 5}) {
      detail = "condition set is not all five";
      return false;
    }
    auto report = detect_structural(c);
    return report.has_1_hazard && witness_present(report, true, "u10");
  });

  r.add("parity-any-circuit-hazard-free", [](std::string&) {
    return detect_oracle(mk_parity(4)).hazard_free();
  });

  r.add("dual-multiplexer-hazard-flips", [](std::string& detail) {
    circuit h = parse_netlist(goldens::multiplexer_pos);
    circuit d = dual(h); // computes x~z | yz
    truth_table expected(3);
    for (std::uint32_t a = 0; a < 8; ++a) {
      bool x = a & 1u, y = (a >> 1) & 1u, z = (a >> 2) & 1u;
      expected.set(a, (x && !z) || (y && z));
    }
    if (truth_table_of(d) != expected) {
      detail = "dual function is not x~z | yz";
      return false;
    }
    // The clause x|~z of H turns into the produced term x~z of the dual.
    if (!set_contains(formal_cnf(h), clause::of_literals(0b001, 0b100))) {
      detail = "clause x|~z not produced";
      return false;
    }
    if (!set_contains(formal_dnf(d), term::of_literals(0b001, 0b100))) {
      detail = "term x~z not produced by the dual";
      return false;
    }
    auto report = detect_oracle(d);
    return report.has_1_hazard && !report.has_0_hazard &&
           witness_present(report, true, "11u");
  });

  r.add("detector-agreement-on-goldens", [](std::string& detail) {
    const char* nets[] = {goldens::multiplexer,   goldens::multiplexer_pos,
                          goldens::multiplexer_free, goldens::closure_example,
                          goldens::missing_prime, goldens::contradiction,
                          goldens::excluded_middle};
    for (const char* net : nets) {
      circuit c = parse_netlist(net);
      auto a = detect_oracle(c);
      auto b = detect_prime_witness(c);
      auto s = detect_structural(c);
      if (a.has_0_hazard != b.has_0_hazard || a.has_0_hazard != s.has_0_hazard ||
          a.has_1_hazard != b.has_1_hazard || a.has_1_hazard != s.has_1_hazard) {
        detail = "detectors disagree";
        return false;
      }
    }
    return true;
  });

  r.add("huffman-multiplexer", [](std::string& detail) {
    circuit c = parse_netlist(goldens::multiplexer);
    truth_table f = truth_table_of(c);
    term_set primes = prime_implicants_qmc(f);
    if (primes != terms_of({"xz", "y~z", "xy"})) {
      detail = "prime implicants differ";
      return false;
    }
    circuit h = huffman_dnf(f);
    return truth_table_of(h) == f && detect_oracle(h).hazard_free();
  });

  return r.checks;
}

} // namespace hazkit
