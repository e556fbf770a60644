#include "hazkit/hazards.hpp"

#include <algorithm>

namespace hazkit {

const char* method_name(detect_method m) {
  switch (m) {
  case detect_method::oracle: return "oracle";
  case detect_method::prime_witness: return "prime-witness";
  case detect_method::structural: return "structural";
  }
  return "?";
}

std::string hazard_report::verdict() const {
  if (has_0_hazard && has_1_hazard) return "0-hazard,1-hazard";
  if (has_0_hazard) return "0-hazard";
  if (has_1_hazard) return "1-hazard";
  return "hazard-free";
}

std::optional<bool> hazard_at(const circuit& c, const truth_table& f, const tri_vector& v) {
  if (v.fully_stable()) return std::nullopt;
  bool first = true;
  bool value = false;
  bool constant = true;
  for_each_resolution(v, [&](std::uint32_t a) {
    if (first) {
      value = f.get(a);
      first = false;
    } else if (f.get(a) != value) {
      constant = false;
    }
  });
  if (!constant) return std::nullopt;
  if (eval_ternary(c, v) != tri::unstable) return std::nullopt;
  return value;
}

namespace {

void finish(hazard_report& report) {
  std::sort(report.witnesses.begin(), report.witnesses.end());
  for (const auto& w : report.witnesses) {
    if (w.polarity)
      report.has_1_hazard = true;
    else
      report.has_0_hazard = true;
  }
}

} // namespace

hazard_report detect_oracle(const circuit& c) {
  if (c.arity() > max_oracle_arity)
    raise(errc::arity_too_large, "oracle detection is bounded by arity " +
                                     std::to_string(max_oracle_arity));
  const truth_table f = truth_table_of(c);
  hazard_report report;
  report.method = detect_method::oracle;

  for_each_ternary(c.arity(), 0, ternary_space_size(c.arity()), [&](const tri_vector& v) {
    auto polarity = hazard_at(c, f, v);
    if (polarity) report.witnesses.push_back({*polarity, v, 1, {}});
  });
  finish(report);
  return report;
}

hazard_report detect_prime_witness(const circuit& c) {
  const truth_table f = truth_table_of(c);
  hazard_report report;
  report.method = detect_method::prime_witness;

  for (const term& t : prime_implicants_qmc(f)) {
    tri_vector v = witness_vector(t, c.arity());
    if (eval_ternary(c, v) == tri::unstable) report.witnesses.push_back({true, v, 1, {}});
  }
  for (const clause& cl : prime_implicates(f)) {
    tri_vector v = witness_vector(cl, c.arity());
    if (eval_ternary(c, v) == tri::unstable) report.witnesses.push_back({false, v, 1, {}});
  }
  finish(report);
  return report;
}

hazard_report detect_structural(const circuit& c, const produce_options& options) {
  const truth_table f = truth_table_of(c);
  const produced_sets sets = produce_both(c, options);
  hazard_report report;
  report.method = detect_method::structural;

  for (const term& t : prime_implicants_qmc(f)) {
    if (set_contains(sets.dnf, t)) continue;
    report.witnesses.push_back(
        {true, witness_vector(t, c.arity()), 5, to_string(t, c.input_names())});
  }
  for (const clause& cl : prime_implicates(f)) {
    if (set_contains(sets.cnf, cl)) continue;
    report.witnesses.push_back(
        {false, witness_vector(cl, c.arity()), 5, to_string(cl, c.input_names())});
  }
  finish(report);
  return report;
}

produced_sets produce_both(const circuit& c, const produce_options& options) {
  return produced_sets{formal_dnf(c, options), formal_cnf(c, options)};
}

std::set<int> thm5_conditions(const circuit& c, const produced_sets& p, const term_set& primes,
                              const tri_vector& alpha) {
  const term wt = witness_term(alpha);
  if (!set_contains(primes, wt))
    raise(errc::not_prime_witness, "vector " + alpha.to_string() +
                                       " is not a prime 1-witness of the computed function");
  std::set<int> satisfied;

  if (eval_ternary(c, alpha) == tri::unstable) satisfied.insert(1);

  bool cond2 = false, cond3 = false;
  for (const clause& cl : p.cnf) {
    if (!cl.is_one_clause()) continue;
    if (clause_value(cl, alpha) == tri::unstable) cond2 = true;
    if (!literals_intersect(wt, cl)) cond3 = true;
  }
  if (cond2) satisfied.insert(2);
  if (cond3) satisfied.insert(3);

  bool cond4 = true;
  for (const term& t : p.dnf)
    if (term_value(t, alpha) == tri::one) cond4 = false;
  if (cond4) satisfied.insert(4);

  if (!set_contains(p.dnf, wt)) satisfied.insert(5);
  return satisfied;
}

std::set<int> check_thm5_conditions(const circuit& c, const tri_vector& alpha) {
  return thm5_conditions(c, produce_both(c), prime_implicants_qmc(truth_table_of(c)), alpha);
}

std::set<int> thm6_conditions(const circuit& c, const produced_sets& p,
                              const clause_set& implicates, const tri_vector& alpha) {
  const clause wc = witness_clause(alpha);
  if (!set_contains(implicates, wc))
    raise(errc::not_prime_witness, "vector " + alpha.to_string() +
                                       " is not a prime 0-witness of the computed function");
  std::set<int> satisfied;

  if (eval_ternary(c, alpha) == tri::unstable) satisfied.insert(1);

  bool cond2 = false, cond3 = false;
  for (const term& t : p.dnf) {
    if (!t.is_zero_term()) continue;
    if (term_value(t, alpha) == tri::unstable) cond2 = true;
    if (!literals_intersect(t, wc)) cond3 = true;
  }
  if (cond2) satisfied.insert(2);
  if (cond3) satisfied.insert(3);

  bool cond4 = true;
  for (const clause& cl : p.cnf)
    if (clause_value(cl, alpha) == tri::zero) cond4 = false;
  if (cond4) satisfied.insert(4);

  if (!set_contains(p.cnf, wc)) satisfied.insert(5);
  return satisfied;
}

std::set<int> check_thm6_conditions(const circuit& c, const tri_vector& alpha) {
  return thm6_conditions(c, produce_both(c), prime_implicates(truth_table_of(c)), alpha);
}

std::optional<term> check_cor34(const circuit& c, const produce_options& options) {
  const truth_table up = upwards_closure(truth_table_of(c));
  for (const term& t : formal_dnf(c, options)) {
    if (!t.is_zero_term()) continue;
    if (!is_implicant(positive_factor(t), up)) return t;
  }
  return std::nullopt;
}

bool verify_thm1(const circuit& c) {
  if (detect_oracle(c).has_0_hazard) return true;
  return truth_table_of(monotone_version(c)) == upwards_closure(truth_table_of(c));
}

bool verify_thm2(const circuit& c, const produce_options& options) {
  const truth_table up = upwards_closure(truth_table_of(c));
  const bool computes_closure = truth_table_of(monotone_version(c)) == up;

  bool factors_below = true;
  for (const term& t : formal_dnf(c, options)) {
    if (!t.is_zero_term()) continue;
    if (!is_implicant(positive_factor(t), up)) {
      factors_below = false;
      break;
    }
  }
  return computes_closure == factors_below;
}

} // namespace hazkit
