#include "hazkit/eval.hpp"

namespace hazkit {

tri eval_ternary(const circuit& c, const tri_vector& input) {
  if (input.size() != c.arity())
    raise(errc::arity_mismatch, "ternary input length " + std::to_string(input.size()) +
                                    " does not match arity " + std::to_string(c.arity()));
  std::vector<tri> value(c.nodes().size());
  for (node_id i = 0; i < c.nodes().size(); ++i) {
    const node& n = c.nodes()[i];
    switch (n.kind) {
    case node_kind::input: {
      tri v = input[n.lit.var];
      value[i] = n.lit.negated ? tri_not(v) : v;
      break;
    }
    case node_kind::constant: value[i] = tri_of(n.value); break;
    case node_kind::and_gate: value[i] = tri_and(value[n.a], value[n.b]); break;
    case node_kind::or_gate: value[i] = tri_or(value[n.a], value[n.b]); break;
    }
  }
  return value[c.output()];
}

bool hazard_derivative_circuit(const circuit& c, std::uint32_t a, std::uint32_t x) {
  tri_vector widened = tri_vector::with_unstable(a, x, c.arity());
  tri out = eval_ternary(c, widened);
  if (out == tri::unstable) return true;
  if (out != tri_of(eval_boolean(c, a)))
    raise(errc::internal_contract_violation,
          "ternary output flipped to the stable complement");
  return false;
}

bool hazard_derivative_function(const truth_table& f, std::uint32_t a, std::uint32_t x) {
  const bool base = f.get(a);
  // Enumerate submasks z of x.
  std::uint32_t z = x;
  while (true) {
    if (f.get(a ^ z) != base) return true;
    if (z == 0) break;
    z = (z - 1) & x;
  }
  return false;
}

} // namespace hazkit
