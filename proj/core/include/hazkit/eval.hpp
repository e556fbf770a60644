#pragma once

#include "hazkit/circuit.hpp"
#include "hazkit/ternary.hpp"
#include "hazkit/truth_table.hpp"

namespace hazkit {

/// Largest arity for which exhaustive enumeration of {0,u,1}^n is
/// permitted; larger circuits must use the structural detector.
inline constexpr std::size_t max_oracle_arity = 12;

/// Gate-by-gate evaluation over {0,u,1}; agrees with eval_boolean on
/// fully stable vectors.
tri eval_ternary(const circuit& c, const tri_vector& input);

/// d F / d a (x) for the circuit's ternary extension: 0 when the output
/// on the partially unstable vector equals f(a), 1 when it is unstable.
/// A stable complement is impossible for DeMorgan circuits.
bool hazard_derivative_circuit(const circuit& c, std::uint32_t a, std::uint32_t x);

/// d f / d a (x) by brute force: 1 iff f(a ^ z) != f(a) for some z <= x.
bool hazard_derivative_function(const truth_table& f, std::uint32_t a, std::uint32_t x);

} // namespace hazkit
