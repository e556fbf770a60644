#pragma once

#include <string>
#include <vector>

namespace hazkit {

/// The small circuits every release must get exactly right. Netlist
/// text, so tests and the CLI share one source of truth.
namespace goldens {

// F = xz | y~z, the multiplexer; 1-hazard at 11u.
inline constexpr const char* multiplexer = "inputs x y z\n"
                                           "g1 = AND x z\n"
                                           "g2 = AND y ~z\n"
                                           "g3 = OR g1 g2\n"
                                           "output g3\n";

// H = (x|~z)(y|z), same function; 0-hazard at 00u and the produced
// term set {xy, xz, y~z, z~z}.
inline constexpr const char* multiplexer_pos = "inputs x y z\n"
                                               "g1 = OR x ~z\n"
                                               "g2 = OR y z\n"
                                               "g3 = AND g1 g2\n"
                                               "output g3\n";

// F = x(y|z) | y~z, same function again; hazard-free.
inline constexpr const char* multiplexer_free = "inputs x y z\n"
                                                "g1 = OR y z\n"
                                                "g2 = AND x g1\n"
                                                "g3 = AND y ~z\n"
                                                "g4 = OR g2 g3\n"
                                                "output g4\n";

// F = y~z | x(~y | ~x y): computes x~y | y~z, has both hazard
// polarities, yet its monotone version computes the upwards closure.
inline constexpr const char* closure_example = "inputs x y z\n"
                                               "g1 = AND y ~z\n"
                                               "g2 = AND ~x y\n"
                                               "g3 = OR ~y g2\n"
                                               "g4 = AND x g3\n"
                                               "g5 = OR g1 g4\n"
                                               "output g5\n";

// F = x(~y | ~z) | ~x y: misses the prime implicant y~z; 1-hazard at
// u10 with every structural diagnostic visible.
inline constexpr const char* missing_prime = "inputs x y z\n"
                                             "g1 = OR ~y ~z\n"
                                             "g2 = AND x g1\n"
                                             "g3 = AND ~x y\n"
                                             "g4 = OR g2 g3\n"
                                             "output g4\n";

inline constexpr const char* contradiction = "inputs x\n"
                                             "g1 = AND x ~x\n"
                                             "output g1\n";

inline constexpr const char* excluded_middle = "inputs x\n"
                                               "g1 = OR x ~x\n"
                                               "output g1\n";

} // namespace goldens

struct selftest_check {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Runs the golden worked-example suite; every check must pass.
std::vector<selftest_check> run_selftest();

} // namespace hazkit
