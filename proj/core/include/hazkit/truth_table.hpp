#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hazkit/errors.hpp"

namespace hazkit {

inline constexpr std::size_t max_table_arity = 20;

/// Boolean function on up to 20 variables stored as a 2^n bit vector.
/// Bit a holds f(a) with variable i mapped to bit i of a (little-endian).
class truth_table {
public:
  truth_table() : arity_(0), words_(1, 0) {}
  explicit truth_table(std::size_t arity);

  static truth_table constant(std::size_t arity, bool value);
  static truth_table parity(std::size_t arity);
  static truth_table any_one(std::size_t arity); // OR of all variables
  static truth_table random(std::size_t arity, std::mt19937& rng);

  /// Parses the body line of a .tt file: 2^n characters over {0,1}.
  static truth_table from_bits(std::size_t arity, const std::string& bits);

  std::size_t arity() const { return arity_; }
  std::uint64_t size() const { return std::uint64_t{1} << arity_; }

  bool get(std::uint32_t a) const {
    return (words_[a >> 6] >> (a & 63)) & 1u;
  }
  void set(std::uint32_t a, bool value) {
    if (value)
      words_[a >> 6] |= std::uint64_t{1} << (a & 63);
    else
      words_[a >> 6] &= ~(std::uint64_t{1} << (a & 63));
  }

  std::uint64_t count_ones() const;
  bool is_constant(bool value) const;
  bool is_monotone() const;

  /// f^d(a) = !f(complement of a).
  truth_table dual() const;

  /// Subfunction with the top `fixed_count` variables pinned to the bits
  /// of `fixed` (bit j of `fixed` is the value of variable arity-fixed_count+j).
  truth_table restrict_top(std::size_t fixed_count, std::uint32_t fixed) const;

  std::string to_bit_string() const;

  bool operator==(const truth_table& other) const = default;

  const std::vector<std::uint64_t>& words() const { return words_; }
  std::vector<std::uint64_t>& words() { return words_; }

private:
  std::size_t arity_;
  std::vector<std::uint64_t> words_;
};

/// f_up(x) = OR of f(z) over z <= x, computed by a subset zeta transform.
truth_table upwards_closure(const truth_table& f);

} // namespace hazkit
