#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hazkit/errors.hpp"

namespace hazkit {

/// Ternary value of the strong logic of indeterminacy. The numeric
/// encoding 0 < u < 1 is also the lexicographic witness order used in
/// reports; it is not the refinement order.
enum class tri : std::uint8_t {
  zero = 0,
  unstable = 1,
  one = 2,
};

inline constexpr tri tri_u = tri::unstable;

constexpr tri tri_of(bool b) { return b ? tri::one : tri::zero; }
constexpr bool is_stable(tri v) { return v != tri::unstable; }

// Gate truth tables over {0,u,1}, spelled out entry by entry. The
// min/max/1-x reading with u = 1/2 is checked in the tests, not relied
// on here.
namespace detail {
inline constexpr tri k_and[3][3] = {
    {tri::zero, tri::zero, tri::zero},
    {tri::zero, tri::unstable, tri::unstable},
    {tri::zero, tri::unstable, tri::one},
};
inline constexpr tri k_or[3][3] = {
    {tri::zero, tri::unstable, tri::one},
    {tri::unstable, tri::unstable, tri::one},
    {tri::one, tri::one, tri::one},
};
inline constexpr tri k_not[3] = {tri::one, tri::unstable, tri::zero};
} // namespace detail

constexpr tri tri_and(tri a, tri b) {
  return detail::k_and[static_cast<int>(a)][static_cast<int>(b)];
}
constexpr tri tri_or(tri a, tri b) {
  return detail::k_or[static_cast<int>(a)][static_cast<int>(b)];
}
constexpr tri tri_not(tri a) { return detail::k_not[static_cast<int>(a)]; }

char to_char(tri v);
tri tri_from_char(char c);

/// Ternary input vector; entry i is variable i, matching the order of
/// the `inputs` line of a netlist.
class tri_vector {
public:
  tri_vector() = default;
  explicit tri_vector(std::size_t n, tri fill = tri::unstable) : entries_(n, fill) {}
  explicit tri_vector(std::vector<tri> entries) : entries_(std::move(entries)) {}

  /// Parses a string over {0,1,u}, e.g. "11u".
  static tri_vector parse(const std::string& text);

  /// Builds the vector whose entry i is bit i of `assignment`.
  static tri_vector of_bits(std::uint32_t assignment, std::size_t n);

  /// Entry i is a_i where x_i = 0 and u where x_i = 1.
  static tri_vector with_unstable(std::uint32_t a, std::uint32_t x, std::size_t n);

  std::size_t size() const { return entries_.size(); }
  tri operator[](std::size_t i) const { return entries_[i]; }
  tri& operator[](std::size_t i) { return entries_[i]; }

  std::size_t unstable_count() const;
  bool fully_stable() const { return unstable_count() == 0; }

  /// Componentwise complement; the unstable value is its own complement.
  tri_vector complement() const;

  std::string to_string() const;

  bool operator==(const tri_vector& other) const = default;

  /// Lexicographic order with 0 < u < 1 per position.
  bool operator<(const tri_vector& other) const { return entries_ < other.entries_; }

  const std::vector<tri>& entries() const { return entries_; }

private:
  std::vector<tri> entries_;
};

/// True iff `fine` is obtained from `coarse` by resolving some unstable
/// entries to stable bits.
bool refines(const tri_vector& coarse, const tri_vector& fine);

/// All resolutions of `v` as assignment masks, enumerated
/// lexicographically over the unstable positions, 0 before 1.
std::vector<std::uint32_t> resolutions(const tri_vector& v);

template <typename Fn>
void for_each_resolution(const tri_vector& v, Fn&& fn) {
  std::uint32_t base = 0;
  std::vector<int> upos;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == tri::one)
      base |= 1u << i;
    else if (v[i] == tri::unstable)
      upos.push_back(static_cast<int>(i));
  }
  const std::size_t k = upos.size();
  for (std::uint64_t c = 0; c < (std::uint64_t{1} << k); ++c) {
    std::uint32_t a = base;
    for (std::size_t j = 0; j < k; ++j)
      if ((c >> (k - 1 - j)) & 1u) a |= 1u << upos[j];
    fn(a);
  }
}

/// Visits every vector in {0,u,1}^n with base-3 index in [first, last),
/// variable 0 being the most significant digit, so visiting order is
/// lexicographic. Callers may split [0, 3^n) into disjoint chunks.
template <typename Fn>
void for_each_ternary(std::size_t n, std::uint64_t first, std::uint64_t last, Fn&& fn) {
  tri_vector v(n, tri::zero);
  for (std::uint64_t index = first; index < last; ++index) {
    std::uint64_t rest = index;
    for (std::size_t i = n; i-- > 0;) {
      v[i] = static_cast<tri>(rest % 3);
      rest /= 3;
    }
    fn(v);
  }
}

std::uint64_t ternary_space_size(std::size_t n);

} // namespace hazkit
