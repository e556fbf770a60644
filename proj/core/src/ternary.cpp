#include "hazkit/ternary.hpp"

namespace hazkit {

char to_char(tri v) {
  switch (v) {
  case tri::zero: return '0';
  case tri::unstable: return 'u';
  case tri::one: return '1';
  }
  return '?';
}

tri tri_from_char(char c) {
  switch (c) {
  case '0': return tri::zero;
  case '1': return tri::one;
  case 'u':
  case 'U':
  case 'x':
  case 'X': return tri::unstable;
  default:
    raise(errc::bad_input, std::string("invalid ternary digit '") + c + "'");
  }
}

tri_vector tri_vector::parse(const std::string& text) {
  std::vector<tri> entries;
  entries.reserve(text.size());
  for (char c : text) entries.push_back(tri_from_char(c));
  return tri_vector(std::move(entries));
}

tri_vector tri_vector::of_bits(std::uint32_t assignment, std::size_t n) {
  tri_vector v(n, tri::zero);
  for (std::size_t i = 0; i < n; ++i)
    if ((assignment >> i) & 1u) v[i] = tri::one;
  return v;
}

tri_vector tri_vector::with_unstable(std::uint32_t a, std::uint32_t x, std::size_t n) {
  tri_vector v = of_bits(a, n);
  for (std::size_t i = 0; i < n; ++i)
    if ((x >> i) & 1u) v[i] = tri::unstable;
  return v;
}

std::size_t tri_vector::unstable_count() const {
  std::size_t k = 0;
  for (tri v : entries_)
    if (v == tri::unstable) ++k;
  return k;
}

tri_vector tri_vector::complement() const {
  tri_vector out(*this);
  for (auto& v : out.entries_) v = tri_not(v);
  return out;
}

std::string tri_vector::to_string() const {
  std::string s;
  s.reserve(entries_.size());
  for (tri v : entries_) s.push_back(to_char(v));
  return s;
}

bool refines(const tri_vector& coarse, const tri_vector& fine) {
  if (coarse.size() != fine.size())
    raise(errc::arity_mismatch, "refines: vectors of different length");
  for (std::size_t i = 0; i < coarse.size(); ++i)
    if (coarse[i] != tri::unstable && coarse[i] != fine[i]) return false;
  return true;
}

std::vector<std::uint32_t> resolutions(const tri_vector& v) {
  std::vector<std::uint32_t> out;
  out.reserve(std::size_t{1} << v.unstable_count());
  for_each_resolution(v, [&](std::uint32_t a) { out.push_back(a); });
  return out;
}

std::uint64_t ternary_space_size(std::size_t n) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= 3;
  return total;
}

} // namespace hazkit
