#include "hazkit/truth_table.hpp"

#include <bit>

namespace hazkit {

namespace {

std::size_t word_count(std::size_t arity) {
  return arity >= 6 ? (std::size_t{1} << (arity - 6)) : 1;
}

// Mask of the valid bits in the (single) word of a table with arity < 6.
std::uint64_t tail_mask(std::size_t arity) {
  if (arity >= 6) return ~std::uint64_t{0};
  return (std::uint64_t{1} << (std::uint64_t{1} << arity)) - 1;
}

} // namespace

truth_table::truth_table(std::size_t arity) : arity_(arity) {
  if (arity > max_table_arity)
    raise(errc::arity_too_large, "truth table arity exceeds " + std::to_string(max_table_arity));
  words_.assign(word_count(arity), 0);
}

truth_table truth_table::constant(std::size_t arity, bool value) {
  truth_table t(arity);
  if (value) {
    for (auto& w : t.words_) w = ~std::uint64_t{0};
    if (arity < 6) t.words_[0] &= tail_mask(arity);
  }
  return t;
}

truth_table truth_table::parity(std::size_t arity) {
  truth_table t(arity);
  for (std::uint32_t a = 0; a < t.size(); ++a)
    t.set(a, std::popcount(a) & 1);
  return t;
}

truth_table truth_table::any_one(std::size_t arity) {
  truth_table t(arity);
  for (std::uint32_t a = 1; a < t.size(); ++a) t.set(a, true);
  return t;
}

truth_table truth_table::random(std::size_t arity, std::mt19937& rng) {
  truth_table t(arity);
  for (auto& w : t.words_) {
    w = (std::uint64_t(rng()) << 32) | rng();
  }
  if (arity < 6) t.words_[0] &= tail_mask(arity);
  return t;
}

truth_table truth_table::from_bits(std::size_t arity, const std::string& bits) {
  truth_table t(arity);
  if (bits.size() != t.size())
    raise(errc::bad_input, "truth table body has " + std::to_string(bits.size()) +
                               " bits, expected " + std::to_string(t.size()));
  for (std::uint32_t a = 0; a < t.size(); ++a) {
    if (bits[a] != '0' && bits[a] != '1')
      raise(errc::bad_input, "truth table body must be over {0,1}");
    t.set(a, bits[a] == '1');
  }
  return t;
}

std::uint64_t truth_table::count_ones() const {
  std::uint64_t total = 0;
  for (auto w : words_) total += std::popcount(w);
  return total;
}

bool truth_table::is_constant(bool value) const {
  return count_ones() == (value ? size() : 0);
}

bool truth_table::is_monotone() const {
  for (std::uint32_t a = 0; a < size(); ++a) {
    if (!get(a)) continue;
    for (std::size_t i = 0; i < arity_; ++i) {
      std::uint32_t b = a | (1u << i);
      if (b != a && !get(b)) return false;
    }
  }
  return true;
}

truth_table truth_table::dual() const {
  truth_table out(arity_);
  const std::uint32_t mask = static_cast<std::uint32_t>(size() - 1);
  for (std::uint32_t a = 0; a < size(); ++a)
    out.set(a, !get(~a & mask));
  return out;
}

truth_table truth_table::restrict_top(std::size_t fixed_count, std::uint32_t fixed) const {
  if (fixed_count > arity_)
    raise(errc::arity_mismatch, "restrict_top: too many fixed variables");
  const std::size_t m = arity_ - fixed_count;
  truth_table out(m);
  const std::uint32_t high = fixed << m;
  for (std::uint32_t a = 0; a < out.size(); ++a)
    out.set(a, get(high | a));
  return out;
}

std::string truth_table::to_bit_string() const {
  std::string s(size(), '0');
  for (std::uint32_t a = 0; a < size(); ++a)
    if (get(a)) s[a] = '1';
  return s;
}

truth_table upwards_closure(const truth_table& f) {
  truth_table up = f;
  for (std::size_t i = 0; i < f.arity(); ++i)
    for (std::uint32_t a = 0; a < up.size(); ++a)
      if ((a >> i) & 1u)
        if (up.get(a ^ (1u << i))) up.set(a, true);
  return up;
}

} // namespace hazkit
