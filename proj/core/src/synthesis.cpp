#include "hazkit/synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "hazkit/eval.hpp"

namespace hazkit {

namespace {

// Emits one term as a left-associative AND chain over literal inputs,
// variables in ascending order.
node_id emit_term(circuit_builder& builder, const term& t) {
  if (t.is_constant()) return builder.add_constant(*t.constant_value);
  std::vector<node_id> lits;
  for (std::uint32_t v = 0; v < builder.arity(); ++v) {
    if ((t.pos >> v) & 1u) lits.push_back(builder.add_input(v, false));
    if ((t.neg >> v) & 1u) lits.push_back(builder.add_input(v, true));
  }
  return builder.add_and_chain(lits);
}

node_id emit_dnf(circuit_builder& builder, const term_set& terms) {
  if (terms.empty()) return builder.add_constant(false);
  std::vector<node_id> parts;
  parts.reserve(terms.size());
  for (const term& t : terms) parts.push_back(emit_term(builder, t));
  return builder.add_or_chain(parts);
}

std::size_t dnf_gate_estimate(const term_set& terms) {
  if (terms.empty()) return 0;
  std::size_t gates = terms.size() - 1;
  for (const term& t : terms)
    gates += t.literal_count() > 0 ? t.literal_count() - 1 : 0;
  return gates;
}

} // namespace

circuit huffman_dnf(const truth_table& f, const synthesis_options& options) {
  term_set primes = prime_implicants_qmc(f);
  if (dnf_gate_estimate(primes) > options.gate_budget)
    raise(errc::gate_budget_exceeded,
          "prime-implicant DNF needs more than " + std::to_string(options.gate_budget) +
              " gates");
  circuit_builder builder(f.arity(), true);
  return builder.build(emit_dnf(builder, primes));
}

namespace {

// Five fresh gates per combine; callers skip the combine entirely when
// both taps compute the same function.
node_id combine_taps(circuit_builder& builder, node_id o0, node_id o1, std::uint32_t xn) {
  node_id keep_low = builder.add_and(builder.add_input(xn, true), o0);
  node_id keep_high = builder.add_and(builder.add_input(xn, false), o1);
  node_id bridge = builder.add_and(o0, o1);
  return builder.add_or(builder.add_or(keep_low, keep_high), bridge);
}

// All functions of m variables into one shared builder; the returned map
// keys the little-endian 2^m-bit table to the output tap. Functions
// independent of the top variable reuse the previous level's tap, which
// is what keeps the total below 5 * 2^(2^m).
std::unordered_map<std::uint16_t, node_id> emit_universal(circuit_builder& builder, int m) {
  // Base level: prime-implicant DNFs of the 16 two-variable functions.
  std::unordered_map<std::uint16_t, node_id> level;
  for (std::uint32_t bits = 0; bits < 16; ++bits) {
    truth_table f(2);
    for (std::uint32_t a = 0; a < 4; ++a) f.set(a, (bits >> a) & 1u);
    level.emplace(static_cast<std::uint16_t>(bits), emit_dnf(builder, prime_implicants_qmc(f)));
  }

  for (int j = 3; j <= m; ++j) {
    std::unordered_map<std::uint16_t, node_id> next;
    const std::uint32_t half_bits = 1u << (j - 1);
    const std::uint32_t half_mask = static_cast<std::uint32_t>((1u << half_bits) - 1);
    const std::uint64_t count = std::uint64_t{1} << (1u << j);
    for (std::uint64_t h = 0; h < count; ++h) {
      const auto h0 = static_cast<std::uint16_t>(h & half_mask);
      const auto h1 = static_cast<std::uint16_t>((h >> half_bits) & half_mask);
      node_id tap = h0 == h1 ? level.at(h0)
                             : combine_taps(builder, level.at(h0), level.at(h1),
                                            static_cast<std::uint32_t>(j - 1));
      next.emplace(static_cast<std::uint16_t>(h), tap);
    }
    level = std::move(next);
  }
  return level;
}

} // namespace

circuit consensus_combine(const circuit& f0, const circuit& f1, std::uint32_t xn) {
  if (f0.arity() != f1.arity())
    raise(errc::arity_mismatch, "consensus operands have different arities");
  if (xn != f0.arity())
    raise(errc::arity_mismatch, "the split variable must be the next fresh variable");

  circuit_builder builder(xn + 1, true);
  node_id o0 = builder.append(f0);
  node_id o1 = builder.append(f1);
  return builder.build(combine_taps(builder, o0, o1, xn));
}

universal_block build_universal_block(int m) {
  if (m < 2 || m > 4)
    raise(errc::arity_out_of_range, "universal blocks are built for 2 <= m <= 4");
  circuit_builder builder(static_cast<std::size_t>(m), true);
  universal_block block;
  block.m = m;
  block.index = emit_universal(builder, m);
  node_id last = 0;
  for (const auto& [table, tap] : block.index) last = std::max(last, tap);
  block.nodes = builder.build(last);
  return block;
}

circuit universal_block::at(std::uint16_t table) const {
  auto it = index.find(table);
  if (it == index.end()) raise(errc::bad_input, "table width does not match block arity");
  return cone(circuit(nodes.arity(), nodes.nodes(), it->second, nodes.input_names()));
}

circuit synthesize_shannon(const truth_table& f, std::optional<int> m_opt,
                           shannon_metadata* metadata) {
  const std::size_t n = f.arity();
  if (n > max_oracle_arity)
    raise(errc::arity_too_large,
          "shannon synthesis is bounded by arity " + std::to_string(max_oracle_arity));
  if (n < 2) raise(errc::param_out_of_range, "shannon synthesis needs arity >= 2");

  int m;
  int m_alternate;
  auto clamp_m = [&](int v) {
    return std::clamp(v, 2, static_cast<int>(std::min<std::size_t>(4, n)));
  };
  if (m_opt) {
    if (*m_opt < 2 || *m_opt > 4 || static_cast<std::size_t>(*m_opt) > n)
      raise(errc::param_out_of_range, "split parameter m must satisfy 2 <= m <= 4 and m <= n");
    m = m_alternate = *m_opt;
  } else {
    const double target = std::log2(static_cast<double>(n) - std::log2(static_cast<double>(n)));
    m = clamp_m(static_cast<int>(std::floor(target + 0.5))); // round half up
    int other = static_cast<int>(std::floor(target)) == m ? static_cast<int>(std::ceil(target))
                                                          : static_cast<int>(std::floor(target));
    m_alternate = clamp_m(other);
  }

  circuit_builder builder(n, true);
  auto universal = emit_universal(builder, m);
  const std::size_t universal_nodes = builder.size();

  // Consensus recursion over the top n-m variables, memoized by
  // subfunction table so equal subfunctions share one tap.
  std::map<std::pair<int, std::vector<std::uint64_t>>, node_id> memo;
  std::size_t shared_hits = 0;

  auto rec = [&](auto&& self, const truth_table& sub) -> node_id {
    const int j = static_cast<int>(sub.arity());
    if (j == m) {
      std::uint16_t bits = 0;
      for (std::uint32_t a = 0; a < sub.size(); ++a)
        if (sub.get(a)) bits |= static_cast<std::uint16_t>(1u << a);
      return universal.at(bits);
    }
    auto key = std::make_pair(j, sub.words());
    if (auto it = memo.find(key); it != memo.end()) {
      ++shared_hits;
      return it->second;
    }
    truth_table low = sub.restrict_top(1, 0);
    truth_table high = sub.restrict_top(1, 1);
    node_id tap;
    if (low == high) {
      tap = self(self, low);
    } else {
      node_id o0 = self(self, low);
      node_id o1 = self(self, high);
      tap = combine_taps(builder, o0, o1, static_cast<std::uint32_t>(j - 1));
    }
    memo.emplace(std::move(key), tap);
    return tap;
  };

  node_id out = rec(rec, f);
  circuit result = builder.build(out);

  if (metadata) {
    std::set<std::vector<std::uint64_t>> leaves;
    for (std::uint32_t b = 0; b < (std::uint32_t{1} << (n - m)); ++b)
      leaves.insert(f.restrict_top(n - m, b).words());

    std::size_t universal_gates = 0;
    for (std::size_t i = 0; i < universal_nodes; ++i) {
      const node& nd = result.nodes()[i];
      if (nd.kind == node_kind::and_gate || nd.kind == node_kind::or_gate) ++universal_gates;
    }
    metadata->m = m;
    metadata->m_alternate = m_alternate;
    metadata->universal_gates = universal_gates;
    metadata->combiner_gates = stats(result).size - universal_gates;
    metadata->distinct_leaf_subfunctions = leaves.size();
    metadata->shared_subfunction_hits = shared_hits;
    metadata->gate_bound =
        5 * ((std::size_t{1} << (std::size_t{1} << m)) + (std::size_t{1} << (n - m)));
  }
  return result;
}

} // namespace hazkit
