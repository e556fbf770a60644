#include "hazkit/cubes.hpp"

#include <algorithm>
#include <bit>
#include <tuple>
#include <unordered_set>

namespace hazkit {

std::size_t term::literal_count() const {
  return is_constant() ? 0 : std::popcount(pos) + std::popcount(neg);
}

std::size_t clause::literal_count() const {
  return is_constant() ? 0 : std::popcount(pos) + std::popcount(neg);
}

std::uint64_t term::key() const {
  std::uint64_t c = constant_value ? (1 + std::uint64_t(*constant_value)) : 0;
  return c | (std::uint64_t(pos) << 2) | (std::uint64_t(neg) << 22);
}

std::uint64_t clause::key() const {
  std::uint64_t c = constant_value ? (1 + std::uint64_t(*constant_value)) : 0;
  return c | (std::uint64_t(pos) << 2) | (std::uint64_t(neg) << 22);
}

term conjoin(const term& a, const term& b) {
  if (a.is_constant()) return *a.constant_value ? b : term::constant(false);
  if (b.is_constant()) return *b.constant_value ? a : term::constant(false);
  return term{a.pos | b.pos, a.neg | b.neg, {}};
}

clause disjoin(const clause& a, const clause& b) {
  if (a.is_constant()) return *a.constant_value ? clause::constant(true) : b;
  if (b.is_constant()) return *b.constant_value ? clause::constant(true) : a;
  return clause{a.pos | b.pos, a.neg | b.neg, {}};
}

clause dual_of(const term& t) {
  if (t.is_constant()) return clause::constant(!*t.constant_value);
  return clause{t.pos, t.neg, {}};
}

term dual_of(const clause& c) {
  if (c.is_constant()) return term::constant(!*c.constant_value);
  return term{c.pos, c.neg, {}};
}

term positive_factor(const term& t) {
  if (t.is_constant()) return t;
  return term::of_literals(t.pos, 0);
}

bool term_value(const term& t, std::uint32_t a) {
  if (t.is_constant()) return *t.constant_value;
  return (a & t.pos) == t.pos && (a & t.neg) == 0;
}

bool clause_value(const clause& c, std::uint32_t a) {
  if (c.is_constant()) return *c.constant_value;
  return (a & c.pos) != 0 || (~a & c.neg) != 0;
}

tri term_value(const term& t, const tri_vector& input) {
  if (t.is_constant()) return tri_of(*t.constant_value);
  tri acc = tri::one;
  for (std::size_t i = 0; i < input.size(); ++i) {
    if ((t.pos >> i) & 1u) acc = tri_and(acc, input[i]);
    if ((t.neg >> i) & 1u) acc = tri_and(acc, tri_not(input[i]));
  }
  return acc;
}

tri clause_value(const clause& c, const tri_vector& input) {
  if (c.is_constant()) return tri_of(*c.constant_value);
  tri acc = tri::zero;
  for (std::size_t i = 0; i < input.size(); ++i) {
    if ((c.pos >> i) & 1u) acc = tri_or(acc, input[i]);
    if ((c.neg >> i) & 1u) acc = tri_or(acc, tri_not(input[i]));
  }
  return acc;
}

bool literals_intersect(const term& t, const clause& c) {
  if (t.is_constant() || c.is_constant()) return false;
  return ((t.pos & c.pos) | (t.neg & c.neg)) != 0;
}

bool subsumes(const term& inner, const term& outer) {
  if (inner.is_constant()) return *inner.constant_value; // 1 is the empty cube
  if (outer.is_constant()) return false;
  return (inner.pos & outer.pos) == inner.pos && (inner.neg & outer.neg) == inner.neg;
}

namespace {

std::string cube_text(std::uint32_t pos, std::uint32_t neg, const std::optional<bool>& k,
                      const std::vector<std::string>& names, const char* sep) {
  if (k) return *k ? "1" : "0";
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!((pos >> i) & 1u) && !((neg >> i) & 1u)) continue;
    if (!out.empty()) out += sep;
    if ((pos >> i) & 1u) out += names[i];
    if ((neg >> i) & 1u) {
      if ((pos >> i) & 1u) out += sep;
      out += "~" + names[i];
    }
  }
  return out;
}

} // namespace

std::string to_string(const term& t, const std::vector<std::string>& names) {
  return cube_text(t.pos, t.neg, t.constant_value, names, "");
}

std::string to_string(const clause& c, const std::vector<std::string>& names) {
  return cube_text(c.pos, c.neg, c.constant_value, names, "|");
}

bool set_contains(const term_set& set, const term& t) {
  return std::binary_search(set.begin(), set.end(), t);
}

bool set_contains(const clause_set& set, const clause& c) {
  return std::binary_search(set.begin(), set.end(), c);
}

void canonicalize(term_set& set) {
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
}

void canonicalize(clause_set& set) {
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
}

// --- formal production -------------------------------------------------

namespace {

template <typename Cube>
struct cube_acc {
  std::vector<Cube> items;
  std::unordered_set<std::uint64_t> keys;

  void insert(const Cube& c, std::size_t cap) {
    if (keys.insert(c.key()).second) {
      items.push_back(c);
      if (items.size() > cap)
        raise(errc::produced_set_overflow,
              "produced set exceeds cap of " + std::to_string(cap) + " cubes");
    }
  }
};

// Terms and clauses are produced by the same traversal with the roles of
// the two gate kinds exchanged: `product_kind` is the gate at which the
// pairwise combination happens.
template <typename Cube, typename Combine>
std::vector<Cube> produce(const circuit& c, node_kind product_kind, Combine combine,
                          const produce_options& options) {
  auto keep = reachable_from_output(c);
  std::vector<std::vector<Cube>> sets(c.nodes().size());

  for (node_id i = 0; i < c.nodes().size(); ++i) {
    if (!keep[i]) continue;
    const node& n = c.nodes()[i];
    switch (n.kind) {
    case node_kind::input:
      sets[i] = {Cube::single(n.lit.var, n.lit.negated)};
      break;
    case node_kind::constant:
      sets[i] = {Cube::constant(n.value)};
      break;
    case node_kind::and_gate:
    case node_kind::or_gate: {
      cube_acc<Cube> acc;
      if (n.kind == product_kind) {
        for (const Cube& x : sets[n.a])
          for (const Cube& y : sets[n.b]) acc.insert(combine(x, y), options.max_cubes);
      } else {
        for (const Cube& x : sets[n.a]) acc.insert(x, options.max_cubes);
        for (const Cube& y : sets[n.b]) acc.insert(y, options.max_cubes);
      }
      sets[i] = std::move(acc.items);
      break;
    }
    }
  }

  std::vector<Cube> result = std::move(sets[c.output()]);
  std::sort(result.begin(), result.end());
  return result;
}

} // namespace

term_set formal_dnf(const circuit& c, const produce_options& options) {
  return produce<term>(c, node_kind::and_gate,
                       [](const term& a, const term& b) { return conjoin(a, b); }, options);
}

clause_set formal_cnf(const circuit& c, const produce_options& options) {
  return produce<clause>(c, node_kind::or_gate,
                         [](const clause& a, const clause& b) { return disjoin(a, b); }, options);
}

// --- witnesses ----------------------------------------------------------

term witness_term(const tri_vector& v) {
  std::uint32_t pos = 0, neg = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == tri::one) pos |= 1u << i;
    if (v[i] == tri::zero) neg |= 1u << i;
  }
  return term::of_literals(pos, neg);
}

clause witness_clause(const tri_vector& v) {
  std::uint32_t pos = 0, neg = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == tri::zero) pos |= 1u << i;
    if (v[i] == tri::one) neg |= 1u << i;
  }
  return clause::of_literals(pos, neg);
}

tri_vector witness_vector(const term& t, std::size_t arity) {
  tri_vector v(arity, tri::unstable);
  if (t.is_constant()) return v;
  for (std::size_t i = 0; i < arity; ++i) {
    if ((t.pos >> i) & 1u) v[i] = tri::one;
    if ((t.neg >> i) & 1u) v[i] = tri::zero;
  }
  return v;
}

tri_vector witness_vector(const clause& c, std::size_t arity) {
  tri_vector v(arity, tri::unstable);
  if (c.is_constant()) return v;
  for (std::size_t i = 0; i < arity; ++i) {
    if ((c.pos >> i) & 1u) v[i] = tri::zero;
    if ((c.neg >> i) & 1u) v[i] = tri::one;
  }
  return v;
}

// --- implicants ----------------------------------------------------------

bool is_implicant(const term& t, const truth_table& f) {
  if (t.is_zero_term())
    raise(errc::zero_term_not_implicant, "implicants are defined only for non-zero terms");
  if (t.is_constant()) {
    if (!*t.constant_value) return true; // the constant-0 term is vacuously below f
    return f.is_constant(true);
  }
  const std::uint32_t full = static_cast<std::uint32_t>(f.size() - 1);
  const std::uint32_t free = full & ~(t.pos | t.neg);
  std::uint32_t z = free;
  while (true) {
    if (!f.get(t.pos | z)) return false;
    if (z == 0) break;
    z = (z - 1) & free;
  }
  return true;
}

bool is_implicate(const clause& c, const truth_table& f) {
  if (c.is_one_clause())
    raise(errc::zero_term_not_implicant, "implicates are defined only for non-one clauses");
  if (c.is_constant()) {
    if (*c.constant_value) return true;
    return f.is_constant(false);
  }
  const std::uint32_t full = static_cast<std::uint32_t>(f.size() - 1);
  const std::uint32_t free = full & ~(c.pos | c.neg);
  std::uint32_t z = free;
  while (true) {
    if (f.get(c.neg | z)) return false;
    if (z == 0) break;
    z = (z - 1) & free;
  }
  return true;
}

// --- prime implicants ------------------------------------------------------

namespace {

struct qmc_cube {
  std::uint32_t value;
  std::uint32_t dash;

  bool operator==(const qmc_cube&) const = default;
  bool operator<(const qmc_cube& other) const {
    return std::tie(dash, value) < std::tie(other.dash, other.value);
  }
  std::uint64_t key() const { return value | (std::uint64_t(dash) << 32); }
};

} // namespace

term_set prime_implicants_qmc(const truth_table& f) {
  const std::size_t n = f.arity();
  const std::uint32_t full = static_cast<std::uint32_t>(f.size() - 1);

  std::vector<qmc_cube> level;
  for (std::uint32_t a = 0; a < f.size(); ++a)
    if (f.get(a)) level.push_back({a, 0});

  term_set primes;
  while (!level.empty()) {
    std::unordered_set<std::uint64_t> members;
    members.reserve(level.size() * 2);
    for (const auto& c : level) members.insert(c.key());

    std::vector<qmc_cube> next;
    std::unordered_set<std::uint64_t> next_seen;
    std::vector<bool> merged(level.size(), false);

    for (std::size_t idx = 0; idx < level.size(); ++idx) {
      const qmc_cube& c = level[idx];
      for (std::size_t i = 0; i < n; ++i) {
        const std::uint32_t bit = 1u << i;
        if (c.dash & bit) continue;
        qmc_cube partner{c.value ^ bit, c.dash};
        if (!members.count(partner.key())) continue;
        merged[idx] = true;
        if (c.value & bit) continue; // the partner with bit 0 emits the merge
        qmc_cube up{c.value, c.dash | bit};
        if (next_seen.insert(up.key()).second) next.push_back(up);
      }
    }

    for (std::size_t idx = 0; idx < level.size(); ++idx) {
      if (merged[idx]) continue;
      const qmc_cube& c = level[idx];
      // of_literals turns the all-dash cube into the constant-1 term.
      primes.push_back(term::of_literals(c.value & ~c.dash, ~c.value & ~c.dash & full));
    }
    std::sort(next.begin(), next.end());
    level = std::move(next);
  }

  canonicalize(primes);
  return primes;
}

term_set prime_implicants_consensus(const term_set& dnf) {
  std::vector<term> work;
  for (const term& t : dnf) {
    if (t.is_zero_term()) continue;      // empty cube
    if (t.is_constant() && !*t.constant_value) continue;
    work.push_back(t);
  }

  auto absorbed_by_any = [&](const term& t, std::size_t skip) {
    for (std::size_t i = 0; i < work.size(); ++i)
      if (i != skip && subsumes(work[i], t)) return true;
    return false;
  };

  // Drop terms absorbed by others (x + xy = x).
  for (std::size_t i = 0; i < work.size();) {
    if (absorbed_by_any(work[i], i))
      work.erase(work.begin() + i);
    else
      ++i;
  }

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < work.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < work.size() && !changed; ++j) {
        const term &a = work[i], &b = work[j];
        if (a.is_constant() || b.is_constant()) continue;
        std::uint32_t clash = (a.pos & b.neg) | (a.neg & b.pos);
        if (std::popcount(clash) != 1) continue;
        term cons = term::of_literals((a.pos | b.pos) & ~clash, (a.neg | b.neg) & ~clash);
        if (cons.is_zero_term()) continue;
        if (absorbed_by_any(cons, work.size())) continue;
        // The consensus may absorb existing members.
        for (std::size_t r = 0; r < work.size();) {
          if (subsumes(cons, work[r]))
            work.erase(work.begin() + r);
          else
            ++r;
        }
        work.push_back(cons);
        changed = true;
      }
    }
  }

  canonicalize(work);
  return work;
}

clause_set prime_implicates(const truth_table& f) {
  term_set dual_primes = prime_implicants_qmc(f.dual());
  clause_set out;
  out.reserve(dual_primes.size());
  for (const term& t : dual_primes) out.push_back(dual_of(t));
  canonicalize(out);
  return out;
}

tri dnf_value(const term_set& dnf, const tri_vector& input) {
  tri acc = tri::zero;
  for (const term& t : dnf) acc = tri_or(acc, term_value(t, input));
  return acc;
}

tri cnf_value(const clause_set& cnf, const tri_vector& input) {
  tri acc = tri::one;
  for (const clause& c : cnf) acc = tri_and(acc, clause_value(c, input));
  return acc;
}

} // namespace hazkit
