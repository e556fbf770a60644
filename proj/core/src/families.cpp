#include "hazkit/families.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "hazkit/cubes.hpp"

namespace hazkit {

// --- dual-rail building blocks -----------------------------------------
//
// DeMorgan circuits negate only at inputs, so internal signals that need
// a complement are carried as (value, complement) pairs. Rails with a
// known constant value fold during construction.

namespace {

struct rail {
  node_id pos = 0;
  node_id neg = 0;
  std::optional<bool> known;
};

struct rail_builder {
  circuit_builder b;

  explicit rail_builder(std::size_t arity, std::vector<std::string> names = {})
      : b(arity, true, std::move(names)) {}

  rail var(std::uint32_t i) { return {b.add_input(i, false), b.add_input(i, true), {}}; }

  rail constant(bool v) { return {b.add_constant(v), b.add_constant(!v), v}; }

  static rail invert(const rail& r) {
    return {r.neg, r.pos, r.known ? std::optional<bool>(!*r.known) : std::nullopt};
  }

  rail rail_and(const rail& x, const rail& y) {
    if (x.known) return *x.known ? y : constant(false);
    if (y.known) return *y.known ? x : constant(false);
    return {b.add_and(x.pos, y.pos), b.add_or(x.neg, y.neg), {}};
  }

  rail rail_or(const rail& x, const rail& y) {
    if (x.known) return *x.known ? constant(true) : y;
    if (y.known) return *y.known ? constant(true) : x;
    return {b.add_or(x.pos, y.pos), b.add_and(x.neg, y.neg), {}};
  }

  rail rail_xor(const rail& x, const rail& y) {
    if (x.known) return *x.known ? invert(y) : y;
    if (y.known) return *y.known ? invert(x) : x;
    node_id p = b.add_or(b.add_and(x.pos, y.neg), b.add_and(x.neg, y.pos));
    node_id q = b.add_or(b.add_and(x.pos, y.pos), b.add_and(x.neg, y.neg));
    return {p, q, {}};
  }

  // sum and carry of a + b + c.
  std::pair<rail, rail> full_add(const rail& x, const rail& y, const rail& c) {
    rail t = rail_xor(x, y);
    rail sum = rail_xor(t, c);
    rail carry = rail_or(rail_and(x, y), rail_and(c, t));
    return {sum, carry};
  }

  // Little-endian popcount of rails[lo, hi).
  std::vector<rail> count(const std::vector<rail>& rails, std::size_t lo, std::size_t hi) {
    if (hi - lo == 1) return {rails[lo]};
    std::size_t mid = lo + (hi - lo) / 2;
    return add_counts(count(rails, lo, mid), count(rails, mid, hi));
  }

  std::vector<rail> add_counts(const std::vector<rail>& a, const std::vector<rail>& b) {
    const std::size_t w = std::max(a.size(), b.size());
    std::vector<rail> out;
    rail carry = constant(false);
    for (std::size_t i = 0; i < w; ++i) {
      rail x = i < a.size() ? a[i] : constant(false);
      rail y = i < b.size() ? b[i] : constant(false);
      auto [sum, c] = full_add(x, y, carry);
      out.push_back(sum);
      carry = c;
    }
    out.push_back(carry);
    return out;
  }

  // Equality of the counter value against the constant k, one literal
  // per counter bit. Unused complement sides are pruned by cone().
  rail compare_eq(const std::vector<rail>& bits, std::size_t k) {
    rail acc = constant(true);
    for (std::size_t i = 0; i < bits.size(); ++i)
      acc = rail_and(acc, ((k >> i) & 1u) ? bits[i] : invert(bits[i]));
    return acc;
  }

  circuit finish(const rail& out) {
    node_id id = out.known ? b.add_constant(*out.known) : out.pos;
    return cone(b.build(id));
  }
};

} // namespace

circuit mk_multiplexer() {
  return parse_netlist("inputs x y z\n"
                       "g1 = AND x z\n"
                       "g2 = AND y ~z\n"
                       "g3 = OR g1 g2\n"
                       "output g3\n");
}

circuit mk_parity(std::size_t n) {
  if (n < 1 || n > max_table_arity)
    raise(errc::param_out_of_range, "parity arity must be in [1, 20]");
  rail_builder rb(n);

  auto tree = [&](auto&& self, std::size_t lo, std::size_t hi) -> rail {
    if (hi - lo == 1) return rb.var(static_cast<std::uint32_t>(lo));
    std::size_t mid = lo + (hi - lo) / 2;
    return rb.rail_xor(self(self, lo, mid), self(self, mid, hi));
  };
  return rb.finish(tree(tree, 0, n));
}

circuit mk_exact_k(std::size_t m, std::size_t k) {
  if (m < 1 || m > 16 || k > m)
    raise(errc::param_out_of_range, "exact_k needs 1 <= m <= 16 and 0 <= k <= m");
  rail_builder rb(m);
  std::vector<rail> vars;
  for (std::uint32_t i = 0; i < m; ++i) vars.push_back(rb.var(i));
  return rb.finish(rb.compare_eq(rb.count(vars, 0, m), k));
}

namespace {

std::vector<std::string> matrix_names(std::size_t m) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      names.push_back("x" + std::to_string(i + 1) + std::to_string(j + 1));
  return names;
}

} // namespace

circuit mk_exact_pm(std::size_t m, pm_variant variant) {
  if (m < 2 || m > 4)
    raise(errc::param_out_of_range, "exact_pm needs 2 <= m <= 4");
  const std::size_t n = m * m;
  auto at = [m](std::size_t i, std::size_t j) { return static_cast<std::uint32_t>(i * m + j); };

  if (variant == pm_variant::formula) {
    circuit_builder b(n, true, matrix_names(m));
    // Row side: some column j holds the row's only 1; column side is dual.
    auto one_hot = [&](auto&& cell_vars) {
      std::vector<node_id> groups;
      for (std::size_t g = 0; g < m; ++g) {
        std::vector<node_id> picks;
        for (std::size_t p = 0; p < m; ++p) {
          std::vector<node_id> chain{b.add_input(cell_vars(g, p), false)};
          for (std::size_t q = 0; q < m; ++q)
            if (q != p) chain.push_back(b.add_input(cell_vars(g, q), true));
          picks.push_back(b.add_and_chain(chain));
        }
        groups.push_back(b.add_or_chain(picks));
      }
      return b.add_and_chain(groups);
    };
    node_id rows = one_hot([&](std::size_t i, std::size_t j) { return at(i, j); });
    node_id cols = one_hot([&](std::size_t j, std::size_t i) { return at(i, j); });
    return b.build(b.add_and(rows, cols));
  }

  rail_builder rb(n, matrix_names(m));
  std::vector<rail> cells;
  for (std::uint32_t v = 0; v < n; ++v) cells.push_back(rb.var(v));

  rail acc = rb.constant(true);
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<rail> row;
    for (std::size_t j = 0; j < m; ++j) row.push_back(cells[at(i, j)]);
    acc = rb.rail_and(acc, rb.compare_eq(rb.count(row, 0, m), 1));
  }
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<rail> col;
    for (std::size_t i = 0; i < m; ++i) col.push_back(cells[at(i, j)]);
    acc = rb.rail_and(acc, rb.compare_eq(rb.count(col, 0, m), 1));
  }
  return rb.finish(acc);
}

circuit mk_exact_clique(std::size_t m, std::size_t k) {
  if (m < 2 || m > 6 || k < 1 || k > m)
    raise(errc::param_out_of_range, "exact_clique needs 2 <= m <= 6 and 1 <= k <= m");
  const std::size_t n = m * (m - 1) / 2;

  std::vector<std::string> names;
  std::vector<std::vector<std::uint32_t>> incident(m);
  {
    std::uint32_t e = 0;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j, ++e) {
        names.push_back("e" + std::to_string(i + 1) + std::to_string(j + 1));
        incident[i].push_back(e);
        incident[j].push_back(e);
      }
  }

  rail_builder rb(n, names);
  std::vector<rail> edges;
  for (std::uint32_t e = 0; e < n; ++e) edges.push_back(rb.var(e));

  if (k == 1) {
    // A 1-clique is one vertex and no edges; the degree test is vacuous.
    rail acc = rb.constant(true);
    for (const rail& e : edges) acc = rb.rail_and(acc, rail_builder::invert(e));
    return rb.finish(acc);
  }

  std::vector<rail> degree_ok;
  for (std::size_t v = 0; v < m; ++v) {
    std::vector<rail> around;
    for (auto e : incident[v]) around.push_back(edges[e]);
    degree_ok.push_back(rb.compare_eq(rb.count(around, 0, around.size()), k - 1));
  }

  rail edge_count = rb.compare_eq(rb.count(edges, 0, n), k * (k - 1) / 2);
  rail vertex_count = rb.compare_eq(rb.count(degree_ok, 0, m), k);
  return rb.finish(rb.rail_and(edge_count, vertex_count));
}

// --- family addressing ---------------------------------------------------

family_spec family_spec::parse(const std::string& text) {
  std::string body = text;
  if (body.rfind("family:", 0) == 0) body = body.substr(7);

  std::vector<std::string> parts;
  std::stringstream in(body);
  std::string piece;
  while (std::getline(in, piece, ':')) parts.push_back(piece);
  if (parts.empty()) raise(errc::bad_input, "empty family spec");

  auto num = [&](std::size_t idx, const char* what) -> std::size_t {
    if (idx >= parts.size()) raise(errc::bad_input, std::string("family spec missing ") + what);
    try {
      return std::stoul(parts[idx]);
    } catch (const std::exception&) {
      raise(errc::bad_input, std::string("family spec: bad ") + what + " '" + parts[idx] + "'");
    }
  };

  family_spec spec;
  spec.name = parts[0];
  if (spec.name == "multiplexer") {
    if (parts.size() != 1) raise(errc::bad_input, "multiplexer takes no parameters");
  } else if (spec.name == "parity") {
    spec.n = num(1, "arity");
  } else if (spec.name == "exact_k") {
    spec.m = num(1, "m");
    spec.k = num(2, "k");
  } else if (spec.name == "exact_pm") {
    spec.m = num(1, "m");
    if (parts.size() > 2) {
      if (parts[2] == "formula")
        spec.variant = pm_variant::formula;
      else if (parts[2] == "counting")
        spec.variant = pm_variant::counting;
      else
        raise(errc::bad_input, "exact_pm variant must be formula or counting");
    }
  } else if (spec.name == "exact_clique") {
    spec.m = num(1, "m");
    spec.k = num(2, "k");
  } else {
    raise(errc::bad_input, "unknown family '" + spec.name + "'");
  }
  return spec;
}

std::string family_spec::to_string() const {
  if (name == "multiplexer") return "family:multiplexer";
  if (name == "parity") return "family:parity:" + std::to_string(n);
  if (name == "exact_k")
    return "family:exact_k:" + std::to_string(m) + ":" + std::to_string(k);
  if (name == "exact_pm")
    return "family:exact_pm:" + std::to_string(m) + ":" +
           (variant == pm_variant::formula ? "formula" : "counting");
  return "family:exact_clique:" + std::to_string(m) + ":" + std::to_string(k);
}

circuit make_family(const family_spec& spec) {
  if (spec.name == "multiplexer") return mk_multiplexer();
  if (spec.name == "parity") return mk_parity(spec.n);
  if (spec.name == "exact_k") return mk_exact_k(spec.m, spec.k);
  if (spec.name == "exact_pm") return mk_exact_pm(spec.m, spec.variant);
  if (spec.name == "exact_clique") return mk_exact_clique(spec.m, spec.k);
  raise(errc::bad_input, "unknown family '" + spec.name + "'");
}

// --- gap reporting ---------------------------------------------------------

namespace {

bool same_function(const circuit& a, const circuit& b, std::string& how) {
  if (a.arity() != b.arity()) return false;
  if (a.arity() <= max_table_arity) {
    how = a.arity() <= 12 ? "exhaustive" : "exhaustive-wide";
    return truth_table_of(a) == truth_table_of(b);
  }
  how = "sampled";
  std::mt19937 rng(0x9a7);
  const std::uint32_t mask = static_cast<std::uint32_t>((std::uint64_t{1} << a.arity()) - 1);
  for (int i = 0; i < 8192; ++i) {
    std::uint32_t x = rng() & mask;
    if (eval_boolean(a, x) != eval_boolean(b, x)) return false;
  }
  return true;
}

} // namespace

gap_report_data gap_report(const family_spec& spec) {
  gap_report_data report;
  report.spec = spec;

  circuit unrestricted = make_family(spec);
  report.arity = unrestricted.arity();
  report.unrestricted = stats(unrestricted);

  truth_table f = truth_table_of(unrestricted);
  term_set primes = prime_implicants_qmc(f);
  circuit huffman = huffman_dnf(f);
  report.huffman = stats(huffman);
  report.huffman_prime_implicants = primes.size();
  for (const term& t : primes) report.huffman_literals += t.literal_count();

  std::string how = "exhaustive";
  if (!same_function(unrestricted, huffman, how))
    raise(errc::verification_failed, "hazard-free circuit diverges from the family circuit");
  report.verification = how;

  if (f.arity() >= 2 && f.arity() <= 12) {
    shannon_metadata meta;
    circuit shannon = synthesize_shannon(f, {}, &meta);
    if (!same_function(unrestricted, shannon, how))
      raise(errc::verification_failed, "shannon circuit diverges from the family circuit");
    report.shannon = stats(shannon);
    report.shannon_meta = meta;
  }

  report.closure_prime_implicants = prime_implicants_qmc(upwards_closure(f)).size();
  return report;
}

} // namespace hazkit
