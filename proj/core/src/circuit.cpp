#include "hazkit/circuit.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace hazkit {

namespace {

std::uint64_t node_key(const node& n) {
  switch (n.kind) {
  case node_kind::input:
    return 1 | (std::uint64_t(n.lit.var) << 2) | (std::uint64_t(n.lit.negated) << 34);
  case node_kind::constant:
    return 2 | (std::uint64_t(n.value) << 2);
  case node_kind::and_gate:
    return 0 | (std::uint64_t(n.a) << 2) | (std::uint64_t(n.b) << 33);
  case node_kind::or_gate:
    return 3 | (std::uint64_t(n.a) << 2) | (std::uint64_t(n.b) << 33);
  }
  return 0;
}

bool is_gate(const node& n) {
  return n.kind == node_kind::and_gate || n.kind == node_kind::or_gate;
}

} // namespace

circuit::circuit(std::size_t arity, std::vector<node> nodes, node_id output,
                 std::vector<std::string> input_names)
    : arity_(arity), nodes_(std::move(nodes)), output_(output), names_(std::move(input_names)) {
  if (names_.empty()) names_ = default_input_names(arity_);
  for (node_id i = 0; i < nodes_.size(); ++i) {
    const node& n = nodes_[i];
    if (n.kind == node_kind::input && n.lit.var >= arity_)
      raise(errc::bad_input, "input node references variable beyond arity");
    if (is_gate(n) && (n.a >= i || n.b >= i))
      raise(errc::bad_input, "gate operands must have smaller node ids");
  }
  if (output_ >= nodes_.size()) raise(errc::bad_input, "output id out of range");
}

std::vector<std::string> default_input_names(std::size_t arity) {
  std::vector<std::string> names;
  names.reserve(arity);
  for (std::size_t i = 0; i < arity; ++i) names.push_back("x" + std::to_string(i + 1));
  return names;
}

circuit_builder::circuit_builder(std::size_t arity, bool structural_hashing,
                                 std::vector<std::string> input_names)
    : arity_(arity), hashing_(structural_hashing), names_(std::move(input_names)) {
  if (names_.empty()) names_ = default_input_names(arity_);
}

node_id circuit_builder::push(node n) {
  if (hashing_) {
    auto key = node_key(n);
    auto it = dedup_.find(key);
    if (it != dedup_.end()) return it->second;
    node_id id = static_cast<node_id>(nodes_.size());
    nodes_.push_back(n);
    dedup_.emplace(key, id);
    return id;
  }
  nodes_.push_back(n);
  return static_cast<node_id>(nodes_.size() - 1);
}

node_id circuit_builder::add_input(std::uint32_t var, bool negated) {
  if (var >= arity_) raise(errc::bad_input, "variable index beyond arity");
  node n{node_kind::input, literal{var, negated}, false, 0, 0};
  return push(n);
}

node_id circuit_builder::add_constant(bool value) {
  node n{node_kind::constant, {}, value, 0, 0};
  return push(n);
}

node_id circuit_builder::add_and(node_id a, node_id b) {
  if (hashing_ && b < a) std::swap(a, b);
  return push(node{node_kind::and_gate, {}, false, a, b});
}

node_id circuit_builder::add_or(node_id a, node_id b) {
  if (hashing_ && b < a) std::swap(a, b);
  return push(node{node_kind::or_gate, {}, false, a, b});
}

node_id circuit_builder::add_and_chain(const std::vector<node_id>& ids) {
  if (ids.empty()) return add_constant(true);
  node_id acc = ids[0];
  for (std::size_t i = 1; i < ids.size(); ++i) acc = add_and(acc, ids[i]);
  return acc;
}

node_id circuit_builder::add_or_chain(const std::vector<node_id>& ids) {
  if (ids.empty()) return add_constant(false);
  node_id acc = ids[0];
  for (std::size_t i = 1; i < ids.size(); ++i) acc = add_or(acc, ids[i]);
  return acc;
}

node_id circuit_builder::append(const circuit& sub) {
  if (sub.arity() > arity_) raise(errc::arity_mismatch, "appended circuit has larger arity");
  std::vector<node_id> map(sub.nodes().size());
  for (node_id i = 0; i < sub.nodes().size(); ++i) {
    const node& n = sub.nodes()[i];
    switch (n.kind) {
    case node_kind::input: map[i] = add_input(n.lit.var, n.lit.negated); break;
    case node_kind::constant: map[i] = add_constant(n.value); break;
    case node_kind::and_gate: map[i] = add_and(map[n.a], map[n.b]); break;
    case node_kind::or_gate: map[i] = add_or(map[n.a], map[n.b]); break;
    }
  }
  return map[sub.output()];
}

circuit circuit_builder::build(node_id output) const {
  return circuit(arity_, nodes_, output, names_);
}

// --- netlist ---------------------------------------------------------

namespace {

bool valid_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

struct netlist_parser {
  std::unordered_map<std::string, std::uint32_t> inputs;
  std::unordered_map<std::string, node_id> gates;
  circuit_builder* builder = nullptr;

  node_id operand(const std::string& tok, int line) {
    if (tok == "0") return builder->add_constant(false);
    if (tok == "1") return builder->add_constant(true);
    std::string name = tok;
    if (!name.empty() && name[0] == '~') {
      // '~' is legal only on declared input names.
      name = name.substr(1);
      auto it = inputs.find(name);
      if (it != inputs.end()) return builder->add_input(it->second, true);
      raise(errc::negation_on_gate, "line " + std::to_string(line) +
                                        ": '~' applied to non-input '" + name + "'", line);
    }
    auto it = inputs.find(name);
    if (it != inputs.end()) return builder->add_input(it->second, false);
    auto gt = gates.find(name);
    if (gt != gates.end()) return gt->second;
    raise(errc::unknown_identifier,
          "line " + std::to_string(line) + ": unknown identifier '" + name + "'", line);
  }
};

} // namespace

circuit parse_netlist(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;

  std::vector<std::string> names;
  netlist_parser p;
  std::optional<circuit_builder> builder;
  std::optional<node_id> output;
  bool saw_inputs = false;

  while (std::getline(in, raw)) {
    ++line_no;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    auto toks = split_ws(raw);
    if (toks.empty()) continue;

    if (output.has_value())
      raise(errc::syntax_error,
            "line " + std::to_string(line_no) + ": content after 'output'", line_no);

    if (!saw_inputs) {
      if (toks[0] != "inputs")
        raise(errc::syntax_error,
              "line " + std::to_string(line_no) + ": expected 'inputs' first", line_no);
      if (toks.size() < 2)
        raise(errc::syntax_error,
              "line " + std::to_string(line_no) + ": 'inputs' needs at least one name", line_no);
      for (std::size_t i = 1; i < toks.size(); ++i) {
        if (!valid_identifier(toks[i]))
          raise(errc::syntax_error,
                "line " + std::to_string(line_no) + ": bad input name '" + toks[i] + "'",
                line_no);
        if (p.inputs.count(toks[i]))
          raise(errc::syntax_error,
                "line " + std::to_string(line_no) + ": duplicate input '" + toks[i] + "'",
                line_no);
        p.inputs.emplace(toks[i], static_cast<std::uint32_t>(names.size()));
        names.push_back(toks[i]);
      }
      builder.emplace(names.size(), false, names);
      p.builder = &*builder;
      saw_inputs = true;
      continue;
    }

    if (toks[0] == "inputs")
      raise(errc::syntax_error,
            "line " + std::to_string(line_no) + ": duplicate 'inputs' line", line_no);

    if (toks[0] == "output") {
      if (toks.size() != 2)
        raise(errc::syntax_error,
              "line " + std::to_string(line_no) + ": 'output' takes one operand", line_no);
      output = p.operand(toks[1], line_no);
      continue;
    }

    // <gid> = AND|OR <operand>{2,}
    if (toks.size() < 5 || toks[1] != "=")
      raise(errc::syntax_error, "line " + std::to_string(line_no) + ": expected gate definition",
            line_no);
    const std::string& gid = toks[0];
    if (!valid_identifier(gid))
      raise(errc::syntax_error,
            "line " + std::to_string(line_no) + ": bad gate id '" + gid + "'", line_no);
    if (p.inputs.count(gid) || p.gates.count(gid))
      raise(errc::syntax_error,
            "line " + std::to_string(line_no) + ": redefinition of '" + gid + "'", line_no);
    const std::string& op = toks[2];
    if (op != "AND" && op != "OR")
      raise(errc::syntax_error,
            "line " + std::to_string(line_no) + ": unknown gate type '" + op + "'", line_no);

    std::vector<node_id> operands;
    for (std::size_t i = 3; i < toks.size(); ++i) operands.push_back(p.operand(toks[i], line_no));
    node_id id = op == "AND" ? builder->add_and_chain(operands) : builder->add_or_chain(operands);
    p.gates.emplace(gid, id);
  }

  if (!saw_inputs) raise(errc::syntax_error, "empty netlist", line_no);
  if (!output.has_value()) raise(errc::no_output, "netlist has no 'output' line");
  return builder->build(*output);
}

std::string to_netlist(const circuit& c) {
  std::ostringstream out;
  out << "inputs";
  for (const auto& name : c.input_names()) out << ' ' << name;
  out << '\n';

  std::vector<std::string> ref(c.nodes().size());
  std::size_t next_gate = 0;
  for (node_id i = 0; i < c.nodes().size(); ++i) {
    const node& n = c.nodes()[i];
    switch (n.kind) {
    case node_kind::input:
      ref[i] = (n.lit.negated ? "~" : "") + c.input_names()[n.lit.var];
      break;
    case node_kind::constant:
      ref[i] = n.value ? "1" : "0";
      break;
    case node_kind::and_gate:
    case node_kind::or_gate: {
      ref[i] = "g" + std::to_string(++next_gate);
      out << ref[i] << " = " << (n.kind == node_kind::and_gate ? "AND" : "OR") << ' ' << ref[n.a]
          << ' ' << ref[n.b] << '\n';
      break;
    }
    }
  }
  out << "output " << ref[c.output()] << '\n';
  return out.str();
}

// --- expression sugar -------------------------------------------------

namespace {

struct expr_parser {
  const std::string& text;
  std::size_t pos = 0;
  circuit_builder* builder = nullptr;
  const std::unordered_map<std::string, std::uint32_t>* vars = nullptr;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  std::string ident() {
    skip_ws();
    if (pos >= text.size() ||
        (!std::isalpha(static_cast<unsigned char>(text[pos])) && text[pos] != '_'))
      return {};
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    return text.substr(start, pos - start);
  }

  node_id parse_or() {
    node_id acc = parse_and();
    while (eat('|')) acc = builder->add_or(acc, parse_and());
    return acc;
  }
  node_id parse_and() {
    node_id acc = parse_atom();
    while (eat('&')) acc = builder->add_and(acc, parse_atom());
    return acc;
  }
  node_id parse_atom() {
    skip_ws();
    if (eat('(')) {
      node_id inner = parse_or();
      if (!eat(')')) raise(errc::syntax_error, "expression: expected ')'");
      return inner;
    }
    if (eat('~')) {
      skip_ws();
      if (pos < text.size() && text[pos] == '(')
        raise(errc::negation_on_gate, "expression: '~' applies only to variables");
      std::string name = ident();
      if (name.empty()) raise(errc::syntax_error, "expression: expected variable after '~'");
      if (name == "0" || name == "1")
        raise(errc::negation_on_gate, "expression: '~' applies only to variables");
      return builder->add_input(vars->at(name), true);
    }
    if (pos < text.size() && (text[pos] == '0' || text[pos] == '1')) {
      bool v = text[pos] == '1';
      ++pos;
      return builder->add_constant(v);
    }
    std::string name = ident();
    if (name.empty()) raise(errc::syntax_error, "expression: unexpected character");
    return builder->add_input(vars->at(name), false);
  }
};

void collect_vars(const std::string& text, std::vector<std::string>& names) {
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = i;
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
        ++i;
      names.push_back(text.substr(start, i - start));
    } else {
      ++i;
    }
  }
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
}

} // namespace

circuit parse_expression(const std::string& text) {
  std::vector<std::string> names;
  collect_vars(text, names);
  if (names.empty()) raise(errc::syntax_error, "expression has no variables");
  std::unordered_map<std::string, std::uint32_t> vars;
  for (std::uint32_t i = 0; i < names.size(); ++i) vars.emplace(names[i], i);

  circuit_builder builder(names.size(), false, names);
  expr_parser p{text, 0, &builder, &vars};
  node_id out = p.parse_or();
  p.skip_ws();
  if (p.pos != text.size()) raise(errc::syntax_error, "expression: trailing characters");
  return builder.build(out);
}

// --- semantics --------------------------------------------------------

bool eval_boolean(const circuit& c, std::uint32_t assignment) {
  std::vector<bool> value(c.nodes().size());
  for (node_id i = 0; i < c.nodes().size(); ++i) {
    const node& n = c.nodes()[i];
    switch (n.kind) {
    case node_kind::input: {
      bool v = (assignment >> n.lit.var) & 1u;
      value[i] = n.lit.negated ? !v : v;
      break;
    }
    case node_kind::constant: value[i] = n.value; break;
    case node_kind::and_gate: value[i] = value[n.a] && value[n.b]; break;
    case node_kind::or_gate: value[i] = value[n.a] || value[n.b]; break;
    }
  }
  return value[c.output()];
}

truth_table truth_table_of(const circuit& c) {
  const std::size_t n = c.arity();
  if (n > max_table_arity)
    raise(errc::arity_too_large, "circuit arity exceeds truth table limit");

  // Word-parallel evaluation: each node carries its full 2^n-bit table.
  const std::size_t words = n >= 6 ? (std::size_t{1} << (n - 6)) : 1;
  std::vector<std::vector<std::uint64_t>> table(c.nodes().size());

  std::vector<std::vector<std::uint64_t>> var_pattern(n);
  for (std::size_t v = 0; v < n; ++v) {
    var_pattern[v].assign(words, 0);
    if (v < 6) {
      std::uint64_t p = 0;
      for (std::uint32_t a = 0; a < 64; ++a)
        if ((a >> v) & 1u) p |= std::uint64_t{1} << a;
      for (auto& w : var_pattern[v]) w = p;
    } else {
      for (std::size_t w = 0; w < words; ++w)
        if ((w >> (v - 6)) & 1u) var_pattern[v][w] = ~std::uint64_t{0};
    }
  }
  const std::uint64_t tail =
      n >= 6 ? ~std::uint64_t{0} : ((std::uint64_t{1} << (std::uint64_t{1} << n)) - 1);

  for (node_id i = 0; i < c.nodes().size(); ++i) {
    const node& nd = c.nodes()[i];
    auto& t = table[i];
    switch (nd.kind) {
    case node_kind::input:
      t = var_pattern[nd.lit.var];
      if (nd.lit.negated)
        for (auto& w : t) w = ~w;
      break;
    case node_kind::constant:
      t.assign(words, nd.value ? ~std::uint64_t{0} : 0);
      break;
    case node_kind::and_gate:
      t.resize(words);
      for (std::size_t w = 0; w < words; ++w) t[w] = table[nd.a][w] & table[nd.b][w];
      break;
    case node_kind::or_gate:
      t.resize(words);
      for (std::size_t w = 0; w < words; ++w) t[w] = table[nd.a][w] | table[nd.b][w];
      break;
    }
  }

  truth_table result(n);
  result.words() = table[c.output()];
  result.words()[0] &= tail;
  return result;
}

circuit dual(const circuit& c) {
  std::vector<node> nodes = c.nodes();
  for (node& n : nodes) {
    switch (n.kind) {
    case node_kind::input: break;
    case node_kind::constant: n.value = !n.value; break;
    case node_kind::and_gate: n.kind = node_kind::or_gate; break;
    case node_kind::or_gate: n.kind = node_kind::and_gate; break;
    }
  }
  return circuit(c.arity(), std::move(nodes), c.output(), c.input_names());
}

circuit monotone_version(const circuit& c) {
  std::vector<node> nodes = c.nodes();
  for (node& n : nodes) {
    if (n.kind == node_kind::input && n.lit.negated)
      n = node{node_kind::constant, {}, true, 0, 0};
  }
  return circuit(c.arity(), std::move(nodes), c.output(), c.input_names());
}

circuit propagate_constants(const circuit& c) {
  // Rebuild bottom-up, folding gates with constant operands.
  circuit_builder builder(c.arity(), true, c.input_names());
  std::vector<node_id> map(c.nodes().size());
  std::vector<std::optional<bool>> known(c.nodes().size());

  for (node_id i = 0; i < c.nodes().size(); ++i) {
    const node& n = c.nodes()[i];
    switch (n.kind) {
    case node_kind::input:
      map[i] = builder.add_input(n.lit.var, n.lit.negated);
      break;
    case node_kind::constant:
      known[i] = n.value;
      map[i] = builder.add_constant(n.value);
      break;
    case node_kind::and_gate: {
      auto ka = known[n.a], kb = known[n.b];
      if ((ka && !*ka) || (kb && !*kb)) {
        known[i] = false;
        map[i] = builder.add_constant(false);
      } else if (ka && *ka && kb && *kb) {
        known[i] = true;
        map[i] = builder.add_constant(true);
      } else if (ka && *ka) {
        map[i] = map[n.b];
      } else if (kb && *kb) {
        map[i] = map[n.a];
      } else {
        map[i] = builder.add_and(map[n.a], map[n.b]);
      }
      break;
    }
    case node_kind::or_gate: {
      auto ka = known[n.a], kb = known[n.b];
      if ((ka && *ka) || (kb && *kb)) {
        known[i] = true;
        map[i] = builder.add_constant(true);
      } else if (ka && !*ka && kb && !*kb) {
        known[i] = false;
        map[i] = builder.add_constant(false);
      } else if (ka && !*ka) {
        map[i] = map[n.b];
      } else if (kb && !*kb) {
        map[i] = map[n.a];
      } else {
        map[i] = builder.add_or(map[n.a], map[n.b]);
      }
      break;
    }
    }
  }
  return cone(builder.build(map[c.output()]));
}

circuit_stats stats(const circuit& c) {
  circuit_stats s;
  std::vector<std::size_t> depth(c.nodes().size(), 0);
  std::vector<bool> negated_seen(c.arity(), false);
  for (node_id i = 0; i < c.nodes().size(); ++i) {
    const node& n = c.nodes()[i];
    switch (n.kind) {
    case node_kind::input:
      if (n.lit.negated) negated_seen[n.lit.var] = true;
      break;
    case node_kind::constant: break;
    case node_kind::and_gate:
    case node_kind::or_gate:
      ++s.size;
      depth[i] = 1 + std::max(depth[n.a], depth[n.b]);
      break;
    }
  }
  s.depth = c.nodes().empty() ? 0 : depth[c.output()];
  for (bool seen : negated_seen)
    if (seen) ++s.negated_inputs;
  s.monotone = s.negated_inputs == 0;
  return s;
}

std::vector<bool> reachable_from_output(const circuit& c) {
  std::vector<bool> seen(c.nodes().size(), false);
  std::vector<node_id> stack{c.output()};
  while (!stack.empty()) {
    node_id i = stack.back();
    stack.pop_back();
    if (seen[i]) continue;
    seen[i] = true;
    const node& n = c.nodes()[i];
    if (is_gate(n)) {
      stack.push_back(n.a);
      stack.push_back(n.b);
    }
  }
  return seen;
}

circuit cone(const circuit& c) {
  auto keep = reachable_from_output(c);
  std::vector<node_id> map(c.nodes().size());
  std::vector<node> nodes;
  for (node_id i = 0; i < c.nodes().size(); ++i) {
    if (!keep[i]) continue;
    node n = c.nodes()[i];
    if (is_gate(n)) {
      n.a = map[n.a];
      n.b = map[n.b];
    }
    map[i] = static_cast<node_id>(nodes.size());
    nodes.push_back(n);
  }
  return circuit(c.arity(), std::move(nodes), map[c.output()], c.input_names());
}

} // namespace hazkit
