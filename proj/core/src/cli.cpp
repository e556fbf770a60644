#include "hazkit/cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hazkit/families.hpp"
#include "hazkit/hazards.hpp"
#include "hazkit/selftest.hpp"
#include "hazkit/synthesis.hpp"
#include "hazkit/version.hpp"

namespace hazkit::cli {

namespace {

using clock = std::chrono::steady_clock;

double ms_since(clock::time_point start) {
  return std::chrono::duration<double, std::milli>(clock::now() - start).count();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(errc::io_error, "cannot read '" + path + "'");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

truth_table parse_tt_file(const std::string& text) {
  std::istringstream in(text);
  std::string header, body;
  if (!std::getline(in, header)) raise(errc::bad_input, "empty .tt file");
  if (header.rfind("n=", 0) != 0) raise(errc::bad_input, ".tt file must start with n=<arity>");
  std::size_t arity = 0;
  try {
    arity = std::stoul(header.substr(2));
  } catch (const std::exception&) {
    raise(errc::bad_input, ".tt file: bad arity '" + header.substr(2) + "'");
  }
  if (arity == 0) raise(errc::bad_input, ".tt file: arity must be at least 1");
  if (!std::getline(in, body)) raise(errc::bad_input, ".tt file is missing the bit row");
  while (!body.empty() && (body.back() == '\r' || body.back() == ' ')) body.pop_back();
  return truth_table::from_bits(arity, body);
}

bool looks_like_expression(const std::string& input) {
  return input.find_first_of("&|()~") != std::string::npos;
}

document tool_header(const std::string& command, const std::string& input) {
  document doc;
  doc["schema_version"] = document_schema_version;
  doc["tool"] = {{"name", tool_name}, {"version", tool_version}};
  doc["command"] = command;
  doc["input"] = input;
  return doc;
}

document stats_json(const circuit_stats& s) {
  return {{"size", s.size},
          {"depth", s.depth},
          {"negated_inputs", s.negated_inputs},
          {"monotone", s.monotone}};
}

document report_json(const hazard_report& report, std::size_t witness_limit) {
  document w = document::array();
  std::size_t shown = 0;
  for (const auto& witness : report.witnesses) {
    if (shown++ >= witness_limit) break;
    document entry;
    entry["polarity"] = witness.polarity ? 1 : 0;
    entry["at"] = witness.at.to_string();
    entry["condition"] = witness.condition;
    if (witness.missing_cube) entry["missing_cube"] = *witness.missing_cube;
    w.push_back(entry);
  }
  return {{"method", method_name(report.method)},
          {"has_0_hazard", report.has_0_hazard},
          {"has_1_hazard", report.has_1_hazard},
          {"verdict", report.verdict()},
          {"witness_count", report.witnesses.size()},
          {"witnesses", w}};
}

} // namespace

circuit load_circuit(const std::string& input, bool force_expression) {
  if (force_expression) return parse_expression(input);
  if (input.rfind("family:", 0) == 0) return make_family(family_spec::parse(input));
  if (std::filesystem::exists(input)) {
    if (input.size() > 3 && input.substr(input.size() - 3) == ".tt")
      raise(errc::bad_input, "'" + input + "' holds a function, not a circuit; synthesize first");
    return parse_netlist(read_file(input));
  }
  if (looks_like_expression(input)) return parse_expression(input);
  raise(errc::io_error, "no such file or family: '" + input + "'");
}

truth_table load_function(const std::string& input, bool force_expression) {
  if (!force_expression && std::filesystem::exists(input) && input.size() > 3 &&
      input.substr(input.size() - 3) == ".tt")
    return parse_tt_file(read_file(input));
  circuit c = load_circuit(input, force_expression);
  if (c.arity() > max_table_arity)
    raise(errc::arity_too_large, "function source arity exceeds table limit");
  return truth_table_of(c);
}

check_result cmd_check(const std::string& input, const check_options& options) {
  const auto started = clock::now();
  circuit c = load_circuit(input, options.expression);
  document doc = tool_header("check", input);
  doc["arity"] = c.arity();
  doc["stats"] = stats_json(stats(c));

  produce_options produce{options.max_cubes};
  document timings;

  std::optional<hazard_report> primary;
  document reports = document::array();
  auto run_method = [&](const std::string& name) {
    const auto t0 = clock::now();
    hazard_report r;
    if (name == "oracle")
      r = detect_oracle(c);
    else if (name == "prime-witness")
      r = detect_prime_witness(c);
    else if (name == "structural")
      r = detect_structural(c, produce);
    else
      raise(errc::bad_input, "unknown method '" + name + "'");
    timings[name + "_ms"] = ms_since(t0);
    reports.push_back(report_json(r, options.witness_limit));
    if (!primary) primary = r;
    return r;
  };

  if (options.method == "all") {
    auto a = run_method("oracle");
    auto b = run_method("prime-witness");
    auto s = run_method("structural");
    if (a.has_0_hazard != b.has_0_hazard || a.has_1_hazard != b.has_1_hazard ||
        a.has_0_hazard != s.has_0_hazard || a.has_1_hazard != s.has_1_hazard)
      raise(errc::detector_divergence, "detection methods disagree on '" + input + "'");
    doc["methods_agree"] = true;
  } else {
    run_method(options.method);
  }
  doc["hazards"] = report_json(*primary, options.witness_limit);
  if (options.method == "all") doc["method_reports"] = reports;

  // Produced-set and prime counts are best effort: the structural layer
  // already failed loudly above if the cap was the binding constraint.
  try {
    auto sets = produce_both(c, produce);
    std::size_t zero_terms = 0, one_clauses = 0;
    for (const term& t : sets.dnf) zero_terms += t.is_zero_term();
    for (const clause& cl : sets.cnf) one_clauses += cl.is_one_clause();
    doc["produced"] = {{"dnf_terms", sets.dnf.size()},
                       {"cnf_clauses", sets.cnf.size()},
                       {"zero_terms", zero_terms},
                       {"one_clauses", one_clauses}};
  } catch (const error& e) {
    doc["produced"] = {{"error", errc_name(e.code())}};
  }
  if (c.arity() <= max_table_arity) {
    truth_table f = truth_table_of(c);
    doc["primes"] = {{"implicants", prime_implicants_qmc(f).size()},
                     {"implicates", prime_implicates(f).size()}};
  }

  timings["total_ms"] = ms_since(started);
  doc["timings_ms"] = timings;

  check_result result{std::move(doc), true};
  if (options.expect) {
    const std::string& e = *options.expect;
    const hazard_report& r = *primary;
    bool ok = e == "hazard-free"  ? r.hazard_free()
              : e == "0-hazard"   ? r.has_0_hazard
              : e == "1-hazard"   ? r.has_1_hazard
              : e == "hazard"     ? !r.hazard_free()
                                  : false;
    if (e != "hazard-free" && e != "0-hazard" && e != "1-hazard" && e != "hazard")
      raise(errc::bad_input, "--expect takes hazard-free|0-hazard|1-hazard|hazard");
    result.expect_matched = ok;
    result.doc["expect"] = {{"wanted", e}, {"matched", ok}};
  }
  return result;
}

document cmd_synth(const std::string& input, const synth_options& options) {
  const auto started = clock::now();
  truth_table f = load_function(input);
  document doc = tool_header("synth", input);
  doc["arity"] = f.arity();
  doc["method"] = options.method;

  circuit result;
  if (options.method == "huffman") {
    result = huffman_dnf(f, {options.gate_budget});
    doc["prime_implicants"] = prime_implicants_qmc(f).size();
  } else if (options.method == "shannon") {
    shannon_metadata meta;
    result = synthesize_shannon(f, options.m, &meta);
    doc["shannon"] = {{"m", meta.m},
                      {"m_alternate", meta.m_alternate},
                      {"universal_gates", meta.universal_gates},
                      {"combiner_gates", meta.combiner_gates},
                      {"distinct_leaf_subfunctions", meta.distinct_leaf_subfunctions},
                      {"shared_subfunction_hits", meta.shared_subfunction_hits},
                      {"gate_bound", meta.gate_bound}};
  } else {
    raise(errc::bad_input, "unknown synthesis method '" + options.method + "'");
  }

  doc["stats"] = stats_json(stats(result));

  // Never hand out an unverified circuit.
  if (truth_table_of(result) != f)
    raise(errc::verification_failed, "synthesized circuit computes the wrong function");
  hazard_report verdict = f.arity() <= max_oracle_arity ? detect_oracle(result)
                                                        : detect_structural(result);
  if (!verdict.hazard_free())
    raise(errc::verification_failed, "synthesized circuit is not hazard-free");
  doc["verified"] = {{"function", true},
                     {"hazard_free", true},
                     {"method", method_name(verdict.method)}};

  std::string netlist = to_netlist(result);
  if (options.output_path) {
    // Write-then-rename so readers never observe a partial netlist.
    const std::string tmp = *options.output_path + ".tmp";
    {
      std::ofstream out(tmp, std::ios::binary);
      if (!out) raise(errc::io_error, "cannot write '" + tmp + "'");
      out << netlist;
    }
    std::error_code ec;
    std::filesystem::rename(tmp, *options.output_path, ec);
    if (ec) raise(errc::io_error, "cannot move netlist into '" + *options.output_path + "'");
    doc["netlist_path"] = *options.output_path;
  } else {
    doc["netlist"] = netlist;
  }
  doc["timings_ms"] = {{"total_ms", ms_since(started)}};
  return doc;
}

std::string cmd_show(const std::string& input, const std::string& what,
                     const std::optional<std::string>& at_a,
                     const std::optional<std::string>& at_x, bool expression) {
  circuit c = load_circuit(input, expression);
  std::ostringstream out;

  if (what == "dnf" || what == "cnf") {
    if (what == "dnf") {
      out << "dnf n=" << c.arity() << '\n';
      for (const term& t : formal_dnf(c)) out << to_string(t, c.input_names()) << '\n';
    } else {
      out << "cnf n=" << c.arity() << '\n';
      for (const clause& cl : formal_cnf(c)) out << to_string(cl, c.input_names()) << '\n';
    }
    return out.str();
  }
  if (what == "primes" || what == "implicates") {
    truth_table f = truth_table_of(c);
    if (what == "primes") {
      out << "dnf n=" << c.arity() << '\n';
      for (const term& t : prime_implicants_qmc(f)) out << to_string(t, c.input_names()) << '\n';
    } else {
      out << "cnf n=" << c.arity() << '\n';
      for (const clause& cl : prime_implicates(f)) out << to_string(cl, c.input_names()) << '\n';
    }
    return out.str();
  }
  if (what == "closure") {
    truth_table up = upwards_closure(truth_table_of(c));
    out << "n=" << up.arity() << '\n' << up.to_bit_string() << '\n';
    return out.str();
  }
  if (what == "dual") return to_netlist(dual(c));
  if (what == "monotone") return to_netlist(monotone_version(c));
  if (what == "derivative") {
    if (!at_a || !at_x) raise(errc::bad_input, "derivative needs point a and direction x");
    auto parse_bits = [&](const std::string& s) {
      if (s.size() != c.arity())
        raise(errc::arity_mismatch, "bit vector '" + s + "' does not match arity");
      std::uint32_t bits = 0;
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] != '0' && s[i] != '1') raise(errc::bad_input, "bit vectors are over {0,1}");
        if (s[i] == '1') bits |= 1u << i;
      }
      return bits;
    };
    out << (hazard_derivative_circuit(c, parse_bits(*at_a), parse_bits(*at_x)) ? 1 : 0) << '\n';
    return out.str();
  }
  raise(errc::bad_input, "unknown object '" + what + "'");
}

document cmd_gap(const std::string& family) {
  const auto started = clock::now();
  gap_report_data gap = gap_report(family_spec::parse(family));
  document doc = tool_header("gap", gap.spec.to_string());
  doc["arity"] = gap.arity;
  doc["unrestricted"] = stats_json(gap.unrestricted);
  doc["hazard_free_huffman"] = {{"stats", stats_json(gap.huffman)},
                                {"prime_implicants", gap.huffman_prime_implicants},
                                {"literals", gap.huffman_literals}};
  if (gap.shannon) {
    doc["hazard_free_shannon"] = {{"stats", stats_json(*gap.shannon)},
                                  {"m", gap.shannon_meta->m},
                                  {"gate_bound", gap.shannon_meta->gate_bound}};
  }
  doc["monotone_closure"] = {{"prime_implicants", gap.closure_prime_implicants}};
  doc["verification"] = gap.verification;
  doc["timings_ms"] = {{"total_ms", ms_since(started)}};
  return doc;
}

selftest_result cmd_selftest() {
  document doc = tool_header("selftest", "builtin");
  document checks = document::array();
  std::size_t failed = 0;
  for (const auto& check : run_selftest()) {
    document entry;
    entry["name"] = check.name;
    entry["pass"] = check.pass;
    if (!check.detail.empty()) entry["detail"] = check.detail;
    checks.push_back(entry);
    if (!check.pass) ++failed;
  }
  doc["checks"] = checks;
  doc["failed"] = failed;
  doc["passed"] = checks.size() - failed;
  return {std::move(doc), failed == 0};
}

document error_document(const error& e) {
  document doc;
  doc["error"] = {{"code", errc_name(e.code())}, {"message", e.what()}};
  if (e.line() > 0) doc["error"]["line"] = e.line();
  return doc;
}

document error_document(const std::exception& e) {
  document doc;
  doc["error"] = {{"code", "unknown"}, {"message", e.what()}};
  return doc;
}

} // namespace hazkit::cli
