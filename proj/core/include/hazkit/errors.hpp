#pragma once

#include <stdexcept>
#include <string>

namespace hazkit {

enum class errc {
  syntax_error,
  negation_on_gate,
  unknown_identifier,
  no_output,
  arity_mismatch,
  arity_too_large,
  arity_out_of_range,
  param_out_of_range,
  produced_set_overflow,
  zero_term_not_implicant,
  not_prime_witness,
  gate_budget_exceeded,
  internal_contract_violation,
  detector_divergence,
  verification_failed,
  bad_input,
  io_error,
};

/// Stable machine-readable slug for an error code (used by the CLI).
inline const char* errc_name(errc code) {
  switch (code) {
  case errc::syntax_error: return "syntax-error";
  case errc::negation_on_gate: return "negation-on-gate";
  case errc::unknown_identifier: return "unknown-identifier";
  case errc::no_output: return "no-output";
  case errc::arity_mismatch: return "arity-mismatch";
  case errc::arity_too_large: return "arity-too-large";
  case errc::arity_out_of_range: return "arity-out-of-range";
  case errc::param_out_of_range: return "param-out-of-range";
  case errc::produced_set_overflow: return "produced-set-overflow";
  case errc::zero_term_not_implicant: return "zero-term-not-implicant";
  case errc::not_prime_witness: return "not-prime-witness";
  case errc::gate_budget_exceeded: return "gate-budget-exceeded";
  case errc::internal_contract_violation: return "internal-contract-violation";
  case errc::detector_divergence: return "detector-divergence";
  case errc::verification_failed: return "verification-failed";
  case errc::bad_input: return "bad-input";
  case errc::io_error: return "io-error";
  }
  return "unknown";
}

class error : public std::runtime_error {
public:
  error(errc code, std::string message, int line = 0)
      : std::runtime_error(std::move(message)), code_(code), line_(line) {}

  errc code() const { return code_; }

  /// 1-based source line for parse errors, 0 otherwise.
  int line() const { return line_; }

private:
  errc code_;
  int line_;
};

[[noreturn]] inline void raise(errc code, const std::string& message, int line = 0) {
  throw error(code, message, line);
}

} // namespace hazkit
