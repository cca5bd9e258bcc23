#pragma once
// Error codes shared across the library. Codes are stable so the CLI can
// map them to exit statuses and diagnostics.

#include <cstddef>
#include <stdexcept>
#include <string>

namespace iwalink {

enum class errc {
  variable_mismatch,
  zero_direction,
  invalid_direction,
  not_divisible,
  zero_polynomial,
  not_prime,
  both_zero,
  not_a_knot_polynomial,
  base_unavailable,
  stabilization_failure,
  zero_parameter,
  certificate_failure,
  invalid_certificate,
  unsupported,
  syntax_error,
  arity_error,
  domain_error,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::variable_mismatch: return "VariableMismatch";
    case errc::zero_direction: return "ZeroDirection";
    case errc::invalid_direction: return "InvalidDirection";
    case errc::not_divisible: return "NotDivisible";
    case errc::zero_polynomial: return "ZeroPolynomial";
    case errc::not_prime: return "NotPrime";
    case errc::both_zero: return "BothZero";
    case errc::not_a_knot_polynomial: return "NotAKnotPolynomial";
    case errc::base_unavailable: return "BaseUnavailable";
    case errc::stabilization_failure: return "StabilizationFailure";
    case errc::zero_parameter: return "ZeroParameter";
    case errc::certificate_failure: return "CertificateFailure";
    case errc::invalid_certificate: return "InvalidCertificate";
    case errc::unsupported: return "Unsupported";
    case errc::syntax_error: return "SyntaxError";
    case errc::arity_error: return "ArityError";
    case errc::domain_error: return "DomainError";
  }
  return "UnknownError";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

// Parser failures carry the byte offset of the offending input position.
class parse_error : public error {
 public:
  parse_error(errc code, const std::string& what, std::size_t offset)
      : error(code, what + " (byte " + std::to_string(offset) + ")"), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace iwalink
