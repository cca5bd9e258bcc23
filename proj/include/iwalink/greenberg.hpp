#pragma once
// Pseudonullity criterion for the second homology module of a link: if no
// prime factor of the multivariate Alexander polynomial takes the value +-1
// at (1, ..., 1), the module is pseudonull; for knots it never is. The
// factorizations handled here are certificates built from a fixed catalog of
// recognized factors (integer primes, t_i - 1, and cyclotomic polynomials in
// the product of all variables), which is enough for the link families in
// this library. Anything else is reported as unsupported.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include <algorithm>

#include "iwalink/errors.hpp"
#include "iwalink/laurent.hpp"

namespace iwalink {

enum class FactorOrigin { catalog_certified, caller_asserted };

struct CertFactor {
  MultiLaurent poly;
  long multiplicity = 1;
  FactorOrigin origin = FactorOrigin::catalog_certified;
};

struct FactorizationCertificate {
  MultiLaurent input;
  std::vector<std::pair<Int, long>> content_primes;  // prime, exponent
  std::vector<CertFactor> factors;
  MultiLaurent unit;  // signed monomial completing the product exactly

  FactorizationCertificate() : input(1), unit(1) {}
};

namespace detail {

inline MultiLaurent collapse_at_one(const MultiLaurent& f, int var) {
  MultiLaurent out(f.num_vars());
  for (const auto& [e, c] : f.terms()) {
    std::vector<int> e2 = e;
    e2[static_cast<std::size_t>(var)] = 0;
    out += MultiLaurent::monomial(f.num_vars(), std::move(e2), c);
  }
  return out;
}

// Phi_{q^n} evaluated at the product of all variables.
inline MultiLaurent diagonal_cyclotomic(int num_vars, long q, long n, long step_cap) {
  long step = 1;
  for (long i = 1; i < n; ++i) {
    step *= q;
    if (step > step_cap) throw error(errc::domain_error, "cyclotomic factor too large");
  }
  MultiLaurent out(num_vars);
  for (long i = 0; i < q; ++i) {
    long e = i * step;
    if (e > step_cap) throw error(errc::domain_error, "cyclotomic factor too large");
    out += MultiLaurent::monomial(num_vars,
                                  std::vector<int>(static_cast<std::size_t>(num_vars),
                                                   static_cast<int>(e)),
                                  Int(1));
  }
  return out;
}

// Smallest per-variable exponent span; 0 for constants.
inline long min_span(const MultiLaurent& f) {
  if (f.is_zero()) return 0;
  const int r = f.num_vars();
  std::vector<int> lo(static_cast<std::size_t>(r)), hi(static_cast<std::size_t>(r));
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    for (int i = 0; i < r; ++i) {
      if (first || e[static_cast<std::size_t>(i)] < lo[static_cast<std::size_t>(i)])
        lo[static_cast<std::size_t>(i)] = e[static_cast<std::size_t>(i)];
      if (first || e[static_cast<std::size_t>(i)] > hi[static_cast<std::size_t>(i)])
        hi[static_cast<std::size_t>(i)] = e[static_cast<std::size_t>(i)];
    }
    first = false;
  }
  long span = hi[0] - lo[0];
  for (int i = 1; i < r; ++i)
    span = std::min(span, static_cast<long>(hi[static_cast<std::size_t>(i)]) -
                              lo[static_cast<std::size_t>(i)]);
  return span;
}

inline std::optional<std::vector<std::pair<Int, long>>> factor_integer(Int n) {
  std::vector<std::pair<Int, long>> out;
  if (n < 0) n = -n;
  if (n <= 1) return out;
  for (long d = 2; d <= 1000000 && Int(d) * d <= n; d = (d == 2 ? 3 : d + 2)) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(d))) {
      Int rest;
      long e = static_cast<long>(
          mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), Int(d).get_mpz_t()));
      out.emplace_back(Int(d), e);
      n = rest;
    }
  }
  if (n > 1) {
    if (mpz_probab_prime_p(n.get_mpz_t(), 32) == 0) return std::nullopt;
    out.emplace_back(n, 1);
  }
  return out;
}

}  // namespace detail

// Factor f into recognized catalog pieces times a unit. Returns nullopt when
// some piece falls outside the catalog (an unrecognized residual, or a
// content whose primality cannot be settled).
inline std::optional<FactorizationCertificate> structured_factor(const MultiLaurent& f) {
  if (f.is_zero()) throw error(errc::zero_polynomial, "cannot factor the zero polynomial");
  const int r = f.num_vars();

  FactorizationCertificate cert;
  cert.input = f;

  Int content(0);
  for (const auto& [e, c] : f.terms())
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
  auto primes = detail::factor_integer(content);
  if (!primes) return std::nullopt;
  cert.content_primes = std::move(*primes);

  MultiLaurent g = divide_exact(f, MultiLaurent::constant(r, content));

  for (int i = 0; i < r; ++i) {
    MultiLaurent lin = MultiLaurent::variable(r, i) - MultiLaurent::constant(r, 1);
    long mult = 0;
    while (detail::collapse_at_one(g, i).is_zero()) {
      g = divide_exact(g, lin);
      ++mult;
    }
    if (mult > 0) cert.factors.push_back({std::move(lin), mult, FactorOrigin::catalog_certified});
  }

  for (long q = 2; q <= detail::min_span(g) + 1; ++q) {
    if (!is_prime_long(q)) continue;
    for (long n = 1;; ++n) {
      long span = detail::min_span(g);
      double phi_deg = static_cast<double>(q - 1);
      for (long i = 1; i < n; ++i) phi_deg *= static_cast<double>(q);
      if (phi_deg > static_cast<double>(span)) break;
      MultiLaurent phi = detail::diagonal_cyclotomic(r, q, n, span);
      long mult = 0;
      while (true) {
        try {
          g = divide_exact(g, phi);
          ++mult;
        } catch (const error& e) {
          if (e.code() != errc::not_divisible) throw;
          break;
        }
      }
      if (mult > 0)
        cert.factors.push_back({std::move(phi), mult, FactorOrigin::catalog_certified});
    }
  }

  if (g.term_count() != 1 || abs_int(g.terms().begin()->second) != 1) return std::nullopt;
  cert.unit = std::move(g);
  return cert;
}

enum class PseudonullKind { pseudonull_certified, not_pseudonull_knot, inconclusive };

struct PseudonullVerdict {
  PseudonullKind kind = PseudonullKind::inconclusive;
  std::optional<MultiLaurent> witness;  // factor whose value at (1, ..., 1) is a unit
};

// Apply the pseudonullity criterion to a validated factorization. The
// certificate must multiply out to the input up to a unit, else
// InvalidCertificate is raised.
inline PseudonullVerdict pseudonull_criterion(const FactorizationCertificate& cert) {
  if (cert.input.is_zero())
    throw error(errc::zero_polynomial, "criterion needs a nonzero polynomial");
  const int r = cert.input.num_vars();
  MultiLaurent prod = MultiLaurent::constant(r, 1);
  for (const auto& [q, e] : cert.content_primes) {
    if (q < 2) throw error(errc::invalid_certificate, "content entries must be primes");
    prod = prod * MultiLaurent::constant(r, pow_int(q, static_cast<unsigned long>(e)));
  }
  for (const CertFactor& fac : cert.factors) {
    if (fac.multiplicity < 1 || fac.poly.num_vars() != r)
      throw error(errc::invalid_certificate, "malformed factor entry");
    prod = prod * fac.poly.pow(static_cast<unsigned long>(fac.multiplicity));
  }
  if (!unit_associate(prod, cert.input))
    throw error(errc::invalid_certificate,
                "factor product does not match the certified polynomial");

  PseudonullVerdict verdict;
  if (r == 1) {
    verdict.kind = PseudonullKind::not_pseudonull_knot;
    return verdict;
  }
  for (const CertFactor& fac : cert.factors) {
    if (abs_int(fac.poly.eval_ones()) == 1) {
      verdict.kind = PseudonullKind::inconclusive;
      verdict.witness = fac.poly;
      return verdict;
    }
  }
  verdict.kind = PseudonullKind::pseudonull_certified;
  return verdict;
}

// One-shot wrapper: factor with the structured catalog, then apply the
// criterion. Knots short-circuit (no factorization needed for that verdict).
inline PseudonullVerdict pseudonull_verdict(const MultiLaurent& delta) {
  if (delta.is_zero())
    throw error(errc::zero_polynomial, "criterion needs a nonzero polynomial");
  if (delta.num_vars() == 1) {
    PseudonullVerdict verdict;
    verdict.kind = PseudonullKind::not_pseudonull_knot;
    return verdict;
  }
  std::optional<FactorizationCertificate> cert = structured_factor(delta);
  if (!cert)
    throw error(errc::unsupported,
                "polynomial is outside the structured factorization catalog");
  return pseudonull_criterion(*cert);
}

}  // namespace iwalink
