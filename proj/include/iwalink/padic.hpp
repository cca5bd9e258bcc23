#pragma once
// p-adic tools: valuations, prime-power cyclotomic polynomials, Weierstrass
// invariants of an integer polynomial, and its distinguished part to a given
// p-adic precision via Hensel lifting.

#include <optional>
#include <stdexcept>
#include <vector>

#include "iwalink/errors.hpp"
#include "iwalink/laurent.hpp"

namespace iwalink {

// Valuation value in Z>=0 or +infinity (for the zero element).
struct Valuation {
  bool infinite = false;
  long value = 0;

  static Valuation inf() { return Valuation{true, 0}; }
  static Valuation of(long v) { return Valuation{false, v}; }

  friend bool operator==(const Valuation& a, const Valuation& b) {
    return a.infinite == b.infinite && (a.infinite || a.value == b.value);
  }
  friend bool operator<(const Valuation& a, const Valuation& b) {
    if (a.infinite) return false;
    if (b.infinite) return true;
    return a.value < b.value;
  }
};

inline Valuation vp(const Int& n, long p) {
  require_prime(p);
  if (n == 0) return Valuation::inf();
  Int rest, pp(p);
  auto k = mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), pp.get_mpz_t());
  return Valuation::of(static_cast<long>(k));
}

inline long vp_finite(const Int& n, long p) {
  Valuation v = vp(n, p);
  if (v.infinite) throw error(errc::zero_parameter, "valuation of zero is infinite");
  return v.value;
}

// Cyclotomic polynomial for a prime-power index: Phi_{p^n}(t) =
// sum_{i<p} t^{i*p^(n-1)}, of degree p^(n-1)(p-1).
inline UniPoly cyclotomic(long p, long n) {
  require_prime(p);
  if (n < 1) throw error(errc::domain_error, "cyclotomic index exponent must be >= 1");
  double approx = static_cast<double>(p - 1);
  for (long i = 1; i < n; ++i) approx *= static_cast<double>(p);
  if (approx > 16'777'216.0)
    throw error(errc::domain_error, "cyclotomic degree is too large");
  unsigned long step = 1;
  for (long i = 1; i < n; ++i) step *= static_cast<unsigned long>(p);
  std::vector<Int> c(step * static_cast<unsigned long>(p - 1) + 1, Int(0));
  for (long i = 0; i < p; ++i) c[static_cast<std::size_t>(i) * step] = 1;
  return UniPoly(std::move(c));
}

// Taylor shift t -> 1 + T: returns the coefficients of f(1 + T).
inline UniPoly shift_to_T(const UniPoly& f) {
  std::vector<Int> a(f.coeffs());
  const std::size_t n = a.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = n - 1; j > i; --j) a[j - 1] += a[j];
  return UniPoly(std::move(a));
}

struct WeierstrassData {
  long mu = 0;
  long lambda = 0;
  long shifted_degree = 0;  // degree of f(1 + T)
};

// mu = min_i vp(a_i) and lambda = least index attaining it, for
// f(1 + T) = sum a_i T^i. Requires f nonzero.
inline WeierstrassData weierstrass_invariants(const UniPoly& f, long p) {
  require_prime(p);
  if (f.is_zero())
    throw error(errc::zero_polynomial, "Weierstrass invariants of the zero polynomial");
  UniPoly g = shift_to_T(f);
  long mu = -1, lambda = -1;
  for (long i = 0; i <= g.degree(); ++i) {
    const Int& c = g[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    long v = vp_finite(c, p);
    if (mu < 0 || v < mu) {
      mu = v;
      lambda = i;
    }
  }
  return WeierstrassData{mu, lambda, g.degree()};
}

inline WeierstrassData weierstrass_invariants(const UnitNormalForm& f, long p) {
  if (f.is_zero())
    throw error(errc::zero_polynomial, "Weierstrass invariants of the zero polynomial");
  return weierstrass_invariants(f.poly, p);
}

namespace detail {

// Coefficients of f reduced into [0, m).
inline std::vector<Int> coeffs_mod(const UniPoly& f, const Int& m) {
  std::vector<Int> r(f.coeffs());
  for (Int& c : r) {
    mpz_mod(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  }
  return r;
}

inline void trim_vec(std::vector<Int>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

// Product truncated below degree `bound`, coefficients mod m.
inline std::vector<Int> mul_trunc_mod(const std::vector<Int>& a, const std::vector<Int>& b,
                                      std::size_t bound, const Int& m) {
  std::vector<Int> r(std::min(bound, a.empty() || b.empty() ? std::size_t(0) : a.size() + b.size() - 1),
                     Int(0));
  for (std::size_t i = 0; i < a.size() && i < bound; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j < bound; ++j) r[i + j] += a[i] * b[j];
  }
  for (Int& c : r) mpz_mod(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  trim_vec(r);
  return r;
}

// Inverse of h mod (m, T^bound) by power-series division; h[0] must be a
// unit mod m.
inline std::vector<Int> series_inverse_mod(const std::vector<Int>& h, std::size_t bound,
                                           const Int& m) {
  Int h0inv;
  if (h.empty() || mpz_invert(h0inv.get_mpz_t(), h[0].get_mpz_t(), m.get_mpz_t()) == 0)
    throw std::logic_error("series_inverse_mod: constant term is not a unit");
  std::vector<Int> tau(bound, Int(0));
  tau[0] = h0inv;
  for (std::size_t i = 1; i < bound; ++i) {
    Int s(0);
    for (std::size_t j = 1; j <= i && j < h.size(); ++j) s += h[j] * tau[i - j];
    Int t = (-h0inv * s) % m;
    mpz_mod(t.get_mpz_t(), t.get_mpz_t(), m.get_mpz_t());
    tau[i] = t;
  }
  trim_vec(tau);
  return tau;
}

}  // namespace detail

// Distinguished part of f at p to precision p^k: writing f(1 + T) =
// p^mu * G(T) with some coefficient of G a p-adic unit, G factors uniquely
// as P * U with P monic of degree lambda, P == T^lambda mod p, and U a unit
// power series; this computes P and U mod p^k.
struct DistinguishedPart {
  long p = 0;
  long k = 0;
  Int pk;        // p^k
  long mu = 0;
  long lambda = 0;
  std::vector<Int> P;  // monic degree-lambda coefficients, reduced mod p^k
  std::vector<Int> U;  // unit cofactor coefficients, reduced mod p^k
};

inline DistinguishedPart distinguished_part(const UniPoly& f, long p, long k = 8) {
  require_prime(p);
  if (k < 1) throw error(errc::domain_error, "precision must be >= 1");
  if (f.is_zero())
    throw error(errc::zero_polynomial, "distinguished part of the zero polynomial");
  WeierstrassData w = weierstrass_invariants(f, p);
  UniPoly G = scalar_div_exact(shift_to_T(f), pow_int(Int(p), static_cast<unsigned long>(w.mu)));
  const std::size_t lam = static_cast<std::size_t>(w.lambda);
  const std::size_t glen = G.coeffs().size();
  const Int pz(p);
  const Int pk = pow_int(pz, static_cast<unsigned long>(k));

  // Mod-p seed: G == T^lambda * h (mod p) with h(0) a unit.
  std::vector<Int> h(glen - lam, Int(0));
  for (std::size_t i = lam; i < glen; ++i) {
    mpz_mod(h[i - lam].get_mpz_t(), G[i].get_mpz_t(), pz.get_mpz_t());
  }
  detail::trim_vec(h);

  std::vector<Int> P(lam + 1, Int(0));
  P[lam] = 1;
  std::vector<Int> U = h;
  std::vector<Int> tau =
      lam == 0 ? std::vector<Int>{} : detail::series_inverse_mod(h, lam, pz);

  Int pj(p);  // p^j
  for (long j = 1; j < k; ++j) {
    const Int mod_next = pj * pz;  // p^(j+1)
    // E = G - P*U mod p^(j+1); all coefficients divisible by p^j.
    std::vector<Int> PU = detail::mul_trunc_mod(P, U, glen, mod_next);
    std::vector<Int> E(glen, Int(0));
    for (std::size_t i = 0; i < glen; ++i) {
      Int d = G[i] - (i < PU.size() ? PU[i] : Int(0));
      mpz_mod(d.get_mpz_t(), d.get_mpz_t(), mod_next.get_mpz_t());
      E[i] = std::move(d);
    }
    std::vector<Int> e(glen, Int(0));
    for (std::size_t i = 0; i < glen; ++i) {
      Int q = exact_div(E[i], pj);
      mpz_mod(q.get_mpz_t(), q.get_mpz_t(), pz.get_mpz_t());
      e[i] = std::move(q);
    }
    detail::trim_vec(e);
    // Split e = A*U0 + B*T^lambda mod p with deg A < lambda:
    // A = trunc(tau * e), B = (e - A*U0) / T^lambda.
    std::vector<Int> A = lam == 0 ? std::vector<Int>{}
                                  : detail::mul_trunc_mod(tau, e, lam, pz);
    std::vector<Int> AU = detail::mul_trunc_mod(A, h, glen, pz);
    std::vector<Int> B;
    {
      std::size_t blen = std::max(e.size(), AU.size());
      for (std::size_t i = lam; i < blen; ++i) {
        Int d = (i < e.size() ? e[i] : Int(0)) - (i < AU.size() ? AU[i] : Int(0));
        mpz_mod(d.get_mpz_t(), d.get_mpz_t(), pz.get_mpz_t());
        B.push_back(std::move(d));
      }
      for (std::size_t i = 0; i < lam && i < std::max(e.size(), AU.size()); ++i) {
        Int d = (i < e.size() ? e[i] : Int(0)) - (i < AU.size() ? AU[i] : Int(0));
        mpz_mod(d.get_mpz_t(), d.get_mpz_t(), pz.get_mpz_t());
        if (d != 0) throw std::logic_error("distinguished_part: lift split failed");
      }
      detail::trim_vec(B);
    }
    for (std::size_t i = 0; i < A.size(); ++i) P[i] = (P[i] + pj * A[i]) % pk;
    if (U.size() < B.size()) U.resize(B.size(), Int(0));
    for (std::size_t i = 0; i < B.size(); ++i) U[i] = (U[i] + pj * B[i]) % pk;
    pj = mod_next;
  }

  for (Int& c : P) mpz_mod(c.get_mpz_t(), c.get_mpz_t(), pk.get_mpz_t());
  for (Int& c : U) mpz_mod(c.get_mpz_t(), c.get_mpz_t(), pk.get_mpz_t());
  detail::trim_vec(U);

  // Verify P*U == G mod p^k before returning.
  {
    std::vector<Int> PU = detail::mul_trunc_mod(P, U, glen, pk);
    for (std::size_t i = 0; i < glen; ++i) {
      Int d = G[i] - (i < PU.size() ? PU[i] : Int(0));
      mpz_mod(d.get_mpz_t(), d.get_mpz_t(), pk.get_mpz_t());
      if (d != 0) throw std::logic_error("distinguished_part: verification failed");
    }
  }

  DistinguishedPart out;
  out.p = p;
  out.k = k;
  out.pk = pk;
  out.mu = w.mu;
  out.lambda = w.lambda;
  out.P = std::move(P);
  out.U = std::move(U);
  return out;
}

inline DistinguishedPart distinguished_part(const UnitNormalForm& f, long p, long k = 8) {
  if (f.is_zero())
    throw error(errc::zero_polynomial, "distinguished part of the zero polynomial");
  return distinguished_part(f.poly, p, k);
}

}  // namespace iwalink
