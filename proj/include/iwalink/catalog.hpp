#pragma once
// Catalog of link families with known Alexander data: builders for the
// multivariate polynomials, recommended directions, closed-form lambda/mu
// values used as independent cross-checks, a Torres-condition checker, and
// the Bezout-identity certificate behind the (lambda, mu) = (2, m) family.

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "iwalink/errors.hpp"
#include "iwalink/laurent.hpp"
#include "iwalink/padic.hpp"

namespace iwalink {

enum class FamilyKind { figure1, conway, c4, hosokawa, bailey, bezout };

struct LinkFamily {
  FamilyKind kind = FamilyKind::figure1;
  std::string name;
  std::optional<MultiLaurent> delta;      // multivariate Alexander polynomial
  std::optional<UnitNormalForm> reduced;  // families specified by their reduced polynomial
  std::optional<Int> linking_number;
  std::vector<long> recommended_z;
  long m = 0, a = 0, b = 0, ell = 0, r = 2, s = 0, prime = 0;
};

namespace detail {

inline long checked_pow_long(long base, long e) {
  Int r = pow_int(Int(base), static_cast<unsigned long>(e));
  if (!mpz_fits_slong_p(r.get_mpz_t()))
    throw error(errc::domain_error, "closed-form exponent overflow");
  return mpz_get_si(r.get_mpz_t());
}

inline MultiLaurent geometric_sum_in(const MultiLaurent& u, long k) {
  MultiLaurent s = MultiLaurent::constant(u.num_vars(), 0);
  MultiLaurent pw = MultiLaurent::constant(u.num_vars(), 1);
  for (long i = 0; i < k; ++i) {
    s += pw;
    pw = pw * u;
  }
  return s;
}

inline MultiLaurent eval_poly_at(const UniPoly& f, const MultiLaurent& x) {
  MultiLaurent acc = MultiLaurent::constant(x.num_vars(), 0);
  for (long i = f.degree(); i >= 0; --i)
    acc = acc * x + MultiLaurent::constant(x.num_vars(), f[static_cast<std::size_t>(i)]);
  return acc;
}

}  // namespace detail

// Two-component link with Delta = m (t1 - 1) (t2 - 1)^3, m >= 1.
inline LinkFamily figure1_link(long m) {
  if (m < 1) throw error(errc::zero_parameter, "figure1 parameter m must be >= 1");
  MultiLaurent t1 = MultiLaurent::variable(2, 0), t2 = MultiLaurent::variable(2, 1);
  MultiLaurent one = MultiLaurent::constant(2, 1);
  MultiLaurent d = (t1 - one) * (t2 - one).pow(3) * Int(m);
  LinkFamily fam;
  fam.kind = FamilyKind::figure1;
  fam.name = "figure1";
  fam.delta = std::move(d);
  fam.linking_number = Int(0);
  fam.recommended_z = {1, 1};
  fam.m = m;
  return fam;
}

// Two-bridge link C(2a, 2b, -2a) with Delta = b (t1-1)(t2-1) ((t1t2)^a - 1)/(t1t2 - 1),
// taken with |a| (the quotient is a unit multiple of the |a| form).
inline LinkFamily conway_two_bridge(long a, long b) {
  if (a == 0 || b == 0)
    throw error(errc::zero_parameter, "two-bridge parameters must be nonzero");
  MultiLaurent t1 = MultiLaurent::variable(2, 0), t2 = MultiLaurent::variable(2, 1);
  MultiLaurent one = MultiLaurent::constant(2, 1);
  MultiLaurent d =
      (t1 - one) * (t2 - one) * detail::geometric_sum_in(t1 * t2, std::labs(a)) * Int(b);
  LinkFamily fam;
  fam.kind = FamilyKind::conway;
  fam.name = "conway";
  fam.delta = std::move(d);
  fam.linking_number = Int(0);
  fam.recommended_z = {1, 1};
  fam.a = a;
  fam.b = b;
  return fam;
}

// The 2-bridge link C(4): Delta = t1 t2 + 1, linking number 2.
inline LinkFamily c4_link() {
  MultiLaurent d = MultiLaurent::variable(2, 0) * MultiLaurent::variable(2, 1) +
                   MultiLaurent::constant(2, 1);
  LinkFamily fam;
  fam.kind = FamilyKind::c4;
  fam.name = "c4";
  fam.delta = std::move(d);
  fam.linking_number = Int(2);
  fam.recommended_z = {1, 2};
  return fam;
}

// r-component link whose total-linking-number reduced polynomial is
// q^m t^{-ell} (t - 1)^{r-1+2ell}; only the direction (1, ..., 1) is covered.
inline LinkFamily hosokawa_link(long r, long ell, long m, long q) {
  if (r < 2) throw error(errc::domain_error, "hosokawa family needs r >= 2");
  if (ell < 0 || m < 0) throw error(errc::domain_error, "hosokawa parameters must be >= 0");
  require_prime(q);
  UniPoly tm1(std::vector<Int>{Int(-1), Int(1)});
  UniPoly poly(pow_int(Int(q), static_cast<unsigned long>(m)));
  for (long i = 0; i < r - 1 + 2 * ell; ++i) poly = poly * tm1;
  LinkFamily fam;
  fam.kind = FamilyKind::hosokawa;
  fam.name = "hosokawa";
  fam.reduced = UnitNormalForm{std::move(poly), -ell, 1};
  fam.recommended_z = std::vector<long>(static_cast<std::size_t>(r), 1);
  fam.r = r;
  fam.ell = ell;
  fam.m = m;
  fam.prime = q;
  return fam;
}

// Two-component link with Delta = 2^m (t1-1)(t2-1)(t1t2 + (t1t2)^{-1})^{max(0, ell-2)}.
inline LinkFamily bailey_even_family(long ell, long m) {
  if (ell < 1 || m < 0) throw error(errc::domain_error, "bailey family needs ell >= 1, m >= 0");
  MultiLaurent t1 = MultiLaurent::variable(2, 0), t2 = MultiLaurent::variable(2, 1);
  MultiLaurent one = MultiLaurent::constant(2, 1);
  MultiLaurent core = MultiLaurent::variable(2, 0) * MultiLaurent::variable(2, 1) +
                      MultiLaurent::monomial(2, {-1, -1}, Int(1));
  MultiLaurent d = (t1 - one) * (t2 - one) *
                   core.pow(static_cast<unsigned long>(std::max(0L, ell - 2))) *
                   pow_int(Int(2), static_cast<unsigned long>(m));
  LinkFamily fam;
  fam.kind = FamilyKind::bailey;
  fam.name = "bailey";
  fam.delta = std::move(d);
  fam.linking_number = Int(0);
  fam.recommended_z = ell >= 2 ? std::vector<long>{1, 4} : std::vector<long>{1, 2};
  fam.ell = ell;
  fam.m = m;
  return fam;
}

// ---------------------------------------------------------------------------
// Bezout certificate: monic N, B with N(t + 1/t) = (t^{2^m} - t^{-2^m})/(t - t^{-1}),
// B(t + 1/t) = t^{-2^m}(t - 1)(t^{2^{m+1}-1} - 1), and integer F, G with
// N F + B G = 2^m. |Res(N, B)| = 2^m is verified as part of construction.
// ---------------------------------------------------------------------------
struct BezoutCertificate {
  long m = 0;
  UniPoly N, B, F, G;
  Int res;
};

namespace detail {

// Solve the square linear system M y = rhs over Q by Gaussian elimination.
inline std::vector<mpq_class> solve_rational(std::vector<std::vector<mpq_class>> M,
                                             std::vector<mpq_class> rhs) {
  const std::size_t n = M.size();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && M[piv][k] == 0) ++piv;
    if (piv == n) throw error(errc::certificate_failure, "singular certificate system");
    std::swap(M[k], M[piv]);
    std::swap(rhs[k], rhs[piv]);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (M[i][k] == 0) continue;
      mpq_class f = M[i][k] / M[k][k];
      for (std::size_t j = k; j < n; ++j) M[i][j] -= f * M[k][j];
      rhs[i] -= f * rhs[k];
    }
  }
  std::vector<mpq_class> y(n);
  for (std::size_t i = n; i-- > 0;) {
    mpq_class s = rhs[i];
    for (std::size_t j = i + 1; j < n; ++j) s -= M[i][j] * y[j];
    y[i] = s / M[i][i];
    y[i].canonicalize();
  }
  return y;
}

}  // namespace detail

inline BezoutCertificate bezout_certificate(long m) {
  if (m < 1 || m > 16) throw error(errc::domain_error, "bezout parameter m must be in 1..16");
  const long half = detail::checked_pow_long(2, m);  // 2^m

  // C_k(t + 1/t) = t^k + t^{-k}: C_0 = 2, C_1 = x, C_k = x C_{k-1} - C_{k-2}.
  std::vector<UniPoly> C;
  C.push_back(UniPoly(2));
  C.push_back(UniPoly::monomial(1));
  UniPoly x = UniPoly::monomial(1);
  for (long k = 2; k <= half; ++k)
    C.push_back(x * C[static_cast<std::size_t>(k - 1)] - C[static_cast<std::size_t>(k - 2)]);

  UniPoly N;
  for (long k = 1; k <= half - 1; k += 2) N += C[static_cast<std::size_t>(k)];
  UniPoly B = C[static_cast<std::size_t>(half)] - C[static_cast<std::size_t>(half - 1)];

  // N F + B G = 2^m with deg F <= 2^m - 1, deg G <= 2^m - 2: the coefficient
  // equations form a square system of size 2^{m+1} - 1.
  const std::size_t nf = static_cast<std::size_t>(half);
  const std::size_t ng = static_cast<std::size_t>(half - 1);
  const std::size_t dim = nf + ng;
  std::vector<std::vector<mpq_class>> M(dim, std::vector<mpq_class>(dim, mpq_class(0)));
  std::vector<mpq_class> rhs(dim, mpq_class(0));
  rhs[0] = mpq_class(Int(half));
  for (std::size_t k = 0; k < dim; ++k) {
    for (std::size_t j = 0; j < nf; ++j)
      if (k >= j && k - j <= static_cast<std::size_t>(N.degree()))
        M[k][j] = mpq_class(N[k - j]);
    for (std::size_t j = 0; j < ng; ++j)
      if (k >= j && k - j <= static_cast<std::size_t>(B.degree()))
        M[k][nf + j] = mpq_class(B[k - j]);
  }
  std::vector<mpq_class> y = detail::solve_rational(std::move(M), std::move(rhs));

  std::vector<Int> fc(nf), gc(ng);
  for (std::size_t i = 0; i < dim; ++i) {
    if (y[i].get_den() != 1)
      throw error(errc::certificate_failure, "certificate solution is not integral");
    (i < nf ? fc[i] : gc[i - nf]) = y[i].get_num();
  }
  BezoutCertificate cert;
  cert.m = m;
  cert.N = std::move(N);
  cert.B = std::move(B);
  cert.F = UniPoly(std::move(fc));
  cert.G = UniPoly(std::move(gc));
  cert.res = resultant(cert.N, cert.B);
  if (abs_int(cert.res) != Int(half))
    throw error(errc::certificate_failure, "certificate resultant check failed");
  if (cert.N * cert.F + cert.B * cert.G != UniPoly(Int(half)))
    throw error(errc::certificate_failure, "certificate identity check failed");
  return cert;
}

// Two-component link with linking number 2^{m+1} built from the Bezout
// certificate; Delta_L = f^s ((u^{2^{m+1}}-1)/(u-1) f - (t1-1)(t2-1)(u^{2^{m+1}-1}-1)/(u-1) g)
// where u = t1 t2, f = F(u + 1/u), g = G(u + 1/u).
inline LinkFamily bezout_family(long m, long s = 0) {
  if (s < 0) throw error(errc::domain_error, "bezout family exponent s must be >= 0");
  BezoutCertificate cert = bezout_certificate(m);
  MultiLaurent u = MultiLaurent::variable(2, 0) * MultiLaurent::variable(2, 1);
  MultiLaurent uinv = MultiLaurent::monomial(2, {-1, -1}, Int(1));
  MultiLaurent xsub = u + uinv;
  MultiLaurent f = detail::eval_poly_at(cert.F, xsub);
  MultiLaurent g = detail::eval_poly_at(cert.G, xsub);
  const long period = 2 * detail::checked_pow_long(2, m);  // 2^{m+1}
  MultiLaurent t1 = MultiLaurent::variable(2, 0), t2 = MultiLaurent::variable(2, 1);
  MultiLaurent one = MultiLaurent::constant(2, 1);
  MultiLaurent d = detail::geometric_sum_in(u, period) * f -
                   (t1 - one) * (t2 - one) * detail::geometric_sum_in(u, period - 1) * g;
  if (s > 0) d = d * f.pow(static_cast<unsigned long>(s));
  LinkFamily fam;
  fam.kind = FamilyKind::bezout;
  fam.name = "bezout";
  fam.delta = std::move(d);
  fam.linking_number = Int(period);
  fam.recommended_z = {2, -1};
  fam.m = m;
  fam.s = s;
  return fam;
}

// ---------------------------------------------------------------------------
// Closed-form invariants, where known. Used as an independent check against
// the resultant/Weierstrass pipeline.
// ---------------------------------------------------------------------------
struct ClosedForm {
  long lambda = 0;
  long mu = 0;
  bool orders_nonvanishing = true;  // no level factor above the depth vanishes
};

inline std::optional<ClosedForm> closed_form_invariants(const LinkFamily& fam,
                                                        const std::vector<long>& z, long p) {
  require_prime(p);
  const std::size_t want = fam.kind == FamilyKind::hosokawa
                               ? static_cast<std::size_t>(fam.r)
                               : std::size_t(2);
  if (z.size() != want || z.empty()) return std::nullopt;
  for (long zi : z)
    if (zi == 0) return std::nullopt;

  auto val = [p](long n) { return vp_finite(Int(n), p); };

  switch (fam.kind) {
    case FamilyKind::figure1: {
      ClosedForm cf;
      cf.lambda = 1 + detail::checked_pow_long(p, val(z[0])) +
                  3 * detail::checked_pow_long(p, val(z[1]));
      cf.mu = val(fam.m);
      cf.orders_nonvanishing = true;
      return cf;
    }
    case FamilyKind::conway: {
      ClosedForm cf;
      const long s = z[0] + z[1];
      const long vzz = val(z[0]) + val(z[1]);
      if (s == 0) {
        cf.lambda = 2 + detail::checked_pow_long(p, vzz);
        cf.mu = val(fam.a) + val(fam.b);
        cf.orders_nonvanishing = true;
      } else {
        cf.lambda = 2 + detail::checked_pow_long(p, vzz) +
                    (detail::checked_pow_long(p, val(fam.a)) - 1) *
                        detail::checked_pow_long(p, val(s));
        cf.mu = val(fam.b);
        cf.orders_nonvanishing = vzz >= val(fam.a);
      }
      return cf;
    }
    case FamilyKind::c4: {
      ClosedForm cf;
      const long s = z[0] + z[1];
      if (p != 2) {
        cf.lambda = 1;
        cf.mu = 0;
        cf.orders_nonvanishing = true;
      } else if (s == 0) {
        cf.lambda = 1;
        cf.mu = 1;
        cf.orders_nonvanishing = true;
      } else {
        cf.lambda = 1 + detail::checked_pow_long(2, val(s));
        cf.mu = 0;
        // Phi_{2^(v2(s)+1)} divides t^|s| + 1; harmless only below the depth.
        cf.orders_nonvanishing = val(s) + 1 <= std::max(val(z[0]), val(z[1]));
      }
      return cf;
    }
    case FamilyKind::hosokawa: {
      for (long zi : z)
        if (zi != 1) return std::nullopt;
      ClosedForm cf;
      cf.lambda = fam.r - 1 + 2 * fam.ell;
      cf.mu = p == fam.prime ? fam.m : 0;
      cf.orders_nonvanishing = true;
      return cf;
    }
    case FamilyKind::bailey: {
      ClosedForm cf;
      const long s = z[0] + z[1];
      const long core_mult = std::max(0L, fam.ell - 2);
      cf.lambda = 1 + detail::checked_pow_long(p, val(z[0])) +
                  detail::checked_pow_long(p, val(z[1]));
      cf.mu = 0;
      cf.orders_nonvanishing = true;
      if (p == 2) {
        cf.mu = fam.m;
        if (s == 0) {
          cf.mu += core_mult;
        } else if (core_mult > 0) {
          cf.lambda += core_mult * detail::checked_pow_long(2, 1 + val(s));
          // (t^{2|s|} + 1) carries Phi_{2^(v2(s)+2)}.
          cf.orders_nonvanishing = val(s) + 2 <= std::max(val(z[0]), val(z[1]));
        }
      }
      return cf;
    }
    case FamilyKind::bezout: {
      ClosedForm cf;
      if (p != 2) {  // linking number 2^{m+1} is a p-unit
        cf.lambda = 1;
        cf.mu = 0;
        cf.orders_nonvanishing = true;
        return cf;
      }
      if (z[0] == 2 && z[1] == -1) {
        cf.lambda = 2;
        cf.mu = fam.m;
        cf.orders_nonvanishing = true;
        return cf;
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

// Torres conditions testable from the polynomial alone (2-component case):
// |Delta(1,1)| must equal |l12|, and Delta must be symmetric under
// t_i -> t_i^{-1} up to a unit.
struct TorresReport {
  bool pass = false;
  std::string reason;
};

inline TorresReport torres_check(const MultiLaurent& delta, const Int& l12) {
  if (delta.num_vars() != 2)
    throw error(errc::arity_error, "Torres check is implemented for 2 components");
  TorresReport rep;
  if (abs_int(delta.eval_ones()) != abs_int(l12)) {
    rep.reason = "value at (1,1) does not match the linking number";
    return rep;
  }
  if (!unit_associate(delta.involution(), delta)) {
    rep.reason = "polynomial is not symmetric under inversion of the variables";
    return rep;
  }
  rep.pass = true;
  rep.reason = "ok";
  return rep;
}

}  // namespace iwalink
