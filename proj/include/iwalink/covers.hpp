#pragma once
// Homology growth in p-power cyclic cover towers: reduced polynomial of a
// direction, per-level resultant factors, exact order tables, and the
// lambda/mu/nu growth invariants.
//
// Level factors |Res(Phi_{p^m}, f)| are computed modulo a pool of 60-bit
// primes (Phi is only ever needed as t^{p^(m-1)} mod f, obtained by binary
// exponentiation) and reassembled by CRT against a rigorous bound
// |Res| <= content^D * l1norm(primitive part)^D, D = deg Phi_{p^m}. The
// roots of Phi lie on the unit circle, which is what makes the l1 bound
// valid. Small cases are cross-checked against the direct resultant in the
// test suite.

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

#include "iwalink/errors.hpp"
#include "iwalink/laurent.hpp"
#include "iwalink/padic.hpp"

namespace iwalink {

inline int thread_budget() {
  static const int cached = [] {
    long v = 0;
    if (const char* s = std::getenv("IWALINK_THREADS"); s && *s)
      v = std::strtol(s, nullptr, 10);
    if (v <= 0) v = static_cast<long>(std::thread::hardware_concurrency());
    if (v <= 0) v = 1;
    if (v > 256) v = 256;
    return static_cast<int>(v);
  }();
  return cached;
}

namespace detail {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mulmod(u64 a, u64 b, u64 q) { return static_cast<u64>(static_cast<u128>(a) * b % q); }

inline u64 powmod_u64(u64 base, u64 e, u64 q) {
  u64 r = 1 % q;
  base %= q;
  while (e > 0) {
    if (e & 1UL) r = mulmod(r, base, q);
    base = mulmod(base, base, q);
    e >>= 1UL;
  }
  return r;
}

inline u64 invmod(u64 a, u64 q) { return powmod_u64(a, q - 2, q); }

// Shared, lazily extended pool of 60-bit primes (deterministic sequence).
inline std::vector<u64>& modular_prime_pool() {
  static std::vector<u64> pool;
  return pool;
}
inline std::mutex& modular_prime_mutex() {
  static std::mutex m;
  return m;
}

// First `count` pool primes that do not divide `lc`.
inline std::vector<u64> gather_primes(std::size_t count, const Int& lc) {
  std::lock_guard<std::mutex> lock(modular_prime_mutex());
  auto& pool = modular_prime_pool();
  std::vector<u64> out;
  out.reserve(count);
  std::size_t i = 0;
  Int cursor = Int(1) << 59;
  if (!pool.empty()) cursor = Int(pool.back());
  while (out.size() < count) {
    if (i == pool.size()) {
      Int next;
      mpz_nextprime(next.get_mpz_t(), cursor.get_mpz_t());
      cursor = next;
      pool.push_back(mpz_get_ui(next.get_mpz_t()));
    }
    u64 q = pool[i++];
    if (mpz_fdiv_ui(lc.get_mpz_t(), q) != 0) out.push_back(q);
  }
  return out;
}

using FqPoly = std::vector<u64>;  // ascending coefficients, trimmed, in [0, q)

inline void trim_fq(FqPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline FqPoly reduce_mod_q(const UniPoly& f, u64 q) {
  FqPoly r(f.coeffs().size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    u64 c = mpz_fdiv_ui(f[i].get_mpz_t(), q);
    r[i] = c;
  }
  trim_fq(r);
  return r;
}

inline FqPoly mul_fq(const FqPoly& a, const FqPoly& b, u64 q) {
  if (a.empty() || b.empty()) return {};
  FqPoly r(a.size() + b.size() - 1);
  for (std::size_t k = 0; k < r.size(); ++k) {
    std::size_t lo = k + 1 > b.size() ? k + 1 - b.size() : 0;
    std::size_t hi = std::min(k + 1, a.size());
    u128 acc = 0;
    std::size_t pending = 0;
    for (std::size_t i = lo; i < hi; ++i) {
      acc += static_cast<u128>(a[i]) * b[k - i];
      if (++pending == 120) {
        acc %= q;
        pending = 0;
      }
    }
    r[k] = static_cast<u64>(acc % q);
  }
  trim_fq(r);
  return r;
}

// In-place remainder of a by monic b (lc(b) == 1), deg b >= 1.
inline void rem_monic_fq(FqPoly& a, const FqPoly& b, u64 q) {
  const std::size_t db = b.size() - 1;
  if (a.size() <= db) return;
  if (db <= 200) {
    // Lazy variant: accumulate in 128-bit slots; each slot absorbs at most
    // db products below 2^120, safe for db <= 200.
    std::vector<u128> w(a.begin(), a.end());
    for (std::size_t i = a.size(); i-- > db;) {
      u64 c = static_cast<u64>(w[i] % q);
      w[i] = 0;
      if (c == 0) continue;
      for (std::size_t j = 0; j < db; ++j)
        w[i - db + j] += static_cast<u128>(c) * (q - b[j]);
    }
    a.resize(db);
    for (std::size_t i = 0; i < db; ++i) a[i] = static_cast<u64>(w[i] % q);
  } else {
    for (std::size_t i = a.size(); i-- > db;) {
      u64 c = a[i] % q;
      a[i] = 0;
      if (c == 0) continue;
      for (std::size_t j = 0; j < db; ++j) {
        u64 t = mulmod(c, b[j], q);
        u64& slot = a[i - db + j];
        slot = slot >= t ? slot - t : slot + q - t;
      }
    }
    a.resize(db);
  }
  trim_fq(a);
}

inline FqPoly mulrem_fq(const FqPoly& a, const FqPoly& b, const FqPoly& mod, u64 q) {
  FqPoly r = mul_fq(a, b, q);
  rem_monic_fq(r, mod, q);
  return r;
}

// t^e mod `mod` (monic, deg >= 1), exponent given as a big integer.
inline FqPoly power_of_t_fq(const Int& e, const FqPoly& mod, u64 q) {
  FqPoly r{1 % q};
  if (mod.size() == 1) return {};  // deg 0 modulus: everything reduces to 0
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    r = mulrem_fq(r, r, mod, q);
    if (mpz_tstbit(e.get_mpz_t(), i)) {
      r.insert(r.begin(), 0);  // multiply by t
      rem_monic_fq(r, mod, q);
    }
  }
  return r;
}

// (sum_{i<k} u^i, u^k) mod `mod`.
inline std::pair<FqPoly, FqPoly> geometric_sum_fq(const FqPoly& u, unsigned long k,
                                                  const FqPoly& mod, u64 q) {
  if (k == 1) return {FqPoly{1 % q}, u};
  auto [s, pw] = geometric_sum_fq(u, k / 2, mod, q);
  FqPoly s2 = s;
  {
    FqPoly t = mulrem_fq(pw, s, mod, q);
    s2.resize(std::max(s2.size(), t.size()), 0);
    for (std::size_t i = 0; i < t.size(); ++i) {
      s2[i] += t[i];
      if (s2[i] >= q) s2[i] -= q;
    }
    trim_fq(s2);
  }
  FqPoly p2 = mulrem_fq(pw, pw, mod, q);
  if (k % 2 == 1) {
    s2.resize(std::max(s2.size(), p2.size()), 0);
    for (std::size_t i = 0; i < p2.size(); ++i) {
      s2[i] += p2[i];
      if (s2[i] >= q) s2[i] -= q;
    }
    trim_fq(s2);
    p2 = mulrem_fq(p2, u, mod, q);
  }
  return {std::move(s2), std::move(p2)};
}

// Euclidean resultant over F_q.
inline u64 resultant_fq(FqPoly a, FqPoly b, u64 q) {
  if (a.empty() || b.empty()) return 0;
  u64 r = 1;
  while (true) {
    if (b.size() == 1) return mulmod(r, powmod_u64(b[0], a.size() - 1, q), q);
    const std::size_t da = a.size() - 1, db = b.size() - 1;
    // a mod b
    u64 binv = invmod(b.back(), q);
    FqPoly rem = a;
    for (std::size_t i = rem.size(); i-- > db;) {
      u64 c = mulmod(rem[i], binv, q);
      rem[i] = 0;
      if (c == 0) continue;
      for (std::size_t j = 0; j < db; ++j) {
        u64 t = mulmod(c, b[j], q);
        u64& slot = rem[i - db + j];
        slot = slot >= t ? slot - t : slot + q - t;
      }
    }
    trim_fq(rem);
    if (rem.empty()) return 0;
    const std::size_t dr = rem.size() - 1;
    r = mulmod(r, powmod_u64(b.back(), da - dr, q), q);
    if ((da & 1UL) && (db & 1UL) && r != 0) r = q - r;
    a = std::move(b);
    b = std::move(rem);
  }
}

// Res(Phi_{p^m}, f) mod q for monic-normalized fq image of f; D = deg Phi.
inline u64 level_residue(const UniPoly& prim, long p, long m, unsigned long D, u64 q) {
  FqPoly fq = reduce_mod_q(prim, q);
  const std::size_t d = fq.size() - 1;
  u64 lc = fq.back();
  u64 lcinv = invmod(lc, q);
  FqPoly monic = fq;
  for (u64& c : monic) c = mulmod(c, lcinv, q);
  Int e(p);
  mpz_pow_ui(e.get_mpz_t(), e.get_mpz_t(), static_cast<unsigned long>(m - 1));
  FqPoly u = power_of_t_fq(e, monic, q);
  FqPoly h = geometric_sum_fq(u, static_cast<unsigned long>(p), monic, q).first;
  u64 res = resultant_fq(monic, h, q);
  res = mulmod(res, powmod_u64(lc, D % (q - 1), q), q);
  if ((D & 1UL) && (d & 1UL) && res != 0) res = q - res;
  return res;
}

}  // namespace detail

// |Res(Phi_{p^m}, f)| computed exactly via CRT over 60-bit primes.
inline Int level_factor_abs(const UniPoly& f, long p, long m, int threads = 0) {
  require_prime(p);
  if (m < 1) throw error(errc::domain_error, "cover level must be >= 1");
  if (f.is_zero()) return Int(0);

  Int D_int = pow_int(Int(p), static_cast<unsigned long>(m - 1)) * Int(p - 1);
  if (!D_int.fits_ulong_p() || D_int > Int(1) << 40)
    throw error(errc::domain_error, "cyclotomic degree is too large");
  const unsigned long D = mpz_get_ui(D_int.get_mpz_t());

  const Int content = f.content();
  const UniPoly prim = scalar_div_exact(f, content);

  Int content_pow;
  {
    std::size_t cbits = mpz_sizeinbase(content.get_mpz_t(), 2);
    if (content != 1 && static_cast<double>(cbits) * static_cast<double>(D) > 2e8)
      throw error(errc::domain_error, "level factor is too large to compute");
    content_pow = pow_int(content, D);
  }
  if (prim.degree() == 0) return content_pow;

  Int l1(0);
  for (const Int& c : prim.coeffs()) l1 += abs_int(c);
  {
    std::size_t lbits = mpz_sizeinbase(l1.get_mpz_t(), 2);
    if (static_cast<double>(lbits) * static_cast<double>(D) > 2e8)
      throw error(errc::domain_error, "level factor is too large to compute");
  }
  Int bound = pow_int(l1, D);
  const std::size_t nbits = mpz_sizeinbase(bound.get_mpz_t(), 2);
  const std::size_t count = (nbits + 2 + 58) / 59;

  std::vector<detail::u64> primes = detail::gather_primes(count, prim.lead());
  std::vector<detail::u64> residues(count, 0);

  int budget = threads > 0 ? threads : thread_budget();
  budget = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(budget), count));
  if (budget <= 1) {
    for (std::size_t i = 0; i < count; ++i)
      residues[i] = detail::level_residue(prim, p, m, D, primes[i]);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1))
        residues[i] = detail::level_residue(prim, p, m, D, primes[i]);
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(budget));
    for (int t = 0; t < budget; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  // Incremental CRT, then the symmetric representative.
  Int M(1), x(0);
  for (std::size_t i = 0; i < count; ++i) {
    const detail::u64 q = primes[i];
    if (M == 1) {
      M = Int(q);
      x = Int(residues[i]);
      continue;
    }
    detail::u64 xq = mpz_fdiv_ui(x.get_mpz_t(), q);
    detail::u64 mq = mpz_fdiv_ui(M.get_mpz_t(), q);
    detail::u64 diff = residues[i] >= xq ? residues[i] - xq : residues[i] + q - xq;
    detail::u64 t = detail::mulmod(diff, detail::invmod(mq, q), q);
    mpz_addmul_ui(x.get_mpz_t(), M.get_mpz_t(), t);
    M *= q;
  }
  if (2 * x > M) x -= M;
  return content_pow * abs_int(x);
}

// All n >= 1 with Phi_{p^n} dividing f.
inline std::vector<long> vanishing_levels(const UniPoly& f, long p) {
  require_prime(p);
  std::vector<long> out;
  if (f.is_zero()) throw error(errc::zero_polynomial, "vanishing levels of zero");
  for (long n = 1;; ++n) {
    double deg = static_cast<double>(p - 1);
    for (long i = 1; i < n; ++i) deg *= static_cast<double>(p);
    if (deg > static_cast<double>(f.degree())) break;
    UniPoly phi = cyclotomic(p, n);
    auto [q, r] = divrem_monic(f, phi);
    if (r.is_zero()) out.push_back(n);
  }
  return out;
}

// Order of the p^n-fold branched cyclic cover of a knot with Alexander
// polynomial deltaK: the product of |Res(Phi_{p^m}, deltaK)| over m <= n.
// Genuine knot polynomials satisfy |deltaK(1)| = 1, which also rules out
// cyclotomic factors at p.
inline Int knot_base_order(const UniPoly& deltaK, long p, long n, int threads = 0) {
  require_prime(p);
  if (deltaK.is_zero() || abs_int(deltaK(Int(1))) != 1)
    throw error(errc::not_a_knot_polynomial,
                "component polynomial must take value +-1 at t = 1");
  Int order(1);
  for (long m = 1; m <= n; ++m) order *= level_factor_abs(deltaK, p, m, threads);
  return order;
}

// ---------------------------------------------------------------------------
// Cover specification and growth data.
// ---------------------------------------------------------------------------
struct CoverSpec {
  MultiLaurent delta = MultiLaurent(1);
  std::vector<long> z;
  long p = 2;
  // Alexander polynomials of the individual components (unknots when empty);
  // used for base levels n <= v of a 2-component tower.
  std::vector<UniPoly> component_knot_polys;
};

inline void validate(const CoverSpec& spec) {
  const int r = spec.delta.num_vars();
  if (static_cast<int>(spec.z.size()) != r)
    throw error(errc::variable_mismatch, "direction vector length must equal the number of variables");
  Int g(0);
  for (long zi : spec.z) {
    if (zi == 0) throw error(errc::zero_direction, "direction vector has a zero entry");
    Int a(zi);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
  }
  if (g != 1)
    throw error(errc::invalid_direction, "direction vector entries must have gcd 1");
  require_prime(spec.p);
  if (!spec.component_knot_polys.empty() &&
      static_cast<int>(spec.component_knot_polys.size()) != r)
    throw error(errc::variable_mismatch,
                "component polynomial list must have one entry per component");
}

// max_i v_p(z_i); finite because the entries are nonzero.
inline long direction_depth(const CoverSpec& spec) {
  long v = 0;
  for (long zi : spec.z) v = std::max(v, vp_finite(Int(zi), spec.p));
  return v;
}

// Reduced polynomial of the direction: (t - 1) * delta(t^{z_1}, ..., t^{z_r})
// for links with r >= 2 components, and plain specialization for knots.
inline UnitNormalForm reduced_polynomial(const CoverSpec& spec) {
  validate(spec);
  UnitNormalForm s = spec.delta.specialize(spec.z);
  if (spec.delta.num_vars() == 1 || s.is_zero()) return s;
  UniPoly tm1(std::vector<Int>{Int(-1), Int(1)});
  s.poly = s.poly * tm1;
  return s;
}

struct GrowthRow {
  long n = 0;
  Int order;                  // |H_1| of the level-n cover; 0 = infinite
  std::optional<long> e;      // v_p(order) when the order is finite and nonzero
};

using GrowthTable = std::vector<GrowthRow>;

namespace detail {

// Orders for levels 0..min(nmax, v), i.e. before the reduced polynomial
// takes over.
inline std::vector<Int> base_orders(const CoverSpec& spec, long v, long nmax, int threads) {
  const int r = spec.delta.num_vars();
  std::vector<Int> base{Int(1)};
  if (v == 0 || nmax < 1) return base;
  if (r >= 3)
    throw error(errc::base_unavailable,
                "levels below the direction depth need per-component data, which is "
                "only supported for 2-component links");
  // r == 2 and v > 0: exactly one z_i is a p-unit; those levels are branched
  // covers of that component alone.
  int unit_index = vp_finite(Int(spec.z[0]), spec.p) == 0 ? 0 : 1;
  UniPoly K = spec.component_knot_polys.empty() ? UniPoly(1)
                                                : spec.component_knot_polys[static_cast<std::size_t>(unit_index)];
  if (K.is_zero() || abs_int(K(Int(1))) != 1)
    throw error(errc::not_a_knot_polynomial,
                "component polynomial must take value +-1 at t = 1");
  Int acc(1);
  for (long n = 1; n <= std::min(v, nmax); ++n) {
    acc *= level_factor_abs(K, spec.p, n, threads);
    base.push_back(acc);
  }
  return base;
}

}  // namespace detail

// Growth table driven by a reduced polynomial directly. base holds the
// orders of levels 0..v (so base[0] == 1 and v = base.size() - 1); level
// factors of the reduced polynomial take over from level v + 1 on.
inline GrowthTable orders_from_reduced(const UnitNormalForm& red, long p, long nmax,
                                       const std::vector<Int>& base, int threads = 0) {
  require_prime(p);
  if (nmax < 0) throw error(errc::domain_error, "nmax must be >= 0");
  if (base.empty() || base.front() != 1)
    throw error(errc::domain_error, "base orders must start with 1 at level 0");
  const long v = static_cast<long>(base.size()) - 1;
  GrowthTable table;
  table.reserve(static_cast<std::size_t>(nmax) + 1);
  Int acc = Int(1);
  for (long n = 0; n <= nmax; ++n) {
    Int order;
    if (n <= v) {
      order = base[static_cast<std::size_t>(n)];
    } else {
      if (n == v + 1) acc = base.back();
      acc = red.is_zero() ? Int(0) : acc * level_factor_abs(red.poly, p, n, threads);
      order = acc;
    }
    GrowthRow row;
    row.n = n;
    row.order = order;
    if (order != 0) row.e = vp_finite(order, p);
    table.push_back(std::move(row));
  }
  return table;
}

inline GrowthTable homology_orders(const CoverSpec& spec, long nmax, int threads = 0) {
  validate(spec);
  if (nmax < 0) throw error(errc::domain_error, "nmax must be >= 0");
  const long v = direction_depth(spec);
  UnitNormalForm red = reduced_polynomial(spec);
  std::vector<Int> base = detail::base_orders(spec, v, nmax, threads);
  return orders_from_reduced(red, spec.p, nmax, base, threads);
}

struct IwasawaInvariants {
  long lambda = 0;
  long mu = 0;
  std::optional<long long> nu;     // absent when some level factor vanishes
  long v = 0;                      // direction depth
  long n0 = 0;                     // growth law holds for n >= n0
  std::vector<long> vanishing_levels;  // levels > v whose factor is zero
};

// Invariants driven by a reduced polynomial directly; base as in
// orders_from_reduced.
inline IwasawaInvariants invariants_from_reduced(const UnitNormalForm& red, long p,
                                                 const std::vector<Int>& base,
                                                 int threads = 0) {
  require_prime(p);
  if (red.is_zero())
    throw error(errc::zero_polynomial, "reduced polynomial vanishes identically");
  if (base.empty() || base.front() != 1)
    throw error(errc::domain_error, "base orders must start with 1 at level 0");
  const long v = static_cast<long>(base.size()) - 1;
  WeierstrassData w = weierstrass_invariants(red.poly, p);

  IwasawaInvariants out;
  out.lambda = w.lambda;
  out.mu = w.mu;
  out.v = v;
  long n0 = 1;
  {
    // least n with p^(n-1) * (p-1) > lambda
    Int phi_deg(p - 1);
    while (phi_deg <= w.lambda) {
      phi_deg *= p;
      ++n0;
    }
  }
  out.n0 = std::max(v + 1, n0);

  for (long n : vanishing_levels(red.poly, p))
    if (n > v) out.vanishing_levels.push_back(n);
  if (!out.vanishing_levels.empty()) return out;  // orders blow up; nu undefined

  GrowthTable table = orders_from_reduced(red, p, out.n0 + 2, base, threads);
  std::optional<Int> nu;
  for (long n = out.n0; n <= out.n0 + 2; ++n) {
    const GrowthRow& row = table[static_cast<std::size_t>(n)];
    if (!row.e)
      throw error(errc::stabilization_failure, "unexpected infinite level order");
    Int cand = Int(*row.e) - Int(out.lambda) * n -
               Int(out.mu) * pow_int(Int(p), static_cast<unsigned long>(n));
    if (!nu) {
      nu = cand;
    } else if (*nu != cand) {
      throw error(errc::stabilization_failure,
                  "growth defect did not stabilize at the predicted level");
    }
  }
  if (!mpz_fits_slong_p(nu->get_mpz_t()))
    throw error(errc::domain_error, "nu does not fit in a machine integer");
  out.nu = static_cast<long long>(mpz_get_si(nu->get_mpz_t()));
  return out;
}

inline IwasawaInvariants iwasawa_invariants(const CoverSpec& spec, int threads = 0) {
  validate(spec);
  UnitNormalForm red = reduced_polynomial(spec);
  if (red.is_zero())
    throw error(errc::zero_polynomial, "reduced polynomial vanishes identically");
  const long v = direction_depth(spec);
  std::vector<Int> base = detail::base_orders(spec, v, v, threads);
  return invariants_from_reduced(red, spec.p, base, threads);
}

}  // namespace iwalink
