#pragma once
// Exact integer polynomial arithmetic: sparse multivariate Laurent
// polynomials, dense univariate polynomials, unit normalization, and
// resultants (subresultant PRS plus an independent Sylvester-determinant
// implementation used as a cross-check).

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "iwalink/errors.hpp"

namespace iwalink {

using Int = mpz_class;

inline Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

// Division that must be exact; an inexact quotient here is a library bug.
inline Int exact_div(const Int& a, const Int& b) {
  Int q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (r != 0) throw std::logic_error("exact_div: division was not exact");
  return q;
}

inline Int abs_int(const Int& a) {
  Int r;
  mpz_abs(r.get_mpz_t(), a.get_mpz_t());
  return r;
}

inline bool is_prime_long(long p) {
  if (p < 2) return false;
  Int t(p);
  return mpz_probab_prime_p(t.get_mpz_t(), 32) > 0;
}

inline void require_prime(long p) {
  if (!is_prime_long(p))
    throw error(errc::not_prime, "p = " + std::to_string(p) + " is not prime");
}

// ---------------------------------------------------------------------------
// Dense univariate polynomial over Z. Index = exponent, trailing zeros
// trimmed, empty vector = zero polynomial (degree -1).
// ---------------------------------------------------------------------------
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(long c) : UniPoly(Int(c)) {}
  explicit UniPoly(Int c) {
    if (c != 0) c_.push_back(std::move(c));
  }
  explicit UniPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UniPoly monomial(std::size_t deg, Int coeff = Int(1)) {
    UniPoly p;
    if (coeff != 0) {
      p.c_.assign(deg + 1, Int(0));
      p.c_[deg] = std::move(coeff);
    }
    return p;
  }

  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<Int>& coeffs() const { return c_; }

  const Int& operator[](std::size_t i) const {
    static const Int zero(0);
    return i < c_.size() ? c_[i] : zero;
  }

  const Int& lead() const {
    if (c_.empty()) throw error(errc::zero_polynomial, "lead of zero polynomial");
    return c_.back();
  }

  Int operator()(const Int& x) const {
    Int acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Int content() const {
    Int g(0);
    for (const Int& c : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
  }

  UniPoly shifted_up(std::size_t k) const {  // multiply by t^k
    if (is_zero() || k == 0) return *this;
    std::vector<Int> v(k, Int(0));
    v.insert(v.end(), c_.begin(), c_.end());
    return UniPoly(std::move(v));
  }

  UniPoly& operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Int(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  UniPoly& operator-=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Int(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  UniPoly& operator*=(const Int& s) {
    if (s == 0) {
      c_.clear();
      return *this;
    }
    for (Int& c : c_) c *= s;
    return *this;
  }

  UniPoly operator-() const {
    UniPoly r = *this;
    for (Int& c : r.c_) c = -c;
    return r;
  }

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<Int> r(a.c_.size() + b.c_.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return UniPoly(std::move(r));
  }
  friend UniPoly operator*(UniPoly a, const Int& s) { return a *= s; }
  friend UniPoly operator*(const Int& s, UniPoly a) { return a *= s; }

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

  // Grammar-compatible rendering, highest degree first, e.g. "t^4-t^3+t-1".
  std::string to_string(const std::string& var = "t") const {
    if (is_zero()) return "0";
    std::string out;
    for (long i = degree(); i >= 0; --i) {
      const Int& c = c_[static_cast<std::size_t>(i)];
      if (c == 0) continue;
      bool neg = c < 0;
      Int mag = abs_int(c);
      if (out.empty()) {
        if (neg) out += "-";
      } else {
        out += neg ? "-" : "+";
      }
      if (i == 0) {
        out += mag.get_str();
      } else {
        if (mag != 1) {
          out += mag.get_str();
          out += "*";
        }
        out += var;
        if (i != 1) out += "^" + std::to_string(i);
      }
    }
    return out;
  }

 private:
  std::vector<Int> c_;
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
};

inline UniPoly scalar_div_exact(const UniPoly& f, const Int& s) {
  std::vector<Int> r;
  r.reserve(f.coeffs().size());
  for (const Int& c : f.coeffs()) r.push_back(exact_div(c, s));
  return UniPoly(std::move(r));
}

// Euclidean division by a monic divisor stays over Z.
inline std::pair<UniPoly, UniPoly> divrem_monic(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero() || b.lead() != 1)
    throw error(errc::domain_error, "divrem_monic requires a monic divisor");
  long db = b.degree();
  std::vector<Int> rem(a.coeffs());
  std::vector<Int> quo;
  long da = a.degree();
  if (da >= db) quo.assign(static_cast<std::size_t>(da - db + 1), Int(0));
  for (long i = da; i >= db; --i) {
    Int c = rem[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    quo[static_cast<std::size_t>(i - db)] = c;
    for (long j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= c * b[static_cast<std::size_t>(j)];
  }
  return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

// Pseudo-remainder: the remainder of lc(b)^(deg a - deg b + 1) * a by b.
inline UniPoly prem(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw error(errc::zero_polynomial, "prem by zero");
  long db = b.degree();
  const Int& l = b.lead();
  UniPoly r = a;
  long e = a.degree() - db + 1;
  while (!r.is_zero() && r.degree() >= db) {
    UniPoly shift = b.shifted_up(static_cast<std::size_t>(r.degree() - db));
    UniPoly next = r * l - shift * r.lead();
    r = std::move(next);
    --e;
  }
  if (e > 0) r *= pow_int(l, static_cast<unsigned long>(e));
  return r;
}

// ---------------------------------------------------------------------------
// Unit normal form of a one-variable Laurent polynomial: input equals
// sign * t^shift * poly, with poly(0) != 0 and a positive leading
// coefficient. The zero polynomial is represented with poly = 0.
// ---------------------------------------------------------------------------
struct UnitNormalForm {
  UniPoly poly;
  long shift = 0;
  int sign = 1;

  bool is_zero() const { return poly.is_zero(); }

  friend bool operator==(const UnitNormalForm& a, const UnitNormalForm& b) {
    return a.poly == b.poly && a.shift == b.shift && a.sign == b.sign;
  }
};

// ---------------------------------------------------------------------------
// Sparse multivariate Laurent polynomial over Z. Keys are exponent vectors
// (lexicographically ordered by std::map); zero coefficients are never
// stored.
// ---------------------------------------------------------------------------
class MultiLaurent {
 public:
  explicit MultiLaurent(int num_vars) : nvars_(num_vars) {
    if (num_vars < 1) throw error(errc::domain_error, "need at least one variable");
  }

  static MultiLaurent constant(int num_vars, Int c) {
    MultiLaurent f(num_vars);
    if (c != 0) f.terms_.emplace(std::vector<int>(static_cast<std::size_t>(num_vars), 0), std::move(c));
    return f;
  }
  static MultiLaurent constant(int num_vars, long c) { return constant(num_vars, Int(c)); }

  // t_{var+1}^exp with 0-based var index.
  static MultiLaurent variable(int num_vars, int var, int exp = 1) {
    MultiLaurent f(num_vars);
    if (var < 0 || var >= num_vars)
      throw error(errc::variable_mismatch, "variable index out of range");
    std::vector<int> e(static_cast<std::size_t>(num_vars), 0);
    e[static_cast<std::size_t>(var)] = exp;
    f.terms_.emplace(std::move(e), Int(1));
    return f;
  }

  static MultiLaurent monomial(int num_vars, std::vector<int> exps, Int c) {
    MultiLaurent f(num_vars);
    if (static_cast<int>(exps.size()) != num_vars)
      throw error(errc::variable_mismatch, "exponent vector has wrong length");
    if (c != 0) f.terms_.emplace(std::move(exps), std::move(c));
    return f;
  }

  int num_vars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<std::vector<int>, Int>& terms() const { return terms_; }

  Int coeff(const std::vector<int>& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Int(0) : it->second;
  }

  MultiLaurent operator-() const {
    MultiLaurent r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }

  MultiLaurent& operator+=(const MultiLaurent& o) {
    check_same_arity(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  MultiLaurent& operator-=(const MultiLaurent& o) {
    check_same_arity(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  friend MultiLaurent operator+(MultiLaurent a, const MultiLaurent& b) { return a += b; }
  friend MultiLaurent operator-(MultiLaurent a, const MultiLaurent& b) { return a -= b; }

  friend MultiLaurent operator*(const MultiLaurent& a, const MultiLaurent& b) {
    a.check_same_arity(b);
    MultiLaurent r(a.nvars_);
    std::vector<int> e(static_cast<std::size_t>(a.nvars_));
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    return r;
  }

  friend MultiLaurent operator*(MultiLaurent a, const Int& s) {
    if (s == 0) return MultiLaurent(a.nvars_);
    for (auto& [e, c] : a.terms_) c *= s;
    return a;
  }
  friend MultiLaurent operator*(const Int& s, MultiLaurent a) { return std::move(a) * s; }

  MultiLaurent pow(unsigned long e) const {
    MultiLaurent acc = constant(nvars_, 1);
    MultiLaurent base = *this;
    while (e > 0) {
      if (e & 1UL) acc = acc * base;
      e >>= 1UL;
      if (e > 0) base = base * base;
    }
    return acc;
  }

  // Substitute t_i -> t^{z_i} and return the unit normal form of the result.
  UnitNormalForm specialize(const std::vector<long>& z) const {
    if (static_cast<int>(z.size()) != nvars_)
      throw error(errc::variable_mismatch, "direction vector has wrong length");
    for (long zi : z)
      if (zi == 0) throw error(errc::zero_direction, "direction vector has a zero entry");
    std::map<long long, Int> acc;
    for (const auto& [e, c] : terms_) {
      long long k = 0;
      for (std::size_t i = 0; i < e.size(); ++i) k += static_cast<long long>(e[i]) * z[i];
      auto [it, fresh] = acc.emplace(k, c);
      if (!fresh) {
        it->second += c;
        if (it->second == 0) acc.erase(it);
      }
    }
    if (acc.empty()) return UnitNormalForm{};
    long long kmin = acc.begin()->first;
    long long kmax = acc.rbegin()->first;
    if (kmax - kmin > 4'000'000)
      throw error(errc::domain_error, "specialized polynomial degree is too large");
    std::vector<Int> v(static_cast<std::size_t>(kmax - kmin + 1), Int(0));
    for (auto& [k, c] : acc) v[static_cast<std::size_t>(k - kmin)] = std::move(c);
    UniPoly poly(std::move(v));
    int sign = 1;
    if (poly.lead() < 0) {
      sign = -1;
      poly = -poly;
    }
    return UnitNormalForm{std::move(poly), static_cast<long>(kmin), sign};
  }

  Int eval_ones() const {
    Int s(0);
    for (const auto& [e, c] : terms_) s += c;
    return s;
  }

  // t_i -> t_i^{-1} on every variable.
  MultiLaurent involution() const {
    MultiLaurent r(nvars_);
    std::vector<int> e(static_cast<std::size_t>(nvars_));
    for (const auto& [ea, c] : terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = -ea[i];
      r.terms_.emplace(e, c);
    }
    return r;
  }

  // Componentwise minimum exponent over the support (requires a nonzero
  // polynomial).
  std::vector<int> min_exponents() const {
    if (terms_.empty()) throw error(errc::zero_polynomial, "min_exponents of zero");
    std::vector<int> m = terms_.begin()->first;
    for (const auto& [e, c] : terms_)
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], e[i]);
    return m;
  }

  // Grammar-compatible rendering with variables t1..tr (plain "t" when r=1),
  // terms in descending lexicographic exponent order.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      bool neg = c < 0;
      Int mag = abs_int(c);
      if (out.empty()) {
        if (neg) out += "-";
      } else {
        out += neg ? "-" : "+";
      }
      std::string vars;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!vars.empty()) vars += "*";
        vars += nvars_ == 1 ? "t" : "t" + std::to_string(i + 1);
        if (e[i] != 1) vars += "^" + std::to_string(e[i]);
      }
      if (vars.empty()) {
        out += mag.get_str();
      } else {
        if (mag != 1) {
          out += mag.get_str();
          out += "*";
        }
        out += vars;
      }
    }
    return out;
  }

  friend bool operator==(const MultiLaurent& a, const MultiLaurent& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const MultiLaurent& a, const MultiLaurent& b) { return !(a == b); }

  friend MultiLaurent divide_exact(const MultiLaurent& f, const MultiLaurent& g);

 private:
  int nvars_;
  std::map<std::vector<int>, Int> terms_;

  void add_term(const std::vector<int>& e, Int c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, std::move(c));
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  void check_same_arity(const MultiLaurent& o) const {
    if (nvars_ != o.nvars_)
      throw error(errc::variable_mismatch, "operands have different variable counts");
  }

  // Shift the support by -base (monomial division, always exact for Laurent
  // polynomials).
  MultiLaurent shifted_down(const std::vector<int>& base) const {
    MultiLaurent r(nvars_);
    std::vector<int> e(static_cast<std::size_t>(nvars_));
    for (const auto& [ea, c] : terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] - base[i];
      r.terms_.emplace(e, c);
    }
    return r;
  }
};

// Exact division of Laurent polynomials. Both operands are shifted so their
// supports sit in N^r with minimum degree 0 in every variable; the quotient
// (if it exists) then also has support in N^r, and greedy division by leading
// terms in lexicographic order either produces it or proves non-divisibility.
inline MultiLaurent divide_exact(const MultiLaurent& f, const MultiLaurent& g) {
  if (g.is_zero()) throw error(errc::zero_polynomial, "division by the zero polynomial");
  MultiLaurent q(f.num_vars());
  if (f.is_zero()) return q;
  f.check_same_arity(g);

  std::vector<int> fmin = f.min_exponents();
  std::vector<int> gmin = g.min_exponents();
  MultiLaurent fhat = f.shifted_down(fmin);
  MultiLaurent ghat = g.shifted_down(gmin);

  std::vector<int> qshift(fmin.size());
  for (std::size_t i = 0; i < fmin.size(); ++i) qshift[i] = fmin[i] - gmin[i];

  const auto& glead = *ghat.terms_.rbegin();
  std::vector<int> e(fmin.size());
  while (!fhat.is_zero()) {
    const auto& flead = *fhat.terms_.rbegin();
    for (std::size_t i = 0; i < e.size(); ++i) {
      e[i] = flead.first[i] - glead.first[i];
      if (e[i] < 0) throw error(errc::not_divisible, "no exact quotient exists");
    }
    Int c, rem;
    mpz_tdiv_qr(c.get_mpz_t(), rem.get_mpz_t(), flead.second.get_mpz_t(),
                glead.second.get_mpz_t());
    if (rem != 0) throw error(errc::not_divisible, "no exact quotient exists");
    std::vector<int> eq(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) eq[i] = e[i] + qshift[i];
    q.add_term(eq, c);
    fhat -= MultiLaurent::monomial(f.num_vars(), e, c) * ghat;
  }
  return q;
}

// True when a = unit * b for a unit +-t^k (monomial with coefficient +-1).
inline bool unit_associate(const MultiLaurent& a, const MultiLaurent& b) {
  if (a.num_vars() != b.num_vars())
    throw error(errc::variable_mismatch, "operands have different variable counts");
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  std::vector<int> amin = a.min_exponents();
  std::vector<int> bmin = b.min_exponents();
  // Rebase both to exponent 0 and compare up to overall sign.
  MultiLaurent ra(a.num_vars()), rb(b.num_vars());
  {
    std::vector<int> e(amin.size());
    for (const auto& [ea, c] : a.terms()) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] - amin[i];
      ra += MultiLaurent::monomial(a.num_vars(), e, c);
    }
    for (const auto& [eb, c] : b.terms()) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = eb[i] - bmin[i];
      rb += MultiLaurent::monomial(b.num_vars(), e, c);
    }
  }
  return ra == rb || ra == -rb;
}

// Conversions between the univariate and one-variable Laurent views.
inline UniPoly to_unipoly(const MultiLaurent& f) {
  if (f.num_vars() != 1)
    throw error(errc::variable_mismatch, "expected a one-variable polynomial");
  if (f.is_zero()) return UniPoly();
  std::vector<Int> c;
  for (const auto& [e, coeff] : f.terms()) {
    if (e[0] < 0) throw error(errc::domain_error, "negative exponent in polynomial conversion");
    if (static_cast<std::size_t>(e[0]) >= c.size()) c.resize(static_cast<std::size_t>(e[0]) + 1, Int(0));
    c[static_cast<std::size_t>(e[0])] = coeff;
  }
  return UniPoly(std::move(c));
}

inline MultiLaurent from_unipoly(const UniPoly& f, int num_vars = 1, int var = 0) {
  MultiLaurent r(num_vars);
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (f[i] == 0) continue;
    std::vector<int> e(static_cast<std::size_t>(num_vars), 0);
    e[static_cast<std::size_t>(var)] = static_cast<int>(i);
    r += MultiLaurent::monomial(num_vars, std::move(e), f[i]);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Resultants. Convention: Res(f, g) = lc(f)^deg(g) * prod g(alpha) over the
// roots alpha of f, i.e. the determinant of the Sylvester matrix with deg(g)
// rows of f's coefficients on top. Res with the zero polynomial is 0; two
// nonzero constants give 1 (empty matrix).
// ---------------------------------------------------------------------------

// Subresultant PRS (fraction-free). Follows the classical g/h bookkeeping.
inline Int resultant(const UniPoly& f, const UniPoly& g) {
  if (f.is_zero() && g.is_zero())
    throw error(errc::both_zero, "resultant of two zero polynomials");
  if (f.is_zero() || g.is_zero()) return Int(0);

  UniPoly A = f, B = g;
  int s = 1;
  if (A.degree() < B.degree()) {
    if ((A.degree() & 1L) && (B.degree() & 1L)) s = -s;
    std::swap(A, B);
  }
  if (B.degree() == 0) {
    Int r = pow_int(B[0], static_cast<unsigned long>(A.degree()));
    return s < 0 ? Int(-r) : r;
  }
  Int ca = A.content(), cb = B.content();
  A = scalar_div_exact(A, ca);
  B = scalar_div_exact(B, cb);
  Int t = pow_int(ca, static_cast<unsigned long>(B.degree())) *
          pow_int(cb, static_cast<unsigned long>(A.degree()));
  Int gg(1), hh(1);
  while (true) {
    long da = A.degree(), db = B.degree();
    long delta = da - db;
    if ((da & 1L) && (db & 1L)) s = -s;
    UniPoly R = prem(A, B);
    A = B;
    B = scalar_div_exact(R, gg * pow_int(hh, static_cast<unsigned long>(delta)));
    if (B.is_zero()) return Int(0);
    gg = A.lead();
    hh = delta == 0 ? hh
                    : exact_div(pow_int(gg, static_cast<unsigned long>(delta)),
                                pow_int(hh, static_cast<unsigned long>(delta - 1)));
    if (B.degree() == 0) break;
  }
  long da = A.degree();
  Int res = exact_div(pow_int(B[0], static_cast<unsigned long>(da)),
                      pow_int(hh, static_cast<unsigned long>(da - 1)));
  res *= t;
  return s < 0 ? Int(-res) : res;
}

// Fraction-free determinant (Bareiss) with row pivoting.
inline Int bareiss_determinant(std::vector<std::vector<Int>> m) {
  const std::size_t n = m.size();
  if (n == 0) return Int(1);
  int sign = 1;
  Int prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t piv = k + 1;
      while (piv < n && m[piv][k] == 0) ++piv;
      if (piv == n) return Int(0);
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign < 0 ? Int(-m[n - 1][n - 1]) : m[n - 1][n - 1];
}

// Independent resultant via the Sylvester matrix; kept deliberately separate
// from the PRS route so the two can be checked against each other.
inline Int resultant_sylvester(const UniPoly& f, const UniPoly& g) {
  if (f.is_zero() && g.is_zero())
    throw error(errc::both_zero, "resultant of two zero polynomials");
  if (f.is_zero() || g.is_zero()) return Int(0);
  const long m = f.degree(), n = g.degree();
  const std::size_t dim = static_cast<std::size_t>(m + n);
  if (dim == 0) return Int(1);
  std::vector<std::vector<Int>> syl(dim, std::vector<Int>(dim, Int(0)));
  for (long row = 0; row < n; ++row)
    for (long j = 0; j <= m; ++j)
      syl[static_cast<std::size_t>(row)][static_cast<std::size_t>(row + j)] =
          f[static_cast<std::size_t>(m - j)];
  for (long row = 0; row < m; ++row)
    for (long j = 0; j <= n; ++j)
      syl[static_cast<std::size_t>(n + row)][static_cast<std::size_t>(row + j)] =
          g[static_cast<std::size_t>(n - j)];
  return bareiss_determinant(std::move(syl));
}

}  // namespace iwalink
