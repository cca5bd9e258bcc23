// Acceptance checks for the whole library: one PASS/FAIL line per criterion,
// nonzero exit if anything fails. Tower computations for the family grids are
// cached and shared with the growth-law criterion at the end.

#include <algorithm>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "iwalink/catalog.hpp"
#include "iwalink/covers.hpp"
#include "iwalink/greenberg.hpp"
#include "iwalink/laurent.hpp"
#include "iwalink/padic.hpp"
#include "iwalink/parse.hpp"
#include "oracles.hpp"

using namespace iwalink;

namespace {

struct Crit {
  int id;
  const char* what;
  bool ok = true;
  std::ostringstream why;
};

int report(Crit& c) {
  std::cout << (c.ok ? "PASS " : "FAIL ") << c.id << ": " << c.what << "\n";
  if (!c.ok) std::cout << c.why.str();
  return c.ok ? 0 : 1;
}

template <class T, class U>
void expect_eq(Crit& c, const T& got, const U& want, const std::string& label) {
  if (!(got == want)) {
    c.ok = false;
    c.why << "  " << label << ": got " << got << ", want " << want << "\n";
  }
}

void expect(Crit& c, bool cond, const std::string& label) {
  if (!cond) {
    c.ok = false;
    c.why << "  " << label << "\n";
  }
}

long lpow(long b, long e) {
  long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

UniPoly random_poly(std::mt19937_64& rng, int maxdeg, long cmax) {
  std::uniform_int_distribution<int> dd(0, maxdeg);
  std::uniform_int_distribution<long> cd(-cmax, cmax);
  int d = dd(rng);
  std::vector<Int> c(static_cast<std::size_t>(d) + 1);
  for (Int& x : c) x = Int(cd(rng));
  while (c.back() == 0) c.back() = Int(cd(rng));
  return UniPoly(std::move(c));
}

// One tower computation, kept around so the growth-law criterion can rerun
// its window over the same tables.
struct TowerCase {
  std::string label;
  CoverSpec spec;
  IwasawaInvariants inv;
  GrowthTable table;  // levels 0 .. n0 + 3
  bool ok = false;
  std::string err;
};

TowerCase make_case(std::string label, MultiLaurent delta, std::vector<long> z, long p) {
  TowerCase tc;
  tc.label = std::move(label);
  tc.spec = CoverSpec{std::move(delta), std::move(z), p, {}};
  try {
    tc.inv = iwasawa_invariants(tc.spec);
    tc.table = homology_orders(tc.spec, tc.inv.n0 + 3);
    tc.ok = true;
  } catch (const error& e) {
    tc.err = e.what();
  }
  return tc;
}

bool order_should_vanish(const TowerCase& tc, long n) {
  for (long lev : tc.inv.vanishing_levels)
    if (lev <= n) return true;
  return false;
}

// --- criterion 1: figure-eight-like family grid --------------------------

void criterion1(Crit& c, std::vector<TowerCase>& shared) {
  for (long p : {2L, 3L, 5L}) {
    for (long m : {1L, p, 2 * p * p}) {
      for (std::vector<long> z : {std::vector<long>{1, 1},
                                  {1, p},
                                  {p, 1},
                                  {1, p * p},
                                  {2, 3}}) {
        std::ostringstream label;
        label << "figure1 m=" << m << " p=" << p << " z=(" << z[0] << "," << z[1] << ")";
        TowerCase tc = make_case(label.str(), *figure1_link(m).delta, z, p);
        if (!tc.ok) {
          c.ok = false;
          c.why << "  " << tc.label << ": " << tc.err << "\n";
          continue;
        }
        long lam = 1 + lpow(p, vp_finite(Int(z[0]), p)) + 3 * lpow(p, vp_finite(Int(z[1]), p));
        expect_eq(c, tc.inv.lambda, lam, tc.label + " lambda");
        expect_eq(c, tc.inv.mu, vp_finite(Int(m), p), tc.label + " mu");
        for (const GrowthRow& row : tc.table)
          expect(c, row.order != 0, tc.label + " nonzero order at level " + std::to_string(row.n));
        shared.push_back(std::move(tc));
      }
    }
  }
}

// --- criterion 2: two-bridge family grid ----------------------------------

void criterion2(Crit& c, std::vector<TowerCase>& shared) {
  for (long p : {2L, 3L}) {
    for (long a : {1L, 2L, 3L, p, p * p, 2 * p}) {
      for (long b : {1L, p, 3 * p * p}) {
        for (std::vector<long> z : {std::vector<long>{1, 1}, {1, p}, {2, -1}}) {
          std::ostringstream label;
          label << "conway a=" << a << " b=" << b << " p=" << p << " z=(" << z[0] << ","
                << z[1] << ")";
          TowerCase tc = make_case(label.str(), *conway_two_bridge(a, b).delta, z, p);
          if (!tc.ok) {
            c.ok = false;
            c.why << "  " << tc.label << ": " << tc.err << "\n";
            continue;
          }
          long vzz = vp_finite(Int(z[0]), p) + vp_finite(Int(z[1]), p);
          long s = z[0] + z[1];
          long lam = 2 + lpow(p, vzz) +
                     (lpow(p, vp_finite(Int(a), p)) - 1) * lpow(p, vp_finite(Int(s), p));
          expect_eq(c, tc.inv.lambda, lam, tc.label + " lambda");
          expect_eq(c, tc.inv.mu, vp_finite(Int(b), p), tc.label + " mu");
          bool want_nonzero = vzz >= vp_finite(Int(a), p);
          expect_eq(c, tc.inv.vanishing_levels.empty(), want_nonzero,
                    tc.label + " nonzero-orders predicate");
          for (const GrowthRow& row : tc.table)
            expect_eq(c, row.order == 0, order_should_vanish(tc, row.n),
                      tc.label + " zero pattern at level " + std::to_string(row.n));
          shared.push_back(std::move(tc));
        }
      }
    }
  }
}

// --- criterion 3: headline example ----------------------------------------

void criterion3(Crit& c, std::vector<TowerCase>& shared) {
  TowerCase tc = make_case("c4 z=(1,2) p=2", *c4_link().delta, {1, 2}, 2);
  if (!tc.ok) {
    c.ok = false;
    c.why << "  " << tc.label << ": " << tc.err << "\n";
    return;
  }
  expect_eq(c, tc.inv.lambda, 2L, "lambda");
  expect_eq(c, tc.inv.mu, 0L, "mu");
  expect(c, tc.inv.nu.has_value(), "nu defined");
  if (tc.inv.nu) expect_eq(c, *tc.inv.nu, -2LL, "nu");
  std::vector<long> want = {1, 1, 4, 16, 64};
  UnitNormalForm red = reduced_polynomial(tc.spec);
  std::vector<Int> base = {Int(1), Int(1)};
  for (long n = 0; n <= 4; ++n) {
    expect_eq(c, tc.table[static_cast<std::size_t>(n)].order, Int(want[static_cast<std::size_t>(n)]),
              "order at level " + std::to_string(n));
    expect_eq(c, oracles::tower_order_oracle(red.poly, 2, n, base),
              tc.table[static_cast<std::size_t>(n)].order,
              "root-of-unity oracle at level " + std::to_string(n));
  }
  shared.push_back(std::move(tc));
}

// --- criterion 4: trivial polynomial, unit linking number -----------------

void criterion4(Crit& c, std::vector<TowerCase>& shared) {
  for (long p : {2L, 3L, 5L}) {
    std::string label = "hopf p=" + std::to_string(p);
    TowerCase tc = make_case(label, MultiLaurent::constant(2, 1), {1, 1}, p);
    if (!tc.ok) {
      c.ok = false;
      c.why << "  " << tc.label << ": " << tc.err << "\n";
      continue;
    }
    expect_eq(c, tc.inv.lambda, 1L, label + " lambda");
    expect_eq(c, tc.inv.mu, 0L, label + " mu");
    expect(c, tc.inv.nu.has_value(), label + " nu defined");
    if (tc.inv.nu) expect_eq(c, *tc.inv.nu, 0LL, label + " nu");
    UnitNormalForm red = reduced_polynomial(tc.spec);
    std::vector<Int> base = {Int(1)};
    for (const GrowthRow& row : tc.table) {
      expect_eq(c, row.order, pow_int(Int(p), static_cast<unsigned long>(row.n)),
                label + " order at level " + std::to_string(row.n));
      if (row.n <= 4)
        expect_eq(c, oracles::tower_order_oracle(red.poly, p, row.n, base), row.order,
                  label + " oracle at level " + std::to_string(row.n));
    }
    shared.push_back(std::move(tc));
  }
}

// --- criterion 5: knot case ------------------------------------------------

void criterion5(Crit& c) {
  UniPoly f = to_unipoly(parse_poly("t^2-t+1", 1));
  CoverSpec spec{from_unipoly(f), {1}, 2, {}};
  IwasawaInvariants inv = iwasawa_invariants(spec);
  expect_eq(c, inv.lambda, 0L, "lambda");
  expect_eq(c, inv.mu, 0L, "mu");
  GrowthTable table = homology_orders(spec, 4);
  expect_eq(c, table[0].order, Int(1), "trivial cover");
  for (long n = 1; n <= 4; ++n)
    expect_eq(c, table[static_cast<std::size_t>(n)].order, Int(3),
              "order at level " + std::to_string(n));
  // the constant 3 is the first-level resultant, later levels contribute 1
  expect_eq(c, abs_int(resultant(cyclotomic(2, 1), f)), Int(3), "resultant oracle, level 1");
  for (long n = 2; n <= 4; ++n)
    expect_eq(c, abs_int(resultant(cyclotomic(2, n), f)), Int(1),
              "resultant oracle, level " + std::to_string(n));
}

// --- criterion 6: parity of lambda -----------------------------------------

void criterion6(Crit& c) {
  std::mt19937_64 rng(6021023);
  const long primes[3] = {2, 3, 5};
  std::uniform_int_distribution<long> jd(0, 2);
  std::uniform_int_distribution<int> sd(0, 1);
  for (int i = 0; i < 300; ++i) {
    int r = 2 + i % 3;
    long p = primes[(i / 3) % 3];
    UniPoly g = random_poly(rng, 6, 20);
    if (g[0] == 0) g = g + UniPoly(1);  // keep the constant term nonzero
    if (g[0] == 0) g = g + UniPoly(2);
    UniPoly rev(std::vector<Int>(g.coeffs().rbegin(), g.coeffs().rend()));
    UniPoly f = g * rev;
    UniPoly tm1(std::vector<Int>{Int(-1), Int(1)});
    for (int k = 1; k < r; ++k) f = f * tm1;
    Int unit = pow_int(Int(p), static_cast<unsigned long>(jd(rng)));
    if (sd(rng)) unit = -unit;
    f = f * unit;

    UnitNormalForm red = from_unipoly(f).specialize({1});
    IwasawaInvariants inv = invariants_from_reduced(red, p, {Int(1)});
    std::ostringstream label;
    label << "case " << i << " r=" << r << " p=" << p << " f=" << f.to_string();
    expect(c, inv.lambda >= r - 1, label.str() + ": lambda below r-1");
    if (p != 2) {
      expect(c, (inv.lambda - (r - 1)) % 2 == 0, label.str() + ": odd-p parity");
    } else {
      expect(c, (inv.lambda - red.poly.degree()) % 2 == 0, label.str() + ": p=2 parity");
    }
  }
}

// --- criterion 7: prescribed lambda and mu ---------------------------------

void criterion7(Crit& c) {
  for (long r : {2L, 3L, 4L}) {
    for (long ell : {0L, 1L, 3L}) {
      for (long m : {0L, 1L, 2L}) {
        for (long p : {2L, 3L}) {
          LinkFamily fam = hosokawa_link(r, ell, m, p);
          IwasawaInvariants inv = invariants_from_reduced(*fam.reduced, p, {Int(1)});
          std::ostringstream label;
          label << "hosokawa r=" << r << " ell=" << ell << " m=" << m << " p=" << p;
          expect_eq(c, inv.lambda, r - 1 + 2 * ell, label.str() + " lambda");
          expect_eq(c, inv.mu, m, label.str() + " mu");
        }
      }
    }
  }
}

// --- criterion 8: even-lambda constructions at p = 2 -----------------------

void criterion8(Crit& c) {
  for (long ell : {1L, 2L, 3L}) {
    for (long m : {0L, 1L, 2L}) {
      LinkFamily fam = bailey_even_family(ell, m);
      CoverSpec spec{*fam.delta, fam.recommended_z, 2, {}};
      IwasawaInvariants inv = iwasawa_invariants(spec);
      std::ostringstream label;
      label << "bailey ell=" << ell << " m=" << m;
      expect_eq(c, inv.lambda, 2 + 2 * ell, label.str() + " lambda");
      expect_eq(c, inv.mu, m, label.str() + " mu");
    }
  }
  for (long m : {1L, 2L, 3L, 4L}) {
    BezoutCertificate cert = bezout_certificate(m);
    Int want = pow_int(Int(2), static_cast<unsigned long>(m));
    expect(c, cert.N * cert.F + cert.B * cert.G == UniPoly(want),
           "bezout identity at m=" + std::to_string(m));
    expect_eq(c, abs_int(cert.res), want, "bezout resultant at m=" + std::to_string(m));
    for (long s : {0L, 1L}) {
      CoverSpec spec{*bezout_family(m, s).delta, {2, -1}, 2, {}};
      IwasawaInvariants inv = iwasawa_invariants(spec);
      std::ostringstream label;
      label << "bezout m=" << m << " s=" << s;
      expect_eq(c, inv.lambda, 2L, label.str() + " lambda");
      expect_eq(c, inv.mu, m, label.str() + " mu");
    }
  }
}

// --- criterion 9: pseudonullity verdicts -----------------------------------

void criterion9(Crit& c) {
  for (long m : {1L, 2L, 6L}) {
    PseudonullVerdict v = pseudonull_verdict(*figure1_link(m).delta);
    expect(c, v.kind == PseudonullKind::pseudonull_certified,
           "figure1 m=" + std::to_string(m) + " not certified");
  }
  for (auto [a, b] : std::vector<std::pair<long, long>>{{2, 1}, {4, 3}, {3, 2}}) {
    PseudonullVerdict v = pseudonull_verdict(*conway_two_bridge(a, b).delta);
    expect(c, v.kind == PseudonullKind::pseudonull_certified,
           "conway a=" + std::to_string(a) + " b=" + std::to_string(b) + " not certified");
  }
  for (const char* src : {"t^2-t+1", "2*t^2-3*t+2", "1"}) {
    PseudonullVerdict v = pseudonull_verdict(parse_poly(src, 1));
    expect(c, v.kind == PseudonullKind::not_pseudonull_knot,
           std::string("knot verdict for ") + src);
  }
}

// --- criterion 10: resultant and level-factor oracles ----------------------

void criterion10(Crit& c) {
  std::mt19937_64 rng(1009001);
  int agree = 0;
  for (int i = 0; i < 440; ++i) {
    UniPoly f = random_poly(rng, 12, 1000000);
    UniPoly g = random_poly(rng, 12, 1000000);
    Int prs = resultant(f, g);
    Int syl = resultant_sylvester(f, g);
    if (prs == syl) {
      ++agree;
    } else {
      c.ok = false;
      c.why << "  disagreement on pair " << i << ": " << prs << " vs " << syl << "\n";
    }
  }
  for (int i = 0; i < 60; ++i) {
    UniPoly h = random_poly(rng, 3, 1000);
    if (h.degree() < 1) h = h * UniPoly(std::vector<Int>{Int(1), Int(1)});
    UniPoly f = h * random_poly(rng, 9, 1000000);
    UniPoly g = h * random_poly(rng, 9, 1000000);
    Int prs = resultant(f, g);
    Int syl = resultant_sylvester(f, g);
    if (prs == syl && prs == 0) {
      ++agree;
    } else {
      c.ok = false;
      c.why << "  shared-factor pair " << i << ": " << prs << " vs " << syl << "\n";
    }
  }
  expect_eq(c, agree, 500, "agreeing resultant pairs");

  const std::pair<long, long> powers[] = {{2, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 1},
                                          {3, 2}, {5, 1}, {7, 1}, {11, 1}, {13, 1}};
  for (auto [p, n] : powers) {
    std::ostringstream tag;
    tag << "p^n=" << p << "^" << n;
    for (int i = 0; i < 12; ++i) {
      UniPoly f = random_poly(rng, 12, 1000000);
      expect_eq(c, level_factor_abs(f, p, n), oracles::primitive_root_product(f, p, n),
                tag.str() + " random poly " + std::to_string(i));
    }
    UniPoly planted = cyclotomic(p, n) * random_poly(rng, 4, 100);
    expect_eq(c, level_factor_abs(planted, p, n), Int(0), tag.str() + " planted factor");
    expect_eq(c, oracles::primitive_root_product(planted, p, n), Int(0),
              tag.str() + " planted factor oracle");
  }
}

// --- criterion 11: the growth law on a window ------------------------------

void criterion11(Crit& c, const std::vector<TowerCase>& shared) {
  expect(c, !shared.empty(), "no cached towers");
  for (const TowerCase& tc : shared) {
    if (!tc.ok) {
      c.ok = false;
      c.why << "  " << tc.label << ": computation failed: " << tc.err << "\n";
      continue;
    }
    if (!tc.inv.nu) continue;  // vanishing orders carry no growth law
    Int nu(static_cast<long>(*tc.inv.nu));
    for (long n = tc.inv.n0; n <= tc.inv.n0 + 3; ++n) {
      const GrowthRow& row = tc.table[static_cast<std::size_t>(n)];
      if (!row.e) {
        c.ok = false;
        c.why << "  " << tc.label << ": infinite order inside the window at level " << n
              << "\n";
        continue;
      }
      Int defect = Int(*row.e) - Int(tc.inv.lambda) * n -
                   Int(tc.inv.mu) * pow_int(Int(tc.spec.p), static_cast<unsigned long>(n));
      expect_eq(c, defect, nu,
                tc.label + " growth defect at level " + std::to_string(n));
    }
  }
}

}  // namespace

int main() {
  std::vector<TowerCase> shared;
  int failures = 0;

  {
    Crit c{1, "figure-eight family grid: closed-form lambda/mu, orders never vanish"};
    criterion1(c, shared);
    failures += report(c);
  }
  {
    Crit c{2, "two-bridge family grid: closed-form lambda/mu and the nonzero-orders predicate"};
    criterion2(c, shared);
    failures += report(c);
  }
  {
    Crit c{3, "headline example: orders 1,1,4,16,64 and nu=-2 against the root-of-unity oracle"};
    criterion3(c, shared);
    failures += report(c);
  }
  {
    Crit c{4, "unit linking number: orders p^n and (1,0,0) against the root-of-unity oracle"};
    criterion4(c, shared);
    failures += report(c);
  }
  {
    Crit c{5, "knot tower: constant order 3 with (0,0) against the resultant oracle"};
    criterion5(c);
    failures += report(c);
  }
  {
    Crit c{6, "lambda parity battery over 300 symmetric reduced polynomials"};
    criterion6(c);
    failures += report(c);
  }
  {
    Crit c{7, "prescribed-invariant grid: (lambda, mu) = (r-1+2l, m)"};
    criterion7(c);
    failures += report(c);
  }
  {
    Crit c{8, "even-lambda constructions: designed grids and the certified identity"};
    criterion8(c);
    failures += report(c);
  }
  {
    Crit c{9, "pseudonullity verdicts across the catalog and for knots"};
    criterion9(c);
    failures += report(c);
  }
  {
    Crit c{10, "dual-route resultants on 500 pairs; level factors against root-of-unity products"};
    criterion10(c);
    failures += report(c);
  }
  {
    Crit c{11, "growth defect constant on [n0, n0+3] for every cached tower"};
    criterion11(c, shared);
    failures += report(c);
  }

  if (failures != 0) std::cout << failures << " criteria failed\n";
  return failures == 0 ? 0 : 1;
}
