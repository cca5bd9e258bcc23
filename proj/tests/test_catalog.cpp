#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "iwalink/catalog.hpp"
#include "iwalink/covers.hpp"

using namespace iwalink;

namespace {

CoverSpec spec_of(const LinkFamily& fam, std::vector<long> z, long p) {
  REQUIRE(fam.delta.has_value());
  return CoverSpec{*fam.delta, std::move(z), p, {}};
}

// closed form against the resultant/Weierstrass engine, including the
// nothing-vanishes predicate
void check_against_engine(const LinkFamily& fam, const std::vector<long>& z, long p) {
  INFO(fam.name << " z=(" << z[0] << "," << (z.size() > 1 ? z[1] : 0) << ") p=" << p);
  auto cf = closed_form_invariants(fam, z, p);
  REQUIRE(cf.has_value());
  IwasawaInvariants inv = fam.delta
                              ? iwasawa_invariants(spec_of(fam, z, p))
                              : invariants_from_reduced(*fam.reduced, p, {Int(1)});
  CHECK(inv.lambda == cf->lambda);
  CHECK(inv.mu == cf->mu);
  CHECK(inv.vanishing_levels.empty() == cf->orders_nonvanishing);
  CHECK(inv.nu.has_value() == cf->orders_nonvanishing);
}

}  // namespace

TEST_CASE("family constructors") {
  MultiLaurent t1 = MultiLaurent::variable(2, 0), t2 = MultiLaurent::variable(2, 1);
  MultiLaurent one = MultiLaurent::constant(2, 1);

  LinkFamily f1 = figure1_link(2);
  CHECK(*f1.delta == (t1 - one) * (t2 - one).pow(3) * Int(2));
  CHECK(*f1.linking_number == 0);
  CHECK(f1.recommended_z == std::vector<long>{1, 1});
  CHECK_THROWS_AS(figure1_link(0), error);

  LinkFamily cw = conway_two_bridge(3, 2);
  MultiLaurent u = t1 * t2;
  CHECK(*cw.delta == (t1 - one) * (t2 - one) * (one + u + u * u) * Int(2));
  CHECK(*conway_two_bridge(-3, 2).delta == *cw.delta);  // |a| convention
  CHECK_THROWS_AS(conway_two_bridge(0, 1), error);
  CHECK_THROWS_AS(conway_two_bridge(1, 0), error);

  LinkFamily c4 = c4_link();
  CHECK(*c4.delta == u + one);
  CHECK(*c4.linking_number == 2);
  CHECK(c4.recommended_z == std::vector<long>{1, 2});

  LinkFamily ho = hosokawa_link(3, 1, 2, 3);
  REQUIRE(ho.reduced.has_value());
  UniPoly tm1(std::vector<Int>{Int(-1), Int(1)});
  CHECK(ho.reduced->poly == tm1 * tm1 * tm1 * tm1 * Int(9));
  CHECK(ho.reduced->shift == -1);
  CHECK(ho.recommended_z == std::vector<long>{1, 1, 1});
  CHECK_FALSE(ho.delta.has_value());
  CHECK_THROWS_AS(hosokawa_link(1, 1, 1, 2), error);
  CHECK_THROWS_AS(hosokawa_link(2, 1, 1, 4), error);

  LinkFamily ba = bailey_even_family(1, 2);
  CHECK(*ba.delta == (t1 - one) * (t2 - one) * Int(4));  // core power is 0 for ell <= 2
  CHECK(ba.recommended_z == std::vector<long>{1, 2});
  CHECK(bailey_even_family(2, 0).recommended_z == std::vector<long>{1, 4});
  LinkFamily ba3 = bailey_even_family(3, 0);
  CHECK(*ba3.delta ==
        (t1 - one) * (t2 - one) * (u + MultiLaurent::monomial(2, {-1, -1}, Int(1))));
  CHECK_THROWS_AS(bailey_even_family(0, 0), error);
}

TEST_CASE("bezout certificates") {
  BezoutCertificate c1 = bezout_certificate(1);
  CHECK(c1.N.to_string("x") == "x");
  CHECK(c1.B.to_string("x") == "x^2-x-2");
  CHECK(c1.F.to_string("x") == "x-1");
  CHECK(c1.G.to_string("x") == "-1");
  CHECK(c1.res == -2);

  for (long m = 1; m <= 4; ++m) {
    BezoutCertificate c = bezout_certificate(m);
    long half = 1L << m;
    CHECK(c.N.degree() == half - 1);
    CHECK(c.B.degree() == half);
    CHECK(c.N.lead() == 1);
    CHECK(c.B.lead() == 1);
    CHECK(c.F.degree() <= half - 1);
    CHECK(c.G.degree() <= half - 2);
    CHECK(c.N * c.F + c.B * c.G == UniPoly(Int(half)));
    CHECK(abs_int(c.res) == half);
  }
  CHECK_THROWS_AS(bezout_certificate(0), error);
  CHECK_THROWS_AS(bezout_certificate(17), error);
}

TEST_CASE("bezout family reduces to the certificate form at the designed direction") {
  for (long m : {1L, 2L}) {
    for (long s : {0L, 1L}) {
      BezoutCertificate cert = bezout_certificate(m);
      LinkFamily fam = bezout_family(m, s);
      CHECK(*fam.linking_number == (1L << (m + 1)));
      UnitNormalForm red = reduced_polynomial(spec_of(fam, {2, -1}, 2));

      // expected: 2^m (t^2 - 1) F(t + 1/t)^s, up to a unit
      MultiLaurent t = MultiLaurent::variable(1, 0);
      MultiLaurent x = t + MultiLaurent::monomial(1, {-1}, Int(1));
      MultiLaurent acc = MultiLaurent::constant(1, 0);
      for (long i = cert.F.degree(); i >= 0; --i)
        acc = acc * x + MultiLaurent::constant(1, cert.F[static_cast<std::size_t>(i)]);
      MultiLaurent expect = (t * t - MultiLaurent::constant(1, 1)) *
                            acc.pow(static_cast<unsigned long>(s)) *
                            pow_int(Int(2), static_cast<unsigned long>(m));
      CHECK(red.poly == expect.specialize({1}).poly);
    }
  }
}

TEST_CASE("torres conditions hold across the catalog") {
  for (const LinkFamily& fam :
       {figure1_link(3), conway_two_bridge(2, 3), c4_link(), bailey_even_family(3, 1),
        bezout_family(1, 1), bezout_family(2, 0)}) {
    REQUIRE(fam.linking_number.has_value());
    TorresReport rep = torres_check(*fam.delta, *fam.linking_number);
    INFO(fam.name << ": " << rep.reason);
    CHECK(rep.pass);
  }
}

TEST_CASE("torres conditions reject broken inputs") {
  MultiLaurent t1 = MultiLaurent::variable(2, 0);
  MultiLaurent bad = t1 + MultiLaurent::constant(2, 2);
  TorresReport rep = torres_check(bad, Int(3));
  CHECK_FALSE(rep.pass);  // value matches but no symmetry

  TorresReport rep2 = torres_check(bad, Int(1));
  CHECK_FALSE(rep2.pass);  // value mismatch

  CHECK_THROWS_AS(torres_check(MultiLaurent::constant(1, 1), Int(1)), error);
  CHECK(torres_check(MultiLaurent(2), Int(0)).pass);  // zero against zero linking
}

TEST_CASE("figure1 closed form against the engine") {
  for (long m : {1L, 3L, 4L}) {
    LinkFamily fam = figure1_link(m);
    for (long p : {2L, 3L}) {
      for (std::vector<long> z :
           {std::vector<long>{1, 1}, {1, 2}, {3, 2}, {2, 3}, {1, -1}, {-1, 4}}) {
        check_against_engine(fam, z, p);
      }
    }
  }
}

TEST_CASE("two-bridge closed form against the engine") {
  for (auto [a, b] : std::vector<std::pair<long, long>>{{1, 1}, {2, 1}, {4, 1}, {2, 6}, {3, 2}}) {
    LinkFamily fam = conway_two_bridge(a, b);
    for (long p : {2L, 3L}) {
      for (std::vector<long> z : {std::vector<long>{1, 1}, {1, 2}, {2, -1}, {1, -1}}) {
        check_against_engine(fam, z, p);
      }
    }
  }
}

TEST_CASE("two-bridge vanishing levels match the divisibility window") {
  // a = 4, z = (1,1), p = 2: factors vanish exactly for v_2(s) < n <= v_2(a s)
  LinkFamily fam = conway_two_bridge(4, 1);
  IwasawaInvariants inv = iwasawa_invariants(spec_of(fam, {1, 1}, 2));
  CHECK(inv.vanishing_levels == std::vector<long>{2, 3});
  CHECK_FALSE(inv.nu.has_value());
}

TEST_CASE("c4 closed form against the engine") {
  LinkFamily fam = c4_link();
  for (long p : {2L, 3L, 5L}) {
    for (std::vector<long> z : {std::vector<long>{1, 2}, {1, 1}, {1, 3}, {1, -1}, {2, 1},
                                {3, -1}, {5, 2}, {-3, 2}}) {
      check_against_engine(fam, z, p);
    }
  }
  auto cf = closed_form_invariants(fam, {1, 2}, 2);
  REQUIRE(cf.has_value());
  CHECK(cf->lambda == 2);
  CHECK(cf->mu == 0);
}

TEST_CASE("hosokawa closed form against the engine") {
  for (auto [r, ell, m] : std::vector<std::tuple<long, long, long>>{
           {2, 0, 1}, {3, 1, 0}, {4, 2, 2}}) {
    for (long q : {2L, 3L}) {
      LinkFamily fam = hosokawa_link(r, ell, m, q);
      for (long p : {2L, 3L}) check_against_engine(fam, fam.recommended_z, p);
      CHECK_FALSE(
          closed_form_invariants(fam, std::vector<long>(static_cast<std::size_t>(r - 1), 1), q)
              .has_value());
      std::vector<long> other(static_cast<std::size_t>(r), 1);
      other[0] = 2;
      CHECK_FALSE(closed_form_invariants(fam, other, q).has_value());
    }
  }
}

TEST_CASE("bailey closed form against the engine") {
  for (long ell : {1L, 2L, 3L, 4L}) {
    for (long m : {0L, 2L}) {
      LinkFamily fam = bailey_even_family(ell, m);
      for (long p : {2L, 3L}) {
        for (std::vector<long> z :
             {std::vector<long>{1, 4}, {1, 2}, {1, 1}, {1, -1}, {3, 4}}) {
          check_against_engine(fam, z, p);
        }
      }
      // designed direction gives (2 + 2 ell, m)
      auto cf = closed_form_invariants(fam, fam.recommended_z, 2);
      REQUIRE(cf.has_value());
      CHECK(cf->lambda == 2 + 2 * ell);
      CHECK(cf->mu == m);
    }
  }
}

TEST_CASE("bezout closed form against the engine") {
  for (long m : {1L, 2L}) {
    for (long s : {0L, 1L}) {
      LinkFamily fam = bezout_family(m, s);
      check_against_engine(fam, {2, -1}, 2);
      check_against_engine(fam, {1, 1}, 3);
      check_against_engine(fam, {1, 2}, 5);
      auto cf = closed_form_invariants(fam, {2, -1}, 2);
      REQUIRE(cf.has_value());
      CHECK(cf->lambda == 2);
      CHECK(cf->mu == m);
      CHECK_FALSE(closed_form_invariants(fam, {1, 2}, 2).has_value());
    }
  }
}

TEST_CASE("closed form input screening") {
  LinkFamily fam = c4_link();
  CHECK_FALSE(closed_form_invariants(fam, {1, 0}, 2).has_value());
  CHECK_FALSE(closed_form_invariants(fam, {1}, 2).has_value());
  CHECK_FALSE(closed_form_invariants(fam, {1, 1, 1}, 2).has_value());
  CHECK_THROWS_AS(closed_form_invariants(fam, {1, 1}, 6), error);
}
