#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qinterp/dsl.hpp"
#include "qinterp/gauge.hpp"
#include "qinterp/predicates.hpp"

using namespace qinterp;

namespace {

CircleLift two_slope_lift() {
  // [0,1/2): x/2 + 1/4; [1/2,1): 3x/2 - 1/4
  return CircleLift::from_period({
      {Interval(ExtRat(Rat(0)), ExtRat(parse_rat("1/2")), true, false), parse_rat("1/2"),
       parse_rat("1/4")},
      {Interval(ExtRat(parse_rat("1/2")), ExtRat(Rat(1)), true, false), parse_rat("3/2"),
       parse_rat("-1/4")},
  });
}

}  // namespace

TEST_CASE("lift recognition on whole maps") {
  CHECK(is_lift(PLMap::affine(Rat(1), parse_rat("3/2"))));
  CHECK(is_lift(PLMap::identity()));
  CHECK(!is_lift(PLMap::affine(Rat(2), Rat(0))));
  CHECK(!is_lift(bump_on(Rat(0), Rat(1))));
  CHECK_THROWS_AS(is_lift(parse_map("pl{ (-inf,0): x; [0,inf): x+1 }")), Error);
}

TEST_CASE("lift validation and evaluation") {
  CircleLift g = two_slope_lift();
  // the defining law extends one-periodically
  for (int i = -20; i <= 20; ++i) {
    Rat x = make_rat(i, 7);
    CHECK(g.evaluate(x + 1) == g.evaluate(x) + 1);
  }
  CHECK(g.evaluate(Rat(0)) == parse_rat("1/4"));
  CHECK(g.evaluate(parse_rat("1/2")) == parse_rat("1/2"));

  // seam violation: g(1-) != g(0) + 1
  CHECK_THROWS_AS(CircleLift::from_period({{Interval(ExtRat(Rat(0)), ExtRat(Rat(1)), true, false),
                                            parse_rat("1/2"), Rat(0)}}),
                  Error);
  // discontinuity inside the period
  CHECK_THROWS_AS(
      CircleLift::from_period({
          {Interval(ExtRat(Rat(0)), ExtRat(parse_rat("1/2")), true, false), Rat(1), Rat(0)},
          {Interval(ExtRat(parse_rat("1/2")), ExtRat(Rat(1)), true, false), Rat(1), Rat(1)},
      }),
      Error);
}

TEST_CASE("rotation number certificates") {
  RotationNumberResult r = rotation_number(CircleLift::translation(parse_rat("3/2")), 64, 1024);
  REQUIRE(r.kind == RotationNumberResult::Kind::Rational);
  CHECK(r.rho == parse_rat("3/2"));
  CHECK(r.period == 2);
  CHECK(r.shift == 3);

  RotationNumberResult z = rotation_number(two_slope_lift(), 64, 1024);
  REQUIRE(z.kind == RotationNumberResult::Kind::Rational);
  CHECK(z.rho == Rat(0));
  CHECK(z.witness == parse_rat("1/2"));

  // integer translation certifies at period 1
  RotationNumberResult one = rotation_number(CircleLift::translation(Rat(2)), 64, 64);
  CHECK(one.rho == Rat(2));
  CHECK(one.period == 1);
}

TEST_CASE("rotation number interval estimates") {
  for (int p = -9; p <= 9; ++p) {
    for (int q = 1; q <= 10; ++q) {
      Rat rho = make_rat(p, q);
      RotationNumberResult est = rotation_number(CircleLift::translation(rho), 0, 1024);
      REQUIRE(est.kind == RotationNumberResult::Kind::Interval);
      CHECK(est.lo <= rho);
      CHECK(rho <= est.hi);
      CHECK(est.hi - est.lo <= make_rat(2, 1024));
    }
  }
  // estimates nest as the iteration count doubles
  CircleLift g = two_slope_lift();
  RotationNumberResult a = rotation_number(g, 0, 32);
  RotationNumberResult b = rotation_number(g, 0, 64);
  CHECK(a.lo <= b.lo);
  CHECK(b.hi <= a.hi);
}

TEST_CASE("gauge refutation for integer and fractional translations") {
  PLMap f = PLMap::affine(Rat(1), Rat(1));
  for (const char* step : {"2", "3/2", "5/3"}) {
    PLMap g = PLMap::affine(Rat(1), parse_rat(step));
    GaugeResult r = gauge_check(f, g);
    REQUIRE(r.kind == GaugeResult::Kind::NotGaugePair);
    REQUIRE(r.rho.has_value());
    CHECK(r.rho->kind == RotationNumberResult::Kind::Rational);
    CHECK(r.rho->rho == parse_rat(step));
    REQUIRE(r.cert_h1.has_value());
    REQUIRE(r.cert_h2.has_value());
    for (int i = -12; i <= 12; ++i) {
      Rat x = make_rat(i * 7 + 1, 5);
      CHECK(r.cert_h1->evaluate(evaluate(f, x)) == evaluate(f, r.cert_h1->evaluate(x)));
      CHECK(r.cert_h1->evaluate(evaluate(g, x)) == evaluate(g, r.cert_h1->evaluate(x)));
      CHECK(r.cert_h2->evaluate(evaluate(f, x)) == evaluate(f, r.cert_h2->evaluate(x)));
      CHECK(r.cert_h2->evaluate(evaluate(g, x)) == evaluate(g, r.cert_h2->evaluate(x)));
    }
    REQUIRE(r.noncommute_at.has_value());
    Rat d = *r.noncommute_at;
    CHECK(r.cert_h1->evaluate(r.cert_h2->evaluate(d)) !=
          r.cert_h2->evaluate(r.cert_h1->evaluate(d)));
  }
}

TEST_CASE("gauge verdicts on degenerate inputs") {
  PLMap f = PLMap::affine(Rat(1), Rat(1));
  CHECK(gauge_check(f, bump_on(Rat(0), Rat(1))).reason == "not a coterminal pair");
  CHECK(gauge_check(f, PLMap::affine(Rat(1), Rat(-1))).reason ==
        "not conjugate (parities differ)");
  PLMap g = parse_map("pl{ (-inf,0): x+1; [0,inf): 2x+1 }");
  CHECK(gauge_check(f, g).reason == "the pair does not commute");
  CHECK(gauge_check(parse_map("pl{ (-inf,0): x; [0,inf): x+1 }"), f).reason ==
        "both arguments must be automorphisms");
}

TEST_CASE("gauge candidate when the period bound is too small") {
  PLMap f = PLMap::affine(Rat(1), Rat(1));
  PLMap g = PLMap::affine(Rat(1), parse_rat("22/7"));
  GaugeResult r = gauge_check(f, g, 3, 256);
  REQUIRE(r.kind == GaugeResult::Kind::GaugeCandidate);
  REQUIRE(r.rho.has_value());
  CHECK(r.rho->kind == RotationNumberResult::Kind::Interval);
  CHECK(r.rho->lo <= parse_rat("22/7"));
  CHECK(parse_rat("22/7") <= r.rho->hi);
  // negative-parity pairs are oriented before the analysis
  GaugeResult n = gauge_check(invert(f), invert(g), 8, 64);
  CHECK(n.kind == GaugeResult::Kind::NotGaugePair);
}

TEST_CASE("rational endpoint check") {
  CHECK(rational_endpoint_check(right_cofinal_bump(Rat(3))));
  CHECK(rational_endpoint_check(left_cofinal_bump(parse_rat("-2"))));
  CHECK_THROWS_AS(rational_endpoint_check(PLMap::affine(Rat(1), Rat(1))), Error);
  CHECK_THROWS_AS(rational_endpoint_check(bump_on(Rat(0), Rat(1))), Error);
}
