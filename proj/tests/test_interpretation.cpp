#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qinterp/dsl.hpp"
#include "qinterp/interpretation.hpp"

using namespace qinterp;

namespace {
PLMap pl(const char* text) { return parse_map(text); }
const char* kFlatEpi = "pl{ (-inf,0): x; [0,1): 0; [1,inf): x-1 }";
}

TEST_CASE("encode and decode") {
  CodedRational c = encode(Rat(0));
  CHECK(support(c.representative).components()[0] ==
        Interval::open(ExtRat(Rat(0)), ExtRat::pos_inf()));
  CHECK(decode(c.representative) == Rat(0));
  CHECK(decode(encode(Rat(3)).representative) == Rat(3));
  CHECK(decode(encode(parse_rat("-5/2")).representative) == parse_rat("-5/2"));
  CHECK(decode(left_cofinal_bump(parse_rat("1/2"))) == parse_rat("1/2"));
  CHECK_THROWS_AS(decode(PLMap::affine(Rat(1), Rat(1))), Error);
}

TEST_CASE("group action on coded rationals") {
  CHECK(group_act(PLMap::affine(Rat(1), Rat(1)), encode(Rat(0))) == encode(Rat(1)));
  CHECK(group_act(PLMap::identity(), encode(parse_rat("2/7"))) == encode(parse_rat("2/7")));
  CHECK(group_act(PLMap::affine(Rat(2), Rat(0)), encode(Rat(3))) == encode(Rat(6)));
}

TEST_CASE("linear betweenness with witnesses") {
  BetweenResult r = linear_between(encode(Rat(0)), encode(Rat(1)), encode(Rat(2)));
  CHECK(r.holds);
  REQUIRE(r.witness.has_value());
  CHECK(*r.witness == PLMap::affine(Rat(1), Rat(1)));

  CHECK(!linear_between(encode(Rat(0)), encode(Rat(2)), encode(Rat(1))).holds);

  BetweenResult rev = linear_between(encode(Rat(2)), encode(Rat(1)), encode(Rat(0)));
  CHECK(rev.holds);
  REQUIRE(rev.witness.has_value());
  CHECK(evaluate(*rev.witness, Rat(2)) == Rat(1));
  CHECK(evaluate(*rev.witness, Rat(1)) == Rat(0));

  // weak chains hold without a witness map
  CHECK(linear_between(encode(Rat(0)), encode(Rat(0)), encode(Rat(5))).holds);
}

TEST_CASE("act1 on the gap inserter") {
  PLMap f = pl("pl{ (-inf,0): x; [0,inf): x+1 }");
  PLMap g = left_cofinal_bump(Rat(0));
  PLMap h = left_cofinal_bump(Rat(1));
  Act1Result res = act1_check(f, g, h);
  CHECK(res.holds);
  REQUIRE(res.gap_bump.has_value());
  CHECK(support(*res.gap_bump).components()[0] ==
        Interval::open(ExtRat(Rat(0)), ExtRat(Rat(1))));
  REQUIRE(res.transported.has_value());
  CHECK(compose(*res.transported, f) == compose(f, g));
  for (int i = -200; i <= 200; ++i) {
    Rat x = make_rat(i, 10);
    CHECK(evaluate(*res.transported, evaluate(f, x)) == evaluate(f, evaluate(g, x)));
  }

  CHECK(!act1_check(f, g, left_cofinal_bump(Rat(2))).holds);
  CHECK(!act1_check(PLMap::affine(Rat(2), Rat(0)), g, left_cofinal_bump(Rat(0))).holds);
  CHECK_THROWS_AS(act1_check(pl(kFlatEpi), g, h), Error);  // not injective
  CHECK_THROWS_AS(act1_check(f, PLMap::affine(Rat(1), Rat(1)), h), Error);  // g not cofinal
  CHECK_THROWS_AS(act1_check(f, g, right_cofinal_bump(Rat(1))), Error);  // sides differ
}

TEST_CASE("act1 with jumps below the acted point still holds") {
  PLMap f = pl("pl{ (-inf,-5): x; [-5,0): x+1; [0,inf): x+2 }");
  PLMap g = left_cofinal_bump(Rat(0));
  PLMap h = left_cofinal_bump(Rat(2));
  Act1Result res = act1_check(f, g, h);
  CHECK(res.holds);
  CHECK(compose(*res.transported, f) == compose(f, g));
  // the transported witness needs a flat across the untouched gap
  CHECK(!is_injective(*res.transported));
}

TEST_CASE("act1 mirrored orientation through a right tear") {
  PLMap f = pl("pl{ (-inf,0]: x; (0,inf): x+1 }");
  PLMap g = right_cofinal_bump(Rat(0));
  PLMap h = right_cofinal_bump(Rat(0));  // f(0) = 0
  Act1Result res = act1_check(f, g, h);
  CHECK(res.holds);
  REQUIRE(res.gap_bump.has_value());
  CHECK(support(*res.gap_bump).components()[0] ==
        Interval::open(ExtRat(Rat(0)), ExtRat(Rat(1))));
  CHECK(compose(*res.transported, f) == compose(f, g));
}

TEST_CASE("act2 witnesses on the shift") {
  PLMap f = PLMap::affine(Rat(1), Rat(1));
  PLMap g = left_cofinal_bump(Rat(0));
  PLMap h = left_cofinal_bump(Rat(1));
  Act2Witness w = act2_witness(f, g, h);
  CHECK(w.f2 == gap_inserter(Rat(1)));
  CHECK(w.f1 == compose(w.f2, f));
  CHECK(decode(w.k) == Rat(2));
  CHECK(w.check_f1.holds);
  CHECK(w.check_f2.holds);

  // identity embedding, g and h the same class
  PLMap q = left_cofinal_bump(Rat(5));
  Act2Witness wi = act2_witness(PLMap::identity(), q, q);
  CHECK(decode(wi.k) == Rat(6));
  CHECK(wi.check_f1.holds);
  CHECK(wi.check_f2.holds);

  CHECK_THROWS_AS(act2_witness(f, g, left_cofinal_bump(Rat(2))), Error);
}

TEST_CASE("act2 with negative parity and right orientation") {
  PLMap f = pl("pl{ (-inf,0): x; [0,inf): x+1 }");
  PLMap g = invert(right_cofinal_bump(Rat(0)));
  PLMap h = invert(right_cofinal_bump(Rat(1)));
  Act2Witness w = act2_witness(f, g, h);
  CHECK(w.check_f1.holds);
  CHECK(w.check_f2.holds);
  CHECK(w.f1 == compose(w.f2, f));
}

TEST_CASE("monoid, epi and endo actions decode to evaluation") {
  PLMap jump = pl("pl{ (-inf,0): x; [0,inf): x+1 }");
  CHECK(monoid_act(jump, encode(Rat(0))) == encode(Rat(1)));
  CHECK(monoid_act(PLMap::identity(), encode(Rat(7))) == encode(Rat(7)));
  CHECK(monoid_act(PLMap::affine(Rat(2), Rat(0)), encode(Rat(-1))) == encode(Rat(-2)));
  CHECK_THROWS_AS(monoid_act(pl(kFlatEpi), encode(Rat(0))), Error);

  PLMap flat = pl(kFlatEpi);
  CHECK(epi_act(flat, encode(Rat(2))) == encode(Rat(1)));
  CHECK(epi_act(PLMap::identity(), encode(Rat(2))) == encode(Rat(2)));
  CHECK_THROWS_AS(epi_act(jump, encode(Rat(0))), Error);

  CHECK(endo_act(PLMap::affine(Rat(2), Rat(0)), encode(Rat(1))) == encode(Rat(2)));
  CHECK(endo_act(pl("pl{ (-inf,0): 0; [0,inf): x }"), encode(Rat(-5))) == encode(Rat(0)));
}

TEST_CASE("act3 through a pinned right inverse") {
  PLMap flat = pl(kFlatEpi);
  PLMap g = left_cofinal_bump(Rat(0));
  PLMap h = left_cofinal_bump(Rat(0));  // flat(0) = 0
  Act3Witness w = act3_witness(flat, g, h);
  CHECK(compose(flat, w.right_inv) == PLMap::identity());
  CHECK(evaluate(w.right_inv, Rat(0)) == Rat(0));
  CHECK(w.inner.check_f1.holds);
  CHECK(w.inner.check_f2.holds);
  CHECK_THROWS_AS(act3_witness(flat, g, left_cofinal_bump(Rat(3))), Error);
}

TEST_CASE("act4 through the factorization") {
  PLMap dbl = PLMap::affine(Rat(2), Rat(0));
  Act4Witness w = act4_witness(dbl, left_cofinal_bump(Rat(1)), left_cofinal_bump(Rat(2)));
  CHECK(compose(w.split.epi, w.split.emb) == dbl);
  CHECK(decode(w.mid) == evaluate(w.split.emb, Rat(1)));
  CHECK(w.emb_part.check_f1.holds);
  CHECK(w.epi_part.inner.check_f1.holds);

  PLMap mixed = pl("pl{ (-inf,0): x; [0,1): 0; [1,2): x; [2,inf): x+1 }");
  Act4Witness wm = act4_witness(mixed, left_cofinal_bump(Rat(3)),
                                left_cofinal_bump(evaluate(mixed, Rat(3))));
  CHECK(compose(wm.split.epi, wm.split.emb) == mixed);

  PLMap bounded = pl("pl{ (-inf,0): x; [0,inf): 0 }");
  CHECK(endo_act(bounded, encode(Rat(5))) == encode(Rat(0)));
  CHECK_THROWS_AS(
      act4_witness(bounded, left_cofinal_bump(Rat(5)), left_cofinal_bump(Rat(0))), Error);
}
