#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qinterp/interval.hpp"

using namespace qinterp;

namespace {

Interval iv(const char* lo, const char* hi, bool lc, bool hc) {
  auto end = [](const char* s) {
    std::string t(s);
    if (t == "-inf") return ExtRat::neg_inf();
    if (t == "inf") return ExtRat::pos_inf();
    return ExtRat(parse_rat(t));
  };
  return Interval(end(lo), end(hi), lc, hc);
}

}  // namespace

TEST_CASE("rationals parse and print") {
  CHECK(rat_str(parse_rat("-6/8")) == "-3/4");
  CHECK(rat_str(parse_rat("4/2")) == "2");
  CHECK(parse_rat("7") == Rat(7));
  CHECK(floor_rat(parse_rat("-3/2")) == -2);
  CHECK(ceil_rat(parse_rat("-3/2")) == -1);
  CHECK(floor_rat(Rat(4)) == 4);
  CHECK_THROWS_AS(parse_rat("1/0"), Error);
  CHECK_THROWS_AS(parse_rat("a"), Error);
  CHECK_THROWS_AS(parse_rat("1.5"), Error);
}

TEST_CASE("extended rationals order") {
  CHECK(ExtRat::neg_inf() < ExtRat(Rat(-1000)));
  CHECK(ExtRat(Rat(1000)) < ExtRat::pos_inf());
  CHECK(ExtRat::neg_inf() < ExtRat::pos_inf());
  CHECK(ExtRat(parse_rat("1/3")) < ExtRat(parse_rat("1/2")));
  CHECK(ExtRat(Rat(2)) == ExtRat(Rat(2)));
}

TEST_CASE("interval invariants") {
  CHECK_THROWS_AS(iv("1", "0", false, false), Error);   // out of order
  CHECK_THROWS_AS(iv("1", "1", true, false), Error);    // empty degenerate
  CHECK_THROWS_AS(iv("-inf", "0", true, false), Error); // closed infinite end
  CHECK(Interval::singleton(Rat(1)).is_singleton());
  CHECK(iv("0", "1", true, false).contains(Rat(0)));
  CHECK(!iv("0", "1", false, false).contains(Rat(0)));
  CHECK(!iv("0", "1", true, false).contains(Rat(1)));
  CHECK(iv("0", "1", true, true).contains(Rat(1)));
}

TEST_CASE("interval set normalization merges exactly the convex unions") {
  auto s = IntervalSet::of({iv("0", "1", true, false), iv("1", "2", true, true)});
  CHECK(s.components().size() == 1);
  CHECK(s.components()[0] == iv("0", "2", true, true));

  // (0,1) u (1,2) is not convex over Q: 1 is missing
  auto t = IntervalSet::of({iv("0", "1", false, false), iv("1", "2", false, false)});
  CHECK(t.components().size() == 2);

  auto u = IntervalSet::of({iv("0", "1", false, false), iv("1", "1", true, true),
                            iv("1", "2", false, false)});
  CHECK(u.components().size() == 1);
  CHECK(u.components()[0] == iv("0", "2", false, false));
}

TEST_CASE("complement round trip") {
  auto s = IntervalSet::of({iv("-inf", "0", false, false), iv("1", "2", true, false)});
  auto c = s.complement();
  REQUIRE(c.components().size() == 2);
  CHECK(c.components()[0] == iv("0", "1", true, false));
  CHECK(c.components()[1] == iv("2", "inf", true, false));
  CHECK(c.complement() == s);
  CHECK(IntervalSet::whole().complement().is_empty());
  CHECK(IntervalSet::empty_set().complement().is_whole());

  // complement around open touching ends keeps the shared point
  auto t = IntervalSet::of({iv("0", "1", false, false), iv("1", "2", false, false)});
  auto tc = t.complement();
  REQUIRE(tc.components().size() == 3);
  CHECK(tc.components()[1] == Interval::singleton(Rat(1)));
}

TEST_CASE("set algebra agrees with pointwise membership") {
  auto a = IntervalSet::of({iv("-1", "1", false, true), iv("3", "5", true, false)});
  auto b = IntervalSet::of({iv("0", "4", true, false)});
  auto uni = a.union_with(b);
  auto inter = a.intersect_with(b);
  for (int n = -40; n <= 60; ++n) {
    Rat x = make_rat(n, 7);
    CHECK(uni.contains_point(x) == (a.contains_point(x) || b.contains_point(x)));
    CHECK(inter.contains_point(x) == (a.contains_point(x) && b.contains_point(x)));
    CHECK(a.complement().contains_point(x) == !a.contains_point(x));
  }
  CHECK(uni.contains_set(a));
  CHECK(uni.contains_set(b));
  CHECK(a.contains_set(inter));
  CHECK(!a.contains_set(b));
  CHECK(a.disjoint_from(IntervalSet::of({iv("10", "11", false, false)})));
  CHECK(!a.disjoint_from(b));
}
