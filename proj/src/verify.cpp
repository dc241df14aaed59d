#include "qinterp/verify.hpp"

#include <functional>
#include <map>

#include "qinterp/gauge.hpp"
#include "qinterp/interpretation.hpp"
#include "qinterp/predicates.hpp"

namespace qinterp {

namespace {

struct Suite {
  VerifyReport rep;
  long trial = 0;

  void check(bool ok, const std::string& detail) {
    if (ok) return;
    rep.failures += 1;
    std::string line =
        "lemma=" + rep.lemma + " trial=" + std::to_string(trial) + " verdict=fail detail=" + detail;
    rep.lines.push_back(line);
    if (rep.first_failure.empty()) rep.first_failure = detail;
  }

  template <typename F>
  void check_throws(ErrorKind kind, const std::string& detail, F&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      check(e.kind() == kind, detail + " (wrong error kind)");
      return;
    }
    check(false, detail + " (no error raised)");
  }
};

std::vector<Rat> sample_points(Rng& rng, const GenOptions& opt, long n) {
  std::vector<Rat> out;
  out.reserve(n);
  for (long i = 0; i < n; ++i) out.push_back(rng.rat(opt.height));
  return out;
}

Interval random_bounded_span(Rng& rng, const GenOptions& opt) {
  Rat a = rng.rat(opt.height);
  Rat b = a + make_rat(rng.uniform(1, 8), rng.uniform(1, 4));
  return Interval::open(ExtRat(a), ExtRat(b));
}

// ---- section 2 suites ----

void suite_comp(Suite& s, Rng& rng, const GenOptions& opt) {
  PLMap f = rng.chance(1, 8) ? PLMap::identity() : random_automorphism(rng, opt);
  Comparability c = comparability(f);
  for (const Orbital& o : orbitals_of(f)) {
    if (o.parity == 0) continue;
    Rat x = span_point(o.span);
    Rat fx = evaluate(f, x);
    if (o.parity > 0) s.check(fx > x, "parity +1 orbital without upward motion");
    else s.check(fx < x, "parity -1 orbital without downward motion");
    if (o.parity > 0) s.check(!c.negative, "negative verdict despite +1 orbital");
    else s.check(!c.positive, "positive verdict despite -1 orbital");
  }
  if (is_identity(f)) s.check(c.positive && c.negative, "identity must be both-comparable");
  if (c.positive)
    for (const Rat& x : sample_points(rng, opt, 10))
      s.check(evaluate(f, x) >= x, "positive comparability refuted at a sample");
  if (c.negative)
    for (const Rat& x : sample_points(rng, opt, 10))
      s.check(evaluate(f, x) <= x, "negative comparability refuted at a sample");
}

void suite_apart(Suite& s, Rng& rng, const GenOptions& opt) {
  Rat a = rng.rat(opt.height);
  Rat b = a + make_rat(rng.uniform(1, 8), rng.uniform(1, 4));
  Rat c = b + Rat(rng.uniform(0, 3));  // touching allowed when c == b
  Rat d = c + make_rat(rng.uniform(1, 8), rng.uniform(1, 4));
  PLMap f = random_bump_on(rng, Interval::open(ExtRat(a), ExtRat(b)), rng.chance(1, 2) ? 1 : -1);
  PLMap g = random_bump_on(rng, Interval::open(ExtRat(c), ExtRat(d)), rng.chance(1, 2) ? 1 : -1);
  s.check(apart(f, g), "separated bumps must be apart");
  s.check(apart(g, f), "apart must be symmetric");
  s.check(compose(f, g) == compose(g, f), "apart bumps must commute");
  s.check(apart(f, PLMap::identity()), "identity is apart from everything");
  s.check(apart(PLMap::identity(), PLMap::identity()), "identity apart from itself");

  // overlapping spans are never apart
  Rat m = rng.rat_between(a, b);
  PLMap h = random_bump_on(rng, Interval::open(ExtRat(m), ExtRat(d + 1)), 1);
  s.check(!apart(f, h), "overlapping supports must not be apart");
}

void suite_bump(Suite& s, Rng& rng, const GenOptions& opt) {
  PLMap b1 = random_bump_on(rng, random_bounded_span(rng, opt), rng.chance(1, 2) ? 1 : -1);
  s.check(is_bump(b1), "constructed bump not recognized");
  s.check(!is_bump(PLMap::identity()), "identity is not a bump");
  s.check(is_bump(random_bump_on(rng, Interval::whole(), 1)), "coterminal bump not recognized");
  Rat right = support(b1).components()[0].hi.finite() + Rat(rng.uniform(1, 4));
  PLMap b2 =
      random_bump_on(rng, Interval::open(ExtRat(right), ExtRat(right + Rat(2))), 1);
  s.check(!is_bump(compose(b1, b2)), "product of apart bumps has two orbitals");
}

void suite_orbital(Suite& s, Rng& rng, const GenOptions& opt) {
  PLMap g = random_automorphism(rng, opt);
  std::vector<PLMap> rs = orbital_restrictions(g);
  std::vector<Orbital> nontrivial;
  for (const Orbital& o : orbitals_of(g))
    if (o.parity != 0) nontrivial.push_back(o);
  s.check(rs.size() == nontrivial.size(), "one restriction per nontrivial orbital");
  for (std::size_t i = 0; i < rs.size(); ++i) {
    s.check(is_bump(rs[i]), "restriction must be a bump");
    s.check(support(rs[i]).components()[0] == nontrivial[i].span,
            "restriction support must be the orbital");
    Rat x = span_point(nontrivial[i].span);
    s.check(evaluate(rs[i], x) == evaluate(g, x), "restriction must agree with g inside");
  }
  PLMap prod = PLMap::identity();
  for (const PLMap& r : rs) prod = compose(prod, r);
  s.check(prod == g, "product of restrictions must reassemble g");
  PLMap prod_rev = PLMap::identity();
  for (auto it = rs.rbegin(); it != rs.rend(); ++it) prod_rev = compose(prod_rev, *it);
  s.check(prod_rev == g, "restrictions commute: reverse product must also be g");
  if (is_bump(g)) s.check(rs.size() == 1 && rs[0] == g, "a bump is its own restriction");
}

void suite_supports(Suite& s, Rng& rng, const GenOptions& opt) {
  Interval span = random_bounded_span(rng, opt);
  PLMap f = random_bump_on(rng, span, 1);
  PLMap g = random_bump_on(rng, span, rng.chance(1, 2) ? 1 : -1);
  s.check(support_relation(f, g) == SupportRelation::Equal, "same-span bumps: Equal");
  Rat a = span.lo.finite(), b = span.hi.finite();
  Rat m1 = rng.rat_between(a, b);
  Rat m2 = rng.rat_between(m1, b);
  PLMap inner = random_bump_on(rng, Interval::open(ExtRat(m1), ExtRat(m2)), 1);
  s.check(support_relation(inner, f) == SupportRelation::FirstInsideSecond, "nested: inside");
  s.check(support_relation(f, inner) == SupportRelation::SecondInsideFirst, "nested: outside");
  PLMap far = random_bump_on(rng, Interval::open(ExtRat(b + 1), ExtRat(b + 2)), 1);
  s.check(support_relation(f, far) == SupportRelation::Disjoint, "separated: Disjoint");
  PLMap strad = random_bump_on(rng, Interval::open(ExtRat(m1), ExtRat(b + 1)), 1);
  s.check(support_relation(f, strad) == SupportRelation::Overlapping, "straddling: Overlapping");
  // disj agrees with the exact support computation
  s.check(support(f).disjoint_from(support(far)), "Disjoint verdict vs set computation");
  s.check(!support(f).disjoint_from(support(strad)), "Overlap verdict vs set computation");
}

void suite_between(Suite& s, Rng& rng, const GenOptions& opt) {
  Rat a = rng.rat(opt.height);
  Rat b = a + Rat(rng.uniform(1, 3)), c = b + Rat(rng.uniform(1, 3));
  Rat d = c + Rat(rng.uniform(1, 3)), e = d + Rat(rng.uniform(1, 3)), w = e + Rat(1);
  PLMap f = random_bump_on(rng, Interval::open(ExtRat(a), ExtRat(b)), 1);
  PLMap g = random_bump_on(rng, Interval::open(ExtRat(c), ExtRat(d)), -1);
  PLMap h = random_bump_on(rng, Interval::open(ExtRat(e), ExtRat(w)), 1);
  s.check(support_between(f, g, h), "ordered triple: between");
  s.check(support_between(h, g, f), "reversed triple: between");
  s.check(!support_between(g, f, h), "misordered triple");
  s.check(!support_between(f, h, g), "misordered triple");
  PLMap overlap = random_bump_on(rng, Interval::open(ExtRat(c), ExtRat(w)), 1);
  s.check(!support_between(f, g, overlap), "overlapping operand");
}

void suite_adj_union(Suite& s, Rng& rng, const GenOptions& opt) {
  Rat a = rng.rat(opt.height);
  Rat b = a + Rat(rng.uniform(1, 3)), c = b + Rat(rng.uniform(1, 3));
  PLMap f = random_bump_on(rng, Interval::open(ExtRat(a), ExtRat(b)), 1);
  PLMap g = random_bump_on(rng, Interval::open(ExtRat(b), ExtRat(c)), rng.chance(1, 2) ? 1 : -1);
  s.check(adjacent_bumps(f, g), "touching bumps adjacent");
  s.check(adjacent_bumps(g, f), "adjacency symmetric");
  PLMap far = random_bump_on(rng, Interval::open(ExtRat(c + 1), ExtRat(c + 2)), 1);
  s.check(!adjacent_bumps(f, far), "separated bumps leave room in between");
  PLMap hull = random_bump_on(rng, Interval::open(ExtRat(a), ExtRat(c)), 1);
  s.check(union_bump(f, g, hull), "hull of touching supports");
  PLMap hull_far = random_bump_on(rng, Interval::open(ExtRat(a), ExtRat(c + 2)), 1);
  s.check(union_bump(f, far, hull_far), "hull spans the gap");
  s.check(!union_bump(f, g, hull_far), "oversized hull rejected");
  s.check(union_bump(f, PLMap::identity(), f), "hull with the identity is the bump itself");
}

void suite_bumpkind(Suite& s, Rng& rng, const GenOptions& opt) {
  PLMap bounded = random_bump_on(rng, random_bounded_span(rng, opt), 1);
  s.check(bump_kind(bounded) == BumpKind::Bounded, "bounded kind");
  Rat q = rng.rat(opt.height);
  s.check(bump_kind(random_bump_on(rng, Interval::open(ExtRat(q), ExtRat::pos_inf()), 1)) ==
              BumpKind::CofinalRight,
          "right cofinal kind");
  s.check(bump_kind(random_bump_on(rng, Interval::open(ExtRat::neg_inf(), ExtRat(q)), -1)) ==
              BumpKind::CofinalLeft,
          "left cofinal kind");
  s.check(bump_kind(random_bump_on(rng, Interval::whole(), 1)) == BumpKind::Coterminal,
          "coterminal kind");
  s.check(bump_kind(PLMap::identity()) == BumpKind::NotBump, "identity is not a bump");
  // conjugation preserves the kind
  PLMap u = random_automorphism(rng, opt);
  s.check(bump_kind(conjugate(bounded, u)) == BumpKind::Bounded, "kind is a conjugacy invariant");
}

void suite_oppsupport(Suite& s, Rng& rng, const GenOptions& opt) {
  Rat a = rng.rat(opt.height);
  PLMap left = random_bump_on(rng, Interval::open(ExtRat::neg_inf(), ExtRat(a)), 1);
  PLMap right = random_bump_on(rng, Interval::open(ExtRat(a), ExtRat::pos_inf()), 1);
  s.check(opp_support(left, right), "complementary supports");
  s.check(opp_support(right, left), "opp_support symmetric");
  PLMap right2 = random_bump_on(rng, Interval::open(ExtRat(a + 1), ExtRat::pos_inf()), 1);
  s.check(!opp_support(left, right2), "a bump fits between shifted supports");
  s.check(!opp_support(right, right2), "same-side supports are not opposite");
}

void suite_codesame(Suite& s, Rng& rng, const GenOptions& opt) {
  Rat a = rng.rat(opt.height);
  int parity = rng.chance(1, 2) ? 1 : -1;
  PLMap x = random_bump_on(rng, Interval::open(ExtRat(a), ExtRat::pos_inf()), parity);
  PLMap y = random_bump_on(rng, Interval::open(ExtRat(a), ExtRat::pos_inf()), -parity);
  PLMap z = random_bump_on(rng, Interval::open(ExtRat::neg_inf(), ExtRat(a)), parity);
  s.check(codesame(x, x), "codesame reflexive");
  s.check(codesame(x, y) && codesame(y, x), "same side, same endpoint");
  s.check(codesame(x, z) && codesame(z, x), "opposite sides, same endpoint");
  s.check(codesame(y, z), "transitive through the shared endpoint");
  PLMap w = random_bump_on(rng, Interval::open(ExtRat(a + rng.uniform(1, 4)), ExtRat::pos_inf()), 1);
  s.check(!codesame(x, w), "different endpoints");
  s.check(!codesame(x, random_bump_on(rng, Interval::whole(), 1)), "coterminal is not cofinal");
}

void suite_gauge(Suite& s, Rng& rng, const GenOptions& opt) {
  // certified translations
  long p = rng.uniform(-8, 8);
  long den = rng.uniform(1, 8);
  Rat rho = make_rat(p, den);
  CircleLift lift = CircleLift::translation(rho);
  RotationNumberResult r = rotation_number(lift, 16, 64);
  s.check(r.kind == RotationNumberResult::Kind::Rational, "translation certifies");
  s.check(r.rho == rho, "certified value");
  // self-verification of the certificate
  Rat x = r.witness;
  for (long i = 0; i < r.period; ++i) x = lift.evaluate(x);
  s.check(x == r.witness + Rat(r.shift), "certificate verifies");

  // interval bounds with the period search disabled
  long n = 64;
  RotationNumberResult est = rotation_number(lift, 0, n);
  s.check(est.kind == RotationNumberResult::Kind::Interval, "estimate kind");
  s.check(est.lo <= rho && rho <= est.hi, "estimate contains the true value");
  s.check(est.hi - est.lo <= make_rat(2, n), "estimate width bound");
  RotationNumberResult est2 = rotation_number(lift, 0, 2 * n);
  s.check(est.lo <= est2.lo && est2.hi <= est.hi, "bounds shrink monotonically");

  // lift law on one period
  Rat c = make_rat(rng.uniform(-16, 16), rng.uniform(1, 8));
  PLMap tr = PLMap::affine(Rat(1), c);
  s.check(is_lift(tr), "translations are lifts");
  for (const Rat& t : sample_points(rng, opt, 5))
    s.check(lift.evaluate(t + 1) == lift.evaluate(t) + 1, "lift law");

  // gauge refutation on a conjugated translation pair
  PLMap u = random_automorphism(rng, opt);
  Rat step = make_rat(rng.uniform(1, 12), rng.uniform(1, 4));
  PLMap f = conjugate(PLMap::affine(Rat(1), Rat(1)), u);
  PLMap g = conjugate(PLMap::affine(Rat(1), step), u);
  GaugeResult gr = gauge_check(f, g, 16, 256);
  s.check(gr.kind == GaugeResult::Kind::NotGaugePair, "rational pair refuted");
  if (gr.kind == GaugeResult::Kind::NotGaugePair) {
    s.check(gr.rho && gr.rho->kind == RotationNumberResult::Kind::Rational, "refutation rho");
    if (gr.rho) s.check(gr.rho->rho == step, "relative rotation number value");
    std::vector<Rat> pts = sample_points(rng, opt, 10);
    for (const Rat& t : pts) {
      Rat h1f = gr.cert_h1->evaluate(evaluate(f, t));
      Rat fh1 = evaluate(f, gr.cert_h1->evaluate(t));
      s.check(h1f == fh1, "h1 commutes with f");
      Rat h2g = gr.cert_h2->evaluate(evaluate(g, t));
      Rat gh2 = evaluate(g, gr.cert_h2->evaluate(t));
      s.check(h2g == gh2, "h2 commutes with g");
      Rat h1g = gr.cert_h1->evaluate(evaluate(g, t));
      Rat gh1 = evaluate(g, gr.cert_h1->evaluate(t));
      s.check(h1g == gh1, "h1 commutes with g");
      Rat h2f = gr.cert_h2->evaluate(evaluate(f, t));
      Rat fh2 = evaluate(f, gr.cert_h2->evaluate(t));
      s.check(h2f == fh2, "h2 commutes with f");
    }
    Rat d = *gr.noncommute_at;
    s.check(gr.cert_h1->evaluate(gr.cert_h2->evaluate(d)) !=
                gr.cert_h2->evaluate(gr.cert_h1->evaluate(d)),
            "certificates do not commute");
  }
}

void suite_rational(Suite& s, Rng& rng, const GenOptions& opt) {
  Rat q = rng.rat(opt.height);
  s.check(rational_endpoint_check(
              random_bump_on(rng, Interval::open(ExtRat(q), ExtRat::pos_inf()), 1)),
          "right cofinal endpoint is rational");
  s.check(rational_endpoint_check(
              random_bump_on(rng, Interval::open(ExtRat::neg_inf(), ExtRat(q)), -1)),
          "left cofinal endpoint is rational");
  s.check_throws(ErrorKind::NotCofinal, "coterminal rejected", [&] {
    rational_endpoint_check(random_bump_on(rng, Interval::whole(), 1));
  });
}

void suite_act(Suite& s, Rng& rng, const GenOptions& opt) {
  PLMap f = random_automorphism(rng, opt);
  Rat q = rng.rat(opt.height);
  CodedRational c = encode(q);
  CodedRational moved = group_act(f, c);
  s.check(moved.endpoint == evaluate(f, q), "decode(act(f, encode(q))) = f(q)");
  s.check(group_act(PLMap::identity(), c) == c, "identity acts trivially");
  PLMap g = random_automorphism(rng, opt);
  s.check(group_act(compose(f, g), c) == group_act(f, group_act(g, c)),
          "action is compatible with composition");
}

void suite_holland(Suite& s, Rng& rng, const GenOptions& opt) {
  long flavor = rng.uniform(0, 2);
  PLMap f, g;
  bool expect;
  if (flavor == 0) {
    f = random_automorphism(rng, opt);
    g = conjugate(f, random_automorphism(rng, opt));
    expect = true;
  } else if (flavor == 1) {
    BlockPlan plan = random_plan(rng);
    f = realize_plan(plan, rng);
    g = realize_plan(plan, rng);
    expect = true;
    s.check(pattern(f) == plan_pattern(plan), "realized pattern matches the plan");
  } else {
    BlockPlan p1 = random_plan(rng);
    BlockPlan p2 = random_plan(rng);
    while (plan_pattern(p2) == plan_pattern(p1)) p2 = random_plan(rng);
    f = realize_plan(p1, rng);
    g = realize_plan(p2, rng);
    expect = false;
  }
  bool verdict = is_conjugate(f, g);
  s.check(verdict == expect, "conjugacy verdict vs construction");
  s.check(verdict == (pattern_string(pattern(f)) == pattern_string(pattern(g))),
          "verdict is pattern-word equality");
  if (verdict) {
    LazyMap h = conjugator(f, g);
    for (const Rat& x : sample_points(rng, opt, 20))
      s.check(h.evaluate(evaluate(f, x)) == evaluate(g, h.evaluate(x)),
              "conjugator equivariance h(f(x)) = g(h(x))");
  } else {
    s.check_throws(ErrorKind::NotConjugate, "conjugator refuses unequal patterns",
                   [&] { conjugator(f, g); });
  }
  s.check(pattern(conjugate(f, random_automorphism(rng, opt))) == pattern(f),
          "pattern is a conjugacy invariant");
}

void suite_linear_between(Suite& s, Rng& rng, const GenOptions& opt) {
  Rat q = rng.rat(opt.height), r = rng.rat(opt.height), t = rng.rat(opt.height);
  BetweenResult res = linear_between(encode(q), encode(r), encode(t));
  bool expect = (q <= r && r <= t) || (t <= r && r <= q);
  s.check(res.holds == expect, "betweenness verdict");
  if (res.holds && ((q < r && r < t) || (t < r && r < q))) {
    s.check(res.witness.has_value(), "strict chain carries a witness");
    if (res.witness) {
      s.check(is_automorphism(*res.witness), "witness is an automorphism");
      s.check(evaluate(*res.witness, q) == r && evaluate(*res.witness, r) == t,
              "witness interpolates q -> r -> s");
    }
  }
}

// ---- section 3 suites ----

void suite_absorb(Suite& s, Rng& rng, const GenOptions& opt) {
  PLMap f = rng.chance(1, 2) ? random_embedding(rng, opt)
                             : random_endomorphism(rng, opt, rng.chance(1, 2));
  PLMap g;
  IntervalSet img = image(f);
  IntervalSet gaps = img.complement();
  if (!gaps.is_empty() && rng.chance(1, 2)) {
    long pick = rng.uniform(0, static_cast<long>(gaps.components().size()) - 1);
    Interval comp = gaps.components()[static_cast<std::size_t>(pick)];
    if (auto inner = comp.interior()) {
      Rat a = inner->lo.finite(), b = inner->hi.finite();
      Rat m1 = rng.rat_between(a, b), m2 = rng.rat_between(m1, b);
      g = random_bump_on(rng, Interval::open(ExtRat(m1), ExtRat(m2)), rng.chance(1, 2) ? 1 : -1);
    } else {
      g = random_automorphism(rng, opt);
    }
  } else {
    g = rng.chance(1, 2) ? random_automorphism(rng, opt)
                         : random_bump_on(rng, random_bounded_span(rng, opt), 1);
  }
  bool absorbed = left_absorbs(g, f);
  bool disjoint = img.disjoint_from(support(g));
  s.check(absorbed == disjoint, "gf = f iff image(f) and supp(g) are disjoint");
  s.check(left_absorbs(PLMap::identity(), f), "identity absorbs on the left");
}

void suite_gap(Suite& s, Rng& rng, const GenOptions& opt) {
  PLMap f = random_embedding(rng, opt);
  IntervalSet gaps = image(f).complement();
  std::vector<PLMap> bumps = gap_bumps(f);
  std::size_t expected = 0;
  for (const Interval& c : gaps.components())
    if (c.interior()) ++expected;
  s.check(bumps.size() == expected, "one bump per gap component");
  std::size_t bi = 0;
  for (const Interval& comp : gaps.components()) {
    auto inner = comp.interior();
    if (!inner) continue;
    const PLMap& b = bumps[bi++];
    s.check(left_absorbs(b, f), "gap bump absorbs: bf = f");
    s.check(support(b).components()[0] == *inner, "gap bump support is the gap interior");
    // competitors inside the gap absorb and sit inside the gap bump's support
    Rat a = inner->lo.finite(), hi = inner->hi.finite();
    for (int i = 0; i < 3; ++i) {
      Rat m1 = rng.rat_between(a, hi), m2 = rng.rat_between(m1, hi);
      PLMap z = random_bump_on(rng, Interval::open(ExtRat(m1), ExtRat(m2)), 1);
      s.check(left_absorbs(z, f), "sub-gap bump absorbs");
      s.check(!support(z).disjoint_from(support(b)), "competitor overlaps the gap bump");
      s.check(support(b).contains_set(support(z)), "maximality: competitor inside the gap");
    }
    // a straddling bump does not absorb
    PLMap z = random_bump_on(rng, Interval::open(ExtRat(rng.rat_between(a, hi)), ExtRat(hi + 1)), 1);
    s.check(!left_absorbs(z, f), "bump leaving the gap fails zf = f");
  }
  s.check(gap_bumps(random_automorphism(rng, opt)).empty(), "automorphisms have no gaps");
}

PLMap oriented_cofinal(Rng& rng, const Rat& q, bool left_side, int parity) {
  Interval span = left_side ? Interval::open(ExtRat::neg_inf(), ExtRat(q))
                            : Interval::open(ExtRat(q), ExtRat::pos_inf());
  return random_bump_on(rng, span, parity);
}

void suite_act1(Suite& s, Rng& rng, const GenOptions& opt) {
  bool left = rng.chance(1, 2);
  int parity = rng.chance(1, 2) ? 1 : -1;
  PLMap f = random_embedding(rng, opt);
  std::vector<JumpPoint> jumps = jump_points(f);
  std::optional<Rat> torn_at;
  for (const JumpPoint& jp : jumps) {
    if (left && jp.left_gap) torn_at = jp.at;
    if (!left && jp.right_gap) torn_at = jp.at;
  }
  if (torn_at) {
    Rat q = *torn_at;
    PLMap g = oriented_cofinal(rng, q, left, parity);
    PLMap h = oriented_cofinal(rng, evaluate(f, q), left, parity);
    Act1Result res = act1_check(f, g, h);
    s.check(res.holds, "tear at q with matching h must hold");
    if (res.holds) {
      s.check(evaluate(f, q) == decode(h), "soundness: f(q) = decode(h)");
      for (const Rat& x : sample_points(rng, opt, 20))
        s.check(evaluate(*res.transported, evaluate(f, x)) == evaluate(f, evaluate(g, x)),
                "fg = h'f pointwise");
      s.check(left_absorbs(*res.gap_bump, f), "gap witness absorbs");
    }
    PLMap wrong = oriented_cofinal(rng, evaluate(f, q) + 1, left, parity);
    s.check(!act1_check(f, g, wrong).holds, "wrong endpoint must fail");
  }
  // smooth points never hold
  PLMap a = random_automorphism(rng, opt);
  Rat q = rng.rat(opt.height);
  Act1Result res = act1_check(a, oriented_cofinal(rng, q, left, parity),
                              oriented_cofinal(rng, evaluate(a, q), left, parity));
  s.check(!res.holds, "automorphisms have no image gaps");
}

void suite_act2(Suite& s, Rng& rng, const GenOptions& opt) {
  bool left = rng.chance(1, 2);
  int parity = rng.chance(1, 2) ? 1 : -1;
  PLMap f = random_embedding(rng, opt);
  Rat q = rng.rat(opt.height);
  Rat r = evaluate(f, q);
  PLMap g = oriented_cofinal(rng, q, left, parity);
  PLMap h = oriented_cofinal(rng, r, left, parity);
  Act2Witness w = act2_witness(f, g, h);
  s.check(w.check_f1.holds && w.check_f2.holds, "both one-point checks hold");
  s.check(w.f1 == compose(w.f2, f), "f1 = f2 o f exactly");
  s.check(decode(w.k) == evaluate(w.f1, q), "middle point is f1(q)");
  s.check(decode(monoid_act(f, encode(q)).representative) == r, "monoid action decodes to f(q)");
  PLMap wrong = oriented_cofinal(rng, r + 1, left, parity);
  s.check_throws(ErrorKind::ActionMismatch, "mismatched target", [&] { act2_witness(f, g, wrong); });
}

void suite_inverse_factor(Suite& s, Rng& rng, const GenOptions& opt) {
  PLMap g = random_epimorphism(rng, opt);
  PLMap f = right_inverse(g);
  s.check(compose(g, f) == PLMap::identity(), "g o f = 1");
  s.check(is_injective(f), "right inverses are embeddings");
  for (const Rat& y : sample_points(rng, opt, 20))
    s.check(evaluate(g, evaluate(f, y)) == y, "right inverse pointwise");
  // pin through a flat when one exists
  for (const Piece& p : g.pieces()) {
    if (p.slope != 0 || p.dom.is_singleton()) continue;
    Rat a = p.dom.lo.finite(), b = p.dom.hi.finite();
    Rat x = rng.rat_between(a, b);
    PLMap pinned = right_inverse(g, Pin{p.offset, x});
    s.check(evaluate(pinned, p.offset) == x, "pin lands where requested");
    s.check(compose(g, pinned) == PLMap::identity(), "pinned inverse still inverts");
    break;
  }

  PLMap h = random_endomorphism(rng, opt, true);
  Factorization fac = factorize(h);
  s.check(compose(fac.epi, fac.emb) == h, "h = epi o emb");
  s.check(is_injective(fac.emb), "embedding factor");
  s.check(is_surjective(fac.epi), "epimorphism factor");

  PLMap bounded = random_endomorphism(rng, opt, false);
  IntervalSet img = image(bounded);
  bool coterminal = img.components().front().lo.is_neg_inf() &&
                    img.components().back().hi.is_pos_inf();
  if (!coterminal)
    s.check_throws(ErrorKind::NotRepresentable, "bounded image not factorizable",
                   [&] { factorize(bounded); });
}

void suite_act34(Suite& s, Rng& rng, const GenOptions& opt) {
  bool left = rng.chance(1, 2);
  int parity = rng.chance(1, 2) ? 1 : -1;
  // epimorphism action
  PLMap f = random_epimorphism(rng, opt);
  Rat q = rng.rat(opt.height);
  Rat r = evaluate(f, q);
  s.check(epi_act(f, encode(q)).endpoint == r, "epi action decodes to f(q)");
  PLMap g = oriented_cofinal(rng, q, left, parity);
  PLMap h = oriented_cofinal(rng, r, left, parity);
  Act3Witness w3 = act3_witness(f, g, h);
  s.check(compose(f, w3.right_inv) == PLMap::identity(), "act3: f o f' = 1");
  s.check(evaluate(w3.right_inv, r) == q, "act3: pinned value f'(r) = q");
  s.check(w3.inner.check_f1.holds && w3.inner.check_f2.holds, "act3: embedded act2 holds");

  // endomorphism action
  PLMap e = random_endomorphism(rng, opt, true);
  Rat qe = rng.rat(opt.height);
  Rat re = evaluate(e, qe);
  s.check(endo_act(e, encode(qe)).endpoint == re, "endo action decodes to h(q)");
  Act4Witness w4 = act4_witness(e, oriented_cofinal(rng, qe, left, parity),
                                oriented_cofinal(rng, re, left, parity));
  s.check(compose(w4.split.epi, w4.split.emb) == e, "act4: factorization recomposes");
  s.check(decode(w4.mid) == evaluate(w4.split.emb, qe), "act4: middle point");
  s.check(w4.emb_part.check_f1.holds && w4.emb_part.check_f2.holds, "act4: act2 part");

  PLMap bounded = random_endomorphism(rng, opt, false);
  IntervalSet img = image(bounded);
  bool coterminal = img.components().front().lo.is_neg_inf() &&
                    img.components().back().hi.is_pos_inf();
  Rat qb = rng.rat(opt.height);
  Rat rb = evaluate(bounded, qb);
  s.check(endo_act(bounded, encode(qb)).endpoint == rb, "endo action is total");
  if (!coterminal)
    s.check_throws(ErrorKind::NotRepresentable, "act4 witness on bounded image", [&] {
      act4_witness(bounded, oriented_cofinal(rng, qb, left, parity),
                   oriented_cofinal(rng, rb, left, parity));
    });
}

using SuiteFn = std::function<void(Suite&, Rng&, const GenOptions&)>;

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> reg = {
      {"L2.1", suite_comp},
      {"L2.2", suite_apart},
      {"L2.3", suite_bump},
      {"L2.4", suite_orbital},
      {"L2.5", suite_supports},
      {"L2.6", suite_between},
      {"L2.7", suite_adj_union},
      {"L2.8", suite_bumpkind},
      {"L2.9", suite_oppsupport},
      {"L2.10", suite_codesame},
      {"L2.11", suite_gauge},
      {"L2.12", suite_rational},
      {"T2.13", suite_act},
      {"S2.holland", suite_holland},
      {"S2.between", suite_linear_between},
      {"L3.1", suite_absorb},
      {"L3.2", suite_gap},
      {"L3.3", suite_act1},
      {"T3.4", suite_act2},
      {"L3.5", suite_inverse_factor},
      {"T3.6", suite_act34},
  };
  return reg;
}

}  // namespace

const std::vector<std::string>& lemma_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& [id, fn] : registry()) out.push_back(id);
    return out;
  }();
  return ids;
}

VerifyReport run_lemma(const std::string& id, const VerifyOptions& opt) {
  const SuiteFn* fn = nullptr;
  for (const auto& [name, f] : registry())
    if (name == id) fn = &f;
  if (!fn) fail(ErrorKind::DomainError, "unknown lemma id: " + id);

  Suite s;
  s.rep.lemma = id;
  s.rep.trials = opt.trials;
  s.rep.lines.push_back("lemma=" + id + " trials=" + std::to_string(opt.trials) +
                        " seed=" + std::to_string(opt.seed));
  for (long i = 0; i < opt.trials; ++i) {
    s.trial = i;
    Rng rng(opt.seed * 0x100000001b3ULL + static_cast<std::uint64_t>(i));
    try {
      (*fn)(s, rng, opt.gen);
    } catch (const Error& e) {
      s.check(false, std::string("unexpected error: ") + e.what());
    }
  }
  s.rep.lines.push_back("lemma=" + id + " failures=" + std::to_string(s.rep.failures) +
                        " verdict=" + (s.rep.failures == 0 ? "pass" : "fail"));
  return s.rep;
}

}  // namespace qinterp
