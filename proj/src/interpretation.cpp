#include "qinterp/interpretation.hpp"

namespace qinterp {

namespace {

int bump_parity(const PLMap& f) {
  for (const Orbital& o : orbitals_of(f))
    if (o.parity != 0) return o.parity;
  return 0;
}

}  // namespace

PLMap cofinal_bump(const Rat& q, bool left_side) {
  return left_side ? left_cofinal_bump(q) : right_cofinal_bump(q);
}

CodedRational encode(const Rat& q) { return {right_cofinal_bump(q), q}; }

Rat decode(const PLMap& f) {
  BumpKind k = bump_kind(f);
  if (k == BumpKind::CofinalLeft) return support(f).components()[0].hi.finite();
  if (k == BumpKind::CofinalRight) return support(f).components()[0].lo.finite();
  fail(ErrorKind::NotCofinal, "decode needs a cofinal bump");
}

CodedRational group_act(const PLMap& f, const CodedRational& c) {
  if (!is_automorphism(f)) fail(ErrorKind::NotAutomorphism, "group_act");
  PLMap moved = conjugate(c.representative, f);
  return encode(decode(moved));
}

CodedRational monoid_act(const PLMap& f, const CodedRational& c) {
  if (!is_injective(f)) fail(ErrorKind::NotEmbedding, "monoid_act");
  return encode(evaluate(f, c.endpoint));
}

CodedRational epi_act(const PLMap& f, const CodedRational& c) {
  if (!is_surjective(f)) fail(ErrorKind::NotEpimorphism, "epi_act");
  return encode(evaluate(f, c.endpoint));
}

CodedRational endo_act(const PLMap& h, const CodedRational& c) {
  return encode(evaluate(h, c.endpoint));
}

BetweenResult linear_between(const CodedRational& c1, const CodedRational& c2,
                             const CodedRational& c3) {
  const Rat& q = c1.endpoint;
  const Rat& r = c2.endpoint;
  const Rat& s = c3.endpoint;
  BetweenResult out;
  out.holds = (q <= r && r <= s) || (s <= r && r <= q);
  if (!out.holds) return out;
  if (q < r && r < s) out.witness = interpolating_automorphism(q, r, r, s);
  else if (s < r && r < q) out.witness = interpolating_automorphism(r, s, q, r);
  return out;
}

namespace {

struct BumpInfo {
  Rat point;
  bool left_side = false;
  int parity = 0;
};

BumpInfo cofinal_info(const PLMap& g, const char* who) {
  BumpKind k;
  try {
    k = bump_kind(g);
  } catch (const Error&) {
    fail(ErrorKind::PreconditionViolated, std::string(who) + ": not an automorphism");
  }
  if (k != BumpKind::CofinalLeft && k != BumpKind::CofinalRight)
    fail(ErrorKind::PreconditionViolated, std::string(who) + ": not a cofinal bump");
  return {decode(g), k == BumpKind::CofinalLeft, bump_parity(g)};
}

// f o g o f^-1 transported through the image of f on the moved side of q,
// interpolated across image gaps, identity elsewhere.
PLMap transported_map(const PLMap& f, const PLMap& g, const Rat& q, bool left_side,
                      const Rat& boundary) {
  PLMap w = compose(f, g);
  Interval side = left_side ? Interval(ExtRat::neg_inf(), ExtRat(q), false, false)
                            : Interval(ExtRat(q), ExtRat::pos_inf(), false, false);
  auto law_end = [](const Piece& p, const ExtRat& e) {
    return e.is_finite() ? ExtRat(p.apply(e.finite())) : e;
  };
  std::vector<Piece> mapped;
  for (const Piece& p : f.pieces()) {
    auto clip = intersect(p.dom, side);
    if (!clip) continue;
    if (p.slope == 0) {  // singleton piece of the embedding
      Rat x = clip->lo.finite();
      mapped.push_back({Interval::singleton(p.offset), Rat(0), evaluate(w, x)});
      continue;
    }
    for (const Piece& pw : w.pieces()) {
      auto ov = intersect(*clip, pw.dom);
      if (!ov) continue;
      Interval dom(law_end(p, ov->lo), law_end(p, ov->hi), ov->lo_closed, ov->hi_closed);
      mapped.push_back({dom, pw.slope / p.slope, pw.offset - pw.slope * p.offset / p.slope});
    }
  }

  std::vector<Piece> pieces;
  if (!left_side)
    pieces.push_back(
        {Interval(ExtRat::neg_inf(), ExtRat(boundary), false, true), Rat(1), Rat(0)});
  for (std::size_t i = 0; i < mapped.size(); ++i) {
    if (i > 0) {
      const Piece& a = mapped[i - 1];
      const Piece& b = mapped[i];
      int c = cmp(a.dom.hi, b.dom.lo);
      bool abut = c == 0 && (a.dom.hi_closed != b.dom.lo_closed);
      if (!abut) {
        Interval gap(a.dom.hi, b.dom.lo, !a.dom.hi_closed, !b.dom.lo_closed);
        Rat u = gap.lo.finite(), v = gap.hi.finite();
        Rat lo_val = a.apply(u);
        Rat hi_val = b.apply(v);
        Rat slope = gap.is_singleton() ? Rat(0) : (hi_val - lo_val) / (v - u);
        pieces.push_back({gap, slope, lo_val - slope * u});
      }
    }
    pieces.push_back(mapped[i]);
  }
  if (left_side)
    pieces.push_back(
        {Interval(ExtRat(boundary), ExtRat::pos_inf(), true, false), Rat(1), Rat(0)});
  return PLMap::from_pieces(std::move(pieces));
}

}  // namespace

Act1Result act1_check(const PLMap& f, const PLMap& g, const PLMap& h) {
  if (!is_injective(f)) fail(ErrorKind::PreconditionViolated, "act1: f not injective");
  BumpInfo gi = cofinal_info(g, "act1: g");
  BumpInfo hi = cofinal_info(h, "act1: h");
  if (gi.left_side != hi.left_side || gi.parity != hi.parity)
    fail(ErrorKind::PreconditionViolated, "act1: g and h are not conjugate");

  const Rat q = gi.point;
  const Rat r = hi.point;
  const Rat fq = evaluate(f, q);
  Act1Result out;

  Bound edge = gi.left_side ? sup_below(f, q) : inf_above(f, q);
  bool torn = gi.left_side ? cmp(edge.value, ExtRat(fq)) < 0 : cmp(ExtRat(fq), edge.value) < 0;
  if (!torn) {
    out.reason = "image has no gap against f(q)";
    return out;
  }
  const Rat rp = edge.value.finite();
  Interval expected = gi.left_side ? Interval::open(ExtRat(rp), ExtRat(fq))
                                   : Interval::open(ExtRat(fq), ExtRat(rp));
  Rat mid = (rp + fq) / 2;
  std::optional<Interval> comp;
  IntervalSet holes = image(f).complement();
  for (const Interval& c : holes.components())
    if (c.contains(mid)) comp = c;
  if (!comp || !(comp->interior() && *comp->interior() == expected)) {
    out.reason = "gap against f(q) is not a maximal image gap";
    return out;
  }
  if (r != fq) {
    out.reason = "decode(h) != f(q)";
    return out;
  }

  out.holds = true;
  out.gap_bump = bump_on(expected.lo.finite(), expected.hi.finite());
  PLMap moved = transported_map(f, g, q, gi.left_side, rp);
  if (!(compose(moved, f) == compose(f, g)))
    fail(ErrorKind::Internal, "act1 witness fails fg = h'f");
  out.transported = moved;
  return out;
}

Act2Witness act2_witness(const PLMap& f, const PLMap& g, const PLMap& h) {
  if (!is_injective(f)) fail(ErrorKind::NotEmbedding, "act2_witness");
  BumpInfo gi = cofinal_info(g, "act2: g");
  BumpInfo hi = cofinal_info(h, "act2: h");
  if (gi.left_side != hi.left_side || gi.parity != hi.parity)
    fail(ErrorKind::PreconditionViolated, "act2: g and h are not conjugate");
  const Rat q = gi.point;
  if (evaluate(f, q) != hi.point)
    fail(ErrorKind::ActionMismatch, "f(decode(g)) != decode(h)");

  Act2Witness out;
  const Rat v = evaluate(f, q);
  out.f2 = gi.left_side ? gap_inserter(v) : right_gap_inserter(v);
  out.f1 = compose(out.f2, f);
  Rat s = evaluate(out.f1, q);
  out.k = cofinal_bump(s, gi.left_side);
  if (gi.parity < 0) out.k = invert(out.k);
  out.check_f1 = act1_check(out.f1, g, out.k);
  out.check_f2 = act1_check(out.f2, h, out.k);
  if (!out.check_f1.holds || !out.check_f2.holds)
    fail(ErrorKind::Internal, "act2 construction failed its own act1 checks");
  return out;
}

Act3Witness act3_witness(const PLMap& f, const PLMap& g, const PLMap& h) {
  if (!is_surjective(f)) fail(ErrorKind::NotEpimorphism, "act3_witness");
  BumpInfo gi = cofinal_info(g, "act3: g");
  BumpInfo hi = cofinal_info(h, "act3: h");
  const Rat q = gi.point;
  const Rat r = hi.point;
  if (evaluate(f, q) != r) fail(ErrorKind::ActionMismatch, "f(decode(g)) != decode(h)");

  Act3Witness out;
  out.right_inv = right_inverse(f, Pin{r, q});
  if (!(compose(f, out.right_inv) == PLMap::identity()))
    fail(ErrorKind::Internal, "act3: right inverse fails f o f' = 1");
  out.inner = act2_witness(out.right_inv, h, g);
  return out;
}

Act4Witness act4_witness(const PLMap& h, const PLMap& g, const PLMap& k) {
  BumpInfo gi = cofinal_info(g, "act4: g");
  BumpInfo ki = cofinal_info(k, "act4: k");
  const Rat q = gi.point;
  const Rat r = ki.point;
  if (evaluate(h, q) != r) fail(ErrorKind::ActionMismatch, "h(decode(g)) != decode(k)");

  Act4Witness out;
  out.split = factorize(h);
  Rat s = evaluate(out.split.emb, q);
  out.mid = cofinal_bump(s, gi.left_side);
  if (gi.parity < 0) out.mid = invert(out.mid);
  out.epi_part = act3_witness(out.split.epi, out.mid, k);
  out.emb_part = act2_witness(out.split.emb, g, out.mid);
  return out;
}

}  // namespace qinterp
