#include "qinterp/predicates.hpp"

namespace qinterp {

namespace {

void require_automorphism(const PLMap& f, const char* who) {
  if (!is_automorphism(f)) fail(ErrorKind::NotAutomorphism, who);
}

void require_bump(const PLMap& f, const char* who) {
  if (!is_bump(f)) fail(ErrorKind::NotBump, who);
}

// Support of a bump as one open interval.
Interval bump_span(const PLMap& f) {
  IntervalSet s = support(f);
  if (s.components().size() != 1) fail(ErrorKind::Internal, "bump with several components");
  return s.components()[0];
}

}  // namespace

Comparability comparability(const PLMap& f) {
  require_automorphism(f, "comparability");
  Comparability out{true, true};
  for (const Orbital& o : orbitals_of(f)) {
    if (o.parity > 0) out.negative = false;
    if (o.parity < 0) out.positive = false;
  }
  return out;
}

ComparabilityVerdict comparability_verdict(const Comparability& c) {
  if (c.positive) return ComparabilityVerdict::Positive;
  if (c.negative) return ComparabilityVerdict::Negative;
  return ComparabilityVerdict::Neither;
}

bool apart(const PLMap& f, const PLMap& g) {
  require_automorphism(f, "apart");
  require_automorphism(g, "apart");
  IntervalSet sf = support(f);
  IntervalSet sg = support(g);
  if (sf.is_empty() || sg.is_empty()) return true;
  const Interval& f_last = sf.components().back();
  const Interval& g_first = sg.components().front();
  if (cmp(f_last.hi, g_first.lo) <= 0) return true;  // open supports: touching is fine
  const Interval& g_last = sg.components().back();
  const Interval& f_first = sf.components().front();
  return cmp(g_last.hi, f_first.lo) <= 0;
}

bool is_bump(const PLMap& f) {
  require_automorphism(f, "is_bump");
  int nontrivial = 0;
  for (const Orbital& o : orbitals_of(f))
    if (o.parity != 0) ++nontrivial;
  return nontrivial == 1;
}

std::vector<PLMap> orbital_restrictions(const PLMap& g) {
  require_automorphism(g, "orbital_restrictions");
  std::vector<PLMap> out;
  for (const Orbital& o : orbitals_of(g)) {
    if (o.parity == 0) continue;
    std::vector<Piece> pieces;
    if (o.span.lo.is_finite())
      pieces.push_back({Interval(ExtRat::neg_inf(), o.span.lo, false, false), Rat(1), Rat(0)});
    for (const Piece& p : g.pieces()) {
      Interval clipped = o.span;
      if (o.span.lo.is_finite()) clipped.lo_closed = true;  // endpoint is fixed by g
      if (auto ov = intersect(clipped, p.dom)) pieces.push_back({*ov, p.slope, p.offset});
    }
    if (o.span.hi.is_finite())
      pieces.push_back({Interval(o.span.hi, ExtRat::pos_inf(), true, false), Rat(1), Rat(0)});
    out.push_back(PLMap::from_pieces(std::move(pieces)));
  }
  return out;
}

const char* support_relation_name(SupportRelation r) {
  switch (r) {
    case SupportRelation::Disjoint: return "Disjoint";
    case SupportRelation::FirstInsideSecond: return "FirstInsideSecond";
    case SupportRelation::SecondInsideFirst: return "SecondInsideFirst";
    case SupportRelation::Equal: return "Equal";
    case SupportRelation::Overlapping: return "Overlapping";
  }
  return "?";
}

SupportRelation support_relation(const PLMap& f, const PLMap& g) {
  require_automorphism(f, "support_relation");
  require_automorphism(g, "support_relation");
  IntervalSet sf = support(f);
  IntervalSet sg = support(g);
  if (sf == sg) return SupportRelation::Equal;
  if (sg.contains_set(sf)) return SupportRelation::FirstInsideSecond;
  if (sf.contains_set(sg)) return SupportRelation::SecondInsideFirst;
  if (sf.disjoint_from(sg)) return SupportRelation::Disjoint;
  return SupportRelation::Overlapping;
}

bool support_between(const PLMap& f, const PLMap& g, const PLMap& h) {
  require_bump(f, "support_between");
  require_bump(g, "support_between");
  require_bump(h, "support_between");
  Interval a = bump_span(f), b = bump_span(g), c = bump_span(h);
  auto left_of = [](const Interval& x, const Interval& y) { return cmp(x.hi, y.lo) <= 0; };
  return (left_of(a, b) && left_of(b, c)) || (left_of(c, b) && left_of(b, a));
}

bool adjacent_bumps(const PLMap& f, const PLMap& g) {
  require_bump(f, "adjacent_bumps");
  require_bump(g, "adjacent_bumps");
  Interval a = bump_span(f), b = bump_span(g);
  return cmp(a.hi, b.lo) == 0 || cmp(b.hi, a.lo) == 0;
}

bool union_bump(const PLMap& f, const PLMap& g, const PLMap& h) {
  require_automorphism(f, "union_bump");
  require_automorphism(g, "union_bump");
  require_bump(h, "union_bump");
  IntervalSet sf = support(f);
  IntervalSet sg = support(g);
  if (sf.is_empty() && sg.is_empty()) return false;
  ExtRat lo = ExtRat::pos_inf(), hi = ExtRat::neg_inf();
  for (const IntervalSet* s : {&sf, &sg}) {
    if (s->is_empty()) continue;
    if (cmp(s->components().front().lo, lo) < 0) lo = s->components().front().lo;
    if (cmp(s->components().back().hi, hi) > 0) hi = s->components().back().hi;
  }
  return bump_span(h) == Interval(lo, hi, false, false);
}

const char* bump_kind_name(BumpKind k) {
  switch (k) {
    case BumpKind::Coterminal: return "Coterminal";
    case BumpKind::Bounded: return "Bounded";
    case BumpKind::CofinalLeft: return "CofinalLeft";
    case BumpKind::CofinalRight: return "CofinalRight";
    case BumpKind::NotBump: return "NotBump";
  }
  return "?";
}

BumpKind bump_kind(const PLMap& f) {
  require_automorphism(f, "bump_kind");
  if (!is_bump(f)) return BumpKind::NotBump;
  Interval span = bump_span(f);
  bool lo_inf = span.lo.is_neg_inf();
  bool hi_inf = span.hi.is_pos_inf();
  if (lo_inf && hi_inf) return BumpKind::Coterminal;
  if (lo_inf) return BumpKind::CofinalLeft;
  if (hi_inf) return BumpKind::CofinalRight;
  return BumpKind::Bounded;
}

bool opp_support(const PLMap& f, const PLMap& g) {
  require_automorphism(f, "opp_support");
  require_automorphism(g, "opp_support");
  if (!is_bump(f) || !is_bump(g)) return false;
  BumpKind kf = bump_kind(f), kg = bump_kind(g);
  if (kf == BumpKind::CofinalLeft && kg == BumpKind::CofinalRight)
    return bump_span(f).hi == bump_span(g).lo;
  if (kf == BumpKind::CofinalRight && kg == BumpKind::CofinalLeft)
    return bump_span(f).lo == bump_span(g).hi;
  return false;
}

bool codesame(const PLMap& f, const PLMap& g) {
  require_automorphism(f, "codesame");
  require_automorphism(g, "codesame");
  if (!is_bump(f) || !is_bump(g)) return false;
  auto endpoint = [](BumpKind k, const Interval& span) -> std::optional<Rat> {
    if (k == BumpKind::CofinalLeft) return span.hi.finite();
    if (k == BumpKind::CofinalRight) return span.lo.finite();
    return std::nullopt;
  };
  auto ef = endpoint(bump_kind(f), bump_span(f));
  auto eg = endpoint(bump_kind(g), bump_span(g));
  return ef && eg && *ef == *eg;
}

bool left_absorbs(const PLMap& g, const PLMap& f) { return compose(g, f) == f; }

std::vector<PLMap> gap_bumps(const PLMap& f) {
  if (!is_injective(f)) fail(ErrorKind::NotEmbedding, "gap_bumps");
  std::vector<PLMap> out;
  IntervalSet gaps = image(f).complement();
  for (const Interval& comp : gaps.components()) {
    auto inner = comp.interior();
    if (!inner) continue;  // an isolated missing point carries no bump
    out.push_back(bump_on_span(*inner, 1));
  }
  return out;
}

}  // namespace qinterp
