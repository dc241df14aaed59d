#include "qinterp/plmap.hpp"

#include <algorithm>

namespace qinterp {

const char* map_class_name(MapClass c) {
  switch (c) {
    case MapClass::Identity: return "Identity";
    case MapClass::Automorphism: return "Automorphism";
    case MapClass::Embedding: return "Embedding";
    case MapClass::Epimorphism: return "Epimorphism";
    case MapClass::General: return "General";
  }
  return "?";
}

namespace {

ExtRat law_ext(const Rat& s, const Rat& c, const ExtRat& x) {
  // s > 0
  if (x.is_finite()) return ExtRat(s * x.finite() + c);
  return x;
}

Interval transform(const Interval& d, const Rat& s, const Rat& c) {
  return Interval(law_ext(s, c, d.lo), law_ext(s, c, d.hi), d.lo_closed, d.hi_closed);
}

ExtRat unlaw_ext(const Rat& s, const Rat& c, const ExtRat& y) {
  if (y.is_finite()) return ExtRat((y.finite() - c) / s);
  return y;
}

Interval untransform(const Interval& j, const Rat& s, const Rat& c) {
  return Interval(unlaw_ext(s, c, j.lo), unlaw_ext(s, c, j.hi), j.lo_closed, j.hi_closed);
}

Bound piece_sup(const Piece& p) {
  if (p.slope == 0) return {ExtRat(p.offset), true};
  return {law_ext(p.slope, p.offset, p.dom.hi), p.dom.hi_closed};
}

Bound piece_inf(const Piece& p) {
  if (p.slope == 0) return {ExtRat(p.offset), true};
  return {law_ext(p.slope, p.offset, p.dom.lo), p.dom.lo_closed};
}

void validate_pieces(const std::vector<Piece>& pieces) {
  if (pieces.empty()) fail(ErrorKind::DomainError, "no pieces");
  if (!pieces.front().dom.lo.is_neg_inf())
    fail(ErrorKind::DomainError, "first piece must be unbounded below");
  if (!pieces.back().dom.hi.is_pos_inf())
    fail(ErrorKind::DomainError, "last piece must be unbounded above");
  for (const Piece& p : pieces)
    if (p.slope < 0) fail(ErrorKind::DomainError, "negative slope");
  for (std::size_t i = 0; i + 1 < pieces.size(); ++i) {
    const Piece& a = pieces[i];
    const Piece& b = pieces[i + 1];
    int c = cmp(a.dom.hi, b.dom.lo);
    if (c < 0) fail(ErrorKind::DomainError, "gap in domain at " + ext_str(a.dom.hi));
    if (c > 0) fail(ErrorKind::DomainError, "overlapping pieces at " + ext_str(b.dom.lo));
    if (a.dom.hi_closed == b.dom.lo_closed)
      fail(ErrorKind::DomainError,
           a.dom.hi_closed ? "breakpoint covered twice" : "breakpoint uncovered");
    if (cmp(piece_sup(a).value, piece_inf(b).value) > 0)
      fail(ErrorKind::DomainError, "map not weakly increasing at " + ext_str(a.dom.hi));
  }
}

// Canonical form: singleton laws are stored as constants; a breakpoint whose
// value matches an adjacent law belongs to the right piece when possible,
// else to the left; equal-law neighbours merge. The result depends only on
// the function, so equality of maps is equality of piece lists.
std::vector<Piece> canonicalize(std::vector<Piece> pieces) {
  for (Piece& p : pieces) {
    if (p.dom.is_singleton()) {
      Rat v = p.apply(p.dom.lo.finite());
      p.slope = 0;
      p.offset = v;
    }
  }

  // Absorb singletons into whichever neighbour's law matches the value.
  std::vector<Piece> kept;
  kept.reserve(pieces.size());
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    Piece p = pieces[i];
    if (p.dom.is_singleton()) {
      const Rat b = p.dom.lo.finite();
      if (i + 1 < pieces.size() && pieces[i + 1].apply(b) == p.offset) {
        pieces[i + 1].dom.lo_closed = true;
        continue;
      }
      if (!kept.empty() && kept.back().apply(b) == p.offset) {
        kept.back().dom.hi_closed = true;
        continue;
      }
    }
    kept.push_back(p);
  }

  // Move a left-owned breakpoint to the right piece when the right law
  // also takes the breakpoint value.
  for (std::size_t i = 0; i + 1 < kept.size(); ++i) {
    Piece& l = kept[i];
    Piece& r = kept[i + 1];
    if (!l.dom.hi_closed || l.dom.is_singleton() || r.dom.is_singleton()) continue;
    const Rat b = l.dom.hi.finite();
    if (r.apply(b) == l.apply(b)) {
      l.dom.hi_closed = false;
      r.dom.lo_closed = true;
    }
  }

  // Merge equal laws.
  std::vector<Piece> out;
  out.reserve(kept.size());
  for (Piece& p : kept) {
    if (!out.empty() && out.back().same_law(p)) {
      out.back().dom.hi = p.dom.hi;
      out.back().dom.hi_closed = p.dom.hi_closed;
      continue;
    }
    out.push_back(p);
  }
  return out;
}

}  // namespace

PLMap::PLMap() : pieces_{Piece{Interval::whole(), Rat(1), Rat(0)}} {}

PLMap PLMap::identity() { return PLMap(); }

PLMap PLMap::affine(const Rat& slope, const Rat& offset) {
  if (slope < 0) fail(ErrorKind::DomainError, "negative slope");
  return PLMap({Piece{Interval::whole(), slope, offset}});
}

PLMap PLMap::from_pieces(std::vector<Piece> pieces) {
  std::sort(pieces.begin(), pieces.end(), [](const Piece& a, const Piece& b) {
    int c = cmp(a.dom.lo, b.dom.lo);
    if (c != 0) return c < 0;
    if (a.dom.lo_closed != b.dom.lo_closed) return a.dom.lo_closed;
    return false;
  });
  validate_pieces(pieces);
  std::vector<Piece> canon = canonicalize(std::move(pieces));
  validate_pieces(canon);
  return PLMap(std::move(canon));
}

const Piece& PLMap::piece_at(const Rat& x) const {
  // first piece whose domain is not entirely below x
  auto it = std::partition_point(pieces_.begin(), pieces_.end(), [&](const Piece& p) {
    int c = cmp(p.dom.hi, ExtRat(x));
    return c < 0 || (c == 0 && !p.dom.hi_closed);
  });
  if (it == pieces_.end() || !it->dom.contains(x))
    fail(ErrorKind::Internal, "point not covered by any piece");
  return *it;
}

bool PLMap::operator==(const PLMap& o) const {
  if (pieces_.size() != o.pieces_.size()) return false;
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    if (!(pieces_[i].dom == o.pieces_[i].dom)) return false;
    if (!pieces_[i].same_law(o.pieces_[i])) return false;
  }
  return true;
}

Rat evaluate(const PLMap& f, const Rat& x) { return f.piece_at(x).apply(x); }

namespace {

// Index of the piece governing the left (below) germ at finite x.
std::size_t left_piece_index(const PLMap& f, const Rat& x) {
  const auto& ps = f.pieces();
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (ps[i].dom.contains(x)) {
      if (cmp(ps[i].dom.lo, ExtRat(x)) == 0) {
        if (i == 0) fail(ErrorKind::Internal, "no piece below");
        return i - 1;
      }
      return i;
    }
  }
  fail(ErrorKind::Internal, "point not covered");
}

std::size_t right_piece_index(const PLMap& f, const Rat& x) {
  const auto& ps = f.pieces();
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (ps[i].dom.contains(x)) {
      if (cmp(ps[i].dom.hi, ExtRat(x)) == 0) {
        if (i + 1 == ps.size()) fail(ErrorKind::Internal, "no piece above");
        return i + 1;
      }
      return i;
    }
  }
  fail(ErrorKind::Internal, "point not covered");
}

}  // namespace

Rat left_limit(const PLMap& f, const Rat& x) {
  return f.pieces()[left_piece_index(f, x)].apply(x);
}

Rat right_limit(const PLMap& f, const Rat& x) {
  return f.pieces()[right_piece_index(f, x)].apply(x);
}

Bound sup_below(const PLMap& f, const Rat& x) {
  const Piece& p = f.pieces()[left_piece_index(f, x)];
  if (p.slope == 0) return {ExtRat(p.offset), true};
  return {ExtRat(p.apply(x)), false};
}

Bound inf_above(const PLMap& f, const Rat& x) {
  const Piece& p = f.pieces()[right_piece_index(f, x)];
  if (p.slope == 0) return {ExtRat(p.offset), true};
  return {ExtRat(p.apply(x)), false};
}

Interval piece_image(const Piece& p) {
  if (p.slope == 0) return Interval::singleton(p.offset);
  return transform(p.dom, p.slope, p.offset);
}

std::vector<JumpPoint> jump_points(const PLMap& f) {
  std::vector<JumpPoint> out;
  std::vector<Rat> boundaries;
  for (std::size_t i = 0; i + 1 < f.pieces().size(); ++i) {
    Rat b = f.pieces()[i].dom.hi.finite();
    if (boundaries.empty() || boundaries.back() != b) boundaries.push_back(b);
  }
  for (const Rat& b : boundaries) {
    Rat v = evaluate(f, b);
    Bound below = sup_below(f, b);
    Bound above = inf_above(f, b);
    JumpPoint jp;
    jp.at = b;
    if (cmp(below.value, ExtRat(v)) < 0)
      jp.left_gap = Interval(below.value, ExtRat(v), !below.attained, false);
    if (cmp(ExtRat(v), above.value) < 0)
      jp.right_gap = Interval(ExtRat(v), above.value, false, !above.attained);
    if (jp.left_gap || jp.right_gap) out.push_back(jp);
  }
  return out;
}

PLMap compose(const PLMap& f, const PLMap& g) {
  std::vector<Piece> out;
  for (const Piece& pg : g.pieces()) {
    if (pg.slope == 0) {
      out.push_back({pg.dom, Rat(0), evaluate(f, pg.offset)});
      continue;
    }
    Interval j = piece_image(pg);
    for (const Piece& pf : f.pieces()) {
      auto k = intersect(j, pf.dom);
      if (!k) continue;
      Interval sub = untransform(*k, pg.slope, pg.offset);
      out.push_back({sub, pf.slope * pg.slope, pf.slope * pg.offset + pf.offset});
    }
  }
  return PLMap::from_pieces(std::move(out));
}

bool is_identity(const PLMap& f) {
  return f.pieces().size() == 1 && f.pieces()[0].slope == 1 && f.pieces()[0].offset == 0;
}

bool is_injective(const PLMap& f) {
  const auto& ps = f.pieces();
  for (const Piece& p : ps)
    if (!p.dom.is_singleton() && p.slope == 0) return false;
  for (std::size_t i = 0; i + 1 < ps.size(); ++i) {
    Bound s = piece_sup(ps[i]);
    Bound t = piece_inf(ps[i + 1]);
    int c = cmp(s.value, t.value);
    if (c > 0) fail(ErrorKind::Internal, "monotonicity violated");
    if (c == 0 && s.attained && t.attained) return false;
  }
  return true;
}

IntervalSet image(const PLMap& f) {
  std::vector<Interval> parts;
  parts.reserve(f.pieces().size());
  for (const Piece& p : f.pieces()) parts.push_back(piece_image(p));
  return IntervalSet::of(std::move(parts));
}

bool is_surjective(const PLMap& f) { return image(f).is_whole(); }

bool is_automorphism(const PLMap& f) { return is_injective(f) && is_surjective(f); }

MapClass classify(const PLMap& f) {
  if (is_identity(f)) return MapClass::Identity;
  bool inj = is_injective(f);
  bool surj = is_surjective(f);
  if (inj && surj) return MapClass::Automorphism;
  if (inj) return MapClass::Embedding;
  if (surj) return MapClass::Epimorphism;
  return MapClass::General;
}

PLMap invert(const PLMap& f) {
  if (!is_automorphism(f)) fail(ErrorKind::NotInvertible, "map is not an automorphism");
  std::vector<Piece> out;
  out.reserve(f.pieces().size());
  for (const Piece& p : f.pieces())
    out.push_back({piece_image(p), Rat(1) / p.slope, -p.offset / p.slope});
  return PLMap::from_pieces(std::move(out));
}

IntervalSet fixed_set_of(const PLMap& f) {
  std::vector<Interval> parts;
  for (const Piece& p : f.pieces()) {
    if (p.slope == 1) {
      if (p.offset == 0) parts.push_back(p.dom);
      continue;
    }
    Rat x = p.offset / (Rat(1) - p.slope);
    if (p.dom.contains(x)) parts.push_back(Interval::singleton(x));
  }
  return IntervalSet::of(std::move(parts));
}

IntervalSet support(const PLMap& f) { return fixed_set_of(f).complement(); }

PLMap conjugate(const PLMap& f, const PLMap& g) {
  return compose(compose(g, f), invert(g));
}

PLMap right_inverse(const PLMap& g, const std::optional<Pin>& pin) {
  if (!is_surjective(g)) fail(ErrorKind::NotEpimorphism, "map is not surjective");
  if (pin && evaluate(g, pin->x) != pin->y)
    fail(ErrorKind::PinInconsistent, "g(x) != y for the requested pin");
  std::vector<Piece> out;
  bool open_next_lo = false;
  const auto& ps = g.pieces();
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const Piece& p = ps[i];
    if (p.slope > 0) {
      Interval dom = piece_image(p);
      if (open_next_lo) {
        dom.lo_closed = false;
        open_next_lo = false;
      }
      out.push_back({dom, Rat(1) / p.slope, -p.offset / p.slope});
      continue;
    }
    // flat [A, B) at value v; preimage closure [A, B]
    const Rat v = p.offset;
    const Rat a = p.dom.lo.finite();
    const Rat b = p.dom.hi.finite();
    Rat chosen = a;
    if (pin && pin->y == v) chosen = pin->x;
    if (chosen == b) continue;  // the next piece's inverse already sends v to B
    out.push_back({Interval::singleton(v), Rat(0), chosen});
    open_next_lo = true;
  }
  return PLMap::from_pieces(std::move(out));
}

PLMap gap_inserter(const Rat& v) {
  return PLMap::from_pieces({
      {Interval(ExtRat::neg_inf(), ExtRat(v), false, false), Rat(1), Rat(0)},
      {Interval(ExtRat(v), ExtRat::pos_inf(), true, false), Rat(1), Rat(1)},
  });
}

PLMap right_gap_inserter(const Rat& v) {
  return PLMap::from_pieces({
      {Interval(ExtRat::neg_inf(), ExtRat(v), false, true), Rat(1), Rat(0)},
      {Interval(ExtRat(v), ExtRat::pos_inf(), false, false), Rat(1), Rat(1)},
  });
}

Factorization factorize(const PLMap& h) {
  IntervalSet img = image(h);
  if (!img.components().front().lo.is_neg_inf() || !img.components().back().hi.is_pos_inf())
    fail(ErrorKind::NotRepresentable,
         "image not coterminal; no finitely-piecewise-affine factorization exists");
  std::vector<JumpPoint> jumps = jump_points(h);
  if (jumps.empty()) return {h, PLMap::identity()};

  // The embedding: slope 1 with a unit shift inserted at each discontinuity.
  std::vector<Piece> emb;
  Int k = 0;
  ExtRat prev = ExtRat::neg_inf();
  bool prev_closed = false;  // lo flag of the segment starting at prev
  for (const JumpPoint& jp : jumps) {
    emb.push_back({Interval(prev, ExtRat(jp.at), prev_closed, false), Rat(1), Rat(k)});
    if (jp.left_gap) k += 1;
    if (jp.right_gap) {
      emb.push_back({Interval::singleton(jp.at), Rat(0), jp.at + Rat(k)});
      k += 1;
      prev = ExtRat(jp.at);
      prev_closed = false;  // the singleton owns the point
    } else {
      prev = ExtRat(jp.at);
      prev_closed = true;
    }
  }
  emb.push_back({Interval(prev, ExtRat::pos_inf(), prev_closed, false), Rat(1), Rat(k)});
  PLMap f = PLMap::from_pieces(emb);

  // The epimorphism: h o f^-1 on the image of f, affine sweeps on the gaps.
  std::vector<Piece> epi;
  for (const Piece& p : f.pieces()) {
    if (p.dom.is_singleton()) {
      Rat x = p.dom.lo.finite();
      epi.push_back({Interval::singleton(p.offset), Rat(0), evaluate(h, x)});
      continue;
    }
    const Rat shift = p.offset;  // p is x + shift on dom
    for (const Piece& ph : h.pieces()) {
      auto ov = intersect(p.dom, ph.dom);
      if (!ov) continue;
      Interval dom = transform(*ov, Rat(1), shift);
      epi.push_back({dom, ph.slope, ph.offset - ph.slope * shift});
    }
  }
  for (const JumpPoint& jp : jump_points(f)) {
    // f's gap at b maps onto h's gap at b
    Rat b = jp.at;
    JumpPoint hj;
    bool found = false;
    for (const JumpPoint& cand : jump_points(h))
      if (cand.at == b) {
        hj = cand;
        found = true;
      }
    if (!found) fail(ErrorKind::Internal, "factorize: unmatched gap");
    if (jp.left_gap) {
      const Interval& fg = *jp.left_gap;
      const Interval& hg = *hj.left_gap;
      Rat u = fg.lo.finite();
      Rat lo = hg.lo.finite(), hi = hg.hi.finite();
      epi.push_back({Interval(fg.lo, fg.hi, true, false), hi - lo, lo - (hi - lo) * u});
    }
    if (jp.right_gap) {
      const Interval& fg = *jp.right_gap;
      const Interval& hg = *hj.right_gap;
      Rat u = fg.lo.finite();
      Rat lo = hg.lo.finite(), hi = hg.hi.finite();
      epi.push_back({Interval(fg.lo, fg.hi, false, true), hi - lo, lo - (hi - lo) * u});
    }
  }
  PLMap g = PLMap::from_pieces(std::move(epi));
  return {g, f};
}

PLMap bump_on(const Rat& a, const Rat& b) {
  if (!(a < b)) fail(ErrorKind::DomainError, "bump needs a < b");
  Rat p = (2 * a + b) / 3;
  return PLMap::from_pieces({
      {Interval(ExtRat::neg_inf(), ExtRat(a), false, false), Rat(1), Rat(0)},
      {Interval(ExtRat(a), ExtRat(p), true, false), Rat(2), -a},
      {Interval(ExtRat(p), ExtRat(b), true, false), make_rat(1, 2), b / 2},
      {Interval(ExtRat(b), ExtRat::pos_inf(), true, false), Rat(1), Rat(0)},
  });
}

PLMap right_cofinal_bump(const Rat& q) {
  return PLMap::from_pieces({
      {Interval(ExtRat::neg_inf(), ExtRat(q), false, false), Rat(1), Rat(0)},
      {Interval(ExtRat(q), ExtRat::pos_inf(), true, false), Rat(2), -q},
  });
}

PLMap left_cofinal_bump(const Rat& q) {
  return PLMap::from_pieces({
      {Interval(ExtRat::neg_inf(), ExtRat(q), false, false), make_rat(1, 2), q / 2},
      {Interval(ExtRat(q), ExtRat::pos_inf(), true, false), Rat(1), Rat(0)},
  });
}

PLMap bump_on_span(const Interval& span, int parity) {
  if (parity != 1 && parity != -1) fail(ErrorKind::DomainError, "parity must be +1 or -1");
  if (span.lo_closed || span.hi_closed) fail(ErrorKind::DomainError, "bump span must be open");
  PLMap up;
  if (span.lo.is_neg_inf() && span.hi.is_pos_inf()) up = PLMap::affine(Rat(1), Rat(1));
  else if (span.lo.is_neg_inf()) up = left_cofinal_bump(span.hi.finite());
  else if (span.hi.is_pos_inf()) up = right_cofinal_bump(span.lo.finite());
  else up = bump_on(span.lo.finite(), span.hi.finite());
  return parity == 1 ? up : invert(up);
}

PLMap interpolating_automorphism(const Rat& x1, const Rat& y1, const Rat& x2, const Rat& y2) {
  if (!(x1 < x2) || !(y1 < y2))
    fail(ErrorKind::DomainError, "interpolation needs x1 < x2 and y1 < y2");
  Rat s = (y2 - y1) / (x2 - x1);
  return PLMap::from_pieces({
      {Interval(ExtRat::neg_inf(), ExtRat(x1), false, false), Rat(1), y1 - x1},
      {Interval(ExtRat(x1), ExtRat(x2), true, false), s, y1 - s * x1},
      {Interval(ExtRat(x2), ExtRat::pos_inf(), true, false), Rat(1), y2 - x2},
  });
}

std::optional<Rat> where_differ(const PLMap& f, const PLMap& g) {
  if (f == g) return std::nullopt;
  std::vector<Rat> cuts;
  for (const PLMap* m : {&f, &g})
    for (std::size_t i = 0; i + 1 < m->pieces().size(); ++i)
      cuts.push_back(m->pieces()[i].dom.hi.finite());
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  std::vector<Rat> candidates = cuts;
  if (cuts.empty()) {
    candidates.push_back(Rat(0));
    candidates.push_back(Rat(1));
  } else {
    candidates.push_back(cuts.front() - 1);
    candidates.push_back(cuts.front() - 2);
    candidates.push_back(cuts.back() + 1);
    candidates.push_back(cuts.back() + 2);
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
      Rat w = cuts[i + 1] - cuts[i];
      candidates.push_back(cuts[i] + w / 3);
      candidates.push_back(cuts[i] + 2 * w / 3);
    }
  }
  for (const Rat& x : candidates)
    if (evaluate(f, x) != evaluate(g, x)) return x;
  fail(ErrorKind::Internal, "maps unequal in canonical form but no separating point found");
}

}  // namespace qinterp
