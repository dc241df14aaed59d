#include "qinterp/orbitals.hpp"

namespace qinterp {

IntervalSet fixed_set(const PLMap& f) {
  if (!is_automorphism(f)) fail(ErrorKind::NotAutomorphism, "fixed_set");
  return fixed_set_of(f);
}

Rat span_point(const Interval& span) {
  if (span.lo.is_finite() && span.hi.is_finite())
    return (span.lo.finite() + span.hi.finite()) / 2;
  if (span.lo.is_finite()) return span.lo.finite() + 1;
  if (span.hi.is_finite()) return span.hi.finite() - 1;
  return Rat(0);
}

std::vector<Orbital> orbitals_of(const PLMap& f) {
  IntervalSet fixed = fixed_set(f);
  IntervalSet moving = fixed.complement();
  std::vector<Orbital> out;
  auto fi = fixed.components().begin();
  auto mi = moving.components().begin();
  while (fi != fixed.components().end() || mi != moving.components().end()) {
    bool take_fixed;
    if (fi == fixed.components().end()) take_fixed = false;
    else if (mi == moving.components().end()) take_fixed = true;
    else take_fixed = cmp(fi->lo, mi->lo) < 0 || (cmp(fi->lo, mi->lo) == 0 && fi->lo_closed);
    if (take_fixed) {
      out.push_back({*fi, 0});
      ++fi;
    } else {
      Rat x = span_point(*mi);
      Rat fx = evaluate(f, x);
      out.push_back({*mi, fx > x ? 1 : -1});
      ++mi;
    }
  }
  return out;
}

OrbitalPattern pattern(const PLMap& f) {
  OrbitalPattern word;
  for (const Orbital& o : orbitals_of(f)) {
    PatternBlock b;
    if (o.parity > 0) b.kind = PatternBlock::Kind::Pos;
    else if (o.parity < 0) b.kind = PatternBlock::Kind::Neg;
    else {
      b.kind = PatternBlock::Kind::Fixed;
      b.has_min = o.span.lo.is_finite() && o.span.lo_closed;
      b.has_max = o.span.hi.is_finite() && o.span.hi_closed;
      b.singleton = o.span.is_singleton();
    }
    word.push_back(b);
  }
  return word;
}

std::string pattern_string(const OrbitalPattern& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    switch (w[i].kind) {
      case PatternBlock::Kind::Pos: out += 'P'; break;
      case PatternBlock::Kind::Neg: out += 'M'; break;
      case PatternBlock::Kind::Fixed: {
        char open = w[i].singleton || !(w[i].has_min && w[i].has_max) ? '(' : '[';
        char close = open == '[' ? ']' : ')';
        out += 'F';
        out += open;
        out += w[i].has_min ? '+' : '-';
        out += ',';
        out += w[i].has_max ? '+' : '-';
        out += close;
        break;
      }
    }
  }
  return out;
}

bool is_conjugate(const PLMap& f, const PLMap& g) { return pattern(f) == pattern(g); }

LazyMap conjugator(const PLMap& f, const PLMap& g, long budget) {
  if (!is_conjugate(f, g)) fail(ErrorKind::NotConjugate, "orbital patterns differ");
  std::vector<Orbital> fo = orbitals_of(f);
  std::vector<Orbital> go = orbitals_of(g);
  std::vector<LazyMap::GlueBlock> blocks;
  for (std::size_t i = 0; i < fo.size(); ++i) {
    const Orbital& a = fo[i];
    const Orbital& b = go[i];
    LazyMap::GlueBlock blk;
    blk.src = a.span;
    blk.dst = b.span;
    blk.parity = a.parity;
    if (a.parity == 0) {
      // order isomorphism of matching fixed blocks
      if (a.span.lo.is_finite() && a.span.hi.is_finite() && !a.span.is_singleton()) {
        blk.seed_slope =
            (b.span.hi.finite() - b.span.lo.finite()) / (a.span.hi.finite() - a.span.lo.finite());
        blk.seed_offset = b.span.lo.finite() - blk.seed_slope * a.span.lo.finite();
      } else if (a.span.lo.is_finite()) {
        blk.seed_slope = 1;
        blk.seed_offset = b.span.lo.finite() - a.span.lo.finite();
      } else if (a.span.hi.is_finite()) {
        blk.seed_slope = 1;
        blk.seed_offset = b.span.hi.finite() - a.span.hi.finite();
      } else {
        blk.seed_slope = 1;
        blk.seed_offset = 0;
      }
    } else {
      blk.f = f;
      blk.g = g;
      Rat p1 = span_point(a.span);
      Rat p2 = span_point(b.span);
      Rat fp1 = evaluate(f, p1);
      Rat gp2 = evaluate(g, p2);
      blk.fund = a.parity > 0 ? Interval(ExtRat(p1), ExtRat(fp1), true, false)
                              : Interval(ExtRat(fp1), ExtRat(p1), true, false);
      blk.seed_slope = (gp2 - p2) / (fp1 - p1);
      blk.seed_offset = p2 - blk.seed_slope * p1;
    }
    blocks.push_back(std::move(blk));
  }
  return LazyMap::glue(std::move(blocks), budget);
}

}  // namespace qinterp
