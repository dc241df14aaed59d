#include "qinterp/generate.hpp"

#include <algorithm>
#include <set>

namespace qinterp {

std::uint64_t Rng::next() {
  state_ += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

long Rng::uniform(long lo, long hi) {
  if (lo > hi) fail(ErrorKind::Internal, "bad uniform range");
  std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(next() % span);
}

bool Rng::chance(int num, int den) { return uniform(1, den) <= num; }

Rat Rng::rat(long height) {
  long num = uniform(-height, height);
  long den = uniform(1, height);
  return make_rat(num, den);
}

Rat Rng::rat_between(const Rat& lo, const Rat& hi) {
  long k = uniform(1, 15);
  return lo + (hi - lo) * make_rat(k, 16);
}

Rat random_rational(Rng& rng, const GenOptions& opt) { return rng.rat(opt.height); }

namespace {

std::vector<Rat> sorted_distinct_rats(Rng& rng, const GenOptions& opt, long n) {
  std::set<Rat> set;
  while (static_cast<long>(set.size()) < n) set.insert(rng.rat(opt.height));
  return std::vector<Rat>(set.begin(), set.end());
}

Rat positive_slope(Rng& rng, const GenOptions& opt) {
  return make_rat(rng.uniform(1, opt.height), rng.uniform(1, opt.height));
}

ExtRat fin(const Rat& q) { return ExtRat(q); }

}  // namespace

PLMap random_automorphism(Rng& rng, const GenOptions& opt) {
  long k = rng.uniform(0, opt.max_breaks);
  if (k == 0) return PLMap::affine(positive_slope(rng, opt), rng.rat(opt.height));
  std::vector<Rat> breaks = sorted_distinct_rats(rng, opt, k);
  std::vector<Rat> values = sorted_distinct_rats(rng, opt, k);
  std::vector<Piece> pieces;
  Rat s0 = positive_slope(rng, opt);
  pieces.push_back({Interval(ExtRat::neg_inf(), fin(breaks[0]), false, false), s0,
                    values[0] - s0 * breaks[0]});
  for (long i = 0; i + 1 < k; ++i) {
    Rat s = (values[i + 1] - values[i]) / (breaks[i + 1] - breaks[i]);
    pieces.push_back({Interval(fin(breaks[i]), fin(breaks[i + 1]), true, false), s,
                      values[i] - s * breaks[i]});
  }
  Rat sk = positive_slope(rng, opt);
  pieces.push_back({Interval(fin(breaks[k - 1]), ExtRat::pos_inf(), true, false), sk,
                    values[k - 1] - sk * breaks[k - 1]});
  return PLMap::from_pieces(std::move(pieces));
}

namespace {

// Chain of affine stretches: left values may jump upward (embeddings,
// endomorphisms), slopes may vanish (epimorphisms, endomorphisms), isolated
// points may take their own value between the one-sided limits.
PLMap random_walk_map(Rng& rng, const GenOptions& opt, bool allow_jumps, bool allow_flats,
                      bool force_coterminal_image) {
  long k = rng.uniform(1, opt.max_breaks);
  std::vector<Rat> breaks = sorted_distinct_rats(rng, opt, k);
  std::vector<Piece> pieces;

  bool first_flat = allow_flats && !force_coterminal_image && rng.chance(1, 5);
  Rat s = first_flat ? Rat(0) : positive_slope(rng, opt);
  Rat c = rng.rat(opt.height);
  pieces.push_back({Interval(ExtRat::neg_inf(), fin(breaks[0]), false, false), s,
                    first_flat ? c : c - s * breaks[0]});

  Rat left_val = pieces[0].apply(breaks[0]);
  for (long i = 0; i < k; ++i) {
    const Rat b = breaks[i];
    Rat start = left_val;
    bool jumped = false;
    if (allow_jumps && rng.chance(1, 2)) {
      start = left_val + make_rat(rng.uniform(1, opt.height), rng.uniform(1, 8));
      jumped = true;
    }
    bool singleton = allow_jumps && jumped && rng.chance(1, 4);
    if (singleton)
      pieces.push_back({Interval::singleton(b), Rat(0), rng.rat_between(left_val, start)});
    ExtRat next_end = i + 1 < k ? fin(breaks[i + 1]) : ExtRat::pos_inf();
    bool last = i + 1 == k;
    bool flat =
        allow_flats && !(last && force_coterminal_image) && !singleton && rng.chance(1, 4);
    Rat slope = flat ? Rat(0) : positive_slope(rng, opt);
    Rat offset = flat ? start : start - slope * b;
    pieces.push_back({Interval(fin(b), next_end, !singleton, false), slope, offset});
    if (!last) left_val = pieces.back().apply(breaks[i + 1]);
  }
  return PLMap::from_pieces(std::move(pieces));
}

}  // namespace

PLMap random_embedding(Rng& rng, const GenOptions& opt) {
  return random_walk_map(rng, opt, true, false, true);
}

PLMap random_epimorphism(Rng& rng, const GenOptions& opt) {
  return random_walk_map(rng, opt, false, true, true);
}

PLMap random_endomorphism(Rng& rng, const GenOptions& opt, bool force_coterminal_image) {
  return random_walk_map(rng, opt, true, true, force_coterminal_image);
}

PLMap random_bump_on(Rng& rng, const Interval& span, int parity) {
  if (span.lo_closed || span.hi_closed) fail(ErrorKind::DomainError, "bump span must be open");
  std::vector<Piece> pieces;
  if (span.lo.is_finite() && span.hi.is_finite()) {
    const Rat a = span.lo.finite();
    const Rat b = span.hi.finite();
    Rat m = rng.rat_between(a, b);
    Rat v = rng.rat_between(m, b);
    Rat s1 = (v - a) / (m - a);
    Rat s2 = (b - v) / (b - m);
    pieces = {
        {Interval(ExtRat::neg_inf(), fin(a), false, false), Rat(1), Rat(0)},
        {Interval(fin(a), fin(m), true, false), s1, a * (Rat(1) - s1)},
        {Interval(fin(m), fin(b), true, false), s2, b * (Rat(1) - s2)},
        {Interval(fin(b), ExtRat::pos_inf(), true, false), Rat(1), Rat(0)},
    };
  } else if (span.lo.is_finite() && span.hi.is_pos_inf()) {
    const Rat a = span.lo.finite();
    Rat m = a + Rat(rng.uniform(1, 4));
    Rat v = m + make_rat(rng.uniform(1, 8), rng.uniform(1, 4));
    Rat s1 = (v - a) / (m - a);                              // > 1: stays above x
    Rat s2 = Rat(1) + make_rat(rng.uniform(0, 8), 8);        // >= 1: tail stays above x
    pieces = {
        {Interval(ExtRat::neg_inf(), fin(a), false, false), Rat(1), Rat(0)},
        {Interval(fin(a), fin(m), true, false), s1, a * (Rat(1) - s1)},
        {Interval(fin(m), ExtRat::pos_inf(), true, false), s2, v - s2 * m},
    };
  } else if (span.lo.is_neg_inf() && span.hi.is_finite()) {
    const Rat b = span.hi.finite();
    Rat m = b - Rat(rng.uniform(1, 4));
    Rat v = rng.rat_between(m, b);
    Rat s0 = make_rat(rng.uniform(1, 8), rng.uniform(8, 16));  // < 1: head stays above x
    Rat s1 = (b - v) / (b - m);
    pieces = {
        {Interval(ExtRat::neg_inf(), fin(m), false, false), s0, v - s0 * m},
        {Interval(fin(m), fin(b), true, false), s1, b * (Rat(1) - s1)},
        {Interval(fin(b), ExtRat::pos_inf(), true, false), Rat(1), Rat(0)},
    };
  } else {
    // coterminal: head slope <= 1, tail slope >= 1, values above the diagonal
    Rat b1 = rng.rat(8);
    Rat b2 = b1 + Rat(rng.uniform(1, 4));
    Rat v1 = b1 + make_rat(rng.uniform(1, 8), rng.uniform(1, 4));
    Rat v2 = std::max(v1, b2) + make_rat(rng.uniform(1, 8), rng.uniform(1, 4));
    long den = rng.uniform(1, 8);
    Rat s0 = make_rat(rng.uniform(1, den), den);  // in (0, 1]
    Rat sm = (v2 - v1) / (b2 - b1);
    Rat sk = Rat(1) + make_rat(rng.uniform(0, 8), 8);
    pieces = {
        {Interval(ExtRat::neg_inf(), fin(b1), false, false), s0, v1 - s0 * b1},
        {Interval(fin(b1), fin(b2), true, false), sm, v1 - sm * b1},
        {Interval(fin(b2), ExtRat::pos_inf(), true, false), sk, v2 - sk * b2},
    };
  }
  PLMap up = PLMap::from_pieces(std::move(pieces));
  return parity == 1 ? up : invert(up);
}

BlockPlan random_plan(Rng& rng) {
  using K = BlockPlan::Kind;
  BlockPlan plan;
  if (rng.chance(1, 12)) {
    plan.blocks = {K::FixAll};
    return plan;
  }
  if (rng.chance(1, 8)) {
    plan.blocks = {rng.chance(1, 2) ? K::BumpPos : K::BumpNeg};
    return plan;
  }
  long bumps = rng.uniform(1, 3);
  if (rng.chance(1, 2)) plan.blocks.push_back(K::FixLeftRay);
  for (long i = 0; i < bumps; ++i) {
    plan.blocks.push_back(rng.chance(1, 2) ? K::BumpPos : K::BumpNeg);
    if (i + 1 < bumps)
      plan.blocks.push_back(rng.chance(1, 2) ? K::FixPoint : K::FixInterval);
  }
  if (rng.chance(1, 2)) plan.blocks.push_back(K::FixRightRay);
  return plan;
}

OrbitalPattern plan_pattern(const BlockPlan& plan) {
  using K = BlockPlan::Kind;
  OrbitalPattern word;
  for (K k : plan.blocks) {
    PatternBlock b;
    switch (k) {
      case K::BumpPos: b.kind = PatternBlock::Kind::Pos; break;
      case K::BumpNeg: b.kind = PatternBlock::Kind::Neg; break;
      case K::FixPoint:
        b = {PatternBlock::Kind::Fixed, true, true, true};
        break;
      case K::FixInterval:
        b = {PatternBlock::Kind::Fixed, true, true, false};
        break;
      case K::FixLeftRay:
        b = {PatternBlock::Kind::Fixed, false, true, false};
        break;
      case K::FixRightRay:
        b = {PatternBlock::Kind::Fixed, true, false, false};
        break;
      case K::FixAll:
        b = {PatternBlock::Kind::Fixed, false, false, false};
        break;
    }
    word.push_back(b);
  }
  return word;
}

PLMap realize_plan(const BlockPlan& plan, Rng& rng) {
  using K = BlockPlan::Kind;
  if (plan.blocks.size() == 1 && plan.blocks[0] == K::FixAll) return PLMap::identity();
  if (plan.blocks.size() == 1) {
    int parity = plan.blocks[0] == K::BumpPos ? 1 : -1;
    return random_bump_on(rng, Interval::whole(), parity);
  }

  // assign spans left to right
  Rat cur = rng.rat(8);
  std::vector<Piece> pieces;
  auto bump_pieces_inside = [&](const Interval& span, int parity) {
    PLMap bump = random_bump_on(rng, span, parity);
    for (const Piece& p : bump.pieces())
      if (auto ov = intersect(p.dom, span)) pieces.push_back({*ov, p.slope, p.offset});
  };

  for (std::size_t i = 0; i < plan.blocks.size(); ++i) {
    K k = plan.blocks[i];
    bool first = i == 0;
    bool last = i + 1 == plan.blocks.size();
    switch (k) {
      case K::FixAll:
        fail(ErrorKind::Internal, "FixAll inside a composite plan");
      case K::FixLeftRay:
        pieces.push_back({Interval(ExtRat::neg_inf(), fin(cur), false, true), Rat(1), Rat(0)});
        break;
      case K::FixRightRay:
        pieces.push_back({Interval(fin(cur), ExtRat::pos_inf(), true, false), Rat(1), Rat(0)});
        break;
      case K::FixPoint:
        pieces.push_back({Interval::singleton(cur), Rat(1), Rat(0)});
        break;
      case K::FixInterval: {
        Rat end = cur + Rat(rng.uniform(1, 4));
        pieces.push_back({Interval(fin(cur), fin(end), true, true), Rat(1), Rat(0)});
        cur = end;
        break;
      }
      case K::BumpPos:
      case K::BumpNeg: {
        int parity = k == K::BumpPos ? 1 : -1;
        ExtRat lo = first ? ExtRat::neg_inf() : fin(cur);
        ExtRat hi;
        if (last) hi = ExtRat::pos_inf();
        else {
          cur = cur + Rat(rng.uniform(1, 4));
          hi = fin(cur);
        }
        bump_pieces_inside(Interval(lo, hi, false, false), parity);
        break;
      }
    }
  }
  return PLMap::from_pieces(std::move(pieces));
}

}  // namespace qinterp
