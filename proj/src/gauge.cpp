#include "qinterp/gauge.hpp"

#include <algorithm>

#include "qinterp/orbitals.hpp"
#include "qinterp/predicates.hpp"

namespace qinterp {

namespace {

constexpr long kLocateBudget = 1'000'000;

Rat frac_part(const Rat& x, Int& n) {
  n = floor_rat(x);
  return x - Rat(n);
}

}  // namespace

CircleLift CircleLift::from_period(std::vector<Piece> pieces) {
  std::sort(pieces.begin(), pieces.end(),
            [](const Piece& a, const Piece& b) { return cmp(a.dom.lo, b.dom.lo) < 0; });
  if (pieces.empty()) fail(ErrorKind::DomainError, "empty lift");
  if (!(pieces.front().dom.lo == ExtRat(Rat(0))) || !pieces.front().dom.lo_closed)
    fail(ErrorKind::DomainError, "lift pieces must start at [0");
  if (!(pieces.back().dom.hi == ExtRat(Rat(1))) || pieces.back().dom.hi_closed)
    fail(ErrorKind::DomainError, "lift pieces must end at 1)");
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const Piece& p = pieces[i];
    if (p.slope <= 0) fail(ErrorKind::DomainError, "lift must be strictly increasing");
    if (!p.dom.lo_closed || p.dom.hi_closed)
      fail(ErrorKind::DomainError, "lift pieces must be half-open [t,u)");
    if (i + 1 < pieces.size()) {
      if (!(p.dom.hi == pieces[i + 1].dom.lo))
        fail(ErrorKind::DomainError, "lift pieces must partition [0,1)");
      Rat t = p.dom.hi.finite();
      if (p.apply(t) != pieces[i + 1].apply(t))
        fail(ErrorKind::DomainError, "lift must be continuous inside the period");
    }
  }
  Rat seam = pieces.back().apply(Rat(1));
  if (seam != pieces.front().apply(Rat(0)) + 1)
    fail(ErrorKind::DomainError, "lift seam must satisfy g(1-) = g(0)+1");
  CircleLift out;
  out.pieces_ = std::move(pieces);
  return out;
}

CircleLift CircleLift::translation(const Rat& c) {
  return from_period({Piece{Interval(ExtRat(Rat(0)), ExtRat(Rat(1)), true, false), Rat(1), c}});
}

CircleLift CircleLift::from_plmap(const PLMap& g) {
  if (!is_lift(g)) fail(ErrorKind::DomainError, "restriction to [0,1) is not a lift");
  Interval period(ExtRat(Rat(0)), ExtRat(Rat(1)), true, false);
  std::vector<Piece> pieces;
  for (const Piece& p : g.pieces())
    if (auto ov = intersect(p.dom, period)) pieces.push_back({*ov, p.slope, p.offset});
  return from_period(std::move(pieces));
}

Rat CircleLift::evaluate(const Rat& x) const {
  auto [s, c] = law_at(x);
  return s * x + c;
}

std::pair<Rat, Rat> CircleLift::law_at(const Rat& x) const {
  Int n;
  Rat frac = frac_part(x, n);
  for (const Piece& p : pieces_) {
    if (p.dom.contains(frac)) {
      // g(x) = g(frac) + n with frac = x - n
      Rat shift(n);
      return {p.slope, p.offset + shift * (Rat(1) - p.slope)};
    }
  }
  fail(ErrorKind::Internal, "lift period does not cover the point");
}

CircleLift CircleLift::after(const CircleLift& inner) const {
  // breakpoints: inner's own, plus inner-preimages of this lift's breakpoints
  std::vector<Rat> cuts;
  for (const Piece& p : inner.pieces_) cuts.push_back(p.dom.lo.finite());
  Rat lo_val = inner.pieces_.front().apply(Rat(0));
  for (const Piece& p : pieces_) {
    Rat beta = p.dom.lo.finite();
    // unique integer m with beta + m in [inner(0), inner(0)+1)
    Int m = ceil_rat(lo_val - beta);
    Rat target = beta + Rat(m);
    if (target < lo_val) target += 1;
    if (target >= lo_val + 1) target -= 1;
    // solve inner(x) = target on [0,1)
    for (const Piece& q : inner.pieces_) {
      Rat x = (target - q.offset) / q.slope;
      if (q.dom.contains(x)) {
        if (x > 0 && x < 1) cuts.push_back(x);
        break;
      }
    }
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  std::vector<Piece> pieces;
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    Rat u = cuts[i];
    Rat v = i + 1 < cuts.size() ? cuts[i + 1] : Rat(1);
    Rat mid = (u + v) / 2;
    auto [s2, c2] = inner.law_at(mid);
    auto [s1, c1] = law_at(s2 * mid + c2);
    pieces.push_back({Interval(ExtRat(u), ExtRat(v), true, false), s1 * s2, s1 * c2 + c1});
  }
  return from_period(std::move(pieces));
}

bool is_lift(const PLMap& g) {
  if (!is_automorphism(g)) fail(ErrorKind::NotAutomorphism, "is_lift");
  Interval period(ExtRat(Rat(0)), ExtRat(Rat(1)), true, false);
  for (const Piece& p : g.pieces()) {
    auto ov = intersect(p.dom, period);
    if (ov && p.slope == 0) return false;
  }
  // automorphisms are continuous, so only the seam law can fail
  return left_limit(g, Rat(1)) == evaluate(g, Rat(0)) + 1;
}

RotationNumberResult rotation_number(const CircleLift& g, long max_period, long max_iter) {
  std::optional<CircleLift> power;
  for (long q = 1; q <= max_period; ++q) {
    power = power ? g.after(*power) : g;
    // displacement power(x) - x on [0,1]: extremes occur at breakpoints
    std::vector<Rat> probes;
    for (const Piece& p : power->period_pieces()) probes.push_back(p.dom.lo.finite());
    probes.push_back(Rat(1));
    Rat dmin = power->evaluate(probes[0]) - probes[0];
    Rat dmax = dmin;
    for (const Rat& t : probes) {
      Rat d = power->evaluate(t) - t;
      dmin = std::min(dmin, d);
      dmax = std::max(dmax, d);
    }
    for (Int p = ceil_rat(dmin); p <= floor_rat(dmax); ++p) {
      for (const Piece& pc : power->period_pieces()) {
        std::optional<Rat> witness;
        if (pc.slope == 1) {
          if (pc.offset == Rat(p)) witness = pc.dom.lo.finite();
        } else {
          Rat x = (Rat(p) - pc.offset) / (pc.slope - 1);
          if (pc.dom.contains(x)) witness = x;
        }
        if (witness) {
          RotationNumberResult out;
          out.kind = RotationNumberResult::Kind::Rational;
          out.rho = make_rat(p, Int(q));
          out.witness = *witness;
          out.period = q;
          out.shift = p;
          return out;
        }
      }
    }
  }
  if (max_iter <= 0) fail(ErrorKind::BudgetExceeded, "no period found and no iterations allowed");
  Rat x(0);
  for (long i = 0; i < max_iter; ++i) x = g.evaluate(x);
  RotationNumberResult out;
  out.kind = RotationNumberResult::Kind::Interval;
  out.lo = make_rat(floor_rat(x), Int(max_iter));
  out.hi = make_rat(ceil_rat(x), Int(max_iter));
  out.iterations = max_iter;
  return out;
}

namespace {

// k with f^k(0) <= x < f^{k+1}(0), by exact iteration.
long locate_in_orbit(const PLMap& f, const PLMap& f_inv, const Rat& x, long budget) {
  long k = 0;
  Rat y(0);
  if (x >= 0) {
    while (true) {
      Rat fy = evaluate(f, y);
      if (fy > x) return k;
      y = fy;
      ++k;
      if (--budget < 0) fail(ErrorKind::BudgetExceeded, "orbit location");
    }
  }
  while (y > x) {
    y = evaluate(f_inv, y);
    --k;
    if (--budget < 0) fail(ErrorKind::BudgetExceeded, "orbit location");
  }
  return k;
}

Rat component_point(const Interval& c) {
  if (c.is_singleton()) return c.lo.finite();
  return span_point(Interval(c.lo, c.hi, false, false));
}

}  // namespace

GaugeResult gauge_check(const PLMap& f_in, const PLMap& g_in, long max_period, long max_iter) {
  GaugeResult out;
  if (!is_automorphism(f_in) || !is_automorphism(g_in)) {
    out.reason = "both arguments must be automorphisms";
    return out;
  }
  if (bump_kind(f_in) != BumpKind::Coterminal || bump_kind(g_in) != BumpKind::Coterminal) {
    out.reason = "not a coterminal pair";
    return out;
  }
  if (!is_conjugate(f_in, g_in)) {
    out.reason = "not conjugate (parities differ)";
    return out;
  }
  if (!(compose(f_in, g_in) == compose(g_in, f_in))) {
    out.reason = "the pair does not commute";
    return out;
  }

  // orient positive
  bool flip = evaluate(f_in, Rat(0)) < 0;
  PLMap f = flip ? invert(f_in) : f_in;
  PLMap g = flip ? invert(g_in) : g_in;
  PLMap f_inv = invert(f);
  PLMap g_inv = invert(g);

  // relative rotation number: search g^q(x) = f^p(x)
  std::optional<PLMap> g_pow;
  std::optional<RotationNumberResult> cert;
  for (long q = 1; q <= max_period && !cert; ++q) {
    g_pow = g_pow ? compose(g, *g_pow) : g;
    long k1 = locate_in_orbit(f, f_inv, evaluate(*g_pow, Rat(0)), kLocateBudget);
    PLMap f_pow_inv = PLMap::identity();
    for (long i = 0; i < k1; ++i) f_pow_inv = compose(f_inv, f_pow_inv);
    for (long dp = 0; dp <= 1 && !cert; ++dp) {
      PLMap w = compose(f_pow_inv, *g_pow);
      IntervalSet fs = fixed_set_of(w);
      if (!fs.is_empty()) {
        RotationNumberResult r;
        r.kind = RotationNumberResult::Kind::Rational;
        r.period = q;
        r.shift = Int(k1 + dp);
        r.rho = make_rat(Int(k1 + dp), Int(q));
        r.witness = component_point(fs.components().front());
        cert = r;
        break;
      }
      f_pow_inv = compose(f_inv, f_pow_inv);
    }
  }

  if (!cert) {
    if (max_iter <= 0) fail(ErrorKind::BudgetExceeded, "gauge: no iterations allowed");
    Rat y(0);
    for (long i = 0; i < max_iter; ++i) y = evaluate(g, y);
    long k = locate_in_orbit(f, f_inv, y, kLocateBudget);
    RotationNumberResult est;
    est.kind = RotationNumberResult::Kind::Interval;
    est.lo = make_rat(Int(k), Int(max_iter));
    est.hi = make_rat(Int(k + 1), Int(max_iter));
    est.iterations = max_iter;
    out.kind = GaugeResult::Kind::GaugeCandidate;
    out.reason = "no periodic relation up to the period bound";
    out.rho = est;
    return out;
  }

  // rational relative rotation number: the centralizer cannot be abelian;
  // build the non-commuting pair on the orbit of a wandering interval.
  out.kind = GaugeResult::Kind::NotGaugePair;
  out.reason = "relative rotation number is rational";
  out.rho = cert;

  const long q = cert->period;
  const Rat x0 = cert->witness;
  // For commuting piecewise-affine pairs the relation g^q = f^p holds on all
  // of Q once it holds somewhere: the support of f^-p g^q would otherwise be
  // a nonempty f-invariant set avoiding the witness orbit.
  {
    PLMap w = g;
    for (long i = 1; i < q; ++i) w = compose(g, w);
    for (Int p = cert->shift; p > 0; p -= 1) w = compose(f_inv, w);
    if (!is_identity(w)) fail(ErrorKind::Internal, "gauge: g^q f^-p fixes a point but is not 1");
  }

  LazyMap::OrbitCopy data;
  data.f = f;
  data.g = g;
  data.base = x0;
  data.base_top = evaluate(f, x0);
  for (long j = 0; j < q; ++j) {
    Rat y = x0;
    for (long i = 0; i < j; ++i) y = evaluate(g, y);
    long m = 0;
    long budget = kLocateBudget;
    while (y >= data.base_top) {
      y = evaluate(f_inv, y);
      ++m;
      if (--budget < 0) fail(ErrorKind::BudgetExceeded, "phase location");
    }
    while (y < data.base) {
      y = evaluate(f, y);
      --m;
      if (--budget < 0) fail(ErrorKind::BudgetExceeded, "phase location");
    }
    data.phases.push_back({y, m, j});
  }
  std::sort(data.phases.begin(), data.phases.end(),
            [](const auto& a, const auto& b) { return a.y < b.y; });
  Rat gap_hi = q > 1 ? data.phases[1].y : data.base_top;
  data.gap = Interval::open(ExtRat(x0), ExtRat(gap_hi));

  Rat width = gap_hi - x0;
  Rat c1 = x0 + width / 3;
  Rat c2 = x0 + 2 * width / 3;
  PLMap seed1 = bump_on(x0, c2);
  PLMap seed2 = bump_on(c1, gap_hi);
  auto diff = where_differ(compose(seed1, seed2), compose(seed2, seed1));
  if (!diff) fail(ErrorKind::Internal, "gauge: seeds unexpectedly commute");
  out.noncommute_at = *diff;

  data.seed = seed1;
  out.cert_h1 = LazyMap::orbit_copy(data);
  data.seed = seed2;
  out.cert_h2 = LazyMap::orbit_copy(data);
  return out;
}

bool rational_endpoint_check(const PLMap& f) {
  BumpKind k = bump_kind(f);
  if (k != BumpKind::CofinalLeft && k != BumpKind::CofinalRight)
    fail(ErrorKind::NotCofinal, "rational_endpoint_check");
  return true;  // piecewise-affine data forces rational support endpoints
}

}  // namespace qinterp
