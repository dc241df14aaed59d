#include "qinterp/interval.hpp"

#include <algorithm>

namespace qinterp {

Interval::Interval(ExtRat lo_, ExtRat hi_, bool lo_closed_, bool hi_closed_)
    : lo(lo_), hi(hi_), lo_closed(lo_closed_), hi_closed(hi_closed_) {
  if (!lo.is_finite() && lo_closed) fail(ErrorKind::DomainError, "closed infinite endpoint");
  if (!hi.is_finite() && hi_closed) fail(ErrorKind::DomainError, "closed infinite endpoint");
  int c = cmp(lo, hi);
  if (c > 0) fail(ErrorKind::DomainError, "interval endpoints out of order");
  if (c == 0 && !(lo_closed && hi_closed))
    fail(ErrorKind::DomainError, "degenerate interval is empty");
}

Interval Interval::whole() { return Interval(ExtRat::neg_inf(), ExtRat::pos_inf(), false, false); }

Interval Interval::singleton(const Rat& q) { return Interval(q, q, true, true); }

Interval Interval::open(const ExtRat& lo, const ExtRat& hi) {
  return Interval(lo, hi, false, false);
}

Interval Interval::closed(const Rat& lo, const Rat& hi) { return Interval(lo, hi, true, true); }

bool Interval::is_singleton() const { return cmp(lo, hi) == 0; }

bool Interval::contains(const Rat& q) const {
  ExtRat e(q);
  int cl = cmp(e, lo);
  if (cl < 0 || (cl == 0 && !lo_closed)) return false;
  int ch = cmp(e, hi);
  if (ch > 0 || (ch == 0 && !hi_closed)) return false;
  return true;
}

std::optional<Interval> Interval::interior() const {
  if (is_singleton()) return std::nullopt;
  return Interval(lo, hi, false, false);
}

bool Interval::operator==(const Interval& o) const {
  return cmp(lo, o.lo) == 0 && cmp(hi, o.hi) == 0 && lo_closed == o.lo_closed &&
         hi_closed == o.hi_closed;
}

std::string interval_str(const Interval& iv) {
  std::string s;
  s += iv.lo_closed ? '[' : '(';
  s += ext_str(iv.lo);
  s += ',';
  s += ext_str(iv.hi);
  s += iv.hi_closed ? ']' : ')';
  return s;
}

namespace {

// Order endpoints as cut points of Q: a closed low end starts earlier than an
// open one at the same rational; a closed high end stops later.
int cmp_lo(const Interval& a, const Interval& b) {
  int c = cmp(a.lo, b.lo);
  if (c != 0) return c;
  if (a.lo_closed != b.lo_closed) return a.lo_closed ? -1 : 1;
  return 0;
}

int cmp_hi(const Interval& a, const Interval& b) {
  int c = cmp(a.hi, b.hi);
  if (c != 0) return c;
  if (a.hi_closed != b.hi_closed) return a.hi_closed ? 1 : -1;
  return 0;
}

}  // namespace

bool mergeable(const Interval& a, const Interval& b) {
  const Interval& first = cmp_lo(a, b) <= 0 ? a : b;
  const Interval& second = cmp_lo(a, b) <= 0 ? b : a;
  int c = cmp(first.hi, second.lo);
  if (c > 0) return true;
  if (c < 0) return false;
  return first.hi_closed || second.lo_closed;
}

std::optional<Interval> intersect(const Interval& a, const Interval& b) {
  ExtRat lo = a.lo;
  bool lo_closed = a.lo_closed;
  if (cmp_lo(b, a) > 0) {
    lo = b.lo;
    lo_closed = b.lo_closed;
  }
  ExtRat hi = a.hi;
  bool hi_closed = a.hi_closed;
  if (cmp_hi(b, a) < 0) {
    hi = b.hi;
    hi_closed = b.hi_closed;
  }
  int c = cmp(lo, hi);
  if (c > 0) return std::nullopt;
  if (c == 0 && !(lo_closed && hi_closed)) return std::nullopt;
  return Interval(lo, hi, lo_closed, hi_closed);
}

IntervalSet IntervalSet::of(std::vector<Interval> parts) {
  std::sort(parts.begin(), parts.end(),
            [](const Interval& a, const Interval& b) { return cmp_lo(a, b) < 0; });
  IntervalSet out;
  for (const Interval& iv : parts) {
    if (!out.comps_.empty() && mergeable(out.comps_.back(), iv)) {
      Interval& cur = out.comps_.back();
      if (cmp_hi(iv, cur) > 0) {
        cur.hi = iv.hi;
        cur.hi_closed = iv.hi_closed;
      }
    } else {
      out.comps_.push_back(iv);
    }
  }
  return out;
}

IntervalSet IntervalSet::empty_set() { return IntervalSet(); }

IntervalSet IntervalSet::whole() { return of({Interval::whole()}); }

bool IntervalSet::is_whole() const {
  return comps_.size() == 1 && comps_[0] == Interval::whole();
}

bool IntervalSet::contains_point(const Rat& q) const {
  for (const Interval& iv : comps_) {
    if (iv.contains(q)) return true;
    if (cmp(ExtRat(q), iv.lo) < 0) break;
  }
  return false;
}

IntervalSet IntervalSet::union_with(const IntervalSet& other) const {
  std::vector<Interval> all = comps_;
  all.insert(all.end(), other.comps_.begin(), other.comps_.end());
  return of(std::move(all));
}

IntervalSet IntervalSet::intersect_with(const IntervalSet& other) const {
  std::vector<Interval> out;
  for (const Interval& a : comps_)
    for (const Interval& b : other.comps_)
      if (auto c = intersect(a, b)) out.push_back(*c);
  return of(std::move(out));
}

IntervalSet IntervalSet::complement() const {
  if (comps_.empty()) return whole();
  std::vector<Interval> out;
  // Left tail.
  const Interval& first = comps_.front();
  if (!first.lo.is_neg_inf())
    out.push_back(Interval(ExtRat::neg_inf(), first.lo, false, !first.lo_closed));
  // Gaps.
  for (std::size_t i = 0; i + 1 < comps_.size(); ++i) {
    const Interval& a = comps_[i];
    const Interval& b = comps_[i + 1];
    int c = cmp(a.hi, b.lo);
    if (c == 0) {
      // Touching open ends leave the shared point outside the set.
      if (!a.hi_closed && !b.lo_closed) out.push_back(Interval::singleton(a.hi.finite()));
      continue;
    }
    out.push_back(Interval(a.hi, b.lo, !a.hi_closed, !b.lo_closed));
  }
  // Right tail.
  const Interval& last = comps_.back();
  if (!last.hi.is_pos_inf())
    out.push_back(Interval(last.hi, ExtRat::pos_inf(), !last.hi_closed, false));
  return of(std::move(out));
}

bool IntervalSet::contains_set(const IntervalSet& other) const {
  return intersect_with(other) == other;
}

bool IntervalSet::disjoint_from(const IntervalSet& other) const {
  return intersect_with(other).is_empty();
}

std::string interval_set_str(const IntervalSet& s) {
  if (s.is_empty()) return "{}";
  std::string out;
  for (std::size_t i = 0; i < s.components().size(); ++i) {
    if (i) out += " u ";
    out += interval_str(s.components()[i]);
  }
  return out;
}

}  // namespace qinterp
