#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qinterp/rat.hpp"

namespace qinterp {

// Convex subset of Q with extended-rational endpoints. Nonempty by
// construction: lo < hi, or lo == hi finite with both ends closed
// (a singleton). Infinite endpoints are never closed.
struct Interval {
  ExtRat lo = ExtRat::neg_inf();
  ExtRat hi = ExtRat::pos_inf();
  bool lo_closed = false;
  bool hi_closed = false;

  Interval() = default;
  Interval(ExtRat lo_, ExtRat hi_, bool lo_closed_, bool hi_closed_);

  static Interval whole();
  static Interval singleton(const Rat& q);
  static Interval open(const ExtRat& lo, const ExtRat& hi);
  static Interval closed(const Rat& lo, const Rat& hi);

  bool is_singleton() const;
  bool contains(const Rat& q) const;
  // Largest open interval inside; empty for singletons.
  std::optional<Interval> interior() const;

  bool operator==(const Interval& o) const;
};

std::string interval_str(const Interval& iv);

std::optional<Interval> intersect(const Interval& a, const Interval& b);

// True when a ∪ b is convex (they overlap or touch at a shared closed end).
bool mergeable(const Interval& a, const Interval& b);

// Finite union of pairwise disjoint, non-mergeable intervals kept in
// ascending order; the value type for supports, images and fixed sets.
class IntervalSet {
 public:
  IntervalSet() = default;

  static IntervalSet of(std::vector<Interval> parts);  // normalizes
  static IntervalSet empty_set();
  static IntervalSet whole();

  const std::vector<Interval>& components() const { return comps_; }
  bool is_empty() const { return comps_.empty(); }
  bool is_whole() const;

  bool contains_point(const Rat& q) const;
  bool contains_set(const IntervalSet& other) const;
  bool disjoint_from(const IntervalSet& other) const;

  IntervalSet union_with(const IntervalSet& other) const;
  IntervalSet intersect_with(const IntervalSet& other) const;
  IntervalSet complement() const;

  bool operator==(const IntervalSet& o) const { return comps_ == o.comps_; }

 private:
  std::vector<Interval> comps_;
};

std::string interval_set_str(const IntervalSet& s);

}  // namespace qinterp
