#pragma once

#include <optional>
#include <string>

#include "qinterp/lazy_map.hpp"
#include "qinterp/plmap.hpp"

namespace qinterp {

// Degree-one lift of a circle order-automorphism: strictly increasing,
// continuous, g(x+1) = g(x)+1, given exactly by its pieces over [0,1).
class CircleLift {
 public:
  // Pieces must partition [0,1) as [t0,t1), ..., [tk,1) with slopes > 0,
  // agree at the interior breakpoints, and satisfy g(1-) = g(0) + 1.
  static CircleLift from_period(std::vector<Piece> pieces);
  static CircleLift translation(const Rat& c);
  // Restriction of a PLMap to [0,1), when that restriction extends to a lift.
  static CircleLift from_plmap(const PLMap& g);

  const std::vector<Piece>& period_pieces() const { return pieces_; }

  Rat evaluate(const Rat& x) const;
  // Global affine law in force at x (period shift folded in).
  std::pair<Rat, Rat> law_at(const Rat& x) const;

  CircleLift after(const CircleLift& inner) const;  // this o inner

 private:
  CircleLift() = default;
  std::vector<Piece> pieces_;
};

// True when the restriction of g to [0,1) extends to a lift: increasing,
// no tear inside (0,1), and left limit at 1 equal to g(0) + 1. Among whole
// finitely-piecewise-affine maps only translations qualify.
bool is_lift(const PLMap& g);  // pre: automorphism

struct RotationNumberResult {
  enum class Kind { Rational, Interval };
  Kind kind = Kind::Interval;
  // Rational certificate: g^period(witness) = witness + shift, rho = shift/period.
  Rat rho;
  Rat witness;
  long period = 0;
  Int shift;
  // Interval estimate: true rho lies in [lo, hi], hi - lo <= 2/iterations.
  Rat lo, hi;
  long iterations = 0;
};

// Exact periodic-orbit search up to max_period, then the floor/ceil bound
// of g^max_iter(0) when no period exists.
RotationNumberResult rotation_number(const CircleLift& g, long max_period, long max_iter);

struct GaugeResult {
  enum class Kind { NotGaugePair, GaugeCandidate };
  Kind kind = Kind::NotGaugePair;
  std::string reason;
  std::optional<RotationNumberResult> rho;
  // For rational-rho refutations: automorphisms commuting with f and g but
  // not with each other, supported on the orbit of a wandering interval.
  std::optional<LazyMap> cert_h1, cert_h2;
  std::optional<Rat> noncommute_at;
};

// Checks coterminality, conjugacy and commutation, then decides the joint
// centralizer: a certified rational relative rotation number refutes the
// gauge property constructively; otherwise the interval estimate is
// reported as (inconclusive) evidence.
GaugeResult gauge_check(const PLMap& f, const PLMap& g, long max_period = 64,
                        long max_iter = 4096);

// Cofinal supports of piecewise-affine maps always have rational endpoints;
// the semantic face of the rationality formula. pre: cofinal bump.
bool rational_endpoint_check(const PLMap& f);

}  // namespace qinterp
