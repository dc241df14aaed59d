#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "qinterp/interval.hpp"

namespace qinterp {

enum class MapClass { Identity, Automorphism, Embedding, Epimorphism, General };

const char* map_class_name(MapClass c);

// One affine law on one convex domain.
struct Piece {
  Interval dom;
  Rat slope;   // >= 0
  Rat offset;

  Rat apply(const Rat& x) const { return slope * x + offset; }
  bool same_law(const Piece& o) const { return slope == o.slope && offset == o.offset; }
};

// Value reached or approached at one side of a piece: the building block of
// exact image and continuity computations.
struct Bound {
  ExtRat value;
  bool attained = false;
};

// Finitely-piecewise-affine weakly increasing self-map of (Q, <=).
//
// The pieces partition Q. In the common continuous-from-the-right case the
// canonical shape is (-inf,b1), [b1,b2), ..., [bk, inf); maps that take an
// exceptional value at a single point additionally carry singleton pieces
// [b,b] (with the neighbouring piece then open on that side). Canonical form
// merges every mergeable neighbour and, where a breakpoint value matches
// both adjacent laws, assigns the point to the right piece; equality of maps
// is equality of canonical forms.
class PLMap {
 public:
  PLMap();  // identity

  static PLMap identity();
  static PLMap affine(const Rat& slope, const Rat& offset);  // slope >= 0
  static PLMap from_pieces(std::vector<Piece> pieces);       // validates + canonicalizes

  const std::vector<Piece>& pieces() const { return pieces_; }
  const Piece& piece_at(const Rat& x) const;

  bool operator==(const PLMap& o) const;

 private:
  explicit PLMap(std::vector<Piece> pieces) : pieces_(std::move(pieces)) {}
  std::vector<Piece> pieces_;
};

// ---- evaluation and structure ----

Rat evaluate(const PLMap& f, const Rat& x);

// One-sided limits at a finite point; lim f(t) as t -> x from below / above.
Rat left_limit(const PLMap& f, const Rat& x);
Rat right_limit(const PLMap& f, const Rat& x);

// Sup of f on (-inf, x) and inf of f on (x, inf), with attainment flags.
Bound sup_below(const PLMap& f, const Rat& x);
Bound inf_above(const PLMap& f, const Rat& x);

// A discontinuity of the map; gaps are the corresponding holes in the image.
struct JumpPoint {
  Rat at;
  std::optional<Interval> left_gap;   // [left_limit, f(at)) when left-discontinuous
  std::optional<Interval> right_gap;  // (f(at), right_limit] when right-discontinuous
};

std::vector<JumpPoint> jump_points(const PLMap& f);

Interval piece_image(const Piece& p);

// ---- the monoid operations ----

PLMap compose(const PLMap& f, const PLMap& g);  // x -> f(g(x))
PLMap invert(const PLMap& f);                   // pre: automorphism
MapClass classify(const PLMap& f);
IntervalSet image(const PLMap& f);
IntervalSet fixed_set_of(const PLMap& f);  // {x : f(x) = x}, any map
IntervalSet support(const PLMap& f);       // {x : f(x) != x}
PLMap conjugate(const PLMap& f, const PLMap& g);  // g o f o g^-1; pre: g automorphism

bool is_identity(const PLMap& f);
bool is_injective(const PLMap& f);
bool is_surjective(const PLMap& f);
bool is_automorphism(const PLMap& f);

struct Pin {
  Rat y;  // point of the codomain
  Rat x;  // required preimage: result(y) = x
};

// Right inverse of an epimorphism: g o result = identity. On each flat of g
// the preimage is an interval [a,b]; the left endpoint is chosen by default
// and a pin overrides the choice at one value.
PLMap right_inverse(const PLMap& g, const std::optional<Pin>& pin = std::nullopt);

struct Factorization {
  PLMap epi;  // g, surjective
  PLMap emb;  // f, injective; h = g o f
};

// h = g o f with f an embedding inserting a unit gap at every discontinuity
// of h and g sweeping each missing image interval across the inserted gap.
// Requires image(h) unbounded in both directions (NotRepresentable otherwise).
Factorization factorize(const PLMap& h);

// x -> x for x < v, x -> x+1 for x >= v; image misses [v, v+1).
PLMap gap_inserter(const Rat& v);
// x -> x for x <= v, x -> x+1 for x > v; image misses (v, v+1].
PLMap right_gap_inserter(const Rat& v);

// ---- canonical bumps and interpolation ----

// Canonical parity +1 bump fixing everything outside (a,b): slope 2 then 1/2.
PLMap bump_on(const Rat& a, const Rat& b);
// Canonical parity +1 bump with support (q, inf) / (-inf, q).
PLMap right_cofinal_bump(const Rat& q);
PLMap left_cofinal_bump(const Rat& q);
// Canonical bump on an arbitrary open span, parity +1 or -1.
PLMap bump_on_span(const Interval& span, int parity);

// The automorphism translating below x1, interpolating x1->y1, x2->y2
// affinely, and translating above x2. Pre: x1 < x2, y1 < y2.
PLMap interpolating_automorphism(const Rat& x1, const Rat& y1, const Rat& x2, const Rat& y2);

// Some rational where the maps differ, if they do.
std::optional<Rat> where_differ(const PLMap& f, const PLMap& g);

}  // namespace qinterp
