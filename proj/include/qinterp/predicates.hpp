#pragma once

#include <vector>

#include "qinterp/orbitals.hpp"
#include "qinterp/plmap.hpp"

namespace qinterp {

// Semantic evaluators for the first-order conditions on Aut(Q, <=) and the
// embedding monoid, one per characterization.

// Comparable with the identity: f(x) >= x everywhere / <= everywhere.
// The identity is both.
struct Comparability {
  bool positive = false;
  bool negative = false;
};

enum class ComparabilityVerdict { Positive, Negative, Neither };

Comparability comparability(const PLMap& f);  // pre: automorphism
ComparabilityVerdict comparability_verdict(const Comparability& c);

// Supports strictly separated (one entirely left of the other); empty
// supports count as apart from everything.
bool apart(const PLMap& f, const PLMap& g);  // pre: automorphisms

// Exactly one nontrivial orbital.
bool is_bump(const PLMap& f);  // pre: automorphism

// g restricted to each of its nontrivial orbitals, identity elsewhere.
std::vector<PLMap> orbital_restrictions(const PLMap& g);  // pre: automorphism

enum class SupportRelation { Disjoint, FirstInsideSecond, SecondInsideFirst, Equal, Overlapping };

const char* support_relation_name(SupportRelation r);
SupportRelation support_relation(const PLMap& f, const PLMap& g);  // pre: automorphisms

// Pairwise disjoint bump supports with supp(g) between the other two.
bool support_between(const PLMap& f, const PLMap& g, const PLMap& h);  // pre: bumps

// Disjoint bump supports sharing an endpoint.
bool adjacent_bumps(const PLMap& f, const PLMap& g);  // pre: bumps

// supp(h) is the least open convex interval containing supp(f) u supp(g).
bool union_bump(const PLMap& f, const PLMap& g, const PLMap& h);  // pre: h bump

enum class BumpKind { Coterminal, Bounded, CofinalLeft, CofinalRight, NotBump };

const char* bump_kind_name(BumpKind k);
BumpKind bump_kind(const PLMap& f);  // pre: automorphism

// Cofinal pair with complementary supports (-inf,a) and (a,inf).
bool opp_support(const PLMap& f, const PLMap& g);  // pre: automorphisms

// Cofinal pair encoding the same endpoint (equal or opposite supports).
bool codesame(const PLMap& f, const PLMap& g);  // pre: automorphisms

// g o f = f; equivalent to image(f) disjoint from supp(g) for g in G.
bool left_absorbs(const PLMap& g, const PLMap& f);

// One canonical bump per maximal convex component of Q \ image(f), supported
// on the component's interior. pre: f injective.
std::vector<PLMap> gap_bumps(const PLMap& f);

}  // namespace qinterp
