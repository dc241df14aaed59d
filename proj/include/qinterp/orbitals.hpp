#pragma once

#include <string>
#include <vector>

#include "qinterp/lazy_map.hpp"
#include "qinterp/plmap.hpp"

namespace qinterp {

// One block of the orbital decomposition, left to right. Parity +1/-1 blocks
// are single orbitals (bumps); a parity 0 block summarizes a maximal fixed
// region, i.e. a singleton orbital or a dense run of them.
struct Orbital {
  Interval span;
  int parity = 0;
};

struct PatternBlock {
  enum class Kind { Pos, Neg, Fixed };
  Kind kind = Kind::Fixed;
  bool has_min = false;   // fixed blocks: least element exists
  bool has_max = false;   // fixed blocks: greatest element exists
  bool singleton = false; // fixed blocks: width zero

  bool operator==(const PatternBlock&) const = default;
};

// Canonical word of the 3-coloured order of orbitals. Equal words mean
// isomorphic coloured orders, hence conjugate maps (Holland).
using OrbitalPattern = std::vector<PatternBlock>;

IntervalSet fixed_set(const PLMap& f);           // pre: automorphism
std::vector<Orbital> orbitals_of(const PLMap& f);
OrbitalPattern pattern(const PLMap& f);

// "M F(+,+) P" style; a width-zero fixed block prints F(+,+), a fixed
// interval with both endpoints prints F[+,+].
std::string pattern_string(const OrbitalPattern& w);

bool is_conjugate(const PLMap& f, const PLMap& g);

// Pointwise-evaluable h with h(f(x)) = g(h(x)) everywhere, built by matching
// pattern blocks: affine on fixed blocks, equivariant glue on bumps.
LazyMap conjugator(const PLMap& f, const PLMap& g,
                   long budget = LazyMap::kDefaultBudget);

// Canonical interior point of an open span.
Rat span_point(const Interval& span);

}  // namespace qinterp
