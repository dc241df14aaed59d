#pragma once

#include <cstdint>
#include <vector>

#include "qinterp/orbitals.hpp"
#include "qinterp/plmap.hpp"

namespace qinterp {

// Deterministic generator (splitmix64): identical seeds give identical maps
// on every platform, which the verify harness requires.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  long uniform(long lo, long hi);  // inclusive bounds
  bool chance(int num, int den);   // true with probability num/den
  Rat rat(long height);            // |value| bounded by height, denominator too
  Rat rat_between(const Rat& lo, const Rat& hi);  // strictly inside

 private:
  std::uint64_t state_;
};

struct GenOptions {
  long max_breaks = 6;
  long height = 32;
};

Rat random_rational(Rng& rng, const GenOptions& opt);
PLMap random_automorphism(Rng& rng, const GenOptions& opt);
PLMap random_embedding(Rng& rng, const GenOptions& opt);
PLMap random_epimorphism(Rng& rng, const GenOptions& opt);
// General endomorphism; with force_coterminal_image the image is unbounded
// both ways, otherwise a flat end piece may bound it.
PLMap random_endomorphism(Rng& rng, const GenOptions& opt, bool force_coterminal_image);

// Bump with the given open span, parity +1 or -1, random interior shape.
PLMap random_bump_on(Rng& rng, const Interval& span, int parity);

// Block plan for building automorphisms with a prescribed orbital pattern.
struct BlockPlan {
  enum class Kind { BumpPos, BumpNeg, FixPoint, FixInterval, FixLeftRay, FixRightRay, FixAll };
  std::vector<Kind> blocks;
};

BlockPlan random_plan(Rng& rng);
OrbitalPattern plan_pattern(const BlockPlan& plan);
PLMap realize_plan(const BlockPlan& plan, Rng& rng);

}  // namespace qinterp
