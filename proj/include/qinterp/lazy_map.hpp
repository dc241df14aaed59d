#pragma once

#include <memory>
#include <vector>

#include "qinterp/plmap.hpp"

namespace qinterp {

// Order-automorphisms of Q that are exactly evaluable pointwise but are not
// finitely piecewise-affine: conjugators glued block by block out of
// equivariant copies of an affine seed, commuting-pair certificates copying
// a seed across an orbit of gaps, and compositions/inverses of those.
// Iteration loops respect a step budget and raise IterationBudgetExceeded.
class LazyMap {
 public:
  static constexpr long kDefaultBudget = 1'000'000;

  // One pattern block of a conjugator h with h o f = g o h. On a fixed
  // block the seed affine law is the whole answer; on a bump block the
  // answer is g^-n(seed(f^n(x))) with f^n(x) in the fundamental domain.
  struct GlueBlock {
    Interval src, dst;
    int parity = 0;         // +1/-1 bump, 0 fixed
    PLMap f, g;             // identity on fixed blocks
    PLMap f_inv, g_inv;
    Interval fund;          // half-open fundamental domain inside src
    Rat seed_slope, seed_offset;
  };

  // Equivariant copy of a seed automorphism supported in the orbit-gap
  // (base, next) of the commuting pair <f, g>: phases are the finitely many
  // orbit points per fundamental domain of f, f^-m g^j (base).
  struct OrbitCopy {
    PLMap f, g, f_inv, g_inv;
    Rat base;
    Rat base_top;  // f(base)
    struct Phase {
      Rat y;
      long m = 0;
      long j = 0;
    };
    std::vector<Phase> phases;  // sorted by y, phases[0] = {base, 0, 0}
    PLMap seed, seed_inv;
    Interval gap;  // (base, phases[1].y) resp. (base, base_top)
  };

  static LazyMap literal(PLMap m);
  static LazyMap composition(LazyMap outer, LazyMap inner);
  static LazyMap glue(std::vector<GlueBlock> blocks, long budget = kDefaultBudget);
  static LazyMap orbit_copy(OrbitCopy data, long budget = kDefaultBudget);

  LazyMap inverse() const;

  Rat evaluate(const Rat& x) const;
  Rat operator()(const Rat& x) const { return evaluate(x); }

  struct Node;  // defined in lazy_map.cpp

 private:
  explicit LazyMap(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

}  // namespace qinterp
