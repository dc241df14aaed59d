#include "qinterp/lazy_map.hpp"

#include <variant>

namespace qinterp {

namespace {

struct Literal {
  PLMap map;
};
struct Composition;
struct Glue {
  std::vector<LazyMap::GlueBlock> blocks;
  long budget;
};
struct Orbit {
  LazyMap::OrbitCopy data;
  long budget;
};

}  // namespace

struct LazyMap::Node {
  std::variant<Literal, std::pair<std::shared_ptr<const Node>, std::shared_ptr<const Node>>,
               Glue, Orbit>
      v;
};

namespace {

using NodePtr = std::shared_ptr<const LazyMap::Node>;

// k-fold application, counting steps against the budget.
Rat apply_pow(const PLMap& m, const PLMap& m_inv, long k, Rat x, long& budget) {
  const PLMap& use = k >= 0 ? m : m_inv;
  long n = k >= 0 ? k : -k;
  for (long i = 0; i < n; ++i) {
    if (--budget < 0) fail(ErrorKind::IterationBudgetExceeded, "power application");
    x = evaluate(use, x);
  }
  return x;
}

Rat eval_glue(const Glue& node, const Rat& x) {
  for (const LazyMap::GlueBlock& b : node.blocks) {
    if (!b.src.contains(x)) continue;
    if (b.parity == 0) return b.seed_slope * x + b.seed_offset;
    long budget = node.budget;
    Rat xi = x;
    long n = 0;
    while (true) {
      int lo = cmp(ExtRat(xi), b.fund.lo);
      int hi = cmp(ExtRat(xi), b.fund.hi);
      if (lo >= 0 && hi < 0) break;  // in [lo, hi)
      if (--budget < 0)
        fail(ErrorKind::IterationBudgetExceeded, "fundamental-domain location");
      bool below = lo < 0;
      if (b.parity > 0) {
        xi = evaluate(below ? b.f : b.f_inv, xi);
        n += below ? 1 : -1;
      } else {
        xi = evaluate(below ? b.f_inv : b.f, xi);
        n += below ? -1 : 1;
      }
    }
    Rat y = b.seed_slope * xi + b.seed_offset;
    return apply_pow(b.g_inv, b.g, n, y, budget);
  }
  fail(ErrorKind::Internal, "glue blocks do not cover the point");
}

Rat eval_orbit(const Orbit& node, const Rat& x) {
  const LazyMap::OrbitCopy& d = node.data;
  long budget = node.budget;
  Rat xi = x;
  long a = 0;
  while (xi >= d.base_top) {
    if (--budget < 0) fail(ErrorKind::IterationBudgetExceeded, "orbit location");
    xi = evaluate(d.f_inv, xi);
    a += 1;
  }
  while (xi < d.base) {
    if (--budget < 0) fail(ErrorKind::IterationBudgetExceeded, "orbit location");
    xi = evaluate(d.f, xi);
    a -= 1;
  }
  // find the phase gap holding xi
  std::size_t k = 0;
  for (std::size_t i = 0; i < d.phases.size(); ++i) {
    if (d.phases[i].y == xi) return x;  // orbit points stay fixed
    if (d.phases[i].y < xi) k = i;
  }
  const auto& ph = d.phases[k];
  // x lies in f^a f^-m g^j (gap); pull back to the gap, apply the seed, push forward
  Rat zeta = apply_pow(d.g_inv, d.g, ph.j, apply_pow(d.f, d.f_inv, ph.m, xi, budget), budget);
  if (!d.gap.contains(zeta)) fail(ErrorKind::Internal, "orbit translate mismatch");
  Rat out = evaluate(d.seed, zeta);
  out = apply_pow(d.g, d.g_inv, ph.j, out, budget);
  out = apply_pow(d.f_inv, d.f, ph.m, out, budget);
  return apply_pow(d.f, d.f_inv, a, out, budget);
}

NodePtr invert_node(const NodePtr& n);

}  // namespace

LazyMap LazyMap::literal(PLMap m) {
  return LazyMap(std::make_shared<Node>(Node{Literal{std::move(m)}}));
}

LazyMap LazyMap::composition(LazyMap outer, LazyMap inner) {
  return LazyMap(std::make_shared<Node>(
      Node{std::make_pair(std::move(outer.node_), std::move(inner.node_))}));
}

LazyMap LazyMap::glue(std::vector<GlueBlock> blocks, long budget) {
  for (GlueBlock& b : blocks) {
    if (b.parity != 0) {
      b.f_inv = invert(b.f);
      b.g_inv = invert(b.g);
    }
  }
  return LazyMap(std::make_shared<Node>(Node{Glue{std::move(blocks), budget}}));
}

LazyMap LazyMap::orbit_copy(OrbitCopy data, long budget) {
  data.f_inv = invert(data.f);
  data.g_inv = invert(data.g);
  data.seed_inv = invert(data.seed);
  return LazyMap(std::make_shared<Node>(Node{Orbit{std::move(data), budget}}));
}

Rat LazyMap::evaluate(const Rat& x) const {
  const Node& n = *node_;
  if (const auto* lit = std::get_if<Literal>(&n.v)) return qinterp::evaluate(lit->map, x);
  if (const auto* comp =
          std::get_if<std::pair<NodePtr, NodePtr>>(&n.v))
    return LazyMap(comp->first).evaluate(LazyMap(comp->second).evaluate(x));
  if (const auto* glue = std::get_if<Glue>(&n.v)) return eval_glue(*glue, x);
  return eval_orbit(std::get<Orbit>(n.v), x);
}

namespace {

NodePtr invert_node(const NodePtr& n) {
  if (const auto* lit = std::get_if<Literal>(&n->v))
    return std::make_shared<LazyMap::Node>(LazyMap::Node{Literal{invert(lit->map)}});
  if (const auto* comp = std::get_if<std::pair<NodePtr, NodePtr>>(&n->v))
    return std::make_shared<LazyMap::Node>(LazyMap::Node{
        std::make_pair(invert_node(comp->second), invert_node(comp->first))});
  if (const auto* glue = std::get_if<Glue>(&n->v)) {
    Glue out;
    out.budget = glue->budget;
    for (const LazyMap::GlueBlock& b : glue->blocks) {
      LazyMap::GlueBlock r;
      r.parity = b.parity;
      r.f = b.g;
      r.f_inv = b.g_inv;
      r.g = b.f;
      r.g_inv = b.f_inv;
      if (b.seed_slope == 0) fail(ErrorKind::NotInvertible, "constant glue seed");
      r.seed_slope = Rat(1) / b.seed_slope;
      r.seed_offset = -b.seed_offset / b.seed_slope;
      r.src = b.dst;
      r.dst = b.src;
      if (b.parity != 0) {
        auto map_end = [&](const ExtRat& e) {
          return e.is_finite() ? ExtRat(b.seed_slope * e.finite() + b.seed_offset) : e;
        };
        r.fund = Interval(map_end(b.fund.lo), map_end(b.fund.hi), b.fund.lo_closed,
                          b.fund.hi_closed);
      }
      out.blocks.push_back(std::move(r));
    }
    return std::make_shared<LazyMap::Node>(LazyMap::Node{std::move(out)});
  }
  const Orbit& orb = std::get<Orbit>(n->v);
  Orbit out = orb;
  std::swap(out.data.seed, out.data.seed_inv);
  return std::make_shared<LazyMap::Node>(LazyMap::Node{std::move(out)});
}

}  // namespace

LazyMap LazyMap::inverse() const { return LazyMap(invert_node(node_)); }

}  // namespace qinterp
