#include "mindist/pairs.hpp"

#include <algorithm>
#include <cmath>

namespace mindist {

std::vector<std::size_t> MinDCPair::referenced_vars() const {
  std::vector<std::size_t> vars(c1.y_vars);
  vars.insert(vars.end(), c1.z_vars.begin(), c1.z_vars.end());
  vars.insert(vars.end(), c2.z_vars.begin(), c2.z_vars.end());
  if (c1.delta_var) vars.push_back(*c1.delta_var);
  if (c2.delta_var) vars.push_back(*c2.delta_var);
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

bool pair_cover_check(const BoxDomain& dp, const Point& p, const Point& q,
                      double delta1, double delta2) {
  const Ball b1{p, delta1};
  const Ball b2{q, delta2};
  for (const Point& v : box_vertices(dp))
    if (!in_open_ball(v, b1) && !in_open_ball(v, b2)) return false;
  for (const BoxEdge& e : box_edges(dp))
    for (const Point& x : segment_sphere_intersection(e, b1))
      if (!in_open_ball(x, b2)) return false;
  return true;
}

bool pair_cover_check_boxes(const BoxDomain& dp, const BoxDomain& dz1,
                            const BoxDomain& dz2, double delta1,
                            double delta2) {
  for (const Point& p : box_vertices(dz1))
    for (const Point& q : box_vertices(dz2))
      if (!pair_cover_check(dp, p, q, delta1, delta2)) return false;
  return true;
}

namespace {

// The face at new_bound stays in the kept box, so it is inset out of the
// coverage check; geometric candidates land exactly on sphere crossings
// and would otherwise fail on their own boundary point.
BoxDomain slab_of(const BoxDomain& dy, std::size_t axis, BoundSide side,
                  double new_bound) {
  BoxDomain slab = dy;
  if (side == BoundSide::Upper)
    slab[axis] = Interval(std::min(new_bound + geom_eps, dy[axis].hi),
                          dy[axis].hi);
  else
    slab[axis] = Interval(dy[axis].lo,
                          std::max(new_bound - geom_eps, dy[axis].lo));
  return slab;
}

}  // namespace

bool validate_slab(const MinDCPair& pair, const CandidateSlab& slab,
                   const BoxDomain& bounds) {
  const BoxDomain dy = pair.c1.y_box(bounds);
  const BoxDomain removed = slab_of(dy, slab.axis, slab.side, slab.new_bound);
  return pair_cover_check_boxes(removed, pair.c1.z_box(bounds),
                                pair.c2.z_box(bounds),
                                pair.c1.delta_lb(bounds),
                                pair.c2.delta_lb(bounds));
}

std::optional<BoundChange> bisection_reduce(const MinDCPair& pair,
                                            std::size_t axis, BoundSide side,
                                            const BoxDomain& bounds) {
  const std::size_t var = pair.c1.y_vars[axis];
  const Interval iv = bounds[var];
  const double w = iv.width();
  if (w <= bound_eps) return std::nullopt;
  const double d1 = pair.c1.delta_lb(bounds);
  const double d2 = pair.c2.delta_lb(bounds);
  if (d1 <= 0.0 || d2 <= 0.0) return std::nullopt;

  double fraction = 0.10;
  double best = -1.0;
  for (int probe = 0; probe < 3; ++probe) {
    const double cut_at = side == BoundSide::Upper
                              ? iv.hi - fraction * w
                              : iv.lo + fraction * w;
    CandidateSlab cand{axis, side, cut_at};
    if (validate_slab(pair, cand, bounds)) {
      best = std::max(best, fraction);
      fraction *= 2.0;
    } else {
      fraction *= 0.5;
    }
  }
  if (best < 0.0) return std::nullopt;
  BoundChange ch;
  ch.var = var;
  ch.side = side;
  ch.value = side == BoundSide::Upper ? iv.hi - best * w : iv.lo + best * w;
  return ch;
}

std::optional<CandidateSlab> geometric_reduce(const MinDCPair& pair,
                                              std::size_t axis,
                                              BoundSide side,
                                              const BoxDomain& bounds) {
  const std::size_t d = pair.c1.dim();
  if (d != 2 && d != 3) return std::nullopt;
  const BoxDomain dy = pair.c1.y_box(bounds);
  if (dy[axis].is_singleton()) return std::nullopt;
  const double d1 = pair.c1.delta_lb(bounds);
  const double d2 = pair.c2.delta_lb(bounds);
  if (d1 <= 0.0 || d2 <= 0.0) return std::nullopt;

  const std::vector<Point> vs1 = box_vertices(pair.c1.z_box(bounds));
  const std::vector<Point> vs2 = box_vertices(pair.c2.z_box(bounds));
  const std::vector<BoxEdge> edges = box_edges_along(dy, axis);
  const Interval span = dy[axis];

  std::vector<double> heights;

  // I: edge crossings of either sphere family.
  for (const BoxEdge& e : edges) {
    for (const Point& p : vs1)
      for (const Point& x : segment_sphere_intersection(e, Ball{p, d1}))
        heights.push_back(x[axis]);
    for (const Point& q : vs2)
      for (const Point& x : segment_sphere_intersection(e, Ball{q, d2}))
        heights.push_back(x[axis]);
  }

  // J: sphere-sphere intersections, filtered to the axis interval.
  for (const Point& p : vs1) {
    for (const Point& q : vs2) {
      const auto inter = sphere_sphere_intersection(Ball{p, d1}, Ball{q, d2},
                                                    d);
      if (d == 2) {
        if (inter.kind == SphereIntersection::Kind::TwoPoints) {
          if (span.contains(inter.p1[axis])) heights.push_back(inter.p1[axis]);
          if (span.contains(inter.p2[axis])) heights.push_back(inter.p2[axis]);
        }
      } else if (inter.kind == SphereIntersection::Kind::Circle) {
        // Heights at which the circle meets the facets adjacent to the
        // slab facet.
        for (std::size_t k = 0; k < d; ++k) {
          if (k == axis) continue;
          for (double value : {dy[k].lo, dy[k].hi}) {
            for (const Point& x : circle_plane_intersection(
                     inter.circle_center, inter.circle_radius,
                     inter.axis_normal, k, value)) {
              if (span.contains(x[axis])) heights.push_back(x[axis]);
            }
          }
        }
      }
    }
  }

  if (heights.empty()) return std::nullopt;
  double bound;
  if (side == BoundSide::Upper) {
    bound = *std::max_element(heights.begin(), heights.end());
    if (bound >= span.hi - bound_eps || bound <= span.lo) return std::nullopt;
  } else {
    bound = *std::min_element(heights.begin(), heights.end());
    if (bound <= span.lo + bound_eps || bound >= span.hi) return std::nullopt;
  }
  return CandidateSlab{axis, side, bound};
}

std::vector<std::size_t> changed_pairs(const std::vector<MinDCPair>& pairs,
                                       const std::set<std::size_t>& changed) {
  std::vector<std::size_t> out;
  if (changed.empty()) return out;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (std::size_t v : pairs[i].referenced_vars()) {
      if (changed.count(v)) {
        out.push_back(i);
        break;
      }
    }
  }
  return out;
}

std::vector<MinDCPair> enumerate_pairs(const std::vector<MinDC>& mindcs) {
  std::vector<MinDCPair> pairs;
  for (std::size_t i = 0; i < mindcs.size(); ++i) {
    for (std::size_t k = i + 1; k < mindcs.size(); ++k) {
      const MinDC& a = mindcs[i];
      const MinDC& b = mindcs[k];
      const MinDC bs = b.swapped();
      const MinDC as = a.swapped();
      if (a.y_vars == b.y_vars)
        pairs.push_back({a, b});
      else if (a.y_vars == bs.y_vars)
        pairs.push_back({a, bs});
      else if (as.y_vars == b.y_vars)
        pairs.push_back({as, b});
      else if (as.y_vars == bs.y_vars)
        pairs.push_back({as, bs});
    }
  }
  return pairs;
}

}  // namespace mindist
