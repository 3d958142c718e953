#include "mindist/mindc.hpp"

#include <algorithm>
#include <cmath>

namespace mindist {

BoxDomain MinDC::y_box(const BoxDomain& bounds) const {
  std::vector<Interval> iv(y_vars.size());
  for (std::size_t i = 0; i < y_vars.size(); ++i) iv[i] = bounds[y_vars[i]];
  return BoxDomain(std::move(iv));
}

BoxDomain MinDC::z_box(const BoxDomain& bounds) const {
  std::vector<Interval> iv(z_vars.size());
  for (std::size_t i = 0; i < z_vars.size(); ++i) iv[i] = bounds[z_vars[i]];
  return BoxDomain(std::move(iv));
}

DeltaVector compute_deltas(const MinDC& c, const BoxDomain& bounds) {
  const std::size_t d = c.dim();
  DeltaVector dv;
  dv.dists.resize(d);
  dv.deltas.resize(d);
  double total = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    const Interval& y = bounds[c.y_vars[i]];
    const Interval& z = bounds[c.z_vars[i]];
    if (!y.is_finite() || !z.is_finite())
      throw std::invalid_argument("unbounded domain");
    // |y_i - z_i| is convex; its maximum sits at a corner of the pair of
    // intervals.
    dv.dists[i] = std::max(std::abs(y.hi - z.lo), std::abs(z.hi - y.lo));
    total += dv.dists[i] * dv.dists[i];
  }
  const double dlb = c.delta_lb(bounds);
  const double d2 = dlb * dlb;
  for (std::size_t j = 0; j < d; ++j) {
    const double rest = total - dv.dists[j] * dv.dists[j];
    dv.deltas[j] = std::sqrt(std::max(0.0, d2 - rest));
  }
  return dv;
}

double max_distance_bound(const MinDC& c, const BoxDomain& bounds) {
  double total = 0.0;
  for (std::size_t i = 0; i < c.dim(); ++i) {
    const Interval& y = bounds[c.y_vars[i]];
    const Interval& z = bounds[c.z_vars[i]];
    const double m = std::max(std::abs(y.hi - z.lo), std::abs(z.hi - y.lo));
    total += m * m;
  }
  return std::sqrt(total);
}

namespace {

// Collects a change and keeps the working copy current so later axes see
// the tightened intervals.
struct ChangeSink {
  BoxDomain& box;
  std::vector<BoundChange>& out;
  bool infeasible = false;

  void raise_lower(std::size_t var, double value) {
    Interval& iv = box[var];
    if (value > iv.hi + bound_eps) {
      infeasible = true;
      return;
    }
    if (value <= iv.lo + bound_eps) return;
    iv.lo = std::min(value, iv.hi);
    out.push_back({var, BoundSide::Lower, iv.lo});
  }
  void lower_upper(std::size_t var, double value) {
    Interval& iv = box[var];
    if (value < iv.lo - bound_eps) {
      infeasible = true;
      return;
    }
    if (value >= iv.hi - bound_eps) return;
    iv.hi = std::max(value, iv.lo);
    out.push_back({var, BoundSide::Upper, iv.hi});
  }
};

}  // namespace

PropagationResult propagate_prop1(const MinDC& c, const BoxDomain& bounds) {
  PropagationResult res;
  const DeltaVector dv = compute_deltas(c, bounds);
  BoxDomain work = bounds;
  ChangeSink sink{work, res.changes};

  for (std::size_t j = 0; j < c.dim() && !sink.infeasible; ++j) {
    const double delta = dv.deltas[j];
    if (delta <= 0.0) continue;
    const std::size_t yv = c.y_vars[j];
    const std::size_t zv = c.z_vars[j];
    const Interval y = work[yv];
    const Interval z = work[zv];

    if (y.hi <= z.lo) {
      // Disjoint, y left of z: z - y >= delta.
      sink.lower_upper(yv, z.hi - delta);
      sink.raise_lower(zv, y.lo + delta);
    } else if (z.hi <= y.lo) {
      sink.lower_upper(zv, y.hi - delta);
      sink.raise_lower(yv, z.lo + delta);
    } else if ((z.lo <= y.lo && y.hi <= z.hi) ||
               (y.lo <= z.lo && z.hi <= y.hi)) {
      // One interval nested in the other.  |y_j - z_j| can reach at most
      // max(uy - lz, uz - ly); below delta the coordinate (and hence the
      // constraint) is unsatisfiable.
      if (y.hi - z.lo < delta && z.hi - y.lo < delta) {
        res.infeasible = true;
        return res;
      }
    } else if (z.lo < y.lo && z.hi < y.hi) {
      // Overlap with z extending left, y extending right.
      if (z.hi - y.lo < delta && y.hi - z.hi < delta)
        sink.lower_upper(zv, y.hi - delta);
      if (y.lo - z.lo < delta && z.hi - y.lo < delta)
        sink.raise_lower(yv, z.lo + delta);
    } else {
      // Overlap with y extending left, z extending right.
      if (y.hi - z.lo < delta && z.hi - y.hi < delta)
        sink.lower_upper(yv, z.hi - delta);
      if (z.lo - y.lo < delta && y.hi - z.lo < delta)
        sink.raise_lower(zv, y.lo + delta);
    }
  }
  res.infeasible = sink.infeasible;
  if (res.infeasible) res.changes.clear();
  return res;
}

bool in_C(const Point& p, const BoxDomain& dz, double delta) {
  // max_{z in V(D_z)} ||p - z||^2 decomposes per coordinate.
  double worst = 0.0;
  for (std::size_t i = 0; i < dz.dim(); ++i) {
    const double a = p[i] - dz[i].lo;
    const double b = p[i] - dz[i].hi;
    worst += std::max(a * a, b * b);
  }
  return worst < delta * delta - geom_eps;
}

std::optional<BoundChange> locatelli_shrink(const MinDC& c,
                                            const BoxDomain& bounds,
                                            std::size_t axis, BoundSide side) {
  const BoxDomain dy = c.y_box(bounds);
  const BoxDomain dz = c.z_box(bounds);
  if (!dy.is_finite() || !dz.is_finite())
    throw std::invalid_argument("unbounded domain");
  const double delta = c.delta_lb(bounds);
  if (delta <= 0.0) return std::nullopt;
  if (dy[axis].is_singleton()) return std::nullopt;

  // The slab shares the facet on `side`; it can only be removed when the
  // facet itself lies in C.
  BoxDomain facet = dy;
  const double facet_value = side == BoundSide::Upper ? dy[axis].hi
                                                      : dy[axis].lo;
  facet[axis] = Interval(facet_value, facet_value);
  for (const Point& v : box_vertices(facet))
    if (!in_C(v, dz, delta)) return std::nullopt;

  const std::vector<Point> zverts = box_vertices(dz);
  const std::vector<BoxEdge> edges = box_edges_along(dy, axis);

  // Deepest entry of the moving face into C, over all slab edges and all
  // ball boundaries.
  double t_star = side == BoundSide::Upper
                      ? -std::numeric_limits<double>::infinity()
                      : std::numeric_limits<double>::infinity();
  for (const BoxEdge& e : edges) {
    for (const Point& z : zverts) {
      double k = 0.0;
      for (std::size_t i = 0; i < e.anchor.size(); ++i) {
        if (i == axis) continue;
        const double d = e.anchor[i] - z[i];
        k += d * d;
      }
      const double disc = delta * delta - k;
      if (disc <= 0.0) return std::nullopt;  // unreachable after the facet gate
      const double s = std::sqrt(disc);
      if (side == BoundSide::Upper)
        t_star = std::max(t_star, z[axis] - s);
      else
        t_star = std::min(t_star, z[axis] + s);
    }
  }

  BoundChange ch;
  ch.var = c.y_vars[axis];
  ch.side = side;
  ch.value = t_star;
  if (side == BoundSide::Upper) {
    if (t_star >= dy[axis].hi - bound_eps) return std::nullopt;
  } else {
    if (t_star <= dy[axis].lo + bound_eps) return std::nullopt;
  }
  return ch;
}

std::optional<LinearCut> simplex_cut(const Point& v, const MinDC& c,
                                     const BoxDomain& bounds) {
  const std::size_t d = c.dim();
  const BoxDomain dy = c.y_box(bounds);
  const BoxDomain dz = c.z_box(bounds);
  const double delta = c.delta_lb(bounds);
  if (delta <= 0.0) return std::nullopt;
  for (std::size_t i = 0; i < d; ++i)
    if (dy[i].is_singleton()) return std::nullopt;
  if (!in_C(v, dz, delta)) return std::nullopt;

  const std::vector<Point> zverts = box_vertices(dz);

  // p(e) per incident edge: first exit through any ball boundary, clipped
  // to the far endpoint.
  std::vector<Point> ps;
  ps.reserve(d);
  for (std::size_t a = 0; a < d; ++a) {
    const bool at_lo = std::abs(v[a] - dy[a].lo) <= std::abs(v[a] - dy[a].hi);
    const double dir = at_lo ? 1.0 : -1.0;
    const double w = dy[a].width();
    double t_exit = w;
    for (const Point& z : zverts) {
      double k = 0.0;
      for (std::size_t i = 0; i < d; ++i) {
        if (i == a) continue;
        const double dd = v[i] - z[i];
        k += dd * dd;
      }
      const double disc = delta * delta - k;
      if (disc <= 0.0) return std::nullopt;
      const double s = std::sqrt(disc);
      // ||v + t*dir*e_a - z|| = delta at t = dir*(z_a - v_a) +- s.
      const double mid = dir * (z[a] - v[a]);
      t_exit = std::min(t_exit, mid + s);
    }
    if (t_exit <= geom_eps) return std::nullopt;
    Point p = v;
    p[a] += dir * t_exit;
    ps.push_back(std::move(p));
  }

  auto plane = hyperplane_through_points(ps);
  if (!plane) return std::nullopt;
  double av = 0.0;
  for (std::size_t i = 0; i < d; ++i) av += plane->normal[i] * v[i];
  if (av > plane->offset) {
    for (double& x : plane->normal) x = -x;
    plane->offset = -plane->offset;
    av = -av;
  }
  if (av >= plane->offset - 1e-12) return std::nullopt;

  LinearCut cut;
  cut.rhs = plane->offset;
  for (std::size_t i = 0; i < d; ++i)
    cut.terms.emplace_back(c.y_vars[i], plane->normal[i]);
  return cut;
}

}  // namespace mindist
