#pragma once

#include <optional>
#include <vector>

#include "mindist/geometry.hpp"
#include "mindist/types.hpp"

namespace mindist {

// Minimum distance constraint ||y - z||^2 >= delta^2 between two
// dim-dimensional subvectors of the variable space.  delta is either a
// constant or a nonnegative variable; reductions use its current lower
// bound (the weakened constraint).
struct MinDC {
  std::vector<std::size_t> y_vars;
  std::vector<std::size_t> z_vars;
  double delta_const = 0.0;
  std::optional<std::size_t> delta_var;

  std::size_t dim() const { return y_vars.size(); }

  double delta_lb(const BoxDomain& bounds) const {
    if (delta_var) return std::max(0.0, bounds[*delta_var].lo);
    return delta_const;
  }

  // Same constraint with the roles of y and z exchanged.
  MinDC swapped() const { return MinDC{z_vars, y_vars, delta_const, delta_var}; }

  BoxDomain y_box(const BoxDomain& bounds) const;
  BoxDomain z_box(const BoxDomain& bounds) const;
};

// Per-coordinate consequences of one minDC: dist[i] is the largest
// possible |y_i - z_i| over the domains, delta[j] a valid lower bound on
// |y_j - z_j| once the other coordinates are at their maximum spread.
struct DeltaVector {
  std::vector<double> deltas;
  std::vector<double> dists;
};

DeltaVector compute_deltas(const MinDC& c, const BoxDomain& bounds);

// Largest value ||y - z|| can take over the current boxes; valid upper
// bound for a variable delta.
double max_distance_bound(const MinDC& c, const BoxDomain& bounds);

struct PropagationResult {
  bool infeasible = false;
  std::vector<BoundChange> changes;
};

// Interval case analysis per coordinate, applied to both the y and the z
// side.  Changes below bound_eps are suppressed.
PropagationResult propagate_prop1(const MinDC& c, const BoxDomain& bounds);

// Membership in C(D_z, delta) -- the intersection of open balls of radius
// delta around every vertex of D_z; the region of points provably too
// close to all of D_z.
bool in_C(const Point& p, const BoxDomain& dz, double delta);

// Strongest facet-aligned slab of D_y (the box over c.y_vars) removable
// on the given axis and side.  Exact: a slab lies in C iff its vertices
// do, and the binding vertex runs along an edge of D_y.  The returned
// value may cross the opposite bound, which empties the box; callers
// treat that as infeasibility.
std::optional<BoundChange> locatelli_shrink(const MinDC& c,
                                            const BoxDomain& bounds,
                                            std::size_t axis, BoundSide side);

// Cutting plane through the deepest points of C(D_z, delta) on the edges
// incident to vertex v of D_y; cuts off v, keeps a.x >= rhs.  Requires a
// full-dimensional D_y and v inside C.
std::optional<LinearCut> simplex_cut(const Point& v, const MinDC& c,
                                     const BoxDomain& bounds);

}  // namespace mindist
