#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mindist/mindc.hpp"
#include "mindist/symmetry.hpp"
#include "mindist/types.hpp"

namespace mindist {

// ||x_vars - center|| <= radius_const + radius_coef * x[radius_var]; with
// no radius_var the right-hand side is the constant alone.
struct BallContainment {
  std::vector<std::size_t> vars;
  Point center;
  double radius_const = 0.0;
  std::optional<std::size_t> radius_var;
  double radius_coef = 0.0;

  // Largest radius consistent with the current bounds.
  double radius_ub(const BoxDomain& bounds) const {
    if (!radius_var) return radius_const;
    const Interval& iv = bounds[*radius_var];
    return radius_const + radius_coef * (radius_coef >= 0.0 ? iv.hi : iv.lo);
  }
  double radius_at(const Point& x) const {
    return radius_var ? radius_const + radius_coef * x[*radius_var]
                      : radius_const;
  }
};

// | ||x_vars - center|| - radius | <= band; a thin shell standing in for
// the equality ||x - c|| = radius.
struct SphereMembership {
  std::vector<std::size_t> vars;
  Point center;
  double radius = 0.0;
  double band = 1e-6;
};

struct LexFlags {
  bool rows = false;
  bool cols = false;
};

// One optimization problem: maximize x[objective_var] over the box subject
// to minDCs, ball containments, sphere memberships, lex orders, and static
// linear cuts.
struct Instance {
  std::string name;
  std::size_t num_vars = 0;
  BoxDomain bounds;
  std::size_t objective_var = 0;
  std::vector<MinDC> mindcs;
  std::vector<BallContainment> balls;
  std::vector<SphereMembership> spheres;
  std::vector<LinearCut> static_cuts;
  LexFlags lex;
  // Rotations about the origin (and axis reflections) map feasible points
  // to feasible points; only then may rotation cuts be separated.
  bool rotation_symmetric = false;
  std::optional<PointMatrixLayout> layout;

  // Throws std::invalid_argument naming the offending field.
  void validate() const;
};

struct BuildFlags {
  bool lex_rows = true;
  bool lex_cols = false;   // pack_in_box turns this on for the unit box
  bool reflect_first = false;  // pin the first point to nonnegative coords
};

// n identical spheres of radius r inside the unit sphere; maximize r.
Instance build_pack_in_sphere(std::size_t n, std::size_t dim,
                              BuildFlags flags = {});

// n unit spheres touching a common sphere of radius 2, spheres scaled by
// the variable radius r; maximize r.
Instance build_kissing(std::size_t n, std::size_t dim, BuildFlags flags = {});

// n circles/spheres of radius r in the unit box; maximize r.
Instance build_pack_in_box(std::size_t n, std::size_t dim,
                           BuildFlags flags = {});

Instance load_instance(const std::string& path);
void save_instance(const Instance& inst, const std::string& path);

Instance instance_from_json_text(const std::string& text);
std::string instance_to_json_text(const Instance& inst);

bool instances_equal(const Instance& a, const Instance& b);

}  // namespace mindist
