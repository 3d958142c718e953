#include "mindist/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <random>

namespace mindist::oracle {

namespace {

double sqr(double v) { return v * v; }

bool satisfies_all(const Point& x,
                   const std::vector<WeakenedMinDC>& constraints,
                   double slack) {
  for (const WeakenedMinDC& c : constraints) {
    double d2 = 0.0;
    for (std::size_t i = 0; i < c.y_vars.size(); ++i)
      d2 += sqr(x[c.y_vars[i]] - x[c.z_vars[i]]);
    if (d2 < c.delta * c.delta + slack) return false;
  }
  return true;
}

}  // namespace

std::vector<Point> reduction_soundness_check(
    const BoxDomain& before, const BoxDomain& after,
    const std::vector<WeakenedMinDC>& constraints, const SamplingPlan& plan) {
  std::vector<Point> counterexamples;
  std::mt19937_64 rng(plan.seed);
  std::uniform_real_distribution<double> u01(0.0, 1.0);

  const std::size_t n = before.dim();
  const auto sample_into = [&](Point& x, std::size_t except) {
    for (std::size_t i = 0; i < n; ++i) {
      if (i == except) continue;
      x[i] = before[i].lo + u01(rng) * (before[i].hi - before[i].lo);
    }
  };

  // One removed slab per changed bound; sampling each slab separately
  // covers the whole difference region.
  struct Slab {
    std::size_t var;
    double lo, hi;
  };
  std::vector<Slab> slabs;
  for (std::size_t i = 0; i < n; ++i) {
    if (after[i].lo > before[i].lo)
      slabs.push_back({i, before[i].lo, std::min(after[i].lo, before[i].hi)});
    if (after[i].hi < before[i].hi)
      slabs.push_back({i, std::max(after[i].hi, before[i].lo), before[i].hi});
  }
  if (slabs.empty()) return counterexamples;

  const std::size_t per_slab =
      std::max<std::size_t>(1, plan.samples / slabs.size());
  Point x(n);
  for (const Slab& s : slabs) {
    for (std::size_t k = 0; k < per_slab; ++k) {
      sample_into(x, s.var);
      x[s.var] = s.lo + u01(rng) * (s.hi - s.lo);
      if (after.contains(x)) continue;
      if (satisfies_all(x, constraints, 1e-7)) counterexamples.push_back(x);
    }
  }
  return counterexamples;
}

namespace {

// Visits every grid point of the box (resolution intervals per wide axis).
template <typename Fn>
void for_each_grid_point(const BoxDomain& dp, std::size_t resolution, Fn fn) {
  const std::size_t d = dp.dim();
  std::vector<std::size_t> counts(d);
  for (std::size_t i = 0; i < d; ++i)
    counts[i] = dp[i].hi > dp[i].lo ? resolution + 1 : 1;
  std::vector<std::size_t> idx(d, 0);
  Point x(d);
  while (true) {
    for (std::size_t i = 0; i < d; ++i) {
      x[i] = counts[i] == 1 ? dp[i].lo
                            : dp[i].lo + (dp[i].hi - dp[i].lo) *
                                             (double(idx[i]) /
                                              double(counts[i] - 1));
    }
    if (!fn(x)) return;
    std::size_t k = 0;
    while (k < d && ++idx[k] == counts[k]) idx[k++] = 0;
    if (k == d) return;
  }
}

}  // namespace

bool grid_cover_check(const BoxDomain& dp, const std::vector<Ball>& balls,
                      std::size_t resolution) {
  bool covered = true;
  for_each_grid_point(dp, resolution, [&](const Point& x) {
    bool inside = false;
    for (const Ball& b : balls) {
      double d2 = 0.0;
      for (std::size_t i = 0; i < x.size(); ++i) d2 += sqr(x[i] - b.center[i]);
      if (d2 < b.radius * b.radius - 1e-9) {
        inside = true;
        break;
      }
    }
    if (!inside) {
      covered = false;
      return false;
    }
    return true;
  });
  return covered;
}

bool grid_near_boundary(const BoxDomain& dp, const std::vector<Ball>& balls,
                        std::size_t resolution, double tol) {
  bool near = false;
  for_each_grid_point(dp, resolution, [&](const Point& x) {
    for (const Ball& b : balls) {
      double d2 = 0.0;
      for (std::size_t i = 0; i < x.size(); ++i) d2 += sqr(x[i] - b.center[i]);
      if (std::abs(std::sqrt(d2) - b.radius) <= tol) {
        near = true;
        return false;
      }
    }
    return true;
  });
  return near;
}

double kissing_optimum_2d(std::size_t n) {
  return 2.0 * std::sin(std::acos(-1.0) / double(n));
}

namespace {

double min_pairwise_distance(const std::vector<std::array<double, 3>>& pts) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t k = i + 1; k < pts.size(); ++k) {
      double d2 = 0.0;
      for (int j = 0; j < 3; ++j) d2 += sqr(pts[i][j] - pts[k][j]);
      best = std::min(best, std::sqrt(d2));
    }
  return best;
}

}  // namespace

double kissing_optimum_3d_bruteforce(std::size_t n) {
  // Repulsion dynamics on the sphere of radius 2 from several random
  // starts, then a coordinate polish of the best configuration.
  std::mt19937_64 rng(7);
  std::normal_distribution<double> gauss(0.0, 1.0);

  const auto project = [](std::array<double, 3>& p) {
    const double nrm =
        std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
    for (double& v : p) v *= 2.0 / std::max(nrm, 1e-12);
  };

  double best = 0.0;
  for (int start = 0; start < 16; ++start) {
    std::vector<std::array<double, 3>> pts(n);
    for (auto& p : pts) {
      p = {gauss(rng), gauss(rng), gauss(rng)};
      project(p);
    }
    double step = 0.4;
    for (int iter = 0; iter < 4000; ++iter) {
      for (std::size_t i = 0; i < n; ++i) {
        std::array<double, 3> force = {0, 0, 0};
        for (std::size_t k = 0; k < n; ++k) {
          if (k == i) continue;
          double d2 = 0.0;
          for (int j = 0; j < 3; ++j) d2 += sqr(pts[i][j] - pts[k][j]);
          const double d3 = std::pow(std::max(d2, 1e-9), 1.5);
          for (int j = 0; j < 3; ++j)
            force[j] += (pts[i][j] - pts[k][j]) / d3;
        }
        for (int j = 0; j < 3; ++j) pts[i][j] += step * force[j];
        project(pts[i]);
      }
      step *= 0.9995;
    }

    // Local polish: move each point along small sphere steps while the
    // minimum pairwise distance improves.
    double val = min_pairwise_distance(pts);
    double delta = 0.1;
    while (delta > 1e-8) {
      bool improved = false;
      for (std::size_t i = 0; i < n; ++i) {
        for (int axis = 0; axis < 3; ++axis) {
          for (double dir : {delta, -delta}) {
            auto trial = pts;
            trial[i][axis] += dir;
            project(trial[i]);
            const double v = min_pairwise_distance(trial);
            if (v > val) {
              val = v;
              pts = std::move(trial);
              improved = true;
            }
          }
        }
      }
      if (!improved) delta *= 0.5;
    }
    best = std::max(best, val);
  }
  // The spheres touch pairwise at distance 2r.
  return best / 2.0;
}

double pack_box_two_circles_bruteforce(std::size_t refinement) {
  // Centers (t, t) and (1 - t, 1 - t); r limited by the walls and half the
  // center distance.
  double best = 0.0;
  for (std::size_t k = 0; k <= refinement; ++k) {
    const double t = 0.5 * double(k) / double(refinement);
    const double wall = std::min(t, 1.0 - t);
    const double half_dist = std::sqrt(2.0) * std::abs(1.0 - 2.0 * t) / 2.0;
    best = std::max(best, std::min(wall, half_dist));
  }
  return best;
}

}  // namespace mindist::oracle
