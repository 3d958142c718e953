#pragma once

#include <cstdint>
#include <vector>

#include "mindist/instance.hpp"
#include "mindist/types.hpp"

namespace mindist::oracle {

// Brute-force verifiers used by tests and acceptance runs.  These verify
// the reduction machinery from the outside: all distance computations are
// written out here and nothing from geometry.cpp or the reduction modules
// is reused.

struct SamplingPlan {
  std::uint64_t seed = 20240901;
  std::size_t samples = 10000;
  std::size_t grid_resolution_2d = 200;
  std::size_t grid_resolution_3d = 60;
};

// Weakened constraint set a removal must be justified against.
struct WeakenedMinDC {
  std::vector<std::size_t> y_vars;
  std::vector<std::size_t> z_vars;
  double delta = 0.0;  // already weakened to the lower bound
};

// Samples points of before \ after; a counterexample is a sample that
// satisfies every weakened constraint with slack above 1e-7.  The removed
// region is covered slab by slab so thin removals are hit reliably.
std::vector<Point> reduction_soundness_check(
    const BoxDomain& before, const BoxDomain& after,
    const std::vector<WeakenedMinDC>& constraints, const SamplingPlan& plan);

// Dense-grid test that every point of dp lies in some open ball.
bool grid_cover_check(const BoxDomain& dp, const std::vector<Ball>& balls,
                      std::size_t resolution);

// True when some grid point sits within `tol` of some sphere boundary;
// such configurations are allowed to disagree with the exact checker.
bool grid_near_boundary(const BoxDomain& dp, const std::vector<Ball>& balls,
                        std::size_t resolution, double tol);

// Analytic optimum of the planar kissing variant: 2 sin(pi / n).
double kissing_optimum_2d(std::size_t n);

// Brute-force optimum of the spherical-code / kissing problem for n points
// on a sphere of radius 2 in 3-D (coarse scan plus local refinement).
double kissing_optimum_3d_bruteforce(std::size_t n);

// Best radius for two circles in the unit square with both centers on the
// main diagonal (1-parameter scan).
double pack_box_two_circles_bruteforce(std::size_t refinement = 200000);

}  // namespace mindist::oracle
