#pragma once

#include <optional>
#include <set>
#include <vector>

#include "mindist/mindc.hpp"

namespace mindist {

// Two minDCs constraining a common vector y.  Both constraints are stored
// oriented so that their y side is the shared one.
struct MinDCPair {
  MinDC c1;
  MinDC c2;

  const std::vector<std::size_t>& y_vars() const { return c1.y_vars; }

  // Every variable the pair reads, including delta variables.
  std::vector<std::size_t> referenced_vars() const;
};

// A proposed facet-aligned removal: move the bound of y_vars[axis] on
// `side` to new_bound.  Candidates must be validated with
// pair_cover_check_boxes before use.
struct CandidateSlab {
  std::size_t axis = 0;
  BoundSide side = BoundSide::Lower;
  double new_bound = 0.0;
};

// Exact test for Dp subset of B_d1(p) union B_d2(q): vertices covered and
// every edge crossing of the first sphere inside the second ball.
bool pair_cover_check(const BoxDomain& dp, const Point& p, const Point& q,
                      double delta1, double delta2);

// All-vertex-pair version for box z-domains.
bool pair_cover_check_boxes(const BoxDomain& dp, const BoxDomain& dz1,
                            const BoxDomain& dz2, double delta1,
                            double delta2);

// Three-probe bisection on the interval of y_vars[axis]: first candidate
// removes the outer 10%, the removed fraction doubles on success and
// halves on failure; the largest validated candidate wins.
std::optional<BoundChange> bisection_reduce(const MinDCPair& pair,
                                            std::size_t axis, BoundSide side,
                                            const BoxDomain& bounds);

// Geometric candidate for dim 2 or 3: the proposed bound is the extreme
// coordinate among sphere/edge and sphere/sphere intersection points.
// Unvalidated; the caller must confirm with pair_cover_check_boxes.
std::optional<CandidateSlab> geometric_reduce(const MinDCPair& pair,
                                              std::size_t axis,
                                              BoundSide side,
                                              const BoxDomain& bounds);

// Validates a candidate slab against the weakened pair.
bool validate_slab(const MinDCPair& pair, const CandidateSlab& slab,
                   const BoxDomain& bounds);

// Pairs touching at least one changed variable.
std::vector<std::size_t> changed_pairs(const std::vector<MinDCPair>& pairs,
                                       const std::set<std::size_t>& changed);

// All unordered constraint pairs sharing a common side, each oriented so
// the common side is y.
std::vector<MinDCPair> enumerate_pairs(const std::vector<MinDC>& mindcs);

}  // namespace mindist
