#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mindist/instance.hpp"
#include "mindist/pairs.hpp"

namespace mindist {

struct Settings {
  bool mindc_reductions = true;  // master switch; off reproduces a plain
                                 // interval solver ("default" setting)
  int heur = 0;     // 0: facet shrinking + interval propagation, 1: propagation only
  int pair = 0;     // 1: pair reductions on constraints sharing a vector
  bool rotsym = false;
  int cutfreq = 0;  // simplex cutting planes: 0 off, else every k-th depth
  bool lex_rows = true;  // honored only where the instance enables them
  bool lex_cols = true;
  double gap = 0.005;
  double time_limit = 7200.0;
  long node_limit = -1;  // negative: unlimited
  unsigned seed = 0;
};

enum class SolveStatus { Optimal, GapReached, TimeLimit, NodeLimit, Infeasible };

const char* to_string(SolveStatus s);

struct ReductionCounters {
  long prop1 = 0;
  long locatelli = 0;
  long pair_geo = 0;
  long pair_bisect = 0;
};

struct SolveResult {
  SolveStatus status = SolveStatus::Infeasible;
  double incumbent_value = 0.0;
  Point incumbent_point;
  bool has_incumbent = false;
  double dual_bound = 0.0;
  double gap = 0.0;
  long nodes = 0;
  double time_s = 0.0;
  long cuts_added = 0;
  ReductionCounters reductions;
};

struct SearchNode {
  BoxDomain bounds;
  std::size_t depth = 0;
  std::set<std::size_t> changed_vars;
  std::vector<LinearCut> cuts;  // inherited local pool
  double local_upper = 0.0;
  std::uint64_t id = 0;
};

enum class PropagateStatus { Fixpoint, Infeasible };

// Interval propagation of a single cut a.x >= rhs.
PropagationResult propagate_linear_cut(const LinearCut& cut,
                                       const BoxDomain& bounds);

PropagationResult propagate_ball_containment(const BallContainment& ball,
                                             const BoxDomain& bounds);

PropagationResult propagate_sphere_membership(const SphereMembership& sphere,
                                              const BoxDomain& bounds);

// Valid upper bound on a variable delta from the current boxes.
std::optional<BoundChange> tighten_delta_upper(const MinDC& c,
                                               const BoxDomain& bounds);

// Runs all propagators round-robin until fixpoint (round cap 50),
// dispatching the reduction algorithms selected by the settings.  Updates
// node bounds and changed_vars in place.
PropagateStatus propagate_node(SearchNode& node, const Instance& inst,
                               const Settings& settings,
                               const std::vector<MinDCPair>& pairs,
                               ReductionCounters* counters = nullptr);

// Midpoint split on the point variable with the largest width relative to
// its root width (ties to the smaller index).  nullopt when every
// candidate width is below the leaf threshold 1e-6.
std::optional<std::pair<SearchNode, SearchNode>> branch(
    const SearchNode& node, const Instance& inst, const BoxDomain& root);

// Test hook: called by solve() around node processing.
class SearchObserver {
 public:
  virtual ~SearchObserver() = default;
  virtual void on_node_start(std::uint64_t id, double dual) {}
  virtual void on_propagated(const BoxDomain& before, const BoxDomain& after,
                             bool infeasible) {}
  virtual void on_incumbent(double value, const Point& point) {}
};

SolveResult solve(const Instance& inst, const Settings& settings,
                  SearchObserver* observer = nullptr);

// Midpoint rounding with projection repair; returns the repaired point and
// the recomputed objective value when it satisfies every constraint at
// feas_tol.
std::optional<std::pair<Point, double>> incumbent_try(const SearchNode& node,
                                                      const Instance& inst,
                                                      std::uint64_t seed = 0);

// True when `point` satisfies all instance constraints at tolerance tol.
bool point_feasible(const Instance& inst, const Point& point, double tol);

double relative_gap(double primal, double dual);

}  // namespace mindist
