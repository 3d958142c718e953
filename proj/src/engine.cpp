#include "mindist/engine.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <random>

#include "mindist/symmetry.hpp"

namespace mindist {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kMaxRounds = 50;
constexpr std::size_t kMaxPoolCuts = 200;
constexpr double kLeafWidth = 1e-6;
constexpr int kRepairSweeps = 200;

double sq(double x) { return x * x; }

// Squared distance from a box to a point.
double box_point_dist_sq(const BoxDomain& bounds,
                         const std::vector<std::size_t>& vars,
                         const Point& center) {
  double s = 0.0;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    const Interval& iv = bounds[vars[i]];
    const double below = iv.lo - center[i];
    const double above = center[i] - iv.hi;
    const double gap = std::max({below, above, 0.0});
    s += gap * gap;
  }
  return s;
}

// Largest squared distance from any point of the box to `center`.
double box_point_maxdist_sq(const BoxDomain& bounds,
                            const std::vector<std::size_t>& vars,
                            const Point& center) {
  double s = 0.0;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    const Interval& iv = bounds[vars[i]];
    s += std::max(sq(iv.lo - center[i]), sq(iv.hi - center[i]));
  }
  return s;
}

}  // namespace

const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Optimal: return "Optimal";
    case SolveStatus::GapReached: return "GapReached";
    case SolveStatus::TimeLimit: return "TimeLimit";
    case SolveStatus::NodeLimit: return "NodeLimit";
    case SolveStatus::Infeasible: return "Infeasible";
  }
  return "Unknown";
}

double relative_gap(double primal, double dual) {
  if (primal == -kInf) return kInf;
  return (dual - primal) / std::max(std::abs(primal), 1e-9);
}

PropagationResult propagate_linear_cut(const LinearCut& cut,
                                       const BoxDomain& bounds) {
  PropagationResult res;
  double act_max = 0.0;
  for (const auto& [v, a] : cut.terms)
    act_max += a > 0.0 ? a * bounds[v].hi : a * bounds[v].lo;
  if (act_max < cut.rhs - bound_eps) {
    res.infeasible = true;
    return res;
  }
  for (const auto& [v, a] : cut.terms) {
    if (a == 0.0) continue;
    const double own = a > 0.0 ? a * bounds[v].hi : a * bounds[v].lo;
    const double residual = cut.rhs - (act_max - own);
    if (a > 0.0) {
      const double lb = residual / a;
      if (lb > bounds[v].lo + bound_eps)
        res.changes.push_back({v, BoundSide::Lower, lb});
    } else {
      const double ub = residual / a;
      if (ub < bounds[v].hi - bound_eps)
        res.changes.push_back({v, BoundSide::Upper, ub});
    }
  }
  return res;
}

PropagationResult propagate_ball_containment(const BallContainment& ball,
                                             const BoxDomain& bounds) {
  PropagationResult res;
  const double radius = ball.radius_ub(bounds);
  if (radius < 0.0) {
    res.infeasible = true;
    return res;
  }
  const double dmin_sq = box_point_dist_sq(bounds, ball.vars, ball.center);
  if (dmin_sq > sq(radius) + feas_tol) {
    res.infeasible = true;
    return res;
  }
  for (std::size_t i = 0; i < ball.vars.size(); ++i) {
    const std::size_t v = ball.vars[i];
    const double lo = ball.center[i] - radius;
    const double hi = ball.center[i] + radius;
    if (lo > bounds[v].lo + bound_eps)
      res.changes.push_back({v, BoundSide::Lower, lo});
    if (hi < bounds[v].hi - bound_eps)
      res.changes.push_back({v, BoundSide::Upper, hi});
  }
  if (ball.radius_var) {
    // radius_const + radius_coef * v must reach at least dist(box, center).
    const double dmin = std::sqrt(dmin_sq);
    const double c = ball.radius_coef;
    if (c > 0.0) {
      const double lb = (dmin - ball.radius_const) / c;
      if (lb > bounds[*ball.radius_var].lo + bound_eps)
        res.changes.push_back({*ball.radius_var, BoundSide::Lower, lb});
    } else if (c < 0.0) {
      const double ub = (dmin - ball.radius_const) / c;
      if (ub < bounds[*ball.radius_var].hi - bound_eps)
        res.changes.push_back({*ball.radius_var, BoundSide::Upper, ub});
    }
  }
  return res;
}

PropagationResult propagate_sphere_membership(const SphereMembership& sphere,
                                              const BoxDomain& bounds) {
  PropagationResult res;
  const double outer = sphere.radius + sphere.band;
  const double inner = std::max(0.0, sphere.radius - sphere.band);

  const double dmin_sq = box_point_dist_sq(bounds, sphere.vars, sphere.center);
  if (dmin_sq > sq(outer) + feas_tol) {
    res.infeasible = true;
    return res;
  }
  const double dmax_sq =
      box_point_maxdist_sq(bounds, sphere.vars, sphere.center);
  if (dmax_sq < sq(inner) - feas_tol) {
    res.infeasible = true;
    return res;
  }

  // Outer shell: coordinate projection.
  for (std::size_t i = 0; i < sphere.vars.size(); ++i) {
    const std::size_t v = sphere.vars[i];
    const double lo = sphere.center[i] - outer;
    const double hi = sphere.center[i] + outer;
    if (lo > bounds[v].lo + bound_eps)
      res.changes.push_back({v, BoundSide::Lower, lo});
    if (hi < bounds[v].hi - bound_eps)
      res.changes.push_back({v, BoundSide::Upper, hi});
  }

  // Inner shell: per-coordinate exclusion zone around the center, the
  // singleton-z case of the interval analysis for minDCs.
  double total = 0.0;
  std::vector<double> maxsq(sphere.vars.size());
  for (std::size_t i = 0; i < sphere.vars.size(); ++i) {
    const Interval& iv = bounds[sphere.vars[i]];
    maxsq[i] = std::max(sq(iv.lo - sphere.center[i]),
                        sq(iv.hi - sphere.center[i]));
    total += maxsq[i];
  }
  for (std::size_t j = 0; j < sphere.vars.size(); ++j) {
    const double delta_sq = sq(inner) - (total - maxsq[j]);
    if (delta_sq <= 0.0) continue;
    const double delta = std::sqrt(delta_sq);
    const std::size_t v = sphere.vars[j];
    const Interval& iv = bounds[v];
    const double c = sphere.center[j];
    if (iv.hi <= c) {
      if (c - delta < iv.hi - bound_eps)
        res.changes.push_back({v, BoundSide::Upper, c - delta});
    } else if (iv.lo >= c) {
      if (c + delta > iv.lo + bound_eps)
        res.changes.push_back({v, BoundSide::Lower, c + delta});
    } else {
      const bool can_left = c - iv.lo >= delta;
      const bool can_right = iv.hi - c >= delta;
      if (!can_left && !can_right) {
        res.infeasible = true;
        return res;
      }
      if (!can_left) res.changes.push_back({v, BoundSide::Lower, c + delta});
      if (!can_right) res.changes.push_back({v, BoundSide::Upper, c - delta});
    }
  }
  return res;
}

std::optional<BoundChange> tighten_delta_upper(const MinDC& c,
                                               const BoxDomain& bounds) {
  if (!c.delta_var) return std::nullopt;
  const double dmax = max_distance_bound(c, bounds);
  if (dmax < bounds[*c.delta_var].hi - bound_eps)
    return BoundChange{*c.delta_var, BoundSide::Upper, dmax};
  return std::nullopt;
}

namespace {

class ChangeApplier {
 public:
  ChangeApplier(SearchNode& node) : node_(node) {}

  bool apply(const BoundChange& ch) {
    if (!apply_bound_change(node_.bounds, ch)) return false;
    const Interval& iv = node_.bounds[ch.var];
    if (iv.lo > iv.hi) {
      infeasible_ = true;
      return false;
    }
    node_.changed_vars.insert(ch.var);
    changed_ = true;
    return true;
  }

  int apply_all(const std::vector<BoundChange>& chs) {
    int applied = 0;
    for (const BoundChange& ch : chs) {
      if (apply(ch)) ++applied;
      if (infeasible_) break;
    }
    return applied;
  }

  bool infeasible() const { return infeasible_; }
  bool round_changed() const { return changed_; }
  void reset_round() { changed_ = false; }

 private:
  SearchNode& node_;
  bool infeasible_ = false;
  bool changed_ = false;
};

}  // namespace

PropagateStatus propagate_node(SearchNode& node, const Instance& inst,
                               const Settings& settings,
                               const std::vector<MinDCPair>& pairs,
                               ReductionCounters* counters) {
  ReductionCounters scratch;
  ReductionCounters& stats = counters ? *counters : scratch;
  ChangeApplier applier(node);

  for (int round = 0; round < kMaxRounds; ++round) {
    applier.reset_round();

    for (const BallContainment& b : inst.balls) {
      const auto r = propagate_ball_containment(b, node.bounds);
      if (r.infeasible) return PropagateStatus::Infeasible;
      applier.apply_all(r.changes);
      if (applier.infeasible()) return PropagateStatus::Infeasible;
    }
    for (const SphereMembership& s : inst.spheres) {
      const auto r = propagate_sphere_membership(s, node.bounds);
      if (r.infeasible) return PropagateStatus::Infeasible;
      applier.apply_all(r.changes);
      if (applier.infeasible()) return PropagateStatus::Infeasible;
    }
    for (const LinearCut& cut : inst.static_cuts) {
      const auto r = propagate_linear_cut(cut, node.bounds);
      if (r.infeasible) return PropagateStatus::Infeasible;
      applier.apply_all(r.changes);
      if (applier.infeasible()) return PropagateStatus::Infeasible;
    }
    for (const LinearCut& cut : node.cuts) {
      const auto r = propagate_linear_cut(cut, node.bounds);
      if (r.infeasible) return PropagateStatus::Infeasible;
      applier.apply_all(r.changes);
      if (applier.infeasible()) return PropagateStatus::Infeasible;
    }

    for (const MinDC& c : inst.mindcs) {
      if (auto ch = tighten_delta_upper(c, node.bounds)) applier.apply(*ch);
      if (applier.infeasible()) return PropagateStatus::Infeasible;
    }

    if (settings.mindc_reductions) {
      for (const MinDC& c : inst.mindcs) {
        const auto r = propagate_prop1(c, node.bounds);
        if (r.infeasible) return PropagateStatus::Infeasible;
        stats.prop1 += applier.apply_all(r.changes);
        if (applier.infeasible()) return PropagateStatus::Infeasible;
      }

      if (settings.heur == 0) {
        for (const MinDC& base : inst.mindcs) {
          for (int swap = 0; swap < 2; ++swap) {
            const MinDC c = swap ? base.swapped() : base;
            for (std::size_t axis = 0; axis < c.dim(); ++axis) {
              for (BoundSide side : {BoundSide::Lower, BoundSide::Upper}) {
                if (auto ch = locatelli_shrink(c, node.bounds, axis, side)) {
                  if (applier.apply(*ch)) ++stats.locatelli;
                  if (applier.infeasible()) return PropagateStatus::Infeasible;
                }
              }
            }
          }
        }
      }

      if (settings.pair == 1 && !pairs.empty()) {
        for (std::size_t pi : changed_pairs(pairs, node.changed_vars)) {
          const MinDCPair& pr = pairs[pi];
          const bool geo = pr.c1.dim() == 2 || pr.c1.dim() == 3;
          for (std::size_t axis = 0; axis < pr.c1.dim(); ++axis) {
            for (BoundSide side : {BoundSide::Lower, BoundSide::Upper}) {
              if (geo) {
                if (auto slab = geometric_reduce(pr, axis, side, node.bounds)) {
                  if (validate_slab(pr, *slab, node.bounds)) {
                    BoundChange ch{pr.c1.y_vars[axis], side, slab->new_bound};
                    if (applier.apply(ch)) ++stats.pair_geo;
                  }
                }
              } else {
                if (auto ch = bisection_reduce(pr, axis, side, node.bounds)) {
                  if (applier.apply(*ch)) ++stats.pair_bisect;
                }
              }
              if (applier.infeasible()) return PropagateStatus::Infeasible;
            }
          }
        }
      }
    }

    if (inst.layout) {
      if (inst.lex.rows && settings.lex_rows) {
        const auto r = lex_rows_propagate(*inst.layout, node.bounds);
        if (r.infeasible) return PropagateStatus::Infeasible;
        applier.apply_all(r.changes);
        if (applier.infeasible()) return PropagateStatus::Infeasible;
      }
      if (inst.lex.cols && settings.lex_cols) {
        const auto r = lex_cols_propagate(*inst.layout, node.bounds);
        if (r.infeasible) return PropagateStatus::Infeasible;
        applier.apply_all(r.changes);
        if (applier.infeasible()) return PropagateStatus::Infeasible;
      }
    }

    if (!applier.round_changed()) break;
  }
  return PropagateStatus::Fixpoint;
}

bool point_feasible(const Instance& inst, const Point& x, double tol) {
  for (const MinDC& c : inst.mindcs) {
    const double delta = c.delta_var ? x[*c.delta_var] : c.delta_const;
    double d2 = 0.0;
    for (std::size_t i = 0; i < c.dim(); ++i)
      d2 += sq(x[c.y_vars[i]] - x[c.z_vars[i]]);
    if (d2 < sq(std::max(0.0, delta)) - tol) return false;
  }
  for (const BallContainment& b : inst.balls) {
    double d2 = 0.0;
    for (std::size_t i = 0; i < b.vars.size(); ++i)
      d2 += sq(x[b.vars[i]] - b.center[i]);
    const double r = b.radius_at(x);
    if (r < -tol) return false;
    if (std::sqrt(d2) > r + tol) return false;
  }
  for (const SphereMembership& s : inst.spheres) {
    double d2 = 0.0;
    for (std::size_t i = 0; i < s.vars.size(); ++i)
      d2 += sq(x[s.vars[i]] - s.center[i]);
    if (std::abs(std::sqrt(d2) - s.radius) > s.band + tol) return false;
  }
  for (const LinearCut& cut : inst.static_cuts) {
    double act = 0.0;
    for (const auto& [v, a] : cut.terms) act += a * x[v];
    if (act < cut.rhs - tol) return false;
  }
  for (std::size_t i = 0; i < inst.num_vars; ++i)
    if (x[i] < inst.bounds[i].lo - tol || x[i] > inst.bounds[i].hi + tol)
      return false;
  return true;
}

namespace {

// Fixes the configuration variables and objective to the candidate values,
// then pins whatever the static cuts force (linked auxiliaries) so the
// point can be evaluated.
bool complete_point(const Instance& inst, Point& x, double objective_value) {
  BoxDomain work = inst.bounds;
  std::vector<bool> pinned(inst.num_vars, false);
  if (inst.layout)
    for (std::size_t v : inst.layout->vars) {
      work[v] = Interval(x[v], x[v]);
      pinned[v] = true;
    }
  work[inst.objective_var] =
      Interval(objective_value, objective_value);
  pinned[inst.objective_var] = true;
  for (std::size_t i = 0; i < inst.num_vars; ++i)
    if (inst.bounds[i].is_singleton()) {
      x[i] = inst.bounds[i].lo;
      pinned[i] = true;
    }

  for (int round = 0; round < 20; ++round) {
    bool changed = false;
    for (const LinearCut& cut : inst.static_cuts) {
      const auto r = propagate_linear_cut(cut, work);
      if (r.infeasible) return false;
      for (const BoundChange& ch : r.changes) {
        if (pinned[ch.var]) continue;
        if (apply_bound_change(work, ch, 1e-12)) changed = true;
        if (work[ch.var].lo > work[ch.var].hi) return false;
      }
    }
    if (!changed) break;
  }
  for (std::size_t i = 0; i < inst.num_vars; ++i)
    if (!pinned[i]) x[i] = work[i].mid();
  x[inst.objective_var] = objective_value;
  return true;
}

void lex_sort_rows(const Instance& inst, Point& x) {
  if (!inst.layout || !inst.lex.rows) return;
  const auto& lay = *inst.layout;
  std::vector<std::vector<double>> rows(lay.n, std::vector<double>(lay.dim));
  for (std::size_t i = 0; i < lay.n; ++i)
    for (std::size_t j = 0; j < lay.dim; ++j)
      rows[i][j] = x[lay.var_of(i, j)];
  std::sort(rows.begin(), rows.end(), std::greater<>());
  for (std::size_t i = 0; i < lay.n; ++i)
    for (std::size_t j = 0; j < lay.dim; ++j) x[lay.var_of(i, j)] = rows[i][j];
}

void lex_sort_cols(const Instance& inst, Point& x) {
  if (!inst.layout || !inst.lex.cols) return;
  const auto& lay = *inst.layout;
  std::vector<std::vector<double>> cols(lay.dim, std::vector<double>(lay.n));
  for (std::size_t j = 0; j < lay.dim; ++j)
    for (std::size_t i = 0; i < lay.n; ++i)
      cols[j][i] = x[lay.var_of(i, j)];
  std::sort(cols.begin(), cols.end(), std::greater<>());
  for (std::size_t j = 0; j < lay.dim; ++j)
    for (std::size_t i = 0; i < lay.n; ++i) x[lay.var_of(i, j)] = cols[j][i];
}

}  // namespace

std::optional<std::pair<Point, double>> incumbent_try(const SearchNode& node,
                                                      const Instance& inst,
                                                      std::uint64_t seed) {
  Point x = node.bounds.midpoint();
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 12345);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);

  const auto movable = [&](std::size_t v) {
    return !inst.bounds[v].is_singleton();
  };

  for (int sweep = 0; sweep < kRepairSweeps; ++sweep) {
    bool moved = false;

    // Keep points on their spheres.
    for (const SphereMembership& s : inst.spheres) {
      double norm = 0.0;
      for (std::size_t i = 0; i < s.vars.size(); ++i)
        norm += sq(x[s.vars[i]] - s.center[i]);
      norm = std::sqrt(norm);
      if (std::abs(norm - s.radius) <= 1e-12) continue;
      if (norm < 1e-12) {
        for (std::size_t i = 0; i < s.vars.size(); ++i)
          if (movable(s.vars[i])) x[s.vars[i]] = s.center[i] + unit(rng);
        moved = true;
        continue;
      }
      const double f = s.radius / norm;
      for (std::size_t i = 0; i < s.vars.size(); ++i)
        if (movable(s.vars[i]))
          x[s.vars[i]] = s.center[i] + f * (x[s.vars[i]] - s.center[i]);
      moved = true;
    }

    // Push apart pairs violating their minDC at the current delta value.
    for (const MinDC& c : inst.mindcs) {
      const double delta =
          std::max(0.0, c.delta_var ? x[*c.delta_var] : c.delta_const);
      if (delta <= 0.0) continue;
      double d2 = 0.0;
      for (std::size_t i = 0; i < c.dim(); ++i)
        d2 += sq(x[c.y_vars[i]] - x[c.z_vars[i]]);
      double d = std::sqrt(d2);
      if (d >= delta - 1e-12) continue;
      Point dir(c.dim());
      if (d < 1e-12) {
        for (std::size_t i = 0; i < c.dim(); ++i) dir[i] = unit(rng);
        double n = 0.0;
        for (double v : dir) n += v * v;
        n = std::sqrt(std::max(n, 1e-12));
        for (double& v : dir) v /= n;
        d = 0.0;
      } else {
        for (std::size_t i = 0; i < c.dim(); ++i)
          dir[i] = (x[c.y_vars[i]] - x[c.z_vars[i]]) / d;
      }
      const double push = 0.5 * (delta - d);
      for (std::size_t i = 0; i < c.dim(); ++i) {
        if (movable(c.y_vars[i])) x[c.y_vars[i]] += push * dir[i];
        if (movable(c.z_vars[i])) x[c.z_vars[i]] -= push * dir[i];
      }
      moved = true;
    }

    // Pull back inside containment balls.
    for (const BallContainment& b : inst.balls) {
      const double r = std::max(0.0, b.radius_at(x));
      double d2 = 0.0;
      for (std::size_t i = 0; i < b.vars.size(); ++i)
        d2 += sq(x[b.vars[i]] - b.center[i]);
      const double d = std::sqrt(d2);
      if (d <= r + 1e-12) continue;
      const double f = d < 1e-12 ? 0.0 : r / d;
      for (std::size_t i = 0; i < b.vars.size(); ++i)
        if (movable(b.vars[i]))
          x[b.vars[i]] = b.center[i] + f * (x[b.vars[i]] - b.center[i]);
      moved = true;
    }

    // Clamp into the root box.
    for (std::size_t i = 0; i < inst.num_vars; ++i) {
      const Interval& iv = inst.bounds[i];
      const double clamped = std::clamp(x[i], iv.lo, iv.hi);
      if (clamped != x[i]) {
        x[i] = clamped;
        moved = true;
      }
    }

    if (!moved) break;
  }

  lex_sort_cols(inst, x);
  lex_sort_rows(inst, x);

  // Largest objective value feasible for this configuration.
  const Interval obj = inst.bounds[inst.objective_var];
  const auto feasible_at = [&](double v) {
    Point y = x;
    if (!complete_point(inst, y, v)) return false;
    return point_feasible(inst, y, feas_tol);
  };
  double best = -kInf;
  if (feasible_at(obj.hi)) {
    best = obj.hi;
  } else if (feasible_at(obj.lo)) {
    double lo = obj.lo, hi = obj.hi;
    for (int it = 0; it < 60; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (feasible_at(mid))
        lo = mid;
      else
        hi = mid;
    }
    best = lo;
  } else {
    return std::nullopt;
  }

  Point final_x = x;
  if (!complete_point(inst, final_x, best)) return std::nullopt;
  if (!point_feasible(inst, final_x, feas_tol)) return std::nullopt;
  return std::make_pair(std::move(final_x), best);
}

namespace {

struct NodeOrder {
  bool operator()(const SearchNode& a, const SearchNode& b) const {
    if (a.local_upper != b.local_upper) return a.local_upper < b.local_upper;
    return a.id > b.id;
  }
};

}  // namespace

std::optional<std::pair<SearchNode, SearchNode>> branch(
    const SearchNode& node, const Instance& inst, const BoxDomain& root) {
  const std::vector<std::size_t>* layout_vars = nullptr;
  std::vector<std::size_t> all;
  if (inst.layout) {
    layout_vars = &inst.layout->vars;
  } else {
    all.resize(inst.num_vars);
    for (std::size_t i = 0; i < inst.num_vars; ++i) all[i] = i;
    layout_vars = &all;
  }

  std::size_t best_var = 0;
  double best_ratio = -1.0;
  for (std::size_t v : *layout_vars) {
    const double w = node.bounds[v].width();
    if (w < kLeafWidth) continue;
    const double rw = root[v].width();
    const double ratio = rw > 0.0 ? w / rw : 0.0;
    if (ratio > best_ratio + 1e-15) {
      best_ratio = ratio;
      best_var = v;
    }
  }
  if (best_ratio < 0.0) return std::nullopt;

  const double mid = node.bounds[best_var].mid();
  SearchNode left, right;
  left.bounds = node.bounds;
  right.bounds = node.bounds;
  left.bounds[best_var].hi = mid;
  right.bounds[best_var].lo = mid;
  left.depth = right.depth = node.depth + 1;
  left.changed_vars = {best_var};
  right.changed_vars = {best_var};
  left.cuts = node.cuts;
  right.cuts = node.cuts;
  return std::make_pair(std::move(left), std::move(right));
}

SolveResult solve(const Instance& inst, const Settings& settings,
                  SearchObserver* observer) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto elapsed = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
  };

  SolveResult result;
  const std::vector<MinDCPair> pairs =
      settings.pair == 1 ? enumerate_pairs(inst.mindcs)
                         : std::vector<MinDCPair>{};

  std::uint64_t next_id = 0;
  SearchNode root;
  root.bounds = inst.bounds;
  root.depth = 0;
  for (std::size_t i = 0; i < inst.num_vars; ++i) root.changed_vars.insert(i);
  root.local_upper = inst.bounds[inst.objective_var].hi;
  root.id = next_id++;

  std::vector<SearchNode> heap;
  const NodeOrder order;
  const auto push_node = [&](SearchNode&& n) {
    heap.push_back(std::move(n));
    std::push_heap(heap.begin(), heap.end(), order);
  };
  push_node(std::move(root));

  double primal = -kInf;
  double dual = inst.bounds[inst.objective_var].hi;
  Point incumbent;

  const auto accept = [&](const std::pair<Point, double>& sol) {
    if (sol.second > primal) {
      primal = sol.second;
      incumbent = sol.first;
      if (observer) observer->on_incumbent(primal, incumbent);
    }
  };

  SolveStatus status = SolveStatus::Infeasible;
  while (true) {
    if (heap.empty()) {
      if (primal > -kInf) {
        status = SolveStatus::Optimal;
        dual = primal;
      } else {
        status = SolveStatus::Infeasible;
        dual = -kInf;
      }
      break;
    }
    std::pop_heap(heap.begin(), heap.end(), order);
    SearchNode node = std::move(heap.back());
    heap.pop_back();
    dual = std::max(primal, node.local_upper);
    if (observer) observer->on_node_start(node.id, dual);

    if (primal > -kInf && relative_gap(primal, dual) <= settings.gap) {
      status = dual <= primal + 1e-12 ? SolveStatus::Optimal
                                      : SolveStatus::GapReached;
      break;
    }
    if (settings.time_limit > 0.0 && elapsed() > settings.time_limit) {
      status = SolveStatus::TimeLimit;
      break;
    }
    if (settings.node_limit >= 0 && result.nodes >= settings.node_limit) {
      status = SolveStatus::NodeLimit;
      break;
    }

    ++result.nodes;

    // Objective cutoff: only solutions at least as good as the incumbent
    // are of interest.
    if (primal > -kInf && primal > node.bounds[inst.objective_var].lo)
      node.bounds[inst.objective_var].lo =
          std::min(primal, node.bounds[inst.objective_var].hi);

    const BoxDomain before = node.bounds;
    PropagateStatus ps =
        propagate_node(node, inst, settings, pairs, &result.reductions);
    if (observer)
      observer->on_propagated(before, node.bounds,
                              ps == PropagateStatus::Infeasible);
    if (ps == PropagateStatus::Infeasible) continue;

    // Separation: rotation-symmetry cuts whenever enabled, simplex cuts
    // on the cutfreq schedule.
    std::size_t new_cuts = 0;
    if (settings.rotsym && inst.rotation_symmetric && inst.layout &&
        inst.layout->n > 0) {
      const Point mid = node.bounds.midpoint();
      for (LinearCut& cut :
           separate_rotation_cuts(*inst.layout, mid, node.bounds)) {
        if (node.cuts.size() >= kMaxPoolCuts) break;
        node.cuts.push_back(std::move(cut));
        ++new_cuts;
      }
    }
    if (settings.cutfreq > 0 && node.depth % settings.cutfreq == 0) {
      for (const MinDC& base : inst.mindcs) {
        for (int swap = 0; swap < 2; ++swap) {
          const MinDC c = swap ? base.swapped() : base;
          BoxDomain dy = c.y_box(node.bounds);
          bool full = true;
          for (std::size_t i = 0; i < dy.dim(); ++i)
            if (dy[i].is_singleton()) full = false;
          if (!full) continue;
          for (const Point& v : box_vertices(dy)) {
            if (node.cuts.size() >= kMaxPoolCuts) break;
            if (auto cut = simplex_cut(v, c, node.bounds)) {
              node.cuts.push_back(std::move(*cut));
              ++new_cuts;
            }
          }
        }
      }
    }
    if (new_cuts > 0) {
      result.cuts_added += static_cast<long>(new_cuts);
      const BoxDomain before2 = node.bounds;
      ps = propagate_node(node, inst, settings, pairs, &result.reductions);
      if (observer)
        observer->on_propagated(before2, node.bounds,
                                ps == PropagateStatus::Infeasible);
      if (ps == PropagateStatus::Infeasible) continue;
    }

    node.local_upper = node.bounds[inst.objective_var].hi;
    if (primal > -kInf && node.local_upper <= primal + 1e-12) continue;

    auto children = branch(node, inst, inst.bounds);
    const bool leaf = !children.has_value();
    if (leaf || result.nodes % 10 == 0) {
      if (auto sol = incumbent_try(node, inst, settings.seed + node.id))
        accept(*sol);
    }
    if (leaf) continue;

    children->first.id = next_id++;
    children->second.id = next_id++;
    children->first.local_upper = node.local_upper;
    children->second.local_upper = node.local_upper;
    push_node(std::move(children->first));
    push_node(std::move(children->second));
  }

  result.status = status;
  result.has_incumbent = primal > -kInf;
  result.incumbent_value = result.has_incumbent ? primal : 0.0;
  result.incumbent_point = incumbent;
  result.dual_bound = dual;
  result.gap = result.has_incumbent ? relative_gap(primal, dual) : kInf;
  result.time_s = elapsed();
  if (status == SolveStatus::Optimal) result.gap = 0.0;
  return result;
}

}  // namespace mindist
