#pragma once

#include <cstddef>
#include <initializer_list>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mindist {

using Point = std::vector<double>;

// Tolerances used across the library.  geom_eps guards tangency and
// degeneracy tests, bound_eps is the minimum bound improvement worth
// keeping, feas_tol is the feasibility tolerance for solutions.
inline constexpr double geom_eps = 1e-9;
inline constexpr double bound_eps = 1e-7;
inline constexpr double feas_tol = 1e-6;

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  Interval() = default;
  Interval(double l, double h) : lo(l), hi(h) {}

  double width() const { return hi - lo; }
  double mid() const { return 0.5 * (lo + hi); }
  bool is_singleton() const { return lo == hi; }
  bool contains(double x) const { return x >= lo && x <= hi; }
  bool is_finite() const {
    return lo > -std::numeric_limits<double>::infinity() &&
           hi < std::numeric_limits<double>::infinity();
  }
};

// Axis-aligned hyperrectangle; the universal state of the search.
class BoxDomain {
 public:
  BoxDomain() = default;
  explicit BoxDomain(std::vector<Interval> ivals) : ivals_(std::move(ivals)) {}
  BoxDomain(std::initializer_list<Interval> ivals) : ivals_(ivals) {}

  std::size_t dim() const { return ivals_.size(); }
  Interval& operator[](std::size_t i) { return ivals_[i]; }
  const Interval& operator[](std::size_t i) const { return ivals_[i]; }

  const std::vector<Interval>& intervals() const { return ivals_; }

  bool is_singleton() const {
    for (const auto& iv : ivals_)
      if (!iv.is_singleton()) return false;
    return true;
  }

  bool is_empty() const {
    for (const auto& iv : ivals_)
      if (iv.lo > iv.hi) return true;
    return false;
  }

  bool is_finite() const {
    for (const auto& iv : ivals_)
      if (!iv.is_finite()) return false;
    return true;
  }

  bool contains(const Point& p) const {
    if (p.size() != ivals_.size()) return false;
    for (std::size_t i = 0; i < p.size(); ++i)
      if (!ivals_[i].contains(p[i])) return false;
    return true;
  }

  Point midpoint() const {
    Point p(ivals_.size());
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = ivals_[i].mid();
    return p;
  }

 private:
  std::vector<Interval> ivals_;
};

struct Ball {
  Point center;
  double radius = 0.0;
};

// One edge of a box: all coordinates fixed at `anchor` except `free_axis`,
// which ranges over `span`.
struct BoxEdge {
  Point anchor;
  std::size_t free_axis = 0;
  Interval span;
};

// Sparse linear inequality sum_k coeff_k * x_{var_k} >= rhs.
struct LinearCut {
  std::vector<std::pair<std::size_t, double>> terms;
  double rhs = 0.0;
};

enum class BoundSide { Lower, Upper };

// One tightened variable bound.  Lower raises the lower bound, Upper
// lowers the upper bound.
struct BoundChange {
  std::size_t var = 0;
  BoundSide side = BoundSide::Lower;
  double value = 0.0;
};

// Applies a change; returns false when it is below the bound_eps threshold.
inline bool apply_bound_change(BoxDomain& box, const BoundChange& ch,
                               double min_improvement = bound_eps) {
  Interval& iv = box[ch.var];
  if (ch.side == BoundSide::Lower) {
    if (ch.value <= iv.lo + min_improvement) return false;
    iv.lo = ch.value;
  } else {
    if (ch.value >= iv.hi - min_improvement) return false;
    iv.hi = ch.value;
  }
  return true;
}

}  // namespace mindist
