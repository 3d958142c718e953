#pragma once

#include <cstddef>
#include <vector>

#include "mindist/types.hpp"

namespace mindist {

// Maps matrix entries X[i][j] of n points in dim-space to flat variable
// indices.
struct PointMatrixLayout {
  std::size_t n = 0;
  std::size_t dim = 0;
  std::vector<std::size_t> vars;  // row-major, n * dim entries

  std::size_t var_of(std::size_t i, std::size_t j) const {
    return vars[i * dim + j];
  }
  bool valid() const { return vars.size() == n * dim; }
};

struct PropagationOutcome {
  bool infeasible = false;
  std::vector<BoundChange> changes;
};

// Interval propagation of X^i >=lex X^(i+1) over consecutive rows.
PropagationOutcome lex_rows_propagate(const PointMatrixLayout& layout,
                                      const BoxDomain& bounds);

// Column analog: X_j >=lex X_(j+1).
PropagationOutcome lex_cols_propagate(const PointMatrixLayout& layout,
                                      const BoxDomain& bounds);

// Minimizer of f(alpha) = (1 - cos alpha) * a + sin alpha * b over
// [0, 2pi).  min_value = a - sqrt(a^2 + b^2) <= 0.  Throws on (0, 0).
struct AlphaStar {
  double alpha = 0.0;
  double cos_alpha = 0.0;
  double sin_alpha = 0.0;
  double min_value = 0.0;
};
AlphaStar alpha_star(double a, double b);

// Rows a rotation cut may be posted on for the axis pair (j, j'): every
// earlier row must be fixed to zero in both columns.  Row 0 always
// qualifies.
std::vector<std::size_t> applicable_rows(const PointMatrixLayout& layout,
                                         const BoxDomain& bounds,
                                         std::size_t j, std::size_t jp);

// Separates the first-entry Givens-rotation lex condition, combined with
// reflections, at the given point.  One cut per (row, axis pair) at most;
// only cuts violated by more than eps_cut are returned.
std::vector<LinearCut> separate_rotation_cuts(const PointMatrixLayout& layout,
                                              const Point& point,
                                              const BoxDomain& bounds);

inline constexpr double eps_fix = 1e-9;  // fixed-to-zero test
inline constexpr double eps_cut = 1e-6;  // minimum violation to emit

}  // namespace mindist
