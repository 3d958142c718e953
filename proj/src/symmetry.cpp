#include "mindist/symmetry.hpp"

#include <cmath>
#include <stdexcept>

namespace mindist {

namespace {

constexpr double two_pi = 6.283185307179586476925286766559;

// Propagates u >=lex v where u and v are sequences of variable indices.
void lex_propagate_pair(const std::vector<std::size_t>& u,
                        const std::vector<std::size_t>& v, BoxDomain& work,
                        PropagationOutcome& out) {
  for (std::size_t k = 0; k < u.size(); ++k) {
    Interval& a = work[u[k]];
    Interval& b = work[v[k]];
    if (a.hi < b.lo - bound_eps) {
      out.infeasible = true;
      return;
    }
    // u_k >= v_k holds at the first undecided position.
    if (b.lo > a.lo + bound_eps) {
      a.lo = std::min(b.lo, a.hi);
      out.changes.push_back({u[k], BoundSide::Lower, a.lo});
    }
    if (a.hi < b.hi - bound_eps) {
      b.hi = std::max(a.hi, b.lo);
      out.changes.push_back({v[k], BoundSide::Upper, b.hi});
    }
    // Advance only while the entries are forced equal.
    if (a.hi > b.lo + bound_eps) return;
  }
}

}  // namespace

PropagationOutcome lex_rows_propagate(const PointMatrixLayout& layout,
                                      const BoxDomain& bounds) {
  PropagationOutcome out;
  BoxDomain work = bounds;
  std::vector<std::size_t> u(layout.dim), v(layout.dim);
  for (std::size_t i = 0; i + 1 < layout.n && !out.infeasible; ++i) {
    for (std::size_t j = 0; j < layout.dim; ++j) {
      u[j] = layout.var_of(i, j);
      v[j] = layout.var_of(i + 1, j);
    }
    lex_propagate_pair(u, v, work, out);
  }
  if (out.infeasible) out.changes.clear();
  return out;
}

PropagationOutcome lex_cols_propagate(const PointMatrixLayout& layout,
                                      const BoxDomain& bounds) {
  PropagationOutcome out;
  BoxDomain work = bounds;
  std::vector<std::size_t> u(layout.n), v(layout.n);
  for (std::size_t j = 0; j + 1 < layout.dim && !out.infeasible; ++j) {
    for (std::size_t i = 0; i < layout.n; ++i) {
      u[i] = layout.var_of(i, j);
      v[i] = layout.var_of(i, j + 1);
    }
    lex_propagate_pair(u, v, work, out);
  }
  if (out.infeasible) out.changes.clear();
  return out;
}

AlphaStar alpha_star(double a, double b) {
  const double r = std::hypot(a, b);
  if (r == 0.0) throw std::invalid_argument("degenerate point");
  AlphaStar s;
  s.cos_alpha = a / r;
  s.sin_alpha = -b / r;
  s.alpha = std::atan2(s.sin_alpha, s.cos_alpha);
  if (s.alpha < 0.0) s.alpha += two_pi;
  s.min_value = a - r;
  return s;
}

std::vector<std::size_t> applicable_rows(const PointMatrixLayout& layout,
                                         const BoxDomain& bounds,
                                         std::size_t j, std::size_t jp) {
  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i < layout.n; ++i) {
    rows.push_back(i);
    const Interval& cj = bounds[layout.var_of(i, j)];
    const Interval& cjp = bounds[layout.var_of(i, jp)];
    const bool fixed_zero = cj.lo >= -eps_fix && cj.hi <= eps_fix &&
                            cjp.lo >= -eps_fix && cjp.hi <= eps_fix;
    if (!fixed_zero) break;
  }
  return rows;
}

std::vector<LinearCut> separate_rotation_cuts(const PointMatrixLayout& layout,
                                              const Point& point,
                                              const BoxDomain& bounds) {
  std::vector<LinearCut> cuts;
  const int signs[4][2] = {{-1, -1}, {-1, 1}, {1, -1}, {1, 1}};
  for (std::size_t j = 0; j < layout.dim; ++j) {
    for (std::size_t jp = j + 1; jp < layout.dim; ++jp) {
      for (std::size_t i : applicable_rows(layout, bounds, j, jp)) {
        const std::size_t vj = layout.var_of(i, j);
        const std::size_t vjp = layout.var_of(i, jp);
        const double a = point[vj];
        const double b = point[vjp];
        if (std::hypot(a, b) == 0.0) continue;

        // Most violated reflection pattern; ties go to the smallest
        // (s_j, s_j') pair.
        bool have = false;
        double best_violation = 0.0;
        LinearCut best;
        for (const auto& sg : signs) {
          const double sj = sg[0];
          const double sjp = sg[1];
          // Minimize (1 - s_j cos alpha) a + s_j' sin alpha b over alpha:
          // substitute (a', b') = (s_j a, s_j' b) into the base problem.
          const AlphaStar st = alpha_star(sj * a, sjp * b);
          const double coef_j = 1.0 - sj * st.cos_alpha;
          const double coef_jp = sjp * st.sin_alpha;
          const double value = coef_j * a + coef_jp * b;
          if (value < -eps_cut && (!have || value < best_violation)) {
            have = true;
            best_violation = value;
            best.terms = {{vj, coef_j}, {vjp, coef_jp}};
            best.rhs = 0.0;
          }
        }
        if (have) cuts.push_back(std::move(best));
      }
    }
  }
  return cuts;
}

}  // namespace mindist
