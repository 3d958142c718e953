#include "mindist/instance.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace mindist {

namespace {

void check(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

void Instance::validate() const {
  check(num_vars == bounds.dim(), "bounds: length must equal num_vars");
  check(objective_var < num_vars, "objective_var: out of range");
  for (std::size_t i = 0; i < num_vars; ++i)
    check(bounds[i].lo <= bounds[i].hi, "bounds[" + std::to_string(i) +
                                            "]: lo must not exceed hi");
  for (std::size_t k = 0; k < mindcs.size(); ++k) {
    const MinDC& c = mindcs[k];
    const std::string at = "mindcs[" + std::to_string(k) + "]";
    check(!c.y_vars.empty(), at + ".y: must be nonempty");
    check(c.y_vars.size() == c.z_vars.size(), at + ": y and z dims differ");
    for (std::size_t i = 0; i < c.y_vars.size(); ++i) {
      check(c.y_vars[i] < num_vars, at + ".y: index out of range");
      check(c.z_vars[i] < num_vars, at + ".z: index out of range");
      check(c.y_vars[i] != c.z_vars[i], at + ": y and z share a variable");
    }
    if (c.delta_var)
      check(*c.delta_var < num_vars, at + ".delta.var: out of range");
    else
      check(c.delta_const >= 0.0, at + ".delta.const: must be nonnegative");
  }
  for (std::size_t k = 0; k < balls.size(); ++k) {
    const BallContainment& b = balls[k];
    const std::string at = "balls[" + std::to_string(k) + "]";
    check(b.vars.size() == b.center.size(), at + ": center dim mismatch");
    for (std::size_t v : b.vars)
      check(v < num_vars, at + ".vars: index out of range");
    if (b.radius_var)
      check(*b.radius_var < num_vars, at + ".radius.var: out of range");
    else
      check(b.radius_const >= 0.0, at + ".radius: must be nonnegative");
  }
  for (std::size_t k = 0; k < spheres.size(); ++k) {
    const SphereMembership& s = spheres[k];
    const std::string at = "spheres[" + std::to_string(k) + "]";
    check(s.vars.size() == s.center.size(), at + ": center dim mismatch");
    for (std::size_t v : s.vars)
      check(v < num_vars, at + ".vars: index out of range");
    check(s.radius >= 0.0, at + ".radius: must be nonnegative");
    check(s.band >= 0.0, at + ".band: must be nonnegative");
  }
  for (std::size_t k = 0; k < static_cuts.size(); ++k)
    for (const auto& [v, coef] : static_cuts[k].terms)
      check(v < num_vars,
            "cuts[" + std::to_string(k) + "]: index out of range");
  if (layout) {
    check(layout->valid(), "layout: vars length must equal n*dim");
    for (std::size_t v : layout->vars)
      check(v < num_vars, "layout.vars: index out of range");
  }
  if (lex.rows || lex.cols)
    check(layout.has_value(), "lex: requires a layout");
}

namespace {

// d2 = coef * x[src], written as a pair of opposite inequalities so plain
// cut propagation keeps the two variables in sync.
void link_equal(Instance& inst, std::size_t var, double coef,
                std::size_t src) {
  LinearCut fwd;
  fwd.terms = {{var, 1.0}, {src, -coef}};
  fwd.rhs = 0.0;
  LinearCut bwd;
  bwd.terms = {{var, -1.0}, {src, coef}};
  bwd.rhs = 0.0;
  inst.static_cuts.push_back(fwd);
  inst.static_cuts.push_back(bwd);
}

PointMatrixLayout make_layout(std::size_t n, std::size_t dim) {
  PointMatrixLayout layout;
  layout.n = n;
  layout.dim = dim;
  layout.vars.resize(n * dim);
  for (std::size_t i = 0; i < n * dim; ++i) layout.vars[i] = i;
  return layout;
}

void add_pairwise_mindcs(Instance& inst, std::size_t n, std::size_t dim,
                         std::size_t delta_var) {
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = i + 1; k < n; ++k) {
      MinDC c;
      for (std::size_t j = 0; j < dim; ++j) {
        c.y_vars.push_back(i * dim + j);
        c.z_vars.push_back(k * dim + j);
      }
      c.delta_var = delta_var;
      inst.mindcs.push_back(std::move(c));
    }
  }
}

}  // namespace

Instance build_pack_in_sphere(std::size_t n, std::size_t dim,
                              BuildFlags flags) {
  if (n < 2) throw std::invalid_argument("need at least 2 spheres");
  Instance inst;
  inst.name = "pack-sphere-n" + std::to_string(n) + "-d" + std::to_string(dim);
  const std::size_t r_var = n * dim;
  const std::size_t d2_var = n * dim + 1;
  inst.num_vars = n * dim + 2;

  std::vector<Interval> iv(inst.num_vars);
  for (std::size_t i = 0; i < n * dim; ++i) iv[i] = Interval(-1.0, 1.0);
  iv[r_var] = Interval(0.0, 1.0);
  iv[d2_var] = Interval(0.0, 2.0);
  inst.bounds = BoxDomain(std::move(iv));
  inst.objective_var = r_var;

  add_pairwise_mindcs(inst, n, dim, d2_var);
  link_equal(inst, d2_var, 2.0, r_var);

  for (std::size_t i = 0; i < n; ++i) {
    BallContainment b;
    for (std::size_t j = 0; j < dim; ++j) b.vars.push_back(i * dim + j);
    b.center = Point(dim, 0.0);
    b.radius_const = 1.0;
    b.radius_var = r_var;
    b.radius_coef = -1.0;
    inst.balls.push_back(std::move(b));
  }

  if (flags.reflect_first) {
    for (std::size_t j = 0; j < dim; ++j) {
      LinearCut cut;
      cut.terms = {{j, 1.0}};
      cut.rhs = 0.0;
      inst.static_cuts.push_back(std::move(cut));
    }
  }

  inst.layout = make_layout(n, dim);
  inst.lex.rows = flags.lex_rows;
  inst.lex.cols = false;
  inst.rotation_symmetric = true;
  inst.validate();
  return inst;
}

Instance build_kissing(std::size_t n, std::size_t dim, BuildFlags flags) {
  if (n < 2) throw std::invalid_argument("need at least 2 spheres");
  Instance inst;
  inst.name = "kissing-n" + std::to_string(n) + "-d" + std::to_string(dim);
  const std::size_t r_var = n * dim;
  const std::size_t d2_var = n * dim + 1;
  const std::size_t center0 = n * dim + 2;  // origin, fixed
  inst.num_vars = n * dim + 2 + dim;

  std::vector<Interval> iv(inst.num_vars);
  for (std::size_t i = 0; i < n * dim; ++i) iv[i] = Interval(-2.0, 2.0);
  iv[r_var] = Interval(0.0, 2.0);
  iv[d2_var] = Interval(0.0, 4.0);
  for (std::size_t j = 0; j < dim; ++j) iv[center0 + j] = Interval(0.0, 0.0);
  inst.bounds = BoxDomain(std::move(iv));
  inst.objective_var = r_var;

  add_pairwise_mindcs(inst, n, dim, d2_var);
  link_equal(inst, d2_var, 2.0, r_var);

  const double band = 1e-6;
  for (std::size_t i = 0; i < n; ++i) {
    SphereMembership s;
    for (std::size_t j = 0; j < dim; ++j) s.vars.push_back(i * dim + j);
    s.center = Point(dim, 0.0);
    s.radius = 2.0;
    s.band = band;
    inst.spheres.push_back(std::move(s));

    // The shell's far side ||X^i|| >= 2 - band is itself a minDC against
    // the fixed center, so the single-constraint machinery applies.
    MinDC away;
    for (std::size_t j = 0; j < dim; ++j) {
      away.y_vars.push_back(i * dim + j);
      away.z_vars.push_back(center0 + j);
    }
    away.delta_const = 2.0 - band;
    inst.mindcs.push_back(std::move(away));
  }

  inst.layout = make_layout(n, dim);
  inst.lex.rows = flags.lex_rows;
  inst.lex.cols = false;
  inst.rotation_symmetric = true;
  inst.validate();
  return inst;
}

Instance build_pack_in_box(std::size_t n, std::size_t dim, BuildFlags flags) {
  if (n < 2) throw std::invalid_argument("need at least 2 spheres");
  Instance inst;
  inst.name = "pack-box-n" + std::to_string(n) + "-d" + std::to_string(dim);
  const std::size_t r_var = n * dim;
  const std::size_t d2_var = n * dim + 1;
  inst.num_vars = n * dim + 2;

  std::vector<Interval> iv(inst.num_vars);
  for (std::size_t i = 0; i < n * dim; ++i) iv[i] = Interval(0.0, 1.0);
  iv[r_var] = Interval(0.0, 0.5);
  iv[d2_var] = Interval(0.0, 1.0);
  inst.bounds = BoxDomain(std::move(iv));
  inst.objective_var = r_var;

  add_pairwise_mindcs(inst, n, dim, d2_var);
  link_equal(inst, d2_var, 2.0, r_var);

  // Wall offsets: r <= x <= 1 - r for every coordinate.
  for (std::size_t i = 0; i < n * dim; ++i) {
    LinearCut lo;
    lo.terms = {{i, 1.0}, {r_var, -1.0}};
    lo.rhs = 0.0;
    inst.static_cuts.push_back(std::move(lo));
    LinearCut hi;
    hi.terms = {{i, -1.0}, {r_var, -1.0}};
    hi.rhs = -1.0;
    inst.static_cuts.push_back(std::move(hi));
  }

  inst.layout = make_layout(n, dim);
  inst.lex.rows = flags.lex_rows;
  inst.lex.cols = true;  // unit box: all dimensions coincide
  inst.validate();
  return inst;
}

bool instances_equal(const Instance& a, const Instance& b) {
  return instance_to_json_text(a) == instance_to_json_text(b);
}

}  // namespace mindist
