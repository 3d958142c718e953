// Acceptance suite: one self-contained check per criterion, each printing
// a single [PASS]/[FAIL] line.  Run with no arguments for all criteria or
// with a list of criterion numbers.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mindist/engine.hpp"
#include "mindist/oracle.hpp"
#include "mindist/pairs.hpp"

using namespace mindist;

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

// ---------------------------------------------------------------------------
// Criterion 1: reduction and cut soundness on random instances.

struct SingleInstance {
  MinDC c;
  BoxDomain bounds;
};

SingleInstance random_single(std::mt19937_64& rng, std::size_t dim) {
  std::uniform_real_distribution<double> u(-4.0, 4.0);
  std::uniform_real_distribution<double> w(0.0, 3.0);
  std::uniform_real_distribution<double> ud(0.1, 6.0);
  SingleInstance si;
  std::vector<Interval> iv;
  for (std::size_t i = 0; i < 2 * dim; ++i) {
    const double a = u(rng);
    iv.emplace_back(a, a + w(rng));
  }
  si.bounds = BoxDomain(std::move(iv));
  for (std::size_t i = 0; i < dim; ++i) {
    si.c.y_vars.push_back(i);
    si.c.z_vars.push_back(dim + i);
  }
  si.c.delta_const = ud(rng);
  return si;
}

bool criterion1(std::string& detail) {
  std::mt19937_64 rng(101);
  oracle::SamplingPlan plan;
  plan.samples = 10000;
  long counterexamples = 0;
  long reductions_seen = 0;
  long cuts_seen = 0;

  // Single-constraint pipeline: interval propagation, then facet
  // shrinking, then the simplex cuts.
  for (std::size_t d = 1; d <= 5; ++d) {
    for (int trial = 0; trial < 500; ++trial) {
      SingleInstance si = random_single(rng, d);
      plan.seed = 100000 + 1000 * d + trial;
      const std::vector<oracle::WeakenedMinDC> weak = {
          {si.c.y_vars, si.c.z_vars, si.c.delta_const}};

      BoxDomain after = si.bounds;
      bool infeasible = false;
      auto res = propagate_prop1(si.c, after);
      if (res.infeasible) {
        infeasible = true;
      } else {
        for (const BoundChange& ch : res.changes) {
          apply_bound_change(after, ch);
          ++reductions_seen;
        }
        for (int swap = 0; swap < 2 && !infeasible; ++swap) {
          const MinDC c = swap ? si.c.swapped() : si.c;
          for (std::size_t axis = 0; axis < d && !infeasible; ++axis) {
            for (BoundSide side : {BoundSide::Lower, BoundSide::Upper}) {
              auto ch = locatelli_shrink(c, after, axis, side);
              if (!ch) continue;
              if (!apply_bound_change(after, *ch)) continue;
              ++reductions_seen;
              if (after[ch->var].lo > after[ch->var].hi) {
                infeasible = true;
                break;
              }
            }
          }
        }
      }
      if (infeasible) {
        // Claimed infeasibility: no sampled point may satisfy the
        // weakened constraint.  Empty the box on one axis and reuse the
        // sampler over the whole original region.
        BoxDomain empty = si.bounds;
        empty[0] = Interval(si.bounds[0].lo - 1.0, si.bounds[0].lo - 1.0);
        counterexamples += static_cast<long>(
            oracle::reduction_soundness_check(si.bounds, empty, weak, plan)
                .size());
        continue;
      }
      counterexamples += static_cast<long>(
          oracle::reduction_soundness_check(si.bounds, after, weak, plan)
              .size());

      // Simplex cuts at the vertices of the (already tightened) y box.
      std::vector<LinearCut> cuts;
      for (int swap = 0; swap < 2; ++swap) {
        const MinDC c = swap ? si.c.swapped() : si.c;
        BoxDomain dy = c.y_box(after);
        bool full = true;
        for (std::size_t i = 0; i < d; ++i) full &= !dy[i].is_singleton();
        if (!full) continue;
        for (const Point& v : box_vertices(dy))
          if (auto cut = simplex_cut(v, c, after)) cuts.push_back(*cut);
      }
      cuts_seen += static_cast<long>(cuts.size());
      if (!cuts.empty()) {
        std::uniform_real_distribution<double> u01(0.0, 1.0);
        for (std::size_t s = 0; s < 2000; ++s) {
          Point x(si.bounds.dim());
          for (std::size_t v = 0; v < x.size(); ++v)
            x[v] = si.bounds[v].lo + u01(rng) * si.bounds[v].width();
          double dist2 = 0.0;
          for (std::size_t i = 0; i < d; ++i) {
            const double dd = x[si.c.y_vars[i]] - x[si.c.z_vars[i]];
            dist2 += dd * dd;
          }
          if (dist2 < si.c.delta_const * si.c.delta_const + 1e-7) continue;
          for (const LinearCut& cut : cuts) {
            double act = 0.0;
            for (const auto& [v, coef] : cut.terms) act += coef * x[v];
            if (act < cut.rhs - 1e-7) ++counterexamples;
          }
        }
      }
    }
  }

  // Pair reductions, both heuristics, validated before application.
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  std::uniform_real_distribution<double> w(0.3, 2.0);
  std::uniform_real_distribution<double> ur(0.5, 3.5);
  for (std::size_t d = 2; d <= 3; ++d) {
    for (int trial = 0; trial < 200; ++trial) {
      MinDCPair p;
      std::vector<Interval> iv;
      for (std::size_t i = 0; i < d; ++i) {
        const double a = u(rng);
        iv.emplace_back(a, a + w(rng));
      }
      for (int zbox = 0; zbox < 2; ++zbox)
        for (std::size_t i = 0; i < d; ++i) {
          const double a = u(rng) + 2.0;
          iv.emplace_back(a, a + 0.4 * w(rng));
        }
      BoxDomain bounds{std::move(iv)};
      for (std::size_t i = 0; i < d; ++i) {
        p.c1.y_vars.push_back(i);
        p.c1.z_vars.push_back(d + i);
        p.c2.y_vars.push_back(i);
        p.c2.z_vars.push_back(2 * d + i);
      }
      p.c1.delta_const = ur(rng);
      p.c2.delta_const = ur(rng);
      plan.seed = 400000 + 1000 * d + trial;
      const std::vector<oracle::WeakenedMinDC> weak = {
          {p.c1.y_vars, p.c1.z_vars, p.c1.delta_const},
          {p.c2.y_vars, p.c2.z_vars, p.c2.delta_const}};

      BoxDomain after = bounds;
      for (std::size_t axis = 0; axis < d; ++axis) {
        for (BoundSide side : {BoundSide::Lower, BoundSide::Upper}) {
          if (auto slab = geometric_reduce(p, axis, side, after)) {
            if (validate_slab(p, *slab, after)) {
              if (apply_bound_change(after,
                                     {p.c1.y_vars[axis], side,
                                      slab->new_bound}))
                ++reductions_seen;
            }
          }
          if (auto ch = bisection_reduce(p, axis, side, after)) {
            if (apply_bound_change(after, *ch)) ++reductions_seen;
          }
        }
      }
      counterexamples += static_cast<long>(
          oracle::reduction_soundness_check(bounds, after, weak, plan)
              .size());
    }
  }

  detail = "counterexamples=" + std::to_string(counterexamples) +
           " reductions=" + std::to_string(reductions_seen) +
           " cuts=" + std::to_string(cuts_seen);
  return counterexamples == 0 && reductions_seen > 500 && cuts_seen > 500;
}

// ---------------------------------------------------------------------------
// Criterion 2: 1-D facet shrinking matches C = (uz - delta, lz + delta).

bool criterion2(std::string& detail) {
  std::mt19937_64 rng(202);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  std::uniform_real_distribution<double> w(0.1, 4.0);
  std::uniform_real_distribution<double> ud(0.2, 6.0);
  long mismatches = 0;
  long checked = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const double ly = u(rng), wy = w(rng);
    const double lz = u(rng), wz = w(rng);
    const double delta = ud(rng);
    MinDC c;
    c.y_vars = {0};
    c.z_vars = {1};
    c.delta_const = delta;
    BoxDomain bounds{{ly, ly + wy}, {lz, lz + wz}};
    const double c_lo = lz + wz - delta;
    const double c_hi = lz + delta;
    for (BoundSide side : {BoundSide::Upper, BoundSide::Lower}) {
      const double facet = side == BoundSide::Upper ? ly + wy : ly;
      const bool inside = facet > c_lo + 1e-6 && facet < c_hi - 1e-6;
      const bool outside = facet < c_lo - 1e-6 || facet > c_hi + 1e-6;
      if (!inside && !outside) continue;
      auto ch = locatelli_shrink(c, bounds, 0, side);
      ++checked;
      if (outside) {
        if (ch.has_value()) ++mismatches;
        continue;
      }
      const double expect = side == BoundSide::Upper ? c_lo : c_hi;
      const double current = facet;
      const bool improves = side == BoundSide::Upper
                                ? expect < current - bound_eps
                                : expect > current + bound_eps;
      if (!improves) {
        if (ch.has_value()) ++mismatches;
        continue;
      }
      if (!ch.has_value() || std::abs(ch->value - expect) > 1e-12)
        ++mismatches;
    }
  }
  detail = "checked=" + std::to_string(checked) +
           " mismatches=" + std::to_string(mismatches);
  return mismatches == 0 && checked > 800;
}

// ---------------------------------------------------------------------------
// Criterion 3: pair cover checker against the dense grid oracle.

bool criterion3(std::string& detail) {
  std::mt19937_64 rng(303);
  std::uniform_real_distribution<double> u(-1.0, 2.0);
  std::uniform_real_distribution<double> ur(0.3, 2.5);
  long disagreements = 0;
  long compared = 0;
  const auto run_dim = [&](std::size_t dim, int count, std::size_t res) {
    for (int trial = 0; trial < count; ++trial) {
      std::vector<Interval> iv(dim);
      for (auto& i : iv) {
        double a = u(rng), b = u(rng);
        if (a > b) std::swap(a, b);
        i = Interval(a, b);
      }
      BoxDomain dz1(std::vector<Interval>(dim)), dz2(std::vector<Interval>(dim));
      std::vector<double> p(dim), q(dim);
      for (std::size_t i = 0; i < dim; ++i) {
        p[i] = u(rng);
        q[i] = u(rng);
      }
      const double d1 = ur(rng), d2 = ur(rng);
      BoxDomain dp(iv);
      const bool exact = pair_cover_check(dp, p, q, d1, d2);
      const bool grid =
          oracle::grid_cover_check(dp, {{p, d1}, {q, d2}}, res);
      ++compared;
      if (exact != grid &&
          !oracle::grid_near_boundary(dp, {{p, d1}, {q, d2}}, res, 1e-6))
        ++disagreements;
    }
  };
  run_dim(2, 200, 200);
  run_dim(3, 100, 60);
  detail = "compared=" + std::to_string(compared) +
           " disagreements=" + std::to_string(disagreements);
  return disagreements == 0;
}

// ---------------------------------------------------------------------------
// Criterion 4: the two-constraint configuration beats facet shrinking.

bool criterion4(std::string& detail) {
  MinDCPair p;
  for (std::size_t i = 0; i < 2; ++i) {
    p.c1.y_vars.push_back(i);
    p.c1.z_vars.push_back(2 + i);
    p.c2.y_vars.push_back(i);
    p.c2.z_vars.push_back(4 + i);
  }
  p.c1.delta_const = 2.5;
  p.c2.delta_const = 2.5;
  BoxDomain bounds{{0, 4}, {0, 2}, {5, 5}, {-1, -1}, {5.2, 5.2}, {3, 3}};

  const bool single_fails =
      !locatelli_shrink(p.c1, bounds, 0, BoundSide::Upper).has_value() &&
      !locatelli_shrink(p.c2, bounds, 0, BoundSide::Upper).has_value();
  auto slab = geometric_reduce(p, 0, BoundSide::Upper, bounds);
  const bool value_ok =
      slab.has_value() && std::abs(slab->new_bound - 3.605) <= 1e-3;
  const bool validated = slab.has_value() && validate_slab(p, *slab, bounds);
  detail = std::string("single_fails=") + (single_fails ? "yes" : "no") +
           " bound=" + (slab ? fmt(slab->new_bound) : "none") +
           " validated=" + (validated ? "yes" : "no");
  return single_fails && value_ok && validated;
}

// ---------------------------------------------------------------------------
// Criterion 5: solver reproductions at the 0.5% gap.

bool criterion5(std::string& detail) {
  struct Case {
    const char* name;
    Instance inst;
    double optimum;
  };
  std::vector<Case> cases;
  cases.push_back({"pack-sphere-2", build_pack_in_sphere(2, 2), 0.5});
  cases.push_back(
      {"pack-sphere-3", build_pack_in_sphere(3, 2), 2.0 * std::sqrt(3.0) - 3.0});
  cases.push_back({"kissing-6", build_kissing(6, 2), 1.0});
  cases.push_back(
      {"kissing-7", build_kissing(7, 2), 2.0 * std::sin(kPi / 7.0)});
  cases.push_back({"pack-box-4", build_pack_in_box(4, 2), 0.25});

  Settings settings;
  settings.rotsym = true;
  settings.gap = 0.005;
  settings.time_limit = 600.0;

  bool ok = true;
  std::ostringstream out;
  for (Case& c : cases) {
    const SolveResult res = solve(c.inst, settings);
    const bool solved = res.status == SolveStatus::GapReached ||
                        res.status == SolveStatus::Optimal;
    const bool primal_ok =
        res.has_incumbent &&
        std::abs(res.incumbent_value - c.optimum) <= 0.005 * c.optimum;
    const bool gap_ok = res.gap <= settings.gap + 1e-12;
    ok = ok && solved && primal_ok && gap_ok;
    out << " " << c.name << "=" << fmt(res.incumbent_value) << "/"
        << fmt(c.optimum) << (solved && primal_ok && gap_ok ? "" : "(FAIL)");
  }
  detail = out.str();
  return ok;
}

// ---------------------------------------------------------------------------
// Criterion 6: rotation-symmetry handling shrinks the tree.

bool criterion6(std::string& detail) {
  Settings base;
  base.heur = 0;
  base.pair = 0;
  base.gap = 0.005;
  base.time_limit = 600.0;

  bool all_leq = true;
  bool some_strict = false;
  std::ostringstream out;
  for (std::size_t n : {5, 6}) {
    Instance inst = build_kissing(n, 2);
    Settings off = base;
    off.rotsym = false;
    Settings on = base;
    on.rotsym = true;
    const SolveResult r_off = solve(inst, off);
    const SolveResult r_on = solve(inst, on);
    all_leq = all_leq && r_on.nodes <= r_off.nodes;
    some_strict = some_strict || r_on.nodes < r_off.nodes;
    out << " n=" << n << ": " << r_on.nodes << " vs " << r_off.nodes;
  }
  detail = out.str();
  return all_leq && some_strict;
}

// ---------------------------------------------------------------------------
// Criterion 7: rotation-cut properties.

bool criterion7(std::string& detail) {
  std::mt19937_64 rng(707);
  std::uniform_real_distribution<double> u(-5.0, 5.0);

  const int grid = 1000000;
  std::vector<double> cs(grid), sn(grid);
  for (int k = 0; k < grid; ++k) {
    const double alpha = 2.0 * kPi * double(k) / double(grid);
    cs[k] = std::cos(alpha);
    sn[k] = std::sin(alpha);
  }
  long alpha_fails = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    double a = u(rng), b = u(rng);
    if (a == 0.0 && b == 0.0) a = 1.0;
    const AlphaStar st = alpha_star(a, b);
    double best = 1e300;
    for (int k = 0; k < grid; ++k) {
      const double v = (1.0 - cs[k]) * a + sn[k] * b;
      if (v < best) best = v;
    }
    if (best < st.min_value - 1e-9) ++alpha_fails;
  }

  // Representative preservation on random matrices.
  long preserve_fails = 0;
  long cuts_emitted = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const std::size_t dim = 2 + trial % 2;
    PointMatrixLayout lay;
    lay.n = n;
    lay.dim = dim;
    lay.vars.resize(n * dim);
    for (std::size_t i = 0; i < n * dim; ++i) lay.vars[i] = i;
    BoxDomain bounds(std::vector<Interval>(n * dim, Interval(-5.0, 5.0)));
    Point x(n * dim);
    for (auto& v : x) v = u(rng);
    for (const LinearCut& cut : separate_rotation_cuts(lay, x, bounds)) {
      ++cuts_emitted;
      double at_x = 0.0;
      for (const auto& [v, coef] : cut.terms) at_x += coef * x[v];
      if (at_x >= -eps_cut) ++preserve_fails;  // must be violated
      const double r =
          std::hypot(x[cut.terms[0].first], x[cut.terms[1].first]);
      if (cut.terms[0].second * r < -1e-12) ++preserve_fails;
    }
  }
  detail = "alpha_fails=" + std::to_string(alpha_fails) +
           " preserve_fails=" + std::to_string(preserve_fails) +
           " cuts=" + std::to_string(cuts_emitted);
  return alpha_fails == 0 && preserve_fails == 0 && cuts_emitted > 500;
}

// ---------------------------------------------------------------------------
// Criterion 8: determinism across repeated solves.

bool criterion8(std::string& detail) {
  struct Run {
    const char* name;
    Instance inst;
  };
  std::vector<Run> runs;
  runs.push_back({"pack-sphere-2", build_pack_in_sphere(2, 2)});
  runs.push_back({"pack-sphere-3", build_pack_in_sphere(3, 2)});
  runs.push_back({"kissing-5", build_kissing(5, 2)});
  runs.push_back({"pack-box-2", build_pack_in_box(2, 2)});
  runs.push_back({"pack-box-4", build_pack_in_box(4, 2)});

  Settings settings;
  settings.rotsym = true;
  settings.seed = 11;
  settings.time_limit = 600.0;

  bool ok = true;
  std::ostringstream out;
  for (Run& r : runs) {
    const SolveResult a = solve(r.inst, settings);
    const SolveResult b = solve(r.inst, settings);
    const bool same = a.nodes == b.nodes &&
                      a.incumbent_value == b.incumbent_value &&
                      a.dual_bound == b.dual_bound;
    ok = ok && same;
    out << " " << r.name << "=" << (same ? "same" : "DIFFERS");
  }

  // The pair heuristics run through the same deterministic machinery.
  Instance pairy = build_pack_in_sphere(3, 2);
  Settings with_pairs = settings;
  with_pairs.pair = 1;
  const SolveResult pa = solve(pairy, with_pairs);
  const SolveResult pb = solve(pairy, with_pairs);
  const bool psame = pa.nodes == pb.nodes &&
                     pa.incumbent_value == pb.incumbent_value &&
                     pa.dual_bound == pb.dual_bound;
  ok = ok && psame;
  out << " pack-sphere-3(pair)=" << (psame ? "same" : "DIFFERS");
  detail = out.str();
  return ok;
}

// ---------------------------------------------------------------------------
// Criterion 9: CLI end to end.

std::vector<std::string> split_line(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

bool criterion9(std::string& detail) {
#ifndef MINDIST_CLI_PATH
  detail = "CLI path not configured";
  return false;
#else
  const std::string cli = MINDIST_CLI_PATH;
  const std::string csv = "acceptance_suite.csv";
  const std::string profile = "acceptance_profile.csv";
  std::remove(csv.c_str());
  std::remove(profile.c_str());

  const std::string cmd =
      "\"" + cli +
      "\" suite --problem pack-sphere --n-min 2 --n-max 4 --dim 2 "
      "--settings default,heur_0_pair_0,heur_1_pair_0,heur_0_pair_1,"
      "heur_1_pair_1 --time-limit 30 --out " +
      csv + " >/dev/null 2>&1";
  if (std::system(cmd.c_str()) != 0) {
    detail = "suite command failed";
    return false;
  }

  std::ifstream in(csv);
  if (!in) {
    detail = "missing suite CSV";
    return false;
  }
  std::string line;
  std::getline(in, line);
  const std::string expected_header =
      "instance,setting,status,primal,dual,gap,nodes,time_s,cuts,red_prop1,"
      "red_locatelli,red_pair_geo,red_pair_bisect";
  if (line != expected_header) {
    detail = "unexpected header: " + line;
    return false;
  }
  int rows = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (split_line(line).size() != 13) {
      detail = "malformed row: " + line;
      return false;
    }
    ++rows;
  }
  if (rows != 15) {
    detail = "expected 15 rows, got " + std::to_string(rows);
    return false;
  }

  const std::string cmd2 = "\"" + cli + "\" profile --metric time --in " +
                           csv + " --out " + profile + " >/dev/null 2>&1";
  if (std::system(cmd2.c_str()) != 0) {
    detail = "profile command failed";
    return false;
  }
  std::ifstream pin(profile);
  if (!pin) {
    detail = "missing profile CSV";
    return false;
  }
  std::getline(pin, line);
  if (line != "setting,ratio,fraction") {
    detail = "unexpected profile header: " + line;
    return false;
  }
  // Per setting: ratios sorted, fractions monotone nondecreasing in order.
  std::string prev_setting;
  double prev_ratio = 0.0, prev_fraction = 0.0;
  int curve_rows = 0;
  while (std::getline(pin, line)) {
    if (line.empty()) continue;
    const auto cells = split_line(line);
    if (cells.size() != 3) {
      detail = "malformed profile row: " + line;
      return false;
    }
    const double ratio = std::stod(cells[1]);
    const double fraction = std::stod(cells[2]);
    if (cells[0] == prev_setting) {
      if (ratio < prev_ratio - 1e-12 || fraction < prev_fraction - 1e-12) {
        detail = "profile not monotone at: " + line;
        return false;
      }
    }
    prev_setting = cells[0];
    prev_ratio = ratio;
    prev_fraction = fraction;
    if (fraction < 0.0 || fraction > 1.0 + 1e-12) {
      detail = "fraction out of range: " + line;
      return false;
    }
    ++curve_rows;
  }
  // Reruns reproduce the CSV byte for byte once the timing column is
  // stripped.
  const std::string csv2 = "acceptance_suite2.csv";
  const std::string cmd3 =
      "\"" + cli +
      "\" suite --problem pack-sphere --n-min 2 --n-max 3 --dim 2 "
      "--settings heur_0_pair_0,heur_1_pair_0 --time-limit 30 --out " +
      csv2 + " >/dev/null 2>&1";
  const std::string csv3 = "acceptance_suite3.csv";
  const std::string cmd4 =
      "\"" + cli +
      "\" suite --problem pack-sphere --n-min 2 --n-max 3 --dim 2 "
      "--settings heur_0_pair_0,heur_1_pair_0 --time-limit 30 --out " +
      csv3 + " >/dev/null 2>&1";
  if (std::system(cmd3.c_str()) != 0 || std::system(cmd4.c_str()) != 0) {
    detail = "rerun suite failed";
    return false;
  }
  const auto strip_time = [](const std::string& path) {
    std::ifstream f(path);
    std::ostringstream acc;
    std::string row;
    while (std::getline(f, row)) {
      const auto cells = split_line(row);
      for (std::size_t i = 0; i < cells.size(); ++i)
        if (i != 7) acc << cells[i] << ',';
      acc << '\n';
    }
    return acc.str();
  };
  if (strip_time(csv2) != strip_time(csv3)) {
    detail = "rerun CSV differs beyond time_s";
    return false;
  }

  detail = "rows=15 profile_rows=" + std::to_string(curve_rows) +
           " rerun=identical";
  return curve_rows > 0;
#endif
}

}  // namespace

int main(int argc, char** argv) {
  using Criterion = bool (*)(std::string&);
  const std::vector<std::pair<const char*, Criterion>> criteria = {
      {"1 soundness suite", criterion1},
      {"2 1-D shrink closed form", criterion2},
      {"3 pair cover vs grid oracle", criterion3},
      {"4 pair reduction beats single-constraint shrink", criterion4},
      {"5 solver reproductions at 0.5% gap", criterion5},
      {"6 rotation symmetry shrinks the tree", criterion6},
      {"7 rotation cut properties", criterion7},
      {"8 determinism", criterion8},
      {"9 CLI end to end", criterion9},
  };

  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));

  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    if (!selected.empty() &&
        std::find(selected.begin(), selected.end(), int(k) + 1) ==
            selected.end())
      continue;
    const auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    const bool ok = criteria[k].second(detail);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    std::printf("[%s] criterion %s (%.1fs)%s%s\n", ok ? "PASS" : "FAIL",
                criteria[k].first, secs, detail.empty() ? "" : " -- ",
                detail.c_str());
    if (!ok) ++failures;
  }
  return failures;
}
