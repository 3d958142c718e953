// Benchmark driver for the mindist shared library.  Builds or loads
// instances, runs the settings grid, and writes per-run CSV records plus
// performance-profile data.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "mindist/mindist.h"

namespace {

struct InstanceHandle {
  mdc_instance* ptr = nullptr;

  InstanceHandle() = default;
  InstanceHandle(const InstanceHandle&) = delete;
  InstanceHandle& operator=(const InstanceHandle&) = delete;
  InstanceHandle(InstanceHandle&& other) noexcept : ptr(other.ptr) {
    other.ptr = nullptr;
  }
  InstanceHandle& operator=(InstanceHandle&& other) noexcept {
    if (this != &other) {
      mdc_instance_free(ptr);
      ptr = other.ptr;
      other.ptr = nullptr;
    }
    return *this;
  }
  ~InstanceHandle() { mdc_instance_free(ptr); }
};

struct NamedSetting {
  std::string name;
  mdc_settings settings;
};

struct RunRecord {
  std::string instance;
  std::string setting;
  std::string status;
  double primal = 0.0;
  double dual = 0.0;
  double gap = 0.0;
  long nodes = 0;
  double time_s = 0.0;
  long cuts = 0;
  long red_prop1 = 0;
  long red_locatelli = 0;
  long red_pair_geo = 0;
  long red_pair_bisect = 0;
};

constexpr const char* kCsvHeader =
    "instance,setting,status,primal,dual,gap,nodes,time_s,cuts,red_prop1,"
    "red_locatelli,red_pair_geo,red_pair_bisect";

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

void write_csv(const std::string& path, const std::vector<RunRecord>& rows) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << kCsvHeader << "\n";
  for (const RunRecord& r : rows) {
    out << r.instance << ',' << r.setting << ',' << r.status << ','
        << fmt(r.primal) << ',' << fmt(r.dual) << ',' << fmt(r.gap) << ','
        << r.nodes << ',' << fmt(r.time_s) << ',' << r.cuts << ','
        << r.red_prop1 << ',' << r.red_locatelli << ',' << r.red_pair_geo
        << ',' << r.red_pair_bisect << "\n";
  }
}

// The paper's setting labels.  "default" runs the solver without any of
// the minDC reduction algorithms.
mdc_settings settings_for(const std::string& name, const mdc_settings& base) {
  mdc_settings s = base;
  if (name == "default") {
    s.mindc_reductions = 0;
    s.heur = 0;
    s.pair = 0;
    return s;
  }
  int heur = 0, pair = 0;
  if (std::sscanf(name.c_str(), "heur_%d_pair_%d", &heur, &pair) != 2 ||
      heur < 0 || heur > 1 || pair < 0 || pair > 1)
    throw std::runtime_error("unknown setting name: " + name);
  s.mindc_reductions = 1;
  s.heur = heur;
  s.pair = pair;
  return s;
}

InstanceHandle build_instance(const std::string& problem, int n, int dim) {
  InstanceHandle h;
  int rc = MDC_ERR_INVALID_ARGUMENT;
  if (problem == "pack-sphere")
    rc = mdc_instance_pack_in_sphere(n, dim, 0, &h.ptr);
  else if (problem == "pack-box")
    rc = mdc_instance_pack_in_box(n, dim, &h.ptr);
  else if (problem == "kissing")
    rc = mdc_instance_kissing(n, dim, &h.ptr);
  else
    throw std::runtime_error("unknown problem: " + problem);
  if (rc != MDC_OK)
    throw std::runtime_error(std::string("build failed: ") + mdc_last_error());
  return h;
}

RunRecord run_one(const mdc_instance* inst, const NamedSetting& ns) {
  RunRecord row;
  row.instance = mdc_instance_name(inst);
  row.setting = ns.name;
  mdc_result* res = nullptr;
  const int rc = mdc_solve(inst, &ns.settings, &res);
  if (rc != MDC_OK) {
    row.status = "Error";
    return row;
  }
  row.status = mdc_status_name(mdc_result_status(res));
  row.primal = mdc_result_has_incumbent(res) ? mdc_result_primal(res) : 0.0;
  row.dual = mdc_result_dual(res);
  row.gap = mdc_result_gap(res);
  row.nodes = mdc_result_nodes(res);
  row.time_s = mdc_result_time(res);
  row.cuts = mdc_result_cuts(res);
  row.red_prop1 = mdc_result_reductions(res, MDC_RED_PROP1);
  row.red_locatelli = mdc_result_reductions(res, MDC_RED_LOCATELLI);
  row.red_pair_geo = mdc_result_reductions(res, MDC_RED_PAIR_GEO);
  row.red_pair_bisect = mdc_result_reductions(res, MDC_RED_PAIR_BISECT);
  return row;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

// ---- performance profiles -------------------------------------------------

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

CsvTable read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  CsvTable t;
  std::string line;
  if (std::getline(in, line)) t.header = split(line, ',');
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    t.rows.push_back(split(line, ','));
  }
  return t;
}

int column_of(const CsvTable& t, const std::string& name) {
  for (std::size_t i = 0; i < t.header.size(); ++i)
    if (t.header[i] == name) return static_cast<int>(i);
  throw std::runtime_error("missing CSV column: " + name);
}

void profile_data(const std::string& csv_path, const std::string& metric,
                  const std::string& out_path) {
  const CsvTable t = read_csv(csv_path);
  const int ci = column_of(t, "instance");
  const int cs = column_of(t, "setting");
  const int cstatus = column_of(t, "status");
  const int cgap = column_of(t, "gap");
  const int ctime = column_of(t, "time_s");

  const auto solved = [&](const std::vector<std::string>& row) {
    return row[cstatus] == "Optimal" || row[cstatus] == "GapReached";
  };

  // instance -> setting -> (solved, value)
  std::map<std::string, std::map<std::string, std::pair<bool, double>>> table;
  std::vector<std::string> settings;
  for (const auto& row : t.rows) {
    const double value =
        metric == "time" ? std::stod(row[ctime]) : std::stod(row[cgap]);
    table[row[ci]][row[cs]] = {solved(row), value};
    if (std::find(settings.begin(), settings.end(), row[cs]) == settings.end())
      settings.push_back(row[cs]);
  }

  // time profiles use instances solved by at least one setting; gap
  // profiles the instances solved by none.
  std::vector<std::string> kept;
  for (const auto& [inst, per_setting] : table) {
    bool any_solved = false;
    for (const auto& [_, sv] : per_setting) any_solved |= sv.first;
    const bool keep = metric == "time" ? any_solved : !any_solved;
    if (keep) kept.push_back(inst);
  }

  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot open " + out_path);
  out << "setting,ratio,fraction\n";
  if (kept.empty()) {
    std::cerr << "warning: no instances left after filtering; empty profile\n";
    return;
  }

  const double kHuge = 1e300;
  for (const std::string& s : settings) {
    std::vector<double> ratios;
    for (const std::string& inst : kept) {
      double best = kHuge;
      for (const std::string& s2 : settings) {
        const auto it = table[inst].find(s2);
        if (it == table[inst].end()) continue;
        const auto [ok, value] = it->second;
        if (metric == "time" && !ok) continue;
        best = std::min(best, value);
      }
      const auto it = table[inst].find(s);
      double ratio = kHuge;
      if (it != table[inst].end() && (metric != "time" || it->second.first))
        ratio = it->second.second / std::max(best, 1e-9);
      ratios.push_back(ratio);
    }
    std::sort(ratios.begin(), ratios.end());
    const double n = static_cast<double>(ratios.size());
    for (std::size_t k = 0; k < ratios.size(); ++k) {
      if (ratios[k] >= kHuge) break;
      out << s << ',' << fmt(std::max(ratios[k], 1.0)) << ','
          << fmt(double(k + 1) / n) << "\n";
    }
  }

  // Shifted geometric mean summary on stdout (shift 1).
  for (const std::string& s : settings) {
    double acc = 0.0;
    std::size_t count = 0;
    for (const std::string& inst : kept) {
      const auto it = table[inst].find(s);
      if (it == table[inst].end()) continue;
      acc += std::log(it->second.second + 1.0);
      ++count;
    }
    if (count > 0)
      std::cout << "sgm(" << metric << ") " << s << " = "
                << fmt(std::exp(acc / double(count)) - 1.0) << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spatial branch-and-bound for minimum distance constraints"};
  app.require_subcommand(1);

  std::string problem = "pack-sphere";
  int n = 4;
  int dim = 2;
  std::string instance_file;
  std::string out_path;
  mdc_settings base;
  mdc_settings_init(&base);
  int jobs = 1;

  const auto add_model_flags = [&](CLI::App* cmd) {
    cmd->add_option("--problem", problem,
                    "pack-sphere | pack-box | kissing");
    cmd->add_option("--n", n, "number of spheres");
    cmd->add_option("--dim", dim, "dimension (2 or 3)");
    cmd->add_option("--instance", instance_file, "instance JSON file");
  };
  const auto add_solver_flags = [&](CLI::App* cmd) {
    cmd->add_option("--heur", base.heur, "0: facet shrink + propagation, 1: propagation")
        ->check(CLI::Range(0, 1));
    cmd->add_option("--pair", base.pair, "1: pair reductions")
        ->check(CLI::Range(0, 1));
    cmd->add_option("--rotsym", base.rotsym, "1: rotation-symmetry cuts")
        ->check(CLI::Range(0, 1));
    cmd->add_option("--cutfreq", base.cutfreq,
                    "simplex cut frequency: 0 off, 1, 10")
        ->check(CLI::IsMember({0, 1, 10}));
    cmd->add_option("--gap", base.gap, "relative optimality gap");
    cmd->add_option("--time-limit", base.time_limit, "seconds per solve");
    cmd->add_option("--node-limit", base.node_limit, "max nodes per solve");
    cmd->add_option("--seed", base.seed, "RNG seed");
  };

  auto* cmd_solve = app.add_subcommand("solve", "solve one instance");
  add_model_flags(cmd_solve);
  add_solver_flags(cmd_solve);
  cmd_solve->add_option("--out", out_path, "append one CSV row here");
  bool no_reductions = false;
  cmd_solve->add_flag("--no-reductions", no_reductions,
                      "disable all minDC reductions");

  auto* cmd_suite = app.add_subcommand("suite", "run a settings grid");
  add_model_flags(cmd_suite);
  add_solver_flags(cmd_suite);
  int n_min = 0, n_max = 0;
  std::string settings_csv =
      "default,heur_0_pair_0,heur_1_pair_0,heur_0_pair_1,heur_1_pair_1";
  cmd_suite->add_option("--n-min", n_min, "first n of the range");
  cmd_suite->add_option("--n-max", n_max, "last n of the range");
  cmd_suite->add_option("--settings", settings_csv,
                        "comma-separated setting names");
  cmd_suite->add_option("--jobs", jobs, "parallel instance fan-out");
  cmd_suite->add_option("--out", out_path, "results CSV")->required();

  auto* cmd_profile = app.add_subcommand("profile", "performance profiles");
  std::string metric = "time";
  std::string in_csv;
  cmd_profile->add_option("--metric", metric, "time | gap")
      ->check(CLI::IsMember({"time", "gap"}));
  cmd_profile->add_option("--in", in_csv, "results CSV from suite")
      ->required();
  cmd_profile->add_option("--out", out_path, "profile CSV")->required();

  auto* cmd_gen = app.add_subcommand("gen", "write an instance JSON file");
  add_model_flags(cmd_gen);
  cmd_gen->add_option("--out", out_path, "instance JSON path")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_profile->parsed()) {
      profile_data(in_csv, metric, out_path);
      return 0;
    }

    if (cmd_gen->parsed()) {
      InstanceHandle h = build_instance(problem, n, dim);
      if (mdc_instance_save(h.ptr, out_path.c_str()) != MDC_OK)
        throw std::runtime_error(mdc_last_error());
      return 0;
    }

    if (cmd_solve->parsed()) {
      InstanceHandle h;
      if (!instance_file.empty()) {
        if (mdc_instance_load(instance_file.c_str(), &h.ptr) != MDC_OK)
          throw std::runtime_error(mdc_last_error());
      } else {
        h = build_instance(problem, n, dim);
      }
      if (no_reductions) base.mindc_reductions = 0;
      NamedSetting ns{"custom", base};
      const RunRecord row = run_one(h.ptr, ns);
      std::cout << "instance: " << row.instance << "\n"
                << "status:   " << row.status << "\n"
                << "primal:   " << fmt(row.primal) << "\n"
                << "dual:     " << fmt(row.dual) << "\n"
                << "gap:      " << fmt(row.gap) << "\n"
                << "nodes:    " << row.nodes << "\n"
                << "time_s:   " << fmt(row.time_s) << "\n";
      if (!out_path.empty()) write_csv(out_path, {row});
      return row.status == "Error" ? 1 : 0;
    }

    // suite
    std::vector<InstanceHandle> instances;
    if (!instance_file.empty()) {
      for (const std::string& f : split(instance_file, ',')) {
        InstanceHandle h;
        if (mdc_instance_load(f.c_str(), &h.ptr) != MDC_OK)
          throw std::runtime_error(mdc_last_error());
        instances.push_back(std::move(h));
      }
    } else {
      if (n_min == 0) n_min = n;
      if (n_max == 0) n_max = n_min;
      for (int k = n_min; k <= n_max; ++k)
        instances.push_back(build_instance(problem, k, dim));
    }

    std::vector<NamedSetting> named;
    for (const std::string& name : split(settings_csv, ',')) {
      NamedSetting ns{name, settings_for(name, base)};
      if (base.rotsym) ns.name += "_rotsym";
      named.push_back(std::move(ns));
    }

    std::vector<RunRecord> rows(instances.size() * named.size());
    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
      while (true) {
        const std::size_t k = next.fetch_add(1);
        if (k >= rows.size()) return;
        const std::size_t ii = k / named.size();
        const std::size_t si = k % named.size();
        rows[k] = run_one(instances[ii].ptr, named[si]);
      }
    };
    if (jobs <= 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
      for (auto& th : pool) th.join();
    }
    write_csv(out_path, rows);
    for (const RunRecord& r : rows)
      if (r.status == "Error") return 1;
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
