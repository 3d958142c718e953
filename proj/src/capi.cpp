#include "mindist/mindist.h"

#include <algorithm>
#include <cstring>
#include <stdexcept>
#include <string>

#include "mindist/engine.hpp"
#include "mindist/instance.hpp"

struct mdc_instance {
  mindist::Instance impl;
};

struct mdc_result {
  mindist::SolveResult impl;
  std::size_t num_vars = 0;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& msg) { g_last_error = msg; }

template <typename Fn>
int guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const std::invalid_argument& e) {
    set_error(e.what());
    return MDC_ERR_INVALID_ARGUMENT;
  } catch (const std::runtime_error& e) {
    set_error(e.what());
    return MDC_ERR_IO;
  } catch (const std::exception& e) {
    set_error(e.what());
    return MDC_ERR_INTERNAL;
  } catch (...) {
    set_error("unknown error");
    return MDC_ERR_INTERNAL;
  }
}

int check_build_args(int n, int dim, mdc_instance** out) {
  if (!out) {
    set_error("out must not be null");
    return MDC_ERR_INVALID_ARGUMENT;
  }
  *out = nullptr;
  if (n < 2 || dim < 1) {
    set_error("need n >= 2 and dim >= 1");
    return MDC_ERR_INVALID_ARGUMENT;
  }
  return MDC_OK;
}

}  // namespace

extern "C" {

void mdc_settings_init(mdc_settings* settings) {
  if (!settings) return;
  const mindist::Settings d;
  settings->mindc_reductions = d.mindc_reductions ? 1 : 0;
  settings->heur = d.heur;
  settings->pair = d.pair;
  settings->rotsym = d.rotsym ? 1 : 0;
  settings->cutfreq = d.cutfreq;
  settings->lex_rows = d.lex_rows ? 1 : 0;
  settings->lex_cols = d.lex_cols ? 1 : 0;
  settings->gap = d.gap;
  settings->time_limit = d.time_limit;
  settings->node_limit = d.node_limit;
  settings->seed = d.seed;
}

int mdc_instance_pack_in_sphere(int n, int dim, int reflect,
                                mdc_instance** out) {
  const int rc = check_build_args(n, dim, out);
  if (rc != MDC_OK) return rc;
  return guarded([&] {
    mindist::BuildFlags flags;
    flags.reflect_first = reflect != 0;
    *out = new mdc_instance{mindist::build_pack_in_sphere(
        static_cast<std::size_t>(n), static_cast<std::size_t>(dim), flags)};
    return MDC_OK;
  });
}

int mdc_instance_kissing(int n, int dim, mdc_instance** out) {
  const int rc = check_build_args(n, dim, out);
  if (rc != MDC_OK) return rc;
  return guarded([&] {
    *out = new mdc_instance{mindist::build_kissing(
        static_cast<std::size_t>(n), static_cast<std::size_t>(dim))};
    return MDC_OK;
  });
}

int mdc_instance_pack_in_box(int n, int dim, mdc_instance** out) {
  const int rc = check_build_args(n, dim, out);
  if (rc != MDC_OK) return rc;
  return guarded([&] {
    *out = new mdc_instance{mindist::build_pack_in_box(
        static_cast<std::size_t>(n), static_cast<std::size_t>(dim))};
    return MDC_OK;
  });
}

int mdc_instance_load(const char* path, mdc_instance** out) {
  if (!out || !path) {
    set_error("path and out must not be null");
    return MDC_ERR_INVALID_ARGUMENT;
  }
  *out = nullptr;
  const int rc = guarded([&] {
    *out = new mdc_instance{mindist::load_instance(path)};
    return MDC_OK;
  });
  return rc == MDC_ERR_INVALID_ARGUMENT ? MDC_ERR_PARSE : rc;
}

int mdc_instance_save(const mdc_instance* inst, const char* path) {
  if (!inst || !path) {
    set_error("instance and path must not be null");
    return MDC_ERR_INVALID_ARGUMENT;
  }
  return guarded([&] {
    mindist::save_instance(inst->impl, path);
    return MDC_OK;
  });
}

void mdc_instance_free(mdc_instance* inst) { delete inst; }

int mdc_instance_num_vars(const mdc_instance* inst) {
  return inst ? static_cast<int>(inst->impl.num_vars) : 0;
}

const char* mdc_instance_name(const mdc_instance* inst) {
  return inst ? inst->impl.name.c_str() : "";
}

int mdc_solve(const mdc_instance* inst, const mdc_settings* settings,
              mdc_result** out) {
  if (!inst || !out) {
    set_error("instance and out must not be null");
    return MDC_ERR_INVALID_ARGUMENT;
  }
  *out = nullptr;
  return guarded([&] {
    mindist::Settings s;
    if (settings) {
      s.mindc_reductions = settings->mindc_reductions != 0;
      s.heur = settings->heur;
      s.pair = settings->pair;
      s.rotsym = settings->rotsym != 0;
      s.cutfreq = settings->cutfreq;
      s.lex_rows = settings->lex_rows != 0;
      s.lex_cols = settings->lex_cols != 0;
      s.gap = settings->gap;
      s.time_limit = settings->time_limit;
      s.node_limit = settings->node_limit;
      s.seed = settings->seed;
    }
    if (s.gap <= 0.0) throw std::invalid_argument("gap must be positive");
    auto* res = new mdc_result;
    res->impl = mindist::solve(inst->impl, s);
    res->num_vars = inst->impl.num_vars;
    *out = res;
    return MDC_OK;
  });
}

void mdc_result_free(mdc_result* result) { delete result; }

mdc_solve_status mdc_result_status(const mdc_result* result) {
  if (!result) return MDC_STATUS_INFEASIBLE;
  switch (result->impl.status) {
    case mindist::SolveStatus::Optimal: return MDC_STATUS_OPTIMAL;
    case mindist::SolveStatus::GapReached: return MDC_STATUS_GAP_REACHED;
    case mindist::SolveStatus::TimeLimit: return MDC_STATUS_TIME_LIMIT;
    case mindist::SolveStatus::NodeLimit: return MDC_STATUS_NODE_LIMIT;
    case mindist::SolveStatus::Infeasible: return MDC_STATUS_INFEASIBLE;
  }
  return MDC_STATUS_INFEASIBLE;
}

int mdc_result_has_incumbent(const mdc_result* result) {
  return result && result->impl.has_incumbent ? 1 : 0;
}

double mdc_result_primal(const mdc_result* result) {
  return result ? result->impl.incumbent_value : 0.0;
}

double mdc_result_dual(const mdc_result* result) {
  return result ? result->impl.dual_bound : 0.0;
}

double mdc_result_gap(const mdc_result* result) {
  return result ? result->impl.gap : 0.0;
}

long mdc_result_nodes(const mdc_result* result) {
  return result ? result->impl.nodes : 0;
}

double mdc_result_time(const mdc_result* result) {
  return result ? result->impl.time_s : 0.0;
}

long mdc_result_cuts(const mdc_result* result) {
  return result ? result->impl.cuts_added : 0;
}

long mdc_result_reductions(const mdc_result* result,
                           mdc_reduction_kind kind) {
  if (!result) return 0;
  const mindist::ReductionCounters& red = result->impl.reductions;
  switch (kind) {
    case MDC_RED_PROP1: return red.prop1;
    case MDC_RED_LOCATELLI: return red.locatelli;
    case MDC_RED_PAIR_GEO: return red.pair_geo;
    case MDC_RED_PAIR_BISECT: return red.pair_bisect;
  }
  return 0;
}

int mdc_result_solution(const mdc_result* result, double* buf, int len) {
  if (!result || !result->impl.has_incumbent || !buf || len <= 0) return 0;
  const int n = static_cast<int>(
      std::min<std::size_t>(result->impl.incumbent_point.size(),
                            static_cast<std::size_t>(len)));
  std::memcpy(buf, result->impl.incumbent_point.data(),
              static_cast<std::size_t>(n) * sizeof(double));
  return n;
}

const char* mdc_status_name(mdc_solve_status status) {
  switch (status) {
    case MDC_STATUS_OPTIMAL: return "Optimal";
    case MDC_STATUS_GAP_REACHED: return "GapReached";
    case MDC_STATUS_TIME_LIMIT: return "TimeLimit";
    case MDC_STATUS_NODE_LIMIT: return "NodeLimit";
    case MDC_STATUS_INFEASIBLE: return "Infeasible";
  }
  return "Unknown";
}

const char* mdc_last_error(void) { return g_last_error.c_str(); }

const char* mdc_version(void) { return "0.1.0"; }

}  // extern "C"
