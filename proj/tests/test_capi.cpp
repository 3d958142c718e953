#include <cstdio>
#include <string>
#include <vector>

#include "doctest.h"
#include "mindist/mindist.h"

TEST_CASE("C API settings defaults") {
  mdc_settings s;
  mdc_settings_init(&s);
  CHECK(s.mindc_reductions == 1);
  CHECK(s.heur == 0);
  CHECK(s.pair == 0);
  CHECK(s.rotsym == 0);
  CHECK(s.cutfreq == 0);
  CHECK(s.gap == doctest::Approx(0.005));
  CHECK(s.time_limit == doctest::Approx(7200.0));
}

TEST_CASE("C API build, solve, and inspect") {
  mdc_instance* inst = nullptr;
  REQUIRE(mdc_instance_pack_in_sphere(2, 2, 0, &inst) == MDC_OK);
  REQUIRE(inst != nullptr);
  CHECK(mdc_instance_num_vars(inst) == 6);
  CHECK(std::string(mdc_instance_name(inst)) == "pack-sphere-n2-d2");

  mdc_settings s;
  mdc_settings_init(&s);
  s.time_limit = 120.0;
  mdc_result* res = nullptr;
  REQUIRE(mdc_solve(inst, &s, &res) == MDC_OK);
  REQUIRE(res != nullptr);
  const mdc_solve_status st = mdc_result_status(res);
  CHECK((st == MDC_STATUS_OPTIMAL || st == MDC_STATUS_GAP_REACHED));
  CHECK(mdc_result_has_incumbent(res) == 1);
  CHECK(mdc_result_primal(res) == doctest::Approx(0.5).epsilon(0.005));
  CHECK(mdc_result_dual(res) >= mdc_result_primal(res) - 1e-9);
  CHECK(mdc_result_gap(res) <= 0.005 + 1e-12);
  CHECK(mdc_result_nodes(res) >= 1);
  CHECK(mdc_result_reductions(res, MDC_RED_PROP1) >= 0);

  std::vector<double> buf(16, 0.0);
  const int written = mdc_result_solution(res, buf.data(), 16);
  CHECK(written == 6);

  mdc_result_free(res);
  mdc_instance_free(inst);
}

TEST_CASE("C API save and load round trip") {
  mdc_instance* inst = nullptr;
  REQUIRE(mdc_instance_kissing(5, 2, &inst) == MDC_OK);
  const char* path = "capi_roundtrip_tmp.json";
  REQUIRE(mdc_instance_save(inst, path) == MDC_OK);

  mdc_instance* loaded = nullptr;
  REQUIRE(mdc_instance_load(path, &loaded) == MDC_OK);
  CHECK(mdc_instance_num_vars(loaded) == mdc_instance_num_vars(inst));
  CHECK(std::string(mdc_instance_name(loaded)) ==
        std::string(mdc_instance_name(inst)));

  mdc_instance_free(loaded);
  mdc_instance_free(inst);
  std::remove(path);
}

TEST_CASE("C API error paths") {
  CHECK(mdc_instance_pack_in_sphere(1, 2, 0, nullptr) ==
        MDC_ERR_INVALID_ARGUMENT);

  mdc_instance* inst = nullptr;
  CHECK(mdc_instance_pack_in_sphere(1, 2, 0, &inst) ==
        MDC_ERR_INVALID_ARGUMENT);
  CHECK(inst == nullptr);
  CHECK(std::string(mdc_last_error()).size() > 0);

  CHECK(mdc_instance_load("does_not_exist_4242.json", &inst) == MDC_ERR_IO);

  const char* bad_path = "capi_bad_tmp.json";
  {
    FILE* f = std::fopen(bad_path, "w");
    std::fputs("{\"version\": 1, not json", f);
    std::fclose(f);
  }
  CHECK(mdc_instance_load(bad_path, &inst) == MDC_ERR_PARSE);
  std::remove(bad_path);

  // Invalid settings are rejected.
  mdc_instance* ok = nullptr;
  REQUIRE(mdc_instance_pack_in_box(2, 2, &ok) == MDC_OK);
  mdc_settings s;
  mdc_settings_init(&s);
  s.gap = -1.0;
  mdc_result* res = nullptr;
  CHECK(mdc_solve(ok, &s, &res) == MDC_ERR_INVALID_ARGUMENT);
  CHECK(res == nullptr);
  mdc_instance_free(ok);

  CHECK(std::string(mdc_version()).size() > 0);
  CHECK(std::string(mdc_status_name(MDC_STATUS_OPTIMAL)) == "Optimal");
}
