#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "constj/constj.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  cj_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("version and errors") {
  CHECK(std::string(cj_version()).size() > 0);
  cj_field* f = nullptr;
  CHECK(cj_field_create(4, 1, &f) == CJ_ERR_VALIDATION);
  CHECK(f == nullptr);
  CHECK(std::string(cj_last_error()).find("prime") != std::string::npos);
  CHECK(cj_field_create(5, 1, nullptr) == CJ_ERR_VALIDATION);
}

TEST_CASE("fields") {
  cj_field* f = nullptr;
  REQUIRE(cj_field_create(5, 2, &f) == CJ_OK);
  char* q = nullptr;
  REQUIRE(cj_field_order(f, &q) == CJ_OK);
  CHECK(take(q) == "25");
  std::uint64_t n = 0;
  CHECK(cj_nth_power_count(f, 0, 6, &n) == CJ_OK);
  CHECK(n == 1);
  CHECK(cj_nth_power_count(f, 1, 6, &n) == CJ_OK);
  CHECK(n == 6);  // gcd(6, 24) = 6
  CHECK(cj_nth_power_count(f, 25, 6, &n) == CJ_ERR_VALIDATION);
  cj_field_destroy(f);
}

TEST_CASE("forms and curves") {
  cj_form* f = nullptr;
  REQUIRE(cj_form_create(CJ_J0, "5,5,5,3", "0,1,inf,2", 5, &f) == CJ_OK);
  CHECK(cj_form_n(f) == 3);
  CHECK(cj_form_k(f) == 4);
  int g = -1;
  CHECK(cj_genus(f, 6, &g) == CJ_OK);
  CHECK(g == 4);
  CHECK(cj_genus(f, 4, &g) == CJ_ERR_VALIDATION);
  int dims[6] = {};
  CHECK(cj_eigenspace_dims(f, dims, 6) == CJ_OK);
  CHECK(dims[1] == 2);
  CHECK(cj_eigenspace_dims(f, dims, 3) == CJ_ERR_VALIDATION);

  cj_form* c = nullptr;
  REQUIRE(cj_form_complement(f, &c) == CJ_OK);
  cj_field* F = nullptr;
  REQUIRE(cj_field_create(5, 2, &F) == CJ_OK);
  char* a = nullptr;
  char* b = nullptr;
  REQUIRE(cj_count_points(f, 6, F, 1, &a) == CJ_OK);
  REQUIRE(cj_count_points(c, 6, F, 2, &b) == CJ_OK);
  CHECK(take(a) == take(b));
  char* key = nullptr;
  REQUIRE(cj_form_key(f, &key) == CJ_OK);
  CHECK(take(key).rfind("J0|p5|", 0) == 0);
  cj_field_destroy(F);
  cj_form_destroy(c);
  cj_form_destroy(f);

  cj_form* bad = nullptr;
  CHECK(cj_form_create(CJ_J0, "5,5,5,3", "0,1,inf,1", 5, &bad) == CJ_ERR_VALIDATION);
  CHECK(cj_form_create(CJ_J0, "6", nullptr, 5, &bad) == CJ_ERR_VALIDATION);
  CHECK(std::string(cj_last_error()).find("multiplicity 6 > 5") != std::string::npos);
}

TEST_CASE("commands") {
  char* text = nullptr;
  REQUIRE(cj_catalog_render(CJ_J1728, CJ_FORMAT_CSV, &text) == CJ_OK);
  CHECK(take(text).find("t^3(t-s)^3s^2") != std::string::npos);

  cj_run_config cfg;
  cj_run_config_init(&cfg);
  cfg.pattern = "5,5,5,3";
  cfg.roots = "0,1,inf,2";
  cfg.p = 5;
  cj_report* rep = nullptr;
  REQUIRE(cj_run(&cfg, &rep) == CJ_OK);
  CHECK(cj_report_exit_code(rep) == 0);
  int sweeps = -1, hits = -1;
  CHECK(cj_report_stats(rep, &sweeps, &hits) == CJ_OK);
  CHECK(sweeps == 5);
  CHECK(hits == 0);
  REQUIRE(cj_report_render(rep, CJ_FORMAT_JSON, &text) == CJ_OK);
  CHECK(take(text).find("\"surface_artin_supersingular\": true") != std::string::npos);
  cj_report_destroy(rep);

  cfg.i_max = 2;
  CHECK(cj_run(&cfg, &rep) == CJ_ERR_MISSING_COUNTS);
  cfg.i_max = -1;
  cfg.p = 0;
  CHECK(cj_run(&cfg, &rep) == CJ_ERR_VALIDATION);
}
