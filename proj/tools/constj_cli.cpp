// constj: catalog, verify, zeta and report commands over the C interface.

#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "constj/constj.h"

namespace {

struct Options {
  std::string jcase = "0";
  std::uint64_t p = 0;
  std::string pattern;
  std::string roots;
  int imax = -1;
  std::string cache_dir;
  std::string format = "text";
  int jobs = 1;
  bool timing = false;
};

int status_exit(cj_status st) {
  std::cerr << "error: " << cj_last_error() << "\n";
  switch (st) {
    case CJ_ERR_VALIDATION:
    case CJ_ERR_MISSING_COUNTS:
      return 1;
    default:
      return 2;
  }
}

bool parse_jcase(const std::string& s, cj_jcase* out) {
  if (s == "0" || s == "J0" || s == "j0") return *out = CJ_J0, true;
  if (s == "1728" || s == "J1728" || s == "j1728") return *out = CJ_J1728, true;
  return false;
}

bool parse_format(const std::string& s, cj_format* out) {
  if (s == "text") return *out = CJ_FORMAT_TEXT, true;
  if (s == "json") return *out = CJ_FORMAT_JSON, true;
  if (s == "csv") return *out = CJ_FORMAT_CSV, true;
  return false;
}

void add_common(CLI::App* sub, Options& o, bool pipeline) {
  sub->add_option("--jcase", o.jcase, "0 or 1728")->capture_default_str();
  sub->add_option("--format", o.format, "text, json or csv")->capture_default_str();
  if (!pipeline) return;
  sub->add_option("--p", o.p, "prime characteristic");
  sub->add_option("--pattern", o.pattern, "multiplicities, e.g. 5,5,5,3")->required();
  sub->add_option("--roots", o.roots, "places, e.g. 0,1,inf,2 or poly:c0:c1:c2:1");
  sub->add_option("--imax", o.imax, "count every cover up to this extension degree");
  sub->add_option("--cache-dir", o.cache_dir, "directory for counts.cache");
  sub->add_option("--jobs", o.jobs, "threads for the point-count sweep")->capture_default_str();
  sub->add_flag("--timing", o.timing, "include wall-clock time in the report");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Constant-j elliptic surfaces: catalog, zeta functions and supersingularity checks"};
  app.set_version_flag("--version", std::string(cj_version()));
  app.require_subcommand(1);
  Options o;
  auto* catalog = app.add_subcommand("catalog", "print the factorization catalog");
  auto* verify = app.add_subcommand("verify", "run the full pipeline and check Artin supersingularity");
  auto* zeta = app.add_subcommand("zeta", "point counts, L-polynomials and Newton polygons");
  auto* report = app.add_subcommand("report", "curve and surface invariants (no counting)");
  add_common(catalog, o, false);
  for (auto* sub : {verify, zeta, report}) add_common(sub, o, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  cj_jcase jcase;
  cj_format format;
  if (!parse_jcase(o.jcase, &jcase)) {
    std::cerr << "error: --jcase must be 0 or 1728\n";
    return 1;
  }
  if (!parse_format(o.format, &format)) {
    std::cerr << "error: --format must be text, json or csv\n";
    return 1;
  }

  char* text = nullptr;
  if (catalog->parsed()) {
    if (cj_status st = cj_catalog_render(jcase, format, &text); st != CJ_OK) return status_exit(st);
    std::fputs(text, stdout);
    cj_string_free(text);
    return 0;
  }

  cj_run_config cfg;
  cj_run_config_init(&cfg);
  cfg.command = verify->parsed() ? CJ_CMD_VERIFY : zeta->parsed() ? CJ_CMD_ZETA : CJ_CMD_REPORT;
  cfg.jcase = jcase;
  cfg.p = o.p;
  cfg.pattern = o.pattern.c_str();
  cfg.roots = o.roots.c_str();
  cfg.i_max = o.imax;
  cfg.cache_dir = o.cache_dir.c_str();
  cfg.jobs = o.jobs;
  cfg.timing = o.timing ? 1 : 0;

  cj_report* rep = nullptr;
  if (cj_status st = cj_run(&cfg, &rep); st != CJ_OK) return status_exit(st);
  for (std::size_t i = 0; i < cj_report_warning_count(rep); ++i) std::cerr << "warning: " << cj_report_warning(rep, i) << "\n";
  if (cj_status st = cj_report_render(rep, format, &text); st != CJ_OK) {
    cj_report_destroy(rep);
    return status_exit(st);
  }
  std::fputs(text, stdout);
  cj_string_free(text);
  const int rc = cj_report_exit_code(rep);
  cj_report_destroy(rep);
  return rc;
}
