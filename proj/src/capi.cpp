#include "constj/constj.h"

#include <cstring>
#include <memory>
#include <string>

#include "constj/errors.hpp"
#include "constj/report.hpp"
#include "constj/version.hpp"

struct cj_field {
  constj::gf::Field ctx;
};

struct cj_form {
  constj::forms::FactoredForm form;
};

struct cj_report {
  constj::report::Report report;
};

namespace {

thread_local std::string g_last_error;

template <class F>
cj_status guarded(F&& body) {
  try {
    g_last_error.clear();
    body();
    return CJ_OK;
  } catch (const constj::ValidationError& e) {
    g_last_error = e.what();
    return CJ_ERR_VALIDATION;
  } catch (const constj::MissingCounts& e) {
    g_last_error = e.what();
    return CJ_ERR_MISSING_COUNTS;
  } catch (const constj::CountDataInconsistent& e) {
    g_last_error = e.what();
    return CJ_ERR_INCONSISTENT;
  } catch (const constj::BranchCorrectionInconsistent& e) {
    g_last_error = e.what();
    return CJ_ERR_INCONSISTENT;
  } catch (const constj::InvariantViolation& e) {
    g_last_error = e.what();
    return CJ_ERR_INCONSISTENT;
  } catch (const constj::OverflowError& e) {
    g_last_error = e.what();
    return CJ_ERR_OVERFLOW;
  } catch (const constj::DivisionByZero& e) {
    g_last_error = e.what();
    return CJ_ERR_DIVISION_BY_ZERO;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return CJ_ERR_VALIDATION;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return CJ_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return CJ_ERR_INTERNAL;
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(const void* ptr, const char* what) {
  if (!ptr) throw constj::ValidationError(std::string(what) + " is null");
}

constj::forms::JCase to_jcase(cj_jcase j) {
  if (j == CJ_J0) return constj::forms::JCase::J0;
  if (j == CJ_J1728) return constj::forms::JCase::J1728;
  throw constj::ValidationError("jcase must be 0 or 1728");
}

constj::report::Format to_format(cj_format f) {
  switch (f) {
    case CJ_FORMAT_TEXT: return constj::report::Format::Text;
    case CJ_FORMAT_JSON: return constj::report::Format::Json;
    case CJ_FORMAT_CSV: return constj::report::Format::Csv;
  }
  throw constj::ValidationError("unknown format");
}

constj::report::Command to_command(cj_command c) {
  switch (c) {
    case CJ_CMD_CATALOG: return constj::report::Command::Catalog;
    case CJ_CMD_VERIFY: return constj::report::Command::Verify;
    case CJ_CMD_ZETA: return constj::report::Command::Zeta;
    case CJ_CMD_REPORT: return constj::report::Command::Report;
  }
  throw constj::ValidationError("unknown command");
}

}  // namespace

extern "C" {

const char* cj_version(void) { return constj::kToolVersion; }

const char* cj_last_error(void) { return g_last_error.c_str(); }

void cj_string_free(char* s) { std::free(s); }

cj_status cj_field_create(uint64_t p, int degree, cj_field** out) {
  return guarded([&] {
    require(out, "out");
    *out = new cj_field{constj::gf::make_field(p, degree)};
  });
}

void cj_field_destroy(cj_field* field) { delete field; }

cj_status cj_field_order(const cj_field* field, char** out) {
  return guarded([&] {
    require(field, "field");
    require(out, "out");
    *out = dup(constj::to_string(field->ctx->q()));
  });
}

cj_status cj_nth_power_count(const cj_field* field, uint64_t c_index, int n, uint64_t* out) {
  return guarded([&] {
    require(field, "field");
    require(out, "out");
    if (static_cast<constj::UInt>(c_index) >= field->ctx->q()) throw constj::ValidationError("element index out of range");
    *out = constj::gf::nth_power_count(constj::gf::FieldElement::from_index(field->ctx, c_index), n);
  });
}

cj_status cj_form_create(cj_jcase jcase, const char* pattern, const char* roots, uint64_t p, cj_form** out) {
  return guarded([&] {
    require(pattern, "pattern");
    require(out, "out");
    namespace forms = constj::forms;
    const auto j = to_jcase(jcase);
    const auto pat = forms::parse_pattern(pattern);
    const std::string root_text = roots ? roots : "";
    if (p == 0) {
      if (!root_text.empty()) throw constj::ValidationError("roots need a prime p");
      *out = new cj_form{forms::abstract_form(j, pat)};
      return;
    }
    const auto places = root_text.empty() ? forms::default_places(static_cast<int>(pat.size()), p)
                                           : forms::parse_places(root_text, p);
    *out = new cj_form{forms::concrete_form(j, pat, places, p)};
  });
}

void cj_form_destroy(cj_form* form) { delete form; }

int cj_form_n(const cj_form* form) { return form ? form->form.n() : -1; }

int cj_form_k(const cj_form* form) { return form ? form->form.k() : -1; }

cj_status cj_form_complement(const cj_form* form, cj_form** out) {
  return guarded([&] {
    require(form, "form");
    require(out, "out");
    *out = new cj_form{constj::forms::complement(form->form)};
  });
}

cj_status cj_form_key(const cj_form* form, char** out) {
  return guarded([&] {
    require(form, "form");
    require(out, "out");
    *out = dup(form->form.canonical_key());
  });
}

cj_status cj_form_display(const cj_form* form, char** out) {
  return guarded([&] {
    require(form, "form");
    require(out, "out");
    *out = dup(form->form.display());
  });
}

cj_status cj_genus(const cj_form* form, int a, int* out) {
  return guarded([&] {
    require(form, "form");
    require(out, "out");
    constj::curve::make_curve(form->form, a);
    *out = constj::curve::genus(form->form, a);
  });
}

cj_status cj_components(const cj_form* form, int a, int* out) {
  return guarded([&] {
    require(form, "form");
    require(out, "out");
    constj::curve::make_curve(form->form, a);
    *out = constj::curve::components(form->form, a);
  });
}

cj_status cj_eigenspace_dims(const cj_form* form, int* dims, size_t len) {
  return guarded([&] {
    require(form, "form");
    require(dims, "dims");
    const auto d = constj::curve::eigenspace_dims(form->form);
    if (len < d.dims.size()) throw constj::ValidationError("dims buffer too small");
    for (std::size_t i = 0; i < d.dims.size(); ++i) dims[i] = d.dims[i];
  });
}

cj_status cj_count_points(const cj_form* form, int a, const cj_field* field, int jobs, char** out) {
  return guarded([&] {
    require(form, "form");
    require(field, "field");
    require(out, "out");
    if (jobs < 1) throw constj::ValidationError("jobs must be >= 1");
    const auto curve = constj::curve::make_curve(form->form, a);
    constj::count::SweepOptions opts;
    opts.jobs = jobs;
    *out = dup(constj::to_string(constj::count::count_points(curve, field->ctx, opts)));
  });
}

cj_status cj_catalog_render(cj_jcase jcase, cj_format format, char** out) {
  return guarded([&] {
    require(out, "out");
    *out = dup(constj::report::render_catalog(to_jcase(jcase), to_format(format)));
  });
}

void cj_run_config_init(cj_run_config* cfg) {
  if (!cfg) return;
  *cfg = cj_run_config{};
  cfg->command = CJ_CMD_VERIFY;
  cfg->jcase = CJ_J0;
  cfg->i_max = -1;
  cfg->jobs = 1;
}

cj_status cj_run(const cj_run_config* cfg, cj_report** out) {
  return guarded([&] {
    require(cfg, "config");
    require(out, "out");
    require(cfg->pattern, "pattern");
    constj::report::RunConfig rc;
    rc.command = to_command(cfg->command);
    rc.jcase = to_jcase(cfg->jcase);
    if (cfg->p) rc.p = cfg->p;
    rc.pattern = constj::forms::parse_pattern(cfg->pattern);
    rc.roots = cfg->roots ? cfg->roots : "";
    if (cfg->i_max >= 0) rc.i_max = cfg->i_max;
    rc.cache_dir = cfg->cache_dir ? cfg->cache_dir : "";
    rc.jobs = cfg->jobs;
    rc.timing = cfg->timing != 0;
    auto rep = std::make_unique<cj_report>(cj_report{constj::report::run(rc)});
    *out = rep.release();
  });
}

void cj_report_destroy(cj_report* report) { delete report; }

cj_status cj_report_render(const cj_report* report, cj_format format, char** out) {
  return guarded([&] {
    require(report, "report");
    require(out, "out");
    *out = dup(constj::report::render(report->report, to_format(format)));
  });
}

int cj_report_exit_code(const cj_report* report) { return report ? report->report.exit_code() : 1; }

size_t cj_report_warning_count(const cj_report* report) { return report ? report->report.warnings.size() : 0; }

const char* cj_report_warning(const cj_report* report, size_t i) {
  if (!report || i >= report->report.warnings.size()) return nullptr;
  return report->report.warnings[i].c_str();
}

cj_status cj_report_stats(const cj_report* report, int* sweeps, int* cache_hits) {
  return guarded([&] {
    require(report, "report");
    const auto& z = report->report.zeta;
    if (sweeps) *sweeps = z ? z->stats.sweeps : 0;
    if (cache_hits) *cache_hits = z ? z->stats.cache_hits : 0;
  });
}

}  // extern "C"
