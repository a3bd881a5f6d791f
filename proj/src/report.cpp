#include "constj/report.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>

#include "json.hpp"

#include "constj/version.hpp"

namespace constj::report {

using nlohmann::ordered_json;

Command parse_command(std::string_view text) {
  if (text == "catalog") return Command::Catalog;
  if (text == "verify") return Command::Verify;
  if (text == "zeta") return Command::Zeta;
  if (text == "report") return Command::Report;
  throw ValidationError("unknown command '" + std::string(text) + "'");
}

Format parse_format(std::string_view text) {
  if (text == "text") return Format::Text;
  if (text == "json") return Format::Json;
  if (text == "csv") return Format::Csv;
  throw ValidationError("unknown format '" + std::string(text) + "' (expected text, json or csv)");
}

std::string to_string(Command c) {
  switch (c) {
    case Command::Catalog: return "catalog";
    case Command::Verify: return "verify";
    case Command::Zeta: return "zeta";
    case Command::Report: return "report";
  }
  return {};
}

int Report::exit_code() const {
  if (config.command == Command::Verify && verdict && verdict->falsified()) return 2;
  return 0;
}

namespace {

SideInvariants side_invariants(const forms::FactoredForm& f) {
  SideInvariants s;
  s.surface = surface::invariants(f);
  if (taxonomy::is_partner_rational(f) || taxonomy::is_partner_rational(forms::complement(f))) {
    s.mw_rank = surface::mw_rank_char0(f);
  }
  if (taxonomy::is_partner_rational(f)) s.ns_perp = surface::ns_perp_check(f);
  return s;
}

forms::FactoredForm build_form(const RunConfig& cfg) {
  if (cfg.pattern.empty()) throw ValidationError("--pattern is required");
  if (!cfg.p) {
    if (!cfg.roots.empty()) throw ValidationError("--roots needs --p");
    return forms::abstract_form(cfg.jcase, cfg.pattern);
  }
  const std::uint64_t p = *cfg.p;
  if (!gf::is_prime(p) || p <= 3) throw ValidationError("p must be prime > 3 (got " + std::to_string(p) + ")");
  const auto places = cfg.roots.empty() ? forms::default_places(static_cast<int>(cfg.pattern.size()), p)
                                        : forms::parse_places(cfg.roots, p);
  return forms::concrete_form(cfg.jcase, cfg.pattern, places, p);
}

}  // namespace

Report run(const RunConfig& config) {
  const auto started = std::chrono::steady_clock::now();
  if (config.command == Command::Catalog) throw ValidationError("catalog is rendered with render_catalog");
  if (config.jobs < 1) throw ValidationError("--jobs must be >= 1");
  if (config.i_max && *config.i_max < 0) throw ValidationError("--imax must be >= 0");
  if ((config.command == Command::Verify || config.command == Command::Zeta) && !config.p) {
    throw ValidationError("--p is required for " + to_string(config.command));
  }

  Report rep;
  rep.config = config;
  rep.form = build_form(config);
  rep.partner = forms::complement(rep.form);
  rep.row = taxonomy::make_row(config.jcase, rep.form.pattern());
  rep.partner_rational = taxonomy::is_partner_rational(rep.form);

  const int N = forms::cover_order(config.jcase);
  for (int a = 2; a <= N; ++a) {
    if (N % a != 0) continue;
    rep.covers.push_back({a, curve::genus(rep.form, a), curve::components(rep.form, a), curve::h1_dim(rep.form, a),
                          curve::chi_singular(rep.form, a), curve::branch_correction(rep.form, a)});
  }
  rep.eigen = curve::eigenspace_dims(rep.form);
  rep.f_side = side_invariants(rep.form);
  rep.g_side = side_invariants(rep.partner);

  if (config.command == Command::Verify && !rep.partner_rational) {
    throw ValidationError("verify needs a catalog pattern (partner surface rational); pattern " +
                          forms::pattern_to_string(rep.form.pattern()) + " is not one");
  }

  if (config.command == Command::Verify || config.command == Command::Zeta) {
    std::optional<count::CountCache> cache;
    if (!config.cache_dir.empty()) cache.emplace(config.cache_dir);
    lfunc::ZetaOptions zopts;
    zopts.i_max = config.i_max;
    zopts.cache = cache ? &*cache : nullptr;
    zopts.sweep.jobs = config.jobs;
    rep.zeta = lfunc::compute_zeta(rep.form, zopts);
    rep.warnings = rep.zeta->stats.warnings;
    if (config.command == Command::Verify) rep.verdict = lfunc::verdict(rep.form, *rep.zeta);
  }

  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return rep;
}

// ---------------------------------------------------------------------------

bool exact_in_double(Int v) {
  constexpr Int limit = Int{1} << 53;
  return v <= limit && v >= -limit;
}

namespace {

ordered_json json_int(Int v) {
  if (exact_in_double(v)) return static_cast<long long>(v);
  return constj::to_string(v);
}

ordered_json json_ints(const std::vector<Int>& vs) {
  ordered_json arr = ordered_json::array();
  for (auto v : vs) arr.push_back(json_int(v));
  return arr;
}

ordered_json json_polygon(const lfunc::NewtonPolygon& poly) {
  ordered_json arr = ordered_json::array();
  for (const auto& s : poly.segments) arr.push_back({{"slope", s.slope.to_string()}, {"length", s.length}});
  return arr;
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", v);
  return buf;
}

// Root token accepted by forms::parse_place.
std::string place_token(const forms::Place& pl, std::uint64_t p) {
  if (pl.kind() == forms::Place::Kind::Infinity) return "inf";
  const auto& c = pl.coeffs();
  if (c.size() == 2) return std::to_string((p - c[0]) % p);
  std::string out = "poly";
  for (auto v : c) out += ":" + std::to_string(v);
  return out;
}

ordered_json json_side(const SideInvariants& s) {
  ordered_json fibers = ordered_json::array();
  for (const auto& fib : s.surface.fibers) fibers.push_back(fib.symbol);
  ordered_json j = {{"n", s.surface.n},
                    {"k", s.surface.k},
                    {"fibers", fibers},
                    {"euler", s.surface.euler},
                    {"chi_O", s.surface.chi_O},
                    {"p_g", s.surface.p_g},
                    {"b2", s.surface.b2},
                    {"h11", s.surface.h11},
                    {"family_dimension", s.surface.family_dimension}};
  j["mw_rank_char0"] = s.mw_rank ? ordered_json(*s.mw_rank) : ordered_json(nullptr);
  j["ns_perp_check"] = s.ns_perp ? ordered_json(*s.ns_perp) : ordered_json(nullptr);
  return j;
}

ordered_json json_catalog_row(const taxonomy::CatalogRow& row, bool excluded) {
  return {{"pattern", forms::pattern_to_string(row.pattern)},
          {"form", row.form},
          {"n", row.n},
          {"k", row.k},
          {"surface_class", taxonomy::to_string(row.surface_class)},
          {"torelli_failure", row.torelli_failure_expected ? "X" : "-"},
          {"bcu_congruence", row.supersingular_congruence},
          {"status", excluded ? "X_f rational - excluded" : "catalog"}};
}

ordered_json to_json(const Report& rep) {
  ordered_json j;
  const auto& cfg = rep.config;
  ordered_json roots = ordered_json::array();
  if (rep.form.is_concrete()) {
    for (const auto& fac : rep.form.factors()) roots.push_back(place_token(fac.place, rep.form.p()));
  }
  j["config"] = {{"command", to_string(cfg.command)},
                 {"jcase", forms::to_string(cfg.jcase)},
                 {"p", cfg.p ? ordered_json(*cfg.p) : ordered_json(nullptr)},
                 {"pattern", forms::pattern_to_string(cfg.pattern)},
                 {"roots", roots},
                 {"imax", cfg.i_max ? ordered_json(*cfg.i_max) : ordered_json(nullptr)}};

  j["taxonomy"] = {{"form", rep.form.display()},
                   {"partner", rep.partner.display()},
                   {"weierstrass_row", rep.row.form},
                   {"n", rep.row.n},
                   {"k", rep.row.k},
                   {"surface_class", taxonomy::to_string(rep.row.surface_class)},
                   {"partner_rational", rep.partner_rational},
                   {"in_catalog", rep.partner_rational && rep.row.k >= 3},
                   {"torelli_failure_expected", rep.row.torelli_failure_expected},
                   {"supersingular_congruence", rep.row.supersingular_congruence}};

  ordered_json covers = ordered_json::array();
  for (const auto& c : rep.covers) {
    covers.push_back({{"a", c.a},
                      {"genus", c.genus},
                      {"components", c.components},
                      {"h1", c.h1},
                      {"chi_singular", c.chi_singular},
                      {"branch_correction", c.branch_correction}});
  }
  j["curve"] = {{"covers", covers}, {"eigen_dims", rep.eigen.dims}};
  j["surface"] = {{"f", json_side(rep.f_side)}, {"g", json_side(rep.g_side)}};

  if (rep.zeta) {
    ordered_json counts = ordered_json::array();
    ordered_json lf = ordered_json::array();
    for (const auto& cz : rep.zeta->covers) {
      counts.push_back({{"a", cz.a}, {"counts", json_ints(cz.series.counts)}});
      lf.push_back({{"a", cz.a},
                    {"genus", cz.genus},
                    {"components", cz.components},
                    {"coefficients", json_ints(cz.L.coeffs)},
                    {"newton_polygon", json_polygon(cz.polygon)},
                    {"root_modulus_deviation", sci(cz.root_deviation)},
                    {"redundancy_levels", cz.redundancy_levels}});
    }
    j["counts"] = counts;
    j["lfunctions"] = {{"covers", lf},
                       {"new_factor",
                        {{"coefficients", json_ints(rep.zeta->new_factor.coeffs)},
                         {"degree", rep.zeta->new_factor.degree()},
                         {"newton_polygon", json_polygon(rep.zeta->new_factor_polygon)},
                         {"pure_slope_half", lfunc::is_pure_half(rep.zeta->new_factor, rep.zeta->p)}}}};
  } else {
    j["counts"] = nullptr;
    j["lfunctions"] = nullptr;
  }

  if (rep.verdict) {
    const auto& v = *rep.verdict;
    j["verdict"] = {{"theorem_applicable", v.theorem_applicable},
                    {"curve_new_factor_pure", v.curve_new_factor_pure},
                    {"E_trace", json_int(v.e_trace)},
                    {"E_supersingular", v.E_supersingular},
                    {"surface_artin_supersingular", v.surface_artin_supersingular},
                    {"falsified", v.falsified()}};
  } else {
    j["verdict"] = nullptr;
  }

  j["meta"] = {{"tool_version", kToolVersion},
               {"assumption", "Picard number in characteristic 0 taken to be h11"}};
  if (cfg.timing) j["meta"]["seconds"] = rep.seconds;
  return j;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string scalar_text(const ordered_json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void flatten(const ordered_json& j, const std::string& path, std::ostringstream& os) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), os);
  } else if (j.is_array()) {
    bool scalar = std::all_of(j.begin(), j.end(), [](const ordered_json& e) { return e.is_primitive(); });
    if (scalar) {
      std::string joined;
      for (std::size_t i = 0; i < j.size(); ++i) joined += (i ? " " : "") + scalar_text(j[i]);
      os << csv_escape(path) << ',' << csv_escape(joined) << '\n';
    } else {
      for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "." + std::to_string(i), os);
    }
  } else {
    os << csv_escape(path) << ',' << csv_escape(scalar_text(j)) << '\n';
  }
}

std::string render_text(const Report& rep) {
  std::ostringstream os;
  const auto& cfg = rep.config;
  os << to_string(cfg.command) << ": " << forms::to_string(cfg.jcase) << ", pattern ("
     << forms::pattern_to_string(rep.form.pattern()) << ")";
  if (cfg.p) os << ", p = " << *cfg.p;
  os << "\n";
  os << "  f = " << rep.form.display() << "\n  g = " << rep.partner.display() << "\n";
  os << "  n = " << rep.row.n << ", k = " << rep.row.k << ", X_f " << taxonomy::to_string(rep.row.surface_class)
     << ", X_g " << (rep.partner_rational ? "rational" : "not rational") << "\n\n";

  os << "curves u^a = f\n";
  for (const auto& c : rep.covers) {
    os << "  a = " << c.a << ": genus " << c.genus << ", components " << c.components << ", h1 " << c.h1
       << ", chi(singular) " << c.chi_singular << ", branch correction " << c.branch_correction << "\n";
  }
  os << "  eigenspace dims (j = 0.." << rep.eigen.dims.size() - 1 << "):";
  for (int d : rep.eigen.dims) os << ' ' << d;
  os << "\n\n";

  auto side = [&](const char* name, const SideInvariants& s) {
    os << "  " << name << ": fibers";
    for (const auto& fib : s.surface.fibers) os << ' ' << fib.symbol;
    os << "; e = " << s.surface.euler << ", p_g = " << s.surface.p_g << ", b2 = " << s.surface.b2
       << ", h11 = " << s.surface.h11;
    if (s.mw_rank) os << ", MW rank (char 0) = " << *s.mw_rank;
    if (s.ns_perp) os << ", NS-perp check " << (*s.ns_perp ? "ok" : "FAILED");
    os << "\n";
  };
  os << "surfaces\n";
  side("X_f", rep.f_side);
  side("X_g", rep.g_side);

  if (rep.zeta) {
    os << "\nzeta functions over F_" << rep.zeta->p << "\n";
    for (const auto& cz : rep.zeta->covers) {
      os << "  u^" << cz.a << " = f (genus " << cz.genus << ")\n    N(p^i):";
      for (auto c : cz.series.counts) os << ' ' << constj::to_string(c);
      os << "\n    L = " << cz.L.to_string() << "\n    Newton polygon " << cz.polygon.to_string()
         << ", max | |alpha|/sqrt(q) - 1 | = " << sci(cz.root_deviation) << "\n";
    }
    os << "  new factor = " << rep.zeta->new_factor.to_string() << " (degree " << rep.zeta->new_factor.degree()
       << "), Newton polygon " << rep.zeta->new_factor_polygon.to_string() << "\n";
  }
  if (rep.verdict) {
    const auto& v = *rep.verdict;
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    os << "\nverdict\n"
       << "  theorem applicable (" << rep.row.supersingular_congruence << "): " << yn(v.theorem_applicable) << "\n"
       << "  new factor pure slope 1/2:       " << yn(v.curve_new_factor_pure) << "\n"
       << "  E supersingular (a_p = " << constj::to_string(v.e_trace) << "):  " << yn(v.E_supersingular) << "\n"
       << "  X_f Artin supersingular:         " << yn(v.surface_artin_supersingular) << "\n";
    if (v.falsified()) os << "  ERROR: theorem applies but verification failed\n";
  }
  if (cfg.timing) os << "\n" << rep.seconds << " s\n";
  return os.str();
}

}  // namespace

std::string render(const Report& report, Format format) {
  switch (format) {
    case Format::Json:
      return to_json(report).dump(2) + "\n";
    case Format::Csv: {
      std::ostringstream os;
      os << "key,value\n";
      flatten(to_json(report), "", os);
      return os.str();
    }
    case Format::Text:
      return render_text(report);
  }
  return {};
}

std::string render_catalog(forms::JCase jcase, Format format) {
  std::vector<ordered_json> rows;
  for (const auto& r : taxonomy::catalog(jcase)) rows.push_back(json_catalog_row(r, false));
  for (const auto& r : taxonomy::excluded_rows(jcase)) rows.push_back(json_catalog_row(r, true));
  static const char* const columns[] = {"pattern", "form", "n", "k", "surface_class", "torelli_failure",
                                        "bcu_congruence", "status"};

  if (format == Format::Json) {
    ordered_json j = {{"jcase", forms::to_string(jcase)},
                      {"weierstrass", jcase == forms::JCase::J0 ? "y^2=x^3+f(s,t)" : "y^2=x^3+g(s,t)x"},
                      {"rows", rows}};
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  if (format == Format::Csv) {
    for (std::size_t c = 0; c < std::size(columns); ++c) os << (c ? "," : "") << columns[c];
    os << '\n';
    for (const auto& r : rows) {
      for (std::size_t c = 0; c < std::size(columns); ++c) os << (c ? "," : "") << csv_escape(scalar_text(r[columns[c]]));
      os << '\n';
    }
    return os.str();
  }
  const char* lhs = jcase == forms::JCase::J0 ? "y^2=x^3+f(s,t)" : "y^2=x^3+g(s,t)x";
  os << lhs << "\n";
  char line[256];
  std::snprintf(line, sizeof line, "%-42s %-3s %-3s %-14s %-8s %-14s %s\n", "form", "n", "k", "X_f", "Torelli",
                "BCU if", "status");
  os << line;
  for (const auto& r : rows) {
    std::snprintf(line, sizeof line, "%-42s %-3d %-3d %-14s %-8s %-14s %s\n", r["form"].get<std::string>().c_str(),
                  r["n"].get<int>(), r["k"].get<int>(), r["surface_class"].get<std::string>().c_str(),
                  r["torelli_failure"].get<std::string>().c_str(), r["bcu_congruence"].get<std::string>().c_str(),
                  r["status"].get<std::string>().c_str());
    os << line;
  }
  return os.str();
}

}  // namespace constj::report
