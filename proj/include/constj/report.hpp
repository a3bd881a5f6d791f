#pragma once

// Pipeline orchestration behind the catalog / verify / zeta / report commands.

#include <optional>
#include <string>
#include <vector>

#include "constj/count.hpp"
#include "constj/curve.hpp"
#include "constj/forms.hpp"
#include "constj/lfunc.hpp"
#include "constj/surface.hpp"
#include "constj/taxonomy.hpp"

namespace constj::report {

enum class Command { Catalog, Verify, Zeta, Report };
enum class Format { Text, Json, Csv };

Command parse_command(std::string_view text);
Format parse_format(std::string_view text);
std::string to_string(Command c);

struct RunConfig {
  Command command = Command::Verify;
  forms::JCase jcase = forms::JCase::J0;
  std::optional<std::uint64_t> p;
  forms::Pattern pattern;
  /// Comma-separated root tokens; empty selects the default roots.
  std::string roots;
  std::optional<int> i_max;
  std::string cache_dir;
  int jobs = 1;
  /// Adds wall-clock time to the report (breaks byte-for-byte reproducibility).
  bool timing = false;
};

struct CoverInvariants {
  int a = 0;
  int genus = 0;
  int components = 1;
  int h1 = 0;
  int chi_singular = 0;
  int branch_correction = 0;
};

struct SideInvariants {
  surface::SurfaceInvariants surface;
  std::optional<int> mw_rank;
  std::optional<bool> ns_perp;
};

struct Report {
  RunConfig config;
  forms::FactoredForm form;
  forms::FactoredForm partner;
  taxonomy::CatalogRow row;
  bool partner_rational = false;
  std::vector<CoverInvariants> covers;
  curve::EigenDims eigen;
  SideInvariants f_side;
  SideInvariants g_side;
  std::optional<lfunc::ZetaData> zeta;
  std::optional<lfunc::Verdict> verdict;
  double seconds = 0.0;
  std::vector<std::string> warnings;

  /// 2 when the verdict was applicable and failed, else 0.
  int exit_code() const;
};

/// Builds the form, runs every stage the command needs.
/// Throws ValidationError / MissingCounts on bad input.
Report run(const RunConfig& config);

/// JSON emits integers with |v| > 2^53 as decimal strings.
bool exact_in_double(Int v);

std::string render(const Report& report, Format format);
std::string render_catalog(forms::JCase jcase, Format format);

}  // namespace constj::report
