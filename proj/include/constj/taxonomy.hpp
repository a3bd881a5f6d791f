#pragma once

#include <string>
#include <vector>

#include "constj/forms.hpp"

namespace constj::taxonomy {

enum class SurfaceClass { Rational, K3, KodairaDim1 };

std::string to_string(SurfaceClass c);

struct CatalogRow {
  forms::Pattern pattern;
  int n = 0;
  int k = 0;
  SurfaceClass surface_class = SurfaceClass::Rational;
  bool torelli_failure_expected = false;
  /// "p = 5 mod 6" or "p = 3 mod 4"
  std::string supersingular_congruence;
  /// Weierstrass coefficient written in the usual t, (t-s), s, (t-αs), ... style.
  std::string form;
};

/// All multisets 1 <= m_i <= N-1 with at least two entries and
/// sum(N - m_i) = N, each nonincreasing; ordered by k, then descending.
std::vector<forms::Pattern> enumerate_patterns(forms::JCase jcase);

SurfaceClass classify_Xf(const forms::Pattern& pattern);

/// deg(complement(f)) == N and k >= 2.
bool is_partner_rational(const forms::FactoredForm& f);
bool is_partner_rational(forms::JCase jcase, const forms::Pattern& pattern);

CatalogRow make_row(forms::JCase jcase, const forms::Pattern& pattern);
/// Rows for every enumerated pattern with k >= 3.
std::vector<CatalogRow> catalog(forms::JCase jcase);
/// Rows for the k = 2 patterns (X_f rational, not part of the catalog).
std::vector<CatalogRow> excluded_rows(forms::JCase jcase);

std::string congruence_label(forms::JCase jcase);
/// p = 5 mod 6 (j = 0) or p = 3 mod 4 (j = 1728).
bool congruence_holds(forms::JCase jcase, std::uint64_t p);

}  // namespace constj::taxonomy
