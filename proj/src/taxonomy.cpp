#include "constj/taxonomy.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace constj::taxonomy {

std::string to_string(SurfaceClass c) {
  switch (c) {
    case SurfaceClass::Rational:
      return "rational";
    case SurfaceClass::K3:
      return "K3";
    case SurfaceClass::KodairaDim1:
      return "kodaira-dim-1";
  }
  return {};
}

std::vector<forms::Pattern> enumerate_patterns(forms::JCase jcase) {
  const int N = forms::cover_order(jcase);
  std::vector<forms::Pattern> out;
  // Multiplicities in nonincreasing order; the complements N - m sum to N.
  std::function<void(forms::Pattern&, int, int)> rec = [&](forms::Pattern& cur, int remaining, int max_m) {
    if (remaining == 0) {
      if (cur.size() >= 2) out.push_back(cur);
      return;
    }
    for (int m = max_m; m >= 1; --m) {
      if (N - m > remaining) continue;
      cur.push_back(m);
      rec(cur, remaining - (N - m), m);
      cur.pop_back();
    }
  };
  forms::Pattern cur;
  rec(cur, N, N - 1);
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a > b;
  });
  return out;
}

SurfaceClass classify_Xf(const forms::Pattern& pattern) {
  const auto k = pattern.size();
  if (k <= 2) return SurfaceClass::Rational;
  if (k == 3) return SurfaceClass::K3;
  return SurfaceClass::KodairaDim1;
}

bool is_partner_rational(forms::JCase jcase, const forms::Pattern& pattern) {
  const int N = forms::cover_order(jcase);
  int deg_g = 0;
  for (int m : pattern) deg_g += N - m;
  return deg_g == N && pattern.size() >= 2;
}

bool is_partner_rational(const forms::FactoredForm& f) { return is_partner_rational(f.jcase(), f.pattern()); }

std::string congruence_label(forms::JCase jcase) {
  return jcase == forms::JCase::J0 ? "p = 5 mod 6" : "p = 3 mod 4";
}

bool congruence_holds(forms::JCase jcase, std::uint64_t p) {
  return jcase == forms::JCase::J0 ? p % 6 == 5 : p % 4 == 3;
}

namespace {

std::string weierstrass_style(const forms::Pattern& pattern) {
  static const char* const names[] = {"t", "(t-s)", "s", "(t-αs)", "(t-βs)", "(t-γs)", "(t-δs)", "(t-εs)"};
  std::string out;
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    out += i < std::size(names) ? names[i] : "(t-r" + std::to_string(i) + "s)";
    if (pattern[i] != 1) out += "^" + std::to_string(pattern[i]);
  }
  return out;
}

}  // namespace

CatalogRow make_row(forms::JCase jcase, const forms::Pattern& pattern) {
  const auto f = forms::abstract_form(jcase, pattern);
  CatalogRow row;
  row.pattern = f.pattern();
  row.n = f.n();
  row.k = f.k();
  row.surface_class = classify_Xf(row.pattern);
  row.torelli_failure_expected = row.k > 3;
  row.supersingular_congruence = congruence_label(jcase);
  row.form = weierstrass_style(row.pattern);
  return row;
}

std::vector<CatalogRow> catalog(forms::JCase jcase) {
  std::vector<CatalogRow> rows;
  for (const auto& pat : enumerate_patterns(jcase)) {
    if (pat.size() >= 3) rows.push_back(make_row(jcase, pat));
  }
  return rows;
}

std::vector<CatalogRow> excluded_rows(forms::JCase jcase) {
  std::vector<CatalogRow> rows;
  for (const auto& pat : enumerate_patterns(jcase)) {
    if (pat.size() < 3) rows.push_back(make_row(jcase, pat));
  }
  return rows;
}

}  // namespace constj::taxonomy
