#pragma once

// Zeta numerators from point counts, the V_1 + V_{N-1} "new" factor, Newton
// polygons, and the supersingularity verdict.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "constj/count.hpp"
#include "constj/forms.hpp"

namespace constj::lfunc {

struct LPolynomial {
  /// c_0 .. c_{2g}; c_0 = 1
  std::vector<Int> coeffs;
  /// Base field size.
  std::uint64_t q = 0;
  int genus = 0;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  std::string to_string() const;
  bool operator==(const LPolynomial& o) const = default;
};

/// Reconstructs L from N(q), ..., N(q^g) through Newton's identities and the
/// functional equation c_{2g-i} = q^{g-i} c_i. Requires every geometric
/// component of the curve to be defined over F_p.
///
/// Throws MissingCounts when fewer than g levels are present and
/// CountDataInconsistent when a coefficient is not integral.
LPolynomial lpolynomial(const count::CountSeries& series);

/// N(q^i) for i = 1..levels predicted by L for a curve with `components`
/// rational components.
std::vector<Int> predicted_counts(const LPolynomial& L, int components, int levels);

/// Checks c_{2g-i} = q^{g-i} c_i and c_0 = 1.
bool satisfies_functional_equation(const LPolynomial& L);

LPolynomial multiply(const LPolynomial& a, const LPolynomial& b);
/// Exact quotient; a nonzero remainder throws BranchCorrectionInconsistent.
LPolynomial exact_divide(const LPolynomial& num, const LPolynomial& den);

struct Slope {
  Int num = 0;
  Int den = 1;
  bool operator==(const Slope& o) const = default;
  std::string to_string() const;
};

struct Segment {
  Slope slope;
  int length = 0;
  bool operator==(const Segment& o) const = default;
};

struct NewtonPolygon {
  std::vector<Segment> segments;
  std::string to_string() const;
};

int valuation(Int v, std::uint64_t p);
NewtonPolygon newton_polygon(const LPolynomial& L, std::uint64_t p);
/// Single slope 1/2; true for L = 1.
bool is_pure_half(const LPolynomial& L, std::uint64_t p);

/// max over reciprocal roots alpha of | |alpha| / sqrt(q) - 1 |, computed on
/// the exact squarefree part of L.
double max_root_modulus_deviation(const LPolynomial& L);

/// a_p = p + 1 - #E(F_p) for E: y^2 = x^3 + 1 (j = 0) or y^2 = x^3 - x (j = 1728).
Int e_curve_trace(forms::JCase jcase, std::uint64_t p);

struct CoverZeta {
  int a = 0;
  int genus = 0;        // h1 / 2
  int components = 1;
  count::CountSeries series;
  LPolynomial L;
  NewtonPolygon polygon;
  double root_deviation = 0.0;
  /// Levels beyond the genus whose counts were reproduced by L.
  std::vector<int> redundancy_levels;
};

struct ZetaOptions {
  /// Count every cover to exactly this level instead of the default
  /// (genus, plus one extra level when genus <= 4).
  std::optional<int> i_max;
  count::CountCache* cache = nullptr;
  count::SweepOptions sweep;
};

struct ZetaData {
  std::uint64_t p = 0;
  /// C^(N) first, then the subcovers.
  std::vector<CoverZeta> covers;
  LPolynomial new_factor;
  NewtonPolygon new_factor_polygon;
  count::SeriesStats stats;
};

/// Default number of levels counted for a cover of the given genus.
int default_levels(int genus);

ZetaData compute_zeta(const forms::FactoredForm& f, const ZetaOptions& opts = {});

/// L_{C^(6)} / (L_{C^(2)} L_{C^(3)}) for j = 0, L_{C^(4)} / L_{C^(2)} for j = 1728.
LPolynomial new_factor(const forms::FactoredForm& f, const ZetaOptions& opts = {});

struct Verdict {
  forms::JCase jcase = forms::JCase::J0;
  std::uint64_t p = 0;
  forms::Pattern pattern;
  bool theorem_applicable = false;
  bool curve_new_factor_pure = false;
  bool E_supersingular = false;
  bool surface_artin_supersingular = false;
  Int e_trace = 0;

  /// Theorem applies but verification failed.
  bool falsified() const { return theorem_applicable && !surface_artin_supersingular; }
};

/// Requires taxonomy::is_partner_rational(f).
Verdict verdict(const forms::FactoredForm& f, const ZetaData& zeta);
Verdict verdict(const forms::FactoredForm& f, const ZetaOptions& opts = {});

}  // namespace constj::lfunc
