#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "constj/errors.hpp"
#include "constj/lfunc.hpp"
#include "constj/taxonomy.hpp"

using namespace constj;
using namespace constj::lfunc;
using forms::JCase;

namespace {

forms::FactoredForm form(JCase j, const std::string& pattern, const std::string& roots, std::uint64_t p) {
  return forms::concrete_form(j, forms::parse_pattern(pattern), forms::parse_places(roots, p), p);
}

LPolynomial poly(std::vector<Int> c, std::uint64_t q) {
  LPolynomial L;
  L.coeffs = std::move(c);
  L.q = q;
  L.genus = L.degree() / 2;
  return L;
}

Int brute_trace(JCase j, std::uint64_t p) {
  Int pts = 1;
  for (std::uint64_t x = 0; x < p; ++x) {
    const std::uint64_t rhs = j == JCase::J0 ? (x * x % p * x + 1) % p : (x * x % p * x + p - x) % p;
    for (std::uint64_t y = 0; y < p; ++y) pts += (y * y) % p == rhs;
  }
  return static_cast<Int>(p) + 1 - pts;
}

// Counts of the curve over F_{q^i} computed straight from the roots of L.
std::vector<double> counts_from_roots(const LPolynomial& L, int components, int levels) {
  // power sums via Newton's identities in floating point
  const int d = L.degree();
  std::vector<double> c(L.coeffs.begin(), L.coeffs.end()), s(levels + 1, 0.0);
  for (int i = 1; i <= levels; ++i) {
    double acc = (i <= d ? i * c[i] : 0.0);
    for (int j = 1; j < i; ++j) acc += (j <= d ? c[j] : 0.0) * s[i - j];
    s[i] = -acc;
  }
  std::vector<double> out;
  for (int i = 1; i <= levels; ++i) out.push_back(components * (std::pow(double(L.q), i) + 1) - s[i]);
  return out;
}

}  // namespace

TEST_CASE("elliptic curve from its counts") {
  // (5,5,5,3) at a = 3 is a genus-one curve; its L must be 1 - a T + 5 T^2 with
  // a = q + 1 - N(q).
  auto f = form(JCase::J0, "5,5,5,3", "0,1,inf,2", 5);
  auto s = count::count_series(curve::make_curve(f, 3), 5, 2, nullptr);
  auto L = lpolynomial(s);
  CHECK(L.degree() == 2);
  CHECK(L.coeffs[1] == s.at(1) - 6);
  CHECK(L.coeffs[2] == 5);
  CHECK(L == poly({1, 0, 5}, 5));
  CHECK(predicted_counts(L, 1, 2) == s.counts);
}

TEST_CASE("genus zero gives L = 1") {
  auto f = form(JCase::J0, "5,1", "0,1", 7);
  auto s = count::count_series(curve::make_curve(f, 6), 7, 2, nullptr);
  auto L = lpolynomial(s);
  CHECK(L.coeffs == std::vector<Int>{1});
  CHECK(is_pure_half(L, 7));
  CHECK(newton_polygon(L, 7).segments.empty());
}

TEST_CASE("reducible covers") {
  // (4,4,4) at a = 6: two components, each the genus-one curve u^3 = f^(1/2)
  auto f = form(JCase::J0, "4,4,4", "0,1,inf", 7);
  auto s = count::count_series(curve::make_curve(f, 6), 7, 3, nullptr);
  auto L = lpolynomial(s);
  CHECK(L.degree() == 4);
  CHECK(satisfies_functional_equation(L));
  CHECK(predicted_counts(L, 2, 3) == s.counts);
  // components defined over F_p only when e | p - 1
  auto f5 = form(JCase::J0, "4,4,4", "0,1,inf", 5);
  CHECK_NOTHROW(lpolynomial(count::count_series(curve::make_curve(f5, 2), 5, 1, nullptr)));
}

TEST_CASE("genus four curve") {
  auto f = form(JCase::J0, "5,5,5,3", "0,1,inf,2", 5);
  auto s = count::count_series(curve::make_curve(f, 6), 5, 6, nullptr);
  auto L = lpolynomial(s);
  CHECK(L.degree() == 8);
  CHECK(satisfies_functional_equation(L));
  CHECK(predicted_counts(L, 1, 6) == s.counts);
  // the same counts from the complex roots
  auto approx = counts_from_roots(L, 1, 6);
  for (int i = 0; i < 6; ++i) CHECK(std::abs(approx[i] - static_cast<double>(s.counts[i])) < 1e-6);
  CHECK(max_root_modulus_deviation(L) < 1e-6);
}

TEST_CASE("missing and inconsistent counts") {
  auto f = form(JCase::J0, "5,5,5,3", "0,1,inf,2", 5);
  auto s = count::count_series(curve::make_curve(f, 6), 5, 3, nullptr);
  CHECK_THROWS_AS(lpolynomial(s), MissingCounts);
  CHECK_THROWS_WITH(lpolynomial(s), doctest::Contains("imax"));

  auto full = count::count_series(curve::make_curve(f, 6), 5, 4, nullptr);
  full.counts[1] += 1;
  CHECK_THROWS_AS(lpolynomial(full), CountDataInconsistent);
}

TEST_CASE("exact division") {
  auto a = poly({1, 2, 5}, 5), b = poly({1, 0, 5}, 5);
  auto ab = multiply(a, b);
  CHECK(ab.degree() == 4);
  CHECK(exact_divide(ab, b) == a);
  CHECK_THROWS_AS(exact_divide(poly({1, 1, 5}, 5), poly({1, 3, 5}, 5)), BranchCorrectionInconsistent);
}

TEST_CASE("Newton polygons") {
  auto np = newton_polygon(poly({1, 0, 5}, 5), 5);
  REQUIRE(np.segments.size() == 1);
  CHECK(np.segments[0].slope == Slope{1, 2});
  CHECK(np.segments[0].length == 2);
  CHECK(is_pure_half(poly({1, 0, 5}, 5), 5));

  // (1 - T)(1 - 5T)
  auto ord = newton_polygon(poly({1, -6, 5}, 5), 5);
  REQUIRE(ord.segments.size() == 2);
  CHECK(ord.segments[0].slope == Slope{0, 1});
  CHECK(ord.segments[1].slope == Slope{1, 1});
  CHECK_FALSE(is_pure_half(poly({1, -6, 5}, 5), 5));
  CHECK(is_pure_half(poly({1}, 5), 5));

  // slopes nondecreasing, total length 2g, endpoint height g
  auto L = poly({1, 2, 10, 10, 50, 50, 250, 250, 625}, 5);
  auto poly8 = newton_polygon(L, 5);
  int len = 0;
  double height = 0;
  for (std::size_t i = 0; i < poly8.segments.size(); ++i) {
    const auto& s = poly8.segments[i];
    len += s.length;
    height += double(s.slope.num) / double(s.slope.den) * s.length;
    if (i) {
      const auto& r = poly8.segments[i - 1].slope;
      CHECK(r.num * s.slope.den < s.slope.num * r.den);
    }
  }
  CHECK(len == 8);
  CHECK(height == doctest::Approx(4.0));
  CHECK(valuation(250, 5) == 3);
  CHECK(valuation(-625, 5) == 4);
}

TEST_CASE("root moduli") {
  CHECK(max_root_modulus_deviation(poly({1, 0, 5}, 5)) < 1e-9);
  // repeated roots survive via the squarefree part
  CHECK(max_root_modulus_deviation(multiply(poly({1, 0, 5}, 5), poly({1, 0, 5}, 5))) < 1e-9);
  CHECK(max_root_modulus_deviation(poly({1, 1, 1}, 5)) > 0.1);
}

TEST_CASE("trace of the j-invariant curves") {
  CHECK(e_curve_trace(JCase::J0, 5) == 0);
  const Int t7 = e_curve_trace(JCase::J0, 7);
  CHECK((t7 == 4 || t7 == -4));
  CHECK(e_curve_trace(JCase::J1728, 7) == 0);
  for (std::uint64_t p : {5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull, 101ull}) {
    for (JCase j : {JCase::J0, JCase::J1728}) {
      const Int t = e_curve_trace(j, p);
      CHECK(t == brute_trace(j, p));
      CHECK(t * t <= 4 * static_cast<Int>(p));
      CHECK((t == 0) == taxonomy::congruence_holds(j, p));
    }
  }
}

TEST_CASE("zeta data and new factor") {
  auto f = form(JCase::J0, "5,5,5,3", "0,1,inf,2", 5);
  auto z = compute_zeta(f);
  REQUIRE(z.covers.size() == 3);
  CHECK(z.covers[0].a == 6);
  CHECK(z.new_factor.degree() == 4);
  CHECK(is_pure_half(z.new_factor, 5));
  CHECK(multiply(z.new_factor, multiply(z.covers[1].L, z.covers[2].L)) == z.covers[0].L);
  for (const auto& c : z.covers) {
    CHECK(c.redundancy_levels.size() == 1);
    CHECK(c.root_deviation < 1e-6);
  }

  ZetaOptions par;
  par.sweep.jobs = 4;
  auto z4 = compute_zeta(f, par);
  CHECK(z4.new_factor == z.new_factor);
  for (std::size_t i = 0; i < z.covers.size(); ++i) CHECK(z4.covers[i].series.counts == z.covers[i].series.counts);

  ZetaOptions small;
  small.i_max = 2;
  CHECK_THROWS_AS(compute_zeta(f, small), MissingCounts);
}

TEST_CASE("verdicts") {
  auto v5 = verdict(form(JCase::J0, "5,5,5,3", "0,1,inf,2", 5));
  CHECK(v5.theorem_applicable);
  CHECK(v5.curve_new_factor_pure);
  CHECK(v5.E_supersingular);
  CHECK(v5.surface_artin_supersingular);
  CHECK_FALSE(v5.falsified());

  auto v7 = verdict(form(JCase::J0, "5,5,5,3", "0,1,inf,2", 7));
  CHECK_FALSE(v7.theorem_applicable);
  CHECK_FALSE(v7.E_supersingular);
  CHECK_FALSE(v7.surface_artin_supersingular);
  CHECK_FALSE(v7.falsified());

  auto w = verdict(form(JCase::J1728, "3,3,3,3", "0,1,3,inf", 7));
  CHECK(w.theorem_applicable);
  CHECK(w.surface_artin_supersingular);

  CHECK_THROWS_AS(verdict(form(JCase::J0, "5,5,1,1", "0,1,inf,2", 5)), ValidationError);
}

TEST_CASE("every catalog pattern is supersingular when the congruence holds") {
  struct Case {
    JCase j;
    std::uint64_t p;
  };
  for (auto [j, p] : {Case{JCase::J0, 5}, Case{JCase::J0, 11}, Case{JCase::J1728, 7}, Case{JCase::J1728, 11}}) {
    for (const auto& row : taxonomy::catalog(j)) {
      auto f = forms::concrete_form(j, row.pattern, forms::default_places(row.k, p), p);
      if (curve::genus(f, forms::cover_order(j)) > 5 && p > 5) continue;
      CAPTURE(forms::pattern_to_string(row.pattern));
      CAPTURE(p);
      auto v = verdict(f);
      CHECK(v.surface_artin_supersingular);
    }
  }
}
