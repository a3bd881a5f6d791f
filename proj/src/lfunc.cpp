#include "constj/lfunc.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <sstream>

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>

#include "constj/curve.hpp"
#include "constj/taxonomy.hpp"

namespace constj::lfunc {

std::string LPolynomial::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < coeffs.size(); ++i) os << (i ? ", " : "") << constj::to_string(coeffs[i]);
  os << ']';
  return os.str();
}

namespace {

Int ipow(std::uint64_t base, int e) { return checked_pow(static_cast<Int>(base), static_cast<unsigned>(e)); }

// Power sums s_1..s_levels of the reciprocal roots of L (Newton's identities).
std::vector<Int> power_sums(const LPolynomial& L, int levels) {
  std::vector<Int> s(static_cast<std::size_t>(levels) + 1, 0);
  auto c = [&](int k) -> Int { return k <= L.degree() ? L.coeffs[static_cast<std::size_t>(k)] : 0; };
  for (int n = 1; n <= levels; ++n) {
    Int acc = checked_mul(n, c(n));
    for (int j = 1; j < n; ++j) acc = checked_add(acc, checked_mul(c(j), s[static_cast<std::size_t>(n - j)]));
    s[static_cast<std::size_t>(n)] = -acc;
  }
  return s;
}

}  // namespace

LPolynomial lpolynomial(const count::CountSeries& series) {
  const auto& cv = series.curve;
  const int g = curve::h1_dim(cv.f, cv.a) / 2;
  const int e = curve::components(cv.f, cv.a);
  const std::uint64_t p = series.p;
  if ((p - 1) % static_cast<std::uint64_t>(e) != 0) {
    throw ValidationError("the " + std::to_string(e) + " components of u^" + std::to_string(cv.a) +
                          " = f are not all defined over F_" + std::to_string(p));
  }
  if (series.levels() < g) {
    throw MissingCounts("u^" + std::to_string(cv.a) + " = f has genus " + std::to_string(g) + ": count N(p^i) for i = 1.." +
                        std::to_string(g) + " (only " + std::to_string(series.levels()) +
                        " levels available; raise --imax to at least " + std::to_string(g) + ")");
  }

  std::vector<Int> s(static_cast<std::size_t>(g) + 1, 0);
  for (int i = 1; i <= g; ++i) {
    s[static_cast<std::size_t>(i)] = checked_sub(checked_mul(e, checked_add(ipow(p, i), 1)), series.at(i));
  }

  LPolynomial L;
  L.q = p;
  L.genus = g;
  L.coeffs.assign(static_cast<std::size_t>(2 * g) + 1, 0);
  L.coeffs[0] = 1;
  for (int i = 1; i <= g; ++i) {
    Int acc = 0;
    for (int j = 1; j <= i; ++j) {
      acc = checked_add(acc, checked_mul(s[static_cast<std::size_t>(j)], L.coeffs[static_cast<std::size_t>(i - j)]));
    }
    if (acc % i != 0) {
      throw CountDataInconsistent("count data inconsistent: coefficient c_" + std::to_string(i) + " = -(" +
                                  constj::to_string(acc) + ")/" + std::to_string(i) + " is not an integer");
    }
    L.coeffs[static_cast<std::size_t>(i)] = -acc / i;
  }
  for (int i = 0; i < g; ++i) {
    L.coeffs[static_cast<std::size_t>(2 * g - i)] = checked_mul(ipow(p, g - i), L.coeffs[static_cast<std::size_t>(i)]);
  }
  return L;
}

std::vector<Int> predicted_counts(const LPolynomial& L, int components, int levels) {
  const auto s = power_sums(L, levels);
  std::vector<Int> out;
  for (int n = 1; n <= levels; ++n) {
    out.push_back(checked_sub(checked_mul(components, checked_add(ipow(L.q, n), 1)), s[static_cast<std::size_t>(n)]));
  }
  return out;
}

bool satisfies_functional_equation(const LPolynomial& L) {
  if (L.coeffs.empty() || L.coeffs[0] != 1 || L.degree() != 2 * L.genus) return false;
  for (int i = 0; i <= L.genus; ++i) {
    if (L.coeffs[static_cast<std::size_t>(2 * L.genus - i)] != checked_mul(ipow(L.q, L.genus - i), L.coeffs[static_cast<std::size_t>(i)])) {
      return false;
    }
  }
  return true;
}

LPolynomial multiply(const LPolynomial& a, const LPolynomial& b) {
  LPolynomial r;
  r.q = a.q;
  r.genus = a.genus + b.genus;
  r.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
      r.coeffs[i + j] = checked_add(r.coeffs[i + j], checked_mul(a.coeffs[i], b.coeffs[j]));
    }
  }
  return r;
}

LPolynomial exact_divide(const LPolynomial& num, const LPolynomial& den) {
  if (den.coeffs.empty() || den.coeffs[0] != 1) throw ValidationError("divisor must have constant term 1");
  const int dq = num.degree() - den.degree();
  if (dq < 0) throw BranchCorrectionInconsistent("branch-correction inconsistency: divisor degree exceeds dividend degree");
  LPolynomial quot;
  quot.q = num.q;
  quot.genus = dq / 2;
  quot.coeffs.assign(static_cast<std::size_t>(dq) + 1, 0);
  // Power-series division; den has unit constant term.
  for (int k = 0; k <= dq; ++k) {
    Int v = num.coeffs[static_cast<std::size_t>(k)];
    for (int j = 1; j <= std::min(k, den.degree()); ++j) {
      v = checked_sub(v, checked_mul(den.coeffs[static_cast<std::size_t>(j)], quot.coeffs[static_cast<std::size_t>(k - j)]));
    }
    quot.coeffs[static_cast<std::size_t>(k)] = v;
  }
  if (multiply(quot, den).coeffs != num.coeffs) {
    throw BranchCorrectionInconsistent("branch-correction inconsistency: " + num.to_string() + " is not divisible by " +
                                       den.to_string());
  }
  if (dq % 2 != 0) throw BranchCorrectionInconsistent("branch-correction inconsistency: odd quotient degree");
  return quot;
}

// ---------------------------------------------------------------------------

std::string Slope::to_string() const {
  if (den == 1) return constj::to_string(num);
  return constj::to_string(num) + "/" + constj::to_string(den);
}

std::string NewtonPolygon::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < segments.size(); ++i) {
    os << (i ? ", " : "") << segments[i].slope.to_string() << " x" << segments[i].length;
  }
  os << ']';
  return os.str();
}

int valuation(Int v, std::uint64_t p) {
  if (v == 0) throw ValidationError("valuation of zero");
  int k = 0;
  const auto pi = static_cast<Int>(p);
  while (v % pi == 0) {
    v /= pi;
    ++k;
  }
  return k;
}

NewtonPolygon newton_polygon(const LPolynomial& L, std::uint64_t p) {
  struct Pt {
    Int x, y;
  };
  std::vector<Pt> pts;
  for (std::size_t i = 0; i < L.coeffs.size(); ++i) {
    if (L.coeffs[i] != 0) pts.push_back({static_cast<Int>(i), valuation(L.coeffs[i], p)});
  }
  // Lower hull, left to right; collinear points are dropped.
  std::vector<Pt> hull;
  for (const auto& pt : pts) {
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull.back();
      const Int cross = (b.x - a.x) * (pt.y - a.y) - (b.y - a.y) * (pt.x - a.x);
      if (cross <= 0) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(pt);
  }
  NewtonPolygon poly;
  for (std::size_t i = 1; i < hull.size(); ++i) {
    Int dx = hull[i].x - hull[i - 1].x;
    Int dy = hull[i].y - hull[i - 1].y;
    Int g = dy == 0 ? dx : std::gcd(static_cast<long long>(dx), static_cast<long long>(dy < 0 ? -dy : dy));
    poly.segments.push_back({{dy / g, dx / g}, static_cast<int>(dx)});
  }
  return poly;
}

bool is_pure_half(const LPolynomial& L, std::uint64_t p) {
  const auto poly = newton_polygon(L, p);
  return std::all_of(poly.segments.begin(), poly.segments.end(),
                     [](const Segment& s) { return s.slope == Slope{1, 2}; });
}

// ---------------------------------------------------------------------------

namespace {

using Rat = boost::multiprecision::cpp_rational;
using RatPoly = std::vector<Rat>;

void trim(RatPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

RatPoly rat_mod(RatPoly a, const RatPoly& b) {
  trim(a);
  while (a.size() >= b.size()) {
    const Rat factor = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

RatPoly rat_div(RatPoly a, const RatPoly& b) {
  trim(a);
  if (a.size() < b.size()) return {};
  RatPoly q(a.size() - b.size() + 1, 0);
  while (a.size() >= b.size()) {
    const Rat factor = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    q[shift] = factor;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
    a.pop_back();
    trim(a);
  }
  return q;
}

RatPoly squarefree_part(const RatPoly& f) {
  RatPoly df;
  for (std::size_t i = 1; i < f.size(); ++i) df.push_back(f[i] * static_cast<int>(i));
  trim(df);
  if (df.empty()) return f;
  RatPoly a = f, b = df;
  while (!b.empty()) {
    RatPoly r = rat_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return rat_div(f, a);
}

}  // namespace

double max_root_modulus_deviation(const LPolynomial& L) {
  if (L.degree() <= 0) return 0.0;
  RatPoly f;
  for (auto c : L.coeffs) f.emplace_back(Rat(constj::to_string(c)));
  const RatPoly sqf = squarefree_part(f);
  const int d = static_cast<int>(sqf.size()) - 1;
  if (d <= 0) return 0.0;
  // Reciprocal roots of sqf are the roots of X^d sqf(1/X) = sum sqf[i] X^{d-i};
  // substitute X = sqrt(q) Y so the expected roots lie on |Y| = 1.
  const long double rq = std::sqrt(static_cast<long double>(L.q));
  std::vector<long double> mono(static_cast<std::size_t>(d) + 1);  // coefficient of Y^k
  for (int i = 0; i <= d; ++i) {
    mono[static_cast<std::size_t>(d - i)] =
        static_cast<long double>(sqf[static_cast<std::size_t>(i)].convert_to<long double>()) * std::pow(rq, d - i);
  }
  const long double lead = mono[static_cast<std::size_t>(d)];
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(d, d);
  for (int r = 1; r < d; ++r) companion(r, r - 1) = 1.0;
  for (int r = 0; r < d; ++r) companion(r, d - 1) = static_cast<double>(-mono[static_cast<std::size_t>(r)] / lead);
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  if (solver.info() != Eigen::Success) throw InvariantViolation("eigenvalue solver failed");
  double worst = 0.0;
  for (int r = 0; r < d; ++r) worst = std::max(worst, std::abs(std::abs(solver.eigenvalues()[r]) - 1.0));
  return worst;
}

Int e_curve_trace(forms::JCase jcase, std::uint64_t p) {
  const auto ctx = gf::make_field(p, 1);
  Int points = 1;  // O
  for (std::uint64_t x = 0; x < p; ++x) {
    const auto X = gf::FieldElement::constant(ctx, static_cast<std::int64_t>(x));
    const auto rhs = jcase == forms::JCase::J0 ? X * X * X + gf::FieldElement::constant(ctx, 1) : X * X * X - X;
    points += gf::nth_power_count(rhs, 2);
  }
  return static_cast<Int>(p) + 1 - points;
}

// ---------------------------------------------------------------------------

int default_levels(int genus) { return genus <= 4 ? genus + 1 : genus; }

namespace {

std::vector<int> cover_orders(forms::JCase jcase) {
  return jcase == forms::JCase::J0 ? std::vector<int>{6, 2, 3} : std::vector<int>{4, 2};
}

}  // namespace

ZetaData compute_zeta(const forms::FactoredForm& f, const ZetaOptions& opts) {
  ZetaData out;
  out.p = f.p();
  const auto orders = cover_orders(f.jcase());
  std::vector<count::SeriesRequest> reqs;
  for (int a : orders) {
    const int g = curve::h1_dim(f, a) / 2;
    reqs.push_back({a, opts.i_max ? *opts.i_max : default_levels(g)});
  }
  auto series = count::count_series_multi(f, reqs, out.p, opts.cache, opts.sweep, &out.stats);

  for (std::size_t i = 0; i < orders.size(); ++i) {
    CoverZeta cz;
    cz.a = orders[i];
    cz.genus = curve::h1_dim(f, cz.a) / 2;
    cz.components = curve::components(f, cz.a);
    cz.series = std::move(series[i]);
    cz.L = lpolynomial(cz.series);
    if (!satisfies_functional_equation(cz.L)) throw InvariantViolation("functional equation fails");
    const auto predicted = predicted_counts(cz.L, cz.components, cz.series.levels());
    for (int lvl = 1; lvl <= cz.series.levels(); ++lvl) {
      if (predicted[static_cast<std::size_t>(lvl - 1)] != cz.series.at(lvl)) {
        throw CountDataInconsistent("count data inconsistent: L-polynomial of u^" + std::to_string(cz.a) +
                                    " = f predicts N(p^" + std::to_string(lvl) + ") = " +
                                    to_string(predicted[static_cast<std::size_t>(lvl - 1)]) + " but " +
                                    to_string(cz.series.at(lvl)) + " was counted");
      }
      if (lvl > cz.genus) cz.redundancy_levels.push_back(lvl);
    }
    cz.polygon = newton_polygon(cz.L, out.p);
    cz.root_deviation = max_root_modulus_deviation(cz.L);
    out.covers.push_back(std::move(cz));
  }

  LPolynomial den = out.covers[1].L;
  for (std::size_t i = 2; i < out.covers.size(); ++i) den = multiply(den, out.covers[i].L);
  out.new_factor = exact_divide(out.covers[0].L, den);
  const int expected = 2 * curve::eigenspace_dims(f)[1];
  if (out.new_factor.degree() != expected) {
    throw InvariantViolation("new factor has degree " + std::to_string(out.new_factor.degree()) + ", expected " +
                             std::to_string(expected));
  }
  out.new_factor_polygon = newton_polygon(out.new_factor, out.p);
  return out;
}

LPolynomial new_factor(const forms::FactoredForm& f, const ZetaOptions& opts) { return compute_zeta(f, opts).new_factor; }

Verdict verdict(const forms::FactoredForm& f, const ZetaData& zeta) {
  if (!taxonomy::is_partner_rational(f)) {
    throw ValidationError("verdict needs a form whose partner surface is rational (pattern " +
                          forms::pattern_to_string(f.pattern()) + " is not in the catalog)");
  }
  Verdict v;
  v.jcase = f.jcase();
  v.p = zeta.p;
  v.pattern = f.pattern();
  v.theorem_applicable = taxonomy::congruence_holds(f.jcase(), zeta.p);
  v.curve_new_factor_pure = is_pure_half(zeta.new_factor, zeta.p);
  v.e_trace = e_curve_trace(f.jcase(), zeta.p);
  v.E_supersingular = v.e_trace == 0;
  v.surface_artin_supersingular = v.curve_new_factor_pure && v.E_supersingular;
  return v;
}

Verdict verdict(const forms::FactoredForm& f, const ZetaOptions& opts) {
  if (!taxonomy::is_partner_rational(f)) {
    throw ValidationError("verdict needs a form whose partner surface is rational");
  }
  return verdict(f, compute_zeta(f, opts));
}

}  // namespace constj::lfunc
