#include "constj/curve.hpp"

#include <numeric>
#include <string>

namespace constj::curve {

CurveSpec make_curve(const forms::FactoredForm& f, int a) {
  const int N = forms::cover_order(f.jcase());
  if (a < 2 || N % a != 0) {
    throw ValidationError("cover order " + std::to_string(a) + " must divide " + std::to_string(N));
  }
  return {a, f};
}

std::vector<BranchDatum> branch_data(const forms::FactoredForm& f, int a) {
  std::vector<BranchDatum> out;
  for (const auto& fac : f.factors()) {
    const int d = std::gcd(a, fac.multiplicity);
    out.push_back({fac.place, fac.multiplicity, d, a / d});
  }
  return out;
}

int components(const forms::FactoredForm& f, int a) {
  int e = a;
  for (const auto& fac : f.factors()) e = std::gcd(e, fac.multiplicity);
  return e;
}

int genus(const forms::FactoredForm& f, int a) {
  (void)make_curve(f, a);
  // 2g - 2 = -2a + sum deg * (a - gcd(a, m))
  int two_g_minus_two = -2 * a;
  for (const auto& b : branch_data(f, a)) two_g_minus_two += b.place.degree() * (a - b.branches);
  if (two_g_minus_two % 2 != 0) {
    throw InvariantViolation("Riemann-Hurwitz gave odd 2g-2 = " + std::to_string(two_g_minus_two));
  }
  const int g = two_g_minus_two / 2 + 1;
  if (g < 0 && components(f, a) == 1) {
    throw InvariantViolation("negative genus " + std::to_string(g) + " for an irreducible cover");
  }
  return g;
}

int h1_dim(const forms::FactoredForm& f, int a) {
  const int h1 = 2 * (genus(f, a) + components(f, a) - 1);
  if (h1 < 0) throw InvariantViolation("negative first Betti number");
  return h1;
}

int chi_singular(const forms::FactoredForm& f, int a) {
  (void)make_curve(f, a);
  const int D = f.degree();
  // u^a = s^D + t^D is smooth: chi = 2a - (a - 1) D.
  const int chi_fermat = 2 * a - (a - 1) * D;
  // Each geometric zero of multiplicity m is locally z^a = w^m, Milnor number (a-1)(m-1).
  int milnor = 0;
  for (const auto& fac : f.factors()) milnor += fac.place.degree() * (a - 1) * (fac.multiplicity - 1);
  return chi_fermat + milnor;
}

int branch_correction(const forms::FactoredForm& f, int a) {
  int total = 0;
  for (const auto& b : branch_data(f, a)) total += b.place.degree() * (b.branches - 1);
  return total;
}

EigenDims eigenspace_dims(const forms::FactoredForm& f) {
  const int N = forms::cover_order(f.jcase());
  const int e = components(f, N);
  EigenDims out;
  out.dims.assign(static_cast<std::size_t>(N), 0);
  // Character-wise Riemann-Hurwitz: chi_j = 2 - #{zeroes with N not dividing j m};
  // H^0 and H^2 carry the characters with (N / e) | j.
  int total = 0;
  for (int j = 0; j < N; ++j) {
    int moving = 0;
    for (const auto& fac : f.factors()) {
      if ((j * fac.multiplicity) % N != 0) moving += fac.place.degree();
    }
    const int h0 = (j % (N / e) == 0) ? 1 : 0;
    const int d = moving - 2 + 2 * h0;
    if (d < 0) throw InvariantViolation("negative eigenspace dimension for j = " + std::to_string(j));
    out.dims[static_cast<std::size_t>(j)] = d;
    total += d;
  }
  if (total != h1_dim(f, N)) {
    throw InvariantViolation("eigenspace dimensions sum to " + std::to_string(total) + ", expected " +
                             std::to_string(h1_dim(f, N)));
  }
  for (int j = 1; j < N; ++j) {
    if (out[j] != out[N - j]) throw InvariantViolation("eigenspace dimensions are not symmetric");
  }
  return out;
}

}  // namespace constj::curve
