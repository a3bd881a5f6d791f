#pragma once

// Invariants of the cyclic covers u^a = f(s,t) of P^1.
//
// When gcd(a, m_1, ..., m_k) = e > 1 the cover splits into e geometric
// components. genus() then returns the virtual genus 1 - chi/2 of the smooth
// model, which can be negative; h1_dim() is the honest first Betti number.

#include <vector>

#include "constj/forms.hpp"

namespace constj::curve {

struct CurveSpec {
  int a = 0;
  forms::FactoredForm f;
};

/// Validates a | N and a >= 2.
CurveSpec make_curve(const forms::FactoredForm& f, int a);

struct BranchDatum {
  forms::Place place;
  int m = 0;
  int branches = 0;   // gcd(a, m)
  int ram_index = 0;  // a / gcd(a, m)
};

std::vector<BranchDatum> branch_data(const forms::FactoredForm& f, int a);

/// Number of geometric components: gcd(a, m_1, ..., m_k).
int components(const forms::FactoredForm& f, int a);

/// Virtual genus from Riemann-Hurwitz on the smooth model.
int genus(const forms::FactoredForm& f, int a);

/// dim H^1 of the smooth model, 2 * (genus + components - 1).
int h1_dim(const forms::FactoredForm& f, int a);

/// Euler characteristic of the singular model, computed as
/// chi(u^a = s^D + t^D) plus the total Milnor number.
int chi_singular(const forms::FactoredForm& f, int a);

/// sum deg(place) * (gcd(a, m) - 1)
int branch_correction(const forms::FactoredForm& f, int a);

/// dims[j] = dim of the zeta^j eigenspace on H^1 of the smooth C^(N), j = 0..N-1.
struct EigenDims {
  std::vector<int> dims;
  int operator[](int j) const { return dims[static_cast<std::size_t>(j)]; }
};

EigenDims eigenspace_dims(const forms::FactoredForm& f);

}  // namespace constj::curve
