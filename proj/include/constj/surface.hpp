#pragma once

// Elliptic-surface invariants of y^2 = x^3 + f (j = 0) and y^2 = x^3 + f x
// (j = 1728), read off from the multiplicities of f.

#include <string>
#include <vector>

#include "constj/forms.hpp"

namespace constj::surface {

struct FiberType {
  std::string symbol;
  int euler = 0;
  int components = 0;
  bool operator==(const FiberType& o) const = default;
};

/// Kodaira type of the fiber over a zero of multiplicity m.
FiberType fiber_type(forms::JCase jcase, int m);

/// One fiber per geometric zero.
std::vector<FiberType> fiber_types(const forms::FactoredForm& f);

struct SurfaceInvariants {
  int n = 0;
  int k = 0;
  int euler = 0;
  int chi_O = 0;
  int p_g = 0;
  int b2 = 0;
  int h11 = 0;
  std::vector<FiberType> fibers;
  /// sum over fibers of (components - 1)
  int fiber_excess = 0;
  /// k - 3: dimension of the family with this factorization type.
  int family_dimension = 0;
};

/// Throws InvariantViolation unless e = 12 n.
SurfaceInvariants invariants(const forms::FactoredForm& f);

/// Shioda-Tate with rho = h^{1,1}. Requires the partner of f or f itself to be
/// rational, i.e. f or complement(f) lies in the catalog.
int mw_rank_char0(const forms::FactoredForm& f);

/// b2 - (2 + fiber_excess + rank) == 2 p_g == 2 dim V_1.
bool ns_perp_check(const forms::FactoredForm& f);

}  // namespace constj::surface
