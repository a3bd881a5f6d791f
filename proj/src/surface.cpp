#include "constj/surface.hpp"

#include "constj/curve.hpp"
#include "constj/taxonomy.hpp"

namespace constj::surface {

FiberType fiber_type(forms::JCase jcase, int m) {
  if (jcase == forms::JCase::J0) {
    switch (m) {
      case 1: return {"II", 2, 1};
      case 2: return {"IV", 4, 3};
      case 3: return {"I0*", 6, 5};
      case 4: return {"IV*", 8, 7};
      case 5: return {"II*", 10, 9};
      default: break;
    }
  } else {
    switch (m) {
      case 1: return {"III", 3, 2};
      case 2: return {"I0*", 6, 5};
      case 3: return {"III*", 9, 8};
      default: break;
    }
  }
  throw ValidationError("no fiber type for multiplicity " + std::to_string(m) + " in case " + forms::to_string(jcase));
}

std::vector<FiberType> fiber_types(const forms::FactoredForm& f) {
  std::vector<FiberType> out;
  for (int m : f.pattern()) out.push_back(fiber_type(f.jcase(), m));
  return out;
}

SurfaceInvariants invariants(const forms::FactoredForm& f) {
  SurfaceInvariants inv;
  inv.n = f.n();
  inv.k = f.k();
  inv.fibers = fiber_types(f);
  for (const auto& fib : inv.fibers) {
    inv.euler += fib.euler;
    inv.fiber_excess += fib.components - 1;
  }
  if (inv.euler != 12 * inv.n) {
    throw InvariantViolation("Euler number " + std::to_string(inv.euler) + " != 12n = " + std::to_string(12 * inv.n));
  }
  inv.chi_O = inv.euler / 12;
  inv.p_g = inv.chi_O - 1;
  inv.b2 = inv.euler - 2;
  inv.h11 = inv.b2 - 2 * inv.p_g;
  inv.family_dimension = inv.k - 3;
  return inv;
}

int mw_rank_char0(const forms::FactoredForm& f) {
  if (!taxonomy::is_partner_rational(f) && !taxonomy::is_partner_rational(forms::complement(f))) {
    throw ValidationError("Shioda-Tate rank needs f or its partner in the catalog");
  }
  const auto inv = invariants(f);
  const int rank = inv.h11 - 2 - inv.fiber_excess;
  if (rank < 0) throw InvariantViolation("negative Mordell-Weil rank " + std::to_string(rank));
  return rank;
}

bool ns_perp_check(const forms::FactoredForm& f) {
  const auto inv = invariants(f);
  const int perp = inv.b2 - (2 + inv.fiber_excess + mw_rank_char0(f));
  return perp == 2 * inv.p_g && perp == 2 * curve::eigenspace_dims(f)[1];
}

}  // namespace constj::surface
