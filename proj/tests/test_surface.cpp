#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "constj/curve.hpp"
#include "constj/errors.hpp"
#include "constj/surface.hpp"
#include "constj/taxonomy.hpp"

using namespace constj;
using namespace constj::surface;
using forms::JCase;

namespace {

forms::FactoredForm abs(JCase j, const forms::Pattern& p) { return forms::abstract_form(j, p); }

std::vector<std::string> symbols(const forms::FactoredForm& f) {
  std::vector<std::string> out;
  for (const auto& fib : fiber_types(f)) out.push_back(fib.symbol);
  return out;
}

}  // namespace

TEST_CASE("fiber table") {
  for (int m = 1; m <= 5; ++m) {
    auto fib = fiber_type(JCase::J0, m);
    CHECK(fib.euler == 2 * m);
    CHECK(fib.components == 2 * m - 1);
  }
  for (int m = 1; m <= 3; ++m) CHECK(fiber_type(JCase::J1728, m).euler == 3 * m);
  CHECK(fiber_type(JCase::J1728, 1).components == 2);
  CHECK(fiber_type(JCase::J1728, 2).components == 5);
  CHECK(fiber_type(JCase::J1728, 3).components == 8);
  CHECK_THROWS_AS(fiber_type(JCase::J0, 6), ValidationError);

  CHECK(symbols(abs(JCase::J0, {5, 5, 5, 3})) == std::vector<std::string>{"II*", "II*", "II*", "I0*"});
  CHECK(symbols(forms::complement(abs(JCase::J0, {5, 5, 5, 3}))) == std::vector<std::string>{"I0*", "II", "II", "II"});
  CHECK(symbols(abs(JCase::J1728, {3, 3, 2})) == std::vector<std::string>{"III*", "III*", "I0*"});
}

TEST_CASE("invariants") {
  auto a = invariants(abs(JCase::J0, {5, 5, 5, 3}));
  CHECK(a.euler == 36);
  CHECK(a.p_g == 2);
  CHECK(a.b2 == 34);
  CHECK(a.h11 == 30);
  CHECK(a.family_dimension == 1);
  auto b = invariants(abs(JCase::J0, {3, 1, 1, 1}));
  CHECK(b.euler == 12);
  CHECK(b.p_g == 0);
  CHECK(b.h11 == 10);
  auto c = invariants(abs(JCase::J1728, {3, 3, 3, 3}));
  CHECK(c.euler == 36);
  CHECK(c.p_g == 2);
}

TEST_CASE("Shioda-Tate ranks") {
  CHECK(mw_rank_char0(abs(JCase::J0, {5, 5, 5, 3})) == 0);
  CHECK(mw_rank_char0(abs(JCase::J0, {3, 1, 1, 1})) == 4);
  CHECK(mw_rank_char0(abs(JCase::J1728, {2, 1, 1})) == 2);
  CHECK_THROWS_AS(mw_rank_char0(abs(JCase::J0, {5, 5, 1, 1})), ValidationError);
}

TEST_CASE("orthogonal complement of NS") {
  CHECK(ns_perp_check(abs(JCase::J0, {5, 5, 5, 3})));
  CHECK(invariants(abs(JCase::J0, {5, 5, 5, 5, 5, 5})).p_g == 4);
  CHECK(ns_perp_check(abs(JCase::J0, {5, 5, 5, 5, 5, 5})));
  CHECK(invariants(abs(JCase::J0, {5, 5, 2})).p_g == 1);
  CHECK(ns_perp_check(abs(JCase::J0, {5, 5, 2})));
}

TEST_CASE("every catalog pattern") {
  for (JCase j : {JCase::J0, JCase::J1728}) {
    for (const auto& row : taxonomy::catalog(j)) {
      auto f = abs(j, row.pattern);
      auto g = forms::complement(f);
      const int n = f.n();
      CHECK(mw_rank_char0(f) == 0);
      CHECK(mw_rank_char0(g) == 2 * (n - 1));
      auto inv = invariants(f);
      CHECK(inv.euler == 12 * n);
      CHECK(inv.p_g == f.k() - 2);
      CHECK(inv.p_g == curve::eigenspace_dims(f)[1]);
      CHECK(ns_perp_check(f));
      CHECK(invariants(g).euler == 12);
    }
  }
}
