#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <functional>
#include <set>

#include "constj/taxonomy.hpp"

using namespace constj;
using namespace constj::taxonomy;
using forms::JCase;
using forms::Pattern;

namespace {

// Every nonincreasing tuple with entries in [1, N-1], length >= 2, sum(N - m) = N.
std::set<Pattern> brute_patterns(int N) {
  std::set<Pattern> out;
  std::function<void(Pattern, int, int)> rec = [&](Pattern cur, int budget, int max_m) {
    if (budget == 0) {
      if (cur.size() >= 2) out.insert(cur);
      return;
    }
    for (int m = max_m; m >= 1; --m) {
      if (N - m > budget) continue;
      auto next = cur;
      next.push_back(m);
      rec(next, budget - (N - m), m);
    }
  };
  rec({}, N, N - 1);
  return out;
}

}  // namespace

TEST_CASE("j = 0 patterns") {
  const std::set<Pattern> expected = {{5, 1},       {4, 2},          {3, 3},             {5, 5, 2},
                                      {5, 4, 3},    {4, 4, 4},       {5, 5, 5, 3},       {5, 5, 4, 4},
                                      {5, 5, 5, 5, 4}, {5, 5, 5, 5, 5, 5}};
  auto got = enumerate_patterns(JCase::J0);
  CHECK(got.size() == 10);
  CHECK(std::set<Pattern>(got.begin(), got.end()) == expected);
  CHECK(std::set<Pattern>(got.begin(), got.end()) == brute_patterns(6));
  for (const auto& p : got) CHECK(*std::max_element(p.begin(), p.end()) < 6);
}

TEST_CASE("j = 1728 patterns") {
  auto got = enumerate_patterns(JCase::J1728);
  const std::set<Pattern> expected = {{3, 1}, {2, 2}, {3, 3, 2}, {3, 3, 3, 3}};
  CHECK(std::set<Pattern>(got.begin(), got.end()) == expected);
  CHECK(std::set<Pattern>(got.begin(), got.end()) == brute_patterns(4));
}

TEST_CASE("classification") {
  CHECK(classify_Xf({5, 1}) == SurfaceClass::Rational);
  CHECK(classify_Xf({5, 5, 2}) == SurfaceClass::K3);
  CHECK(classify_Xf({5, 5, 5, 3}) == SurfaceClass::KodairaDim1);
  CHECK(is_partner_rational(JCase::J0, {5, 5, 5, 3}));
  CHECK_FALSE(is_partner_rational(JCase::J0, {5, 5, 5, 1}));
  CHECK(is_partner_rational(JCase::J0, {5, 5, 5, 5, 5, 5}));
  CHECK(is_partner_rational(forms::abstract_form(JCase::J1728, {3, 3, 3, 3})));
}

TEST_CASE("catalog rows") {
  auto rows = catalog(JCase::J0);
  REQUIRE(rows.size() == 7);
  const std::vector<std::string> forms = {
      "t^5(t-s)^5s^2",
      "t^5(t-s)^4s^3",
      "t^4(t-s)^4s^4",
      "t^5(t-s)^5s^5(t-αs)^3",
      "t^5(t-s)^5s^4(t-αs)^4",
      "t^5(t-s)^5s^5(t-αs)^5(t-βs)^4",
      "t^5(t-s)^5s^5(t-αs)^5(t-βs)^5(t-γs)^5",
  };
  const std::vector<int> ns = {2, 2, 2, 3, 3, 4, 5};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].form == forms[i]);
    CHECK(rows[i].n == ns[i]);
    CHECK(rows[i].torelli_failure_expected == (rows[i].k > 3));
    CHECK(rows[i].supersingular_congruence == "p = 5 mod 6");
  }
  CHECK_FALSE(make_row(JCase::J0, {5, 5, 2}).torelli_failure_expected);

  auto r1728 = catalog(JCase::J1728);
  REQUIRE(r1728.size() == 2);
  CHECK(r1728[0].form == "t^3(t-s)^3s^2");
  CHECK(r1728[1].form == "t^3(t-s)^3s^3(t-αs)^3");
  CHECK(r1728[0].n == 2);
  CHECK(r1728[1].n == 3);
  CHECK(excluded_rows(JCase::J0).size() == 3);
  CHECK(excluded_rows(JCase::J1728).size() == 2);
}

TEST_CASE("congruences") {
  CHECK(congruence_holds(JCase::J0, 5));
  CHECK(congruence_holds(JCase::J0, 11));
  CHECK_FALSE(congruence_holds(JCase::J0, 7));
  CHECK(congruence_holds(JCase::J1728, 7));
  CHECK_FALSE(congruence_holds(JCase::J1728, 13));
}
