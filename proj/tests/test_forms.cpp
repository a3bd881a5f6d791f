#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "constj/errors.hpp"
#include "constj/forms.hpp"

using namespace constj;
using namespace constj::forms;

namespace {

FactoredForm j0(const std::string& pattern, const std::string& roots, std::uint64_t p) {
  return concrete_form(JCase::J0, parse_pattern(pattern), parse_places(roots, p), p);
}

// f(x, 1) as a product of (x - r)^m over finite roots; (1:0) gives the product
// of (1 - 0)^m = 1 for finite roots and 0 when t divides f.
std::uint64_t naive_value(const std::vector<std::pair<std::optional<std::uint64_t>, int>>& roots, std::uint64_t p,
                          std::optional<std::uint64_t> x) {
  std::uint64_t v = 1;
  for (auto [r, m] : roots) {
    std::uint64_t base;
    if (!x) base = r ? 1 : 0;          // at (1:0): s - r t -> 1, t -> 0
    else base = r ? (*x + p - *r) % p : 1;  // at (x:1): t -> 1
    for (int i = 0; i < m; ++i) v = v * base % p;
  }
  return v;
}

}  // namespace

TEST_CASE("parse rejects bad forms") {
  CHECK_THROWS_WITH(FactoredForm::parse(JCase::J0, {{Place::infinity(), 6}}, 5ull),
                    doctest::Contains("multiplicity 6 > 5"));
  CHECK_THROWS_AS(j0("5,5,5,3", "0,1,inf,1", 5), ValidationError);
  CHECK_THROWS_AS(j0("5,5,5,2", "0,1,inf,2", 5), ValidationError);  // degree 17
  CHECK_THROWS_AS(FactoredForm::parse(JCase::J0, {{Place::poly({1, 0, 1}), 3}}, 5ull), ValidationError);  // s^2+1 splits
  CHECK_THROWS_AS(FactoredForm::parse(JCase::J0, {{Place::label("a"), 3}}, 5ull), ValidationError);
  CHECK_THROWS_AS(FactoredForm::parse(JCase::J0, {{Place::root(1, 5), 6}}, std::nullopt), ValidationError);
  CHECK_THROWS_AS(j0("5,5,5,3", "0,1,inf,2", 4), ValidationError);
  CHECK_THROWS_AS(parse_pattern("5,,3"), ValidationError);
  CHECK_THROWS_AS(parse_place("poly:1:2", 5), ValidationError);  // not monic
  CHECK_THROWS_AS(default_places(7, 5), ValidationError);
}

TEST_CASE("n and k") {
  auto f = FactoredForm::parse(JCase::J0,
                               {{Place::infinity(), 5}, {Place::root(1, 5), 5}, {Place::root(0, 5), 5}, {Place::root(2, 5), 3}},
                               5ull);
  CHECK(f.n() == 3);
  CHECK(f.k() == 4);
  auto g = FactoredForm::parse(JCase::J1728, {{Place::infinity(), 3}, {Place::root(1, 7), 3}, {Place::root(0, 7), 2}}, 7ull);
  CHECK(g.n() == 2);
  CHECK(g.k() == 3);

  // an irreducible quadratic place contributes two geometric zeroes
  auto h = FactoredForm::parse(JCase::J0, {{Place::poly({2, 0, 1}), 3}}, 5ull);  // s^2 + 2t^2
  CHECK(h.k() == 2);
  CHECK(h.degree() == 6);
  CHECK(h.pattern() == Pattern{3, 3});
}

TEST_CASE("radical and complement") {
  auto f = j0("5,5,5,3", "0,1,inf,2", 5);
  auto h = radical(f);
  CHECK(h.pattern() == Pattern{1, 1, 1, 1});
  CHECK(h.degree() == 4);
  CHECK(radical(abstract_form(JCase::J0, {5, 1})).pattern() == Pattern{1, 1});
  CHECK(radical(abstract_form(JCase::J1728, {3, 3, 3, 3})).pattern() == Pattern{1, 1, 1, 1});

  auto g = complement(f);
  CHECK(g.pattern() == Pattern{3, 1, 1, 1});
  CHECK(g.degree() == 6);
  CHECK(complement(abstract_form(JCase::J0, {5, 5, 5, 5, 5, 5})).pattern() == Pattern{1, 1, 1, 1, 1, 1});
  CHECK(complement(abstract_form(JCase::J1728, {3, 3, 2})).pattern() == Pattern{2, 1, 1});
  CHECK(complement(complement(f)).canonical_key() == f.canonical_key());
}

TEST_CASE("evaluate matches a naive product") {
  // t^5 (s-t)^5 s^2 at (1:1) over F_5
  auto f = j0("5,5,2", "inf,1,0", 5);
  auto F5 = gf::make_field(5, 1);
  CHECK(evaluate(f, gf::finite_point(gf::FieldElement::constant(F5, 1))).is_zero());

  auto toy = FactoredForm::unchecked(JCase::J0, {{Place::root(0, 5), 1}, {Place::infinity(), 1}}, 5ull);
  CHECK(evaluate(toy, gf::finite_point(gf::FieldElement::constant(F5, 2))) == gf::FieldElement::constant(F5, 2));

  auto big = j0("5,5,5,3", "0,1,inf,2", 5);
  CHECK_FALSE(evaluate(big, gf::finite_point(gf::FieldElement::constant(F5, 3))).is_zero());

  for (std::uint64_t p : {5ull, 7ull, 11ull}) {
    auto F = gf::make_field(p, 1);
    auto form = j0("5,5,4,4", "0,1,inf,3", p);
    std::vector<std::pair<std::optional<std::uint64_t>, int>> roots = {{0, 5}, {1, 5}, {std::nullopt, 4}, {3, 4}};
    for (std::uint64_t x = 0; x < p; ++x) {
      CHECK(evaluate(form, gf::finite_point(gf::FieldElement::constant(F, x))).index() == naive_value(roots, p, x));
    }
    CHECK(evaluate(form, gf::infinity_point(F)).index() == naive_value(roots, p, std::nullopt));
  }
}

TEST_CASE("local units") {
  auto F5 = gf::make_field(5, 1);
  auto toy = FactoredForm::unchecked(JCase::J0, {{Place::infinity(), 2}, {Place::root(0, 5), 1}}, 5ull);
  auto lu = local_unit(toy, gf::infinity_point(F5));
  CHECK(lu.multiplicity == 2);
  CHECK(lu.unit.is_one());

  // (5,5,2) on {0, 1, inf} over F_7: at r = inf the unit is s^5 (s-t)^5 at (1:0) = 1,
  // at r = 0 (multiplicity 5) it is (0 - 1)^5 = -1.
  auto F7 = gf::make_field(7, 1);
  auto f = concrete_form(JCase::J0, {2, 5, 5}, parse_places("inf,0,1", 7), 7);
  auto at_inf = local_unit(f, gf::infinity_point(F7));
  CHECK(at_inf.multiplicity == 2);
  CHECK(at_inf.unit.is_one());
  auto at0 = local_unit(f, gf::finite_point(gf::FieldElement(F7)));
  CHECK(at0.multiplicity == 5);
  CHECK(at0.unit == gf::FieldElement::constant(F7, 6));

  // (5,5,2) with the double root at a finite point: the unit is the product of
  // the other two places, raised to their multiplicities.
  auto f2 = concrete_form(JCase::J0, {5, 5, 2}, parse_places("inf,0,3", 7), 7);
  auto r = gf::finite_point(gf::FieldElement::constant(F7, 3));
  auto u2 = local_unit(f2, r);
  CHECK(u2.multiplicity == 2);
  CHECK(u2.unit == gf::pow(gf::FieldElement::constant(F7, 3), 5));  // t^5 = 1, s^5 = 3^5
  CHECK_THROWS_AS(local_unit(f2, gf::finite_point(gf::FieldElement::constant(F7, 1))), InvariantViolation);
}

TEST_CASE("changing the representative of a zero scales the unit by a d-th power") {
  // Scaling (s,t) by lambda multiplies the unit by lambda^(deg f - m); the
  // count of d-th roots is unchanged when d | deg f - m, which holds for d = gcd(N, m).
  auto F7 = gf::make_field(7, 1);
  auto f = concrete_form(JCase::J0, {5, 5, 2}, parse_places("inf,0,3", 7), 7);
  const int m = 2, d = 2;
  auto base = local_unit(f, gf::finite_point(gf::FieldElement::constant(F7, 3))).unit;
  for (std::int64_t lam = 1; lam < 7; ++lam) {
    auto scaled = base * gf::pow(gf::FieldElement::constant(F7, lam), static_cast<UInt>(f.degree() - m));
    CHECK(gf::nth_power_count(scaled, d) == gf::nth_power_count(base, d));
  }
}

TEST_CASE("quadratic places over F_p") {
  auto pl = parse_place("poly:2:0:1", 5);
  CHECK(pl.degree() == 2);
  CHECK(pl.key() == "[2,0,1]");
  CHECK(parse_place("inf", 5).key() == "inf");
  CHECK(parse_place("3", 5).key() == parse_place("8", 5).key());
  auto f = FactoredForm::parse(JCase::J0, {{pl, 3}}, 5ull);
  CHECK(f.k() == 2);
  auto F25 = gf::make_field(5, 2);
  int zeroes = 0;
  for (const auto& P : gf::enumerate_p1(F25)) zeroes += evaluate(f, P).is_zero();
  CHECK(zeroes == 2);
}

TEST_CASE("canonical key ignores place order") {
  auto a = j0("5,5,5,3", "0,1,inf,2", 5);
  auto b = concrete_form(JCase::J0, {3, 5, 5, 5}, parse_places("2,inf,1,0", 5), 5);
  CHECK(a.canonical_key() == b.canonical_key());
  CHECK(a.canonical_key() != j0("5,5,5,3", "0,1,inf,3", 5).canonical_key());
  CHECK(parse_jcase("1728") == JCase::J1728);
  CHECK(parse_jcase("J0") == JCase::J0);
  CHECK_THROWS_AS(parse_jcase("2"), ValidationError);
}
