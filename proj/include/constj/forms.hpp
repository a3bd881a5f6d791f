#pragma once

// Factored binary forms f(s,t) with constant-j structure.
//
// A form is a list of places with multiplicities. In concrete mode every
// place is an irreducible form over F_p normalized to be monic in s (or the
// distinguished place t, the root at infinity); in abstract mode places are
// opaque labels and only the multiplicity combinatorics matter.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "constj/gf.hpp"

namespace constj::forms {

enum class JCase { J0, J1728 };

/// Order N of the cyclic cover: 6 for j = 0, 4 for j = 1728.
constexpr int cover_order(JCase j) { return j == JCase::J0 ? 6 : 4; }
constexpr int max_multiplicity(JCase j) { return cover_order(j) - 1; }

std::string to_string(JCase j);
/// Accepts "0", "j0", "J0", "1728", "j1728", "J1728".
JCase parse_jcase(std::string_view text);

class Place {
 public:
  enum class Kind { Infinity, Poly, Label };

  static Place infinity();
  /// The linear place s - r t.
  static Place root(std::uint64_t r, std::uint64_t p);
  /// Monic-in-s form with the given dehomogenized coefficients
  /// (low-degree-first, last coefficient 1).
  static Place poly(std::vector<gf::Coeff> coeffs);
  static Place label(std::string name);

  Kind kind() const { return kind_; }
  int degree() const;
  /// Dehomogenized coefficients of a Poly place, low-degree-first.
  const std::vector<gf::Coeff>& coeffs() const { return coeffs_; }
  const std::string& name() const { return name_; }

  /// Canonical token used in serialization: "inf", "[c0,c1,..]" or "@label".
  std::string key() const;
  /// Human-readable: "t", "s", "s-2t", "s^2+3t^2", label.
  std::string display(std::uint64_t p) const;

  /// Value at the canonical representative of P (concrete places only).
  gf::FieldElement value_at(const gf::ProjPoint& P) const;
  /// d/ds of the dehomogenized place at a finite point, for Poly places.
  gf::FieldElement derivative_at(const gf::FieldElement& x) const;

  bool operator==(const Place& o) const { return key() == o.key(); }

 private:
  Kind kind_ = Kind::Label;
  std::vector<gf::Coeff> coeffs_;
  std::string name_;
};

struct Factor {
  Place place;
  int multiplicity = 0;
};

using Pattern = std::vector<int>;

class FactoredForm {
 public:
  /// Validates every invariant; the error names the offending place.
  /// p == nullopt selects abstract mode.
  static FactoredForm parse(JCase jcase, std::vector<Factor> factors, std::optional<std::uint64_t> p);
  /// No validation. Used for radicals and for toy forms in tests.
  static FactoredForm unchecked(JCase jcase, std::vector<Factor> factors, std::optional<std::uint64_t> p);

  JCase jcase() const { return jcase_; }
  const std::vector<Factor>& factors() const { return factors_; }
  bool is_concrete() const { return p_.has_value(); }
  std::uint64_t p() const;

  /// Sum of deg(place) * multiplicity.
  int degree() const;
  /// degree / N
  int n() const;
  /// Number of geometric zeroes.
  int k() const;

  /// One multiplicity per geometric zero, nonincreasing.
  Pattern pattern() const;

  /// Sorted places, lowest coefficient first; stable across runs.
  std::string canonical_key() const;
  std::string display() const;

 private:
  JCase jcase_ = JCase::J0;
  std::vector<Factor> factors_;
  std::optional<std::uint64_t> p_;
};

/// "5,5,5,3" -> {5,5,5,3}
Pattern parse_pattern(std::string_view text);
std::string pattern_to_string(const Pattern& pattern);

/// Root token: "inf", an integer r (place s - r t) or "poly:c0:c1:...:1".
Place parse_place(std::string_view token, std::uint64_t p);
std::vector<Place> parse_places(std::string_view csv, std::uint64_t p);

/// Abstract form with labels r1..rk.
FactoredForm abstract_form(JCase jcase, const Pattern& pattern);
/// Pairs pattern entries with places in order.
FactoredForm concrete_form(JCase jcase, const Pattern& pattern, const std::vector<Place>& places, std::uint64_t p);
/// Default roots 0, 1, inf, 2, 3, ... (the first k of them).
std::vector<Place> default_places(int k, std::uint64_t p);

/// Same places, each with multiplicity 1. Not a valid form of its j-case in
/// general (deg h = k need not be divisible by N).
FactoredForm radical(const FactoredForm& f);
/// g = h^N / f: multiplicities m -> N - m.
FactoredForm complement(const FactoredForm& f);

/// f at the canonical representative of P, dehomogenized at t = 1 for finite
/// points and at s = 1 for (1:0).
gf::FieldElement evaluate(const FactoredForm& f, const gf::ProjPoint& P);

struct LocalUnit {
  int multiplicity = 0;
  gf::FieldElement unit{nullptr};
};

/// For a zero r of f: the multiplicity of the vanishing place and the value
/// at r of f with the F_q-linear factor through r removed m times.
LocalUnit local_unit(const FactoredForm& f, const gf::ProjPoint& r);

}  // namespace constj::forms
