#include "constj/forms.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace constj::forms {

std::string to_string(JCase j) { return j == JCase::J0 ? "J0" : "J1728"; }

JCase parse_jcase(std::string_view text) {
  if (text == "0" || text == "j0" || text == "J0") return JCase::J0;
  if (text == "1728" || text == "j1728" || text == "J1728") return JCase::J1728;
  throw ValidationError("unknown j-invariant '" + std::string(text) + "' (expected 0 or 1728)");
}

// ---------------------------------------------------------------------------

Place Place::infinity() {
  Place pl;
  pl.kind_ = Kind::Infinity;
  return pl;
}

Place Place::root(std::uint64_t r, std::uint64_t p) {
  Place pl;
  pl.kind_ = Kind::Poly;
  pl.coeffs_ = {(p - r % p) % p, 1};
  return pl;
}

Place Place::poly(std::vector<gf::Coeff> coeffs) {
  if (coeffs.size() < 2 || coeffs.back() != 1) throw ValidationError("place polynomial must be monic of degree >= 1");
  Place pl;
  pl.kind_ = Kind::Poly;
  pl.coeffs_ = std::move(coeffs);
  return pl;
}

Place Place::label(std::string name) {
  Place pl;
  pl.kind_ = Kind::Label;
  pl.name_ = std::move(name);
  return pl;
}

int Place::degree() const { return kind_ == Kind::Poly ? static_cast<int>(coeffs_.size()) - 1 : 1; }

std::string Place::key() const {
  switch (kind_) {
    case Kind::Infinity:
      return "inf";
    case Kind::Label:
      return "@" + name_;
    case Kind::Poly: {
      std::ostringstream os;
      os << '[';
      for (std::size_t i = 0; i < coeffs_.size(); ++i) os << (i ? "," : "") << coeffs_[i];
      os << ']';
      return os.str();
    }
  }
  return {};
}

std::string Place::display(std::uint64_t p) const {
  if (kind_ == Kind::Infinity) return "t";
  if (kind_ == Kind::Label) return name_;
  const int e = degree();
  if (e == 1) {
    const gf::Coeff c = coeffs_[0];
    if (c == 0) return "s";
    // s + c t = s - (p - c) t
    return p - c == 1 ? "s-t" : "s-" + std::to_string(p - c) + "t";
  }
  std::ostringstream os;
  bool first = true;
  for (int j = e; j >= 0; --j) {
    const gf::Coeff c = coeffs_[static_cast<std::size_t>(j)];
    if (c == 0) continue;
    if (!first) os << '+';
    first = false;
    if (c != 1 || (j == 0 && e == 0)) os << c;
    if (j > 0) os << 's' << (j > 1 ? "^" + std::to_string(j) : "");
    if (e - j > 0) os << 't' << (e - j > 1 ? "^" + std::to_string(e - j) : "");
  }
  return os.str();
}

gf::FieldElement Place::value_at(const gf::ProjPoint& P) const {
  const auto& ctx = P.s.context();
  if (kind_ == Kind::Label) throw ValidationError("abstract place '" + name_ + "' cannot be evaluated");
  if (kind_ == Kind::Infinity) return P.t;
  if (P.is_infinity()) return gf::FieldElement::constant(ctx, 1);
  gf::FieldElement acc(ctx);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * P.s + gf::FieldElement::constant(ctx, static_cast<std::int64_t>(*it));
  }
  return acc;
}

gf::FieldElement Place::derivative_at(const gf::FieldElement& x) const {
  const auto& ctx = x.context();
  if (kind_ != Kind::Poly) return gf::FieldElement::constant(ctx, 1);
  const std::uint64_t p = ctx->p();
  gf::FieldElement acc(ctx);
  for (std::size_t j = coeffs_.size(); j-- > 1;) {
    const auto c = static_cast<std::int64_t>((coeffs_[j] % p) * (j % p) % p);
    acc = acc * x + gf::FieldElement::constant(ctx, c);
  }
  return acc;
}

// ---------------------------------------------------------------------------

FactoredForm FactoredForm::unchecked(JCase jcase, std::vector<Factor> factors, std::optional<std::uint64_t> p) {
  FactoredForm f;
  f.jcase_ = jcase;
  f.factors_ = std::move(factors);
  f.p_ = p;
  return f;
}

FactoredForm FactoredForm::parse(JCase jcase, std::vector<Factor> factors, std::optional<std::uint64_t> p) {
  const int N = cover_order(jcase);
  const int max_m = max_multiplicity(jcase);
  if (factors.empty()) throw ValidationError("form has no places");
  if (p && (!gf::is_prime(*p) || *p <= 3)) throw ValidationError("p must be prime > 3 (got " + std::to_string(*p) + ")");

  std::set<std::string> seen;
  for (auto& fac : factors) {
    auto& pl = fac.place;
    const std::string where = "place " + pl.key();
    if (fac.multiplicity < 1) {
      throw ValidationError(where + ": multiplicity " + std::to_string(fac.multiplicity) + " < 1");
    }
    if (fac.multiplicity > max_m) {
      throw ValidationError(where + ": multiplicity " + std::to_string(fac.multiplicity) + " > " +
                            std::to_string(max_m));
    }
    if (p) {
      if (pl.kind() == Place::Kind::Label) throw ValidationError(where + ": abstract label in a concrete form");
      if (pl.kind() == Place::Kind::Poly) {
        std::vector<gf::Coeff> reduced = pl.coeffs();
        for (auto& c : reduced) c %= *p;
        if (reduced.back() != 1) throw ValidationError(where + ": place must be monic in s");
        pl = Place::poly(reduced);
        if (!gf::is_irreducible(*p, pl.coeffs())) throw ValidationError(where + ": not irreducible over F_" + std::to_string(*p));
      }
    } else if (pl.kind() != Place::Kind::Label) {
      throw ValidationError(where + ": concrete place in an abstract form");
    }
    if (!seen.insert(pl.key()).second) throw ValidationError(where + ": repeated place (roots must be pairwise distinct)");
  }

  FactoredForm f = unchecked(jcase, std::move(factors), p);
  if (f.degree() % N != 0) {
    throw ValidationError("degree " + std::to_string(f.degree()) + " is not divisible by " + std::to_string(N));
  }
  return f;
}

std::uint64_t FactoredForm::p() const {
  if (!p_) throw ValidationError("form is abstract; no characteristic");
  return *p_;
}

int FactoredForm::degree() const {
  int d = 0;
  for (const auto& fac : factors_) d += fac.place.degree() * fac.multiplicity;
  return d;
}

int FactoredForm::n() const { return degree() / cover_order(jcase_); }

int FactoredForm::k() const {
  int k = 0;
  for (const auto& fac : factors_) k += fac.place.degree();
  return k;
}

Pattern FactoredForm::pattern() const {
  Pattern out;
  for (const auto& fac : factors_) out.insert(out.end(), static_cast<std::size_t>(fac.place.degree()), fac.multiplicity);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::string FactoredForm::canonical_key() const {
  std::vector<std::string> tokens;
  for (const auto& fac : factors_) tokens.push_back(fac.place.key() + "^" + std::to_string(fac.multiplicity));
  std::sort(tokens.begin(), tokens.end());
  std::ostringstream os;
  os << to_string(jcase_) << '|' << (p_ ? "p" + std::to_string(*p_) : std::string("abstract"));
  for (const auto& t : tokens) os << '|' << t;
  return os.str();
}

std::string FactoredForm::display() const {
  std::ostringstream os;
  for (const auto& fac : factors_) {
    const std::string d = fac.place.display(p_.value_or(0));
    const bool wrap = d.size() > 1;
    os << (wrap ? "(" : "") << d << (wrap ? ")" : "");
    if (fac.multiplicity != 1) os << '^' << fac.multiplicity;
  }
  return os.str();
}

// ---------------------------------------------------------------------------

Pattern parse_pattern(std::string_view text) {
  Pattern out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    std::string_view tok = text.substr(pos, comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    if (tok.empty()) throw ValidationError("empty entry in pattern '" + std::string(text) + "'");
    const Int v = parse_int(tok);
    if (v < 1 || v > 1000) throw ValidationError("multiplicity out of range in pattern '" + std::string(text) + "'");
    out.push_back(static_cast<int>(v));
    pos = comma + 1;
  }
  return out;
}

std::string pattern_to_string(const Pattern& pattern) {
  std::ostringstream os;
  for (std::size_t i = 0; i < pattern.size(); ++i) os << (i ? "," : "") << pattern[i];
  return os.str();
}

Place parse_place(std::string_view token, std::uint64_t p) {
  while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
  while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
  if (token == "inf" || token == "oo" || token == "infinity") return Place::infinity();
  if (token.rfind("poly:", 0) == 0) {
    std::vector<gf::Coeff> coeffs;
    std::string_view rest = token.substr(5);
    std::size_t pos = 0;
    while (pos <= rest.size()) {
      const std::size_t colon = std::min(rest.find(':', pos), rest.size());
      const Int v = parse_int(rest.substr(pos, colon - pos));
      const auto pi = static_cast<Int>(p);
      coeffs.push_back(static_cast<gf::Coeff>(((v % pi) + pi) % pi));
      pos = colon + 1;
    }
    return Place::poly(std::move(coeffs));
  }
  const Int v = parse_int(token);
  const auto pi = static_cast<Int>(p);
  return Place::root(static_cast<std::uint64_t>(((v % pi) + pi) % pi), p);
}

std::vector<Place> parse_places(std::string_view csv, std::uint64_t p) {
  std::vector<Place> out;
  std::size_t pos = 0;
  while (pos <= csv.size()) {
    const std::size_t comma = std::min(csv.find(',', pos), csv.size());
    out.push_back(parse_place(csv.substr(pos, comma - pos), p));
    pos = comma + 1;
  }
  return out;
}

FactoredForm abstract_form(JCase jcase, const Pattern& pattern) {
  std::vector<Factor> factors;
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    factors.push_back({Place::label("r" + std::to_string(i + 1)), pattern[i]});
  }
  return FactoredForm::parse(jcase, std::move(factors), std::nullopt);
}

FactoredForm concrete_form(JCase jcase, const Pattern& pattern, const std::vector<Place>& places, std::uint64_t p) {
  if (pattern.size() != places.size()) {
    throw ValidationError("pattern has " + std::to_string(pattern.size()) + " entries but " +
                          std::to_string(places.size()) + " roots were given");
  }
  std::vector<Factor> factors;
  for (std::size_t i = 0; i < pattern.size(); ++i) factors.push_back({places[i], pattern[i]});
  return FactoredForm::parse(jcase, std::move(factors), p);
}

std::vector<Place> default_places(int k, std::uint64_t p) {
  if (static_cast<std::uint64_t>(k) > p + 1) {
    throw ValidationError("need " + std::to_string(k) + " distinct roots but P^1(F_" + std::to_string(p) + ") has only " +
                          std::to_string(p + 1) + " points; pass --roots");
  }
  std::vector<Place> out;
  const std::uint64_t order[] = {0, 1};
  for (int i = 0; i < k; ++i) {
    if (i < 2) {
      out.push_back(Place::root(order[i], p));
    } else if (i == 2) {
      out.push_back(Place::infinity());
    } else {
      out.push_back(Place::root(static_cast<std::uint64_t>(i - 1), p));
    }
  }
  return out;
}

FactoredForm radical(const FactoredForm& f) {
  std::vector<Factor> out;
  for (const auto& fac : f.factors()) out.push_back({fac.place, 1});
  return FactoredForm::unchecked(f.jcase(), std::move(out),
                                 f.is_concrete() ? std::optional<std::uint64_t>(f.p()) : std::nullopt);
}

FactoredForm complement(const FactoredForm& f) {
  const int N = cover_order(f.jcase());
  std::vector<Factor> out;
  for (const auto& fac : f.factors()) {
    if (N - fac.multiplicity > 0) out.push_back({fac.place, N - fac.multiplicity});
  }
  return FactoredForm::unchecked(f.jcase(), std::move(out),
                                 f.is_concrete() ? std::optional<std::uint64_t>(f.p()) : std::nullopt);
}

gf::FieldElement evaluate(const FactoredForm& f, const gf::ProjPoint& P) {
  if (f.is_concrete() && P.s.context()->p() != f.p()) throw ValidationError("field characteristic does not match the form");
  auto acc = gf::FieldElement::constant(P.s.context(), 1);
  for (const auto& fac : f.factors()) acc *= gf::pow(fac.place.value_at(P), static_cast<UInt>(fac.multiplicity));
  return acc;
}

LocalUnit local_unit(const FactoredForm& f, const gf::ProjPoint& r) {
  const auto& ctx = r.s.context();
  const Factor* vanishing = nullptr;
  auto unit = gf::FieldElement::constant(ctx, 1);
  for (const auto& fac : f.factors()) {
    const auto v = fac.place.value_at(r);
    if (v.is_zero()) {
      if (vanishing) throw InvariantViolation("two places vanish at " + r.to_string());
      vanishing = &fac;
      continue;
    }
    unit *= gf::pow(v, static_cast<UInt>(fac.multiplicity));
  }
  if (!vanishing) throw InvariantViolation("local_unit: " + r.to_string() + " is not a zero of the form");
  // The other F_q-linear factors of the vanishing place contribute pi'(r).
  if (!r.is_infinity()) {
    unit *= gf::pow(vanishing->place.derivative_at(r.s), static_cast<UInt>(vanishing->multiplicity));
  }
  if (unit.is_zero()) throw InvariantViolation("local unit vanished at " + r.to_string());
  return {vanishing->multiplicity, unit};
}

}  // namespace constj::forms
