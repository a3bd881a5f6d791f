#include "constj/gf.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

namespace constj {

std::string to_string(UInt v) {
  if (v == 0) return "0";
  std::string out;
  while (v > 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::string to_string(Int v) {
  if (v >= 0) return to_string(static_cast<UInt>(v));
  // -(v+1)+1 avoids negating the minimum value
  return "-" + to_string(static_cast<UInt>(-(v + 1)) + 1);
}

Int parse_int(std::string_view text) {
  bool neg = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    neg = text.front() == '-';
    text.remove_prefix(1);
  }
  if (text.empty()) throw ValidationError("empty integer");
  Int v = 0;
  for (char c : text) {
    if (c < '0' || c > '9') throw ValidationError("not an integer: '" + std::string(text) + "'");
    v = checked_add(checked_mul(v, 10), c - '0');
  }
  return neg ? -v : v;
}

}  // namespace constj

namespace constj::gf {

namespace {

using Poly = std::vector<Coeff>;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a * b % p; }

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) { return powmod(a, p - 2, p); }

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod m over F_p; m need not be monic but must be nonzero.
Poly poly_mod(Poly a, const Poly& m, std::uint64_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint64_t lead_inv = invmod(m.back(), p);
  while (a.size() >= m.size()) {
    const std::uint64_t factor = mulmod(a.back(), lead_inv, p);
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = (a[shift + i] + p - mulmod(factor, m[i], p)) % p;
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
  }
  return poly_mod(std::move(r), m, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& m, std::uint64_t p) {
  Poly r{1};
  base = poly_mod(std::move(base), m, p);
  while (e) {
    if (e & 1) r = poly_mulmod(r, base, m, p);
    base = poly_mulmod(base, base, m, p);
    e >>= 1;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_irreducible(std::uint64_t p, std::span<const Coeff> poly_in) {
  Poly f(poly_in.begin(), poly_in.end());
  for (auto& c : f) c %= p;
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t deg = f.size() - 1;
  if (deg == 1) return true;
  // Ben-Or: no factor of degree j <= deg/2 divides f.
  Poly x{0, 1};
  Poly h = x;
  for (std::size_t j = 1; j <= deg / 2; ++j) {
    h = poly_powmod(h, p, f, p);
    Poly diff = h;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    Poly g = poly_gcd(f, diff, p);
    if (g.size() != 1) return false;
  }
  return true;
}

std::uint64_t FieldContext::q64() const {
  if (q_ > static_cast<UInt>(~std::uint64_t{0})) throw OverflowError("field order exceeds 64 bits");
  return static_cast<std::uint64_t>(q_);
}

std::string FieldContext::describe() const {
  std::ostringstream os;
  os << "F_" << p_;
  if (degree_ > 1) os << "^" << degree_;
  return os.str();
}

Field make_field(std::uint64_t p, int degree) {
  if (!is_prime(p) || p <= 3) throw ValidationError("p must be prime > 3 (got " + std::to_string(p) + ")");
  if (p > kMaxPrime) throw ValidationError("p exceeds the supported range");
  if (degree < 1) throw ValidationError("extension degree must be >= 1");

  UInt q = 1;
  for (int i = 0; i < degree; ++i) {
    UInt next = q * p;
    if (next / p != q) throw ValidationError("field order exceeds 128 bits");
    q = next;
  }

  // Coefficients c_0 .. c_{degree-1}; c_0 is the most significant digit of
  // the search order, c_{degree-1} the least.
  Poly candidate(static_cast<std::size_t>(degree) + 1, 0);
  candidate.back() = 1;
  if (degree == 1) return std::make_shared<const FieldContext>(p, degree, candidate, q);
  for (;;) {
    if (candidate[0] != 0 && is_irreducible(p, candidate)) break;
    int pos = degree - 1;
    while (pos >= 0) {
      if (++candidate[pos] < p) break;
      candidate[pos] = 0;
      --pos;
    }
    if (pos < 0) throw InvariantViolation("no irreducible polynomial found");
  }
  return std::make_shared<const FieldContext>(p, degree, candidate, q);
}

// ---------------------------------------------------------------------------

FieldElement::FieldElement(Field ctx) : ctx_(std::move(ctx)) {
  if (ctx_) coeffs_.assign(static_cast<std::size_t>(ctx_->degree()), 0);
}

FieldElement::FieldElement(Field ctx, std::vector<Coeff> coeffs) : ctx_(std::move(ctx)) {
  const std::uint64_t p = ctx_->p();
  for (auto& c : coeffs) c %= p;
  const auto& m = ctx_->modulus();
  const auto deg = static_cast<std::size_t>(ctx_->degree());
  if (coeffs.size() > deg) coeffs = poly_mod(std::move(coeffs), m, p);
  coeffs.resize(deg, 0);
  coeffs_ = std::move(coeffs);
}

FieldElement FieldElement::constant(Field ctx, std::int64_t value) {
  const auto p = static_cast<std::int64_t>(ctx->p());
  std::int64_t r = value % p;
  if (r < 0) r += p;
  std::vector<Coeff> c{static_cast<Coeff>(r)};
  return FieldElement(std::move(ctx), std::move(c));
}

FieldElement FieldElement::variable(Field ctx) { return FieldElement(std::move(ctx), {0, 1}); }

FieldElement FieldElement::from_index(Field ctx, std::uint64_t index) {
  const std::uint64_t p = ctx->p();
  if (index >= ctx->q64()) throw ValidationError("element index out of range");
  std::vector<Coeff> c(static_cast<std::size_t>(ctx->degree()), 0);
  for (auto& digit : c) {
    digit = index % p;
    index /= p;
  }
  return FieldElement(std::move(ctx), std::move(c));
}

std::uint64_t FieldElement::index() const {
  const std::uint64_t p = ctx_->p();
  (void)ctx_->q64();
  std::uint64_t v = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * p + *it;
  return v;
}

bool FieldElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Coeff c) { return c == 0; });
}

bool FieldElement::is_one() const {
  if (coeffs_.empty() || coeffs_[0] != 1) return false;
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](Coeff c) { return c == 0; });
}

void FieldElement::check_same_field(const FieldElement& o) const {
  if (ctx_ != o.ctx_ && (ctx_->p() != o.ctx_->p() || ctx_->modulus() != o.ctx_->modulus())) {
    throw ValidationError("operands belong to different fields");
  }
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same_field(o);
  const std::uint64_t p = ctx_->p();
  FieldElement r(ctx_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = (coeffs_[i] + o.coeffs_[i]) % p;
  return r;
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same_field(o);
  const std::uint64_t p = ctx_->p();
  FieldElement r(ctx_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = (coeffs_[i] + p - o.coeffs_[i]) % p;
  return r;
}

FieldElement FieldElement::operator-() const {
  const std::uint64_t p = ctx_->p();
  FieldElement r(ctx_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = (p - coeffs_[i]) % p;
  return r;
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same_field(o);
  const std::uint64_t p = ctx_->p();
  if (ctx_->degree() == 1) return FieldElement(ctx_, {mulmod(coeffs_[0], o.coeffs_[0], p)});
  return FieldElement(ctx_, poly_mulmod(coeffs_, o.coeffs_, ctx_->modulus(), p));
}

bool FieldElement::operator==(const FieldElement& o) const {
  check_same_field(o);
  return coeffs_ == o.coeffs_;
}

std::string FieldElement::to_string() const {
  if (ctx_->degree() == 1) return std::to_string(coeffs_[0]);
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < coeffs_.size(); ++i) os << (i ? "," : "") << coeffs_[i];
  os << ']';
  return os.str();
}

FieldElement pow(const FieldElement& base, UInt exponent) {
  FieldElement r = FieldElement::constant(base.context(), 1);
  FieldElement b = base;
  while (exponent) {
    if (exponent & 1) r *= b;
    b *= b;
    exponent >>= 1;
  }
  return r;
}

FieldElement inv(const FieldElement& a) {
  if (a.is_zero()) throw DivisionByZero("inverse of zero");
  return pow(a, a.context()->q() - 2);
}

std::uint64_t nth_power_count(const FieldElement& c, int N) {
  if (N != 2 && N != 3 && N != 4 && N != 6) throw ValidationError("N must be one of 2, 3, 4, 6");
  if (c.is_zero()) return 1;
  const UInt order = c.context()->q() - 1;
  // gcd(N, q-1) = gcd(N, (q-1) mod N)
  const std::uint64_t d = std::gcd(static_cast<std::uint64_t>(N), static_cast<std::uint64_t>(order % N));
  return pow(c, order / d).is_one() ? d : 0;
}

ProjPoint finite_point(const FieldElement& x) { return {x, FieldElement::constant(x.context(), 1)}; }

ProjPoint infinity_point(const Field& ctx) { return {FieldElement::constant(ctx, 1), FieldElement(ctx)}; }

std::string ProjPoint::to_string() const {
  if (is_infinity()) return "inf";
  return s.to_string();
}

ProjPoint P1Range::iterator::operator*() const {
  if (pos_ == ctx_->q64()) return infinity_point(owner_);
  return finite_point(FieldElement::from_index(owner_, pos_));
}

P1Range enumerate_p1(const Field& ctx) { return P1Range(ctx); }

// ---------------------------------------------------------------------------

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Multiplies digit vector `cur` by `g` modulo the monic modulus, in place.
void mul_digits(std::vector<std::uint32_t>& cur, const std::vector<std::pair<std::size_t, std::uint32_t>>& g_terms,
                const std::vector<Coeff>& modulus, std::uint32_t p, std::vector<std::uint64_t>& scratch) {
  const std::size_t deg = cur.size();
  std::fill(scratch.begin(), scratch.end(), 0);
  for (std::size_t i = 0; i < deg; ++i) {
    if (cur[i] == 0) continue;
    for (auto [j, gj] : g_terms) scratch[i + j] += std::uint64_t{cur[i]} * gj;
  }
  for (std::size_t k = scratch.size(); k-- > deg;) {
    const std::uint64_t top = scratch[k] % p;
    if (top == 0) continue;
    // x^deg = -sum_{i<deg} m_i x^i
    for (std::size_t i = 0; i < deg; ++i) {
      if (modulus[i] != 0) scratch[k - deg + i] += (p - modulus[i]) * top;
    }
  }
  for (std::size_t i = 0; i < deg; ++i) cur[i] = static_cast<std::uint32_t>(scratch[i] % p);
}

}  // namespace

std::shared_ptr<const LogTable> LogTable::build(const Field& ctx, int jobs) {
  if (!supported(*ctx)) throw ValidationError("field too large for discrete-log tables: " + ctx->describe());
  std::shared_ptr<LogTable> t(new LogTable());
  t->ctx_ = ctx;
  const std::uint64_t q = ctx->q64();
  t->order_ = static_cast<std::uint32_t>(q - 1);
  t->p_ = static_cast<std::uint32_t>(ctx->p());

  // Smallest-index primitive element.
  const auto factors = prime_factors(q - 1);
  std::uint64_t gi = 1;
  for (;; ++gi) {
    if (gi >= q) throw InvariantViolation("no primitive element found");
    FieldElement g = FieldElement::from_index(ctx, gi);
    bool primitive = true;
    for (auto l : factors) {
      if (pow(g, (q - 1) / l).is_one()) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      t->generator_ = g;
      break;
    }
  }

  const auto deg = static_cast<std::size_t>(ctx->degree());
  std::vector<std::pair<std::size_t, std::uint32_t>> g_terms;
  for (std::size_t j = 0; j < deg; ++j) {
    auto c = t->generator_.coeffs()[j];
    if (c) g_terms.emplace_back(j, static_cast<std::uint32_t>(c));
  }

  t->log_.assign(q, 0);
  t->exp_.assign(q - 1, 0);
  const std::uint64_t n = q - 1;
  const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(n / 4096) + 1));
  const std::uint64_t chunk = (n + workers - 1) / workers;
  auto fill = [&](std::uint64_t begin, std::uint64_t end) {
    if (begin >= end) return;
    FieldElement start = pow(t->generator_, begin);
    std::vector<std::uint32_t> cur(deg);
    for (std::size_t i = 0; i < deg; ++i) cur[i] = static_cast<std::uint32_t>(start.coeffs()[i]);
    std::vector<std::uint64_t> scratch(2 * deg, 0);
    for (std::uint64_t e = begin; e < end; ++e) {
      std::uint64_t idx = 0;
      for (std::size_t i = deg; i-- > 0;) idx = idx * t->p_ + cur[i];
      t->exp_[e] = static_cast<std::uint32_t>(idx);
      t->log_[idx] = static_cast<std::uint32_t>(e);
      mul_digits(cur, g_terms, ctx->modulus(), t->p_, scratch);
    }
  };
  if (workers == 1) {
    fill(0, n);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) {
      const std::uint64_t b = w * chunk;
      threads.emplace_back(fill, b, std::min(n, b + chunk));
    }
    for (auto& th : threads) th.join();
  }
  return t;
}

std::shared_ptr<const LogTable> LogTable::shared(const Field& ctx, int jobs) {
  static std::mutex mu;
  static std::vector<std::shared_ptr<const LogTable>> recent;
  std::lock_guard lock(mu);
  for (auto it = recent.begin(); it != recent.end(); ++it) {
    const auto& f = *(*it)->field();
    if (f.p() == ctx->p() && f.degree() == ctx->degree()) {
      auto hit = *it;
      recent.erase(it);
      recent.push_back(hit);
      return hit;
    }
  }
  auto built = build(ctx, jobs);
  recent.push_back(built);
  if (recent.size() > 2) recent.erase(recent.begin());
  return built;
}

std::uint32_t LogTable::add(std::uint32_t a, std::uint32_t b) const {
  std::uint32_t r = 0, place = 1;
  while (a || b) {
    const std::uint32_t d = (a % p_ + b % p_) % p_;
    r += d * place;
    place *= p_;
    a /= p_;
    b /= p_;
  }
  return r;
}

std::uint32_t LogTable::sub(std::uint32_t a, std::uint32_t b) const {
  std::uint32_t r = 0, place = 1;
  while (a || b) {
    const std::uint32_t d = (a % p_ + p_ - b % p_) % p_;
    r += d * place;
    place *= p_;
    a /= p_;
    b /= p_;
  }
  return r;
}

}  // namespace constj::gf
