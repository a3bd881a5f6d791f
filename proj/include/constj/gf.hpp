#pragma once

// Finite fields F_{p^i} for primes p > 3.
//
// Elements are coefficient vectors modulo a deterministic modulus: the
// lexicographically smallest monic irreducible of the requested degree, with
// coefficients compared low-degree-first. Nothing relates the fields of
// different degrees to each other; every consumer starts from F_p data.

#include <cstdint>
#include <iterator>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "constj/int128.hpp"

namespace constj::gf {

using Coeff = std::uint64_t;

/// Largest prime accepted by make_field; keeps coefficient products in 64 bits.
inline constexpr std::uint64_t kMaxPrime = (std::uint64_t{1} << 31) - 1;

class FieldContext {
 public:
  FieldContext(std::uint64_t p, int degree, std::vector<Coeff> modulus, UInt q)
      : p_(p), degree_(degree), modulus_(std::move(modulus)), q_(q) {}

  std::uint64_t p() const { return p_; }
  int degree() const { return degree_; }
  /// Monic, low-degree-first, size degree()+1.
  const std::vector<Coeff>& modulus() const { return modulus_; }
  UInt q() const { return q_; }
  /// q as a machine word; throws OverflowError when q >= 2^64.
  std::uint64_t q64() const;

  std::string describe() const;

 private:
  std::uint64_t p_;
  int degree_;
  std::vector<Coeff> modulus_;
  UInt q_;
};

using Field = std::shared_ptr<const FieldContext>;

/// Builds F_{p^degree}. Throws ValidationError unless p is a prime in
/// (3, kMaxPrime] and degree >= 1.
Field make_field(std::uint64_t p, int degree);

bool is_prime(std::uint64_t n);

/// Irreducibility over F_p of a polynomial given low-degree-first
/// (leading coefficient must be nonzero).
bool is_irreducible(std::uint64_t p, std::span<const Coeff> poly);

class FieldElement {
 public:
  explicit FieldElement(Field ctx);
  /// Reduces coefficients mod p and the vector modulo the field modulus.
  FieldElement(Field ctx, std::vector<Coeff> coeffs);

  static FieldElement constant(Field ctx, std::int64_t value);
  /// The generator x of the extension (equals the constant 0 in F_p,
  /// where the modulus is x itself).
  static FieldElement variable(Field ctx);
  /// Inverse of index(): base-p digits are the coefficients.
  static FieldElement from_index(Field ctx, std::uint64_t index);

  const Field& context() const { return ctx_; }
  std::span<const Coeff> coeffs() const { return coeffs_; }
  std::uint64_t index() const;

  bool is_zero() const;
  bool is_one() const;

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  void check_same_field(const FieldElement& o) const;

  Field ctx_;
  std::vector<Coeff> coeffs_;
};

FieldElement pow(const FieldElement& base, UInt exponent);
/// Throws DivisionByZero for 0.
FieldElement inv(const FieldElement& a);

/// Number of u in F_q with u^N = c, for N in {2,3,4,6}.
std::uint64_t nth_power_count(const FieldElement& c, int N);

/// A point of P^1(F_q) in canonical form: t = 1, or (s,t) = (1,0).
struct ProjPoint {
  FieldElement s;
  FieldElement t;

  bool is_infinity() const { return t.is_zero(); }
  std::string to_string() const;
};

ProjPoint finite_point(const FieldElement& x);
ProjPoint infinity_point(const Field& ctx);

/// Forward range over P^1(F_q): (x:1) with x in index order, then (1:0).
class P1Range {
 public:
  class iterator {
   public:
    using value_type = ProjPoint;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;

    iterator() = default;
    iterator(const FieldContext* ctx, Field owner, std::uint64_t pos) : ctx_(ctx), owner_(std::move(owner)), pos_(pos) {}

    ProjPoint operator*() const;
    iterator& operator++() {
      ++pos_;
      return *this;
    }
    iterator operator++(int) {
      auto copy = *this;
      ++pos_;
      return copy;
    }
    bool operator==(const iterator& o) const { return pos_ == o.pos_; }

   private:
    const FieldContext* ctx_ = nullptr;
    Field owner_;
    std::uint64_t pos_ = 0;
  };

  explicit P1Range(Field ctx) : ctx_(std::move(ctx)) {}
  iterator begin() const { return {ctx_.get(), ctx_, 0}; }
  iterator end() const { return {ctx_.get(), ctx_, ctx_->q64() + 1}; }
  std::uint64_t size() const { return ctx_->q64() + 1; }

 private:
  Field ctx_;
};

P1Range enumerate_p1(const Field& ctx);

/// Discrete logarithm tables for small fields, addressed by element index.
///
/// Built once per field and shared read-only between sweep workers.
class LogTable {
 public:
  /// Largest q for which tables are built (two 32-bit words per element).
  static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 26;

  static bool supported(const FieldContext& ctx) { return ctx.q() <= kMaxOrder; }
  static std::shared_ptr<const LogTable> build(const Field& ctx, int jobs = 1);
  /// Memoized build; keeps the two most recently requested fields alive.
  static std::shared_ptr<const LogTable> shared(const Field& ctx, int jobs = 1);

  const Field& field() const { return ctx_; }
  std::uint32_t group_order() const { return order_; }
  const FieldElement& generator() const { return generator_; }

  /// index must be nonzero
  std::uint32_t log(std::uint32_t index) const { return log_[index]; }
  std::uint32_t exp(std::uint64_t e) const { return exp_[e % order_]; }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    std::uint64_t e = std::uint64_t{log_[a]} + log_[b];
    if (e >= order_) e -= order_;
    return exp_[e];
  }
  /// Digitwise addition of indices.
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;

 private:
  LogTable() = default;

  Field ctx_;
  FieldElement generator_{nullptr};
  std::uint32_t order_ = 0;
  std::uint32_t p_ = 0;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> exp_;
};

}  // namespace constj::gf
