#pragma once

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace csgin {

/// Raised on invalid field operations: division by zero, mixed characteristics.
class FieldError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::uint32_t kDefaultPrime = 32003;

/// Exact rational number backed by GMP.
class Rational {
 public:
  Rational() = default;
  Rational(long long v) : value_(static_cast<long>(v)) {}
  explicit Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

  static Rational from_int(long long v, std::uint32_t characteristic) {
    if (characteristic != 0) throw FieldError("rational element requested in positive characteristic");
    return Rational(v);
  }
  static Rational from_fraction(long long num, long long den, std::uint32_t characteristic) {
    if (characteristic != 0) throw FieldError("rational element requested in positive characteristic");
    if (den == 0) throw FieldError("zero denominator");
    return Rational(mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den))));
  }

  std::uint32_t characteristic() const { return 0; }
  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  const mpq_class& value() const { return value_; }

  Rational inverse() const {
    if (is_zero()) throw FieldError("inverse of zero");
    return Rational(mpq_class(1) / value_);
  }

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw FieldError("division by zero");
    value_ /= o.value_;
    return *this;
  }
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }

  /// Sign used when printing; rationals print with their own sign.
  bool prints_negative() const { return sgn(value_) < 0; }
  std::string to_string() const { return value_.get_str(); }

 private:
  mpq_class value_{0};
};

/// Residue class modulo an odd prime p < 2^31. The modulus travels with the value.
class Modular {
 public:
  Modular() = default;
  Modular(long long v, std::uint32_t p) : p_(p) {
    if (p < 3) throw FieldError("modulus must be an odd prime");
    long long r = v % static_cast<long long>(p);
    if (r < 0) r += p;
    v_ = static_cast<std::uint32_t>(r);
  }

  static Modular from_int(long long v, std::uint32_t characteristic) {
    if (characteristic == 0) throw FieldError("modular element requested in characteristic 0");
    return Modular(v, characteristic);
  }
  static Modular from_fraction(long long num, long long den, std::uint32_t characteristic) {
    Modular d = from_int(den, characteristic);
    if (d.is_zero()) throw FieldError("denominator vanishes modulo p");
    return from_int(num, characteristic) * d.inverse();
  }

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t residue() const { return v_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  Modular inverse() const {
    if (v_ == 0) throw FieldError("inverse of zero");
    // extended Euclid on (v, p)
    long long a = v_, b = p_, x0 = 1, x1 = 0;
    while (b != 0) {
      long long q = a / b;
      long long t = a - q * b; a = b; b = t;
      t = x0 - q * x1; x0 = x1; x1 = t;
    }
    return Modular(x0, p_);
  }

  Modular operator-() const { Modular r(*this); if (v_) r.v_ = p_ - v_; return r; }
  Modular& operator+=(const Modular& o) {
    check(o);
    std::uint32_t s = v_ + o.v_;
    v_ = s >= p_ ? s - p_ : s;
    return *this;
  }
  Modular& operator-=(const Modular& o) {
    check(o);
    v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_;
    return *this;
  }
  Modular& operator*=(const Modular& o) {
    check(o);
    v_ = static_cast<std::uint32_t>(static_cast<std::uint64_t>(v_) * o.v_ % p_);
    return *this;
  }
  Modular& operator/=(const Modular& o) { return *this *= o.inverse(); }
  friend Modular operator+(Modular a, const Modular& b) { return a += b; }
  friend Modular operator-(Modular a, const Modular& b) { return a -= b; }
  friend Modular operator*(Modular a, const Modular& b) { return a *= b; }
  friend Modular operator/(Modular a, const Modular& b) { return a /= b; }
  friend bool operator==(const Modular& a, const Modular& b) { return a.v_ == b.v_ && a.p_ == b.p_; }

  /// Symmetric representative in (-p/2, p/2].
  long long symmetric() const { return v_ > p_ / 2 ? static_cast<long long>(v_) - p_ : v_; }
  bool prints_negative() const { return symmetric() < 0; }
  std::string to_string() const { return std::to_string(symmetric()); }

 private:
  void check(const Modular& o) const {
    if (p_ != o.p_) throw FieldError("mixed characteristics");
  }
  std::uint32_t v_ = 0;
  std::uint32_t p_ = 0;
};

template <class K>
concept FieldElement = requires(K a, const K b, long long v, std::uint32_t p) {
  { K::from_int(v, p) } -> std::same_as<K>;
  { b.inverse() } -> std::same_as<K>;
  { b.is_zero() } -> std::same_as<bool>;
  { b.characteristic() } -> std::same_as<std::uint32_t>;
  { a + b } -> std::same_as<K>;
  { a * b } -> std::same_as<K>;
};

template <FieldElement K>
K scalar(long long v, std::uint32_t characteristic) {
  return K::from_int(v, characteristic);
}

}  // namespace csgin
