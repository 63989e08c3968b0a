#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace seriesforge {

/// Arbitrary-precision signed integer (GMP backed). Value type; zero has no sign.
class BigInt {
 public:
  BigInt() = default;

  template <std::signed_integral T>
  BigInt(T v) : v_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)

  template <std::unsigned_integral T>
  BigInt(T v) : v_(static_cast<unsigned long>(v)) {}  // NOLINT(google-explicit-constructor)

  /// Parses an optionally signed decimal string. Throws std::invalid_argument.
  explicit BigInt(std::string_view decimal);

  explicit BigInt(mpz_class v) : v_(std::move(v)) {}

  const mpz_class& raw() const { return v_; }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool fits_int64() const;
  std::int64_t to_int64() const;  // throws std::overflow_error
  std::string to_string() const { return v_.get_str(); }

  BigInt& operator+=(const BigInt& o) { v_ += o.v_; return *this; }
  BigInt& operator-=(const BigInt& o) { v_ -= o.v_; return *this; }
  BigInt& operator*=(const BigInt& o) { v_ *= o.v_; return *this; }

  friend BigInt operator+(const BigInt& a, const BigInt& b) { return BigInt(mpz_class(a.v_ + b.v_)); }
  friend BigInt operator-(const BigInt& a, const BigInt& b) { return BigInt(mpz_class(a.v_ - b.v_)); }
  friend BigInt operator*(const BigInt& a, const BigInt& b) { return BigInt(mpz_class(a.v_ * b.v_)); }
  friend BigInt operator-(const BigInt& a) { return BigInt(mpz_class(-a.v_)); }
  // Truncating division, C semantics.
  friend BigInt operator/(const BigInt& a, const BigInt& b);
  friend BigInt operator%(const BigInt& a, const BigInt& b);

  friend bool operator==(const BigInt& a, const BigInt& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
    return cmp(a.v_, b.v_) <=> 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const BigInt& a) { return os << a.v_.get_str(); }

 private:
  mpz_class v_;
};

BigInt abs(const BigInt& a);
BigInt gcd(const BigInt& a, const BigInt& b);
BigInt pow(const BigInt& base, unsigned exponent);
/// Quotient a/b; throws std::domain_error unless b divides a.
BigInt divide_exact(const BigInt& a, const BigInt& b);

/// Exact rational in lowest terms with positive denominator.
class BigRational {
 public:
  BigRational() = default;
  BigRational(const BigInt& n) : v_(n.raw()) {}  // NOLINT(google-explicit-constructor)
  template <std::integral T>
  BigRational(T n) : BigRational(BigInt(n)) {}  // NOLINT(google-explicit-constructor)
  /// Throws std::domain_error for a zero denominator.
  BigRational(const BigInt& num, const BigInt& den);
  /// Parses "n" or "n/d".
  explicit BigRational(std::string_view text);

  BigInt numerator() const { return BigInt(mpz_class(v_.get_num())); }
  BigInt denominator() const { return BigInt(mpz_class(v_.get_den())); }
  bool is_integer() const { return v_.get_den() == 1; }
  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }
  /// "n" for integers, "n/d" otherwise.
  std::string to_string() const { return v_.get_str(); }

  BigRational& operator+=(const BigRational& o) { v_ += o.v_; return *this; }
  BigRational& operator-=(const BigRational& o) { v_ -= o.v_; return *this; }
  BigRational& operator*=(const BigRational& o) { v_ *= o.v_; return *this; }

  friend BigRational operator+(const BigRational& a, const BigRational& b) { return from_raw(a.v_ + b.v_); }
  friend BigRational operator-(const BigRational& a, const BigRational& b) { return from_raw(a.v_ - b.v_); }
  friend BigRational operator*(const BigRational& a, const BigRational& b) { return from_raw(a.v_ * b.v_); }
  friend BigRational operator-(const BigRational& a) { return from_raw(-a.v_); }
  /// Throws std::domain_error on division by zero.
  friend BigRational operator/(const BigRational& a, const BigRational& b);

  friend bool operator==(const BigRational& a, const BigRational& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    return cmp(a.v_, b.v_) <=> 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const BigRational& a) { return os << a.to_string(); }

 private:
  static BigRational from_raw(mpq_class v) {
    BigRational r;
    r.v_ = std::move(v);
    return r;
  }
  mpq_class v_;
};

/// n!
BigInt factorial(unsigned n);
/// C(n, k); zero when k > n.
BigInt binomial(unsigned n, unsigned k);

}  // namespace seriesforge
