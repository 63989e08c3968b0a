#include "seriesforge/bigint.hpp"

#include <limits>
#include <stdexcept>

namespace seriesforge {

namespace {

bool is_decimal_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

BigInt::BigInt(std::string_view decimal) {
  if (!is_decimal_integer(decimal)) {
    throw std::invalid_argument("not a decimal integer: '" + std::string(decimal) + "'");
  }
  if (decimal.front() == '+') decimal.remove_prefix(1);
  v_.set_str(std::string(decimal), 10);
}

bool BigInt::fits_int64() const {
  static const mpz_class lo(std::to_string(std::numeric_limits<std::int64_t>::min()));
  static const mpz_class hi(std::to_string(std::numeric_limits<std::int64_t>::max()));
  return v_ >= lo && v_ <= hi;
}

std::int64_t BigInt::to_int64() const {
  if (!fits_int64()) throw std::overflow_error("BigInt does not fit in int64: " + to_string());
  return std::stoll(to_string());
}

BigInt operator/(const BigInt& a, const BigInt& b) {
  if (b.is_zero()) throw std::domain_error("BigInt division by zero");
  mpz_class q;
  mpz_tdiv_q(q.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t());
  return BigInt(std::move(q));
}

BigInt operator%(const BigInt& a, const BigInt& b) {
  if (b.is_zero()) throw std::domain_error("BigInt division by zero");
  mpz_class r;
  mpz_tdiv_r(r.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t());
  return BigInt(std::move(r));
}

BigInt abs(const BigInt& a) { return BigInt(mpz_class(::abs(a.raw()))); }

BigInt gcd(const BigInt& a, const BigInt& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
  return BigInt(std::move(g));
}

BigInt pow(const BigInt& base, unsigned exponent) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.raw().get_mpz_t(), exponent);
  return BigInt(std::move(r));
}

BigInt divide_exact(const BigInt& a, const BigInt& b) {
  if (b.is_zero()) throw std::domain_error("BigInt division by zero");
  if (!(a % b).is_zero()) {
    throw std::domain_error(a.to_string() + " is not divisible by " + b.to_string());
  }
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
  return BigInt(std::move(q));
}

BigRational::BigRational(const BigInt& num, const BigInt& den) {
  if (den.is_zero()) throw std::domain_error("BigRational with zero denominator");
  v_ = mpq_class(num.raw(), den.raw());
  v_.canonicalize();
}

BigRational::BigRational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    *this = BigRational(BigInt(text));
  } else {
    *this = BigRational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
  }
}

BigRational operator/(const BigRational& a, const BigRational& b) {
  if (b.is_zero()) throw std::domain_error("BigRational division by zero");
  return BigRational::from_raw(a.v_ / b.v_);
}

BigInt factorial(unsigned n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return BigInt(std::move(r));
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return BigInt(0);
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return BigInt(std::move(r));
}

}  // namespace seriesforge
