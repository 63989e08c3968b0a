#include <random>
#include <vector>

#include "doctest.h"
#include "seriesforge/bigint.hpp"
#include "seriesforge/poly.hpp"
#include "seriesforge/ring.hpp"

using namespace seriesforge;

namespace {

BigInt factorial_by_multiplication(unsigned n) {
  BigInt r(1);
  for (unsigned i = 2; i <= n; ++i) r *= BigInt(i);
  return r;
}

std::vector<std::vector<BigInt>> pascal(unsigned rows) {
  std::vector<std::vector<BigInt>> t(rows + 1);
  for (unsigned n = 0; n <= rows; ++n) {
    t[n].assign(n + 1, BigInt(1));
    for (unsigned k = 1; k < n; ++k) t[n][k] = t[n - 1][k - 1] + t[n - 1][k];
  }
  return t;
}

BigRational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-50, 50), den(1, 20);
  return BigRational(BigInt(num(rng)), BigInt(den(rng)));
}

PolyVar random_poly(std::mt19937_64& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree), coeff(-9, 9);
  std::vector<BigInt> c;
  for (int i = 0, d = deg(rng); i <= d; ++i) c.emplace_back(coeff(rng));
  return PolyVar(std::move(c));
}

}  // namespace

TEST_CASE("factorial") {
  CHECK(factorial(0) == BigInt(1));
  CHECK(factorial(5) == BigInt(120));
  CHECK(factorial(10) == factorial_by_multiplication(10));
  CHECK(factorial(10) == BigInt(3628800));
  for (unsigned n = 1; n <= 30; ++n) CHECK(factorial(n) == BigInt(n) * factorial(n - 1));
}

TEST_CASE("binomial") {
  CHECK(binomial(4, 2) == BigInt(6));
  CHECK(binomial(7, 0) == BigInt(1));
  CHECK(binomial(3, 5) == BigInt(0));
  auto t = pascal(20);
  CHECK(t[9][4] == BigInt(126));
  for (unsigned n = 0; n <= 20; ++n)
    for (unsigned k = 0; k <= n; ++k) CHECK(binomial(n, k) == t[n][k]);
}

TEST_CASE("BigInt parsing and large values") {
  BigInt big("167347010944");
  CHECK(big == BigInt(167347010944LL));
  CHECK(big.to_string() == "167347010944");
  CHECK(BigInt("-0") == BigInt(0));
  CHECK((-BigInt(0)).to_string() == "0");
  CHECK_THROWS_AS(BigInt("12a"), std::invalid_argument);
  CHECK_THROWS_AS(BigInt(""), std::invalid_argument);
  CHECK(pow(BigInt(10), 30).to_string() == "1" + std::string(30, '0'));
  CHECK_FALSE(pow(BigInt(10), 30).fits_int64());
  CHECK_THROWS_AS(divide_exact(BigInt(7), BigInt(2)), std::domain_error);
  CHECK(divide_exact(BigInt(-12), BigInt(4)) == BigInt(-3));
}

TEST_CASE("BigRational stays reduced") {
  BigRational r(BigInt(6), BigInt(-4));
  CHECK(r.numerator() == BigInt(-3));
  CHECK(r.denominator() == BigInt(2));
  CHECK(r.to_string() == "-3/2");
  CHECK(BigRational("4/2") == BigRational(2));
  CHECK(BigRational("4/2").to_string() == "2");
  CHECK(BigRational("0/5").to_string() == "0");
  CHECK_THROWS_AS(BigRational(BigInt(1), BigInt(0)), std::domain_error);
  CHECK_THROWS_AS(BigRational(1) / BigRational(0), std::domain_error);
}

TEST_CASE("rational ring axioms on random elements") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    auto a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a + ring_zero<BigRational>() == a);
    CHECK(a * ring_one<BigRational>() == a);
    CHECK(a + (-a) == ring_zero<BigRational>());
    CHECK(gcd(abs(a.numerator()), a.denominator()) == BigInt(1));
  }
}

TEST_CASE("polynomial ring axioms on random elements") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    auto a = random_poly(rng, 5), b = random_poly(rng, 5), c = random_poly(rng, 5);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a * ring_one<PolyVar>() == a);
    CHECK((a - a).is_zero());
    if (!a.is_zero() && !b.is_zero()) CHECK((a * b).degree() == a.degree() + b.degree());
  }
}

TEST_CASE("zero polynomial is canonical") {
  PolyVar p{BigInt(1), BigInt(2), BigInt(0), BigInt(0)};
  CHECK(p.degree() == 1);
  CHECK(PolyVar{BigInt(0)}.is_zero());
  CHECK(PolyVar{BigInt(0)} == PolyVar{});
  CHECK(PolyVar{}.degree() == -1);
}

TEST_CASE("substitute") {
  const PolyVar a4{BigInt(0), BigInt(1), BigInt(2), BigInt(2)};
  CHECK(a4.substitute(1) == a4);
  CHECK(a4.substitute(2) == PolyVar{0, 0, 1, 0, 2, 0, 2});
  CHECK(PolyVar{}.substitute(3).is_zero());
  CHECK_THROWS_AS(a4.substitute(0), std::invalid_argument);

  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> dpow(1, 4), xpt(-3, 3);
  for (int trial = 0; trial < 100; ++trial) {
    auto p = random_poly(rng, 4);
    unsigned d = static_cast<unsigned>(dpow(rng));
    BigInt x(xpt(rng));
    CHECK(p.substitute(d).eval_at(x) == p.eval_at(pow(x, d)));
  }
}

TEST_CASE("eval_at") {
  const PolyVar a4{0, 1, 2, 2};
  CHECK(a4.eval_at(BigInt(1)) == BigInt(5));
  CHECK(PolyVar{7, 3, 1}.eval_at(BigInt(0)) == BigInt(7));
  CHECK(PolyVar{0, 1, 1}.eval_at(BigInt(2)) == BigInt(6));
}

TEST_CASE("shift and division by the variable") {
  const PolyVar p{0, 3, 0, 1};  // 3v + v^3
  const PolyVar shifted = p.shift(BigInt(-1));
  for (int x = -3; x <= 3; ++x) CHECK(shifted.eval_at(BigInt(x)) == p.eval_at(BigInt(x - 1)));
  CHECK(p.divide_by_variable() == PolyVar{3, 0, 1});
  CHECK_THROWS_AS((PolyVar{1, 1}.divide_by_variable()), std::domain_error);
}

TEST_CASE("polynomial printing") {
  CHECK(PolyVar{0, -2, 3}.to_string("m") == "-2m + 3m^2");
  CHECK(PolyVar{0, 1, 2, 2}.to_string() == "t + 2t^2 + 2t^3");
  CHECK(PolyVar{}.to_string() == "0");
}

TEST_CASE("unit inversion per ring") {
  CHECK(ring_traits<BigInt>::try_inverse(BigInt(-1)) == BigInt(-1));
  CHECK_FALSE(ring_traits<BigInt>::try_inverse(BigInt(2)).has_value());
  CHECK(ring_traits<BigRational>::try_inverse(BigRational(2)) == BigRational(BigInt(1), BigInt(2)));
  CHECK_FALSE(ring_traits<PolyVar>::try_inverse(PolyVar{0, 1}).has_value());
  CHECK(ring_traits<PolyVar>::try_inverse(PolyVar{1}) == PolyVar{1});
}

TEST_CASE("rational polynomial integrality") {
  RatPoly half{BigRational(BigInt(1), BigInt(2))};
  CHECK_FALSE(to_integer(half).has_value());
  CHECK(to_integer(to_rational(PolyVar{1, 2})) == PolyVar{1, 2});
}
