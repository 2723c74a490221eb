#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dimers/bigfloat.hpp"
#include "dimers/eigen_support.hpp"
#include "dimers/errors.hpp"
#include "dimers/exact.hpp"
#include "dimers/poly.hpp"

using namespace dimers;

TEST_CASE("exact helpers") {
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(4, -1) == 0);
  CHECK(binomial(4, 5) == 0);
  CHECK(factorial(5) == 120);
  CHECK(pochhammer(Rational(1, 2), 3) == Rational(15, 8));  // 1/2 * 3/2 * 5/2
  CHECK(pochhammer(Rational(1), 4) == 24);
  CHECK(pow2(3) == 8);
  CHECK(pow2(-2) == Rational(1, 4));
  CHECK(pow_int(-3, 3) == -27);
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("1/2") == Rational(1, 2));
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK(parse_rational("-1.5") == Rational(-3, 2));
  CHECK(parse_rational("3") == 3);
  CHECK_THROWS_AS(parse_rational("abc"), DomainError);
  CHECK_THROWS_AS(parse_rational(""), DomainError);
}

TEST_CASE("bigfloat arithmetic and precision") {
  Precision p = Precision::digits(50);
  BigFloat two(2L, p);
  BigFloat r = sqrt(two);
  // sqrt(2)^2 - 2 should vanish to ~50 digits
  BigFloat err = abs(r * r - two);
  CHECK(err < BigFloat(Rational(1, 1), p) * pow_int(BigFloat(10L, p), -45));
  CHECK(r.to_double() == doctest::Approx(std::sqrt(2.0)));

  BigFloat pi = BigFloat::pi(p);
  CHECK(pi.to_double() == doctest::Approx(3.14159265358979));

  // asinh agrees with log closed form: asinh x = log(x + sqrt(1+x^2))
  BigFloat x(Rational(1, 2), p);
  BigFloat lhs = asinh(x);
  BigFloat rhs = log(x + sqrt(BigFloat(1L, p) + x * x));
  CHECK(abs(lhs - rhs) < pow_int(BigFloat(10L, p), -45));

  // mixed precision: result carries the wider operand precision
  BigFloat low(1L, Precision::digits(15));
  CHECK((low + pi).prec_bits() == pi.prec_bits());
}

TEST_CASE("bigfloat string rendering is deterministic scientific") {
  BigFloat v(Rational(1, 3), Precision::digits(30));
  std::string s1 = v.str(20);
  std::string s2 = v.str(20);
  CHECK(s1 == s2);
  CHECK(s1.substr(0, 6) == "3.3333");
  CHECK(s1.find('e') != std::string::npos);
}

TEST_CASE("poly arithmetic") {
  AlphaPoly a = AlphaPoly::monomial(Rational(1), 1);    // alpha
  AlphaPoly p = a * a * a + a;                          // alpha^3 + alpha
  CHECK(p.degree() == 3);
  CHECK(p.coeff(1) == 1);
  CHECK(p.coeff(2) == 0);
  CHECK(p.coeff(3) == 1);
  CHECK(p.eval(Rational(2)) == 10);
  AlphaPoly zero;
  CHECK(zero.is_zero());
  CHECK((zero * p).is_zero());
  CHECK((p - p).is_zero());
  CHECK(p + zero == p);
  AlphaPoly scaled = p * Rational(3, 2);
  CHECK(scaled.coeff(3) == Rational(3, 2));
  CHECK(p.str("a") == "1*a + 1*a^3");
}

TEST_CASE("poly conversion from integer counts") {
  CountPoly c = CountPoly::monomial(Int(3), 2) + CountPoly(1);
  AlphaPoly r = to_rational_poly(c);
  CHECK(r.coeff(0) == 1);
  CHECK(r.coeff(2) == 3);
}

TEST_CASE("exact matrix product skips zeros and matches dense") {
  DenseOperator<Rational> a(2, 2), b(2, 2);
  a.setZero();
  b.setZero();
  a(0, 1) = Rational(1, 2);
  a(1, 0) = 2;
  b(0, 0) = 3;
  b(1, 1) = Rational(1, 3);
  DenseOperator<Rational> c = multiply(a, b);
  CHECK(c(0, 1) == Rational(1, 6));
  CHECK(c(1, 0) == 6);
  CHECK(c(0, 0) == 0);
  CHECK(matrix_trace(c) == 0);
  CHECK_FALSE(matrix_is_zero(c));
}
