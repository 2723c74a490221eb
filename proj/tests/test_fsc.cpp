#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "dimers/errors.hpp"
#include "dimers/fsc.hpp"
#include "oracles.hpp"

using namespace dimers;

namespace {

TwoColumnDiagram diag(int height, std::vector<int> eps, std::vector<int> mu) {
  return TwoColumnDiagram::from_sets(height, eps, mu);
}

}  // namespace

TEST_CASE("Bernoulli values") {
  CHECK(bernoulli_at_zero(2) == Rational(1, 6));
  CHECK(bernoulli_at_zero(4) == Rational(-1, 30));
  CHECK(bernoulli_at_zero(12) == make_rational(-691, 2730));
  // B_2(x) = x^2 - x + 1/6 at 1/2
  CHECK(bernoulli_at_half(2) == Rational(1, 4) - Rational(1, 2) + Rational(1, 6));
  CHECK(bernoulli_at_half(2) == Rational(-1, 12));
  CHECK(bernoulli_at_half(4) == Rational(7, 240));
  // half/zero relation B_{2m}(1/2) = (2^(1-2m) - 1) B_{2m}, m <= 12
  for (int m = 1; m <= 12; ++m)
    CHECK(bernoulli_at_half(2 * m) == (pow2(1 - 2 * m) - 1) * bernoulli_at_zero(2 * m));
}

TEST_CASE("sine power coefficients vs symbolic expansion") {
  CHECK(sine_power_coefficient(0, 0) == 1);
  CHECK(sine_power_coefficient(1, 0) == -1);
  CHECK(sine_power_coefficient(1, 1) == 6);
  CHECK(sine_power_coefficient(0, 1) == 0);  // n > l
  for (int n = 0; n <= 8; ++n) {
    std::vector<Rational> series = oracles::sine_power_series(n, 8);
    for (int l = n; l <= 8; ++l)
      CHECK(Rational(sine_power_coefficient(l, n)) ==
            series[l] * Rational(factorial(2 * l + 1)));
    // leading coefficient: sin^(2n+1) = x^(2n+1) (1 + ...)
    CHECK(sine_power_coefficient(n, n) == factorial(2 * n + 1));
  }
}

TEST_CASE("P polynomials reproduce the printed table") {
  AlphaPoly a = AlphaPoly::monomial(Rational(1), 1);
  CHECK(p_polynomial(0) == a);
  AlphaPoly p1_expected = AlphaPoly::monomial(Rational(-1), 1) + AlphaPoly::monomial(Rational(-1), 3);
  CHECK(p_polynomial(1) == p1_expected);
  AlphaPoly p2_expected = a + AlphaPoly::monomial(Rational(10), 3) + AlphaPoly::monomial(Rational(9), 5);
  CHECK(p_polynomial(2) == p2_expected);
  // only odd powers up to 2l+1
  for (int l = 0; l <= 6; ++l) {
    AlphaPoly p = p_polynomial(l);
    CHECK(p.degree() == 2 * l + 1);
    for (long i = 0; i <= p.degree(); i += 2) CHECK(p.coeff(i) == 0);
  }
}

TEST_CASE("FscTable is consistent with its parts") {
  FscTable t = FscTable::build(4);
  CHECK(t.C(0, 0) == 1);
  for (int l = 0; l <= 4; ++l) {
    CHECK(t.C(l, l) != 0);
    CHECK(t.bernoulli_half[l] == bernoulli_at_half(2 * l + 2));
    CHECK(t.bernoulli_zero[l] == bernoulli_at_zero(2 * l + 2));
    CHECK(t.p[l] == p_polynomial(l));
  }
}

TEST_CASE("integrals of motion") {
  TwoColumnDiagram vac = diag(3, {}, {});
  CHECK(iom_eigenvalue(vac, 0, Parity::even) == Rational(-1, 6));
  CHECK(iom_eigenvalue(vac, 0, Parity::odd) == Rational(1, 3));
  CHECK(iom_eigenvalue(diag(3, {1}, {}), 0, Parity::even) == Rational(11, 6));
  // vacuum values do not depend on the height
  CHECK(iom_eigenvalue(diag(7, {}, {}), 2, Parity::even) ==
        iom_eigenvalue(diag(1, {}, {}), 2, Parity::even));
  // vacuum subtraction: the diagram part is a pure odd-power sum
  for (int l = 0; l <= 3; ++l) {
    for (Parity parity : {Parity::even, Parity::odd}) {
      TwoColumnDiagram d = diag(4, {1, 3}, {2});
      Rational lhs = iom_eigenvalue(d, l, parity) - iom_eigenvalue(diag(4, {}, {}), l, parity);
      Rational sum(0);
      for (int m : {1, 3, 2}) {
        long base = parity == Parity::even ? 2 * m - 1 : 2 * m;
        sum += Rational(pow_int(base, 2 * l + 1));
      }
      CHECK(lhs == Rational(l + 1) * pow2(1 - l) * sum);
    }
  }
  // I_1 ties to the conformal exponent: 4 (cexp - 1/24) even, 4 (cexp + 1/12) odd
  for (const auto& d : enumerate_diagrams(3)) {
    CHECK(iom_eigenvalue(d, 0, Parity::even) ==
          4 * conformal_exponent(d, Parity::even) - Rational(1, 6));
    CHECK(iom_eigenvalue(d, 0, Parity::odd) ==
          4 * conformal_exponent(d, Parity::odd) + Rational(1, 3));
  }
  IomVector v = iom_values(diag(2, {1}, {2}), 3, Parity::even);
  CHECK(v.values.size() == 4);
  CHECK(v.values[0] == iom_eigenvalue(v.diagram, 0, Parity::even));
}

TEST_CASE("bulk free energy quadrature") {
  CHECK(bulk_free_energy(Rational(0), 30).is_zero());
  // series oracle at alpha = 1/2, 20+ digits
  BigFloat quad = bulk_free_energy(Rational(1, 2), 40);
  BigFloat series = oracles::bulk_series(Rational(1, 2), 40);
  CHECK(abs(quad - series).to_double() < 1e-34);
  // leading behavior -alpha as alpha -> 0
  BigFloat tiny = bulk_free_energy(Rational(1, 1000000), 30);
  CHECK(abs(tiny + BigFloat(Rational(1, 1000000), Precision::digits(30))).to_double() < 1e-17);
  // negative weight rejected
  CHECK_THROWS_AS(bulk_free_energy(Rational(-1), 20), DomainError);
}

TEST_CASE("boundary free energy") {
  CHECK(boundary_free_energy(Rational(0), 20).is_zero());
  BigFloat b1 = boundary_free_energy(Rational(1), 40);
  Precision p = Precision::digits(40);
  BigFloat expected = log(BigFloat(1L, p) + sqrt(BigFloat(2L, p))) / 2;
  CHECK(abs(b1 - expected).to_double() < 1e-35);
  // truncated arcsinh series with the closed coefficients matches at x = 1/8
  Rational x(1, 8);
  BigFloat series(0L, p);
  for (int k = 0; k <= 10; ++k) {
    Rational c = pochhammer(Rational(1, 2), k) / (Rational(2 * k + 1) * Rational(factorial(k)));
    if (k % 2 == 1) c = -c;
    series += BigFloat(c * pow_rational(x, 2 * k + 1) / 2, p);
  }
  BigFloat direct = boundary_free_energy(x, 40);
  CHECK(abs(direct - series).to_double() < 1e-21);  // next term ~ (1/8)^23
}

TEST_CASE("sine power sum identity residuals decay at the predicted order") {
  // even parity, k=0, truncation at l=0: residual O(L^-3), small already at
  // L=50 and bounded by ten times the first dropped term
  BigFloat r50 = sine_power_sum_check(50, 0, 0, Parity::even, 40);
  double next_term = std::pow(M_PI / 101.0, 3.0) * (7.0 / 240.0) / 24.0;  // |B_4(1/2)| C_{1,0} scale
  CHECK(abs(r50).to_double() < 10 * next_term);
  CHECK(abs(r50).to_double() > next_term / 10);  // genuinely the next order, not zero
  // doubling L at l_trunc=2 divides the residual by ~2^7
  for (Parity parity : {Parity::even, Parity::odd}) {
    BigFloat a = sine_power_sum_check(200, 0, 2, parity, 60);
    BigFloat b = sine_power_sum_check(400, 0, 2, parity, 60);
    double ratio = (abs(b) / abs(a)).to_double();
    CHECK(ratio == doctest::Approx(1.0 / 128.0).epsilon(0.05));
  }
  // odd parity variant with k=1, l_trunc=1: decay L^-5
  BigFloat a = sine_power_sum_check(50, 1, 1, Parity::odd, 60);
  BigFloat b = sine_power_sum_check(100, 1, 1, Parity::odd, 60);
  CHECK((abs(b) / abs(a)).to_double() == doctest::Approx(1.0 / 32.0).epsilon(0.05));
}

TEST_CASE("fsc energy at alpha = 0 vanishes exactly") {
  LatticeParams params{40, Rational(0), 30};
  TwoColumnDiagram d = diag(20, {1, 2}, {5});
  CHECK(fsc_energy(params, d, 3).is_zero());
  CHECK(energy(params, d).is_zero());
}

TEST_CASE("fsc energy approaches the exact energy at order N^-3") {
  FscEvaluator eval(Rational(1), 60, 0);
  TwoColumnDiagram d100 = diag(50, {}, {});
  LatticeParams p100{100, Rational(1), 60};
  double r100 = abs(energy(p100, d100) - eval.energy(100, d100)).to_double();
  LatticeParams p200{200, Rational(1), 60};
  TwoColumnDiagram d200 = diag(100, {}, {});
  double r200 = abs(energy(p200, d200) - eval.energy(200, d200)).to_double();
  CHECK(r100 < 1.0 / (100.0 * 100.0 * 100.0));  // |difference| < C/N^3 with C ~ 1
  CHECK(r200 / r100 == doctest::Approx(1.0 / 8.0).epsilon(0.08));
}

TEST_CASE("residual order fit matches -(2 l_max + 3)") {
  std::vector<int> grid{50, 100, 150, 200, 250};
  ResidualFit fit = residual_order_fit(grid, {}, {}, Rational(1), 0, 60);
  CHECK(fit.slope > -3.1);
  CHECK(fit.slope < -2.9);
  CHECK(fit.expected_slope == -3.0);
  CHECK(fit.residuals.size() == 5);
  // excited state at l_max = 1: slope about -5
  std::vector<int> odd_grid{51, 101, 151, 201, 251};
  ResidualFit excited = residual_order_fit(odd_grid, {1}, {}, Rational(1), 1, 60);
  CHECK(excited.slope > -5.1);
  CHECK(excited.slope < -4.9);
}

TEST_CASE("residual fit input validation and precision errors") {
  CHECK_THROWS_AS(residual_order_fit({50, 100}, {}, {}, Rational(1), 0, 60), DomainError);
  CHECK_THROWS_AS(residual_order_fit({50, 100, 151, 200, 250}, {}, {}, Rational(1), 0, 60),
                  DomainError);
  CHECK_THROWS_AS(residual_order_fit({50, 100, 150, 200, 250}, {}, {}, Rational(1), 2, 15),
                  PrecisionError);
}
