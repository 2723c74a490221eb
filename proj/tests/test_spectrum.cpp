#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "dimers/errors.hpp"
#include "dimers/spectrum.hpp"

using namespace dimers;

namespace {

double to_d(const BigFloat& x) { return x.to_double(); }

TwoColumnDiagram diag(int height, std::vector<int> eps, std::vector<int> mu) {
  return TwoColumnDiagram::from_sets(height, eps, mu);
}

}  // namespace

TEST_CASE("momentum angles") {
  auto a2 = momentum_angles(2, 30);
  REQUIRE(a2.size() == 1);
  CHECK(to_d(a2[0]) == doctest::Approx(M_PI / 6).epsilon(1e-12));
  auto a3 = momentum_angles(3, 30);
  REQUIRE(a3.size() == 1);
  CHECK(to_d(a3[0]) == doctest::Approx(M_PI / 4).epsilon(1e-12));
  auto a4 = momentum_angles(4, 30);
  REQUIRE(a4.size() == 2);
  CHECK(to_d(a4[0]) == doctest::Approx(M_PI / 10).epsilon(1e-12));
  CHECK(to_d(a4[1]) == doctest::Approx(3 * M_PI / 10).epsilon(1e-12));
  for (int n = 1; n <= 12; ++n) {
    auto angles = momentum_angles(n, 20);
    for (std::size_t i = 0; i < angles.size(); ++i) {
      CHECK(to_d(angles[i]) > 0.0);
      CHECK(to_d(angles[i]) < M_PI / 2);
      if (i > 0) CHECK(angles[i] > angles[i - 1]);
    }
  }
}

TEST_CASE("eigenvalues at N=2, alpha=1: golden ratio squared") {
  LatticeParams params{2, Rational(1), 30};
  double golden = (std::sqrt(5.0) + 1.0) / 2.0;
  CHECK(to_d(eigenvalue(params, diag(1, {}, {}))) == doctest::Approx(golden * golden).epsilon(1e-12));
  CHECK(to_d(eigenvalue(params, diag(1, {1}, {1}))) ==
        doctest::Approx(1.0 / (golden * golden)).epsilon(1e-12));
  CHECK(to_d(eigenvalue(params, diag(1, {1}, {}))) == doctest::Approx(1.0).epsilon(1e-14));
  // energies: -arcsinh(1/2) for the vacuum, +arcsinh(1/2) for the doubly excited
  double as_half = std::asinh(0.5);
  CHECK(to_d(energy(params, diag(1, {}, {}))) == doctest::Approx(-as_half).epsilon(1e-12));
  CHECK(to_d(energy(params, diag(1, {1}, {1}))) == doctest::Approx(as_half).epsilon(1e-12));
}

TEST_CASE("alpha = 0 collapses the spectrum") {
  LatticeParams params{6, Rational(0), 20};
  SpectrumContext ctx(params);
  for_each_diagram(3, [&](const TwoColumnDiagram& d) {
    CHECK(ctx.eigenvalue(d) == BigFloat(1L, params.precision()));
    CHECK(ctx.energy(d).is_zero());
  });
}

TEST_CASE("height mismatch is a domain error") {
  LatticeParams params{4, Rational(1), 20};
  CHECK_THROWS_AS(eigenvalue(params, diag(1, {}, {})), DomainError);
  CHECK_THROWS_AS(energy(params, diag(3, {}, {})), DomainError);
}

TEST_CASE("sector enumeration budget") {
  LatticeParams params{44, Rational(1), 20};
  CHECK_THROWS_AS(sector_spectrum(params, 0), SizeError);
}

TEST_CASE("energy equals -log(lambda)/2 on random inputs") {
  std::mt19937 rng(20240811);
  const Rational alphas[3] = {Rational(1, 2), Rational(1), Rational(2)};
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + static_cast<int>(rng() % 12);
    LatticeParams params{n, alphas[rng() % 3], 40};
    SpectrumContext ctx(params);
    int height = n / 2;
    std::uint32_t mask = height == 0 ? 0 : ((1u << height) - 1);
    TwoColumnDiagram d = TwoColumnDiagram::from_bits(height, static_cast<std::uint32_t>(rng()) & mask,
                                                     static_cast<std::uint32_t>(rng()) & mask);
    BigFloat lhs = ctx.energy(d);
    BigFloat rhs = log(ctx.eigenvalue(d)) / -2;
    CHECK(abs(lhs - rhs).to_double() < 1e-37);
  }
}

TEST_CASE("spectrum depends on eps+mu only (swap symmetry)") {
  LatticeParams params{9, Rational(1, 2), 20};
  SpectrumContext ctx(params);
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    std::uint32_t e = rng() & 0xF, m = rng() & 0xF;
    TwoColumnDiagram d = TwoColumnDiagram::from_bits(4, e, m);
    TwoColumnDiagram swapped = TwoColumnDiagram::from_bits(4, m, e);
    CHECK(ctx.eigenvalue(d) == ctx.eigenvalue(swapped));
  }
}

TEST_CASE("vacuum maximizes lambda for positive alpha") {
  for (int n : {2, 3, 5, 8}) {
    LatticeParams params{n, Rational(3, 4), 25};
    SpectrumContext ctx(params);
    BigFloat top = ctx.eigenvalue(diag(n / 2, {}, {}));
    for_each_diagram(n / 2, [&](const TwoColumnDiagram& d) {
      if (d.empty()) return;
      CHECK(ctx.eigenvalue(d) < top);
    });
  }
}

TEST_CASE("sector spectrum at N=2") {
  LatticeParams params{2, Rational(1), 25};
  auto v0 = sector_spectrum(params, 0);
  REQUIRE(v0.size() == 2);
  CHECK(to_d(v0[0].lambda) == doctest::Approx(2.618033988749895).epsilon(1e-12));
  CHECK(to_d(v0[1].lambda) == doctest::Approx(0.381966011250105).epsilon(1e-12));
  CHECK(v0[0].lambda > v0[1].lambda);  // sorted descending
  auto v1 = sector_spectrum(params, 2);
  REQUIRE(v1.size() == 1);
  CHECK(to_d(v1[0].lambda) == doctest::Approx(1.0));
  // v = -1 is the same multiset as v = +1
  auto vm1 = sector_spectrum(params, -2);
  REQUIRE(vm1.size() == 1);
  CHECK(vm1[0].lambda == v1[0].lambda);
  CHECK_THROWS_AS(sector_spectrum(params, 1), DomainError);   // parity
  CHECK_THROWS_AS(sector_spectrum(params, 6), DomainError);   // range
}

TEST_CASE("odd-N sector merges the two excess classes") {
  LatticeParams params{3, Rational(1), 25};
  // N=3, v=1/2: w in {0, 1}: diagrams (-|-), (1|1), (-|1)
  auto pts = sector_spectrum(params, 1);
  REQUIRE(pts.size() == 3);
  CHECK(static_cast<std::size_t>(sector_dimension2(3, 1).get_si()) == pts.size());
  // v = 3/2: only w = 1 exists
  auto top = sector_spectrum(params, 3);
  REQUIRE(top.size() == 1);
  CHECK(top[0].diagram.str() == "(-|1)");
  // sector sizes over all v equal dim E_v, and each diagram shows up twice
  std::size_t total = 0;
  for (int two_v = -3; two_v <= 3; two_v += 2) total += sector_spectrum(params, two_v).size();
  CHECK(total == 8);  // 2^N
}

TEST_CASE("spectral points carry consistent energy") {
  LatticeParams params{5, Rational(2), 30};
  for (const SpectralPoint& pt : sector_spectrum(params, 1)) {
    CHECK(abs(pt.energy + log(pt.lambda) / 2).to_double() < 1e-25);
  }
}
