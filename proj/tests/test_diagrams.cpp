#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>

#include "dimers/diagrams.hpp"
#include "dimers/errors.hpp"

using namespace dimers;

namespace {

// Laurent polynomial in t^(1/2), keyed by twice the exponent.
using HalfLaurent = std::map<int, Int>;

// (sqrt(t) + 1/sqrt(t))^N by repeated convolution, independent of any
// binomial formula.
HalfLaurent sqrt_t_binomial_power(int n) {
  HalfLaurent acc{{0, Int(1)}};
  for (int i = 0; i < n; ++i) {
    HalfLaurent next;
    for (const auto& [e, c] : acc) {
      next[e + 1] += c;
      next[e - 1] += c;
    }
    acc = std::move(next);
  }
  return acc;
}

}  // namespace

TEST_CASE("diagram construction and serialization") {
  TwoColumnDiagram d = TwoColumnDiagram::from_sets(3, {1, 2}, {3});
  CHECK(d.valid());
  CHECK(d.eps == std::vector<int>{1, 2});
  CHECK(d.mu == std::vector<int>{3});
  CHECK(d.multiplicity(1) == 1);
  CHECK(d.multiplicity(3) == 1);
  CHECK(d.str() == "(1,2|3)");
  CHECK(TwoColumnDiagram::from_sets(2, {}, {}).str() == "(-|-)");
  CHECK(TwoColumnDiagram::from_sets(1, {1}, {1}).multiplicity(1) == 2);
  CHECK_THROWS_AS(TwoColumnDiagram::from_sets(2, {3}, {}), DomainError);
  CHECK_THROWS_AS(TwoColumnDiagram::from_sets(2, {1, 1}, {}), DomainError);
}

TEST_CASE("enumeration counts 4^L distinct diagrams") {
  CHECK(enumerate_diagrams(0).size() == 1);
  CHECK(enumerate_diagrams(0).front().empty());
  auto d1 = enumerate_diagrams(1);
  REQUIRE(d1.size() == 4);
  std::set<std::string> seen;
  for (const auto& d : d1) seen.insert(d.str());
  CHECK(seen == std::set<std::string>{"(-|-)", "(1|-)", "(-|1)", "(1|1)"});
  CHECK(enumerate_diagrams(3).size() == 64);
  // deterministic order, all valid, all distinct
  auto d3a = enumerate_diagrams(3);
  auto d3b = enumerate_diagrams(3);
  for (std::size_t i = 0; i < d3a.size(); ++i) {
    CHECK(d3a[i] == d3b[i]);
    CHECK(d3a[i].valid());
  }
  CHECK_THROWS_AS(enumerate_diagrams(11), SizeError);
}

TEST_CASE("variation index and excess parameter") {
  CHECK(variation_index(TwoColumnDiagram::from_sets(1, {}, {})) == 0);
  CHECK(variation_index(TwoColumnDiagram::from_sets(1, {1}, {})) == -1);
  CHECK(variation_index(TwoColumnDiagram::from_sets(3, {1, 2}, {3})) == -1);
  CHECK(excess_parameter(TwoColumnDiagram::from_sets(2, {}, {})) == 0);
  CHECK(excess_parameter(TwoColumnDiagram::from_sets(2, {}, {2})) == 1);
  CHECK(excess_parameter(TwoColumnDiagram::from_sets(1, {1}, {1})) == 0);
}

TEST_CASE("sector enumeration filters the full set") {
  auto s0 = enumerate_sector(1, 0);
  REQUIRE(s0.size() == 2);
  CHECK(s0[0].str() == "(-|-)");
  CHECK(s0[1].str() == "(1|1)");
  auto s1 = enumerate_sector(1, 1);
  REQUIRE(s1.size() == 1);
  CHECK(s1[0].str() == "(-|1)");
  // brute-force filter of the 16 diagrams at L=2
  int count = 0;
  for (const auto& d : enumerate_diagrams(2))
    if (variation_index(d) == 0) ++count;
  CHECK(enumerate_sector(2, 0).size() == static_cast<std::size_t>(count));
  CHECK(count == 6);
  CHECK(enumerate_sector(2, 3).empty());  // |v| > L is empty, not an error
}

TEST_CASE("partition property: sectors tile the diagram set") {
  for (int l = 0; l <= 8; ++l) {
    std::size_t total = 0;
    for (int v = -l; v <= l; ++v) total += enumerate_sector(l, v).size();
    CHECK(total == (1ull << (2 * l)));
  }
}

TEST_CASE("sector dimensions") {
  CHECK(sector_dimension2(4, 0) == 6);
  CHECK(sector_dimension2(4, 4) == 1);
  // N=3, v=1/2: exhaustive count over the 8 arrow states of sum (-1)^i s_i/2
  int count = 0;
  for (int s = 0; s < 8; ++s) {
    int twice = 0;
    for (int i = 1; i <= 3; ++i) {
      int sz = (s >> (i - 1)) & 1 ? 1 : -1;
      twice += (i % 2 == 0 ? 1 : -1) * sz;
    }
    if (twice == 1) ++count;
  }
  CHECK(count == 3);
  CHECK(sector_dimension2(3, 1) == 3);
  CHECK(sector_dimension(3, Rational(1, 2)) == 3);
  CHECK_THROWS_AS(sector_dimension2(4, 1), DomainError);   // parity mismatch
  CHECK_THROWS_AS(sector_dimension2(4, 6), DomainError);   // out of range
  CHECK_THROWS_AS(sector_dimension(4, Rational(1, 3)), DomainError);
}

TEST_CASE("dimension symmetry and generating function") {
  for (int n = 1; n <= 12; ++n) {
    HalfLaurent oracle = sqrt_t_binomial_power(n);
    for (int two_v = -n; two_v <= n; two_v += 2) {
      CHECK(sector_dimension2(n, two_v) == sector_dimension2(n, -two_v));
      CHECK(sector_dimension2(n, two_v) == oracle[two_v]);
    }
    Int total(0);
    for (int two_v = -n; two_v <= n; two_v += 2) total += sector_dimension2(n, two_v);
    CHECK(total == pow_int(2, n));
  }
}

TEST_CASE("conformal exponents") {
  CHECK(conformal_exponent(TwoColumnDiagram::from_sets(2, {}, {}), Parity::even) == 0);
  CHECK(conformal_exponent(TwoColumnDiagram::from_sets(1, {1}, {1}), Parity::even) == 1);
  CHECK(conformal_exponent(TwoColumnDiagram::from_sets(2, {2}, {1}), Parity::odd) == 3);
  CHECK(conformal_exponent(TwoColumnDiagram::from_sets(3, {1, 3}, {}), Parity::even) ==
        Rational(1, 2) + Rational(5, 2));
  CHECK(conformal_exponent(TwoColumnDiagram::from_sets(1, {1}, {1}), Parity::odd) == 2);
}

TEST_CASE("sector label validation") {
  SectorLabel good{4, 2};
  good.validate();
  CHECK(good.v() == 1);
  CHECK((SectorLabel{3, 1}.v()) == Rational(1, 2));
  CHECK_THROWS_AS((SectorLabel{4, 1}.validate()), DomainError);
  CHECK_THROWS_AS((SectorLabel{4, 8}.validate()), DomainError);
}
