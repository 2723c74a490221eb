#ifndef DIMERS_ORACLE_HPP
#define DIMERS_ORACLE_HPP

#include <algorithm>
#include <cstdint>
#include <vector>

#include "dimers/eigen_support.hpp"
#include "dimers/errors.hpp"
#include "dimers/exact.hpp"
#include "dimers/poly.hpp"

namespace dimers {

// Arrow-basis encoding: site i in 1..N maps to bit i-1, up arrow = set bit.
// An up arrow at site i means a vertical dimer covers the site and its
// northern neighbour in the next row.

inline constexpr int kDenseBudgetN = 14;

inline void check_dense_budget(int n) {
  if (n < 1) throw DomainError("lattice width must be >= 1");
  if (n > kDenseBudgetN) throw SizeError("dense operator budget exceeded (N <= 14)");
}

// V1 = prod_i sigma^x_i: flips every arrow in a row.
template <class S>
DenseOperator<S> build_v1(int n) {
  check_dense_budget(n);
  const std::uint32_t dim = 1u << n, mask = dim - 1;
  DenseOperator<S> m(dim, dim);
  m.setZero();
  for (std::uint32_t c = 0; c < dim; ++c) m((~c) & mask, c) = S(1);
  return m;
}

enum class FactorOrder { ascending, descending };

// V3 = prod_{i=1}^{N-1} (1 + alpha sigma^-_i sigma^-_{i+1}), factors applied
// in the given site order. Each alpha term lowers an adjacent up-up pair,
// creating one horizontal dimer.
template <class S>
DenseOperator<S> build_v3(int n, const S& alpha, FactorOrder order = FactorOrder::ascending) {
  check_dense_budget(n);
  const std::uint32_t dim = 1u << n;
  DenseOperator<S> m(dim, dim);
  m.setZero();
  for (std::uint32_t c = 0; c < dim; ++c) m(c, c) = S(1);
  std::vector<int> sites;
  for (int i = 1; i <= n - 1; ++i) sites.push_back(i);
  if (order == FactorOrder::descending) std::reverse(sites.begin(), sites.end());
  for (int i : sites) {
    const std::uint32_t pair = (1u << (i - 1)) | (1u << i);
    // M <- M (1 + alpha K_i): columns c with the pair up gain alpha * column(c ^ pair).
    // The source column has the pair down, so it is not itself updated by this factor.
    for (std::uint32_t c = 0; c < dim; ++c) {
      if ((c & pair) != pair) continue;
      const std::uint32_t src = c ^ pair;
      for (std::uint32_t r = 0; r < dim; ++r) {
        if (scalar_is_zero(m(r, src))) continue;
        m(r, c) += alpha * m(r, src);
      }
    }
  }
  return m;
}

// T = V3 V1; V1 is the arrow-complement permutation, so T is V3 with
// permuted columns.
template <class S>
DenseOperator<S> transfer_matrix(int n, const S& alpha) {
  DenseOperator<S> v3 = build_v3<S>(n, alpha);
  const std::uint32_t dim = 1u << n, mask = dim - 1;
  DenseOperator<S> t(dim, dim);
  for (std::uint32_t c = 0; c < dim; ++c) t.col(c) = v3.col((~c) & mask);
  return t;
}

// Diagonal of the variation operator V = 1/2 sum_i (-1)^i sigma^z_i, with
// sigma^z |up> = +|up> and the sign starting at -1 for site i = 1.
std::vector<Rational> variation_values(int n);
DenseOperator<Rational> variation_operator(int n);

inline double scale(double x, const Rational& f) { return x * f.get_d(); }
inline Rational scale(const Rational& x, const Rational& f) { return x * f; }
inline AlphaPoly scale(const AlphaPoly& x, const Rational& f) { return x * f; }

// (diag A + A diag) and [diag, A] for a diagonal operator given by its values.
template <class S>
DenseOperator<S> anticommutator_with_diagonal(const std::vector<Rational>& diag, const DenseOperator<S>& a) {
  DenseOperator<S> r(a.rows(), a.cols());
  r.setZero();
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (scalar_is_zero(a(i, j))) continue;
      Rational f = diag[i] + diag[j];
      if (f != 0) r(i, j) = scale(a(i, j), f);
    }
  return r;
}

template <class S>
DenseOperator<S> commutator_with_diagonal(const std::vector<Rational>& diag, const DenseOperator<S>& a) {
  DenseOperator<S> r(a.rows(), a.cols());
  r.setZero();
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (scalar_is_zero(a(i, j))) continue;
      Rational f = diag[i] - diag[j];
      if (f != 0) r(i, j) = scale(a(i, j), f);
    }
  return r;
}

// Tr op^m by repeated multiplication.
template <class S>
S trace_power(const DenseOperator<S>& op, int m) {
  if (m < 1) throw DomainError("power must be >= 1");
  DenseOperator<S> acc = op;
  for (int k = 1; k < m; ++k) acc = multiply(acc, op);
  return matrix_trace(acc);
}

struct CylinderInstance {
  int n = 2;       // sites per row (open direction)
  int m = 2;       // rows (periodic transfer direction)
  Rational alpha = Rational(1);

  void validate() const {
    if (n < 1 || m < 1) throw DomainError("cylinder dimensions must be >= 1");
    if (m % 2 != 0) throw DomainError("transfer circumference M must be even");
    check_enumeration_budget(n, m);
  }
  static void check_enumeration_budget(int n, int m) {
    if (n < 1 || m < 1) throw DomainError("cylinder dimensions must be >= 1");
    if (n * m > 64) throw SizeError("matching enumeration budget exceeded (N*M <= 64)");
    if (n > 12) throw SizeError("matching enumeration budget exceeded (N <= 12 row profiles)");
  }
};

namespace detail {

// Enumerates the ways to fill one row given the sites already covered from
// below: every free site either starts a vertical dimer (bit in `out`) or
// pairs with its free right neighbour as a horizontal dimer.
template <class S>
void fill_row(int n, std::uint32_t covered, int site, std::uint32_t out, const S& weight,
              const S& alpha, std::vector<S>& next) {
  while (site < n && (covered >> site) & 1u) ++site;
  if (site == n) {
    next[out] += weight;
    return;
  }
  fill_row(n, covered, site + 1, out | (1u << site), weight, alpha, next);
  if (site + 1 < n && !((covered >> (site + 1)) & 1u))
    fill_row(n, covered, site + 2, out, S(weight * alpha), alpha, next);
}

}  // namespace detail

// Weighted count of dimer coverings of the N x M cylinder (open across the
// strip, periodic along the transfer direction), alpha per horizontal dimer.
// Row-profile DP: for each seam profile, propagate M rows and demand the
// profile returns to itself. Vertical dimers are directional (site plus its
// northern neighbour), so the M = 2 cylinder distinguishes the two parallel
// edges between a site pair, matching Tr T^M.
template <class S>
S brute_force_z(int n, int m, const S& alpha) {
  CylinderInstance::check_enumeration_budget(n, m);
  const std::uint32_t dim = 1u << n;
  S total(0);
  std::vector<S> cur(dim), next(dim);
  for (std::uint32_t seam = 0; seam < dim; ++seam) {
    std::fill(cur.begin(), cur.end(), S(0));
    cur[seam] = S(1);
    for (int row = 0; row < m; ++row) {
      std::fill(next.begin(), next.end(), S(0));
      for (std::uint32_t c = 0; c < dim; ++c) {
        if (scalar_is_zero(cur[c])) continue;
        detail::fill_row<S>(n, c, 0, 0, cur[c], alpha, next);
      }
      cur.swap(next);
    }
    total += cur[seam];
  }
  return total;
}

// Symbolic partition function: exact polynomial in alpha with nonnegative
// integer coefficients (covering counts).
CountPoly brute_force_z_poly(int n, int m);

}  // namespace dimers

#endif
