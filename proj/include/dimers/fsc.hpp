#ifndef DIMERS_FSC_HPP
#define DIMERS_FSC_HPP

#include <utility>
#include <vector>

#include "dimers/bigfloat.hpp"
#include "dimers/diagrams.hpp"
#include "dimers/poly.hpp"
#include "dimers/spectrum.hpp"

namespace dimers {

// Bernoulli numbers B_0..B_n (B_1 = -1/2), exact.
std::vector<Rational> bernoulli_numbers(int n);

// Bernoulli polynomial value B_n(x) = sum_k binom(n,k) B_k x^(n-k), exact.
Rational bernoulli_poly_at(int n, const Rational& x);

// B_n(0) and B_n(1/2); x restricted to the two points the expansion uses.
Rational bernoulli_at_zero(int n);
Rational bernoulli_at_half(int n);

// C_{l,n}: integer coefficients of sin^(2n+1) x = sum_{l>=n} C_{l,n} x^(2l+1)/(2l+1)!,
// from the alternating binomial sum; the division by 2^(2n+1) is asserted exact.
// Zero for n > l.
Int sine_power_coefficient(int l, int n);

// P_l(alpha) = sum_{k=0}^l (-1)^k (1/2)_k / ((2k+1) k!) * C_{l,k} alpha^(2k+1); odd powers only.
AlphaPoly p_polynomial(int l);

// Exact coefficient tables for the finite-size expansion.
struct FscTable {
  int l_max = 0;
  std::vector<Rational> bernoulli_half;  // B_{2l+2}(1/2), l = 0..l_max
  std::vector<Rational> bernoulli_zero;  // B_{2l+2}(0)
  std::vector<std::vector<Int>> c;       // C_{l,n}, 0 <= n <= l
  std::vector<AlphaPoly> p;              // P_l

  static FscTable build(int l_max);
  const Int& C(int l, int n) const { return c.at(l).at(n); }
};

// I_{2l+1}(D) = (l+1)/2^(l-1) * [ sum_{m in D} (2m-1)^(2l+1) + 2^(2l+1) B_{2l+2}(1/2)/(2l+2) ]
// for even parity; odd parity uses (2m)^(2l+1) and B_{2l+2}(0). Entries in
// both columns count twice.
Rational iom_eigenvalue(const TwoColumnDiagram& d, int l, Parity parity);

struct IomVector {
  TwoColumnDiagram diagram;
  Parity parity = Parity::even;
  std::vector<Rational> values;  // I_{2l+1}, l = 0..l_max
};

IomVector iom_values(const TwoColumnDiagram& d, int l_max, Parity parity);

// f_bulk(alpha) = -int_0^(pi/2) arcsinh(alpha sin t) dt by tanh-sinh
// quadrature with level doubling until two passes agree to the target.
BigFloat bulk_free_energy(const Rational& alpha, int precision_digits);

// f_bou(alpha) = 1/2 arcsinh(alpha).
BigFloat boundary_free_energy(const Rational& alpha, int precision_digits);

// Coefficient of (pi/(N+1))^(2l+1) in the expansion of E(D):
// P_l(alpha) I_{2l+1}(D) / ((2l+1)! 2^(l+2) (l+1)), exact.
Rational fsc_term_coefficient(const FscTable& table, const TwoColumnDiagram& d, int l,
                              const Rational& alpha, Parity parity);

// Shared tables plus the alpha-dependent quadrature, reused across sizes.
class FscEvaluator {
 public:
  FscEvaluator(Rational alpha, int precision_digits, int l_max);

  // (N+1)/pi f_bulk + f_bou + sum_{l<=l_max} (pi/(N+1))^(2l+1) c_l(D); the
  // diagram height must equal floor(N/2).
  BigFloat energy(int n, const TwoColumnDiagram& d) const;

  // Same expansion truncated at l_cut <= l_max.
  BigFloat energy_truncated(int n, const TwoColumnDiagram& d, int l_cut) const;

  const FscTable& table() const { return table_; }
  const BigFloat& bulk() const { return bulk_; }
  const BigFloat& boundary() const { return boundary_; }
  int l_max() const { return table_.l_max; }
  int precision_digits() const { return digits_; }

 private:
  Rational alpha_;
  int digits_;
  FscTable table_;
  BigFloat bulk_;
  BigFloat boundary_;
};

// Truncated master expansion of the energy of diagram D at width params.n.
BigFloat fsc_energy(const LatticeParams& params, const TwoColumnDiagram& d, int l_max);

// LHS - truncated RHS of the sine-power sum identity
//   sum_{m=1}^L sin^(2k+1)(theta_m)
//     = S/pi (1)_k/(3/2)_k - 1/2 - sum_{l=k}^{l_trunc} (pi/S)^(2l+1) B_{2l+2}(x)/(2l+2)! C_{l,k}
// with S = 2L+1, x = 1/2 for even parity and S = 2L+2, x = 0 for odd.
BigFloat sine_power_sum_check(int big_l, int k, int l_trunc, Parity parity, int precision_digits);

struct ResidualFit {
  double slope = 0;
  double intercept = 0;
  double expected_slope = 0;
  int l_max = 0;
  int precision_digits = 0;
  std::vector<std::pair<int, BigFloat>> residuals;  // (N, |energy - fsc_energy|)
};

// Log-log regression of |energy - fsc_energy(l_max)| against N over a
// same-parity grid; the slope should be -(2 l_max + 3). The diagram is given
// by its mode sets and rebuilt at each size.
ResidualFit residual_order_fit(const std::vector<int>& sizes, const std::vector<int>& eps_modes,
                               const std::vector<int>& mu_modes, const Rational& alpha, int l_max,
                               int precision_digits);

}  // namespace dimers

#endif
