#ifndef DIMERS_SPECTRUM_HPP
#define DIMERS_SPECTRUM_HPP

#include <vector>

#include "dimers/bigfloat.hpp"
#include "dimers/diagrams.hpp"

namespace dimers {

struct LatticeParams {
  int n = 2;                   // strip width
  Rational alpha = Rational(1);  // horizontal dimer weight
  int precision_digits = 15;

  void validate() const;
  int height() const { return n / 2; }  // L
  Parity parity() const { return parity_of(n); }
  Precision precision() const { return Precision::digits(precision_digits); }
};

// theta_j, j = 1..floor(N/2): pi(2j-1)/(2(N+1)) for even N, pi j/(N+1) for
// odd N. Strictly increasing, all in (0, pi/2).
std::vector<BigFloat> momentum_angles(int n, int precision_digits);

struct SpectralPoint {
  TwoColumnDiagram diagram;
  BigFloat lambda;
  BigFloat energy;
};

// Per-(N, alpha, precision) evaluation context. The angle-dependent factors
// are computed once; every diagram of the size reuses them.
class SpectrumContext {
 public:
  explicit SpectrumContext(LatticeParams params);

  const LatticeParams& params() const { return params_; }

  // lambda(D) = prod_j (sqrt(1 + alpha^2 sin^2 theta_j) + alpha sin theta_j)^(2(1-eps_j-mu_j))
  BigFloat eigenvalue(const TwoColumnDiagram& d) const;

  // E(D) = sum_{k in D} arcsinh(alpha sin theta_k) - sum_{k=1}^L arcsinh(alpha sin theta_k)
  //      = -1/2 log lambda(D)
  BigFloat energy(const TwoColumnDiagram& d) const;

  SpectralPoint point(const TwoColumnDiagram& d) const;

 private:
  void check_height(const TwoColumnDiagram& d) const;

  LatticeParams params_;
  std::vector<BigFloat> arcsinh_;  // arcsinh(alpha sin theta_j)
  std::vector<BigFloat> base_;     // sqrt(1 + alpha^2 sin^2 theta_j) + alpha sin theta_j
  BigFloat total_arcsinh_;         // sum over j
  BigFloat total_base_;            // product over j
};

BigFloat eigenvalue(const LatticeParams& params, const TwoColumnDiagram& d);
BigFloat energy(const LatticeParams& params, const TwoColumnDiagram& d);

// All spectral points of the T^2-sector E_v, sorted by descending lambda
// (ties broken by diagram order). Even N: diagrams of variation index v.
// Odd N: union of the excess classes w = v - 1/2 and w = v + 1/2.
std::vector<SpectralPoint> sector_spectrum(const LatticeParams& params, int two_v);
std::vector<SpectralPoint> sector_spectrum(const LatticeParams& params, const Rational& v);

}  // namespace dimers

#endif
