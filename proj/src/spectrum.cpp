#include "dimers/spectrum.hpp"

#include <algorithm>

#include "dimers/errors.hpp"

namespace dimers {

void LatticeParams::validate() const {
  if (n < 1) throw DomainError("strip width must be >= 1");
  if (alpha < 0) throw DomainError("dimer weight alpha must be >= 0");
  if (precision_digits < 15) throw DomainError("precision must be >= 15 digits");
}

std::vector<BigFloat> momentum_angles(int n, int precision_digits) {
  if (n < 1) throw DomainError("strip width must be >= 1");
  Precision p = Precision::digits(precision_digits);
  BigFloat pi = BigFloat::pi(p);
  int height = n / 2;
  std::vector<BigFloat> out;
  out.reserve(height);
  for (int j = 1; j <= height; ++j) {
    if (n % 2 == 0)
      out.push_back(pi * (2 * j - 1) / (2 * (n + 1)));
    else
      out.push_back(pi * j / (n + 1));
  }
  return out;
}

SpectrumContext::SpectrumContext(LatticeParams params) : params_(std::move(params)) {
  params_.validate();
  Precision p = params_.precision();
  BigFloat alpha(params_.alpha, p);
  BigFloat one(1L, p);
  total_arcsinh_ = BigFloat(0L, p);
  total_base_ = BigFloat(1L, p);
  for (const BigFloat& theta : momentum_angles(params_.n, params_.precision_digits)) {
    BigFloat as = alpha * sin(theta);
    arcsinh_.push_back(asinh(as));
    base_.push_back(sqrt(one + as * as) + as);
    total_arcsinh_ += arcsinh_.back();
    total_base_ *= base_.back();
  }
}

void SpectrumContext::check_height(const TwoColumnDiagram& d) const {
  if (!d.valid() || d.max_height != params_.height())
    throw DomainError("diagram height does not match floor(N/2)");
}

namespace {

// Occupied mode indices in ascending order with multiplicity, so that
// rounding does not depend on which column an entry sits in.
std::vector<int> merged_entries(const TwoColumnDiagram& d) {
  std::vector<int> all;
  all.reserve(d.eps.size() + d.mu.size());
  std::merge(d.eps.begin(), d.eps.end(), d.mu.begin(), d.mu.end(), std::back_inserter(all));
  return all;
}

}  // namespace

BigFloat SpectrumContext::eigenvalue(const TwoColumnDiagram& d) const {
  check_height(d);
  // lambda = prod_j base^2 / prod_{k in D} base^2, entries with multiplicity
  BigFloat occupied(1L, params_.precision());
  for (int j : merged_entries(d)) occupied *= base_[j - 1];
  BigFloat ratio = total_base_ / occupied;
  return ratio * ratio;
}

BigFloat SpectrumContext::energy(const TwoColumnDiagram& d) const {
  check_height(d);
  BigFloat total = -total_arcsinh_;
  for (int j : merged_entries(d)) total += arcsinh_[j - 1];
  if (total.is_zero()) return BigFloat(0L, params_.precision());  // normalize -0
  return total;
}

SpectralPoint SpectrumContext::point(const TwoColumnDiagram& d) const {
  return SpectralPoint{d, eigenvalue(d), energy(d)};
}

BigFloat eigenvalue(const LatticeParams& params, const TwoColumnDiagram& d) {
  return SpectrumContext(params).eigenvalue(d);
}

BigFloat energy(const LatticeParams& params, const TwoColumnDiagram& d) {
  return SpectrumContext(params).energy(d);
}

std::vector<SpectralPoint> sector_spectrum(const LatticeParams& params, int two_v) {
  params.validate();
  SectorLabel{params.n, two_v}.validate();
  if (params.height() > kEnumerationBudgetMaxHeight)
    throw SizeError("sector spectrum enumeration budget exceeded (4^L states)");
  SpectrumContext ctx(params);
  std::vector<SpectralPoint> points;
  const int height = params.height();
  if (params.parity() == Parity::even) {
    int v = two_v / 2;
    for_each_diagram(height, [&](const TwoColumnDiagram& d) {
      if (variation_index(d) == v) points.push_back(ctx.point(d));
    });
  } else {
    int w_lo = (two_v - 1) / 2, w_hi = (two_v + 1) / 2;
    for_each_diagram(height, [&](const TwoColumnDiagram& d) {
      int w = excess_parameter(d);
      if (w == w_lo || w == w_hi) points.push_back(ctx.point(d));
    });
  }
  std::sort(points.begin(), points.end(), [](const SpectralPoint& a, const SpectralPoint& b) {
    if (a.lambda != b.lambda) return a.lambda > b.lambda;
    return a.diagram < b.diagram;
  });
  return points;
}

std::vector<SpectralPoint> sector_spectrum(const LatticeParams& params, const Rational& v) {
  Rational tv = v * 2;
  if (!is_integer(tv)) throw DomainError("sector index must be integer or half-integer");
  return sector_spectrum(params, static_cast<int>(tv.get_num().get_si()));
}

}  // namespace dimers
