#include "dimers/fsc.hpp"

#include <cmath>

#include "dimers/errors.hpp"

namespace dimers {

std::vector<Rational> bernoulli_numbers(int n) {
  if (n < 0) throw DomainError("Bernoulli index must be >= 0");
  std::vector<Rational> b(n + 1);
  for (int m = 0; m <= n; ++m) {
    if (m == 0) {
      b[0] = 1;
      continue;
    }
    // sum_{j=0}^{m} binom(m+1,j) B_j = 0
    Rational acc(0);
    for (int j = 0; j < m; ++j) acc += Rational(binomial(m + 1, j)) * b[j];
    b[m] = -acc / Rational(binomial(m + 1, m));
  }
  return b;
}

Rational bernoulli_poly_at(int n, const Rational& x) {
  std::vector<Rational> b = bernoulli_numbers(n);
  Rational acc(0);
  Rational xp(1);  // x^(n-k) built from the top
  for (int k = n; k >= 0; --k) {
    acc += Rational(binomial(n, k)) * b[k] * xp;
    xp *= x;
  }
  return acc;
}

Rational bernoulli_at_zero(int n) { return bernoulli_numbers(n)[n]; }

Rational bernoulli_at_half(int n) { return bernoulli_poly_at(n, Rational(1, 2)); }

Int sine_power_coefficient(int l, int n) {
  if (l < 0 || n < 0) throw DomainError("sine power coefficient indices must be >= 0");
  if (n > l) return Int(0);
  // C_{l,n} = (-1)^(l+n+1) / 2^(2n+1) * sum_{k=0}^{2n+1} (-1)^k binom(2n+1,k) (2(k-n)-1)^(2l+1)
  Int acc(0);
  for (int k = 0; k <= 2 * n + 1; ++k) {
    Int term = binomial(2 * n + 1, k) * pow_int(2 * (k - n) - 1, 2 * l + 1);
    acc += (k % 2 == 0) ? term : -term;
  }
  if ((l + n + 1) % 2 != 0) acc = -acc;
  Int q, r;
  Int den = pow_int(2, 2 * n + 1);
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), acc.get_mpz_t(), den.get_mpz_t());
  if (r != 0) throw DomainError("sine power coefficient sum not divisible by 2^(2n+1)");
  return q;
}

AlphaPoly p_polynomial(int l) {
  AlphaPoly p;
  for (int k = 0; k <= l; ++k) {
    Rational coeff = pochhammer(Rational(1, 2), k) / (Rational(2 * k + 1) * Rational(factorial(k)));
    if (k % 2 != 0) coeff = -coeff;
    coeff *= Rational(sine_power_coefficient(l, k));
    p += AlphaPoly::monomial(coeff, 2 * k + 1);
  }
  return p;
}

FscTable FscTable::build(int l_max) {
  if (l_max < 0) throw DomainError("expansion order must be >= 0");
  FscTable t;
  t.l_max = l_max;
  std::vector<Rational> b = bernoulli_numbers(2 * l_max + 2);
  for (int l = 0; l <= l_max; ++l) {
    t.bernoulli_zero.push_back(b[2 * l + 2]);
    t.bernoulli_half.push_back(bernoulli_at_half(2 * l + 2));
    std::vector<Int> row;
    for (int n = 0; n <= l; ++n) row.push_back(sine_power_coefficient(l, n));
    t.c.push_back(std::move(row));
    t.p.push_back(p_polynomial(l));
  }
  return t;
}

Rational iom_eigenvalue(const TwoColumnDiagram& d, int l, Parity parity) {
  if (l < 0) throw DomainError("integral-of-motion index must be >= 0");
  Rational sum(0);
  for (const std::vector<int>* column : {&d.eps, &d.mu})
    for (int j : *column) {
      long base = parity == Parity::even ? 2 * j - 1 : 2 * j;
      sum += Rational(pow_int(base, 2 * l + 1));
    }
  Rational bern = parity == Parity::even ? bernoulli_at_half(2 * l + 2) : bernoulli_at_zero(2 * l + 2);
  sum += pow2(2 * l + 1) * bern / Rational(2 * l + 2);
  return Rational(l + 1) * pow2(1 - l) * sum;
}

IomVector iom_values(const TwoColumnDiagram& d, int l_max, Parity parity) {
  IomVector v;
  v.diagram = d;
  v.parity = parity;
  for (int l = 0; l <= l_max; ++l) v.values.push_back(iom_eigenvalue(d, l, parity));
  return v;
}

namespace {

// tanh-sinh nodes for int_0^(pi/2): t = pi/4 (1 + tanh(pi/2 sinh u)),
// weight pi^2/8 cosh u / cosh^2(pi/2 sinh u).
BigFloat quadrature_pass(const BigFloat& alpha, Precision p, const BigFloat& pi, int level,
                         const BigFloat& cutoff) {
  BigFloat h = BigFloat::exp2i(-level, p);
  BigFloat half_pi = pi / 2;
  BigFloat quarter_pi = pi / 4;
  BigFloat weight_scale = pi * pi / 8;
  auto term_at = [&](long k) {
    BigFloat u = h * k;
    BigFloat inner = half_pi * sinh(u);
    BigFloat sech = BigFloat(1L, p) / cosh(inner);
    BigFloat weight = weight_scale * cosh(u) * sech * sech;
    BigFloat t = quarter_pi * (BigFloat(1L, p) + tanh(inner));
    return weight * asinh(alpha * sin(t));
  };
  // symmetric walk outward from u = 0 until both tails are below the cutoff
  BigFloat sum = term_at(0);
  const long min_k = 5L << level;   // reach u = 5 before trusting the cutoff
  const long max_k = 12L << level;
  for (long k = 1; k <= max_k; ++k) {
    BigFloat pos = term_at(k);
    BigFloat neg = term_at(-k);
    sum += pos;
    sum += neg;
    if (k >= min_k && abs(pos) < cutoff && abs(neg) < cutoff) break;
  }
  return sum * h;
}

}  // namespace

BigFloat bulk_free_energy(const Rational& alpha, int precision_digits) {
  if (alpha < 0) throw DomainError("dimer weight alpha must be >= 0");
  Precision target = Precision::digits(precision_digits);
  Precision work = Precision::from_bits(target.bits + 64);
  if (alpha == 0) return BigFloat(0L, target);
  BigFloat a(alpha, work);
  BigFloat pi = BigFloat::pi(work);
  BigFloat tol = BigFloat::exp2i(-target.bits - 8, work);
  BigFloat cutoff = BigFloat::exp2i(-work.bits - 16, work);
  BigFloat prev(work);
  for (int level = 3; level <= 14; ++level) {
    BigFloat cur = quadrature_pass(a, work, pi, level, cutoff);
    if (!prev.is_nan()) {
      BigFloat diff = abs(cur - prev);
      BigFloat scale = abs(cur) > BigFloat(1L, work) ? abs(cur) : BigFloat(1L, work);
      if (diff <= tol * scale) return -cur;
    }
    prev = cur;
  }
  throw AccuracyError("bulk free energy quadrature did not reach the requested precision");
}

BigFloat boundary_free_energy(const Rational& alpha, int precision_digits) {
  if (alpha < 0) throw DomainError("dimer weight alpha must be >= 0");
  Precision p = Precision::digits(precision_digits);
  return asinh(BigFloat(alpha, p)) / 2;
}

Rational fsc_term_coefficient(const FscTable& table, const TwoColumnDiagram& d, int l,
                              const Rational& alpha, Parity parity) {
  if (l > table.l_max) throw DomainError("order exceeds table l_max");
  Rational p_val = table.p[l].eval(alpha);
  Rational iom = iom_eigenvalue(d, l, parity);
  Rational den = Rational(factorial(2 * l + 1)) * pow2(l + 2) * Rational(l + 1);
  return p_val * iom / den;
}

FscEvaluator::FscEvaluator(Rational alpha, int precision_digits, int l_max)
    : alpha_(std::move(alpha)),
      digits_(precision_digits),
      table_(FscTable::build(l_max)),
      bulk_(bulk_free_energy(alpha_, precision_digits)),
      boundary_(boundary_free_energy(alpha_, precision_digits)) {}

BigFloat FscEvaluator::energy(int n, const TwoColumnDiagram& d) const {
  return energy_truncated(n, d, table_.l_max);
}

BigFloat FscEvaluator::energy_truncated(int n, const TwoColumnDiagram& d, int l_cut) const {
  if (n < 1) throw DomainError("strip width must be >= 1");
  if (!d.valid() || d.max_height != n / 2) throw DomainError("diagram height does not match floor(N/2)");
  if (l_cut < 0 || l_cut > table_.l_max) throw DomainError("truncation exceeds table l_max");
  Parity parity = parity_of(n);
  Precision p = Precision::digits(digits_);
  BigFloat pi = BigFloat::pi(p);
  BigFloat scale(static_cast<long>(n) + 1, p);  // 2L+1 (even) or 2L+2 (odd)
  BigFloat h = pi / scale;
  BigFloat h2 = h * h;
  BigFloat total = scale / pi * bulk_ + boundary_;
  BigFloat hp = h;
  for (int l = 0; l <= l_cut; ++l) {
    Rational c = fsc_term_coefficient(table_, d, l, alpha_, parity);
    total += hp * BigFloat(c, p);
    hp *= h2;
  }
  return total;
}

BigFloat fsc_energy(const LatticeParams& params, const TwoColumnDiagram& d, int l_max) {
  params.validate();
  FscEvaluator eval(params.alpha, params.precision_digits, l_max);
  return eval.energy(params.n, d);
}

BigFloat sine_power_sum_check(int big_l, int k, int l_trunc, Parity parity, int precision_digits) {
  if (big_l < 1) throw DomainError("L must be >= 1");
  if (k < 0 || k > l_trunc) throw DomainError("need 0 <= k <= l_trunc");
  Precision p = Precision::digits(precision_digits);
  BigFloat pi = BigFloat::pi(p);
  long s = parity == Parity::even ? 2L * big_l + 1 : 2L * big_l + 2;
  BigFloat lhs(0L, p);
  for (int m = 1; m <= big_l; ++m) {
    BigFloat theta = parity == Parity::even ? pi * (2 * m - 1) / (2 * s) : pi * m / s;
    lhs += pow_int(sin(theta), 2 * k + 1);
  }
  Rational wallis = pochhammer(Rational(1), k) / pochhammer(Rational(3, 2), k);
  BigFloat rhs = BigFloat(s, p) / pi * BigFloat(wallis, p) - BigFloat(Rational(1, 2), p);
  BigFloat h = pi / BigFloat(s, p);
  for (int l = k; l <= l_trunc; ++l) {
    Rational bern = parity == Parity::even ? bernoulli_at_half(2 * l + 2) : bernoulli_at_zero(2 * l + 2);
    Rational coeff = bern / Rational(factorial(2 * l + 2)) * Rational(sine_power_coefficient(l, k));
    rhs -= pow_int(h, 2 * l + 1) * BigFloat(coeff, p);
  }
  return lhs - rhs;
}

ResidualFit residual_order_fit(const std::vector<int>& sizes, const std::vector<int>& eps_modes,
                               const std::vector<int>& mu_modes, const Rational& alpha, int l_max,
                               int precision_digits) {
  if (sizes.size() < 5) throw DomainError("residual fit needs a grid of >= 5 sizes");
  int parity_bit = sizes.front() % 2;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] % 2 != parity_bit) throw DomainError("residual fit grid must have fixed parity");
    if (i > 0 && sizes[i] <= sizes[i - 1]) throw DomainError("residual fit grid must be increasing");
  }
  int max_mode = 0;
  for (int j : eps_modes) max_mode = std::max(max_mode, j);
  for (int j : mu_modes) max_mode = std::max(max_mode, j);
  if (sizes.front() / 2 < max_mode) throw DomainError("diagram modes exceed smallest height in grid");

  FscEvaluator eval(alpha, precision_digits, l_max);
  ResidualFit fit;
  fit.l_max = l_max;
  fit.precision_digits = precision_digits;
  fit.expected_slope = -(2.0 * l_max + 3.0);

  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (int n : sizes) {
    LatticeParams params{n, alpha, precision_digits};
    TwoColumnDiagram d = TwoColumnDiagram::from_sets(n / 2, eps_modes, mu_modes);
    BigFloat exact = energy(params, d);
    BigFloat approx = eval.energy(n, d);
    BigFloat residual = abs(exact - approx);
    // the residual must stay well above the working precision floor ~ |E| 10^(6-digits)
    BigFloat magnitude = abs(exact) > BigFloat(1L, exact.prec()) ? abs(exact) : BigFloat(1L, exact.prec());
    BigFloat limit = magnitude * pow_int(BigFloat(10L, magnitude.prec()), 6 - precision_digits);
    if (residual < limit)
      throw PrecisionError("residual below working precision; raise --digits");
    fit.residuals.emplace_back(n, residual);
    double x = std::log(static_cast<double>(n));
    double y = std::log(residual.to_double());
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  double m = static_cast<double>(sizes.size());
  fit.slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  fit.intercept = (sy - fit.slope * sx) / m;
  return fit;
}

}  // namespace dimers
