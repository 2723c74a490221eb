#include "dimers/qseries.hpp"

#include <algorithm>
#include <sstream>

#include "dimers/errors.hpp"

namespace dimers {

void RationalQSeries::canonicalize() {
  if (trunc_ != kUntruncated) {
    long max_keep = trunc_ - offset_;
    if (max_keep < 0)
      coef_.clear();
    else if (static_cast<long>(coef_.size()) > max_keep + 1)
      coef_.resize(max_keep + 1);
  }
  std::size_t lead = 0;
  while (lead < coef_.size() && coef_[lead] == 0) ++lead;
  if (lead > 0) {
    coef_.erase(coef_.begin(), coef_.begin() + lead);
    offset_ += static_cast<long>(lead);
  }
  while (!coef_.empty() && coef_.back() == 0) coef_.pop_back();
  if (coef_.empty()) offset_ = 0;
}

RationalQSeries RationalQSeries::monomial(const Rational& coeff, long grain_exponent) {
  RationalQSeries s;
  if (coeff != 0) {
    s.offset_ = grain_exponent;
    s.coef_.assign(1, coeff);
  }
  return s;
}

RationalQSeries RationalQSeries::from_q_poly(const std::vector<Int>& coeffs, long grain_offset) {
  RationalQSeries s;
  s.offset_ = grain_offset;
  s.coef_.assign(coeffs.empty() ? 0 : (coeffs.size() - 1) * kGrain + 1, Rational(0));
  for (std::size_t i = 0; i < coeffs.size(); ++i) s.coef_[i * kGrain] = Rational(coeffs[i]);
  s.canonicalize();
  return s;
}

RationalQSeries RationalQSeries::truncated(std::vector<Rational> coeffs, long grain_offset,
                                           long truncation) {
  RationalQSeries s;
  s.offset_ = grain_offset;
  s.coef_ = std::move(coeffs);
  s.trunc_ = truncation;
  s.canonicalize();
  return s;
}

Rational RationalQSeries::coefficient(long grain_exponent) const {
  if (grain_exponent > trunc_) throw DomainError("coefficient beyond series truncation");
  long idx = grain_exponent - offset_;
  if (coef_.empty() || idx < 0 || idx >= static_cast<long>(coef_.size())) return Rational(0);
  return coef_[idx];
}

RationalQSeries RationalQSeries::shifted(long grains) const {
  RationalQSeries s = *this;
  if (!s.coef_.empty()) s.offset_ += grains;
  if (s.trunc_ != kUntruncated) s.trunc_ += grains;
  return s;
}

namespace {
long min_or(const RationalQSeries& s, long fallback) {
  auto m = s.min_exponent();
  return m ? *m : fallback;
}
}  // namespace

RationalQSeries operator+(const RationalQSeries& a, const RationalQSeries& b) {
  RationalQSeries r;
  r.trunc_ = std::min(a.trunc_, b.trunc_);
  if (a.coef_.empty() && b.coef_.empty()) return r;
  long lo = std::min(a.coef_.empty() ? b.offset_ : a.offset_, b.coef_.empty() ? a.offset_ : b.offset_);
  long hi_a = a.offset_ + static_cast<long>(a.coef_.size()) - 1;
  long hi_b = b.offset_ + static_cast<long>(b.coef_.size()) - 1;
  long hi = std::max(a.coef_.empty() ? hi_b : hi_a, b.coef_.empty() ? hi_a : hi_b);
  hi = std::min(hi, r.trunc_ == RationalQSeries::kUntruncated ? hi : r.trunc_);
  if (hi < lo) return r;
  r.offset_ = lo;
  r.coef_.assign(hi - lo + 1, Rational(0));
  for (long e = lo; e <= hi; ++e) {
    long ia = e - a.offset_, ib = e - b.offset_;
    if (ia >= 0 && ia < static_cast<long>(a.coef_.size())) r.coef_[e - lo] += a.coef_[ia];
    if (ib >= 0 && ib < static_cast<long>(b.coef_.size())) r.coef_[e - lo] += b.coef_[ib];
  }
  r.canonicalize();
  return r;
}

RationalQSeries RationalQSeries::operator-() const {
  RationalQSeries r = *this;
  for (auto& c : r.coef_) c = -c;
  return r;
}

RationalQSeries operator-(const RationalQSeries& a, const RationalQSeries& b) { return a + (-b); }

RationalQSeries operator*(const RationalQSeries& a, const RationalQSeries& b) {
  if (a.is_zero_exact() || b.is_zero_exact()) return RationalQSeries();
  RationalQSeries r;
  // reliable exponent bound: every decomposition must stay in known range
  long min_a = min_or(a, a.trunc_ + 1);
  long min_b = min_or(b, b.trunc_ + 1);
  if (a.trunc_ != RationalQSeries::kUntruncated || b.trunc_ != RationalQSeries::kUntruncated) {
    long bound_a = a.trunc_ == RationalQSeries::kUntruncated ? RationalQSeries::kUntruncated
                                                             : a.trunc_ + min_b;
    long bound_b = b.trunc_ == RationalQSeries::kUntruncated ? RationalQSeries::kUntruncated
                                                             : b.trunc_ + min_a;
    r.trunc_ = std::min(bound_a, bound_b);
  }
  if (a.coef_.empty() || b.coef_.empty()) return r;
  long lo = a.offset_ + b.offset_;
  long hi = lo + static_cast<long>(a.coef_.size() + b.coef_.size()) - 2;
  if (r.trunc_ != RationalQSeries::kUntruncated) hi = std::min(hi, r.trunc_);
  if (hi < lo) return r;
  r.offset_ = lo;
  r.coef_.assign(hi - lo + 1, Rational(0));
  for (std::size_t i = 0; i < a.coef_.size(); ++i) {
    if (a.coef_[i] == 0) continue;
    long base = a.offset_ + static_cast<long>(i) + b.offset_ - lo;
    for (std::size_t j = 0; j < b.coef_.size(); ++j) {
      long k = base + static_cast<long>(j);
      if (k > hi - lo) break;
      if (b.coef_[j] == 0) continue;
      r.coef_[k] += a.coef_[i] * b.coef_[j];
    }
  }
  r.canonicalize();
  return r;
}

RationalQSeries operator*(const Rational& s, const RationalQSeries& p) {
  if (s == 0) return RationalQSeries();
  RationalQSeries r = p;
  for (auto& c : r.coef_) c *= s;
  return r;
}

bool exact_equal(const RationalQSeries& a, const RationalQSeries& b) {
  if (!a.is_exact() || !b.is_exact())
    throw DomainError("exact_equal requires untruncated series");
  return a.offset_ == b.offset_ && a.coef_ == b.coef_;
}

std::optional<long> first_mismatch(const RationalQSeries& a, const RationalQSeries& b,
                                   long max_grain) {
  long known = std::min({a.trunc_, b.trunc_, max_grain});
  long lo_a = min_or(a, known + 1), lo_b = min_or(b, known + 1);
  long lo = std::min(lo_a, lo_b);
  for (long e = lo; e <= known; ++e)
    if (a.coefficient(e) != b.coefficient(e)) return e;
  return std::nullopt;
}

Rational RationalQSeries::value_at_one() const {
  if (!is_exact()) throw DomainError("q -> 1 specialization requires an untruncated series");
  Rational acc(0);
  for (const auto& c : coef_) acc += c;
  return acc;
}

bool RationalQSeries::integer_coefficients() const {
  for (const auto& c : coef_)
    if (!is_integer(c)) return false;
  return true;
}

std::string RationalQSeries::str() const {
  if (coef_.empty()) return is_exact() ? "0" : "0 + O(...)";
  std::ostringstream os;
  bool leading = true;
  for (std::size_t i = 0; i < coef_.size(); ++i) {
    if (coef_[i] == 0) continue;
    long e = offset_ + static_cast<long>(i);
    if (!leading) os << " + ";
    os << coef_[i].get_str();
    if (e != 0) {
      os << "*q^(";
      if (e % kGrain == 0)
        os << e / kGrain;
      else
        os << make_rational(e, kGrain).get_str();
      os << ")";
    }
    leading = false;
  }
  if (!is_exact()) os << " + O(q^(" << make_rational(trunc_ + 1, kGrain).get_str() << "))";
  return os.str();
}

Rational kac_weight(int r, int s) {
  if (r < 1 || s < 1) throw DomainError("Kac labels must be >= 1");
  long d = 2L * r - s;
  return make_rational(d * d - 1, 8);
}

namespace {

// integer-coefficient polynomials over integer powers of q
using QPoly = std::vector<Int>;

QPoly qp_one() { return QPoly{Int(1)}; }

void qp_trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly qp_add_shifted(const QPoly& a, const QPoly& b, int shift) {
  QPoly r = a;
  if (r.size() < b.size() + shift) r.resize(b.size() + shift, Int(0));
  for (std::size_t i = 0; i < b.size(); ++i) r[i + shift] += b[i];
  qp_trim(r);
  return r;
}

QPoly qp_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  qp_trim(r);
  return r;
}

// exact division; throws on a nonzero remainder
QPoly qp_div_exact(QPoly num, const QPoly& den) {
  qp_trim(num);
  if (den.empty() || den.back() == 0) throw DomainError("division by zero polynomial");
  if (num.empty()) return {};
  if (num.size() < den.size()) throw DomainError("non-exact polynomial division");
  QPoly quot(num.size() - den.size() + 1, Int(0));
  for (long d = static_cast<long>(num.size()) - 1; d >= static_cast<long>(den.size()) - 1; --d) {
    Int c = num[d];
    if (c == 0) continue;
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), c.get_mpz_t(), den.back().get_mpz_t());
    if (r != 0) throw DomainError("non-exact polynomial division");
    long base = d - static_cast<long>(den.size()) + 1;
    quot[base] = q;
    for (std::size_t i = 0; i < den.size(); ++i) num[base + i] -= q * den[i];
  }
  for (const Int& c : num)
    if (c != 0) throw DomainError("non-exact polynomial division");
  return quot;
}

// 1 - q^d
QPoly qp_one_minus_power(int d) {
  QPoly p(d + 1, Int(0));
  p[0] = 1;
  p[d] = -1;
  return p;
}

QPoly q_binomial_coeffs(int a, int b) {
  if (b < 0 || b > a) return {};
  // Pascal: [n,k] = [n-1,k-1] + q^k [n-1,k], built up in n with k descending
  std::vector<QPoly> row(a + 1);
  row[0] = qp_one();
  for (int n = 1; n <= a; ++n)
    for (int k = std::min(n, b); k >= 1; --k) {
      QPoly shifted;  // q^k * [n-1,k]
      const QPoly& prev = row[k];
      if (!prev.empty()) {
        shifted.assign(prev.size() + k, Int(0));
        for (std::size_t i = 0; i < prev.size(); ++i) shifted[i + k] = prev[i];
      }
      row[k] = qp_add_shifted(shifted, row[k - 1], 0);
    }
  return row[b];
}

}  // namespace

RationalQSeries q_binomial(int a, int b) {
  if (a < 0) return RationalQSeries::zero();
  return RationalQSeries::from_q_poly(q_binomial_coeffs(a, b), 0);
}

RationalQSeries sector_partition_even(int big_l, int v) {
  if (big_l < 0 || big_l > kQSeriesBudgetMaxHeight)
    throw SizeError("sector enumeration budget exceeded");
  // exponents: -1/24 + sum (j - 1/2), i.e. grains -1 + 12 * sum (2j - 1)
  std::vector<Rational> acc(24 * big_l * big_l + 1, Rational(0));
  for_each_diagram(big_l, [&](const TwoColumnDiagram& d) {
    if (variation_index(d) != v) return;
    long grains = 0;
    for (const std::vector<int>* column : {&d.eps, &d.mu})
      for (int j : *column) grains += 12L * (2 * j - 1);
    acc[grains] += 1;
  });
  return RationalQSeries::truncated(std::move(acc), -1, RationalQSeries::kUntruncated);
}

RationalQSeries sector_partition_even_closed(int big_l, int v) {
  long av = v < 0 ? -v : v;
  // q^(1/12 + Delta_{|v|+1,2}) = q^((12 v^2 - 1)/24)
  return q_binomial(2 * big_l, big_l - v).shifted(12 * av * av - 1);
}

RationalQSeries sector_partition_odd(int big_l, int two_v) {
  if (big_l < 0 || big_l > kQSeriesBudgetMaxHeight)
    throw SizeError("sector enumeration budget exceeded");
  if ((two_v & 1) == 0) throw DomainError("odd-N sector index must be half-integer");
  int w_lo = (two_v - 1) / 2, w_hi = (two_v + 1) / 2;
  std::vector<Rational> acc(48 * big_l * big_l + 1, Rational(0));
  for_each_diagram(big_l, [&](const TwoColumnDiagram& d) {
    int w = excess_parameter(d);
    if (w != w_lo && w != w_hi) return;
    long grains = 0;
    for (const std::vector<int>* column : {&d.eps, &d.mu})
      for (int j : *column) grains += 24L * j;
    acc[grains] += 1;
  });
  return RationalQSeries::truncated(std::move(acc), 2, RationalQSeries::kUntruncated);
}

RationalQSeries sector_partition_odd_closed(int big_l, int two_v) {
  if ((two_v & 1) == 0) throw DomainError("odd-N sector index must be half-integer");
  long atv = two_v < 0 ? -two_v : two_v;
  // q^(1/12 + Delta_{|v|+1/2,1}) = q^((3 (2v)^2 - 1)/24)
  return q_binomial(2 * big_l + 1, big_l + (1 - two_v) / 2).shifted(3 * atv * atv - 1);
}

RationalQSeries finitized_character(int r, int s, int n) {
  if (r < 1) throw DomainError("character label r must be >= 1");
  if (s == 2) {
    if (n < 2 || n % 2 != 0) throw DomainError("ch_{r,2} requires even N");
    QPoly binom = q_binomial_coeffs(n + 2, n / 2 - r + 1);
    if (binom.empty()) return RationalQSeries::zero();
    QPoly num = qp_mul(qp_one_minus_power(2 * r), binom);
    QPoly quot = qp_div_exact(std::move(num), qp_one_minus_power(n + 2));
    // q^(-c/24 + Delta_{r,2}) = q^((12 (r-1)^2 - 1)/24)
    return RationalQSeries::from_q_poly(quot, 12L * (r - 1) * (r - 1) - 1);
  }
  if (s == 1) {
    if (n < 1 || n % 2 != 1) throw DomainError("ch_{r,1} requires odd N");
    QPoly binom = q_binomial_coeffs(n + 1, (n + 1) / 2 - r);
    if (binom.empty()) return RationalQSeries::zero();
    QPoly num = qp_mul(qp_one_minus_power(r), binom);
    QPoly quot = qp_div_exact(std::move(num), qp_one_minus_power((n + 1) / 2));
    // q^(-c/24 + Delta_{r,1}) = q^((12 r (r-1) + 2)/24)
    return RationalQSeries::from_q_poly(quot, 12L * r * (r - 1) + 2);
  }
  throw DomainError("character column s must be 1 or 2");
}

CharacterSumResult character_sum_identity(int big_l, int two_v, Parity parity) {
  CharacterSumResult res;
  if (parity == Parity::even) {
    if (two_v % 2 != 0) throw DomainError("even-N sector index must be an integer");
    int v = two_v / 2;
    if (v < -big_l || v > big_l) throw DomainError("sector index out of range |v| <= L");
    res.partition = sector_partition_even_closed(big_l, v);
    int av = v < 0 ? -v : v;
    res.r_first = av + 1;
    RationalQSeries sum;
    for (int r = res.r_first; r <= big_l + 1; r += 2) {
      sum += finitized_character(r, 2, 2 * big_l);
      res.r_last = r;
    }
    res.character_sum = sum;
  } else {
    if (two_v % 2 == 0) throw DomainError("odd-N sector index must be half-integer");
    int atv = two_v < 0 ? -two_v : two_v;
    if (atv > 2 * big_l + 1) throw DomainError("sector index out of range |v| <= N/2");
    res.partition = sector_partition_odd_closed(big_l, two_v);
    res.r_first = (atv + 1) / 2;
    RationalQSeries sum;
    for (int r = res.r_first; r <= big_l + 1; ++r) {
      sum += finitized_character(r, 1, 2 * big_l + 1);
      res.r_last = r;
    }
    res.character_sum = sum;
  }
  res.holds = exact_equal(res.partition, res.character_sum);
  return res;
}

RationalQSeries eta_inverse_truncated(int order) {
  if (order < 0) throw DomainError("truncation order must be >= 0");
  // partition numbers by the pentagonal-number recurrence
  std::vector<Int> p(order + 1);
  p[0] = 1;
  for (int n = 1; n <= order; ++n) {
    Int acc(0);
    for (int k = 1;; ++k) {
      long g1 = static_cast<long>(k) * (3 * k - 1) / 2;
      long g2 = static_cast<long>(k) * (3 * k + 1) / 2;
      if (g1 > n && g2 > n) break;
      Int term(0);
      if (g1 <= n) term += p[n - g1];
      if (g2 <= n) term += p[n - g2];
      acc += (k % 2 == 1) ? term : -term;
    }
    p[n] = acc;
  }
  std::vector<Rational> coef(24L * order + 1, Rational(0));
  for (int n = 0; n <= order; ++n) coef[24L * n] = Rational(p[n]);
  return RationalQSeries::truncated(std::move(coef), -1, 24L * order - 1);
}

RationalQSeries euler_product_truncated(int order) {
  if (order < 0) throw DomainError("truncation order must be >= 0");
  std::vector<Rational> coef(24L * order + 1, Rational(0));
  coef[0] = 1;
  for (int k = 1;; ++k) {
    long g1 = static_cast<long>(k) * (3 * k - 1) / 2;
    long g2 = static_cast<long>(k) * (3 * k + 1) / 2;
    if (g1 > order && g2 > order) break;
    Rational sign = (k % 2 == 1) ? Rational(-1) : Rational(1);
    if (g1 <= order) coef[24L * g1] += sign;
    if (g2 <= order) coef[24L * g2] += sign;
  }
  return RationalQSeries::truncated(std::move(coef), 0, 24L * order);
}

ContinuumCheck continuum_limit_check(int two_v, int order, int big_l) {
  if (order < 1) throw DomainError("comparison order must be >= 1");
  RationalQSeries finitized;
  if (two_v % 2 == 0)
    finitized = sector_partition_even_closed(big_l, two_v / 2);
  else
    finitized = sector_partition_odd_closed(big_l, two_v);
  // q^(v^2/2) / eta(q): shift eta^(-1) by 3 (2v)^2 grains
  RationalQSeries target = eta_inverse_truncated(order).shifted(3L * two_v * two_v);
  long lo = 3L * two_v * two_v - 1;
  long max_grain = lo + 24L * (order - 1);
  ContinuumCheck check;
  check.terms_compared = order;
  check.first_mismatch_grain = first_mismatch(finitized, target, max_grain);
  check.all_match = !check.first_mismatch_grain.has_value();
  return check;
}

}  // namespace dimers
