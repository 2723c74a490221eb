#ifndef DIMERS_QSERIES_HPP
#define DIMERS_QSERIES_HPP

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "dimers/diagrams.hpp"
#include "dimers/exact.hpp"

namespace dimers {

// Truncated formal series in q^(1/24) with exact rational coefficients.
// Every exponent appearing in the sector partition functions and characters
// (the -c/24 = 1/12 prefactor, Kac weights with denominator 8, half-integer
// diagram exponents) lands on this grid. A polynomial carries the
// kUntruncated sentinel; a truncated series knows its coefficients exactly
// up to and including grain exponent truncation().
class RationalQSeries {
 public:
  static constexpr long kGrain = 24;
  static constexpr long kUntruncated = std::numeric_limits<long>::max() / 4;

  RationalQSeries() = default;  // exact zero

  static RationalQSeries zero() { return RationalQSeries(); }
  static RationalQSeries monomial(const Rational& coeff, long grain_exponent);
  // Coefficients over integer powers of q, placed at stride 24 from the
  // given grain offset.
  static RationalQSeries from_q_poly(const std::vector<Int>& coeffs, long grain_offset);
  static RationalQSeries truncated(std::vector<Rational> coeffs, long grain_offset, long truncation);

  bool is_exact() const { return trunc_ == kUntruncated; }
  bool is_zero_exact() const { return coef_.empty() && is_exact(); }
  long truncation() const { return trunc_; }
  // Lowest stored exponent; nullopt when no nonzero coefficient is known.
  std::optional<long> min_exponent() const {
    return coef_.empty() ? std::nullopt : std::optional<long>(offset_);
  }

  // Exact coefficient at a grain exponent; throws past the truncation.
  Rational coefficient(long grain_exponent) const;

  RationalQSeries shifted(long grains) const;

  friend RationalQSeries operator+(const RationalQSeries& a, const RationalQSeries& b);
  friend RationalQSeries operator-(const RationalQSeries& a, const RationalQSeries& b);
  friend RationalQSeries operator*(const RationalQSeries& a, const RationalQSeries& b);
  RationalQSeries operator-() const;
  friend RationalQSeries operator*(const Rational& s, const RationalQSeries& p);
  RationalQSeries& operator+=(const RationalQSeries& b) { return *this = *this + b; }
  RationalQSeries& operator-=(const RationalQSeries& b) { return *this = *this - b; }

  // Exact polynomial equality; both operands must be untruncated.
  friend bool exact_equal(const RationalQSeries& a, const RationalQSeries& b);

  // First grain exponent <= max_grain where the two series disagree over
  // their commonly known range; nullopt when they agree throughout.
  friend std::optional<long> first_mismatch(const RationalQSeries& a, const RationalQSeries& b,
                                            long max_grain);

  // q -> 1 specialization (untruncated only).
  Rational value_at_one() const;

  bool integer_coefficients() const;

  std::string str() const;

 private:
  void canonicalize();

  long offset_ = 0;
  std::vector<Rational> coef_;
  long trunc_ = kUntruncated;
};

// Kac-table conformal weight ((2r - s)^2 - 1)/8.
Rational kac_weight(int r, int s);

struct KacWeight {
  int r = 1;
  int s = 1;
  Rational value;

  static KacWeight of(int r, int s) { return KacWeight{r, s, kac_weight(r, s)}; }
};

// Gaussian binomial [a choose b]_q by the Pascal recurrence; zero polynomial
// outside 0 <= b <= a.
RationalQSeries q_binomial(int a, int b);

inline constexpr int kQSeriesBudgetMaxHeight = 12;

// Even N = 2L: q^(-c/24 - 1/8) sum over diagrams of index v of
// q^(sum (j - 1/2)), c = -2, built by enumeration.
RationalQSeries sector_partition_even(int big_l, int v);
// Closed form q^(-c/24 + Delta_{|v|+1,2}) [2L choose L-v]_q.
RationalQSeries sector_partition_even_closed(int big_l, int v);

// Odd N = 2L+1: enumeration over the union of excess classes w = v -+ 1/2
// with exponent sum_j j; v passed doubled.
RationalQSeries sector_partition_odd(int big_l, int two_v);
// Closed form q^(-c/24 + Delta_{|v|+1/2,1}) [2L+1 choose L+1/2-v]_q.
RationalQSeries sector_partition_odd_closed(int big_l, int two_v);

// Finitized irreducible characters. s = 2 (even N):
//   ch_{r,2}^{(N+1)} = q^(-c/24 + Delta_{r,2}) (1 - q^(2r)) [N+2 choose N/2-r+1]_q / (1 - q^(N+2))
// s = 1 (odd N):
//   ch_{r,1}^{(N+1)} = q^(-c/24 + Delta_{r,1}) (1 - q^r) [N+1 choose (N+1)/2-r]_q / (1 - q^((N+1)/2))
// The rational factor must divide exactly; a nonzero remainder signals an
// out-of-range r and raises a domain error.
RationalQSeries finitized_character(int r, int s, int n);

struct CharacterSumResult {
  bool holds = false;
  int r_first = 0;
  int r_last = 0;  // resolved upper limit actually used
  RationalQSeries partition;
  RationalQSeries character_sum;
};

// Z_v = sum of finitized characters, r stepping by 2 from |v|+1 (even N)
// and by 1 from |v|+1/2 (odd N), up to the largest admissible r <= L+1.
CharacterSumResult character_sum_identity(int big_l, int two_v, Parity parity);

// q^(-1/24) prod_{n>=1} (1 - q^n)^(-1) truncated after q^order — the
// partition-number generating function.
RationalQSeries eta_inverse_truncated(int order);

// prod_{n>=1} (1 - q^n) truncated after q^order, by the pentagonal number
// theorem.
RationalQSeries euler_product_truncated(int order);

struct ContinuumCheck {
  bool all_match = false;
  std::optional<long> first_mismatch_grain;
  int terms_compared = 0;
};

// Compares the finitized Z_v at height L against q^(v^2/2)/eta(q) over the
// first `order` integer q-steps.
ContinuumCheck continuum_limit_check(int two_v, int order, int big_l);

}  // namespace dimers

#endif
