#ifndef DIMERS_EXACT_HPP
#define DIMERS_EXACT_HPP

#include <gmpxx.h>

#include <string>

#include "dimers/errors.hpp"

namespace dimers {

using Int = mpz_class;
using Rational = mpq_class;

inline Int binomial(unsigned long n, long k) {
  if (k < 0 || static_cast<unsigned long>(k) > n) return Int(0);
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, static_cast<unsigned long>(k));
  return r;
}

inline Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

// Rising factorial (a)_k = a (a+1) ... (a+k-1), exact.
inline Rational pochhammer(const Rational& a, unsigned long k) {
  Rational r(1);
  Rational t = a;
  for (unsigned long i = 0; i < k; ++i, t += 1) r *= t;
  return r;
}

// 2^e for any sign of e.
inline Rational pow2(long e) {
  Rational r(1);
  if (e >= 0)
    mpz_mul_2exp(r.get_num().get_mpz_t(), r.get_num().get_mpz_t(), e);
  else
    mpz_mul_2exp(r.get_den().get_mpz_t(), r.get_den().get_mpz_t(), -e);
  return r;
}

inline Int pow_int(long base, unsigned long e) {
  Int b(base), r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

inline Rational pow_rational(const Rational& base, long e) {
  Rational r(1);
  Rational b = e >= 0 ? base : Rational(1) / base;
  for (long i = 0, n = e >= 0 ? e : -e; i < n; ++i) r *= b;
  return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

// mpq_class's two-argument constructor does not reduce; this one does.
inline Rational make_rational(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Parses "p/q", plain integers, and decimal strings like "0.25" exactly.
inline Rational parse_rational(const std::string& s) {
  if (s.empty()) throw DomainError("empty rational literal");
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    Rational r;
    if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
      throw DomainError("malformed rational literal: " + s);
    mpq_canonicalize(r.get_mpq_t());
    return r;
  }
  auto dot = s.find('.');
  std::string digits = s;
  unsigned long frac_len = 0;
  if (dot != std::string::npos) {
    digits = s.substr(0, dot) + s.substr(dot + 1);
    frac_len = s.size() - dot - 1;
    if (digits.empty() || digits == "-" || digits == "+") throw DomainError("malformed decimal literal: " + s);
  }
  Int num;
  if (mpz_set_str(num.get_mpz_t(), digits.c_str(), 10) != 0)
    throw DomainError("malformed numeric literal: " + s);
  Rational r(num);
  if (frac_len > 0) {
    Int den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
    r /= Rational(den);
  }
  return r;
}

inline std::string rational_str(const Rational& r) { return r.get_str(); }

}  // namespace dimers

#endif
