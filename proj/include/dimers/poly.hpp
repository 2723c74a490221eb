#ifndef DIMERS_POLY_HPP
#define DIMERS_POLY_HPP

#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include "dimers/exact.hpp"

namespace dimers {

// Dense univariate polynomial with exact coefficients. The zero polynomial
// is the empty coefficient vector; nonzero polynomials are kept trimmed, so
// zero tests are O(1) and matrix products over Poly entries can skip work.
template <class T>
class Poly {
 public:
  Poly() = default;
  Poly(long c) { if (c != 0) c_.assign(1, T(c)); }       // NOLINT: implicit by design
  Poly(const T& c) { if (c != 0) c_.assign(1, c); }      // NOLINT
  template <class U>
  explicit Poly(const Poly<U>& o) {
    c_.reserve(o.coeffs().size());
    for (const auto& u : o.coeffs()) c_.emplace_back(u);
  }

  static Poly monomial(const T& coeff, std::size_t degree) {
    Poly p;
    if (coeff != 0) {
      p.c_.assign(degree + 1, T(0));
      p.c_.back() = coeff;
    }
    return p;
  }

  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }  // -1 for zero
  const std::vector<T>& coeffs() const { return c_; }
  T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }

  friend Poly operator+(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    Poly r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r.c_[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
    r.trim();
    return r;
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    if (b.is_zero()) return a;
    Poly r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r.c_[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r.c_[i] -= b.c_[i];
    r.trim();
    return r;
  }
  Poly operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    Poly r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return r;  // no trim needed: leading coeffs nonzero over an integral domain
  }
  Poly& operator+=(const Poly& b) { *this = *this + b; return *this; }
  Poly& operator-=(const Poly& b) { *this = *this - b; return *this; }
  Poly& operator*=(const Poly& b) { *this = *this * b; return *this; }

  friend Poly operator*(const T& s, const Poly& p) {
    if (s == 0 || p.is_zero()) return Poly();
    Poly r = p;
    for (auto& c : r.c_) c *= s;
    return r;
  }
  friend Poly operator*(const Poly& p, const T& s) { return s * p; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  T eval(const T& x) const {
    T acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  std::string str(const std::string& var = "a") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      if (!first) os << " + ";
      os << coeff_str(c_[i]);
      if (i >= 1) os << "*" << var;
      if (i >= 2) os << "^" << i;
      first = false;
    }
    return os.str();
  }

 private:
  static std::string coeff_str(const T& c) {
    if constexpr (std::is_same_v<T, Int> || std::is_same_v<T, Rational>) return c.get_str();
    else { std::ostringstream os; os << c; return os.str(); }
  }
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<T> c_;
};

using AlphaPoly = Poly<Rational>;
using CountPoly = Poly<Int>;

inline AlphaPoly to_rational_poly(const CountPoly& p) { return AlphaPoly(p); }

}  // namespace dimers

#endif
