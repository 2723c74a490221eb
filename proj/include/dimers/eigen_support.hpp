#ifndef DIMERS_EIGEN_SUPPORT_HPP
#define DIMERS_EIGEN_SUPPORT_HPP

#include <Eigen/Dense>

#include "dimers/exact.hpp"
#include "dimers/poly.hpp"

namespace Eigen {

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  typedef mpz_class Real;
  typedef mpz_class NonInteger;
  typedef mpz_class Nested;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum { IsInteger = 1, IsSigned = 1, IsComplex = 0, RequireInitialization = 1, ReadCost = 6, AddCost = 30, MulCost = 50 };
};

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum { IsInteger = 0, IsSigned = 1, IsComplex = 0, RequireInitialization = 1, ReadCost = 6, AddCost = 150, MulCost = 100 };
};

template <class T>
struct NumTraits<dimers::Poly<T>> : GenericNumTraits<dimers::Poly<T>> {
  typedef dimers::Poly<T> Real;
  typedef dimers::Poly<T> NonInteger;
  typedef dimers::Poly<T> Nested;
  static inline Real epsilon() { return Real(); }
  static inline Real dummy_precision() { return Real(); }
  static inline int digits10() { return 0; }
  enum { IsInteger = 0, IsSigned = 1, IsComplex = 0, RequireInitialization = 1, ReadCost = 10, AddCost = 200, MulCost = 400 };
};

}  // namespace Eigen

namespace dimers {

template <class S>
using DenseOperator = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

inline bool scalar_is_zero(double x) { return x == 0.0; }
inline bool scalar_is_zero(const Int& x) { return x == 0; }
inline bool scalar_is_zero(const Rational& x) { return x == 0; }
template <class T>
bool scalar_is_zero(const Poly<T>& p) { return p.is_zero(); }

// Plain zero-skipping product for exact scalar types; double matrices go
// through Eigen's kernels.
template <class S>
DenseOperator<S> multiply(const DenseOperator<S>& a, const DenseOperator<S>& b) {
  if constexpr (std::is_same_v<S, double>) {
    return a * b;
  } else {
    DenseOperator<S> c(a.rows(), b.cols());
    c.setZero();
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      for (Eigen::Index k = 0; k < a.cols(); ++k) {
        if (scalar_is_zero(a(i, k))) continue;
        for (Eigen::Index j = 0; j < b.cols(); ++j) {
          if (scalar_is_zero(b(k, j))) continue;
          c(i, j) += a(i, k) * b(k, j);
        }
      }
    return c;
  }
}

template <class S>
S matrix_trace(const DenseOperator<S>& a) {
  S t(0);
  for (Eigen::Index i = 0; i < a.rows() && i < a.cols(); ++i) t += a(i, i);
  return t;
}

template <class S>
bool matrices_equal(const DenseOperator<S>& a, const DenseOperator<S>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (!(a(i, j) == b(i, j))) return false;
  return true;
}

template <class S>
bool matrix_is_zero(const DenseOperator<S>& a) {
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (!scalar_is_zero(a(i, j))) return false;
  return true;
}

}  // namespace dimers

#endif
