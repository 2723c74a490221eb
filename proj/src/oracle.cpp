#include "dimers/oracle.hpp"

namespace dimers {

std::vector<Rational> variation_values(int n) {
  check_dense_budget(n);
  const std::uint32_t dim = 1u << n;
  std::vector<Rational> out(dim);
  for (std::uint32_t s = 0; s < dim; ++s) {
    long acc = 0;  // 2v, to stay integral
    for (int i = 1; i <= n; ++i) {
      int sz = ((s >> (i - 1)) & 1u) ? 1 : -1;  // sigma^z eigenvalue
      acc += (i % 2 == 0 ? 1 : -1) * sz;
    }
    out[s] = make_rational(acc, 2);
  }
  return out;
}

DenseOperator<Rational> variation_operator(int n) {
  std::vector<Rational> diag = variation_values(n);
  const std::uint32_t dim = 1u << n;
  DenseOperator<Rational> m(dim, dim);
  m.setZero();
  for (std::uint32_t s = 0; s < dim; ++s) m(s, s) = diag[s];
  return m;
}

CountPoly brute_force_z_poly(int n, int m) {
  return brute_force_z<CountPoly>(n, m, CountPoly::monomial(Int(1), 1));
}

}  // namespace dimers
