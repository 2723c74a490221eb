#ifndef DIMERS_DIAGRAMS_HPP
#define DIMERS_DIAGRAMS_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "dimers/exact.hpp"

namespace dimers {

enum class Parity { even, odd };

inline Parity parity_of(int n) { return n % 2 == 0 ? Parity::even : Parity::odd; }

// Label of a transfer-matrix eigenstate: two subsets of {1..L}. The eps
// column holds the positions j with eps_j = 1, the mu column those with
// mu_i = 1. Both columns are kept strictly increasing.
struct TwoColumnDiagram {
  int max_height = 0;
  std::vector<int> eps;
  std::vector<int> mu;

  // Validating constructor; the inputs may arrive unsorted.
  static TwoColumnDiagram from_sets(int max_height, std::vector<int> eps, std::vector<int> mu);
  // Bit j-1 set means position j is occupied; heights up to 31.
  static TwoColumnDiagram from_bits(int max_height, std::uint32_t eps_bits, std::uint32_t mu_bits);

  bool valid() const;

  // eps_j + mu_j in {0,1,2}; j is 1-based.
  int multiplicity(int j) const;

  bool empty() const { return eps.empty() && mu.empty(); }

  // Serialized as "(j1,j2,..|i1,i2,..)" ascending, "-" for an empty column.
  std::string str() const;

  friend bool operator==(const TwoColumnDiagram& a, const TwoColumnDiagram& b) {
    return a.max_height == b.max_height && a.eps == b.eps && a.mu == b.mu;
  }
  // Deterministic order: lexicographic by (eps, mu).
  friend bool operator<(const TwoColumnDiagram& a, const TwoColumnDiagram& b) {
    if (a.eps != b.eps) return a.eps < b.eps;
    return a.mu < b.mu;
  }
};

inline int variation_index(const TwoColumnDiagram& d) {
  return static_cast<int>(d.mu.size()) - static_cast<int>(d.eps.size());
}

// Odd-N analog of the variation index; the half-integer sector v collects
// the diagrams with w = v - 1/2 and w = v + 1/2.
inline int excess_parameter(const TwoColumnDiagram& d) { return variation_index(d); }

// Even parity: sum of (j - 1/2) over both columns; odd parity: sum of j.
// Entries present in both columns count twice.
Rational conformal_exponent(const TwoColumnDiagram& d, Parity parity);

inline constexpr int kEnumerationBudgetMaxHeight = 10;  // 4^L states

// Streaming enumeration in a deterministic order (eps-major); no budget
// beyond the 31-bit mask limit of the iteration itself.
void for_each_diagram(int max_height, const std::function<void(const TwoColumnDiagram&)>& fn);

std::vector<TwoColumnDiagram> enumerate_diagrams(int max_height,
                                                 int budget_max_height = kEnumerationBudgetMaxHeight);

std::vector<TwoColumnDiagram> enumerate_sector(int max_height, int v,
                                               int budget_max_height = kEnumerationBudgetMaxHeight);

// dim E_v = binomial(N, N/2 - v); v is passed doubled so that half-integer
// sectors of odd N stay exact.
Int sector_dimension2(int n, int two_v);
Int sector_dimension(int n, const Rational& v);

struct SectorLabel {
  int n = 0;
  int two_v = 0;

  Rational v() const { return make_rational(two_v, 2); }
  void validate() const;
};

}  // namespace dimers

#endif
