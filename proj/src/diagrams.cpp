#include "dimers/diagrams.hpp"

#include <algorithm>
#include <sstream>

#include "dimers/errors.hpp"

namespace dimers {

namespace {

std::vector<int> checked_column(int max_height, std::vector<int> xs) {
  std::sort(xs.begin(), xs.end());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i] < 1 || xs[i] > max_height) throw DomainError("diagram entry out of range 1..L");
    if (i > 0 && xs[i] == xs[i - 1]) throw DomainError("duplicate diagram entry");
  }
  return xs;
}

std::vector<int> bits_to_list(std::uint32_t bits) {
  std::vector<int> out;
  for (int j = 1; bits; ++j, bits >>= 1)
    if (bits & 1u) out.push_back(j);
  return out;
}

}  // namespace

TwoColumnDiagram TwoColumnDiagram::from_sets(int max_height, std::vector<int> eps,
                                             std::vector<int> mu) {
  if (max_height < 0) throw DomainError("diagram height must be >= 0");
  TwoColumnDiagram d;
  d.max_height = max_height;
  d.eps = checked_column(max_height, std::move(eps));
  d.mu = checked_column(max_height, std::move(mu));
  return d;
}

TwoColumnDiagram TwoColumnDiagram::from_bits(int max_height, std::uint32_t eps_bits,
                                             std::uint32_t mu_bits) {
  if (max_height < 0 || max_height > 31) throw DomainError("diagram height out of bitmask range");
  std::uint32_t allowed = max_height == 0 ? 0u : ((1u << max_height) - 1u);
  if ((eps_bits & ~allowed) || (mu_bits & ~allowed))
    throw DomainError("diagram bits exceed the height");
  TwoColumnDiagram d;
  d.max_height = max_height;
  d.eps = bits_to_list(eps_bits);
  d.mu = bits_to_list(mu_bits);
  return d;
}

bool TwoColumnDiagram::valid() const {
  if (max_height < 0) return false;
  auto column_ok = [this](const std::vector<int>& xs) {
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (xs[i] < 1 || xs[i] > max_height) return false;
      if (i > 0 && xs[i] <= xs[i - 1]) return false;
    }
    return true;
  };
  return column_ok(eps) && column_ok(mu);
}

int TwoColumnDiagram::multiplicity(int j) const {
  int m = std::binary_search(eps.begin(), eps.end(), j) ? 1 : 0;
  return m + (std::binary_search(mu.begin(), mu.end(), j) ? 1 : 0);
}

std::string TwoColumnDiagram::str() const {
  auto column = [](const std::vector<int>& xs) {
    if (xs.empty()) return std::string("-");
    std::ostringstream os;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (i) os << ",";
      os << xs[i];
    }
    return os.str();
  };
  return "(" + column(eps) + "|" + column(mu) + ")";
}

Rational conformal_exponent(const TwoColumnDiagram& d, Parity parity) {
  Rational total(0);
  for (const std::vector<int>* column : {&d.eps, &d.mu})
    for (int j : *column)
      total += parity == Parity::even ? make_rational(2 * j - 1, 2) : Rational(j);
  return total;
}

void for_each_diagram(int max_height, const std::function<void(const TwoColumnDiagram&)>& fn) {
  if (max_height < 0 || max_height > 31) throw DomainError("enumeration height out of range");
  const std::uint64_t count = 1ull << max_height;
  for (std::uint64_t e = 0; e < count; ++e)
    for (std::uint64_t m = 0; m < count; ++m)
      fn(TwoColumnDiagram::from_bits(max_height, static_cast<std::uint32_t>(e),
                                     static_cast<std::uint32_t>(m)));
}

std::vector<TwoColumnDiagram> enumerate_diagrams(int max_height, int budget_max_height) {
  if (max_height > budget_max_height)
    throw SizeError("enumeration budget exceeded: 4^" + std::to_string(max_height) + " diagrams");
  std::vector<TwoColumnDiagram> out;
  out.reserve(1ull << (2 * max_height));
  for_each_diagram(max_height, [&out](const TwoColumnDiagram& d) { out.push_back(d); });
  return out;
}

std::vector<TwoColumnDiagram> enumerate_sector(int max_height, int v, int budget_max_height) {
  if (max_height > budget_max_height)
    throw SizeError("enumeration budget exceeded: 4^" + std::to_string(max_height) + " diagrams");
  std::vector<TwoColumnDiagram> out;
  for_each_diagram(max_height, [&out, v](const TwoColumnDiagram& d) {
    if (variation_index(d) == v) out.push_back(d);
  });
  return out;
}

Int sector_dimension2(int n, int two_v) {
  if (n < 1) throw DomainError("lattice width must be positive");
  if ((two_v & 1) != (n & 1)) throw DomainError("sector index parity incompatible with N");
  if (two_v < -n || two_v > n) throw DomainError("sector index out of range |v| <= N/2");
  // N/2 - v = (n - two_v)/2
  return binomial(static_cast<unsigned long>(n), (n - two_v) / 2);
}

Int sector_dimension(int n, const Rational& v) {
  Rational tv = v * 2;
  if (!is_integer(tv)) throw DomainError("sector index must be integer or half-integer");
  long two_v = tv.get_num().get_si();
  return sector_dimension2(n, static_cast<int>(two_v));
}

void SectorLabel::validate() const {
  sector_dimension2(n, two_v);  // throws on bad parity / range
}

}  // namespace dimers
