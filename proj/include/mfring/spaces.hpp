#pragma once

#include <string>
#include <vector>

#include "mfring/catalog.hpp"

namespace mfring {

struct UnsupportedLevel : std::runtime_error {
  explicit UnsupportedLevel(int level)
      : std::runtime_error("unsupported level: " + std::to_string(level)) {}
};

inline const std::vector<int>& supported_levels() {
  static const std::vector<int> levels{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 16, 18, 25};
  return levels;
}

struct SpaceKey {
  int level;
  int weight;
};

// dim M_k(N); 0 for odd or negative k.
int dim_space(SpaceKey key);

// d = dim M_k(N): a form of M_k(N) vanishing to order d is zero.
int sturm_cut(SpaceKey key);

// Monomial in catalogue names (coefficient 1).
struct Monomial {
  std::vector<std::pair<std::string, int>> factors;  // (name, exponent), exponent >= 1
  std::string str() const;
};

struct BasisElement {
  Monomial monomial;
  int expected_valuation = 0;
  QExpansion expansion;
};

// The basis family monomials with their expected valuations, sorted by
// valuation; pure index arithmetic, no expansion.
std::vector<std::pair<Monomial, int>> basis_monomials(SpaceKey key);

// Expanded basis, sorted by valuation.  Requires precision > dim.
std::vector<BasisElement> space_basis(SpaceKey key, int precision,
                                      const Catalog& cat = Catalog::standard());

struct EchelonReport {
  SpaceKey key{};
  int dimension = 0;
  bool pass = false;
  std::string detail;
};

// Valuations are exactly {0,...,dim-1} with unit leading coefficients.
EchelonReport verify_echelon(SpaceKey key, const Catalog& cat = Catalog::standard());

}  // namespace mfring
