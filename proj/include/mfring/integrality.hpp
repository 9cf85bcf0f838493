#pragma once

#include <string>
#include <vector>

#include "mfring/spaces.hpp"
#include "mfring/weighted_poly.hpp"

namespace mfring {

struct IntegralityItem {
  std::string name;
  int level = 0;
  int weight = 0;
  bool pass = false;
  std::string detail;
};

// Every basis element of M_k(N), even k <= K, lies in q^{j-1} + Z[[q]]q^j
// through q^P; the triangular change-of-basis matrix is unit-diagonal over Z.
std::vector<IntegralityItem> verify_integral_basis(int level, int K, int P, Evaluator& ev);

// The closed-form integral expansions (alpha4, beta9, gamma16, beta5,
// delta25, beta7, delta7) against their catalogue definitions through q^P.
// Supported levels: 4, 9, 16, 5, 25, 7.
std::vector<IntegralityItem> verify_closed_forms(int level, int P,
                                                 const Catalog& cat = Catalog::standard());

}  // namespace mfring
