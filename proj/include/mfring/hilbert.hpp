#pragma once

#include <string>
#include <vector>

#include "mfring/spaces.hpp"

namespace mfring {

// num(t) / prod_i (1 - t^{den[i]})
struct HilbertAtom {
  std::vector<long long> numerator;  // coefficient of t^i at index i
  std::vector<int> denominator;      // multiset of exponents n_i
};

// Sum of atoms; expandable as an integer power series in t.
struct HilbertExpr {
  std::vector<HilbertAtom> atoms;

  static HilbertExpr atom(std::vector<long long> numerator, std::vector<int> denominator);
  // t^shift / prod (1 - t^{den[i]})
  static HilbertExpr monomial_cone(int shift, std::vector<int> denominator);
  HilbertExpr operator+(const HilbertExpr& o) const;
  std::string str() const;
};

// Coefficients of t^0..t^T, exact.
std::vector<long long> expand(const HilbertExpr& h, int T);

// [dim M_0(N), dim M_1(N) (=0), ..., dim M_T(N)]
std::vector<long long> dim_series(int level, int T);

struct HilbertCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

HilbertCheck verify_hilbert_identity(const std::string& name, const HilbertExpr& lhs,
                                     const HilbertExpr& rhs, int T);
HilbertCheck verify_hilbert_identity(const std::string& name, const HilbertExpr& lhs,
                                     const std::vector<long long>& rhs_series);

// The catalogued rational-function identities against the dimension series
// and against each other, through t^T.
std::vector<HilbertCheck> hilbert_suite(int T);

}  // namespace mfring
