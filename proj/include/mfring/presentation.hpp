#pragma once

#include <string>
#include <vector>

#include "mfring/hilbert.hpp"
#include "mfring/linalg.hpp"
#include "mfring/relations.hpp"

namespace mfring {

// One summand of the direct-sum complement of the ideal: multiplier * C[pair].
struct Cone {
  std::vector<std::string> pair;
  std::string multiplier;  // empty for 1
};

struct Presentation {
  int level = 1;
  GeneratorSetPtr gens;
  std::vector<std::string> ideal;  // relation names generating the ideal
  std::vector<Cone> complement;    // empty => the whole ring (N = 1, 2, 4)
};

const Presentation& presentation(int level);

// All exponent vectors of weighted degree k, deterministic lexicographic order.
std::vector<ExpVec> monomials(const Presentation& pres, int k);
long long monomial_count(const Presentation& pres, int k);

// The complement monomial set S_k; #S_k = dim M_k(N) when the presentation is right.
std::vector<ExpVec> complement_monomials(const Presentation& pres, int k);

HilbertExpr complement_hilbert(const Presentation& pres);

// Rows = monomials, columns = first dim M_k(N) q-coefficients.
RatMatrix eval_matrix(const Presentation& pres, int k, int precision, Evaluator& ev);

// Rank of the coefficient matrix of {m*O : O in ideal, wt(m) = k - wt(O)} in
// the degree-k monomial basis (fraction-free elimination).  Intended for
// slices where that matrix is materializable.
long long ideal_dim_direct(const Presentation& pres, int k);

struct WeightRow {
  int weight = 0;
  long long monomial_count = 0;
  long long eval_rank = 0;
  long long kernel_dim = 0;
  long long ideal_dim = 0;
  int space_dim = 0;
  bool pass = false;
  std::string detail;
};

struct PresentationReport {
  int level = 1;
  bool pass = false;
  std::vector<WeightRow> rows;
};

// For each even k <= K: eval_rank == dim M_k(N) and kernel_dim == ideal_dim.
// Small slices use the direct product-matrix rank; large ones are settled by
// an exact squeeze (see ideal_dim notes in presentation.cpp).
PresentationReport verify_presentation(const Presentation& pres, int K, Evaluator& ev);

}  // namespace mfring
