#pragma once

#include <vector>

#include "mfring/rational.hpp"

namespace mfring {

using RatMatrix = std::vector<std::vector<Rat>>;

// Fraction-free (Bareiss two-step determinant-division) rank over Q.
// Rows are cleared to integers first; pivoting by first nonzero entry.
int bareiss_rank(RatMatrix a);

// Plain rational Gaussian elimination rank (the cross-check oracle).
int naive_rank(RatMatrix a);

struct RankKernel {
  int rank = 0;
  RatMatrix kernel;  // each entry c satisfies sum_i c_i * row_i = 0
};

// Exact rank and a basis of the row-combination kernel via rational
// elimination (for an evaluation matrix with one row per monomial, the
// kernel is the space of vanishing linear combinations of monomials).
RankKernel rank_and_kernel(const RatMatrix& a);

}  // namespace mfring
