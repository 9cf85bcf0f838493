#include "mfring/linalg.hpp"

#include <algorithm>

namespace mfring {

namespace {

std::vector<std::vector<Int>> cleared(const RatMatrix& a) {
  std::vector<std::vector<Int>> m;
  m.reserve(a.size());
  for (const auto& row : a) {
    Int lcm = 1;
    for (const Rat& x : row) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den().get_mpz_t());
    std::vector<Int> r;
    r.reserve(row.size());
    for (const Rat& x : row) r.push_back(Int(x.get_num() * (lcm / x.get_den())));
    m.push_back(std::move(r));
  }
  return m;
}

}  // namespace

int bareiss_rank(RatMatrix a) {
  auto m = cleared(a);
  size_t rows = m.size();
  size_t cols = rows ? m[0].size() : 0;
  Int prev = 1;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    for (size_t i = r + 1; i < rows; ++i) {
      for (size_t j = c + 1; j < cols; ++j)
        m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return static_cast<int>(r);
}

int naive_rank(RatMatrix a) {
  size_t rows = a.size();
  size_t cols = rows ? a[0].size() : 0;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    for (size_t i = r + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      Rat f = a[i][c] / a[r][c];
      for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return static_cast<int>(r);
}

RankKernel rank_and_kernel(const RatMatrix& a) {
  // eliminate the transpose: columns of a^T are the rows being combined
  size_t arows = a.size();
  size_t acols = arows ? a[0].size() : 0;
  RatMatrix m(acols, std::vector<Rat>(arows));
  for (size_t i = 0; i < arows; ++i)
    for (size_t j = 0; j < acols; ++j) m[j][i] = a[i][j];
  size_t rows = m.size();
  size_t cols = rows ? m[0].size() : 0;
  std::vector<size_t> pivot_col;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    Rat inv = Rat(1) / m[r][c];
    for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  RankKernel out;
  out.rank = static_cast<int>(r);
  std::vector<bool> is_pivot(cols, false);
  for (size_t c : pivot_col) is_pivot[c] = true;
  for (size_t c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    std::vector<Rat> v(cols);
    v[c] = 1;
    for (size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -m[i][c];
    out.kernel.push_back(std::move(v));
  }
  return out;
}

}  // namespace mfring
