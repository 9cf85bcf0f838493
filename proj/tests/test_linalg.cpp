#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mfring/linalg.hpp"

using namespace mfring;

namespace {

struct SplitMix {
  uint64_t s;
  uint64_t next() {
    s += 0x9e3779b97f4a7c15ull;
    uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  long pick(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<uint64_t>(hi - lo + 1));
  }
};

RatMatrix random_matrix(SplitMix& rng, size_t rows, size_t cols) {
  RatMatrix m(rows, std::vector<Rat>(cols));
  for (auto& row : m)
    for (auto& x : row) x = make_rat(rng.pick(-5, 5), rng.pick(1, 4));
  return m;
}

}  // namespace

TEST_CASE("rank examples") {
  RatMatrix id3 = {{Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(1), Rat(0)}, {Rat(0), Rat(0), Rat(1)}};
  auto rk = rank_and_kernel(id3);
  CHECK(rk.rank == 3);
  CHECK(rk.kernel.empty());
  CHECK(bareiss_rank(id3) == 3);

  RatMatrix m = {{Rat(1), Rat(2)}, {Rat(2), Rat(4)}};
  auto rk2 = rank_and_kernel(m);
  CHECK(rk2.rank == 1);
  REQUIRE(rk2.kernel.size() == 1);
  // kernel spanned by (2, -1) up to scale: 1*v0 + 2*v1 = 0
  const auto& v = rk2.kernel[0];
  CHECK(v[0] + Rat(2) * v[1] == 0);
  CHECK((v[0] != 0 || v[1] != 0));
}

TEST_CASE("kernel vectors are vanishing row combinations") {
  SplitMix rng{99};
  for (int trial = 0; trial < 100; ++trial) {
    size_t rows = static_cast<size_t>(rng.pick(1, 8));
    size_t cols = static_cast<size_t>(rng.pick(1, 8));
    RatMatrix m = random_matrix(rng, rows, cols);
    auto rk = rank_and_kernel(m);
    REQUIRE(rk.rank + static_cast<int>(rk.kernel.size()) == static_cast<int>(rows));
    for (const auto& c : rk.kernel) {
      REQUIRE(c.size() == rows);
      for (size_t j = 0; j < cols; ++j) {
        Rat dot(0);
        for (size_t i = 0; i < rows; ++i) dot += c[i] * m[i][j];
        REQUIRE(dot == 0);
      }
    }
  }
}

TEST_CASE("fraction-free rank agrees with naive rational elimination") {
  SplitMix rng{123};
  for (int trial = 0; trial < 300; ++trial) {
    size_t rows = static_cast<size_t>(rng.pick(1, 9));
    size_t cols = static_cast<size_t>(rng.pick(1, 9));
    RatMatrix m = random_matrix(rng, rows, cols);
    // sprinkle exact dependencies
    if (rows >= 2 && rng.pick(0, 1)) {
      m[rows - 1] = m[0];
      for (size_t j = 0; j < cols; ++j) m[rows - 1][j] *= Rat(3, 2);
    }
    int a = bareiss_rank(m);
    int b = naive_rank(m);
    int c = rank_and_kernel(m).rank;
    REQUIRE(a == b);
    REQUIRE(a == c);
  }
}
