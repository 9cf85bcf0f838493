#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mfring/hilbert.hpp"

using namespace mfring;

TEST_CASE("expansion of rational functions") {
  // 1/(1-t^2)^2
  auto s = expand(HilbertExpr::atom({1}, {2, 2}), 6);
  CHECK(s == std::vector<long long>{1, 0, 2, 0, 3, 0, 4});

  // numerator only
  CHECK(expand(HilbertExpr::atom({1}, {}), 4) == std::vector<long long>{1, 0, 0, 0, 0});

  // (1+t^4)/((1-t^2)(1-t^6)) matches ([k/6]+1) + ([(k-4)/6]+1)
  auto h3 = expand(HilbertExpr::atom({1, 0, 0, 0, 1}, {2, 6}), 8);
  CHECK(h3 == std::vector<long long>{1, 0, 1, 0, 2, 0, 3, 0, 3});
}

TEST_CASE("dim_series") {
  CHECK(dim_series(12, 6) == std::vector<long long>{1, 0, 5, 0, 9, 0, 13});
  CHECK(dim_series(1, 14) ==
        std::vector<long long>{1, 0, 0, 0, 1, 0, 1, 0, 1, 0, 1, 0, 2, 0, 1});
  CHECK(dim_series(5, 4) == std::vector<long long>{1, 0, 1, 0, 3});
}

TEST_CASE("H(R[X]) = H(R)/(1-t^n) on random-ish cases") {
  for (int n : {2, 3, 4, 6}) {
    HilbertExpr r = HilbertExpr::atom({1, 2, 0, 1}, {2});
    HilbertExpr rx = HilbertExpr::atom({1, 2, 0, 1}, {2, n});
    auto base = expand(r, 60);
    auto ext = expand(rx, 60);
    // multiply base by 1/(1-t^n) manually
    std::vector<long long> conv(base);
    for (int i = n; i <= 60; ++i) conv[static_cast<size_t>(i)] += conv[static_cast<size_t>(i - n)];
    CHECK(ext == conv);
  }
}

TEST_CASE("rank-one quotient rule H(R)(1+t^k) for N in {3,5,6,8,9}") {
  struct Case {
    int level;
    std::vector<int> free_weights;
    int quotient_weight;
  };
  for (const auto& c : std::vector<Case>{{3, {2, 6}, 4},
                                         {5, {2, 4}, 4},
                                         {6, {2, 2}, 2},
                                         {8, {2, 2}, 2},
                                         {9, {2, 2}, 2}}) {
    std::vector<long long> num(static_cast<size_t>(c.quotient_weight) + 1, 0);
    num[0] = 1;
    num[static_cast<size_t>(c.quotient_weight)] = 1;
    HilbertExpr h = HilbertExpr::atom(num, c.free_weights);
    CHECK(expand(h, 200) == dim_series(c.level, 200));
  }
}

TEST_CASE("the displayed identity suite holds through t^200") {
  auto checks = hilbert_suite(200);
  CHECK(checks.size() >= 20);
  for (const auto& c : checks) {
    INFO(c.name, ": ", c.detail);
    REQUIRE(c.pass);
  }
}

TEST_CASE("verify_hilbert_identity reports the first mismatch") {
  auto bad = verify_hilbert_identity("bad", HilbertExpr::atom({1}, {2}),
                                     HilbertExpr::atom({1}, {4}), 50);
  CHECK_FALSE(bad.pass);
  CHECK(bad.detail.find("t^2") != std::string::npos);
}
