#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mfring/catalog.hpp"

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

QExpansion random_series(SplitMix& rng, int precision) {
  std::vector<Rat> v(static_cast<size_t>(precision));
  for (auto& c : v) c = Rat(rng.pick(-9, 9));
  return QExpansion(std::move(v));
}

QExpansion series(std::vector<long> coeffs) {
  std::vector<Rat> v;
  for (long c : coeffs) v.emplace_back(c);
  return QExpansion(std::move(v));
}

}  // namespace

TEST_CASE("add/sub with the min-precision rule") {
  QExpansion f = series({1, 1});        // 1 + q, P=2
  QExpansion g = series({1, -1});       // 1 - q, P=2
  CHECK((f + g) == series({2, 0}));
  QExpansion one5 = QExpansion::constant(Rat(1), 5);
  QExpansion zero3 = QExpansion::zero(3);
  CHECK((one5 + zero3).precision() == 3);
  CHECK((one5 + zero3) == QExpansion::constant(Rat(1), 3));
  const auto& cat = Catalog::standard();
  QExpansion e4 = cat.resolve("E4", 10);
  CHECK((e4 + e4.scaled(Rat(-1))) == QExpansion::zero(10));
}

TEST_CASE("mul: Cauchy product truncated") {
  CHECK((series({1, 1, 0}) * series({1, -1, 0})) == series({1, 0, -1}));
  const auto& cat = Catalog::standard();
  QExpansion e4 = cat.resolve("E4", 5);
  CHECK((e4 * e4).coeff(1) == 480);
  QExpansion f = series({3, -2, 7, 1});
  CHECK(f * QExpansion::constant(Rat(1), 4) == f);
}

TEST_CASE("scale") {
  const auto& cat = Catalog::standard();
  QExpansion diff = cat.resolve("E4", 8) - cat.resolve("E4^(2)", 8);
  QExpansion alpha2 = diff.scaled(Rat(1, 240));
  CHECK(alpha2.coeff(1) == 1);
  CHECK(alpha2 == cat.resolve("alpha2", 8));
  QExpansion f = series({3, -2, 7});
  CHECK(f.scaled(Rat(0)) == QExpansion::zero(3));
  CHECK(f.scaled(Rat(1)) == f);
}

TEST_CASE("rescale") {
  CHECK(series({1, 1}).rescaled(2) == series({1, 0, 1}));
  QExpansion f = series({4, 5, 6});
  CHECK(f.rescaled(1) == f);
  const auto& cat = Catalog::standard();
  CHECK(cat.resolve("E2^(2)", 3).coeff(2) == -24);
  CHECK(cat.resolve("E2^(2)", 3).coeff(1) == 0);
}

TEST_CASE("div") {
  QExpansion num = series({0, 1, 1, 0});  // q + q^2
  QExpansion den = series({0, 1, 0, 0});  // q
  QExpansion quot = num / den;
  CHECK(quot.precision() == 3);
  CHECK(quot == series({1, 1, 0}));

  const auto& cat = Catalog::standard();
  // beta7^2 / C7 = delta7 with leading coefficient 1 at q^4
  QExpansion delta7 = (cat.resolve("beta7", 12) * cat.resolve("beta7", 12)) / cat.resolve("C7", 12);
  CHECK(delta7 == cat.resolve("delta7", 12));
  CHECK(delta7.coeff(4) == 1);

  QExpansion f = series({2, 5, -3, 7});
  CHECK(f / f == QExpansion::constant(Rat(1), 4));

  CHECK_THROWS_AS(f / QExpansion::zero(4), DivisionByZero);
  CHECK_THROWS_AS(series({1, 0, 0}) / series({0, 1, 0}), NotDivisible);
}

TEST_CASE("valuation and is_zero_to") {
  CHECK(series({0, 0, 0, 1, 0, -1}).valuation() == 3);
  const auto& cat = Catalog::standard();
  CHECK(cat.resolve("E4", 6).valuation() == 0);
  CHECK(!QExpansion::zero(10).valuation().has_value());

  CHECK(series({0, 1}).is_zero_to(1));
  CHECK(!series({0, 1}).is_zero_to(2));
  CHECK_THROWS_AS(series({0, 1}).is_zero_to(3), InsufficientPrecision);
}

TEST_CASE("ring axioms on random series") {
  SplitMix rng{42};
  for (int trial = 0; trial < 400; ++trial) {
    int p = 2 + static_cast<int>(rng.pick(0, 28));
    QExpansion a = random_series(rng, p), b = random_series(rng, p), c = random_series(rng, p);
    REQUIRE((a + b) == (b + a));
    REQUIRE((a * b) == (b * a));
    REQUIRE(((a + b) + c) == (a + (b + c)));
    REQUIRE(((a * b) * c) == (a * (b * c)));
    REQUIRE((a * (b + c)) == (a * b + a * c));
    REQUIRE((a - a) == QExpansion::zero(p));
  }
}

TEST_CASE("division inverts multiplication by units") {
  SplitMix rng{7};
  for (int trial = 0; trial < 400; ++trial) {
    int p = 2 + static_cast<int>(rng.pick(0, 20));
    QExpansion f = random_series(rng, p);
    QExpansion g = random_series(rng, p);
    std::vector<Rat> gc = g.coeffs();
    gc[0] = Rat(rng.pick(1, 9));  // unit
    g = QExpansion(gc);
    REQUIRE(((f * g) / g) == f);
  }
}

TEST_CASE("rescale is a ring homomorphism") {
  SplitMix rng{11};
  for (int trial = 0; trial < 200; ++trial) {
    int p = 2 + static_cast<int>(rng.pick(0, 12));
    int h = static_cast<int>(rng.pick(1, 4));
    QExpansion f = random_series(rng, p), g = random_series(rng, p);
    QExpansion lhs = (f * g).rescaled(h);
    QExpansion rhs = f.rescaled(h) * g.rescaled(h);
    int shared = std::min(lhs.precision(), rhs.precision());
    REQUIRE(lhs.truncated(shared) == rhs.truncated(shared));
  }
}

TEST_CASE("precision soundness: recomputation extends, never changes") {
  const auto& cat = Catalog::standard();
  for (const char* name : {"E4", "C3", "beta9", "gamma12", "iota25", "delta7", "epsilon18"}) {
    QExpansion low = cat.resolve(name, 12);
    QExpansion high = cat.resolve(name, 40);
    REQUIRE(high.truncated(12) == low);
  }
}

TEST_CASE("printing") {
  const auto& cat = Catalog::standard();
  CHECK(cat.resolve("E4", 3).str() == "1 + 240*q + 2160*q^2 + O(q^3)");
  CHECK(QExpansion::zero(4).str() == "0 + O(q^4)");
  CHECK(series({0, -1, 0, 5}).str() == "-q + 5*q^3 + O(q^4)");
}
