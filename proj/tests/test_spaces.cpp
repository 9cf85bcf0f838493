#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mfring/spaces.hpp"

using namespace mfring;

TEST_CASE("dimension formulas") {
  CHECK(dim_space({7, 4}) == 3);
  CHECK(dim_space({1, 2}) == 0);
  CHECK(dim_space({1, 0}) == 1);
  CHECK(dim_space({1, 12}) == 2);
  CHECK(dim_space({1, 14}) == 1);
  CHECK(dim_space({18, 24}) == 73);
  CHECK(dim_space({25, 24}) == 61);
  CHECK(dim_space({12, 4}) == 9);
  CHECK(dim_space({6, 4}) == 5);
  CHECK(dim_space({10, 4}) == 7);
  CHECK(dim_space({16, 4}) == 9);
  CHECK(dim_space({25, 4}) == 11);
  CHECK(dim_space({25, 6}) == 15);
  CHECK(dim_space({9, 4}) == 5);
  CHECK(dim_space({2, 6}) == 2);
  CHECK(dim_space({7, 8}) == 5);
  CHECK(dim_space({5, 11}) == 0);  // odd weight
  CHECK_THROWS_AS(dim_space({11, 4}), UnsupportedLevel);
}

TEST_CASE("sturm cut") {
  CHECK(sturm_cut({6, 4}) == 5);
  CHECK(sturm_cut({12, 4}) == 9);
  CHECK(sturm_cut({25, 4}) == 11);
  CHECK(sturm_cut({1, 8}) == 1);
  CHECK_THROWS_AS(sturm_cut({1, 2}), std::invalid_argument);
}

TEST_CASE("family size equals the dimension for every level and k <= 40") {
  for (int N : supported_levels())
    for (int k = 0; k <= 40; k += 2)
      REQUIRE(static_cast<int>(basis_monomials({N, k}).size()) == dim_space({N, k}));
}

TEST_CASE("expected valuations are 0..d-1 (index arithmetic only)") {
  for (int N : supported_levels())
    for (int k = 0; k <= 40; k += 2) {
      auto monos = basis_monomials({N, k});
      for (size_t i = 0; i < monos.size(); ++i)
        REQUIRE(monos[i].second == static_cast<int>(i));
    }
}

TEST_CASE("odd weight gives an empty basis, not an error") {
  CHECK(basis_monomials({6, 7}).empty());
  CHECK(space_basis({6, 7}, 5).empty());
}

TEST_CASE("named basis examples") {
  // N=3, k=12: the five monomials of the weight-6l family at l=2
  auto b312 = basis_monomials({3, 12});
  REQUIRE(b312.size() == 5);
  CHECK(b312[0].first.str() == "C3^6");
  CHECK(b312[1].first.str() == "C3^4*alpha3");
  CHECK(b312[2].first.str() == "C3^2*alpha3^2");
  CHECK(b312[3].first.str() == "C3*alpha3*beta3");
  CHECK(b312[4].first.str() == "beta3^2");

  // N=2, k=4: valuations {0,1}
  auto b24 = basis_monomials({2, 4});
  REQUIRE(b24.size() == 2);
  CHECK(b24[0].first.str() == "C2^2");
  CHECK(b24[1].first.str() == "alpha2");

  // N=1, k=0
  auto b10 = basis_monomials({1, 0});
  REQUIRE(b10.size() == 1);
  CHECK(b10[0].first.str() == "1");

  // N=1, k=12: {E4^3, Delta}
  auto b112 = basis_monomials({1, 12});
  REQUIRE(b112.size() == 2);
  CHECK(b112[0].first.str() == "E4^3");
  CHECK(b112[1].first.str() == "Delta");
}

TEST_CASE("echelon verification at spot weights") {
  CHECK(verify_echelon({18, 2}).pass);   // 7 elements
  CHECK(verify_echelon({25, 4}).pass);   // 11 elements
  CHECK(verify_echelon({1, 12}).pass);
  CHECK(verify_echelon({2, 4}).pass);
  CHECK(verify_echelon({7, 12}).pass);
  CHECK(verify_echelon({10, 6}).pass);
  CHECK(dim_space({18, 2}) == 7);
  CHECK(dim_space({25, 4}) == 11);
}

TEST_CASE("echelon property across all levels to weight 14") {
  for (int N : supported_levels())
    for (int k = 0; k <= 14; k += 2) {
      auto rep = verify_echelon({N, k});
      INFO("N=", N, " k=", k, " ", rep.detail);
      REQUIRE(rep.pass);
    }
}

TEST_CASE("space_basis demands precision above the dimension") {
  CHECK_THROWS_AS(space_basis({6, 4}, 5), std::invalid_argument);
  auto basis = space_basis({6, 4}, 6);
  CHECK(basis.size() == 5);
  // Sturm witness: triangular with unit diagonal
  for (size_t i = 0; i < basis.size(); ++i) {
    REQUIRE(basis[i].expansion.valuation() == static_cast<int>(i));
    REQUIRE(basis[i].expansion.coeff(static_cast<int>(i)) == 1);
  }
}
