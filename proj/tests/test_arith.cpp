#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mfring/arith.hpp"

using namespace mfring;

TEST_CASE("sigma: divisor power sums") {
  CHECK(sigma(1, 6) == 12);   // 1+2+3+6
  CHECK(sigma(3, 1) == 1);
  CHECK(sigma(3, 2) == 9);    // 1+8
  CHECK(sigma(0, 12) == 6);   // divisor count
  CHECK(sigma(3, 3) == 28);
  CHECK(sigma(5, 4) == 1 + 32 + 1024);
}

TEST_CASE("sigma is multiplicative on coprime arguments") {
  for (long m = 1; m <= 100; ++m)
    for (long n = 1; n <= 100; ++n) {
      if (std::gcd(m, n) != 1) continue;
      CHECK(sigma(1, m * n) == sigma(1, m) * sigma(1, n));
      CHECK(sigma(3, m * n) == sigma(3, m) * sigma(3, n));
    }
}

TEST_CASE("tau: divisors not divisible by N") {
  CHECK(tau(2, 4) == 1);    // of 1,2,4 only 1 survives
  CHECK(tau(5, 10) == 3);   // 1+2
  CHECK(tau(3, 1) == 1);
  CHECK(tau(7, 14) == 3);   // 1+2
  CHECK_THROWS_AS(tau(1, 5), std::invalid_argument);
}

TEST_CASE("tau_{N^2} - tau_N = N tau_N(n/N)") {
  for (long N = 2; N <= 25; ++N)
    for (long n = 1; n <= 10000; ++n) {
      Int lhs = tau(N * N, n) - tau(N, n);
      Int rhs = (n % N == 0) ? Int(N * tau(N, n / N)) : Int(0);
      REQUIRE(lhs == rhs);
    }
}

TEST_CASE("(1/p)((p+1) tau_p - tau_{p^2}) is sigma_1 off multiples of p") {
  for (long p : {2L, 3L, 5L, 7L, 11L, 13L})
    for (long n = 1; n <= 10000; ++n) {
      Int lhs = (p + 1) * tau(p, n) - tau(p * p, n);
      REQUIRE(lhs % p == 0);
      Int expected = (n % p) ? sigma(1, n) : Int(0);
      REQUIRE(lhs / p == expected);
    }
}

TEST_CASE("bernoulli numbers via the recurrence") {
  CHECK(bernoulli(2) == Rat(1, 6));
  CHECK(bernoulli(4) == Rat(-1, 30));
  CHECK(bernoulli(6) == Rat(1, 42));
  CHECK(bernoulli(8) == Rat(-1, 30));
  CHECK(bernoulli(10) == Rat(5, 66));
  CHECK(bernoulli(12) == Rat(-691, 2730));
  CHECK_THROWS_AS(bernoulli(3), std::invalid_argument);
  CHECK_THROWS_AS(bernoulli(0), std::invalid_argument);
}

TEST_CASE("Eisenstein coefficients -2k/B_k") {
  CHECK(Rat(-4) / bernoulli(2) == -24);
  CHECK(Rat(-8) / bernoulli(4) == 240);
  CHECK(Rat(-12) / bernoulli(6) == -504);
  CHECK(Rat(-16) / bernoulli(8) == 480);
}

TEST_CASE("real characters rho_3, rho_4, rho_5") {
  const auto& r3 = rho(3);
  const auto& r4 = rho(4);
  const auto& r5 = rho(5);
  CHECK(r3(1) == 1);
  CHECK(r3(2) == -1);
  CHECK(r3(3) == 0);
  CHECK(r4(1) == 1);
  CHECK(r4(3) == -1);
  CHECK(r4(2) == 0);
  CHECK(r5(1) == 1);
  CHECK(r5(2) == -1);
  CHECK(r5(3) == -1);
  CHECK(r5(4) == 1);
  CHECK(r5(5) == 0);
  CHECK_THROWS_AS(DirichletCharacter(7), std::invalid_argument);

  // zero exactly on non-coprime residues, completely multiplicative
  for (int m : {3, 4, 5}) {
    const auto& chi = rho(m);
    for (long a = 1; a <= 50; ++a) {
      CHECK((chi(a) == 0) == (std::gcd(a, static_cast<long>(m)) > 1));
      for (long b = 1; b <= 50; ++b) CHECK(chi(a * b) == chi(a) * chi(b));
    }
  }
}

TEST_CASE("sigma_chi") {
  const auto& r5 = rho(5);
  const auto& r3 = rho(3);
  CHECK(sigma_chi(r5, 1) == 1);
  CHECK(sigma_chi(r5, 2) == -1);  // 1 - 2
  CHECK(sigma_chi(r3, 3) == 1);   // rho3(3) = 0, only d=1 counts
  CHECK(sigma_chi(r5, 4) == 3);   // 1 - 2 + 4
}
