#pragma once

#include <array>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "mfring/rational.hpp"

namespace mfring {

// sigma_k(n) = sum of d^k over divisors d of n.
Int sigma(unsigned k, long n);

// tau_N(n) = sum of divisors of n not divisible by N.  (N >= 2)
Int tau(long N, long n);

// Sum of divisors of n coprime to m (the sigma_{chi^2} of a real character
// mod m, chi^2 being the principal character).
Int sigma_coprime(long m, long n);

// k-th Bernoulli number, k even >= 2, via sum_{j<=k} binom(k+1,j) B_j = 0.
Rat bernoulli(int k);

// Real Dirichlet characters rho_3, rho_4, rho_5 stored as period tables.
class DirichletCharacter {
 public:
  explicit DirichletCharacter(int modulus);

  int modulus() const { return modulus_; }
  int operator()(long n) const {
    long r = n % modulus_;
    if (r < 0) r += modulus_;
    return values_[static_cast<size_t>(r)];
  }

 private:
  int modulus_;
  std::array<int, 5> values_{};
};

const DirichletCharacter& rho(int modulus);  // modulus in {3,4,5}

// sigma_chi(n) = sum chi(d) * d over divisors d of n.
Int sigma_chi(const DirichletCharacter& chi, long n);

void for_each_divisor(long n, const std::function<void(long)>& fn);

inline long gcd24(long n) { return std::gcd(n, 24L); }

}  // namespace mfring
