#include "mfring/arith.hpp"

#include <numeric>
#include <vector>

namespace mfring {

void for_each_divisor(long n, const std::function<void(long)>& fn) {
  if (n < 1) throw std::invalid_argument("for_each_divisor: n must be positive");
  for (long d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    fn(d);
    if (d != n / d) fn(n / d);
  }
}

Int sigma(unsigned k, long n) {
  Int total = 0;
  for_each_divisor(n, [&](long d) { total += pow_int(Int(d), k); });
  return total;
}

Int tau(long N, long n) {
  if (N < 2) throw std::invalid_argument("tau: N must be >= 2");
  Int total = 0;
  for_each_divisor(n, [&](long d) {
    if (d % N) total += d;
  });
  return total;
}

Int sigma_coprime(long m, long n) {
  Int total = 0;
  for_each_divisor(n, [&](long d) {
    if (std::gcd(d, m) == 1) total += d;
  });
  return total;
}

Rat bernoulli(int k) {
  if (k < 2 || k % 2) throw std::invalid_argument("bernoulli: k must be even and >= 2");
  std::vector<Rat> b(static_cast<size_t>(k) + 1);
  b[0] = 1;
  for (int m = 1; m <= k; ++m) {
    Rat acc = 0;
    for (int j = 0; j < m; ++j) acc += Rat(binomial(m + 1, j)) * b[j];
    b[m] = -acc / Rat(m + 1);
  }
  return b[static_cast<size_t>(k)];
}

DirichletCharacter::DirichletCharacter(int modulus) : modulus_(modulus) {
  switch (modulus) {
    case 3: values_ = {0, 1, -1}; break;
    case 4: values_ = {0, 1, 0, -1}; break;
    case 5: values_ = {0, 1, -1, -1, 1}; break;  // Legendre symbol mod 5
    default:
      throw std::invalid_argument("DirichletCharacter: only moduli 3, 4, 5 are supported");
  }
}

const DirichletCharacter& rho(int modulus) {
  static const DirichletCharacter r3(3), r4(4), r5(5);
  switch (modulus) {
    case 3: return r3;
    case 4: return r4;
    case 5: return r5;
    default:
      throw std::invalid_argument("rho: only moduli 3, 4, 5 are supported");
  }
}

Int sigma_chi(const DirichletCharacter& chi, long n) {
  Int total = 0;
  for_each_divisor(n, [&](long d) { total += Int(chi(d)) * d; });
  return total;
}

}  // namespace mfring
