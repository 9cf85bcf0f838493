#pragma once

#include <gmpxx.h>

#include <string>

namespace mfring {

// All coefficient arithmetic is exact. Int is an arbitrary-precision
// integer, Rat a rational kept in lowest terms with positive denominator
// (GMP canonical form).
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(Int num, Int den) {
  Rat r(std::move(num), std::move(den));
  r.canonicalize();
  return r;
}

inline Rat make_rat(long num, long den) { return make_rat(Int(num), Int(den)); }

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline Int pow_int(const Int& base, unsigned long e) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

inline Int binomial(unsigned long n, unsigned long k) {
  Int out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

// "p/q" for proper fractions, bare "p" for integers.
inline std::string rat_str(const Rat& r) {
  if (is_integer(r)) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace mfring
