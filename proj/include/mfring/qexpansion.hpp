#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mfring/rational.hpp"

namespace mfring {

struct DivisionByZero : std::runtime_error {
  DivisionByZero() : std::runtime_error("division by a series that is zero to its precision") {}
};

struct NotDivisible : std::runtime_error {
  explicit NotDivisible(const std::string& what) : std::runtime_error(what) {}
};

struct InsufficientPrecision : std::runtime_error {
  explicit InsufficientPrecision(const std::string& what) : std::runtime_error(what) {}
};

// Truncated formal power series in q over Rat.  coeff(i) is the coefficient
// of q^i; the series is known modulo q^precision and coeffs has exactly
// `precision` entries.
class QExpansion {
 public:
  explicit QExpansion(std::vector<Rat> coeffs);
  static QExpansion zero(int precision);
  static QExpansion constant(Rat c, int precision);

  int precision() const { return static_cast<int>(coeffs_.size()); }
  const Rat& coeff(int i) const { return coeffs_.at(static_cast<size_t>(i)); }
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  // Truncation to a lower (or equal) precision.
  QExpansion truncated(int precision) const;

  // Index of the first nonzero coefficient; nullopt when the series is zero
  // to its full precision.
  std::optional<int> valuation() const;

  bool is_zero_to(int order) const;
  bool is_integral() const;

  QExpansion scaled(const Rat& c) const;
  // f(q) -> f(q^h); precision becomes h*(P-1)+1.
  QExpansion rescaled(int h) const;

  QExpansion operator-() const;
  friend QExpansion operator+(const QExpansion& f, const QExpansion& g);
  friend QExpansion operator-(const QExpansion& f, const QExpansion& g);
  friend QExpansion operator*(const QExpansion& f, const QExpansion& g);
  // Exact series division: requires valuation(f) >= valuation(g); result
  // precision min(Pf,Pg) - valuation(g).
  friend QExpansion operator/(const QExpansion& f, const QExpansion& g);

  bool operator==(const QExpansion& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const QExpansion& o) const { return !(*this == o); }

  // Human form, e.g. "1 + 240*q + 2160*q^2 + O(q^3)".
  std::string str() const;

 private:
  std::vector<Rat> coeffs_;
};

}  // namespace mfring
