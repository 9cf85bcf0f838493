#include "mfring/qexpansion.hpp"

#include <algorithm>
#include <sstream>

namespace mfring {

QExpansion::QExpansion(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("QExpansion: precision must be positive");
}

QExpansion QExpansion::zero(int precision) {
  return QExpansion(std::vector<Rat>(static_cast<size_t>(precision)));
}

QExpansion QExpansion::constant(Rat c, int precision) {
  std::vector<Rat> v(static_cast<size_t>(precision));
  v[0] = std::move(c);
  return QExpansion(std::move(v));
}

QExpansion QExpansion::truncated(int precision) const {
  if (precision > this->precision())
    throw InsufficientPrecision("truncate: requested precision exceeds stored precision");
  std::vector<Rat> v(coeffs_.begin(), coeffs_.begin() + precision);
  return QExpansion(std::move(v));
}

std::optional<int> QExpansion::valuation() const {
  for (size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return static_cast<int>(i);
  return std::nullopt;
}

bool QExpansion::is_zero_to(int order) const {
  if (order > precision())
    throw InsufficientPrecision("is_zero_to: order exceeds stored precision");
  for (int i = 0; i < order; ++i)
    if (coeffs_[static_cast<size_t>(i)] != 0) return false;
  return true;
}

bool QExpansion::is_integral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rat& c) { return is_integer(c); });
}

QExpansion QExpansion::scaled(const Rat& c) const {
  std::vector<Rat> v(coeffs_.size());
  for (size_t i = 0; i < coeffs_.size(); ++i) v[i] = coeffs_[i] * c;
  return QExpansion(std::move(v));
}

QExpansion QExpansion::rescaled(int h) const {
  if (h < 1) throw std::invalid_argument("rescale: h must be positive");
  if (h == 1) return *this;
  size_t out = static_cast<size_t>(h) * (coeffs_.size() - 1) + 1;
  std::vector<Rat> v(out);
  for (size_t i = 0; i < coeffs_.size(); ++i) v[i * static_cast<size_t>(h)] = coeffs_[i];
  return QExpansion(std::move(v));
}

QExpansion QExpansion::operator-() const { return scaled(Rat(-1)); }

QExpansion operator+(const QExpansion& f, const QExpansion& g) {
  int p = std::min(f.precision(), g.precision());
  std::vector<Rat> v(static_cast<size_t>(p));
  for (int i = 0; i < p; ++i) v[static_cast<size_t>(i)] = f.coeff(i) + g.coeff(i);
  return QExpansion(std::move(v));
}

QExpansion operator-(const QExpansion& f, const QExpansion& g) {
  int p = std::min(f.precision(), g.precision());
  std::vector<Rat> v(static_cast<size_t>(p));
  for (int i = 0; i < p; ++i) v[static_cast<size_t>(i)] = f.coeff(i) - g.coeff(i);
  return QExpansion(std::move(v));
}

QExpansion operator*(const QExpansion& f, const QExpansion& g) {
  int p = std::min(f.precision(), g.precision());
  std::vector<Rat> v(static_cast<size_t>(p));
  Rat t;
  for (int i = 0; i < p; ++i) {
    if (f.coeff(i) == 0) continue;
    for (int j = 0; i + j < p; ++j) {
      if (g.coeff(j) == 0) continue;
      t = f.coeff(i) * g.coeff(j);
      v[static_cast<size_t>(i + j)] += t;
    }
  }
  return QExpansion(std::move(v));
}

QExpansion operator/(const QExpansion& f, const QExpansion& g) {
  auto vg = g.valuation();
  if (!vg) throw DivisionByZero();
  int v = *vg;
  if (!f.is_zero_to(std::min(v, f.precision())))
    throw NotDivisible("series division: dividend valuation below divisor valuation");
  int p = std::min(f.precision(), g.precision()) - v;
  if (p <= 0) throw InsufficientPrecision("series division: no precision left after valuation shift");
  std::vector<Rat> u(static_cast<size_t>(p));
  const Rat& lead = g.coeff(v);
  for (int n = 0; n < p; ++n) {
    Rat acc = (n + v < f.precision()) ? f.coeff(n + v) : Rat(0);
    for (int i = 0; i < n; ++i) acc -= u[static_cast<size_t>(i)] * g.coeff(n - i + v);
    u[static_cast<size_t>(n)] = acc / lead;
  }
  return QExpansion(std::move(u));
}

std::string QExpansion::str() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < precision(); ++i) {
    const Rat& c = coeffs_[static_cast<size_t>(i)];
    if (c == 0) continue;
    Rat a = c;
    if (first) {
      if (a < 0) { os << "-"; a = -a; }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool unit = (a == 1);
    if (i == 0) {
      os << rat_str(a);
    } else {
      if (!unit) os << rat_str(a) << "*";
      os << (i == 1 ? "q" : "q^" + std::to_string(i));
    }
  }
  if (first) os << "0";
  os << " + O(q^" << precision() << ")";
  return os.str();
}

}  // namespace mfring
