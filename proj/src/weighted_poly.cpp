#include "mfring/weighted_poly.hpp"

#include <algorithm>
#include <sstream>

namespace mfring {

int GeneratorSet::index(const std::string& name) const {
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) throw std::invalid_argument("generator not in set: " + name);
  return static_cast<int>(it - names.begin());
}

GeneratorSetPtr make_generators(std::vector<std::pair<std::string, int>> gens) {
  auto out = std::make_shared<GeneratorSet>();
  for (auto& [n, w] : gens) {
    out->names.push_back(std::move(n));
    out->weights.push_back(w);
  }
  return out;
}

WeightedPoly WeightedPoly::variable(const GeneratorSetPtr& gens, int i) {
  ExpVec e(static_cast<size_t>(gens->size()), 0);
  e[static_cast<size_t>(i)] = 1;
  return monomial(gens, std::move(e));
}

WeightedPoly WeightedPoly::monomial(const GeneratorSetPtr& gens, ExpVec e, Rat c) {
  WeightedPoly p(gens);
  if (c != 0) p.terms_.emplace(std::move(e), std::move(c));
  return p;
}

int WeightedPoly::term_weight(const ExpVec& e) const {
  int w = 0;
  for (size_t i = 0; i < e.size(); ++i) w += e[i] * gens_->weights[i];
  return w;
}

std::optional<int> WeightedPoly::weighted_degree() const {
  std::optional<int> deg;
  for (const auto& [e, c] : terms_) {
    int w = term_weight(e);
    if (deg && *deg != w) return std::nullopt;
    deg = w;
  }
  return deg;
}

void WeightedPoly::add_term(const ExpVec& e, const Rat& c) {
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    if (c != 0) terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

WeightedPoly WeightedPoly::operator-() const { return Rat(-1) * *this; }

WeightedPoly operator+(const WeightedPoly& a, const WeightedPoly& b) {
  WeightedPoly out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e, c);
  return out;
}

WeightedPoly operator-(const WeightedPoly& a, const WeightedPoly& b) {
  WeightedPoly out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e, -c);
  return out;
}

WeightedPoly operator*(const WeightedPoly& a, const WeightedPoly& b) {
  WeightedPoly out(a.gens_);
  ExpVec e(a.gens_->names.size());
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

WeightedPoly operator*(const Rat& c, const WeightedPoly& a) {
  WeightedPoly out(a.gens_);
  if (c == 0) return out;
  for (const auto& [e, t] : a.terms_) out.terms_.emplace(e, c * t);
  return out;
}

WeightedPoly pow(const WeightedPoly& a, int e) {
  if (e < 1) throw std::invalid_argument("pow: exponent must be positive");
  WeightedPoly out = a;
  for (int i = 1; i < e; ++i) out = out * a;
  return out;
}

WeightedPoly WeightedPoly::rebased(const GeneratorSetPtr& bigger) const {
  std::vector<int> map(gens_->names.size());
  for (size_t i = 0; i < gens_->names.size(); ++i)
    map[i] = bigger->index(gens_->names[i]);
  WeightedPoly out(bigger);
  for (const auto& [e, c] : terms_) {
    ExpVec be(static_cast<size_t>(bigger->size()), 0);
    for (size_t i = 0; i < e.size(); ++i) be[static_cast<size_t>(map[i])] += e[i];
    out.add_term(be, c);
  }
  return out;
}

std::string WeightedPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rat a = c;
    if (first) {
      if (a < 0) { os << "-"; a = -a; }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    std::string mono;
    for (size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += gens_->names[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      os << rat_str(a);
    } else {
      if (a != 1) os << rat_str(a) << "*";
      os << mono;
    }
  }
  return os.str();
}

const QExpansion& Evaluator::power(const std::string& name, int exp, int precision) {
  auto key = std::make_tuple(name, exp, precision);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  QExpansion result = (exp == 1)
                          ? cat_->resolve(name, precision)
                          : power(name, exp - 1, precision) * cat_->resolve(name, precision);
  return cache_.emplace(std::move(key), std::move(result)).first->second;
}

QExpansion Evaluator::monomial(const GeneratorSet& gens, const ExpVec& e, int precision) {
  QExpansion out = QExpansion::constant(Rat(1), precision);
  for (size_t i = 0; i < e.size(); ++i) {
    if (!e[i]) continue;
    out = out * power(gens.names[i], e[i], precision);
  }
  return out;
}

QExpansion Evaluator::poly(const WeightedPoly& p, int precision) {
  QExpansion out = QExpansion::zero(precision);
  for (const auto& [e, c] : p.terms())
    out = out + monomial(*p.generators(), e, precision).scaled(c);
  return out;
}

}  // namespace mfring
