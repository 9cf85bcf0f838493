#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mfring/catalog.hpp"

namespace mfring {

// Ordered generator list with modular weights; shared by the polynomials
// over it.
struct GeneratorSet {
  std::vector<std::string> names;
  std::vector<int> weights;

  int size() const { return static_cast<int>(names.size()); }
  int index(const std::string& name) const;
};

using GeneratorSetPtr = std::shared_ptr<const GeneratorSet>;
GeneratorSetPtr make_generators(std::vector<std::pair<std::string, int>> gens);

using ExpVec = std::vector<int>;  // one exponent per generator

// Polynomial in named generators with exact rational coefficients and a
// weighted grading; no zero coefficients stored.
class WeightedPoly {
 public:
  explicit WeightedPoly(GeneratorSetPtr gens) : gens_(std::move(gens)) {}
  static WeightedPoly variable(const GeneratorSetPtr& gens, int i);
  static WeightedPoly monomial(const GeneratorSetPtr& gens, ExpVec e, Rat c = Rat(1));

  const GeneratorSetPtr& generators() const { return gens_; }
  const std::map<ExpVec, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  int term_weight(const ExpVec& e) const;
  // Weighted degree when homogeneous; nullopt for 0 or mixed weights.
  std::optional<int> weighted_degree() const;

  void add_term(const ExpVec& e, const Rat& c);

  WeightedPoly operator-() const;
  friend WeightedPoly operator+(const WeightedPoly& a, const WeightedPoly& b);
  friend WeightedPoly operator-(const WeightedPoly& a, const WeightedPoly& b);
  friend WeightedPoly operator*(const WeightedPoly& a, const WeightedPoly& b);
  friend WeightedPoly operator*(const Rat& c, const WeightedPoly& a);

  // Same polynomial over a generator set containing all names of this one.
  WeightedPoly rebased(const GeneratorSetPtr& bigger) const;

  std::string str() const;

 private:
  GeneratorSetPtr gens_;
  std::map<ExpVec, Rat> terms_;
};

WeightedPoly pow(const WeightedPoly& a, int e);

// q-expansion evaluation of monomials and polynomials with a power cache.
class Evaluator {
 public:
  explicit Evaluator(const Catalog& cat = Catalog::standard()) : cat_(&cat) {}

  const Catalog& catalog() const { return *cat_; }
  const QExpansion& power(const std::string& name, int exp, int precision);
  QExpansion monomial(const GeneratorSet& gens, const ExpVec& e, int precision);
  QExpansion poly(const WeightedPoly& p, int precision);

 private:
  const Catalog* cat_;
  std::map<std::tuple<std::string, int, int>, QExpansion> cache_;
};

}  // namespace mfring
