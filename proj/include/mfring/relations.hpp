#pragma once

#include <string>
#include <vector>

#include "mfring/spaces.hpp"
#include "mfring/weighted_poly.hpp"

namespace mfring {

// A weight-homogeneous polynomial in catalogue generators that is zero as a
// modular form.
struct RelationForm {
  std::string name;
  int level = 1;   // level of the form itself (O_6 keeps level 6 inside the
                   // level-12 catalogue)
  int weight = 0;
  WeightedPoly expr;
};

struct Identity {
  std::string name;
  int level = 1;
  int weight = 0;
  Expr lhs, rhs;
};

// Exact equality of polynomials in generator names (no q-expansion).
struct PolyIdentity {
  std::string name;
  int level = 1;
  WeightedPoly lhs, rhs;
};

// Levels hosting relations: {3,5,6,7,8,9,10,12,16,18,25}.  The level-12 list
// includes O_6 and the level-16 list O_8 (ideal generators there); levels
// 1, 2, 4 return an empty list.
const std::vector<RelationForm>& relation_catalog(int level);
const RelationForm& relation(const std::string& name);

const std::vector<Identity>& identity_catalog();
const std::vector<PolyIdentity>& polynomial_identity_catalog();

struct VerifyOutcome {
  std::string name;
  int level = 1;
  int weight = 0;
  int cut = 0;
  int checked_order = 0;
  bool pass = false;
  std::string detail;
};

// Expands rel to order sturm_cut + margin; passes iff every coefficient is 0.
VerifyOutcome verify_vanishing(const RelationForm& rel, int margin, Evaluator& ev);

// lhs - rhs expanded to sturm_cut + margin.
VerifyOutcome verify_identity(const Identity& id, int margin,
                              const Catalog& cat = Catalog::standard());

VerifyOutcome verify_polynomial_identity(const PolyIdentity& id);

}  // namespace mfring
