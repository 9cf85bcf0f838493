#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mfring/relations.hpp"

using namespace mfring;

TEST_CASE("catalogue counts per level") {
  CHECK(relation_catalog(3).size() == 1);
  CHECK(relation_catalog(3)[0].name == "O_3");
  CHECK(relation_catalog(5).size() == 1);
  CHECK(relation_catalog(6).size() == 1);
  CHECK(relation_catalog(7).size() == 6);
  CHECK(relation_catalog(8).size() == 1);
  CHECK(relation_catalog(9).size() == 1);
  CHECK(relation_catalog(10).size() == 7);   // a..f plus e'
  CHECK(relation_catalog(12).size() == 6);   // O_6 plus b..f
  CHECK(relation_catalog(12)[0].name == "O_6");
  CHECK(relation_catalog(16).size() == 6);   // O_8 plus b..f
  CHECK(relation_catalog(18).size() == 17);  // a..f, A..I, B', X
  CHECK(relation_catalog(25).size() == 15);  // a..f, A..I
  CHECK(relation_catalog(1).empty());
  CHECK(relation_catalog(2).empty());
  CHECK(relation_catalog(4).empty());
  CHECK_THROWS_AS(relation_catalog(11), UnsupportedLevel);
}

TEST_CASE("every relation is weight-homogeneous at its declared weight") {
  for (int N : supported_levels())
    for (const auto& rel : relation_catalog(N)) {
      auto deg = rel.expr.weighted_degree();
      REQUIRE(deg.has_value());
      REQUIRE(*deg == rel.weight);
    }
}

TEST_CASE("named vanishing checks") {
  Evaluator ev;
  CHECK(verify_vanishing(relation("O_3"), 10, ev).pass);
  CHECK(verify_vanishing(relation("O_8"), 10, ev).pass);
  CHECK(verify_vanishing(relation("O_25I"), 10, ev).pass);
  CHECK(verify_vanishing(relation("O_18X"), 10, ev).pass);
  CHECK(verify_vanishing(relation("O_10e'"), 10, ev).pass);

  auto out = verify_vanishing(relation("O_3"), 10, ev);
  CHECK(out.cut == 3);           // dim M_8(3) = [8/3]+1
  CHECK(out.checked_order == 13);
}

TEST_CASE("a perturbed relation fails with a located coefficient") {
  RelationForm rel = relation("O_6");
  // add a stray multiple of one monomial so it is no longer a relation
  const auto& first = rel.expr.terms().begin()->first;
  rel.expr = rel.expr + Rat(1, 7) * WeightedPoly::monomial(rel.expr.generators(), first);
  Evaluator ev;
  auto out = verify_vanishing(rel, 5, ev);
  CHECK_FALSE(out.pass);
  CHECK(out.detail.find("first nonzero") != std::string::npos);
}

TEST_CASE("full relation suite vanishes to cut + 10") {
  Evaluator ev;
  for (int N : supported_levels())
    for (const auto& rel : relation_catalog(N)) {
      auto out = verify_vanishing(rel, 10, ev);
      INFO(rel.name, " at level ", N, ": ", out.detail);
      REQUIRE(out.pass);
    }
}

TEST_CASE("identity catalogue verifies") {
  CHECK(identity_catalog().size() >= 25);
  for (const auto& id : identity_catalog()) {
    auto out = verify_identity(id, 10);
    INFO(id.name, ": ", out.detail);
    REQUIRE(out.pass);
  }
}

TEST_CASE("E8 = E4^2 at its cut") {
  for (const auto& id : identity_catalog())
    if (id.name == "E8 = E4^2") {
      auto out = verify_identity(id, 10);
      CHECK(out.cut == 1);  // dim M_8(1)
      CHECK(out.pass);
      return;
    }
  FAIL("identity not catalogued");
}

TEST_CASE("polynomial identities among the O_*") {
  CHECK(polynomial_identity_catalog().size() == 4);
  for (const auto& id : polynomial_identity_catalog()) {
    auto out = verify_polynomial_identity(id);
    INFO(id.name, ": ", out.detail);
    REQUIRE(out.pass);
  }
}

TEST_CASE("polynomial identity failure reports the difference") {
  PolyIdentity broken{"broken", 18, relation("O_18B'").expr,
                      relation("O_18B").expr + relation("O_18b").expr};
  auto out = verify_polynomial_identity(broken);
  CHECK_FALSE(out.pass);
  CHECK(out.detail.find("difference") != std::string::npos);
}
