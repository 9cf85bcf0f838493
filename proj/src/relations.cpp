#include "mfring/relations.hpp"

#include <map>

namespace mfring {

namespace {

GeneratorSetPtr gens3() {
  static auto g = make_generators({{"C3", 2}, {"alpha3", 4}, {"beta3", 6}});
  return g;
}
GeneratorSetPtr gens5() {
  static auto g = make_generators({{"C5", 2}, {"alpha5", 4}, {"beta5", 4}});
  return g;
}
GeneratorSetPtr gens6() {
  static auto g = make_generators({{"C3^(2)", 2}, {"alpha6", 2}, {"beta6", 2}});
  return g;
}
GeneratorSetPtr gens7() {
  static auto g = make_generators(
      {{"C7", 2}, {"alpha7", 4}, {"beta7", 4}, {"gamma7", 6}, {"delta7", 6}});
  return g;
}
GeneratorSetPtr gens8() {
  static auto g = make_generators({{"C4^(2)", 2}, {"alpha4", 2}, {"alpha4^(2)", 2}});
  return g;
}
GeneratorSetPtr gens9() {
  static auto g = make_generators({{"C3", 2}, {"alpha9", 2}, {"beta9", 2}});
  return g;
}
GeneratorSetPtr gens10() {
  static auto g = make_generators(
      {{"u10", 2}, {"alpha10", 2}, {"beta10", 2}, {"epsilon10", 4}, {"zeta10", 4}});
  return g;
}
GeneratorSetPtr gens12() {
  static auto g = make_generators(
      {{"C3^(2)", 2}, {"alpha6", 2}, {"beta6", 2}, {"gamma12", 2}, {"beta6^(2)", 2}});
  return g;
}
GeneratorSetPtr gens16() {
  static auto g = make_generators({{"C4^(2)", 2},
                                   {"alpha4", 2},
                                   {"alpha4^(2)", 2},
                                   {"gamma16", 2},
                                   {"alpha4^(4)", 2}});
  return g;
}
GeneratorSetPtr gens18() {
  static auto g = make_generators({{"u18", 2},
                                   {"alpha18", 2},
                                   {"beta6", 2},
                                   {"gamma18", 2},
                                   {"delta18", 2},
                                   {"epsilon18", 2},
                                   {"beta6^(3)", 2}});
  return g;
}
GeneratorSetPtr gens25() {
  static auto g = make_generators({{"u25", 2},
                                   {"alpha25", 2},
                                   {"E_i5", 2},
                                   {"gamma25", 2},
                                   {"delta25", 2},
                                   {"iota25", 4},
                                   {"beta5^(5)", 4}});
  return g;
}

using WP = WeightedPoly;

RelationForm make_rel(std::string name, int level, WP expr) {
  auto deg = expr.weighted_degree();
  if (!deg) throw std::logic_error("relation " + name + " is not weight-homogeneous");
  return RelationForm{std::move(name), level, *deg, std::move(expr)};
}

std::map<std::string, RelationForm> build_relations() {
  std::map<std::string, RelationForm> out;
  auto add = [&](std::string name, int level, WP expr) {
    out.emplace(name, make_rel(name, level, std::move(expr)));
  };

  {
    auto g = gens3();
    WP C3 = WP::variable(g, 0), a3 = WP::variable(g, 1), b3 = WP::variable(g, 2);
    add("O_3", 3, pow(a3, 2) - C3 * b3);
  }
  {
    auto g = gens5();
    WP C5 = WP::variable(g, 0), a5 = WP::variable(g, 1), b5 = WP::variable(g, 2);
    add("O_5", 5, pow(a5, 2) - (pow(C5, 2) + Rat(4) * a5 - Rat(8) * b5) * b5);
  }
  {
    auto g = gens6();
    WP C = WP::variable(g, 0), a = WP::variable(g, 1), b = WP::variable(g, 2);
    add("O_6", 6, pow(a, 2) - C * b);
  }
  {
    auto g = gens7();
    WP C = WP::variable(g, 0), a = WP::variable(g, 1), b = WP::variable(g, 2),
       c = WP::variable(g, 3), d = WP::variable(g, 4);
    add("O_7a", 7, pow(b, 2) - C * d);
    add("O_7b", 7, C * c - a * b);
    add("O_7c", 7, b * c - a * d);
    add("O_7d", 7, pow(a, 2) - (pow(C, 2) + Rat(7) * a - Rat(19) * b) * b);
    add("O_7e", 7, a * c - (C * b + Rat(7) * c - Rat(19) * d) * b);
    add("O_7f", 7, pow(c, 2) - (C * b + Rat(7) * c - Rat(19) * d) * d);
  }
  {
    auto g = gens8();
    WP C = WP::variable(g, 0), a = WP::variable(g, 1), a2 = WP::variable(g, 2);
    add("O_8", 8, pow(a, 2) - C * a2);
  }
  {
    auto g = gens9();
    WP C3 = WP::variable(g, 0), a9 = WP::variable(g, 1), b9 = WP::variable(g, 2);
    add("O_9", 9, pow(a9, 2) - C3 * b9);
  }
  {
    auto g = gens10();
    WP u = WP::variable(g, 0), a = WP::variable(g, 1), b = WP::variable(g, 2),
       e = WP::variable(g, 3), z = WP::variable(g, 4);
    add("O_10a", 10, pow(a, 2) - u * b);
    add("O_10b", 10, a * e - u * z);
    add("O_10c", 10, b * e - a * z);
    add("O_10d", 10, a * pow(b, 2) - (u + Rat(8) * a + Rat(20) * b) * e);
    add("O_10e", 10, pow(b, 3) - (a * e + Rat(8) * b * e + Rat(20) * b * z));
    add("O_10f", 10, pow(b, 2) * z - (pow(e, 2) + Rat(8) * e * z + Rat(20) * pow(z, 2)));
    add("O_10e'", 10, pow(b, 3) - (u + Rat(8) * a + Rat(20) * b) * z);
  }
  {
    auto g = gens12();
    WP C = WP::variable(g, 0), a = WP::variable(g, 1), b = WP::variable(g, 2),
       c = WP::variable(g, 3), b2 = WP::variable(g, 4);
    WP mix = b + Rat(2) * c + Rat(4) * b2;
    add("O_12b", 12, pow(c, 2) - b * b2);
    add("O_12c", 12, C * c - mix * a);
    add("O_12d", 12, a * c - mix * b);
    add("O_12e", 12, a * b2 - mix * c);
    add("O_12f", 12,
        C * b2 - pow(b, 2) - Rat(4) * a * b2 - Rat(4) * pow(c, 2) - Rat(16) * pow(b2, 2));
  }
  {
    auto g = gens16();
    WP C = WP::variable(g, 0), a = WP::variable(g, 1), a2 = WP::variable(g, 2),
       c = WP::variable(g, 3), a4 = WP::variable(g, 4);
    WP mix = a2 + Rat(4) * a4;
    add("O_16b", 16, pow(c, 2) - a2 * a4);
    add("O_16c", 16, C * c - mix * a);
    add("O_16d", 16, a * c - mix * a2);
    add("O_16e", 16, a * a4 - mix * c);
    add("O_16f", 16, C * a4 - pow(mix, 2));
  }
  {
    auto g = gens18();
    WP u = WP::variable(g, 0), a = WP::variable(g, 1), b = WP::variable(g, 2),
       c = WP::variable(g, 3), d = WP::variable(g, 4), e = WP::variable(g, 5),
       z = WP::variable(g, 6);
    WP mix = d + Rat(3) * e - Rat(3) * z;
    add("O_18a", 18, u * c - a * b);
    add("O_18b", 18, u * e - a * d);
    add("O_18c", 18, pow(c, 2) - u * z);
    add("O_18d", 18, b * e - c * d);
    add("O_18e", 18, pow(d, 2) - b * z);
    add("O_18f", 18, d * e - c * z);
    add("O_18A", 18, (u + Rat(3) * b) * d - b * (b + Rat(3) * c));
    add("O_18B", 18, (a + Rat(3) * c) * d - c * (b + Rat(3) * c));
    add("O_18C", 18, (a + Rat(3) * c) * e - z * (u + Rat(3) * a));
    add("O_18D", 18, a * c - u * mix);
    add("O_18E", 18, pow(c, 2) - b * mix);
    add("O_18F", 18, a * z - c * mix);
    add("O_18G", 18, c * e - d * mix);
    add("O_18H", 18, pow(e, 2) - z * mix);
    add("O_18I", 18,
        pow(a, 2) - u * b - Rat(3) * a * c - Rat(6) * a * b + Rat(9) * pow(c, 2));
    add("O_18B'", 18, (u + Rat(3) * b) * e - c * (b + Rat(3) * c));
    add("O_18X", 18,
        a * c - pow(b, 2) - Rat(3) * pow(c, 2) - Rat(6) * b * c + Rat(9) * b * z);
  }
  {
    auto g = gens25();
    WP u = WP::variable(g, 0), a = WP::variable(g, 1), i5 = WP::variable(g, 2),
       c = WP::variable(g, 3), d = WP::variable(g, 4), io = WP::variable(g, 5),
       b5 = WP::variable(g, 6);
    WP sq = pow(d, 2) - Rat(5) * b5;
    WP im = io - Rat(2) * b5;
    add("O_25a", 25, pow(a, 2) - u * i5);
    add("O_25b", 25, a * i5 - u * c);
    add("O_25c", 25, pow(i5, 2) - a * c);
    add("O_25d", 25, pow(i5, 2) - u * d);
    add("O_25e", 25, i5 * c - a * d);
    add("O_25f", 25, pow(c, 2) - i5 * d);
    add("O_25A", 25, u * io - a * sq);
    add("O_25B", 25, a * io - i5 * sq);
    add("O_25C", 25, i5 * io - c * sq);
    add("O_25D", 25, c * io - d * sq);
    add("O_25E", 25, u * b5 - a * im);
    add("O_25F", 25, a * b5 - i5 * im);
    add("O_25G", 25, i5 * b5 - c * im);
    add("O_25H", 25, c * b5 - d * im);
    add("O_25I", 25, sq * b5 - io * im);
  }
  return out;
}

const std::map<std::string, RelationForm>& relation_map() {
  static const auto m = build_relations();
  return m;
}

}  // namespace

const RelationForm& relation(const std::string& name) {
  auto it = relation_map().find(name);
  if (it == relation_map().end()) throw std::invalid_argument("unknown relation: " + name);
  return it->second;
}

const std::vector<RelationForm>& relation_catalog(int level) {
  static const std::map<int, std::vector<std::string>> lists = {
      {1, {}},
      {2, {}},
      {4, {}},
      {3, {"O_3"}},
      {5, {"O_5"}},
      {6, {"O_6"}},
      {7, {"O_7a", "O_7b", "O_7c", "O_7d", "O_7e", "O_7f"}},
      {8, {"O_8"}},
      {9, {"O_9"}},
      {10, {"O_10a", "O_10b", "O_10c", "O_10d", "O_10e", "O_10f", "O_10e'"}},
      {12, {"O_6", "O_12b", "O_12c", "O_12d", "O_12e", "O_12f"}},
      {16, {"O_8", "O_16b", "O_16c", "O_16d", "O_16e", "O_16f"}},
      {18, {"O_18a", "O_18b", "O_18c", "O_18d", "O_18e", "O_18f", "O_18A", "O_18B",
            "O_18C", "O_18D", "O_18E", "O_18F", "O_18G", "O_18H", "O_18I", "O_18B'",
            "O_18X"}},
      {25, {"O_25a", "O_25b", "O_25c", "O_25d", "O_25e", "O_25f", "O_25A", "O_25B",
            "O_25C", "O_25D", "O_25E", "O_25F", "O_25G", "O_25H", "O_25I"}},
  };
  static std::map<int, std::vector<RelationForm>> built = [] {
    std::map<int, std::vector<RelationForm>> b;
    for (const auto& [level, names] : lists) {
      std::vector<RelationForm> v;
      for (const auto& n : names) {
        RelationForm r = relation(n);
        if (level == 12) r.expr = r.expr.rebased(gens12());
        if (level == 16) r.expr = r.expr.rebased(gens16());
        v.push_back(std::move(r));
      }
      b.emplace(level, std::move(v));
    }
    return b;
  }();
  auto it = built.find(level);
  if (it == built.end()) throw UnsupportedLevel(level);
  return it->second;
}

const std::vector<Identity>& identity_catalog() {
  static const std::vector<Identity> ids = [] {
    std::vector<Identity> v;
    auto add = [&](std::string name, int level, int weight, Expr lhs, Expr rhs) {
      v.push_back(Identity{std::move(name), level, weight, std::move(lhs), std::move(rhs)});
    };
    Expr E4 = F("E4"), E6 = F("E6"), C2 = F("C2"), C3 = F("C3"), C4 = F("C4"),
         C5 = F("C5"), C6 = F("C6"), C9 = F("C9"), C12 = F("C12"), C25 = F("C25"),
         a4 = F("alpha4"), a6 = F("alpha6"), b6 = F("beta6"), C3_2 = F("C3^(2)");

    add("E8 = E4^2", 1, 8, F("E8"), pow(E4, 2));
    add("E4 = C2^2 + 192*C4*alpha4", 4, 4, E4, pow(C2, 2) + Rat(192) * C4 * a4);
    add("E4 = C2^2 + 12*C2*C4 - 12*C4^2", 4, 4, E4,
        pow(C2, 2) + Rat(12) * C2 * C4 - Rat(12) * pow(C4, 2));
    add("E4 = C2^2 + C2*C3 - C3^2 + 5*C3*C6 - C6^2", 6, 4, E4,
        pow(C2, 2) + C2 * C3 - pow(C3, 2) + Rat(5) * C3 * C6 - pow(C6, 2));
    add("E4^(2) = (1/4)(5*C2^2 - E4)", 2, 4, F("E4^(2)"),
        Rat(1, 4) * (Rat(5) * pow(C2, 2) - E4));
    add("E4^(2) = C2^2 - 48*C4*alpha4", 4, 4, F("E4^(2)"),
        pow(C2, 2) - Rat(48) * C4 * a4);
    add("alpha2 = C4*alpha4", 4, 4, F("alpha2"), C4 * a4);
    add("E6 = C2*(4*C2^2 - 3*E4)", 2, 6, E6, C2 * (Rat(4) * pow(C2, 2) - Rat(3) * E4));
    add("E6^(2) = (1/8)*C2*(11*C2^2 - 3*E4)", 2, 6, F("E6^(2)"),
        Rat(1, 8) * (C2 * (Rat(11) * pow(C2, 2) - Rat(3) * E4)));
    add("C2 = C4 + 16*alpha4", 4, 2, C2, C4 + Rat(16) * a4);
    add("C2^(2) = C4 - 8*alpha4", 4, 2, F("C2^(2)"), C4 - Rat(8) * a4);
    add("E4^(3) = (1/9)(10*C3^2 - E4)", 3, 4, F("E4^(3)"),
        Rat(1, 9) * (Rat(10) * pow(C3, 2) - E4));
    add("E6^(3) = (1/27)(35*C3^3 - 7*C3*E4 - E6)", 3, 6, F("E6^(3)"),
        Rat(1, 27) * (Rat(35) * pow(C3, 3) - Rat(7) * C3 * E4 - E6));
    add("C3 = (C3^(2) + 6*alpha6)^2 / C3^(2)", 6, 2, C3,
        pow(C3_2 + Rat(6) * a6, 2) / C3_2);
    add("beta6 = alpha6^2 / C3^(2)", 6, 2, b6, pow(a6, 2) / C3_2);
    add("alpha3 = (1/216)(E4 - C3^2)", 3, 4, F("alpha3"),
        Rat(1, 216) * (E4 - pow(C3, 2)));
    add("alpha3 = (C3^(2)+2*alpha6)^2*(C3^(2)+6*alpha6)*alpha6 / C3^(2)^2", 6, 4,
        F("alpha3"),
        pow(C3_2 + Rat(2) * a6, 2) * (C3_2 + Rat(6) * a6) * a6 / pow(C3_2, 2));
    add("beta3 = (1/11664)(7*C3^3 - 5*C3*E4 - 2*E6)", 3, 6, F("beta3"),
        Rat(1, 11664) * (Rat(7) * pow(C3, 3) - Rat(5) * C3 * E4 - Rat(2) * E6));
    add("beta3 = (C3^(2)+2*alpha6)^4*alpha6^2 / C3^(2)^3", 6, 6, F("beta3"),
        pow(C3_2 + Rat(2) * a6, 4) * pow(a6, 2) / pow(C3_2, 3));

    // the five level-12 linear expressions
    Expr g12 = F("gamma12"), b6_2 = F("beta6^(2)");
    add("C2 = C3^(2) + 24*alpha6 + 36*beta6", 12, 2, C2,
        C3_2 + Rat(24) * a6 + Rat(36) * b6);
    add("C3 = C3^(2) + 12*alpha6 + 36*beta6", 12, 2, C3,
        C3_2 + Rat(12) * a6 + Rat(36) * b6);
    add("C4 = C3^(2) + 8*alpha6 + 20*beta6 + 16*gamma12 - 16*beta6^(2)", 12, 2, C4,
        C3_2 + Rat(8) * a6 + Rat(20) * b6 + Rat(16) * g12 - Rat(16) * b6_2);
    add("C6 = 5*C3^(2) + 24*alpha6 + 36*beta6", 12, 2, C6,
        Rat(5) * C3_2 + Rat(24) * a6 + Rat(36) * b6);
    add("C12 = 11*C3^(2) + 24*alpha6 - 36*beta6 - 144*gamma12 - 144*beta6^(2)", 12, 2,
        C12, Rat(11) * C3_2 + Rat(24) * a6 - Rat(36) * b6 - Rat(144) * g12 -
                 Rat(144) * b6_2);

    Expr a9 = F("alpha9"), b9 = F("beta9");
    add("E4 = C3^2 + 216*C9*alpha9", 9, 4, E4, pow(C3, 2) + Rat(216) * C9 * a9);
    add("E4^(3) = C3^2 - 24*C9*alpha9", 9, 4, F("E4^(3)"),
        pow(C3, 2) - Rat(24) * C9 * a9);
    add("alpha3 = C9*alpha9", 9, 4, F("alpha3"), C9 * a9);
    add("E6 = C3^3 + 216*C3*C9^2 - 540*C3*C9*alpha9 - 216*C9^3 - 1944*C9^2*alpha9", 9,
        6, E6,
        pow(C3, 3) + Rat(216) * C3 * pow(C9, 2) - Rat(540) * C3 * C9 * a9 -
            Rat(216) * pow(C9, 3) - Rat(1944) * pow(C9, 2) * a9);
    add("beta3 = C9^2*beta9", 9, 6, F("beta3"), pow(C9, 2) * b9);
    add("O_3 = (1/216)(27*C3^4 - 18*C3^2*E4 - E4^2 - 8*C3*E6)", 3, 8,
        pow(F("alpha3"), 2) - C3 * F("beta3"),
        Rat(1, 216) * (Rat(27) * pow(C3, 4) - Rat(18) * pow(C3, 2) * E4 - pow(E4, 2) -
                       Rat(8) * C3 * E6));
    add("E6 = (1/8)*C5*(2000*C5^2 - 117*E4 - 1875*E4^(5))", 5, 6, E6,
        Rat(1, 8) * (C5 * (Rat(2000) * pow(C5, 2) - Rat(117) * E4 -
                           Rat(1875) * F("E4^(5)"))));
    add("E6^(5) = (1/40)*C5*(-80*C5^2 + 3*E4 + 117*E4^(5))", 5, 6, F("E6^(5)"),
        Rat(1, 40) *
            (C5 * (Rat(-80) * pow(C5, 2) + Rat(3) * E4 + Rat(117) * F("E4^(5)"))));
    add("O_5 = (1/(12^4*5))(3520*C5^4 + E4^2 + 625*E4^(5)^2 - 160*C5^2*E4 - "
        "4000*C5^2*E4^(5) + 14*E4*E4^(5))",
        5, 8,
        pow(F("alpha5"), 2) -
            (pow(C5, 2) + Rat(4) * F("alpha5") - Rat(8) * F("beta5")) * F("beta5"),
        Rat(1, 103680) *
            (Rat(3520) * pow(C5, 4) + pow(E4, 2) + Rat(625) * pow(F("E4^(5)"), 2) -
             Rat(160) * pow(C5, 2) * E4 - Rat(4000) * pow(C5, 2) * F("E4^(5)") +
             Rat(14) * E4 * F("E4^(5)")));
    add("E4^(25) = (1/625)(52*(C5-3*C25)^2 + 432*C25^2 - 60*E_rho5^2 + 600*E_r5^2 + "
        "600*E_i5^2 - E4 - 14*E4^(5))",
        25, 4, F("E4^(25)"),
        Rat(1, 625) *
            (Rat(52) * pow(C5 - Rat(3) * C25, 2) + Rat(432) * pow(C25, 2) -
             Rat(60) * pow(F("E_rho5"), 2) + Rat(600) * pow(F("E_r5"), 2) +
             Rat(600) * pow(F("E_i5"), 2) - E4 - Rat(14) * F("E4^(5)")));
    add("delta7 = beta7^2 / C7", 7, 6, F("delta7"), pow(F("beta7"), 2) / F("C7"));
    // -O_6^(2) written out in level-12 generators (rescale enters, so this
    // lives in the q-series catalogue rather than the polynomial one)
    add("-O_6^(2) = C3^(2)*beta6^(2) - beta6^2 - 4*beta6*gamma12 - 8*beta6*beta6^(2) "
        "- 4*gamma12^2 - 16*gamma12*beta6^(2) - 16*beta6^(2)^2",
        12, 4, Rat(-1) * rescale(pow(F("alpha6"), 2) - C3_2 * F("beta6"), 2),
        C3_2 * b6_2 - pow(b6, 2) - Rat(4) * b6 * g12 - Rat(8) * b6 * b6_2 -
            Rat(4) * pow(g12, 2) - Rat(16) * g12 * b6_2 - Rat(16) * pow(b6_2, 2));
    return v;
  }();
  return ids;
}

const std::vector<PolyIdentity>& polynomial_identity_catalog() {
  static const std::vector<PolyIdentity> ids = [] {
    std::vector<PolyIdentity> v;
    auto R = [](const std::string& n) { return relation(n).expr; };
    v.push_back({"O_18B' = O_18B + O_18b + 3*O_18d", 18, R("O_18B'"),
                 R("O_18B") + R("O_18b") + Rat(3) * R("O_18d")});
    v.push_back({"O_18X = 3*O_18c + O_18A + 3*O_18B' + O_18D + 3*O_18E", 18, R("O_18X"),
                 Rat(3) * R("O_18c") + R("O_18A") + Rat(3) * R("O_18B'") + R("O_18D") +
                     Rat(3) * R("O_18E")});
    v.push_back({"O_10e' = O_10e + O_10b + 8*O_10c", 10, R("O_10e'"),
                 R("O_10e") + R("O_10b") + Rat(8) * R("O_10c")});
    {
      auto g = gens12();
      WP C = WP::variable(g, 0), b = WP::variable(g, 2), c = WP::variable(g, 3),
         b2 = WP::variable(g, 4);
      WP rhs = C * b2 - pow(b, 2) - Rat(4) * b * c - Rat(8) * b * b2 -
               Rat(4) * pow(c, 2) - Rat(16) * c * b2 - Rat(16) * pow(b2, 2);
      v.push_back({"8*O_12b + 4*O_12e + O_12f = -O_6^(2) display", 12,
                   Rat(8) * R("O_12b") + Rat(4) * R("O_12e") + R("O_12f"), rhs});
    }
    return v;
  }();
  return ids;
}

VerifyOutcome verify_vanishing(const RelationForm& rel, int margin, Evaluator& ev) {
  VerifyOutcome out;
  out.name = rel.name;
  out.level = rel.level;
  out.weight = rel.weight;
  out.cut = sturm_cut({rel.level, rel.weight});
  out.checked_order = out.cut + margin;
  QExpansion q = ev.poly(rel.expr, out.checked_order);
  auto val = q.valuation();
  out.pass = !val;
  out.detail = out.pass
                   ? "0 through q^" + std::to_string(out.checked_order - 1)
                   : "first nonzero coefficient at q^" + std::to_string(*val) + ": " +
                         rat_str(q.coeff(*val));
  return out;
}

VerifyOutcome verify_identity(const Identity& id, int margin, const Catalog& cat) {
  VerifyOutcome out;
  out.name = id.name;
  out.level = id.level;
  out.weight = id.weight;
  out.cut = sturm_cut({id.level, id.weight});
  out.checked_order = out.cut + margin;
  QExpansion diff =
      id.lhs.eval(cat, out.checked_order) - id.rhs.eval(cat, out.checked_order);
  auto val = diff.valuation();
  out.pass = !val;
  out.detail = out.pass
                   ? "equal through q^" + std::to_string(out.checked_order - 1)
                   : "differs first at q^" + std::to_string(*val) + ": " +
                         rat_str(diff.coeff(*val));
  return out;
}

VerifyOutcome verify_polynomial_identity(const PolyIdentity& id) {
  VerifyOutcome out;
  out.name = id.name;
  out.level = id.level;
  WeightedPoly diff = id.lhs - id.rhs;
  auto deg = id.lhs.weighted_degree();
  out.weight = deg ? *deg : 0;
  out.pass = diff.is_zero();
  out.detail = out.pass ? "exact polynomial equality" : "difference: " + diff.str();
  return out;
}

}  // namespace mfring
