#include "mfring/spaces.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace mfring {

int dim_space(SpaceKey key) {
  int k = key.weight;
  if (k < 0 || k % 2) return 0;
  switch (key.level) {
    case 1: return k / 12 + 1 - (k % 12 == 2 ? 1 : 0);
    case 2: return k / 4 + 1;
    case 3: return k / 3 + 1;
    case 4: return k / 2 + 1;
    case 5: return 2 * (k / 4) + 1;
    case 6: return k + 1;
    case 7: return 2 * (k / 3) + 1;
    case 8: return k + 1;
    case 9: return k + 1;
    case 10: return k + 2 * (k / 4) + 1;
    case 12: return 2 * k + 1;
    case 16: return 2 * k + 1;
    case 18: return 3 * k + 1;
    case 25: return 2 * k + 2 * (k / 4) + 1;
    default: throw UnsupportedLevel(key.level);
  }
}

int sturm_cut(SpaceKey key) {
  int d = dim_space(key);
  if (d == 0)
    throw std::invalid_argument("sturm_cut: zero-dimensional space at level " +
                                std::to_string(key.level) + ", weight " +
                                std::to_string(key.weight));
  return d;
}

std::string Monomial::str() const {
  if (factors.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [name, e] : factors) {
    if (!first) os << "*";
    first = false;
    os << name;
    if (e > 1) os << "^" << e;
  }
  return os.str();
}

namespace {

// Tuple generator with its echelon index (expected valuation).
struct TupleGen {
  std::string name;
  int weight;
  int valuation;
};

// The three basis family shapes plus the level-1 construction; per-level tuples.
struct Family {
  char kind;  // 'A' (N=4,6,8,9,12,16,18), 'B' (N=2,5,10,25), 'C' (N=3,7), '1'
  std::vector<TupleGen> f, g, h;
};

const Family& family(int level) {
  static const std::map<int, Family> table = [] {
    std::map<int, Family> t;
    auto f2 = [](std::vector<std::string> names) {
      std::vector<TupleGen> v;
      for (size_t i = 0; i < names.size(); ++i)
        v.push_back({names[i], 2, static_cast<int>(i)});
      return v;
    };
    t[1] = Family{'1', {}, {}, {}};
    t[4] = Family{'A', f2({"C4", "alpha4"}), {}, {}};
    t[6] = Family{'A', f2({"C3^(2)", "alpha6", "beta6"}), {}, {}};
    t[8] = Family{'A', f2({"C4^(2)", "alpha4", "alpha4^(2)"}), {}, {}};
    t[9] = Family{'A', f2({"C3", "E_rho3", "beta9"}), {}, {}};
    t[12] = Family{'A', f2({"C3^(2)", "alpha6", "beta6", "alpha4^(3)", "beta6^(2)"}), {}, {}};
    t[16] = Family{'A', f2({"C4^(2)", "alpha4", "alpha4^(2)", "gamma16", "alpha4^(4)"}), {}, {}};
    t[18] = Family{'A',
                   f2({"C9^(2)", "alpha6", "beta6", "alpha6^(3)", "beta9^(2)",
                       "epsilon18", "beta6^(3)"}),
                   {}, {}};
    // family B: f_i weight 2 valuation i, g_i weight 4 valuation 2s+i
    auto famB = [&](std::vector<std::string> fs, std::vector<std::string> gs) {
      Family fam{'B', f2(fs), {}, {}};
      int s = static_cast<int>(fs.size()) - 1;
      for (size_t i = 0; i < gs.size(); ++i)
        fam.g.push_back({gs[i], 4, 2 * s + static_cast<int>(i) + 1});
      return fam;
    };
    t[2] = famB({"C2"}, {"alpha2"});
    t[5] = famB({"C5"}, {"alpha5", "beta5"});
    t[10] = famB({"C2", "alpha10", "beta10"}, {"alpha2^(5)", "zeta10"});
    t[25] = famB({"C5", "E_rho5", "E_i5", "gamma25", "delta25"}, {"iota25", "beta5^(5)"});
    // family C: f0 weight 2 valuation 0, g_i weight 4 valuation i,
    // h_i weight 6 valuation s+i
    auto famC = [&](std::string f0, std::vector<std::string> gs, std::vector<std::string> hs) {
      Family fam{'C', {{f0, 2, 0}}, {}, {}};
      int s = static_cast<int>(gs.size());
      for (size_t i = 0; i < gs.size(); ++i)
        fam.g.push_back({gs[i], 4, static_cast<int>(i) + 1});
      for (size_t i = 0; i < hs.size(); ++i)
        fam.h.push_back({hs[i], 6, s + static_cast<int>(i) + 1});
      return fam;
    };
    t[3] = famC("C3", {"alpha3"}, {"beta3"});
    t[7] = famC("C7", {"alpha7", "beta7"}, {"gamma7", "delta7"});
    return t;
  }();
  auto it = table.find(level);
  if (it == table.end()) throw UnsupportedLevel(level);
  return it->second;
}

// Builds monomials as exponent maps over the tuple generators, deduplicating
// the shared chain endpoints.
class MonomialSet {
 public:
  void add(std::map<std::string, int> exps) {
    std::erase_if(exps, [](const auto& kv) { return kv.second == 0; });
    set_.emplace(std::move(exps));
  }
  const std::set<std::map<std::string, int>>& items() const { return set_; }
  std::vector<std::pair<Monomial, int>> sorted(const std::vector<TupleGen>& gens) const {
    std::vector<std::pair<Monomial, int>> out;
    for (const auto& exps : set_) {
      Monomial m;
      int val = 0;
      for (const auto& g : gens) {
        auto it = exps.find(g.name);
        if (it == exps.end()) continue;
        m.factors.emplace_back(g.name, it->second);
        val += g.valuation * it->second;
      }
      out.emplace_back(std::move(m), val);
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.second < b.second; });
    return out;
  }

 private:
  std::set<std::map<std::string, int>> set_;
};

std::map<std::string, int> merge(std::map<std::string, int> a,
                                 const std::map<std::string, int>& b) {
  for (const auto& [k, v] : b) a[k] += v;
  return a;
}

// chain of two generators x^{top-i} y^i, i = lo..top
void add_chain(MonomialSet& out, const TupleGen& x, const TupleGen& y, int top, int lo,
               const std::map<std::string, int>& mult = {}) {
  for (int i = lo; i <= top; ++i)
    out.add(merge({{x.name, top - i}, {y.name, i}}, mult));
}

MonomialSet family_monomials_A(const Family& fam, int l) {
  MonomialSet out;
  const auto& f = fam.f;
  int s = static_cast<int>(f.size()) - 1;
  add_chain(out, f[0], f[std::min(1, s)], l, 0);
  for (int j = 2; j <= s; ++j) add_chain(out, f[j - 1], f[j], l, 1);
  return out;
}

MonomialSet family_monomials_B4l(const Family& fam, int l) {
  MonomialSet out;
  const auto& f = fam.f;
  const auto& g = fam.g;
  int s = static_cast<int>(f.size()) - 1;
  int t = static_cast<int>(g.size());
  if (s >= 1) {
    add_chain(out, f[0], f[1], 2 * l, 0);
    for (int j = 2; j <= s; ++j) add_chain(out, f[j - 1], f[j], 2 * l, 1);
  } else if (l == 0) {
    out.add({});
  }
  // f_s^{2(l-i)} g_1^i
  for (int i = (s >= 1 ? 1 : 0); i <= l; ++i)
    out.add({{f[s].name, 2 * (l - i)}, {g[0].name, i}});
  for (int j = 2; j <= t; ++j) add_chain(out, g[j - 2], g[j - 1], l, 1);
  return out;
}

MonomialSet family_monomials_B(const Family& fam, int k) {
  const auto& f = fam.f;
  const auto& g = fam.g;
  int s = static_cast<int>(f.size()) - 1;
  int t = static_cast<int>(g.size());
  if (k % 4 == 0) return family_monomials_B4l(fam, k / 4);
  // k = 4l+2: M_{4l} * f0 plus g_t^l f_i
  int l = k / 4;
  MonomialSet base = family_monomials_B4l(fam, l);
  MonomialSet out;
  for (auto exps : base.items()) {
    exps[f[0].name] += 1;
    out.add(std::move(exps));
  }
  for (int i = 1; i <= s; ++i)
    out.add({{g[t - 1].name, l}, {f[i].name, 1}});
  return out;
}

MonomialSet family_monomials_C6l(const Family& fam, int l) {
  MonomialSet out;
  const auto& f0 = fam.f[0];
  const auto& g = fam.g;
  const auto& h = fam.h;
  int s = static_cast<int>(g.size());
  // f0^{3l-2i} g1^i
  for (int i = 0; i <= l; ++i)
    out.add({{f0.name, 3 * l - 2 * i}, {g[0].name, i}});
  // f0^l g_{j-1}^{l-i} g_j^i
  for (int j = 2; j <= s; ++j)
    add_chain(out, g[j - 2], g[j - 1], l, 1, {{f0.name, l}});
  // (f0 g_s)^{l-i} h_1^i
  for (int i = 1; i <= l; ++i)
    out.add({{f0.name, l - i}, {g[s - 1].name, l - i}, {h[0].name, i}});
  for (int j = 2; j <= s; ++j) add_chain(out, h[j - 2], h[j - 1], l, 1);
  return out;
}

MonomialSet family_monomials_C(const Family& fam, int k) {
  const auto& f0 = fam.f[0];
  const auto& g = fam.g;
  const auto& h = fam.h;
  int s = static_cast<int>(g.size());
  int l = k / 6;
  int r = k % 6;
  MonomialSet base = family_monomials_C6l(fam, l);
  if (r == 0) return base;
  MonomialSet out;
  for (auto exps : base.items()) {
    exps[f0.name] += (r == 2 ? 1 : 2);
    out.add(std::move(exps));
  }
  if (r == 4)
    for (int i = 1; i <= s; ++i)
      out.add({{h[s - 1].name, l}, {g[i - 1].name, 1}});
  return out;
}

// M_{12l}(1) = span E4^{3(l-i)} Delta^i; shifted weights multiply by the
// fixed cofactor per k mod 12.
std::vector<std::pair<Monomial, int>> family_monomials_1(int k) {
  struct Shift {
    int rem;
    std::map<std::string, int> mult;
  };
  static const std::vector<Shift> shifts = {
      {0, {}},
      {4, {{"E4", 1}}},
      {6, {{"E6", 1}}},
      {8, {{"E4", 2}}},
      {10, {{"E4", 1}, {"E6", 1}}},
      {14, {{"E4", 2}, {"E6", 1}}},
  };
  std::vector<std::pair<Monomial, int>> out;
  for (const auto& sh : shifts) {
    if (k < sh.rem || (k - sh.rem) % 12) continue;
    int l = (k - sh.rem) / 12;
    for (int i = 0; i <= l; ++i) {
      auto exps = merge({{"E4", 3 * (l - i)}, {"Delta", i}}, sh.mult);
      std::erase_if(exps, [](const auto& kv) { return kv.second == 0; });
      Monomial m;
      for (const std::string name : {"E4", "E6", "Delta"}) {
        auto it = exps.find(name);
        if (it != exps.end()) m.factors.emplace_back(name, it->second);
      }
      out.emplace_back(std::move(m), i);  // Delta has valuation 1
    }
    break;
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.second < b.second; });
  return out;
}

}  // namespace

std::vector<std::pair<Monomial, int>> basis_monomials(SpaceKey key) {
  if (std::find(supported_levels().begin(), supported_levels().end(), key.level) ==
      supported_levels().end())
    throw UnsupportedLevel(key.level);
  int k = key.weight;
  if (k < 0 || k % 2) return {};
  if (k == 0) return {{Monomial{}, 0}};
  if (key.level == 1) return family_monomials_1(k);
  const Family& fam = family(key.level);
  MonomialSet set;
  switch (fam.kind) {
    case 'A': set = family_monomials_A(fam, k / 2); break;
    case 'B': set = family_monomials_B(fam, k); break;
    case 'C': set = family_monomials_C(fam, k); break;
    default: throw std::logic_error("bad family");
  }
  std::vector<TupleGen> all = fam.f;
  for (auto& t : fam.g) all.push_back(t);
  for (auto& t : fam.h) all.push_back(t);
  return set.sorted(all);
}

std::vector<BasisElement> space_basis(SpaceKey key, int precision, const Catalog& cat) {
  int d = dim_space(key);
  if (precision <= d)
    throw std::invalid_argument("space_basis: precision must exceed the dimension");
  std::vector<BasisElement> out;
  for (auto& [mono, val] : basis_monomials(key)) {
    QExpansion e = QExpansion::constant(Rat(1), precision);
    for (const auto& [name, exp] : mono.factors) {
      QExpansion f = cat.resolve(name, precision);
      for (int i = 0; i < exp; ++i) e = e * f;
    }
    out.push_back(BasisElement{std::move(mono), val, std::move(e)});
  }
  return out;
}

EchelonReport verify_echelon(SpaceKey key, const Catalog& cat) {
  EchelonReport rep;
  rep.key = key;
  rep.dimension = dim_space(key);
  auto basis = space_basis(key, rep.dimension + 1, cat);
  if (static_cast<int>(basis.size()) != rep.dimension) {
    rep.pass = false;
    rep.detail = "family size " + std::to_string(basis.size()) + " != dim " +
                 std::to_string(rep.dimension);
    return rep;
  }
  for (size_t i = 0; i < basis.size(); ++i) {
    const auto& b = basis[i];
    auto v = b.expansion.valuation();
    if (!v || *v != static_cast<int>(i) || b.expected_valuation != static_cast<int>(i)) {
      rep.pass = false;
      rep.detail = b.monomial.str() + ": valuation " + (v ? std::to_string(*v) : "none") +
                   ", expected " + std::to_string(i);
      return rep;
    }
    if (b.expansion.coeff(*v) != 1) {
      rep.pass = false;
      rep.detail = b.monomial.str() + ": leading coefficient " +
                   rat_str(b.expansion.coeff(*v)) + " != 1";
      return rep;
    }
  }
  rep.pass = true;
  rep.detail = rep.dimension
                   ? std::to_string(rep.dimension) + " elements, valuations 0.." +
                         std::to_string(rep.dimension - 1)
                   : "empty space";
  return rep;
}

}  // namespace mfring
