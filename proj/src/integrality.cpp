#include "mfring/integrality.hpp"

#include <sstream>

#include "mfring/arith.hpp"

namespace mfring {

namespace {

IntegralityItem check_element(const std::string& name, int level, int weight,
                              const QExpansion& q, int expected_valuation) {
  IntegralityItem item{name, level, weight, false, ""};
  for (int i = 0; i < q.precision(); ++i) {
    if (!is_integer(q.coeff(i))) {
      item.detail = "non-integral coefficient at q^" + std::to_string(i) + ": " +
                    rat_str(q.coeff(i));
      return item;
    }
  }
  auto v = q.valuation();
  if (!v || *v != expected_valuation) {
    item.detail = "valuation " + (v ? std::to_string(*v) : std::string("none")) +
                  " != " + std::to_string(expected_valuation);
    return item;
  }
  if (q.coeff(*v) != 1) {
    item.detail = "leading coefficient " + rat_str(q.coeff(*v)) + " != 1";
    return item;
  }
  item.pass = true;
  return item;
}

// deterministic small PRNG for the integer-combination spot check
struct SplitMix {
  uint64_t s;
  uint64_t next() {
    s += 0x9e3779b97f4a7c15ull;
    uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  long pick(long lo, long hi) { return lo + static_cast<long>(next() % static_cast<uint64_t>(hi - lo + 1)); }
};

QExpansion series_of(int P, const std::function<Rat(long)>& an, Rat c0 = Rat(0)) {
  std::vector<Rat> v(static_cast<size_t>(P));
  v[0] = std::move(c0);
  for (long n = 1; n < P; ++n) v[static_cast<size_t>(n)] = an(n);
  return QExpansion(std::move(v));
}

}  // namespace

std::vector<IntegralityItem> verify_integral_basis(int level, int K, int P, Evaluator& ev) {
  if (P <= dim_space({level, K}))
    throw std::invalid_argument("verify_integral_basis: precision must exceed dim M_K(N)");
  std::vector<IntegralityItem> out;
  SplitMix rng{0x6d665ull + static_cast<uint64_t>(level)};
  for (int k = 0; k <= K; k += 2) {
    int d = dim_space({level, k});
    auto monos = basis_monomials({level, k});
    std::string name = "basis N=" + std::to_string(level) + " k=" + std::to_string(k);
    if (static_cast<int>(monos.size()) != d) {
      out.push_back({name, level, k, false, "family size mismatch"});
      continue;
    }
    bool all_ok = true;
    std::vector<const QExpansion*> expansions;
    std::vector<QExpansion> storage;
    storage.reserve(monos.size());
    for (const auto& [mono, val] : monos) {
      QExpansion q = QExpansion::constant(Rat(1), P);
      for (const auto& [gname, e] : mono.factors) q = q * ev.power(gname, e, P);
      auto item = check_element(name + " " + mono.str(), level, k, q, val);
      if (!item.pass) {
        out.push_back(item);
        all_ok = false;
        break;
      }
      storage.push_back(std::move(q));
    }
    if (!all_ok) continue;
    // corollary spot check: integer combinations stay integral
    QExpansion combo = QExpansion::zero(P);
    for (const auto& q : storage) combo = combo + q.scaled(Rat(rng.pick(-9, 9)));
    if (!combo.is_integral()) {
      out.push_back({name, level, k, false, "integer combination not integral"});
      continue;
    }
    out.push_back({name, level, k, true,
                   std::to_string(d) + " elements integral, unit leading coefficients, through q^" +
                       std::to_string(P - 1)});
  }
  return out;
}

std::vector<IntegralityItem> verify_closed_forms(int level, int P, const Catalog& cat) {
  std::vector<IntegralityItem> out;
  auto compare = [&](const std::string& name, int weight, const QExpansion& direct,
                     const std::string& form) {
    QExpansion ref = cat.resolve(form, P);
    IntegralityItem item{name, level, weight, false, ""};
    QExpansion diff = direct - ref;
    auto v = diff.valuation();
    if (v) {
      item.detail = "differs from catalogue " + form + " first at q^" + std::to_string(*v);
    } else if (!ref.is_integral()) {
      item.detail = "not integral";
    } else {
      item.pass = true;
      item.detail = "matches catalogue and integral through q^" + std::to_string(P - 1);
    }
    out.push_back(std::move(item));
  };

  switch (level) {
    case 4: {
      // alpha4 = sum_{n odd} sigma_1(n) q^n
      compare("alpha4 = sum_{n odd} sigma1(n) q^n", 2,
              series_of(P, [](long n) -> Rat { return n % 2 ? Rat(sigma(1, n)) : Rat(0); }),
              "alpha4");
      break;
    }
    case 9: {
      // beta9 = sum_{n = 2 mod 3} (1/3) sigma_1(n) q^n
      compare("beta9 = sum_{n=2(3)} sigma1(n)/3 q^n", 2,
              series_of(P,
                        [](long n) -> Rat {
                          return n % 3 == 2 ? Rat(sigma(1, n)) / 3 : Rat(0);
                        }),
              "beta9");
      break;
    }
    case 16: {
      compare("gamma16 = sum_{n=3(4)} sigma1(n)/4 q^n", 2,
              series_of(P,
                        [](long n) -> Rat {
                          return n % 4 == 3 ? Rat(sigma(1, n)) / 4 : Rat(0);
                        }),
              "gamma16");
      // gamma16 = (alpha4^(2) + 4*alpha4^(4)) * alpha4 / C4^(2)
      Expr e = (F("alpha4^(2)") + Rat(4) * F("alpha4^(4)")) * F("alpha4") / F("C4^(2)");
      compare("gamma16 = (alpha4^(2)+4*alpha4^(4))*alpha4/C4^(2)", 2, e.eval(cat, P),
              "gamma16");
      break;
    }
    case 5: {
      // beta5 = sum_n ( sum_{d|n, 5 notdiv d} (d^3-d)/3 + 48 sigma3(n/5) ) q^n
      //         - (sum tau5(n) q^n)^2
      QExpansion linear = series_of(P, [](long n) -> Rat {
        Rat acc(0);
        for_each_divisor(n, [&](long d) {
          if (d % 5) acc += Rat(Int(d) * d * d - d) / 3;
        });
        if (n % 5 == 0) acc += Rat(48 * sigma(3, n / 5));
        return acc;
      });
      QExpansion tau5 = series_of(P, [](long n) -> Rat { return Rat(tau(5, n)); });
      compare("beta5 divisor form", 4, linear - tau5 * tau5, "beta5");
      break;
    }
    case 25: {
      // delta25 = sum_{n=1(5)} sum_{d|n, d=2(5)} (d + n/d)/5 q^n
      //         + sum_{n=4(5)} sum_{d|n, d=1(5)} (d + n/d)/5 q^n
      QExpansion direct = series_of(P, [](long n) -> Rat {
        int r = static_cast<int>(n % 5);
        if (r != 1 && r != 4) return Rat(0);
        int want = (r == 1) ? 2 : 1;
        Rat acc(0);
        for_each_divisor(n, [&](long d) {
          if (d % 5 == want) acc += Rat(Int(d) + n / d) / 5;
        });
        return acc;
      });
      compare("delta25 divisor form", 2, direct, "delta25");
      break;
    }
    case 7: {
      // beta7 = sum_n ( sum_{d|n, 7 notdiv d} (d^3-d)/4 + 93 sigma3(n/7) ) q^n
      //         - (1/2) (sum tau7(n) q^n)^2
      QExpansion linear = series_of(P, [](long n) -> Rat {
        Rat acc(0);
        for_each_divisor(n, [&](long d) {
          if (d % 7) acc += Rat(Int(d) * d * d - d) / 4;
        });
        if (n % 7 == 0) acc += Rat(93 * sigma(3, n / 7));
        return acc;
      });
      QExpansion tau7 = series_of(P, [](long n) -> Rat { return Rat(tau(7, n)); });
      compare("beta7 divisor form", 4, linear - (tau7 * tau7).scaled(Rat(1, 2)), "beta7");
      // delta7 = beta7^2 / C7
      Expr e = pow(F("beta7"), 2) / F("C7");
      compare("delta7 = beta7^2/C7", 6, e.eval(cat, P), "delta7");
      break;
    }
    default:
      throw UnsupportedLevel(level);
  }
  return out;
}

}  // namespace mfring
