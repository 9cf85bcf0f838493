// Acceptance harness: one line per criterion, exit 0 iff all pass.

#include <chrono>
#include <iostream>
#include <numeric>
#include <sstream>

#include "mfring/arith.hpp"
#include "mfring/integrality.hpp"
#include "mfring/presentation.hpp"

using namespace mfring;

namespace {

int failures = 0;

void report(int number, const std::string& what, bool pass, const std::string& detail,
            double seconds) {
  std::ostringstream os;
  os << (pass ? "[PASS]" : "[FAIL]") << " criterion " << number << ": " << what << " -- "
     << detail << " (" << seconds << " s)";
  std::cout << os.str() << std::endl;
  if (!pass) ++failures;
}

template <typename F>
void criterion(int number, const std::string& what, F&& fn) {
  auto t0 = std::chrono::steady_clock::now();
  std::string detail;
  bool pass = false;
  try {
    pass = fn(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  report(number, what, pass, detail, dt);
}

struct SplitMix {
  uint64_t s;
  uint64_t next() {
    s += 0x9e3779b97f4a7c15ull;
    uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  long pick(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<uint64_t>(hi - lo + 1));
  }
};

QExpansion random_series(SplitMix& rng, int precision) {
  std::vector<Rat> v(static_cast<size_t>(precision));
  for (auto& c : v) c = Rat(rng.pick(-9, 9));
  return QExpansion(std::move(v));
}

}  // namespace

int main() {
  criterion(1, "all catalogued relation forms vanish to cut + 10", [](std::string& detail) {
    Evaluator ev;
    int count = 0;
    for (int N : supported_levels())
      for (const auto& rel : relation_catalog(N)) {
        auto out = verify_vanishing(rel, 10, ev);
        ++count;
        if (!out.pass) {
          detail = rel.name + " at level " + std::to_string(N) + ": " + out.detail;
          return false;
        }
      }
    detail = std::to_string(count) + " relation forms exactly zero";
    return true;
  });

  criterion(2, "all catalogued identities hold to cut + 10", [](std::string& detail) {
    int count = 0;
    for (const auto& id : identity_catalog()) {
      auto out = verify_identity(id, 10);
      ++count;
      if (!out.pass) {
        detail = id.name + ": " + out.detail;
        return false;
      }
    }
    for (const auto& id : polynomial_identity_catalog()) {
      auto out = verify_polynomial_identity(id);
      ++count;
      if (!out.pass) {
        detail = id.name + ": " + out.detail;
        return false;
      }
    }
    detail = std::to_string(count) + " identities exact";
    return true;
  });

  criterion(3, "basis families are echelon with dim members for k <= 24",
            [](std::string& detail) {
              if (dim_space({18, 24}) != 73 || dim_space({25, 24}) != 61) {
                detail = "headline dimensions wrong";
                return false;
              }
              for (int N : supported_levels())
                for (int k = 0; k <= 24; k += 2) {
                  auto rep = verify_echelon({N, k});
                  if (!rep.pass) {
                    detail = "N=" + std::to_string(N) + " k=" + std::to_string(k) + ": " +
                             rep.detail;
                    return false;
                  }
                }
              detail = "all 14 levels, k <= 24; dim M_24(18) = 73, dim M_24(25) = 61";
              return true;
            });

  criterion(4, "presentations: eval rank = dim and kernel = ideal for k <= 24",
            [](std::string& detail) {
              for (int N : supported_levels()) {
                Evaluator ev;
                auto rep = verify_presentation(presentation(N), 24, ev);
                if (!rep.pass) {
                  for (const auto& row : rep.rows)
                    if (!row.pass) {
                      detail = "N=" + std::to_string(N) + " k=" + std::to_string(row.weight) +
                               ": " + row.detail;
                      return false;
                    }
                  detail = "N=" + std::to_string(N) + " failed";
                  return false;
                }
                if (N == 1 || N == 2 || N == 4)
                  for (const auto& row : rep.rows)
                    if (row.kernel_dim != 0) {
                      detail = "free level " + std::to_string(N) + " has a kernel";
                      return false;
                    }
              }
              detail = "all 14 levels, k <= 24, exact";
              return true;
            });

  criterion(5, "Hilbert identities hold through t^200", [](std::string& detail) {
    for (const auto& c : hilbert_suite(200))
      if (!c.pass) {
        detail = c.name + ": " + c.detail;
        return false;
      }
    for (int N : supported_levels())
      if (expand(complement_hilbert(presentation(N)), 200) != dim_series(N, 200)) {
        detail = "complement series differs for N=" + std::to_string(N);
        return false;
      }
    detail = "all displayed series and all 14 presentation series";
    return true;
  });

  criterion(6, "bases integral through q^200 and closed forms match",
            [](std::string& detail) {
              for (int N : supported_levels()) {
                Evaluator ev;
                for (const auto& item : verify_integral_basis(N, 24, 200, ev))
                  if (!item.pass) {
                    detail = item.name + ": " + item.detail;
                    return false;
                  }
              }
              int forms = 0;
              for (int N : {4, 9, 16, 5, 25, 7})
                for (const auto& item : verify_closed_forms(N, 200)) {
                  ++forms;
                  if (!item.pass) {
                    detail = item.name + ": " + item.detail;
                    return false;
                  }
                }
              detail = "all bases k <= 24 and " + std::to_string(forms) + " closed forms";
              return true;
            });

  criterion(7, "arithmetic oracles", [](std::string& detail) {
    for (long N = 2; N <= 25; ++N)
      for (long n = 1; n <= 10000; ++n) {
        Int lhs = tau(N * N, n) - tau(N, n);
        Int rhs = (n % N == 0) ? Int(N * tau(N, n / N)) : Int(0);
        if (lhs != rhs) {
          detail = "tau identity fails at N=" + std::to_string(N) + " n=" + std::to_string(n);
          return false;
        }
      }
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L})
      for (long n = 1; n <= 10000; ++n) {
        Int lhs = (p + 1) * tau(p, n) - tau(p * p, n);
        Int expected = (n % p) ? sigma(1, n) : Int(0);
        if (lhs != p * expected) {
          detail = "sigma identity fails at p=" + std::to_string(p) + " n=" + std::to_string(n);
          return false;
        }
      }
    const auto& cat = Catalog::standard();
    for (auto [N, h] : std::vector<std::pair<long, long>>{{2, 2}, {2, 3}, {2, 4}, {2, 5},
                                                          {2, 6}, {2, 8}, {2, 9}, {3, 2},
                                                          {3, 3}, {3, 4}, {3, 6}, {4, 2},
                                                          {4, 3}, {4, 4}, {5, 2}, {5, 5},
                                                          {6, 2}, {6, 3}, {8, 2}, {9, 2}}) {
      long gN = std::gcd(N - 1, 24L);
      long gh = std::gcd(h - 1, 24L);
      long gNh = std::gcd(N * h - 1, 24L);
      Expr lhs = rescale(F("C" + std::to_string(N)), static_cast<int>(h));
      Expr rhs = Rat(1, gN * h) * (Rat(-gh) * F("C" + std::to_string(h)) +
                                   Rat(gNh) * F("C" + std::to_string(N * h)));
      if ((lhs.eval(cat, 100) - rhs.eval(cat, 100)).valuation().has_value()) {
        detail = "C_N^(h) identity fails at N=" + std::to_string(N) + " h=" + std::to_string(h);
        return false;
      }
    }
    SplitMix rng{2024};
    for (int trial = 0; trial < 1200; ++trial) {
      int p = 2 + static_cast<int>(rng.pick(0, 28));
      QExpansion a = random_series(rng, p), b = random_series(rng, p), c = random_series(rng, p);
      bool ok = ((a + b) == (b + a)) && ((a * b) == (b * a)) &&
                (((a + b) + c) == (a + (b + c))) && (((a * b) * c) == (a * (b * c))) &&
                ((a * (b + c)) == (a * b + a * c));
      if (!ok) {
        detail = "ring axiom fails at trial " + std::to_string(trial);
        return false;
      }
    }
    detail = "tau/sigma to n = 10^4, 20 rescale identities, 1200 ring-axiom cases";
    return true;
  });

  std::cout << (failures ? "ACCEPTANCE: FAIL (" + std::to_string(failures) + " criteria)"
                         : "ACCEPTANCE: PASS (7 criteria)")
            << std::endl;
  return failures ? 1 : 0;
}
