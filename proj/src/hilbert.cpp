#include "mfring/hilbert.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace mfring {

HilbertExpr HilbertExpr::atom(std::vector<long long> numerator, std::vector<int> denominator) {
  HilbertExpr h;
  h.atoms.push_back({std::move(numerator), std::move(denominator)});
  return h;
}

HilbertExpr HilbertExpr::monomial_cone(int shift, std::vector<int> denominator) {
  std::vector<long long> num(static_cast<size_t>(shift) + 1, 0);
  num[static_cast<size_t>(shift)] = 1;
  return atom(std::move(num), std::move(denominator));
}

HilbertExpr HilbertExpr::operator+(const HilbertExpr& o) const {
  HilbertExpr h = *this;
  h.atoms.insert(h.atoms.end(), o.atoms.begin(), o.atoms.end());
  return h;
}

std::string HilbertExpr::str() const {
  std::ostringstream os;
  bool first_atom = true;
  for (const auto& a : atoms) {
    if (!first_atom) os << " + ";
    first_atom = false;
    std::string num;
    bool first = true;
    for (size_t i = 0; i < a.numerator.size(); ++i) {
      long long c = a.numerator[i];
      if (!c) continue;
      if (!first) num += c < 0 ? " - " : " + ";
      else if (c < 0) num += "-";
      first = false;
      long long ab = c < 0 ? -c : c;
      if (ab != 1 || i == 0) num += std::to_string(ab);
      if (i > 0) {
        if (ab != 1) num += "*";
        num += i == 1 ? "t" : "t^" + std::to_string(i);
      }
    }
    if (first) num = "0";
    if (a.denominator.empty()) {
      os << num;
      continue;
    }
    os << "(" << num << ")/(";
    for (size_t i = 0; i < a.denominator.size(); ++i) {
      if (i) os << "*";
      os << "(1-t^" << a.denominator[i] << ")";
    }
    os << ")";
  }
  if (atoms.empty()) os << "0";
  return os.str();
}

std::vector<long long> expand(const HilbertExpr& h, int T) {
  std::vector<long long> out(static_cast<size_t>(T) + 1, 0);
  for (const auto& a : h.atoms) {
    std::vector<long long> s(static_cast<size_t>(T) + 1, 0);
    for (size_t i = 0; i < a.numerator.size() && i <= static_cast<size_t>(T); ++i)
      s[i] = a.numerator[i];
    // multiply by 1/(1 - t^n): prefix sums with stride n
    for (int n : a.denominator)
      for (int i = n; i <= T; ++i) s[static_cast<size_t>(i)] += s[static_cast<size_t>(i - n)];
    for (int i = 0; i <= T; ++i) out[static_cast<size_t>(i)] += s[static_cast<size_t>(i)];
  }
  return out;
}

std::vector<long long> dim_series(int level, int T) {
  std::vector<long long> out(static_cast<size_t>(T) + 1, 0);
  for (int k = 0; k <= T; ++k) out[static_cast<size_t>(k)] = dim_space({level, k});
  return out;
}

namespace {

std::string series_head(const std::vector<long long>& v, size_t n = 8) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < v.size() && i < n; ++i) {
    if (i) os << ",";
    os << v[i];
  }
  if (v.size() > n) os << ",...";
  os << "]";
  return os.str();
}

}  // namespace

HilbertCheck verify_hilbert_identity(const std::string& name, const HilbertExpr& lhs,
                                     const std::vector<long long>& rhs_series) {
  int T = static_cast<int>(rhs_series.size()) - 1;
  auto l = expand(lhs, T);
  HilbertCheck c;
  c.name = name;
  for (int i = 0; i <= T; ++i) {
    if (l[static_cast<size_t>(i)] != rhs_series[static_cast<size_t>(i)]) {
      c.pass = false;
      c.detail = "differs at t^" + std::to_string(i) + ": " +
                 std::to_string(l[static_cast<size_t>(i)]) + " vs " +
                 std::to_string(rhs_series[static_cast<size_t>(i)]);
      return c;
    }
  }
  c.pass = true;
  c.detail = "equal through t^" + std::to_string(T) + ", starts " + series_head(l);
  return c;
}

HilbertCheck verify_hilbert_identity(const std::string& name, const HilbertExpr& lhs,
                                     const HilbertExpr& rhs, int T) {
  return verify_hilbert_identity(name, lhs, expand(rhs, T));
}

std::vector<HilbertCheck> hilbert_suite(int T) {
  std::vector<HilbertCheck> out;
  using H = HilbertExpr;
  auto one_over = [](std::vector<int> den) { return H::atom({1}, std::move(den)); };
  auto check_level = [&](const std::string& name, const H& h, int level) {
    out.push_back(verify_hilbert_identity(name, h, dim_series(level, T)));
  };
  auto check_expr = [&](const std::string& name, const H& a, const H& b) {
    out.push_back(verify_hilbert_identity(name, a, b, T));
  };
  auto pattern = [&](const std::function<long long(int)>& f) {
    std::vector<long long> v(static_cast<size_t>(T) + 1, 0);
    for (int k = 0; k <= T; k += 2) v[static_cast<size_t>(k)] = f(k);
    return v;
  };
  auto floor_div = [](int a, int b) {
    int q = a / b;
    return (a % b && (a < 0)) ? q - 1 : q;
  };

  check_level("H(M(1)) = 1/((1-t^4)(1-t^6))", one_over({4, 6}), 1);
  check_level("H(M(2)) = 1/((1-t^2)(1-t^4))", one_over({2, 4}), 2);
  check_level("H(M(4)) = 1/(1-t^2)^2", one_over({2, 2}), 4);
  out.push_back(verify_hilbert_identity(
      "1/((1-t^2)(1-t^6)) = sum ([k/6]+1) t^k", one_over({2, 6}),
      pattern([&](int k) { return floor_div(k, 6) + 1; })));
  check_expr("t^4/((1-t^4)(1-t^6)) = 1/((1-t^2)(1-t^4)) - 1/((1-t^2)(1-t^6))",
             H::monomial_cone(4, {4, 6}),
             H::atom({1}, {2, 4}) + H::atom({-1}, {2, 6}));
  out.push_back(verify_hilbert_identity(
      "t^4/((1-t^4)(1-t^6)) = sum ([k/4]-[k/6]) t^k", H::monomial_cone(4, {4, 6}),
      pattern([&](int k) { return floor_div(k, 4) - floor_div(k, 6); })));
  {
    auto m1 = dim_series(1, T);
    std::vector<long long> shifted(static_cast<size_t>(T) + 1, 0);
    for (int k = 4; k <= T; ++k) shifted[static_cast<size_t>(k)] = m1[static_cast<size_t>(k - 4)];
    out.push_back(verify_hilbert_identity("t^4/((1-t^4)(1-t^6)) = H(M(1))*t^4",
                                          H::monomial_cone(4, {4, 6}), shifted));
  }
  check_level("H(M(3)) = (1+t^4)/((1-t^2)(1-t^6))", H::atom({1, 0, 0, 0, 1}, {2, 6}), 3);
  out.push_back(verify_hilbert_identity(
      "H(M(3)) = sum (([k/6]+1)+([(k-4)/6]+1)) t^k", H::atom({1, 0, 0, 0, 1}, {2, 6}),
      pattern([&](int k) {
        long long a = floor_div(k, 6) + 1;
        long long b = k >= 4 ? floor_div(k - 4, 6) + 1 : 0;
        return a + b;
      })));
  check_level("H(M(5)) = (1+t^4)/((1-t^2)(1-t^4))", H::atom({1, 0, 0, 0, 1}, {2, 4}), 5);
  check_expr("(1+t^4)/((1-t^2)(1-t^4)) = 2/((1-t^2)(1-t^4)) - 1/(1-t^2)",
             H::atom({1, 0, 0, 0, 1}, {2, 4}),
             H::atom({2}, {2, 4}) + H::atom({-1}, {2}));
  check_level("H(M(6)) = (1+t^2)/(1-t^2)^2", H::atom({1, 0, 1}, {2, 2}), 6);
  check_level("H(M(8)) = (1+t^2)/(1-t^2)^2", H::atom({1, 0, 1}, {2, 2}), 8);
  check_level("H(M(9)) = (1+t^2)/(1-t^2)^2", H::atom({1, 0, 1}, {2, 2}), 9);
  {
    H h7 = H::atom({1, 0, 0, 0, 1}, {2, 4}) + H::atom({0, 0, 0, 0, 0, 0, 2}, {4, 6});
    check_level("H(M(7)) = (1+t^4)/((1-t^2)(1-t^4)) + 2t^6/((1-t^4)(1-t^6))", h7, 7);
    check_expr("H(M(7)) = (1+2t^4+t^6)/((1-t^2)(1-t^6))", h7,
               H::atom({1, 0, 0, 0, 2, 0, 1}, {2, 6}));
    check_expr("H(M(7)) = 2(1+t^4)/((1-t^2)(1-t^6)) - 1/(1-t^2)", h7,
               H::atom({2, 0, 0, 0, 2}, {2, 6}) + H::atom({-1}, {2}));
  }
  {
    H h10 = H::atom({1, 0, 1}, {2, 2}) + H::atom({0, 0, 0, 0, 2}, {2, 4});
    check_level("H(M(10)) = (1+t^2)/(1-t^2)^2 + 2t^4/((1-t^2)(1-t^4))", h10, 10);
    check_expr("H(M(10)) = 2t^2/(1-t^2)^2 + (1+t^4)/((1-t^2)(1-t^4))", h10,
               H::atom({0, 0, 2}, {2, 2}) + H::atom({1, 0, 0, 0, 1}, {2, 4}));
  }
  check_level("H(M(12)) = (1+3t^2)/(1-t^2)^2", H::atom({1, 0, 3}, {2, 2}), 12);
  check_level("H(M(16)) = (1+3t^2)/(1-t^2)^2", H::atom({1, 0, 3}, {2, 2}), 16);
  check_level("H(M(18)) = (1+5t^2)/(1-t^2)^2", H::atom({1, 0, 5}, {2, 2}), 18);
  check_level("H(M(25)) = (1+3t^2)/(1-t^2)^2 + 2t^4/((1-t^2)(1-t^4))",
              H::atom({1, 0, 3}, {2, 2}) + H::atom({0, 0, 0, 0, 2}, {2, 4}), 25);
  return out;
}

}  // namespace mfring
