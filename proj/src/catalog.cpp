#include "mfring/catalog.hpp"

#include <numeric>
#include <sstream>

#include "mfring/arith.hpp"

namespace mfring {

// ---------------------------------------------------------------------------
// Expr

Expr Expr::name(std::string n) {
  Expr e;
  e.kind_ = Kind::Name;
  e.name_ = std::move(n);
  return e;
}

Expr Expr::node(Kind k, std::vector<Expr> args) {
  Expr e;
  e.kind_ = k;
  e.args_ = std::move(args);
  return e;
}

Expr F(const std::string& name) { return Expr::name(name); }

Expr operator+(Expr a, Expr b) { return Expr::node(Expr::Kind::Add, {std::move(a), std::move(b)}); }
Expr operator-(Expr a, Expr b) { return Expr::node(Expr::Kind::Sub, {std::move(a), std::move(b)}); }
Expr operator*(Expr a, Expr b) { return Expr::node(Expr::Kind::Mul, {std::move(a), std::move(b)}); }
Expr operator/(Expr a, Expr b) { return Expr::node(Expr::Kind::Div, {std::move(a), std::move(b)}); }

Expr operator*(const Rat& c, Expr a) {
  Expr e = Expr::node(Expr::Kind::Scale, {std::move(a)});
  e.factor_ = c;
  return e;
}

Expr operator-(Expr a) { return Rat(-1) * std::move(a); }

Expr rescale(Expr a, int h) {
  Expr e = Expr::node(Expr::Kind::Rescale, {std::move(a)});
  e.step_ = h;
  return e;
}

Expr pow(Expr a, int e) {
  if (e < 1) throw std::invalid_argument("pow: exponent must be positive");
  Expr out = a;
  for (int i = 1; i < e; ++i) out = out * a;
  return out;
}

QExpansion Expr::eval(const Catalog& cat, int precision) const {
  switch (kind_) {
    case Kind::Name:
      return cat.resolve(name_, precision);
    case Kind::Add:
      return args_[0].eval(cat, precision) + args_[1].eval(cat, precision);
    case Kind::Sub:
      return args_[0].eval(cat, precision) - args_[1].eval(cat, precision);
    case Kind::Mul:
      return args_[0].eval(cat, precision) * args_[1].eval(cat, precision);
    case Kind::Div: {
      auto probe = args_[1].eval(cat, precision);
      auto v = probe.valuation();
      if (!v) throw DivisionByZero();
      if (*v == 0) return args_[0].eval(cat, precision) / probe;
      return args_[0].eval(cat, precision + *v) / args_[1].eval(cat, precision + *v);
    }
    case Kind::Scale:
      return args_[0].eval(cat, precision).scaled(factor_);
    case Kind::Rescale: {
      // smallest p with h*(p-1)+1 >= precision
      int inner = (precision - 2 + step_) / step_ + 1;
      return args_[0].eval(cat, inner).rescaled(step_).truncated(precision);
    }
  }
  throw std::logic_error("Expr::eval: bad kind");
}

int Expr::weight(const Catalog& cat) const {
  switch (kind_) {
    case Kind::Name:
      return cat.descriptor(name_).weight;
    case Kind::Add:
    case Kind::Sub: {
      int a = args_[0].weight(cat), b = args_[1].weight(cat);
      if (a != b)
        throw std::logic_error("inhomogeneous expression: weights " + std::to_string(a) +
                               " vs " + std::to_string(b));
      return a;
    }
    case Kind::Mul:
      return args_[0].weight(cat) + args_[1].weight(cat);
    case Kind::Div:
      return args_[0].weight(cat) - args_[1].weight(cat);
    case Kind::Scale:
    case Kind::Rescale:
      return args_[0].weight(cat);
  }
  throw std::logic_error("Expr::weight: bad kind");
}

int Expr::level(const Catalog& cat) const {
  switch (kind_) {
    case Kind::Name:
      return cat.descriptor(name_).level;
    case Kind::Add:
    case Kind::Sub:
    case Kind::Mul:
    case Kind::Div:
      return static_cast<int>(std::lcm(args_[0].level(cat), args_[1].level(cat)));
    case Kind::Scale:
      return args_[0].level(cat);
    case Kind::Rescale:
      return args_[0].level(cat) * step_;
  }
  throw std::logic_error("Expr::level: bad kind");
}

std::string Expr::str() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::Name: os << name_; break;
    case Kind::Add: os << "(" << args_[0].str() << " + " << args_[1].str() << ")"; break;
    case Kind::Sub: os << "(" << args_[0].str() << " - " << args_[1].str() << ")"; break;
    case Kind::Mul: os << args_[0].str() << "*" << args_[1].str(); break;
    case Kind::Div: os << args_[0].str() << "/(" << args_[1].str() << ")"; break;
    case Kind::Scale: os << rat_str(factor_) << "*(" << args_[0].str() << ")"; break;
    case Kind::Rescale: os << "(" << args_[0].str() << ")^(" << step_ << ")"; break;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Direct generators

namespace {

QExpansion divisor_series(int precision, const Rat& c0,
                          const std::function<Rat(long)>& an) {
  std::vector<Rat> v(static_cast<size_t>(precision));
  v[0] = c0;
  for (long n = 1; n < precision; ++n) v[static_cast<size_t>(n)] = an(n);
  return QExpansion(std::move(v));
}

// E_k = 1 - (2k/B_k) sum sigma_{k-1}(n) q^n
QExpansion eisenstein(int k, int precision) {
  Rat factor = Rat(-2 * k) / bernoulli(k);
  return divisor_series(precision, Rat(1), [&](long n) -> Rat {
    return factor * Rat(sigma(static_cast<unsigned>(k - 1), n));
  });
}

// C_N = (N-1)/(N-1,24) + (24/(N-1,24)) sum tau_N(n) q^n
QExpansion c_series(long N, int precision) {
  long g = gcd24(N - 1);
  return divisor_series(precision, Rat((N - 1) / g),
                        [&](long n) -> Rat { return Rat((24 / g) * Int(tau(N, n))); });
}

// E_chi = sum sigma_{chi^2}(n) chi(n) q^n for the real characters rho_m
QExpansion e_rho_series(int m, int precision) {
  const auto& chi = rho(m);
  return divisor_series(precision, Rat(0), [&](long n) -> Rat {
    int c = chi(n);
    return c ? Rat(Int(c) * sigma_coprime(m, n)) : Rat(0);
  });
}

QExpansion e_r5_series(int precision) {
  const auto& chi = rho(5);
  return divisor_series(precision, Rat(0), [&](long n) -> Rat {
    switch (n % 5) {
      case 1: return Rat(sigma_chi(chi, n));
      case 4: return Rat(-sigma_chi(chi, n));
      default: return Rat(0);
    }
  });
}

QExpansion e_i5_series(int precision) {
  const auto& chi = rho(5);
  return divisor_series(precision, Rat(0), [&](long n) -> Rat {
    switch (n % 5) {
      case 2: return Rat(-sigma_chi(chi, n));
      case 3: return Rat(sigma_chi(chi, n));
      default: return Rat(0);
    }
  });
}

}  // namespace

// ---------------------------------------------------------------------------
// Catalog

bool Catalog::split_rescale(const std::string& name, std::string& base, int& h) {
  auto pos = name.find("^(");
  if (pos == std::string::npos || name.back() != ')') return false;
  base = name.substr(0, pos);
  try {
    h = std::stoi(name.substr(pos + 2, name.size() - pos - 3));
  } catch (const std::exception&) {
    return false;
  }
  return h >= 1;
}

const Catalog::Entry* Catalog::find(const std::string& name) const {
  auto it = entries_.find(name);
  return it == entries_.end() ? nullptr : &it->second;
}

bool Catalog::contains(const std::string& name) const {
  if (find(name)) return true;
  std::string base;
  int h;
  return split_rescale(name, base, h) && find(base) != nullptr;
}

FormDescriptor Catalog::descriptor(const std::string& name) const {
  if (const Entry* e = find(name)) {
    FormDescriptor d;
    d.name = name;
    d.level = e->level;
    d.weight = e->weight;
    d.definition = e->def ? *e->def : F(name);
    d.primitive = !e->def;
    return d;
  }
  std::string base;
  int h;
  if (split_rescale(name, base, h)) {
    if (const Entry* e = find(base)) {
      FormDescriptor d;
      d.name = name;
      d.level = e->level * h;
      d.weight = e->weight;
      d.definition = rescale(F(base), h);
      d.primitive = false;
      return d;
    }
  }
  throw UnknownForm(name);
}

QExpansion Catalog::resolve(const std::string& name, int precision) const {
  if (precision < 1) throw std::invalid_argument("resolve: precision must be positive");
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = cache_.find({name, precision});
    if (it != cache_.end()) return it->second;
  }
  QExpansion out = [&]() -> QExpansion {
    if (const Entry* e = find(name)) {
      if (e->series) return e->series(precision);
      return e->def->eval(*this, precision).truncated(precision);
    }
    std::string base;
    int h;
    if (split_rescale(name, base, h) && find(base)) {
      int inner = (precision - 2 + h) / h + 1;
      return resolve(base, inner).rescaled(h).truncated(precision);
    }
    throw UnknownForm(name);
  }();
  std::lock_guard<std::mutex> lock(cache_mutex_);
  auto [it, inserted] = cache_.emplace(std::make_pair(name, precision), out);
  return it->second;
}

std::vector<std::string> Catalog::names() const {
  std::vector<std::string> out;
  out.reserve(entries_.size());
  for (const auto& [k, v] : entries_) out.push_back(k);
  return out;
}

void Catalog::add_series(const std::string& name, int level, int weight,
                         std::function<QExpansion(int)> fn) {
  entries_.emplace(name, Entry{level, weight, std::move(fn), nullptr});
}

void Catalog::add_form(const std::string& name, int level, int weight, Expr def) {
  entries_.emplace(name, Entry{level, weight, nullptr, std::make_unique<Expr>(std::move(def))});
}

Catalog::Catalog() {
  const Rat half(1, 2);

  for (int k : {2, 4, 6, 8})
    add_series("E" + std::to_string(k), 1, k,
               [k](int p) { return eisenstein(k, p); });

  for (long N : {2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 16, 18, 25})
    add_series("C" + std::to_string(N), static_cast<int>(N), 2,
               [N](int p) { return c_series(N, p); });

  // E_chi lives in M_2(m^2) for chi mod m
  for (int m : {3, 4, 5})
    add_series("E_rho" + std::to_string(m), m * m, 2,
               [m](int p) { return e_rho_series(m, p); });
  add_series("E_r5", 25, 2, e_r5_series);
  add_series("E_i5", 25, 2, e_i5_series);

  // alpha_p = (1/240)(E4 - E4^(p))
  for (int p : {2, 3, 5, 7})
    add_form("alpha" + std::to_string(p), p, 4,
             Rat(1, 240) * (F("E4") - F("E4^(" + std::to_string(p) + ")")));

  add_form("Delta", 1, 12, Rat(1, 1728) * (pow(F("E4"), 3) - pow(F("E6"), 2)));

  // level tuples and auxiliaries
  add_form("alpha4", 4, 2, Rat(1, 16) * (F("C2") - F("C4")));
  add_form("alpha6", 6, 2, Rat(1, 12) * (F("C2") - F("C3")));
  add_form("beta6", 6, 2, Rat(1, 12) * (F("C3^(2)") - F("C2^(3)")));
  add_form("beta9", 9, 2, Rat(1, 6) * (Rat(1, 9) * (F("C3") - F("C9")) - F("E_rho3")));
  add_form("gamma16", 16, 2, Rat(1, 8) * (F("alpha4") - F("E_rho4")));
  add_form("epsilon18", 18, 2,
           half * (F("beta9") - F("E_rho3^(2)") - Rat(3) * F("beta9^(2)")) + F("beta6^(3)"));
  add_form("beta5", 5, 4,
           Rat(1, 36) * (-pow(F("C5"), 2) + Rat(12) * F("alpha5") + F("E4^(5)")));
  add_form("alpha10", 10, 2, Rat(1, 8) * (F("C2") - Rat(4) * F("C5") + F("C10")));
  add_form("beta10", 10, 2, Rat(1, 6) * (F("C5^(2)") - F("C2^(5)")));
  add_form("zeta10", 10, 4, Rat(1, 4) * (pow(F("beta10"), 2) - F("beta5^(2)")));
  add_form("gamma25", 25, 2,
           Rat(1, 10) * (-F("E_rho5") + F("E_r5") - Rat(3) * F("E_i5")));
  add_form("delta25", 25, 2,
           Rat(1, 100) * (F("C5") - F("C25") + Rat(5) * F("E_rho5") - Rat(10) * F("E_r5")));
  add_form("iota25", 25, 4,
           F("alpha5^(5)") +
               (-F("E_r5") + F("gamma25") - Rat(2) * F("delta25")) * F("delta25") -
               F("beta5^(5)"));
  add_form("beta3", 3, 6,
           Rat(1, 12) * (Rat(1, 504) * (F("E6^(3)") - F("E6")) - F("C3") * F("alpha3")));
  add_form("beta7", 7, 4,
           Rat(1, 32) * (-pow(F("C7"), 2) + Rat(8) * F("alpha7") + F("E4^(7)")));
  add_form("gamma7", 7, 6,
           Rat(1, 360) * (Rat(29, 2) * (F("C7") * F("E4^(7)") - F("E6^(7)")) +
                          Rat(17, 504) * (F("E6^(7)") - F("E6")) -
                          Rat(75) * F("C7") * F("alpha7") +
                          Rat(240) * F("C7") * F("beta7")));
  add_form("delta7", 7, 6,
           Rat(1, 360) * (Rat(7, 2) * (F("C7") * F("E4^(7)") - F("E6^(7)")) +
                          Rat(1, 504) * (F("E6^(7)") - F("E6")) -
                          Rat(15) * F("C7") * F("alpha7") +
                          Rat(120) * F("C7") * F("beta7")));
  add_form("gamma12", 12, 2, F("alpha4^(3)") - F("beta6^(2)"));
  add_form("alpha9", 9, 2, F("E_rho3") + Rat(9) * F("beta9"));
  add_form("u10", 10, 2, Rat(1, 3) * (Rat(-2) * F("C2") + Rat(5) * F("C5")));
  add_form("epsilon10", 10, 4, F("alpha2^(5)") - Rat(5) * F("zeta10"));
  add_form("u18", 18, 2, F("C9^(2)") - Rat(3) * F("beta6"));
  add_form("alpha18", 6, 2, F("alpha6") + Rat(3) * F("beta6"));
  add_form("gamma18", 18, 2, rescale(F("alpha18"), 3));
  add_form("delta18", 18, 2,
           F("beta9^(2)") - F("epsilon18") + Rat(2) * F("beta6^(3)"));
  add_form("u25", 25, 2, F("C25") - Rat(5) * F("E_r5") - Rat(25) * F("delta25"));
  add_form("alpha25", 25, 2, F("E_rho5") + Rat(5) * F("gamma25"));
}

const Catalog& Catalog::standard() {
  static const Catalog cat;
  return cat;
}

}  // namespace mfring
