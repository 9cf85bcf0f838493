#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "mfring/qexpansion.hpp"

namespace mfring {

struct UnknownForm : std::runtime_error {
  explicit UnknownForm(const std::string& name) : std::runtime_error("unknown form: " + name) {}
};

class Catalog;

// Expression tree over catalogue names with {+, -, *, /, scale, rescale}.
class Expr {
 public:
  enum class Kind { Name, Add, Sub, Mul, Div, Scale, Rescale };

  Expr() = default;  // empty Name node
  static Expr name(std::string n);

  Kind kind() const { return kind_; }
  const std::string& form_name() const { return name_; }
  const Rat& factor() const { return factor_; }
  int step() const { return step_; }
  const std::vector<Expr>& args() const { return args_; }

  QExpansion eval(const Catalog& cat, int precision) const;
  // Weighted degree; throws on inhomogeneous subexpressions.
  int weight(const Catalog& cat) const;
  // Least common multiple of constituent levels (rescale multiplies).
  int level(const Catalog& cat) const;

  std::string str() const;

  friend Expr operator+(Expr a, Expr b);
  friend Expr operator-(Expr a, Expr b);
  friend Expr operator*(Expr a, Expr b);
  friend Expr operator/(Expr a, Expr b);
  friend Expr operator*(const Rat& c, Expr a);
  friend Expr operator-(Expr a);
  friend Expr rescale(Expr a, int h);
  friend Expr pow(Expr a, int e);

 private:
  static Expr node(Kind k, std::vector<Expr> args);

  Kind kind_ = Kind::Name;
  std::string name_;
  Rat factor_;
  int step_ = 1;
  std::vector<Expr> args_;
};

Expr F(const std::string& name);  // shorthand for Expr::name

struct FormDescriptor {
  std::string name;
  int level = 1;
  int weight = 0;
  Expr definition;    // primitives carry a self-reference
  bool primitive = false;
};

// The named-form dictionary: every generator and auxiliary form, resolvable
// to a QExpansion at any precision.  Names of the shape "base^(h)" resolve
// as base(q^h).
class Catalog {
 public:
  static const Catalog& standard();

  bool contains(const std::string& name) const;
  FormDescriptor descriptor(const std::string& name) const;
  QExpansion resolve(const std::string& name, int precision) const;
  std::vector<std::string> names() const;

 private:
  struct Entry {
    int level;
    int weight;
    std::function<QExpansion(int)> series;  // direct generator, or null
    std::unique_ptr<Expr> def;              // derived definition, or null
  };

  Catalog();
  void add_series(const std::string& name, int level, int weight,
                  std::function<QExpansion(int)> fn);
  void add_form(const std::string& name, int level, int weight, Expr def);
  const Entry* find(const std::string& name) const;
  static bool split_rescale(const std::string& name, std::string& base, int& h);

  std::map<std::string, Entry> entries_;
  mutable std::mutex cache_mutex_;
  mutable std::map<std::pair<std::string, int>, QExpansion> cache_;
};

}  // namespace mfring
