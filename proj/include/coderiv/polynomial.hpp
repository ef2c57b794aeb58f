#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "coderiv/rational.hpp"

namespace coderiv {

// Power product of named variables. No zero exponents stored; the empty
// map is the constant monomial.
struct Monomial {
  std::map<std::string, unsigned> exponents;

  unsigned total_degree() const {
    unsigned d = 0;
    for (const auto &[v, e] : exponents) d += e;
    return d;
  }

  Monomial operator*(const Monomial &o) const {
    Monomial r = *this;
    for (const auto &[v, e] : o.exponents) {
      r.exponents[v] += e;
    }
    return r;
  }

  bool operator==(const Monomial &o) const = default;
};

// Graded lexicographic order on monomials over variable names sorted
// ascending. Ascending in this order = reverse of display order.
struct MonomialOrder {
  bool operator()(const Monomial &a, const Monomial &b) const {
    unsigned da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    auto ia = a.exponents.begin(), ib = b.exponents.begin();
    while (ia != a.exponents.end() && ib != b.exponents.end()) {
      if (ia->first != ib->first) {
        // The monomial owning the alphabetically earlier variable has the
        // larger power of it; grlex ranks it higher.
        return ia->first > ib->first;
      }
      if (ia->second != ib->second) return ia->second < ib->second;
      ++ia;
      ++ib;
    }
    return ia == a.exponents.end() && ib != b.exponents.end();
  }
};

struct UnassignedVariable : std::invalid_argument {
  std::string variable;
  explicit UnassignedVariable(const std::string &v)
      : std::invalid_argument("unassigned variable: " + v), variable(v) {}
};

// Sparse multivariate polynomial over Rational in canonical form:
// no zero coefficients, unique monomials. Equality is structural.
class Poly {
 public:
  using TermMap = std::map<Monomial, Rational, MonomialOrder>;

  Poly() = default;
  Poly(int c) { *this = Poly(Rational(c)); }
  explicit Poly(const Rational &c) {
    if (!scalar_is_zero(c)) terms_[Monomial{}] = c;
  }
  static Poly variable(const std::string &name, unsigned exp = 1) {
    Poly p;
    if (exp == 0) return Poly(1);
    Monomial m;
    m.exponents[name] = exp;
    p.terms_[m] = 1;
    return p;
  }

  const TermMap &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Constant value if the polynomial has no variables.
  bool is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first.exponents.empty());
  }
  Rational constant_value() const {
    if (terms_.empty()) return 0;
    if (!is_constant()) throw std::invalid_argument("polynomial is not constant");
    return terms_.begin()->second;
  }

  void add_term(const Monomial &m, const Rational &c) {
    if (scalar_is_zero(c)) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_[m] = c;
    } else {
      it->second += c;
      if (scalar_is_zero(it->second)) terms_.erase(it);
    }
  }

  Poly operator-() const {
    Poly r;
    for (const auto &[m, c] : terms_) r.terms_[m] = -c;
    return r;
  }
  Poly &operator+=(const Poly &o) {
    for (const auto &[m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Poly &operator-=(const Poly &o) {
    for (const auto &[m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend Poly operator+(Poly a, const Poly &b) { return a += b; }
  friend Poly operator-(Poly a, const Poly &b) { return a -= b; }
  friend Poly operator*(const Poly &a, const Poly &b) {
    Poly r;
    for (const auto &[ma, ca] : a.terms_)
      for (const auto &[mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
  }
  Poly &operator*=(const Poly &o) { return *this = *this * o; }

  bool operator==(const Poly &o) const { return terms_ == o.terms_; }

  std::set<std::string> variables() const {
    std::set<std::string> vs;
    for (const auto &[m, c] : terms_)
      for (const auto &[v, e] : m.exponents) vs.insert(v);
    return vs;
  }

  // Exact substitution; throws UnassignedVariable naming the first
  // missing variable.
  Rational eval(const std::map<std::string, Rational> &point) const {
    Rational total = 0;
    for (const auto &[m, c] : terms_) {
      Rational term = c;
      for (const auto &[v, e] : m.exponents) {
        auto it = point.find(v);
        if (it == point.end()) throw UnassignedVariable(v);
        Rational pw = 1;
        for (unsigned k = 0; k < e; ++k) pw *= it->second;
        term *= pw;
      }
      total += term;
    }
    return total;
  }

 private:
  TermMap terms_;
};

inline bool scalar_is_zero(const Poly &p) { return p.is_zero(); }

}  // namespace coderiv
