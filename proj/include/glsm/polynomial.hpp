#pragma once

// Sparse multivariate polynomials over Q in H_1..H_k, ordered by graded reverse
// lexicographic order with H_1 > ... > H_k.

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "glsm/rational.hpp"

namespace glsm {

using Monomial = std::vector<int>;

inline int total_degree(const Monomial& m) {
  int d = 0;
  for (int e : m) d += e;
  return d;
}

/// true iff a > b in grevlex.
inline bool grevlex_greater(const Monomial& a, const Monomial& b) {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

struct GrevlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_greater(a, b); }
};

inline bool monomial_divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline Monomial monomial_mul(const Monomial& a, const Monomial& b) {
  Monomial c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

inline Monomial monomial_div(const Monomial& a, const Monomial& b) {
  Monomial c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

inline Monomial monomial_lcm(const Monomial& a, const Monomial& b) {
  Monomial c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = std::max(a[i], b[i]);
  return c;
}

class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational, GrevlexDescending>;

  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Rational& c) {
    Polynomial p(nvars);
    p.add_term(Monomial(nvars, 0), c);
    return p;
  }
  static Polynomial variable(std::size_t nvars, std::size_t i) {
    Polynomial p(nvars);
    Monomial m(nvars, 0);
    m[i] = 1;
    p.add_term(m, Rational(1));
    return p;
  }
  /// sum_a xi_a H_a
  static Polynomial linear_form(const RationalVector& xi) {
    Polynomial p(xi.size());
    for (std::size_t a = 0; a < xi.size(); ++a)
      if (xi[a] != 0) {
        Monomial m(xi.size(), 0);
        m[a] = 1;
        p.add_term(m, xi[a]);
      }
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  const Monomial& leading_monomial() const { return terms_.begin()->first; }
  const Rational& leading_coefficient() const { return terms_.begin()->second; }

  void add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial p(a.nvars_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) p.add_term(monomial_mul(ma, mb), ca * cb);
    return p;
  }
  Polynomial scaled(const Rational& s, const Monomial& shift) const {
    Polynomial p(nvars_);
    if (s == 0) return p;
    for (const auto& [m, c] : terms_) p.terms_.emplace(monomial_mul(m, shift), c * s);
    return p;
  }
  Polynomial monic() const { return is_zero() ? *this : scaled(1 / leading_coefficient(), Monomial(nvars_, 0)); }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      std::string mono;
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += nvars_ == 1 ? "H" : "H" + std::to_string(i + 1);
        if (m[i] > 1) mono += "^" + std::to_string(m[i]);
      }
      Rational mag = abs(c);
      if (!first) out += c < 0 ? " - " : " + ";
      else if (c < 0) out += "-";
      first = false;
      if (mono.empty()) out += mag.get_str();
      else if (mag == 1) out += mono;
      else out += mag.get_str() + "*" + mono;
    }
    return out;
  }

 private:
  std::size_t nvars_ = 0;
  Terms terms_;
};

}  // namespace glsm
