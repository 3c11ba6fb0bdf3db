#pragma once

// Independent arithmetic for rank-one identity sectors Q[H]/(H^n): series are
// dense tables coef[h][z - zmin], built from linear factors and their inverses.
// Deliberately does not use the library's ring or Laurent types.

#include <map>
#include <utility>

#include "glsm/series.hpp"

namespace oracle {

using glsm::Rational;

class HZ {
 public:
  explicit HZ(int n) : n_(n) { c_[{0, 0}] = 1; }

  static HZ zero(int n) {
    HZ x(n);
    x.c_.clear();
    return x;
  }

  // multiply by (a H + b z)
  HZ times(const Rational& a, const Rational& b) const {
    HZ out = zero(n_);
    for (const auto& [hz, v] : c_) {
      if (hz.first + 1 < n_) out.bump({hz.first + 1, hz.second}, a * v);
      out.bump({hz.first, hz.second + 1}, b * v);
    }
    return out;
  }

  // divide by (a H + b z), b != 0: (bz)^{-1} sum_j (-a H / (b z))^j
  HZ divided(const Rational& a, const Rational& b) const {
    HZ out = zero(n_);
    for (const auto& [hz, v] : c_) {
      Rational coeff = v / b;
      for (int j = 0; hz.first + j < n_; ++j) {
        out.bump({hz.first + j, hz.second - 1 - j}, coeff);
        coeff *= -a / b;
      }
    }
    return out;
  }

  HZ scaled(const Rational& s) const {
    HZ out = zero(n_);
    for (const auto& [hz, v] : c_) out.bump(hz, s * v);
    return out;
  }

  HZ plus(const HZ& o) const {
    HZ out = *this;
    for (const auto& [hz, v] : o.c_) out.bump(hz, v);
    return out;
  }

  // (H power, z power) -> coefficient
  const std::map<std::pair<int, int>, Rational>& table() const { return c_; }

  /// Same data read off an engine term in a one-variable ring with basis 1, H, ..., H^{n-1}.
  static HZ from_engine(const glsm::LaurentZ& v, int n) {
    HZ out = zero(n);
    for (const auto& [pw, cls] : v.coefficients())
      for (std::size_t i = 0; i < cls.coords().size(); ++i) {
        if (cls.ring()->basis[i] != glsm::Monomial{static_cast<int>(i)}) throw std::logic_error("unexpected basis");
        out.bump({static_cast<int>(i), pw}, cls.coords()[i]);
      }
    return out;
  }

  friend bool operator==(const HZ& a, const HZ& b) { return a.n_ == b.n_ && a.c_ == b.c_; }

 private:
  void bump(const std::pair<int, int>& key, const Rational& v) {
    if (v == 0) return;
    Rational& slot = c_[key];
    slot += v;
    if (slot == 0) c_.erase(key);
  }

  int n_;
  std::map<std::pair<int, int>, Rational> c_;
};

/// Classical quintic coefficient prod_{m=1}^{5d}(5H+mz) / prod_{m=1}^{d}(H+mz)^5 mod H^5.
inline HZ classical_quintic(int d) {
  HZ x(5);
  for (int m = 1; m <= 5 * d; ++m) x = x.times(5, m);
  for (int m = 1; m <= d; ++m)
    for (int e = 0; e < 5; ++e) x = x.divided(1, m);
  return x;
}

/// Projective space P^{n-1}: prod_{m=1}^{d} (H+mz)^{-n} mod H^n.
inline HZ projective(int n, int d) {
  HZ x(n);
  for (int m = 1; m <= d; ++m)
    for (int e = 0; e < n; ++e) x = x.divided(1, m);
  return x;
}

}  // namespace oracle
