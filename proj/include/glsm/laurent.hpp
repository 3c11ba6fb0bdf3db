#pragma once

// Laurent polynomials in z with coefficients in one sector ring.

#include <map>
#include <string>

#include "glsm/coh_ring.hpp"

namespace glsm {

class LaurentZ {
 public:
  LaurentZ() = default;
  explicit LaurentZ(RingPtr ring) : ring_(std::move(ring)) {}

  static LaurentZ constant(const CohClass& c, int z_power = 0) {
    LaurentZ out(c.ring());
    out.add(z_power, c);
    return out;
  }
  static LaurentZ one(const RingPtr& r) { return constant(CohClass::unit(r)); }

  const RingPtr& ring() const { return ring_; }
  const std::map<int, CohClass>& coefficients() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int min_power() const { return c_.begin()->first; }
  int max_power() const { return c_.rbegin()->first; }

  CohClass coefficient(int e) const {
    auto it = c_.find(e);
    return it == c_.end() ? CohClass::zero(ring_) : it->second;
  }

  void add(int e, const CohClass& v) {
    if (v.is_zero()) return;
    auto it = c_.find(e);
    if (it == c_.end()) {
      c_.emplace(e, v);
      return;
    }
    it->second += v;
    if (it->second.is_zero()) c_.erase(it);
  }

  friend LaurentZ operator+(const LaurentZ& a, const LaurentZ& b) {
    LaurentZ out = a;
    if (!out.ring_) out.ring_ = b.ring_;
    for (const auto& [e, v] : b.c_) out.add(e, v);
    return out;
  }
  friend LaurentZ operator-(const LaurentZ& a) {
    LaurentZ out(a.ring_);
    for (const auto& [e, v] : a.c_) out.c_.emplace(e, -v);
    return out;
  }
  friend LaurentZ operator-(const LaurentZ& a, const LaurentZ& b) { return a + (-b); }
  friend LaurentZ operator*(const Rational& s, const LaurentZ& a) {
    LaurentZ out(a.ring_);
    if (s == 0) return out;
    for (const auto& [e, v] : a.c_) out.c_.emplace(e, s * v);
    return out;
  }
  friend LaurentZ operator*(const LaurentZ& a, const LaurentZ& b) {
    LaurentZ out(a.ring_ ? a.ring_ : b.ring_);
    for (const auto& [ea, va] : a.c_)
      for (const auto& [eb, vb] : b.c_) out.add(ea + eb, va * vb);
    return out;
  }
  LaurentZ& operator+=(const LaurentZ& b) { return *this = *this + b; }

  /// multiplies by (rho + a z)
  LaurentZ times_linear(const CohClass& rho, const Rational& a) const {
    LaurentZ out(ring_);
    for (const auto& [e, v] : c_) {
      out.add(e, v * rho);
      if (a != 0) out.add(e + 1, a * v);
    }
    return out;
  }

  /// (rho + a z)^{-1} = sum_j (-rho)^j a^{-j-1} z^{-j-1}, finite because rho is nilpotent
  static LaurentZ inverse_linear(const CohClass& rho, const Rational& a) {
    if (a == 0) throw InternalError("inverse of a factor with zero z-coefficient");
    LaurentZ out(rho.ring());
    CohClass pw = CohClass::unit(rho.ring());
    CohClass minus_rho = -rho;
    Rational inv = 1 / a;
    Rational scale = inv;
    for (int j = 0; !pw.is_zero(); ++j) {
      if (static_cast<std::size_t>(j) > rho.ring()->dim()) throw InternalError("divisor class is not nilpotent");
      out.add(-j - 1, scale * pw);
      pw = pw * minus_rho;
      scale *= inv;
    }
    return out;
  }

  friend bool operator==(const LaurentZ& a, const LaurentZ& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (auto ia = a.c_.begin(), ib = b.c_.begin(); ia != a.c_.end(); ++ia, ++ib)
      if (ia->first != ib->first || ia->second != ib->second) return false;
    return true;
  }
  friend bool operator!=(const LaurentZ& a, const LaurentZ& b) { return !(a == b); }

  std::string str() const {
    if (c_.empty()) return "0";
    std::string out;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      if (!out.empty()) out += " + ";
      out += "(" + it->second.str() + ")";
      if (it->first != 0) out += "*z^" + std::to_string(it->first);
    }
    return out;
  }

 private:
  RingPtr ring_;
  std::map<int, CohClass> c_;
};

}  // namespace glsm
