#pragma once

// Exact arithmetic in Q and in cyclotomic fields Q(zeta_N), stored on the
// power basis 1, zeta, ..., zeta^{phi(N)-1} modulo the N-th cyclotomic polynomial.

#include <map>
#include <mutex>
#include <numeric>
#include <string>
#include <variant>
#include <vector>

#include "glsm/rational.hpp"

namespace glsm {

namespace detail {

using IntPoly = std::vector<Integer>;  // low degree first

inline void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division of monic integer polynomials.
inline IntPoly divide_exact(IntPoly num, const IntPoly& den) {
  trim(num);
  if (num.size() < den.size()) throw InternalError("cyclotomic: bad division");
  IntPoly q(num.size() - den.size() + 1, 0);
  for (std::size_t i = num.size(); i-- >= den.size();) {
    Integer c = num[i];
    if (c == 0) continue;
    std::size_t shift = i - (den.size() - 1);
    q[shift] = c;
    for (std::size_t j = 0; j < den.size(); ++j) num[shift + j] -= c * den[j];
  }
  trim(num);
  if (!num.empty()) throw InternalError("cyclotomic: non-exact division");
  return q;
}

inline const IntPoly& cyclotomic_polynomial_locked(long n, std::map<long, IntPoly>& cache) {
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  // x^n - 1 divided by Phi_d for all proper divisors d
  IntPoly p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (long d = 1; d < n; ++d)
    if (n % d == 0) p = divide_exact(p, cyclotomic_polynomial_locked(d, cache));
  return cache.emplace(n, std::move(p)).first->second;
}

inline const IntPoly& cyclotomic_polynomial(long n) {
  static std::mutex mu;
  static std::map<long, IntPoly> cache;
  std::lock_guard<std::mutex> lock(mu);
  return cyclotomic_polynomial_locked(n, cache);
}

}  // namespace detail

/// An element of Q(zeta_N). Coefficients are always reduced modulo Phi_N.
class Cyclotomic {
 public:
  Cyclotomic() : order_(1), coeffs_(1, Rational(0)) {}

  Cyclotomic(long order, std::vector<Rational> coeffs) : order_(order) {
    if (order < 1) throw InputError("cyclotomic order must be positive");
    coeffs_ = reduce(std::move(coeffs), order);
  }

  static Cyclotomic from_rational(const Rational& q, long order = 1) {
    return Cyclotomic(order, std::vector<Rational>{q});
  }

  /// zeta_N^e for any integer e.
  static Cyclotomic root_power(long order, long exponent) {
    long e = ((exponent % order) + order) % order;
    std::vector<Rational> c(e + 1, Rational(0));
    c[e] = 1;
    return Cyclotomic(order, std::move(c));
  }

  long order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  long degree() const { return static_cast<long>(detail::cyclotomic_polynomial(order_).size()) - 1; }

  bool is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
      if (coeffs_[i] != 0) return false;
    return true;
  }
  Rational rational_part() const { return coeffs_.empty() ? Rational(0) : coeffs_[0]; }
  bool is_zero() const { return is_rational() && rational_part() == 0; }

  /// Canonical embedding into Q(zeta_M) for N | M.
  Cyclotomic promote(long target) const {
    if (target % order_ != 0) throw InternalError("cyclotomic promote: order does not divide target");
    long step = target / order_;
    std::vector<Rational> c(coeffs_.size() == 0 ? 1 : (coeffs_.size() - 1) * step + 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i * step] = coeffs_[i];
    return Cyclotomic(target, std::move(c));
  }

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    long n = std::lcm(a.order_, b.order_);
    auto pa = a.promote(n), pb = b.promote(n);
    std::vector<Rational> c(std::max(pa.coeffs_.size(), pb.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < pa.coeffs_.size(); ++i) c[i] += pa.coeffs_[i];
    for (std::size_t i = 0; i < pb.coeffs_.size(); ++i) c[i] += pb.coeffs_[i];
    return Cyclotomic(n, std::move(c));
  }
  friend Cyclotomic operator-(const Cyclotomic& a) {
    auto c = a.coeffs_;
    for (auto& x : c) x = -x;
    return Cyclotomic(a.order_, std::move(c));
  }
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    long n = std::lcm(a.order_, b.order_);
    auto pa = a.promote(n), pb = b.promote(n);
    std::vector<Rational> c(pa.coeffs_.size() + pb.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < pa.coeffs_.size(); ++i)
      if (pa.coeffs_[i] != 0)
        for (std::size_t j = 0; j < pb.coeffs_.size(); ++j) c[i + j] += pa.coeffs_[i] * pb.coeffs_[j];
    return Cyclotomic(n, std::move(c));
  }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) { return (a - b).is_zero(); }

 private:
  static std::vector<Rational> reduce(std::vector<Rational> c, long order) {
    const auto& phi = detail::cyclotomic_polynomial(order);
    std::size_t deg = phi.size() - 1;
    for (std::size_t i = c.size(); i-- > deg;) {
      Rational lead = c[i];
      if (lead == 0) continue;
      std::size_t shift = i - deg;
      for (std::size_t j = 0; j <= deg; ++j) c[shift + j] -= lead * Rational(phi[j]);
    }
    c.resize(deg == 0 ? 1 : deg, Rational(0));
    while (c.size() > 1 && c.back() == 0) c.pop_back();
    return c;
  }

  long order_;
  std::vector<Rational> coeffs_;
};

/// A rational number, or an element of a cyclotomic field when a root of unity
/// is genuinely needed. Cyclotomic values that happen to be rational are
/// demoted, so equal values have equal representations up to field order.
class ExactScalar {
 public:
  ExactScalar() : value_(Rational(0)) {}
  ExactScalar(const Rational& q) : value_(q) {}  // NOLINT(google-explicit-constructor)
  ExactScalar(long n) : value_(Rational(n)) {}   // NOLINT(google-explicit-constructor)
  explicit ExactScalar(const Cyclotomic& c) : value_(c) { normalize(); }

  /// e^{pi i q} for rational q, i.e. zeta_{2b}^{a} for q = a/b.
  static ExactScalar exp_pi_i(const Rational& q) {
    long b = to_long(q.get_den());
    long a = to_long(q.get_num());
    return ExactScalar(Cyclotomic::root_power(2 * b, a));
  }

  bool is_rational() const { return std::holds_alternative<Rational>(value_); }
  const Rational& rational() const { return std::get<Rational>(value_); }
  Cyclotomic cyclotomic() const {
    return is_rational() ? Cyclotomic::from_rational(rational()) : std::get<Cyclotomic>(value_);
  }
  bool is_zero() const { return is_rational() ? rational() == 0 : false; }
  bool is_one() const { return is_rational() && rational() == 1; }

  friend ExactScalar operator+(const ExactScalar& a, const ExactScalar& b) {
    if (a.is_rational() && b.is_rational()) return ExactScalar(Rational(a.rational() + b.rational()));
    return ExactScalar(a.cyclotomic() + b.cyclotomic());
  }
  friend ExactScalar operator-(const ExactScalar& a) {
    if (a.is_rational()) return ExactScalar(Rational(-a.rational()));
    return ExactScalar(-a.cyclotomic());
  }
  friend ExactScalar operator-(const ExactScalar& a, const ExactScalar& b) { return a + (-b); }
  friend ExactScalar operator*(const ExactScalar& a, const ExactScalar& b) {
    if (a.is_rational() && b.is_rational()) return ExactScalar(Rational(a.rational() * b.rational()));
    return ExactScalar(a.cyclotomic() * b.cyclotomic());
  }
  friend bool operator==(const ExactScalar& a, const ExactScalar& b) { return (a - b).is_zero(); }
  friend bool operator!=(const ExactScalar& a, const ExactScalar& b) { return !(a == b); }

  std::string str() const {
    if (is_rational()) return rational().get_str();
    const auto& c = std::get<Cyclotomic>(value_);
    std::string out = "[zeta_" + std::to_string(c.order()) + ":";
    for (std::size_t i = 0; i < c.coeffs().size(); ++i) out += (i ? "," : "") + c.coeffs()[i].get_str();
    return out + "]";
  }

 private:
  void normalize() {
    if (auto* c = std::get_if<Cyclotomic>(&value_); c && c->is_rational()) value_ = c->rational_part();
  }
  std::variant<Rational, Cyclotomic> value_;
};

}  // namespace glsm
