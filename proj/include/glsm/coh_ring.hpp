#pragma once

// Presented cohomology rings of the inertia sectors,
//   H^*(Y_g; Q) = Q[H_1..H_k] / (prod_{i in T} rho_i : T in sr_generators(g)),
// with classes stored as dense coefficient vectors over the staircase basis.

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "glsm/groebner.hpp"
#include "glsm/toric.hpp"

namespace glsm {

struct SectorRing {
  SectorLabel sector;
  int k = 0;
  IntMatrix weights;                    // copied from the model; rho_i are its columns
  std::vector<SupportSet> sr_sets;
  std::vector<Polynomial> sr_ideal;
  std::vector<Polynomial> groebner;
  std::vector<Monomial> basis;          // staircase, ascending grevlex (1 first)
  std::map<Monomial, std::size_t> index;
  // products of basis elements, as dense vectors over the basis
  std::vector<std::vector<std::vector<Rational>>> table;

  std::size_t dim() const { return basis.size(); }

  RationalVector rho(int i) const {
    RationalVector v;
    for (int a = 0; a < k; ++a) v.emplace_back(weights[a][i]);
    return v;
  }

  /// Dense coordinates of the normal form of p.
  std::vector<Rational> coordinates(const Polynomial& p) const {
    std::vector<Rational> out(dim(), Rational(0));
    const Polynomial nf = reduce(p, groebner);
    for (const auto& [mono, c] : nf.terms()) {
      auto it = index.find(mono);
      if (it == index.end()) throw InternalError("normal form left the staircase");
      out[it->second] += c;
    }
    return out;
  }

  Polynomial polynomial(const std::vector<Rational>& coords) const {
    Polynomial p(static_cast<std::size_t>(k));
    for (std::size_t i = 0; i < coords.size(); ++i) p.add_term(basis[i], coords[i]);
    return p;
  }
};

using RingPtr = std::shared_ptr<const SectorRing>;

inline RingPtr build_ring_from_sets(const GLSMModel& m, const SectorLabel& g, const std::vector<SupportSet>& sets) {
  auto ring = std::make_shared<SectorRing>();
  ring->sector = g;
  ring->k = m.k;
  ring->weights = m.weights;
  ring->sr_sets = sets;
  for (const auto& t : sets) {
    Polynomial p = Polynomial::constant(m.k, Rational(1));
    for (int i : t) p = p * Polynomial::linear_form(ring->rho(i));
    ring->sr_ideal.push_back(p);
  }
  ring->groebner = groebner_basis(ring->sr_ideal);
  std::size_t missing = 0;
  auto stairs = staircase(ring->groebner, static_cast<std::size_t>(m.k), &missing);
  if (!stairs)
    throw PreconditionError("build_ring: quotient ring is infinite-dimensional (no power of H" + std::to_string(missing + 1) +
                            " lies in the leading-term ideal)");
  if (stairs->empty()) throw InternalError("build_ring: sector ring is zero");
  ring->basis = *stairs;
  for (std::size_t i = 0; i < ring->basis.size(); ++i) ring->index[ring->basis[i]] = i;
  const std::size_t n = ring->basis.size();
  ring->table.assign(n, std::vector<std::vector<Rational>>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Polynomial prod(static_cast<std::size_t>(m.k));
      prod.add_term(monomial_mul(ring->basis[i], ring->basis[j]), Rational(1));
      ring->table[i][j] = ring->coordinates(prod);
      ring->table[j][i] = ring->table[i][j];
    }
  return ring;
}

inline RingPtr build_ring(const GLSMModel& m, const SectorLabel& g) { return build_ring_from_sets(m, g, sr_generators(m, g)); }

/// An element of one sector ring, always in normal form.
class CohClass {
 public:
  CohClass() = default;
  CohClass(RingPtr ring, std::vector<Rational> coords) : ring_(std::move(ring)), c_(std::move(coords)) {}

  static CohClass zero(const RingPtr& r) { return CohClass(r, std::vector<Rational>(r->dim(), Rational(0))); }
  static CohClass unit(const RingPtr& r) { return constant(r, Rational(1)); }
  static CohClass constant(const RingPtr& r, const Rational& q) {
    auto v = std::vector<Rational>(r->dim(), Rational(0));
    v[0] = q;  // the staircase always starts with 1
    return CohClass(r, std::move(v));
  }
  static CohClass from_polynomial(const RingPtr& r, const Polynomial& p) { return CohClass(r, r->coordinates(p)); }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Rational>& coords() const { return c_; }
  Polynomial polynomial() const { return ring_->polynomial(c_); }

  bool is_zero() const {
    for (const auto& x : c_)
      if (x != 0) return false;
    return true;
  }

  friend CohClass operator+(const CohClass& a, const CohClass& b) {
    check_same(a, b);
    auto v = a.c_;
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += b.c_[i];
    return CohClass(a.ring_, std::move(v));
  }
  friend CohClass operator-(const CohClass& a) {
    auto v = a.c_;
    for (auto& x : v) x = -x;
    return CohClass(a.ring_, std::move(v));
  }
  friend CohClass operator-(const CohClass& a, const CohClass& b) { return a + (-b); }
  friend CohClass operator*(const Rational& s, const CohClass& a) {
    auto v = a.c_;
    for (auto& x : v) x *= s;
    return CohClass(a.ring_, std::move(v));
  }
  friend CohClass operator*(const CohClass& a, const CohClass& b) {
    check_same(a, b);
    const std::size_t n = a.c_.size();
    std::vector<Rational> v(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (b.c_[j] == 0) continue;
        Rational f = a.c_[i] * b.c_[j];
        const auto& row = a.ring_->table[i][j];
        for (std::size_t t = 0; t < n; ++t)
          if (row[t] != 0) v[t] += f * row[t];
      }
    }
    return CohClass(a.ring_, std::move(v));
  }
  CohClass& operator+=(const CohClass& b) { return *this = *this + b; }

  friend bool operator==(const CohClass& a, const CohClass& b) {
    if (!same_ring(a.ring_, b.ring_)) return false;
    return a.c_ == b.c_;
  }
  friend bool operator!=(const CohClass& a, const CohClass& b) { return !(a == b); }

  static bool same_ring(const RingPtr& a, const RingPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->sector == b->sector && a->groebner == b->groebner && a->basis == b->basis;
  }

  std::string str() const { return polynomial().str(); }

 private:
  static void check_same(const CohClass& a, const CohClass& b) {
    if (!same_ring(a.ring_, b.ring_)) throw InternalError("ring mismatch in class arithmetic");
  }

  RingPtr ring_;
  std::vector<Rational> c_;
};

inline CohClass add(const CohClass& a, const CohClass& b) { return a + b; }
inline CohClass mul(const CohClass& a, const CohClass& b) { return a * b; }
inline CohClass scalar_mul(const Rational& s, const CohClass& a) { return s * a; }
inline CohClass normal_form(const RingPtr& r, const Polynomial& p) { return CohClass::from_polynomial(r, p); }
inline bool is_zero(const CohClass& a) { return a.is_zero(); }

/// The linear form sum_a xi_a H_a in the ring.
inline CohClass class_from_character(const RingPtr& r, const RationalVector& xi) {
  if (static_cast<int>(xi.size()) != r->k) throw InternalError("class_from_character: wrong character length");
  return CohClass::from_polynomial(r, Polynomial::linear_form(xi));
}
inline CohClass class_from_character(const RingPtr& r, const IntVector& xi) { return class_from_character(r, to_rational(xi)); }

/// a in (sr_ideal + (prod factors)) ?
inline bool divides_ideal(const CohClass& a, const std::vector<CohClass>& factors) {
  Polynomial prod = Polynomial::constant(static_cast<std::size_t>(a.ring()->k), Rational(1));
  for (const auto& f : factors) {
    if (!CohClass::same_ring(f.ring(), a.ring())) throw InternalError("divides_ideal: ring mismatch");
    prod = prod * f.polynomial();
  }
  auto gens = a.ring()->sr_ideal;
  gens.push_back(prod);
  auto gb = groebner_basis(gens);
  return reduce(a.polynomial(), gb).is_zero();
}

/// Sector rings of one model, built on first use. Safe for concurrent readers.
class RingCache {
 public:
  explicit RingCache(const GLSMModel& m) : model_(m) {}

  RingPtr get(const SectorLabel& g) {
    {
      std::lock_guard<std::mutex> lock(mu_);
      if (auto it = rings_.find(g.lambda); it != rings_.end()) return it->second;
    }
    RingPtr built = build_ring(model_, g);
    std::lock_guard<std::mutex> lock(mu_);
    return rings_.emplace(g.lambda, built).first->second;
  }

  const GLSMModel& model() const { return model_; }

 private:
  struct LambdaLess {
    bool operator()(const RationalVector& a, const RationalVector& b) const { return lex_less(a, b); }
  };
  GLSMModel model_;
  std::mutex mu_;
  std::map<RationalVector, RingPtr, LambdaLess> rings_;
};

}  // namespace glsm
