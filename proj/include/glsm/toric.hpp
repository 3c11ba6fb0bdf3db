#pragma once

// GIT and lattice combinatorics of a torus GLSM: semistable supports, inertia
// sectors, the degree -> sector map, ages, effective degrees and the
// Stanley-Reisner data of each sector.

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "glsm/exact_lp.hpp"
#include "glsm/integer_matrix.hpp"
#include "glsm/model.hpp"

namespace glsm {

using SupportSet = std::vector<int>;  // sorted 0-based coordinate indices

/// A twisted sector, keyed by its canonical group parameter lambda in [0,1)^k.
struct SectorLabel {
  RationalVector lambda;
  RationalVector action;     // <rho_i, lambda> mod 1
  SupportSet fixed_support;  // {i : action[i] == 0}

  bool is_identity() const {
    return std::all_of(lambda.begin(), lambda.end(), [](const Rational& q) { return q == 0; });
  }
  friend bool operator==(const SectorLabel& a, const SectorLabel& b) { return a.lambda == b.lambda; }
  friend bool operator<(const SectorLabel& a, const SectorLabel& b) { return lex_less(a.lambda, b.lambda); }
};

inline SectorLabel make_sector(const GLSMModel& m, RationalVector lambda) {
  SectorLabel g;
  for (auto& x : lambda) x = frac(x);
  g.lambda = std::move(lambda);
  for (int i = 0; i < m.r; ++i) {
    Rational a = frac(dot(g.lambda, m.column(i)));
    if (a == 0) g.fixed_support.push_back(i);
    g.action.push_back(a);
  }
  return g;
}

/// An element of Hom(G^, Q), paired with characters by <d, xi> = sum_a d_a xi_a.
struct Degree {
  RationalVector value;

  Rational pair(const IntVector& xi) const { return dot(value, xi); }
  Rational pair(const RationalVector& xi) const { return dot(value, xi); }
  bool is_zero() const {
    return std::all_of(value.begin(), value.end(), [](const Rational& q) { return q == 0; });
  }
  friend bool operator==(const Degree& a, const Degree& b) { return a.value == b.value; }
  friend bool operator<(const Degree& a, const Degree& b) { return lex_less(a.value, b.value); }
};

inline RationalVector to_rational(const IntVector& v) {
  RationalVector out;
  for (long x : v) out.emplace_back(x);
  return out;
}

inline bool cone_contains(const RationalVector& v, const std::vector<RationalVector>& gens) {
  return cone_coefficients(v, gens).has_value();
}

inline std::vector<RationalVector> columns_of(const GLSMModel& m, const SupportSet& s) {
  std::vector<RationalVector> out;
  for (int i : s) out.push_back(to_rational(m.column(i)));
  return out;
}

/// Inclusion-minimal supports S with theta in cone{rho_i : i in S}. Minimal
/// supports have linearly independent generators, so only |S| <= k is searched.
inline std::vector<SupportSet> semistable_supports(const GLSMModel& m) {
  std::vector<SupportSet> found;
  SupportSet current;
  std::function<void(int, int)> rec = [&](int start, int size) {
    if (static_cast<int>(current.size()) == size) {
      for (const auto& f : found)
        if (std::includes(current.begin(), current.end(), f.begin(), f.end())) return;
      if (cone_contains(m.theta, columns_of(m, current))) found.push_back(current);
      return;
    }
    for (int i = start; i < m.r; ++i) {
      current.push_back(i);
      rec(i + 1, size);
      current.pop_back();
    }
  };
  for (int size = 1; size <= std::min(m.k, m.r); ++size) rec(0, size);
  std::sort(found.begin(), found.end());
  return found;
}

namespace detail {

inline RationalMatrix support_matrix(const GLSMModel& m, const SupportSet& s) {
  // rows rho_i (i in S): the linear map d -> (<d, rho_i>)_{i in S}
  RationalMatrix a;
  for (int i : s) a.push_back(to_rational(m.column(i)));
  return a;
}

inline void require_full_support(const GLSMModel& m, const SupportSet& s, const char* what) {
  if (static_cast<int>(s.size()) == m.k && rational_rank(support_matrix(m, s)) == static_cast<std::size_t>(m.k)) return;
  auto ray = kernel_vector(support_matrix(m, s), static_cast<std::size_t>(m.k));
  std::string msg = std::string(what) + ": support {";
  for (std::size_t i = 0; i < s.size(); ++i) msg += (i ? "," : "") + std::to_string(s[i] + 1);
  msg += "} does not span; degenerate stability choice";
  if (ray) {
    msg += ", unbounded along ray (";
    for (std::size_t i = 0; i < ray->size(); ++i) msg += (i ? "," : "") + (*ray)[i].get_str();
    msg += ")";
  }
  throw PreconditionError(msg);
}

}  // namespace detail

/// All sectors g whose fixed locus meets the semistable locus.
inline std::vector<SectorLabel> inertia_sectors(const GLSMModel& m) {
  std::set<SectorLabel> out;
  for (const auto& s : semistable_supports(m)) {
    detail::require_full_support(m, s, "inertia_sectors");
    // lambda with <rho_i, lambda> in Z for i in S:  A lambda = n,  A = Q_S^T
    BigMatrix a;
    for (int i : s) {
      std::vector<Integer> row;
      for (long v : m.column(i)) row.emplace_back(v);
      a.push_back(row);
    }
    auto snf = smith_normal_form(a);
    if (snf.rank() != static_cast<std::size_t>(m.k)) throw InternalError("inertia_sectors: infinite sector family");
    // U A V = D  =>  lambda = V D^{-1} n'
    std::vector<long> bounds;
    for (const auto& d : snf.diagonal) bounds.push_back(to_long(d));
    std::vector<long> idx(bounds.size(), 0);
    for (;;) {
      RationalVector mu(m.k);
      for (int a_ = 0; a_ < m.k; ++a_) mu[a_] = Rational(idx[a_], bounds[a_]);
      for (auto& q : mu) q.canonicalize();
      out.insert(make_sector(m, mat_vec(snf.V, mu)));
      std::size_t p = 0;
      while (p < idx.size() && ++idx[p] == bounds[p]) idx[p++] = 0;
      if (p == idx.size()) break;
    }
  }
  return {out.begin(), out.end()};
}

/// The sector g_d^{-1} carrying the degree-d coefficient.
inline SectorLabel sector_of_degree(const GLSMModel& m, const Degree& d) {
  RationalVector lambda;
  for (const auto& x : d.value) lambda.push_back(-x);
  return make_sector(m, std::move(lambda));
}

/// The age iota_g(xi) in [0,1).
inline Rational iota(const SectorLabel& g, const IntVector& xi) { return frac(dot(g.lambda, xi)); }

inline Rational theta_degree(const GLSMModel& m, const Degree& d) { return d.pair(m.theta); }

/// Degrees d with 0 <= <d,theta> <= bound satisfying the constructive effectivity
/// criterion: some minimal semistable support S has <d,rho_i> in Z_{>=0} for all i in S.
/// Sorted by (<d,theta>, d).
inline std::vector<Degree> effective_degrees(const GLSMModel& m, const Rational& bound) {
  if (bound <= 0) throw InputError("effective_degrees: bound must be positive");
  std::set<std::pair<Rational, Degree>, std::function<bool(const std::pair<Rational, Degree>&, const std::pair<Rational, Degree>&)>>
      out([](const auto& x, const auto& y) {
        if (x.first != y.first) return x.first < y.first;
        return x.second < y.second;
      });
  for (const auto& s : semistable_supports(m)) {
    detail::require_full_support(m, s, "effective_degrees");
    auto a = detail::support_matrix(m, s);
    // theta = sum_i coeff_i rho_i with coeff_i > 0 (minimality)
    RationalMatrix at(m.k, RationalVector(m.k));
    for (int i = 0; i < m.k; ++i)
      for (int j = 0; j < m.k; ++j) at[i][j] = a[j][i];
    auto coeff = solve_square(at, m.theta);
    if (!coeff) throw InternalError("effective_degrees: singular support matrix");
    for (const auto& c : *coeff)
      if (c <= 0) throw InternalError("effective_degrees: non-minimal support");
    std::vector<long> mvec(m.k, 0);
    std::function<void(int, Rational)> rec = [&](int pos, Rational used) {
      if (pos == m.k) {
        RationalVector rhs;
        for (long v : mvec) rhs.emplace_back(v);
        auto d = solve_square(a, rhs);
        if (!d) throw InternalError("effective_degrees: singular support matrix");
        Degree deg{*d};
        out.insert({theta_degree(m, deg), deg});
        return;
      }
      for (long v = 0;; ++v) {
        Rational next = used + (*coeff)[pos] * v;
        if (next > bound) break;
        mvec[pos] = v;
        rec(pos + 1, next);
      }
      mvec[pos] = 0;
    };
    rec(0, Rational(0));
  }
  std::vector<Degree> result;
  for (const auto& [t, d] : out) result.push_back(d);
  return result;
}

/// Minimal T inside I(g) such that no minimal semistable support survives in I(g) \ T.
/// The products prod_{i in T} rho_i generate the Stanley-Reisner ideal of Y_g.
inline std::vector<SupportSet> sr_generators(const GLSMModel& m, const SectorLabel& g) {
  const auto& fixed = g.fixed_support;
  std::vector<SupportSet> inside;
  for (const auto& s : semistable_supports(m))
    if (std::includes(fixed.begin(), fixed.end(), s.begin(), s.end())) inside.push_back(s);
  if (inside.empty()) throw PreconditionError("sr_generators: sector is empty (no semistable point is fixed)");
  std::vector<SupportSet> found;
  SupportSet current;
  auto hits_all = [&](const SupportSet& t) {
    for (const auto& s : inside) {
      bool hit = false;
      for (int i : s) hit = hit || std::binary_search(t.begin(), t.end(), i);
      if (!hit) return false;
    }
    return true;
  };
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t size) {
    if (current.size() == size) {
      for (const auto& f : found)
        if (std::includes(current.begin(), current.end(), f.begin(), f.end())) return;
      if (hits_all(current)) found.push_back(current);
      return;
    }
    for (std::size_t i = start; i < fixed.size(); ++i) {
      current.push_back(fixed[i]);
      rec(i + 1, size);
      current.pop_back();
    }
  };
  for (std::size_t size = 1; size <= fixed.size(); ++size) rec(0, size);
  std::sort(found.begin(), found.end());
  return found;
}

}  // namespace glsm
