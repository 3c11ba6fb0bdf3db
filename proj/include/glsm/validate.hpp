#pragma once

// Checks of the algorithmically decidable GLSM axioms. Failures are collected in
// a report; nothing here throws for a bad model except the genericity budget.

#include <optional>
#include <string>
#include <vector>

#include "glsm/exact_lp.hpp"
#include "glsm/integer_matrix.hpp"
#include "glsm/model.hpp"
#include "glsm/toric.hpp"

namespace glsm {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct ValidationReport {
  std::vector<CheckResult> checks;
  std::vector<CheckResult> warnings;  // informational, never affect overall()

  bool overall() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
  void add(std::string name, bool passed, std::string detail) {
    checks.push_back({std::move(name), passed, std::move(detail)});
  }
};

struct JMembership {
  bool is_member = false;
  std::optional<RationalVector> witness;  // entries in [0,1)
  long order = 1;                         // order of J
};

namespace detail {

inline BigMatrix weights_transpose(const GLSMModel& m) { return to_big(transpose(m.weights)); }

inline std::string vec_str(const RationalVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s + ")";
}

inline std::string exponent_str(const Exponent& e) {
  std::string s = "(";
  for (std::size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
  return s + ")";
}

}  // namespace detail

/// Is J = diag(e^{2 pi i c_i/d_w}) in G?  Solves Q^T lambda = c/d_w mod Z^r via Smith form.
inline JMembership j_membership(const GLSMModel& m) {
  JMembership out;
  RationalVector b;
  Integer ord = 1;
  for (long c : m.r_charges) {
    Rational q(c, m.d_w);
    q.canonicalize();
    b.push_back(q);
    ord = lcm_of(ord, q.get_den());
  }
  out.order = to_long(ord);
  auto snf = smith_normal_form(detail::weights_transpose(m));
  // U Q^T V = D;  with lambda = V mu the system becomes D mu = U b mod Z^r
  RationalVector ub = mat_vec(snf.U, b);
  RationalVector mu(m.k, Rational(0));
  for (std::size_t i = 0; i < ub.size(); ++i) {
    const Integer di = i < snf.diagonal.size() ? snf.diagonal[i] : Integer(0);
    if (di == 0) {
      if (!is_integer(ub[i])) return out;
    } else {
      mu[i] = ub[i] / Rational(di);
    }
  }
  RationalVector lambda = mat_vec(snf.V, mu);
  for (auto& x : lambda) x = frac(x);
  out.is_member = true;
  out.witness = lambda;
  return out;
}

/// Smith invariant factors of Q^T all equal to 1 (and full rank k).
inline CheckResult faithfulness_check(const GLSMModel& m) {
  auto snf = smith_normal_form(detail::weights_transpose(m));
  if (snf.rank() < static_cast<std::size_t>(m.k))
    return {"faithfulness", false, "weight matrix has rank " + std::to_string(snf.rank()) + " < k"};
  for (const auto& d : snf.diagonal)
    if (d != 1) return {"faithfulness", false, "Smith invariant factor " + d.get_str() + " of Q^T; torus does not act faithfully"};
  return {"faithfulness", true, "all invariant factors equal 1"};
}

inline CheckResult r_charge_bounds_check(const GLSMModel& m) {
  for (int i = 0; i < m.r; ++i)
    if (m.r_charges[i] < 0 || m.r_charges[i] > m.d_w)
      return {"r_charge_bounds", false,
              "c_" + std::to_string(i + 1) + " = " + std::to_string(m.r_charges[i]) + " outside [0, " + std::to_string(m.d_w) + "]"};
  return {"r_charge_bounds", true, "0 <= c_i <= d_w"};
}

/// G-invariance (Q a = 0) and R-homogeneity (c.a = d_w) of every monomial.
inline ValidationReport potential_check(const GLSMModel& m) {
  ValidationReport rep;
  if (!m.potential) throw PreconditionError("potential_check: model has no potential");
  const auto& names = m.variable_names;
  for (const auto& term : m.potential->terms()) {
    PotentialPolynomial mono(m.r);
    mono.add(Rational(1), term.exponent);
    std::string label = mono.str(names);
    bool invariant = true;
    for (int a = 0; a < m.k; ++a) {
      long s = 0;
      for (int i = 0; i < m.r; ++i) s += m.weights[a][i] * term.exponent[i];
      invariant = invariant && s == 0;
    }
    long rdeg = 0;
    for (int i = 0; i < m.r; ++i) {
      if (term.exponent[i] < 0) throw InputError("negative exponent in potential");
      rdeg += m.r_charges[i] * term.exponent[i];
    }
    rep.add("potential_invariance[" + label + "]", invariant,
            invariant ? "Q.a = 0" : "Q.a != 0 for a = " + detail::exponent_str(term.exponent));
    rep.add("potential_homogeneity[" + label + "]", rdeg == m.d_w,
            "c.a = " + std::to_string(rdeg) + (rdeg == m.d_w ? " = d_w" : " != d_w = " + std::to_string(m.d_w)));
  }
  return rep;
}

namespace detail {

inline unsigned long long binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  unsigned long long b = 1;
  for (unsigned i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

}  // namespace detail

/// True iff theta lies in no cone spanned by columns of rank < k. By Caratheodory
/// it suffices to look at linearly independent column sets of size < k.
inline bool no_strict_semistable(const GLSMModel& m, unsigned long long budget = 1ULL << 16) {
  unsigned long long count = 0;
  for (int s = 0; s < m.k; ++s) count += detail::binomial(static_cast<unsigned>(m.r), static_cast<unsigned>(s));
  if (m.r > 16 && count > budget)
    throw PreconditionError("no_strict_semistable: combinatorial budget exceeded (" + std::to_string(count) +
                            " subsets); assert genericity manually");
  SupportSet current;
  bool found = false;
  std::function<void(int, int)> rec = [&](int start, int size) {
    if (found) return;
    if (static_cast<int>(current.size()) == size) {
      auto gens = columns_of(m, current);
      if (rational_rank(gens) == current.size() && cone_contains(m.theta, gens)) found = true;
      return;
    }
    for (int i = start; i < m.r && !found; ++i) {
      current.push_back(i);
      rec(i + 1, size);
      current.pop_back();
    }
  };
  for (int size = 0; size < m.k && !found; ++size) rec(0, size);
  return !found;
}

struct InvariantsResult {
  bool trivial = true;
  std::optional<RationalVector> functional;           // <lambda, col_i> >= 1 on keep
  std::optional<std::vector<Integer>> certificate;    // exponent of an invariant monomial (length r)

  explicit operator bool() const { return trivial; }
};

/// Whether the only torus-invariant monomial in the variables `keep` is 1 (Gordan's alternative).
inline InvariantsResult invariants_trivial(const GLSMModel& m, const std::vector<int>& keep, bool include_r_charge) {
  InvariantsResult out;
  if (keep.empty()) return out;
  const std::size_t dim = static_cast<std::size_t>(m.k) + (include_r_charge ? 1 : 0);
  std::vector<RationalVector> gens;
  for (int i : keep) {
    if (i < 0 || i >= m.r) throw InputError("invariants_trivial: index out of range");
    RationalVector g = to_rational(m.column(i));
    if (include_r_charge) g.emplace_back(m.r_charges[i]);
    gens.push_back(std::move(g));
  }
  if (auto y = strictly_positive_functional(gens, dim)) {
    out.functional = *y;
    return out;
  }
  out.trivial = false;
  auto rel = nonnegative_relation(gens, dim);
  if (!rel) throw InternalError("invariants_trivial: Gordan alternative produced neither side");
  std::vector<Integer> full(m.r, 0);
  for (std::size_t j = 0; j < keep.size(); ++j) full[keep[j]] = (*rel)[j];
  out.certificate = full;
  return out;
}

/// Order of G intersect C*_R inside GL(V), or nullopt when it is infinite.
inline std::optional<Integer> g_cap_r_order(const GLSMModel& m) {
  bool all_zero = true;
  Integer g = 0;
  for (long c : m.r_charges) {
    all_zero = all_zero && c == 0;
    g = gcd_of(g, Integer(c));
  }
  if (all_zero) return Integer(1);
  // K = {(h,t) : rho_i(h) = t^{c_i}}, character lattice Z^{k+1}/rows(rho_i, -c_i)
  BigMatrix a;
  for (int i = 0; i < m.r; ++i) {
    std::vector<Integer> row;
    for (long v : m.column(i)) row.emplace_back(v);
    row.emplace_back(-m.r_charges[i]);
    a.push_back(row);
  }
  auto snf = smith_normal_form(a);
  if (snf.rank() < static_cast<std::size_t>(m.k + 1)) return std::nullopt;
  Integer n = 1;
  for (const auto& d : snf.diagonal) n *= d;
  // t -> diag(t^{c_i}) has kernel mu_g, all of which lies in K
  return Integer(n / g);
}

inline ValidationReport validate_model(const GLSMModel& m) {
  ValidationReport rep;
  rep.checks.push_back(r_charge_bounds_check(m));
  rep.checks.push_back(faithfulness_check(m));
  auto j = j_membership(m);
  rep.add("j_membership", j.is_member,
          j.is_member ? "J in G, lambda = " + detail::vec_str(*j.witness) + ", order of J = " + std::to_string(j.order)
                      : "no lambda with <rho_i, lambda> = c_i/d_w mod 1");
  try {
    bool generic = no_strict_semistable(m);
    rep.add("no_strict_semistable", generic,
            generic ? "theta is not in any cone of rank < k" : "theta lies in a cone of rank < k (strictly semistable points)");
  } catch (const PreconditionError& e) {
    rep.add("no_strict_semistable", false, e.what());
  }
  if (m.potential) {
    auto pc = potential_check(m);
    bool ok = pc.overall();
    std::string detail = ok ? "all " + std::to_string(m.potential->terms().size()) + " monomials invariant and of R-degree d_w" : "";
    for (const auto& c : pc.checks)
      if (!c.passed) detail += (detail.empty() ? "" : "; ") + c.name + ": " + c.detail;
    rep.add("potential", ok, detail);
  } else {
    rep.add("potential", true, "skipped: no potential supplied");
  }

  auto order = g_cap_r_order(m);
  if (!order) {
    rep.warnings.push_back({"g_cap_cr", false, "G intersect C*_R is infinite"});
  } else {
    bool ok = *order == m.d_w && j.is_member && *order == j.order;
    rep.warnings.push_back({"g_cap_cr", ok,
                            "G intersect C*_R has order " + order->get_str() + " (d_w = " + std::to_string(m.d_w) +
                                ", order of J = " + std::to_string(j.order) + ")"});
  }
  rep.warnings.push_back({"critical_locus_proper", m.assert_critical_proper,
                          m.assert_critical_proper ? "asserted by the model file (not checked)" : "not asserted (not checked)"});
  return rep;
}

}  // namespace glsm
