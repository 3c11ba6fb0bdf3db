#pragma once

// Big and GLSM I-functions of a torus GLSM as truncated series
//   sum_d q^d  exp(z^{-1} sum_j t^j p_j(eta + z<d,eta>)) * (hypergeometric factor) * 1_{g_d^{-1}},
// together with z-derivatives, Novikov twists, compact-type checks and comparison.

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "glsm/cyclotomic.hpp"
#include "glsm/laurent.hpp"
#include "glsm/validate.hpp"

namespace glsm {

enum class SeriesState { ambient, glsm };
enum class HyperMode { ambient, glsm };
enum class DzMethod { by_insertion, by_multiplication };

inline const char* state_name(SeriesState s) { return s == SeriesState::ambient ? "ambient" : "glsm"; }

struct Insertion {
  std::string name;
  PotentialPolynomial poly;  // in the eta variables of the owning InsertionSet
};

/// Insertions share one list of characters eta_1..eta_l. By default the list is
/// rho_1..rho_r named after the model variables, so "t=x1" inserts t * rho_1.
struct InsertionSet {
  std::vector<std::string> eta_names;
  std::vector<IntVector> etas;
  std::vector<Insertion> items;

  std::size_t size() const { return items.size(); }
  int index_of(const std::string& name) const {
    for (std::size_t j = 0; j < items.size(); ++j)
      if (items[j].name == name) return static_cast<int>(j);
    return -1;
  }
  friend bool operator==(const InsertionSet& a, const InsertionSet& b) {
    if (a.eta_names != b.eta_names || a.etas != b.etas || a.items.size() != b.items.size()) return false;
    for (std::size_t j = 0; j < a.items.size(); ++j)
      if (a.items[j].name != b.items[j].name || !(a.items[j].poly == b.items[j].poly)) return false;
    return true;
  }
};

inline InsertionSet default_insertions(const GLSMModel& m) {
  InsertionSet s;
  s.eta_names = m.variable_names;
  for (int i = 0; i < m.r; ++i) s.etas.push_back(m.column(i));
  return s;
}

inline void add_eta(InsertionSet& s, const std::string& name, const IntVector& xi) {
  if (std::find(s.eta_names.begin(), s.eta_names.end(), name) != s.eta_names.end())
    throw InputError("duplicate character name '" + name + "'");
  if (!s.items.empty()) throw InputError("characters must be declared before insertions");
  s.eta_names.push_back(name);
  s.etas.push_back(xi);
}

/// Adds an insertion from "NAME=POLY".
inline void add_insertion(InsertionSet& s, const std::string& spec) {
  auto eq = spec.find('=');
  if (eq == std::string::npos || eq == 0) throw InputError("insertion must look like NAME=POLY: '" + spec + "'");
  std::string name = spec.substr(0, eq);
  if (s.index_of(name) >= 0) throw InputError("duplicate insertion name '" + name + "'");
  s.items.push_back({name, parse_polynomial(spec.substr(eq + 1), s.eta_names)});
}

// ---------------------------------------------------------------------------

struct SeriesTerm {
  Degree degree;
  std::vector<int> alpha;  // t multi-exponent
  SectorLabel sector;
  Rational theta;          // <d, theta>
  ExactScalar phase{1L};   // 1, or an irrational root-of-unity factor from a Novikov twist
  LaurentZ value;
};

inline bool term_less(const SeriesTerm& a, const SeriesTerm& b) {
  if (a.theta != b.theta) return a.theta < b.theta;
  if (a.degree.value != b.degree.value) return lex_less(a.degree.value, b.degree.value);
  return a.alpha < b.alpha;
}

struct GradedSeries {
  GLSMModel model;
  InsertionSet insertions;
  Rational q_bound;
  int t_order = 0;
  SeriesState state = SeriesState::ambient;
  std::vector<int> hat;                  // derivative set used for the glsm ranges
  std::vector<IntVector> z_partials;     // characters applied by z_partial, in order
  std::vector<IntVector> twists;         // characters applied by twist_novikov, in order
  std::vector<SeriesTerm> terms;         // sorted by term_less

  const SeriesTerm* find(const Degree& d, const std::vector<int>& alpha) const {
    for (const auto& t : terms)
      if (t.degree == d && t.alpha == alpha) return &t;
    return nullptr;
  }
};

/// Worker count from GLSM_THREADS (default: hardware concurrency).
inline int engine_threads() {
  if (const char* env = std::getenv("GLSM_THREADS"); env && *env) {
    char* end = nullptr;
    long n = std::strtol(env, &end, 10);
    if (*end != '\0' || n < 1) throw InputError("GLSM_THREADS must be a positive integer");
    return static_cast<int>(std::min(n, 256L));
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Runs f(i) for i in [0, n) on up to `threads` workers; results land in slot i.
template <class F>
void parallel_for(std::size_t n, int threads, F&& f) {
  std::size_t workers = std::min<std::size_t>(n, threads < 1 ? 1 : static_cast<std::size_t>(threads));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < n;) {
        try {
          f(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mu);
          if (!error) error = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

// ---------------------------------------------------------------------------

inline CohClass class_of(const RingPtr& ring, const IntVector& xi) { return class_from_character(ring, xi); }

/// The hypergeometric degree factor. In glsm mode the coordinates in `hat` use
/// the ranges nu in [<d,rho>, 0] (numerator) and (0, <d,rho>) (denominator).
inline LaurentZ hyper_factor(const GLSMModel& m, const RingPtr& ring, const Degree& d, HyperMode mode,
                             const std::vector<int>& hat) {
  std::vector<bool> in_hat(m.r, false);
  if (mode == HyperMode::glsm)
    for (int i : hat) in_hat.at(i) = true;
  LaurentZ out = LaurentZ::one(ring);
  for (int i = 0; i < m.r; ++i) {
    const IntVector rho_i = m.column(i);
    const Rational D = d.pair(rho_i);
    const CohClass rho = class_of(ring, rho_i);
    long lo, hi;  // inclusive integer range of nu
    bool numerator;
    if (in_hat[i]) {
      numerator = D <= 0;
      if (numerator) {
        lo = to_long(ceil_of(D));
        hi = 0;
      } else {
        lo = 1;
        hi = to_long(ceil_of(D)) - 1;
      }
    } else {
      numerator = D < 0;
      if (numerator) {
        lo = to_long(ceil_of(D));
        hi = -1;
      } else {
        lo = 0;
        hi = to_long(ceil_of(D)) - 1;
      }
    }
    for (long nu = lo; nu <= hi; ++nu) {
      Rational a = D - Rational(nu);
      if (numerator) {
        out = out.times_linear(rho, a);
      } else {
        if (a == 0) throw InternalError("hyper_factor: denominator factor without z term");
        out = out * LaurentZ::inverse_linear(rho, a);
      }
    }
  }
  return out;
}

inline LaurentZ hyper_factor(const GLSMModel& m, const Degree& d, HyperMode mode) {
  return hyper_factor(m, build_ring(m, sector_of_degree(m, d)), d, mode, m.hat_set());
}

namespace detail {

inline void enumerate_alphas(std::size_t l, int t_order, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (cur.size() == l) {
    out.push_back(cur);
    return;
  }
  int used = std::accumulate(cur.begin(), cur.end(), 0);
  for (int a = 0; used + a <= t_order; ++a) {
    cur.push_back(a);
    enumerate_alphas(l, t_order, cur, out);
    cur.pop_back();
  }
}

}  // namespace detail

/// All t multi-exponents with total degree <= t_order, in lex order.
inline std::vector<std::vector<int>> t_exponents(std::size_t l, int t_order) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  detail::enumerate_alphas(l, t_order, cur, out);
  return out;
}

/// exp(z^{-1} sum_j t^j p_j(eta_s + z<d,eta_s>)) truncated at total t-degree t_order,
/// keyed by t multi-exponent. Zero coefficients are omitted.
inline std::map<std::vector<int>, LaurentZ> exp_factor(const RingPtr& ring, const Degree& d, const InsertionSet& ins,
                                                       int t_order) {
  if (t_order < 0) throw InputError("t_order must be nonnegative");
  const std::size_t l = ins.size();
  // z^{-1} p_j(eta + z<d,eta>)
  std::vector<LaurentZ> a(l);
  std::vector<LaurentZ> eta_values;
  for (const auto& eta : ins.etas) {
    LaurentZ v = LaurentZ::constant(class_of(ring, eta));
    v.add(1, CohClass::constant(ring, d.pair(eta)));
    eta_values.push_back(v);
  }
  for (std::size_t j = 0; j < l; ++j) {
    LaurentZ p(ring);
    for (const auto& term : ins.items[j].poly.terms()) {
      LaurentZ mono = LaurentZ::constant(CohClass::constant(ring, term.coefficient), -1);
      for (std::size_t s = 0; s < term.exponent.size(); ++s)
        for (long e = 0; e < term.exponent[s]; ++e) mono = mono * eta_values[s];
      p += mono;
    }
    a[j] = p;
  }
  // powers A_j^n / n!
  std::vector<std::vector<LaurentZ>> powers(l);
  for (std::size_t j = 0; j < l; ++j) {
    powers[j].push_back(LaurentZ::one(ring));
    for (int n = 1; n <= t_order; ++n) powers[j].push_back(make_rational(1, n) * (powers[j].back() * a[j]));
  }
  std::map<std::vector<int>, LaurentZ> out;
  for (const auto& alpha : t_exponents(l, t_order)) {
    LaurentZ c = LaurentZ::one(ring);
    for (std::size_t j = 0; j < l && !c.is_zero(); ++j) c = c * powers[j][alpha[j]];
    if (!c.is_zero()) out.emplace(alpha, c);
  }
  return out;
}

namespace detail {

inline GradedSeries assemble(const GLSMModel& m, const InsertionSet& ins, const Rational& q_bound, int t_order,
                             SeriesState state, const std::vector<int>& hat, int threads) {
  if (t_order < 0) throw InputError("t_order must be nonnegative");
  for (const auto& eta : ins.etas)
    if (static_cast<int>(eta.size()) != m.k) throw InputError("insertion character has wrong length");
  GradedSeries s;
  s.model = m;
  s.insertions = ins;
  s.q_bound = q_bound;
  s.t_order = t_order;
  s.state = state;
  s.hat = hat;
  const auto degrees = effective_degrees(m, q_bound);
  RingCache cache(m);
  const HyperMode mode = state == SeriesState::glsm ? HyperMode::glsm : HyperMode::ambient;
  std::vector<std::vector<SeriesTerm>> slots(degrees.size());
  parallel_for(degrees.size(), threads == 0 ? engine_threads() : threads, [&](std::size_t idx) {
    const Degree& d = degrees[idx];
    SectorLabel g = sector_of_degree(m, d);
    RingPtr ring = cache.get(g);
    LaurentZ hyper = hyper_factor(m, ring, d, mode, hat);
    if (hyper.is_zero()) return;
    for (const auto& [alpha, e] : exp_factor(ring, d, ins, t_order)) {
      LaurentZ v = e * hyper;
      if (v.is_zero()) continue;
      slots[idx].push_back(SeriesTerm{d, alpha, g, theta_degree(m, d), ExactScalar(1L), v});
    }
  });
  for (auto& slot : slots)
    for (auto& t : slot) s.terms.push_back(std::move(t));
  std::stable_sort(s.terms.begin(), s.terms.end(), term_less);
  return s;
}

inline std::vector<int> complement(int r, const std::vector<int>& set) {
  std::vector<int> out;
  for (int i = 0; i < r; ++i)
    if (std::find(set.begin(), set.end(), i) == set.end()) out.push_back(i);
  return out;
}

inline std::string certificate_str(const GLSMModel& m, const std::vector<Integer>& cert) {
  std::string out;
  for (int i = 0; i < m.r; ++i) {
    if (cert[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += m.variable_names[i];
    if (cert[i] != 1) out += "^" + cert[i].get_str();
  }
  return out;
}

}  // namespace detail

/// The big I-function (ambient ranges).
inline GradedSeries big_I(const GLSMModel& m, const InsertionSet& ins, const Rational& q_bound, int t_order,
                          int threads = 0) {
  return detail::assemble(m, ins, q_bound, t_order, SeriesState::ambient, {}, threads);
}

/// The GLSM I-function for the derivative set Î = m.hat_set(). Refuses when the
/// coordinates outside Î carry a nonconstant torus-invariant monomial.
inline GradedSeries glsm_I(const GLSMModel& m, const InsertionSet& ins, const Rational& q_bound, int t_order,
                           int threads = 0) {
  const auto hat = m.hat_set();
  auto inv = invariants_trivial(m, detail::complement(m.r, hat), false);
  if (!inv.trivial)
    throw PreconditionError("glsm_I: coordinates outside the derivative set have a nonconstant invariant monomial " +
                            detail::certificate_str(m, *inv.certificate));
  return detail::assemble(m, ins, q_bound, t_order, SeriesState::glsm, hat, threads);
}

// ---------------------------------------------------------------------------

namespace detail {

inline void require_untwisted(const GradedSeries& s, const char* what) {
  for (const auto& t : s.terms)
    if (!t.phase.is_one()) throw PreconditionError(std::string(what) + ": series carries Novikov twists");
}

inline GradedSeries z_partial_multiply(const GradedSeries& s, const std::vector<IntVector>& rhos) {
  GradedSeries out = s;
  out.terms.clear();
  for (const auto& t : s.terms) {
    LaurentZ v = t.value;
    for (const auto& rho : rhos) v = v.times_linear(class_of(v.ring(), rho), t.degree.pair(rho));
    if (v.is_zero()) continue;
    SeriesTerm n = t;
    n.value = std::move(v);
    out.terms.push_back(std::move(n));
  }
  return out;
}

inline GradedSeries z_partial_insert(const GradedSeries& s, const std::vector<IntVector>& rhos, int threads) {
  InsertionSet ins = s.insertions;
  // auxiliary characters go first in a fresh list so existing polynomials keep their meaning
  InsertionSet aux;
  aux.eta_names = ins.eta_names;
  aux.etas = ins.etas;
  for (std::size_t i = 0; i < rhos.size(); ++i) {
    aux.eta_names.push_back("_dz" + std::to_string(i + 1));
    aux.etas.push_back(rhos[i]);
  }
  for (const auto& it : ins.items) {
    PotentialPolynomial p(aux.etas.size());
    for (const auto& term : it.poly.terms()) {
      Exponent e = term.exponent;
      e.resize(aux.etas.size(), 0);
      p.add(term.coefficient, e);
    }
    aux.items.push_back({it.name, p});
  }
  PotentialPolynomial prod(aux.etas.size());
  Exponent e(aux.etas.size(), 0);
  for (std::size_t i = 0; i < rhos.size(); ++i) e[ins.etas.size() + i] = 1;
  prod.add(Rational(1), e);
  aux.items.push_back({"_dz", prod});
  GradedSeries wide = assemble(s.model, aux, s.q_bound, s.t_order + 1, s.state, s.hat, threads);
  GradedSeries out = s;
  out.terms.clear();
  for (const auto& t : wide.terms) {
    if (t.alpha.back() != 1) continue;
    std::vector<int> rest(t.alpha.begin(), t.alpha.end() - 1);
    if (std::accumulate(rest.begin(), rest.end(), 0) > s.t_order) continue;
    // d/dt_aux at 0 picks the coefficient of t_aux^1; then multiply by z
    LaurentZ v(t.value.ring());
    for (const auto& [pw, c] : t.value.coefficients()) v.add(pw + 1, c);
    out.terms.push_back(SeriesTerm{t.degree, rest, t.sector, t.theta, ExactScalar(1L), v});
  }
  std::stable_sort(out.terms.begin(), out.terms.end(), term_less);
  return out;
}

}  // namespace detail

/// prod_{rho} z d/d rho applied termwise.
inline GradedSeries z_partial(const GradedSeries& s, const std::vector<IntVector>& rhos, DzMethod method,
                              int threads = 0) {
  if (s.state != SeriesState::ambient) throw PreconditionError("z_partial: series must be in the ambient state");
  for (const auto& rho : rhos)
    if (static_cast<int>(rho.size()) != s.model.k) throw InputError("z_partial: character has wrong length");
  detail::require_untwisted(s, "z_partial");
  GradedSeries out = method == DzMethod::by_multiplication ? detail::z_partial_multiply(s, rhos)
                                                           : detail::z_partial_insert(s, rhos, threads);
  for (const auto& rho : rhos) out.z_partials.push_back(rho);
  return out;
}

/// Computes both methods and throws InternalError if they disagree.
inline GradedSeries z_partial_verified(const GradedSeries& s, const std::vector<IntVector>& rhos, int threads = 0) {
  GradedSeries a = z_partial(s, rhos, DzMethod::by_multiplication, threads);
  GradedSeries b = z_partial(s, rhos, DzMethod::by_insertion, threads);
  bool same = a.terms.size() == b.terms.size();
  for (std::size_t i = 0; same && i < a.terms.size(); ++i)
    same = a.terms[i].degree == b.terms[i].degree && a.terms[i].alpha == b.terms[i].alpha &&
           a.terms[i].value == b.terms[i].value;
  if (!same) throw InternalError("z_partial: by_insertion and by_multiplication disagree");
  return a;
}

/// q^d -> q^d e^{pi i sum_j <d,tau_j>}. Rational phases are folded into the coefficients.
inline GradedSeries twist_novikov(const GradedSeries& s, const std::vector<IntVector>& taus) {
  GradedSeries out = s;
  for (const auto& tau : taus)
    if (static_cast<int>(tau.size()) != s.model.k) throw InputError("twist_novikov: character has wrong length");
  for (auto& t : out.terms) {
    Rational e = 0;
    for (const auto& tau : taus) e += t.degree.pair(tau);
    ExactScalar phase = t.phase * ExactScalar::exp_pi_i(e);
    if (phase.is_rational()) {
      t.value = phase.rational() * t.value;
      t.phase = ExactScalar(1L);
    } else {
      t.phase = phase;
    }
  }
  for (const auto& tau : taus) out.twists.push_back(tau);
  return out;
}

/// Keeps the terms with <d,theta> <= q_bound and |alpha| <= t_order.
inline GradedSeries restrict_series(const GradedSeries& s, const Rational& q_bound, int t_order) {
  if (q_bound > s.q_bound || t_order > s.t_order) throw PreconditionError("restrict_series: region exceeds the truncation");
  GradedSeries out = s;
  out.q_bound = q_bound;
  out.t_order = t_order;
  out.terms.clear();
  for (const auto& t : s.terms)
    if (t.theta <= q_bound && std::accumulate(t.alpha.begin(), t.alpha.end(), 0) <= t_order) out.terms.push_back(t);
  return out;
}

// ---------------------------------------------------------------------------

struct CtViolation {
  Degree degree;
  std::vector<int> alpha;
  RationalVector sector;
  int z_power = 0;
  std::string detail;
};

struct CompactTypeReport {
  std::vector<int> hat;
  bool hypothesis = true;
  std::string hypothesis_detail;
  std::size_t terms_checked = 0;
  std::size_t coefficients_checked = 0;
  std::vector<CtViolation> violations;
  std::vector<Degree> structurally_vanishing;  // effective degrees with no stored term
  std::string scope = "endpoint-factor divisibility only; full compact-type membership unverified";

  bool passed() const { return hypothesis && violations.empty(); }
};

inline CompactTypeReport compact_type_report(const GradedSeries& s, const GLSMModel& m) {
  CompactTypeReport rep;
  rep.hat = s.state == SeriesState::glsm ? s.hat : m.hat_set();
  auto inv = invariants_trivial(m, detail::complement(m.r, rep.hat), false);
  rep.hypothesis = inv.trivial;
  rep.hypothesis_detail = inv.trivial ? "no nonconstant invariant outside the derivative set"
                                      : "invariant monomial " + detail::certificate_str(m, *inv.certificate);
  for (const auto& t : s.terms) {
    ++rep.terms_checked;
    const RingPtr& ring = t.value.ring();
    std::vector<CohClass> factors;
    std::string names;
    for (int i : rep.hat) {
      if (!std::binary_search(t.sector.fixed_support.begin(), t.sector.fixed_support.end(), i)) continue;
      Rational D = t.degree.pair(m.column(i));
      if (!is_integer(D) || D > 0) continue;
      factors.push_back(class_of(ring, m.column(i)));
      names += (names.empty() ? "" : ",") + m.variable_names[i];
    }
    if (factors.empty()) {
      rep.coefficients_checked += t.value.coefficients().size();
      continue;
    }
    Polynomial prod = Polynomial::constant(static_cast<std::size_t>(ring->k), Rational(1));
    for (const auto& f : factors) prod = prod * f.polynomial();
    auto gens = ring->sr_ideal;
    gens.push_back(prod);
    const auto gb = groebner_basis(gens);
    for (const auto& [pw, c] : t.value.coefficients()) {
      ++rep.coefficients_checked;
      if (!reduce(c.polynomial(), gb).is_zero())
        rep.violations.push_back({t.degree, t.alpha, t.sector.lambda, pw,
                                  "coefficient " + c.str() + " not divisible by the endpoint factors of {" + names + "}"});
    }
  }
  std::set<RationalVector, bool (*)(const RationalVector&, const RationalVector&)> present(lex_less);
  for (const auto& t : s.terms) present.insert(t.degree.value);
  for (const auto& d : effective_degrees(m, s.q_bound))
    if (!present.count(d.value)) rep.structurally_vanishing.push_back(d);
  return rep;
}

// ---------------------------------------------------------------------------

/// Coordinates of a term as exact scalars keyed by (z power, staircase index).
inline std::map<std::pair<int, std::size_t>, ExactScalar> term_entries(const SeriesTerm& t) {
  std::map<std::pair<int, std::size_t>, ExactScalar> out;
  for (const auto& [pw, c] : t.value.coefficients())
    for (std::size_t i = 0; i < c.coords().size(); ++i)
      if (c.coords()[i] != 0) out.emplace(std::make_pair(pw, i), t.phase * ExactScalar(c.coords()[i]));
  return out;
}

inline std::string monomial_name(const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += m.size() == 1 ? "H" : "H" + std::to_string(i + 1);
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

struct DiffEntry {
  Degree degree;
  std::vector<int> alpha;
  int z_power = 0;
  std::string monomial;
  std::string value_a;
  std::string value_b;
};

struct DiffReport {
  Rational q_bound;
  int t_order = 0;
  std::size_t compared = 0;  // (degree, alpha) keys examined
  std::vector<DiffEntry> entries;
  bool equal() const { return entries.empty(); }
};

/// Compares a and b on the common truncation region. `name_map` renames b's
/// insertions to a's (b-name -> a-name); unmapped names must coincide.
inline DiffReport series_compare(const GradedSeries& a, const GradedSeries& b,
                                 const std::map<std::string, std::string>& name_map = {}) {
  if (canonical_model_text(a.model) != canonical_model_text(b.model))
    throw PreconditionError("series_compare: the series belong to different models");
  if (a.insertions.size() != b.insertions.size())
    throw PreconditionError("series_compare: insertion lists have different lengths");
  std::vector<int> perm(b.insertions.size());
  for (std::size_t j = 0; j < b.insertions.size(); ++j) {
    std::string nm = b.insertions.items[j].name;
    if (auto it = name_map.find(nm); it != name_map.end()) nm = it->second;
    int idx = a.insertions.index_of(nm);
    if (idx < 0) throw PreconditionError("series_compare: insertion '" + nm + "' has no counterpart");
    perm[j] = idx;
  }
  DiffReport rep;
  rep.q_bound = std::min(a.q_bound, b.q_bound);
  rep.t_order = std::min(a.t_order, b.t_order);
  auto in_region = [&](const SeriesTerm& t) {
    return t.theta <= rep.q_bound && std::accumulate(t.alpha.begin(), t.alpha.end(), 0) <= rep.t_order;
  };
  using Key = std::pair<RationalVector, std::vector<int>>;
  auto key_less = [](const Key& x, const Key& y) {
    if (x.first != y.first) return lex_less(x.first, y.first);
    return x.second < y.second;
  };
  std::map<Key, std::pair<const SeriesTerm*, SeriesTerm>, decltype(key_less)> merged(key_less);
  for (const auto& t : a.terms)
    if (in_region(t)) merged[{t.degree.value, t.alpha}].first = &t;
  for (const auto& t : b.terms) {
    if (!in_region(t)) continue;
    SeriesTerm mapped = t;
    for (std::size_t j = 0; j < perm.size(); ++j) mapped.alpha[perm[j]] = t.alpha[j];
    merged[{mapped.degree.value, mapped.alpha}].second = mapped;
  }
  for (const auto& [key, pair] : merged) {
    ++rep.compared;
    const SeriesTerm* ta = pair.first;
    const SeriesTerm* tb = pair.second.value.ring() ? &pair.second : nullptr;
    if (ta && tb && !CohClass::same_ring(ta->value.ring(), tb->value.ring()))
      throw PreconditionError("series_compare: incompatible sector rings");
    std::map<std::pair<int, std::size_t>, ExactScalar> ea, eb;
    if (ta) ea = term_entries(*ta);
    if (tb) eb = term_entries(*tb);
    const RingPtr& ring = ta ? ta->value.ring() : tb->value.ring();
    std::set<std::pair<int, std::size_t>> keys;
    for (const auto& [k, v] : ea) keys.insert(k);
    for (const auto& [k, v] : eb) keys.insert(k);
    for (const auto& k : keys) {
      ExactScalar va = ea.count(k) ? ea.at(k) : ExactScalar(0L);
      ExactScalar vb = eb.count(k) ? eb.at(k) : ExactScalar(0L);
      if (va == vb) continue;
      rep.entries.push_back({Degree{key.first}, key.second, k.first, monomial_name(ring->basis[k.second]), va.str(), vb.str()});
    }
  }
  return rep;
}

}  // namespace glsm
