#pragma once

// Buchberger's algorithm over Q for the (small) Stanley-Reisner ideals of the
// sector rings, plus normal forms and the standard-monomial staircase.

#include <algorithm>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "glsm/polynomial.hpp"

namespace glsm {

/// Full reduction of f modulo the list g (leading terms first, then tails).
inline Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& g) {
  Polynomial rem(f.nvars());
  Polynomial p = f;
  while (!p.is_zero()) {
    const Monomial lm = p.leading_monomial();
    const Rational lc = p.leading_coefficient();
    bool divided = false;
    for (const auto& gi : g) {
      if (monomial_divides(gi.leading_monomial(), lm)) {
        p -= gi.scaled(lc / gi.leading_coefficient(), monomial_div(lm, gi.leading_monomial()));
        divided = true;
        break;
      }
    }
    if (!divided) {
      rem.add_term(lm, lc);
      Polynomial lead(f.nvars());
      lead.add_term(lm, lc);
      p -= lead;
    }
  }
  return rem;
}

inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  Monomial l = monomial_lcm(f.leading_monomial(), g.leading_monomial());
  return f.scaled(1 / f.leading_coefficient(), monomial_div(l, f.leading_monomial())) -
         g.scaled(1 / g.leading_coefficient(), monomial_div(l, g.leading_monomial()));
}

/// The reduced Groebner basis (monic, sorted by leading monomial descending).
inline std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& generators) {
  std::vector<Polynomial> g;
  for (const auto& f : generators)
    if (!f.is_zero()) g.push_back(f.monic());
  if (g.empty()) return g;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < g.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
  while (!pairs.empty()) {
    auto [i, j] = pairs.back();
    pairs.pop_back();
    const auto& fi = g[i].leading_monomial();
    const auto& fj = g[j].leading_monomial();
    // Buchberger's first criterion: coprime leading monomials reduce to zero
    bool coprime = true;
    for (std::size_t a = 0; a < fi.size(); ++a) coprime = coprime && (fi[a] == 0 || fj[a] == 0);
    if (coprime) continue;
    Polynomial h = reduce(s_polynomial(g[i], g[j]), g);
    if (h.is_zero()) continue;
    g.push_back(h.monic());
    for (std::size_t k = 0; k + 1 < g.size(); ++k) pairs.emplace_back(k, g.size() - 1);
  }
  // minimalize
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      const auto& li = g[i].leading_monomial();
      const auto& lj = g[j].leading_monomial();
      if (monomial_divides(lj, li) && (lj != li || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  // interreduce
  std::vector<Polynomial> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Polynomial lead(minimal[i].nvars());
    lead.add_term(minimal[i].leading_monomial(), Rational(1));
    Polynomial tail = minimal[i] - lead;
    reduced.push_back((lead + reduce(tail, others)).monic());
  }
  std::sort(reduced.begin(), reduced.end(),
            [](const Polynomial& a, const Polynomial& b) { return grevlex_greater(a.leading_monomial(), b.leading_monomial()); });
  return reduced;
}

/// Standard monomials (not divisible by any leading monomial), ascending in grevlex.
/// nullopt when some variable has no pure-power leading monomial; `missing` then names it.
inline std::optional<std::vector<Monomial>> staircase(const std::vector<Polynomial>& basis, std::size_t nvars,
                                                      std::size_t* missing = nullptr) {
  for (std::size_t a = 0; a < nvars; ++a) {
    bool pure = false;
    for (const auto& g : basis) {
      const auto& lm = g.leading_monomial();
      bool only_a = lm[a] > 0;
      for (std::size_t b = 0; b < nvars; ++b)
        if (b != a && lm[b] != 0) only_a = false;
      pure = pure || only_a;
    }
    if (!pure) {
      if (missing) *missing = a;
      return std::nullopt;
    }
  }
  auto standard = [&](const Monomial& m) {
    for (const auto& g : basis)
      if (monomial_divides(g.leading_monomial(), m)) return false;
    return true;
  };
  std::set<Monomial, GrevlexDescending> seen;
  std::vector<Monomial> frontier{Monomial(nvars, 0)};
  if (!standard(frontier[0])) return std::vector<Monomial>{};  // the unit ideal
  seen.insert(frontier[0]);
  while (!frontier.empty()) {
    std::vector<Monomial> next;
    for (const auto& m : frontier)
      for (std::size_t a = 0; a < nvars; ++a) {
        Monomial up = m;
        ++up[a];
        if (standard(up) && seen.insert(up).second) next.push_back(up);
      }
    frontier = std::move(next);
  }
  return std::vector<Monomial>(seen.rbegin(), seen.rend());
}

}  // namespace glsm
