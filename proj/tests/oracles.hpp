#pragma once

// Independent reference computations used only by the tests.

#include <functional>
#include <random>
#include <vector>

#include "glsm/model.hpp"

namespace oracles {

/// Brute force: some nonzero a >= 0 supported on keep with sum a <= bound, Q a = 0
/// (and c.a = 0 when include_r_charge).
inline bool has_small_invariant(const glsm::GLSMModel& m, const std::vector<int>& keep, bool include_r_charge, int bound) {
  std::vector<long> a(m.r, 0);
  std::function<bool(std::size_t, int)> rec = [&](std::size_t pos, int left) -> bool {
    if (pos == keep.size()) {
      bool nonzero = false;
      for (long v : a) nonzero = nonzero || v != 0;
      if (!nonzero) return false;
      for (int row = 0; row < m.k; ++row) {
        long s = 0;
        for (int i = 0; i < m.r; ++i) s += m.weights[row][i] * a[i];
        if (s != 0) return false;
      }
      if (include_r_charge) {
        long s = 0;
        for (int i = 0; i < m.r; ++i) s += m.r_charges[i] * a[i];
        if (s != 0) return false;
      }
      return true;
    }
    for (int v = 0; v <= left; ++v) {
      a[keep[pos]] = v;
      if (rec(pos + 1, left - v)) return true;
    }
    a[keep[pos]] = 0;
    return false;
  };
  return rec(0, bound);
}

struct RandomCase {
  glsm::GLSMModel model;
  std::vector<int> keep;
  bool include_r_charge = false;
};

/// Deterministic random weight matrices with k <= 3, r <= 6 and small entries.
inline std::vector<RandomCase> random_gordan_cases(int count, unsigned seed) {
  std::mt19937 gen(seed);
  std::uniform_int_distribution<int> kdist(1, 3), entry(-2, 2), cdist(0, 2), coin(0, 1);
  std::vector<RandomCase> out;
  while (static_cast<int>(out.size()) < count) {
    RandomCase c;
    auto& m = c.model;
    m.k = kdist(gen);
    m.r = std::uniform_int_distribution<int>(1, 6)(gen);
    m.weights.assign(m.k, glsm::IntVector(m.r));
    for (auto& row : m.weights)
      for (auto& v : row) v = entry(gen);
    m.r_charges.resize(m.r);
    for (auto& v : m.r_charges) v = cdist(gen);
    m.d_w = 2;
    m.theta.assign(m.k, glsm::Rational(1));
    m.variable_names = glsm::default_variable_names(m.r);
    for (int i = 0; i < m.r; ++i)
      if (coin(gen) || i == 0) c.keep.push_back(i);
    c.include_r_charge = coin(gen) == 1;
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace oracles
