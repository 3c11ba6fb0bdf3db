#pragma once

// JSON views of the reports produced by validation, GIT and the series checks.

#include <string>
#include <vector>

#include <json.hpp>

#include "glsm/coh_ring.hpp"
#include "glsm/series_io.hpp"
#include "glsm/specializations.hpp"
#include "glsm/validate.hpp"

namespace glsm {

namespace detail {

inline std::vector<int> one_based(const std::vector<int>& v) {
  std::vector<int> out;
  for (int i : v) out.push_back(i + 1);
  return out;
}

inline nlohmann::json checks_json(const std::vector<CheckResult>& cs) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : cs) out.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return out;
}

}  // namespace detail

inline nlohmann::json validation_json(const ValidationReport& rep) {
  return {{"overall", rep.overall()}, {"checks", detail::checks_json(rep.checks)}, {"warnings", detail::checks_json(rep.warnings)}};
}

inline nlohmann::json sectors_json(const GLSMModel& m) {
  nlohmann::json out = nlohmann::json::array();
  RingCache cache(m);
  for (const auto& g : inertia_sectors(m)) {
    RingPtr ring = cache.get(g);
    nlohmann::json sr = nlohmann::json::array();
    for (const auto& s : ring->sr_sets) sr.push_back(detail::one_based(s));
    std::vector<std::string> basis;
    for (const auto& b : ring->basis) basis.push_back(monomial_name(b));
    out.push_back({{"lambda", to_strings(g.lambda)},
                   {"action", to_strings(g.action)},
                   {"fixed_support", detail::one_based(g.fixed_support)},
                   {"sr_generators", sr},
                   {"basis", basis},
                   {"dimension", ring->dim()}});
  }
  return {{"sectors", out}};
}

inline nlohmann::json effective_json(const GLSMModel& m, const Rational& bound) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& d : effective_degrees(m, bound))
    out.push_back({{"degree", to_strings(d.value)},
                   {"theta_degree", theta_degree(m, d).get_str()},
                   {"sector_lambda", to_strings(sector_of_degree(m, d).lambda)}});
  return {{"q_bound", bound.get_str()}, {"degrees", out}};
}

inline nlohmann::json compact_type_json(const CompactTypeReport& rep) {
  nlohmann::json v = nlohmann::json::array();
  for (const auto& x : rep.violations)
    v.push_back({{"degree", to_strings(x.degree.value)},
                 {"t_exponent", x.alpha},
                 {"sector_lambda", to_strings(x.sector)},
                 {"z_power", x.z_power},
                 {"detail", x.detail}});
  nlohmann::json vanish = nlohmann::json::array();
  for (const auto& d : rep.structurally_vanishing) vanish.push_back(to_strings(d.value));
  return {{"passed", rep.passed()},
          {"hat", detail::one_based(rep.hat)},
          {"hypothesis", rep.hypothesis},
          {"hypothesis_detail", rep.hypothesis_detail},
          {"terms_checked", rep.terms_checked},
          {"coefficients_checked", rep.coefficients_checked},
          {"violations", v},
          {"structurally_vanishing", vanish},
          {"scope", rep.scope}};
}

inline nlohmann::json diff_json(const DiffReport& rep) {
  nlohmann::json e = nlohmann::json::array();
  for (const auto& x : rep.entries)
    e.push_back({{"degree", to_strings(x.degree.value)},
                 {"t_exponent", x.alpha},
                 {"z_power", x.z_power},
                 {"monomial", x.monomial},
                 {"a", x.value_a},
                 {"b", x.value_b}});
  return {{"equal", rep.equal()},
          {"status", rep.equal() ? "equal on common truncation" : "differ on common truncation"},
          {"common_truncation", {{"q_bound", rep.q_bound.get_str()}, {"t_order", rep.t_order}}},
          {"compared_terms", rep.compared},
          {"differences", e}};
}

inline nlohmann::json ci_json(const CiReport& rep) {
  return {{"passed", rep.passed()},
          {"diff", diff_json(rep.diff)},
          {"euler_violations", rep.euler_violations},
          {"level", rep.level},
          {"pairing_assumption", rep.pairing_assumption}};
}

}  // namespace glsm
