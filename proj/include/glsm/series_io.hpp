#pragma once

// Series <-> JSON and the LaTeX view. JSON keys come out sorted (nlohmann's
// default object map) and rationals are reduced, so the text is canonical.

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "glsm/hash.hpp"
#include "glsm/series.hpp"

namespace glsm {

inline constexpr const char* kSeriesFormat = "glsm-series/1";

namespace detail {

inline nlohmann::json rationals_json(const RationalVector& v) { return to_strings(v); }

inline RationalVector rationals_from(const nlohmann::json& j) {
  RationalVector out;
  for (const auto& x : j) out.push_back(detail::json_rational(x));
  return out;
}

inline nlohmann::json scalar_json(const ExactScalar& s) {
  if (s.is_rational()) return s.rational().get_str();
  auto c = s.cyclotomic();
  return {{"zeta_order", c.order()}, {"coeffs", to_strings(c.coeffs())}};
}

inline ExactScalar scalar_from(const nlohmann::json& j) {
  if (j.is_string()) return ExactScalar(detail::json_rational(j));
  if (!j.is_object() || !j.contains("zeta_order") || !j.contains("coeffs"))
    throw InputError("scalar must be a rational string or {zeta_order, coeffs}");
  return ExactScalar(Cyclotomic(j.at("zeta_order").get<long>(), rationals_from(j.at("coeffs"))));
}

inline nlohmann::json int_rows(const std::vector<IntVector>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : rows) out.push_back(r);
  return out;
}

inline std::vector<IntVector> int_rows_from(const nlohmann::json& j) {
  std::vector<IntVector> out;
  for (const auto& r : j) out.push_back(r.get<IntVector>());
  return out;
}

}  // namespace detail

inline nlohmann::json series_to_json(const GradedSeries& s) {
  nlohmann::json j;
  j["format"] = kSeriesFormat;
  j["state"] = state_name(s.state);
  j["model"] = model_to_json(s.model);
  j["model_hash"] = sha256_hex(canonical_model_text(s.model));
  j["truncation"] = {{"q_bound", s.q_bound.get_str()}, {"t_order", s.t_order}};
  // only the criterion-effective degrees are enumerated; absent terms are zero
  j["effectivity"] = "criterion-effective";

  nlohmann::json etas = nlohmann::json::array();
  for (std::size_t i = 0; i < s.insertions.etas.size(); ++i)
    etas.push_back({{"name", s.insertions.eta_names[i]}, {"character", s.insertions.etas[i]}});
  nlohmann::json items = nlohmann::json::array();
  for (const auto& it : s.insertions.items)
    items.push_back({{"name", it.name}, {"poly", it.poly.str(s.insertions.eta_names)}});
  j["insertions"] = {{"etas", etas}, {"items", items}};

  std::vector<int> hat1;
  for (int i : s.hat) hat1.push_back(i + 1);
  j["hat"] = hat1;
  j["z_partials"] = detail::int_rows(s.z_partials);
  j["twists"] = detail::int_rows(s.twists);

  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : s.terms) {
    nlohmann::json tj;
    tj["degree"] = detail::rationals_json(t.degree.value);
    tj["theta_degree"] = t.theta.get_str();
    tj["sector_lambda"] = detail::rationals_json(t.sector.lambda);
    tj["t_exponent"] = t.alpha;
    if (!t.phase.is_one()) tj["phase"] = detail::scalar_json(t.phase);
    nlohmann::json z = nlohmann::json::object();
    for (const auto& [pw, cls] : t.value.coefficients()) {
      nlohmann::json c = nlohmann::json::object();
      for (std::size_t i = 0; i < cls.coords().size(); ++i)
        if (cls.coords()[i] != 0) c[monomial_name(cls.ring()->basis[i])] = cls.coords()[i].get_str();
      z[std::to_string(pw)] = c;
    }
    tj["z"] = z;
    terms.push_back(tj);
  }
  j["terms"] = terms;
  return j;
}

inline std::string serialize_series(const GradedSeries& s) { return series_to_json(s).dump(2) + "\n"; }

inline GradedSeries series_from_json(const nlohmann::json& j) {
  try {
    if (j.value("format", "") != kSeriesFormat) throw InputError("not a series file (format must be " + std::string(kSeriesFormat) + ")");
    GradedSeries s;
    s.model = model_from_json(j.at("model"));
    if (j.at("model_hash").get<std::string>() != sha256_hex(canonical_model_text(s.model)))
      throw InputError("model_hash does not match the embedded model");
    const std::string state = j.at("state").get<std::string>();
    if (state == "ambient") s.state = SeriesState::ambient;
    else if (state == "glsm") s.state = SeriesState::glsm;
    else throw InputError("unknown series state '" + state + "'");
    s.q_bound = detail::json_rational(j.at("truncation").at("q_bound"));
    s.t_order = j.at("truncation").at("t_order").get<int>();
    if (s.t_order < 0) throw InputError("t_order must be nonnegative");

    for (const auto& e : j.at("insertions").at("etas")) {
      auto xi = e.at("character").get<IntVector>();
      if (static_cast<int>(xi.size()) != s.model.k) throw InputError("character length must equal k");
      s.insertions.eta_names.push_back(e.at("name").get<std::string>());
      s.insertions.etas.push_back(std::move(xi));
    }
    for (const auto& it : j.at("insertions").at("items"))
      add_insertion(s.insertions, it.at("name").get<std::string>() + "=" + it.at("poly").get<std::string>());

    for (int i : j.at("hat").get<std::vector<int>>()) {
      if (i < 1 || i > s.model.r) throw InputError("hat index out of range");
      s.hat.push_back(i - 1);
    }
    s.z_partials = detail::int_rows_from(j.at("z_partials"));
    s.twists = detail::int_rows_from(j.at("twists"));

    RingCache rings(s.model);
    for (const auto& tj : j.at("terms")) {
      SeriesTerm t;
      t.degree = Degree{detail::rationals_from(tj.at("degree"))};
      if (static_cast<int>(t.degree.value.size()) != s.model.k) throw InputError("degree length must equal k");
      t.theta = theta_degree(s.model, t.degree);
      if (t.theta != detail::json_rational(tj.at("theta_degree"))) throw InputError("theta_degree does not match degree");
      t.sector = sector_of_degree(s.model, t.degree);
      if (t.sector.lambda != detail::rationals_from(tj.at("sector_lambda")))
        throw InputError("sector_lambda does not match degree");
      t.alpha = tj.at("t_exponent").get<std::vector<int>>();
      if (t.alpha.size() != s.insertions.size()) throw InputError("t_exponent length must equal the insertion count");
      if (tj.contains("phase")) t.phase = detail::scalar_from(tj.at("phase"));
      RingPtr ring = rings.get(t.sector);
      std::map<std::string, std::size_t> by_name;
      for (std::size_t i = 0; i < ring->dim(); ++i) by_name[monomial_name(ring->basis[i])] = i;
      t.value = LaurentZ(ring);
      for (const auto& [pw, cj] : tj.at("z").items()) {
        std::vector<Rational> coords(ring->dim(), Rational(0));
        for (const auto& [mono, v] : cj.items()) {
          auto it = by_name.find(mono);
          if (it == by_name.end()) throw InputError("monomial '" + mono + "' is not in the sector basis");
          coords[it->second] = detail::json_rational(v);
        }
        t.value.add(std::stoi(pw), CohClass(ring, std::move(coords)));
      }
      s.terms.push_back(std::move(t));
    }
    if (!std::is_sorted(s.terms.begin(), s.terms.end(), term_less)) throw InputError("series terms are not in canonical order");
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed series JSON: ") + e.what());
  } catch (const std::invalid_argument&) {
    throw InputError("malformed z power in series JSON");
  }
}

inline GradedSeries parse_series(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("series JSON parse error: ") + e.what());
  }
  return series_from_json(j);
}

// ---------------------------------------------------------------------------
// LaTeX

namespace detail {

inline std::string latex_rational(const Rational& q) {
  if (is_integer(q)) return q.get_str();
  std::string sign = q < 0 ? "-" : "";
  Rational a = abs(q);
  return sign + "\\frac{" + a.get_num().get_str() + "}{" + a.get_den().get_str() + "}";
}

inline std::string latex_power(const std::string& base, const Rational& e) {
  if (e == 0) return "";
  if (e == 1) return base;
  return base + "^{" + latex_rational(e) + "}";
}

inline std::string latex_symbol(const std::string& name) {
  auto cut = name.find_last_not_of("0123456789");
  if (cut == std::string::npos || cut + 1 == name.size()) return name;
  return name.substr(0, cut + 1) + "_{" + name.substr(cut + 1) + "}";
}

inline std::string latex_monomial(const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    std::string h = m.size() == 1 ? "H" : "H_{" + std::to_string(i + 1) + "}";
    out += latex_power(h, Rational(m[i]));
  }
  return out;
}

inline std::string latex_scalar(const ExactScalar& s) {
  if (s.is_rational()) return latex_rational(s.rational());
  auto c = s.cyclotomic();
  std::string out;
  for (std::size_t i = 0; i < c.coeffs().size(); ++i) {
    const Rational& a = c.coeffs()[i];
    if (a == 0) continue;
    std::string zeta = i == 0 ? "" : latex_power("\\zeta_{" + std::to_string(c.order()) + "}", Rational(static_cast<long>(i)));
    std::string mag = abs(a) == 1 && !zeta.empty() ? "" : latex_rational(abs(a));
    out += out.empty() ? (a < 0 ? "-" : "") : (a < 0 ? " - " : " + ");
    out += mag + zeta;
  }
  return out;
}

// "z^{-2} - 2H z^{-3}": z powers descending, staircase order inside each power
inline std::vector<std::string> latex_body(const LaurentZ& v) {
  std::vector<std::string> parts;
  const auto& cs = v.coefficients();
  for (auto it = cs.rbegin(); it != cs.rend(); ++it) {
    const auto& [pw, cls] = *it;
    for (std::size_t i = 0; i < cls.coords().size(); ++i) {
      const Rational& c = cls.coords()[i];
      if (c == 0) continue;
      std::string mono = latex_monomial(cls.ring()->basis[i]);
      std::string z = latex_power("z", Rational(pw));
      std::string rest = mono + (!mono.empty() && !z.empty() ? " " : "") + z;
      std::string mag = abs(c) == 1 && !rest.empty() ? "" : latex_rational(abs(c));
      parts.push_back((c < 0 ? "-" : "") + mag + rest);
    }
  }
  return parts;
}

}  // namespace detail

inline std::string render_latex(const GradedSeries& s) {
  std::string out;
  for (const auto& t : s.terms) {
    std::string prefix;
    for (int a = 0; a < s.model.k; ++a)
      prefix += detail::latex_power(s.model.k == 1 ? "q" : "q_{" + std::to_string(a + 1) + "}", t.degree.value[a]);
    for (std::size_t j = 0; j < t.alpha.size(); ++j)
      prefix += detail::latex_power(detail::latex_symbol(s.insertions.items[j].name), Rational(t.alpha[j]));
    if (!t.phase.is_one()) prefix = "(" + detail::latex_scalar(t.phase) + ")" + prefix;

    auto parts = detail::latex_body(t.value);
    if (parts.empty()) continue;
    std::string body;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i == 0) body = parts[i];
      else if (parts[i][0] == '-') body += " - " + parts[i].substr(1);
      else body += " + " + parts[i];
    }
    bool negative = false;
    if (parts.size() == 1) {
      if (body[0] == '-') {
        negative = true;
        body = body.substr(1);
      }
      if (body == "1") body.clear();
    } else {
      body = "(" + body + ")";
    }

    std::string lambda;
    for (std::size_t a = 0; a < t.sector.lambda.size(); ++a)
      lambda += (a ? "," : "") + detail::latex_rational(t.sector.lambda[a]);
    std::string term = prefix + (!prefix.empty() && !body.empty() ? "\\," : "") + body + "\\mathbb{1}_{(" + lambda + ")}";

    if (out.empty()) out = (negative ? "-" : "") + term;
    else out += (negative ? " - " : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

inline std::string join_strings(const std::vector<std::string>& v, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

/// Plain-text view: one line per term.
inline std::string render_text(const GradedSeries& s) {
  std::string out = "# " + std::string(state_name(s.state)) + " series, q_bound " + s.q_bound.get_str() + ", t_order " +
                    std::to_string(s.t_order) + ", " + std::to_string(s.terms.size()) + " terms\n";
  for (const auto& t : s.terms) {
    out += "d=(" + join_strings(to_strings(t.degree.value), ",") + ") alpha=(";
    for (std::size_t j = 0; j < t.alpha.size(); ++j) out += (j ? "," : "") + std::to_string(t.alpha[j]);
    out += ") sector=(" + join_strings(to_strings(t.sector.lambda), ",") + ")";
    if (!t.phase.is_one()) out += " phase=" + t.phase.str();
    out += " : " + t.value.str() + "\n";
  }
  return out;
}

}  // namespace glsm
