#pragma once

// A torus GLSM (V, G, theta, w): weight matrix, R-charges, stability character
// and optional potential, together with the JSON model-file reader/writer.

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "glsm/rational.hpp"

namespace glsm {

using Exponent = std::vector<long>;

struct PotentialTerm {
  Rational coefficient;
  Exponent exponent;
};

/// Sparse polynomial in x_1..x_r with rational coefficients. Terms are merged
/// by exponent, zero coefficients are dropped.
class PotentialPolynomial {
 public:
  PotentialPolynomial() = default;
  explicit PotentialPolynomial(std::size_t nvars) : nvars_(nvars) {}

  void add(const Rational& c, const Exponent& e) {
    if (e.size() != nvars_) throw InputError("potential term has wrong number of variables");
    auto& slot = terms_[e];
    slot += c;
    if (slot == 0) terms_.erase(e);
  }

  std::vector<PotentialTerm> terms() const {
    std::vector<PotentialTerm> out;
    for (const auto& [e, c] : terms_) out.push_back({c, e});
    return out;
  }
  std::size_t nvars() const { return nvars_; }
  bool empty() const { return terms_.empty(); }

  std::string str(const std::vector<std::string>& names) const;

  friend bool operator==(const PotentialPolynomial& a, const PotentialPolynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  std::size_t nvars_ = 0;
  std::map<Exponent, Rational> terms_;
};

struct GLSMModel {
  int r = 0;
  int k = 0;
  IntMatrix weights;      // k x r; column i is the character rho_i
  IntVector r_charges;    // c_i
  long d_w = 1;
  RationalVector theta;   // length k
  std::optional<PotentialPolynomial> potential;
  bool assert_critical_proper = false;
  std::vector<std::string> variable_names;    // x1..xr unless overridden
  std::optional<std::vector<int>> derivative_set;  // 0-based; default {i : c_i != 0}

  IntVector column(int i) const {
    IntVector c(k);
    for (int a = 0; a < k; ++a) c[a] = weights[a][i];
    return c;
  }

  std::vector<int> hat_set() const {
    if (derivative_set) return *derivative_set;
    std::vector<int> out;
    for (int i = 0; i < r; ++i)
      if (r_charges[i] != 0) out.push_back(i);
    return out;
  }

  friend bool operator==(const GLSMModel& a, const GLSMModel& b) {
    return a.r == b.r && a.k == b.k && a.weights == b.weights && a.r_charges == b.r_charges && a.d_w == b.d_w &&
           a.theta == b.theta && a.potential == b.potential && a.assert_critical_proper == b.assert_critical_proper &&
           a.variable_names == b.variable_names && a.derivative_set == b.derivative_set;
  }
};

inline std::vector<std::string> default_variable_names(int r) {
  std::vector<std::string> names;
  for (int i = 1; i <= r; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

inline std::string PotentialPolynomial::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  // highest exponents first reads more naturally
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = abs(c);
    if (!first) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    first = false;
    bool any_var = false;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (any_var) mono += "*";
      mono += names[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
      any_var = true;
    }
    if (!any_var) out += mag.get_str();
    else if (mag == 1) out += mono;
    else out += mag.get_str() + "*" + mono;
  }
  return out;
}

/// Parses `coeff*x1^5*x2 + ...` over the given variable names.
inline PotentialPolynomial parse_polynomial(const std::string& text, const std::vector<std::string>& names) {
  PotentialPolynomial poly(names.size());
  std::size_t pos = 0;
  auto fail = [&](const std::string& msg) -> void {
    throw InputError("polynomial syntax error at position " + std::to_string(pos + 1) + ": " + msg + " in '" + text + "'");
  };
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_uint = [&]() -> std::string {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    return text.substr(start, pos - start);
  };
  auto read_ident = [&]() -> std::string {
    std::size_t start = pos;
    while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) ++pos;
    return text.substr(start, pos - start);
  };
  skip();
  if (pos == text.size()) fail("empty polynomial");
  bool first = true;
  while (true) {
    skip();
    if (pos == text.size()) break;
    Rational sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      if (text[pos] == '-') sign = -1;
      ++pos;
      skip();
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    first = false;
    Rational coeff = 1;
    Exponent e(names.size(), 0);
    bool have_factor = false;
    while (true) {
      skip();
      if (pos >= text.size()) fail("dangling operator");
      if (std::isdigit(static_cast<unsigned char>(text[pos]))) {
        std::string num = read_uint();
        std::string den = "1";
        skip();
        if (pos < text.size() && text[pos] == '/') {
          ++pos;
          skip();
          den = read_uint();
          if (den.empty()) fail("expected denominator");
        }
        coeff *= parse_rational(num + "/" + den);
      } else {
        std::string id = read_ident();
        if (id.empty()) fail("expected a number or variable");
        auto it = std::find(names.begin(), names.end(), id);
        if (it == names.end()) fail("unknown variable '" + id + "'");
        long power = 1;
        skip();
        if (pos < text.size() && text[pos] == '^') {
          ++pos;
          skip();
          std::string p = read_uint();
          if (p.empty()) fail("expected exponent");
          power = std::stol(p);
        }
        e[static_cast<std::size_t>(it - names.begin())] += power;
      }
      have_factor = true;
      skip();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        continue;
      }
      break;
    }
    if (!have_factor) fail("empty term");
    poly.add(sign * coeff, e);
  }
  return poly;
}

namespace detail {

inline std::string line_col(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

inline Rational json_rational(const nlohmann::json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw InputError("expected a rational string \"p/q\"");
}

}  // namespace detail

/// Builds a model from an already-parsed JSON object (also used for embedded models).
inline GLSMModel model_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InputError("model must be a JSON object");
  for (const char* key : {"r", "k", "weights", "r_charges", "d_w", "theta"})
    if (!j.contains(key)) throw InputError(std::string("model is missing field '") + key + "'");
  GLSMModel m;
  try {
    m.r = j.at("r").get<int>();
    m.k = j.at("k").get<int>();
    m.weights = j.at("weights").get<IntMatrix>();
    m.r_charges = j.at("r_charges").get<IntVector>();
    m.d_w = j.at("d_w").get<long>();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("model field has wrong type: ") + e.what());
  }
  if (m.r <= 0 || m.k <= 0) throw InputError("r and k must be positive");
  if (static_cast<int>(m.weights.size()) != m.k)
    throw InputError("dimension mismatch: weights has " + std::to_string(m.weights.size()) + " rows, k = " + std::to_string(m.k));
  for (const auto& row : m.weights)
    if (static_cast<int>(row.size()) != m.r)
      throw InputError("dimension mismatch: weights row has " + std::to_string(row.size()) + " columns, r = " + std::to_string(m.r));
  if (static_cast<int>(m.r_charges.size()) != m.r)
    throw InputError("dimension mismatch: r_charges has length " + std::to_string(m.r_charges.size()) + ", weights have " +
                     std::to_string(m.r) + " columns");
  if (m.d_w <= 0) throw InputError("d_w must be positive");
  const auto& th = j.at("theta");
  if (!th.is_array() || static_cast<int>(th.size()) != m.k) throw InputError("dimension mismatch: theta must have length k");
  for (const auto& x : th) m.theta.push_back(detail::json_rational(x));
  bool nonzero = false;
  for (const auto& x : m.theta) nonzero = nonzero || x != 0;
  if (!nonzero) throw InputError("theta must be nonzero");

  m.variable_names = default_variable_names(m.r);
  if (j.contains("variables") && !j.at("variables").is_null()) {
    m.variable_names = j.at("variables").get<std::vector<std::string>>();
    if (static_cast<int>(m.variable_names.size()) != m.r) throw InputError("dimension mismatch: variables must have length r");
    std::set<std::string> seen(m.variable_names.begin(), m.variable_names.end());
    if (seen.size() != m.variable_names.size()) throw InputError("duplicate variable name");
  }
  if (j.contains("potential") && !j.at("potential").is_null())
    m.potential = parse_polynomial(j.at("potential").get<std::string>(), m.variable_names);
  if (j.contains("assert_critical_proper")) m.assert_critical_proper = j.at("assert_critical_proper").get<bool>();
  if (j.contains("derivative_set") && !j.at("derivative_set").is_null()) {
    std::vector<int> s;
    for (int idx : j.at("derivative_set").get<std::vector<int>>()) {
      if (idx < 1 || idx > m.r) throw InputError("derivative_set index out of range");
      s.push_back(idx - 1);
    }
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    m.derivative_set = s;
  }
  return m;
}

inline GLSMModel parse_model(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("syntax error at " + detail::line_col(text, e.byte == 0 ? 0 : e.byte - 1) + ": " + e.what());
  }
  return model_from_json(j);
}

inline nlohmann::json model_to_json(const GLSMModel& m) {
  nlohmann::json j;
  j["r"] = m.r;
  j["k"] = m.k;
  j["weights"] = m.weights;
  j["r_charges"] = m.r_charges;
  j["d_w"] = m.d_w;
  j["theta"] = to_strings(m.theta);
  j["potential"] = m.potential ? nlohmann::json(m.potential->str(m.variable_names)) : nlohmann::json(nullptr);
  j["assert_critical_proper"] = m.assert_critical_proper;
  if (m.variable_names != default_variable_names(m.r)) j["variables"] = m.variable_names;
  if (m.derivative_set) {
    std::vector<int> one_based;
    for (int i : *m.derivative_set) one_based.push_back(i + 1);
    j["derivative_set"] = one_based;
  }
  return j;
}

/// Canonical text: sorted keys, no whitespace. Used for hashing.
inline std::string canonical_model_text(const GLSMModel& m) { return model_to_json(m).dump(); }

inline std::string serialize_model(const GLSMModel& m) { return model_to_json(m).dump(2) + "\n"; }

}  // namespace glsm
