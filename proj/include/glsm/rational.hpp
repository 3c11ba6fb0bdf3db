#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace glsm {

using Integer = mpz_class;
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;
using IntVector = std::vector<long>;
using IntMatrix = std::vector<IntVector>;

/// Malformed user input (bad file, bad flag, dimension mismatch). Maps to exit code 2.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// A broken invariant inside the engine. Maps to exit code 3.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

/// A mathematical precondition the caller asked us to rely on does not hold
/// (e.g. the GLSM hypothesis). Maps to exit code 1.
class PreconditionError : public std::runtime_error {
 public:
  explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Integer floor_of(const Rational& q) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

inline Integer ceil_of(const Rational& q) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

/// Fractional part in [0, 1).
inline Rational frac(const Rational& q) { return q - Rational(floor_of(q)); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline Integer lcm_of(const Integer& a, const Integer& b) {
  Integer out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

inline Integer gcd_of(const Integer& a, const Integer& b) {
  Integer out;
  mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

inline long to_long(const Integer& z) {
  if (!z.fits_slong_p()) throw InternalError("integer overflow converting " + z.get_str());
  return z.get_si();
}

/// "p/q" or "p"; rejects zero denominators and non-reduced input.
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto strip = [](std::string& v) {
    while (!v.empty() && (v.front() == ' ' || v.front() == '\t')) v.erase(v.begin());
    while (!v.empty() && (v.back() == ' ' || v.back() == '\t')) v.pop_back();
  };
  strip(s);
  if (s.empty()) throw InputError("empty rational");
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  strip(num);
  strip(den);
  auto valid_int = [](const std::string& v, bool allow_sign) {
    if (v.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (v[0] == '-' || v[0] == '+')) i = 1;
    if (i == v.size()) return false;
    for (; i < v.size(); ++i)
      if (v[i] < '0' || v[i] > '9') return false;
    return true;
  };
  if (!valid_int(num, true) || !valid_int(den, false)) throw InputError("malformed rational '" + s + "'");
  if (num[0] == '+') num.erase(num.begin());
  Integer n(num), d(den);
  if (d == 0) throw InputError("zero denominator in rational '" + s + "'");
  if (gcd_of(n, d) != 1 && n != 0) throw InputError("rational '" + s + "' is not reduced");
  if (n == 0 && d != 1) throw InputError("rational '" + s + "' is not reduced");
  return Rational(n, d);
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline std::vector<std::string> to_strings(const RationalVector& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const auto& q : v) out.push_back(q.get_str());
  return out;
}

inline Rational dot(const RationalVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw InternalError("dot: length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Rational dot(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw InternalError("dot: length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline bool lex_less(const RationalVector& a, const RationalVector& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] < b[i]) return true;
    if (b[i] < a[i]) return false;
  }
  return a.size() < b.size();
}

inline Rational factorial(long n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(out);
}

}  // namespace glsm
