#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <stdexcept>
#include <string>

namespace symcurv {

// Exact rational scalar. boost keeps the canonical reduced form
// (gcd 1, positive denominator) after every operation, so equality
// tests are plain comparisons.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational rat(long long num, long long den = 1) {
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  return Rational(num, den);
}

// Accepts "p", "-p", "p/q" with optional surrounding whitespace.
inline std::optional<Rational> try_parse_rational(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t");
  std::size_t e = s.find_last_not_of(" \t");
  if (b == std::string::npos) return std::nullopt;
  std::string t = s.substr(b, e - b + 1);
  if (t.empty()) return std::nullopt;
  std::size_t slash = t.find('/');
  auto is_int = [](const std::string& u) {
    if (u.empty()) return false;
    std::size_t i = (u[0] == '-' || u[0] == '+') ? 1 : 0;
    if (i == u.size()) return false;
    for (; i < u.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(u[i]))) return false;
    return true;
  };
  try {
    if (slash == std::string::npos) {
      if (!is_int(t)) return std::nullopt;
      return Rational(Int(t));
    }
    std::string num = t.substr(0, slash), den = t.substr(slash + 1);
    if (!is_int(num) || !is_int(den)) return std::nullopt;
    Int d(den);
    if (d == 0) return std::nullopt;
    return Rational(Int(num), d);
  } catch (...) {
    return std::nullopt;
  }
}

inline Rational parse_rational(const std::string& s) {
  auto r = try_parse_rational(s);
  if (!r) throw std::invalid_argument("cannot parse rational: '" + s + "'");
  return *r;
}

inline std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace symcurv
