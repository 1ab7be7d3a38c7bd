#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace hlp {

// Every scalar in the system. Arbitrary precision, always canonical:
// lowest terms, positive denominator. No rounding anywhere.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline int sign_of(const Rational& r) { return r.sign(); }

inline bool is_integral(const Rational& r) { return denominator(r) == 1; }

// Renders "p" for integers and "p/q" otherwise.
inline std::string to_string(const Rational& r) {
  if (is_integral(r)) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

// Accepts "p", "-p", "p/q" with optional surrounding whitespace. Floats are
// rejected on purpose: inputs must be bit-exact.
inline Rational parse_rational(const std::string& text) {
  std::size_t begin = text.find_first_not_of(" \t");
  std::size_t end = text.find_last_not_of(" \t");
  if (begin == std::string::npos)
    throw std::invalid_argument("empty rational literal");
  std::string body = text.substr(begin, end - begin + 1);
  for (char c : body) {
    if (c == '.' || c == 'e' || c == 'E')
      throw std::invalid_argument("rational literal '" + body +
                                  "' must be written as \"p\" or \"p/q\", not a float");
  }
  std::size_t slash = body.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(body));
    Integer num(body.substr(0, slash));
    Integer den(body.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    return Rational(num, den);
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed rational literal '" + body + "'");
  }
}

// Exact square root when r is the square of a rational; nullopt otherwise.
inline std::optional<Rational> rational_sqrt(const Rational& r) {
  if (r < 0) return std::nullopt;
  Integer num = numerator(r), den = denominator(r);
  Integer sn = boost::multiprecision::sqrt(num);
  Integer sd = boost::multiprecision::sqrt(den);
  if (sn * sn != num || sd * sd != den) return std::nullopt;
  return Rational(sn, sd);
}

}  // namespace hlp
