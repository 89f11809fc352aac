#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace combalg {

// Exact arithmetic everywhere: arbitrary-precision integers for counts,
// arbitrary-precision rationals for series coefficients.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Normalizing constructor; the sign ends up in the numerator and the
// denominator stays positive.  Rejects den == 0.
inline Rational make_rational(Integer num, Integer den) {
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

inline Rational rational_from_strings(const std::string& num, const std::string& den) {
  return make_rational(Integer(num), Integer(den));
}

inline Integer rat_num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer rat_den(const Rational& q) { return boost::multiprecision::denominator(q); }

// "p/q", or just "p" when q == 1.
inline std::string rational_to_string(const Rational& q) {
  Integer n = rat_num(q), d = rat_den(q);
  if (d == 1) return n.str();
  return n.str() + "/" + d.str();
}

inline Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(Integer(s));
  return rational_from_strings(s.substr(0, slash), s.substr(slash + 1));
}

}  // namespace combalg
