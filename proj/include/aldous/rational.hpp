#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace aldous {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Exact: every finite double is a dyadic rational.
inline Rational to_rational(double x) { return Rational(x); }

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

inline std::string to_string(const Rational& q) { return q.str(); }

inline Rational rational_power(long long base, int exponent) {
  Rational r = 1;
  const Rational b = base;
  for (int i = 0; i < (exponent < 0 ? -exponent : exponent); ++i) r *= b;
  return exponent < 0 ? Rational(1) / r : r;
}

}  // namespace aldous
