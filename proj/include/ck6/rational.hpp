#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace ck6 {

// Exact rational scalar. cpp_rational keeps values in lowest terms with a
// positive denominator, which is exactly the invariant we need.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rational make_rational(BigInt num, BigInt den) {
  if (den == 0) throw std::domain_error("rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(std::move(num), std::move(den));
}

// Generalized binomial coefficient gamma*(gamma-1)*...*(gamma-i+1) / i!,
// defined for rational gamma and integer i >= 0.
inline Rational binomial(const Rational& gamma, int i) {
  if (i < 0) throw std::domain_error("binomial: negative lower index");
  Rational result(1);
  for (int k = 0; k < i; ++k) {
    result *= (gamma - k);
    result /= (k + 1);
  }
  return result;
}

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

inline long to_long(const Rational& r) {
  if (!is_integer(r)) throw std::domain_error("to_long: not an integer");
  return static_cast<long>(numerator(r));
}

inline std::string to_string(const Rational& r) { return r.str(); }

}  // namespace ck6
