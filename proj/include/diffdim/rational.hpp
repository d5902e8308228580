#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "errors.hpp"

namespace diffdim {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Binomial coefficient C(top, k) with the convention that C(top, k) = 0
/// whenever top < k (in particular for negative top). All staircase counting
/// goes through this convention.
inline Int binomial(const Int& top, int k) {
  if (k < 0 || top < k) return 0;
  Int num = 1;
  Int den = 1;
  for (int j = 1; j <= k; ++j) {
    num *= top - (k - j);
    den *= j;
  }
  return num / den;
}

inline Int binomial(long long top, int k) { return binomial(Int(top), k); }

inline Int factorial(int k) {
  Int r = 1;
  for (int j = 2; j <= k; ++j) r *= j;
  return r;
}

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

inline Int to_integer(const Rat& r) {
  if (!is_integer(r)) throw InternalError("expected an integer rational");
  return numerator(r);
}

/// Renders "p" for integers and "p/q" otherwise. No floating point anywhere.
inline std::string rat_to_string(const Rat& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

}  // namespace diffdim
