#pragma once

#include <initializer_list>
#include <random>
#include <utility>

#include "wreath/decider.hpp"

namespace testing_support {

using namespace wreath;

/// lp({{3, 2}, {1, -1}}) = 3X^2 + X^-1
inline LaurentPoly lp(std::initializer_list<std::pair<Rational, Exponent>> terms) {
  std::vector<LaurentPoly::Term> t;
  for (const auto& [c, e] : terms) t.push_back({e, c});
  return LaurentPoly::from_terms(std::move(t));
}

inline LaurentPoly X(Exponent e = 1) { return LaurentPoly::x_pow(e); }

inline WreathElem el(const LaurentPoly& y, Exponent b) { return {RatFunc(y), b}; }

inline LaurentPoly random_poly(std::mt19937_64& rng, Exponent lo, Exponent hi, int cmin, int cmax) {
  std::uniform_int_distribution<int> c(cmin, cmax);
  std::vector<LaurentPoly::Term> t;
  for (Exponent e = lo; e <= hi; ++e) t.push_back({e, Rational(c(rng))});
  return LaurentPoly::from_terms(std::move(t));
}

template <class Fn>
bool throws_kind(Fn&& fn, ErrorKind kind) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind() == kind;
  }
  return false;
}

}  // namespace testing_support
