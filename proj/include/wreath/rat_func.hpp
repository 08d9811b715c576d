#pragma once

#include <string>

#include "wreath/laurent_poly.hpp"

namespace wreath {

/// num / den with den != 0. Not normalised unless asked; equality is by
/// cross-multiplication.
class RatFunc {
 public:
  RatFunc() : num_(), den_(1) {}
  RatFunc(const LaurentPoly& p) : num_(p), den_(1) {}  // NOLINT
  RatFunc(const Rational& c) : num_(c), den_(1) {}  // NOLINT
  RatFunc(long c) : RatFunc(Rational(c)) {}  // NOLINT
  RatFunc(int c) : RatFunc(Rational(c)) {}  // NOLINT
  /// Throws Error(ZeroDenominator).
  RatFunc(LaurentPoly num, LaurentPoly den);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFunc operator-() const { return RatFunc(-num_, den_, Unchecked{}); }
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  /// Throws Error(ZeroDenominator) when b = 0.
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  friend bool operator==(const RatFunc& a, const RatFunc& b);

  RatFunc shifted(Exponent k) const { return RatFunc(num_.shifted(k), den_, Unchecked{}); }
  RatFunc reflected() const { return RatFunc(num_.reflected(), den_.reflected(), Unchecked{}); }

  /// Cancel the gcd, make den have low() = 0 and leading coefficient 1.
  RatFunc normalized() const;
  /// If den divides num, the quotient.
  bool as_laurent(LaurentPoly* out) const;

  std::string to_string() const;

 private:
  struct Unchecked {};
  RatFunc(LaurentPoly num, LaurentPoly den, Unchecked) : num_(std::move(num)), den_(std::move(den)) {}
  LaurentPoly num_;
  LaurentPoly den_;
};

}  // namespace wreath
