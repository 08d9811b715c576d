#include "wreath/rat_func.hpp"

#include "wreath/error.hpp"

namespace wreath {

RatFunc::RatFunc(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(ErrorKind::ZeroDenominator, "rational function with zero denominator");
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_, RatFunc::Unchecked{});
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, RatFunc::Unchecked{});
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_, RatFunc::Unchecked{});
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.num_.is_zero()) throw Error(ErrorKind::ZeroDenominator, "division by the zero rational function");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_, RatFunc::Unchecked{});
}

bool operator==(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return a.num_ == b.num_;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

RatFunc RatFunc::normalized() const {
  if (num_.is_zero()) return RatFunc();
  LaurentPoly g = gcd(num_, den_);
  LaurentPoly n = exact_quotient(num_, g), d = exact_quotient(den_, g);
  Exponent shift = d.low();
  Rational lc = d.leading_coef(Direction::Plus);
  Rational inv = 1 / lc;
  return RatFunc(n.shifted(-shift) * inv, d.shifted(-shift) * inv, Unchecked{});
}

bool RatFunc::as_laurent(LaurentPoly* out) const { return divides(den_, num_, out); }

std::string RatFunc::to_string() const {
  if (den_ == LaurentPoly(1)) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace wreath
