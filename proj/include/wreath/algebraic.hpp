#pragma once

#include <memory>
#include <string>
#include <vector>

#include "wreath/dense_poly.hpp"

namespace wreath {

std::vector<DensePoly> sturm_sequence(const DensePoly& p);
/// Distinct real roots of p in (a, b]; a must not be a root.
std::size_t count_roots(const std::vector<DensePoly>& sturm, const Rational& a, const Rational& b);
std::size_t count_roots(const DensePoly& p, const Rational& a, const Rational& b);

/// A real root of a square-free polynomial with exactly one root in the open interval (lo, hi);
/// neither endpoint is a root.
struct AlgebraicPoint {
  DensePoly poly;
  Rational lo, hi;

  /// Halve the interval.
  void refine();
  void refine_to(const Rational& width);
  double approx() const;
  std::string to_string() const;
};

/// Positive real roots in increasing order with disjoint isolating intervals.
/// Error(ZeroPolynomial) for p = 0.
std::vector<AlgebraicPoint> isolate_positive_roots(const DensePoly& p);

/// Q(theta) for a real algebraic theta. The defining polynomial may shrink to a factor as
/// computations discover one (gcd splitting); the point itself never changes.
class AlgebraicField {
 public:
  explicit AlgebraicField(AlgebraicPoint point);

  const AlgebraicPoint& point() const { return point_; }
  const DensePoly& modulus() const { return point_.poly; }
  bool is_rational() const { return point_.poly.degree() == 1; }
  Rational rational_value() const;

  DensePoly reduce(const DensePoly& a) const;
  /// Sign of a(theta).
  int sign_of(const DensePoly& a);
  /// a(theta)^-1 as a polynomial; Error(ZeroDenominator) if a(theta) = 0.
  DensePoly inverse_of(const DensePoly& a);

 private:
  /// True if g (a factor of the modulus) vanishes at theta; then the modulus becomes g.
  bool split_on(const DensePoly& g);
  AlgebraicPoint point_;
};

/// Element a(theta) of an AlgebraicField. Elements without a field are plain rationals.
class AlgebraicNumber {
 public:
  AlgebraicNumber() = default;
  AlgebraicNumber(const Rational& q) : poly_(q) {}  // NOLINT
  AlgebraicNumber(int q) : poly_(Rational(q)) {}  // NOLINT
  AlgebraicNumber(std::shared_ptr<AlgebraicField> field, DensePoly poly);

  static AlgebraicNumber theta(std::shared_ptr<AlgebraicField> field);

  const DensePoly& poly() const { return poly_; }
  const std::shared_ptr<AlgebraicField>& field() const { return field_; }

  int sign() const;
  bool is_zero() const { return sign() == 0; }

  friend AlgebraicNumber operator+(const AlgebraicNumber& a, const AlgebraicNumber& b);
  friend AlgebraicNumber operator-(const AlgebraicNumber& a, const AlgebraicNumber& b);
  friend AlgebraicNumber operator*(const AlgebraicNumber& a, const AlgebraicNumber& b);
  friend AlgebraicNumber operator/(const AlgebraicNumber& a, const AlgebraicNumber& b);
  AlgebraicNumber operator-() const { return AlgebraicNumber(field_, -poly_); }
  AlgebraicNumber& operator+=(const AlgebraicNumber& o) { return *this = *this + o; }
  AlgebraicNumber& operator-=(const AlgebraicNumber& o) { return *this = *this - o; }
  AlgebraicNumber& operator*=(const AlgebraicNumber& o) { return *this = *this * o; }
  AlgebraicNumber& operator/=(const AlgebraicNumber& o) { return *this = *this / o; }

  std::string to_string() const;

 private:
  static std::shared_ptr<AlgebraicField> common(const AlgebraicNumber& a, const AlgebraicNumber& b);
  std::shared_ptr<AlgebraicField> field_;
  DensePoly poly_;
};

inline int sign(const AlgebraicNumber& a) { return a.sign(); }

}  // namespace wreath
