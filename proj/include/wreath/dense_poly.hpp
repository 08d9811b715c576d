#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "wreath/rational.hpp"

namespace wreath {

/// Ordinary univariate polynomial over Q, coefficients in ascending degree.
/// Always trimmed: the zero polynomial has no coefficients.
class DensePoly {
 public:
  DensePoly() = default;
  explicit DensePoly(std::vector<Rational> coefs);
  DensePoly(const Rational& constant);  // NOLINT: constants convert implicitly

  static DensePoly monomial(const Rational& c, std::size_t degree);
  /// X - root
  static DensePoly linear_root(const Rational& root);

  const std::vector<Rational>& coefs() const { return coefs_; }
  bool is_zero() const { return coefs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coefs_.size()) - 1; }
  Rational coef(std::size_t i) const;
  const Rational& leading() const;

  Rational eval(const Rational& x) const;
  int sign_at(const Rational& x) const;

  DensePoly operator-() const;
  DensePoly& operator+=(const DensePoly& o);
  DensePoly& operator-=(const DensePoly& o);
  DensePoly& operator*=(const DensePoly& o);
  DensePoly& operator*=(const Rational& c);

  friend DensePoly operator+(DensePoly a, const DensePoly& b) { return a += b; }
  friend DensePoly operator-(DensePoly a, const DensePoly& b) { return a -= b; }
  friend DensePoly operator*(DensePoly a, const DensePoly& b) { return a *= b; }
  friend DensePoly operator*(DensePoly a, const Rational& c) { return a *= c; }
  friend bool operator==(const DensePoly& a, const DensePoly& b) { return a.coefs_ == b.coefs_; }

  DensePoly derivative() const;
  DensePoly monic() const;
  /// Multiply by the lcm of denominators and divide by the content gcd; sign kept.
  DensePoly primitive() const;

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coefs_;
};

/// Euclidean division; throws Error(ZeroPolynomial) on zero divisor.
std::pair<DensePoly, DensePoly> divmod(const DensePoly& a, const DensePoly& b);
DensePoly operator/(const DensePoly& a, const DensePoly& b);
DensePoly operator%(const DensePoly& a, const DensePoly& b);

/// Monic gcd; gcd(0,0) = 0.
DensePoly gcd(const DensePoly& a, const DensePoly& b);
DensePoly lcm(const DensePoly& a, const DensePoly& b);
DensePoly squarefree_part(const DensePoly& p);

/// Extended Euclid: returns (g, s, t) with s*a + t*b = g monic.
struct ExtGcd {
  DensePoly g, s, t;
};
ExtGcd ext_gcd(const DensePoly& a, const DensePoly& b);

}  // namespace wreath
