#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "wreath/dense_poly.hpp"
#include "wreath/rational.hpp"

namespace wreath {

using Exponent = std::int64_t;

/// The two ends of a Laurent polynomial: + is the top degree, - the bottom.
enum class Direction { Plus, Minus };

inline int sgn(Direction d) { return d == Direction::Plus ? 1 : -1; }
inline Direction opposite(Direction d) {
  return d == Direction::Plus ? Direction::Minus : Direction::Plus;
}

/// Integer degree extended by -inf / +inf. deg+(0) = -inf, deg-(0) = +inf.
class ExtDegree {
 public:
  enum class Kind { MinusInfinity, Finite, PlusInfinity };

  constexpr ExtDegree(Exponent v = 0) : kind_(Kind::Finite), value_(v) {}  // NOLINT
  static constexpr ExtDegree plus_infinity() { return ExtDegree(Kind::PlusInfinity); }
  static constexpr ExtDegree minus_infinity() { return ExtDegree(Kind::MinusInfinity); }

  constexpr Kind kind() const { return kind_; }
  constexpr bool is_finite() const { return kind_ == Kind::Finite; }
  /// Throws std::logic_error on an infinite degree.
  Exponent value() const;

  friend constexpr bool operator==(const ExtDegree&, const ExtDegree&) = default;
  friend constexpr std::strong_ordering operator<=>(const ExtDegree& a, const ExtDegree& b) {
    if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
    if (a.kind_ != Kind::Finite) return std::strong_ordering::equal;
    return a.value_ <=> b.value_;
  }
  /// Infinite + finite stays infinite; opposite infinities are a logic error.
  friend ExtDegree operator+(const ExtDegree& a, const ExtDegree& b);
  friend ExtDegree operator-(const ExtDegree& a);

  std::string to_string() const;

 private:
  constexpr explicit ExtDegree(Kind k) : kind_(k), value_(0) {}
  Kind kind_;
  Exponent value_;
};

/// Laurent polynomial with rational coefficients.
/// Terms are kept sorted by exponent with no zero coefficients, so
/// equality is structural.
class LaurentPoly {
 public:
  struct Term {
    Exponent exp;
    Rational coef;
    friend bool operator==(const Term&, const Term&) = default;
  };

  LaurentPoly() = default;
  LaurentPoly(const Rational& constant);  // NOLINT
  LaurentPoly(long constant) : LaurentPoly(Rational(constant)) {}  // NOLINT
  LaurentPoly(int constant) : LaurentPoly(Rational(constant)) {}  // NOLINT

  /// Duplicate exponents are summed, zeros dropped.
  static LaurentPoly from_terms(std::vector<Term> terms);
  static LaurentPoly monomial(const Rational& c, Exponent e);
  static LaurentPoly x_pow(Exponent e) { return monomial(1, e); }
  /// X^start + X^(start+step) + ... (count terms).
  static LaurentPoly geometric(Exponent start, Exponent step, std::size_t count);
  static LaurentPoly from_dense(const DensePoly& p, Exponent shift = 0);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  bool is_monomial() const { return terms_.size() == 1; }
  Rational coefficient(Exponent e) const;

  ExtDegree degree(Direction dir) const;
  Rational leading_coef(Direction dir) const;
  /// The single leading term at the given end, or 0.
  LaurentPoly initial(Direction dir) const;
  /// Lowest exponent; throws Error(ZeroPolynomial) on 0.
  Exponent low() const;
  Exponent high() const;

  Rational eval(const Rational& r) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Rational& c);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
  friend LaurentPoly operator*(const Rational& c, LaurentPoly a) { return a *= c; }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  LaurentPoly pow(unsigned n) const;
  /// Multiply by X^k.
  LaurentPoly shifted(Exponent k) const;
  /// X -> X^-1.
  LaurentPoly reflected() const;
  /// X -> X^d (d > 0).
  LaurentPoly expanded(Exponent d) const;
  /// X^d -> X; throws Error(WrongGrading) unless every exponent is divisible by d.
  LaurentPoly compressed(Exponent d) const;

  bool is_integral() const;
  bool is_nonnegative() const;
  bool exponents_divisible_by(Exponent d) const;

  /// Write f = X^shift * p with p an ordinary polynomial (shift = low(), or 0 for f = 0).
  DensePoly to_dense(Exponent& shift) const;

  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

/// True iff all of X^(dp), X^(d(p+1)), ..., X^(dq) carry nonzero coefficients.
/// Throws Error(WrongGrading) when some exponent is not a multiple of d.
bool is_gap_free(const LaurentPoly& f, Exponent d);

/// Least n with (X^(-Md) + ... + X^(Nd))^n * f gap-free in the d-grading.
/// Requires f != 0 with nonnegative coefficients and M + N >= 1.
unsigned gap_free_exponent(const LaurentPoly& f, Exponent d, Exponent M, Exponent N);

/// Monic-normalised gcd of Laurent polynomials, up to units c*X^k; result has low() = 0.
LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

/// Exact quotient a / b in Q[X^+-]; throws Error(PreconditionViolated) if b does not divide a.
LaurentPoly exact_quotient(const LaurentPoly& a, const LaurentPoly& b);
/// As above but returns false instead of throwing.
bool divides(const LaurentPoly& b, const LaurentPoly& a, LaurentPoly* quotient = nullptr);

}  // namespace wreath
