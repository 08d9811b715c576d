#include "wreath/laurent_poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "wreath/error.hpp"

namespace wreath {

Exponent ExtDegree::value() const {
  if (kind_ != Kind::Finite) throw std::logic_error("value() of an infinite degree");
  return value_;
}

ExtDegree operator+(const ExtDegree& a, const ExtDegree& b) {
  if (a.is_finite() && b.is_finite()) return ExtDegree(a.value_ + b.value_);
  if (!a.is_finite() && !b.is_finite() && a.kind_ != b.kind_)
    throw std::logic_error("+inf + -inf is undefined");
  return a.is_finite() ? b : a;
}

ExtDegree operator-(const ExtDegree& a) {
  switch (a.kind_) {
    case ExtDegree::Kind::PlusInfinity: return ExtDegree::minus_infinity();
    case ExtDegree::Kind::MinusInfinity: return ExtDegree::plus_infinity();
    default: return ExtDegree(-a.value_);
  }
}

std::string ExtDegree::to_string() const {
  switch (kind_) {
    case Kind::PlusInfinity: return "+inf";
    case Kind::MinusInfinity: return "-inf";
    default: return std::to_string(value_);
  }
}

LaurentPoly::LaurentPoly(const Rational& constant) {
  if (constant != 0) terms_.push_back({0, constant});
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.exp < b.exp; });
  LaurentPoly r;
  for (auto& t : terms) {
    if (!r.terms_.empty() && r.terms_.back().exp == t.exp) {
      r.terms_.back().coef += t.coef;
      if (r.terms_.back().coef == 0) r.terms_.pop_back();
    } else if (t.coef != 0) {
      r.terms_.push_back(std::move(t));
    }
  }
  return r;
}

LaurentPoly LaurentPoly::monomial(const Rational& c, Exponent e) {
  LaurentPoly r;
  if (c != 0) r.terms_.push_back({e, c});
  return r;
}

LaurentPoly LaurentPoly::geometric(Exponent start, Exponent step, std::size_t count) {
  std::vector<Term> t;
  t.reserve(count);
  for (std::size_t i = 0; i < count; ++i) t.push_back({start + static_cast<Exponent>(i) * step, Rational(1)});
  return from_terms(std::move(t));
}

LaurentPoly LaurentPoly::from_dense(const DensePoly& p, Exponent shift) {
  LaurentPoly r;
  const auto& c = p.coefs();
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) r.terms_.push_back({static_cast<Exponent>(i) + shift, c[i]});
  return r;
}

Rational LaurentPoly::coefficient(Exponent e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, Exponent x) { return t.exp < x; });
  return (it != terms_.end() && it->exp == e) ? it->coef : Rational(0);
}

ExtDegree LaurentPoly::degree(Direction dir) const {
  if (terms_.empty())
    return dir == Direction::Plus ? ExtDegree::minus_infinity() : ExtDegree::plus_infinity();
  return dir == Direction::Plus ? terms_.back().exp : terms_.front().exp;
}

Rational LaurentPoly::leading_coef(Direction dir) const {
  if (terms_.empty()) return 0;
  return dir == Direction::Plus ? terms_.back().coef : terms_.front().coef;
}

LaurentPoly LaurentPoly::initial(Direction dir) const {
  if (terms_.empty()) return {};
  const Term& t = dir == Direction::Plus ? terms_.back() : terms_.front();
  return monomial(t.coef, t.exp);
}

Exponent LaurentPoly::low() const {
  if (terms_.empty()) throw Error(ErrorKind::ZeroPolynomial, "low() of 0");
  return terms_.front().exp;
}

Exponent LaurentPoly::high() const {
  if (terms_.empty()) throw Error(ErrorKind::ZeroPolynomial, "high() of 0");
  return terms_.back().exp;
}

Rational LaurentPoly::eval(const Rational& r) const {
  if (terms_.empty()) return 0;
  if (r == 0) {
    if (terms_.front().exp < 0)
      throw Error(ErrorKind::ZeroEvaluationPoint, "evaluating " + to_string() + " at 0");
    return coefficient(0);
  }
  // Horner from the top, then divide out the low shift.
  Rational acc = 0;
  Exponent prev = terms_.back().exp;
  Rational rp;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Exponent gap = prev - it->exp;
    if (gap > 0) {
      mpz_pow_ui(rp.get_num_mpz_t(), r.get_num_mpz_t(), static_cast<unsigned long>(gap));
      mpz_pow_ui(rp.get_den_mpz_t(), r.get_den_mpz_t(), static_cast<unsigned long>(gap));
      rp.canonicalize();
      acc *= rp;
    }
    acc += it->coef;
    prev = it->exp;
  }
  Exponent low = terms_.front().exp;
  if (low != 0) {
    unsigned long e = static_cast<unsigned long>(low > 0 ? low : -low);
    mpz_pow_ui(rp.get_num_mpz_t(), r.get_num_mpz_t(), e);
    mpz_pow_ui(rp.get_den_mpz_t(), r.get_den_mpz_t(), e);
    rp.canonicalize();
    if (low > 0) acc *= rp;
    else acc /= rp;
  }
  return acc;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

namespace {

template <class Op>
std::vector<LaurentPoly::Term> merge(const std::vector<LaurentPoly::Term>& a,
                                     const std::vector<LaurentPoly::Term>& b, Op op) {
  std::vector<LaurentPoly::Term> r;
  r.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].exp < b[j].exp)) {
      r.push_back(a[i++]);
    } else if (i == a.size() || b[j].exp < a[i].exp) {
      r.push_back({b[j].exp, op(Rational(0), b[j].coef)});
      ++j;
    } else {
      Rational c = op(a[i].coef, b[j].coef);
      if (c != 0) r.push_back({a[i].exp, std::move(c)});
      ++i;
      ++j;
    }
  }
  return r;
}

}  // namespace

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  terms_ = merge(terms_, o.terms_, [](const Rational& x, const Rational& y) { return Rational(x + y); });
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  terms_ = merge(terms_, o.terms_, [](const Rational& x, const Rational& y) { return Rational(x - y); });
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  Exponent lo = a.terms_.front().exp + b.terms_.front().exp;
  Exponent hi = a.terms_.back().exp + b.terms_.back().exp;
  std::size_t span = static_cast<std::size_t>(hi - lo + 1);
  if (span <= 4 * a.size() * b.size() + 64) {
    std::vector<Rational> acc(span);
    for (const auto& s : a.terms_)
      for (const auto& t : b.terms_) acc[static_cast<std::size_t>(s.exp + t.exp - lo)] += s.coef * t.coef;
    for (std::size_t k = 0; k < span; ++k)
      if (acc[k] != 0) r.terms_.push_back({lo + static_cast<Exponent>(k), std::move(acc[k])});
    return r;
  }
  std::map<Exponent, Rational> acc;
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) acc[s.exp + t.exp] += s.coef * t.coef;
  for (auto& [e, c] : acc)
    if (c != 0) r.terms_.push_back({e, c});
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coef *= c;
  return *this;
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
  LaurentPoly result(Rational(1)), base = *this;
  while (n) {
    if (n & 1u) result *= base;
    n >>= 1u;
    if (n) base *= base;
  }
  return result;
}

LaurentPoly LaurentPoly::shifted(Exponent k) const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.exp += k;
  return r;
}

LaurentPoly LaurentPoly::reflected() const {
  LaurentPoly r;
  r.terms_.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) r.terms_.push_back({-it->exp, it->coef});
  return r;
}

LaurentPoly LaurentPoly::expanded(Exponent d) const {
  if (d <= 0) throw Error(ErrorKind::InvalidInput, "expanded() needs d > 0");
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.exp *= d;
  return r;
}

LaurentPoly LaurentPoly::compressed(Exponent d) const {
  if (!exponents_divisible_by(d))
    throw Error(ErrorKind::WrongGrading, to_string() + " is not in Q[X^" + std::to_string(d) + "]");
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.exp /= d;
  return r;
}

bool LaurentPoly::is_integral() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.coef.get_den() == 1; });
}

bool LaurentPoly::is_nonnegative() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.coef > 0; });
}

bool LaurentPoly::exponents_divisible_by(Exponent d) const {
  if (d <= 0) throw Error(ErrorKind::InvalidInput, "grading must be positive");
  return std::all_of(terms_.begin(), terms_.end(), [d](const Term& t) { return t.exp % d == 0; });
}

DensePoly LaurentPoly::to_dense(Exponent& shift) const {
  if (terms_.empty()) {
    shift = 0;
    return {};
  }
  shift = terms_.front().exp;
  std::vector<Rational> c(static_cast<std::size_t>(terms_.back().exp - shift + 1));
  for (const auto& t : terms_) c[static_cast<std::size_t>(t.exp - shift)] = t.coef;
  return DensePoly(std::move(c));
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coef;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    Rational a = abs(c);
    if (t.exp == 0) {
      os << a.get_str();
      continue;
    }
    if (a != 1) os << a.get_str() << "*";
    os << "X";
    if (t.exp != 1) os << "^" << t.exp;
  }
  return os.str();
}

namespace {

LaurentPoly support_of(const LaurentPoly& f) {
  std::vector<LaurentPoly::Term> t;
  t.reserve(f.size());
  for (const auto& term : f.terms()) t.push_back({term.exp, Rational(1)});
  return LaurentPoly::from_terms(std::move(t));
}

}  // namespace

bool is_gap_free(const LaurentPoly& f, Exponent d) {
  if (!f.exponents_divisible_by(d))
    throw Error(ErrorKind::WrongGrading, f.to_string() + " has an exponent not divisible by " + std::to_string(d));
  if (f.is_zero()) return true;
  return static_cast<Exponent>(f.size()) == (f.high() - f.low()) / d + 1;
}

unsigned gap_free_exponent(const LaurentPoly& f, Exponent d, Exponent M, Exponent N) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "gap_free_exponent of 0");
  if (!f.is_nonnegative()) throw Error(ErrorKind::NegativeCoefficient, f.to_string());
  if (M < 0 || N < 0 || M + N < 1) throw Error(ErrorKind::InvalidInput, "window needs M, N >= 0 and M + N >= 1");
  // Exponent pattern is all that matters; keep coefficients at 1 to avoid growth.
  LaurentPoly window = LaurentPoly::geometric(-M * d, d, static_cast<std::size_t>(M + N + 1));
  LaurentPoly g = support_of(f);
  for (unsigned n = 0;; ++n) {
    if (is_gap_free(g, d)) return n;
    g = support_of(g * window);
  }
}

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
  Exponent sa, sb;
  return LaurentPoly::from_dense(gcd(a.to_dense(sa), b.to_dense(sb)));
}

bool divides(const LaurentPoly& b, const LaurentPoly& a, LaurentPoly* quotient) {
  if (b.is_zero()) throw Error(ErrorKind::ZeroDenominator, "division by 0");
  if (a.is_zero()) {
    if (quotient) *quotient = LaurentPoly();
    return true;
  }
  Exponent sa, sb;
  DensePoly da = a.to_dense(sa), db = b.to_dense(sb);
  auto [q, r] = divmod(da, db);
  if (!r.is_zero()) return false;
  if (quotient) *quotient = LaurentPoly::from_dense(q, sa - sb);
  return true;
}

LaurentPoly exact_quotient(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly q;
  if (!divides(b, a, &q))
    throw Error(ErrorKind::PreconditionViolated, b.to_string() + " does not divide " + a.to_string());
  return q;
}

}  // namespace wreath
