#include "wreath/dense_poly.hpp"

#include <sstream>

#include "wreath/error.hpp"

namespace wreath {

DensePoly::DensePoly(std::vector<Rational> coefs) : coefs_(std::move(coefs)) { trim(); }

DensePoly::DensePoly(const Rational& constant) {
  if (constant != 0) coefs_.push_back(constant);
}

DensePoly DensePoly::monomial(const Rational& c, std::size_t degree) {
  if (c == 0) return {};
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return DensePoly(std::move(v));
}

DensePoly DensePoly::linear_root(const Rational& root) {
  return DensePoly(std::vector<Rational>{Rational(-root), Rational(1)});
}

void DensePoly::trim() {
  while (!coefs_.empty() && coefs_.back() == 0) coefs_.pop_back();
}

Rational DensePoly::coef(std::size_t i) const { return i < coefs_.size() ? coefs_[i] : Rational(0); }

const Rational& DensePoly::leading() const {
  if (coefs_.empty()) throw Error(ErrorKind::ZeroPolynomial, "leading coefficient of 0");
  return coefs_.back();
}

Rational DensePoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coefs_.rbegin(); it != coefs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int DensePoly::sign_at(const Rational& x) const { return sgn(eval(x)); }

DensePoly DensePoly::operator-() const {
  DensePoly r = *this;
  for (auto& c : r.coefs_) c = -c;
  return r;
}

DensePoly& DensePoly::operator+=(const DensePoly& o) {
  if (o.coefs_.size() > coefs_.size()) coefs_.resize(o.coefs_.size());
  for (std::size_t i = 0; i < o.coefs_.size(); ++i) coefs_[i] += o.coefs_[i];
  trim();
  return *this;
}

DensePoly& DensePoly::operator-=(const DensePoly& o) {
  if (o.coefs_.size() > coefs_.size()) coefs_.resize(o.coefs_.size());
  for (std::size_t i = 0; i < o.coefs_.size(); ++i) coefs_[i] -= o.coefs_[i];
  trim();
  return *this;
}

DensePoly& DensePoly::operator*=(const DensePoly& o) {
  if (is_zero() || o.is_zero()) {
    coefs_.clear();
    return *this;
  }
  std::vector<Rational> r(coefs_.size() + o.coefs_.size() - 1);
  for (std::size_t i = 0; i < coefs_.size(); ++i) {
    if (coefs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coefs_.size(); ++j) r[i + j] += coefs_[i] * o.coefs_[j];
  }
  coefs_ = std::move(r);
  trim();
  return *this;
}

DensePoly& DensePoly::operator*=(const Rational& c) {
  if (c == 0) {
    coefs_.clear();
    return *this;
  }
  for (auto& x : coefs_) x *= c;
  return *this;
}

DensePoly DensePoly::derivative() const {
  if (coefs_.size() <= 1) return {};
  std::vector<Rational> r(coefs_.size() - 1);
  for (std::size_t i = 1; i < coefs_.size(); ++i) r[i - 1] = coefs_[i] * static_cast<long>(i);
  return DensePoly(std::move(r));
}

DensePoly DensePoly::monic() const {
  if (is_zero()) return {};
  Rational inv = 1 / leading();
  return *this * inv;
}

DensePoly DensePoly::primitive() const {
  if (is_zero()) return {};
  Integer l = 1, g = 0;
  for (const auto& c : coefs_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Rational> r;
  r.reserve(coefs_.size());
  for (const auto& c : coefs_) {
    Rational x = c * l;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num_mpz_t());
    r.push_back(x);
  }
  for (auto& x : r) x /= g;
  return DensePoly(std::move(r));
}

std::string DensePoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coefs_.size(); i-- > 0;) {
    if (coefs_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << coefs_[i].get_str();
    if (i == 1) os << "*x";
    else if (i > 1) os << "*x^" << i;
  }
  return os.str();
}

std::pair<DensePoly, DensePoly> divmod(const DensePoly& a, const DensePoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "division by the zero polynomial");
  if (a.degree() < b.degree()) return {DensePoly(), a};
  std::vector<Rational> r = a.coefs();
  std::vector<Rational> q(a.coefs().size() - b.coefs().size() + 1);
  const auto& bc = b.coefs();
  Rational inv = 1 / b.leading();
  for (std::size_t k = q.size(); k-- > 0;) {
    Rational c = r[k + bc.size() - 1] * inv;
    q[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) r[k + j] -= c * bc[j];
  }
  r.resize(bc.size() - 1);
  return {DensePoly(std::move(q)), DensePoly(std::move(r))};
}

DensePoly operator/(const DensePoly& a, const DensePoly& b) { return divmod(a, b).first; }
DensePoly operator%(const DensePoly& a, const DensePoly& b) { return divmod(a, b).second; }

DensePoly gcd(const DensePoly& a, const DensePoly& b) {
  DensePoly x = a.primitive(), y = b.primitive();
  while (!y.is_zero()) {
    DensePoly r = (x % y).primitive();
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

DensePoly lcm(const DensePoly& a, const DensePoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return (a / gcd(a, b) * b).monic();
}

DensePoly squarefree_part(const DensePoly& p) {
  if (p.degree() <= 0) return p.is_zero() ? p : DensePoly(Rational(1));
  return (p / gcd(p, p.derivative())).monic();
}

ExtGcd ext_gcd(const DensePoly& a, const DensePoly& b) {
  DensePoly r0 = a, r1 = b, s0(Rational(1)), s1, t0, t1(Rational(1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    DensePoly s2 = s0 - q * s1, t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Rational inv = 1 / r0.leading();
  return {r0 * inv, s0 * inv, t0 * inv};
}

}  // namespace wreath
