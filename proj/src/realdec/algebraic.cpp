#include "wreath/algebraic.hpp"

#include <algorithm>
#include <stdexcept>

#include "wreath/error.hpp"

namespace wreath {

std::vector<DensePoly> sturm_sequence(const DensePoly& p) {
  std::vector<DensePoly> seq;
  if (p.is_zero()) return seq;
  seq.push_back(p.primitive());
  DensePoly d = p.derivative().primitive();
  if (d.is_zero()) return seq;
  seq.push_back(d);
  for (;;) {
    DensePoly r = -(seq[seq.size() - 2] % seq.back());
    if (r.is_zero()) break;
    seq.push_back(r.primitive());
  }
  return seq;
}

namespace {

std::size_t variations(const std::vector<DensePoly>& seq, const Rational& x) {
  std::size_t v = 0;
  int last = 0;
  for (const auto& s : seq) {
    int sg = s.sign_at(x);
    if (sg == 0) continue;
    if (last != 0 && sg != last) ++v;
    last = sg;
  }
  return v;
}

DensePoly strip_x(const DensePoly& p) {
  const auto& c = p.coefs();
  std::size_t k = 0;
  while (k < c.size() && c[k] == 0) ++k;
  return DensePoly(std::vector<Rational>(c.begin() + static_cast<long>(k), c.end()));
}

}  // namespace

std::size_t count_roots(const std::vector<DensePoly>& sturm, const Rational& a, const Rational& b) {
  std::size_t va = variations(sturm, a), vb = variations(sturm, b);
  return va >= vb ? va - vb : 0;
}

std::size_t count_roots(const DensePoly& p, const Rational& a, const Rational& b) {
  return count_roots(sturm_sequence(p), a, b);
}

void AlgebraicPoint::refine() {
  Rational mid = (lo + hi) / 2;
  int sm = poly.sign_at(mid);
  if (sm == 0) {
    Rational w = (hi - lo) / 4;
    poly = DensePoly::linear_root(mid);
    lo = mid - w;
    hi = mid + w;
    return;
  }
  if (poly.sign_at(lo) != sm) hi = mid;
  else lo = mid;
}

void AlgebraicPoint::refine_to(const Rational& width) {
  while (hi - lo > width) refine();
}

double AlgebraicPoint::approx() const {
  AlgebraicPoint p = *this;
  p.refine_to(Rational(1, 1) / Rational(Integer(1) << 48));
  return Rational((p.lo + p.hi) / 2).get_d();
}

std::string AlgebraicPoint::to_string() const {
  return "root of " + poly.to_string() + " in (" + lo.get_str() + ", " + hi.get_str() + ")";
}

std::vector<AlgebraicPoint> isolate_positive_roots(const DensePoly& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "isolating the roots of 0");
  DensePoly q = squarefree_part(strip_x(p));
  std::vector<AlgebraicPoint> out;
  if (q.degree() <= 0) return out;

  Rational bound = 0;
  for (const auto& c : q.coefs()) bound = std::max(bound, Rational(abs(c / q.leading())));
  bound += 1;

  auto sturm = sturm_sequence(q);
  struct Job {
    Rational a, b;
    std::size_t count;
  };
  std::vector<Job> jobs{{Rational(0), bound, count_roots(sturm, 0, bound)}};
  while (!jobs.empty()) {
    Job j = jobs.back();
    jobs.pop_back();
    if (j.count == 0) continue;
    if (j.count == 1) {
      out.push_back({q, j.a, j.b});
      continue;
    }
    Rational mid = (j.a + j.b) / 2;
    for (long k = 3; q.sign_at(mid) == 0; ++k) mid = j.a + (j.b - j.a) / k;
    std::size_t left = count_roots(sturm, j.a, mid);
    jobs.push_back({mid, j.b, j.count - left});
    jobs.push_back({j.a, mid, left});
  }
  std::sort(out.begin(), out.end(), [](const AlgebraicPoint& x, const AlgebraicPoint& y) { return x.lo < y.lo; });
  return out;
}

AlgebraicField::AlgebraicField(AlgebraicPoint point) : point_(std::move(point)) {
  point_.poly = point_.poly.monic();
  if (point_.poly.degree() < 1) throw Error(ErrorKind::ZeroPolynomial, "algebraic point needs a nonconstant polynomial");
}

Rational AlgebraicField::rational_value() const {
  if (!is_rational()) throw std::logic_error("not a rational point");
  return -point_.poly.coef(0) / point_.poly.coef(1);
}

DensePoly AlgebraicField::reduce(const DensePoly& a) const {
  if (a.degree() < point_.poly.degree()) return a;
  return a % point_.poly;
}

bool AlgebraicField::split_on(const DensePoly& g) {
  bool vanishes = g.sign_at(point_.lo) != g.sign_at(point_.hi);
  point_.poly = vanishes ? g.monic() : (point_.poly / g).monic();
  return vanishes;
}

int AlgebraicField::sign_of(const DensePoly& a0) {
  DensePoly a = reduce(a0);
  if (a.is_zero()) return 0;
  if (a.degree() == 0) return sgn(a.coef(0));
  if (is_rational()) return a.sign_at(rational_value());
  DensePoly g = gcd(point_.poly, a);
  if (g.degree() > 0) {
    if (split_on(g)) return 0;
    a = reduce(a);
    if (a.is_zero()) return 0;
    if (a.degree() == 0) return sgn(a.coef(0));
    if (is_rational()) return a.sign_at(rational_value());
  }
  auto sturm = sturm_sequence(a);
  for (;;) {
    if (is_rational()) return a.sign_at(rational_value());
    int s_hi = a.sign_at(point_.hi);
    if (a.sign_at(point_.lo) != 0 && s_hi != 0 && count_roots(sturm, point_.lo, point_.hi) == 0) return s_hi;
    point_.refine();
  }
}

DensePoly AlgebraicField::inverse_of(const DensePoly& a0) {
  if (sign_of(a0) == 0) throw Error(ErrorKind::ZeroDenominator, "inverting zero in Q(theta)");
  DensePoly a = reduce(a0);
  ExtGcd e = ext_gcd(a, point_.poly);
  if (e.g.degree() != 0) throw std::logic_error("modulus not coprime after sign determination");
  return reduce(e.s);
}

AlgebraicNumber::AlgebraicNumber(std::shared_ptr<AlgebraicField> field, DensePoly poly)
    : field_(std::move(field)), poly_(field_ ? field_->reduce(poly) : std::move(poly)) {}

AlgebraicNumber AlgebraicNumber::theta(std::shared_ptr<AlgebraicField> field) {
  return AlgebraicNumber(field, DensePoly(std::vector<Rational>{0, 1}));
}

std::shared_ptr<AlgebraicField> AlgebraicNumber::common(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  if (!a.field_) return b.field_;
  if (!b.field_ || a.field_ == b.field_) return a.field_;
  throw std::logic_error("mixing elements of different algebraic fields");
}

int AlgebraicNumber::sign() const {
  if (!field_) return poly_.is_zero() ? 0 : sgn(poly_.coef(0));
  return field_->sign_of(poly_);
}

AlgebraicNumber operator+(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  return AlgebraicNumber(AlgebraicNumber::common(a, b), a.poly_ + b.poly_);
}

AlgebraicNumber operator-(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  return AlgebraicNumber(AlgebraicNumber::common(a, b), a.poly_ - b.poly_);
}

AlgebraicNumber operator*(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  return AlgebraicNumber(AlgebraicNumber::common(a, b), a.poly_ * b.poly_);
}

AlgebraicNumber operator/(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  auto f = AlgebraicNumber::common(a, b);
  if (!f) {
    if (b.poly_.is_zero()) throw Error(ErrorKind::ZeroDenominator, "division by zero");
    return AlgebraicNumber(nullptr, a.poly_ * Rational(1 / b.poly_.coef(0)));
  }
  return AlgebraicNumber(f, a.poly_ * f->inverse_of(b.poly_));
}

std::string AlgebraicNumber::to_string() const {
  if (!field_) return poly_.is_zero() ? "0" : poly_.coef(0).get_str();
  return poly_.to_string() + " at theta";
}

}  // namespace wreath
