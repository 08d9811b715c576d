#include "wreath/realdec.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "wreath/error.hpp"
#include "wreath/simplex.hpp"

namespace wreath {

namespace {

template <class F>
StrictLpResult<F> strict_feasible(const Matrix<F>& M, DecisionStats* stats) {
  if (stats) ++stats->lp_calls;
  const std::size_t r = M.size();
  StrictLpResult<F> out;
  if (r == 0) {
    out.feasible = true;
    out.z.assign(0, F(0));
    return out;
  }
  const std::size_t c = M[0].size();
  // M z+ - M z- - s = 1 with z+, z-, s >= 0: strict feasibility is scale invariant.
  Matrix<F> A(r, std::vector<F>(2 * c + r, F(0)));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) {
      A[i][j] = M[i][j];
      A[i][c + j] = -M[i][j];
    }
    A[i][2 * c + i] = F(-1);
  }
  auto res = phase_one(A, std::vector<F>(r, F(1)));
  out.feasible = res.feasible;
  if (res.feasible) {
    out.z.resize(c);
    for (std::size_t j = 0; j < c; ++j) out.z[j] = res.x[j] - res.x[c + j];
  } else {
    out.y = res.farkas;
  }
  return out;
}

AlgebraicNumber theta_power(const std::shared_ptr<AlgebraicField>& field, Exponent e) {
  AlgebraicNumber t = AlgebraicNumber::theta(field), r(1);
  Exponent k = e < 0 ? -e : e;
  for (Exponent i = 0; i < k; ++i) r *= t;
  return e < 0 ? AlgebraicNumber(1) / r : r;
}

AlgebraicNumber eval_at(const LaurentPoly& f, const std::shared_ptr<AlgebraicField>& field) {
  if (f.is_zero()) return AlgebraicNumber(0);
  Exponent s;
  DensePoly p = f.to_dense(s);
  AlgebraicNumber v(field, p);
  return s == 0 ? v : v * theta_power(field, s);
}

/// Lowest exponent in each coordinate over all generators (0 for an all-zero coordinate).
std::vector<Exponent> row_shifts(const ModuleBasis& B) {
  std::vector<Exponent> s(B.n, 0);
  for (std::size_t j = 0; j < B.n; ++j) {
    bool any = false;
    for (const auto& g : B.generators)
      if (!g[j].is_zero()) {
        s[j] = any ? std::min(s[j], g[j].low()) : g[j].low();
        any = true;
      }
  }
  return s;
}

std::vector<std::vector<DensePoly>> shifted_poly_matrix(const ModuleBasis& B) {
  auto s = row_shifts(B);
  std::vector<std::vector<DensePoly>> P(B.n, std::vector<DensePoly>(B.size()));
  for (std::size_t j = 0; j < B.n; ++j)
    for (std::size_t i = 0; i < B.size(); ++i) {
      Exponent sh;
      DensePoly p = B.generators[i][j].shifted(-s[j]).to_dense(sh);
      if (p.is_zero()) continue;
      std::vector<Rational> c(static_cast<std::size_t>(sh), Rational(0));
      c.insert(c.end(), p.coefs().begin(), p.coefs().end());
      P[j][i] = DensePoly(std::move(c));
    }
  return P;
}

void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> idx(k);
  for (std::size_t t = 0; t < k; ++t) idx[t] = t;
  for (;;) {
    fn(idx);
    std::size_t t = k;
    while (t > 0 && idx[t - 1] == n - k + t - 1) --t;
    if (t == 0) return;
    ++idx[t - 1];
    for (std::size_t u = t; u < k; ++u) idx[u] = idx[u - 1] + 1;
  }
}

AlgebraicPoint rational_point(const Rational& r) {
  return {DensePoly::linear_root(r), Rational(r - Rational(1, 2)), Rational(r + Rational(1, 2))};
}

}  // namespace

StrictLpResult<Rational> lp_strict_feasible(const Matrix<Rational>& M, DecisionStats* stats) {
  return strict_feasible(M, stats);
}

StrictLpResult<AlgebraicNumber> lp_strict_feasible(const Matrix<AlgebraicNumber>& M, DecisionStats* stats) {
  return strict_feasible(M, stats);
}

Matrix<Rational> evaluate(const ModuleBasis& B, const Rational& r) {
  Matrix<Rational> M(B.n, std::vector<Rational>(B.size()));
  for (std::size_t j = 0; j < B.n; ++j)
    for (std::size_t i = 0; i < B.size(); ++i) M[j][i] = B.generators[i][j].eval(r);
  return M;
}

DensePoly bareiss_determinant(std::vector<std::vector<DensePoly>> M) {
  const std::size_t k = M.size();
  if (k == 0) return DensePoly(Rational(1));
  int sgn_flip = 1;
  DensePoly prev(Rational(1));
  for (std::size_t p = 0; p + 1 < k; ++p) {
    if (M[p][p].is_zero()) {
      std::size_t r = p + 1;
      while (r < k && M[r][p].is_zero()) ++r;
      if (r == k) return {};
      std::swap(M[p], M[r]);
      sgn_flip = -sgn_flip;
    }
    for (std::size_t i = p + 1; i < k; ++i) {
      for (std::size_t j = p + 1; j < k; ++j) {
        DensePoly num = M[i][j] * M[p][p] - M[i][p] * M[p][j];
        auto [q, rem] = divmod(num, prev);
        if (!rem.is_zero()) throw std::logic_error("Bareiss division was not exact");
        M[i][j] = std::move(q);
      }
      M[i][p] = DensePoly();
    }
    prev = M[p][p];
  }
  return sgn_flip < 0 ? -M[k - 1][k - 1] : M[k - 1][k - 1];
}

DensePoly critical_polynomial(const ModuleBasis& B) {
  auto P = shifted_poly_matrix(B);
  const std::size_t n = B.n, m = B.size();
  DensePoly acc(Rational(1));
  std::size_t count = 0;
  for (std::size_t k = 1; k <= std::min(n, m); ++k) {
    for_each_subset(n, k, [&](const std::vector<std::size_t>& rows) {
      for_each_subset(m, k, [&](const std::vector<std::size_t>& cols) {
        if (++count > 500000) throw Error(ErrorKind::LimitExceeded, "too many minors");
        std::vector<std::vector<DensePoly>> sub(k, std::vector<DensePoly>(k));
        for (std::size_t a = 0; a < k; ++a)
          for (std::size_t b = 0; b < k; ++b) sub[a][b] = P[rows[a]][cols[b]];
        DensePoly det = bareiss_determinant(std::move(sub));
        if (det.is_zero() || det.degree() == 0) return;
        acc = lcm(acc, squarefree_part(det));
      });
    });
  }
  // Drop the factor X: r = 0 is not a point of interest.
  while (acc.degree() > 0 && acc.coef(0) == 0) acc = acc / DensePoly(std::vector<Rational>{0, 1});
  return squarefree_part(acc);
}

SamplePlan make_sample_plan(const ModuleBasis& B) {
  SamplePlan plan;
  DensePoly q = critical_polynomial(B);
  if (q.degree() > 0) plan.critical_points = isolate_positive_roots(q);
  if (plan.critical_points.empty()) {
    plan.open_cell_samples.push_back(1);
    return plan;
  }
  AlgebraicPoint& first = plan.critical_points.front();
  while (first.lo <= 0) first.refine();
  plan.open_cell_samples.push_back(first.lo);
  for (const auto& p : plan.critical_points) plan.open_cell_samples.push_back(p.hi);
  return plan;
}

AllRResult decide_all_r(const ModuleBasis& B, DecisionStats* stats) {
  AllRResult out;
  if (B.n == 0) {
    out.holds = true;
    return out;
  }
  if (B.empty()) {
    out.failure_point = rational_point(1);
    out.certificate.assign(B.n, DensePoly());
    out.certificate[0] = DensePoly(Rational(1));
    return out;
  }
  out.plan = make_sample_plan(B);
  const auto shifts = row_shifts(B);

  auto test_rational = [&](const Rational& r) {
    if (stats) ++stats->cells_tested;
    auto res = lp_strict_feasible(evaluate(B, r), stats);
    if (res.feasible) return true;
    out.failure_point = rational_point(r);
    for (const auto& y : res.y) out.certificate.push_back(DensePoly(y));
    return false;
  };
  auto test_root = [&](const AlgebraicPoint& p) {
    if (stats) ++stats->cells_tested;
    auto field = std::make_shared<AlgebraicField>(p);
    Matrix<AlgebraicNumber> M(B.n, std::vector<AlgebraicNumber>(B.size()));
    for (std::size_t j = 0; j < B.n; ++j)
      for (std::size_t i = 0; i < B.size(); ++i) M[j][i] = eval_at(B.generators[i][j].shifted(-shifts[j]), field);
    auto res = lp_strict_feasible(M, stats);
    if (res.feasible) return true;
    for (std::size_t j = 0; j < B.n; ++j) {
      AlgebraicNumber y = res.y[j] * theta_power(field, -shifts[j]);
      out.certificate.push_back(field->reduce(y.poly()));
    }
    out.failure_point = field->point();
    return false;
  };

  const auto& samples = out.plan.open_cell_samples;
  const auto& roots = out.plan.critical_points;
  for (std::size_t t = 0; t < samples.size(); ++t) {
    if (!test_rational(samples[t])) return out;
    if (t < roots.size() && !test_root(roots[t])) return out;
  }
  out.holds = true;
  return out;
}

bool verify_gordan_certificate(const ModuleBasis& B, const AllRResult& result) {
  if (result.holds || !result.failure_point || result.certificate.size() != B.n) return false;
  auto field = std::make_shared<AlgebraicField>(*result.failure_point);
  std::vector<AlgebraicNumber> y;
  bool nonzero = false;
  for (const auto& c : result.certificate) {
    y.emplace_back(field, c);
    int s = y.back().sign();
    if (s < 0) return false;
    if (s > 0) nonzero = true;
  }
  if (!nonzero) return false;
  for (std::size_t i = 0; i < B.size(); ++i) {
    AlgebraicNumber acc(0);
    for (std::size_t j = 0; j < B.n; ++j) acc += y[j] * eval_at(B.generators[i][j], field);
    if (!acc.is_zero()) return false;
  }
  return true;
}

std::optional<std::vector<Integer>> positive_integer_combination(const std::vector<LaurentPoly>& ys,
                                                                 DecisionStats* stats) {
  if (ys.empty()) return std::vector<Integer>{};
  std::map<Exponent, std::size_t> row_of;
  for (const auto& y : ys)
    for (const auto& t : y.terms()) row_of.emplace(t.exp, 0);
  std::size_t r = 0;
  for (auto& [e, idx] : row_of) idx = r++;
  if (r == 0) return std::vector<Integer>(ys.size(), 1);
  // sum (1 + u_k) y_k = 0 with u >= 0.
  Matrix<Rational> A(r, std::vector<Rational>(ys.size()));
  std::vector<Rational> b(r);
  for (std::size_t k = 0; k < ys.size(); ++k)
    for (const auto& t : ys[k].terms()) {
      A[row_of[t.exp]][k] = t.coef;
      b[row_of[t.exp]] -= t.coef;
    }
  if (stats) ++stats->lp_calls;
  auto res = phase_one(A, b);
  if (!res.feasible) return std::nullopt;
  Integer l = 1;
  for (const auto& u : res.x) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), u.get_den_mpz_t());
  std::vector<Integer> n;
  for (const auto& u : res.x) {
    Rational v = (u + 1) * l;
    n.push_back(v.get_num());
  }
  return n;
}

nlohmann::json to_json(const AlgebraicPoint& p) {
  nlohmann::json coefs = nlohmann::json::array();
  for (const auto& c : p.poly.coefs()) coefs.push_back(c.get_str());
  return {{"poly", coefs}, {"interval", {p.lo.get_str(), p.hi.get_str()}}, {"approx", p.approx()}};
}

}  // namespace wreath
