#include "wreath/initials.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <stdexcept>

#include "wreath/error.hpp"
#include "wreath/qlinalg.hpp"

namespace wreath {

namespace {

struct DiffEdge {
  std::size_t from, to;
  Exponent w;  // alpha_to - alpha_from <= w
};

/// Bellman-Ford from a virtual source; nullopt on a negative cycle.
std::optional<WeightVector> solve_differences(std::size_t n, const std::vector<DiffEdge>& edges) {
  WeightVector dist(n, 0);
  for (std::size_t round = 0; round <= n; ++round) {
    bool changed = false;
    for (const auto& e : edges)
      if (dist[e.from] + e.w < dist[e.to]) {
        dist[e.to] = dist[e.from] + e.w;
        changed = true;
      }
    if (!changed) {
      Exponent mx = n ? *std::max_element(dist.begin(), dist.end()) : 0;
      for (auto& v : dist) v -= mx;
      return dist;
    }
  }
  return std::nullopt;
}

bool all_zero(const PolyVector& v) {
  return std::all_of(v.begin(), v.end(), [](const LaurentPoly& p) { return p.is_zero(); });
}

PolyVector key_of(const PolyVector& v) { return normalize_vector(v); }

}  // namespace

bool InitialData::same_initials(const InitialData& o) const {
  return sign == o.sign && initial_vectors == o.initial_vectors;
}

PolyVector initial_vector(const PolyVector& f, Direction sign, const WeightVector& alpha) {
  PolyVector out(f.size());
  ExtDegree m = weighted_degree(f, sign, alpha);
  if (!m.is_finite()) return out;
  for (std::size_t j = 0; j < f.size(); ++j)
    if (!f[j].is_zero() && sgn(sign) * f[j].degree(sign).value() + alpha[j] == m.value())
      out[j] = f[j].initial(sign);
  return out;
}

InitialData initial_data(const std::vector<PolyVector>& gens, std::size_t n, Direction sign,
                         const WeightVector& alpha) {
  InitialData d;
  d.sign = sign;
  d.alpha = alpha;
  d.coef_matrix.assign(n, std::vector<Rational>(gens.size()));
  for (std::size_t i = 0; i < gens.size(); ++i) {
    d.initial_vectors.push_back(initial_vector(gens[i], sign, alpha));
    auto top = top_coefficients(gens[i], sign, alpha);
    for (std::size_t j = 0; j < n; ++j) d.coef_matrix[j][i] = top[j];
  }
  return d;
}

ModuleBasis adapted_basis(const ModuleBasis& B, Direction sign, const WeightVector& alpha) {
  ModuleBasis out;
  out.n = B.n;
  out.generators = weighted_reduce(B.generators, sign, alpha);
  return out;
}

std::vector<InitialData> enumerate_weight_cells(const std::vector<PolyVector>& gens, std::size_t n,
                                                Direction sign, const std::optional<WeightConstraint>& c) {
  // Weighted position of entry (i, j) is deg[i][j] + alpha_j; a cell fixes every argmax set.
  std::vector<std::vector<std::size_t>> support(gens.size());
  std::vector<std::vector<Exponent>> deg(gens.size(), std::vector<Exponent>(n, 0));
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!gens[i][j].is_zero()) {
        support[i].push_back(j);
        deg[i][j] = sgn(sign) * gens[i][j].degree(sign).value();
      }

  std::vector<DiffEdge> edges;
  if (c) edges.push_back({c->lo, c->hi, c->a});
  std::vector<InitialData> out;
  if (!solve_differences(n, edges)) return out;

  std::function<void(std::size_t)> dfs = [&](std::size_t i) {
    if (i == gens.size()) {
      auto alpha = solve_differences(n, edges);
      out.push_back(initial_data(gens, n, sign, *alpha));
      return;
    }
    const auto& sup = support[i];
    if (sup.empty()) {
      dfs(i + 1);
      return;
    }
    const std::size_t k = sup.size();
    if (k > 20) throw Error(ErrorKind::LimitExceeded, "too many coordinates for cell enumeration");
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
      std::size_t before = edges.size();
      std::size_t first = 0;
      while (!(mask >> first & 1)) ++first;
      const std::size_t p = sup[first];
      for (std::size_t t = 0; t < k; ++t) {
        const std::size_t q = sup[t];
        if (t == first) continue;
        if (mask >> t & 1) {
          // deg_p + alpha_p = deg_q + alpha_q
          edges.push_back({p, q, deg[i][p] - deg[i][q]});
          edges.push_back({q, p, deg[i][q] - deg[i][p]});
        } else {
          // deg_q + alpha_q <= deg_p + alpha_p - 1
          edges.push_back({p, q, deg[i][p] - deg[i][q] - 1});
        }
      }
      if (solve_differences(n, edges)) dfs(i + 1);
      edges.resize(before);
    }
  };
  dfs(0);
  return out;
}

std::vector<InitialData> enumerate_weight_cells(const ModuleBasis& B, Direction sign, Exponent a) {
  std::optional<WeightConstraint> c;
  if (B.n >= 2) c = WeightConstraint{0, 1, a};
  return enumerate_weight_cells(B.generators, B.n, sign, c);
}

LcResult decide_lc_condition(const ModuleBasis& B, Direction sign, Exponent a, std::size_t coordS,
                             std::optional<std::size_t> coordK, DecisionStats* stats) {
  if (coordS >= B.n || (coordK && (*coordK >= B.n || *coordK == coordS)))
    throw Error(ErrorKind::BadIndex, "coordinate out of range");
  LcResult res;
  if (B.empty()) return res;
  // deg_*(f_S) - deg_*(f_K) = sgn * (alpha_K - alpha_S) on a cell where both coordinates are initial.
  std::optional<WeightConstraint> c;
  if (coordK) {
    if (sign == Direction::Plus)
      c = WeightConstraint{coordS, *coordK, a};
    else
      c = WeightConstraint{*coordK, coordS, a};
  }
  const std::size_t k = B.size();
  std::vector<PolyVector> U = weighted_reduce(B.generators, sign, WeightVector(B.n, 0));
  std::vector<PolyVector> keys;
  for (const auto& u : U) keys.push_back(key_of(u));

  for (std::size_t pass = 0;; ++pass) {
    if (pass > 64) throw Error(ErrorKind::LimitExceeded, "initial module fixpoint did not settle");
    res.cells = enumerate_weight_cells(U, B.n, sign, c);
    std::vector<WeightVector> deficient;
    for (const auto& cell : res.cells) {
      if (stats) ++stats->cells_tested;
      auto lp = lp_strict_feasible(cell.coef_matrix, stats);
      if (lp.feasible) {
        res.holds = true;
        res.cell = cell;
        res.r = lp.z;
        res.generators = U;
        res.element.assign(B.n, LaurentPoly());
        for (std::size_t i = 0; i < U.size(); ++i) {
          if (lp.z[i] == 0) continue;
          Exponent m = weighted_degree(U[i], sign, cell.alpha).value();
          LaurentPoly mult = LaurentPoly::monomial(lp.z[i], -sgn(sign) * m);
          for (std::size_t j = 0; j < B.n; ++j) res.element[j] += mult * U[i][j];
        }
        for (std::size_t j = 0; j < B.n; ++j)
          if (res.element[j].is_zero() || res.element[j].leading_coef(sign) <= 0)
            throw std::logic_error("lc witness has a non-positive leading coefficient");
        if (coordK && res.element[coordS].degree(sign).value() + a < res.element[*coordK].degree(sign).value())
          throw std::logic_error("lc witness violates the degree condition");
        return res;
      }
      std::vector<QVector> cols(U.size(), QVector(B.n));
      for (std::size_t j = 0; j < B.n; ++j)
        for (std::size_t i = 0; i < U.size(); ++i) cols[i][j] = cell.coef_matrix[j][i];
      if (rank(cols) < k) deficient.push_back(cell.alpha);
    }
    if (deficient.empty()) {
      res.generators = U;
      return res;
    }
    bool grew = false;
    for (const auto& alpha : deficient)
      for (auto& g : weighted_reduce(B.generators, sign, alpha)) {
        auto key = key_of(g);
        if (std::find(keys.begin(), keys.end(), key) != keys.end()) continue;
        keys.push_back(key);
        U.push_back(std::move(g));
        grew = true;
      }
    if (!grew) throw std::logic_error("adapted basis added nothing on a deficient cell");
  }
}

bool reduces_to_zero(const PolyVector& initial, const std::vector<PolyVector>& initials, Direction sign,
                     const WeightVector& alpha) {
  if (all_zero(initial)) return true;
  std::vector<QVector> rows;
  for (const auto& u : initials)
    if (!all_zero(u)) rows.push_back(top_coefficients(u, sign, alpha));
  const std::size_t r0 = rank(rows);
  rows.push_back(top_coefficients(initial, sign, alpha));
  return rank(rows) == r0;
}

nlohmann::json to_json(const InitialData& d) {
  nlohmann::json j;
  j["sign"] = d.sign == Direction::Plus ? "+" : "-";
  j["alpha"] = d.alpha;
  nlohmann::json iv = nlohmann::json::array();
  for (const auto& v : d.initial_vectors) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& p : v) row.push_back(to_json(p));
    iv.push_back(row);
  }
  j["initial_vectors"] = iv;
  nlohmann::json cm = nlohmann::json::array();
  for (const auto& row : d.coef_matrix) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& q : row) r.push_back(q.get_str());
    cm.push_back(r);
  }
  j["coef_matrix"] = cm;
  return j;
}

}  // namespace wreath
