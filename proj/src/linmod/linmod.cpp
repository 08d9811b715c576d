#include "wreath/linmod.hpp"

#include <algorithm>
#include <stdexcept>

#include "wreath/error.hpp"
#include "wreath/qlinalg.hpp"

namespace wreath {

RatFunc compute_h(const GeneratorSet& G, std::size_t i, std::size_t j) {
  const WreathElem& gi = G.at(i);
  const WreathElem& gj = G.at(j);
  if (gi.b <= 0) throw Error(ErrorKind::BadIndex, "h needs i in I, got " + std::to_string(i));
  if (gj.b >= 0) throw Error(ErrorKind::BadIndex, "h needs j in J, got " + std::to_string(j));
  Exponent d = G.require_d();
  LaurentPoly den_i = LaurentPoly::geometric(0, d, static_cast<std::size_t>(gi.b / d));
  LaurentPoly den_j = LaurentPoly::geometric(-d, -d, static_cast<std::size_t>(-gj.b / d));
  return gi.y * RatFunc(LaurentPoly(1), den_i) + gj.y * RatFunc(LaurentPoly(1), den_j);
}

namespace {

Exponent floor_mod(Exponent e, Exponent d) { return ((e % d) + d) % d; }

}  // namespace

std::vector<LaurentPoly> decompose_mod_d(const LaurentPoly& f, Exponent d) {
  if (d <= 0) throw Error(ErrorKind::InvalidInput, "d must be positive");
  std::vector<std::vector<LaurentPoly::Term>> parts(static_cast<std::size_t>(d));
  for (const auto& t : f.terms()) {
    Exponent m = floor_mod(t.exp, d);
    parts[static_cast<std::size_t>(m)].push_back({(t.exp - m) / d, t.coef});
  }
  std::vector<LaurentPoly> out;
  out.reserve(parts.size());
  for (auto& p : parts) out.push_back(LaurentPoly::from_terms(std::move(p)));
  return out;
}

std::vector<RatFunc> decompose_mod_d(const RatFunc& f, Exponent d) {
  if (!f.den().exponents_divisible_by(d))
    throw Error(ErrorKind::BadDenominator, f.den().to_string() + " is not in Q[X^" + std::to_string(d) + "]");
  LaurentPoly den = f.den().compressed(d);
  std::vector<RatFunc> out;
  for (auto& c : decompose_mod_d(f.num(), d)) out.push_back(RatFunc(c, den));
  return out;
}

SystemSpec build_system(const GeneratorSet& G, const PairSet& S) {
  SystemSpec spec;
  spec.S = S;
  spec.K = G.K();
  spec.d = G.require_d();
  for (const auto& p : S) {
    RatFunc h = compute_h(G, p.first, p.second).normalized();
    spec.h[p] = h;
    spec.h_components[p] = decompose_mod_d(h, spec.d);
  }
  for (std::size_t k : spec.K) {
    LaurentPoly y;
    if (!G[k].y.as_laurent(&y)) throw Error(ErrorKind::InvalidInput, "y_k must be a Laurent polynomial");
    spec.y_components[k] = decompose_mod_d(y, spec.d);
  }
  return spec;
}

namespace {

Exponent length(const LaurentPoly& f) { return f.high() - f.low(); }

/// q with length(b - q a) < length(a).
LaurentPoly euclid_quotient(const LaurentPoly& b, const LaurentPoly& a) {
  Exponent sb, sa;
  DensePoly db = b.to_dense(sb), da = a.to_dense(sa);
  return LaurentPoly::from_dense(divmod(db, da).first, sb - sa);
}

void axpy(PolyVector& v, const LaurentPoly& q, const PolyVector& w) {
  for (std::size_t j = 0; j < v.size(); ++j)
    if (!w[j].is_zero()) v[j] -= q * w[j];
}

bool is_zero_vector(const PolyVector& v, std::size_t upto) {
  for (std::size_t j = 0; j < upto; ++j)
    if (!v[j].is_zero()) return false;
  return true;
}

/// Scale by a nonzero constant to primitive integer content (positive leading entry).
PolyVector scale_primitive(const PolyVector& v) {
  Integer l = 1, g = 0;
  for (const auto& p : v)
    for (const auto& t : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coef.get_den_mpz_t());
  for (const auto& p : v)
    for (const auto& t : p.terms()) {
      Rational x = t.coef * l;
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num_mpz_t());
    }
  if (g == 0) return v;
  Rational s(l, g);
  s.canonicalize();
  for (const auto& p : v)
    if (!p.is_zero()) {
      if (p.leading_coef(Direction::Plus) < 0) s = -s;
      break;
    }
  PolyVector r;
  r.reserve(v.size());
  for (const auto& p : v) r.push_back(p * s);
  return r;
}

/// Euclidean echelon form on the first `upto` coordinates. Returns the number of pivots;
/// vectors past that index are zero on those coordinates.
std::size_t echelon(std::vector<PolyVector>& vs, std::size_t upto) {
  std::size_t piv = 0;
  for (std::size_t c = 0; c < upto && piv < vs.size(); ++c) {
    for (;;) {
      std::size_t best = vs.size();
      for (std::size_t i = piv; i < vs.size(); ++i)
        if (!vs[i][c].is_zero() && (best == vs.size() || length(vs[i][c]) < length(vs[best][c]))) best = i;
      if (best == vs.size()) break;
      std::swap(vs[piv], vs[best]);
      bool clean = true;
      for (std::size_t i = piv + 1; i < vs.size(); ++i) {
        if (vs[i][c].is_zero()) continue;
        axpy(vs[i], euclid_quotient(vs[i][c], vs[piv][c]), vs[piv]);
        vs[i] = scale_primitive(vs[i]);
        if (!vs[i][c].is_zero()) clean = false;
      }
      if (clean) {
        vs[piv] = normalize_vector(vs[piv]);
        ++piv;
        break;
      }
    }
  }
  return piv;
}

}  // namespace

PolyVector normalize_vector(const PolyVector& v) {
  PolyVector r = scale_primitive(v);
  bool any = false;
  Exponent low = 0;
  for (const auto& p : r)
    if (!p.is_zero()) {
      low = any ? std::min(low, p.low()) : p.low();
      any = true;
    }
  if (any && low != 0)
    for (auto& p : r) p = p.shifted(-low);
  return r;
}

std::vector<PolyVector> kernel_basis(const PolyMatrix& A, std::size_t cols) {
  const std::size_t rows = A.size();
  std::vector<PolyVector> vs(cols, PolyVector(rows + cols));
  for (std::size_t j = 0; j < cols; ++j) {
    for (std::size_t i = 0; i < rows; ++i) {
      if (A[i].size() != cols) throw Error(ErrorKind::InvalidInput, "ragged matrix");
      vs[j][i] = A[i][j];
    }
    vs[j][rows + j] = LaurentPoly(1);
  }
  std::size_t piv = echelon(vs, rows);
  std::vector<PolyVector> out;
  for (std::size_t t = piv; t < cols; ++t)
    out.push_back(normalize_vector(PolyVector(vs[t].begin() + static_cast<long>(rows), vs[t].end())));
  return out;
}

std::vector<PolyVector> module_basis(std::vector<PolyVector> vectors) {
  if (vectors.empty()) return {};
  std::size_t n = vectors[0].size();
  std::erase_if(vectors, [n](const PolyVector& v) { return is_zero_vector(v, n); });
  std::size_t piv = echelon(vectors, n);
  vectors.resize(piv);
  return vectors;
}

std::size_t module_rank(const std::vector<PolyVector>& vectors) { return module_basis(vectors).size(); }

PolyMatrix system_matrix(const SystemSpec& spec) {
  const std::size_t n = spec.n();
  PolyMatrix A;
  for (Exponent m = 0; m < spec.d; ++m) {
    std::vector<RatFunc> entries(n);
    for (std::size_t t = 0; t < spec.S.size(); ++t)
      entries[spec.coord_pair(t)] = spec.h_components.at(spec.S[t])[static_cast<std::size_t>(m)].normalized();
    for (std::size_t t = 0; t < spec.K.size(); ++t)
      entries[spec.coord_loop(t)] = RatFunc(spec.y_components.at(spec.K[t])[static_cast<std::size_t>(m)]);
    DensePoly L(Rational(1));
    for (const auto& e : entries) {
      Exponent s;
      L = lcm(L, e.den().to_dense(s));
    }
    LaurentPoly Ll = LaurentPoly::from_dense(L);
    PolyVector row(n);
    for (std::size_t c = 0; c < n; ++c) {
      if (entries[c].is_zero()) continue;
      row[c] = entries[c].num() * exact_quotient(Ll, entries[c].den());
    }
    A.push_back(std::move(row));
  }
  PolyVector sumS(n), sumK(n);
  sumS[SystemSpec::coord_S] = LaurentPoly(1);
  for (std::size_t t = 0; t < spec.S.size(); ++t) sumS[spec.coord_pair(t)] = LaurentPoly(-1);
  sumK[SystemSpec::coord_K] = LaurentPoly(1);
  for (std::size_t t = 0; t < spec.K.size(); ++t) sumK[spec.coord_loop(t)] = LaurentPoly(-1);
  A.push_back(std::move(sumS));
  A.push_back(std::move(sumK));
  return A;
}

bool satisfies_system(const SystemSpec& spec, const PolyVector& v) {
  if (v.size() != spec.n()) return false;
  for (Exponent m = 0; m < spec.d; ++m) {
    RatFunc acc;
    for (std::size_t t = 0; t < spec.S.size(); ++t)
      acc += RatFunc(v[spec.coord_pair(t)]) * spec.h_components.at(spec.S[t])[static_cast<std::size_t>(m)];
    for (std::size_t t = 0; t < spec.K.size(); ++t)
      acc += RatFunc(v[spec.coord_loop(t)] * spec.y_components.at(spec.K[t])[static_cast<std::size_t>(m)]);
    if (!acc.is_zero()) return false;
  }
  LaurentPoly fS, fK;
  for (std::size_t t = 0; t < spec.S.size(); ++t) fS += v[spec.coord_pair(t)];
  for (std::size_t t = 0; t < spec.K.size(); ++t) fK += v[spec.coord_loop(t)];
  return fS == v[SystemSpec::coord_S] && fK == v[SystemSpec::coord_K];
}

ExtDegree weighted_degree(const PolyVector& v, Direction dir, const WeightVector& alpha) {
  ExtDegree m = ExtDegree::minus_infinity();
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (v[j].is_zero()) continue;
    Exponent w = sgn(dir) * v[j].degree(dir).value() + alpha[j];
    if (ExtDegree(w) > m) m = w;
  }
  return m;
}

std::vector<Rational> top_coefficients(const PolyVector& v, Direction dir, const WeightVector& alpha) {
  std::vector<Rational> t(v.size());
  ExtDegree m = weighted_degree(v, dir, alpha);
  if (!m.is_finite()) return t;
  for (std::size_t j = 0; j < v.size(); ++j)
    if (!v[j].is_zero() && sgn(dir) * v[j].degree(dir).value() + alpha[j] == m.value())
      t[j] = v[j].leading_coef(dir);
  return t;
}

std::vector<PolyVector> weighted_reduce(std::vector<PolyVector> basis, Direction dir, const WeightVector& alpha) {
  for (std::size_t guard = 0;; ++guard) {
    if (guard > 1000000) throw Error(ErrorKind::LimitExceeded, "weighted reduction did not terminate");
    std::erase_if(basis, [](const PolyVector& v) { return is_zero_vector(v, v.size()); });
    std::vector<QVector> tops;
    std::vector<Exponent> m;
    for (const auto& g : basis) {
      tops.push_back(top_coefficients(g, dir, alpha));
      m.push_back(weighted_degree(g, dir, alpha).value());
    }
    auto lambda = dependency(tops);
    if (!lambda) break;
    std::size_t i0 = basis.size();
    for (std::size_t i = 0; i < basis.size(); ++i)
      if ((*lambda)[i] != 0 && (i0 == basis.size() || m[i] >= m[i0])) i0 = i;
    PolyVector next(basis[i0].size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if ((*lambda)[i] == 0) continue;
      LaurentPoly mult = LaurentPoly::monomial((*lambda)[i], sgn(dir) * (m[i0] - m[i]));
      for (std::size_t j = 0; j < next.size(); ++j)
        if (!basis[i][j].is_zero()) next[j] += mult * basis[i][j];
    }
    basis[i0] = scale_primitive(next);
  }
  for (auto& g : basis) g = normalize_vector(g);
  return basis;
}

ModuleBasis solution_module_basis(const SystemSpec& spec) {
  PolyMatrix A = system_matrix(spec);
  ModuleBasis B;
  B.n = spec.n();
  B.generators = weighted_reduce(kernel_basis(A, B.n), Direction::Plus, WeightVector(B.n, 0));
  for (const auto& g : B.generators)
    if (!satisfies_system(spec, g)) throw std::logic_error("kernel generator fails the system");
  return B;
}

ModuleBasis drop_coordinate(const ModuleBasis& B, std::size_t coord) {
  ModuleBasis r;
  r.n = B.n - 1;
  for (const auto& g : B.generators) {
    PolyVector v = g;
    v.erase(v.begin() + static_cast<long>(coord));
    r.generators.push_back(std::move(v));
  }
  if (module_rank(r.generators) < r.generators.size()) r.generators = module_basis(r.generators);
  std::erase_if(r.generators, [](const PolyVector& v) { return is_zero_vector(v, v.size()); });
  return r;
}

nlohmann::json to_json(const PolyMatrix& A) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : A) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& e : row) r.push_back(to_json(e));
    rows.push_back(r);
  }
  return rows;
}

}  // namespace wreath
