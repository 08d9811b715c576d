#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include <json.hpp>

#include "wreath/ggraph.hpp"

namespace wreath {

using PolyVector = std::vector<LaurentPoly>;
using PolyMatrix = std::vector<PolyVector>;
using WeightVector = std::vector<Exponent>;

/// y_i/(1 + X^d + ... + X^(b_i-d)) + y_j/(X^-d + ... + X^-|b_j|). Error(BadIndex) unless i in I, j in J.
RatFunc compute_h(const GeneratorSet& G, std::size_t i, std::size_t j);

/// c_0..c_(d-1) with f = sum c_m(X^d) X^m. Error(BadDenominator) if den is not in Q[X^(+-d)].
std::vector<RatFunc> decompose_mod_d(const RatFunc& f, Exponent d);
std::vector<LaurentPoly> decompose_mod_d(const LaurentPoly& f, Exponent d);

/// The linear system for one double-full S, written in the variable X^d.
/// Coordinates: 0 = f_S, 1 = f_K, then one per pair of S, then one per k in K.
struct SystemSpec {
  PairSet S;
  std::vector<std::size_t> K;
  Exponent d = 1;
  std::map<IndexPair, RatFunc> h;
  std::map<IndexPair, std::vector<RatFunc>> h_components;
  std::map<std::size_t, std::vector<LaurentPoly>> y_components;

  std::size_t n() const { return 2 + S.size() + K.size(); }
  static constexpr std::size_t coord_S = 0;
  static constexpr std::size_t coord_K = 1;
  std::size_t coord_pair(std::size_t t) const { return 2 + t; }
  std::size_t coord_loop(std::size_t t) const { return 2 + S.size() + t; }
};

SystemSpec build_system(const GeneratorSet& G, const PairSet& S);

struct ModuleBasis {
  std::vector<PolyVector> generators;
  std::size_t n = 0;

  bool empty() const { return generators.empty(); }
  std::size_t size() const { return generators.size(); }
};

/// Generators of {v : A v = 0} over Q[X^(+-1)]; they form a free basis.
std::vector<PolyVector> kernel_basis(const PolyMatrix& A, std::size_t cols);

/// (d + 2) x n matrix, each h-row multiplied by the lcm of its denominators.
PolyMatrix system_matrix(const SystemSpec& spec);

ModuleBasis solution_module_basis(const SystemSpec& spec);

/// Exact check of all d component equations and both sum equations.
bool satisfies_system(const SystemSpec& spec, const PolyVector& v);

/// Basis of the module generated by the given vectors (zero vectors dropped).
std::vector<PolyVector> module_basis(std::vector<PolyVector> vectors);
/// Rank over Q(X).
std::size_t module_rank(const std::vector<PolyVector>& vectors);

/// Weighted initial exponent m_(*,alpha)(v) = max_j sgn(*) deg_*(v_j) + alpha_j; -inf for v = 0.
ExtDegree weighted_degree(const PolyVector& v, Direction dir, const WeightVector& alpha);
/// Coefficients of in_(*,alpha)(v): lc_*(v_j) where the maximum is attained, else 0.
std::vector<Rational> top_coefficients(const PolyVector& v, Direction dir, const WeightVector& alpha);

/// Row reduction for the weighted degree: repeatedly cancels the top coefficient vectors until they
/// are linearly independent. Input must be a basis; output is a basis of the same module.
std::vector<PolyVector> weighted_reduce(std::vector<PolyVector> basis, Direction dir, const WeightVector& alpha);

/// Scale to primitive integer content and shift so the lowest exponent is 0.
PolyVector normalize_vector(const PolyVector& v);

ModuleBasis drop_coordinate(const ModuleBasis& B, std::size_t coord);

nlohmann::json to_json(const PolyMatrix& A);

}  // namespace wreath
