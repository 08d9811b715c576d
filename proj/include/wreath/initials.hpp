#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <json.hpp>

#include "wreath/realdec.hpp"

namespace wreath {

/// in_{*,alpha} of every generator, plus their coefficient matrix (coordinates x generators).
struct InitialData {
  Direction sign = Direction::Plus;
  WeightVector alpha;
  std::vector<PolyVector> initial_vectors;
  Matrix<Rational> coef_matrix;

  /// Same initial vectors (alpha ignored).
  bool same_initials(const InitialData& o) const;
};

/// Coordinate j keeps in_*(f_j) where sgn * deg_*(f_j) + alpha_j is maximal, else 0.
PolyVector initial_vector(const PolyVector& f, Direction sign, const WeightVector& alpha);

InitialData initial_data(const std::vector<PolyVector>& gens, std::size_t n, Direction sign,
                         const WeightVector& alpha);

/// Basis of the same module whose initial vectors at alpha have independent coefficients,
/// so they generate the initial module with monomial multipliers.
ModuleBasis adapted_basis(const ModuleBasis& B, Direction sign, const WeightVector& alpha);

/// alpha_hi - alpha_lo <= a
struct WeightConstraint {
  std::size_t hi = 0;
  std::size_t lo = 1;
  Exponent a = 0;
};

/// One representative per achievable family of initial vectors. Representatives are the
/// Bellman-Ford potentials of the cell's difference constraints, translated so max alpha_j = 0.
std::vector<InitialData> enumerate_weight_cells(const std::vector<PolyVector>& gens, std::size_t n,
                                                Direction sign, const std::optional<WeightConstraint>& c);
/// Constraint alpha_0 - alpha_1 <= a (none when n < 2).
std::vector<InitialData> enumerate_weight_cells(const ModuleBasis& B, Direction sign, Exponent a);

struct LcResult {
  bool holds = false;
  /// When holds: the realizing cell, LP multipliers, and the module element
  /// f = sum r_i X^(-sgn * m_i) u_i over the generator family u.
  std::optional<InitialData> cell;
  std::vector<Rational> r;
  std::vector<PolyVector> generators;
  PolyVector element;
  /// Cells of the last pass.
  std::vector<InitialData> cells;
};

/// Is there f in the module with lc_*(f) > 0 in every coordinate and
/// deg_*(f_coordS) + a >= deg_*(f_coordK)? Without coordK only the lc part is asked.
LcResult decide_lc_condition(const ModuleBasis& B, Direction sign, Exponent a, std::size_t coordS,
                             std::optional<std::size_t> coordK, DecisionStats* stats = nullptr);

/// Is in_{*,alpha}(f) a combination of monomial multiples of the given initial vectors?
bool reduces_to_zero(const PolyVector& initial, const std::vector<PolyVector>& initials, Direction sign,
                     const WeightVector& alpha);

nlohmann::json to_json(const InitialData& d);

}  // namespace wreath
