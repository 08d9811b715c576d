#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <json.hpp>

#include "wreath/algebraic.hpp"
#include "wreath/linmod.hpp"

namespace wreath {

struct DecisionStats {
  std::size_t candidates_tried = 0;
  std::size_t cells_tested = 0;
  std::size_t lp_calls = 0;
};

template <class F>
using Matrix = std::vector<std::vector<F>>;

/// Either z with M z > 0 coordinate-wise, or a Gordan certificate y >= 0, y != 0, M^T y = 0.
template <class F>
struct StrictLpResult {
  bool feasible = false;
  std::vector<F> z;
  std::vector<F> y;
};

StrictLpResult<Rational> lp_strict_feasible(const Matrix<Rational>& M, DecisionStats* stats = nullptr);
StrictLpResult<AlgebraicNumber> lp_strict_feasible(const Matrix<AlgebraicNumber>& M,
                                                   DecisionStats* stats = nullptr);

/// Positive roots of all minors, and one rational sample per open cell between them.
struct SamplePlan {
  std::vector<AlgebraicPoint> critical_points;
  std::vector<Rational> open_cell_samples;
};

struct AllRResult {
  bool holds = false;
  SamplePlan plan;
  /// On failure: the point (a rational r* is stored as the root of X - r*) and a Gordan
  /// certificate y, each y_j a polynomial in theta reduced modulo point.poly.
  std::optional<AlgebraicPoint> failure_point;
  std::vector<DensePoly> certificate;
};

/// Evaluation M(r) with M(r)[coord][generator] = g_generator[coord](r).
Matrix<Rational> evaluate(const ModuleBasis& B, const Rational& r);

/// Determinant by fraction-free elimination.
DensePoly bareiss_determinant(std::vector<std::vector<DensePoly>> M);

/// Square-free product of the distinct positive-root factors of all nonzero minors of B.
DensePoly critical_polynomial(const ModuleBasis& B);

SamplePlan make_sample_plan(const ModuleBasis& B);

/// For every r > 0, is there z with M(r) z > 0?
AllRResult decide_all_r(const ModuleBasis& B, DecisionStats* stats = nullptr);

/// Checks an AllRResult failure certificate exactly: y >= 0, y != 0, M(r*)^T y = 0.
bool verify_gordan_certificate(const ModuleBasis& B, const AllRResult& result);

/// Positive integers n_k with sum n_k y_k = 0, if any.
std::optional<std::vector<Integer>> positive_integer_combination(const std::vector<LaurentPoly>& ys,
                                                                 DecisionStats* stats = nullptr);

nlohmann::json to_json(const AlgebraicPoint& p);

}  // namespace wreath
