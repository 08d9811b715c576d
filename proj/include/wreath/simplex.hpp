#pragma once

#include <cstddef>
#include <vector>

namespace wreath {

/// Phase I of the simplex method on A x = b, x >= 0, with Bland's rule.
/// F is an ordered field with a free function sign(F) -> {-1, 0, 1}.
/// On infeasibility `farkas` holds y with y^T A <= 0 and y^T b > 0.
template <class F>
struct PhaseOneResult {
  bool feasible = false;
  std::vector<F> x;
  std::vector<F> farkas;
};

template <class F>
PhaseOneResult<F> phase_one(const std::vector<std::vector<F>>& A, const std::vector<F>& b) {
  const std::size_t m = A.size();
  const std::size_t n = m ? A[0].size() : 0;
  std::vector<std::vector<F>> T(m, std::vector<F>(n + m));
  std::vector<F> rhs(m);
  std::vector<int> flip(m, 1);
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (sign(b[i]) < 0) flip[i] = -1;
    for (std::size_t j = 0; j < n; ++j) T[i][j] = flip[i] < 0 ? -A[i][j] : A[i][j];
    T[i][n + i] = F(1);
    rhs[i] = flip[i] < 0 ? -b[i] : b[i];
    basis[i] = n + i;
  }
  auto cost = [n](std::size_t j) { return j >= n ? F(1) : F(0); };
  auto reduced = [&](std::size_t j) {
    F z = cost(j);
    for (std::size_t i = 0; i < m; ++i)
      if (basis[i] >= n && sign(T[i][j]) != 0) z -= T[i][j];
    return z;
  };

  for (;;) {
    std::size_t enter = n + m;
    for (std::size_t j = 0; j < n + m; ++j)
      if (sign(reduced(j)) < 0) {
        enter = j;
        break;
      }
    if (enter == n + m) break;
    std::size_t leave = m;
    F best;
    for (std::size_t i = 0; i < m; ++i) {
      if (sign(T[i][enter]) <= 0) continue;
      F ratio = rhs[i] / T[i][enter];
      if (leave == m) {
        leave = i;
        best = ratio;
        continue;
      }
      int c = sign(ratio - best);
      if (c < 0 || (c == 0 && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) break;  // cannot happen: phase I is bounded below
    F piv = T[leave][enter];
    for (auto& v : T[leave]) v /= piv;
    rhs[leave] /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave) continue;
      F f = T[i][enter];
      if (sign(f) == 0) continue;
      for (std::size_t j = 0; j < n + m; ++j)
        if (sign(T[leave][j]) != 0) T[i][j] -= f * T[leave][j];
      rhs[i] -= f * rhs[leave];
    }
    basis[leave] = enter;
  }

  PhaseOneResult<F> out;
  F objective(0);
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] >= n) objective += rhs[i];
  out.feasible = sign(objective) == 0;
  if (out.feasible) {
    out.x.assign(n, F(0));
    for (std::size_t i = 0; i < m; ++i)
      if (basis[i] < n) out.x[basis[i]] = rhs[i];
  } else {
    out.farkas.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
      F pi = F(1) - reduced(n + i);
      out.farkas[i] = flip[i] < 0 ? -pi : pi;
    }
  }
  return out;
}

}  // namespace wreath
