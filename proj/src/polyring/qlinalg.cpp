#include "wreath/qlinalg.hpp"

namespace wreath {

std::size_t rank(std::vector<QVector> rows) {
  if (rows.empty()) return 0;
  std::size_t cols = rows[0].size(), r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      Rational f = rows[i][c] / rows[r][c];
      for (std::size_t k = c; k < cols; ++k) rows[i][k] -= f * rows[r][k];
    }
    ++r;
  }
  return r;
}

std::optional<QVector> dependency(const std::vector<QVector>& rows) {
  const std::size_t m = rows.size();
  if (m == 0) return std::nullopt;
  const std::size_t cols = rows[0].size();
  // Each working row carries the combination of inputs it equals.
  std::vector<QVector> work = rows, combo(m, QVector(m));
  for (std::size_t i = 0; i < m; ++i) combo[i][i] = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m; ++c) {
    std::size_t p = r;
    while (p < m && work[p][c] == 0) ++p;
    if (p == m) continue;
    std::swap(work[p], work[r]);
    std::swap(combo[p], combo[r]);
    for (std::size_t i = r + 1; i < m; ++i) {
      if (work[i][c] == 0) continue;
      Rational f = work[i][c] / work[r][c];
      for (std::size_t k = c; k < cols; ++k) work[i][k] -= f * work[r][k];
      for (std::size_t k = 0; k < m; ++k) combo[i][k] -= f * combo[r][k];
    }
    ++r;
  }
  if (r == m) return std::nullopt;
  return combo[r];
}

}  // namespace wreath
