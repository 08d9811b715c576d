#pragma once

#include <optional>
#include <vector>

#include "wreath/rational.hpp"

namespace wreath {

using QVector = std::vector<Rational>;

std::size_t rank(std::vector<QVector> rows);

/// Some nonzero lambda with sum lambda_i rows_i = 0, if the rows are dependent.
std::optional<QVector> dependency(const std::vector<QVector>& rows);

}  // namespace wreath
