#pragma once

#include <json.hpp>

#include "wreath/dense_poly.hpp"
#include "wreath/error.hpp"
#include "wreath/laurent_poly.hpp"
#include "wreath/rat_func.hpp"
#include "wreath/rational.hpp"

namespace wreath {

/// [["coef", exp], ...] in ascending exponent order.
nlohmann::json to_json(const LaurentPoly& f);
LaurentPoly laurent_from_json(const nlohmann::json& j);

}  // namespace wreath
