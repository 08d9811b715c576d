#include "wreath/error.hpp"
#include "wreath/polyring.hpp"

namespace wreath {

nlohmann::json to_json(const LaurentPoly& f) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& t : f.terms()) arr.push_back({to_string(t.coef), t.exp});
  return arr;
}

LaurentPoly laurent_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw Error(ErrorKind::InvalidInput, "polynomial must be an array of [coef, exp] pairs");
  std::vector<LaurentPoly::Term> terms;
  for (const auto& item : j) {
    if (!item.is_array() || item.size() != 2 || !item[1].is_number_integer())
      throw Error(ErrorKind::InvalidInput, "bad term " + item.dump());
    Rational c;
    if (item[0].is_string()) c = parse_rational(item[0].get<std::string>());
    else if (item[0].is_number_integer()) c = Rational(Integer(std::to_string(item[0].get<long long>())));
    else throw Error(ErrorKind::InvalidInput, "bad coefficient " + item[0].dump());
    terms.push_back({item[1].get<Exponent>(), c});
  }
  return LaurentPoly::from_terms(std::move(terms));
}

}  // namespace wreath
