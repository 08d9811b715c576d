#include "wreath/group.hpp"

#include <numeric>
#include <vector>

#include "wreath/error.hpp"

namespace wreath {

WreathElem WreathElem::pow(unsigned n) const {
  WreathElem r = identity(), base = *this;
  while (n) {
    if (n & 1u) r = r * base;
    n >>= 1u;
    if (n) base = base * base;
  }
  return r;
}

bool WreathElem::in_integer_wreath() const {
  LaurentPoly p;
  return y.as_laurent(&p) && p.is_integral();
}

std::string WreathElem::to_string() const { return "(" + y.to_string() + ", " + std::to_string(b) + ")"; }

GeneratorSet::GeneratorSet(std::vector<WreathElem> gens) : gens_(std::move(gens)) {
  Exponent g = 0;
  for (std::size_t a = 0; a < gens_.size(); ++a) {
    Exponent b = gens_[a].b;
    if (b > 0) I_.push_back(a);
    else if (b < 0) J_.push_back(a);
    else K_.push_back(a);
    g = std::gcd(g, b < 0 ? -b : b);
  }
  if (g > 0) d_ = g;
}

const WreathElem& GeneratorSet::at(std::size_t a) const {
  if (a >= gens_.size())
    throw Error(ErrorKind::BadIndex, "generator index " + std::to_string(a) + " out of range " +
                                         std::to_string(gens_.size()));
  return gens_[a];
}

Exponent GeneratorSet::require_d() const {
  if (!d_) throw Error(ErrorKind::NoRadical, "all generators have b = 0");
  return *d_;
}

GeneratorSet GeneratorSet::subset(const std::vector<std::size_t>& indices) const {
  std::vector<WreathElem> v;
  v.reserve(indices.size());
  for (std::size_t a : indices) v.push_back(at(a));
  return GeneratorSet(std::move(v));
}

bool GeneratorSet::all_integral() const {
  for (const auto& g : gens_)
    if (!g.in_integer_wreath()) return false;
  return true;
}

WreathElem eval_word(const GeneratorSet& G, const Word& w) {
  // Group the shifts per letter: y = sum_a (sum of X^prefix over occurrences of a) * y_a.
  std::vector<std::vector<LaurentPoly::Term>> shifts(G.size());
  Exponent pos = 0;
  for (std::size_t a : w) {
    const WreathElem& g = G.at(a);
    shifts[a].push_back({pos, Rational(1)});
    pos += g.b;
  }
  RatFunc y;
  for (std::size_t a = 0; a < G.size(); ++a) {
    if (shifts[a].empty()) continue;
    y += RatFunc(LaurentPoly::from_terms(std::move(shifts[a]))) * G[a].y;
  }
  return {y, pos};
}

bool is_full_image(const GeneratorSet& G, const Word& w) {
  std::vector<bool> seen(G.size(), false);
  for (std::size_t a : w) {
    if (a >= G.size()) return false;
    seen[a] = true;
  }
  for (bool s : seen)
    if (!s) return false;
  return true;
}

WreathElem radical(const GeneratorSet& G, std::size_t a) {
  const WreathElem& g = G.at(a);
  Exponent d = G.require_d();
  if (g.b == 0) return g;
  Exponent m = (g.b > 0 ? g.b : -g.b) / d;
  Exponent step = g.b > 0 ? d : -d;
  LaurentPoly den = LaurentPoly::geometric(0, step, static_cast<std::size_t>(m));
  return {g.y * RatFunc(LaurentPoly(1), den), step};
}

GeneratorSet radical_alphabet(const GeneratorSet& G) {
  std::vector<WreathElem> v;
  v.reserve(G.size());
  for (std::size_t a = 0; a < G.size(); ++a) v.push_back(radical(G, a));
  return GeneratorSet(std::move(v));
}

Word radicalize(const GeneratorSet& G, const Word& w) {
  Word r;
  for (std::size_t a : w) {
    Exponent b = G.at(a).b;
    Exponent copies = b == 0 ? 1 : (b > 0 ? b : -b) / G.require_d();
    for (Exponent c = 0; c < copies; ++c) r.push_back(a);
  }
  return r;
}

GeneratorSet parse_generator_set(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("generators") || !j["generators"].is_array())
    throw Error(ErrorKind::InvalidInput, "expected an object with a \"generators\" array");
  std::vector<WreathElem> gens;
  for (const auto& g : j["generators"]) {
    if (!g.is_object() || !g.contains("b") || !g.contains("y") || !g["b"].is_number_integer())
      throw Error(ErrorKind::InvalidInput, "generator needs integer \"b\" and polynomial \"y\": " + g.dump());
    LaurentPoly y = laurent_from_json(g["y"]);
    if (!y.is_integral()) throw Error(ErrorKind::InvalidInput, "non-integer coefficient in " + y.to_string());
    gens.push_back({RatFunc(y), g["b"].get<Exponent>()});
  }
  if (gens.empty()) throw Error(ErrorKind::InvalidInput, "empty generator set");
  return GeneratorSet(std::move(gens));
}

nlohmann::json to_json(const WreathElem& e) {
  LaurentPoly p;
  if (e.y.as_laurent(&p)) return {{"b", e.b}, {"y", to_json(p)}};
  return {{"b", e.b}, {"y_num", to_json(e.y.num())}, {"y_den", to_json(e.y.den())}};
}

nlohmann::json to_json(const GeneratorSet& G) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& g : G.elements()) arr.push_back(to_json(g));
  return {{"generators", arr}};
}

}  // namespace wreath
