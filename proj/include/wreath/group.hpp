#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "wreath/polyring.hpp"

namespace wreath {

/// Element (y, b) of Q(X) x| Z; it lies in Z wr Z when y is an integral Laurent polynomial.
struct WreathElem {
  RatFunc y;
  Exponent b = 0;

  static WreathElem identity() { return {}; }

  WreathElem inverse() const { return {-y.shifted(-b), -b}; }
  WreathElem pow(unsigned n) const;
  bool is_identity() const { return b == 0 && y.is_zero(); }
  bool in_integer_wreath() const;

  friend WreathElem operator*(const WreathElem& a, const WreathElem& c) { return {a.y + c.y.shifted(a.b), a.b + c.b}; }
  friend bool operator==(const WreathElem& a, const WreathElem& c) { return a.b == c.b && a.y == c.y; }

  std::string to_string() const;
};

/// Sequence of generator indices (0-based).
using Word = std::vector<std::size_t>;

/// An indexed generator list with its split into I (b > 0), J (b < 0), K (b = 0)
/// and d = gcd of |b| over I and J.
class GeneratorSet {
 public:
  GeneratorSet() = default;
  explicit GeneratorSet(std::vector<WreathElem> gens);

  std::size_t size() const { return gens_.size(); }
  bool empty() const { return gens_.empty(); }
  /// Throws Error(BadIndex).
  const WreathElem& at(std::size_t a) const;
  const WreathElem& operator[](std::size_t a) const { return gens_[a]; }
  const std::vector<WreathElem>& elements() const { return gens_; }

  const std::vector<std::size_t>& I() const { return I_; }
  const std::vector<std::size_t>& J() const { return J_; }
  const std::vector<std::size_t>& K() const { return K_; }
  std::optional<Exponent> d() const { return d_; }
  /// Throws Error(NoRadical) when I and J are both empty.
  Exponent require_d() const;

  /// Generators restricted to the given indices, in that order.
  GeneratorSet subset(const std::vector<std::size_t>& indices) const;
  bool all_integral() const;

 private:
  std::vector<WreathElem> gens_;
  std::vector<std::size_t> I_, J_, K_;
  std::optional<Exponent> d_;
};

/// Left-to-right product; Error(BadIndex) on an out-of-range letter.
WreathElem eval_word(const GeneratorSet& G, const Word& w);
bool is_full_image(const GeneratorSet& G, const Word& w);

/// (y/(1+X^d+...+X^(b-d)), d) for b > 0, (y/(1+X^-d+...+X^-(|b|-d)), -d) for b < 0, (y, 0) for b = 0.
WreathElem radical(const GeneratorSet& G, std::size_t a);
GeneratorSet radical_alphabet(const GeneratorSet& G);
/// Replace each letter a with |b_a|/d copies of itself (K letters stay single).
Word radicalize(const GeneratorSet& G, const Word& w);

/// {"generators":[{"b":6,"y":[["1",0],["-2",3]]}, ...]}; requires integer coefficients.
GeneratorSet parse_generator_set(const nlohmann::json& j);
nlohmann::json to_json(const GeneratorSet& G);
nlohmann::json to_json(const WreathElem& e);

}  // namespace wreath
