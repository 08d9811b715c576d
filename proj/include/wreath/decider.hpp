#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "wreath/initials.hpp"

namespace wreath {

enum class Problem { Identity, Group };

struct DeciderOptions {
  bool witness = false;
  unsigned witness_degree_bound = 4;
  /// Refuse more double-full candidates than this.
  std::size_t max_candidates = 4096;
  /// Largest witness word accepted from the Euler circuit.
  std::uint64_t max_witness_length = 2'000'000;
  /// Attach bases, cells and matrices to the evidence.
  bool debug = false;
};

struct Certificate {
  /// "easy-case", "local-global", "one-sided", "no-candidate", "subset", "no-subset".
  std::string kind;
  std::vector<Integer> easy_coefficients;
  std::optional<PairSet> S;
  /// Identity Problem: indices of the subgroup found.
  std::optional<std::vector<std::size_t>> subset;
  /// Word over the original alphabet, verified before it is stored.
  std::optional<Word> witness;
  /// Per tried candidate: which condition failed.
  std::vector<std::string> reports;
  nlohmann::json extra;
};

struct Verdict {
  Problem problem = Problem::Group;
  bool answer = false;
  Certificate evidence;
  DecisionStats stats;
};

/// Is the generated semigroup a group? Error(InvalidInput) on an empty or non-integral set.
Verdict decide_group(const GeneratorSet& G, const DeciderOptions& opt = {});

/// Does the generated semigroup contain the neutral element?
Verdict decide_identity(const GeneratorSet& G, const DeciderOptions& opt = {});

/// All S in I x J meeting every i and every j, by size and then lexicographically.
std::vector<PairSet> enumerate_double_full(const std::vector<std::size_t>& I, const std::vector<std::size_t>& J,
                                           std::size_t max_count = 1u << 20);

/// Outcome of the three local conditions for one S.
struct CandidateReport {
  bool all_r = false;
  bool lc_plus = false;
  bool lc_minus = false;
  ModuleBasis basis;
  /// Basis actually tested (f_K dropped when K is empty).
  ModuleBasis tested;
  bool holds() const { return all_r && lc_plus && lc_minus; }
  nlohmann::json debug;
};

CandidateReport check_candidate(const GeneratorSet& G, const PairSet& S, DecisionStats* stats = nullptr,
                                bool debug = false);

struct WitnessResult {
  Word word;
  SolutionFamily family;
  Normalization normalization;
  GGraph graph;
};

/// Bounded search for a positive integer family with windows of length <= degree_bound + 1,
/// then the explicit graph construction. nullopt when nothing within the bound works.
std::optional<WitnessResult> find_witness_details(const GeneratorSet& G, const PairSet& S, unsigned degree_bound,
                                                  std::uint64_t max_length = 2'000'000);
std::optional<Word> find_witness(const GeneratorSet& G, const PairSet& S, unsigned degree_bound);

struct OracleResult {
  std::optional<Word> found_word;
  bool exhausted = false;
};

/// Breadth-first search for a full-image word of length <= max_len evaluating to the identity.
OracleResult bfs_oracle(const GeneratorSet& G, std::size_t max_len);

nlohmann::json to_json(const Verdict& v);
std::string to_text(const Verdict& v);

}  // namespace wreath
