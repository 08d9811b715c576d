#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "wreath/group.hpp"

namespace wreath {

using IndexPair = std::pair<std::size_t, std::size_t>;
using PairSet = std::vector<IndexPair>;

/// Directed multigraph on integer vertices; an edge with label a goes from s to s + step(a).
/// Edges are a multiset keyed by (start, label).
class GGraph {
 public:
  struct Edge {
    Exponent start;
    std::size_t label;
    friend auto operator<=>(const Edge&, const Edge&) = default;
  };

  GGraph() = default;
  explicit GGraph(std::vector<Exponent> steps) : steps_(std::move(steps)) {}
  /// Steps b_a of the alphabet; the graph has no vertices yet.
  static GGraph over(const GeneratorSet& G);
  static GGraph single_vertex(const GeneratorSet& G, Exponent v = 0);

  const std::vector<Exponent>& steps() const { return steps_; }
  const std::set<Exponent>& vertices() const { return vertices_; }
  const std::map<Edge, std::uint64_t>& edges() const { return edges_; }
  std::uint64_t edge_count() const;
  std::uint64_t multiplicity(Exponent start, std::size_t label) const;
  Exponent end_of(const Edge& e) const { return e.start + steps_.at(e.label); }

  void add_vertex(Exponent v) { vertices_.insert(v); }
  void add_edge(Exponent start, std::size_t label, std::uint64_t count = 1);
  /// Removes count copies; the vertices stay.
  void remove_edge(Exponent start, std::size_t label, std::uint64_t count = 1);

  bool is_balanced() const;
  /// Underlying undirected connectivity over all vertices (the empty graph counts as connected).
  bool is_connected() const;
  bool is_eulerian() const { return is_balanced() && is_connected(); }
  GGraph component_of(Exponent v) const;

  friend bool operator==(const GGraph& a, const GGraph& b) {
    return a.steps_ == b.steps_ && a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<Exponent> steps_;
  std::set<Exponent> vertices_;
  std::map<Edge, std::uint64_t> edges_;
};

/// Edges along the partial sums of b starting at 0, cut down to the component of 0.
GGraph graph_of_word(const GeneratorSet& G, const Word& w);

/// (sum_e X^s(e) y_l(e), sum_e b_l(e)).
WreathElem product(const GGraph& g, const GeneratorSet& G);

/// Every edge (s, a) of c is added to g as (s + v, a).
GGraph attach(const GGraph& g, const GGraph& c, Exponent v);
/// In-place attach with every edge of c taken `times` times.
void attach_into(GGraph& g, const GGraph& c, Exponent v, std::uint64_t times = 1);

/// Hierholzer from vertex 0, edges taken by increasing label.
/// Throws Error(NotEulerian); Error(LimitExceeded) past max_length letters.
Word euler_circuit(const GGraph& g, std::uint64_t max_length = 50'000'000);

struct PrimitiveCircuit {
  enum class Kind { Pair, Loop };
  Kind kind;
  std::size_t first;   // i for a pair, k for a loop
  std::size_t second;  // j for a pair, unused for a loop
  Exponent attach_vertex;

  bool is_pair() const { return kind == Kind::Pair; }
  friend bool operator==(const PrimitiveCircuit&, const PrimitiveCircuit&) = default;
};

/// Graph of one primitive circuit at vertex 0 over the given steps.
GGraph primitive_circuit_graph(const PrimitiveCircuit& c, const std::vector<Exponent>& steps);

/// Peels loops, then repeatedly a (label into m, label out of m) pair at the rightmost
/// vertex m; returns the reverse of that order, so attaching in sequence from {0} rebuilds g.
/// Throws Error(NotRadical) if a step is not in {-d, 0, d}; Error(NotEulerian).
std::vector<PrimitiveCircuit> primitive_decomposition(const GGraph& g);

/// |b_j| edges labelled i then b_i edges labelled j, starting at vertex 0.
GGraph elementary_circuit(const GeneratorSet& G, std::size_t i, std::size_t j);

/// 1 + X^d + ... + X^(b_i |b_j| - d)
LaurentPoly elementary_factor(const GeneratorSet& G, std::size_t i, std::size_t j);

struct BaseGraph {
  GGraph graph;
  /// Per pair: sum of X^v over the attachment vertices v of its elementary circuits.
  std::map<IndexPair, LaurentPoly> attachments;
  /// Per pair: attachments * elementary_factor, so product(graph) = sum a_(i,j) h_(i,j).
  std::map<IndexPair, LaurentPoly> a;
};

/// Eulerian graph built from elementary circuits of types in S, containing vertex d.
/// Every type of S is used at least once.
BaseGraph build_base_graph_A(const GeneratorSet& G, const PairSet& S);

/// Coefficient families indexed like S and K.
struct SolutionFamily {
  std::map<IndexPair, LaurentPoly> pair;
  std::map<std::size_t, LaurentPoly> loop;
};

/// N = product of |b_a| over I and J.
Exponent witness_modulus(const GeneratorSet& G);

struct Normalization {
  SolutionFamily f;
  Integer p;
  Exponent shift = 0;
  unsigned q = 0;
};

/// Multiplies the family by p X^s D V^q (D, V fixed windows) so that the gap-free and
/// degree conditions for the foundation hold. Input must be nonzero in N[X^(+-d)].
Normalization normalize_solution_family(const GeneratorSet& G, const PairSet& S, const SolutionFamily& f,
                                        const BaseGraph& base);

/// Witness graph: N/d copies of the foundation A, then g_(i,j) elementary circuits, then f_k loops. Throws Error(PreconditionViolated) naming the failed condition.
GGraph build_witness_graph(const GeneratorSet& G, const PairSet& S, const SolutionFamily& f,
                           const BaseGraph& base);
GGraph build_witness_graph(const GeneratorSet& G, const PairSet& S, const SolutionFamily& f);

nlohmann::json to_json(const GGraph& g);
std::string to_dot(const GGraph& g);

}  // namespace wreath
