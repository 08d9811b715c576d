#include "wreath/ggraph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "wreath/error.hpp"

namespace wreath {

GGraph GGraph::over(const GeneratorSet& G) {
  std::vector<Exponent> steps;
  steps.reserve(G.size());
  for (const auto& g : G.elements()) steps.push_back(g.b);
  return GGraph(std::move(steps));
}

GGraph GGraph::single_vertex(const GeneratorSet& G, Exponent v) {
  GGraph g = over(G);
  g.add_vertex(v);
  return g;
}

std::uint64_t GGraph::edge_count() const {
  std::uint64_t n = 0;
  for (const auto& [e, c] : edges_) n += c;
  return n;
}

std::uint64_t GGraph::multiplicity(Exponent start, std::size_t label) const {
  auto it = edges_.find({start, label});
  return it == edges_.end() ? 0 : it->second;
}

void GGraph::add_edge(Exponent start, std::size_t label, std::uint64_t count) {
  if (label >= steps_.size())
    throw Error(ErrorKind::BadIndex, "edge label " + std::to_string(label) + " outside the alphabet");
  if (count == 0) return;
  edges_[{start, label}] += count;
  vertices_.insert(start);
  vertices_.insert(start + steps_[label]);
}

void GGraph::remove_edge(Exponent start, std::size_t label, std::uint64_t count) {
  auto it = edges_.find({start, label});
  if (it == edges_.end() || it->second < count)
    throw Error(ErrorKind::PreconditionViolated, "removing a missing edge");
  it->second -= count;
  if (it->second == 0) edges_.erase(it);
}

bool GGraph::is_balanced() const {
  std::map<Exponent, __int128> net;
  for (const auto& [e, c] : edges_) {
    net[e.start] += c;
    net[end_of(e)] -= c;
  }
  return std::all_of(net.begin(), net.end(), [](const auto& kv) { return kv.second == 0; });
}

namespace {

std::map<Exponent, std::vector<Exponent>> undirected_adjacency(const GGraph& g) {
  std::map<Exponent, std::vector<Exponent>> adj;
  for (Exponent v : g.vertices()) adj[v];
  for (const auto& [e, c] : g.edges()) {
    Exponent t = g.end_of(e);
    adj[e.start].push_back(t);
    adj[t].push_back(e.start);
  }
  return adj;
}

std::set<Exponent> reachable(const std::map<Exponent, std::vector<Exponent>>& adj, Exponent from) {
  std::set<Exponent> seen{from};
  std::deque<Exponent> queue{from};
  while (!queue.empty()) {
    Exponent v = queue.front();
    queue.pop_front();
    auto it = adj.find(v);
    if (it == adj.end()) continue;
    for (Exponent u : it->second)
      if (seen.insert(u).second) queue.push_back(u);
  }
  return seen;
}

}  // namespace

bool GGraph::is_connected() const {
  if (vertices_.empty()) return true;
  auto adj = undirected_adjacency(*this);
  return reachable(adj, *vertices_.begin()).size() == vertices_.size();
}

GGraph GGraph::component_of(Exponent v) const {
  GGraph r(steps_);
  auto adj = undirected_adjacency(*this);
  auto comp = reachable(adj, v);
  r.vertices_ = comp;
  for (const auto& [e, c] : edges_)
    if (comp.count(e.start)) r.edges_[e] = c;
  return r;
}

GGraph graph_of_word(const GeneratorSet& G, const Word& w) {
  GGraph g = GGraph::single_vertex(G, 0);
  Exponent pos = 0;
  for (std::size_t a : w) {
    Exponent b = G.at(a).b;
    g.add_edge(pos, a);
    pos += b;
  }
  return g.component_of(0);
}

WreathElem product(const GGraph& g, const GeneratorSet& G) {
  if (G.size() < g.steps().size()) throw Error(ErrorKind::BadIndex, "alphabet smaller than the graph's labels");
  std::vector<std::vector<LaurentPoly::Term>> shifts(g.steps().size());
  Exponent b = 0;
  for (const auto& [e, c] : g.edges()) {
    shifts[e.label].push_back({e.start, Rational(Integer(std::to_string(c)))});
    b += static_cast<Exponent>(c) * g.steps()[e.label];
  }
  RatFunc y;
  for (std::size_t a = 0; a < shifts.size(); ++a) {
    if (shifts[a].empty()) continue;
    y += RatFunc(LaurentPoly::from_terms(std::move(shifts[a]))) * G[a].y;
  }
  return {y, b};
}

void attach_into(GGraph& g, const GGraph& c, Exponent v, std::uint64_t times) {
  if (g.steps() != c.steps()) throw Error(ErrorKind::PreconditionViolated, "attaching graphs over different alphabets");
  if (times == 0) return;
  for (Exponent u : c.vertices()) g.add_vertex(u + v);
  for (const auto& [e, cnt] : c.edges()) g.add_edge(e.start + v, e.label, cnt * times);
}

GGraph attach(const GGraph& g, const GGraph& c, Exponent v) {
  GGraph r = g;
  attach_into(r, c, v);
  return r;
}

Word euler_circuit(const GGraph& g, std::uint64_t max_length) {
  if (!g.is_balanced()) throw Error(ErrorKind::NotEulerian, "in-degree differs from out-degree");
  if (!g.is_connected()) throw Error(ErrorKind::NotEulerian, "graph is not connected");
  std::uint64_t total = g.edge_count();
  if (total == 0) return {};
  if (!g.vertices().count(0)) throw Error(ErrorKind::NotEulerian, "vertex 0 is missing");
  if (total > max_length)
    throw Error(ErrorKind::LimitExceeded, "Euler circuit of " + std::to_string(total) + " letters");

  struct Out {
    std::vector<std::pair<std::size_t, std::uint64_t>> labels;  // (label, remaining)
    std::size_t next = 0;
  };
  std::map<Exponent, Out> out;
  for (const auto& [e, c] : g.edges()) out[e.start].labels.push_back({e.label, c});

  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::pair<Exponent, std::size_t>> stack{{0, kNone}};
  Word circuit;
  circuit.reserve(total);
  while (!stack.empty()) {
    Exponent v = stack.back().first;
    auto it = out.find(v);
    if (it != out.end()) {
      Out& o = it->second;
      while (o.next < o.labels.size() && o.labels[o.next].second == 0) ++o.next;
      if (o.next < o.labels.size()) {
        std::size_t a = o.labels[o.next].first;
        --o.labels[o.next].second;
        stack.push_back({v + g.steps()[a], a});
        continue;
      }
    }
    if (stack.back().second != kNone) circuit.push_back(stack.back().second);
    stack.pop_back();
  }
  std::reverse(circuit.begin(), circuit.end());
  return circuit;
}

GGraph primitive_circuit_graph(const PrimitiveCircuit& c, const std::vector<Exponent>& steps) {
  GGraph g(steps);
  g.add_vertex(0);
  if (c.is_pair()) {
    g.add_edge(0, c.first);
    g.add_edge(steps.at(c.first), c.second);
  } else {
    g.add_edge(0, c.first);
  }
  return g;
}

std::vector<PrimitiveCircuit> primitive_decomposition(const GGraph& g) {
  Exponent d = 0;
  for (const auto& [e, c] : g.edges()) {
    Exponent s = g.steps()[e.label];
    Exponent a = s < 0 ? -s : s;
    if (a == 0) continue;
    if (d == 0) d = a;
    else if (a != d)
      throw Error(ErrorKind::NotRadical, "edge lengths " + std::to_string(d) + " and " + std::to_string(a));
  }
  if (!g.is_eulerian()) throw Error(ErrorKind::NotEulerian, "primitive decomposition needs an Eulerian graph");

  std::vector<PrimitiveCircuit> peeled;
  std::map<GGraph::Edge, std::uint64_t> work;
  for (const auto& [e, c] : g.edges()) {
    if (g.steps()[e.label] == 0) {
      for (std::uint64_t t = 0; t < c; ++t) peeled.push_back({PrimitiveCircuit::Kind::Loop, e.label, 0, e.start});
    } else {
      work[e] = c;
    }
  }

  // Edges grouped by start; up-edges (step +d) into m start at m - d, down-edges out of m start at m.
  while (!work.empty()) {
    Exponent top = work.rbegin()->first.start;
    bool up_at_top = false;
    for (auto it = work.lower_bound({top, 0}); it != work.end(); ++it)
      if (g.steps()[it->first.label] > 0) up_at_top = true;
    Exponent m = up_at_top ? top + d : top;

    auto first_with = [&](Exponent start, bool up) -> std::map<GGraph::Edge, std::uint64_t>::iterator {
      for (auto it = work.lower_bound({start, 0}); it != work.end() && it->first.start == start; ++it)
        if ((g.steps()[it->first.label] > 0) == up) return it;
      return work.end();
    };
    auto in = first_with(m - d, true);
    auto out = first_with(m, false);
    if (in == work.end() || out == work.end())
      throw Error(ErrorKind::NotEulerian, "unbalanced vertex " + std::to_string(m));
    std::uint64_t k = std::min(in->second, out->second);
    for (std::uint64_t t = 0; t < k; ++t)
      peeled.push_back({PrimitiveCircuit::Kind::Pair, in->first.label, out->first.label, m - d});
    in->second -= k;
    out->second -= k;
    if (in->second == 0) work.erase(in);
    if (out->second == 0) work.erase(out);
  }
  std::reverse(peeled.begin(), peeled.end());
  return peeled;
}

nlohmann::json to_json(const GGraph& g) {
  nlohmann::json vs = nlohmann::json::array(), es = nlohmann::json::array();
  for (Exponent v : g.vertices()) vs.push_back(v);
  for (const auto& [e, c] : g.edges())
    for (std::uint64_t t = 0; t < c; ++t) es.push_back({e.start, e.label});
  return {{"vertices", vs}, {"edges", es}};
}

std::string to_dot(const GGraph& g) {
  std::ostringstream os;
  os << "digraph G {\n";
  for (Exponent v : g.vertices()) os << "  \"" << v << "\";\n";
  for (const auto& [e, c] : g.edges()) {
    os << "  \"" << e.start << "\" -> \"" << g.end_of(e) << "\" [label=\"" << e.label;
    if (c > 1) os << " x" << c;
    os << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace wreath
