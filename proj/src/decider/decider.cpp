#include "wreath/decider.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "wreath/error.hpp"
#include "wreath/simplex.hpp"

namespace wreath {

namespace {

LaurentPoly integral_y(const WreathElem& e) {
  LaurentPoly y;
  if (!e.y.as_laurent(&y) || !y.is_integral()) throw Error(ErrorKind::InvalidInput, "generator y must be in Z[X^(+-1)]");
  return y;
}

void require_input(const GeneratorSet& G) {
  if (G.empty()) throw Error(ErrorKind::InvalidInput, "empty generator set");
  if (!G.all_integral()) throw Error(ErrorKind::InvalidInput, "generator y must be in Z[X^(+-1)]");
}

void add_stats(DecisionStats& into, const DecisionStats& s) {
  into.candidates_tried += s.candidates_tried;
  into.cells_tested += s.cells_tested;
  into.lp_calls += s.lp_calls;
}

std::string pair_set_string(const PairSet& S) {
  std::ostringstream os;
  os << '{';
  for (std::size_t t = 0; t < S.size(); ++t) os << (t ? "," : "") << '(' << S[t].first << ',' << S[t].second << ')';
  os << '}';
  return os.str();
}

nlohmann::json basis_json(const ModuleBasis& B) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& g : B.generators) {
    nlohmann::json v = nlohmann::json::array();
    for (const auto& p : g) v.push_back(to_json(p));
    j.push_back(v);
  }
  return j;
}

bool verified_witness(const GeneratorSet& G, const Word& w) {
  return !w.empty() && eval_word(G, w).is_identity() && is_full_image(G, w);
}

std::string state_key(const LaurentPoly& y, Exponent b, std::uint64_t mask) {
  std::string k = std::to_string(b) + '|' + std::to_string(mask) + '|';
  for (const auto& t : y.terms()) k += std::to_string(t.exp) + ':' + t.coef.get_str() + ',';
  return k;
}

}  // namespace

std::vector<PairSet> enumerate_double_full(const std::vector<std::size_t>& I, const std::vector<std::size_t>& J,
                                           std::size_t max_count) {
  PairSet all;
  for (auto i : I)
    for (auto j : J) all.emplace_back(i, j);
  if (all.size() > 24) throw Error(ErrorKind::LimitExceeded, "too many pairs in I x J");
  std::vector<std::uint32_t> masks;
  for (std::uint32_t m = 1; m < (std::uint32_t{1} << all.size()); ++m) {
    std::set<std::size_t> si, sj;
    for (std::size_t t = 0; t < all.size(); ++t)
      if (m >> t & 1) {
        si.insert(all[t].first);
        sj.insert(all[t].second);
      }
    if (si.size() == I.size() && sj.size() == J.size()) {
      masks.push_back(m);
      if (masks.size() > max_count) throw Error(ErrorKind::LimitExceeded, "too many double-full sets");
    }
  }
  auto as_set = [&](std::uint32_t m) {
    PairSet S;
    for (std::size_t t = 0; t < all.size(); ++t)
      if (m >> t & 1) S.push_back(all[t]);
    return S;
  };
  std::vector<PairSet> out;
  for (auto m : masks) out.push_back(as_set(m));
  std::stable_sort(out.begin(), out.end(), [](const PairSet& a, const PairSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

CandidateReport check_candidate(const GeneratorSet& G, const PairSet& S, DecisionStats* stats, bool debug) {
  CandidateReport rep;
  SystemSpec spec = build_system(G, S);
  rep.basis = solution_module_basis(spec);
  const bool no_k = spec.K.empty();
  rep.tested = no_k ? drop_coordinate(rep.basis, SystemSpec::coord_K) : rep.basis;
  if (debug) {
    rep.debug["S"] = pair_set_string(S);
    rep.debug["system_matrix"] = to_json(system_matrix(spec));
    rep.debug["basis"] = basis_json(rep.basis);
  }
  std::optional<std::size_t> kcoord = no_k ? std::nullopt : std::optional<std::size_t>(SystemSpec::coord_K);

  auto plus = decide_lc_condition(rep.tested, Direction::Plus, 1, SystemSpec::coord_S, kcoord, stats);
  rep.lc_plus = plus.holds;
  if (debug) {
    nlohmann::json cells = nlohmann::json::array();
    for (const auto& c : plus.cells) cells.push_back(to_json(c));
    rep.debug["cells_plus"] = cells;
  }
  if (!rep.lc_plus) return rep;

  LcResult minus = no_k ? decide_lc_condition(rep.tested, Direction::Minus, 0, SystemSpec::coord_S, std::nullopt, stats)
                        : decide_lc_condition(rep.tested, Direction::Minus, 0, SystemSpec::coord_K,
                                              SystemSpec::coord_S, stats);
  rep.lc_minus = minus.holds;
  if (debug) {
    nlohmann::json cells = nlohmann::json::array();
    for (const auto& c : minus.cells) cells.push_back(to_json(c));
    rep.debug["cells_minus"] = cells;
  }
  if (!rep.lc_minus) return rep;

  auto allr = decide_all_r(rep.tested, stats);
  rep.all_r = allr.holds;
  if (!allr.holds && !verify_gordan_certificate(rep.tested, allr))
    throw std::logic_error("Gordan certificate failed to verify");
  if (debug && allr.failure_point) rep.debug["failure_point"] = to_json(*allr.failure_point);
  return rep;
}

std::optional<WitnessResult> find_witness_details(const GeneratorSet& G, const PairSet& S, unsigned degree_bound,
                                                  std::uint64_t max_length) {
  SystemSpec spec = build_system(G, S);
  const PolyMatrix A = system_matrix(spec);
  const std::size_t n = spec.n();
  const Exponent d = spec.d;
  BaseGraph base = build_base_graph_A(G, S);

  for (Exponent T = 0; T <= static_cast<Exponent>(degree_bound); ++T) {
    // Unknown coefficients x_(c,e), e in [0, T] for pair and S coordinates, [0, T + 1] otherwise.
    auto width = [&](std::size_t c) -> Exponent {
      return (c == SystemSpec::coord_S || (c >= 2 && c < 2 + S.size())) ? T + 1 : T + 2;
    };
    std::vector<std::size_t> offset(n + 1, 0);
    for (std::size_t c = 0; c < n; ++c) offset[c + 1] = offset[c] + static_cast<std::size_t>(width(c));
    const std::size_t nx = offset[n];

    std::map<std::pair<std::size_t, Exponent>, std::size_t> eq_index;
    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> rhs;
    auto new_row = [&]() {
      rows.emplace_back(nx);
      rhs.emplace_back(0);
      return rows.size() - 1;
    };
    for (std::size_t r = 0; r < A.size(); ++r)
      for (std::size_t c = 0; c < n; ++c)
        for (const auto& term : A[r][c].terms())
          for (Exponent e = 0; e < width(c); ++e) {
            auto key = std::make_pair(r, term.exp + e);
            auto it = eq_index.find(key);
            std::size_t row = it == eq_index.end() ? (eq_index[key] = new_row()) : it->second;
            rows[row][offset[c] + static_cast<std::size_t>(e)] += term.coef;
          }
    // Lower bounds sum >= 1, each written with its own surplus variable.
    std::vector<std::vector<std::size_t>> at_least_one;
    for (std::size_t c = 2; c < n; ++c) {
      std::vector<std::size_t> v;
      for (Exponent e = 0; e < width(c); ++e) v.push_back(offset[c] + static_cast<std::size_t>(e));
      at_least_one.push_back(v);
    }
    std::vector<std::size_t> low, top;
    for (std::size_t t = 0; t < S.size(); ++t) {
      low.push_back(offset[spec.coord_pair(t)]);
      top.push_back(offset[spec.coord_pair(t)] + static_cast<std::size_t>(T));
    }
    at_least_one.push_back(low);
    at_least_one.push_back(top);
    const std::size_t total = nx + at_least_one.size();
    for (auto& row : rows) row.resize(total);
    for (std::size_t s = 0; s < at_least_one.size(); ++s) {
      std::size_t row = new_row();
      rows[row].resize(total);
      for (auto v : at_least_one[s]) rows[row][v] = 1;
      rows[row][nx + s] = -1;
      rhs[row] = 1;
    }
    auto lp = phase_one(rows, rhs);
    if (!lp.feasible) continue;

    Integer l = 1;
    for (std::size_t v = 0; v < nx; ++v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), lp.x[v].get_den_mpz_t());
    auto poly_of = [&](std::size_t c) {
      std::vector<LaurentPoly::Term> terms;
      for (Exponent e = 0; e < width(c); ++e) {
        Rational v = lp.x[offset[c] + static_cast<std::size_t>(e)] * l;
        if (v != 0) terms.push_back({d * e, v});
      }
      return LaurentPoly::from_terms(std::move(terms));
    };
    WitnessResult out;
    for (std::size_t t = 0; t < S.size(); ++t) out.family.pair[S[t]] = poly_of(spec.coord_pair(t));
    for (std::size_t t = 0; t < spec.K.size(); ++t) out.family.loop[spec.K[t]] = poly_of(spec.coord_loop(t));
    try {
      out.normalization = normalize_solution_family(G, S, out.family, base);
      out.graph = build_witness_graph(G, S, out.normalization.f, base);
      if (out.graph.edge_count() > max_length) continue;
      out.word = euler_circuit(out.graph, max_length);
    } catch (const Error&) {
      continue;
    }
    if (!verified_witness(G, out.word)) throw std::logic_error("constructed witness does not verify");
    return out;
  }
  return std::nullopt;
}

std::optional<Word> find_witness(const GeneratorSet& G, const PairSet& S, unsigned degree_bound) {
  auto r = find_witness_details(G, S, degree_bound);
  if (!r) return std::nullopt;
  return r->word;
}

Verdict decide_group(const GeneratorSet& G, const DeciderOptions& opt) {
  require_input(G);
  Verdict v;
  v.problem = Problem::Group;
  auto& ev = v.evidence;

  if (G.I().empty() && G.J().empty()) {
    ev.kind = "easy-case";
    std::vector<LaurentPoly> ys;
    for (auto k : G.K()) ys.push_back(integral_y(G[k]));
    auto n = positive_integer_combination(ys, &v.stats);
    v.answer = n.has_value();
    if (n) {
      ev.easy_coefficients = *n;
      bool small = std::all_of(n->begin(), n->end(), [](const Integer& c) { return c <= 4096; });
      if (opt.witness && small) {
        Word w;
        for (std::size_t k = 0; k < n->size(); ++k) w.insert(w.end(), (*n)[k].get_ui(), G.K()[k]);
        if (!verified_witness(G, w)) throw std::logic_error("easy-case witness does not verify");
        ev.witness = w;
      }
    } else {
      ev.reports.push_back("no positive integer combination of the y_k vanishes");
    }
    return v;
  }
  if (G.I().empty() || G.J().empty()) {
    ev.kind = "one-sided";
    ev.reports.push_back("every nonempty word has a nonzero total b");
    return v;
  }

  auto candidates = enumerate_double_full(G.I(), G.J(), opt.max_candidates);
  ev.kind = "no-candidate";
  for (const auto& S : candidates) {
    ++v.stats.candidates_tried;
    CandidateReport rep = check_candidate(G, S, &v.stats, opt.debug);
    if (opt.debug) ev.extra["candidates"].push_back(rep.debug);
    if (!rep.holds()) {
      std::string why = !rep.lc_plus    ? "no solution with positive top coefficients"
                        : !rep.lc_minus ? "no solution with positive bottom coefficients"
                                        : "not positive at every r > 0";
      ev.reports.push_back(pair_set_string(S) + ": " + why);
      continue;
    }
    v.answer = true;
    ev.kind = "local-global";
    ev.S = S;
    if (opt.witness) {
      auto w = find_witness_details(G, S, opt.witness_degree_bound, opt.max_witness_length);
      if (w) {
        ev.witness = w->word;
        ev.extra["witness_normalization"] = {{"p", w->normalization.p.get_str()},
                                             {"shift", w->normalization.shift},
                                             {"q", w->normalization.q}};
      } else {
        ev.extra["witness"] = "not found within the degree bound";
      }
    }
    return v;
  }
  return v;
}

Verdict decide_identity(const GeneratorSet& G, const DeciderOptions& opt) {
  require_input(G);
  if (G.size() > 16) throw Error(ErrorKind::LimitExceeded, "too many generators for subset enumeration");
  Verdict v;
  v.problem = Problem::Identity;
  std::map<std::vector<std::string>, bool> memo;
  const std::size_t n = G.size();
  for (std::size_t size = 1; size <= n; ++size) {
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(size), true);
    do {
      std::vector<std::size_t> idx;
      for (std::size_t a = 0; a < n; ++a)
        if (pick[a]) idx.push_back(a);
      GeneratorSet H = G.subset(idx);
      std::vector<std::string> key;
      for (const auto& e : H.elements()) key.push_back(e.to_string());
      std::sort(key.begin(), key.end());
      auto it = memo.find(key);
      bool ok;
      Verdict sub;
      if (it != memo.end()) {
        ok = it->second;
        if (ok) sub = decide_group(H, opt);
      } else {
        sub = decide_group(H, opt);
        add_stats(v.stats, sub.stats);
        ok = memo[key] = sub.answer;
      }
      if (!ok) continue;
      v.answer = true;
      v.evidence = sub.evidence;
      v.evidence.subset = idx;
      if (sub.evidence.witness) {
        Word w;
        for (auto a : *sub.evidence.witness) w.push_back(idx[a]);
        v.evidence.witness = w;
        if (!eval_word(G, w).is_identity()) throw std::logic_error("mapped witness does not verify");
      }
      v.evidence.extra["subset_kind"] = sub.evidence.kind;
      v.evidence.kind = "subset";
      return v;
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  v.evidence.kind = "no-subset";
  v.evidence.reports.push_back("no nonempty subset generates a group");
  return v;
}

OracleResult bfs_oracle(const GeneratorSet& G, std::size_t max_len) {
  OracleResult res;
  const std::size_t m = G.size();
  if (m == 0 || m > 63) return res;
  std::vector<LaurentPoly> ys;
  for (const auto& e : G.elements()) ys.push_back(integral_y(e));
  const std::uint64_t full = (std::uint64_t{1} << m) - 1;

  struct State {
    LaurentPoly y;
    Exponent b;
    std::uint64_t mask;
    Word word;
  };
  std::unordered_set<std::string> seen;
  std::vector<State> frontier{{LaurentPoly(), 0, 0, {}}};
  seen.insert(state_key(LaurentPoly(), 0, 0));
  for (std::size_t len = 1; len <= max_len && !frontier.empty(); ++len) {
    std::vector<State> next;
    for (const auto& s : frontier)
      for (std::size_t a = 0; a < m; ++a) {
        State t{s.y + ys[a].shifted(s.b), s.b + G[a].b, s.mask | (std::uint64_t{1} << a), s.word};
        t.word.push_back(a);
        if (t.mask == full && t.b == 0 && t.y.is_zero()) {
          res.found_word = t.word;
          return res;
        }
        if (seen.insert(state_key(t.y, t.b, t.mask)).second) next.push_back(std::move(t));
      }
    frontier = std::move(next);
  }
  res.exhausted = true;
  return res;
}

nlohmann::json to_json(const Verdict& v) {
  nlohmann::json j;
  j["problem"] = v.problem == Problem::Group ? "group" : "identity";
  j["verdict"] = v.answer;
  nlohmann::json ev;
  ev["kind"] = v.evidence.kind;
  if (!v.evidence.easy_coefficients.empty()) {
    nlohmann::json c = nlohmann::json::array();
    for (const auto& n : v.evidence.easy_coefficients) c.push_back(n.get_str());
    ev["coefficients"] = c;
  }
  if (v.evidence.S) {
    nlohmann::json s = nlohmann::json::array();
    for (const auto& [i, jj] : *v.evidence.S) s.push_back({i, jj});
    ev["S"] = s;
  }
  if (v.evidence.subset) ev["subset"] = *v.evidence.subset;
  if (v.evidence.witness) {
    ev["witness_length"] = v.evidence.witness->size();
    ev["witness"] = *v.evidence.witness;
  }
  if (!v.evidence.reports.empty()) ev["reports"] = v.evidence.reports;
  for (const auto& [k, val] : v.evidence.extra.items()) ev[k] = val;
  j["evidence"] = ev;
  j["stats"] = {{"candidates_tried", v.stats.candidates_tried},
                {"cells_tested", v.stats.cells_tested},
                {"lp_calls", v.stats.lp_calls}};
  return j;
}

std::string to_text(const Verdict& v) {
  std::ostringstream os;
  os << (v.problem == Problem::Group ? "group" : "identity") << ": " << (v.answer ? "true" : "false") << '\n';
  os << "evidence: " << v.evidence.kind << '\n';
  if (v.evidence.subset) {
    os << "subset:";
    for (auto a : *v.evidence.subset) os << ' ' << a;
    os << '\n';
  }
  if (v.evidence.S) os << "S: " << pair_set_string(*v.evidence.S) << '\n';
  if (!v.evidence.easy_coefficients.empty()) {
    os << "coefficients:";
    for (const auto& n : v.evidence.easy_coefficients) os << ' ' << n.get_str();
    os << '\n';
  }
  if (v.evidence.witness) os << "witness length: " << v.evidence.witness->size() << '\n';
  for (const auto& r : v.evidence.reports) os << "  " << r << '\n';
  os << "candidates " << v.stats.candidates_tried << ", cells " << v.stats.cells_tested << ", LPs "
     << v.stats.lp_calls << '\n';
  return os.str();
}

}  // namespace wreath
