// Acceptance suite: one PASS/FAIL line per criterion. Exit status is nonzero if any line fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "wreath/decider.hpp"
#include "wreath/error.hpp"

using namespace wreath;

namespace {

// Pinned targets.
constexpr std::size_t kOracleMaxLen = 8;
constexpr double kGridSeconds = 600.0;
constexpr unsigned kWitnessBound = 6;
constexpr std::uint64_t kWitnessMaxLength = 200000;
constexpr std::size_t kPropIfFamilies = 100;
constexpr std::size_t kAllRBases = 50;
constexpr std::size_t kAllRProbes = 1000;
constexpr Exponent kBox = 6;
constexpr std::uint64_t kSeed = 20240611;

int failures = 0;

void report(bool ok, int id, const std::string& name, const std::string& detail) {
  std::printf("[%s] %d %s: %s\n", ok ? "PASS" : "FAIL", id, name.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

WreathElem elem(LaurentPoly y, Exponent b) { return {RatFunc(std::move(y)), b}; }

std::vector<WreathElem> grid_alphabet() {
  std::vector<LaurentPoly> ys{LaurentPoly()};
  for (int c : {-1, 1})
    for (Exponent e : {-1, 0, 1}) ys.push_back(LaurentPoly::monomial(c, e));
  std::vector<WreathElem> out;
  for (const auto& y : ys)
    for (Exponent b = -2; b <= 2; ++b) out.push_back(elem(y, b));
  return out;
}

std::vector<GeneratorSet> grid_instances() {
  auto a = grid_alphabet();
  std::vector<GeneratorSet> out;
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    out.emplace_back(std::vector<WreathElem>{a[i]});
    for (std::size_t j = i + 1; j < n; ++j) {
      out.emplace_back(std::vector<WreathElem>{a[i], a[j]});
      for (std::size_t k = j + 1; k < n; ++k) out.emplace_back(std::vector<WreathElem>{a[i], a[j], a[k]});
    }
  }
  return out;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

LaurentPoly random_poly(std::mt19937_64& rng, Exponent lo, Exponent hi, int cmin, int cmax, Exponent step = 1) {
  std::uniform_int_distribution<int> coef(cmin, cmax);
  std::vector<LaurentPoly::Term> t;
  for (Exponent e = lo; e <= hi; ++e) {
    int c = coef(rng);
    if (c != 0) t.push_back({e * step, Rational(c)});
  }
  return LaurentPoly::from_terms(std::move(t));
}

}  // namespace

int main() {
  std::mt19937_64 rng(kSeed);
  const auto grid = grid_instances();

  // 1, 5, 8 share one pass over the grid; 2 runs on the positives.
  std::size_t oracle_pos = 0, disagreements = 0, kernels = 0, kernel_bad = 0, eq4 = 0, eq4_bad = 0;
  std::vector<std::size_t> positives;
  auto t0 = std::chrono::steady_clock::now();
  for (std::size_t t = 0; t < grid.size(); ++t) {
    const auto& G = grid[t];
    for (auto i : G.I())
      for (auto j : G.J()) {
        ++eq4;
        const auto& gi = G[i];
        const auto& gj = G[j];
        auto lhs = gi.pow(static_cast<unsigned>(-gj.b)) * gj.pow(static_cast<unsigned>(gi.b));
        Exponent d = G.require_d();
        auto E = LaurentPoly::geometric(0, d, static_cast<std::size_t>(gi.b * -gj.b / d));
        if (!(lhs == WreathElem{compute_h(G, i, j) * RatFunc(E), 0})) ++eq4_bad;
      }
    Verdict v = decide_group(G);
    if (v.answer) positives.push_back(t);
    if (!G.I().empty() && !G.J().empty())
      for (const auto& S : enumerate_double_full(G.I(), G.J())) {
        auto spec = build_system(G, S);
        auto B = solution_module_basis(spec);
        for (const auto& g : B.generators) {
          ++kernels;
          if (!satisfies_system(spec, g)) ++kernel_bad;
        }
      }
    auto o = bfs_oracle(G, kOracleMaxLen);
    if (o.found_word) {
      ++oracle_pos;
      if (!v.answer) {
        ++disagreements;
        std::printf("  disagreement on %s\n", to_json(G).dump().c_str());
      }
    }
  }
  double grid_time = seconds_since(t0);
  report(disagreements == 0 && grid_time < kGridSeconds, 1, "oracle agreement",
         std::to_string(grid.size()) + " instances, " + std::to_string(oracle_pos) + " oracle positives, " +
             std::to_string(positives.size()) + " decided positive, " + std::to_string(disagreements) +
             " disagreements, " + std::to_string(static_cast<int>(grid_time)) + " s");

  {
    std::size_t emitted = 0, bad = 0;
    for (auto t : positives) {
      const auto& G = grid[t];
      try {
        DeciderOptions opt;
        opt.witness = true;
        opt.witness_degree_bound = kWitnessBound;
        opt.max_witness_length = kWitnessMaxLength;
        Verdict v = decide_group(G, opt);
        if (!v.evidence.witness) continue;
        ++emitted;
        const Word& w = *v.evidence.witness;
        if (!eval_word(G, w).is_identity() || !is_full_image(G, w)) ++bad;
      } catch (const std::logic_error&) {
        ++emitted;
        ++bad;
      }
    }
    std::size_t hand = 0;
    for (auto G : {GeneratorSet({elem(LaurentPoly(1), 1), elem(LaurentPoly::monomial(-1, -1), -1)}),
                   GeneratorSet({elem({}, 6), elem({}, -4), elem({}, 0)}),
                   GeneratorSet({elem(LaurentPoly(1), 0), elem(LaurentPoly(-1), 0)})}) {
      DeciderOptions opt;
      opt.witness = true;
      opt.witness_degree_bound = kWitnessBound;
      auto v = decide_group(G, opt);
      if (v.evidence.witness && eval_word(G, *v.evidence.witness).is_identity() &&
          is_full_image(G, *v.evidence.witness))
        ++hand;
    }
    report(bad == 0 && hand == 3, 2, "witness round-trip",
           std::to_string(emitted) + " grid witnesses over " + std::to_string(positives.size()) + " positives, " +
               std::to_string(bad) + " failed; hand instances " + std::to_string(hand) + "/3");
  }

  {
    struct Case {
      std::vector<WreathElem> g;
      bool expect;
    };
    std::vector<Case> cases{
        {{elem(LaurentPoly(1), 1), elem(LaurentPoly::monomial(-1, -1), -1)}, true},
        {{elem(LaurentPoly(1), 1), elem({}, -1)}, false},
        {{elem({}, 6), elem({}, -4), elem({}, 0)}, true},
        {{elem(LaurentPoly(1), 0), elem(LaurentPoly(-1), 0)}, true},
        {{elem(LaurentPoly(1), 0)}, false},
        {{elem({}, 1), elem({}, -1)}, true},
    };
    std::size_t ok = 0;
    for (const auto& c : cases) ok += decide_group(GeneratorSet(c.g)).answer == c.expect;
    report(ok == cases.size(), 3, "hand-verified verdicts", std::to_string(ok) + "/" + std::to_string(cases.size()));
  }

  {
    std::size_t done = 0, bad = 0, attempts = 0;
    std::uniform_int_distribution<int> pick_b(1, 2), coin(0, 1), nk(0, 1);
    while (done < kPropIfFamilies && attempts < 20 * kPropIfFamilies) {
      ++attempts;
      const Exponent d = 1 + (done % 2);
      std::vector<WreathElem> g;
      g.push_back(elem(random_poly(rng, -1, 1, -1, 1), d * pick_b(rng)));
      g.push_back(elem(random_poly(rng, -1, 1, -1, 1), -d * pick_b(rng)));
      if (coin(rng)) g.push_back(elem(random_poly(rng, -1, 1, -1, 1), d * pick_b(rng)));
      if (nk(rng)) g.push_back(elem(random_poly(rng, -1, 1, -2, 2), 0));
      GeneratorSet G(g);
      if (G.require_d() != d) continue;
      auto all = enumerate_double_full(G.I(), G.J());
      const PairSet& S = all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
      SolutionFamily f;
      LaurentPoly fS;
      for (const auto& p : S) {
        LaurentPoly q;
        while (q.is_zero()) q = random_poly(rng, -1, 2, 0, 2, d);
        f.pair[p] = q;
        fS += q;
      }
      for (auto k : G.K()) {
        LaurentPoly q;
        while (q.is_zero()) q = random_poly(rng, fS.low() / d, fS.high() / d, 0, 2, d);
        f.loop[k] = q;
      }
      try {
        BaseGraph base = build_base_graph_A(G, S);
        auto norm = normalize_solution_family(G, S, f, base);
        GGraph graph = build_witness_graph(G, S, norm.f, base);
        RatFunc expect;
        for (const auto& p : S) expect += RatFunc(norm.f.pair.at(p)) * compute_h(G, p.first, p.second);
        for (const auto& [k, fk] : norm.f.loop) expect += RatFunc(fk) * G[k].y;
        WreathElem got = product(graph, G);
        if (!(got == WreathElem{expect, 0})) ++bad;
        ++done;
      } catch (const Error& e) {
        std::printf("  construction error: %s\n", e.what());
        ++bad;
        ++done;
      }
    }
    report(bad == 0 && done >= kPropIfFamilies, 4, "witness graph product identity",
           std::to_string(done) + " families, " + std::to_string(bad) + " mismatches");
  }

  report(kernel_bad == 0 && kernels > 0, 5, "kernel exactness",
         std::to_string(kernels) + " generators checked, " + std::to_string(kernel_bad) + " nonzero residuals");

  {
    std::size_t trues = 0, falses = 0, bad = 0;
    std::uniform_int_distribution<int> dim(1, 3), num(1, 100000);
    for (std::size_t t = 0; t < kAllRBases; ++t) {
      ModuleBasis B;
      B.n = static_cast<std::size_t>(dim(rng));
      std::size_t m = static_cast<std::size_t>(dim(rng));
      for (std::size_t i = 0; i < m; ++i) {
        PolyVector v;
        for (std::size_t j = 0; j < B.n; ++j) v.push_back(random_poly(rng, -2, 2, -2, 2));
        B.generators.push_back(v);
      }
      B.generators = module_basis(B.generators);
      auto res = decide_all_r(B);
      if (res.holds) {
        ++trues;
        for (std::size_t p = 0; p < kAllRProbes; ++p) {
          Rational r(num(rng), 1000);
          if (!lp_strict_feasible(evaluate(B, r)).feasible) {
            ++bad;
            break;
          }
        }
      } else {
        ++falses;
        if (!verify_gordan_certificate(B, res)) ++bad;
      }
    }
    report(bad == 0, 6, "all-r certificates",
           std::to_string(trues) + " true (probed), " + std::to_string(falses) + " false (certified), " +
               std::to_string(bad) + " failures");
  }

  {
    std::size_t bases = 0, alphas = 0, missed = 0;
    std::uniform_int_distribution<int> dim(2, 4), gens(1, 3);
    for (std::size_t t = 0; t < 12; ++t) {
      std::size_t n = static_cast<std::size_t>(dim(rng));
      std::size_t m = static_cast<std::size_t>(gens(rng));
      std::vector<PolyVector> B;
      for (std::size_t i = 0; i < m; ++i) {
        PolyVector v;
        for (std::size_t j = 0; j < n; ++j) v.push_back(random_poly(rng, -2, 2, -1, 1));
        B.push_back(v);
      }
      Direction sign = t % 2 ? Direction::Minus : Direction::Plus;
      Exponent a = static_cast<Exponent>(t % 3) - 1;
      WeightConstraint c{0, 1, a};
      auto cells = enumerate_weight_cells(B, n, sign, c);
      ++bases;
      WeightVector alpha(n, -kBox);
      for (;;) {
        if (alpha[0] - alpha[1] <= a) {
          ++alphas;
          auto here = initial_data(B, n, sign, alpha);
          bool found = false;
          for (const auto& cell : cells)
            if (cell.same_initials(here)) {
              found = true;
              break;
            }
          if (!found) ++missed;
        }
        std::size_t j = 0;
        while (j < n && alpha[j] == kBox) alpha[j++] = -kBox;
        if (j == n) break;
        ++alpha[j];
      }
    }
    report(missed == 0, 7, "initial-module exhaustiveness",
           std::to_string(bases) + " bases, " + std::to_string(alphas) + " weights, " + std::to_string(missed) +
               " uncovered");
  }

  report(eq4_bad == 0 && eq4 > 0, 8, "power-product identity",
         std::to_string(eq4) + " pairs, " + std::to_string(eq4_bad) + " mismatches");

  return failures == 0 ? 0 : 1;
}
