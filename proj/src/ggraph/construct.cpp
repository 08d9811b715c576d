// Elementary circuits, the foundation graph A and the witness graph.
#include <algorithm>
#include <limits>
#include <numeric>

#include "wreath/error.hpp"
#include "wreath/ggraph.hpp"

namespace wreath {

namespace {

Exponent abs_b(const GeneratorSet& G, std::size_t a) {
  Exponent b = G.at(a).b;
  return b < 0 ? -b : b;
}

std::uint64_t to_count(const Rational& c) {
  if (c.get_den() != 1 || c < 0 || !c.get_num().fits_ulong_p())
    throw Error(ErrorKind::LimitExceeded, "multiplicity " + c.get_str() + " does not fit");
  return c.get_num().get_ui();
}

void require_double_full(const GeneratorSet& G, const PairSet& S) {
  if (G.I().empty() || G.J().empty()) throw Error(ErrorKind::PreconditionViolated, "I and J must be nonempty");
  for (const auto& [i, j] : S)
    if (i >= G.size() || j >= G.size() || G[i].b <= 0 || G[j].b >= 0)
      throw Error(ErrorKind::PreconditionViolated, "pair (" + std::to_string(i) + "," + std::to_string(j) +
                                                       ") is not in I x J");
  for (std::size_t i : G.I())
    if (std::none_of(S.begin(), S.end(), [i](const IndexPair& p) { return p.first == i; }))
      throw Error(ErrorKind::PreconditionViolated, "S is not double-full: misses i = " + std::to_string(i));
  for (std::size_t j : G.J())
    if (std::none_of(S.begin(), S.end(), [j](const IndexPair& p) { return p.second == j; }))
      throw Error(ErrorKind::PreconditionViolated, "S is not double-full: misses j = " + std::to_string(j));
}

/// Nonnegative counts c with sum c_t * parts_t = target, or empty if impossible.
std::vector<Exponent> representation(Exponent target, const std::vector<Exponent>& parts) {
  if (target < 0) return {};
  std::vector<int> via(static_cast<std::size_t>(target) + 1, -1);
  via[0] = static_cast<int>(parts.size());
  for (Exponent x = 1; x <= target; ++x)
    for (std::size_t t = 0; t < parts.size(); ++t)
      if (parts[t] <= x && via[static_cast<std::size_t>(x - parts[t])] >= 0) {
        via[static_cast<std::size_t>(x)] = static_cast<int>(t);
        break;
      }
  if (via[static_cast<std::size_t>(target)] < 0) return {};
  std::vector<Exponent> counts(parts.size(), 0);
  for (Exponent x = target; x > 0;) {
    auto t = static_cast<std::size_t>(via[static_cast<std::size_t>(x)]);
    ++counts[t];
    x -= parts[t];
  }
  return counts;
}

bool in_nonneg_grading(const LaurentPoly& f, Exponent d) {
  return !f.is_zero() && f.is_integral() && f.is_nonnegative() && f.exponents_divisible_by(d);
}

}  // namespace

GGraph elementary_circuit(const GeneratorSet& G, std::size_t i, std::size_t j) {
  Exponent bi = G.at(i).b, bj = G.at(j).b;
  if (bi <= 0 || bj >= 0) throw Error(ErrorKind::BadIndex, "elementary circuit needs i in I and j in J");
  GGraph g = GGraph::single_vertex(G, 0);
  Exponent v = 0;
  for (Exponent t = 0; t < -bj; ++t, v += bi) g.add_edge(v, i);
  for (Exponent t = 0; t < bi; ++t, v += bj) g.add_edge(v, j);
  return g;
}

LaurentPoly elementary_factor(const GeneratorSet& G, std::size_t i, std::size_t j) {
  Exponent d = G.require_d();
  return LaurentPoly::geometric(0, d, static_cast<std::size_t>(abs_b(G, i) * abs_b(G, j) / d));
}

Exponent witness_modulus(const GeneratorSet& G) {
  Exponent N = 1;
  for (std::size_t a : G.I()) N *= abs_b(G, a);
  for (std::size_t a : G.J()) N *= abs_b(G, a);
  return N;
}

BaseGraph build_base_graph_A(const GeneratorSet& G, const PairSet& S) {
  require_double_full(G, S);
  std::map<std::size_t, std::size_t> partner;  // S(i) and S(j)
  for (const auto& [i, j] : S) {
    partner.emplace(i, j);
    partner.emplace(j, i);
  }

  std::vector<Exponent> bI, bJ;
  Exponent d1 = 0, d2 = 0, sumI = 0, sumJ = 0;
  for (std::size_t i : G.I()) {
    bI.push_back(abs_b(G, i));
    d1 = std::gcd(d1, bI.back());
    sumI += bI.back();
  }
  for (std::size_t j : G.J()) {
    bJ.push_back(abs_b(G, j));
    d2 = std::gcd(d2, bJ.back());
    sumJ += bJ.back();
  }
  const Exponent d = std::gcd(d1, d2);

  // d1 n1 - d2 n2 = d with n1 >= 1, n2 >= 0.
  Exponent n1 = 1;
  while ((d1 * n1 - d) % d2 != 0) ++n1;
  const Exponent n2 = (d1 * n1 - d) / d2;

  // Every letter is used once; the rest is found in the numerical semigroups.
  std::vector<Exponent> cI, cJ;
  Exponent TI = 0, TJ = 0;
  for (Exponent n = 0;; ++n) {
    if (n > 100000) throw Error(ErrorKind::LimitExceeded, "no Bezout chain found for the foundation graph");
    TI = d1 * (n1 + d2 * n);
    TJ = d2 * (n2 + d1 * n);
    cI = representation(TI - sumI, bI);
    cJ = representation(TJ - sumJ, bJ);
    if (!cI.empty() && !cJ.empty()) break;
  }

  BaseGraph base;
  base.graph = GGraph::single_vertex(G, 0);
  auto put = [&](std::size_t i, std::size_t j, Exponent v) {
    attach_into(base.graph, elementary_circuit(G, i, j), v);
    base.attachments[{i, j}] += LaurentPoly::x_pow(v);
  };
  Exponent v = 0;
  for (std::size_t t = 0; t < G.I().size(); ++t) {
    std::size_t i = G.I()[t];
    for (Exponent c = 0; c <= cI[t]; ++c) {
      put(i, partner.at(i), v);
      v += bI[t];
    }
  }
  for (std::size_t t = 0; t < G.J().size(); ++t) {
    std::size_t j = G.J()[t];
    for (Exponent c = 0; c <= cJ[t]; ++c) {
      v -= bJ[t];
      put(partner.at(j), j, v);
    }
  }
  // Types of S not reached above hang off vertex 0, so every a_(i,j) is nonzero.
  for (const auto& p : S)
    if (!base.attachments.count(p)) put(p.first, p.second, 0);

  for (const auto& [p, att] : base.attachments) base.a[p] = att * elementary_factor(G, p.first, p.second);
  return base;
}

Normalization normalize_solution_family(const GeneratorSet& G, const PairSet& S, const SolutionFamily& f,
                                        const BaseGraph& base) {
  require_double_full(G, S);
  const Exponent d = G.require_d();
  const Exponent N = witness_modulus(G);
  for (const auto& p : S)
    if (!f.pair.count(p) || !in_nonneg_grading(f.pair.at(p), d))
      throw Error(ErrorKind::PreconditionViolated, "f_(i,j) must be a nonzero element of N[X^(+-d)]");
  for (const auto& [k, fk] : f.loop)
    if (!in_nonneg_grading(fk, d))
      throw Error(ErrorKind::PreconditionViolated, "f_k must be a nonzero element of N[X^(+-d)]");

  const LaurentPoly W = LaurentPoly::geometric(0, d, static_cast<std::size_t>(N / d));
  LaurentPoly D(1), V;
  Exponent wm = 1, wn = 1;
  if (N >= 2 * d) {
    D = W.shifted(-d);
    V = D;
    wn = N / d - 2;
  } else {
    V = LaurentPoly::geometric(-d, d, 3);
  }

  unsigned q = 0;
  for (const auto& p : S) {
    LaurentPoly lifted = exact_quotient(f.pair.at(p) * D, elementary_factor(G, p.first, p.second));
    q = std::max(q, gap_free_exponent(lifted, d, wm, wn));
  }

  LaurentPoly mult = D * V.pow(q);
  Exponent shift = 0;
  for (unsigned guard = 0;; ++guard, ++q, mult *= V) {
    if (guard > 10000) throw Error(ErrorKind::LimitExceeded, "normalisation window did not converge");
    Exponent lo = std::numeric_limits<Exponent>::min(), hi = std::numeric_limits<Exponent>::max();
    for (const auto& p : S) {
      LaurentPoly F = f.pair.at(p) * mult;
      const LaurentPoly& a = base.a.at(p);
      lo = std::max(lo, a.high() + N - F.high());
      hi = std::min(hi, a.low() - d - F.low());
    }
    // lo is a multiple of d already: every exponent involved is.
    if (lo <= hi) {
      shift = lo;
      break;
    }
  }

  Integer p_mult = 1;
  mult = mult.shifted(shift);
  for (const auto& pr : S) {
    LaurentPoly E = elementary_factor(G, pr.first, pr.second);
    LaurentPoly A1 = exact_quotient(f.pair.at(pr) * mult, E);
    LaurentPoly A2 = exact_quotient(base.a.at(pr) * W, E);
    for (const auto& t : A2.terms()) {
      Integer need = floor_div(t.coef / A1.coefficient(t.exp)) + 1;
      if (need > p_mult) p_mult = need;
    }
  }

  Normalization out;
  out.p = p_mult;
  out.shift = shift;
  out.q = q;
  mult *= Rational(p_mult);
  for (const auto& [k, v] : f.pair) out.f.pair[k] = v * mult;
  for (const auto& [k, v] : f.loop) out.f.loop[k] = v * mult;
  return out;
}

GGraph build_witness_graph(const GeneratorSet& G, const PairSet& S, const SolutionFamily& f,
                           const BaseGraph& base) {
  require_double_full(G, S);
  const Exponent d = G.require_d();
  const Exponent N = witness_modulus(G);
  auto fail = [](const std::string& what) { throw Error(ErrorKind::PreconditionViolated, what); };

  if (f.pair.size() != S.size()) fail("family must have exactly one f_(i,j) per pair of S");
  for (const auto& p : S)
    if (!f.pair.count(p) || !in_nonneg_grading(f.pair.at(p), d)) fail("f_(i,j) not in N[X^(+-d)]*");
  std::set<std::size_t> K(G.K().begin(), G.K().end());
  if (f.loop.size() != K.size()) fail("family must have exactly one f_k per k in K");
  for (const auto& [k, fk] : f.loop)
    if (!K.count(k) || !in_nonneg_grading(fk, d)) fail("f_k not in N[X^(+-d)]*");

  const LaurentPoly W = LaurentPoly::geometric(0, d, static_cast<std::size_t>(N / d));
  std::map<IndexPair, LaurentPoly> g;
  LaurentPoly fS, fK;
  for (const auto& p : S) {
    const LaurentPoly& fp = f.pair.at(p);
    const LaurentPoly& a = base.a.at(p);
    LaurentPoly gp;
    if (!divides(elementary_factor(G, p.first, p.second), fp - a * W, &gp))
      fail("gap-free condition: (f - a W_N) is not divisible by the elementary factor");
    if (gp.is_zero() || !gp.is_integral() || !gp.is_nonnegative())
      fail("gap-free condition: g_(i,j) is not in N[X^(+-d)]*");
    if (!is_gap_free(gp, d)) fail("gap-free condition: g_(i,j) has a gap");
    if (!(fp.high() > a.high() + N - d)) fail("degree condition: deg+ f_(i,j) <= deg+ a_(i,j) + N - d");
    if (!(fp.low() < a.low())) fail("degree condition: deg- f_(i,j) >= deg- a_(i,j)");
    g[p] = std::move(gp);
    fS += fp;
  }
  for (const auto& [k, fk] : f.loop) fK += fk;
  if (!fK.is_zero()) {
    if (fS.degree(Direction::Plus) + ExtDegree(d) < fK.degree(Direction::Plus))
      fail("top degree condition: deg+ f_S + d < deg+ f_K");
    if (fS.degree(Direction::Minus) > fK.degree(Direction::Minus)) fail("bottom degree condition: deg- f_S > deg- f_K");
  }

  GGraph out = GGraph::single_vertex(G, 0);
  for (Exponent k = 0; k < N / d; ++k) attach_into(out, base.graph, d * k);
  for (const auto& [p, gp] : g) {
    GGraph elem = elementary_circuit(G, p.first, p.second);
    for (const auto& t : gp.terms()) attach_into(out, elem, t.exp, to_count(t.coef));
  }
  for (const auto& [k, fk] : f.loop)
    for (const auto& t : fk.terms()) out.add_edge(t.exp, k, to_count(t.coef));

  if (!out.is_eulerian()) fail("construction produced a non-Eulerian graph");
  return out;
}

GGraph build_witness_graph(const GeneratorSet& G, const PairSet& S, const SolutionFamily& f) {
  return build_witness_graph(G, S, f, build_base_graph_A(G, S));
}

}  // namespace wreath
