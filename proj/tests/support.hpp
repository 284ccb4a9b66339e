#pragma once

// Shared fixture builders for the unit and acceptance suites.

#include <random>

#include "fincat/adjunction.hpp"
#include "fincat/fixtures.hpp"
#include "fincat/limits.hpp"
#include "fincat/presentation.hpp"

namespace fincat::testing {

// Category of all functions between finite sets of the given sizes.
// Arrows are identified by their graphs; every class is a singleton.
struct SetMapCat {
  FinCategory cat;
  // (source object, target object, graph) -> arrow index
  std::map<std::tuple<int, int, std::vector<int>>, ArrIx> ix;

  ArrIx arrow(int a, int b, const std::vector<int>& graph) const {
    return ix.at({a, b, graph});
  }
};

inline SetMapCat setmap_category(const std::vector<int>& sizes) {
  SetMapCat S;
  FinCategory& C = S.cat;
  for (int s : sizes) C.objects.push_back("S" + std::to_string(s));
  const int n = static_cast<int>(sizes.size());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (sizes[a] > 0 && sizes[b] == 0) continue;  // no maps into the empty set
      std::vector<int> g(sizes[a], 0);
      while (true) {
        std::string label = "f" + std::to_string(a) + "_" + std::to_string(b) + "_";
        for (int v : g) label += std::to_string(v);
        S.ix[{a, b, g}] = C.num_arrows();
        C.arrows.push_back({a, b, label});
        C.eq_class.push_back(static_cast<int>(C.eq_class.size()));
        int i = sizes[a];
        bool done = (i == 0);
        while (i > 0) {
          --i;
          if (++g[i] < sizes[b]) break;
          g[i] = 0;
          if (i == 0) done = true;
        }
        if (done) break;
      }
    }
  for (int a = 0; a < n; ++a) {
    std::vector<int> idg(sizes[a]);
    for (int i = 0; i < sizes[a]; ++i) idg[i] = i;
    C.identities.push_back(S.ix.at({a, a, idg}));
  }
  // composition of graphs, keyed over all composable pairs
  std::vector<std::vector<int>> graph(C.num_arrows());
  for (const auto& [key, arr] : S.ix) graph[arr] = std::get<2>(key);
  for (ArrIx g2 = 0; g2 < C.num_arrows(); ++g2)
    for (ArrIx f = 0; f < C.num_arrows(); ++f) {
      if (C.dst(f) != C.src(g2)) continue;
      std::vector<int> comp(graph[f].size());
      for (std::size_t i = 0; i < graph[f].size(); ++i) comp[i] = graph[g2][graph[f][i]];
      C.comp[{g2, f}] = S.ix.at({C.src(f), C.dst(g2), comp});
    }
  return S;
}

// Both limits mediate each other and the mediators are mutually inverse
// up to the hom equivalence.
inline void require_limits_agree(const LimitData& A, const LimitData& B) {
  const FinCategory& C = A.cone.diagram.target;
  auto m1 = limit_mediator(A, B.cone);  // B.apex -> A.apex
  auto m2 = limit_mediator(B, A.cone);
  if (!m1 || !m2) throw std::logic_error("limits do not mediate each other");
  if (!equiv(C, compose(C, *m1, *m2), C.id(A.cone.apex)) ||
      !equiv(C, compose(C, *m2, *m1), C.id(B.cone.apex)))
    throw std::logic_error("limit comparison arrows are not mutually inverse");
}

// Five Galois-connection adjunctions used across the suites.
inline std::vector<Adjunction> galois_fixtures() {
  std::vector<Adjunction> out;
  out.push_back(identity_adjunction(fixture_chain(3)));
  // doubling -| halving-floor between chain(2) and chain(4)
  out.push_back(galois_adjunction(fixture_chain(2), fixture_chain(4), {0, 2}, {0, 0, 1, 1}));
  // round-up collapse chain(4) -> chain(2), right adjoint picks the top fiber
  out.push_back(galois_adjunction(fixture_chain(4), fixture_chain(2), {0, 1, 1, 1}, {0, 3}));
  // diagonal -| min on chain(3) x chain(3)
  {
    FinCategory C = fixture_chain(3);
    FinCategory P = product_category(C, C);
    std::vector<ObjIx> diag, meet;
    for (int x = 0; x < 3; ++x) diag.push_back(product_object(C, x, x));
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) meet.push_back(std::min(a, b));
    out.push_back(galois_adjunction(C, P, diag, meet));
  }
  // gcd-with-4 between divisors(12) and divisors(4)
  out.push_back(galois_adjunction(fixture_divisors(12), fixture_divisors(4), {0, 1, 0, 2, 1, 2},
                                  {2, 4, 5}));
  return out;
}

// All Galois connections chain(m) -> chain(n), as monotone object maps
// with f(0) = 0 and the right adjoint g(y) = max{ x | f(x) <= y }.
inline std::vector<Adjunction> all_chain_galois(int m, int n) {
  FinCategory C = fixture_chain(m);
  FinCategory D = fixture_chain(n);
  std::vector<Adjunction> out;
  std::vector<int> f(m, 0);
  auto emit = [&]() {
    std::vector<int> g(n);
    for (int y = 0; y < n; ++y) {
      int best = 0;
      for (int x = 0; x < m; ++x)
        if (f[x] <= y) best = x;
      g[y] = best;
    }
    out.push_back(galois_adjunction(C, D, f, g));
  };
  // enumerate monotone f with f(0) = 0
  auto rec = [&](auto&& self, int i) -> void {
    if (i == m) {
      emit();
      return;
    }
    for (int v = f[i - 1]; v < n; ++v) {
      f[i] = v;
      self(self, i + 1);
    }
  };
  if (m == 1)
    emit();
  else
    rec(rec, 1);
  return out;
}

// Sweep every typeable (alpha, beta) component family over all ordered
// pairs drawn from `adjs` and check that the two mate characterizations
// agree. Returns the number of candidates examined; throws on any
// disagreement, naming the candidate.
inline int mate_equivalence_sweep(const std::vector<Adjunction>& adjs) {
  int candidates = 0;
  for (const Adjunction& A : adjs)
    for (const Adjunction& A2 : adjs) {
      const FinCategory& C = A.left_cat();
      const FinCategory& D = A.right_cat();
      // in a thin category components are forced when they exist
      MateSetup m;
      m.A = A;
      m.Aprime = A2;
      m.alpha.F = A.F;
      m.alpha.G = A2.F;
      bool ok = true;
      for (ObjIx x = 0; x < C.num_objects() && ok; ++x) {
        auto hs = hom(D, A.F.on_obj(x), A2.F.on_obj(x));
        if (hs.empty())
          ok = false;
        else
          m.alpha.components.push_back(hs.front());
      }
      if (!ok) continue;
      m.beta.F = A2.G;
      m.beta.G = A.G;
      for (ObjIx y = 0; y < D.num_objects() && ok; ++y) {
        auto hs = hom(C, A2.G.on_obj(y), A.G.on_obj(y));
        if (hs.empty())
          ok = false;
        else
          m.beta.components.push_back(hs.front());
      }
      if (!ok) continue;
      ++candidates;
      bool uc = check_mate_unit_counit(m).passed;
      bool hs = check_mate_hom_square(m).passed;
      if (uc != hs)
        throw std::logic_error("mate characterizations disagree on a sweep candidate");
    }
  return candidates;
}

// Random well-formed presentation: parses, prints, and re-parses to an
// equal AST. Table instances need not satisfy the category laws; words
// in presented instances are always composable and relations parallel.
inline Presentation fuzz_presentation(std::mt19937& rng) {
  auto pick = [&](int n) { return static_cast<int>(rng() % static_cast<unsigned>(n)); };
  Presentation p;
  p.name = "c" + std::to_string(pick(1000));
  p.mode = pick(2) ? Presentation::Mode::table : Presentation::Mode::presented;
  int no = 1 + pick(4);
  const char* stems[] = {"a", "b", "x", "y", "z", "w"};
  for (int i = 0; i < no; ++i) {
    std::string n = stems[i % 6] + std::to_string(i);
    if (pick(4) == 0) n += "'";
    p.objects.push_back(n);
  }
  int na = pick(7);
  for (int i = 0; i < na; ++i)
    p.arrows.push_back({"f" + std::to_string(i) + (pick(5) == 0 ? "'" : ""),
                        p.objects[pick(no)], p.objects[pick(no)]});
  if (p.mode == Presentation::Mode::table) {
    for (int i = 0; i < no && na > 0; ++i)
      if (pick(5) != 0) p.ids.push_back({p.objects[i], p.arrows[pick(na)].name});
    int nc = na > 0 ? pick(8) : 0;
    for (int i = 0; i < nc; ++i)
      p.compose.push_back(
          {p.arrows[pick(na)].name, p.arrows[pick(na)].name, p.arrows[pick(na)].name});
    int ne = na > 0 ? pick(4) : 0;
    for (int i = 0; i < ne; ++i)
      p.equivs.push_back({p.arrows[pick(na)].name, p.arrows[pick(na)].name});
    return p;
  }
  // random composable word, outermost-first; object letters mean identities
  auto walk = [&]() {
    std::vector<std::string> w;
    std::string src, dst;
    if (na > 0 && pick(4) != 0) {
      const ArrowDecl& a = p.arrows[pick(na)];
      w.push_back(a.name);
      src = a.src;
      dst = a.dst;
    } else {
      src = dst = p.objects[pick(no)];
      w.push_back(src);
    }
    for (int step = 0; step < 3 && pick(2) == 0; ++step) {
      std::vector<const ArrowDecl*> ext;
      for (const ArrowDecl& a : p.arrows)
        if (a.src == dst) ext.push_back(&a);
      if (ext.empty()) break;
      const ArrowDecl* a = ext[pick(static_cast<int>(ext.size()))];
      w.insert(w.begin(), a->name);
      dst = a->dst;
    }
    return std::tuple{w, src, dst};
  };
  int nr = pick(4);
  for (int i = 0; i < nr; ++i) {
    auto [lhs, src, dst] = walk();
    RelationDecl rel;
    rel.lhs = lhs;
    rel.rhs = lhs;
    // pad one side with identity letters; endpoints are preserved
    if (pick(2)) rel.rhs.insert(rel.rhs.begin(), dst);
    if (pick(2)) rel.rhs.push_back(src);
    p.relations.push_back(rel);
  }
  return p;
}

}  // namespace fincat::testing
