#pragma once

// Presheaves valued in finite setoids, representables, natural
// transformation enumeration, and the representable-hom bijection
// Nat[y(X), F] ~ F(X).

#include "fincat/setoid.hpp"

namespace fincat {

// Contravariant functor C^op -> Setoids as explicit per-object,
// per-arrow data.
struct PresheafData {
  FinCategory C;
  std::vector<FinSetoid> at;   // per object
  std::vector<SetoidMap> act;  // per arrow f : X -> Y, the map F(Y) -> F(X)
};

inline LawReport check_presheaf(const PresheafData& F) {
  LawReport r;
  const FinCategory& C = F.C;
  if (static_cast<int>(F.at.size()) != C.num_objects() ||
      static_cast<int>(F.act.size()) != C.num_arrows()) {
    r.add("structure/presheaf-total", {}, "per-object or per-arrow data has wrong length");
    return r;
  }
  for (ArrIx f = 0; f < C.num_arrows(); ++f) {
    if (!(F.act[f].src == F.at[C.dst(f)]) || !(F.act[f].dst == F.at[C.src(f)])) {
      r.add("structure/presheaf-typing", {f}, "action is not a map F(dst) -> F(src)");
      return r;
    }
    if (!respects(F.act[f]))
      r.add("presheaf-respect", {f}, "action does not respect the partitions");
  }
  if (!r.passed) return r;
  for (ObjIx x = 0; x < C.num_objects(); ++x)
    if (!map_eq(F.act[C.id(x)], id_map(F.at[x])))
      r.add("presheaf-identity", {x}, "F(id) is not pointwise equivalent to id");
  for (ArrIx g = 0; g < C.num_arrows(); ++g)
    for (ArrIx f = 0; f < C.num_arrows(); ++f) {
      if (!composable(C, g, f)) continue;
      if (!map_eq(F.act[compose(C, g, f)], compose_map(F.act[f], F.act[g])))
        r.add("presheaf-composition", {g, f}, "F(g.f) is not F(f) . F(g)");
    }
  for (ArrIx f = 0; f < C.num_arrows(); ++f)
    for (ArrIx g = f + 1; g < C.num_arrows(); ++g)
      if (equiv(C, f, g) && !map_eq(F.act[f], F.act[g]))
        r.add("presheaf-resp-equiv", {f, g}, "equivalent arrows act differently");
  return r;
}

// y(X): at each object Y the hom-setoid Hom(Y, X) (carrier = arrows in
// index order, partition = their equivalence classes); arrows act by
// precomposition.
inline PresheafData representable(const FinCategory& C, ObjIx X) {
  if (!C.valid_object(X)) throw StructuralError("representable: object out of range");
  PresheafData F;
  F.C = C;
  std::vector<std::vector<ArrIx>> homs(C.num_objects());
  for (ObjIx y = 0; y < C.num_objects(); ++y) {
    homs[y] = hom(C, y, X);
    FinSetoid S;
    S.n = static_cast<int>(homs[y].size());
    std::map<int, int> dense;
    for (ArrIx a : homs[y]) {
      auto [it, fresh] = dense.emplace(C.eq_class[a], static_cast<int>(dense.size()));
      (void)fresh;
      S.cls.push_back(it->second);
    }
    F.at.push_back(S);
  }
  auto pos = [&](ObjIx y, ArrIx a) {
    return static_cast<int>(std::find(homs[y].begin(), homs[y].end(), a) - homs[y].begin());
  };
  for (ArrIx f = 0; f < C.num_arrows(); ++f) {
    SetoidMap m{F.at[C.dst(f)], F.at[C.src(f)], {}};
    for (ArrIx a : homs[C.dst(f)]) m.map.push_back(pos(C.src(f), compose(C, a, f)));
    F.act.push_back(m);
  }
  return F;
}

// position of id_X inside the carrier of y(X) at X
inline int representable_id_pos(const FinCategory& C, ObjIx X) {
  auto hs = hom(C, X, X);
  return static_cast<int>(std::find(hs.begin(), hs.end(), C.id(X)) - hs.begin());
}

inline bool check_nat_transf(const PresheafData& P, const PresheafData& Q,
                             const std::vector<SetoidMap>& tau) {
  const FinCategory& C = P.C;
  for (ObjIx x = 0; x < C.num_objects(); ++x)
    if (!(tau[x].src == P.at[x]) || !(tau[x].dst == Q.at[x]) || !respects(tau[x])) return false;
  for (ArrIx f = 0; f < C.num_arrows(); ++f)
    if (!map_eq(compose_map(tau[C.src(f)], P.act[f]), compose_map(Q.act[f], tau[C.dst(f)])))
      return false;
  return true;
}

// All natural transformations P => Q, one representative per class of
// componentwise pointwise equivalence.
inline std::vector<std::vector<SetoidMap>> enumerate_nat_transfs(const PresheafData& P,
                                                                 const PresheafData& Q) {
  const FinCategory& C = P.C;
  std::vector<std::vector<SetoidMap>> choices;
  for (ObjIx x = 0; x < C.num_objects(); ++x) choices.push_back(all_maps(P.at[x], Q.at[x]));
  std::vector<std::vector<SetoidMap>> out;
  std::vector<std::size_t> pos(C.num_objects(), 0);
  for (ObjIx x = 0; x < C.num_objects(); ++x)
    if (choices[x].empty()) return out;
  while (true) {
    std::vector<SetoidMap> tau;
    for (ObjIx x = 0; x < C.num_objects(); ++x) tau.push_back(choices[x][pos[x]]);
    if (check_nat_transf(P, Q, tau)) {
      bool fresh = true;
      for (const auto& seen : out) {
        bool same = true;
        for (ObjIx x = 0; x < C.num_objects() && same; ++x)
          if (!map_eq(seen[x], tau[x])) same = false;
        if (same) fresh = false;
      }
      if (fresh) out.push_back(std::move(tau));
    }
    int i = C.num_objects();
    bool done = (i == 0);
    while (i > 0) {
      --i;
      if (++pos[i] < choices[i].size()) break;
      pos[i] = 0;
      if (i == 0) done = true;
    }
    if (done) break;
  }
  if (C.num_objects() == 0) out.push_back({});
  return out;
}

// The representable-hom bijection at X: evaluation tau |-> tau_X(id_X)
// against u |-> (g : Y -> X acts as F(g)(u)), checked to be mutually
// inverse on classes and natural in X (the square over every arrow into
// X commutes).
inline LawReport yoneda_check(const FinCategory& C, const PresheafData& F, ObjIx X) {
  LawReport r;
  {
    LawReport p = check_presheaf(F);
    if (!p.passed) return p;
  }
  PresheafData yX = representable(C, X);
  std::vector<std::vector<ArrIx>> homs(C.num_objects());
  for (ObjIx y = 0; y < C.num_objects(); ++y) homs[y] = hom(C, y, X);
  const int idp = representable_id_pos(C, X);
  auto nats = enumerate_nat_transfs(yX, F);

  // inverse direction: each element of F(X) induces a natural family
  auto family_of = [&](int u) {
    std::vector<SetoidMap> tau;
    for (ObjIx y = 0; y < C.num_objects(); ++y) {
      SetoidMap t{yX.at[y], F.at[y], {}};
      for (ArrIx g : homs[y]) t.map.push_back(F.act[g].map[u]);
      tau.push_back(t);
    }
    return tau;
  };
  std::vector<bool> hit(F.at[X].num_classes(), false);
  for (int u = 0; u < F.at[X].n; ++u) {
    auto tau = family_of(u);
    if (!check_nat_transf(yX, F, tau)) {
      r.add("yoneda-inverse-natural", {X, u}, "induced family is not natural");
      continue;
    }
    // evaluation undoes the construction
    if (!F.at[X].eq(tau[X].map[idp], u))
      r.add("yoneda-roundtrip", {X, u}, "eval(family(u)) is not equivalent to u");
    hit[F.at[X].cls[u]] = true;
  }
  if (static_cast<int>(nats.size()) != F.at[X].num_classes())
    r.add("yoneda-class-count", {X, static_cast<int>(nats.size()), F.at[X].num_classes()},
          "natural-family classes do not match F(X) classes");
  for (const auto& tau : nats) {
    int u = tau[X].map[idp];
    // family(eval(tau)) reproduces tau componentwise
    auto back = family_of(u);
    for (ObjIx y = 0; y < C.num_objects(); ++y)
      if (!map_eq(back[y], tau[y]))
        r.add("yoneda-roundtrip", {X, y}, "family(eval(tau)) differs from tau");
    // naturality in X: evaluating after precomposition with g : Y -> X
    // agrees with acting by F(g)
    for (ObjIx y = 0; y < C.num_objects(); ++y)
      for (std::size_t gi = 0; gi < homs[y].size(); ++gi)
        if (!F.at[y].eq(tau[y].map[static_cast<int>(gi)], F.act[homs[y][gi]].map[u]))
          r.add("yoneda-natural-in-x", {X, y, homs[y][gi]},
                "evaluation square over an arrow into X does not commute");
  }
  for (std::size_t c = 0; c < hit.size(); ++c)
    if (!hit[c]) r.add("yoneda-class-count", {X, static_cast<int>(c)}, "class of F(X) not hit");
  return r;
}

}  // namespace fincat
