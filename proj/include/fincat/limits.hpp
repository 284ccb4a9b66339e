#pragma once

// Universal constructions over finite categories: terminal/initial
// objects with duality round-trips, products, equalizers, pullbacks via
// slice products, brute-force limits as the oracle, the constructive
// limit from products and equalizers, and limit transport along adjoint
// equivalences.

#include "fincat/adjunction.hpp"
#include "fincat/functor.hpp"

namespace fincat {

struct MissingStructureError : CatError {
  using CatError::CatError;
};

struct UniversalObject {
  enum class Kind { initial, terminal };
  Kind kind;
  ObjIx object;
  std::vector<ArrIx> chosen;  // per object: arrow into (terminal) / out of (initial)

  bool operator==(const UniversalObject&) const = default;
};

inline std::optional<UniversalObject> find_terminal(const FinCategory& C) {
  for (ObjIx t = 0; t < C.num_objects(); ++t) {
    bool ok = true;
    std::vector<ArrIx> chosen;
    for (ObjIx x = 0; x < C.num_objects() && ok; ++x) {
      auto reps = hom_class_reps(C, x, t);
      if (reps.size() != 1)
        ok = false;
      else
        chosen.push_back(reps.front());
    }
    if (ok) return UniversalObject{UniversalObject::Kind::terminal, t, chosen};
  }
  return std::nullopt;
}

inline std::optional<UniversalObject> find_initial(const FinCategory& C) {
  for (ObjIx i = 0; i < C.num_objects(); ++i) {
    bool ok = true;
    std::vector<ArrIx> chosen;
    for (ObjIx x = 0; x < C.num_objects() && ok; ++x) {
      auto reps = hom_class_reps(C, i, x);
      if (reps.size() != 1)
        ok = false;
      else
        chosen.push_back(reps.front());
    }
    if (ok) return UniversalObject{UniversalObject::Kind::initial, i, chosen};
  }
  return std::nullopt;
}

// Reinterpret a terminal object of C as an initial object of op(C).
// Arrow indices are stable under op, so the round trip of these two
// conversions returns a structurally identical value.
inline UniversalObject terminal_to_initial_op(const UniversalObject& t) {
  if (t.kind != UniversalObject::Kind::terminal)
    throw StructuralError("terminal_to_initial_op: not a terminal object");
  return {UniversalObject::Kind::initial, t.object, t.chosen};
}

inline UniversalObject initial_to_terminal_op(const UniversalObject& i) {
  if (i.kind != UniversalObject::Kind::initial)
    throw StructuralError("initial_to_terminal_op: not an initial object");
  return {UniversalObject::Kind::terminal, i.object, i.chosen};
}

struct ConeData {
  FinFunctor diagram;  // J -> C
  ObjIx apex;
  std::vector<ArrIx> legs;  // object of J -> arrow apex -> D0(j)

  bool operator==(const ConeData&) const = default;
};

inline bool is_cone(const ConeData& K) {
  const FinCategory& J = K.diagram.source;
  const FinCategory& C = K.diagram.target;
  for (ObjIx j = 0; j < J.num_objects(); ++j) {
    ArrIx l = K.legs[j];
    if (!C.valid_arrow(l) || C.src(l) != K.apex || C.dst(l) != K.diagram.on_obj(j)) return false;
  }
  for (ArrIx f = 0; f < J.num_arrows(); ++f)
    if (!equiv(C, compose(C, K.diagram.on_arr(f), K.legs[J.src(f)]), K.legs[J.dst(f)]))
      return false;
  return true;
}

inline std::vector<ConeData> enumerate_cones(const FinFunctor& D) {
  const FinCategory& J = D.source;
  const FinCategory& C = D.target;
  std::vector<ConeData> out;
  for (ObjIx apex = 0; apex < C.num_objects(); ++apex) {
    std::vector<std::vector<ArrIx>> choices(J.num_objects());
    bool any = true;
    for (ObjIx j = 0; j < J.num_objects(); ++j) {
      choices[j] = hom(C, apex, D.on_obj(j));
      if (choices[j].empty()) any = false;
    }
    if (!any && J.num_objects() > 0) continue;
    // nested enumeration
    std::vector<std::size_t> pos(J.num_objects(), 0);
    while (true) {
      ConeData K{D, apex, {}};
      for (ObjIx j = 0; j < J.num_objects(); ++j) K.legs.push_back(choices[j][pos[j]]);
      if (is_cone(K)) out.push_back(K);
      std::size_t i = J.num_objects();
      bool done = (i == 0);
      while (i > 0) {
        --i;
        if (++pos[i] < choices[i].size()) break;
        pos[i] = 0;
        if (i == 0) done = true;
      }
      if (done) break;
    }
    if (J.num_objects() == 0) continue;  // single empty-leg cone already emitted
  }
  return out;
}

struct LimitData {
  ConeData cone;

  bool operator==(const LimitData&) const = default;
};

// The unique-up-to-equivalence factorization of K through the limit
// cone, if it exists.
inline std::optional<ArrIx> limit_mediator(const LimitData& lim, const ConeData& K) {
  const FinCategory& C = lim.cone.diagram.target;
  std::optional<ArrIx> found;
  for (ArrIx m : hom(C, K.apex, lim.cone.apex)) {
    bool ok = true;
    for (std::size_t j = 0; j < K.legs.size() && ok; ++j)
      if (!equiv(C, compose(C, lim.cone.legs[j], m), K.legs[j])) ok = false;
    if (!ok) continue;
    if (found && !equiv(C, *found, m)) return std::nullopt;  // not unique
    if (!found) found = m;
  }
  return found;
}

// Full universality scan: every cone factors through the candidate, and
// the legs are jointly monic (which is exactly uniqueness of mediators).
inline bool verify_limit(const ConeData& L, const std::vector<ConeData>& all_cones) {
  if (!is_cone(L)) return false;
  const FinCategory& C = L.diagram.target;
  for (const ConeData& K : all_cones) {
    bool exists = false;
    for (ArrIx m : hom(C, K.apex, L.apex)) {
      bool ok = true;
      for (std::size_t j = 0; j < K.legs.size() && ok; ++j)
        if (!equiv(C, compose(C, L.legs[j], m), K.legs[j])) ok = false;
      if (ok) {
        exists = true;
        break;
      }
    }
    if (!exists) return false;
  }
  // joint monicity
  for (ObjIx z = 0; z < C.num_objects(); ++z) {
    auto ms = hom(C, z, L.apex);
    for (std::size_t i = 0; i < ms.size(); ++i)
      for (std::size_t k = i + 1; k < ms.size(); ++k) {
        if (equiv(C, ms[i], ms[k])) continue;
        bool same = true;
        for (std::size_t j = 0; j < L.legs.size() && same; ++j)
          if (!equiv(C, compose(C, L.legs[j], ms[i]), compose(C, L.legs[j], ms[k]))) same = false;
        if (same) return false;
      }
  }
  return true;
}

inline bool verify_limit(const ConeData& L) { return verify_limit(L, enumerate_cones(L.diagram)); }

// Oracle: enumerate every cone and select the least-index apex whose
// cone is universal. Deterministic: legs are chosen in enumeration order.
inline std::optional<LimitData> brute_force_limit(const FinFunctor& D) {
  std::vector<ConeData> cones = enumerate_cones(D);
  for (const ConeData& L : cones)
    if (verify_limit(L, cones)) return LimitData{L};
  return std::nullopt;
}

struct ProductData {
  ObjIx object;
  ArrIx proj1;
  ArrIx proj2;

  bool operator==(const ProductData&) const = default;
};

// Synthesized pairing: the unique-up-to-equivalence arrow z -> p with
// proj1 . m ~ leg1 and proj2 . m ~ leg2.
inline std::optional<ArrIx> product_pair(const FinCategory& C, const ProductData& P, ArrIx leg1,
                                         ArrIx leg2) {
  std::optional<ArrIx> found;
  for (ArrIx m : hom(C, C.src(leg1), P.object)) {
    if (!equiv(C, compose(C, P.proj1, m), leg1)) continue;
    if (!equiv(C, compose(C, P.proj2, m), leg2)) continue;
    if (found && !equiv(C, *found, m)) return std::nullopt;
    if (!found) found = m;
  }
  return found;
}

namespace detail {

inline bool product_universal(const FinCategory& C, const ProductData& P, ObjIx a, ObjIx b) {
  if (C.src(P.proj1) != P.object || C.dst(P.proj1) != a) return false;
  if (C.src(P.proj2) != P.object || C.dst(P.proj2) != b) return false;
  for (ObjIx z = 0; z < C.num_objects(); ++z) {
    for (ArrIx l1 : hom_class_reps(C, z, a))
      for (ArrIx l2 : hom_class_reps(C, z, b))
        if (!product_pair(C, P, l1, l2)) return false;
    // uniqueness as joint monicity of the projections
    auto ms = hom(C, z, P.object);
    for (std::size_t i = 0; i < ms.size(); ++i)
      for (std::size_t k = i + 1; k < ms.size(); ++k) {
        if (equiv(C, ms[i], ms[k])) continue;
        if (equiv(C, compose(C, P.proj1, ms[i]), compose(C, P.proj1, ms[k])) &&
            equiv(C, compose(C, P.proj2, ms[i]), compose(C, P.proj2, ms[k])))
          return false;
      }
  }
  return true;
}

}  // namespace detail

inline bool check_product(const FinCategory& C, const ProductData& P, ObjIx a, ObjIx b) {
  return detail::product_universal(C, P, a, b);
}

inline std::optional<ProductData> find_product(const FinCategory& C, ObjIx a, ObjIx b) {
  for (ObjIx p = 0; p < C.num_objects(); ++p)
    for (ArrIx p1 : hom_class_reps(C, p, a))
      for (ArrIx p2 : hom_class_reps(C, p, b)) {
        ProductData P{p, p1, p2};
        if (detail::product_universal(C, P, a, b)) return P;
      }
  return std::nullopt;
}

struct EqualizerData {
  ObjIx object;
  ArrIx inclusion;

  bool operator==(const EqualizerData&) const = default;
};

inline std::optional<EqualizerData> find_equalizer(const FinCategory& C, ArrIx f, ArrIx g) {
  if (!C.parallel(f, g)) throw StructuralError("find_equalizer: arrows are not parallel");
  for (ObjIx e = 0; e < C.num_objects(); ++e)
    for (ArrIx incl : hom_class_reps(C, e, C.src(f))) {
      if (!equiv(C, compose(C, f, incl), compose(C, g, incl))) continue;
      bool universal = true;
      for (ObjIx z = 0; z < C.num_objects() && universal; ++z) {
        for (ArrIx h : hom_class_reps(C, z, C.src(f))) {
          if (!equiv(C, compose(C, f, h), compose(C, g, h))) continue;
          std::optional<ArrIx> found;
          for (ArrIx m : hom(C, z, e)) {
            if (!equiv(C, compose(C, incl, m), h)) continue;
            if (found && !equiv(C, *found, m)) {
              found = std::nullopt;
              universal = false;
              break;
            }
            if (!found) found = m;
          }
          if (!found) {
            universal = false;
            break;
          }
        }
      }
      if (universal) return EqualizerData{e, incl};
    }
  return std::nullopt;
}

struct PullbackData {
  ObjIx object;
  ArrIx to_x;  // projection to src(f)
  ArrIx to_y;  // projection to src(g)

  bool operator==(const PullbackData&) const = default;
};

namespace detail {

inline bool pullback_universal(const FinCategory& C, const PullbackData& P, ArrIx f, ArrIx g) {
  if (C.src(P.to_x) != P.object || C.dst(P.to_x) != C.src(f)) return false;
  if (C.src(P.to_y) != P.object || C.dst(P.to_y) != C.src(g)) return false;
  if (!equiv(C, compose(C, f, P.to_x), compose(C, g, P.to_y))) return false;
  for (ObjIx z = 0; z < C.num_objects(); ++z) {
    for (ArrIx l1 : hom_class_reps(C, z, C.src(f)))
      for (ArrIx l2 : hom_class_reps(C, z, C.src(g))) {
        if (!equiv(C, compose(C, f, l1), compose(C, g, l2))) continue;
        std::optional<ArrIx> found;
        for (ArrIx m : hom(C, z, P.object)) {
          if (!equiv(C, compose(C, P.to_x, m), l1)) continue;
          if (!equiv(C, compose(C, P.to_y, m), l2)) continue;
          if (found && !equiv(C, *found, m)) return false;
          if (!found) found = m;
        }
        if (!found) return false;
      }
  }
  return true;
}

}  // namespace detail

// Pullback of the cospan f : x -> z <- y : g, computed as a binary
// product in the slice over z and unpacked, then cross-checked by the
// direct universality scan.
inline std::optional<PullbackData> find_pullback(const FinCategory& C, ArrIx f, ArrIx g) {
  if (C.dst(f) != C.dst(g)) throw StructuralError("find_pullback: not a cospan");
  SliceCategory S = slice_category(C, C.dst(f));
  auto slice_obj = [&](ArrIx arr) -> int {
    for (int i = 0; i < static_cast<int>(S.object_data.size()); ++i)
      if (S.object_data[i].first == C.src(arr) && equiv(C, S.object_data[i].second, arr)) return i;
    throw StructuralError("find_pullback: arrow missing from slice");
  };
  auto P = find_product(S.cat, slice_obj(f), slice_obj(g));
  if (!P) return std::nullopt;
  PullbackData out{S.object_data[P->object].first, S.arrow_data[P->proj1], S.arrow_data[P->proj2]};
  if (!detail::pullback_universal(C, out, f, g))
    throw StructuralError(
        "find_pullback: slice-product route disagrees with the direct scan "
        "(internal consistency failure)");
  return out;
}

// Chosen finite product of a list of objects, built as left-nested
// binary products seeded with the terminal object.
struct NaryProduct {
  ObjIx object;
  std::vector<ArrIx> projections;            // one per factor
  std::vector<ProductData> steps;            // fold history, for pairing
  UniversalObject terminal;
};

inline NaryProduct nary_product(const FinCategory& C, const std::vector<ObjIx>& factors) {
  auto t = find_terminal(C);
  if (!t) throw MissingStructureError("nary_product: terminal object absent");
  NaryProduct P;
  P.terminal = *t;
  P.object = t->object;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    auto step = find_product(C, P.object, factors[i]);
    if (!step)
      throw MissingStructureError("nary_product: binary product absent for (" +
                                  C.objects[P.object] + ", " + C.objects[factors[i]] + ")");
    // previous projections compose through the new first projection
    for (ArrIx& pr : P.projections) pr = compose(C, pr, step->proj1);
    P.projections.push_back(step->proj2);
    P.steps.push_back(*step);
    P.object = step->object;
  }
  return P;
}

// Mediating arrow z -> P with the given legs, built along the fold.
inline ArrIx nary_pair(const FinCategory& C, const NaryProduct& P, ObjIx z,
                       const std::vector<ArrIx>& legs) {
  ArrIx m = P.terminal.chosen[z];
  for (std::size_t i = 0; i < P.steps.size(); ++i) {
    auto next = product_pair(C, P.steps[i], m, legs[i]);
    if (!next) throw MissingStructureError("nary_pair: pairing failed (product not universal?)");
    m = *next;
  }
  return m;
}

// Constructive finite limit: equalize the two canonical comparison
// arrows between the product over objects and the product over arrows.
inline LimitData limit_from_products_equalizers(const FinFunctor& D) {
  const FinCategory& J = D.source;
  const FinCategory& C = D.target;
  std::vector<ObjIx> obj_factors;
  for (ObjIx j = 0; j < J.num_objects(); ++j) obj_factors.push_back(D.on_obj(j));
  NaryProduct P = nary_product(C, obj_factors);
  // non-identity arrows only; identity arrows contribute implied equations
  std::vector<ArrIx> eq_arrows;
  for (ArrIx f = 0; f < J.num_arrows(); ++f) {
    bool is_id = false;
    for (ObjIx j = 0; j < J.num_objects(); ++j)
      if (J.id(j) == f) is_id = true;
    if (!is_id) eq_arrows.push_back(f);
  }
  std::vector<ObjIx> arr_factors;
  for (ArrIx f : eq_arrows) arr_factors.push_back(D.on_obj(J.dst(f)));
  NaryProduct Q = nary_product(C, arr_factors);
  std::vector<ArrIx> legs_s, legs_t;
  for (ArrIx f : eq_arrows) {
    legs_s.push_back(P.projections[J.dst(f)]);
    legs_t.push_back(compose(C, D.on_arr(f), P.projections[J.src(f)]));
  }
  ArrIx s = nary_pair(C, Q, P.object, legs_s);
  ArrIx t = nary_pair(C, Q, P.object, legs_t);
  auto E = find_equalizer(C, s, t);
  if (!E) throw MissingStructureError("limit_from_products_equalizers: equalizer absent");
  ConeData L{D, E->object, {}};
  for (ObjIx j = 0; j < J.num_objects(); ++j)
    L.legs.push_back(compose(C, P.projections[j], E->inclusion));
  if (!verify_limit(L))
    throw StructuralError(
        "limit_from_products_equalizers: constructed cone failed the "
        "universality scan (internal consistency failure)");
  return LimitData{L};
}

// Reindex a verified limit of L : J -> C along an adjoint equivalence
// F : J' -> J; the apex is unchanged and the legs are picked through F.
inline LimitData transport_limit(const Adjunction& E, const FinFunctor& L, const LimitData& lim) {
  if (!is_adjoint_equivalence(E))
    throw StructuralError("transport_limit: the supplied adjunction is not an equivalence");
  if (!(E.F.target == L.source))
    throw StructuralError("transport_limit: equivalence does not land in the diagram's shape");
  FinFunctor LF = compose_functor(L, E.F);
  ConeData K{LF, lim.cone.apex, {}};
  for (ObjIx j2 = 0; j2 < E.F.source.num_objects(); ++j2)
    K.legs.push_back(lim.cone.legs[E.F.on_obj(j2)]);
  if (!verify_limit(K))
    throw StructuralError(
        "transport_limit: transported cone failed the universality scan "
        "(internal consistency failure)");
  return LimitData{K};
}

// Colimits by duality: a colimit of D : J -> C is a limit of the same
// data read in op(J) -> op(C).
inline std::optional<LimitData> brute_force_colimit(const FinFunctor& D) {
  return brute_force_limit(op_functor(D));
}

// Enumerated diagram shape: n objects, |a, b| arrows per ordered pair,
// laws up to index equality (every equivalence class a singleton).
struct FinDiagramShape {
  int n = 0;
  std::vector<std::vector<int>> hom_size;  // [a][b]
  // ((b, c, k2), (a, b, k1)) -> k3 where the triple indexes within its hom
  std::map<std::pair<std::tuple<int, int, int>, std::tuple<int, int, int>>, int> comp;
  std::vector<int> identity;  // object -> index within hom(a, a)

  bool operator==(const FinDiagramShape&) const = default;
};

inline FinCategory shape_to_category(const FinDiagramShape& S) {
  FinCategory C;
  std::map<std::tuple<int, int, int>, ArrIx> ix;
  for (int a = 0; a < S.n; ++a) C.objects.push_back("s" + std::to_string(a));
  for (int a = 0; a < S.n; ++a)
    for (int b = 0; b < S.n; ++b)
      for (int k = 0; k < S.hom_size[a][b]; ++k) {
        ix[{a, b, k}] = C.num_arrows();
        C.arrows.push_back({a, b, "m" + std::to_string(a) + "_" + std::to_string(b) + "_" +
                                       std::to_string(k)});
        C.eq_class.push_back(static_cast<int>(C.eq_class.size()));  // singleton classes
      }
  for (int a = 0; a < S.n; ++a) {
    if (S.identity[a] < 0 || S.identity[a] >= S.hom_size[a][a])
      throw StructuralError("shape_to_category: identity designation out of range");
    C.identities.push_back(ix.at({a, a, S.identity[a]}));
  }
  for (const auto& [key, k3] : S.comp) {
    auto [g, f] = key;
    auto [b2, c, k2] = g;
    auto [a, b, k1] = f;
    if (b2 != b) throw StructuralError("shape_to_category: composition entry is ill-typed");
    if (k3 < 0 || k3 >= S.hom_size[a][c])
      throw StructuralError("shape_to_category: composite index out of range");
    C.comp[{ix.at({b, c, k2}), ix.at({a, b, k1})}] = ix.at({a, c, k3});
  }
  return C;
}

// Category laws with propositional (index) equality. Singleton classes
// make the equivalence coincide with index equality, so the ordinary
// exhaustive check is exactly the strict one.
inline LawReport check_fin_diagram(const FinDiagramShape& S) {
  FinCategory C;
  try {
    C = shape_to_category(S);
  } catch (const StructuralError& e) {
    LawReport r;
    r.add("structure/shape", {}, e.what());
    return r;
  }
  return check_category_laws(C);
}

// Extract the enumerated shape of a category whose classes are all
// singletons. Arrows are indexed within each hom by ascending arrow index.
inline FinDiagramShape shape_of_category(const FinCategory& C) {
  for (ArrIx f = 0; f < C.num_arrows(); ++f)
    for (ArrIx g = f + 1; g < C.num_arrows(); ++g)
      if (C.eq_class[f] == C.eq_class[g])
        throw StructuralError("shape_of_category: equivalence classes are not singletons");
  FinDiagramShape S;
  S.n = C.num_objects();
  S.hom_size.assign(S.n, std::vector<int>(S.n, 0));
  std::vector<std::tuple<int, int, int>> pos(C.num_arrows());
  for (ArrIx f = 0; f < C.num_arrows(); ++f) {
    int a = C.src(f), b = C.dst(f);
    pos[f] = {a, b, S.hom_size[a][b]++};
  }
  for (ObjIx x = 0; x < S.n; ++x) S.identity.push_back(std::get<2>(pos[C.id(x)]));
  for (const auto& [key, v] : C.comp) S.comp[{pos[key.first], pos[key.second]}] = std::get<2>(pos[v]);
  return S;
}

struct FiniteWitness {
  FinDiagramShape shape;
  Adjunction adjequiv;  // C -> shape category, flagged adjoint equivalence

  bool operator==(const FiniteWitness&) const = default;
};

inline LawReport check_finite_witness(const FinCategory& C, const FiniteWitness& W) {
  LawReport r = check_fin_diagram(W.shape);
  if (!r.passed) return r;
  FinCategory S = shape_to_category(W.shape);
  if (!(W.adjequiv.F.source == C) || !(W.adjequiv.F.target == S)) {
    r.add("structure/witness-endpoints", {}, "equivalence is not typed C -> shape");
    return r;
  }
  r.merge(check_adjunction(W.adjequiv));
  if (!r.passed) return r;
  if (!is_adjoint_equivalence(W.adjequiv))
    r.add("witness-not-equivalence", {}, "unit or counit is not a natural isomorphism");
  return r;
}

}  // namespace fincat
