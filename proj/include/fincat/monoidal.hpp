#pragma once

// Monoidal structure with a componentwise associator plus its two
// naturality squares, pentagon/triangle coherence, product-induced
// monoidal structure, closed monoidal structure via per-object
// adjunctions and the mate condition, and the derived tensor-hom
// isomorphism family.

#include <functional>

#include "fincat/adjunction.hpp"
#include "fincat/limits.hpp"

namespace fincat {

struct MonoidalStructure {
  FinCategory C;
  ObjIx unit = 0;
  FinFunctor tensor;  // product_category(C, C) -> C
  std::vector<ArrIx> lambda, lambda_inv;  // per object: u (x) X -> X
  std::vector<ArrIx> rho, rho_inv;        // per object: X (x) u -> X
  std::vector<ArrIx> alpha, alpha_inv;    // per (X, Y, Z): (X(x)Y)(x)Z -> X(x)(Y(x)Z)

  ObjIx ten(ObjIx x, ObjIx y) const { return tensor.on_obj(product_object(C, x, y)); }
  ArrIx tena(ArrIx f, ArrIx g) const { return tensor.on_arr(product_arrow(C, f, g)); }
  int alpha_ix(ObjIx x, ObjIx y, ObjIx z) const {
    return (x * C.num_objects() + y) * C.num_objects() + z;
  }
};

namespace detail {

inline bool check_component(const FinCategory& C, LawReport& r, const std::string& name,
                            std::vector<int> where, ArrIx fwd, ArrIx bwd, ObjIx a, ObjIx b) {
  if (!C.valid_arrow(fwd) || C.src(fwd) != a || C.dst(fwd) != b) {
    r.add("structure/" + name + "-typing", where, "component has wrong endpoints");
    return false;
  }
  if (!C.valid_arrow(bwd) || C.src(bwd) != b || C.dst(bwd) != a) {
    r.add("structure/" + name + "-typing", where, "inverse component has wrong endpoints");
    return false;
  }
  if (!equiv(C, compose(C, bwd, fwd), C.id(a)) || !equiv(C, compose(C, fwd, bwd), C.id(b)))
    r.add(name + "-iso", where, "component and stated inverse are not mutually inverse");
  return true;
}

}  // namespace detail

inline LawReport check_monoidal(const MonoidalStructure& M) {
  LawReport r;
  const FinCategory& C = M.C;
  const int n = C.num_objects();
  if (!(M.tensor.source == product_category(C, C)) || !(M.tensor.target == C)) {
    r.add("structure/tensor-endpoints", {}, "tensor is not a functor C x C -> C");
    return r;
  }
  r.merge(check_functor(M.tensor));
  if (!C.valid_object(M.unit)) r.add("structure/unit-range", {}, "unit object out of range");
  if (static_cast<int>(M.lambda.size()) != n || static_cast<int>(M.lambda_inv.size()) != n ||
      static_cast<int>(M.rho.size()) != n || static_cast<int>(M.rho_inv.size()) != n ||
      static_cast<int>(M.alpha.size()) != n * n * n ||
      static_cast<int>(M.alpha_inv.size()) != n * n * n)
    r.add("structure/component-total", {}, "structure-map family has wrong length");
  if (!r.passed) return r;

  for (ObjIx x = 0; x < n; ++x) {
    detail::check_component(C, r, "lambda", {x}, M.lambda[x], M.lambda_inv[x], M.ten(M.unit, x), x);
    detail::check_component(C, r, "rho", {x}, M.rho[x], M.rho_inv[x], M.ten(x, M.unit), x);
  }
  for (ObjIx x = 0; x < n; ++x)
    for (ObjIx y = 0; y < n; ++y)
      for (ObjIx z = 0; z < n; ++z)
        detail::check_component(C, r, "alpha", {x, y, z}, M.alpha[M.alpha_ix(x, y, z)],
                                M.alpha_inv[M.alpha_ix(x, y, z)], M.ten(M.ten(x, y), z),
                                M.ten(x, M.ten(y, z)));
  if (!r.passed) return r;

  for (ArrIx f = 0; f < C.num_arrows(); ++f) {
    ObjIx x = C.src(f), y = C.dst(f);
    if (!equiv(C, compose(C, M.lambda[y], M.tena(C.id(M.unit), f)),
               compose(C, f, M.lambda[x])))
      r.add("lambda-natural", {f}, "lambda square does not commute");
    if (!equiv(C, compose(C, M.rho[y], M.tena(f, C.id(M.unit))), compose(C, f, M.rho[x])))
      r.add("rho-natural", {f}, "rho square does not commute");
  }

  // associator naturality, split exactly into the two squares: in the
  // left pair with the right object fixed, and in the right object with
  // the left pair fixed
  for (ArrIx f = 0; f < C.num_arrows(); ++f)
    for (ArrIx g = 0; g < C.num_arrows(); ++g)
      for (ObjIx z = 0; z < n; ++z) {
        ArrIx lhs = compose(C, M.alpha[M.alpha_ix(C.dst(f), C.dst(g), z)],
                            M.tena(M.tena(f, g), C.id(z)));
        ArrIx rhs = compose(C, M.tena(f, M.tena(g, C.id(z))),
                            M.alpha[M.alpha_ix(C.src(f), C.src(g), z)]);
        if (!equiv(C, lhs, rhs))
          r.add("alpha-natural-left", {f, g, z}, "left-pair associator square does not commute");
      }
  for (ObjIx x = 0; x < n; ++x)
    for (ObjIx y = 0; y < n; ++y)
      for (ArrIx h = 0; h < C.num_arrows(); ++h) {
        ArrIx lhs = compose(C, M.alpha[M.alpha_ix(x, y, C.dst(h))],
                            M.tena(M.tena(C.id(x), C.id(y)), h));
        ArrIx rhs = compose(C, M.tena(C.id(x), M.tena(C.id(y), h)),
                            M.alpha[M.alpha_ix(x, y, C.src(h))]);
        if (!equiv(C, lhs, rhs))
          r.add("alpha-natural-right", {x, y, h}, "right-object associator square does not commute");
      }

  for (ObjIx x = 0; x < n; ++x)
    for (ObjIx y = 0; y < n; ++y) {
      ArrIx lhs = compose(C, M.tena(C.id(x), M.lambda[y]), M.alpha[M.alpha_ix(x, M.unit, y)]);
      ArrIx rhs = M.tena(M.rho[x], C.id(y));
      if (!equiv(C, lhs, rhs)) r.add("triangle", {x, y}, "triangle does not commute");
    }
  for (ObjIx x = 0; x < n; ++x)
    for (ObjIx y = 0; y < n; ++y)
      for (ObjIx z = 0; z < n; ++z)
        for (ObjIx w = 0; w < n; ++w) {
          ArrIx lhs = compose(C, M.alpha[M.alpha_ix(x, y, M.ten(z, w))],
                              M.alpha[M.alpha_ix(M.ten(x, y), z, w)]);
          ArrIx rhs = compose(
              C, M.tena(C.id(x), M.alpha[M.alpha_ix(y, z, w)]),
              compose(C, M.alpha[M.alpha_ix(x, M.ten(y, z), w)],
                      M.tena(M.alpha[M.alpha_ix(x, y, z)], C.id(w))));
          if (!equiv(C, lhs, rhs)) r.add("pentagon", {x, y, z, w}, "pentagon does not commute");
        }
  return r;
}

// The associator packaged as an honest natural isomorphism between the
// two triple-tensor functors (C x C) x C -> C, the left one implicitly
// precomposed with the product-category reassociator.
inline NatTrans derive_associator_naturality(const MonoidalStructure& M) {
  const FinCategory& C = M.C;
  FinCategory CC = product_category(C, C);
  FinCategory P = product_category(CC, C);
  FinFunctor L, R;
  L.source = P;
  L.target = C;
  R = L;
  for (ObjIx o = 0; o < P.num_objects(); ++o) {
    ObjIx xy = o / C.num_objects(), z = o % C.num_objects();
    ObjIx x = xy / C.num_objects(), y = xy % C.num_objects();
    L.obj_map.push_back(M.ten(M.ten(x, y), z));
    R.obj_map.push_back(M.ten(x, M.ten(y, z)));
  }
  for (ArrIx p = 0; p < P.num_arrows(); ++p) {
    ArrIx fg = p / C.num_arrows(), h = p % C.num_arrows();
    ArrIx f = fg / C.num_arrows(), g = fg % C.num_arrows();
    L.arr_map.push_back(M.tena(M.tena(f, g), h));
    R.arr_map.push_back(M.tena(f, M.tena(g, h)));
  }
  NatTrans a;
  a.F = L;
  a.G = R;
  for (ObjIx o = 0; o < P.num_objects(); ++o) {
    ObjIx xy = o / C.num_objects(), z = o % C.num_objects();
    a.components.push_back(M.alpha[M.alpha_ix(xy / C.num_objects(), xy % C.num_objects(), z)]);
  }
  if (!check_functor(L).passed || !check_functor(R).passed || !check_natural(a).passed ||
      !is_natural_iso(a))
    throw StructuralError(
        "derive_associator_naturality: associator is not a natural isomorphism "
        "(check_monoidal should have failed)");
  return a;
}

// Cartesian monoidal structure on chosen binary products with the
// terminal object as unit; every structure map is a synthesized pairing.
inline MonoidalStructure monoidal_from_products(const FinCategory& C) {
  MonoidalStructure M;
  M.C = C;
  auto t = find_terminal(C);
  if (!t) throw MissingStructureError("monoidal_from_products: terminal object absent");
  M.unit = t->object;
  const int n = C.num_objects();
  std::vector<ProductData> prod(n * n);
  for (ObjIx x = 0; x < n; ++x)
    for (ObjIx y = 0; y < n; ++y) {
      auto P = find_product(C, x, y);
      if (!P)
        throw MissingStructureError("monoidal_from_products: binary product absent for (" +
                                    C.objects[x] + ", " + C.objects[y] + ")");
      prod[x * n + y] = *P;
    }
  auto pair_into = [&](const ProductData& P, ArrIx l1, ArrIx l2) {
    auto m = product_pair(C, P, l1, l2);
    if (!m) throw MissingStructureError("monoidal_from_products: pairing failed");
    return *m;
  };
  M.tensor.source = product_category(C, C);
  M.tensor.target = C;
  for (ObjIx x = 0; x < n; ++x)
    for (ObjIx y = 0; y < n; ++y) M.tensor.obj_map.push_back(prod[x * n + y].object);
  for (ArrIx f = 0; f < C.num_arrows(); ++f)
    for (ArrIx g = 0; g < C.num_arrows(); ++g) {
      const ProductData& S = prod[C.src(f) * n + C.src(g)];
      const ProductData& T = prod[C.dst(f) * n + C.dst(g)];
      M.tensor.arr_map.push_back(
          pair_into(T, compose(C, f, S.proj1), compose(C, g, S.proj2)));
    }
  for (ObjIx x = 0; x < n; ++x) {
    const ProductData& UX = prod[M.unit * n + x];
    M.lambda.push_back(UX.proj2);
    M.lambda_inv.push_back(pair_into(UX, t->chosen[x], C.id(x)));
    const ProductData& XU = prod[x * n + M.unit];
    M.rho.push_back(XU.proj1);
    M.rho_inv.push_back(pair_into(XU, C.id(x), t->chosen[x]));
  }
  for (ObjIx x = 0; x < n; ++x)
    for (ObjIx y = 0; y < n; ++y)
      for (ObjIx z = 0; z < n; ++z) {
        const ProductData& XY = prod[x * n + y];
        const ProductData& YZ = prod[y * n + z];
        const ProductData& XY_Z = prod[XY.object * n + z];
        const ProductData& X_YZ = prod[x * n + YZ.object];
        M.alpha.push_back(pair_into(
            X_YZ, compose(C, XY.proj1, XY_Z.proj1),
            pair_into(YZ, compose(C, XY.proj2, XY_Z.proj1), XY_Z.proj2)));
        M.alpha_inv.push_back(pair_into(
            XY_Z, pair_into(XY, X_YZ.proj1, compose(C, YZ.proj1, X_YZ.proj2)),
            compose(C, YZ.proj2, X_YZ.proj2)));
      }
  return M;
}

// The endofunctor - (x) X.
inline FinFunctor tensor_right_functor(const MonoidalStructure& M, ObjIx X) {
  FinFunctor F;
  F.source = M.C;
  F.target = M.C;
  for (ObjIx y = 0; y < M.C.num_objects(); ++y) F.obj_map.push_back(M.ten(y, X));
  for (ArrIx f = 0; f < M.C.num_arrows(); ++f) F.arr_map.push_back(M.tena(f, M.C.id(X)));
  return F;
}

struct ClosedMonoidalStructure {
  MonoidalStructure M;
  FinFunctor hom;               // product_category(op(C), C) -> C
  std::vector<Adjunction> adj;  // per object X: (- (x) X) -| [X, -]

  ObjIx internal_hom(ObjIx x, ObjIx z) const {
    return hom.on_obj(product_object(M.C, x, z));
  }
};

// The endofunctor [X, -]; the first argument of hom is held at the
// identity, read in op(C) (same arrow index).
inline FinFunctor hom_left_functor(const ClosedMonoidalStructure& CM, ObjIx X) {
  const FinCategory& C = CM.M.C;
  FinFunctor G;
  G.source = C;
  G.target = C;
  for (ObjIx z = 0; z < C.num_objects(); ++z) G.obj_map.push_back(CM.internal_hom(X, z));
  for (ArrIx g = 0; g < C.num_arrows(); ++g)
    G.arr_map.push_back(CM.hom.on_arr(product_arrow(C, C.id(X), g)));
  return G;
}

// The mate candidate induced by f : X -> Y: alpha_f : -(x)X => -(x)Y
// with components id_W (x) f, and beta_f : [Y,-] => [X,-] with
// components [f, id_Z] (f read contravariantly in the first slot).
inline MateSetup induced_mate(const ClosedMonoidalStructure& CM, ArrIx f) {
  const FinCategory& C = CM.M.C;
  MateSetup m;
  m.A = CM.adj[C.src(f)];
  m.Aprime = CM.adj[C.dst(f)];
  m.alpha.F = m.A.F;
  m.alpha.G = m.Aprime.F;
  for (ObjIx w = 0; w < C.num_objects(); ++w) m.alpha.components.push_back(CM.M.tena(C.id(w), f));
  m.beta.F = m.Aprime.G;
  m.beta.G = m.A.G;
  for (ObjIx z = 0; z < C.num_objects(); ++z)
    m.beta.components.push_back(CM.hom.on_arr(product_arrow(C, f, C.id(z))));
  return m;
}

inline LawReport check_closed_monoidal(const ClosedMonoidalStructure& CM) {
  LawReport r;
  const FinCategory& C = CM.M.C;
  if (!(CM.hom.source == product_category(op(C), C)) || !(CM.hom.target == C)) {
    r.add("structure/hom-endpoints", {}, "hom is not a functor op(C) x C -> C");
    return r;
  }
  r.merge(check_functor(CM.hom));
  if (static_cast<int>(CM.adj.size()) != C.num_objects()) {
    r.add("structure/adj-total", {}, "adjunction family has wrong length");
    return r;
  }
  if (!r.passed) return r;
  for (ObjIx X = 0; X < C.num_objects(); ++X) {
    if (!(CM.adj[X].F == tensor_right_functor(CM.M, X)) ||
        !(CM.adj[X].G == hom_left_functor(CM, X))) {
      r.add("structure/adj-endpoints", {X}, "adjunction is not (- (x) X) -| [X, -]");
      continue;
    }
    LawReport a = check_adjunction(CM.adj[X]);
    for (auto& v : a.violations) {
      v.where.insert(v.where.begin(), X);
      r.add("adj/" + v.law, v.where, v.description);
    }
  }
  if (!r.passed) return r;
  for (ArrIx f = 0; f < C.num_arrows(); ++f) {
    LawReport m = check_mate_unit_counit(induced_mate(CM, f));
    for (auto& v : m.violations) {
      v.where.insert(v.where.begin(), f);
      r.add("mate/" + v.law, v.where, v.description);
    }
  }
  return r;
}

// Verified bijection families Hom(Y (x) X, Z) ~ Hom(Y, [X, Z]), natural
// in all three variables: Y and Z through the adjunction, X through the
// mate condition's hom-square reading.
inline std::vector<HomIsoFamily> derive_tensor_hom_iso(const ClosedMonoidalStructure& CM) {
  const FinCategory& C = CM.M.C;
  std::vector<HomIsoFamily> out;
  for (ObjIx X = 0; X < C.num_objects(); ++X) {
    HomIsoFamily phi = hom_iso_of_adjunction(CM.adj[X]);
    if (!check_hom_iso_natural(phi).passed)
      throw StructuralError(
          "derive_tensor_hom_iso: adjunction-induced bijection is not natural in Y, Z "
          "(check_closed_monoidal should have failed)");
    out.push_back(std::move(phi));
  }
  for (ArrIx f = 0; f < C.num_arrows(); ++f)
    if (!check_mate_hom_square(induced_mate(CM, f)).passed)
      throw StructuralError(
          "derive_tensor_hom_iso: X-naturality square failed "
          "(check_closed_monoidal should have failed)");
  return out;
}

// Monoidal structure over a thin category from an object-level tensor;
// every structure map is the forced arrow between its endpoints.
inline MonoidalStructure thin_monoidal(const FinCategory& C, ObjIx unit,
                                       const std::function<ObjIx(ObjIx, ObjIx)>& ten) {
  MonoidalStructure M;
  M.C = C;
  M.unit = unit;
  std::vector<ObjIx> obj_map;
  for (ObjIx x = 0; x < C.num_objects(); ++x)
    for (ObjIx y = 0; y < C.num_objects(); ++y) obj_map.push_back(ten(x, y));
  M.tensor = thin_functor(product_category(C, C), C, obj_map);
  auto forced = [&](ObjIx a, ObjIx b) {
    auto hs = hom(C, a, b);
    if (hs.empty()) throw MissingStructureError("thin_monoidal: required arrow absent");
    return hs.front();
  };
  for (ObjIx x = 0; x < C.num_objects(); ++x) {
    M.lambda.push_back(forced(M.ten(unit, x), x));
    M.lambda_inv.push_back(forced(x, M.ten(unit, x)));
    M.rho.push_back(forced(M.ten(x, unit), x));
    M.rho_inv.push_back(forced(x, M.ten(x, unit)));
  }
  for (ObjIx x = 0; x < C.num_objects(); ++x)
    for (ObjIx y = 0; y < C.num_objects(); ++y)
      for (ObjIx z = 0; z < C.num_objects(); ++z) {
        M.alpha.push_back(forced(M.ten(M.ten(x, y), z), M.ten(x, M.ten(y, z))));
        M.alpha_inv.push_back(forced(M.ten(x, M.ten(y, z)), M.ten(M.ten(x, y), z)));
      }
  return M;
}

// Closed structure over a thin monoidal base from an object-level
// internal hom; units and counits are the forced arrows.
inline ClosedMonoidalStructure thin_closed_monoidal(
    const MonoidalStructure& M, const std::function<ObjIx(ObjIx, ObjIx)>& ih) {
  const FinCategory& C = M.C;
  ClosedMonoidalStructure CM;
  CM.M = M;
  std::vector<ObjIx> obj_map;
  for (ObjIx x = 0; x < C.num_objects(); ++x)
    for (ObjIx z = 0; z < C.num_objects(); ++z) obj_map.push_back(ih(x, z));
  CM.hom = thin_functor(product_category(op(C), C), C, obj_map);
  for (ObjIx X = 0; X < C.num_objects(); ++X) {
    Adjunction A;
    A.F = tensor_right_functor(M, X);
    A.G = hom_left_functor(CM, X);
    A.unit.F = id_functor(C);
    A.unit.G = compose_functor(A.G, A.F);
    A.counit.F = compose_functor(A.F, A.G);
    A.counit.G = id_functor(C);
    for (ObjIx y = 0; y < C.num_objects(); ++y) {
      auto hs = hom(C, y, A.G.on_obj(A.F.on_obj(y)));
      if (hs.empty())
        throw MissingStructureError("thin_closed_monoidal: unit arrow absent (not residuated)");
      A.unit.components.push_back(hs.front());
    }
    for (ObjIx z = 0; z < C.num_objects(); ++z) {
      auto hs = hom(C, A.F.on_obj(A.G.on_obj(z)), z);
      if (hs.empty())
        throw MissingStructureError("thin_closed_monoidal: counit arrow absent (not residuated)");
      A.counit.components.push_back(hs.front());
    }
    CM.adj.push_back(std::move(A));
  }
  return CM;
}

}  // namespace fincat
