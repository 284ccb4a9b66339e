#pragma once

// Functors between finite categories and natural transformations,
// with exhaustive law checking.

#include "fincat/fin_category.hpp"

namespace fincat {

struct FinFunctor {
  FinCategory source;
  FinCategory target;
  std::vector<ObjIx> obj_map;  // F0
  std::vector<ArrIx> arr_map;  // F1

  bool operator==(const FinFunctor&) const = default;

  ObjIx on_obj(ObjIx x) const { return obj_map[x]; }
  ArrIx on_arr(ArrIx f) const { return arr_map[f]; }
};

inline LawReport check_functor(const FinFunctor& F) {
  LawReport r;
  const FinCategory& C = F.source;
  const FinCategory& D = F.target;
  if (static_cast<int>(F.obj_map.size()) != C.num_objects() ||
      static_cast<int>(F.arr_map.size()) != C.num_arrows()) {
    r.add("structure/functor-total", {}, "obj_map or arr_map has wrong length");
    return r;
  }
  for (ObjIx x = 0; x < C.num_objects(); ++x)
    if (!D.valid_object(F.obj_map[x])) {
      r.add("structure/functor-range", {x}, "obj_map out of range");
      return r;
    }
  for (ArrIx f = 0; f < C.num_arrows(); ++f)
    if (!D.valid_arrow(F.arr_map[f])) {
      r.add("structure/functor-range", {f}, "arr_map out of range");
      return r;
    }
  for (ArrIx f = 0; f < C.num_arrows(); ++f) {
    ArrIx Ff = F.on_arr(f);
    if (D.src(Ff) != F.on_obj(C.src(f)) || D.dst(Ff) != F.on_obj(C.dst(f)))
      r.add("functor-typing", {f}, "F1(f) does not have endpoints F0(src), F0(dst)");
  }
  if (!r.passed) return r;
  for (ObjIx x = 0; x < C.num_objects(); ++x)
    if (!equiv(D, F.on_arr(C.id(x)), D.id(F.on_obj(x))))
      r.add("functor-identity", {x}, "F1(id) is not equivalent to id at F0");
  for (ArrIx g = 0; g < C.num_arrows(); ++g)
    for (ArrIx f = 0; f < C.num_arrows(); ++f) {
      if (!composable(C, g, f)) continue;
      if (!equiv(D, F.on_arr(compose(C, g, f)), compose(D, F.on_arr(g), F.on_arr(f))))
        r.add("functor-composition", {g, f}, "F1(g.f) is not equivalent to F1(g).F1(f)");
    }
  for (ArrIx f = 0; f < C.num_arrows(); ++f)
    for (ArrIx g = 0; g < C.num_arrows(); ++g)
      if (equiv(C, f, g) && !equiv(D, F.on_arr(f), F.on_arr(g)))
        r.add("functor-resp-equiv", {f, g}, "equivalent arrows map to non-equivalent arrows");
  return r;
}

inline FinFunctor id_functor(const FinCategory& C) {
  FinFunctor F;
  F.source = C;
  F.target = C;
  for (ObjIx x = 0; x < C.num_objects(); ++x) F.obj_map.push_back(x);
  for (ArrIx f = 0; f < C.num_arrows(); ++f) F.arr_map.push_back(f);
  return F;
}

inline FinFunctor constant_functor(const FinCategory& C, const FinCategory& D, ObjIx X) {
  if (!D.valid_object(X)) throw StructuralError("constant_functor: object out of range");
  FinFunctor F;
  F.source = C;
  F.target = D;
  F.obj_map.assign(C.num_objects(), X);
  F.arr_map.assign(C.num_arrows(), D.id(X));
  return F;
}

inline FinFunctor compose_functor(const FinFunctor& G, const FinFunctor& F) {
  if (!(F.target == G.source))
    throw StructuralError("compose_functor: middle categories differ");
  FinFunctor H;
  H.source = F.source;
  H.target = G.target;
  for (ObjIx x : F.obj_map) H.obj_map.push_back(G.on_obj(x));
  for (ArrIx f : F.arr_map) H.arr_map.push_back(G.on_arr(f));
  return H;
}

// F : C -> D reinterpreted as op(C) -> op(D); the maps are untouched,
// so applying this twice gives back F field for field.
inline FinFunctor op_functor(const FinFunctor& F) {
  FinFunctor G = F;
  G.source = op(F.source);
  G.target = op(F.target);
  return G;
}

// Functor determined by an object map alone, taking each arrow to the
// least arrow between the images. Intended for thin (poset-like) targets,
// where that choice is the only one; throws if some image hom is empty.
inline FinFunctor thin_functor(const FinCategory& C, const FinCategory& D,
                               std::vector<ObjIx> obj_map) {
  FinFunctor F;
  F.source = C;
  F.target = D;
  F.obj_map = std::move(obj_map);
  for (ArrIx f = 0; f < C.num_arrows(); ++f) {
    auto hs = hom(D, F.obj_map[C.src(f)], F.obj_map[C.dst(f)]);
    if (hs.empty())
      throw StructuralError("thin_functor: object map is not monotone (empty image hom)");
    F.arr_map.push_back(hs.front());
  }
  return F;
}

struct NatTrans {
  FinFunctor F;
  FinFunctor G;
  std::vector<ArrIx> components;  // object of F.source -> arrow of F.target

  bool operator==(const NatTrans&) const = default;

  ArrIx at(ObjIx x) const { return components[x]; }
};

inline LawReport check_natural(const NatTrans& t) {
  LawReport r;
  if (!(t.F.source == t.G.source) || !(t.F.target == t.G.target)) {
    r.add("structure/nat-endpoints", {}, "F and G do not share source/target");
    return r;
  }
  const FinCategory& C = t.F.source;
  const FinCategory& D = t.F.target;
  if (static_cast<int>(t.components.size()) != C.num_objects()) {
    r.add("structure/nat-total", {}, "component family has wrong length");
    return r;
  }
  for (ObjIx x = 0; x < C.num_objects(); ++x) {
    ArrIx c = t.at(x);
    if (!D.valid_arrow(c) || D.src(c) != t.F.on_obj(x) || D.dst(c) != t.G.on_obj(x)) {
      r.add("structure/nat-typing", {x}, "component is not an arrow F0(x) -> G0(x)");
      return r;
    }
  }
  for (ArrIx f = 0; f < C.num_arrows(); ++f) {
    ObjIx a = C.src(f), b = C.dst(f);
    ArrIx lhs = compose(D, t.G.on_arr(f), t.at(a));
    ArrIx rhs = compose(D, t.at(b), t.F.on_arr(f));
    if (!equiv(D, lhs, rhs))
      r.add("naturality", {f}, "naturality square fails at this arrow");
  }
  return r;
}

inline NatTrans identity_nat(const FinFunctor& F) {
  NatTrans t;
  t.F = F;
  t.G = F;
  for (ObjIx x = 0; x < F.source.num_objects(); ++x)
    t.components.push_back(F.target.id(F.on_obj(x)));
  return t;
}

// Vertical composite: s after t, for t : F => G and s : G => H.
inline NatTrans vcomp(const NatTrans& s, const NatTrans& t) {
  if (!(t.G == s.F)) throw StructuralError("vcomp: middle functors differ");
  NatTrans u;
  u.F = t.F;
  u.G = s.G;
  for (ObjIx x = 0; x < t.F.source.num_objects(); ++x)
    u.components.push_back(compose(t.F.target, s.at(x), t.at(x)));
  return u;
}

// Horizontal composite: for t : F => G over C -> D and s : H => K over
// D -> E, yields H.F => K.G with components s_{G0(x)} . H1(t_x).
inline NatTrans hcomp(const NatTrans& s, const NatTrans& t) {
  if (!(t.F.target == s.F.source)) throw StructuralError("hcomp: categories do not line up");
  NatTrans u;
  u.F = compose_functor(s.F, t.F);
  u.G = compose_functor(s.G, t.G);
  const FinCategory& E = s.F.target;
  for (ObjIx x = 0; x < t.F.source.num_objects(); ++x)
    u.components.push_back(compose(E, s.at(t.G.on_obj(x)), s.F.on_arr(t.at(x))));
  return u;
}

// Whiskering helpers: F . t and t . F.
inline NatTrans whisker_left(const FinFunctor& H, const NatTrans& t) {
  return hcomp(identity_nat(H), t);
}

inline NatTrans whisker_right(const NatTrans& t, const FinFunctor& H) {
  return hcomp(t, identity_nat(H));
}

// Two-sided inverse of every component, if one exists.
inline std::optional<NatTrans> is_natural_iso(const NatTrans& t) {
  const FinCategory& D = t.F.target;
  NatTrans inv;
  inv.F = t.G;
  inv.G = t.F;
  for (ObjIx x = 0; x < static_cast<int>(t.components.size()); ++x) {
    ArrIx c = t.at(x);
    std::optional<ArrIx> found;
    for (ArrIx d : hom(D, D.dst(c), D.src(c)))
      if (equiv(D, compose(D, d, c), D.id(D.src(c))) &&
          equiv(D, compose(D, c, d), D.id(D.dst(c)))) {
        found = d;
        break;
      }
    if (!found) return std::nullopt;
    inv.components.push_back(*found);
  }
  return inv;
}

}  // namespace fincat
