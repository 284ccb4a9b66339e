#pragma once

// Monads on finite categories and their Kleisli categories.

#include "fincat/functor.hpp"

namespace fincat {

struct Monad {
  FinFunctor T;    // endofunctor
  NatTrans eta;    // id => T
  NatTrans mu;     // T.T => T

  bool operator==(const Monad&) const = default;

  const FinCategory& base() const { return T.source; }
};

inline Monad identity_monad(const FinCategory& C) {
  Monad M;
  M.T = id_functor(C);
  M.eta = identity_nat(M.T);
  M.mu = identity_nat(M.T);
  return M;
}

inline LawReport check_monad(const Monad& M) {
  LawReport r;
  const FinCategory& C = M.T.source;
  if (!(M.T.source == M.T.target)) {
    r.add("structure/monad-endo", {}, "T is not an endofunctor");
    return r;
  }
  if (!(M.eta.F == id_functor(C)) || !(M.eta.G == M.T)) {
    r.add("structure/monad-eta-typing", {}, "eta is not typed id => T");
    return r;
  }
  if (!(M.mu.F == compose_functor(M.T, M.T)) || !(M.mu.G == M.T)) {
    r.add("structure/monad-mu-typing", {}, "mu is not typed T.T => T");
    return r;
  }
  r.merge(check_functor(M.T));
  r.merge(check_natural(M.eta));
  r.merge(check_natural(M.mu));
  if (!r.passed) return r;
  for (ObjIx x = 0; x < C.num_objects(); ++x) {
    ObjIx Tx = M.T.on_obj(x);
    // associativity: mu . T(mu) == mu . mu_T at every object
    ArrIx lhs = compose(C, M.mu.at(x), M.T.on_arr(M.mu.at(x)));
    ArrIx rhs = compose(C, M.mu.at(x), M.mu.at(Tx));
    if (!equiv(C, lhs, rhs))
      r.add("monad-assoc", {x}, "mu . T(mu) differs from mu . mu_T");
    if (!equiv(C, compose(C, M.mu.at(x), M.T.on_arr(M.eta.at(x))), C.id(Tx)))
      r.add("monad-unit-left", {x}, "mu . T(eta) is not the identity");
    if (!equiv(C, compose(C, M.mu.at(x), M.eta.at(Tx)), C.id(Tx)))
      r.add("monad-unit-right", {x}, "mu . eta_T is not the identity");
  }
  return r;
}

// Kleisli category: same objects, Hom_k(a, b) = Hom(a, T b), composition
// g .k f = mu . T(g) . f, identities eta.
struct KleisliCategory {
  FinCategory cat;
  // kleisli arrow -> (a, b, underlying arrow a -> T b in the base)
  std::vector<std::tuple<ObjIx, ObjIx, ArrIx>> arrow_data;
};

inline KleisliCategory kleisli_category(const Monad& M) {
  LawReport mr = check_monad(M);
  if (!mr.passed) throw StructuralError("kleisli_category: " + mr.summary());
  const FinCategory& C = M.base();
  KleisliCategory K;
  K.cat.objects = C.objects;
  std::map<std::tuple<ObjIx, ObjIx, ArrIx>, ArrIx> ix;
  std::map<std::pair<int, int>, int> cls;
  for (ObjIx a = 0; a < C.num_objects(); ++a)
    for (ObjIx b = 0; b < C.num_objects(); ++b)
      for (ArrIx f : hom(C, a, M.T.on_obj(b))) {
        ArrIx k = static_cast<ArrIx>(K.arrow_data.size());
        ix[{a, b, f}] = k;
        K.arrow_data.push_back({a, b, f});
        K.cat.arrows.push_back({a, b, C.arrows[f].label});
        auto key = std::make_pair(a * C.num_objects() + b, C.eq_class[f]);
        auto [it, fresh] = cls.emplace(key, static_cast<int>(cls.size()));
        (void)fresh;
        K.cat.eq_class.push_back(it->second);
      }
  for (ObjIx a = 0; a < C.num_objects(); ++a)
    K.cat.identities.push_back(ix.at({a, a, M.eta.at(a)}));
  for (ArrIx kg = 0; kg < static_cast<int>(K.arrow_data.size()); ++kg)
    for (ArrIx kf = 0; kf < static_cast<int>(K.arrow_data.size()); ++kf) {
      auto [b, c, g] = K.arrow_data[kg];
      auto [a, b2, f] = K.arrow_data[kf];
      if (b2 != b) continue;
      ArrIx comp = compose(C, M.mu.at(c), compose(C, M.T.on_arr(g), f));
      K.cat.comp[{kg, kf}] = ix.at({a, c, comp});
    }
  return K;
}

}  // namespace fincat
