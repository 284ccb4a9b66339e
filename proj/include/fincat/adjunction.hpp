#pragma once

// Adjunctions in unit/counit form, the derived hom-setoid isomorphism
// with round-trips, mates in both formulations, adjoint equivalences,
// and the induced monad.

#include "fincat/functor.hpp"
#include "fincat/monad.hpp"

namespace fincat {

struct Adjunction {
  FinFunctor F;     // C -> D, left adjoint
  FinFunctor G;     // D -> C, right adjoint
  NatTrans unit;    // id_C => G.F
  NatTrans counit;  // F.G => id_D

  bool operator==(const Adjunction&) const = default;

  const FinCategory& left_cat() const { return F.source; }
  const FinCategory& right_cat() const { return F.target; }
};

inline Adjunction identity_adjunction(const FinCategory& C) {
  Adjunction A;
  A.F = id_functor(C);
  A.G = id_functor(C);
  A.unit = identity_nat(A.F);
  A.counit = identity_nat(A.F);
  return A;
}

// Galois connection between thin categories: F and G given by object
// maps, unit/counit synthesized (each component is the unique arrow).
inline Adjunction galois_adjunction(const FinCategory& C, const FinCategory& D,
                                    std::vector<ObjIx> f, std::vector<ObjIx> g) {
  Adjunction A;
  A.F = thin_functor(C, D, std::move(f));
  A.G = thin_functor(D, C, std::move(g));
  A.unit.F = id_functor(C);
  A.unit.G = compose_functor(A.G, A.F);
  for (ObjIx x = 0; x < C.num_objects(); ++x) {
    auto hs = hom(C, x, A.G.on_obj(A.F.on_obj(x)));
    if (hs.empty()) throw StructuralError("galois_adjunction: x is not below G(F(x))");
    A.unit.components.push_back(hs.front());
  }
  A.counit.F = compose_functor(A.F, A.G);
  A.counit.G = id_functor(D);
  for (ObjIx y = 0; y < D.num_objects(); ++y) {
    auto hs = hom(D, A.F.on_obj(A.G.on_obj(y)), y);
    if (hs.empty()) throw StructuralError("galois_adjunction: F(G(y)) is not below y");
    A.counit.components.push_back(hs.front());
  }
  return A;
}

inline LawReport check_adjunction(const Adjunction& A) {
  LawReport r;
  const FinCategory& C = A.F.source;
  const FinCategory& D = A.F.target;
  if (!(A.G.source == D) || !(A.G.target == C)) {
    r.add("structure/adjunction-endpoints", {}, "G is not typed D -> C");
    return r;
  }
  if (!(A.unit.F == id_functor(C)) || !(A.unit.G == compose_functor(A.G, A.F)) ||
      !(A.counit.F == compose_functor(A.F, A.G)) || !(A.counit.G == id_functor(D))) {
    r.add("structure/adjunction-typing", {}, "unit/counit are not typed id => GF / FG => id");
    return r;
  }
  r.merge(check_functor(A.F));
  r.merge(check_functor(A.G));
  r.merge(check_natural(A.unit));
  r.merge(check_natural(A.counit));
  if (!r.passed) return r;
  for (ObjIx x = 0; x < C.num_objects(); ++x) {
    ObjIx FX = A.F.on_obj(x);
    ArrIx zig = compose(D, A.counit.at(FX), A.F.on_arr(A.unit.at(x)));
    if (!equiv(D, zig, D.id(FX)))
      r.add("triangle-zig", {x}, "counit_F . F(unit) is not the identity at this object");
  }
  for (ObjIx y = 0; y < D.num_objects(); ++y) {
    ObjIx GY = A.G.on_obj(y);
    ArrIx zag = compose(C, A.G.on_arr(A.counit.at(y)), A.unit.at(GY));
    if (!equiv(C, zag, C.id(GY)))
      r.add("triangle-zag", {y}, "G(counit) . unit_G is not the identity at this object");
  }
  return r;
}

// Class-level bijections Hom_D(F X, Y) ~ Hom_C(X, G Y), one per object
// pair, stored against the hom_class_reps orderings of the two homs.
struct HomIsoFamily {
  FinFunctor F;
  FinFunctor G;
  // indexed [X][Y]: forward[c] = class position in Hom_C(X, G Y) of the
  // image of class position c in Hom_D(F X, Y); backward is its inverse
  std::vector<std::vector<std::vector<int>>> forward;
  std::vector<std::vector<std::vector<int>>> backward;

  bool operator==(const HomIsoFamily&) const = default;
};

namespace detail {

// Apply a class map: arrow g in Hom_D(FX, Y) -> representative arrow of
// the image class in Hom_C(X, GY).
inline ArrIx apply_hom_iso(const HomIsoFamily& phi, bool fwd, ObjIx X, ObjIx Y, ArrIx g) {
  const FinCategory& C = phi.F.source;
  const FinCategory& D = phi.F.target;
  auto d_reps = hom_class_reps(D, phi.F.on_obj(X), Y);
  auto c_reps = hom_class_reps(C, X, phi.G.on_obj(Y));
  if (fwd) {
    int c = hom_class_of(D, d_reps, g);
    return c_reps[phi.forward[X][Y][c]];
  }
  int c = hom_class_of(C, c_reps, g);
  return d_reps[phi.backward[X][Y][c]];
}

}  // namespace detail

// phi(g : FX -> Y) = G(g) . unit_X; psi(f : X -> GY) = counit_Y . F(f).
inline HomIsoFamily hom_iso_of_adjunction(const Adjunction& A) {
  const FinCategory& C = A.F.source;
  const FinCategory& D = A.F.target;
  HomIsoFamily phi;
  phi.F = A.F;
  phi.G = A.G;
  phi.forward.resize(C.num_objects());
  phi.backward.resize(C.num_objects());
  for (ObjIx X = 0; X < C.num_objects(); ++X) {
    phi.forward[X].resize(D.num_objects());
    phi.backward[X].resize(D.num_objects());
    for (ObjIx Y = 0; Y < D.num_objects(); ++Y) {
      auto d_reps = hom_class_reps(D, A.F.on_obj(X), Y);
      auto c_reps = hom_class_reps(C, X, A.G.on_obj(Y));
      if (d_reps.size() != c_reps.size())
        throw StructuralError("hom_iso_of_adjunction: hom class cardinalities differ");
      auto& fwd = phi.forward[X][Y];
      auto& bwd = phi.backward[X][Y];
      fwd.resize(d_reps.size());
      bwd.assign(c_reps.size(), -1);
      for (int c = 0; c < static_cast<int>(d_reps.size()); ++c) {
        ArrIx img = compose(C, A.G.on_arr(d_reps[c]), A.unit.at(X));
        fwd[c] = hom_class_of(C, c_reps, img);
      }
      for (int c = 0; c < static_cast<int>(c_reps.size()); ++c) {
        ArrIx img = compose(D, A.counit.at(Y), A.F.on_arr(c_reps[c]));
        bwd[c] = hom_class_of(D, d_reps, img);
      }
      for (int c = 0; c < static_cast<int>(fwd.size()); ++c)
        if (bwd[fwd[c]] != c || fwd[bwd[c]] != c)
          throw StructuralError(
              "hom_iso_of_adjunction: derived maps are not mutually inverse "
              "(internal consistency failure)");
    }
  }
  return phi;
}

// Naturality of a candidate class-map family, checked square by square.
// Returns the first failing square as a violation, or a passing report.
inline LawReport check_hom_iso_natural(const HomIsoFamily& phi) {
  LawReport r;
  const FinCategory& C = phi.F.source;
  const FinCategory& D = phi.F.target;
  // bijectivity
  for (ObjIx X = 0; X < C.num_objects(); ++X)
    for (ObjIx Y = 0; Y < D.num_objects(); ++Y) {
      const auto& fwd = phi.forward[X][Y];
      const auto& bwd = phi.backward[X][Y];
      if (fwd.size() != bwd.size()) {
        r.add("hom-iso-bijection", {X, Y}, "class counts differ between the two sides");
        continue;
      }
      for (int c = 0; c < static_cast<int>(fwd.size()); ++c)
        if (fwd[c] < 0 || fwd[c] >= static_cast<int>(bwd.size()) || bwd[fwd[c]] != c)
          r.add("hom-iso-bijection", {X, Y, c}, "maps are not mutually inverse at this class");
    }
  if (!r.passed) return r;
  // naturality in X: for h : X' -> X, phi(g . F(h)) == phi(g) . h
  for (ObjIx X = 0; X < C.num_objects(); ++X)
    for (ObjIx Y = 0; Y < D.num_objects(); ++Y)
      for (ArrIx g : hom_class_reps(D, phi.F.on_obj(X), Y)) {
        for (ArrIx h = 0; h < C.num_arrows(); ++h) {
          if (C.dst(h) != X) continue;
          ObjIx X2 = C.src(h);
          ArrIx lhs = detail::apply_hom_iso(phi, true, X2, Y, compose(D, g, phi.F.on_arr(h)));
          ArrIx rhs = compose(C, detail::apply_hom_iso(phi, true, X, Y, g), h);
          if (!equiv(C, lhs, rhs))
            r.add("hom-iso-natural-X", {X, Y, g, h}, "contravariant naturality square fails");
        }
        // naturality in Y: for k : Y -> Y', phi(k . g) == G(k) . phi(g)
        for (ArrIx k = 0; k < D.num_arrows(); ++k) {
          if (D.src(k) != Y) continue;
          ObjIx Y2 = D.dst(k);
          ArrIx lhs = detail::apply_hom_iso(phi, true, X, Y2, compose(D, k, g));
          ArrIx rhs = compose(C, phi.G.on_arr(k), detail::apply_hom_iso(phi, true, X, Y, g));
          if (!equiv(C, lhs, rhs))
            r.add("hom-iso-natural-Y", {X, Y, g, k}, "covariant naturality square fails");
        }
      }
  return r;
}

// Rebuild the unit/counit presentation from a verified hom-iso family.
// unit_X is a representative of phi(id_FX); counit_Y of phi^{-1}(id_GY).
inline Adjunction adjunction_of_hom_iso(const FinFunctor& F, const FinFunctor& G,
                                        const HomIsoFamily& phi) {
  LawReport nat = check_hom_iso_natural(phi);
  if (!nat.passed)
    throw StructuralError("adjunction_of_hom_iso: family rejected: " + nat.summary());
  const FinCategory& C = F.source;
  const FinCategory& D = F.target;
  Adjunction A;
  A.F = F;
  A.G = G;
  A.unit.F = id_functor(C);
  A.unit.G = compose_functor(G, F);
  for (ObjIx X = 0; X < C.num_objects(); ++X)
    A.unit.components.push_back(detail::apply_hom_iso(phi, true, X, F.on_obj(X), D.id(F.on_obj(X))));
  A.counit.F = compose_functor(F, G);
  A.counit.G = id_functor(D);
  for (ObjIx Y = 0; Y < D.num_objects(); ++Y)
    A.counit.components.push_back(
        detail::apply_hom_iso(phi, false, G.on_obj(Y), Y, C.id(G.on_obj(Y))));
  return A;
}

struct MateSetup {
  Adjunction A;       // F -| G
  Adjunction Aprime;  // F' -| G', over the same pair of categories
  NatTrans alpha;     // F => F'
  NatTrans beta;      // G' => G
};

namespace detail {

inline bool mate_setup_typed(const MateSetup& m, LawReport& r) {
  if (!(m.A.left_cat() == m.Aprime.left_cat()) || !(m.A.right_cat() == m.Aprime.right_cat())) {
    r.add("structure/mate-categories", {}, "the two adjunctions live over different categories");
    return false;
  }
  if (!(m.alpha.F == m.A.F) || !(m.alpha.G == m.Aprime.F) || !(m.beta.F == m.Aprime.G) ||
      !(m.beta.G == m.A.G)) {
    r.add("structure/mate-typing", {}, "alpha/beta are not typed F => F' and G' => G");
    return false;
  }
  return true;
}

}  // namespace detail

// Unit/counit characterization: G(alpha) . eta == beta_F' . eta' and
// eps' . alpha_G' == eps . F(beta), checked at every object.
inline LawReport check_mate_unit_counit(const MateSetup& m) {
  LawReport r;
  if (!detail::mate_setup_typed(m, r)) return r;
  const FinCategory& C = m.A.left_cat();
  const FinCategory& D = m.A.right_cat();
  for (ObjIx x = 0; x < C.num_objects(); ++x) {
    ArrIx lhs = compose(C, m.A.G.on_arr(m.alpha.at(x)), m.A.unit.at(x));
    ArrIx rhs = compose(C, m.beta.at(m.Aprime.F.on_obj(x)), m.Aprime.unit.at(x));
    if (!equiv(C, lhs, rhs))
      r.add("mate-unit-square", {x}, "G(alpha) . eta differs from beta_F' . eta'");
  }
  for (ObjIx y = 0; y < D.num_objects(); ++y) {
    ArrIx lhs = compose(D, m.Aprime.counit.at(y), m.alpha.at(m.Aprime.G.on_obj(y)));
    ArrIx rhs = compose(D, m.A.counit.at(y), m.A.F.on_arr(m.beta.at(y)));
    if (!equiv(D, lhs, rhs))
      r.add("mate-counit-square", {y}, "eps' . alpha_G' differs from eps . F(beta)");
  }
  return r;
}

// Hom-square characterization: for every g : F'X -> Y,
// beta_Y . phi'(g) == phi(g . alpha_X) at the class level.
inline LawReport check_mate_hom_square(const MateSetup& m) {
  LawReport r;
  if (!detail::mate_setup_typed(m, r)) return r;
  const FinCategory& C = m.A.left_cat();
  const FinCategory& D = m.A.right_cat();
  HomIsoFamily phi = hom_iso_of_adjunction(m.A);
  HomIsoFamily phi2 = hom_iso_of_adjunction(m.Aprime);
  for (ObjIx X = 0; X < C.num_objects(); ++X)
    for (ObjIx Y = 0; Y < D.num_objects(); ++Y)
      for (ArrIx g : hom_class_reps(D, m.Aprime.F.on_obj(X), Y)) {
        ArrIx lhs = compose(C, m.beta.at(Y), detail::apply_hom_iso(phi2, true, X, Y, g));
        ArrIx rhs = detail::apply_hom_iso(phi, true, X, Y, compose(D, g, m.alpha.at(X)));
        if (!equiv(C, lhs, rhs))
          r.add("mate-hom-square", {X, Y, g}, "the two routes around the hom square differ");
      }
  return r;
}

inline bool is_adjoint_equivalence(const Adjunction& A) {
  return is_natural_iso(A.unit).has_value() && is_natural_iso(A.counit).has_value();
}

// T = G.F, eta = unit, mu_X = G(counit at F X).
inline Monad monad_of_adjunction(const Adjunction& A) {
  Monad M;
  M.T = compose_functor(A.G, A.F);
  M.eta = A.unit;
  M.eta.G = M.T;
  M.mu.F = compose_functor(M.T, M.T);
  M.mu.G = M.T;
  for (ObjIx x = 0; x < A.F.source.num_objects(); ++x)
    M.mu.components.push_back(A.G.on_arr(A.counit.at(A.F.on_obj(x))));
  return M;
}

}  // namespace fincat
