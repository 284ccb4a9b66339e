#pragma once

// Finite setoids and their maps: products, equalizers, exponentials,
// inverse-image fibers with transports, slice exponentials built from
// coherent fiber maps, and probe-bounded verification that the slice
// exponential has the pullback-hom universal property.

#include <algorithm>
#include <numeric>

#include "fincat/fin_category.hpp"

namespace fincat {

struct FinSetoid {
  int n = 0;
  std::vector<int> cls;  // element -> class index, dense from 0

  bool operator==(const FinSetoid&) const = default;

  bool eq(int x, int y) const { return cls[x] == cls[y]; }
  int num_classes() const { return cls.empty() ? 0 : *std::max_element(cls.begin(), cls.end()) + 1; }

  // least element of each class, ordered by class index
  std::vector<int> class_reps() const {
    std::vector<int> reps(num_classes(), -1);
    for (int x = n - 1; x >= 0; --x) reps[cls[x]] = x;
    return reps;
  }
};

inline void check_setoid(const FinSetoid& X) {
  if (static_cast<int>(X.cls.size()) != X.n)
    throw StructuralError("check_setoid: partition is not total");
  std::vector<bool> seen(X.n, false);
  for (int c : X.cls) {
    if (c < 0 || c >= X.n) throw StructuralError("check_setoid: class index out of range");
    seen[c] = true;
  }
  for (int c = 0; c < X.n; ++c)
    if (!seen[c] && std::find(X.cls.begin(), X.cls.end(), c) == X.cls.end() &&
        std::any_of(X.cls.begin(), X.cls.end(), [c](int d) { return d > c; }))
      throw StructuralError("check_setoid: class indices are not dense");
}

inline FinSetoid discrete_setoid(int n) {
  FinSetoid X;
  X.n = n;
  X.cls.resize(n);
  std::iota(X.cls.begin(), X.cls.end(), 0);
  return X;
}

inline FinSetoid terminal_setoid() { return discrete_setoid(1); }

struct SetoidMap {
  FinSetoid src, dst;
  std::vector<int> map;  // element of src -> element of dst

  bool operator==(const SetoidMap&) const = default;

  int operator()(int x) const { return map[x]; }
};

inline bool respects(const SetoidMap& f) {
  if (static_cast<int>(f.map.size()) != f.src.n) return false;
  for (int v : f.map)
    if (v < 0 || v >= f.dst.n) return false;
  for (int x = 0; x < f.src.n; ++x)
    for (int y = x + 1; y < f.src.n; ++y)
      if (f.src.eq(x, y) && !f.dst.eq(f.map[x], f.map[y])) return false;
  return true;
}

// Equality as morphisms: same endpoints and pointwise equivalent values.
inline bool map_eq(const SetoidMap& f, const SetoidMap& g) {
  if (!(f.src == g.src) || !(f.dst == g.dst)) return false;
  for (int x = 0; x < f.src.n; ++x)
    if (!f.dst.eq(f.map[x], g.map[x])) return false;
  return true;
}

inline SetoidMap id_map(const FinSetoid& X) {
  SetoidMap f{X, X, {}};
  f.map.resize(X.n);
  std::iota(f.map.begin(), f.map.end(), 0);
  return f;
}

inline SetoidMap compose_map(const SetoidMap& g, const SetoidMap& f) {
  if (!(f.dst == g.src)) throw StructuralError("compose_map: middle setoids differ");
  SetoidMap h{f.src, g.dst, {}};
  for (int x = 0; x < f.src.n; ++x) h.map.push_back(g.map[f.map[x]]);
  return h;
}

// All functions src -> dst that respect the partitions, in lexicographic
// order of their value vectors. The empty function is included.
inline std::vector<SetoidMap> all_maps(const FinSetoid& X, const FinSetoid& Y) {
  std::vector<SetoidMap> out;
  if (X.n > 0 && Y.n == 0) return out;
  SetoidMap f{X, Y, std::vector<int>(X.n, 0)};
  while (true) {
    if (respects(f)) out.push_back(f);
    int i = X.n;
    bool done = (i == 0);
    while (i > 0) {
      --i;
      if (++f.map[i] < Y.n) break;
      f.map[i] = 0;
      if (i == 0) done = true;
    }
    if (done) break;
  }
  return out;
}

inline FinSetoid product_setoid(const FinSetoid& X, const FinSetoid& Y) {
  FinSetoid P;
  P.n = X.n * Y.n;
  for (int x = 0; x < X.n; ++x)
    for (int y = 0; y < Y.n; ++y) P.cls.push_back(X.cls[x] * Y.num_classes() + Y.cls[y]);
  // densify class indices in order of first appearance
  std::map<int, int> dense;
  for (int& c : P.cls) {
    auto [it, fresh] = dense.emplace(c, static_cast<int>(dense.size()));
    (void)fresh;
    c = it->second;
  }
  return P;
}

inline int pair_elem(const FinSetoid& Y, int x, int y) { return x * Y.n + y; }

inline SetoidMap product_proj1(const FinSetoid& X, const FinSetoid& Y) {
  SetoidMap p{product_setoid(X, Y), X, {}};
  for (int x = 0; x < X.n; ++x)
    for (int y = 0; y < Y.n; ++y) p.map.push_back(x);
  return p;
}

inline SetoidMap product_proj2(const FinSetoid& X, const FinSetoid& Y) {
  SetoidMap p{product_setoid(X, Y), Y, {}};
  for (int x = 0; x < X.n; ++x)
    for (int y = 0; y < Y.n; ++y) p.map.push_back(y);
  return p;
}

struct EqualizerSetoid {
  FinSetoid obj;
  SetoidMap inclusion;
  std::vector<int> elements;  // elements of the common source, ascending
};

inline EqualizerSetoid equalizer_setoid(const SetoidMap& f, const SetoidMap& g) {
  if (!(f.src == g.src) || !(f.dst == g.dst))
    throw StructuralError("equalizer_setoid: maps are not parallel");
  EqualizerSetoid E;
  for (int x = 0; x < f.src.n; ++x)
    if (f.dst.eq(f.map[x], g.map[x])) E.elements.push_back(x);
  E.obj.n = static_cast<int>(E.elements.size());
  std::map<int, int> dense;
  for (int x : E.elements) {
    auto [it, fresh] = dense.emplace(f.src.cls[x], static_cast<int>(dense.size()));
    (void)fresh;
    E.obj.cls.push_back(it->second);
  }
  E.inclusion = {E.obj, f.src, E.elements};
  return E;
}

struct ExponentialSetoid {
  FinSetoid obj;                        // one element per respecting function
  std::vector<std::vector<int>> funcs;  // element -> value vector
};

// Carrier: all partition-respecting functions X -> Y; two are equivalent
// iff pointwise equivalent in Y.
inline ExponentialSetoid exponential_setoid(const FinSetoid& X, const FinSetoid& Y) {
  ExponentialSetoid E;
  std::vector<SetoidMap> maps = all_maps(X, Y);
  E.obj.n = static_cast<int>(maps.size());
  for (std::size_t i = 0; i < maps.size(); ++i) {
    int c = static_cast<int>(i);
    for (std::size_t j = 0; j < i; ++j)
      if (map_eq(maps[i], maps[j])) {
        c = E.obj.cls[j];
        break;
      }
    if (c == static_cast<int>(i)) {
      int dense = 0;
      for (int v : E.obj.cls) dense = std::max(dense, v + 1);
      c = dense;
    }
    E.obj.cls.push_back(c);
    E.funcs.push_back(maps[i].map);
  }
  return E;
}

inline FinSetoid hom_setoid(const FinSetoid& X, const FinSetoid& Y) {
  return exponential_setoid(X, Y).obj;
}

struct InverseImage {
  int a = 0;     // base element of f.dst
  SetoidMap f;   // X -> A
  std::vector<int> elements;  // x with f(x) equivalent to a, ascending

  bool operator==(const InverseImage&) const = default;
};

inline InverseImage inverse_image(int a, const SetoidMap& f) {
  if (a < 0 || a >= f.dst.n) throw StructuralError("inverse_image: base element out of range");
  InverseImage v{a, f, {}};
  for (int x = 0; x < f.src.n; ++x)
    if (f.dst.eq(f.map[x], a)) v.elements.push_back(x);
  return v;
}

// Rebase f^-1(a) at an equivalent element a'. Membership is judged up to
// the equivalence of A, so the element set is unchanged.
inline InverseImage inverse_image_transport(int a2, const InverseImage& v) {
  if (!v.f.dst.eq(v.a, a2))
    throw StructuralError("inverse_image_transport: target base is not equivalent");
  InverseImage w = v;
  w.a = a2;
  return w;
}

struct InverseImageMap {
  int a = 0;
  SetoidMap g;  // C -> A
  SetoidMap h;  // D -> A
  // position within inverse_image(a, g).elements -> element of D lying
  // in inverse_image(a, h)
  std::vector<int> i;

  bool operator==(const InverseImageMap&) const = default;
};

inline LawReport check_inverse_image_map(const InverseImageMap& m) {
  LawReport r;
  if (!(m.g.dst == m.h.dst)) {
    r.add("structure/fiber-map-base", {}, "g and h do not share a base setoid");
    return r;
  }
  InverseImage gf = inverse_image(m.a, m.g);
  InverseImage hf = inverse_image(m.a, m.h);
  if (m.i.size() != gf.elements.size()) {
    r.add("structure/fiber-map-total", {m.a}, "map length differs from the g-fiber size");
    return r;
  }
  for (std::size_t k = 0; k < m.i.size(); ++k)
    if (std::find(hf.elements.begin(), hf.elements.end(), m.i[k]) == hf.elements.end())
      r.add("structure/fiber-map-range", {m.a, static_cast<int>(k)},
            "value does not lie in the h-fiber");
  if (!r.passed) return r;
  for (std::size_t k = 0; k < m.i.size(); ++k)
    for (std::size_t l = k + 1; l < m.i.size(); ++l)
      if (m.g.src.eq(gf.elements[k], gf.elements[l]) && !m.h.src.eq(m.i[k], m.i[l]))
        r.add("fiber-map-coherent", {m.a, static_cast<int>(k), static_cast<int>(l)},
              "equivalent fiber elements map to non-equivalent values");
  return r;
}

// Rebase a fiber map at an equivalent base element. Both fibers keep the
// same element sets, so the underlying function carries over unchanged;
// coherence is re-verified.
inline InverseImageMap inverse_image_map_transport(int a2, const InverseImageMap& m) {
  if (!m.g.dst.eq(m.a, a2))
    throw StructuralError("inverse_image_map_transport: target base is not equivalent");
  InverseImageMap w = m;
  w.a = a2;
  if (!check_inverse_image_map(w).passed)
    throw StructuralError("inverse_image_map_transport: coherence lost (input was incoherent)");
  return w;
}

struct SliceExponential {
  FinSetoid A;
  SetoidMap g, h;
  FinSetoid obj;
  SetoidMap p;  // obj -> A, first projection
  // element -> (base element of A, fiber map values over the g-fiber)
  std::vector<std::pair<int, std::vector<int>>> carrier;
};

// Carrier: pairs of a chosen class representative a of A and a coherent
// fiber map g^-1(a) -> h^-1(a). Two elements are equivalent iff their
// bases are equivalent and the fiber maps agree pointwise up to the
// equivalence of D.
inline SliceExponential slice_exponential_with_reps(const FinSetoid& A, const SetoidMap& g,
                                                    const SetoidMap& h,
                                                    const std::vector<int>& reps) {
  if (!(g.dst == A) || !(h.dst == A))
    throw StructuralError("slice_exponential: maps do not land in the base");
  SliceExponential S;
  S.A = A;
  S.g = g;
  S.h = h;
  for (int a : reps) {
    InverseImage gf = inverse_image(a, g);
    InverseImage hf = inverse_image(a, h);
    const int p = static_cast<int>(gf.elements.size());
    const int q = static_cast<int>(hf.elements.size());
    if (p > 0 && q == 0) continue;  // no fiber maps over this class
    std::vector<int> pos(p, 0);
    while (true) {
      InverseImageMap m{a, g, h, {}};
      for (int k = 0; k < p; ++k) m.i.push_back(hf.elements[pos[k]]);
      if (check_inverse_image_map(m).passed) S.carrier.push_back({a, m.i});
      int i = p;
      bool done = (i == 0);
      while (i > 0) {
        --i;
        if (++pos[i] < q) break;
        pos[i] = 0;
        if (i == 0) done = true;
      }
      if (done) break;
    }
  }
  S.obj.n = static_cast<int>(S.carrier.size());
  for (int x = 0; x < S.obj.n; ++x) {
    int c = -1;
    for (int y = 0; y < x; ++y) {
      if (!A.eq(S.carrier[x].first, S.carrier[y].first)) continue;
      bool same = S.carrier[x].second.size() == S.carrier[y].second.size();
      for (std::size_t k = 0; same && k < S.carrier[x].second.size(); ++k)
        if (!h.src.eq(S.carrier[x].second[k], S.carrier[y].second[k])) same = false;
      if (same) {
        c = S.obj.cls[y];
        break;
      }
    }
    if (c < 0) {
      c = 0;
      for (int v : S.obj.cls) c = std::max(c, v + 1);
    }
    S.obj.cls.push_back(c);
  }
  S.p.src = S.obj;
  S.p.dst = A;
  for (const auto& [a, i] : S.carrier) S.p.map.push_back(a);
  return S;
}

inline SliceExponential slice_exponential(const FinSetoid& A, const SetoidMap& g,
                                          const SetoidMap& h) {
  return slice_exponential_with_reps(A, g, h, A.class_reps());
}

// All setoids with carrier at most k, canonical class numbering (classes
// indexed by first appearance).
inline std::vector<FinSetoid> all_setoids_up_to(int k) {
  std::vector<FinSetoid> out;
  for (int n = 0; n <= k; ++n) {
    FinSetoid X;
    X.n = n;
    X.cls.assign(n, 0);
    while (true) {
      // keep only canonical labelings: cls[i] <= 1 + max(cls[0..i-1])
      bool canon = true;
      int mx = -1;
      for (int c : X.cls) {
        if (c > mx + 1) canon = false;
        mx = std::max(mx, c);
      }
      if (canon) out.push_back(X);
      int i = n;
      bool done = (i == 0);
      while (i > 0) {
        --i;
        if (++X.cls[i] < n) break;
        X.cls[i] = 0;
        if (i == 0) done = true;
      }
      if (done) break;
    }
  }
  return out;
}

namespace detail {

struct SlicePullback {
  FinSetoid obj;
  std::vector<std::pair<int, int>> elements;  // (element of B, element of C)
  SetoidMap to_base;                          // obj -> A
};

// B x_A C for f : B -> A, g : C -> A: pairs agreeing in A up to its
// equivalence, componentwise partition.
inline SlicePullback setoid_pullback(const SetoidMap& f, const SetoidMap& g) {
  SlicePullback P;
  for (int b = 0; b < f.src.n; ++b)
    for (int c = 0; c < g.src.n; ++c)
      if (f.dst.eq(f.map[b], g.map[c])) P.elements.push_back({b, c});
  P.obj.n = static_cast<int>(P.elements.size());
  std::map<std::pair<int, int>, int> dense;
  for (auto [b, c] : P.elements) {
    auto [it, fresh] =
        dense.emplace(std::make_pair(f.src.cls[b], g.src.cls[c]), static_cast<int>(dense.size()));
    (void)fresh;
    P.obj.cls.push_back(it->second);
  }
  P.to_base.src = P.obj;
  P.to_base.dst = f.dst;
  for (auto [b, c] : P.elements) P.to_base.map.push_back(f.map[b]);
  return P;
}

}  // namespace detail

// Probe-bounded local cartesian closure: for every probe (B, f : B -> A)
// the currying map Hom_/A(B x_A C, D) -> Hom_/A(B, h^g) is a bijection
// on morphism classes, and it is natural along slice morphisms between
// probes. Quantification over all of Setoids/A is replaced by the finite
// probe family; the family is part of the verdict.
inline LawReport verify_lcc(const FinSetoid& A, const SetoidMap& g, const SetoidMap& h,
                            const std::vector<SetoidMap>& probes) {
  LawReport r;
  if (!(g.dst == A) || !(h.dst == A)) {
    r.add("structure/probe-typing", {}, "g or h does not land in the base");
    return r;
  }
  for (std::size_t pi = 0; pi < probes.size(); ++pi)
    if (!(probes[pi].dst == A) || !respects(probes[pi])) {
      r.add("structure/probe-typing", {static_cast<int>(pi)},
            "probe is not a respecting map into the base");
      return r;
    }
  SliceExponential X = slice_exponential(A, g, h);

  // curry over a fixed probe: u : B x_A C -> D over A becomes
  // b |-> (rep of f(b), c |-> u(b, c))
  auto curry = [&](const SetoidMap& f, const detail::SlicePullback& P,
                   const SetoidMap& u) -> SetoidMap {
    std::vector<int> reps = A.class_reps();
    SetoidMap v{f.src, X.obj, std::vector<int>(f.src.n, -1)};
    for (int b = 0; b < f.src.n; ++b) {
      int a = reps[A.cls[f.map[b]]];
      InverseImage gf = inverse_image(a, g);
      std::vector<int> vals;
      for (int c : gf.elements) {
        auto it = std::find(P.elements.begin(), P.elements.end(), std::make_pair(b, c));
        vals.push_back(u.map[it - P.elements.begin()]);
      }
      for (int x = 0; x < X.obj.n; ++x)
        if (X.carrier[x] == std::make_pair(a, vals)) v.map[b] = x;
    }
    return v;
  };
  auto uncurry = [&](const SetoidMap& f, const detail::SlicePullback& P,
                     const SetoidMap& v) -> SetoidMap {
    SetoidMap u{P.obj, h.src, {}};
    for (auto [b, c] : P.elements) {
      const auto& [a, vals] = X.carrier[v.map[b]];
      InverseImage gf = inverse_image(a, g);
      auto it = std::find(gf.elements.begin(), gf.elements.end(), c);
      u.map.push_back(vals[it - gf.elements.begin()]);
    }
    return u;
  };

  std::vector<detail::SlicePullback> pbs;
  std::vector<std::vector<SetoidMap>> lhs(probes.size()), rhs(probes.size());
  for (std::size_t pi = 0; pi < probes.size(); ++pi) {
    const SetoidMap& f = probes[pi];
    detail::SlicePullback P = detail::setoid_pullback(f, g);
    // slice morphisms (P, to_base) -> (D, h)
    for (const SetoidMap& u : all_maps(P.obj, h.src))
      if (map_eq(compose_map(h, u), P.to_base)) lhs[pi].push_back(u);
    // slice morphisms (B, f) -> (X, p)
    for (const SetoidMap& v : all_maps(f.src, X.obj))
      if (map_eq(compose_map(X.p, v), f)) rhs[pi].push_back(v);
    auto classes = [](const std::vector<SetoidMap>& ms) {
      int k = 0;
      for (std::size_t i = 0; i < ms.size(); ++i) {
        bool fresh = true;
        for (std::size_t j = 0; j < i; ++j)
          if (map_eq(ms[i], ms[j])) fresh = false;
        if (fresh) ++k;
      }
      return k;
    };
    int nl = classes(lhs[pi]), nr = classes(rhs[pi]);
    if (nl != nr)
      r.add("lcc-class-count", {static_cast<int>(pi), nl, nr},
            "pullback-hom and exponential-hom class counts differ");
    for (const SetoidMap& u : lhs[pi]) {
      SetoidMap v = curry(f, P, u);
      if (!respects(v) || !map_eq(compose_map(X.p, v), f))
        r.add("lcc-curry-slice", {static_cast<int>(pi)},
              "curried map is not a slice morphism into the exponential");
      else if (!map_eq(uncurry(f, P, v), u))
        r.add("lcc-roundtrip", {static_cast<int>(pi)}, "uncurry(curry(u)) differs from u");
    }
    for (const SetoidMap& v : rhs[pi])
      if (!map_eq(curry(f, P, uncurry(f, P, v)), v))
        r.add("lcc-roundtrip", {static_cast<int>(pi)}, "curry(uncurry(v)) differs from v");
    pbs.push_back(std::move(P));
  }

  // naturality along every slice morphism between probes
  for (std::size_t pi = 0; pi < probes.size(); ++pi)
    for (std::size_t pj = 0; pj < probes.size(); ++pj) {
      const SetoidMap& f = probes[pi];
      const SetoidMap& f2 = probes[pj];
      for (const SetoidMap& t : all_maps(f.src, f2.src)) {
        if (!map_eq(compose_map(f2, t), f)) continue;
        // t x_A id_C on pullback elements
        SetoidMap tlift{pbs[pi].obj, pbs[pj].obj, {}};
        bool total = true;
        for (auto [b, c] : pbs[pi].elements) {
          auto it = std::find(pbs[pj].elements.begin(), pbs[pj].elements.end(),
                              std::make_pair(t.map[b], c));
          if (it == pbs[pj].elements.end()) {
            total = false;
            break;
          }
          tlift.map.push_back(static_cast<int>(it - pbs[pj].elements.begin()));
        }
        if (!total) {
          r.add("structure/probe-pullback", {static_cast<int>(pi), static_cast<int>(pj)},
                "pullback of a slice morphism is not total");
          continue;
        }
        for (const SetoidMap& u2 : lhs[pj]) {
          SetoidMap left = curry(f, pbs[pi], compose_map(u2, tlift));
          SetoidMap right = compose_map(curry(f2, pbs[pj], u2), t);
          if (!map_eq(left, right))
            r.add("lcc-natural", {static_cast<int>(pi), static_cast<int>(pj)},
                  "currying does not commute with probe restriction");
        }
      }
    }
  return r;
}

}  // namespace fincat
