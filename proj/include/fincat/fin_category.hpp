#pragma once

// Finite categories with proof-relevant hom-setoids.
//
// A FinCategory stores explicit object/arrow lists, a total composition
// table over composable pairs, identity designations, and a partition of
// arrows into equivalence classes. Two distinct arrows may be equivalent
// without being identical; every operation works up to that equivalence
// and never conflates it with index identity.

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fincat {

using ObjIx = int;
using ArrIx = int;

struct CatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed data (indices out of range, partial tables, ...), as opposed
// to a law violation on well-formed data.
struct StructuralError : CatError {
  using CatError::CatError;
};

// An instance refused because a configured search bound would be exceeded.
struct TooLargeError : CatError {
  using CatError::CatError;
};

struct Arrow {
  ObjIx src = 0;
  ObjIx dst = 0;
  std::string label;

  bool operator==(const Arrow&) const = default;
};

struct FinCategory {
  std::vector<std::string> objects;
  std::vector<Arrow> arrows;
  std::vector<int> eq_class;               // arrow -> class index
  std::map<std::pair<ArrIx, ArrIx>, ArrIx> comp;  // (g, f) -> g after f
  std::vector<ArrIx> identities;           // object -> identity arrow

  // Structural equality, field by field. Used by the duality contracts.
  bool operator==(const FinCategory&) const = default;

  int num_objects() const { return static_cast<int>(objects.size()); }
  int num_arrows() const { return static_cast<int>(arrows.size()); }

  bool valid_object(ObjIx x) const { return x >= 0 && x < num_objects(); }
  bool valid_arrow(ArrIx f) const { return f >= 0 && f < num_arrows(); }

  ObjIx src(ArrIx f) const { return arrows[f].src; }
  ObjIx dst(ArrIx f) const { return arrows[f].dst; }
  ArrIx id(ObjIx x) const { return identities[x]; }

  bool parallel(ArrIx f, ArrIx g) const {
    return src(f) == src(g) && dst(f) == dst(g);
  }
};

struct Violation {
  std::string law;
  std::vector<int> where;  // offending arrow/object indices
  std::string description;
};

struct LawReport {
  bool passed = true;
  std::vector<Violation> violations;

  void add(std::string law, std::vector<int> where, std::string description) {
    passed = false;
    violations.push_back({std::move(law), std::move(where), std::move(description)});
  }

  void merge(const LawReport& other) {
    for (const auto& v : other.violations)
      violations.push_back(v);
    passed = passed && other.passed;
  }

  std::string summary() const {
    if (passed) return "passed";
    std::ostringstream os;
    os << violations.size() << " violation(s):";
    for (const auto& v : violations) {
      os << "\n  [" << v.law << "]";
      for (int i : v.where) os << " " << i;
      os << ": " << v.description;
    }
    return os.str();
  }
};

// Decidable hom-setoid equality: parallel and same class.
inline bool equiv(const FinCategory& C, ArrIx f, ArrIx g) {
  if (!C.valid_arrow(f) || !C.valid_arrow(g))
    throw StructuralError("equiv: arrow index out of range");
  return C.parallel(f, g) && C.eq_class[f] == C.eq_class[g];
}

inline ArrIx compose(const FinCategory& C, ArrIx g, ArrIx f) {
  if (!C.valid_arrow(f) || !C.valid_arrow(g))
    throw StructuralError("compose: arrow index out of range");
  auto it = C.comp.find({g, f});
  if (it == C.comp.end()) {
    std::ostringstream os;
    os << "compose: arrows " << g << " and " << f << " are not composable";
    throw StructuralError(os.str());
  }
  return it->second;
}

inline bool composable(const FinCategory& C, ArrIx g, ArrIx f) {
  return C.dst(f) == C.src(g);
}

// Arrows x -> y, in index order.
inline std::vector<ArrIx> hom(const FinCategory& C, ObjIx x, ObjIx y) {
  std::vector<ArrIx> out;
  for (ArrIx f = 0; f < C.num_arrows(); ++f)
    if (C.src(f) == x && C.dst(f) == y) out.push_back(f);
  return out;
}

// Least-index representative of each equivalence class in Hom(x, y),
// in index order. Class position in this list is the "hom class index"
// used by the adjunction machinery.
inline std::vector<ArrIx> hom_class_reps(const FinCategory& C, ObjIx x, ObjIx y) {
  std::vector<ArrIx> reps;
  std::vector<int> seen;
  for (ArrIx f : hom(C, x, y)) {
    if (std::find(seen.begin(), seen.end(), C.eq_class[f]) == seen.end()) {
      seen.push_back(C.eq_class[f]);
      reps.push_back(f);
    }
  }
  return reps;
}

inline int hom_class_of(const FinCategory& C, const std::vector<ArrIx>& reps, ArrIx f) {
  for (int i = 0; i < static_cast<int>(reps.size()); ++i)
    if (equiv(C, reps[i], f)) return i;
  throw StructuralError("hom_class_of: arrow not in this hom-set");
}

// Least-index member of f's class within its hom-set.
inline ArrIx class_rep(const FinCategory& C, ArrIx f) {
  for (ArrIx g = 0; g < f; ++g)
    if (equiv(C, g, f)) return g;
  return f;
}

namespace detail {

inline LawReport check_structure(const FinCategory& C) {
  LawReport r;
  const int no = C.num_objects();
  const int na = C.num_arrows();
  for (ArrIx f = 0; f < na; ++f) {
    if (C.src(f) < 0 || C.src(f) >= no || C.dst(f) < 0 || C.dst(f) >= no)
      r.add("structure/arrow-endpoints", {f}, "arrow endpoints out of range");
  }
  if (static_cast<int>(C.eq_class.size()) != na)
    r.add("structure/eq-class-total", {}, "eq_class is not total over arrows");
  if (static_cast<int>(C.identities.size()) != no)
    r.add("structure/identities-total", {}, "identities not designated for every object");
  if (!r.passed) return r;

  for (ObjIx x = 0; x < no; ++x) {
    ArrIx i = C.identities[x];
    if (!C.valid_arrow(i))
      r.add("structure/identity-range", {x}, "identity arrow index out of range");
    else if (C.src(i) != x || C.dst(i) != x)
      r.add("structure/identity-typing", {x, i}, "identity arrow is not an endo-arrow of its object");
  }
  // eq_class only relates parallel arrows
  for (ArrIx f = 0; f < na; ++f)
    for (ArrIx g = f + 1; g < na; ++g)
      if (C.eq_class[f] == C.eq_class[g] && !C.parallel(f, g))
        r.add("structure/class-typing", {f, g}, "equivalent arrows are not parallel");
  // comp defined on exactly the composable pairs, with correct typing
  for (ArrIx g = 0; g < na; ++g)
    for (ArrIx f = 0; f < na; ++f) {
      auto it = C.comp.find({g, f});
      if (composable(C, g, f)) {
        if (it == C.comp.end())
          r.add("structure/comp-total", {g, f}, "composable pair missing from composition table");
        else if (!C.valid_arrow(it->second))
          r.add("structure/comp-range", {g, f}, "composite index out of range");
        else if (C.src(it->second) != C.src(f) || C.dst(it->second) != C.dst(g))
          r.add("structure/comp-typing", {g, f, it->second}, "composite has wrong endpoints");
      } else if (it != C.comp.end()) {
        r.add("structure/comp-domain", {g, f}, "composition defined on a non-composable pair");
      }
    }
  for (const auto& [pair, v] : C.comp)
    if (!C.valid_arrow(pair.first) || !C.valid_arrow(pair.second) || !C.valid_arrow(v))
      r.add("structure/comp-range", {pair.first, pair.second}, "composition entry out of range");
  return r;
}

}  // namespace detail

// Exhaustive category-law check: typing, identity laws, associativity,
// composition respecting the hom-setoid equivalence. Structural defects
// are reported with "structure/..." law names and suppress law checking.
inline LawReport check_category_laws(const FinCategory& C) {
  LawReport r = detail::check_structure(C);
  if (!r.passed) return r;

  const int na = C.num_arrows();
  for (ArrIx f = 0; f < na; ++f) {
    ArrIx lid = C.id(C.dst(f));
    ArrIx rid = C.id(C.src(f));
    if (!equiv(C, compose(C, lid, f), f))
      r.add("identity-left", {f}, "id after f is not equivalent to f");
    if (!equiv(C, compose(C, f, rid), f))
      r.add("identity-right", {f}, "f after id is not equivalent to f");
  }
  for (ObjIx x = 0; x < C.num_objects(); ++x) {
    ArrIx i = C.id(x);
    if (!equiv(C, compose(C, i, i), i))
      r.add("identity-squared", {x, i}, "id after id is not equivalent to id");
  }
  for (ArrIx h = 0; h < na; ++h)
    for (ArrIx g = 0; g < na; ++g) {
      if (!composable(C, h, g)) continue;
      for (ArrIx f = 0; f < na; ++f) {
        if (!composable(C, g, f)) continue;
        ArrIx lhs = compose(C, compose(C, h, g), f);
        ArrIx rhs = compose(C, h, compose(C, g, f));
        if (!equiv(C, lhs, rhs))
          r.add("assoc", {h, g, f}, "(h.g).f is not equivalent to h.(g.f)");
      }
    }
  for (ArrIx g = 0; g < na; ++g)
    for (ArrIx g2 = 0; g2 < na; ++g2) {
      if (!equiv(C, g, g2)) continue;
      for (ArrIx f = 0; f < na; ++f) {
        if (!composable(C, g, f)) continue;
        for (ArrIx f2 = 0; f2 < na; ++f2) {
          if (!equiv(C, f, f2)) continue;
          if (!equiv(C, compose(C, g, f), compose(C, g2, f2)))
            r.add("comp-resp-equiv", {g, f, g2, f2},
                  "composition does not respect the arrow equivalence");
        }
      }
    }
  return r;
}

// Opposite category. Arrow and object indices are preserved, endpoints
// swapped, composition transposed. op(op(C)) == C holds bit for bit.
inline FinCategory op(const FinCategory& C) {
  FinCategory D = C;
  for (auto& a : D.arrows) std::swap(a.src, a.dst);
  D.comp.clear();
  for (const auto& [pair, v] : C.comp)
    D.comp[{pair.second, pair.first}] = v;
  return D;
}

// Product category. Objects and arrows are lexicographic pairs:
// (x, y) -> x * |D0| + y, and likewise for arrows.
inline FinCategory product_category(const FinCategory& C, const FinCategory& D) {
  FinCategory P;
  const int dno = D.num_objects();
  const int dna = D.num_arrows();
  for (const auto& x : C.objects)
    for (const auto& y : D.objects)
      P.objects.push_back("(" + x + "," + y + ")");
  auto pobj = [dno](ObjIx x, ObjIx y) { return x * dno + y; };
  auto parr = [dna](ArrIx f, ArrIx g) { return f * dna + g; };
  std::map<std::pair<int, int>, int> cls;  // (f-class, g-class) -> dense class
  for (ArrIx f = 0; f < C.num_arrows(); ++f)
    for (ArrIx g = 0; g < dna; ++g) {
      P.arrows.push_back({pobj(C.src(f), D.src(g)), pobj(C.dst(f), D.dst(g)),
                          "(" + C.arrows[f].label + "," + D.arrows[g].label + ")"});
      auto key = std::make_pair(C.eq_class[f], D.eq_class[g]);
      auto [it, fresh] = cls.emplace(key, static_cast<int>(cls.size()));
      (void)fresh;
      P.eq_class.push_back(it->second);
    }
  for (ObjIx x = 0; x < C.num_objects(); ++x)
    for (ObjIx y = 0; y < dno; ++y)
      P.identities.push_back(parr(C.id(x), D.id(y)));
  for (const auto& [cp, cv] : C.comp)
    for (const auto& [dp, dv] : D.comp)
      P.comp[{parr(cp.first, dp.first), parr(cp.second, dp.second)}] = parr(cv, dv);
  return P;
}

inline ArrIx product_arrow(const FinCategory& D, ArrIx f, ArrIx g) {
  return f * D.num_arrows() + g;
}

inline ObjIx product_object(const FinCategory& D, ObjIx x, ObjIx y) {
  return x * D.num_objects() + y;
}

// Slice category C / X, plus the maps back to C needed by consumers.
// Objects are pairs (Y, f : Y -> X) with f the least-index representative
// of its equivalence class; a morphism (Y, f) -> (Z, g) is an arrow
// h : Y -> Z of C with g . h equivalent to f.
struct SliceCategory {
  FinCategory cat;
  std::vector<std::pair<ObjIx, ArrIx>> object_data;       // slice obj -> (Y, f)
  std::vector<ArrIx> arrow_data;                          // slice arrow -> underlying h
};

inline SliceCategory slice_category(const FinCategory& C, ObjIx X) {
  if (!C.valid_object(X)) throw StructuralError("slice_category: object out of range");
  SliceCategory S;
  for (ObjIx y = 0; y < C.num_objects(); ++y)
    for (ArrIx f : hom_class_reps(C, y, X)) {
      S.object_data.push_back({y, f});
      S.cat.objects.push_back("(" + C.objects[y] + "," + C.arrows[f].label + ")");
    }
  // arrows, indexed by (source slice object, target slice object, h)
  std::map<std::tuple<int, int, ArrIx>, int> arrow_ix;
  std::map<std::pair<int, int>, int> cls;
  for (int s = 0; s < static_cast<int>(S.object_data.size()); ++s)
    for (int t = 0; t < static_cast<int>(S.object_data.size()); ++t) {
      auto [y, f] = S.object_data[s];
      auto [z, g] = S.object_data[t];
      for (ArrIx h : hom(C, y, z)) {
        if (!equiv(C, compose(C, g, h), f)) continue;
        int ix = static_cast<int>(S.arrow_data.size());
        arrow_ix[{s, t, h}] = ix;
        S.arrow_data.push_back(h);
        S.cat.arrows.push_back({s, t, C.arrows[h].label});
        auto key = std::make_pair(s * static_cast<int>(S.object_data.size()) + t, C.eq_class[h]);
        auto [it, fresh] = cls.emplace(key, static_cast<int>(cls.size()));
        (void)fresh;
        S.cat.eq_class.push_back(it->second);
      }
    }
  for (int s = 0; s < static_cast<int>(S.object_data.size()); ++s) {
    auto [y, f] = S.object_data[s];
    S.cat.identities.push_back(arrow_ix.at({s, s, C.id(y)}));
  }
  for (const auto& [kg, ig] : arrow_ix)
    for (const auto& [kf, ifx] : arrow_ix) {
      auto [fs, ft, fh] = kf;
      auto [gs, gt, gh] = kg;
      if (ft != gs) continue;
      S.cat.comp[{ig, ifx}] = arrow_ix.at({fs, gt, compose(C, gh, fh)});
    }
  return S;
}

}  // namespace fincat
