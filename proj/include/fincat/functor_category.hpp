#pragma once

// Enumerated functor categories [J, C] for finite J and C.

#include <cstdint>

#include "fincat/functor.hpp"

namespace fincat {

struct FunctorCategory {
  FinCategory cat;
  std::vector<FinFunctor> objects;  // deterministic lexicographic order
  std::vector<NatTrans> arrows;     // all law-passing component families
};

namespace detail {

// Enumerate vectors v with v[i] in choices[i], lexicographically.
template <typename F>
void enumerate_product(const std::vector<std::vector<int>>& choices, F&& visit) {
  std::vector<int> v(choices.size());
  for (const auto& c : choices)
    if (c.empty()) return;
  std::size_t i = 0;
  std::vector<std::size_t> pos(choices.size(), 0);
  if (choices.empty()) {
    visit(v);
    return;
  }
  while (true) {
    for (std::size_t k = 0; k < choices.size(); ++k) v[k] = choices[k][pos[k]];
    visit(v);
    i = choices.size();
    while (i > 0) {
      --i;
      if (++pos[i] < choices[i].size()) break;
      pos[i] = 0;
      if (i == 0) return;
    }
  }
}

}  // namespace detail

// All law-passing functors J -> C, ordered lexicographically on
// (obj_map, arr_map). Refuses instances whose candidate space exceeds
// the cap rather than truncating.
inline std::vector<FinFunctor> enumerate_functors(const FinCategory& J, const FinCategory& C,
                                                  std::uint64_t cap = 1000000) {
  // candidate count: obj assignments times, per assignment, the product
  // of per-arrow hom sizes; bounded estimate up front
  std::uint64_t obj_space = 1;
  for (int i = 0; i < J.num_objects(); ++i) {
    obj_space *= static_cast<std::uint64_t>(C.num_objects());
    if (obj_space > cap)
      throw TooLargeError("enumerate_functors: object-map space exceeds cap");
  }
  std::vector<FinFunctor> out;
  std::vector<std::vector<int>> obj_choices(J.num_objects());
  for (auto& ch : obj_choices)
    for (ObjIx x = 0; x < C.num_objects(); ++x) ch.push_back(x);
  std::uint64_t budget = cap;
  detail::enumerate_product(obj_choices, [&](const std::vector<int>& obj_map) {
    std::vector<std::vector<int>> arr_choices(J.num_arrows());
    std::uint64_t space = 1;
    for (ArrIx f = 0; f < J.num_arrows(); ++f) {
      arr_choices[f] = hom(C, obj_map[J.src(f)], obj_map[J.dst(f)]);
      space *= std::max<std::uint64_t>(1, arr_choices[f].size());
      if (space > budget)
        throw TooLargeError("enumerate_functors: arrow-map space exceeds cap");
    }
    detail::enumerate_product(arr_choices, [&](const std::vector<int>& arr_map) {
      FinFunctor F{J, C, obj_map, arr_map};
      if (check_functor(F).passed) out.push_back(F);
    });
  });
  return out;
}

// All natural transformations F => G as explicit component families.
inline std::vector<NatTrans> enumerate_nat_trans(const FinFunctor& F, const FinFunctor& G) {
  const FinCategory& J = F.source;
  const FinCategory& C = F.target;
  std::vector<std::vector<int>> choices(J.num_objects());
  for (ObjIx x = 0; x < J.num_objects(); ++x)
    choices[x] = hom(C, F.on_obj(x), G.on_obj(x));
  std::vector<NatTrans> out;
  detail::enumerate_product(choices, [&](const std::vector<int>& comps) {
    NatTrans t{F, G, comps};
    if (check_natural(t).passed) out.push_back(t);
  });
  return out;
}

inline FunctorCategory functor_category(const FinCategory& J, const FinCategory& C,
                                        std::uint64_t cap = 1000000) {
  FunctorCategory FC;
  FC.objects = enumerate_functors(J, C, cap);
  std::map<std::tuple<int, int, std::vector<int>>, ArrIx> ix;
  std::map<std::tuple<int, int, std::vector<int>>, int> cls;
  for (int s = 0; s < static_cast<int>(FC.objects.size()); ++s)
    FC.cat.objects.push_back("F" + std::to_string(s));
  for (int s = 0; s < static_cast<int>(FC.objects.size()); ++s)
    for (int t = 0; t < static_cast<int>(FC.objects.size()); ++t)
      for (const NatTrans& n : enumerate_nat_trans(FC.objects[s], FC.objects[t])) {
        ArrIx a = static_cast<ArrIx>(FC.arrows.size());
        ix[{s, t, n.components}] = a;
        FC.arrows.push_back(n);
        FC.cat.arrows.push_back({s, t, "n" + std::to_string(a)});
        // class key: componentwise equivalence classes in C
        std::vector<int> ckey;
        for (ArrIx c : n.components) ckey.push_back(C.eq_class[c]);
        auto [it, fresh] = cls.emplace(std::make_tuple(s, t, ckey), static_cast<int>(cls.size()));
        (void)fresh;
        FC.cat.eq_class.push_back(it->second);
      }
  for (int s = 0; s < static_cast<int>(FC.objects.size()); ++s)
    FC.cat.identities.push_back(ix.at({s, s, identity_nat(FC.objects[s]).components}));
  for (ArrIx a = 0; a < static_cast<int>(FC.arrows.size()); ++a)
    for (ArrIx b = 0; b < static_cast<int>(FC.arrows.size()); ++b) {
      int as = FC.cat.src(a), at = FC.cat.dst(a);
      int bs = FC.cat.src(b), bt = FC.cat.dst(b);
      if (at != bs) continue;
      NatTrans v = vcomp(FC.arrows[b], FC.arrows[a]);
      FC.cat.comp[{b, a}] = ix.at({as, bt, v.components});
    }
  return FC;
}

}  // namespace fincat
