#pragma once

// Standard category fixtures. Every fixture is law-checked at
// construction and throws if the requested data is inconsistent.

#include <numeric>

#include "fincat/fin_category.hpp"

namespace fincat {

namespace detail {

inline FinCategory checked(FinCategory C, const char* kind) {
  LawReport r = check_category_laws(C);
  if (!r.passed)
    throw StructuralError(std::string("standard_category(") + kind + "): " + r.summary());
  return C;
}

// Build a category from object names and arrow specs, with composition
// synthesized by uniqueness: used for posets and other thin fixtures.
inline FinCategory thin_from_relation(std::vector<std::string> objects,
                                      const std::vector<std::pair<int, int>>& related) {
  FinCategory C;
  C.objects = std::move(objects);
  const int n = C.num_objects();
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
  for (auto [a, b] : related) rel[a][b] = true;
  for (int a = 0; a < n; ++a) rel[a][a] = true;
  std::vector<std::vector<ArrIx>> ix(n, std::vector<ArrIx>(n, -1));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (rel[a][b]) {
        ix[a][b] = C.num_arrows();
        C.arrows.push_back({a, b, a == b ? "id_" + C.objects[a]
                                         : C.objects[a] + "_to_" + C.objects[b]});
        C.eq_class.push_back(static_cast<int>(C.eq_class.size()));
      }
  for (int a = 0; a < n; ++a) C.identities.push_back(ix[a][a]);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (rel[a][b] && rel[b][c]) {
          if (ix[a][c] < 0)
            throw StructuralError("thin fixture: relation is not transitive");
          C.comp[{ix[b][c], ix[a][b]}] = ix[a][c];
        }
  return C;
}

}  // namespace detail

inline FinCategory fixture_one() {
  return detail::checked(detail::thin_from_relation({"*"}, {}), "one");
}

inline FinCategory fixture_discrete(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
  return detail::checked(detail::thin_from_relation(std::move(names), {}), "discrete");
}

inline FinCategory fixture_walking_arrow() {
  return detail::checked(detail::thin_from_relation({"a", "b"}, {{0, 1}}), "walking_arrow");
}

// a ==> b with two parallel non-equivalent arrows s, t.
inline FinCategory fixture_parallel_pair() {
  FinCategory C;
  C.objects = {"a", "b"};
  C.arrows = {{0, 0, "id_a"}, {1, 1, "id_b"}, {0, 1, "s"}, {0, 1, "t"}};
  C.eq_class = {0, 1, 2, 3};
  C.identities = {0, 1};
  C.comp[{0, 0}] = 0;
  C.comp[{1, 1}] = 1;
  C.comp[{2, 0}] = 2;
  C.comp[{1, 2}] = 2;
  C.comp[{3, 0}] = 3;
  C.comp[{1, 3}] = 3;
  return detail::checked(C, "parallel_pair");
}

inline FinCategory fixture_cospan() {
  return detail::checked(detail::thin_from_relation({"x", "y", "z"}, {{0, 2}, {1, 2}}), "cospan");
}

inline FinCategory fixture_span() {
  return detail::checked(detail::thin_from_relation({"x", "y", "z"}, {{0, 1}, {0, 2}}), "span");
}

// Commuting square poset: a below b and c, both below d.
inline FinCategory fixture_commutative_square() {
  return detail::checked(
      detail::thin_from_relation({"a", "b", "c", "d"}, {{0, 1}, {0, 2}, {0, 3}, {1, 3}, {2, 3}}),
      "commutative_square");
}

inline FinCategory fixture_chain(int n) {
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> rel;
  for (int i = 0; i < n; ++i) {
    names.push_back("c" + std::to_string(i));
    for (int j = i + 1; j < n; ++j) rel.push_back({i, j});
  }
  return detail::checked(detail::thin_from_relation(std::move(names), rel), "chain");
}

// Divisibility poset of the divisors of n.
inline FinCategory fixture_divisors(int n) {
  std::vector<int> divs;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) divs.push_back(d);
  std::vector<std::string> names;
  for (int d : divs) names.push_back("d" + std::to_string(d));
  std::vector<std::pair<int, int>> rel;
  for (int i = 0; i < static_cast<int>(divs.size()); ++i)
    for (int j = 0; j < static_cast<int>(divs.size()); ++j)
      if (i != j && divs[j] % divs[i] == 0) rel.push_back({i, j});
  return detail::checked(detail::thin_from_relation(std::move(names), rel), "divisors");
}

// Divisor indices of fixture_divisors(n), for tests that need the values.
inline std::vector<int> divisor_values(int n) {
  std::vector<int> divs;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) divs.push_back(d);
  return divs;
}

// One-object category from a monoid multiplication table.
// table[i][j] is the product i*j; element 0 must be the unit.
inline FinCategory fixture_monoid(const std::vector<std::vector<int>>& table) {
  const int n = static_cast<int>(table.size());
  FinCategory C;
  C.objects = {"*"};
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(table[i].size()) != n)
      throw StructuralError("fixture_monoid: table is not square");
    C.arrows.push_back({0, 0, "m" + std::to_string(i)});
    C.eq_class.push_back(i);
  }
  C.identities = {0};
  for (int g = 0; g < n; ++g)
    for (int f = 0; f < n; ++f) {
      if (table[g][f] < 0 || table[g][f] >= n)
        throw StructuralError("fixture_monoid: table entry out of range");
      C.comp[{g, f}] = table[g][f];
    }
  return detail::checked(C, "monoid");
}

// Z/2 as a one-object groupoid: arrows e, g with g.g = e.
inline FinCategory fixture_z2() { return fixture_monoid({{0, 1}, {1, 0}}); }

// Two objects with a pair of mutually inverse arrows (contractible groupoid).
inline FinCategory fixture_iso_pair() {
  FinCategory C;
  C.objects = {"a", "b"};
  C.arrows = {{0, 0, "id_a"}, {1, 1, "id_b"}, {0, 1, "f"}, {1, 0, "g"}};
  C.eq_class = {0, 1, 2, 3};
  C.identities = {0, 1};
  C.comp[{0, 0}] = 0;
  C.comp[{1, 1}] = 1;
  C.comp[{2, 0}] = 2;
  C.comp[{1, 2}] = 2;
  C.comp[{3, 1}] = 3;
  C.comp[{0, 3}] = 3;
  C.comp[{3, 2}] = 0;  // g.f = id_a
  C.comp[{2, 3}] = 1;  // f.g = id_b
  return detail::checked(C, "iso_pair");
}

// The proof-relevance guard fixture: f1 and f2 are distinct arrows a -> b
// lying in one equivalence class.
inline FinCategory fixture_two_reps() {
  FinCategory C;
  C.objects = {"a", "b"};
  C.arrows = {{0, 0, "id_a"}, {1, 1, "id_b"}, {0, 1, "f1"}, {0, 1, "f2"}};
  C.eq_class = {0, 1, 2, 2};
  C.identities = {0, 1};
  C.comp[{0, 0}] = 0;
  C.comp[{1, 1}] = 1;
  C.comp[{2, 0}] = 2;
  C.comp[{1, 2}] = 2;
  C.comp[{3, 0}] = 3;
  C.comp[{1, 3}] = 3;
  return detail::checked(C, "two_reps");
}

struct StandardParams {
  int n = 0;
  std::vector<std::vector<int>> table;
};

inline FinCategory standard_category(const std::string& kind, const StandardParams& p = {}) {
  if (kind == "one") return fixture_one();
  if (kind == "discrete") return fixture_discrete(p.n);
  if (kind == "walking_arrow") return fixture_walking_arrow();
  if (kind == "parallel_pair") return fixture_parallel_pair();
  if (kind == "cospan") return fixture_cospan();
  if (kind == "span") return fixture_span();
  if (kind == "commutative_square") return fixture_commutative_square();
  if (kind == "chain") return fixture_chain(p.n);
  if (kind == "divisors") return fixture_divisors(p.n);
  if (kind == "monoid") return fixture_monoid(p.table);
  if (kind == "iso_pair") return fixture_iso_pair();
  if (kind == "two_reps") return fixture_two_reps();
  throw StructuralError("standard_category: unknown kind '" + kind + "'");
}

}  // namespace fincat
