#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fincat/monoidal.hpp"
#include "support.hpp"

using namespace fincat;

namespace {

// z2 as a strict one-object monoidal category: the tensor is the group
// multiplication on arrows and every structure map is the identity.
MonoidalStructure z2_strict() {
  MonoidalStructure M;
  M.C = fixture_z2();
  M.unit = 0;
  M.tensor.source = product_category(M.C, M.C);
  M.tensor.target = M.C;
  M.tensor.obj_map = {0};
  for (ArrIx p = 0; p < 4; ++p) M.tensor.arr_map.push_back((p / 2 + p % 2) % 2);
  M.lambda = M.lambda_inv = M.rho = M.rho_inv = {0};
  M.alpha = M.alpha_inv = {0};
  return M;
}

// The induced closed structure on strict z2: [x, z] = x^-1 * z, which is
// again the multiplication table on this one-object groupoid.
ClosedMonoidalStructure z2_closed() {
  ClosedMonoidalStructure CM;
  CM.M = z2_strict();
  CM.hom.source = product_category(op(CM.M.C), CM.M.C);
  CM.hom.target = CM.M.C;
  CM.hom.obj_map = {0};
  for (ArrIx p = 0; p < 4; ++p) CM.hom.arr_map.push_back((p / 2 + p % 2) % 2);
  Adjunction A;
  A.F = tensor_right_functor(CM.M, 0);
  A.G = hom_left_functor(CM, 0);
  A.unit.F = id_functor(CM.M.C);
  A.unit.G = compose_functor(A.G, A.F);
  A.unit.components = {0};
  A.counit.F = compose_functor(A.F, A.G);
  A.counit.G = id_functor(CM.M.C);
  A.counit.components = {0};
  CM.adj.push_back(A);
  return CM;
}

MonoidalStructure chain_min_monoidal(int n) {
  return thin_monoidal(fixture_chain(n), n - 1,
                       [](ObjIx x, ObjIx y) { return std::min(x, y); });
}

ClosedMonoidalStructure chain_residuated(int n) {
  MonoidalStructure M = chain_min_monoidal(n);
  return thin_closed_monoidal(
      M, [n](ObjIx x, ObjIx z) { return x <= z ? ObjIx(n - 1) : z; });
}

}  // namespace

TEST_CASE("strict z2 monoidal structure passes every coherence check") {
  auto r = check_monoidal(z2_strict());
  CHECK_MESSAGE(r.passed, r.summary());
}

TEST_CASE("meet-semilattice monoidal structures pass") {
  auto r = check_monoidal(chain_min_monoidal(4));
  CHECK_MESSAGE(r.passed, r.summary());
}

TEST_CASE("a perturbed associator breaks the pentagon at a named tuple") {
  MonoidalStructure M = z2_strict();
  M.alpha = M.alpha_inv = {1};  // g is its own inverse, so iso-ness survives
  auto r = check_monoidal(M);
  CHECK(!r.passed);
  bool pentagon = false, triangle = false;
  for (const auto& v : r.violations) {
    if (v.law == "pentagon" && v.where == std::vector<int>{0, 0, 0, 0}) pentagon = true;
    if (v.law == "triangle" && v.where == std::vector<int>{0, 0}) triangle = true;
    CHECK(v.law != "alpha-iso");
  }
  CHECK(pentagon);
  CHECK(triangle);
}

TEST_CASE("a non-inverse associator inverse is caught before the diagrams") {
  MonoidalStructure M = chain_min_monoidal(2);
  // claim the arrow 0 -> 1 inverts the identity at (0,0,0): mistyped
  M.alpha_inv[0] = hom(M.C, 0, 1).front();
  auto r = check_monoidal(M);
  CHECK(!r.passed);
  CHECK(r.violations.front().law == "structure/alpha-typing");
}

TEST_CASE("the associator assembles into an honest natural isomorphism") {
  NatTrans a1 = derive_associator_naturality(z2_strict());
  for (ArrIx c : a1.components) CHECK(c == 0);  // strict: identity components

  MonoidalStructure M4 = chain_min_monoidal(4);
  NatTrans a2 = derive_associator_naturality(M4);
  for (std::size_t o = 0; o < a2.components.size(); ++o)
    CHECK(equiv(M4.C, a2.components[o], M4.C.id(a2.F.on_obj(static_cast<ObjIx>(o)))));
  CHECK(check_natural(a2).passed);
  CHECK(is_natural_iso(a2).has_value());
}

TEST_CASE("product-induced monoidal structure matches the thin fixture") {
  MonoidalStructure P = monoidal_from_products(fixture_chain(4));
  MonoidalStructure T = chain_min_monoidal(4);
  CHECK(P.unit == T.unit);
  CHECK(P.tensor.obj_map == T.tensor.obj_map);
  for (std::size_t i = 0; i < P.tensor.arr_map.size(); ++i)
    CHECK(equiv(P.C, P.tensor.arr_map[i], T.tensor.arr_map[i]));
  for (ObjIx x = 0; x < 4; ++x) {
    CHECK(equiv(P.C, P.lambda[x], T.lambda[x]));
    CHECK(equiv(P.C, P.rho[x], T.rho[x]));
  }
  for (std::size_t i = 0; i < P.alpha.size(); ++i) CHECK(equiv(P.C, P.alpha[i], T.alpha[i]));
  CHECK(check_monoidal(P).passed);
}

TEST_CASE("product-induced monoidal structures pass on all product fixtures") {
  CHECK(check_monoidal(monoidal_from_products(fixture_one())).passed);
  CHECK(check_monoidal(monoidal_from_products(fixture_commutative_square())).passed);
  auto r = check_monoidal(monoidal_from_products(fixture_divisors(12)));
  CHECK_MESSAGE(r.passed, r.summary());
  CHECK(derive_associator_naturality(monoidal_from_products(fixture_chain(3))).components.size() ==
        27);
}

TEST_CASE("categories without products are rejected with the missing piece named") {
  CHECK_THROWS_WITH_AS(monoidal_from_products(fixture_parallel_pair()),
                       doctest::Contains("terminal object absent"), MissingStructureError);
  // span has a terminal-free shape too; discrete(2) has a product-free pair
  CHECK_THROWS_AS(monoidal_from_products(fixture_discrete(2)), MissingStructureError);
}

TEST_CASE("residuated chains are closed monoidal") {
  for (int n : {1, 2, 4}) {
    ClosedMonoidalStructure CM = chain_residuated(n);
    REQUIRE(check_monoidal(CM.M).passed);
    auto r = check_closed_monoidal(CM);
    CHECK_MESSAGE(r.passed, r.summary());
  }
}

TEST_CASE("strict z2 is closed monoidal via its own multiplication") {
  ClosedMonoidalStructure CM = z2_closed();
  auto r = check_closed_monoidal(CM);
  CHECK_MESSAGE(r.passed, r.summary());
}

TEST_CASE("tensor-hom bijections have matching class counts on both sides") {
  for (ClosedMonoidalStructure CM : {chain_residuated(2), chain_residuated(4), z2_closed()}) {
    const FinCategory& C = CM.M.C;
    auto iso = derive_tensor_hom_iso(CM);
    REQUIRE(static_cast<int>(iso.size()) == C.num_objects());
    for (ObjIx X = 0; X < C.num_objects(); ++X)
      for (ObjIx Y = 0; Y < C.num_objects(); ++Y)
        for (ObjIx Z = 0; Z < C.num_objects(); ++Z)
          CHECK(hom_class_reps(C, CM.M.ten(Y, X), Z).size() ==
                hom_class_reps(C, Y, CM.internal_hom(X, Z)).size());
  }
}

TEST_CASE("the trivial category is closed monoidal with singleton bijections") {
  MonoidalStructure M = thin_monoidal(fixture_one(), 0, [](ObjIx, ObjIx) { return 0; });
  ClosedMonoidalStructure CM = thin_closed_monoidal(M, [](ObjIx, ObjIx) { return 0; });
  CHECK(check_closed_monoidal(CM).passed);
  auto iso = derive_tensor_hom_iso(CM);
  REQUIRE(iso.size() == 1);
  CHECK(iso[0].forward[0][0] == std::vector<int>{0});
}

TEST_CASE("a mistyped counit is attributed to its adjunction") {
  ClosedMonoidalStructure CM = chain_residuated(2);
  // counit of adj(0) at z = 0 should be an endo-arrow of F(G(0)); point
  // it at the 0 -> 1 arrow instead
  CM.adj[0].counit.components[0] = hom(CM.M.C, 0, 1).front();
  auto r = check_closed_monoidal(CM);
  CHECK(!r.passed);
  REQUIRE(!r.violations.empty());
  CHECK(r.violations.front().law.rfind("adj/", 0) == 0);
  CHECK(r.violations.front().where.front() == 0);
}

TEST_CASE("swapped adjunctions fail the endpoint audit") {
  ClosedMonoidalStructure CM = chain_residuated(2);
  std::swap(CM.adj[0], CM.adj[1]);
  auto r = check_closed_monoidal(CM);
  CHECK(!r.passed);
  bool named = false;
  for (const auto& v : r.violations)
    if (v.law == "structure/adj-endpoints") named = true;
  CHECK(named);
}

TEST_CASE("violating the mate data breaks exactly the X-naturality squares") {
  ClosedMonoidalStructure CM = z2_closed();
  auto iso = derive_tensor_hom_iso(CM);  // all three naturalities pass
  MateSetup m = induced_mate(CM, 1);     // f = g, the non-identity arrow
  REQUIRE(check_mate_hom_square(m).passed);
  REQUIRE(check_mate_unit_counit(m).passed);
  // replace beta_g by the identity family; still natural on abelian z2
  m.beta.components = {0};
  CHECK(check_natural(m.beta).passed);
  CHECK(!check_mate_hom_square(m).passed);
  CHECK(!check_mate_unit_counit(m).passed);
  // the adjunction-induced Y/Z naturality is untouched
  CHECK(check_hom_iso_natural(iso[0]).passed);
}
