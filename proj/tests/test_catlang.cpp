#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "fincat/cli.hpp"
#include "support.hpp"

using namespace fincat;

namespace {

const char* z2_text = R"(
# the two-element group as a one-object table
category z2 table
  objects: *
  arrows:
    m0 : * -> *
    m1 : * -> *
  id * : m0
  compose:
    m0.m0 = m0
    m0.m1 = m1
    m1.m0 = m1
    m1.m1 = m0
)";

const char* two_reps_text = R"(
category two_reps table
  objects: a b
  arrows:
    id_a : a -> a
    id_b : b -> b
    f1 : a -> b
    f2 : a -> b
  id a : id_a
  id b : id_b
  compose:
    id_a.id_a = id_a
    id_b.id_b = id_b
    f1.id_a = f1
    id_b.f1 = f1
    f2.id_a = f2
    id_b.f2 = f2
  equiv:
    f1 ~ f2
)";

std::string tmpfile(const std::string& name, const std::string& text) {
  auto p = std::filesystem::temp_directory_path() / name;
  std::ofstream(p) << text;
  return p.string();
}

int cli(std::vector<std::string> args, std::string* captured = nullptr) {
  std::ostringstream os;
  int rc = run_cli(std::move(args), os);
  if (captured) *captured = os.str();
  return rc;
}

}  // namespace

TEST_CASE("lexer rejects stray characters with a position") {
  try {
    parse("category c table\n  objects: a@b\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(e.col == 13);
    CHECK(std::string(e.what()).find("unexpected character") != std::string::npos);
  }
}

TEST_CASE("parse errors name the expected token and location") {
  try {
    parse("category c table\n  objects: a\n  arrows:\n    f : a b\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 4);
    CHECK(std::string(e.what()).find("'->'") != std::string::npos);
  }
  CHECK_THROWS_WITH_AS(parse("category c table\n  objects: a\n  arrows:\n    f : a -> q\n"),
                       doctest::Contains("undeclared object 'q'"), ParseError);
  CHECK_THROWS_WITH_AS(parse("category table table\n  objects: a\n"),
                       doctest::Contains("reserved word"), ParseError);
  CHECK_THROWS_WITH_AS(parse("category c table\n  objects: a a\n"),
                       doctest::Contains("duplicate object"), ParseError);
  CHECK_THROWS_WITH_AS(parse("category c table\n  objects: a\n  arrows:\n    a : a -> a\n"),
                       doctest::Contains("already names an object"), ParseError);
  CHECK_THROWS_WITH_AS(parse("widget w\n"), doctest::Contains("expected 'category'"), ParseError);
}

TEST_CASE("relation typing is checked while parsing") {
  CHECK_THROWS_WITH_AS(
      parse("category c presented\n  objects: a b\n  generators:\n    f : a -> b\n"
            "  relations:\n    f.f = f\n"),
      doctest::Contains("not composable"), ParseError);
  CHECK_THROWS_WITH_AS(
      parse("category c presented\n  objects: a b\n  generators:\n    f : a -> b\n"
            "  relations:\n    f = a\n"),
      doctest::Contains("non-parallel words"), ParseError);
  CHECK_THROWS_WITH_AS(
      parse("category c presented\n  objects: a\n  generators:\n    f : a -> a\n"
            "  relations:\n    f = q\n"),
      doctest::Contains("undeclared"), ParseError);
}

TEST_CASE("table elaboration reproduces the one-object group fixture exactly") {
  Document d = parse(z2_text);
  REQUIRE(d.categories.size() == 1);
  FinCategory C = elaborate_table(d.categories[0]);
  CHECK(C == fixture_z2());
}

TEST_CASE("declared equivalences merge classes with dense renumbering") {
  FinCategory C = elaborate_table(parse(two_reps_text).categories[0]);
  CHECK(C == fixture_two_reps());
  CHECK(C.eq_class == std::vector<int>{0, 1, 2, 2});
}

TEST_CASE("equivalence between non-parallel arrows is an elaboration error") {
  std::string text(two_reps_text);
  auto pos = text.find("f1 ~ f2");
  text.replace(pos, 7, "f1 ~ id_a");
  try {
    elaborate_table(parse(text).categories[0]);
    FAIL("expected an elaboration error");
  } catch (const ElaborationError& e) {
    REQUIRE(e.report.violations.size() == 1);
    CHECK(e.report.violations[0].law == "structure/class-typing");
  }
}

TEST_CASE("a deleted composite is reported as a localized totality violation") {
  std::string text(z2_text);
  auto pos = text.find("    m1.m0 = m1\n");
  text.erase(pos, 15);
  try {
    elaborate_table(parse(text).categories[0]);
    FAIL("expected an elaboration error");
  } catch (const ElaborationError& e) {
    bool found = false;
    for (const Violation& v : e.report.violations)
      if (v.law == "structure/comp-total" && v.where == std::vector<int>{1, 0}) found = true;
    CHECK(found);
  }
}

TEST_CASE("print and parse round-trip through the table form of every fixture") {
  std::vector<FinCategory> cats = {
      fixture_one(),         fixture_discrete(3), fixture_walking_arrow(),
      fixture_parallel_pair(), fixture_cospan(),  fixture_span(),
      fixture_commutative_square(), fixture_chain(4), fixture_divisors(12),
      fixture_z2(),          fixture_iso_pair(),  fixture_two_reps()};
  for (std::size_t i = 0; i < cats.size(); ++i) {
    CAPTURE(i);
    Presentation p = presentation_of(cats[i], "c" + std::to_string(i));
    Document d;
    d.categories.push_back(p);
    Document back = parse(print(d));
    CHECK(back == d);
    // labels that are not lexable names get stable replacements
    FinCategory expected = cats[i];
    expected.objects = p.objects;
    for (std::size_t f = 0; f < p.arrows.size(); ++f)
      expected.arrows[f].label = p.arrows[f].name;
    CHECK(elaborate_table(back.categories[0]) == expected);
  }
}

TEST_CASE("printing the opposite differs only in arrow directions") {
  FinCategory C = fixture_commutative_square();
  Presentation p = presentation_of(C, "sq");
  Presentation q = presentation_of(op(C), "sq");
  CHECK(p.objects == q.objects);
  REQUIRE(p.arrows.size() == q.arrows.size());
  for (std::size_t i = 0; i < p.arrows.size(); ++i) {
    CHECK(p.arrows[i].name == q.arrows[i].name);
    CHECK(p.arrows[i].src == q.arrows[i].dst);
    CHECK(p.arrows[i].dst == q.arrows[i].src);
  }
  CHECK(p.ids == q.ids);
  CHECK(p.equivs == q.equivs);
}

TEST_CASE("saturation of the presented two-element group yields two arrows") {
  Document d = parse(
      "category z2p presented\n  objects: a\n  generators:\n    g : a -> a\n"
      "  relations:\n    g.g = a\n");
  FinCategory C = saturate(d.categories[0]);
  REQUIRE(C.num_arrows() == 2);
  CHECK(C.arrows[0].label == "id_a");
  CHECK(C.arrows[1].label == "g");
  CHECK(C.id(0) == 0);
  CHECK(compose(C, 1, 1) == 0);
  // same multiplication as the table form under the evident mapping
  FinCategory T = fixture_z2();
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) CHECK(compose(C, a, b) == compose(T, a, b));
}

TEST_CASE("the free category on a cospan graph has five arrows") {
  Document d = parse(
      "category cofree presented\n  objects: x y z\n  generators:\n"
      "    f : x -> z\n    g : y -> z\n  relations:\n");
  FinCategory C = saturate(d.categories[0]);
  CHECK(C.num_arrows() == 5);
  CHECK(check_category_laws(C).passed);
}

TEST_CASE("a free loop exceeds the saturation bound loudly") {
  Document d = parse(
      "category loop presented\n  objects: a\n  generators:\n    u : a -> a\n  relations:\n");
  CHECK_THROWS_WITH_AS(saturate(d.categories[0]), doctest::Contains("saturation exceeded"),
                       SaturationError);
}

TEST_CASE("relation words longer than the bound are refused") {
  Document d = parse(
      "category c presented\n  objects: a\n  generators:\n    g : a -> a\n"
      "  relations:\n    g.g.g = a\n");
  SaturationConfig cfg;
  cfg.max_word_length = 2;
  CHECK_THROWS_WITH_AS(saturate(d.categories[0], cfg), doctest::Contains("saturation exceeded"),
                       SaturationError);
}

TEST_CASE("a tiny class budget is also a loud failure") {
  Document d = parse(
      "category cofree presented\n  objects: x y z\n  generators:\n"
      "    f : x -> z\n    g : y -> z\n  relations:\n");
  SaturationConfig cfg;
  cfg.max_arrows = 3;
  CHECK_THROWS_WITH_AS(saturate(d.categories[0], cfg), doctest::Contains("max_arrows"),
                       SaturationError);
}

TEST_CASE("a commuting relation merges the two composite paths of a square") {
  std::string square =
      "category sq presented\n  objects: a b c d\n  generators:\n"
      "    f : a -> b\n    g : b -> d\n    h : a -> c\n    k : c -> d\n  relations:\n";
  FinCategory freeC = saturate(parse(square).categories[0]);
  CHECK(freeC.num_arrows() == 10);  // 4 ids + 4 generators + 2 distinct paths
  FinCategory C = saturate(parse(square + "    g.f = k.h\n").categories[0]);
  CHECK(C.num_arrows() == 9);
  // the merged class is represented by its length-lex least word
  bool found = false;
  for (const Arrow& a : C.arrows) found = found || a.label == "g.f";
  CHECK(found);
  for (const Arrow& a : C.arrows) CHECK(a.label != "k.h");
}

TEST_CASE("partial relations leave a longer but still finite monoid") {
  // g^3 = g leaves classes e, g, g^2
  Document d = parse(
      "category c presented\n  objects: a\n  generators:\n    g : a -> a\n"
      "  relations:\n    g.g.g = g\n");
  FinCategory C = saturate(d.categories[0]);
  REQUIRE(C.num_arrows() == 3);
  CHECK(C.arrows[2].label == "g.g");
  CHECK(compose(C, 2, 2) == 2);  // g^4 = g^2
  CHECK(compose(C, 1, 2) == 1);  // g^3 = g
}

TEST_CASE("functor and transformation declarations elaborate against named categories") {
  Document d = parse(
      "category A table\n  objects: a b\n  arrows:\n    id_a : a -> a\n    id_b : b -> b\n"
      "    a_to_b : a -> b\n  id a : id_a\n  id b : id_b\n  compose:\n"
      "    id_a.id_a = id_a\n    id_b.id_b = id_b\n    a_to_b.id_a = a_to_b\n"
      "    id_b.a_to_b = a_to_b\n"
      "functor IdA : A -> A\n  obj a : a\n  obj b : b\n  arr id_a : id_a\n"
      "  arr id_b : id_b\n  arr a_to_b : a_to_b\n"
      "nat u : IdA => IdA\n  at a : id_a\n  at b : id_b\n");
  ElaboratedDoc ed = elaborate_document(d);
  CHECK(ed.functor_named("IdA") == id_functor(ed.category("A")));
  CHECK(check_natural(ed.nats[0].second).passed);

  Document bad = d;
  bad.functors[0].arr_map.pop_back();
  CHECK_THROWS_WITH_AS(elaborate_document(bad), doctest::Contains("no image for arrow"),
                       StructuralError);
}

TEST_CASE("the diagram keyword is functor syntax and survives printing") {
  Document d = parse("category A table\n  objects: a\n  arrows:\n    i : a -> a\n"
                     "  id a : i\n  compose:\n    i.i = i\n"
                     "diagram D : A -> A\n  obj a : a\n  arr i : i\n");
  REQUIRE(d.functors.size() == 1);
  CHECK(d.functors[0].diagram);
  CHECK(parse(print(d)) == d);
  CHECK(print(d.functors[0]).substr(0, 7) == "diagram");
}

TEST_CASE("fuzzed presentations round-trip through print and parse") {
  std::mt19937 rng(20260825);
  for (int i = 0; i < 120; ++i) {
    CAPTURE(i);
    Document d;
    d.categories.push_back(testing::fuzz_presentation(rng));
    CHECK(parse(print(d)) == d);
  }
}

TEST_CASE("cli: check accepts a lawful table and reports broken ones") {
  std::string out;
  CHECK(cli({"check", tmpfile("ok.cat", z2_text)}, &out) == 0);
  CHECK(out.find("all laws hold") != std::string::npos);

  std::string broken(z2_text);
  broken.erase(broken.find("    m1.m0 = m1\n"), 15);
  CHECK(cli({"check", tmpfile("broken.cat", broken)}, &out) == 1);
  CHECK(out.find("structure/comp-total") != std::string::npos);
}

TEST_CASE("cli: json output is a machine-readable law report") {
  std::string out;
  CHECK(cli({"check", tmpfile("ok.cat", z2_text), "--json"}, &out) == 0);
  auto j = nlohmann::json::parse(out);
  REQUIRE(j.is_array());
  CHECK(j[0]["item"] == "category z2");
  CHECK(j[0]["passed"] == true);

  std::string broken(z2_text);
  broken.erase(broken.find("    m1.m0 = m1\n"), 15);
  CHECK(cli({"check", tmpfile("broken.cat", broken), "--json"}, &out) == 1);
  j = nlohmann::json::parse(out);
  CHECK(j[0]["passed"] == false);
  CHECK(j[0]["violations"][0]["law"] == "structure/comp-total");
}

TEST_CASE("cli: malformed input and bad arguments exit 2, never crash") {
  std::string out;
  CHECK(cli({"check", tmpfile("garbage.cat", "category ???")}, &out) == 2);
  CHECK(out.find("parse error") != std::string::npos);
  CHECK(cli({"check", "/no/such/file.cat"}, &out) == 2);
  CHECK(cli({"frobnicate", "x"}, &out) == 2);
  CHECK(cli({"limit", tmpfile("ok.cat", z2_text)}, &out) == 2);  // missing --diagram
  CHECK(cli({"check", tmpfile("loop.cat",
                              "category loop presented\n  objects: a\n  generators:\n"
                              "    u : a -> a\n  relations:\n")},
            &out) == 2);
  CHECK(out.find("saturation exceeded") != std::string::npos);
}

TEST_CASE("cli: constructive limit agrees with the oracle on a cospan diagram") {
  Document d;
  d.categories.push_back(presentation_of(fixture_cospan(), "J"));
  d.categories.push_back(presentation_of(fixture_chain(4), "C"));
  std::string text = print(d);
  text +=
      "diagram D : J -> C\n"
      "  obj x : c1\n  obj y : c2\n  obj z : c3\n"
      "  arr id_x : id_c1\n  arr id_y : id_c2\n  arr id_z : id_c3\n"
      "  arr x_to_z : c1_to_c3\n  arr y_to_z : c2_to_c3\n";
  std::string out;
  CHECK(cli({"limit", tmpfile("cospan.cat", text), "--diagram", "D"}, &out) == 0);
  CHECK(out.find("constructive == oracle up to iso") != std::string::npos);
  CHECK(cli({"limit", tmpfile("cospan.cat", text), "--diagram", "nope"}, &out) == 2);
}

TEST_CASE("cli: remaining subcommands honor the exit-code contract") {
  Document d;
  d.categories.push_back(presentation_of(fixture_z2(), "z2"));
  d.categories.push_back(presentation_of(fixture_two_reps(), "two_reps"));
  std::string multi = tmpfile("multi.cat", print(d));
  std::string out;
  CHECK(cli({"op-test", multi}, &out) == 0);
  CHECK(cli({"limits", multi}, &out) == 0);
  CHECK(out.find("terminal") != std::string::npos);
  CHECK(cli({"yoneda", multi, "--object", "*", "--category", "z2"}, &out) == 0);
  CHECK(cli({"yoneda", multi, "--object", "*"}, &out) == 2);  // ambiguous category
  CHECK(cli({"explain", multi}, &out) == 0);
  CHECK(out.find("objects") != std::string::npos);

  std::string chain = tmpfile("chain.cat", print(presentation_of(fixture_chain(4), "c4")));
  CHECK(cli({"monoidal-check", chain}, &out) == 0);
  CHECK(out.find("all laws hold") != std::string::npos);
  std::string pp = tmpfile("pp.cat", print(presentation_of(fixture_parallel_pair(), "pp")));
  CHECK(cli({"monoidal-check", pp}, &out) == 0);
  CHECK(out.find("not applicable") != std::string::npos);
}

TEST_CASE("cli: adjoint-check verifies a declared identity adjunction") {
  std::string text =
      "category A table\n  objects: a b\n  arrows:\n    id_a : a -> a\n    id_b : b -> b\n"
      "    a_to_b : a -> b\n  id a : id_a\n  id b : id_b\n  compose:\n"
      "    id_a.id_a = id_a\n    id_b.id_b = id_b\n    a_to_b.id_a = a_to_b\n"
      "    id_b.a_to_b = a_to_b\n"
      "functor IdA : A -> A\n  obj a : a\n  obj b : b\n  arr id_a : id_a\n"
      "  arr id_b : id_b\n  arr a_to_b : a_to_b\n"
      "nat u : IdA => IdA\n  at a : id_a\n  at b : id_b\n"
      "nat e : IdA => IdA\n  at a : id_a\n  at b : id_b\n";
  std::string file = tmpfile("adj.cat", text);
  std::string out;
  CHECK(cli({"adjoint-check", file, "--left", "IdA", "--right", "IdA", "--unit", "u",
             "--counit", "e"},
            &out) == 0);
  CHECK(out.find("all laws hold") != std::string::npos);
  CHECK(cli({"adjoint-check", file, "--left", "IdA", "--right", "IdA", "--unit", "u",
             "--counit", "missing"},
            &out) == 2);
}
