// The .galg reader and printer: section parsing, expression grammar, error
// positions, and the parse/print round trip.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "gcoh/parser.hpp"

using namespace gcoh;

#ifndef FIXTURES_DIR
#define FIXTURES_DIR "fixtures"
#endif

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string fixture(const std::string& name) { return std::string(FIXTURES_DIR) + "/" + name; }

}  // namespace

TEST_CASE("a minimal algebra section parses") {
  GalgDocument d = parseGalg(
      "algebra A\n"
      "field QQ\n"
      "generators x, y\n"
      "relations\n"
      "  x*y - y*x\n"
      "end\n");
  REQUIRE(d.algebras.size() == 1);
  const auto& a = d.algebras[0];
  CHECK(a.name() == "A");
  CHECK(a.generatorNames() == std::vector<std::string>{"x", "y"});
  CHECK(a.field() == FieldSpec::rationals());
  REQUIRE(a.relations().size() == 1);
  CHECK(a.relations()[0].str(a.generatorNames()) == "-y*x + x*y");
}

TEST_CASE("field line is optional and defaults to the rationals") {
  GalgDocument d = parseGalg("algebra A\ngenerators x\nrelations\nend\n");
  CHECK(d.algebras.at(0).field() == FieldSpec::rationals());
  GalgDocument d7 = parseGalg("algebra A\nfield GF(7)\ngenerators x\nrelations\nend\n");
  CHECK(d7.algebras.at(0).field() == FieldSpec::primeField(7));
}

TEST_CASE("generator weights parse and default to one") {
  GalgDocument d = parseGalg("algebra A\ngenerators u, v(2), w(3)\nrelations\nend\n");
  const auto& gens = d.algebras.at(0).generators();
  REQUIRE(gens.size() == 3);
  CHECK(gens[0].weight == 1);
  CHECK(gens[1].weight == 2);
  CHECK(gens[2].weight == 3);
}

TEST_CASE("expression grammar: coefficients, powers, signs") {
  AlgebraPresentation shell("A", FieldSpec::rationals(), {{"x", 1}, {"y", 1}}, {});
  auto names = shell.generatorNames();
  auto s = [&](const std::string& e) { return parsePolynomial(e, shell).str(names); };
  CHECK(s("x") == "x");
  CHECK(s("x*y") == "x*y");
  CHECK(s("x^3") == "x^3");
  CHECK(s("2*x - 3*y") == "-3*y + 2*x");
  CHECK(s("-x + x") == "0");
  CHECK(s("3/2*x") == "3/2*x");
  CHECK(s("x^0") == "1");
  CHECK(s("5") == "5");
  CHECK(s("0") == "0");
  CHECK(s("x*y - y*x + y*x") == "x*y");
  CHECK(s("- 2*x^2*y") == "-2*x^2*y");
}

TEST_CASE("expression errors carry positions") {
  AlgebraPresentation shell("A", FieldSpec::rationals(), {{"x", 1}}, {});
  CHECK_THROWS_AS(parsePolynomial("x + q", shell), ParseError);
  CHECK_THROWS_AS(parsePolynomial("x x", shell), ParseError);  // juxtaposition
  CHECK_THROWS_AS(parsePolynomial("x *", shell), ParseError);
  CHECK_THROWS_AS(parsePolynomial("", shell), ParseError);
  try {
    parsePolynomial("x + q", shell, "inline");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.file() == "inline");
    CHECK(e.line() == 1);
    CHECK(e.col() == 5);
    CHECK(std::string(e.what()).find("inline:1:5") == 0);
  }
}

TEST_CASE("section errors carry file and line") {
  try {
    parseGalg("algebra A\ngenerators x\nrelations\n  x - 1\nend\n", "bad.galg");
    FAIL("expected a parse error");  // inhomogeneous relation
  } catch (const ParseError& e) {
    CHECK(e.file() == "bad.galg");
  }
  CHECK_THROWS_AS(parseGalg("algebra A\nrelations\nend\n"), ParseError);  // no generators
  CHECK_THROWS_AS(parseGalg("ideal I on Nope\nside left\ngenerators\nend\n"), ParseError);
  CHECK_THROWS_AS(parseGalg("algebra A\ngenerators x, x\nrelations\nend\n"), Error);
  CHECK_THROWS_AS(parseGalg("nonsense\n"), ParseError);
}

TEST_CASE("ideal sections resolve against earlier algebras") {
  GalgDocument d = parseGalg(
      "algebra A\ngenerators x, y\nrelations\nend\n"
      "\n"
      "ideal I on A\nside two-sided\ngenerators\n  x\nend\n"
      "ideal J on A\nside left\ngenerators\n  x + 2*y\nend\n"
      "ideal K on A\nside right\ngenerators\n  y\nend\n");
  REQUIRE(d.ideals.size() == 3);
  CHECK(d.ideals[0].side == Side::TwoSided);
  CHECK(d.ideals[1].side == Side::Left);
  CHECK(d.ideals[2].side == Side::Right);
  CHECK(d.findIdeal("J")->generators.at(0).str({"x", "y"}) == "2*y + x");
  CHECK(d.findIdeal("nope") == nullptr);
  // zero and inhomogeneous generators are rejected
  CHECK_THROWS_AS(
      parseGalg("algebra A\ngenerators x\nrelations\nend\nideal I on A\nside left\n"
                "generators\n  x - x\nend\n"),
      ParseError);
}

TEST_CASE("twist sections parse tensor values") {
  std::string text =
      "algebra P\ngenerators x, y\nrelations\n  x*y - y*x\nend\n"
      "algebra L\ngenerators z\nrelations\nend\n"
      "twist t\nafactor P\nbfactor L\n"
      "tau(z, x) = 0\n"
      "tau(z, y) = y^2 # 1 + y # z + 1 # z^2\nend\n";
  GalgDocument d = parseGalg(text);
  REQUIRE(d.twists.size() == 1);
  const auto& t = d.twists[0];
  CHECK(t.name == "t");
  CHECK(t.aFactor.name() == "P");
  CHECK(t.bFactor.name() == "L");
  REQUIRE(t.values.count({0, 0}));  // (x, z)
  REQUIRE(t.values.count({1, 0}));  // (y, z)
  CHECK(t.values.at({0, 0}).isZero());
  CHECK(t.values.at({1, 0}).str({"x", "y"}, {"z"}) == "1 # z^2 + y # z + y^2 # 1");
  // duplicate tau entries are rejected
  CHECK_THROWS_AS(parseGalg(text.substr(0, text.size() - 4) + "tau(z, x) = 0\nend\n"),
                  ParseError);
  // a tau value of the wrong degree is rejected
  CHECK_THROWS_AS(
      parseGalg(
          "algebra P\ngenerators x, y\nrelations\n  x*y - y*x\nend\n"
          "algebra L\ngenerators z\nrelations\nend\n"
          "twist t\nafactor P\nbfactor L\ntau(z, x) = 0\ntau(z, y) = y # 1\nend\n"),
      ParseError);
}

TEST_CASE("job sections round-trip their options") {
  GalgDocument d = parseGalg(
      "job nightly\ncommand criterion\ninput C.galg\nideal J\nmax-degree 8\nhbound 3\n"
      "format json\nend\n");
  REQUIRE(d.jobs.size() == 1);
  const auto& j = d.jobs[0];
  CHECK(j.name == "nightly");
  CHECK(j.command == "criterion");
  CHECK(j.maxDegree == 8);
  CHECK(j.format == "json");
  GalgDocument d2 = parseGalg(printGalg(d));
  CHECK(printGalg(d2) == printGalg(d));
}

TEST_CASE("comments and blank lines are ignored") {
  GalgDocument d = parseGalg(
      "// leading comment\n\nalgebra A // trailing comment\ngenerators x\n"
      "relations\n  // nothing here\nend\n");
  CHECK(d.algebras.at(0).name() == "A");
  CHECK(d.algebras.at(0).relations().empty());
}

TEST_CASE("cross-file references resolve within one parse run") {
  GalgDocument doc;
  parseGalgInto(doc, "algebra A\ngenerators x\nrelations\nend\n", "one.galg");
  parseGalgInto(doc, "ideal I on A\nside left\ngenerators\n  x\nend\n", "two.galg");
  CHECK(doc.findIdeal("I") != nullptr);
  CHECK_THROWS_AS(parseGalg("ideal I on A\nside left\ngenerators\n  x\nend\n"), ParseError);
}

TEST_CASE("shipped fixture files parse and the printer round-trips them") {
  for (const std::string name : {"C.galg", "E.galg", "twists.galg", "sigma0.galg"}) {
    CAPTURE(name);
    GalgDocument d = parseGalg(slurp(fixture(name)), name);
    std::string once = printGalg(d);
    GalgDocument d2 = parseGalg(once, name + "#printed");
    CHECK(printGalg(d2) == once);  // canonical form is a fixed point
    CHECK(d2.algebras.size() == d.algebras.size());
    CHECK(d2.ideals.size() == d.ideals.size());
    CHECK(d2.twists.size() == d.twists.size());
  }
}

TEST_CASE("fixture C.galg has the expected shape") {
  GalgDocument d = parseGalg(slurp(fixture("C.galg")), "C.galg");
  const AlgebraPresentation* c = d.findAlgebra("C");
  REQUIRE(c != nullptr);
  CHECK(c->generatorNames() == std::vector<std::string>{"x", "z", "y"});
  CHECK(c->relations().size() == 2);
  REQUIRE(d.findIdeal("I") != nullptr);
  CHECK(d.findIdeal("I")->side == Side::TwoSided);
  REQUIRE(d.findIdeal("J") != nullptr);
  CHECK(d.findIdeal("J")->side == Side::Left);
}
