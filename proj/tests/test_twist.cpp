// Twisting maps: tensor arithmetic, extension tables and their consistency
// verdicts, structural identities, product algebras and the one-parameter
// family pipeline.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "gcoh/parser.hpp"
#include "gcoh/twist.hpp"

#ifndef FIXTURES_DIR
#define FIXTURES_DIR "fixtures"
#endif

using namespace gcoh;

namespace {

GalgDocument loadTwists() {
  return parseGalgFiles({std::string(FIXTURES_DIR) + "/twists.galg"});
}

const TwistingMapSpec& twistNamed(const GalgDocument& doc, const std::string& name) {
  const auto* t = doc.findTwist(name);
  REQUIRE(t != nullptr);
  return *t;
}

Word wordOf(const AlgebraPresentation& pres, const std::string& text) {
  auto p = parsePolynomial(text, pres);
  REQUIRE(p.termCount() == 1);
  return p.leadWord();
}

}  // namespace

TEST_CASE("tensor elements merge, cancel and print deterministically") {
  FieldSpec f = FieldSpec::rationals();
  Word y = Word::single(1, 1), z = Word::single(0, 1);
  TensorElem t(f);
  CHECK(t.isZero());
  CHECK(t.str({"x", "y"}, {"z"}) == "0");
  t.add(y * y, Word::one(), Scalar::ofInt(f, 1));
  t.add(y, z, Scalar::ofInt(f, 2));
  t.add(y * y, Word::one(), Scalar::ofInt(f, 1));  // merges with the first term
  CHECK(t.terms().size() == 2);
  CHECK(t.str({"x", "y"}, {"z"}) == "2*y # z + 2*y^2 # 1");
  TensorElem u(f);
  u.addScaled(t, Scalar::ofInt(f, -1));
  u.addScaled(t, Scalar::ofInt(f, 1));
  CHECK(u.isZero());
  CHECK(t == t);
  CHECK(t != u);
}

TEST_CASE("spec validation rejects missing and mis-graded values") {
  auto doc = loadTwists();
  auto spec = twistNamed(doc, "flip");
  CHECK_NOTHROW(spec.validate());

  auto incomplete = spec;
  incomplete.values.erase({0, 0});
  CHECK_THROWS_AS(incomplete.validate(), Error);

  auto skewed = spec;
  TensorElem bad(spec.aFactor.field());
  Word x = Word::single(0, 1), z = Word::single(0, 1);
  bad.add(x * x, z, Scalar::one(spec.aFactor.field()));  // degree 3 in a degree-2 slot
  skewed.values.at({0, 0}) = bad;
  CHECK_THROWS_AS(skewed.validate(), Error);
}

TEST_CASE("consistent fixtures extend; the two bad ones report a cyclic entry") {
  auto doc = loadTwists();
  for (const char* name : {"flip", "family000", "family010"}) {
    CAPTURE(name);
    auto T = extendTwist(twistNamed(doc, name), 8);
    CHECK(T.extended);
    CHECK(T.consistent);
    CHECK_FALSE(T.conflict.has_value());
  }
  for (const char* name : {"family111", "broken"}) {
    CAPTURE(name);
    auto T = extendTwist(twistNamed(doc, name), 8);
    CHECK_FALSE(T.extended);
    CHECK_FALSE(T.consistent);
    REQUIRE(T.conflict.has_value());
    CHECK(wordStr(T.conflict->bWord, {"z"}) == "z");
    CHECK(wordStr(T.conflict->aWord, {"x", "y"}) == "y^2");
    CHECK(T.conflict->reason.find("depends on its own value") != std::string::npos);
  }
}

TEST_CASE("extension tables carry the expected entries") {
  auto doc = loadTwists();
  const auto& P = doc.findTwist("flip")->aFactor;
  FieldSpec f = P.field();
  Word x = wordOf(P, "x"), y = wordOf(P, "y"), z = Word::single(0, 1);

  auto flip = extendTwist(twistNamed(doc, "flip"), 8);
  // the flip moves every B-word past every A-word unchanged
  TensorElem want(f);
  want.add(x * y, z * z, Scalar::one(f));
  CHECK(flip.tau(z * z, x * y) == want);

  auto f010 = extendTwist(twistNamed(doc, "family010"), 8);
  TensorElem w1(f);
  w1.add(y * y, z, Scalar::one(f));
  CHECK(f010.tau(z, y * y) == w1);
  TensorElem w2(f);
  w2.add(y, z * z, Scalar::one(f));
  CHECK(f010.tau(z * z, y) == w2);
  CHECK(f010.tau(z, x * y).isZero());

  auto f000 = extendTwist(twistNamed(doc, "family000"), 8);
  CHECK(f000.tau(z, y).isZero());
  CHECK(f000.tau(z * z, y * y).isZero());

  // unit laws: degree-0 factors pass through
  TensorElem unitSide(f);
  unitSide.add(y, Word::one(), Scalar::one(f));
  CHECK(f010.tau(Word::one(), y) == unitSide);
  TensorElem unitSide2(f);
  unitSide2.add(Word::one(), z, Scalar::one(f));
  CHECK(f010.tau(z, Word::one()) == unitSide2);
}

TEST_CASE("hexagon and associativity hold for every consistent fixture") {
  auto doc = loadTwists();
  auto sig = parseGalgFiles({std::string(FIXTURES_DIR) + "/sigma0.galg"});
  std::vector<TwistData> all;
  for (const char* name : {"flip", "family000", "family010"})
    all.push_back(extendTwist(twistNamed(doc, name), 8));
  all.push_back(extendTwist(twistNamed(sig, "sigma0"), 8));
  for (const auto& T : all) {
    CAPTURE(T.spec.name);
    CHECK_FALSE(hexagonCheck(T, 6).has_value());
    CHECK_FALSE(associativityCheck(T, 5).has_value());
  }
}

TEST_CASE("mu_tau multiplies basis tensors") {
  auto doc = loadTwists();
  auto flip = extendTwist(twistNamed(doc, "flip"), 8);
  const auto& P = doc.findTwist("flip")->aFactor;
  FieldSpec f = P.field();
  Word x = wordOf(P, "x"), y = wordOf(P, "y"), z = Word::single(0, 1);
  TensorElem want(f);
  want.add(x * y, z, Scalar::one(f));
  CHECK(muTau(flip, x, z, y, Word::one()) == want);

  auto f000 = extendTwist(twistNamed(doc, "family000"), 8);
  CHECK(muTau(f000, x, z, y, Word::one()).isZero());
}

TEST_CASE("product algebras: dimensions and cross relations") {
  auto doc = loadTwists();
  auto sig = parseGalgFiles({std::string(FIXTURES_DIR) + "/sigma0.galg"});

  auto flipP = buildProduct(extendTwist(twistNamed(doc, "flip"), 8), 8);
  CHECK(flipP.hilbertOk);
  for (int n = 0; n <= 8; ++n)
    CHECK(flipP.dims.at(static_cast<size_t>(n)) == static_cast<long>(n + 1) * (n + 2) / 2);
  CHECK(flipP.completed.normalForm(parsePolynomial("z*x - x*z", flipP.presentation)).isZero());

  auto p000 = buildProduct(extendTwist(twistNamed(doc, "family000"), 8), 8);
  CHECK(p000.hilbertOk);
  CHECK(p000.completed.normalForm(parsePolynomial("z*x", p000.presentation)).isZero());
  CHECK(p000.completed.normalForm(parsePolynomial("z*y", p000.presentation)).isZero());
  for (int n = 0; n <= 8; ++n)
    CHECK(p000.dims.at(static_cast<size_t>(n)) == flipP.dims.at(static_cast<size_t>(n)));

  auto p010 = buildProduct(extendTwist(twistNamed(doc, "family010"), 8), 8);
  CHECK(p010.hilbertOk);
  CHECK(p010.completed.normalForm(parsePolynomial("z*y - y*z", p010.presentation)).isZero());
  CHECK(p010.completed.normalForm(parsePolynomial("z*x", p010.presentation)).isZero());

  auto psig = buildProduct(extendTwist(twistNamed(sig, "sigma0"), 8), 8);
  CHECK(psig.hilbertOk);
  for (int n = 1; n <= 8; ++n) CHECK(psig.dims.at(static_cast<size_t>(n)) == n + 1);
}

TEST_CASE("family pipeline: spec entry point agrees with the parameter entry point") {
  auto doc = loadTwists();
  CoherenceOptions opt;
  FieldSpec f = FieldSpec::rationals();
  auto byParams = twistFamily(Scalar::zero(f), Scalar::one(f), Scalar::zero(f), 8, opt);
  auto bySpec = twistFamilyFromSpec(twistNamed(doc, "family010"), 8, opt);

  for (auto* out : {&byParams, &bySpec}) {
    REQUIRE(out->product.has_value());
    REQUIRE(out->structure.has_value());
    REQUIRE(out->report.has_value());
    CHECK(out->twist.consistent);
    CHECK(out->product->hilbertOk);
    CHECK(out->structure->passed());
    CHECK(out->report->overall == Verdict::EvidencePositive);
  }
  CHECK(byParams.product->dims == bySpec.product->dims);

  // the inconsistent member never reaches the product stage
  auto bad = twistFamilyFromSpec(twistNamed(doc, "family111"), 8, opt);
  CHECK_FALSE(bad.twist.consistent);
  CHECK_FALSE(bad.product.has_value());
  CHECK_FALSE(bad.report.has_value());

  // shape guard: the flip is not a member of the family
  CHECK_THROWS_AS(twistFamilyFromSpec(twistNamed(doc, "flip"), 8, opt), Error);
}

TEST_CASE("family pipeline runs over a prime field") {
  FieldSpec f7 = FieldSpec::primeField(7);
  CoherenceOptions opt;
  auto out = twistFamily(Scalar::zero(f7), Scalar::one(f7), Scalar::zero(f7), 6, opt);
  REQUIRE(out.product.has_value());
  CHECK(out.product->hilbertOk);
  REQUIRE(out.report.has_value());
  CHECK(out.report->fieldName == "GF(7)");
  CHECK(out.report->overall == Verdict::EvidencePositive);
}
