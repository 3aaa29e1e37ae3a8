// gcoh - command-line front end for the graded-coherence laboratory.
//
// Subcommands operate on .galg input files (see docs/galg-format.md) and
// print either a human-oriented text report or JSON Lines (--format json).
// Exit codes: 0 success, 1 a witnessed failure was found and --fail-on-witness
// was given, 2 input or usage errors.

#include <gmpxx.h>

#include <CLI11.hpp>
#include <algorithm>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "gcoh/parser.hpp"
#include "gcoh/report.hpp"

using namespace gcoh;

namespace {

struct Options {
  std::vector<std::string> inputs;
  std::string algebra;                     // --algebra (default: first in the input)
  std::string expr;                        // --expr for nf/ann
  std::string sideStr = "left";            // --side for ann
  std::string idealName;                   // --ideal for syzygy/betti
  std::vector<std::string> batteryNames;   // --ideal (repeatable) for criterion
  std::string splitName;                   // --split for extension/criterion
  std::string twistName;                   // --name / --twist
  std::string familyStr;                   // --family "a,b,g"
  std::string fieldStr;                    // --field QQ | GF(p)
  std::string formatStr = "text";          // --format text | json
  int maxDegree = 10;
  int hBound = 3;
  int hexBound = -1;   // default min(8, maxDegree)
  int assocBound = -1; // default min(6, maxDegree)
  long checkPrime = 0; // 0 = off
  bool failOnWitness = false;
  bool skipVanishing = false;
  std::vector<std::string> asserts;
};

OutputFormat fmtOf(const Options& o) {
  if (o.formatStr == "text") return OutputFormat::Text;
  if (o.formatStr == "json") return OutputFormat::Json;
  throw Error("unknown format '" + o.formatStr + "' (expected text or json)");
}

FieldSpec parseFieldName(const std::string& s) {
  if (s == "QQ") return FieldSpec::rationals();
  if (s.rfind("GF(", 0) == 0 && s.size() > 4 && s.back() == ')') {
    const std::string inner = s.substr(3, s.size() - 4);
    try {
      return FieldSpec::primeField(std::stol(inner));
    } catch (const Error&) {
      throw;
    } catch (const std::exception&) {
      throw Error("bad field '" + s + "' (expected QQ or GF(p))");
    }
  }
  throw Error("unknown field '" + s + "' (expected QQ or GF(p))");
}

Side parseSide(const std::string& s) {
  if (s == "left") return Side::Left;
  if (s == "right") return Side::Right;
  if (s == "two-sided") return Side::TwoSided;
  throw Error("unknown side '" + s + "' (expected left, right or two-sided)");
}

GalgDocument loadInputs(const Options& o) {
  if (o.inputs.empty()) throw Error("no input files given");
  return parseGalgFiles(o.inputs);
}

const AlgebraPresentation& baseAlgebra(const GalgDocument& doc, const Options& o) {
  if (o.algebra.empty()) {
    if (doc.algebras.empty()) throw Error("the input declares no algebra");
    return doc.algebras.front();
  }
  const AlgebraPresentation* p = doc.findAlgebra(o.algebra);
  if (!p) throw Error("no algebra named '" + o.algebra + "' in the input");
  return *p;
}

AlgebraPresentation chooseAlgebra(const GalgDocument& doc, const Options& o) {
  const AlgebraPresentation& base = baseAlgebra(doc, o);
  if (!o.fieldStr.empty()) return base.withField(parseFieldName(o.fieldStr));
  return base;
}

// ideal generators moved onto the working field (no-op without an override)
std::vector<NcPolynomial> idealGens(const IdealSection& sec, const AlgebraPresentation& pres) {
  std::vector<NcPolynomial> out;
  out.reserve(sec.generators.size());
  for (const auto& g : sec.generators) out.push_back(changeField(g, pres.field()));
  return out;
}

const IdealSection& findIdealFor(const GalgDocument& doc, const std::string& name,
                                 const std::string& algebraName) {
  const IdealSection* s = doc.findIdeal(name);
  if (!s) throw Error("no ideal named '" + name + "' in the input");
  if (s->algebra != algebraName)
    throw Error("ideal '" + name + "' is declared on algebra '" + s->algebra + "', not on '" +
                algebraName + "'");
  return *s;
}

// the two-sided ideal that splits the algebra: --split, or the first
// two-sided ideal declared on the chosen algebra
const IdealSection& chooseSplit(const GalgDocument& doc, const Options& o,
                                const std::string& algebraName) {
  if (!o.splitName.empty()) {
    const IdealSection& s = findIdealFor(doc, o.splitName, algebraName);
    if (s.side != Side::TwoSided)
      throw Error("split ideal '" + s.name + "' must be two-sided");
    return s;
  }
  for (const auto& s : doc.ideals)
    if (s.algebra == algebraName && s.side == Side::TwoSided) return s;
  throw Error("no two-sided ideal on algebra '" + algebraName +
              "' in the input (declare one or pass --split)");
}

CoherenceOptions coherenceOpts(const Options& o) {
  CoherenceOptions c;
  c.maxDegree = o.maxDegree;
  c.checkVanishing = !o.skipVanishing;
  c.assertedByUser = o.asserts;
  return c;
}

Scalar scalarOf(const FieldSpec& f, const std::string& text) {
  try {
    mpq_class q(text);
    q.canonicalize();
    return Scalar::ofFraction(f, q.get_num(), q.get_den());
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw Error("bad scalar '" + text + "' (expected an integer or a fraction a/b)");
  }
}

std::vector<std::string> splitCommas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, ',')) {
    size_t b = cur.find_first_not_of(" \t");
    size_t e = cur.find_last_not_of(" \t");
    out.push_back(b == std::string::npos ? "" : cur.substr(b, e - b + 1));
  }
  return out;
}

std::string joinLongs(const std::vector<long>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += " ";
    s += std::to_string(v[i]);
  }
  return s;
}

std::string conflictText(const TwistConflict& c) {
  std::string s = c.reason;
  if (!c.firstValue.empty() || !c.secondValue.empty())
    s += " [" + c.firstValue + " vs " + c.secondValue + "]";
  return s;
}

// ---------------------------------------------------------------- commands

int cmdNf(const Options& o) {
  GalgDocument doc = loadInputs(o);
  AlgebraPresentation pres = chooseAlgebra(doc, o);
  NcPolynomial p = parsePolynomial(o.expr, pres);
  if (!p.isZero() && p.degree() > o.maxDegree)
    throw Error("expression degree " + std::to_string(p.degree()) + " exceeds --max-degree " +
                std::to_string(o.maxDegree));
  RewriteSystem A = RewriteSystem::complete(pres, o.maxDegree);
  emitNormalForm(std::cout, fmtOf(o), A, o.expr, A.normalForm(p));
  return 0;
}

int cmdBasis(const Options& o) {
  GalgDocument doc = loadInputs(o);
  RewriteSystem A = RewriteSystem::complete(chooseAlgebra(doc, o), o.maxDegree);
  emitBasis(std::cout, fmtOf(o), A, o.maxDegree);
  return 0;
}

int cmdHilbert(const Options& o) {
  GalgDocument doc = loadInputs(o);
  AlgebraPresentation pres = chooseAlgebra(doc, o);
  RewriteSystem A = RewriteSystem::complete(pres, o.maxDegree);
  if (o.checkPrime > 0) {
    const AlgebraPresentation& base = baseAlgebra(doc, o);
    AlgebraPresentation presP = base.withField(FieldSpec::primeField(o.checkPrime));
    RewriteSystem Ap = RewriteSystem::complete(presP, o.maxDegree);
    if (A.hilbert(o.maxDegree) != Ap.hilbert(o.maxDegree))
      throw Error("modular cross-check at p=" + std::to_string(o.checkPrime) +
                  ": dimensions disagree with the main run (the presentation is "
                  "field-sensitive at this prime)");
  }
  emitHilbert(std::cout, fmtOf(o), A, o.maxDegree);
  return 0;
}

int cmdAnn(const Options& o) {
  GalgDocument doc = loadInputs(o);
  AlgebraPresentation pres = chooseAlgebra(doc, o);
  Side side = parseSide(o.sideStr);
  NcPolynomial p = parsePolynomial(o.expr, pres);
  if (p.isZero()) throw Error("--expr is zero; the annihilator of 0 is everything");
  int hom = 0;
  if (!p.isHomogeneous(&hom)) throw Error("--expr must be homogeneous");
  RewriteSystem A = RewriteSystem::complete(pres, o.maxDegree + hom);
  p = A.normalForm(p);
  if (p.isZero()) throw Error("--expr is zero in the algebra");

  auto slices = annihilatorSlices(A, p, side, o.maxDegree);
  auto gens = minimalGenerators(A, side, slices, o.maxDegree);

  AnnReport r;
  r.algebra = pres.name();
  r.element = p.str(pres.generatorNames());
  r.side = side;
  r.maxDegree = o.maxDegree;
  for (int n = 0; n <= o.maxDegree; ++n)
    r.dims[n] = slices.count(n) ? slices.at(n).dim() : 0;
  bool finite = true;
  for (const auto& g : gens) {
    r.newGenCounts[g.degree] += 1;
    r.generatorDegrees.push_back(g.degree);
    r.generators.push_back(A.fromVec(g.degree, g.vec).str(pres.generatorNames()));
    if (g.degree >= trailingWindowStart(o.maxDegree)) finite = false;
  }
  r.finiteInWindow = finite;
  emitAnn(std::cout, fmtOf(o), r);
  return 0;
}

int cmdSyzygy(const Options& o) {
  GalgDocument doc = loadInputs(o);
  AlgebraPresentation pres = chooseAlgebra(doc, o);
  const IdealSection& sec = findIdealFor(doc, o.idealName, pres.name());
  if (sec.side != Side::Left)
    throw Error("syzygy analysis works on left ideals; '" + sec.name + "' is " +
                sideName(sec.side));
  RewriteSystem A = RewriteSystem::complete(pres, o.maxDegree);
  GradedIdeal J = makeIdeal(A, Side::Left, idealGens(sec, pres));
  auto IS = idealSlices(A, J, o.maxDegree);
  SyzygyData sd = syzygiesOfIdeal(A, J, o.maxDegree);

  SyzygyReport r;
  r.algebra = pres.name();
  r.ideal = sec.name;
  r.side = sec.side;
  r.maxDegree = o.maxDegree;
  for (int n = 0; n <= o.maxDegree; ++n)
    r.idealDims[n] = IS.count(n) ? IS.at(n).dim() : 0;
  for (const auto& g : sd.idealGenerators) {
    r.newGenCounts[g.degree] += 1;
    r.generatorDegrees.push_back(g.degree);
  }
  for (const auto& g : sd.syzygyGenerators) {
    r.newSyzCounts[g.degree] += 1;
    r.syzygyDegrees.push_back(g.degree);
  }
  emitSyzygy(std::cout, fmtOf(o), r);
  return 0;
}

int cmdBetti(const Options& o) {
  GalgDocument doc = loadInputs(o);
  AlgebraPresentation pres = chooseAlgebra(doc, o);
  const IdealSection& sec = findIdealFor(doc, o.idealName, pres.name());
  if (sec.side != Side::Left)
    throw Error("betti tables are computed for quotients by left ideals; '" + sec.name +
                "' is " + sideName(sec.side));
  RewriteSystem A = RewriteSystem::complete(pres, o.maxDegree);
  GradedIdeal J = makeIdeal(A, Side::Left, idealGens(sec, pres));
  BettiTable bt = bettiTable(A, quotientByIdeal(A, J), o.hBound, o.maxDegree);
  emitBetti(std::cout, fmtOf(o), pres.name(), pres.name() + "/" + sec.name, bt);
  return 0;
}

int cmdExtension(const Options& o) {
  GalgDocument doc = loadInputs(o);
  AlgebraPresentation pres = chooseAlgebra(doc, o);
  const IdealSection& sec = chooseSplit(doc, o, pres.name());
  RewriteSystem A = RewriteSystem::complete(pres, o.maxDegree);
  FreeExtensionData ext = buildExtension(A, idealGens(sec, pres), o.maxDegree);
  emitExtension(std::cout, fmtOf(o), pres.name() + "/" + sec.name, ext);
  bool witness = !ext.kernelMatchesIdeal || !ext.projMultiplicative ||
                 !ext.rightFree.dimensionIdentity;
  return (witness && o.failOnWitness) ? 1 : 0;
}

CoherenceReport fileCriterion(const GalgDocument& doc, const AlgebraPresentation& pres,
                              const Options& o, const CoherenceOptions& copt) {
  RewriteSystem A = RewriteSystem::complete(pres, o.maxDegree);
  const IdealSection& split = chooseSplit(doc, o, pres.name());
  FreeExtensionData ext = buildExtension(A, idealGens(split, pres), o.maxDegree);

  std::vector<std::pair<std::string, GradedIdeal>> battery;
  if (!o.batteryNames.empty()) {
    for (const auto& nm : o.batteryNames) {
      const IdealSection& s = findIdealFor(doc, nm, pres.name());
      if (s.side != Side::Left)
        throw Error("battery ideal '" + nm + "' must be a left ideal");
      battery.emplace_back(s.name, makeIdeal(A, Side::Left, idealGens(s, pres)));
    }
  } else {
    for (const auto& s : doc.ideals)
      if (s.algebra == pres.name() && s.side == Side::Left)
        battery.emplace_back(s.name, makeIdeal(A, Side::Left, idealGens(s, pres)));
    if (battery.empty()) battery = defaultBattery(A);
  }
  return coherenceReport(ext, battery, copt);
}

// first row where two runs of the same job disagree; "" when they agree
std::string firstDimDifference(const CoherenceReport& a, const CoherenceReport& b) {
  if (a.dimA != b.dimA) return "algebra dimensions";
  if (a.dimI != b.dimI) return "split-ideal dimensions";
  if (a.dimB != b.dimB) return "quotient dimensions";
  if (a.rightGeneratorDegrees != b.rightGeneratorDegrees) return "right-generator degrees";
  if (a.ideals.size() != b.ideals.size()) return "battery size";
  for (size_t i = 0; i < a.ideals.size(); ++i) {
    const IdealReport& x = a.ideals[i];
    const IdealReport& y = b.ideals[i];
    if (x.qDims != y.qDims) return "overlap-module dimensions for " + x.name;
    if (x.qNewGens != y.qNewGens || x.qNewSyzygies != y.qNewSyzygies)
      return "overlap-module generator counts for " + x.name;
    if (x.tor1Dims != y.tor1Dims) return "first-homology dimensions for " + x.name;
    if (x.tor2Dims != y.tor2Dims) return "second-homology dimensions for " + x.name;
    if (x.induced.tensorDims != y.induced.tensorDims ||
        x.induced.quotientDims != y.induced.quotientDims)
      return "induced-quotient dimensions for " + x.name;
    if (x.directSyzygyRow != y.directSyzygyRow) return "resolution row for " + x.name;
  }
  return "";
}

int familyResult(const Options& o, const FamilyOutcome& out) {
  OutputFormat fmt = fmtOf(o);
  if (!out.twist.consistent || !out.report) {
    TwistRunReport tr;
    tr.twist = &out.twist;
    if (out.product) tr.product = &*out.product;
    emitTwist(std::cout, fmt, tr);
    return o.failOnWitness ? 1 : 0;
  }
  CoherenceReport rep = *out.report;
  if (out.structure) {
    rep.notes.push_back(std::string("structure decomposition checks: ") +
                        (out.structure->passed() ? "passed" : "FAILED"));
    for (const auto& f : out.structure->failures) rep.notes.push_back("structure failure: " + f);
  }
  emitCriterion(std::cout, fmt, rep);
  bool witness = rep.overall == Verdict::WitnessedFailure ||
                 (out.structure && !out.structure->passed());
  return (witness && o.failOnWitness) ? 1 : 0;
}

int cmdCriterion(const Options& o) {
  CoherenceOptions copt = coherenceOpts(o);

  if (!o.familyStr.empty()) {
    auto parts = splitCommas(o.familyStr);
    if (parts.size() != 3)
      throw Error("--family expects three comma-separated scalars, e.g. \"0,1,0\"");
    FieldSpec f = o.fieldStr.empty() ? FieldSpec::rationals() : parseFieldName(o.fieldStr);
    FamilyOutcome out = twistFamily(scalarOf(f, parts[0]), scalarOf(f, parts[1]),
                                        scalarOf(f, parts[2]), o.maxDegree, copt);
    return familyResult(o, out);
  }

  GalgDocument doc = loadInputs(o);
  if (!o.twistName.empty()) {
    const TwistingMapSpec* sp = doc.findTwist(o.twistName);
    if (!sp) throw Error("no twist named '" + o.twistName + "' in the input");
    FamilyOutcome out = twistFamilyFromSpec(*sp, o.maxDegree, copt);
    return familyResult(o, out);
  }

  AlgebraPresentation pres = chooseAlgebra(doc, o);
  CoherenceReport rep = fileCriterion(doc, pres, o, copt);
  if (o.checkPrime > 0) {
    AlgebraPresentation presP =
        baseAlgebra(doc, o).withField(FieldSpec::primeField(o.checkPrime));
    CoherenceReport repP = fileCriterion(doc, presP, o, copt);
    std::string diff = firstDimDifference(rep, repP);
    if (!diff.empty())
      throw Error("modular cross-check at p=" + std::to_string(o.checkPrime) + ": " + diff +
                  " disagree with the main run (field-sensitive input or unlucky prime)");
    rep.notes.push_back("modular cross-check at p=" + std::to_string(o.checkPrime) +
                        ": all dimension tables agree");
  }
  emitCriterion(std::cout, fmtOf(o), rep);
  return (o.failOnWitness && rep.overall == Verdict::WitnessedFailure) ? 1 : 0;
}

int cmdTwist(const Options& o) {
  GalgDocument doc = loadInputs(o);
  const TwistingMapSpec* spec = nullptr;
  if (o.twistName.empty()) {
    if (doc.twists.empty()) throw Error("the input declares no twist");
    spec = &doc.twists.front();
  } else {
    spec = doc.findTwist(o.twistName);
    if (!spec) throw Error("no twist named '" + o.twistName + "' in the input");
  }
  int hexB = o.hexBound > 0 ? o.hexBound : std::min(8, o.maxDegree);
  int asB = o.assocBound > 0 ? o.assocBound : std::min(6, o.maxDegree);
  if (hexB > o.maxDegree || asB > o.maxDegree)
    throw Error("identity-check bounds cannot exceed --max-degree");

  TwistData T = extendTwist(*spec, o.maxDegree);
  TwistRunReport r;
  r.twist = &T;
  TwistedProduct prod;
  bool witness = false;
  if (T.extended && T.consistent) {
    auto hex = hexagonCheck(T, hexB);
    r.hexagon = hex ? "failed: " + conflictText(*hex)
                    : "ok through total degree " + std::to_string(hexB);
    auto as = associativityCheck(T, asB);
    r.associativity = as ? "failed: " + *as
                         : "ok through total degree " + std::to_string(asB);
    prod = buildProduct(T, o.maxDegree);
    r.product = &prod;
    witness = hex.has_value() || as.has_value() || !prod.hilbertOk;
  } else {
    r.hexagon = "skipped (no consistent extension)";
    r.associativity = "skipped (no consistent extension)";
    witness = true;
  }
  emitTwist(std::cout, fmtOf(o), r);
  return (witness && o.failOnWitness) ? 1 : 0;
}

// ------------------------------------------------------------ verify-paper

AlgebraPresentation splitQuotientModel() {
  AlgebraPresentation shell("C", FieldSpec::rationals(), {{"x", 1}, {"z", 1}, {"y", 1}}, {});
  return shell.withExtraRelations(
      "C", {parsePolynomial("y*z - z*y", shell), parsePolynomial("x*z", shell)});
}

AlgebraPresentation commutingRelationsModel() {
  AlgebraPresentation shell("E", FieldSpec::rationals(), {{"x", 1}, {"y", 1}, {"z", 1}}, {});
  return shell.withExtraRelations("E", {parsePolynomial("x*y - y*x", shell),
                                        parsePolynomial("z*x", shell),
                                        parsePolynomial("z*y", shell)});
}

// twist fixtures used by the built-in verification battery
const char* kVerifyTwists = R"(algebra P
field QQ
generators x, y
relations
  x*y - y*x
end

algebra L
field QQ
generators z
relations
end

twist flip
afactor P
bfactor L
tau(z, x) = x # z
tau(z, y) = y # z
end

twist broken
afactor P
bfactor L
tau(z, x) = x # z
tau(z, y) = y^2 # 1 + 1 # z^2
end
)";

int cmdVerify(const Options& o) {
  const int D = o.maxDegree;
  const int qD = std::min(D, 8);  // window for the homological battery
  const int hexB = std::min(D, 8);
  const int asB = std::min(D, 6);
  std::vector<CheckLine> cks;
  auto push = [&](std::string name, bool pass, std::string detail) {
    cks.push_back({std::move(name), pass, std::move(detail)});
  };

  // -- the split-quotient model C = <x,z,y | y*z - z*y, x*z> --
  AlgebraPresentation presC = splitQuotientModel();
  RewriteSystem sysC = RewriteSystem::complete(presC, D + 1);
  auto namesC = presC.generatorNames();
  {
    auto h = sysC.hilbert(D);
    bool ok = true;
    for (int n = 0; n <= D; ++n) ok = ok && h[(size_t)n] == (1L << (n + 1)) - 1;
    push("algebra C: dimensions follow 2^(n+1)-1", ok, joinLongs(h));
  }
  NcPolynomial zC = parsePolynomial("z", presC);
  {
    auto sl = annihilatorSlices(sysC, zC, Side::Left, D);
    auto gens = minimalGenerators(sysC, Side::Left, sl, D);
    bool ok = (int)gens.size() == D;
    std::map<int, int> cnt;
    for (const auto& g : gens) cnt[g.degree] += 1;
    for (int d = 1; d <= D; ++d) ok = ok && cnt[d] == 1;
    for (const auto& g : gens) {
      NcPolynomial p = sysC.fromVec(g.degree, g.vec);
      std::string want = g.degree == 1 ? "x" : "x*y^" + std::to_string(g.degree - 1);
      NcPolynomial exp = parsePolynomial(want, presC);
      ok = ok && p.termCount() == 1 && p.leadWord() == exp.leadWord();
    }
    push("algebra C: left annihilator of z gains one generator x*y^(d-1) per degree", ok,
         "degrees 1.." + std::to_string(D));
  }
  {
    auto sr = annihilatorSlices(sysC, zC, Side::Right, D);
    long tot = 0;
    for (const auto& [n, s] : sr) tot += s.dim();
    push("algebra C: right annihilator of z vanishes", tot == 0,
         "total dimension " + std::to_string(tot) + " through degree " + std::to_string(D));
  }
  FreeExtensionData extC = buildExtension(sysC, {sysC.normalForm(zC)}, D);
  {
    const auto& rf = extC.rightFree;
    bool ok = extC.kernelMatchesIdeal && extC.projMultiplicative && rf.dimensionIdentity &&
              rf.rightGenerators.size() == 1 && rf.rightGenerators[0].degree == 1 &&
              rf.finiteInWindow;
    std::vector<long> bd;
    for (int n = 0; n <= D; ++n) bd.push_back(extC.B.dim(n));
    for (int n = 0; n <= D; ++n) ok = ok && bd[(size_t)n] == (1L << n);
    push("algebra C: ideal (z) is right-free on one degree-1 generator; quotient has "
         "free-algebra dimensions",
         ok, "quotient dims " + joinLongs(bd));
  }
  GradedIdeal Jz = makeIdeal(sysC, Side::Left, {zC});
  {
    QData q = computeQ(extC, Jz, qD);
    bool ok = q.generators.size() == 1 && q.generators[0].degree == 1;
    long totSyz = 0;
    for (const auto& [d, c] : q.newSyzCounts) totSyz += c;
    for (int d = 2; d <= qD; ++d)
      ok = ok && q.newSyzCounts.count(d) && q.newSyzCounts.at(d) == 1;
    ok = ok && totSyz == qD - 1;
    push("algebra C: overlap module of the left ideal (z) has one generator and a new "
         "relation in every degree",
         ok, "new relations at degrees 2.." + std::to_string(qD));
  }
  {
    BettiTable bt = bettiTable(sysC, quotientByIdeal(sysC, Jz), 2, D);
    bool ok = bt.at(2, 0) == 0 && bt.at(2, 1) == 0;
    for (int n = 2; n <= D; ++n) ok = ok && bt.at(2, n) == 1;
    push("algebra C: level-2 resolution row of C/(z) is 1 in each degree 2.." +
             std::to_string(D),
         ok, "");
  }
  CoherenceOptions copt;
  copt.maxDegree = qD;
  CoherenceReport repC;
  {
    std::vector<std::pair<std::string, GradedIdeal>> bat{
        {"(z)", Jz},
        {"(x)", makeIdeal(sysC, Side::Left, {parsePolynomial("x", presC)})},
        {"(x+z)", makeIdeal(sysC, Side::Left, {parsePolynomial("x + z", presC)})}};
    repC = coherenceReport(extC, bat, copt);
    std::string w;
    for (const auto& ir : repC.ideals)
      if (!ir.witness.empty() && w.empty()) w = ir.witness;
    push("algebra C: criterion verdict is witnessed-failure",
         repC.overall == Verdict::WitnessedFailure, w);
  }

  // -- the commuting-relations model E = <x,y,z | x*y - y*x, z*x, z*y> --
  AlgebraPresentation presE = commutingRelationsModel();
  RewriteSystem sysE = RewriteSystem::complete(presE, D + 1);
  {
    auto h = sysE.hilbert(D);
    bool ok = true;
    for (int n = 0; n <= D; ++n) ok = ok && h[(size_t)n] == (long)(n + 1) * (n + 2) / 2;
    push("algebra E: dimensions follow (n+1)(n+2)/2", ok, joinLongs(h));
  }
  NcPolynomial xE = parsePolynomial("x", presE);
  FreeExtensionData extE = buildExtension(sysE, {sysE.normalForm(xE)}, D);
  {
    const auto& rf = extE.rightFree;
    bool ok = extE.kernelMatchesIdeal && extE.projMultiplicative && rf.dimensionIdentity &&
              rf.rightGenerators.size() == 1 && rf.rightGenerators[0].degree == 1 &&
              rf.finiteInWindow;
    push("algebra E: ideal (x) is right-free on one degree-1 generator", ok, "");
  }
  CoherenceReport repE;
  {
    std::vector<std::pair<std::string, GradedIdeal>> bat{
        {"(x)", makeIdeal(sysE, Side::Left, {xE})},
        {"(z)", makeIdeal(sysE, Side::Left, {parsePolynomial("z", presE)})}};
    repE = coherenceReport(extE, bat, copt);
    push("algebra E: criterion verdict is evidence-positive",
         repE.overall == Verdict::EvidencePositive, "");
  }

  // -- the twisted-product family over P = k[x,y], L = k[z] --
  CoherenceOptions fopt;  // familyPipeline pins the window to its own degree
  FieldSpec QQ = FieldSpec::rationals();
  Scalar s0 = Scalar::zero(QQ), s1 = Scalar::one(QQ);
  FamilyOutcome f000 = twistFamily(s0, s0, s0, D, fopt);
  FamilyOutcome f010 = twistFamily(s0, s1, s0, D, fopt);
  FamilyOutcome f111 = twistFamily(s1, s1, s1, D, fopt);
  {
    bool ok = f000.twist.consistent && f000.product && f000.product->hilbertOk &&
              f000.structure && f000.structure->passed() && f000.report &&
              f000.report->overall == Verdict::EvidencePositive;
    if (ok) {
      const RewriteSystem& Pr = f000.product->completed;
      for (const auto& r : presE.relations()) ok = ok && Pr.normalForm(r).isZero();
      for (const auto& r : f000.product->presentation.relations())
        ok = ok && sysE.normalForm(r).isZero();
      ok = ok && Pr.hilbert(D) == sysE.hilbert(D);
    }
    push("family (0,0,0): product equals algebra E up to normal form; structure checks "
         "pass; evidence-positive",
         ok, "");
  }
  {
    bool ok = f010.twist.consistent && f010.product && f010.product->hilbertOk &&
              f010.structure && f010.structure->passed() && f010.report &&
              f010.report->overall == Verdict::EvidencePositive;
    push("family (0,1,0): structure checks pass; evidence-positive", ok, "");
  }
  {
    bool ok = !f111.twist.extended && f111.twist.conflict.has_value();
    push("family (1,1,1): table extension is rejected with a named conflict", ok,
         f111.twist.conflict ? f111.twist.conflict->reason : "no conflict reported");
  }

  // -- cross-pipeline agreement over every battery pair examined above --
  {
    std::vector<const CoherenceReport*> reps{&repC, &repE};
    if (f000.report) reps.push_back(&*f000.report);
    if (f010.report) reps.push_back(&*f010.report);
    size_t pairs = 0;
    bool t1 = true, iq = true, vanish = true;
    for (const CoherenceReport* rp : reps)
      for (const IdealReport& ir : rp->ideals) {
        pairs += 1;
        t1 = t1 && ir.torOneMatchesQ;
        iq = iq && ir.induced.equal;
        if (ir.vanishingChecked) vanish = vanish && ir.vanishingOk;
      }
    std::string det = std::to_string(pairs) + " algebra/ideal pairs";
    push("battery: first homology matches the overlap module on every pair", t1, det);
    push("battery: induced quotient computed two ways agrees on every pair", iq, det);
    push("battery: second homology vanishes on every pair", vanish, det);
  }

  // -- twist identity checks --
  GalgDocument tdoc = parseGalg(kVerifyTwists, "<verify>");
  TwistData Tf = extendTwist(*tdoc.findTwist("flip"), D);
  {
    bool ok = Tf.extended && Tf.consistent && f000.twist.consistent && f010.twist.consistent;
    ok = ok && !hexagonCheck(Tf, hexB) && !hexagonCheck(f000.twist, hexB) &&
         !hexagonCheck(f010.twist, hexB);
    push("twists flip, (0,0,0), (0,1,0): hexagon and unit identities hold", ok,
         "all basis tensors of total degree <= " + std::to_string(hexB));
  }
  {
    bool ok = !associativityCheck(Tf, asB) && !associativityCheck(f000.twist, asB) &&
              !associativityCheck(f010.twist, asB);
    TwistedProduct pf = buildProduct(Tf, D);
    ok = ok && pf.hilbertOk;
    push("twists flip, (0,0,0), (0,1,0): products are associative with the expected "
         "dimensions",
         ok, "triples of total degree <= " + std::to_string(asB));
  }
  {
    TwistData Tb = extendTwist(*tdoc.findTwist("broken"), D);
    bool ok = !Tb.extended && Tb.conflict.has_value();
    push("twist with incompatible generator values: rejected with a tensor witness", ok,
         Tb.conflict ? Tb.conflict->reason : "no conflict reported");
  }

  emitChecks(std::cout, fmtOf(o), "verify-paper", cks);
  bool all = true;
  for (const auto& c : cks) all = all && c.pass;
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  CLI::App app{"gcoh: truncated graded-coherence laboratory for finitely presented "
               "graded algebras"};
  app.require_subcommand(1);
  Options o;

  auto addWindow = [&](CLI::App* sub) {
    sub->add_option("--max-degree", o.maxDegree, "truncation degree of the run (>= 2)")
        ->check(CLI::Range(2, 64));
    sub->add_option("--format", o.formatStr, "output format: text or json");
  };
  auto addInputs = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("inputs", o.inputs, "input .galg files");
    if (required) opt->required();
  };
  auto addAlgebra = [&](CLI::App* sub) {
    sub->add_option("--algebra", o.algebra, "algebra to use (default: first declared)");
    sub->add_option("--field", o.fieldStr, "field override: QQ or GF(p)");
  };

  CLI::App* nf = app.add_subcommand("nf", "normal form of a polynomial expression");
  addInputs(nf, true);
  addAlgebra(nf);
  addWindow(nf);
  nf->add_option("--expr", o.expr, "polynomial in the algebra generators")->required();

  CLI::App* basis = app.add_subcommand("basis", "normal-word basis per degree");
  addInputs(basis, true);
  addAlgebra(basis);
  addWindow(basis);

  CLI::App* hil = app.add_subcommand("hilbert", "dimension of each graded piece");
  addInputs(hil, true);
  addAlgebra(hil);
  addWindow(hil);
  hil->add_option("--check-prime", o.checkPrime,
                  "cross-check dimensions over GF(p) (0 = off)");

  CLI::App* ann = app.add_subcommand("ann", "annihilator of a homogeneous element");
  addInputs(ann, true);
  addAlgebra(ann);
  addWindow(ann);
  ann->add_option("--expr", o.expr, "homogeneous element")->required();
  ann->add_option("--side", o.sideStr, "left, right or two-sided (default left)");

  CLI::App* syz = app.add_subcommand("syzygy", "generators and relations of a left ideal");
  addInputs(syz, true);
  addAlgebra(syz);
  addWindow(syz);
  syz->add_option("--ideal", o.idealName, "ideal section to analyze")->required();

  CLI::App* betti = app.add_subcommand("betti", "graded resolution table of a cyclic quotient");
  addInputs(betti, true);
  addAlgebra(betti);
  addWindow(betti);
  betti->add_option("--ideal", o.idealName, "ideal section to quotient by")->required();
  betti->add_option("--hbound", o.hBound, "number of resolution levels (default 3)")
      ->check(CLI::Range(1, 16));

  CLI::App* extc = app.add_subcommand("extension", "split the algebra along a two-sided ideal");
  addInputs(extc, true);
  addAlgebra(extc);
  addWindow(extc);
  extc->add_option("--split", o.splitName, "two-sided ideal section (default: first declared)");
  extc->add_flag("--fail-on-witness", o.failOnWitness, "exit 1 when a check fails");

  CLI::App* crit = app.add_subcommand("criterion", "graded-coherence criterion battery");
  addInputs(crit, false);
  addAlgebra(crit);
  addWindow(crit);
  crit->add_option("--split", o.splitName, "two-sided ideal section (default: first declared)");
  crit->add_option("--ideal", o.batteryNames, "battery left ideal (repeatable)");
  crit->add_option("--twist", o.twistName, "run the pipeline on a declared family twist");
  crit->add_option("--family", o.familyStr,
                   "family parameters \"alpha,beta,gamma\" (no input file needed)");
  crit->add_option("--check-prime", o.checkPrime,
                   "re-run every dimension table over GF(p) and compare (0 = off)");
  crit->add_option("--assert", o.asserts, "hypothesis taken on trust, echoed in the report");
  crit->add_flag("--skip-vanishing", o.skipVanishing, "skip the second-homology check");
  crit->add_flag("--fail-on-witness", o.failOnWitness,
                 "exit 1 when the verdict is witnessed-failure");

  CLI::App* tw = app.add_subcommand("twist", "extend and check a twisting map");
  addInputs(tw, true);
  addWindow(tw);
  tw->add_option("--name", o.twistName, "twist section to run (default: first declared)");
  tw->add_option("--hexagon-bound", o.hexBound,
                 "total degree for the hexagon check (default min(8, max-degree))");
  tw->add_option("--assoc-bound", o.assocBound,
                 "total degree for the associativity check (default min(6, max-degree))");
  tw->add_flag("--fail-on-witness", o.failOnWitness,
               "exit 1 when the map is inconsistent or an identity fails");

  CLI::App* vp = app.add_subcommand("verify-paper", "run the built-in reference battery");
  addWindow(vp);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(nf)) return cmdNf(o);
    if (app.got_subcommand(basis)) return cmdBasis(o);
    if (app.got_subcommand(hil)) return cmdHilbert(o);
    if (app.got_subcommand(ann)) return cmdAnn(o);
    if (app.got_subcommand(syz)) return cmdSyzygy(o);
    if (app.got_subcommand(betti)) return cmdBetti(o);
    if (app.got_subcommand(extc)) return cmdExtension(o);
    if (app.got_subcommand(crit)) return cmdCriterion(o);
    if (app.got_subcommand(tw)) return cmdTwist(o);
    if (app.got_subcommand(vp)) return cmdVerify(o);
    std::cerr << "error: no command selected\n";
    return 2;
  } catch (const gcoh::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
