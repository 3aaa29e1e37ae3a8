#include "gcoh/report.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace gcoh {

namespace {

using json = nlohmann::ordered_json;

long rowAt(const std::map<int, long>& m, int n) {
  auto it = m.find(n);
  return it == m.end() ? 0 : it->second;
}

std::vector<long> rowVec(const std::map<int, long>& m, int upTo) {
  std::vector<long> out;
  for (int n = 0; n <= upTo; ++n) out.push_back(rowAt(m, n));
  return out;
}

void jline(std::ostream& out, const json& j) { out << j.dump() << "\n"; }

json header(const std::string& command) {
  json j;
  j["schema"] = kReportSchema;
  j["command"] = command;
  return j;
}

json windowObj(int maxDegree) {
  json w;
  w["maxDegree"] = maxDegree;
  w["trailingStart"] = trailingWindowStart(maxDegree);
  return w;
}

// aligned text row: label then one cell per degree
void textRow(std::ostream& out, const std::string& label, const std::vector<long>& cells) {
  out << std::left << std::setw(14) << label;
  for (long c : cells) out << " " << std::setw(5) << c;
  out << "\n";
}

void textDegreeHeader(std::ostream& out, int upTo) {
  std::vector<long> degs;
  for (int n = 0; n <= upTo; ++n) degs.push_back(n);
  textRow(out, "degree", degs);
}

std::string windowLine(int maxDegree) {
  return "window: degrees 0.." + std::to_string(maxDegree) + " (trailing " +
         std::to_string(trailingWindowStart(maxDegree)) + ".." + std::to_string(maxDegree) +
         ")";
}

}  // namespace

void emitHilbert(std::ostream& out, OutputFormat fmt, const RewriteSystem& A, int maxDegree) {
  if (fmt == OutputFormat::Text) {
    for (int n = 0; n <= maxDegree; ++n) out << (n ? " " : "") << A.dim(n);
    out << "\n";
    return;
  }
  json h = header("hilbert");
  h["algebra"] = A.presentation().name();
  h["field"] = A.presentation().field().str();
  jline(out, h);
  for (int n = 0; n <= maxDegree; ++n) {
    json d;
    d["degree"] = n;
    d["dim"] = A.dim(n);
    jline(out, d);
  }
  json s;
  s["summary"] = true;
  s["window"] = windowObj(maxDegree);
  jline(out, s);
}

void emitBasis(std::ostream& out, OutputFormat fmt, const RewriteSystem& A, int maxDegree) {
  auto names = A.presentation().generatorNames();
  if (fmt == OutputFormat::Text) {
    for (int n = 0; n <= maxDegree; ++n) {
      out << n << ":";
      for (const Word& w : A.basis(n)) out << " " << wordStr(w, names);
      out << "\n";
    }
    return;
  }
  json h = header("basis");
  h["algebra"] = A.presentation().name();
  h["field"] = A.presentation().field().str();
  jline(out, h);
  for (int n = 0; n <= maxDegree; ++n) {
    json d;
    d["degree"] = n;
    d["words"] = json::array();
    for (const Word& w : A.basis(n)) d["words"].push_back(wordStr(w, names));
    jline(out, d);
  }
  json s;
  s["summary"] = true;
  s["window"] = windowObj(maxDegree);
  jline(out, s);
}

void emitNormalForm(std::ostream& out, OutputFormat fmt, const RewriteSystem& A,
                    const std::string& expr, const NcPolynomial& nf) {
  auto names = A.presentation().generatorNames();
  if (fmt == OutputFormat::Text) {
    out << nf.str(names) << "\n";
    return;
  }
  json h = header("nf");
  h["algebra"] = A.presentation().name();
  h["input"] = expr;
  h["normalForm"] = nf.str(names);
  jline(out, h);
}

void emitAnn(std::ostream& out, OutputFormat fmt, const AnnReport& r) {
  if (fmt == OutputFormat::Text) {
    out << "annihilator: " << sideName(r.side) << " ann(" << r.element << ") in " << r.algebra
        << "\n";
    out << windowLine(r.maxDegree) << "\n";
    textDegreeHeader(out, r.maxDegree);
    textRow(out, "dim", rowVec(r.dims, r.maxDegree));
    textRow(out, "new gens", rowVec(r.newGenCounts, r.maxDegree));
    for (size_t i = 0; i < r.generators.size(); ++i)
      out << "generator at degree " << r.generatorDegrees[i] << ": " << r.generators[i] << "\n";
    out << "finitely generated in the trailing window: " << (r.finiteInWindow ? "yes" : "no")
        << "\n";
    return;
  }
  json h = header("ann");
  h["algebra"] = r.algebra;
  h["element"] = r.element;
  h["side"] = sideName(r.side);
  jline(out, h);
  for (int n = 0; n <= r.maxDegree; ++n) {
    json d;
    d["degree"] = n;
    d["dim"] = rowAt(r.dims, n);
    d["newGenerators"] = rowAt(r.newGenCounts, n);
    jline(out, d);
  }
  json s;
  s["summary"] = true;
  s["window"] = windowObj(r.maxDegree);
  s["generatorDegrees"] = r.generatorDegrees;
  s["generators"] = r.generators;
  s["finiteInWindow"] = r.finiteInWindow;
  jline(out, s);
}

void emitSyzygy(std::ostream& out, OutputFormat fmt, const SyzygyReport& r) {
  if (fmt == OutputFormat::Text) {
    out << "syzygies: ideal " << r.ideal << " (" << sideName(r.side) << ") in " << r.algebra
        << "\n";
    out << windowLine(r.maxDegree) << "\n";
    textDegreeHeader(out, r.maxDegree);
    textRow(out, "dim ideal", rowVec(r.idealDims, r.maxDegree));
    textRow(out, "new gens", rowVec(r.newGenCounts, r.maxDegree));
    textRow(out, "new syzygies", rowVec(r.newSyzCounts, r.maxDegree));
    out << "generator degrees:";
    for (int d : r.generatorDegrees) out << " " << d;
    out << "\nsyzygy degrees:";
    for (int d : r.syzygyDegrees) out << " " << d;
    out << "\n";
    return;
  }
  json h = header("syzygy");
  h["algebra"] = r.algebra;
  h["ideal"] = r.ideal;
  h["side"] = sideName(r.side);
  jline(out, h);
  for (int n = 0; n <= r.maxDegree; ++n) {
    json d;
    d["degree"] = n;
    d["dim"] = rowAt(r.idealDims, n);
    d["newGenerators"] = rowAt(r.newGenCounts, n);
    d["newSyzygies"] = rowAt(r.newSyzCounts, n);
    jline(out, d);
  }
  json s;
  s["summary"] = true;
  s["window"] = windowObj(r.maxDegree);
  s["generatorDegrees"] = r.generatorDegrees;
  s["syzygyDegrees"] = r.syzygyDegrees;
  jline(out, s);
}

void emitBetti(std::ostream& out, OutputFormat fmt, const std::string& algebra,
               const std::string& module, const BettiTable& table) {
  if (fmt == OutputFormat::Text) {
    out << "graded Betti numbers: " << module << " over " << algebra << "\n";
    out << windowLine(table.maxDegree) << " hbound " << table.hBound << "\n";
    textDegreeHeader(out, table.maxDegree);
    for (int q = 0; q <= table.hBound; ++q) {
      std::vector<long> row;
      for (int n = 0; n <= table.maxDegree; ++n) row.push_back(table.at(q, n));
      textRow(out, "level " + std::to_string(q), row);
    }
    return;
  }
  json h = header("betti");
  h["algebra"] = algebra;
  h["module"] = module;
  h["hBound"] = table.hBound;
  jline(out, h);
  for (int n = 0; n <= table.maxDegree; ++n) {
    json d;
    d["degree"] = n;
    d["tor"] = json::array();
    for (int q = 0; q <= table.hBound; ++q) d["tor"].push_back(table.at(q, n));
    jline(out, d);
  }
  json s;
  s["summary"] = true;
  s["window"] = windowObj(table.maxDegree);
  s["window"]["hBound"] = table.hBound;
  jline(out, s);
}

void emitExtension(std::ostream& out, OutputFormat fmt, const std::string& quotientName,
                   const FreeExtensionData& ext) {
  const RewriteSystem& A = *ext.A;
  auto names = A.presentation().generatorNames();
  std::vector<std::string> igens;
  for (const auto& g : ext.idealGenerators) igens.push_back(g.str(names));
  const auto& rf = ext.rightFree;
  if (fmt == OutputFormat::Text) {
    out << "extension: " << quotientName << " = " << A.presentation().name() << " / (";
    for (size_t i = 0; i < igens.size(); ++i) out << (i ? ", " : "") << igens[i];
    out << ")\n" << windowLine(ext.maxDegree) << "\n";
    textDegreeHeader(out, ext.maxDegree);
    std::vector<long> da, di, db;
    for (int n = 0; n <= ext.maxDegree; ++n) {
      da.push_back(A.dim(n));
      di.push_back(ext.ISlices.at(n).dim());
      db.push_back(ext.B.dim(n));
    }
    textRow(out, "dim A", da);
    textRow(out, "dim I", di);
    textRow(out, "dim B", db);
    out << "kernel matches the ideal: " << (ext.kernelMatchesIdeal ? "yes" : "no") << "\n";
    out << "projection multiplicative: " << (ext.projMultiplicative ? "yes" : "no") << "\n";
    out << "right generators of I at degrees:";
    for (const auto& g : rf.rightGenerators) out << " " << g.degree;
    out << "\nright-freeness dimension identity: " << (rf.dimensionIdentity ? "yes" : "no");
    if (rf.firstMismatch >= 0) out << " (first mismatch at degree " << rf.firstMismatch << ")";
    out << "\nno new right generator in the trailing window: "
        << (rf.finiteInWindow ? "yes" : "no") << "\n";
    return;
  }
  json h = header("extension");
  h["algebra"] = A.presentation().name();
  h["quotient"] = quotientName;
  h["idealGenerators"] = igens;
  jline(out, h);
  for (int n = 0; n <= ext.maxDegree; ++n) {
    json d;
    d["degree"] = n;
    d["algebra"] = A.dim(n);
    d["ideal"] = ext.ISlices.at(n).dim();
    d["quotient"] = ext.B.dim(n);
    jline(out, d);
  }
  json s;
  s["summary"] = true;
  s["window"] = windowObj(ext.maxDegree);
  s["kernelMatchesIdeal"] = ext.kernelMatchesIdeal;
  s["projMultiplicative"] = ext.projMultiplicative;
  json rg = json::array();
  for (const auto& g : rf.rightGenerators) rg.push_back(g.degree);
  s["rightGeneratorDegrees"] = rg;
  s["dimensionIdentity"] = rf.dimensionIdentity;
  s["firstMismatch"] = rf.firstMismatch;
  s["finiteInWindow"] = rf.finiteInWindow;
  jline(out, s);
}

void emitCriterion(std::ostream& out, OutputFormat fmt, const CoherenceReport& rep) {
  int D = rep.maxDegree;
  if (fmt == OutputFormat::Text) {
    out << "coherence criterion: " << rep.algebraName << "\n";
    out << windowLine(D) << "\n";
    out << "extension valid: " << (rep.extensionValid ? "yes" : "no")
        << "; right-free: " << (rep.rightFreenessHolds ? "yes" : "no")
        << "; right generators finite: " << (rep.rightGeneratorsFinite ? "yes" : "no")
        << " (degrees:";
    for (int d : rep.rightGeneratorDegrees) out << " " << d;
    out << ")\n";
    for (const auto& a : rep.assertedByUser) out << "asserted: " << a << "\n";
    for (const auto& n : rep.notes) out << "note: " << n << "\n";
    textDegreeHeader(out, D);
    textRow(out, "dim A", rep.dimA);
    textRow(out, "dim I", rep.dimI);
    textRow(out, "dim B", rep.dimB);
    for (const auto& ir : rep.ideals) {
      out << "\nideal " << ir.name << ": verdict " << verdictName(ir.verdict) << "\n";
      out << "  minimal generators at degrees:";
      for (int d : ir.jMinGenDegrees) out << " " << d;
      out << "\n";
      textDegreeHeader(out, D);
      textRow(out, "dim Q", rowVec(ir.qDims, D));
      textRow(out, "new Q gens", rowVec(ir.qNewGens, D));
      textRow(out, "new Q syz", rowVec(ir.qNewSyzygies, D));
      textRow(out, "Tor1", rowVec(ir.tor1Dims, D));
      out << "  Tor1 matches Q: " << (ir.torOneMatchesQ ? "yes" : "no") << "\n";
      if (ir.vanishingChecked) {
        textRow(out, "Tor2", rowVec(ir.tor2Dims, D));
        out << "  vanishing: " << (ir.vanishingOk ? "ok" : "failed") << "\n";
      }
      textRow(out, "betti level 2", rowVec(ir.directSyzygyRow, D));
      out << "  induced quotient comparison: " << (ir.induced.equal ? "agree" : "DISAGREE")
          << "\n";
      out << "  Q finitely generated in window: " << (ir.qFinitelyGenerated ? "yes" : "no")
          << "\n";
      if (!ir.witness.empty()) out << "  witness: " << ir.witness << "\n";
    }
    out << "\noverall: " << verdictName(rep.overall) << "\n";
    return;
  }
  json h = header("criterion");
  h["algebra"] = rep.algebraName;
  h["field"] = rep.fieldName;
  json names = json::array();
  for (const auto& ir : rep.ideals) names.push_back(ir.name);
  h["ideals"] = names;
  jline(out, h);
  for (int n = 0; n <= D; ++n) {
    json d;
    d["degree"] = n;
    d["algebra"] = rep.dimA.at(n);
    d["ideal"] = rep.dimI.at(n);
    d["quotient"] = rep.dimB.at(n);
    json per = json::array();
    for (const auto& ir : rep.ideals) {
      json p;
      p["q"] = rowAt(ir.qDims, n);
      p["newQGenerators"] = rowAt(ir.qNewGens, n);
      p["newQSyzygies"] = rowAt(ir.qNewSyzygies, n);
      p["tor1"] = rowAt(ir.tor1Dims, n);
      if (ir.vanishingChecked) p["tor2"] = rowAt(ir.tor2Dims, n);
      p["tensor"] = rowAt(ir.induced.tensorDims, n);
      p["inducedQuotient"] = rowAt(ir.induced.quotientDims, n);
      p["bettiLevel2"] = rowAt(ir.directSyzygyRow, n);
      per.push_back(p);
    }
    d["perIdeal"] = per;
    jline(out, d);
  }
  json s;
  s["summary"] = true;
  s["window"] = windowObj(D);
  json e;
  e["valid"] = rep.extensionValid;
  e["rightFree"] = rep.rightFreenessHolds;
  e["rightGeneratorsFinite"] = rep.rightGeneratorsFinite;
  e["rightGeneratorDegrees"] = rep.rightGeneratorDegrees;
  s["extension"] = e;
  json ideals = json::array();
  for (const auto& ir : rep.ideals) {
    json p;
    p["name"] = ir.name;
    p["verdict"] = verdictName(ir.verdict);
    p["generatorDegrees"] = ir.jMinGenDegrees;
    p["qNewGenerators"] = rowVec(ir.qNewGens, D);
    p["qNewSyzygies"] = rowVec(ir.qNewSyzygies, D);
    p["torOneMatchesQ"] = ir.torOneMatchesQ;
    p["inducedEqual"] = ir.induced.equal;
    if (ir.vanishingChecked) p["vanishingOk"] = ir.vanishingOk;
    p["qFinitelyGenerated"] = ir.qFinitelyGenerated;
    if (!ir.witness.empty()) p["witness"] = ir.witness;
    ideals.push_back(p);
  }
  s["ideals"] = ideals;
  s["overall"] = verdictName(rep.overall);
  s["asserted"] = rep.assertedByUser;
  s["notes"] = rep.notes;
  jline(out, s);
}

void emitTwist(std::ostream& out, OutputFormat fmt, const TwistRunReport& r) {
  const TwistData& T = *r.twist;
  auto aNames = T.spec.aFactor.generatorNames();
  auto bNames = T.spec.bFactor.generatorNames();
  auto conflictText = [&](const TwistConflict& c) {
    std::string s = c.reason;
    if (!c.firstValue.empty() || !c.secondValue.empty())
      s += " [" + c.firstValue + " vs " + c.secondValue + "]";
    return s;
  };
  if (fmt == OutputFormat::Text) {
    out << "twist: " << T.spec.name << " (A = " << T.spec.aFactor.name()
        << ", B = " << T.spec.bFactor.name() << ")\n";
    out << windowLine(T.maxDegree) << "\n";
    out << "extension tables: " << (T.extended ? "complete" : "FAILED") << "\n";
    out << "consistent: " << (T.consistent ? "yes" : "NO") << "\n";
    if (T.conflict) out << "conflict: " << conflictText(*T.conflict) << "\n";
    if (!r.hexagon.empty()) out << "hexagon + units: " << r.hexagon << "\n";
    if (!r.associativity.empty()) out << "associativity: " << r.associativity << "\n";
    if (r.product) {
      textDegreeHeader(out, T.maxDegree);
      textRow(out, "dim product", r.product->dims);
      textRow(out, "expected", r.product->expectedDims);
      out << "tensor dimension identity: " << (r.product->hilbertOk ? "yes" : "NO");
      if (r.product->firstMismatch >= 0)
        out << " (first mismatch at degree " << r.product->firstMismatch << ")";
      out << "\n";
    }
    return;
  }
  json h = header("twist");
  h["name"] = T.spec.name;
  h["aFactor"] = T.spec.aFactor.name();
  h["bFactor"] = T.spec.bFactor.name();
  h["field"] = T.spec.aFactor.field().str();
  jline(out, h);
  if (r.product) {
    for (int n = 0; n <= T.maxDegree; ++n) {
      json d;
      d["degree"] = n;
      d["dim"] = r.product->dims[static_cast<size_t>(n)];
      d["expected"] = r.product->expectedDims[static_cast<size_t>(n)];
      jline(out, d);
    }
  }
  json s;
  s["summary"] = true;
  s["window"] = windowObj(T.maxDegree);
  s["extended"] = T.extended;
  s["consistent"] = T.consistent;
  if (T.conflict) {
    json c;
    c["bWord"] = wordStr(T.conflict->bWord, bNames);
    c["aWord"] = wordStr(T.conflict->aWord, aNames);
    c["reason"] = T.conflict->reason;
    if (!T.conflict->firstValue.empty()) {
      c["firstValue"] = T.conflict->firstValue;
      c["secondValue"] = T.conflict->secondValue;
    }
    s["conflict"] = c;
  }
  if (!r.hexagon.empty()) s["hexagon"] = r.hexagon;
  if (!r.associativity.empty()) s["associativity"] = r.associativity;
  if (r.product) s["tensorDimensionIdentity"] = r.product->hilbertOk;
  jline(out, s);
}

void emitChecks(std::ostream& out, OutputFormat fmt, const std::string& command,
                const std::vector<CheckLine>& checks) {
  bool all = true;
  for (const auto& c : checks) all = all && c.pass;
  if (fmt == OutputFormat::Text) {
    for (const auto& c : checks) {
      out << (c.pass ? "ok   " : "FAIL ") << c.name;
      if (!c.detail.empty()) out << " - " << c.detail;
      out << "\n";
    }
    out << (all ? "all checks passed" : "some checks FAILED") << "\n";
    return;
  }
  json h = header(command);
  jline(out, h);
  for (const auto& c : checks) {
    json j;
    j["check"] = c.name;
    j["pass"] = c.pass;
    if (!c.detail.empty()) j["detail"] = c.detail;
    jline(out, j);
  }
  json s;
  s["summary"] = true;
  s["allPassed"] = all;
  jline(out, s);
}

}  // namespace gcoh
