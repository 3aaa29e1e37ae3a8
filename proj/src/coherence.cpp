#include "gcoh/coherence.hpp"

#include <algorithm>
#include <sstream>

namespace gcoh {

std::string verdictName(Verdict v) {
  switch (v) {
    case Verdict::WitnessedFailure: return "witnessed-failure";
    case Verdict::EvidencePositive: return "evidence-positive";
    case Verdict::Inconclusive: return "inconclusive";
  }
  throw Error("unknown verdict");
}

namespace {

bool vecsEqual(const FieldSpec& f, SparseVec a, const SparseVec& b) {
  axpy(a, Scalar::ofInt(f, -1), b);
  return vecIsZero(a);
}

// Per-component projection of a vector in (+)A(-shifts) coordinates to
// (+)B(-shifts) coordinates.  Entries of v are grouped by component (offsets
// are increasing), each block is pushed through pi, and the blocks are
// reassembled with the B-side offsets.
SparseVec projectBlocks(const FreeExtensionData& ext, const std::vector<int>& shifts, int n,
                        const SparseVec& v) {
  const RewriteSystem& A = *ext.A;
  FreeModule F{shifts};
  std::vector<SparseVec> blocks(shifts.size());
  for (const auto& [col, c] : v) {
    auto [comp, inBlock] = F.locate(A, col, n);
    blocks[comp].push_back({inBlock, c});
  }
  SparseVec out;
  for (size_t j = 0; j < shifts.size(); ++j) {
    int m = n - shifts[j];
    if (m < 0) continue;
    SparseVec pb = ext.applyProj(m, blocks[j]);
    int off = F.offset(ext.B, j, n);
    for (const auto& [col, c] : pb) out.push_back({col + off, c});
  }
  return out;
}

// dim_k Tor_q^A(B, M)_n for q = 0..qMax from a free resolution of M encoded in
// a Betti table with hBound >= qMax + 1.  The maps of B (x)_A F_* are the
// resolution differentials with every block projected to B; homology dimensions
// come from rank-nullity per degree.
std::vector<std::map<int, long>> torFromBetti(const FreeExtensionData& ext, const BettiTable& bt,
                                              int qMax, int upTo) {
  if (bt.hBound < qMax + 1) throw Error("tor: resolution not deep enough");
  const RewriteSystem& B = ext.B;

  // imageRank[q][n] = rank of (1 (x) d_q) in degree n, for q = 1..qMax+1.
  // d_q has one column per generator at level q, written in the coordinates of
  // the previous free module (shifts levelShifts[q]).
  std::vector<std::map<int, long>> imageRank(static_cast<size_t>(qMax) + 2);
  for (int q = 1; q <= qMax + 1; ++q) {
    const auto& cols = bt.levelGenerators.at(static_cast<size_t>(q));
    const auto& prevShifts = bt.levelShifts.at(static_cast<size_t>(q));
    FreeModule FBprev{prevShifts};
    std::vector<std::pair<int, SparseVec>> proj;  // (degree, projected column)
    proj.reserve(cols.size());
    for (const auto& g : cols)
      proj.push_back({g.degree, projectBlocks(ext, prevShifts, g.degree, g.vec)});
    for (int n = 0; n <= upTo; ++n) {
      DegreeSlice image(static_cast<int>(FBprev.dim(B, n)));
      for (const auto& [d, pcol] : proj) {
        if (n - d < 0) continue;
        for (const Word& u : B.basis(n - d)) image.insert(freeMulWord(B, FBprev, u, d, pcol));
      }
      imageRank[static_cast<size_t>(q)][n] = image.dim();
    }
  }

  std::vector<std::map<int, long>> tor(static_cast<size_t>(qMax) + 1);
  for (int q = 0; q <= qMax; ++q) {
    FreeModule Hq{bt.levelShifts.at(static_cast<size_t>(q) + 1)};
    for (int n = 0; n <= upTo; ++n) {
      long dn = Hq.dim(B, n);
      long kernel;
      if (q == 0)
        kernel = dn;  // Tor_0 is the full cokernel of d_1
      else
        kernel = dn - imageRank[static_cast<size_t>(q)].at(n);
      tor[static_cast<size_t>(q)][n] = kernel - imageRank[static_cast<size_t>(q) + 1].at(n);
    }
  }
  return tor;
}

}  // namespace

QData computeQ(const FreeExtensionData& ext, const GradedIdeal& J, int upTo) {
  if (J.side != Side::Left) throw Error("computeQ: J must be a left ideal");
  const RewriteSystem& A = *ext.A;
  if (upTo > ext.maxDegree) throw Error("computeQ: window exceeded");
  const FieldSpec& f = A.presentation().field();
  const WeightVec& wt = A.presentation().weights();

  QData Q;
  Q.upTo = upTo;
  auto jSlices = idealSlices(A, J, upTo);

  for (int n = 0; n <= upTo; ++n) {
    Q.icapj.emplace(n, sliceIntersect(ext.ISlices.at(n), jSlices.at(n)));
    // I*J = sum_k I*g_k because I absorbs A on the right
    DegreeSlice prod(static_cast<int>(A.dim(n)));
    for (const auto& g : J.generators) {
      int dg = 0;
      g.isHomogeneous(&dg);
      if (n - dg < 0) continue;
      for (const auto& row : ext.ISlices.at(n - dg).rows())
        prod.insert(A.mulVecPoly(n - dg, row, g, /*polyOnRight=*/true));
    }
    Q.ij.emplace(n, std::move(prod));
    Q.qDims[n] = Q.icapj.at(n).dim() - Q.ij.at(n).dim();
  }

  // minimal generators: what degree n adds beyond I*J and the action on lower
  // degrees (one closure step suffices, the intersection is a left ideal)
  for (int n = 0; n <= upTo; ++n) {
    DegreeSlice denom = Q.ij.at(n);
    for (size_t g = 0; g < wt.size(); ++g) {
      int m = n - wt[g];
      if (m < 0) continue;
      Word gw = Word::single(static_cast<int>(g), wt[g]);
      for (const auto& row : Q.icapj.at(m).rows())
        denom.insert(A.mulWordVec(gw, m, row, /*onLeft=*/true));
    }
    auto news = complementInSpan(Q.icapj.at(n), denom);
    Q.newGenCounts[n] = static_cast<long>(news.size());
    for (auto& v : news) {
      Q.generators.push_back({n, std::move(v)});
      Q.coverShifts.push_back(n);
    }
  }

  // first syzygies: kernel of (+)B(-d_i) -> (I cap J)/(I*J), e_i -> [gen_i].
  // The map factors through B because I*(I cap J) lies in I*J.
  const RewriteSystem& B = ext.B;
  FreeModule F{Q.coverShifts};
  std::map<int, DegreeSlice> syz;
  for (int n = 0; n <= upTo; ++n) {
    std::vector<SparseVec> images;
    for (const auto& g : Q.generators) {
      int m = n - g.degree;
      if (m < 0) continue;
      for (const Word& u : B.basis(m))
        images.push_back(A.mulWordVec(u, g.degree, g.vec, /*onLeft=*/true));
    }
    int dn = static_cast<int>(F.dim(B, n));
    syz.emplace(n, kernelInto(f, dn, Q.ij.at(n), images));
  }
  auto syzGens = minimalGeneratorsFM(B, F, syz, upTo);
  for (int n = 0; n <= upTo; ++n) Q.newSyzCounts[n] = 0;
  for (const auto& s : syzGens) ++Q.newSyzCounts[s.degree];
  Q.syzygies = std::move(syzGens);
  return Q;
}

std::vector<std::map<int, long>> torBAJ(const FreeExtensionData& ext, const GradedIdeal& J,
                                        int qMax, int upTo) {
  if (J.side != Side::Left) throw Error("tor: J must be a left ideal");
  const RewriteSystem& A = *ext.A;
  BettiTable bt = bettiTable(A, quotientByIdeal(A, J), qMax + 1, upTo);
  return torFromBetti(ext, bt, qMax, upTo);
}

InducedQuotientData inducedQuotient(const FreeExtensionData& ext, const GradedIdeal& J,
                                    int upTo) {
  if (J.side != Side::Left) throw Error("induced quotient: J must be a left ideal");
  const RewriteSystem& A = *ext.A;
  const RewriteSystem& B = ext.B;
  InducedQuotientData out;

  // tensor side: cokernel of B (x)_A J -> B, spanned by pi(a*g_k) over the
  // ambient basis
  std::vector<std::pair<int, SparseVec>> gens;  // (degree, A-coordinates)
  for (const auto& g : J.generators) {
    int d = 0;
    g.isHomogeneous(&d);
    gens.push_back({d, A.toVec(g, d)});
  }
  for (int n = 0; n <= upTo; ++n) {
    DegreeSlice image(static_cast<int>(B.dim(n)));
    for (const auto& [d, gv] : gens) {
      if (n - d < 0) continue;
      for (const Word& a : A.basis(n - d))
        image.insert(ext.applyProj(n, A.mulWordVec(a, d, gv, /*onLeft=*/true)));
    }
    out.tensorDims[n] = B.dim(n) - image.dim();
  }

  // quotient side: B modulo the left ideal generated by the projections
  std::vector<NcPolynomial> projGens;
  for (const auto& [d, gv] : gens) {
    NcPolynomial p = B.fromVec(d, ext.applyProj(d, gv));
    if (!p.isZero()) projGens.push_back(p);
  }
  if (projGens.empty()) {
    for (int n = 0; n <= upTo; ++n) out.quotientDims[n] = B.dim(n);
  } else {
    auto BJ = makeIdeal(B, Side::Left, projGens);
    auto slices = idealSlices(B, BJ, upTo);
    for (int n = 0; n <= upTo; ++n) out.quotientDims[n] = B.dim(n) - slices.at(n).dim();
  }
  out.equal = out.tensorDims == out.quotientDims;
  return out;
}

DecompositionReport checkDecomposition(const FreeExtensionData& ext, const DecompositionInput& in, int upTo) {
  const RewriteSystem& A = *ext.A;
  const RewriteSystem& B = ext.B;
  const FieldSpec& f = A.presentation().field();
  if (upTo > ext.maxDegree) throw Error("theorem check: window exceeded");
  if (in.lifts.size() != in.idealGens.size())
    throw Error("theorem check: need one lift per ideal generator");

  auto normalize = [&](const RewriteSystem& R, const NcPolynomial& p, const char* what) {
    NcPolynomial nf = R.normalForm(p);
    int d = 0;
    if (nf.isZero() || !nf.isHomogeneous(&d))
      throw Error(std::string("theorem check: ") + what + " must be homogeneous and nonzero");
    return std::pair<NcPolynomial, int>(nf, d);
  };

  std::vector<std::pair<NcPolynomial, int>> cGens, dGens, lifts;
  for (const auto& p : in.subalgebraGens) cGens.push_back(normalize(B, p, "subalgebra generator"));
  for (const auto& p : in.idealGens) dGens.push_back(normalize(B, p, "ideal generator"));
  for (const auto& p : in.lifts) lifts.push_back(normalize(A, p, "lift"));

  DecompositionReport R;
  R.upTo = upTo;

  // subalgebra slices: C_0 = <1>, C_n = sum_c C_{n - deg c} * c
  std::vector<DegreeSlice> cs;
  for (int n = 0; n <= upTo; ++n) {
    DegreeSlice s(static_cast<int>(B.dim(n)));
    if (n == 0) {
      s.insert({{0, Scalar::one(f)}});
    } else {
      for (const auto& [c, dc] : cGens) {
        int m = n - dc;
        if (m < 0) continue;
        for (const auto& row : cs[static_cast<size_t>(m)].rows())
          s.insert(B.mulVecPoly(m, row, c, /*polyOnRight=*/true));
      }
    }
    cs.push_back(std::move(s));
  }

  std::vector<NcPolynomial> dPolys;
  for (const auto& [p, d] : dGens) dPolys.push_back(p);
  auto dSlices = idealSlices(B, makeIdeal(B, Side::Left, dPolys), upTo);

  R.coversAll = true;
  R.direct = true;
  for (int n = 0; n <= upTo; ++n) {
    long db = B.dim(n);
    long dc = cs[static_cast<size_t>(n)].dim();
    long dd = dSlices.at(n).dim();
    long ds = sliceSum(cs[static_cast<size_t>(n)], dSlices.at(n)).dim();
    long di = sliceIntersect(cs[static_cast<size_t>(n)], dSlices.at(n)).dim();
    R.dimB.push_back(db);
    R.dimC.push_back(dc);
    R.dimD.push_back(dd);
    R.dimSum.push_back(ds);
    R.dimIntersect.push_back(di);
    if (ds != db) {
      R.coversAll = false;
      std::ostringstream os;
      os << "degree " << n << ": C + D has dimension " << ds << " but the quotient has " << db;
      R.failures.push_back(os.str());
    }
    if (di != 0) {
      R.direct = false;
      std::ostringstream os;
      os << "degree " << n << ": C and D overlap in dimension " << di;
      R.failures.push_back(os.str());
    }
  }

  R.subalgebraClosed = true;
  for (int m = 1; m <= upTo && R.subalgebraClosed; ++m) {
    for (int n = 1; m + n <= upTo && R.subalgebraClosed; ++n) {
      for (const auto& lrow : cs[static_cast<size_t>(m)].rows()) {
        NcPolynomial lp = B.fromVec(m, lrow);
        for (const auto& rrow : cs[static_cast<size_t>(n)].rows()) {
          SparseVec prod = B.mulVecPoly(n, rrow, lp, /*polyOnRight=*/false);
          if (!cs[static_cast<size_t>(m + n)].contains(prod)) {
            R.subalgebraClosed = false;
            std::ostringstream os;
            os << "degrees " << m << "+" << n << ": subalgebra slice product escapes the slice";
            R.failures.push_back(os.str());
            break;
          }
        }
        if (!R.subalgebraClosed) break;
      }
    }
  }

  R.liftsMatch = true;
  for (size_t i = 0; i < lifts.size(); ++i) {
    const auto& [lift, dl] = lifts[i];
    const auto& [gen, dg] = dGens[i];
    bool ok = dl == dg &&
              vecsEqual(f, ext.applyProj(dl, A.toVec(lift, dl)), B.toVec(gen, dg));
    if (!ok) {
      R.liftsMatch = false;
      std::ostringstream os;
      os << "lift " << i << " does not project onto its ideal generator";
      R.failures.push_back(os.str());
    }
  }

  R.productsVanish = true;
  for (size_t i = 0; i < lifts.size(); ++i) {
    const auto& [lift, dl] = lifts[i];
    for (const auto& rg : ext.rightFree.rightGenerators) {
      if (dl + rg.degree > upTo) continue;
      SparseVec prod = A.mulVecPoly(rg.degree, rg.vec, lift, /*polyOnRight=*/false);
      if (!vecIsZero(prod)) {
        R.productsVanish = false;
        std::ostringstream os;
        os << "lift " << i << " times a degree-" << rg.degree
           << " right generator of the kernel is nonzero";
        R.failures.push_back(os.str());
      }
    }
  }
  return R;
}

namespace {

IdealReport analyzeIdeal(const FreeExtensionData& ext, const std::string& name,
                         const GradedIdeal& J, const CoherenceOptions& opt) {
  const RewriteSystem& A = *ext.A;
  const int D = opt.maxDegree;
  IdealReport ir;
  ir.name = name;

  auto jSlices = idealSlices(A, J, D);
  for (const auto& g : minimalGenerators(A, Side::Left, jSlices, D))
    ir.jMinGenDegrees.push_back(g.degree);

  QData Q = computeQ(ext, J, D);
  ir.qDims = Q.qDims;
  ir.qNewGens = Q.newGenCounts;
  ir.qNewSyzygies = Q.newSyzCounts;

  const int qMax = opt.checkVanishing ? 2 : 1;
  BettiTable bt = bettiTable(A, quotientByIdeal(A, J), qMax + 1, D);
  auto tor = torFromBetti(ext, bt, qMax, D);
  ir.tor1Dims = tor[1];
  ir.torOneMatchesQ = tor[1] == Q.qDims;
  ir.vanishingChecked = opt.checkVanishing;
  if (opt.checkVanishing) {
    ir.tor2Dims = tor[2];
    ir.vanishingOk = std::all_of(tor[2].begin(), tor[2].end(),
                                 [](const auto& e) { return e.second == 0; });
  }
  for (int n = 0; n <= D; ++n) ir.directSyzygyRow[n] = bt.at(2, n);

  ir.induced = inducedQuotient(ext, J, D);

  const int T = trailingWindowStart(D);
  bool genGrowth = true, syzGrowth = true, anyTrailingSyz = false, anyTrailingGen = false;
  for (int n = T; n <= D; ++n) {
    if (ir.qNewGens.at(n) == 0) genGrowth = false;
    else anyTrailingGen = true;
    if (ir.qNewSyzygies.at(n) == 0) syzGrowth = false;
    else anyTrailingSyz = true;
  }
  ir.qFinitelyGenerated = !anyTrailingGen;

  const bool crossOk =
      ir.torOneMatchesQ && ir.induced.equal && (!ir.vanishingChecked || ir.vanishingOk);
  std::ostringstream os;
  if (crossOk && ir.qFinitelyGenerated && syzGrowth) {
    ir.verdict = Verdict::WitnessedFailure;
    os << "the overlap module (I cap J)/(IJ) needs a new relation in every degree " << T << ".."
       << D << "; its presentation keeps growing with the window";
    ir.witness = os.str();
  } else if (crossOk && genGrowth) {
    ir.verdict = Verdict::WitnessedFailure;
    os << "the overlap module (I cap J)/(IJ) needs a new generator in every degree " << T << ".."
       << D;
    ir.witness = os.str();
  } else if (crossOk && ir.qFinitelyGenerated && !anyTrailingSyz) {
    ir.verdict = Verdict::EvidencePositive;
  } else {
    ir.verdict = Verdict::Inconclusive;
  }
  return ir;
}

}  // namespace

CoherenceReport coherenceReport(const FreeExtensionData& ext,
                                const std::vector<std::pair<std::string, GradedIdeal>>& battery,
                                const CoherenceOptions& opt) {
  if (opt.maxDegree > ext.maxDegree) throw Error("coherence report: window exceeded");
  CoherenceReport R;
  R.algebraName = ext.A->presentation().name();
  R.fieldName = ext.A->presentation().field().str();
  R.maxDegree = opt.maxDegree;
  for (int n = 0; n <= opt.maxDegree; ++n) {
    R.dimA.push_back(ext.A->dim(n));
    R.dimI.push_back(ext.ISlices.count(n) ? ext.ISlices.at(n).dim() : 0);
    R.dimB.push_back(ext.B.dim(n));
  }
  R.extensionValid = ext.kernelMatchesIdeal && ext.projMultiplicative;
  R.rightFreenessHolds = ext.rightFree.dimensionIdentity;
  R.rightGeneratorsFinite = ext.rightFree.finiteInWindow;
  for (const auto& g : ext.rightFree.rightGenerators) R.rightGeneratorDegrees.push_back(g.degree);
  R.assertedByUser = opt.assertedByUser;

  if (!R.rightGeneratorsFinite)
    R.notes.push_back(
        "the kernel keeps acquiring right-module generators through the trailing window; "
        "the free-extension hypothesis is not established at this degree bound");
  if (!opt.checkVanishing)
    R.notes.push_back("higher Tor vanishing checks were skipped on request");

  for (const auto& [name, J] : battery) R.ideals.push_back(analyzeIdeal(ext, name, J, opt));

  bool anyWitness = false, allPositive = !R.ideals.empty();
  for (const auto& ir : R.ideals) {
    if (ir.verdict == Verdict::WitnessedFailure) anyWitness = true;
    if (ir.verdict != Verdict::EvidencePositive) allPositive = false;
  }
  if (anyWitness)
    R.overall = Verdict::WitnessedFailure;
  else if (allPositive && R.extensionValid && R.rightFreenessHolds && R.rightGeneratorsFinite)
    R.overall = Verdict::EvidencePositive;
  else
    R.overall = Verdict::Inconclusive;
  return R;
}

std::vector<std::pair<std::string, GradedIdeal>> defaultBattery(const RewriteSystem& A,
                                                                size_t cap) {
  const FieldSpec& f = A.presentation().field();
  std::vector<std::string> names = A.presentation().generatorNames();
  std::vector<std::pair<std::string, GradedIdeal>> out;

  int d = 1;
  while (d <= A.maxDegree() && A.dim(d) == 0) ++d;
  if (d > A.maxDegree()) return out;
  const auto& words = A.basis(d);

  auto add = [&](const std::string& name, std::vector<NcPolynomial> gens) {
    if (out.size() < cap) out.push_back({name, makeIdeal(A, Side::Left, std::move(gens))});
  };

  for (const Word& w : words) add("(" + wordStr(w, names) + ")", {NcPolynomial::term(Scalar::one(f), w)});
  for (size_t i = 0; i < words.size(); ++i)
    for (size_t j = i + 1; j < words.size(); ++j) {
      NcPolynomial p = NcPolynomial::term(Scalar::one(f), words[i]);
      p.addTerm(words[j], Scalar::one(f));
      add("(" + wordStr(words[i], names) + "+" + wordStr(words[j], names) + ")", {p});
    }
  for (size_t i = 0; i < words.size(); ++i)
    for (size_t j = i + 1; j < words.size(); ++j)
      add("(" + wordStr(words[i], names) + ", " + wordStr(words[j], names) + ")",
          {NcPolynomial::term(Scalar::one(f), words[i]),
           NcPolynomial::term(Scalar::one(f), words[j])});
  return out;
}

}  // namespace gcoh
