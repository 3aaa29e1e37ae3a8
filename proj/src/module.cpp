#include "gcoh/module.hpp"

#include <algorithm>

namespace gcoh {

std::string sideName(Side s) {
  switch (s) {
    case Side::Left: return "left";
    case Side::Right: return "right";
    default: return "two-sided";
  }
}

GradedIdeal makeIdeal(const RewriteSystem& A, Side side, std::vector<NcPolynomial> gens) {
  GradedIdeal I;
  I.side = side;
  for (auto& g : gens) {
    NcPolynomial nf = A.normalForm(g);
    if (nf.isZero()) continue;
    int deg = -1;
    if (!nf.isHomogeneous(&deg)) throw Error("ideal: generator is not homogeneous");
    if (deg == 0) throw Error("ideal: degree-0 generator would give the unit ideal");
    I.generators.push_back(std::move(nf));
  }
  std::sort(I.generators.begin(), I.generators.end(),
            [](const NcPolynomial& a, const NcPolynomial& b) {
              if (a.degree() != b.degree()) return a.degree() < b.degree();
              return deglexLess(a.leadWord(), b.leadWord());
            });
  return I;
}

namespace {

// g*row and/or row*g for every generator letter g, one degree step up
std::vector<SparseVec> oneStepProducts(const RewriteSystem& A, Side side,
                                       const std::map<int, DegreeSlice>& slices, int n) {
  std::vector<SparseVec> out;
  const WeightVec& wt = A.presentation().weights();
  for (size_t g = 0; g < wt.size(); ++g) {
    int m = n - wt[g];
    if (m < 0) continue;
    auto it = slices.find(m);
    if (it == slices.end()) continue;
    Word gw = Word::single(static_cast<int>(g), wt[g]);
    for (const auto& row : it->second.rows()) {
      if (side == Side::Left || side == Side::TwoSided)
        out.push_back(A.mulWordVec(gw, m, row, true));
      if (side == Side::Right || side == Side::TwoSided)
        out.push_back(A.mulWordVec(gw, m, row, false));
    }
  }
  return out;
}

DegreeSlice fullSlice(int dim, const FieldSpec& f) {
  DegreeSlice s(dim);
  for (int i = 0; i < dim; ++i) s.insert({{i, Scalar::one(f)}});
  return s;
}

}  // namespace

std::map<int, DegreeSlice> idealSlices(const RewriteSystem& A, const GradedIdeal& I, int upTo) {
  if (upTo > A.maxDegree()) throw Error("idealSlices: window exceeded");
  std::map<int, std::vector<SparseVec>> genVecs;
  for (const auto& g : I.generators)
    genVecs[g.degree()].push_back(A.toVec(g, g.degree()));
  std::map<int, DegreeSlice> slices;
  for (int n = 0; n <= upTo; ++n) {
    std::vector<SparseVec> rows = oneStepProducts(A, I.side, slices, n);
    if (auto it = genVecs.find(n); it != genVecs.end())
      rows.insert(rows.end(), it->second.begin(), it->second.end());
    slices.emplace(n, spanReduce(static_cast<int>(A.dim(n)), rows));
  }
  return slices;
}

std::vector<MinGen> minimalGenerators(const RewriteSystem& A, Side side,
                                      const std::map<int, DegreeSlice>& slices, int upTo) {
  std::vector<MinGen> out;
  for (int n = 0; n <= upTo; ++n) {
    auto it = slices.find(n);
    if (it == slices.end() || it->second.dim() == 0) continue;
    DegreeSlice step = spanReduce(it->second.ambientDim(), oneStepProducts(A, side, slices, n));
    for (auto& v : complementInSpan(it->second, step)) out.push_back({n, std::move(v)});
  }
  return out;
}

std::map<int, DegreeSlice> annihilatorSlices(const RewriteSystem& A, const NcPolynomial& p,
                                             Side side, int upTo) {
  NcPolynomial nf = A.normalForm(p);
  int pd = -1;
  if (!nf.isHomogeneous(&pd)) throw Error("annihilator: element is not homogeneous");
  std::map<int, DegreeSlice> out;
  if (nf.isZero()) {
    // everything annihilates zero
    for (int n = 0; n <= upTo; ++n)
      out.emplace(n, fullSlice(static_cast<int>(A.dim(n)), A.presentation().field()));
    return out;
  }
  if (upTo + pd > A.maxDegree())
    throw Error("annihilator: needs completion through degree " + std::to_string(upTo + pd) +
                ", window is " + std::to_string(A.maxDegree()));
  const FieldSpec& f = A.presentation().field();
  for (int n = 0; n <= upTo; ++n) {
    int dn = static_cast<int>(A.dim(n));
    int dt = static_cast<int>(A.dim(n + pd));
    auto imagesFor = [&](bool elemOnRight) {
      std::vector<SparseVec> images;
      images.reserve(static_cast<size_t>(dn));
      for (int i = 0; i < dn; ++i) {
        SparseVec unit{{i, Scalar::one(f)}};
        images.push_back(A.mulVecPoly(n, unit, nf, elemOnRight));
      }
      return images;
    };
    if (side == Side::Left) {
      out.emplace(n, kernelOfMap(f, dn, dt, imagesFor(true)));
    } else if (side == Side::Right) {
      out.emplace(n, kernelOfMap(f, dn, dt, imagesFor(false)));
    } else {
      DegreeSlice l = kernelOfMap(f, dn, dt, imagesFor(true));
      DegreeSlice r = kernelOfMap(f, dn, dt, imagesFor(false));
      out.emplace(n, sliceIntersect(l, r));
    }
  }
  return out;
}

long FreeModule::dim(const RewriteSystem& A, int n) const {
  long total = 0;
  for (int d : shifts)
    if (n - d >= 0) total += A.dim(n - d);
  return total;
}

int FreeModule::offset(const RewriteSystem& A, size_t comp, int n) const {
  int off = 0;
  for (size_t j = 0; j < comp; ++j)
    if (n - shifts[j] >= 0) off += static_cast<int>(A.dim(n - shifts[j]));
  return off;
}

std::pair<size_t, int> FreeModule::locate(const RewriteSystem& A, int col, int n) const {
  int off = 0;
  for (size_t j = 0; j < shifts.size(); ++j) {
    int d = n - shifts[j] >= 0 ? static_cast<int>(A.dim(n - shifts[j])) : 0;
    if (col < off + d) return {j, col - off};
    off += d;
  }
  throw Error("free module: column out of range");
}

SparseVec freeMulWord(const RewriteSystem& A, const FreeModule& F, const Word& w, int fromDeg,
                      const SparseVec& v) {
  int toDeg = fromDeg + w.degree();
  SparseVec out;
  size_t comp = 0;
  size_t i = 0;
  while (i < v.size()) {
    // gather the entries of one component block
    while (comp < F.shifts.size()) {
      int blockDim = fromDeg - F.shifts[comp] >= 0
                         ? static_cast<int>(A.dim(fromDeg - F.shifts[comp]))
                         : 0;
      if (v[i].first < F.offset(A, comp, fromDeg) + blockDim) break;
      ++comp;
    }
    if (comp >= F.shifts.size()) throw Error("free module: column out of range");
    int off = F.offset(A, comp, fromDeg);
    SparseVec local;
    while (i < v.size()) {
      int blockDim = static_cast<int>(A.dim(fromDeg - F.shifts[comp]));
      if (v[i].first >= off + blockDim) break;
      local.emplace_back(v[i].first - off, v[i].second);
      ++i;
    }
    SparseVec prod = A.mulWordVec(w, fromDeg - F.shifts[comp], local, true);
    axpy(out, Scalar::one(A.presentation().field()),
         vecShifted(prod, F.offset(A, comp, toDeg)));
    ++comp;
  }
  return out;
}

namespace {

std::vector<SparseVec> oneStepProductsFM(const RewriteSystem& A, const FreeModule& F,
                                         const std::map<int, DegreeSlice>& slices, int n) {
  std::vector<SparseVec> out;
  const WeightVec& wt = A.presentation().weights();
  for (size_t g = 0; g < wt.size(); ++g) {
    int m = n - wt[g];
    if (m < 0) continue;
    auto it = slices.find(m);
    if (it == slices.end()) continue;
    Word gw = Word::single(static_cast<int>(g), wt[g]);
    for (const auto& row : it->second.rows())
      out.push_back(freeMulWord(A, F, gw, m, row));
  }
  return out;
}

}  // namespace

std::map<int, DegreeSlice> submoduleSlices(const RewriteSystem& A, const FreeModule& F,
                                           const std::vector<MinGen>& gens, int upTo) {
  std::map<int, std::vector<SparseVec>> genVecs;
  for (const auto& g : gens) genVecs[g.degree].push_back(g.vec);
  std::map<int, DegreeSlice> slices;
  for (int n = 0; n <= upTo; ++n) {
    std::vector<SparseVec> rows = oneStepProductsFM(A, F, slices, n);
    if (auto it = genVecs.find(n); it != genVecs.end())
      rows.insert(rows.end(), it->second.begin(), it->second.end());
    slices.emplace(n, spanReduce(static_cast<int>(F.dim(A, n)), rows));
  }
  return slices;
}

std::vector<MinGen> minimalGeneratorsFM(const RewriteSystem& A, const FreeModule& F,
                                        const std::map<int, DegreeSlice>& slices, int upTo) {
  std::vector<MinGen> out;
  for (int n = 0; n <= upTo; ++n) {
    auto it = slices.find(n);
    if (it == slices.end() || it->second.dim() == 0) continue;
    DegreeSlice step =
        spanReduce(it->second.ambientDim(), oneStepProductsFM(A, F, slices, n));
    for (auto& v : complementInSpan(it->second, step)) out.push_back({n, std::move(v)});
  }
  return out;
}

ModulePresentation quotientByIdeal(const RewriteSystem& A, const GradedIdeal& J) {
  if (J.side != Side::Left) throw Error("quotientByIdeal: left ideal required");
  ModulePresentation M;
  M.generatorDegrees = {0};
  for (const auto& g : J.generators)
    M.relations.push_back({g.degree(), A.toVec(g, g.degree())});
  return M;
}

SyzygyData syzygiesOfIdeal(const RewriteSystem& A, const GradedIdeal& J, int upTo) {
  if (J.side != Side::Left) throw Error("syzygies: left ideal required");
  SyzygyData out;
  auto slices = idealSlices(A, J, upTo);
  out.idealGenerators = minimalGenerators(A, Side::Left, slices, upTo);
  FreeModule F;
  for (const auto& g : out.idealGenerators) F.shifts.push_back(g.degree);
  out.coverShifts = F.shifts;
  const FieldSpec& f = A.presentation().field();
  for (int n = 0; n <= upTo; ++n) {
    std::vector<SparseVec> images;
    for (size_t i = 0; i < out.idealGenerators.size(); ++i) {
      int m = n - out.idealGenerators[i].degree;
      if (m < 0) continue;
      for (const Word& w : A.basis(m))
        images.push_back(A.mulWordVec(w, out.idealGenerators[i].degree,
                                      out.idealGenerators[i].vec, true));
    }
    out.kernelSlices.emplace(
        n, kernelOfMap(f, static_cast<int>(F.dim(A, n)), static_cast<int>(A.dim(n)), images));
  }
  out.syzygyGenerators = minimalGeneratorsFM(A, F, out.kernelSlices, upTo);
  return out;
}

long BettiTable::at(int i, int n) const {
  auto it = entries.find({i, n});
  return it == entries.end() ? 0 : it->second;
}

BettiTable bettiTable(const RewriteSystem& A, const ModulePresentation& M, int hBound,
                      int maxDegree) {
  if (maxDegree > A.maxDegree()) throw Error("bettiTable: window exceeded");
  BettiTable T;
  T.hBound = hBound;
  T.maxDegree = maxDegree;
  const FieldSpec& f = A.presentation().field();

  FreeModule F0{M.generatorDegrees};
  auto R = submoduleSlices(A, F0, M.relations, maxDegree);

  // level 0: minimal generators of M = F0/R
  std::vector<MinGen> gens;
  for (int n = 0; n <= maxDegree; ++n) {
    int dn = static_cast<int>(F0.dim(A, n));
    if (dn == 0) continue;
    DegreeSlice full = [&] {
      DegreeSlice s(dn);
      for (int i = 0; i < dn; ++i) s.insert({{i, Scalar::one(f)}});
      return s;
    }();
    std::vector<SparseVec> step;
    const WeightVec& wt = A.presentation().weights();
    for (size_t g = 0; g < wt.size(); ++g) {
      int m = n - wt[g];
      if (m < 0) continue;
      int dm = static_cast<int>(F0.dim(A, m));
      Word gw = Word::single(static_cast<int>(g), wt[g]);
      for (int i = 0; i < dm; ++i)
        step.push_back(freeMulWord(A, F0, gw, m, {{i, Scalar::one(f)}}));
    }
    for (const auto& row : R.at(n).rows()) step.push_back(row);
    DegreeSlice S = spanReduce(dn, step);
    auto news = complementInSpan(full, S);
    if (!news.empty()) T.entries[{0, n}] = static_cast<long>(news.size());
    for (auto& v : news) gens.push_back({n, std::move(v)});
  }
  T.levelShifts.push_back(F0.shifts);
  T.levelGenerators.push_back(gens);

  FreeModule Fprev = F0;
  const std::map<int, DegreeSlice>* denom = &R;
  for (int level = 1; level <= hBound; ++level) {
    const auto& covers = T.levelGenerators.back();
    FreeModule Fcur;
    for (const auto& g : covers) Fcur.shifts.push_back(g.degree);
    std::map<int, DegreeSlice> K;
    for (int n = 0; n <= maxDegree; ++n) {
      std::vector<SparseVec> images;
      for (const auto& g : covers) {
        int m = n - g.degree;
        if (m < 0) continue;
        for (const Word& w : A.basis(m))
          images.push_back(freeMulWord(A, Fprev, w, g.degree, g.vec));
      }
      int dn = static_cast<int>(Fcur.dim(A, n));
      if (denom)
        K.emplace(n, kernelInto(f, dn, denom->at(n), images));
      else
        K.emplace(n, kernelOfMap(f, dn, static_cast<int>(Fprev.dim(A, n)), images));
    }
    auto news = minimalGeneratorsFM(A, Fcur, K, maxDegree);
    for (const auto& g : news) ++T.entries[{level, g.degree}];
    T.levelShifts.push_back(Fcur.shifts);
    T.levelGenerators.push_back(news);
    Fprev = Fcur;
    denom = nullptr;  // higher kernels live inside a free module, no quotient
  }
  return T;
}

}  // namespace gcoh
