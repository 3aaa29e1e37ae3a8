#include "gcoh/extension.hpp"

namespace gcoh {

int trailingWindowStart(int maxDegree) { return maxDegree - maxDegree / 2 + 1; }

SparseVec FreeExtensionData::applyProj(int degree, const SparseVec& aCoords) const {
  const auto& table = proj.at(static_cast<size_t>(degree));
  SparseVec out;
  for (const auto& [i, c] : aCoords) axpy(out, c, table.at(static_cast<size_t>(i)));
  return out;
}

FreeExtensionData buildExtension(const RewriteSystem& A, std::vector<NcPolynomial> igens,
                                 int maxDegree, bool checkPairs) {
  if (maxDegree > A.maxDegree()) throw Error("buildExtension: window exceeded");
  FreeExtensionData ext;
  ext.A = &A;
  ext.maxDegree = maxDegree;

  GradedIdeal I = makeIdeal(A, Side::TwoSided, igens);
  ext.idealGenerators = I.generators;
  ext.ISlices = idealSlices(A, I, maxDegree);

  AlgebraPresentation presB = A.presentation().withExtraRelations(
      A.presentation().name() + "/I", ext.idealGenerators);
  ext.B = RewriteSystem::complete(presB, maxDegree);

  // projection tables and the kernel identification
  ext.kernelMatchesIdeal = true;
  ext.proj.resize(static_cast<size_t>(maxDegree) + 1);
  for (int n = 0; n <= maxDegree; ++n) {
    auto& table = ext.proj[static_cast<size_t>(n)];
    table.reserve(static_cast<size_t>(A.dim(n)));
    for (const Word& w : A.basis(n)) table.push_back(ext.B.mulWords(Word::one(), w));
    if (A.dim(n) != static_cast<long>(ext.ISlices.at(n).dim()) + ext.B.dim(n))
      ext.kernelMatchesIdeal = false;
    for (const auto& row : ext.ISlices.at(n).rows()) {
      if (!vecIsZero(ext.applyProj(n, row))) ext.kernelMatchesIdeal = false;
    }
  }

  // B-normal words must be A-normal; everything downstream lifts via identity
  for (int n = 0; n <= maxDegree && ext.kernelMatchesIdeal; ++n) {
    for (const Word& w : ext.B.basis(n)) {
      if (!A.isNormal(w))
        throw Error("buildExtension: quotient normal word is not ambient-normal");
    }
  }

  if (checkPairs) {
    for (int i = 0; i <= maxDegree && ext.projMultiplicative; ++i) {
      for (int j = 0; i + j <= maxDegree && ext.projMultiplicative; ++j) {
        for (const Word& u : A.basis(i)) {
          for (const Word& v : A.basis(j)) {
            SparseVec lhs = ext.applyProj(i + j, A.mulWords(u, v));
            SparseVec rhs = ext.B.mulWords(u, v);
            if (lhs != rhs) {
              ext.projMultiplicative = false;
              break;
            }
          }
          if (!ext.projMultiplicative) break;
        }
      }
    }
  }

  // right-module structure of I
  auto& rf = ext.rightFree;
  rf.rightGenerators = minimalGenerators(A, Side::Right, ext.ISlices, maxDegree);
  rf.dimensionIdentity = true;
  for (int n = 0; n <= maxDegree; ++n) {
    long expected = 0;
    for (const auto& g : rf.rightGenerators)
      if (n - g.degree >= 0) expected += A.dim(n - g.degree);
    if (expected != ext.ISlices.at(n).dim()) {
      rf.dimensionIdentity = false;
      if (rf.firstMismatch < 0) rf.firstMismatch = n;
    }
  }
  rf.finiteInWindow = true;
  for (const auto& g : rf.rightGenerators)
    if (g.degree >= trailingWindowStart(maxDegree)) rf.finiteInWindow = false;

  return ext;
}

}  // namespace gcoh
