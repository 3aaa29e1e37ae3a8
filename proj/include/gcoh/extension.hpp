#pragma once

#include "gcoh/module.hpp"

namespace gcoh {

// degrees n with trailingWindowStart(D) <= n <= D form the trailing half of
// the window; growth heuristics look only at this range
int trailingWindowStart(int maxDegree);

struct RightFreenessReport {
  std::vector<MinGen> rightGenerators;  // minimal right-module generators of I
  bool dimensionIdentity = false;       // dim I_n == sum_j dim A_{n-d_j} for n <= D
  int firstMismatch = -1;
  bool finiteInWindow = false;  // no new right generator in the trailing half-window
};

// The data of a surjection pi: A ->> B = A/I with I a two-sided ideal,
// verified degree by degree through the window:
//   dim A_n = dim I_n + dim B_n,  I_n <= ker(pi_n),  pi multiplicative on
//   basis pairs.  B-normal words are A-normal, which realizes the canonical
//   vector-space splitting A_n = I_n (+) B_n used everywhere downstream.
struct FreeExtensionData {
  const RewriteSystem* A = nullptr;
  RewriteSystem B;
  std::vector<NcPolynomial> idealGenerators;  // two-sided generators, A-normal forms
  std::map<int, DegreeSlice> ISlices;
  std::vector<std::vector<SparseVec>> proj;  // [n][aBasisIndex] -> B_n coordinates
  RightFreenessReport rightFree;
  bool kernelMatchesIdeal = false;
  bool projMultiplicative = true;
  int maxDegree = 0;

  SparseVec applyProj(int degree, const SparseVec& aCoords) const;
};

// Builds B = A/(igens), projection tables, the kernel identification and the
// right-freeness report through maxDegree.  checkPairs additionally verifies
// multiplicativity of pi on all basis pairs in the window (quadratic in slice
// sizes; on by default).
FreeExtensionData buildExtension(const RewriteSystem& A, std::vector<NcPolynomial> igens,
                                 int maxDegree, bool checkPairs = true);

}  // namespace gcoh
