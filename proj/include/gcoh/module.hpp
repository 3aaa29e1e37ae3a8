#pragma once

#include <map>

#include "gcoh/rewrite.hpp"

namespace gcoh {

enum class Side { Left, Right, TwoSided };

std::string sideName(Side s);

// A homogeneous element of a graded piece, in ambient coordinates.
struct MinGen {
  int degree = 0;
  SparseVec vec;
};

struct GradedIdeal {
  Side side = Side::Left;
  std::vector<NcPolynomial> generators;  // homogeneous, nonzero after normal form
};

// Normalizes generators (normal form, drop zeros, sort by degree then lead);
// throws on inhomogeneous or degree-0 generators.
GradedIdeal makeIdeal(const RewriteSystem& A, Side side, std::vector<NcPolynomial> gens);

// Slices I_0..I_upTo by one-degree closure steps:
// I_n = sum_g g*I_{n-w_g} (and/or mirrored) + span(generators of degree n).
std::map<int, DegreeSlice> idealSlices(const RewriteSystem& A, const GradedIdeal& I, int upTo);

// New generators per degree: complement of the one-step products inside the
// slice.  Works for any slice family that is closed under the side action.
std::vector<MinGen> minimalGenerators(const RewriteSystem& A, Side side,
                                      const std::map<int, DegreeSlice>& slices, int upTo);

// side Left: {a : a*p = 0}; Right: {a : p*a = 0}; TwoSided: both.
// Needs completion through upTo + deg p.
std::map<int, DegreeSlice> annihilatorSlices(const RewriteSystem& A, const NcPolynomial& p,
                                             Side side, int upTo);

// Graded free left module F = (+)_i A(-shift_i); slice coordinates are the
// component blocks in order, each block in basis order.
struct FreeModule {
  std::vector<int> shifts;

  size_t rank() const { return shifts.size(); }
  long dim(const RewriteSystem& A, int n) const;
  int offset(const RewriteSystem& A, size_t comp, int n) const;
  // block decomposition of a coordinate: component and in-block index
  std::pair<size_t, int> locate(const RewriteSystem& A, int col, int n) const;
};

// w * v componentwise (left action); v at fromDeg, result at fromDeg + deg w.
SparseVec freeMulWord(const RewriteSystem& A, const FreeModule& F, const Word& w, int fromDeg,
                      const SparseVec& v);

// Left-submodule slices generated by the given rows.
std::map<int, DegreeSlice> submoduleSlices(const RewriteSystem& A, const FreeModule& F,
                                           const std::vector<MinGen>& gens, int upTo);

// New generators per degree of a submodule of F with known slices.
std::vector<MinGen> minimalGeneratorsFM(const RewriteSystem& A, const FreeModule& F,
                                        const std::map<int, DegreeSlice>& slices, int upTo);

// M = coker( (+)A(-relationDegrees) -> (+)A(-generatorDegrees) ), left module.
struct ModulePresentation {
  std::vector<int> generatorDegrees;
  std::vector<MinGen> relations;  // rows in the generator free module's coords
};

ModulePresentation quotientByIdeal(const RewriteSystem& A, const GradedIdeal& J);

// Kernel of the cover (+)A(-d_i) -> A of an ideal's minimal generators.
struct SyzygyData {
  std::vector<MinGen> idealGenerators;
  std::vector<int> coverShifts;
  std::map<int, DegreeSlice> kernelSlices;
  std::vector<MinGen> syzygyGenerators;
};
SyzygyData syzygiesOfIdeal(const RewriteSystem& A, const GradedIdeal& J, int upTo);

// Graded Betti numbers through homological degree hBound, internal degree
// <= maxDegree, computed from a minimal resolution built by iterated minimal
// covers.  entries[(i, n)] = number of degree-n generators of the i-th
// resolution step; value absent means 0.  Entries are exact within the window
// because every kernel/cover computation at internal degree n only consumes
// data of internal degree <= n.
struct BettiTable {
  int hBound = 0;
  int maxDegree = 0;
  std::map<std::pair<int, int>, long> entries;
  // minimal generators found at each level (level 0: generators of M itself)
  std::vector<std::vector<MinGen>> levelGenerators;
  std::vector<std::vector<int>> levelShifts;  // shifts of F_i

  long at(int i, int n) const;
};

BettiTable bettiTable(const RewriteSystem& A, const ModulePresentation& M, int hBound,
                      int maxDegree);

}  // namespace gcoh
