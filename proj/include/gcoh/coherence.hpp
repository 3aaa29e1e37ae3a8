#pragma once

#include "gcoh/extension.hpp"

namespace gcoh {

enum class Verdict { WitnessedFailure, EvidencePositive, Inconclusive };
std::string verdictName(Verdict v);

// Q = (I cap J) / (I*J) as a graded left B-module, with generators and first
// syzygies extracted by minimal covers.  All vectors live in ambient A
// coordinates (generators) or in (+)B(-d_i) coordinates (syzygies).
struct QData {
  int upTo = 0;
  std::map<int, long> qDims;
  std::map<int, DegreeSlice> icapj;
  std::map<int, DegreeSlice> ij;
  std::vector<MinGen> generators;
  std::map<int, long> newGenCounts;
  std::vector<int> coverShifts;
  std::vector<MinGen> syzygies;
  std::map<int, long> newSyzCounts;
};

QData computeQ(const FreeExtensionData& ext, const GradedIdeal& J, int upTo);

// dim_k Tor_q^A(B, A/J)_n for q = 0..qMax, from a minimal A-free resolution
// of A/J tensored over A with B.  Row q of the result is the degree->dim map.
std::vector<std::map<int, long>> torBAJ(const FreeExtensionData& ext, const GradedIdeal& J,
                                        int qMax, int upTo);

// Two computations of the same module: B tensor_A (A/J) as a cokernel via the
// right action, and B/(B.J) via left-ideal slices of the projected generators.
struct InducedQuotientData {
  std::map<int, long> tensorDims;
  std::map<int, long> quotientDims;
  bool equal = false;
};
InducedQuotientData inducedQuotient(const FreeExtensionData& ext, const GradedIdeal& J, int upTo);

// Structure check: B = C + D with C the subalgebra generated by subalgebraGens,
// D the left ideal generated by idealGens, and each lift z_i satisfying
// z_i * g = 0 in A for every right generator g of I.
struct DecompositionInput {
  std::vector<NcPolynomial> subalgebraGens;  // elements of B
  std::vector<NcPolynomial> idealGens;       // elements of B
  std::vector<NcPolynomial> lifts;           // elements of A, parallel to idealGens
};

struct DecompositionReport {
  int upTo = 0;
  std::vector<long> dimB, dimC, dimD, dimSum, dimIntersect;
  bool coversAll = false;         // C_n + D_n = B_n in every checked degree
  bool direct = false;            // C_n cap D_n = 0 in every checked degree
  bool subalgebraClosed = false;  // products of C-slice rows stay in C
  bool liftsMatch = false;        // pi(lift_i) equals the i-th ideal generator
  bool productsVanish = false;    // lift_i * (right generators of I) = 0 in A
  std::vector<std::string> failures;

  bool passed() const {
    return coversAll && direct && subalgebraClosed && liftsMatch && productsVanish;
  }
};

DecompositionReport checkDecomposition(const FreeExtensionData& ext, const DecompositionInput& in, int upTo);

struct IdealReport {
  std::string name;
  std::vector<int> jMinGenDegrees;
  std::map<int, long> qDims;
  std::map<int, long> qNewGens;
  std::map<int, long> qNewSyzygies;
  std::map<int, long> tor1Dims;
  bool torOneMatchesQ = false;
  InducedQuotientData induced;
  std::map<int, long> tor2Dims;  // Tor_2(B, A/J): must vanish when I is right-free
  bool vanishingChecked = false;
  bool vanishingOk = false;
  std::map<int, long> directSyzygyRow;  // Tor_2 over the ground field of A/J
  bool qFinitelyGenerated = false;
  Verdict verdict = Verdict::Inconclusive;
  std::string witness;
};

struct CoherenceOptions {
  int maxDegree = 10;
  bool checkVanishing = true;
  std::vector<std::string> assertedByUser;  // hypothesis flags taken on trust
};

struct CoherenceReport {
  std::string algebraName;
  std::string fieldName;
  int maxDegree = 0;
  bool extensionValid = false;
  bool rightFreenessHolds = false;
  bool rightGeneratorsFinite = false;
  std::vector<int> rightGeneratorDegrees;
  std::vector<long> dimA, dimI, dimB;  // indexed by degree 0..maxDegree
  std::vector<IdealReport> ideals;
  Verdict overall = Verdict::Inconclusive;
  std::vector<std::string> assertedByUser;
  std::vector<std::string> notes;
};

CoherenceReport coherenceReport(const FreeExtensionData& ext,
                                const std::vector<std::pair<std::string, GradedIdeal>>& battery,
                                const CoherenceOptions& opt);

// Principal left ideals on the degree-1 normal words, principal ideals on
// pairwise sums, then two-generator combinations, capped.
std::vector<std::pair<std::string, GradedIdeal>> defaultBattery(const RewriteSystem& A,
                                                                size_t cap = 12);

}  // namespace gcoh
