#pragma once

#include <unordered_map>

#include "gcoh/linalg.hpp"
#include "gcoh/presentation.hpp"

namespace gcoh {

// lead ≡ lower, every word of lower strictly deglex-smaller than lead.
struct RewriteRule {
  Word lead;
  NcPolynomial lower;
};

// Degree-truncated confluent rewriting system for a presentation.  All
// ambiguities whose overlap word has degree <= maxDegree are resolved, so
// normal forms are canonical for every polynomial supported in degrees
// <= maxDegree; nothing is claimed beyond the window.  Once built, the system
// is immutable (degree slices of the normal-word basis are precomputed).
class RewriteSystem {
 public:
  static RewriteSystem complete(const AlgebraPresentation& pres, int maxDegree);

  const AlgebraPresentation& presentation() const { return pres_; }
  int maxDegree() const { return maxDegree_; }
  const std::vector<RewriteRule>& rules() const { return rules_; }
  // input relations that reduced to zero during completion (diagnostics)
  int droppedInputs() const { return droppedInputs_; }
  // rules found by ambiguity resolution, beyond the input relations
  int derivedRuleCount() const { return derivedRules_; }

  // Canonical representative modulo the relation ideal; requires every term
  // degree <= maxDegree.
  NcPolynomial normalForm(const NcPolynomial& p) const;
  bool isNormal(const Word& w) const;

  // Normal words of the given degree in increasing deglex order.
  const std::vector<Word>& basis(int degree) const;
  long dim(int degree) const { return static_cast<long>(basis(degree).size()); }
  std::vector<long> hilbert(int upTo) const;

  // Coordinates w.r.t. basis(degree); -1 when w is not a normal word of that
  // degree.
  int indexOf(int degree, const Word& w) const;
  SparseVec toVec(const NcPolynomial& p, int degree) const;
  NcPolynomial fromVec(int degree, const SparseVec& v) const;
  // NF(a*b) in coordinates at degree deg(a)+deg(b)
  SparseVec mulWords(const Word& a, const Word& b) const;
  // NF(w*p) or NF(p*w) of a vector at fromDegree, as a vector at
  // fromDegree + deg(w); onLeft selects the side w multiplies on.
  SparseVec mulWordVec(const Word& w, int fromDegree, const SparseVec& v, bool onLeft) const;
  SparseVec mulVecPoly(int fromDegree, const SparseVec& v, const NcPolynomial& p,
                       bool polyOnRight) const;

 private:
  AlgebraPresentation pres_;
  int maxDegree_ = 0;
  std::vector<RewriteRule> rules_;  // sorted by (degree, lead)
  int droppedInputs_ = 0;
  int derivedRules_ = 0;
  std::vector<std::vector<Word>> basis_;
  std::vector<std::unordered_map<Word, int, WordHash>> index_;

  void buildBasis();
  NcPolynomial reduceFull(NcPolynomial p) const;
};

}  // namespace gcoh
