#pragma once

#include <optional>

#include "gcoh/coherence.hpp"

namespace gcoh {

struct WordPairLess {
  bool operator()(const std::pair<Word, Word>& x, const std::pair<Word, Word>& y) const {
    if (x.first != y.first) return deglexLess(x.first, y.first);
    return deglexLess(x.second, y.second);
  }
};

// Homogeneous element of (A (x) B)_n: scalar combination of pairs
// (A-normal word, B-normal word).  Terms are kept sorted and nonzero.
class TensorElem {
 public:
  explicit TensorElem(const FieldSpec& f) : field_(f) {}

  const FieldSpec& field() const { return field_; }
  bool isZero() const { return terms_.empty(); }
  const std::map<std::pair<Word, Word>, Scalar, WordPairLess>& terms() const { return terms_; }

  void add(const Word& a, const Word& b, const Scalar& c);
  void addScaled(const TensorElem& o, const Scalar& c);
  bool operator==(const TensorElem& o) const;
  bool operator!=(const TensorElem& o) const { return !(*this == o); }

  // e.g. "y^2 # 1 + 2*y # z"; "0" when zero
  std::string str(const std::vector<std::string>& aNames,
                  const std::vector<std::string>& bNames) const;

 private:
  FieldSpec field_;
  std::map<std::pair<Word, Word>, Scalar, WordPairLess> terms_;
};

// A twisting map B (x) A -> A (x) B given on generator pairs.  values is keyed
// by (A-generator index, B-generator index); each value is homogeneous of the
// combined generator degree.
struct TwistingMapSpec {
  std::string name;
  AlgebraPresentation aFactor;
  AlgebraPresentation bFactor;
  std::map<std::pair<int, int>, TensorElem> values;

  void validate() const;  // same field, complete value table, degree match
};

struct TwistConflict {
  Word bWord, aWord;  // the basis tensor b (x) a that received two values
  std::string reason;
  std::string firstValue, secondValue;  // printed values; empty for cycles
};

// Extension tables: tau on all pairs of positive-degree normal words with
// total degree <= maxDegree, derived from the generator values by the two
// multiplicativity identities (split the A-word first against a single
// B-letter, then split the B-word).  `extended` is false when the prescribed
// order cannot determine some entry (cyclic dependency); `consistent` is true
// when the tables exist and re-evaluation along every alternative
// decomposition path agrees.
struct TwistData {
  TwistingMapSpec spec;
  RewriteSystem aSys, bSys;
  int maxDegree = 0;
  bool extended = false;
  bool consistent = false;
  std::optional<TwistConflict> conflict;
  std::map<std::pair<Word, Word>, TensorElem, WordPairLess> table;

  // tau of a basis tensor; unit laws applied for degree-0 factors
  TensorElem tau(const Word& b, const Word& a) const;
  // linear extension to a polynomial A-argument given in coordinates
  TensorElem tauVec(const Word& b, int aDeg, const SparseVec& aCoords) const;
};

TwistData extendTwist(const TwistingMapSpec& spec, int maxDegree);

// Product of basis tensors under mu_tau = (mu_A (x) mu_B)(1 (x) tau (x) 1),
// extended bilinearly by the callers.
TensorElem muTau(const TwistData& T, const Word& a1, const Word& b1, const Word& a2,
                 const Word& b2);

// Hexagon identity evaluated on all basis quadruples (b1, b2, a1, a2) of total
// degree <= bound, both ways; first disagreement reported as a conflict.
std::optional<TwistConflict> hexagonCheck(const TwistData& T, int bound);

// Associativity of mu_tau on all basis-tensor triples of total degree
// <= bound; direct evaluation, no rewrite system involved.
std::optional<std::string> associativityCheck(const TwistData& T, int bound);

// The algebra A (x)_tau B: generators of A then B, cross relations
// b*a - mu(tau(b (x) a)) on generator pairs, completed through the window,
// with the tensor-dimension identity checked per degree.
struct TwistedProduct {
  AlgebraPresentation presentation;
  RewriteSystem completed;
  std::vector<long> dims;          // of the completed product
  std::vector<long> expectedDims;  // sum_i dim A_i * dim B_{n-i}
  bool hilbertOk = false;
  int firstMismatch = -1;
};

TwistedProduct buildProduct(const TwistData& T, int maxDegree);

// Pipeline for the one-parameter-family products with a left factor k[x,y],
// right factor k[z], tau(z (x) x) = 0 and
// tau(z (x) y) = alpha*y^2 (x) 1 + beta*y (x) z + gamma*1 (x) z^2:
// build the product, split off the two-sided ideal generated by x, check the
// quotient decomposition (subalgebra on y-bar plus left ideal on z-bar, lift
// z), and run the coherence battery.
struct FamilyOutcome {
  TwistData twist;
  std::optional<TwistedProduct> product;
  std::optional<DecompositionReport> structure;
  std::optional<CoherenceReport> report;
};

FamilyOutcome twistFamily(const Scalar& alpha, const Scalar& beta, const Scalar& gamma,
                              int maxDegree, const CoherenceOptions& opt);

// Same pipeline from a parsed spec; rejects specs outside the family shape
// (two-generator commutative left factor, one-generator right factor,
// tau(z (x) x) = 0, tau(z (x) y) supported on y^2 # 1, y # z, 1 # z^2).
FamilyOutcome twistFamilyFromSpec(const TwistingMapSpec& spec, int maxDegree,
                                      const CoherenceOptions& opt);

}  // namespace gcoh
