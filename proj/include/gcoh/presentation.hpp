#pragma once

#include <string>
#include <vector>

#include "gcoh/poly.hpp"

namespace gcoh {

struct Generator {
  std::string name;
  int weight = 1;
};

// A connected graded algebra presented by weighted generators and homogeneous
// relations.  Generator listing order doubles as the precedence order of the
// monomial order (earlier = smaller).
class AlgebraPresentation {
 public:
  AlgebraPresentation() = default;
  AlgebraPresentation(std::string name, FieldSpec field, std::vector<Generator> gens,
                      std::vector<NcPolynomial> relations);

  const std::string& name() const { return name_; }
  const FieldSpec& field() const { return field_; }
  const std::vector<Generator>& generators() const { return generators_; }
  const std::vector<NcPolynomial>& relations() const { return relations_; }
  const WeightVec& weights() const { return weights_; }
  std::vector<std::string> generatorNames() const;

  size_t generatorCount() const { return generators_.size(); }
  int weightOf(int letter) const { return weights_.at(static_cast<size_t>(letter)); }
  // -1 when absent
  int generatorIndex(const std::string& name) const;

  // Same generators and field, extra relations appended; used for quotients.
  AlgebraPresentation withExtraRelations(const std::string& newName,
                                         const std::vector<NcPolynomial>& extra) const;

  // Same generators and relations with coefficients moved into f.
  AlgebraPresentation withField(const FieldSpec& f) const;

  // Throws Error on duplicate names, nonpositive weights, inhomogeneous or
  // degree-zero relations, or coefficient field mismatches.
  void validate() const;

 private:
  std::string name_;
  FieldSpec field_;
  std::vector<Generator> generators_;
  std::vector<NcPolynomial> relations_;
  WeightVec weights_;
};

}  // namespace gcoh
