#include "gcoh/presentation.hpp"

#include <set>

namespace gcoh {

AlgebraPresentation::AlgebraPresentation(std::string name, FieldSpec field,
                                         std::vector<Generator> gens,
                                         std::vector<NcPolynomial> relations)
    : name_(std::move(name)),
      field_(field),
      generators_(std::move(gens)),
      relations_(std::move(relations)) {
  weights_.reserve(generators_.size());
  for (const auto& g : generators_) weights_.push_back(g.weight);
  validate();
}

std::vector<std::string> AlgebraPresentation::generatorNames() const {
  std::vector<std::string> out;
  out.reserve(generators_.size());
  for (const auto& g : generators_) out.push_back(g.name);
  return out;
}

int AlgebraPresentation::generatorIndex(const std::string& name) const {
  for (size_t i = 0; i < generators_.size(); ++i)
    if (generators_[i].name == name) return static_cast<int>(i);
  return -1;
}

AlgebraPresentation AlgebraPresentation::withExtraRelations(
    const std::string& newName, const std::vector<NcPolynomial>& extra) const {
  std::vector<NcPolynomial> rels = relations_;
  rels.insert(rels.end(), extra.begin(), extra.end());
  return AlgebraPresentation(newName, field_, generators_, std::move(rels));
}

void AlgebraPresentation::validate() const {
  if (generators_.empty()) throw Error("presentation '" + name_ + "': no generators");
  std::set<std::string> seen;
  for (const auto& g : generators_) {
    if (g.name.empty()) throw Error("presentation '" + name_ + "': empty generator name");
    if (!seen.insert(g.name).second)
      throw Error("presentation '" + name_ + "': duplicate generator '" + g.name + "'");
    if (g.weight <= 0)
      throw Error("presentation '" + name_ + "': generator '" + g.name +
                  "' has nonpositive weight " + std::to_string(g.weight));
  }
  for (size_t i = 0; i < relations_.size(); ++i) {
    const NcPolynomial& r = relations_[i];
    if (r.isZero())
      throw Error("presentation '" + name_ + "': relation " + std::to_string(i + 1) + " is zero");
    if (!(r.field() == field_))
      throw Error("presentation '" + name_ + "': relation " + std::to_string(i + 1) +
                  " over wrong field");
    int deg = -1;
    if (!r.isHomogeneous(&deg))
      throw Error("presentation '" + name_ + "': relation " + std::to_string(i + 1) +
                  " is not homogeneous");
    if (deg == 0)
      throw Error("presentation '" + name_ + "': relation " + std::to_string(i + 1) +
                  " has degree 0 (quotient would not be connected)");
    for (const auto& [w, c] : r.terms())
      for (int letter : w.letters())
        if (letter < 0 || static_cast<size_t>(letter) >= generators_.size())
          throw Error("presentation '" + name_ + "': relation uses unknown generator index");
  }
}


AlgebraPresentation AlgebraPresentation::withField(const FieldSpec& f) const {
  std::vector<NcPolynomial> rels;
  for (const auto& r : relations_) rels.push_back(changeField(r, f));
  return AlgebraPresentation(name_, f, generators_, rels);
}

}  // namespace gcoh\n