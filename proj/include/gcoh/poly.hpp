#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gcoh/word.hpp"

namespace gcoh {

std::string wordStr(const Word& w, const std::vector<std::string>& names);

// Element of the free algebra: finite scalar combination of words.  Terms are
// kept sorted with the deglex-largest word first and never carry zero
// coefficients.  The field is fixed at construction (zero polynomials included)
// and all coefficients live in it.
class NcPolynomial {
 public:
  using Term = std::pair<Word, Scalar>;

  explicit NcPolynomial(const FieldSpec& f = FieldSpec::rationals()) : field_(f) {}

  static NcPolynomial zero(const FieldSpec& f) { return NcPolynomial(f); }
  static NcPolynomial term(const Scalar& c, const Word& w);
  static NcPolynomial unit(const FieldSpec& f);

  const FieldSpec& field() const { return field_; }
  bool isZero() const { return terms_.empty(); }
  size_t termCount() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  const Word& leadWord() const;
  const Scalar& leadCoeff() const;

  // Adds c*w, merging and dropping a resulting zero.
  void addTerm(const Word& w, const Scalar& c);

  NcPolynomial operator+(const NcPolynomial&) const;
  NcPolynomial operator-(const NcPolynomial&) const;
  NcPolynomial operator-() const;
  NcPolynomial operator*(const NcPolynomial&) const;
  NcPolynomial scaled(const Scalar& c) const;

  bool operator==(const NcPolynomial& o) const;
  bool operator!=(const NcPolynomial& o) const { return !(*this == o); }

  // -1 for the zero polynomial, else the maximum term degree.
  int degree() const;
  bool isHomogeneous(int* degreeOut = nullptr) const;
  std::map<int, NcPolynomial> gradedComponents() const;

  std::string str(const std::vector<std::string>& names) const;

 private:
  FieldSpec field_;
  std::vector<Term> terms_;  // descending deglex, nonzero coefficients
};

// Coefficient-wise move into another field: rationals reduce into GF(p)
// (throws when a denominator vanishes mod p); prime-field residues lift to
// their integer representatives.
Scalar changeField(const Scalar& c, const FieldSpec& f);
NcPolynomial changeField(const NcPolynomial& p, const FieldSpec& f);

}  // namespace gcoh
