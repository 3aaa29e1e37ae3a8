#pragma once

#include <optional>
#include <vector>

#include "gcoh/scalar.hpp"

namespace gcoh {

// Vector in a fixed-dimension coordinate space; entries sorted by index,
// coefficients nonzero.
using SparseVec = std::vector<std::pair<int, Scalar>>;

bool vecIsZero(const SparseVec& v);
// v += c*w
void axpy(SparseVec& v, const Scalar& c, const SparseVec& w);
SparseVec vecScaled(const SparseVec& v, const Scalar& c);
std::optional<Scalar> vecEntry(const SparseVec& v, int col);
// entries shifted by offset columns
SparseVec vecShifted(const SparseVec& v, int offset);

// A subspace of k^ambientDim held in reduced row echelon form: pivot columns
// strictly increasing, pivot coefficients 1, pivot columns cleared in every
// other row.  Output is deterministic: it only depends on the subspace.
class DegreeSlice {
 public:
  explicit DegreeSlice(int ambientDim) : ambient_(ambientDim) {}

  int ambientDim() const { return ambient_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  const std::vector<SparseVec>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

  // Reduces v against the rows; true and rank grows when a nonzero residue
  // remains.
  bool insert(SparseVec v);
  // Residue of v modulo the row space (not normalized).
  SparseVec reduce(SparseVec v) const;
  bool contains(const SparseVec& v) const { return vecIsZero(reduce(v)); }

 private:
  int ambient_;
  std::vector<SparseVec> rows_;
  std::vector<int> pivots_;  // parallel to rows_, strictly increasing
};

DegreeSlice spanReduce(int ambientDim, const std::vector<SparseVec>& vectors);
DegreeSlice sliceSum(const DegreeSlice& a, const DegreeSlice& b);
// Zassenhaus: RREF of [[a|a],[b|0]], rows with zero left half.
DegreeSlice sliceIntersect(const DegreeSlice& a, const DegreeSlice& b);

// Kernel of the map whose matrix rows are the images of the domain basis
// vectors, as an RREF subspace of the domain.
DegreeSlice kernelOfMap(const FieldSpec& field, int domainDim, int targetDim,
                        const std::vector<SparseVec>& images);
// {x : (image of x) lies in denominator} — kernel of the induced map into the
// quotient target/denominator.
DegreeSlice kernelInto(const FieldSpec& field, int domainDim, const DegreeSlice& denominator,
                       const std::vector<SparseVec>& images);

// Vectors from span(v) forming a basis of span(v) modulo w, in v's row order,
// each reduced against w and the previously chosen ones.
std::vector<SparseVec> complementInSpan(const DegreeSlice& v, const DegreeSlice& w);

}  // namespace gcoh
