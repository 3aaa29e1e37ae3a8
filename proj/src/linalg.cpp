#include "gcoh/linalg.hpp"

#include <algorithm>

namespace gcoh {

bool vecIsZero(const SparseVec& v) { return v.empty(); }

void axpy(SparseVec& v, const Scalar& c, const SparseVec& w) {
  if (c.isZero() || w.empty()) return;
  SparseVec out;
  out.reserve(v.size() + w.size());
  size_t i = 0, j = 0;
  while (i < v.size() || j < w.size()) {
    if (j == w.size() || (i < v.size() && v[i].first < w[j].first)) {
      out.push_back(v[i++]);
    } else if (i == v.size() || w[j].first < v[i].first) {
      out.emplace_back(w[j].first, c * w[j].second);
      ++j;
    } else {
      Scalar s = v[i].second + c * w[j].second;
      if (!s.isZero()) out.emplace_back(v[i].first, s);
      ++i;
      ++j;
    }
  }
  v = std::move(out);
}

SparseVec vecScaled(const SparseVec& v, const Scalar& c) {
  if (c.isZero()) return {};
  SparseVec out = v;
  for (auto& [i, s] : out) s *= c;
  return out;
}

std::optional<Scalar> vecEntry(const SparseVec& v, int col) {
  auto it = std::lower_bound(v.begin(), v.end(), col,
                             [](const auto& e, int c) { return e.first < c; });
  if (it != v.end() && it->first == col) return it->second;
  return std::nullopt;
}

SparseVec vecShifted(const SparseVec& v, int offset) {
  SparseVec out = v;
  for (auto& [i, s] : out) i += offset;
  return out;
}

SparseVec DegreeSlice::reduce(SparseVec v) const {
  // each elimination only touches columns >= the eliminated pivot, so a single
  // forward sweep suffices
  size_t i = 0;
  while (i < v.size()) {
    int col = v[i].first;
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), col);
    if (it != pivots_.end() && *it == col) {
      size_t row = static_cast<size_t>(it - pivots_.begin());
      Scalar c = -v[i].second;
      axpy(v, c, rows_[row]);
      // entry at col cancelled; v[i] now holds a later column (or is gone)
    } else {
      ++i;
    }
  }
  return v;
}

bool DegreeSlice::insert(SparseVec v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;
  int pivot = v.front().first;
  if (pivot >= ambient_) throw Error("slice: column index out of range");
  Scalar inv = v.front().second.inverse();
  for (auto& [i, s] : v) s *= inv;
  // clear the new pivot column from existing rows
  for (size_t r = 0; r < rows_.size(); ++r) {
    auto e = vecEntry(rows_[r], pivot);
    if (e) axpy(rows_[r], -*e, v);
  }
  auto it = std::lower_bound(pivots_.begin(), pivots_.end(), pivot);
  size_t pos = static_cast<size_t>(it - pivots_.begin());
  pivots_.insert(it, pivot);
  rows_.insert(rows_.begin() + static_cast<long>(pos), std::move(v));
  return true;
}

DegreeSlice spanReduce(int ambientDim, const std::vector<SparseVec>& vectors) {
  DegreeSlice s(ambientDim);
  for (const auto& v : vectors) s.insert(v);
  return s;
}

DegreeSlice sliceSum(const DegreeSlice& a, const DegreeSlice& b) {
  DegreeSlice s(a.ambientDim());
  for (const auto& r : a.rows()) s.insert(r);
  for (const auto& r : b.rows()) s.insert(r);
  return s;
}

DegreeSlice sliceIntersect(const DegreeSlice& a, const DegreeSlice& b) {
  if (a.ambientDim() != b.ambientDim()) throw Error("intersect: ambient dimension mismatch");
  int n = a.ambientDim();
  DegreeSlice work(2 * n);
  for (const auto& r : a.rows()) {
    SparseVec v = r;
    SparseVec tail = vecShifted(r, n);
    v.insert(v.end(), tail.begin(), tail.end());
    work.insert(std::move(v));
  }
  for (const auto& r : b.rows()) work.insert(r);
  DegreeSlice out(n);
  for (size_t i = 0; i < work.rows().size(); ++i) {
    if (work.pivots()[i] >= n) out.insert(vecShifted(work.rows()[i], -n));
  }
  return out;
}

namespace {

DegreeSlice kernelCommon(const FieldSpec& field, int domainDim, int targetDim,
                         const DegreeSlice* denominator, const std::vector<SparseVec>& images) {
  if (static_cast<int>(images.size()) != domainDim)
    throw Error("kernel: one image per domain basis vector required");
  DegreeSlice work(targetDim + domainDim);
  if (denominator) {
    for (const auto& r : denominator->rows()) work.insert(r);
  }
  for (int i = 0; i < domainDim; ++i) {
    SparseVec v = images[i];
    v.emplace_back(targetDim + i, Scalar::one(field));
    work.insert(std::move(v));
  }
  DegreeSlice out(domainDim);
  for (size_t i = 0; i < work.rows().size(); ++i) {
    if (work.pivots()[i] >= targetDim) out.insert(vecShifted(work.rows()[i], -targetDim));
  }
  return out;
}

}  // namespace

DegreeSlice kernelOfMap(const FieldSpec& field, int domainDim, int targetDim,
                        const std::vector<SparseVec>& images) {
  return kernelCommon(field, domainDim, targetDim, nullptr, images);
}

DegreeSlice kernelInto(const FieldSpec& field, int domainDim, const DegreeSlice& denominator,
                       const std::vector<SparseVec>& images) {
  return kernelCommon(field, domainDim, denominator.ambientDim(), &denominator, images);
}

std::vector<SparseVec> complementInSpan(const DegreeSlice& v, const DegreeSlice& w) {
  if (v.ambientDim() != w.ambientDim()) throw Error("complement: ambient dimension mismatch");
  DegreeSlice grow = w;
  std::vector<SparseVec> out;
  for (const auto& r : v.rows()) {
    SparseVec red = grow.reduce(r);
    if (!red.empty()) {
      Scalar inv = red.front().second.inverse();
      for (auto& [i, s] : red) s *= inv;
      out.push_back(red);
      grow.insert(red);
    }
  }
  return out;
}

}  // namespace gcoh
