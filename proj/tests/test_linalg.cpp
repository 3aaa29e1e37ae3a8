// Degree-slice spans, sums, intersections and kernels, cross-checked by a
// self-contained dense Gaussian elimination over exact rationals.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <gmpxx.h>

#include <random>
#include <vector>

#include "gcoh/linalg.hpp"

using namespace gcoh;

namespace {

using DenseVec = std::vector<mpq_class>;
using DenseMat = std::vector<DenseVec>;

DenseVec toDense(const SparseVec& v, int dim) {
  DenseVec out(static_cast<size_t>(dim), 0);
  for (const auto& [i, c] : v) out[static_cast<size_t>(i)] = c.rationalValue();
  return out;
}

// row-reduce in place; returns the rank
int denseRank(DenseMat m) {
  size_t rows = m.size();
  if (rows == 0) return 0;
  size_t cols = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[r], m[piv]);
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      mpq_class f = m[i][c] / m[r][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return static_cast<int>(r);
}

SparseVec sparseOf(const std::vector<long>& dense, const FieldSpec& f) {
  SparseVec v;
  for (size_t i = 0; i < dense.size(); ++i)
    if (dense[i] != 0) v.push_back({static_cast<int>(i), Scalar::ofInt(f, dense[i])});
  return v;
}

std::vector<SparseVec> randomVecs(std::mt19937& rng, const FieldSpec& f, int count, int dim) {
  std::vector<SparseVec> out;
  for (int k = 0; k < count; ++k) {
    std::vector<long> dense(static_cast<size_t>(dim), 0);
    for (int i = 0; i < dim; ++i)
      if (rng() % 3 == 0) dense[static_cast<size_t>(i)] = static_cast<long>(rng() % 7) - 3;
    out.push_back(sparseOf(dense, f));
  }
  return out;
}

}  // namespace

TEST_CASE("slice insertion tracks rank like dense elimination") {
  FieldSpec f = FieldSpec::rationals();
  std::mt19937 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    int dim = 2 + static_cast<int>(rng() % 7);
    auto vecs = randomVecs(rng, f, 6, dim);
    DegreeSlice s(dim);
    DenseMat m;
    for (const auto& v : vecs) {
      s.insert(v);
      m.push_back(toDense(v, dim));
    }
    CHECK(s.dim() == denseRank(m));
    CHECK(s.ambientDim() == dim);
    // membership: every inserted vector reduces to zero
    for (const auto& v : vecs) CHECK(s.contains(v));
  }
}

TEST_CASE("reduce returns the residue and contains detects membership") {
  FieldSpec f = FieldSpec::rationals();
  DegreeSlice s(3);
  s.insert(sparseOf({1, 1, 0}, f));
  s.insert(sparseOf({0, 0, 2}, f));
  CHECK(s.dim() == 2);
  CHECK(s.contains(sparseOf({2, 2, 5}, f)));
  CHECK_FALSE(s.contains(sparseOf({1, 0, 0}, f)));
  SparseVec r = s.reduce(sparseOf({1, 0, 0}, f));
  CHECK_FALSE(r.empty());
  // the residue re-reduces to itself and joins the span after insertion
  s.insert(r);
  CHECK(s.contains(sparseOf({1, 0, 0}, f)));
}

TEST_CASE("sum and intersection satisfy the dimension formula") {
  FieldSpec f = FieldSpec::rationals();
  std::mt19937 rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    int dim = 3 + static_cast<int>(rng() % 6);
    DegreeSlice U(dim), V(dim);
    for (const auto& v : randomVecs(rng, f, 1 + static_cast<int>(rng() % 4), dim)) U.insert(v);
    for (const auto& v : randomVecs(rng, f, 1 + static_cast<int>(rng() % 4), dim)) V.insert(v);
    DegreeSlice S = sliceSum(U, V);
    DegreeSlice I = sliceIntersect(U, V);
    CHECK(S.dim() + I.dim() == U.dim() + V.dim());
    // intersection rows live in both spans; sum contains both spans
    for (const auto& r : I.rows()) {
      CHECK(U.contains(r));
      CHECK(V.contains(r));
    }
    for (const auto& r : U.rows()) CHECK(S.contains(r));
    for (const auto& r : V.rows()) CHECK(S.contains(r));
  }
}

TEST_CASE("kernelOfMap: rank-nullity and annihilation, over QQ and GF(5)") {
  for (const FieldSpec& f : {FieldSpec::rationals(), FieldSpec::primeField(5)}) {
    const std::string fieldName = f.str();
    CAPTURE(fieldName);
    std::mt19937 rng(33);
    for (int trial = 0; trial < 20; ++trial) {
      int dom = 2 + static_cast<int>(rng() % 6);
      int tgt = 1 + static_cast<int>(rng() % 6);
      // images of the domain basis vectors
      std::vector<SparseVec> images;
      std::vector<std::vector<long>> dense;
      for (int i = 0; i < dom; ++i) {
        std::vector<long> row(static_cast<size_t>(tgt), 0);
        for (int j = 0; j < tgt; ++j)
          if (rng() % 2) row[static_cast<size_t>(j)] = static_cast<long>(rng() % 5) - 2;
        dense.push_back(row);
        images.push_back(sparseOf(row, f));
      }
      DegreeSlice ker = kernelOfMap(f, dom, tgt, images);
      DegreeSlice image(tgt);
      for (const auto& v : images) image.insert(v);
      CHECK(ker.dim() + image.dim() == dom);  // rank-nullity
      // every kernel row maps to zero
      for (const auto& r : ker.rows()) {
        std::vector<Scalar> acc(static_cast<size_t>(tgt), Scalar::zero(f));
        for (const auto& [i, c] : r)
          for (const auto& [j, d] : images[static_cast<size_t>(i)])
            acc[static_cast<size_t>(j)] = acc[static_cast<size_t>(j)] + c * d;
        for (const auto& a : acc) CHECK(a.isZero());
      }
    }
  }
}

TEST_CASE("complementInSpan picks vectors completing a subspace") {
  FieldSpec f = FieldSpec::rationals();
  std::mt19937 rng(55);
  for (int trial = 0; trial < 25; ++trial) {
    int dim = 3 + static_cast<int>(rng() % 5);
    DegreeSlice big(dim), small(dim);
    auto vecs = randomVecs(rng, f, 5, dim);
    for (const auto& v : vecs) big.insert(v);
    for (size_t i = 0; i + 2 < vecs.size(); ++i) small.insert(vecs[i]);
    auto comp = complementInSpan(big, small);
    DegreeSlice joined = small;
    for (const auto& v : comp) {
      CHECK_FALSE(joined.contains(v));  // each new vector is independent so far
      CHECK(big.contains(v));           // and lives in the big span
      joined.insert(v);
    }
    CHECK(joined.dim() == big.dim());
  }
}

TEST_CASE("spanReduce produces an independent generating subset") {
  FieldSpec f = FieldSpec::rationals();
  std::vector<SparseVec> vs{sparseOf({1, 0, 0}, f), sparseOf({2, 0, 0}, f),
                            sparseOf({0, 1, 0}, f), sparseOf({1, 1, 0}, f)};
  DegreeSlice s = spanReduce(3, vs);
  CHECK(s.dim() == 2);
  CHECK(s.contains(sparseOf({3, 5, 0}, f)));
  CHECK_FALSE(s.contains(sparseOf({0, 0, 1}, f)));
}
