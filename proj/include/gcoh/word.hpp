#pragma once

#include <cstddef>
#include <vector>

#include "gcoh/scalar.hpp"

namespace gcoh {

// Generator weights, indexed by letter.
using WeightVec = std::vector<int>;

// A word in the free monoid on the generators.  Letters are generator indices
// in presentation order, which is also the precedence order of the monomial
// order (index 0 is smallest).  The weighted degree is carried along so that
// concatenation never needs the weight table.
class Word {
 public:
  Word() = default;  // empty word, degree 0

  Word(std::vector<int> letters, int degree)
      : letters_(std::move(letters)), degree_(degree) {}

  static Word one() { return Word(); }
  static Word single(int letter, int weight) { return Word({letter}, weight); }
  static Word fromLetters(const std::vector<int>& letters, const WeightVec& w);

  int degree() const { return degree_; }
  size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  int operator[](size_t i) const { return letters_[i]; }
  const std::vector<int>& letters() const { return letters_; }

  Word operator*(const Word& o) const;
  Word appended(int letter, int weight) const;

  // First count letters / letters from start onward; degrees recomputed from w.
  Word prefix(size_t count, const WeightVec& w) const;
  Word suffix(size_t start, const WeightVec& w) const;

  // Smallest position where f occurs as a factor, or npos.
  static constexpr size_t npos = static_cast<size_t>(-1);
  size_t findFactor(const Word& f) const;
  bool endsWith(const Word& f) const;

  bool operator==(const Word& o) const { return letters_ == o.letters_; }
  bool operator!=(const Word& o) const { return !(*this == o); }

 private:
  std::vector<int> letters_;
  int degree_ = 0;
};

// Degree-lexicographic order: total degree first, then left-to-right letter
// comparison.  Total, multiplicative on both sides, finitely many words per
// degree (all weights are positive).
bool deglexLess(const Word& a, const Word& b);

struct WordHash {
  size_t operator()(const Word& w) const {
    size_t h = 1469598103934665603ull;
    for (int c : w.letters()) {
      h ^= static_cast<size_t>(c) + 0x9e3779b9;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace gcoh
