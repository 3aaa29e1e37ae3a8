#include "gcoh/word.hpp"

#include <algorithm>

namespace gcoh {

Word Word::fromLetters(const std::vector<int>& letters, const WeightVec& w) {
  int deg = 0;
  for (int c : letters) {
    if (c < 0 || static_cast<size_t>(c) >= w.size()) throw Error("word: letter out of range");
    deg += w[c];
  }
  return Word(letters, deg);
}

Word Word::operator*(const Word& o) const {
  std::vector<int> ls;
  ls.reserve(letters_.size() + o.letters_.size());
  ls.insert(ls.end(), letters_.begin(), letters_.end());
  ls.insert(ls.end(), o.letters_.begin(), o.letters_.end());
  return Word(std::move(ls), degree_ + o.degree_);
}

Word Word::appended(int letter, int weight) const {
  std::vector<int> ls = letters_;
  ls.push_back(letter);
  return Word(std::move(ls), degree_ + weight);
}

Word Word::prefix(size_t count, const WeightVec& w) const {
  std::vector<int> ls(letters_.begin(), letters_.begin() + count);
  return fromLetters(ls, w);
}

Word Word::suffix(size_t start, const WeightVec& w) const {
  std::vector<int> ls(letters_.begin() + start, letters_.end());
  return fromLetters(ls, w);
}

size_t Word::findFactor(const Word& f) const {
  if (f.length() == 0) return 0;
  if (f.length() > length()) return npos;
  for (size_t pos = 0; pos + f.length() <= length(); ++pos) {
    if (std::equal(f.letters_.begin(), f.letters_.end(), letters_.begin() + pos)) return pos;
  }
  return npos;
}

bool Word::endsWith(const Word& f) const {
  if (f.length() > length()) return false;
  return std::equal(f.letters_.begin(), f.letters_.end(),
                    letters_.end() - static_cast<long>(f.length()));
}

bool deglexLess(const Word& a, const Word& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  // equal degree: words cannot be proper prefixes of each other, so the
  // lexicographic scan decides (ties only for equal words)
  return std::lexicographical_compare(a.letters().begin(), a.letters().end(),
                                      b.letters().begin(), b.letters().end());
}

}  // namespace gcoh
