#include "gcoh/poly.hpp"

#include <algorithm>

namespace gcoh {

std::string wordStr(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::string out;
  size_t i = 0;
  while (i < w.length()) {
    size_t j = i;
    while (j < w.length() && w[j] == w[i]) ++j;
    if (!out.empty()) out += "*";
    out += names.at(static_cast<size_t>(w[i]));
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

NcPolynomial NcPolynomial::term(const Scalar& c, const Word& w) {
  NcPolynomial p(c.field());
  if (!c.isZero()) p.terms_.emplace_back(w, c);
  return p;
}

NcPolynomial NcPolynomial::unit(const FieldSpec& f) {
  return term(Scalar::one(f), Word::one());
}

const Word& NcPolynomial::leadWord() const {
  if (isZero()) throw Error("polynomial: lead word of zero");
  return terms_.front().first;
}

const Scalar& NcPolynomial::leadCoeff() const {
  if (isZero()) throw Error("polynomial: lead coefficient of zero");
  return terms_.front().second;
}

void NcPolynomial::addTerm(const Word& w, const Scalar& c) {
  if (c.isZero()) return;
  if (!(c.field() == field_))
    throw Error("polynomial: coefficient field mismatch (" + c.field().str() + " into " +
                field_.str() + ")");
  // terms_ descending: find insertion point
  auto it = std::lower_bound(terms_.begin(), terms_.end(), w,
                             [](const Term& t, const Word& key) { return deglexLess(key, t.first); });
  if (it != terms_.end() && it->first == w) {
    it->second += c;
    if (it->second.isZero()) terms_.erase(it);
  } else {
    terms_.insert(it, {w, c});
  }
}

NcPolynomial NcPolynomial::operator+(const NcPolynomial& o) const {
  if (!(field_ == o.field_) && !isZero() && !o.isZero())
    throw Error("polynomial: field mismatch in sum");
  NcPolynomial r = *this;
  for (const auto& [w, c] : o.terms_) r.addTerm(w, c);
  return r;
}

NcPolynomial NcPolynomial::operator-(const NcPolynomial& o) const { return *this + (-o); }

NcPolynomial NcPolynomial::operator-() const {
  NcPolynomial r(field_);
  r.terms_ = terms_;
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

NcPolynomial NcPolynomial::scaled(const Scalar& c) const {
  NcPolynomial r(field_);
  if (c.isZero()) return r;
  r.terms_ = terms_;
  for (auto& [w, k] : r.terms_) k *= c;
  return r;
}

NcPolynomial NcPolynomial::operator*(const NcPolynomial& o) const {
  NcPolynomial r(field_);
  for (const auto& [u, a] : terms_)
    for (const auto& [v, b] : o.terms_) r.addTerm(u * v, a * b);
  return r;
}

bool NcPolynomial::operator==(const NcPolynomial& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].first == o.terms_[i].first) || terms_[i].second != o.terms_[i].second)
      return false;
  return true;
}

int NcPolynomial::degree() const {
  if (isZero()) return -1;
  return terms_.front().first.degree();  // lead has maximal degree under deglex
}

bool NcPolynomial::isHomogeneous(int* degreeOut) const {
  if (isZero()) {
    if (degreeOut) *degreeOut = -1;
    return true;
  }
  int d = terms_.front().first.degree();
  for (const auto& [w, c] : terms_)
    if (w.degree() != d) return false;
  if (degreeOut) *degreeOut = d;
  return true;
}

std::map<int, NcPolynomial> NcPolynomial::gradedComponents() const {
  std::map<int, NcPolynomial> out;
  for (const auto& [w, c] : terms_) {
    auto it = out.find(w.degree());
    if (it == out.end()) it = out.emplace(w.degree(), NcPolynomial(field_)).first;
    it->second.addTerm(w, c);
  }
  return out;
}

std::string NcPolynomial::str(const std::vector<std::string>& names) const {
  if (isZero()) return "0";
  std::string out;
  for (const auto& [w, c] : terms_) {
    std::string cs = c.str();
    bool negative = !cs.empty() && cs[0] == '-';
    std::string mag = negative ? cs.substr(1) : cs;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (w.empty()) {
      out += mag;
    } else {
      if (mag != "1") out += mag + "*";
      out += wordStr(w, names);
    }
  }
  return out;
}


Scalar changeField(const Scalar& c, const FieldSpec& f) {
  if (c.field() == f) return c;
  if (c.field().kind == FieldSpec::Kind::Rationals) {
    const mpq_class& q = c.rationalValue();
    return Scalar::ofFraction(f, q.get_num(), q.get_den());
  }
  return Scalar::ofInt(f, static_cast<long>(c.residue()));
}

NcPolynomial changeField(const NcPolynomial& p, const FieldSpec& f) {
  NcPolynomial out(f);
  for (const auto& [w, c] : p.terms()) out.addTerm(w, changeField(c, f));
  return out;
}

}  // namespace gcoh
