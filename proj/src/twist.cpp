#include "gcoh/twist.hpp"

#include <functional>
#include <set>
#include <sstream>

namespace gcoh {

void TensorElem::add(const Word& a, const Word& b, const Scalar& c) {
  if (c.isZero()) return;
  auto key = std::make_pair(a, b);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), c);
  } else {
    it->second += c;
    if (it->second.isZero()) terms_.erase(it);
  }
}

void TensorElem::addScaled(const TensorElem& o, const Scalar& c) {
  for (const auto& [key, s] : o.terms_) add(key.first, key.second, s * c);
}

bool TensorElem::operator==(const TensorElem& o) const {
  if (!(field_ == o.field_) || terms_.size() != o.terms_.size()) return false;
  auto it = o.terms_.begin();
  for (const auto& [key, s] : terms_) {
    if (!(key.first == it->first.first) || !(key.second == it->first.second) ||
        s != it->second)
      return false;
    ++it;
  }
  return true;
}

std::string TensorElem::str(const std::vector<std::string>& aNames,
                            const std::vector<std::string>& bNames) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [key, s] : terms_) {
    std::string cs = s.str();
    bool neg = !cs.empty() && cs[0] == '-';
    if (neg) cs = cs.substr(1);
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (cs != "1") out += cs + "*";
    out += wordStr(key.first, aNames) + " # " + wordStr(key.second, bNames);
  }
  return out;
}

void TwistingMapSpec::validate() const {
  aFactor.validate();
  bFactor.validate();
  if (!(aFactor.field() == bFactor.field()))
    throw Error("twist spec: the factors must share a coefficient field");
  const WeightVec& wa = aFactor.weights();
  const WeightVec& wb = bFactor.weights();
  for (size_t i = 0; i < wa.size(); ++i) {
    for (size_t j = 0; j < wb.size(); ++j) {
      auto it = values.find({static_cast<int>(i), static_cast<int>(j)});
      if (it == values.end())
        throw Error("twist spec: missing value tau(" + bFactor.generators()[j].name + " (x) " +
                    aFactor.generators()[i].name + ")");
      if (!(it->second.field() == aFactor.field()))
        throw Error("twist spec: value over the wrong field");
      int want = wa[i] + wb[j];
      for (const auto& [key, c] : it->second.terms()) {
        (void)c;
        if (key.first.degree() + key.second.degree() != want)
          throw Error("twist spec: tau(" + bFactor.generators()[j].name + " (x) " +
                      aFactor.generators()[i].name + ") must be homogeneous of degree " +
                      std::to_string(want));
      }
    }
  }
}

namespace {

std::string tensorName(const std::vector<std::string>& bNames,
                       const std::vector<std::string>& aNames, const Word& b, const Word& a) {
  return "tau(" + wordStr(b, bNames) + " (x) " + wordStr(a, aNames) + ")";
}

}  // namespace

TensorElem TwistData::tau(const Word& b, const Word& a) const {
  const FieldSpec& f = spec.aFactor.field();
  if (b.degree() + a.degree() > maxDegree) throw Error("tau: outside the degree window");
  TensorElem out(f);
  if (b.degree() == 0) {
    out.add(a, Word::one(), Scalar::one(f));
    return out;
  }
  if (a.degree() == 0) {
    out.add(Word::one(), b, Scalar::one(f));
    return out;
  }
  auto it = table.find({b, a});
  if (it == table.end())
    throw Error("tau: tensor " +
                tensorName(spec.bFactor.generatorNames(), spec.aFactor.generatorNames(), b, a) +
                " is not in the extension tables");
  return it->second;
}

TensorElem TwistData::tauVec(const Word& b, int aDeg, const SparseVec& aCoords) const {
  TensorElem out(spec.aFactor.field());
  const auto& basis = aSys.basis(aDeg);
  for (const auto& [i, c] : aCoords)
    out.addScaled(tau(b, basis.at(static_cast<size_t>(i))), c);
  return out;
}

namespace {

struct CycleHit {
  Word b, a;
};

using PairMap = std::map<std::pair<Word, Word>, TensorElem, WordPairLess>;

}  // namespace

TwistData extendTwist(const TwistingMapSpec& spec, int maxDegree) {
  spec.validate();
  TwistData T;
  T.spec = spec;
  T.aSys = RewriteSystem::complete(spec.aFactor, maxDegree);
  T.bSys = RewriteSystem::complete(spec.bFactor, maxDegree);
  T.maxDegree = maxDegree;
  const FieldSpec& f = spec.aFactor.field();
  const Scalar one = Scalar::one(f);
  const WeightVec& wa = spec.aFactor.weights();
  const WeightVec& wb = spec.bFactor.weights();
  const auto aNames = spec.aFactor.generatorNames();
  const auto bNames = spec.bFactor.generatorNames();

  // generator values with both tensor legs brought to normal form
  std::map<std::pair<int, int>, TensorElem> given;
  for (const auto& [key, val] : spec.values) {
    TensorElem norm(f);
    for (const auto& [words, c] : val.terms()) {
      SparseVec na = T.aSys.mulWords(words.first, Word::one());
      SparseVec nb = T.bSys.mulWords(words.second, Word::one());
      const auto& ba = T.aSys.basis(words.first.degree());
      const auto& bb = T.bSys.basis(words.second.degree());
      for (const auto& [ia, ca] : na)
        for (const auto& [ib, cb] : nb)
          norm.add(ba.at(static_cast<size_t>(ia)), bb.at(static_cast<size_t>(ib)), c * ca * cb);
    }
    given.emplace(key, std::move(norm));
  }

  PairMap memo;
  std::set<std::pair<Word, Word>, WordPairLess> inProgress;

  std::function<const TensorElem&(const Word&, const Word&)> eval =
      [&](const Word& b, const Word& a) -> const TensorElem& {
    auto key = std::make_pair(b, a);
    auto hit = memo.find(key);
    if (hit != memo.end()) return hit->second;
    if (inProgress.count(key)) throw CycleHit{b, a};
    inProgress.insert(key);

    TensorElem out(f);
    if (b.degree() == 0) {
      out.add(a, Word::one(), one);
    } else if (a.degree() == 0) {
      out.add(Word::one(), b, one);
    } else if (b.length() == 1) {
      if (a.length() == 1) {
        out = given.at({a[0], b[0]});
      } else {
        // split the A-word: tau(b (x) a0*rest) via tau(b (x) a0), then tau of
        // each B-leg against the rest, multiplied back on the A side
        Word a0 = a.prefix(1, wa);
        Word rest = a.suffix(1, wa);
        TensorElem t1 = eval(b, a0);
        for (const auto& [w1, c1] : t1.terms()) {
          TensorElem t2 = eval(w1.second, rest);
          for (const auto& [w2, c2] : t2.terms()) {
            SparseVec prod = T.aSys.mulWords(w1.first, w2.first);
            const auto& basis = T.aSys.basis(w1.first.degree() + w2.first.degree());
            for (const auto& [i, c3] : prod)
              out.add(basis.at(static_cast<size_t>(i)), w2.second, c1 * c2 * c3);
          }
        }
      }
    } else {
      // split the B-word: tau(b0*rest (x) a) via tau(rest (x) a), then tau of
      // b0 against each A-leg, multiplied back on the B side
      Word b0 = b.prefix(1, wb);
      Word rest = b.suffix(1, wb);
      TensorElem t1 = eval(rest, a);
      for (const auto& [w1, c1] : t1.terms()) {
        TensorElem t2 = eval(b0, w1.first);
        for (const auto& [w2, c2] : t2.terms()) {
          SparseVec prod = T.bSys.mulWords(w2.second, w1.second);
          const auto& basis = T.bSys.basis(w2.second.degree() + w1.second.degree());
          for (const auto& [i, c3] : prod)
            out.add(w2.first, basis.at(static_cast<size_t>(i)), c1 * c2 * c3);
        }
      }
    }

    inProgress.erase(key);
    return memo.emplace(std::move(key), std::move(out)).first->second;
  };

  try {
    for (int t = 2; t <= maxDegree; ++t)
      for (int db = 1; db < t; ++db)
        for (const Word& b : T.bSys.basis(db))
          for (const Word& a : T.aSys.basis(t - db)) eval(b, a);
  } catch (const CycleHit& c) {
    T.extended = false;
    T.consistent = false;
    T.conflict = TwistConflict{
        c.b, c.a,
        tensorName(bNames, aNames, c.b, c.a) +
            " depends on its own value through the multiplicativity identities; "
            "the extension order cannot determine it",
        "", ""};
    return T;
  }

  for (auto& [key, val] : memo)
    if (key.first.degree() >= 1 && key.second.degree() >= 1) T.table.emplace(key, val);
  T.extended = true;

  // re-evaluate along alternative decomposition paths: every two-factor split
  // of the A-word against every B-word, then every split of the B-word
  for (int t = 3; t <= maxDegree && !T.conflict; ++t) {
    for (int db = 1; db <= t - 2 && !T.conflict; ++db) {
      for (const Word& b : T.bSys.basis(db)) {
        for (int d1 = 1; d1 <= t - db - 1 && !T.conflict; ++d1) {
          for (const Word& a1 : T.aSys.basis(d1)) {
            for (const Word& a2 : T.aSys.basis(t - db - d1)) {
              TensorElem lhs = T.tauVec(b, d1 + (t - db - d1), T.aSys.mulWords(a1, a2));
              TensorElem rhs(f);
              TensorElem t1 = T.tau(b, a1);
              for (const auto& [w1, c1] : t1.terms()) {
                TensorElem t2 = T.tau(w1.second, a2);
                for (const auto& [w2, c2] : t2.terms()) {
                  SparseVec prod = T.aSys.mulWords(w1.first, w2.first);
                  const auto& basis = T.aSys.basis(w1.first.degree() + w2.first.degree());
                  for (const auto& [i, c3] : prod)
                    rhs.add(basis.at(static_cast<size_t>(i)), w2.second, c1 * c2 * c3);
                }
              }
              if (!(lhs == rhs)) {
                T.conflict = TwistConflict{
                    b, a1 * a2,
                    tensorName(bNames, aNames, b, a1 * a2) + " evaluates differently when the A-side is "
                    "split after degree " + std::to_string(d1),
                    lhs.str(aNames, bNames), rhs.str(aNames, bNames)};
                break;
              }
            }
            if (T.conflict) break;
          }
        }
      }
    }
  }
  for (int t = 3; t <= maxDegree && !T.conflict; ++t) {
    for (int da = 1; da <= t - 2 && !T.conflict; ++da) {
      for (const Word& a : T.aSys.basis(da)) {
        for (int d1 = 1; d1 <= t - da - 1 && !T.conflict; ++d1) {
          for (const Word& b1 : T.bSys.basis(d1)) {
            for (const Word& b2 : T.bSys.basis(t - da - d1)) {
              SparseVec prodB = T.bSys.mulWords(b1, b2);
              TensorElem lhs(f);
              const auto& bbasis = T.bSys.basis(d1 + (t - da - d1));
              for (const auto& [i, c] : prodB)
                lhs.addScaled(T.tau(bbasis.at(static_cast<size_t>(i)), a), c);
              TensorElem rhs(f);
              TensorElem t1 = T.tau(b2, a);
              for (const auto& [w1, c1] : t1.terms()) {
                TensorElem t2 = T.tau(b1, w1.first);
                for (const auto& [w2, c2] : t2.terms()) {
                  SparseVec prod = T.bSys.mulWords(w2.second, w1.second);
                  const auto& basis = T.bSys.basis(w2.second.degree() + w1.second.degree());
                  for (const auto& [i, c3] : prod)
                    rhs.add(w2.first, basis.at(static_cast<size_t>(i)), c1 * c2 * c3);
                }
              }
              if (!(lhs == rhs)) {
                T.conflict = TwistConflict{
                    b1 * b2, a,
                    tensorName(bNames, aNames, b1 * b2, a) + " evaluates differently when the B-side is "
                    "split after degree " + std::to_string(d1),
                    lhs.str(aNames, bNames), rhs.str(aNames, bNames)};
                break;
              }
            }
            if (T.conflict) break;
          }
        }
      }
    }
  }

  T.consistent = !T.conflict;
  return T;
}

TensorElem muTau(const TwistData& T, const Word& a1, const Word& b1, const Word& a2,
                 const Word& b2) {
  const FieldSpec& f = T.spec.aFactor.field();
  TensorElem out(f);
  TensorElem mid = T.tau(b1, a2);
  for (const auto& [w, c] : mid.terms()) {
    SparseVec pa = T.aSys.mulWords(a1, w.first);
    SparseVec pb = T.bSys.mulWords(w.second, b2);
    const auto& ba = T.aSys.basis(a1.degree() + w.first.degree());
    const auto& bb = T.bSys.basis(w.second.degree() + b2.degree());
    for (const auto& [i, ca] : pa)
      for (const auto& [j, cb] : pb)
        out.add(ba.at(static_cast<size_t>(i)), bb.at(static_cast<size_t>(j)), c * ca * cb);
  }
  return out;
}

std::optional<TwistConflict> hexagonCheck(const TwistData& T, int bound) {
  if (!T.extended) return T.conflict;
  const FieldSpec& f = T.spec.aFactor.field();
  const auto aNames = T.spec.aFactor.generatorNames();
  const auto bNames = T.spec.bFactor.generatorNames();
  for (int t = 0; t <= bound; ++t) {
    for (int d1 = 0; d1 <= t; ++d1)
      for (int d2 = 0; d1 + d2 <= t; ++d2)
        for (int d3 = 0; d1 + d2 + d3 <= t; ++d3) {
          int d4 = t - d1 - d2 - d3;
          for (const Word& b1 : T.bSys.basis(d1))
            for (const Word& b2 : T.bSys.basis(d2))
              for (const Word& a1 : T.aSys.basis(d3))
                for (const Word& a2 : T.aSys.basis(d4)) {
                  // left side: tau after multiplying both factors
                  TensorElem lhs(f);
                  SparseVec pb = T.bSys.mulWords(b1, b2);
                  SparseVec pa = T.aSys.mulWords(a1, a2);
                  const auto& bb = T.bSys.basis(d1 + d2);
                  const auto& ba = T.aSys.basis(d3 + d4);
                  for (const auto& [i, cb] : pb)
                    for (const auto& [j, ca] : pa)
                      lhs.addScaled(T.tau(bb.at(static_cast<size_t>(i)),
                                          ba.at(static_cast<size_t>(j))),
                                    cb * ca);
                  // right side: (muA (x) muB)(1 (x) tau (x) 1)(tau (x) tau)
                  // (1 (x) tau (x) 1) on b1 (x) b2 (x) a1 (x) a2
                  TensorElem rhs(f);
                  TensorElem s1 = T.tau(b2, a1);
                  for (const auto& [w1, c1] : s1.terms()) {
                    TensorElem s2 = T.tau(b1, w1.first);
                    TensorElem s3 = T.tau(w1.second, a2);
                    for (const auto& [w2, c2] : s2.terms())
                      for (const auto& [w3, c3] : s3.terms()) {
                        TensorElem s4 = T.tau(w2.second, w3.first);
                        for (const auto& [w4, c4] : s4.terms()) {
                          SparseVec qa = T.aSys.mulWords(w2.first, w4.first);
                          SparseVec qb = T.bSys.mulWords(w4.second, w3.second);
                          const auto& qab = T.aSys.basis(w2.first.degree() + w4.first.degree());
                          const auto& qbb =
                              T.bSys.basis(w4.second.degree() + w3.second.degree());
                          for (const auto& [i, ca] : qa)
                            for (const auto& [j, cb] : qb)
                              rhs.add(qab.at(static_cast<size_t>(i)),
                                      qbb.at(static_cast<size_t>(j)), c1 * c2 * c3 * c4 * ca * cb);
                        }
                      }
                  }
                  if (!(lhs == rhs))
                    return TwistConflict{
                        b1 * b2, a1 * a2,
                        "hexagon identity fails on " +
                            wordStr(b1, bNames) + " (x) " + wordStr(b2, bNames) + " (x) " +
                            wordStr(a1, aNames) + " (x) " + wordStr(a2, aNames),
                        lhs.str(aNames, bNames), rhs.str(aNames, bNames)};
                }
        }
  }
  return std::nullopt;
}

std::optional<std::string> associativityCheck(const TwistData& T, int bound) {
  if (!T.extended) return "extension tables unavailable";
  const auto aNames = T.spec.aFactor.generatorNames();
  const auto bNames = T.spec.bFactor.generatorNames();
  auto mulElem = [&](const TensorElem& x, const Word& a, const Word& b) {
    TensorElem out(x.field());
    for (const auto& [w, c] : x.terms()) out.addScaled(muTau(T, w.first, w.second, a, b), c);
    return out;
  };
  auto mulElemLeft = [&](const Word& a, const Word& b, const TensorElem& x) {
    TensorElem out(x.field());
    for (const auto& [w, c] : x.terms()) out.addScaled(muTau(T, a, b, w.first, w.second), c);
    return out;
  };
  for (int t = 0; t <= bound; ++t)
    for (int e1 = 0; e1 <= t; ++e1)
      for (int f1 = 0; e1 + f1 <= t; ++f1)
        for (int e2 = 0; e1 + f1 + e2 <= t; ++e2)
          for (int f2 = 0; e1 + f1 + e2 + f2 <= t; ++f2)
            for (int e3 = 0; e1 + f1 + e2 + f2 + e3 <= t; ++e3) {
              int f3 = t - e1 - f1 - e2 - f2 - e3;
              for (const Word& x1 : T.aSys.basis(e1))
                for (const Word& y1 : T.bSys.basis(f1))
                  for (const Word& x2 : T.aSys.basis(e2))
                    for (const Word& y2 : T.bSys.basis(f2))
                      for (const Word& x3 : T.aSys.basis(e3))
                        for (const Word& y3 : T.bSys.basis(f3)) {
                          TensorElem left = mulElem(muTau(T, x1, y1, x2, y2), x3, y3);
                          TensorElem right = mulElemLeft(x1, y1, muTau(T, x2, y2, x3, y3));
                          if (!(left == right))
                            return "product is not associative on (" + wordStr(x1, aNames) +
                                   " # " + wordStr(y1, bNames) + ", " + wordStr(x2, aNames) +
                                   " # " + wordStr(y2, bNames) + ", " + wordStr(x3, aNames) +
                                   " # " + wordStr(y3, bNames) + ")";
                        }
            }
  return std::nullopt;
}

TwistedProduct buildProduct(const TwistData& T, int maxDegree) {
  if (!T.consistent) {
    std::string why = T.conflict ? T.conflict->reason : "extension failed";
    throw Error("twisted product: the twisting map is not consistent (" + why + ")");
  }
  const FieldSpec& f = T.spec.aFactor.field();
  const Scalar one = Scalar::one(f);

  std::vector<Generator> gens = T.spec.aFactor.generators();
  int shift = static_cast<int>(gens.size());
  for (const auto& g : T.spec.bFactor.generators()) {
    for (const auto& ag : T.spec.aFactor.generators())
      if (ag.name == g.name)
        throw Error("twisted product: factors share the generator name '" + g.name + "'");
    gens.push_back(g);
  }
  WeightVec wAll;
  for (const auto& g : gens) wAll.push_back(g.weight);

  auto shiftPoly = [&](const NcPolynomial& p) {
    NcPolynomial out(f);
    for (const auto& [w, c] : p.terms()) {
      std::vector<int> letters = w.letters();
      for (int& l : letters) l += shift;
      out.addTerm(Word(std::move(letters), w.degree()), c);
    }
    return out;
  };

  std::vector<NcPolynomial> rels = T.spec.aFactor.relations();
  for (const auto& r : T.spec.bFactor.relations()) rels.push_back(shiftPoly(r));
  const WeightVec& wa = T.spec.aFactor.weights();
  const WeightVec& wb = T.spec.bFactor.weights();
  for (size_t j = 0; j < wb.size(); ++j) {
    for (size_t i = 0; i < wa.size(); ++i) {
      Word lead = Word::fromLetters({shift + static_cast<int>(j), static_cast<int>(i)}, wAll);
      NcPolynomial rel = NcPolynomial::term(one, lead);
      const TensorElem& val = T.spec.values.at({static_cast<int>(i), static_cast<int>(j)});
      // subtract mu(tau(b (x) a)) = sum c * (aWord concatenated with bWord)
      for (const auto& [w, c] : val.terms()) {
        std::vector<int> letters = w.first.letters();
        for (int l : w.second.letters()) letters.push_back(l + shift);
        rel.addTerm(Word(std::move(letters), w.first.degree() + w.second.degree()), -c);
      }
      rels.push_back(rel);
    }
  }

  std::string name = T.spec.name.empty()
                         ? T.spec.aFactor.name() + "(x)" + T.spec.bFactor.name()
                         : T.spec.name;
  TwistedProduct P;
  P.presentation = AlgebraPresentation(name, f, gens, rels);
  P.completed = RewriteSystem::complete(P.presentation, maxDegree);
  P.hilbertOk = true;
  for (int n = 0; n <= maxDegree; ++n) {
    long expect = 0;
    for (int i = 0; i <= n; ++i) expect += T.aSys.dim(i) * T.bSys.dim(n - i);
    P.dims.push_back(P.completed.dim(n));
    P.expectedDims.push_back(expect);
    if (P.dims.back() != expect && P.firstMismatch < 0) {
      P.hilbertOk = false;
      P.firstMismatch = n;
    }
  }
  return P;
}

namespace {

FamilyOutcome familyPipeline(const TwistingMapSpec& spec, int maxDegree,
                             const CoherenceOptions& opt) {
  FamilyOutcome out;
  out.twist = extendTwist(spec, maxDegree);
  if (!out.twist.consistent) return out;

  TwistedProduct P = buildProduct(out.twist, maxDegree);
  if (!P.hilbertOk)
    throw Error("family pipeline: consistent map but the product dimensions at degree " +
                std::to_string(P.firstMismatch) + " miss the tensor count");
  out.product = std::move(P);

  const RewriteSystem& A = out.product->completed;
  const FieldSpec& f = A.presentation().field();
  const WeightVec& w = A.presentation().weights();
  const Scalar one = Scalar::one(f);
  int shift = static_cast<int>(spec.aFactor.weights().size());

  NcPolynomial xPoly = NcPolynomial::term(one, Word::single(0, w[0]));
  NcPolynomial yPoly = NcPolynomial::term(one, Word::single(1, w[1]));
  NcPolynomial zPoly = NcPolynomial::term(one, Word::single(shift, w[shift]));

  FreeExtensionData ext = buildExtension(A, {xPoly}, maxDegree);
  const auto& rf = ext.rightFree;
  if (!rf.dimensionIdentity || rf.rightGenerators.size() != 1 ||
      rf.rightGenerators[0].degree != w[0])
    throw Error("family pipeline: the ideal on the first generator is not right-free with a "
                "single generator — this contradicts the construction");

  DecompositionInput input;
  input.subalgebraGens = {yPoly};
  input.idealGens = {zPoly};
  input.lifts = {zPoly};
  out.structure = checkDecomposition(ext, input, maxDegree);

  CoherenceOptions o2 = opt;
  o2.maxDegree = maxDegree;
  o2.assertedByUser.push_back(
      "the subalgebra generated by the surviving degree-one element is Noetherian "
      "(one-generator polynomial algebra; asserted, not machine-verified)");
  o2.assertedByUser.push_back(
      "graded coherence of the quotient factor is an external classification fact taken on "
      "trust; the battery below provides in-window evidence only");
  out.report = coherenceReport(ext, defaultBattery(A), o2);
  return out;
}

}  // namespace

FamilyOutcome twistFamily(const Scalar& alpha, const Scalar& beta, const Scalar& gamma,
                              int maxDegree, const CoherenceOptions& opt) {
  const FieldSpec& f = alpha.field();
  if (!(beta.field() == f) || !(gamma.field() == f))
    throw Error("family: parameters must share a field");
  const Scalar one = Scalar::one(f);

  std::vector<Generator> aGens = {{"x", 1}, {"y", 1}};
  NcPolynomial comm = NcPolynomial::term(one, Word::fromLetters({0, 1}, {1, 1}));
  comm.addTerm(Word::fromLetters({1, 0}, {1, 1}), -one);
  AlgebraPresentation aFac("P", f, aGens, {comm});
  AlgebraPresentation bFac("L", f, {{"z", 1}}, {});

  TwistingMapSpec spec;
  spec.name = "family(" + alpha.str() + "," + beta.str() + "," + gamma.str() + ")";
  spec.aFactor = aFac;
  spec.bFactor = bFac;
  TensorElem zx(f);
  spec.values.emplace(std::make_pair(0, 0), zx);
  TensorElem zy(f);
  Word y = Word::single(1, 1), z = Word::single(0, 1);
  zy.add(Word::fromLetters({1, 1}, {1, 1}), Word::one(), alpha);
  zy.add(y, z, beta);
  zy.add(Word::one(), Word::fromLetters({0, 0}, {1, 1}), gamma);
  spec.values.emplace(std::make_pair(1, 0), zy);

  return familyPipeline(spec, maxDegree, opt);
}

FamilyOutcome twistFamilyFromSpec(const TwistingMapSpec& spec, int maxDegree,
                                      const CoherenceOptions& opt) {
  spec.validate();
  const FieldSpec& f = spec.aFactor.field();
  if (spec.aFactor.weights().size() != 2 || spec.bFactor.weights().size() != 1 ||
      spec.aFactor.weights() != WeightVec{1, 1} || spec.bFactor.weights() != WeightVec{1})
    throw Error("family: needs a two-generator left factor and a one-generator right factor, "
                "all in degree one");
  // the left factor must be commutative: single relation proportional to the
  // commutator of its generators
  const auto& rels = spec.aFactor.relations();
  bool comm = rels.size() == 1 && rels[0].termCount() == 2;
  if (comm) {
    const auto& ts = rels[0].terms();
    comm = ts[0].first == Word::fromLetters({1, 0}, {1, 1}) &&
           ts[1].first == Word::fromLetters({0, 1}, {1, 1}) &&
           (ts[0].second + ts[1].second).isZero();
  }
  if (!comm) throw Error("family: the left factor must be the commutative plane");

  if (!spec.values.at({0, 0}).isZero())
    throw Error("family: requires tau(" + spec.bFactor.generators()[0].name + " (x) " +
                spec.aFactor.generators()[0].name + ") = 0");

  Scalar alpha = Scalar::zero(f), beta = Scalar::zero(f), gamma = Scalar::zero(f);
  Word yy = Word::fromLetters({1, 1}, {1, 1});
  Word y = Word::single(1, 1), z = Word::single(0, 1);
  Word zz = Word::fromLetters({0, 0}, {1, 1});
  for (const auto& [w, c] : spec.values.at({1, 0}).terms()) {
    if (w.first == yy && w.second.empty()) alpha = c;
    else if (w.first == y && w.second == z) beta = c;
    else if (w.first.empty() && w.second == zz) gamma = c;
    else
      throw Error("family: tau on the second generator must combine y^2 # 1, y # z, 1 # z^2");
  }
  return twistFamily(alpha, beta, gamma, maxDegree, opt);
}

}  // namespace gcoh
