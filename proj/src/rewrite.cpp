#include "gcoh/rewrite.hpp"

#include <algorithm>
#include <map>

namespace gcoh {

namespace {

struct DeglexGreater {
  bool operator()(const Word& a, const Word& b) const { return deglexLess(b, a); }
};

// lead ≡ lower as a rule, from a nonzero reduced homogeneous polynomial
RewriteRule ruleFromPolynomial(const NcPolynomial& r) {
  RewriteRule rule;
  rule.lead = r.leadWord();
  Scalar inv = r.leadCoeff().inverse();
  NcPolynomial lower(r.field());
  const auto& ts = r.terms();
  for (size_t i = 1; i < ts.size(); ++i) lower.addTerm(ts[i].first, -(ts[i].second * inv));
  rule.lower = lower;
  return rule;
}

bool ruleOrderLess(const RewriteRule& a, const RewriteRule& b) {
  return deglexLess(a.lead, b.lead);
}

}  // namespace

NcPolynomial RewriteSystem::reduceFull(NcPolynomial p) const {
  std::map<Word, Scalar, DeglexGreater> work;
  for (const auto& [w, c] : p.terms()) work.emplace(w, c);
  NcPolynomial out(p.field());
  const WeightVec& wt = pres_.weights();
  while (!work.empty()) {
    auto it = work.begin();
    Word w = it->first;
    Scalar c = it->second;
    work.erase(it);
    if (c.isZero()) continue;
    const RewriteRule* hit = nullptr;
    size_t hitPos = 0;
    for (const auto& rule : rules_) {
      size_t pos = w.findFactor(rule.lead);
      if (pos != Word::npos) {
        hit = &rule;
        hitPos = pos;
        break;
      }
    }
    if (!hit) {
      out.addTerm(w, c);
      continue;
    }
    Word a = w.prefix(hitPos, wt);
    Word b = w.suffix(hitPos + hit->lead.length(), wt);
    for (const auto& [u, k] : hit->lower.terms()) {
      Word nw = a * u * b;
      auto [jt, fresh] = work.emplace(nw, c * k);
      if (!fresh) {
        jt->second += c * k;
        if (jt->second.isZero()) work.erase(jt);
      }
    }
  }
  return out;
}

RewriteSystem RewriteSystem::complete(const AlgebraPresentation& pres, int maxDegree) {
  if (maxDegree < 0) throw Error("complete: negative degree window");
  pres.validate();
  RewriteSystem sys;
  sys.pres_ = pres;
  sys.maxDegree_ = maxDegree;

  std::map<int, std::vector<NcPolynomial>> inputByDegree;
  for (const auto& r : pres.relations()) {
    int d = r.degree();
    if (d > maxDegree)
      throw Error("complete: relation of degree " + std::to_string(d) +
                  " exceeds the window (max-degree " + std::to_string(maxDegree) +
                  "); raise the window");
    inputByDegree[d].push_back(r);
  }

  const WeightVec& wt = pres.weights();
  for (int d = 1; d <= maxDegree; ++d) {
    // queue: input relations of this degree, then ambiguity S-polynomials
    // whose overlap word has this degree.  Rules found at degree d never
    // create further degree-d ambiguities (overlaps strictly raise degree),
    // so the queue is complete before we start reducing.
    std::vector<NcPolynomial> queue;
    std::vector<bool> isInput;
    if (auto it = inputByDegree.find(d); it != inputByDegree.end()) {
      for (const auto& r : it->second) {
        queue.push_back(r);
        isInput.push_back(true);
      }
    }
    struct Amb {
      Word word;
      size_t i, j, len;
    };
    std::vector<Amb> ambs;
    for (size_t i = 0; i < sys.rules_.size(); ++i) {
      const Word& u = sys.rules_[i].lead;
      for (size_t j = 0; j < sys.rules_.size(); ++j) {
        const Word& v = sys.rules_[j].lead;
        size_t maxLen = std::min(u.length(), v.length()) - 1;
        for (size_t len = 1; len <= maxLen; ++len) {
          bool match = true;
          for (size_t k = 0; k < len; ++k) {
            if (u[u.length() - len + k] != v[k]) {
              match = false;
              break;
            }
          }
          if (!match) continue;
          Word tail = v.suffix(len, wt);
          Word overlap = u * tail;
          if (overlap.degree() == d) ambs.push_back({overlap, i, j, len});
        }
      }
    }
    std::sort(ambs.begin(), ambs.end(), [](const Amb& a, const Amb& b) {
      if (a.word != b.word) return deglexLess(a.word, b.word);
      if (a.i != b.i) return a.i < b.i;
      if (a.j != b.j) return a.j < b.j;
      return a.len < b.len;
    });
    for (const auto& amb : ambs) {
      const RewriteRule& ri = sys.rules_[amb.i];
      const RewriteRule& rj = sys.rules_[amb.j];
      Word a = ri.lead.prefix(ri.lead.length() - amb.len, wt);
      Word c = rj.lead.suffix(amb.len, wt);
      NcPolynomial sp =
          ri.lower * NcPolynomial::term(Scalar::one(pres.field()), c) -
          NcPolynomial::term(Scalar::one(pres.field()), a) * rj.lower;
      queue.push_back(sp);
      isInput.push_back(false);
    }

    for (size_t q = 0; q < queue.size(); ++q) {
      NcPolynomial r = sys.reduceFull(queue[q]);
      if (r.isZero()) {
        if (isInput[q]) ++sys.droppedInputs_;
        continue;
      }
      if (r.degree() != d) throw Error("complete: internal degree bookkeeping failure");
      RewriteRule rule = ruleFromPolynomial(r);
      if (!isInput[q]) ++sys.derivedRules_;
      auto pos = std::lower_bound(sys.rules_.begin(), sys.rules_.end(), rule, ruleOrderLess);
      sys.rules_.insert(pos, std::move(rule));
      // keep tails reduced: only same-degree tails can mention the new lead
      for (auto& other : sys.rules_) {
        if (other.lead.degree() == d && !other.lower.isZero())
          other.lower = sys.reduceFull(other.lower);
      }
    }
  }

  sys.buildBasis();
  return sys;
}

bool RewriteSystem::isNormal(const Word& w) const {
  for (const auto& rule : rules_)
    if (w.findFactor(rule.lead) != Word::npos) return false;
  return true;
}

NcPolynomial RewriteSystem::normalForm(const NcPolynomial& p) const {
  if (!(p.field() == pres_.field())) throw Error("normalForm: polynomial over wrong field");
  if (p.degree() > maxDegree_)
    throw Error("normalForm: degree " + std::to_string(p.degree()) +
                " outside completion window (max-degree " + std::to_string(maxDegree_) + ")");
  return reduceFull(p);
}

void RewriteSystem::buildBasis() {
  basis_.assign(static_cast<size_t>(maxDegree_) + 1, {});
  index_.assign(static_cast<size_t>(maxDegree_) + 1, {});
  size_t ngens = pres_.generatorCount();
  const WeightVec& wt = pres_.weights();
  // group rule leads by last letter; a freshly appended letter can only
  // complete a factor that ends at the new position
  std::vector<std::vector<const Word*>> leadsByLast(ngens);
  for (const auto& rule : rules_)
    leadsByLast[static_cast<size_t>(rule.lead[rule.lead.length() - 1])].push_back(&rule.lead);

  for (int target = 0; target <= maxDegree_; ++target) {
    std::vector<Word> out;
    std::vector<int> stack;
    // iterative DFS in letter order
    struct Frame {
      size_t nextLetter = 0;
    };
    std::vector<Frame> frames(1);
    Word cur;
    std::vector<Word> path{cur};
    while (!frames.empty()) {
      Frame& f = frames.back();
      const Word& here = path.back();
      if (here.degree() == target) {
        out.push_back(here);
        frames.pop_back();
        path.pop_back();
        continue;
      }
      if (f.nextLetter >= ngens) {
        frames.pop_back();
        path.pop_back();
        continue;
      }
      size_t g = f.nextLetter++;
      if (here.degree() + wt[g] > target) continue;
      Word next = here.appended(static_cast<int>(g), wt[g]);
      bool reducible = false;
      for (const Word* lead : leadsByLast[g]) {
        if (next.endsWith(*lead)) {
          reducible = true;
          break;
        }
      }
      if (reducible) continue;
      path.push_back(next);
      frames.emplace_back();
    }
    std::sort(out.begin(), out.end(), deglexLess);
    auto& idx = index_[static_cast<size_t>(target)];
    for (size_t i = 0; i < out.size(); ++i) idx.emplace(out[i], static_cast<int>(i));
    basis_[static_cast<size_t>(target)] = std::move(out);
  }
}

const std::vector<Word>& RewriteSystem::basis(int degree) const {
  if (degree < 0 || degree > maxDegree_)
    throw Error("basis: degree " + std::to_string(degree) + " outside window 0.." +
                std::to_string(maxDegree_));
  return basis_[static_cast<size_t>(degree)];
}

std::vector<long> RewriteSystem::hilbert(int upTo) const {
  if (upTo > maxDegree_) throw Error("hilbert: window exceeded");
  std::vector<long> out;
  for (int n = 0; n <= upTo; ++n) out.push_back(dim(n));
  return out;
}

int RewriteSystem::indexOf(int degree, const Word& w) const {
  if (degree < 0 || degree > maxDegree_) return -1;
  const auto& idx = index_[static_cast<size_t>(degree)];
  auto it = idx.find(w);
  return it == idx.end() ? -1 : it->second;
}

SparseVec RewriteSystem::toVec(const NcPolynomial& p, int degree) const {
  SparseVec v;
  for (const auto& [w, c] : p.terms()) {
    if (w.degree() != degree) throw Error("toVec: polynomial not homogeneous of that degree");
    int i = indexOf(degree, w);
    if (i < 0) throw Error("toVec: word not in normal form");
    v.emplace_back(i, c);
  }
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return v;
}

NcPolynomial RewriteSystem::fromVec(int degree, const SparseVec& v) const {
  NcPolynomial p(pres_.field());
  const auto& b = basis(degree);
  for (const auto& [i, c] : v) p.addTerm(b.at(static_cast<size_t>(i)), c);
  return p;
}

SparseVec RewriteSystem::mulWords(const Word& a, const Word& b) const {
  int degree = a.degree() + b.degree();
  if (degree > maxDegree_) throw Error("mulWords: product degree outside window");
  NcPolynomial nf = reduceFull(NcPolynomial::term(Scalar::one(pres_.field()), a * b));
  return toVec(nf, degree);
}

SparseVec RewriteSystem::mulWordVec(const Word& w, int fromDegree, const SparseVec& v,
                                    bool onLeft) const {
  const auto& b = basis(fromDegree);
  SparseVec acc;
  for (const auto& [i, c] : v) {
    const Word& u = b.at(static_cast<size_t>(i));
    SparseVec prod = onLeft ? mulWords(w, u) : mulWords(u, w);
    axpy(acc, c, prod);
  }
  return acc;
}

SparseVec RewriteSystem::mulVecPoly(int fromDegree, const SparseVec& v, const NcPolynomial& p,
                                    bool polyOnRight) const {
  SparseVec acc;
  for (const auto& [w, k] : p.terms()) {
    SparseVec part = mulWordVec(w, fromDegree, v, !polyOnRight);
    axpy(acc, k, part);
  }
  return acc;
}

}  // namespace gcoh
