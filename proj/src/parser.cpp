#include "gcoh/parser.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace gcoh {

namespace {

struct Token {
  enum Kind { Ident, Int, Sym, Eol } kind;
  std::string text;
  int col = 0;  // 1-based start column
};

// Tokens of one physical line; `//` starts a comment.  Symbols are the single
// characters ( ) , * + - ^ / # = .
std::vector<Token> lexLine(const std::string& file, int lineNo, const std::string& line) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      continue;
    }
    if (c == '/' && i + 1 < line.size() && line[i + 1] == '/') break;
    int col = static_cast<int>(i) + 1;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i;
      while (j < line.size() && (std::isalnum(static_cast<unsigned char>(line[j])) ||
                                 line[j] == '_'))
        ++j;
      out.push_back({Token::Ident, line.substr(i, j - i), col});
      i = j;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
      out.push_back({Token::Int, line.substr(i, j - i), col});
      i = j;
    } else if (std::string("(),*+-^/#=.").find(c) != std::string::npos) {
      out.push_back({Token::Sym, std::string(1, c), col});
      ++i;
    } else {
      throw ParseError(file, lineNo, col, "unexpected character '" + std::string(1, c) + "'");
    }
  }
  out.push_back({Token::Eol, "", static_cast<int>(line.size()) + 1});
  return out;
}

// A lexed line plus a cursor, with positioned errors.
class TokLine {
 public:
  TokLine(const std::string& file, int lineNo, const std::string& line)
      : file_(file), lineNo_(lineNo), toks_(lexLine(file, lineNo, line)) {}

  const Token& peek() const { return toks_[pos_]; }
  const Token& take() { return toks_[pos_ == toks_.size() - 1 ? pos_ : pos_++]; }
  bool atEol() const { return peek().kind == Token::Eol; }
  bool empty() const { return toks_.size() == 1; }
  int lineNo() const { return lineNo_; }

  // true when the line is exactly one identifier `word`
  bool isBare(const char* word) const {
    return toks_.size() == 2 && toks_[0].kind == Token::Ident && toks_[0].text == word;
  }

  [[noreturn]] void fail(const Token& at, const std::string& msg) const {
    throw ParseError(file_, lineNo_, at.col, msg);
  }
  [[noreturn]] void failHere(const std::string& msg) const { fail(peek(), msg); }

  bool trySym(const char* s) {
    if (peek().kind == Token::Sym && peek().text == s) {
      take();
      return true;
    }
    return false;
  }
  void expectSym(const char* s) {
    if (!trySym(s)) failHere(std::string("expected '") + s + "'");
  }
  std::string expectIdent(const std::string& what) {
    if (peek().kind != Token::Ident) failHere("expected " + what);
    return take().text;
  }
  long expectInt(const std::string& what) {
    if (peek().kind != Token::Int) failHere("expected " + what);
    const Token& t = take();
    try {
      return std::stol(t.text);
    } catch (const std::exception&) {
      fail(t, "integer out of range");
    }
  }
  void expectEol() {
    if (!atEol()) failHere("unexpected trailing input");
  }

 private:
  std::string file_;
  int lineNo_;
  std::vector<Token> toks_;
  size_t pos_ = 0;
};

// Walks the nonblank lines of a file.
class LineCursor {
 public:
  LineCursor(const std::string& file, const std::string& text) : file_(file) {
    std::istringstream in(text);
    std::string line;
    int n = 0;
    while (std::getline(in, line)) lines_.push_back({++n, line});
    lastLine_ = n;
  }

  // next line with any tokens on it; nullopt at end of input
  std::optional<TokLine> next() {
    while (idx_ < lines_.size()) {
      TokLine t(file_, lines_[idx_].first, lines_[idx_].second);
      ++idx_;
      if (!t.empty()) return t;
    }
    return std::nullopt;
  }

  TokLine require(const std::string& inside) {
    auto t = next();
    if (!t)
      throw ParseError(file_, lastLine_ + 1, 1, "unexpected end of input inside " + inside);
    return *t;
  }

  const std::string& file() const { return file_; }

 private:
  std::string file_;
  std::vector<std::pair<int, std::string>> lines_;
  size_t idx_ = 0;
  int lastLine_ = 0;
};

// --- polynomial and tensor expressions ------------------------------------

// one product: factors joined by '*', each a rational literal or generator
// power; returns (coefficient, word)
std::pair<Scalar, Word> parseProduct(TokLine& t, const AlgebraPresentation& pres) {
  const FieldSpec& f = pres.field();
  Scalar coeff = Scalar::one(f);
  std::vector<int> letters;
  while (true) {
    const Token& tok = t.peek();
    if (tok.kind == Token::Int) {
      long num = t.expectInt("an integer");
      if (t.trySym("/")) {
        const Token& dtok = t.peek();
        long den = t.expectInt("a denominator");
        if (den == 0) t.fail(dtok, "zero denominator");
        coeff *= Scalar::ofFraction(f, num, den);
      } else {
        coeff *= Scalar::ofInt(f, num);
      }
    } else if (tok.kind == Token::Ident) {
      int letter = pres.generatorIndex(tok.text);
      if (letter < 0) t.fail(tok, "unknown generator '" + tok.text + "'");
      t.take();
      long exp = 1;
      if (t.trySym("^")) {
        const Token& etok = t.peek();
        exp = t.expectInt("an exponent");
        if (exp < 0 || exp > 1000) t.fail(etok, "exponent out of range");
      }
      for (long k = 0; k < exp; ++k) letters.push_back(letter);
    } else {
      t.failHere("expected a coefficient or generator");
    }
    if (!t.trySym("*")) break;
  }
  return {coeff, Word::fromLetters(letters, pres.weights())};
}

NcPolynomial parsePolyTokens(TokLine& t, const AlgebraPresentation& pres) {
  NcPolynomial p(pres.field());
  bool negative = t.trySym("-");
  while (true) {
    auto [c, w] = parseProduct(t, pres);
    p.addTerm(w, negative ? -c : c);
    if (t.trySym("+"))
      negative = false;
    else if (t.trySym("-"))
      negative = true;
    else
      break;
  }
  return p;
}

// tensorExpr: sum of `product # product` terms, or the single literal 0
TensorElem parseTensorTokens(TokLine& t, const AlgebraPresentation& apres,
                             const AlgebraPresentation& bpres) {
  TensorElem elem(apres.field());
  if (t.peek().kind == Token::Int && t.peek().text == "0") {
    TokLine probe = t;  // lookahead: bare zero vs 0 starting a tensor term
    probe.take();
    if (probe.atEol()) {
      t.take();
      return elem;
    }
  }
  bool negative = t.trySym("-");
  while (true) {
    auto [ca, wa] = parseProduct(t, apres);
    t.expectSym("#");
    auto [cb, wb] = parseProduct(t, bpres);
    Scalar c = ca * cb;
    elem.add(wa, wb, negative ? -c : c);
    if (t.trySym("+"))
      negative = false;
    else if (t.trySym("-"))
      negative = true;
    else
      break;
  }
  return elem;
}

// --- sections --------------------------------------------------------------

FieldSpec parseFieldTokens(TokLine& t) {
  const Token tok = t.peek();
  std::string name = t.expectIdent("a field (QQ or GF(p))");
  if (name == "QQ") return FieldSpec::rationals();
  if (name == "GF") {
    t.expectSym("(");
    const Token ptok = t.peek();
    long p = t.expectInt("a prime");
    t.expectSym(")");
    if (p < 2) t.fail(ptok, "the modulus must be a prime");
    try {
      return FieldSpec::primeField(static_cast<uint32_t>(p));
    } catch (const Error& e) {
      t.fail(ptok, e.what());
    }
  }
  t.fail(tok, "unknown field '" + name + "'");
}

void parseAlgebraSection(GalgDocument& doc, LineCursor& cur, TokLine& header) {
  const Token nameTok = header.peek();
  std::string name = header.expectIdent("an algebra name");
  header.expectEol();
  if (doc.findAlgebra(name)) header.fail(nameTok, "duplicate algebra '" + name + "'");

  std::optional<FieldSpec> field;
  std::optional<std::vector<Generator>> gens;
  std::vector<NcPolynomial> rels;

  bool done = false;
  while (!done) {
    TokLine t = cur.require("algebra '" + name + "'");
    const Token key = t.peek();
    std::string kw = t.expectIdent("a keyword (field, generators, relations, end)");
    if (kw == "end") {
      t.expectEol();
      done = true;
    } else if (kw == "field") {
      if (field) t.fail(key, "duplicate field line");
      field = parseFieldTokens(t);
      t.expectEol();
    } else if (kw == "generators") {
      if (gens) t.fail(key, "duplicate generators line");
      std::vector<Generator> gs;
      while (true) {
        std::string gname = t.expectIdent("a generator name");
        int weight = 1;
        if (t.trySym("(")) {
          const Token wtok = t.peek();
          long w = t.expectInt("a weight");
          if (w < 1) t.fail(wtok, "weights must be positive");
          weight = static_cast<int>(w);
          t.expectSym(")");
        }
        gs.push_back({gname, weight});
        if (!t.trySym(",")) break;
      }
      t.expectEol();
      gens = std::move(gs);
    } else if (kw == "relations") {
      t.expectEol();
      if (!gens) t.fail(key, "relations must come after the generators line");
      AlgebraPresentation shell(name, field ? *field : FieldSpec::rationals(), *gens, {});
      while (true) {
        TokLine r = cur.require("relations of '" + name + "'");
        if (r.isBare("end")) {
          done = true;  // the terminator closes the block and the section
          break;
        }
        NcPolynomial p = parsePolyTokens(r, shell);
        r.expectEol();
        rels.push_back(std::move(p));
      }
    } else {
      t.fail(key, "unknown keyword '" + kw + "' in an algebra section");
    }
  }

  if (!gens) header.fail(nameTok, "algebra '" + name + "' has no generators line");
  try {
    AlgebraPresentation pres(name, field ? *field : FieldSpec::rationals(), *gens, rels);
    pres.validate();
    doc.algebras.push_back(std::move(pres));
  } catch (const Error& e) {
    header.fail(nameTok, e.what());
  }
}

void parseIdealSection(GalgDocument& doc, LineCursor& cur, TokLine& header) {
  IdealSection sec;
  const Token nameTok = header.peek();
  sec.name = header.expectIdent("an ideal name");
  if (header.expectIdent("'on'") != "on") header.fail(nameTok, "expected 'on ALGEBRA'");
  const Token algTok = header.peek();
  sec.algebra = header.expectIdent("an algebra name");
  header.expectEol();
  if (doc.findIdeal(sec.name)) header.fail(nameTok, "duplicate ideal '" + sec.name + "'");
  const AlgebraPresentation* pres = doc.findAlgebra(sec.algebra);
  if (!pres) header.fail(algTok, "unknown algebra '" + sec.algebra + "'");

  bool sawSide = false, sawGens = false;
  bool done = false;
  while (!done) {
    TokLine t = cur.require("ideal '" + sec.name + "'");
    const Token key = t.peek();
    std::string kw = t.expectIdent("a keyword (side, generators, end)");
    if (kw == "end") {
      t.expectEol();
      done = true;
    } else if (kw == "side") {
      if (sawSide) t.fail(key, "duplicate side line");
      sawSide = true;
      const Token stok = t.peek();
      std::string s = t.expectIdent("left, right or two");
      if (s == "left") {
        sec.side = Side::Left;
      } else if (s == "right") {
        sec.side = Side::Right;
      } else if (s == "two") {
        t.expectSym("-");
        if (t.expectIdent("'sided'") != "sided") t.fail(stok, "expected two-sided");
        sec.side = Side::TwoSided;
      } else {
        t.fail(stok, "side must be left, right or two-sided");
      }
      t.expectEol();
    } else if (kw == "generators") {
      if (sawGens) t.fail(key, "duplicate generators block");
      sawGens = true;
      t.expectEol();
      while (true) {
        TokLine r = cur.require("generators of '" + sec.name + "'");
        if (r.isBare("end")) {
          done = true;
          break;
        }
        NcPolynomial p = parsePolyTokens(r, *pres);
        r.expectEol();
        if (p.isZero()) r.failHere("ideal generators must be nonzero");
        int deg = -1;
        if (!p.isHomogeneous(&deg)) r.failHere("ideal generators must be homogeneous");
        sec.generators.push_back(std::move(p));
      }
    } else {
      t.fail(key, "unknown keyword '" + kw + "' in an ideal section");
    }
  }
  doc.ideals.push_back(std::move(sec));
}

void parseTwistSection(GalgDocument& doc, LineCursor& cur, TokLine& header) {
  TwistingMapSpec spec;
  const Token nameTok = header.peek();
  spec.name = header.expectIdent("a twist name");
  header.expectEol();
  if (doc.findTwist(spec.name)) header.fail(nameTok, "duplicate twist '" + spec.name + "'");

  const AlgebraPresentation* apres = nullptr;
  const AlgebraPresentation* bpres = nullptr;
  bool done = false;
  while (!done) {
    TokLine t = cur.require("twist '" + spec.name + "'");
    const Token key = t.peek();
    std::string kw = t.expectIdent("a keyword (afactor, bfactor, tau, end)");
    if (kw == "end") {
      t.expectEol();
      done = true;
    } else if (kw == "afactor" || kw == "bfactor") {
      const Token atok = t.peek();
      std::string aname = t.expectIdent("an algebra name");
      t.expectEol();
      const AlgebraPresentation* p = doc.findAlgebra(aname);
      if (!p) t.fail(atok, "unknown algebra '" + aname + "'");
      (kw == "afactor" ? apres : bpres) = p;
    } else if (kw == "tau") {
      if (!apres || !bpres) t.fail(key, "tau lines must come after afactor and bfactor");
      t.expectSym("(");
      const Token btok = t.peek();
      std::string bname = t.expectIdent("a generator of the B factor");
      int bIdx = bpres->generatorIndex(bname);
      if (bIdx < 0) t.fail(btok, "unknown B-factor generator '" + bname + "'");
      t.expectSym(",");
      const Token atok = t.peek();
      std::string aname = t.expectIdent("a generator of the A factor");
      int aIdx = apres->generatorIndex(aname);
      if (aIdx < 0) t.fail(atok, "unknown A-factor generator '" + aname + "'");
      t.expectSym(")");
      t.expectSym("=");
      TensorElem val = parseTensorTokens(t, *apres, *bpres);
      t.expectEol();
      if (!spec.values.emplace(std::make_pair(aIdx, bIdx), std::move(val)).second)
        t.fail(key, "duplicate tau(" + bname + ", " + aname + ") line");
    } else {
      t.fail(key, "unknown keyword '" + kw + "' in a twist section");
    }
  }
  if (!apres || !bpres)
    header.fail(nameTok, "twist '" + spec.name + "' needs afactor and bfactor lines");
  spec.aFactor = *apres;
  spec.bFactor = *bpres;
  try {
    spec.validate();
  } catch (const Error& e) {
    header.fail(nameTok, e.what());
  }
  doc.twists.push_back(std::move(spec));
}

void parseJobSection(GalgDocument& doc, LineCursor& cur, TokLine& header) {
  JobSection sec;
  const Token nameTok = header.peek();
  sec.name = header.expectIdent("a job name");
  header.expectEol();
  for (const auto& j : doc.jobs)
    if (j.name == sec.name) header.fail(nameTok, "duplicate job '" + sec.name + "'");

  bool done = false;
  while (!done) {
    TokLine t = cur.require("job '" + sec.name + "'");
    const Token key = t.peek();
    std::string kw = t.expectIdent("a job option");
    if (kw == "end") {
      t.expectEol();
      done = true;
    } else if (kw == "command") {
      if (!sec.command.empty()) t.fail(key, "duplicate command line");
      sec.command = t.expectIdent("a command name");
      t.expectEol();
    } else if (kw == "input") {
      if (!sec.input.empty()) t.fail(key, "duplicate input line");
      if (t.atEol()) t.fail(key, "expected an input path");
      while (!t.atEol()) sec.input += t.take().text;  // path pieces join verbatim
      t.expectEol();
    } else if (kw == "ideal") {
      if (!sec.ideal.empty()) t.fail(key, "duplicate ideal line");
      sec.ideal = t.expectIdent("an ideal name");
      t.expectEol();
    } else if (kw == "max") {
      t.expectSym("-");
      if (t.expectIdent("'degree'") != "degree") t.fail(key, "expected max-degree");
      if (sec.maxDegree >= 0) t.fail(key, "duplicate max-degree line");
      const Token vtok = t.peek();
      long v = t.expectInt("a degree bound");
      if (v < 2) t.fail(vtok, "max-degree must be at least 2");
      sec.maxDegree = static_cast<int>(v);
      t.expectEol();
    } else if (kw == "hbound") {
      if (sec.hBound >= 0) t.fail(key, "duplicate hbound line");
      const Token vtok = t.peek();
      long v = t.expectInt("a homological bound");
      if (v < 1) t.fail(vtok, "hbound must be at least 1");
      sec.hBound = static_cast<int>(v);
      t.expectEol();
    } else if (kw == "format") {
      if (!sec.format.empty()) t.fail(key, "duplicate format line");
      const Token vtok = t.peek();
      sec.format = t.expectIdent("text or json");
      if (sec.format != "text" && sec.format != "json")
        t.fail(vtok, "format must be text or json");
      t.expectEol();
    } else {
      t.fail(key, "unknown job option '" + kw + "'");
    }
  }
  if (sec.command.empty())
    header.fail(nameTok, "job '" + sec.name + "' has no command line");
  doc.jobs.push_back(std::move(sec));
}

}  // namespace

const AlgebraPresentation* GalgDocument::findAlgebra(const std::string& name) const {
  for (const auto& a : algebras)
    if (a.name() == name) return &a;
  return nullptr;
}

const IdealSection* GalgDocument::findIdeal(const std::string& name) const {
  for (const auto& i : ideals)
    if (i.name == name) return &i;
  return nullptr;
}

const TwistingMapSpec* GalgDocument::findTwist(const std::string& name) const {
  for (const auto& t : twists)
    if (t.name == name) return &t;
  return nullptr;
}

void parseGalgInto(GalgDocument& doc, const std::string& text, const std::string& filename) {
  LineCursor cur(filename, text);
  while (auto t = cur.next()) {
    const Token key = t->peek();
    std::string kw = t->expectIdent("a section header (algebra, ideal, twist, job)");
    if (kw == "algebra") {
      parseAlgebraSection(doc, cur, *t);
    } else if (kw == "ideal") {
      parseIdealSection(doc, cur, *t);
    } else if (kw == "twist") {
      parseTwistSection(doc, cur, *t);
    } else if (kw == "job") {
      parseJobSection(doc, cur, *t);
    } else {
      t->fail(key, "unknown section '" + kw + "'");
    }
  }
}

GalgDocument parseGalg(const std::string& text, const std::string& filename) {
  GalgDocument doc;
  parseGalgInto(doc, text, filename);
  return doc;
}

GalgDocument parseGalgFiles(const std::vector<std::string>& paths) {
  GalgDocument doc;
  for (const auto& path : paths) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open input file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    parseGalgInto(doc, buf.str(), path);
  }
  return doc;
}

NcPolynomial parsePolynomial(const std::string& text, const AlgebraPresentation& pres,
                             const std::string& filename) {
  TokLine t(filename, 1, text);
  if (t.empty()) throw ParseError(filename, 1, 1, "empty expression");
  NcPolynomial p = parsePolyTokens(t, pres);
  t.expectEol();
  return p;
}

std::string printGalg(const GalgDocument& doc) {
  std::ostringstream out;
  bool first = true;
  auto gap = [&] {
    if (!first) out << "\n";
    first = false;
  };
  for (const auto& a : doc.algebras) {
    gap();
    out << "algebra " << a.name() << "\n";
    out << "field " << a.field().str() << "\n";
    out << "generators ";
    for (size_t i = 0; i < a.generators().size(); ++i) {
      if (i) out << ", ";
      out << a.generators()[i].name;
      if (a.generators()[i].weight != 1) out << "(" << a.generators()[i].weight << ")";
    }
    out << "\n";
    out << "relations\n";
    for (const auto& r : a.relations()) out << "  " << r.str(a.generatorNames()) << "\n";
    out << "end\n";
  }
  for (const auto& s : doc.ideals) {
    gap();
    const AlgebraPresentation* pres = doc.findAlgebra(s.algebra);
    std::vector<std::string> names =
        pres ? pres->generatorNames() : std::vector<std::string>{};
    out << "ideal " << s.name << " on " << s.algebra << "\n";
    out << "side " << sideName(s.side) << "\n";
    out << "generators\n";
    for (const auto& g : s.generators) out << "  " << g.str(names) << "\n";
    out << "end\n";
  }
  for (const auto& t : doc.twists) {
    gap();
    out << "twist " << t.name << "\n";
    out << "afactor " << t.aFactor.name() << "\n";
    out << "bfactor " << t.bFactor.name() << "\n";
    auto aNames = t.aFactor.generatorNames();
    auto bNames = t.bFactor.generatorNames();
    for (const auto& [key, val] : t.values) {
      out << "tau(" << bNames.at(static_cast<size_t>(key.second)) << ", "
          << aNames.at(static_cast<size_t>(key.first)) << ") = " << val.str(aNames, bNames)
          << "\n";
    }
    out << "end\n";
  }
  for (const auto& j : doc.jobs) {
    gap();
    out << "job " << j.name << "\n";
    out << "command " << j.command << "\n";
    if (!j.input.empty()) out << "input " << j.input << "\n";
    if (!j.ideal.empty()) out << "ideal " << j.ideal << "\n";
    if (j.maxDegree >= 0) out << "max-degree " << j.maxDegree << "\n";
    if (j.hBound >= 0) out << "hbound " << j.hBound << "\n";
    if (!j.format.empty()) out << "format " << j.format << "\n";
    out << "end\n";
  }
  return out.str();
}

}  // namespace gcoh
