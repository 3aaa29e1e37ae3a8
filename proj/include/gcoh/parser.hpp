#pragma once

#include "gcoh/module.hpp"
#include "gcoh/twist.hpp"

namespace gcoh {

// Input error with a source position; what() is "file:line:col: message" and
// the position points into the offending token.
class ParseError : public Error {
 public:
  ParseError(const std::string& file, int line, int col, const std::string& msg)
      : Error(file + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + msg),
        file_(file),
        line_(line),
        col_(col) {}

  const std::string& file() const { return file_; }
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  std::string file_;
  int line_, col_;
};

// `ideal NAME on ALGEBRA` section: generators are polynomials over the named
// algebra, which must be declared earlier in the same parse run.
struct IdealSection {
  std::string name;
  std::string algebra;
  Side side = Side::Left;
  std::vector<NcPolynomial> generators;
};

// `job NAME` section: a named bundle of run options.  Jobs parse and print
// with the rest of the format; -1 / empty mean "not set".
struct JobSection {
  std::string name;
  std::string command;
  std::string input;
  std::string ideal;
  int maxDegree = -1;
  int hBound = -1;
  std::string format;
};

struct GalgDocument {
  std::vector<AlgebraPresentation> algebras;
  std::vector<IdealSection> ideals;
  std::vector<TwistingMapSpec> twists;
  std::vector<JobSection> jobs;

  // nullptr when absent
  const AlgebraPresentation* findAlgebra(const std::string& name) const;
  const IdealSection* findIdeal(const std::string& name) const;
  const TwistingMapSpec* findTwist(const std::string& name) const;
};

// Parses the sections of `text` and appends them to `doc`, so references
// (ideal `on`, twist `afactor`/`bfactor`) resolve across files parsed into
// the same document.
void parseGalgInto(GalgDocument& doc, const std::string& text, const std::string& filename);

GalgDocument parseGalg(const std::string& text, const std::string& filename = "<input>");
GalgDocument parseGalgFiles(const std::vector<std::string>& paths);

// One polynomial in the generators of `pres`, e.g. "y*z - 2*z*y + x^2".
// `*` binds tighter than `+`/`-`; `^` repeats a single generator; rational
// literals like 3/2 are coefficients; juxtaposition is not multiplication.
NcPolynomial parsePolynomial(const std::string& text, const AlgebraPresentation& pres,
                             const std::string& filename = "<expr>");

// Canonical text form: algebras, ideals, twists, jobs in declaration order,
// one blank line between sections.  parseGalg(printGalg(d)) rebuilds d.
std::string printGalg(const GalgDocument& doc);

}  // namespace gcoh
