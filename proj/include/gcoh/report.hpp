#pragma once

#include <iosfwd>

#include "gcoh/coherence.hpp"
#include "gcoh/twist.hpp"

namespace gcoh {

enum class OutputFormat { Text, Json };

// stamped into the header line of every JSON report
inline constexpr const char* kReportSchema = "gcoh-report/1";

// JSON mode is streamed as JSON Lines: one header object, one object per
// degree in ascending order, then one summary object.  Header and degree
// lines never depend on the degree bound, so a run with a smaller bound is a
// byte prefix of a larger one up to its summary line.  Text mode is
// human-oriented and makes no prefix promise.

void emitHilbert(std::ostream& out, OutputFormat fmt, const RewriteSystem& A, int maxDegree);
void emitBasis(std::ostream& out, OutputFormat fmt, const RewriteSystem& A, int maxDegree);
void emitNormalForm(std::ostream& out, OutputFormat fmt, const RewriteSystem& A,
                    const std::string& expr, const NcPolynomial& nf);

struct AnnReport {
  std::string algebra;
  std::string element;  // printed form
  Side side = Side::Left;
  int maxDegree = 0;
  std::map<int, long> dims;
  std::map<int, long> newGenCounts;
  std::vector<int> generatorDegrees;
  std::vector<std::string> generators;  // printed, parallel to generatorDegrees
  bool finiteInWindow = false;
};
void emitAnn(std::ostream& out, OutputFormat fmt, const AnnReport& r);

struct SyzygyReport {
  std::string algebra;
  std::string ideal;
  Side side = Side::Left;
  int maxDegree = 0;
  std::map<int, long> idealDims;
  std::map<int, long> newGenCounts;
  std::map<int, long> newSyzCounts;
  std::vector<int> generatorDegrees;
  std::vector<int> syzygyDegrees;
};
void emitSyzygy(std::ostream& out, OutputFormat fmt, const SyzygyReport& r);

void emitBetti(std::ostream& out, OutputFormat fmt, const std::string& algebra,
               const std::string& module, const BettiTable& table);

void emitExtension(std::ostream& out, OutputFormat fmt, const std::string& quotientName,
                   const FreeExtensionData& ext);

void emitCriterion(std::ostream& out, OutputFormat fmt, const CoherenceReport& rep);

// twist run: consistency outcome, optional product dimensions, optional
// hexagon/associativity outcomes ("ok", "skipped", or a failure description)
struct TwistRunReport {
  const TwistData* twist = nullptr;
  const TwistedProduct* product = nullptr;  // may be null
  std::string hexagon;
  std::string associativity;
};
void emitTwist(std::ostream& out, OutputFormat fmt, const TwistRunReport& r);

// named pass/fail rows (verify-paper and friends)
struct CheckLine {
  std::string name;
  bool pass = false;
  std::string detail;
};
void emitChecks(std::ostream& out, OutputFormat fmt, const std::string& command,
                const std::vector<CheckLine>& checks);

}  // namespace gcoh
