#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ixc/encoder.hpp"
#include "ixc/inference.hpp"
#include "ixc/oracle.hpp"
#include "ixc/problem.hpp"
#include "ixc/structure.hpp"

namespace ixc {

/// Everything one analysis pass learns about an instance. Pattern matches
/// are re-validated against the instance before the report is handed out.
struct Report {
  int n = 0;
  int receivers = 0;
  std::vector<std::pair<Msg, Msg>> conflicts;
  std::vector<MsgSet> alignment_sets;
  std::vector<PatternMatch> patterns;
  Certificate certificate;
  std::optional<ConstructResult> code;
  std::optional<OracleResult> oracle;
};

struct AnalyzeOptions {
  /// When inference is inconclusive, try to settle the question positively
  /// by building a verified length-3 code.
  bool attempt_construction = true;
  ConstructOptions construction;
};

/// Summarizes the instance, detects every pattern, runs inference, and (if
/// that was inconclusive and allowed) attempts an explicit construction.
/// Throws InvariantError if a detected pattern fails re-validation.
Report analyze(const Problem& p, const AnalyzeOptions& opts = {});

/// Checks every match against the instance: witnesses must point at real
/// interference and role maps must satisfy their pattern's predicate.
/// Throws InvariantError on the first violation.
void validate_patterns(const Problem& p, const std::vector<PatternMatch>& patterns);

std::string report_to_json(const Report& r);
std::string report_to_text(const Report& r);

}  // namespace ixc
