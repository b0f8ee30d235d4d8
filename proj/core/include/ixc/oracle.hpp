#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ixc/code.hpp"
#include "ixc/gf.hpp"
#include "ixc/problem.hpp"

namespace ixc {

struct OracleResult {
  bool feasible = false;
  std::optional<PrecodingAssignment> witness;  // passes verify_code when present
  long long nodes_explored = 0;
  /// Classification runs only: for each queried subset, every dimension its
  /// span attains across all valid codes. Vacuous marks the degenerate case
  /// where no valid code exists at all, so the sets are empty.
  std::optional<std::map<MsgSet, std::set<int>>> achievable_dims;
  bool vacuous = false;
};

struct OracleOptions {
  Field field = Field::of(2);
  long long budget = 1'000'000'000;  // search-node cap; BudgetExceeded past it
  int threads = 1;                   // classification only; searches stay single-threaded
};

/// Exhaustive ground truth for "does a length-L scalar linear code exist":
/// backtracking over vector assignments, message by message in
/// most-constrained-first order, pruning as soon as any demanded vector falls
/// into the span of its already-assigned interference. Demanded messages skip
/// the zero vector; the first branching message enumerates one vector per
/// projective class. Supports L in 1..4 and q in {2,3,5}; throws
/// BudgetExceeded when the node cap is hit before an answer.
OracleResult feasible_rate(const Problem& p, int L, const OracleOptions& opts = {});

/// Enumerates every valid length-L code (no projective shortcut) and records,
/// for each queried subset, the set of dimensions its span attains. Messages
/// of the subsets' union are enumerated first; each assignment of the union
/// then only needs one completion to count, found by a first-solution search
/// over the rest. Top-level branches run on opts.threads workers.
OracleResult classify_subset_dims(const Problem& p, const std::vector<MsgSet>& subsets,
                                  int L = 3, const OracleOptions& opts = {});

/// Smallest L in 1..max_l with a feasible length-L code, or nullopt if none.
std::optional<int> minrank(const Problem& p, int max_l = 4, const OracleOptions& opts = {});

std::string oracle_result_to_json(const OracleResult& r);

}  // namespace ixc
