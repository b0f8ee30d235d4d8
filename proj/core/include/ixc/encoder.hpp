#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ixc/code.hpp"
#include "ixc/contraction.hpp"
#include "ixc/gf.hpp"
#include "ixc/problem.hpp"
#include "ixc/structure.hpp"

namespace ixc {

/// One failed structural precondition of the length-3 construction.
struct ConditionIssue {
  char condition;         // 'a', 'b', or 'c'
  std::string detail;
  std::vector<int> sets;  // indices into the report's extended type-2 sets
  MsgSet messages;        // offending message(s)
};

struct ConditionReport {
  std::vector<PatternMatch> xsets;
  std::vector<ConditionIssue> issues;
  bool ok() const { return issues.empty(); }
};

/// On a maximally contracted problem, test the three conditions under which
/// the explicit length-3 construction goes through: (a) no extended type-2
/// set has a restricted internal conflict, (b) no message lies in three or
/// more of the sets, (c) no conflict joins two messages in the intersection
/// of two sets. Throws NotMaximal if an alignment edge of pc joins
/// non-conflicting messages. The second overload screens a caller-supplied
/// set list instead of detecting one.
ConditionReport check_xtype2_conditions(const Problem& pc);
ConditionReport check_xtype2_conditions(const Problem& pc, std::vector<PatternMatch> xsets);

/// Intersection graph of the extended type-2 sets plus the vector data the
/// assignment steps fill in: one length-3 vector per edge and the running
/// span of the assigned vectors incident to each vertex.
struct EtigAssignment {
  Etig graph;
  Field field{};
  std::vector<std::optional<FVector>> edge_vectors;  // parallel to graph.edges
  std::vector<Subspace> vertex_spans;                // parallel to graph.vertices

  bool complete() const {
    for (const auto& v : edge_vectors)
      if (!v) return false;
    return true;
  }
};

/// Assign a nonzero vector to every edge while keeping each vertex's
/// incident span within two dimensions: when both endpoint spans are already
/// 2-dimensional the vector comes from their intersection (never empty in a
/// 3-dimensional ambient space), when exactly one is it donates the vector,
/// and otherwise the vector is random. Edges are processed in the listed
/// order; the first overload uses the graph's own (lexicographic) order, the
/// second takes an explicit permutation of graph.edges and throws
/// IndexMismatch if it is not one.
EtigAssignment assign_etig_vectors(const Etig& etig, Field field, uint64_t seed);
EtigAssignment assign_etig_vectors(const Etig& etig, Field field, uint64_t seed,
                                   const std::vector<std::pair<int, int>>& order);

/// Spread a completed edge assignment onto the messages: each message shared
/// by two sets takes their edge's vector, the rest of every set is sampled
/// from a 2-dimensional space (the vertex's incident span, extended or drawn
/// fresh when it is smaller), and every message outside the sets gets an
/// independent random nonzero vector. Throws ConditionViolation if the
/// assignment is incomplete or one message would need two different edge
/// vectors.
PrecodingAssignment assign_message_vectors(const Problem& pc, const EtigAssignment& etig,
                                           uint64_t seed);

struct ConstructOptions {
  Field field = Field::of(101);
  uint64_t seed = 0;
  int max_retries = 32;
  std::vector<ContractionPolicy> policies{ContractionPolicy::Lexicographic,
                                          ContractionPolicy::SeededRandom};
  int random_orders = 4;  // contraction orders explored per SeededRandom entry
};

struct ConstructResult {
  PrecodingAssignment code;  // verified on the original problem
  ContractionMap map;        // contraction the code was built on
  ContractionPolicy policy = ContractionPolicy::Lexicographic;
  uint64_t seed = 0;         // master seed, echoed for replay
  int retries_used = 0;      // failed assignment rounds before the verified one
};

/// End-to-end length-3 construction: contract maximally under each policy,
/// keep the contractions that pass check_xtype2_conditions, and retry the
/// randomized vector assignment until a code verifies on the contraction;
/// the winner is lifted and re-verified on the original problem. Throws
/// NoQualifyingContraction when no explored contraction meets the conditions
/// and RetryExhausted when every qualifying one runs out of retries; both
/// messages carry the per-contraction diagnostics.
ConstructResult construct_length3_code(const Problem& p, const ConstructOptions& opts = {});

std::string construct_result_to_json(const ConstructResult& r);

struct AlignmentSetStatus {
  MsgSet members;
  bool has_fork = false;
  bool has_cycle = false;
  /// Coincides with a type-2 set and has no restricted internal conflict.
  bool clean_type2 = false;

  bool ok() const { return !(has_fork && has_cycle) || clean_type2; }
};

/// Screens every alignment set: a set passes by avoiding forks and cycles
/// together, or failing that by being a clean type-2 set; the whole problem
/// passes when every set does. Check only; construction always routes
/// through the contraction pipeline.
struct ForkCycleReport {
  std::vector<AlignmentSetStatus> sets;
  bool ok = true;
};

ForkCycleReport fork_cycle_report(const Problem& p);

}  // namespace ixc
