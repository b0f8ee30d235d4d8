#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ixc/code.hpp"
#include "ixc/problem.hpp"

namespace ixc {

/// Record of merging alignment-connected, non-conflicting messages. History
/// pairs carry the labels current at their step; replaying them from the
/// source problem reproduces forward.
struct ContractionMap {
  std::vector<Msg> forward;  // original message -> vertex of the contracted problem
  std::vector<std::pair<Msg, Msg>> history;
  int source_n = 0;
  int target_n = 0;

  friend bool operator==(const ContractionMap&, const ContractionMap&) = default;
};

/// Merges alignment edge (a,b) into min(a,b); labels above max(a,b) shift
/// down. The merged vertex is demanded where either endpoint was and known
/// where both were; receiver count is unchanged. Throws EndpointsInConflict
/// first (a conflicting pair is never contractible), then NotAlignmentEdge.
std::pair<Problem, ContractionMap> contract_edge(const Problem& p, Msg a, Msg b);

enum class ContractionPolicy { Lexicographic, SeededRandom };

/// Stable wire names: "lexicographic", "seeded-random".
const char* policy_name(ContractionPolicy policy);
std::optional<ContractionPolicy> policy_from_name(std::string_view name);

/// Contracts eligible edges (alignment edges joining non-conflicting
/// vertices) until none remain, so every surviving alignment edge joins a
/// conflicting pair. Lexicographic picks the smallest eligible pair each
/// round; SeededRandom draws from the eligible list. Deterministic for a
/// fixed (policy, seed).
std::pair<Problem, ContractionMap> maximal_contraction(
    const Problem& p, ContractionPolicy policy = ContractionPolicy::Lexicographic,
    uint64_t seed = 0);

/// Every original message takes the vector of its merged image; a valid code
/// of the contracted problem stays valid on the source problem.
PrecodingAssignment lift_code(const PrecodingAssignment& code, const ContractionMap& cm);

/// JSON {"forward":[..],"history":[[a,b],..]}; 1-based labels.
std::string contraction_map_to_json(const ContractionMap& cm);

}  // namespace ixc
