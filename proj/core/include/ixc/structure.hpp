#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "ixc/problem.hpp"

namespace ixc {

enum class PatternKind { Triangular, Type2, Xtype2, Stic, Spic, SpicAlignment };

/// Certifies messages ⊆ interfering_set(p, receiver, demand). A conflict
/// witness is the singleton case.
struct Witness {
  int receiver;
  Msg demand;
  MsgSet messages;
  friend auto operator<=>(const Witness&, const Witness&) = default;
};

struct PatternMatch {
  PatternKind kind;
  MsgSet members;
  /// Role i of the pattern maps to message role_map[i]; empty unless
  /// kind is Stic (6 roles) or Spic (5 roles).
  std::vector<Msg> role_map;
  std::vector<Witness> witnesses;
};

struct AlignmentGraph {
  int n = 0;
  std::vector<std::pair<Msg, Msg>> edges;  // a < b, sorted
};

struct AlignmentStructure {
  AlignmentGraph graph;
  std::vector<MsgSet> sets;  // connected components, sorted by first member
};

/// Alignment graph (edge (a,b) iff a,b interfere together at some receiver)
/// plus its connected components; isolated messages form singleton sets.
AlignmentStructure alignment_sets(const Problem& p);

struct ForkCycleFlags {
  bool has_fork = false;   // some vertex of the set has alignment degree >= 3
  bool has_cycle = false;  // induced subgraph contains a cycle
};

/// Throws NotAnAlignmentSet unless aset is one of alignment_sets(p).sets.
ForkCycleFlags fork_cycle_flags(const Problem& p, const MsgSet& aset);

/// A 3-subset of some interfering set, with every (receiver, demand)
/// justifying it.
struct InterferingTriple {
  MsgSet members;
  std::vector<Witness> witnesses;
};

std::vector<InterferingTriple> interfering_triples(const Problem& p);

/// Interfering 3-subsets with at least two members in conflict with each
/// other.
std::vector<PatternMatch> triangular_sets(const Problem& p);

/// Unions of maximal classes of triangular sets, where two triangles are
/// adjacent iff their intersection is exactly a conflicting pair.
std::vector<PatternMatch> type2_sets(const Problem& p);

/// Maximal unions of type-2 sets chained by intersections that contain a
/// conflicting pair; unions nested inside a larger union are dropped.
std::vector<PatternMatch> xtype2_sets(const Problem& p);

/// Three interfering triples {1,2,3},{2,4,5},{3,5,6} pinned at external
/// receivers, pairs {1,2},{2,4} interfering at 6, {1,3},{3,6} at 4,
/// {4,5},{5,6} at 1, and no conflicts within the image beyond the six these
/// interferences force. Matches are deduplicated under the role swap
/// (2<->3)(4<->6); the lexicographically smaller role map is kept.
std::vector<PatternMatch> detect_stic(const Problem& p);

/// Four interfering triples {1,2,3},{1,3,4},{3,4,5},{2,3,5} pinned at
/// external receivers, pairs {1,2} interfering at 5 and {4,5} at 2, messages
/// 1 and 3 in conflict, and no other conflicts within the image. The pattern
/// has no nontrivial automorphism, so every valid role map is its own match.
std::vector<PatternMatch> detect_spic(const Problem& p);

/// Full predicate behind detect_stic / detect_spic, usable for brute-force
/// cross-checks: does this exact role assignment satisfy every pattern
/// constraint?
bool is_stic_role_map(const Problem& p, const std::array<Msg, 6>& roles);
bool is_spic_role_map(const Problem& p, const std::array<Msg, 5>& roles);

/// Lexicographically smallest role map in the orbit of the pattern's
/// automorphism group (the S3 permuting the three triples; order 6).
std::array<Msg, 6> stic_canonical_roles(const std::array<Msg, 6>& roles);

/// Maximal classes of SPIC matches, adjacent iff the intersection of their
/// images contains a pair from rate1_infeasible_pairs (conflicts plus pairs
/// proven unable to share a single dimension).
std::vector<PatternMatch> spic_alignment_sets(
    const Problem& p, const std::vector<std::pair<Msg, Msg>>& rate1_infeasible_pairs);

/// Intersection graph of extended type-2 sets: one vertex per set, an edge
/// wherever two sets share a message.
struct Etig {
  std::vector<MsgSet> vertices;
  std::vector<std::pair<int, int>> edges;  // vertex indices, i < j
};

Etig build_etig(const std::vector<PatternMatch>& xsets);

/// Conflict pairs whose two messages lie in the same alignment set.
std::vector<std::pair<Msg, Msg>> internal_conflict_pairs(const Problem& p);

/// First conflict pair (in original labels) internal to an alignment set of
/// the subproblem restricted to subset, if any.
std::optional<std::pair<Msg, Msg>> restricted_internal_conflict(const Problem& p,
                                                                const MsgSet& subset);

}  // namespace ixc
