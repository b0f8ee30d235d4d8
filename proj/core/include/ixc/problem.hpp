#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ixc/errors.hpp"

namespace ixc {

/// Message index. 0-based everywhere in memory; 1-based in files, JSON and
/// rendered text.
using Msg = int;

/// Sorted, duplicate-free list of message indices.
using MsgSet = std::vector<Msg>;

MsgSet make_set(std::vector<Msg> v);
bool set_contains(const MsgSet& s, Msg m);
MsgSet set_union(const MsgSet& a, const MsgSet& b);
MsgSet set_intersect(const MsgSet& a, const MsgSet& b);
MsgSet set_minus(const MsgSet& a, const MsgSet& b);
bool is_subset(const MsgSet& a, const MsgSet& b);
std::string set_to_string(const MsgSet& s);  // 1-based, "{1,2,3}"

struct Receiver {
  MsgSet demands;
  MsgSet side_info;

  bool operator==(const Receiver&) const = default;
};

struct Problem {
  int n = 0;
  std::optional<uint32_t> field_hint;
  std::vector<Receiver> receivers;

  bool operator==(const Problem&) const = default;
};

/// Validates index ranges, demand/side-info disjointness and non-empty
/// demands; normalizes the sets.
Problem make_problem(int n, std::vector<Receiver> receivers,
                     std::optional<uint32_t> field_hint = std::nullopt);

/// Receiver that pins down an exact interfering set: it demands d and knows
/// everything except d and the given interferers.
Receiver demand_with_interference(int n, Msg d, const MsgSet& interference);

/// Receiver demanding d with full side information (empty interference).
Receiver sink(int n, Msg d);

/// Messages the receiver j cannot cancel when decoding k: everything outside
/// {k} and its side information. Empty when j does not demand k.
MsgSet interfering_set(const Problem& p, int j, Msg k);

struct ConflictHyperedge {
  Msg demand = 0;
  int receiver = 0;
  MsgSet interference;
};

/// One hyperedge per (receiver, demanded message) with non-empty interference.
std::vector<ConflictHyperedge> conflict_hyperedges(const Problem& p);

/// Unordered conflicting pairs (a < b): a interferes somewhere that b is
/// demanded, or vice versa.
std::vector<std::pair<Msg, Msg>> conflict_pairs(const Problem& p);

bool in_conflict(const std::vector<std::pair<Msg, Msg>>& pairs, Msg a, Msg b);

/// Messages demanded by at least one receiver.
MsgSet demanded_messages(const Problem& p);

struct Restriction {
  Problem problem;
  /// restricted index -> original message
  std::vector<Msg> to_original;
  /// original message -> restricted index, or -1 if dropped
  std::vector<Msg> from_original;
};

/// Sub-problem on a message subset: keeps receivers demanding something in
/// the subset, intersects their demand and side-information sets with it,
/// and reindexes messages consecutively.
Restriction restrict_to(const Problem& p, const MsgSet& subset);

/// Parses the instance JSON schema
/// {"n": int, "field": {"q": int}?, "receivers": [{"demands": [...],
/// "side_info": [...]}]} with 1-based message indices.
Problem parse_instance(const std::string& json_text);

/// Canonical serialization: receivers in input order, sets ascending,
/// 1-based indices, sorted keys, two-space indent.
std::string instance_to_json(const Problem& p);

}  // namespace ixc
