#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ixc/problem.hpp"
#include "ixc/structure.hpp"

namespace ixc {

/// Dimensions a message subset may span in a 3-dimensional code, as a bitmask:
/// bit L-1 set means "span of the subset's vectors may have dimension L".
using DimMask = uint8_t;

constexpr DimMask kAllDims = 0b111;

constexpr DimMask dim_bit(int L) { return static_cast<DimMask>(1u << (L - 1)); }
constexpr bool dim_allowed(DimMask m, int L) { return (m & dim_bit(L)) != 0; }

DimMask make_dims(std::initializer_list<int> dims);
std::vector<int> dims_list(DimMask m);
std::string dims_to_string(DimMask m);  // "{1,3}"

/// One rule application constraining the dimensions of a subset. `rule` is a
/// stable content id ("conflict-pair", "interfering-set", "triangular-set",
/// "type2-set", "xtype2-set", "stic-inner", "stic-outer", "spic-quad",
/// "spic-full", "spic-pair-dim2", "spic-pair-dim1", "spic-alignment",
/// "union-stitch", "subset-refine").
struct Contribution {
  std::string rule;
  DimMask dims = kAllDims;
  std::vector<Witness> witnesses;           // receiver evidence
  std::vector<PatternMatch> matches;        // pattern evidence
  std::vector<MsgSet> parents;              // fact subsets consumed by closure rules
  std::optional<MsgSet> link;               // union-stitch: subset of A∩B that excludes dim 1
  std::optional<std::pair<Msg, Msg>> pair;  // conflicting pair evidence
};

/// What every valid 3-dimensional code must satisfy on `subset`: the span of
/// its vectors has a dimension in allowed_dims. allowed_dims is the
/// intersection over sources; it is empty only inside a certificate.
struct StrictRateFact {
  MsgSet subset;
  DimMask allowed_dims = kAllDims;
  std::vector<Contribution> sources;
};

/// Facts read off the problem and its detected patterns: conflicting pairs
/// span exactly 2 dimensions; interfering sets span at most 2; triangular,
/// type-2, extended type-2 and pyramid-alignment sets span exactly 2; per
/// three-triple match the inner triple spans 1 or 3 and each outer triple
/// exactly 2; per square-pyramid match the quad and full image span exactly
/// 2, the two cross pairs exactly 2, and the two edge pairs exactly 1.
/// One fact per subset, dims intersected eagerly, sorted by subset.
std::vector<StrictRateFact> seed_facts(const Problem& p,
                                       const std::vector<PatternMatch>& matches);

/// Fixed point of two derivations: (union) if A and B each span exactly 2
/// dimensions and some fact inside A∩B rules out dimension 1, then A∪B spans
/// exactly 2; (refine) if a fact's subset lies inside an exactly-2 set and
/// contains a conflicting pair, it spans exactly 2 as well.
std::vector<StrictRateFact> stitch_closure(std::vector<StrictRateFact> facts,
                                           const Problem& p);

enum class Verdict { Rate1Feasible, RateHalfFeasible, RateThirdInfeasible, Inconclusive };

std::string verdict_name(Verdict v);  // "rate-1-feasible", ..., "inconclusive"

struct Certificate {
  Verdict verdict = Verdict::Inconclusive;
  std::string reason;
  std::vector<StrictRateFact> facts_used;
  std::optional<MsgSet> subject;                 // subset carrying the contradiction
  std::optional<std::pair<Msg, Msg>> conflict;   // restricted internal conflict, if that rule fired
};

/// Scans closed facts for (a) a subset whose allowed dimensions intersect to
/// nothing, citing a minimal set of mutually exclusive sources, or (b) an
/// exactly-2 subset whose restriction has a conflict inside one of its
/// alignment sets (two aligned messages cannot be independent in 2 dims).
std::optional<Certificate> find_contradiction(const std::vector<StrictRateFact>& facts,
                                              const Problem& p);

/// Rate-1 feasible iff no conflicting pair; rate-1/2 feasible (over large
/// enough fields) iff no conflict inside an alignment set; otherwise runs
/// seeding and closure and reports an infeasibility certificate or gives up.
Certificate quick_verdict(const Problem& p);

/// Conflicting pairs plus every two-message fact that rules out dimension 1
/// (the pairs pyramid adjacency is decided by).
std::vector<std::pair<Msg, Msg>> rate1_infeasible_pairs(
    const Problem& p, const std::vector<StrictRateFact>& facts);

/// Runs every pattern detector. Pyramid alignment classes are computed in a
/// second phase, fed by the pairs the first phase proves unable to share a
/// dimension.
std::vector<PatternMatch> collect_matches(const Problem& p);

/// Pretty JSON: verdict, reason, cited facts with full provenance. Message
/// labels 1-based, receiver ids are indices into the instance's array.
std::string certificate_to_json(const Certificate& c);

}  // namespace ixc
