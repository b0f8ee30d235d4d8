#include "ixc/contraction.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "ixc/structure.hpp"
#include "json.hpp"

namespace ixc {

namespace {

bool is_alignment_edge(const Problem& p, Msg a, Msg b) {
  for (const ConflictHyperedge& h : conflict_hyperedges(p))
    if (set_contains(h.interference, a) && set_contains(h.interference, b)) return true;
  return false;
}

}  // namespace

std::pair<Problem, ContractionMap> contract_edge(const Problem& p, Msg a, Msg b) {
  if (a < 0 || b < 0 || a >= p.n || b >= p.n || a == b)
    throw InvariantError("contract_edge: invalid pair (" + std::to_string(a + 1) + "," +
                         std::to_string(b + 1) + ") for n=" + std::to_string(p.n));
  const Msg lo = std::min(a, b);
  const Msg hi = std::max(a, b);
  if (in_conflict(conflict_pairs(p), lo, hi))
    throw EndpointsInConflict("messages " + std::to_string(lo + 1) + " and " +
                              std::to_string(hi + 1) + " are in conflict");
  if (!is_alignment_edge(p, lo, hi))
    throw NotAlignmentEdge("messages " + std::to_string(lo + 1) + " and " +
                           std::to_string(hi + 1) + " never interfere together");

  const auto relabel = [lo, hi](Msg m) { return m == hi ? lo : (m > hi ? m - 1 : m); };
  std::vector<Receiver> receivers;
  receivers.reserve(p.receivers.size());
  for (const Receiver& r : p.receivers) {
    Receiver nr;
    std::vector<Msg> d;
    for (Msg m : r.demands) d.push_back(relabel(m));
    nr.demands = make_set(std::move(d));
    std::vector<Msg> s;
    for (Msg m : r.side_info)
      if (m != lo && m != hi) s.push_back(relabel(m));
    // the merged vertex is known only where both endpoints were
    if (set_contains(r.side_info, lo) && set_contains(r.side_info, hi)) s.push_back(lo);
    nr.side_info = make_set(std::move(s));
    receivers.push_back(std::move(nr));
  }

  ContractionMap cm;
  cm.source_n = p.n;
  cm.target_n = p.n - 1;
  cm.forward.reserve(static_cast<size_t>(p.n));
  for (Msg m = 0; m < p.n; ++m) cm.forward.push_back(relabel(m));
  cm.history.emplace_back(lo, hi);
  return {make_problem(p.n - 1, std::move(receivers), p.field_hint), std::move(cm)};
}

std::pair<Problem, ContractionMap> maximal_contraction(const Problem& p,
                                                       ContractionPolicy policy, uint64_t seed) {
  Problem cur = p;
  ContractionMap acc;
  acc.source_n = p.n;
  acc.target_n = p.n;
  acc.forward.resize(static_cast<size_t>(p.n));
  std::iota(acc.forward.begin(), acc.forward.end(), 0);

  Rng rng(seed);
  for (;;) {
    const auto conflicts = conflict_pairs(cur);
    std::vector<std::pair<Msg, Msg>> eligible;
    for (const auto& e : alignment_sets(cur).graph.edges)
      if (!in_conflict(conflicts, e.first, e.second)) eligible.push_back(e);
    if (eligible.empty()) break;
    const auto pick = policy == ContractionPolicy::SeededRandom
                          ? eligible[rng.below(eligible.size())]
                          : eligible.front();
    auto [next, step] = contract_edge(cur, pick.first, pick.second);
    for (Msg m = 0; m < p.n; ++m)
      acc.forward[static_cast<size_t>(m)] =
          step.forward[static_cast<size_t>(acc.forward[static_cast<size_t>(m)])];
    acc.history.push_back(pick);
    acc.target_n = next.n;
    cur = std::move(next);
  }
  return {std::move(cur), std::move(acc)};
}

PrecodingAssignment lift_code(const PrecodingAssignment& code, const ContractionMap& cm) {
  if (static_cast<int>(cm.forward.size()) != cm.source_n ||
      cm.target_n != cm.source_n - static_cast<int>(cm.history.size()))
    throw IndexMismatch("contraction map is internally inconsistent");
  if (static_cast<int>(code.vectors.size()) != cm.target_n)
    throw IndexMismatch("code indexes " + std::to_string(code.vectors.size()) +
                        " messages, contraction target has " + std::to_string(cm.target_n));
  PrecodingAssignment out;
  out.L = code.L;
  out.field = code.field;
  out.vectors.reserve(cm.forward.size());
  for (Msg img : cm.forward) {
    if (img < 0 || img >= cm.target_n)
      throw IndexMismatch("forward image " + std::to_string(img) + " out of range");
    out.vectors.push_back(code.vectors[static_cast<size_t>(img)]);
  }
  return out;
}

const char* policy_name(ContractionPolicy policy) {
  switch (policy) {
    case ContractionPolicy::Lexicographic:
      return "lexicographic";
    case ContractionPolicy::SeededRandom:
      return "seeded-random";
  }
  return "?";
}

std::optional<ContractionPolicy> policy_from_name(std::string_view name) {
  if (name == "lexicographic") return ContractionPolicy::Lexicographic;
  if (name == "seeded-random") return ContractionPolicy::SeededRandom;
  return std::nullopt;
}

std::string contraction_map_to_json(const ContractionMap& cm) {
  nlohmann::json j;
  nlohmann::json fwd = nlohmann::json::array();
  for (Msg m : cm.forward) fwd.push_back(m + 1);
  j["forward"] = std::move(fwd);
  nlohmann::json hist = nlohmann::json::array();
  for (const auto& [a, b] : cm.history) hist.push_back(nlohmann::json::array({a + 1, b + 1}));
  j["history"] = std::move(hist);
  return j.dump(2) + "\n";
}

}  // namespace ixc
