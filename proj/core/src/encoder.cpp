#include "ixc/encoder.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <utility>

#include "json_util.hpp"

namespace ixc {

namespace {

std::string label(Msg m) { return std::to_string(m + 1); }

std::string label_pair(Msg a, Msg b) { return "(" + label(a) + "," + label(b) + ")"; }

MsgSet intersect_sets(const MsgSet& a, const MsgSet& b) {
  MsgSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

void require_maximal(const Problem& pc) {
  const auto conflicts = conflict_pairs(pc);
  for (const auto& [a, b] : alignment_sets(pc).graph.edges)
    if (!in_conflict(conflicts, a, b))
      throw NotMaximal("alignment edge " + label_pair(a, b) +
                       " joins non-conflicting messages; contract it first");
}

}  // namespace

ConditionReport check_xtype2_conditions(const Problem& pc) {
  return check_xtype2_conditions(pc, xtype2_sets(pc));
}

ConditionReport check_xtype2_conditions(const Problem& pc, std::vector<PatternMatch> xsets) {
  require_maximal(pc);

  ConditionReport rep;
  rep.xsets = std::move(xsets);
  const auto conflicts = conflict_pairs(pc);

  for (size_t i = 0; i < rep.xsets.size(); ++i) {
    if (auto pr = restricted_internal_conflict(pc, rep.xsets[i].members)) {
      ConditionIssue issue{'a', "", {static_cast<int>(i)}, {pr->first, pr->second}};
      issue.detail = "set " + std::to_string(i) + " has the restricted internal conflict " +
                     label_pair(pr->first, pr->second);
      rep.issues.push_back(std::move(issue));
    }
  }

  std::map<Msg, std::vector<int>> owners;
  for (size_t i = 0; i < rep.xsets.size(); ++i)
    for (Msg m : rep.xsets[i].members) owners[m].push_back(static_cast<int>(i));
  for (const auto& [m, sets] : owners) {
    if (sets.size() < 3) continue;
    ConditionIssue issue{'b', "", sets, {m}};
    issue.detail = "message " + label(m) + " lies in " + std::to_string(sets.size()) + " sets";
    rep.issues.push_back(std::move(issue));
  }

  for (size_t i = 0; i < rep.xsets.size(); ++i) {
    for (size_t j = i + 1; j < rep.xsets.size(); ++j) {
      MsgSet inter = intersect_sets(rep.xsets[i].members, rep.xsets[j].members);
      if (inter.size() < 2) continue;
      for (const auto& [a, b] : conflicts) {
        if (!set_contains(inter, a) || !set_contains(inter, b)) continue;
        ConditionIssue issue{
            'c', "", {static_cast<int>(i), static_cast<int>(j)}, {a, b}};
        issue.detail = "conflict " + label_pair(a, b) + " lies inside the intersection of sets " +
                       std::to_string(i) + " and " + std::to_string(j);
        rep.issues.push_back(std::move(issue));
      }
    }
  }
  return rep;
}

EtigAssignment assign_etig_vectors(const Etig& etig, Field field, uint64_t seed) {
  return assign_etig_vectors(etig, field, seed, etig.edges);
}

EtigAssignment assign_etig_vectors(const Etig& etig, Field field, uint64_t seed,
                                   const std::vector<std::pair<int, int>>& order) {
  std::map<std::pair<int, int>, size_t> index;
  for (size_t k = 0; k < etig.edges.size(); ++k) index.emplace(etig.edges[k], k);
  if (order.size() != etig.edges.size())
    throw IndexMismatch("edge order lists " + std::to_string(order.size()) + " edges, graph has " +
                        std::to_string(etig.edges.size()));

  EtigAssignment out;
  out.graph = etig;
  out.field = field;
  out.edge_vectors.resize(etig.edges.size());
  out.vertex_spans.assign(etig.vertices.size(), Subspace::zero(field, 3));

  Rng rng(seed);
  for (const auto& e : order) {
    auto it = index.find(e);
    if (it == index.end())
      throw IndexMismatch("edge order names a pair that is not a graph edge");
    size_t k = it->second;
    if (out.edge_vectors[k])
      throw IndexMismatch("edge order repeats a graph edge");
    Subspace& si = out.vertex_spans[static_cast<size_t>(e.first)];
    Subspace& sj = out.vertex_spans[static_cast<size_t>(e.second)];
    FVector v;
    if (si.dim() == 2 && sj.dim() == 2) {
      v = sample_nonzero(intersect(si, sj), rng);
    } else if (si.dim() == 2) {
      v = sample_nonzero(si, rng);
    } else if (sj.dim() == 2) {
      v = sample_nonzero(sj, rng);
    } else {
      v = random_nonzero_vector(field, 3, rng);
    }
    out.edge_vectors[k] = v;
    si.extend(v);
    sj.extend(v);
  }
  return out;
}

PrecodingAssignment assign_message_vectors(const Problem& pc, const EtigAssignment& etig,
                                           uint64_t seed) {
  if (!etig.complete())
    throw ConditionViolation("edge assignment is incomplete");

  const Etig& g = etig.graph;
  Field f = etig.field;
  Rng rng(seed);
  std::vector<std::optional<FVector>> vec(static_cast<size_t>(pc.n));

  auto at = [&](Msg m) -> std::optional<FVector>& {
    if (m < 0 || m >= pc.n)
      throw ConditionViolation("set member " + label(m) + " is outside the problem");
    return vec[static_cast<size_t>(m)];
  };

  // shared messages inherit their edge's vector
  for (size_t k = 0; k < g.edges.size(); ++k) {
    const auto& [i, j] = g.edges[k];
    const FVector& v = *etig.edge_vectors[k];
    for (Msg m : intersect_sets(g.vertices[static_cast<size_t>(i)],
                                g.vertices[static_cast<size_t>(j)])) {
      auto& slot = at(m);
      if (slot && !(*slot == v))
        throw ConditionViolation("message " + label(m) +
                                 " sits in two set intersections with different vectors");
      slot = v;
    }
  }

  // each set fills up from a 2-dimensional space around its edge vectors
  for (size_t i = 0; i < g.vertices.size(); ++i) {
    Subspace space = etig.vertex_spans[i];
    while (space.dim() < 2) space.extend(random_nonzero_vector(f, 3, rng));
    for (Msg m : g.vertices[i]) {
      auto& slot = at(m);
      if (!slot) slot = sample_nonzero(space, rng);
    }
  }

  // everything else is unconstrained
  PrecodingAssignment out{3, f, {}};
  out.vectors.reserve(static_cast<size_t>(pc.n));
  for (Msg m = 0; m < pc.n; ++m) {
    auto& slot = vec[static_cast<size_t>(m)];
    out.vectors.push_back(slot ? *slot : random_nonzero_vector(f, 3, rng));
  }
  return out;
}

ConstructResult construct_length3_code(const Problem& p, const ConstructOptions& opts) {
  struct Candidate {
    Problem pc;
    ContractionMap cm;
    ContractionPolicy policy;
  };
  std::vector<Candidate> candidates;
  std::set<std::vector<Msg>> seen;
  for (ContractionPolicy policy : opts.policies) {
    int orders = policy == ContractionPolicy::SeededRandom ? opts.random_orders : 1;
    for (int t = 0; t < orders; ++t) {
      auto [pc, cm] = maximal_contraction(p, policy, mix_seed(opts.seed, static_cast<uint64_t>(t)));
      if (!seen.insert(cm.forward).second) continue;
      candidates.push_back({std::move(pc), std::move(cm), policy});
    }
  }

  std::ostringstream failures;
  bool any_qualified = false;
  for (size_t c = 0; c < candidates.size(); ++c) {
    const Candidate& cand = candidates[c];
    ConditionReport rep = check_xtype2_conditions(cand.pc);
    if (!rep.ok()) {
      failures << policy_name(cand.policy) << " contraction " << c << ": ";
      for (size_t k = 0; k < rep.issues.size(); ++k)
        failures << (k ? "; " : "") << "(" << rep.issues[k].condition << ") "
                 << rep.issues[k].detail;
      failures << "\n";
      continue;
    }
    any_qualified = true;
    Etig etig = build_etig(rep.xsets);
    for (int attempt = 0; attempt < opts.max_retries; ++attempt) {
      uint64_t aseed = mix_seed(mix_seed(opts.seed, static_cast<uint64_t>(c) + 1),
                                static_cast<uint64_t>(attempt));
      EtigAssignment ea = assign_etig_vectors(etig, opts.field, mix_seed(aseed, 1));
      PrecodingAssignment code = assign_message_vectors(cand.pc, ea, mix_seed(aseed, 2));
      if (!verify_code(cand.pc, code).empty()) continue;
      PrecodingAssignment lifted = lift_code(code, cand.cm);
      if (!verify_code(p, lifted).empty()) continue;
      return {std::move(lifted), cand.cm, cand.policy, opts.seed, attempt};
    }
    failures << policy_name(cand.policy) << " contraction " << c << ": no verified code in "
             << opts.max_retries << " attempts over GF(" << opts.field.q << ")\n";
  }

  if (!any_qualified)
    throw NoQualifyingContraction("no explored contraction meets the structural conditions:\n" +
                                  failures.str());
  throw RetryExhausted(failures.str());
}

std::string construct_result_to_json(const ConstructResult& r) {
  return detail::construct_json(r).dump(2) + "\n";
}

ForkCycleReport fork_cycle_report(const Problem& p) {
  const AlignmentStructure as = alignment_sets(p);
  const auto t2 = type2_sets(p);
  ForkCycleReport rep;
  for (const MsgSet& aset : as.sets) {
    ForkCycleFlags flags = fork_cycle_flags(p, aset);
    AlignmentSetStatus st{aset, flags.has_fork, flags.has_cycle, false};
    for (const auto& match : t2) {
      if (match.members != aset) continue;
      st.clean_type2 = !restricted_internal_conflict(p, aset).has_value();
      break;
    }
    rep.ok = rep.ok && st.ok();
    rep.sets.push_back(std::move(st));
  }
  return rep;
}

}  // namespace ixc
