#include "ixc/structure.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace ixc {

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(size_t k) : parent(k) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

std::pair<Msg, Msg> norm(Msg a, Msg b) { return {std::min(a, b), std::max(a, b)}; }

/// First (receiver, demand) whose interfering set contains msgs; demand
/// constrained to lie outside `avoid` when given.
std::optional<Witness> find_witness(const std::vector<ConflictHyperedge>& hyper,
                                    const MsgSet& msgs, const MsgSet& avoid = {}) {
  for (const auto& h : hyper) {
    if (set_contains(avoid, h.demand)) continue;
    if (is_subset(msgs, h.interference)) return Witness{h.receiver, h.demand, msgs};
  }
  return std::nullopt;
}

/// One witness per conflicting pair, keyed by the normalized pair.
std::map<std::pair<Msg, Msg>, Witness> conflict_witnesses(
    const std::vector<ConflictHyperedge>& hyper) {
  std::map<std::pair<Msg, Msg>, Witness> out;
  for (const auto& h : hyper)
    for (Msg a : h.interference)
      out.emplace(norm(a, h.demand), Witness{h.receiver, h.demand, {a}});
  return out;
}

std::vector<Witness> merge_witnesses(std::vector<Witness> w) {
  std::sort(w.begin(), w.end());
  w.erase(std::unique(w.begin(), w.end()), w.end());
  return w;
}

bool match_less(const PatternMatch& a, const PatternMatch& b) {
  return std::tie(a.members, a.role_map) < std::tie(b.members, b.role_map);
}

/// Conflict pairs whose both endpoints lie in `image`, normalized and sorted.
std::vector<std::pair<Msg, Msg>> conflicts_within(
    const std::vector<std::pair<Msg, Msg>>& pairs, const MsgSet& image) {
  std::vector<std::pair<Msg, Msg>> out;
  for (auto [a, b] : pairs)
    if (set_contains(image, a) && set_contains(image, b)) out.emplace_back(a, b);
  return out;
}

std::vector<std::pair<Msg, Msg>> sorted_pairs(std::vector<std::pair<Msg, Msg>> v) {
  for (auto& [a, b] : v)
    if (a > b) std::swap(a, b);
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

AlignmentStructure alignment_sets(const Problem& p) {
  std::set<std::pair<Msg, Msg>> edges;
  for (const auto& h : conflict_hyperedges(p))
    for (size_t i = 0; i < h.interference.size(); ++i)
      for (size_t j = i + 1; j < h.interference.size(); ++j)
        edges.insert({h.interference[i], h.interference[j]});

  Dsu dsu(static_cast<size_t>(p.n));
  for (auto [a, b] : edges) dsu.unite(a, b);
  std::map<int, MsgSet> comps;
  for (Msg m = 0; m < p.n; ++m) comps[dsu.find(m)].push_back(m);

  AlignmentStructure out;
  out.graph.n = p.n;
  out.graph.edges.assign(edges.begin(), edges.end());
  for (auto& [root, members] : comps) out.sets.push_back(std::move(members));
  std::sort(out.sets.begin(), out.sets.end());
  return out;
}

ForkCycleFlags fork_cycle_flags(const Problem& p, const MsgSet& aset) {
  AlignmentStructure s = alignment_sets(p);
  if (std::find(s.sets.begin(), s.sets.end(), aset) == s.sets.end())
    throw NotAnAlignmentSet(set_to_string(aset) + " is not an alignment set");

  std::map<Msg, int> degree;
  size_t edge_count = 0;
  for (auto [a, b] : s.graph.edges) {
    if (!set_contains(aset, a)) continue;  // components: either both in or both out
    ++degree[a];
    ++degree[b];
    ++edge_count;
  }
  ForkCycleFlags flags;
  for (auto& [m, d] : degree) flags.has_fork = flags.has_fork || d >= 3;
  flags.has_cycle = edge_count >= aset.size();  // connected subgraph
  return flags;
}

std::vector<InterferingTriple> interfering_triples(const Problem& p) {
  std::map<MsgSet, std::vector<Witness>> by_members;
  for (const auto& h : conflict_hyperedges(p)) {
    const MsgSet& I = h.interference;
    for (size_t i = 0; i < I.size(); ++i)
      for (size_t j = i + 1; j < I.size(); ++j)
        for (size_t k = j + 1; k < I.size(); ++k) {
          MsgSet t{I[i], I[j], I[k]};
          by_members[t].push_back(Witness{h.receiver, h.demand, t});
        }
  }
  std::vector<InterferingTriple> out;
  for (auto& [members, witnesses] : by_members)
    out.push_back(InterferingTriple{members, std::move(witnesses)});
  return out;
}

std::vector<PatternMatch> triangular_sets(const Problem& p) {
  auto pairs = conflict_pairs(p);
  auto cw = conflict_witnesses(conflict_hyperedges(p));
  std::vector<PatternMatch> out;
  for (auto& t : interfering_triples(p)) {
    std::vector<Witness> ws = t.witnesses;
    bool any_conflict = false;
    for (size_t i = 0; i < 3; ++i)
      for (size_t j = i + 1; j < 3; ++j)
        if (in_conflict(pairs, t.members[i], t.members[j])) {
          any_conflict = true;
          ws.push_back(cw.at(norm(t.members[i], t.members[j])));
        }
    if (any_conflict)
      out.push_back(PatternMatch{PatternKind::Triangular, t.members, {}, merge_witnesses(ws)});
  }
  std::sort(out.begin(), out.end(), match_less);
  return out;
}

std::vector<PatternMatch> type2_sets(const Problem& p) {
  auto triangles = triangular_sets(p);
  auto pairs = conflict_pairs(p);
  Dsu dsu(triangles.size());
  for (size_t i = 0; i < triangles.size(); ++i)
    for (size_t j = i + 1; j < triangles.size(); ++j) {
      MsgSet common = set_intersect(triangles[i].members, triangles[j].members);
      if (common.size() == 2 && in_conflict(pairs, common[0], common[1]))
        dsu.unite(static_cast<int>(i), static_cast<int>(j));
    }

  std::map<int, PatternMatch> classes;
  for (size_t i = 0; i < triangles.size(); ++i) {
    PatternMatch& cls = classes[dsu.find(static_cast<int>(i))];
    cls.kind = PatternKind::Type2;
    cls.members = set_union(cls.members, triangles[i].members);
    cls.witnesses.insert(cls.witnesses.end(), triangles[i].witnesses.begin(),
                         triangles[i].witnesses.end());
  }
  std::vector<PatternMatch> out;
  for (auto& [root, cls] : classes) {
    cls.witnesses = merge_witnesses(std::move(cls.witnesses));
    out.push_back(std::move(cls));
  }
  std::sort(out.begin(), out.end(), match_less);
  return out;
}

std::vector<PatternMatch> xtype2_sets(const Problem& p) {
  std::vector<PatternMatch> sets = type2_sets(p);
  auto pairs = conflict_pairs(p);
  for (auto& s : sets) s.kind = PatternKind::Xtype2;

  bool merged = true;
  while (merged) {
    merged = false;
    for (size_t i = 0; i < sets.size() && !merged; ++i)
      for (size_t j = i + 1; j < sets.size() && !merged; ++j) {
        auto inside = conflicts_within(pairs, set_intersect(sets[i].members, sets[j].members));
        if (inside.empty()) continue;
        sets[i].members = set_union(sets[i].members, sets[j].members);
        sets[i].witnesses.insert(sets[i].witnesses.end(), sets[j].witnesses.begin(),
                                 sets[j].witnesses.end());
        sets[i].witnesses = merge_witnesses(std::move(sets[i].witnesses));
        sets.erase(sets.begin() + static_cast<ptrdiff_t>(j));
        merged = true;
      }
  }

  // A union swallowed by a larger one is not maximal; drop it.
  std::vector<PatternMatch> out;
  for (size_t i = 0; i < sets.size(); ++i) {
    bool dominated = false;
    for (size_t j = 0; j < sets.size(); ++j)
      if (i != j && sets[i].members != sets[j].members &&
          is_subset(sets[i].members, sets[j].members))
        dominated = true;
    if (!dominated) out.push_back(sets[i]);
  }
  std::sort(out.begin(), out.end(), match_less);
  out.erase(std::unique(out.begin(), out.end(),
                        [](const PatternMatch& a, const PatternMatch& b) {
                          return a.members == b.members;
                        }),
            out.end());
  return out;
}

namespace {

constexpr std::array<std::array<int, 2>, 6> kSticConflictRoles{
    {{0, 3}, {0, 4}, {0, 5}, {1, 5}, {2, 3}, {3, 5}}};
constexpr std::array<std::array<int, 2>, 4> kSpicConflictRoles{
    {{0, 2}, {0, 4}, {1, 4}, {1, 3}}};

// (pair role a, pair role b, demand role) interference requirements.
constexpr std::array<std::array<int, 3>, 6> kSticPairs{
    {{0, 1, 5}, {1, 3, 5}, {0, 2, 3}, {2, 5, 3}, {3, 4, 0}, {4, 5, 0}}};
constexpr std::array<std::array<int, 3>, 2> kSpicPairs{{{0, 1, 4}, {3, 4, 1}}};

constexpr std::array<std::array<int, 3>, 3> kSticTriples{
    {{0, 1, 2}, {1, 3, 4}, {2, 4, 5}}};
constexpr std::array<std::array<int, 3>, 4> kSpicTriples{
    {{0, 1, 2}, {0, 2, 3}, {2, 3, 4}, {1, 2, 4}}};

template <size_t R, size_t NT, size_t NP, size_t NC>
bool is_role_map(const Problem& p, const std::array<Msg, R>& r,
                 const std::array<std::array<int, 3>, NT>& triples,
                 const std::array<std::array<int, 3>, NP>& pair_reqs,
                 const std::array<std::array<int, 2>, NC>& conflict_roles) {
  MsgSet image = make_set(std::vector<Msg>(r.begin(), r.end()));
  if (image.size() != R) return false;  // injective
  for (Msg m : image)
    if (m < 0 || m >= p.n) return false;

  auto hyper = conflict_hyperedges(p);
  for (const auto& t : triples)
    if (!find_witness(hyper, make_set({r[t[0]], r[t[1]], r[t[2]]}), image)) return false;
  for (const auto& q : pair_reqs) {
    bool ok = false;
    for (const auto& h : hyper)
      ok = ok || (h.demand == r[q[2]] &&
                  is_subset(make_set({r[q[0]], r[q[1]]}), h.interference));
    if (!ok) return false;
  }

  std::vector<std::pair<Msg, Msg>> expected;
  for (const auto& c : conflict_roles) expected.push_back(norm(r[c[0]], r[c[1]]));
  return conflicts_within(conflict_pairs(p), image) == sorted_pairs(std::move(expected));
}

std::vector<Witness> role_map_witnesses(const Problem& p, const std::vector<Msg>& r,
                                        const std::array<int, 3>* triples, size_t nt,
                                        const std::array<int, 3>* pair_reqs, size_t np) {
  auto hyper = conflict_hyperedges(p);
  MsgSet image = make_set(r);
  std::vector<Witness> ws;
  for (size_t i = 0; i < nt; ++i) {
    auto t = triples[i];
    ws.push_back(*find_witness(hyper, make_set({r[static_cast<size_t>(t[0])],
                                                r[static_cast<size_t>(t[1])],
                                                r[static_cast<size_t>(t[2])]}),
                               image));
  }
  for (size_t i = 0; i < np; ++i) {
    auto q = pair_reqs[i];
    MsgSet msgs = make_set(
        {r[static_cast<size_t>(q[0])], r[static_cast<size_t>(q[1])]});
    for (const auto& h : hyper)
      if (h.demand == r[static_cast<size_t>(q[2])] && is_subset(msgs, h.interference)) {
        ws.push_back(Witness{h.receiver, h.demand, msgs});
        break;
      }
  }
  return merge_witnesses(std::move(ws));
}

}  // namespace

bool is_stic_role_map(const Problem& p, const std::array<Msg, 6>& roles) {
  return is_role_map(p, roles, kSticTriples, kSticPairs, kSticConflictRoles);
}

std::array<Msg, 6> stic_canonical_roles(const std::array<Msg, 6>& r) {
  // Index arrays for the six relabelings induced by permuting the triples
  // {1,2,3},{2,4,5},{3,5,6} among themselves (0-based roles).
  constexpr std::array<std::array<int, 6>, 6> kOrbit{{{0, 1, 2, 3, 4, 5},
                                                      {0, 2, 1, 5, 4, 3},
                                                      {3, 1, 4, 0, 2, 5},
                                                      {5, 4, 2, 3, 1, 0},
                                                      {3, 4, 1, 5, 2, 0},
                                                      {5, 2, 4, 0, 1, 3}}};
  std::array<Msg, 6> best = r;
  for (const auto& perm : kOrbit) {
    std::array<Msg, 6> cand;
    for (size_t i = 0; i < 6; ++i) cand[i] = r[static_cast<size_t>(perm[i])];
    best = std::min(best, cand);
  }
  return best;
}

bool is_spic_role_map(const Problem& p, const std::array<Msg, 5>& roles) {
  return is_role_map(p, roles, kSpicTriples, kSpicPairs, kSpicConflictRoles);
}

std::vector<PatternMatch> detect_stic(const Problem& p) {
  auto triples = interfering_triples(p);
  std::set<std::array<Msg, 6>> seen;
  std::vector<PatternMatch> out;
  for (size_t i = 0; i < triples.size(); ++i)
    for (size_t j = 0; j < triples.size(); ++j)
      for (size_t k = 0; k < triples.size(); ++k) {
        if (i == j || i == k || j == k) continue;
        MsgSet s12 = set_intersect(triples[i].members, triples[j].members);
        MsgSet s13 = set_intersect(triples[i].members, triples[k].members);
        MsgSet s23 = set_intersect(triples[j].members, triples[k].members);
        if (s12.size() != 1 || s13.size() != 1 || s23.size() != 1) continue;
        Msg r1 = s12[0], r2 = s13[0], r4 = s23[0];
        if (r1 == r2 || r1 == r4 || r2 == r4) continue;
        MsgSet rest1 = set_minus(triples[i].members, {std::min(r1, r2), std::max(r1, r2)});
        MsgSet rest2 = set_minus(triples[j].members, {std::min(r1, r4), std::max(r1, r4)});
        MsgSet rest3 = set_minus(triples[k].members, {std::min(r2, r4), std::max(r2, r4)});
        if (rest1.size() != 1 || rest2.size() != 1 || rest3.size() != 1) continue;

        std::array<Msg, 6> roles{rest1[0], r1, r2, rest2[0], r4, rest3[0]};
        if (!is_stic_role_map(p, roles)) continue;
        std::array<Msg, 6> canon = stic_canonical_roles(roles);
        if (!seen.insert(canon).second) continue;

        std::vector<Msg> rm(canon.begin(), canon.end());
        out.push_back(PatternMatch{
            PatternKind::Stic, make_set(rm), rm,
            role_map_witnesses(p, rm, kSticTriples.data(), kSticTriples.size(),
                               kSticPairs.data(), kSticPairs.size())});
      }
  std::sort(out.begin(), out.end(), match_less);
  return out;
}

std::vector<PatternMatch> detect_spic(const Problem& p) {
  auto triples = interfering_triples(p);
  std::set<MsgSet> triple_members;
  for (const auto& t : triples) triple_members.insert(t.members);
  auto pairs = conflict_pairs(p);

  std::set<std::array<Msg, 5>> seen;
  std::vector<PatternMatch> out;
  for (size_t i = 0; i < triples.size(); ++i)
    for (size_t j = 0; j < triples.size(); ++j) {
      if (i == j) continue;
      MsgSet common = set_intersect(triples[i].members, triples[j].members);
      if (common.size() != 2) continue;
      for (int flip = 0; flip < 2; ++flip) {
        Msg r1 = common[static_cast<size_t>(flip)];
        Msg r3 = common[static_cast<size_t>(1 - flip)];
        if (!in_conflict(pairs, r1, r3)) continue;
        Msg r2 = set_minus(triples[i].members, common)[0];
        Msg r4 = set_minus(triples[j].members, common)[0];
        for (const auto& t3 : triples) {
          if (!set_contains(t3.members, r3) || !set_contains(t3.members, r4)) continue;
          MsgSet rest = set_minus(t3.members, make_set({r3, r4}));
          if (rest.size() != 1) continue;
          Msg r5 = rest[0];
          if (!triple_members.count(make_set({r2, r3, r5}))) continue;
          std::array<Msg, 5> roles{r1, r2, r3, r4, r5};
          if (!is_spic_role_map(p, roles)) continue;
          if (!seen.insert(roles).second) continue;
          std::vector<Msg> rm(roles.begin(), roles.end());
          out.push_back(PatternMatch{
              PatternKind::Spic, make_set(rm), rm,
              role_map_witnesses(p, rm, kSpicTriples.data(), kSpicTriples.size(),
                                 kSpicPairs.data(), kSpicPairs.size())});
        }
      }
    }
  std::sort(out.begin(), out.end(), match_less);
  return out;
}

std::vector<PatternMatch> spic_alignment_sets(
    const Problem& p, const std::vector<std::pair<Msg, Msg>>& rate1_infeasible_pairs) {
  auto matches = detect_spic(p);
  auto pairs = sorted_pairs(rate1_infeasible_pairs);
  Dsu dsu(matches.size());
  for (size_t i = 0; i < matches.size(); ++i)
    for (size_t j = i + 1; j < matches.size(); ++j) {
      MsgSet common = set_intersect(matches[i].members, matches[j].members);
      if (!conflicts_within(pairs, common).empty())
        dsu.unite(static_cast<int>(i), static_cast<int>(j));
    }
  std::map<int, PatternMatch> classes;
  for (size_t i = 0; i < matches.size(); ++i) {
    PatternMatch& cls = classes[dsu.find(static_cast<int>(i))];
    cls.kind = PatternKind::SpicAlignment;
    cls.members = set_union(cls.members, matches[i].members);
    cls.witnesses.insert(cls.witnesses.end(), matches[i].witnesses.begin(),
                         matches[i].witnesses.end());
  }
  std::vector<PatternMatch> out;
  for (auto& [root, cls] : classes) {
    cls.witnesses = merge_witnesses(std::move(cls.witnesses));
    out.push_back(std::move(cls));
  }
  std::sort(out.begin(), out.end(), match_less);
  return out;
}

Etig build_etig(const std::vector<PatternMatch>& xsets) {
  Etig g;
  for (const auto& x : xsets) g.vertices.push_back(x.members);
  std::sort(g.vertices.begin(), g.vertices.end());
  for (size_t i = 0; i < g.vertices.size(); ++i)
    for (size_t j = i + 1; j < g.vertices.size(); ++j)
      if (!set_intersect(g.vertices[i], g.vertices[j]).empty())
        g.edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
  return g;
}

std::vector<std::pair<Msg, Msg>> internal_conflict_pairs(const Problem& p) {
  AlignmentStructure s = alignment_sets(p);
  std::vector<int> comp(static_cast<size_t>(p.n), 0);
  for (size_t c = 0; c < s.sets.size(); ++c)
    for (Msg m : s.sets[c]) comp[static_cast<size_t>(m)] = static_cast<int>(c);
  std::vector<std::pair<Msg, Msg>> out;
  for (auto [a, b] : conflict_pairs(p))
    if (comp[static_cast<size_t>(a)] == comp[static_cast<size_t>(b)]) out.emplace_back(a, b);
  return out;
}

std::optional<std::pair<Msg, Msg>> restricted_internal_conflict(const Problem& p,
                                                                const MsgSet& subset) {
  Restriction r = restrict_to(p, subset);
  auto internal = internal_conflict_pairs(r.problem);
  if (internal.empty()) return std::nullopt;
  auto [a, b] = internal.front();
  return norm(r.to_original[static_cast<size_t>(a)], r.to_original[static_cast<size_t>(b)]);
}

}  // namespace ixc
