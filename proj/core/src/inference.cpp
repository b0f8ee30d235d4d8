#include "ixc/inference.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "json_util.hpp"

namespace ixc {

DimMask make_dims(std::initializer_list<int> dims) {
  DimMask m = 0;
  for (int L : dims) m |= dim_bit(L);
  return m;
}

std::vector<int> dims_list(DimMask m) {
  std::vector<int> v;
  for (int L = 1; L <= 3; ++L)
    if (dim_allowed(m, L)) v.push_back(L);
  return v;
}

std::string dims_to_string(DimMask m) {
  std::string s = "{";
  for (int L : dims_list(m)) {
    if (s.size() > 1) s += ',';
    s += std::to_string(L);
  }
  return s + "}";
}

namespace {

// One fact per subset; a contribution is recorded when it creates the fact or
// shrinks its dims, so allowed_dims is always the intersection of sources.
class Ledger {
 public:
  Ledger() = default;

  explicit Ledger(std::vector<StrictRateFact> init) {
    for (StrictRateFact& f : init) {
      index_[f.subset] = facts_.size();
      facts_.push_back(std::move(f));
    }
  }

  bool add(MsgSet subset, Contribution c) {
    auto it = index_.find(subset);
    if (it == index_.end()) {
      index_[subset] = facts_.size();
      StrictRateFact f;
      f.subset = std::move(subset);
      f.allowed_dims = c.dims;
      f.sources.push_back(std::move(c));
      facts_.push_back(std::move(f));
      return true;
    }
    StrictRateFact& f = facts_[it->second];
    DimMask next = f.allowed_dims & c.dims;
    if (next == f.allowed_dims) return false;
    f.allowed_dims = next;
    f.sources.push_back(std::move(c));
    return true;
  }

  std::vector<StrictRateFact> take_sorted() {
    std::sort(facts_.begin(), facts_.end(),
              [](const StrictRateFact& a, const StrictRateFact& b) { return a.subset < b.subset; });
    return std::move(facts_);
  }

  const std::vector<StrictRateFact>& facts() const { return facts_; }

 private:
  std::vector<StrictRateFact> facts_;
  std::map<MsgSet, size_t> index_;
};

Witness conflict_witness(const std::vector<ConflictHyperedge>& hyper, Msg a, Msg b) {
  for (const ConflictHyperedge& h : hyper) {
    if (h.demand == b && set_contains(h.interference, a)) return Witness{h.receiver, b, {a}};
    if (h.demand == a && set_contains(h.interference, b)) return Witness{h.receiver, a, {b}};
  }
  return Witness{-1, a, {b}};  // unreachable for pairs out of conflict_pairs
}

MsgSet role_image(const std::vector<Msg>& role_map, std::initializer_list<int> roles) {
  std::vector<Msg> v;
  for (int r : roles) v.push_back(role_map[r]);
  return make_set(std::move(v));
}

void seed_match(Ledger& led, const PatternMatch& m) {
  auto add = [&led, &m](MsgSet subset, const char* rule, DimMask dims) {
    Contribution c;
    c.rule = rule;
    c.dims = dims;
    c.matches.push_back(m);
    led.add(std::move(subset), std::move(c));
  };
  switch (m.kind) {
    case PatternKind::Triangular:
      add(m.members, "triangular-set", dim_bit(2));
      break;
    case PatternKind::Type2:
      add(m.members, "type2-set", dim_bit(2));
      break;
    case PatternKind::Xtype2:
      add(m.members, "xtype2-set", dim_bit(2));
      break;
    case PatternKind::SpicAlignment:
      add(m.members, "spic-alignment", dim_bit(2));
      break;
    case PatternKind::Stic:
      // shared corners span 1 or 3 dims, never exactly 2; each triple exactly 2
      add(role_image(m.role_map, {1, 2, 4}), "stic-inner", make_dims({1, 3}));
      add(role_image(m.role_map, {0, 1, 2}), "stic-outer", dim_bit(2));
      add(role_image(m.role_map, {1, 3, 4}), "stic-outer", dim_bit(2));
      add(role_image(m.role_map, {2, 4, 5}), "stic-outer", dim_bit(2));
      break;
    case PatternKind::Spic:
      add(role_image(m.role_map, {0, 1, 2, 3}), "spic-quad", dim_bit(2));
      add(role_image(m.role_map, {0, 1, 2, 3, 4}), "spic-full", dim_bit(2));
      add(role_image(m.role_map, {0, 3}), "spic-pair-dim2", dim_bit(2));
      add(role_image(m.role_map, {1, 4}), "spic-pair-dim2", dim_bit(2));
      add(role_image(m.role_map, {3, 4}), "spic-pair-dim1", dim_bit(1));
      add(role_image(m.role_map, {0, 1}), "spic-pair-dim1", dim_bit(1));
      break;
  }
}

std::string describe_dims(DimMask m) {
  std::vector<int> v = dims_list(m);
  if (v.empty()) return "no dimension at all";
  std::string s;
  if (v.size() == 1) s = "exactly ";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += (i + 1 == v.size()) ? " or " : ", ";
    s += std::to_string(v[i]);
  }
  return s + (m == dim_bit(1) ? " dimension" : " dimensions");
}

// Smallest front-loaded set of sources whose dims intersect to nothing.
std::vector<size_t> minimal_empty_cover(const std::vector<Contribution>& src) {
  for (size_t i = 0; i < src.size(); ++i)
    for (size_t j = i + 1; j < src.size(); ++j)
      if ((src[i].dims & src[j].dims) == 0) return {i, j};
  std::vector<size_t> keep;
  DimMask run = kAllDims;
  for (size_t i = 0; i < src.size() && run != 0; ++i) {
    DimMask next = run & src[i].dims;
    if (next != run) {
      keep.push_back(i);
      run = next;
    }
  }
  for (size_t k = 0; k < keep.size();) {
    DimMask rest = kAllDims;
    for (size_t x : keep)
      if (x != keep[k]) rest &= src[x].dims;
    if (rest == 0)
      keep.erase(keep.begin() + static_cast<std::ptrdiff_t>(k));
    else
      ++k;
  }
  return keep;
}

}  // namespace

std::vector<StrictRateFact> seed_facts(const Problem& p,
                                       const std::vector<PatternMatch>& matches) {
  Ledger led;
  const std::vector<ConflictHyperedge> hyper = conflict_hyperedges(p);

  // a conflicting pair is two nonzero, independent vectors
  for (const auto& [a, b] : conflict_pairs(p)) {
    Contribution c;
    c.rule = "conflict-pair";
    c.dims = dim_bit(2);
    c.pair = std::make_pair(a, b);
    c.witnesses.push_back(conflict_witness(hyper, a, b));
    led.add(make_set({a, b}), std::move(c));
  }

  // a demand vector escapes the span of its interferers, so that span is not
  // the whole space
  for (const ConflictHyperedge& h : hyper) {
    if (h.interference.size() < 2) continue;
    Contribution c;
    c.rule = "interfering-set";
    c.dims = make_dims({1, 2});
    c.witnesses.push_back(Witness{h.receiver, h.demand, h.interference});
    led.add(h.interference, std::move(c));
  }

  for (const PatternMatch& m : matches) seed_match(led, m);
  return led.take_sorted();
}

std::vector<StrictRateFact> stitch_closure(std::vector<StrictRateFact> facts, const Problem& p) {
  Ledger led(std::move(facts));
  const auto conflicts = conflict_pairs(p);

  struct View {
    MsgSet subset;
    DimMask dims;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<View> snap;
    snap.reserve(led.facts().size());
    for (const StrictRateFact& f : led.facts()) snap.push_back({f.subset, f.allowed_dims});

    for (size_t i = 0; i < snap.size(); ++i) {
      if (snap[i].dims != dim_bit(2)) continue;

      // refine: a subset of an exactly-2 set that contains a conflicting pair
      // is itself exactly 2
      for (size_t j = 0; j < snap.size(); ++j) {
        if (j == i || !is_subset(snap[j].subset, snap[i].subset)) continue;
        if (snap[j].subset == snap[i].subset) continue;
        for (const auto& [a, b] : conflicts) {
          if (!set_contains(snap[j].subset, a) || !set_contains(snap[j].subset, b)) continue;
          Contribution c;
          c.rule = "subset-refine";
          c.dims = dim_bit(2);
          c.parents = {snap[i].subset};
          c.pair = std::make_pair(a, b);
          changed |= led.add(snap[j].subset, std::move(c));
          break;
        }
      }

      // union: two exactly-2 sets whose intersection already holds a fact that
      // rules out dimension 1 span exactly 2 together
      for (size_t j = i + 1; j < snap.size(); ++j) {
        if (snap[j].dims != dim_bit(2)) continue;
        MsgSet uni = set_union(snap[i].subset, snap[j].subset);
        if (uni == snap[i].subset || uni == snap[j].subset) continue;
        MsgSet inter = set_intersect(snap[i].subset, snap[j].subset);
        if (inter.empty()) continue;
        for (const View& t : snap) {
          if (dim_allowed(t.dims, 1) || !is_subset(t.subset, inter)) continue;
          Contribution c;
          c.rule = "union-stitch";
          c.dims = dim_bit(2);
          c.parents = {snap[i].subset, snap[j].subset};
          c.link = t.subset;
          changed |= led.add(std::move(uni), std::move(c));
          break;
        }
      }
    }
  }
  return led.take_sorted();
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Rate1Feasible: return "rate-1-feasible";
    case Verdict::RateHalfFeasible: return "rate-1/2-feasible";
    case Verdict::RateThirdInfeasible: return "rate-1/3-infeasible";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

std::optional<Certificate> find_contradiction(const std::vector<StrictRateFact>& facts,
                                              const Problem& p) {
  for (const StrictRateFact& f : facts) {
    if (f.allowed_dims != 0) continue;
    Certificate cert;
    cert.verdict = Verdict::RateThirdInfeasible;
    cert.subject = f.subset;
    std::string need;
    for (size_t i : minimal_empty_cover(f.sources)) {
      const Contribution& c = f.sources[i];
      cert.facts_used.push_back(StrictRateFact{f.subset, c.dims, {c}});
      if (!need.empty()) need += " and also ";
      need += describe_dims(c.dims) + " (" + c.rule + ")";
    }
    cert.reason = "messages " + set_to_string(f.subset) + " would have to span " + need +
                  "; no dimension count satisfies all of these, so no 3-dimensional code exists";
    return cert;
  }

  for (const StrictRateFact& f : facts) {
    if (f.allowed_dims != dim_bit(2)) continue;
    if (auto pr = restricted_internal_conflict(p, f.subset)) {
      Certificate cert;
      cert.verdict = Verdict::RateThirdInfeasible;
      cert.subject = f.subset;
      cert.conflict = pr;
      cert.facts_used.push_back(f);
      cert.reason = "messages " + set_to_string(f.subset) + " must span exactly 2 dimensions (" +
                    f.sources.front().rule + "), but restricted to them the conflicting messages " +
                    std::to_string(pr->first + 1) + " and " + std::to_string(pr->second + 1) +
                    " share an alignment set; alignment in 2 dimensions forces dependence while a"
                    " conflict demands independence, so no 3-dimensional code exists";
      return cert;
    }
  }
  return std::nullopt;
}

std::vector<std::pair<Msg, Msg>> rate1_infeasible_pairs(
    const Problem& p, const std::vector<StrictRateFact>& facts) {
  std::vector<std::pair<Msg, Msg>> pairs = conflict_pairs(p);
  for (const StrictRateFact& f : facts)
    if (f.subset.size() == 2 && !dim_allowed(f.allowed_dims, 1))
      pairs.emplace_back(f.subset[0], f.subset[1]);
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return pairs;
}

std::vector<PatternMatch> collect_matches(const Problem& p) {
  std::vector<PatternMatch> out = triangular_sets(p);
  auto append = [&out](std::vector<PatternMatch> v) {
    for (PatternMatch& m : v) out.push_back(std::move(m));
  };
  append(type2_sets(p));
  append(xtype2_sets(p));
  append(detect_stic(p));
  append(detect_spic(p));
  const auto pre = seed_facts(p, out);
  append(spic_alignment_sets(p, rate1_infeasible_pairs(p, pre)));
  return out;
}

Certificate quick_verdict(const Problem& p) {
  Certificate cert;
  if (conflict_pairs(p).empty()) {
    cert.verdict = Verdict::Rate1Feasible;
    cert.reason = "no conflicting pairs: one shared nonzero vector decodes every demand";
    return cert;
  }
  if (internal_conflict_pairs(p).empty()) {
    cert.verdict = Verdict::RateHalfFeasible;
    cert.reason = "conflicts exist but none lies inside an alignment set, so two dimensions"
                  " suffice over a large enough field";
    return cert;
  }
  const auto facts = stitch_closure(seed_facts(p, collect_matches(p)), p);
  if (auto found = find_contradiction(facts, p)) return *found;
  cert.verdict = Verdict::Inconclusive;
  cert.reason = "conflicts inside alignment sets, but no dimension contradiction was found";
  return cert;
}

std::string certificate_to_json(const Certificate& c) {
  return detail::certificate_json(c).dump(2) + "\n";
}

}  // namespace ixc
