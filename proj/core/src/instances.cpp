#include "ixc/instances.hpp"

#include <algorithm>
#include <initializer_list>
#include <map>
#include <utility>

namespace ixc::instances {

namespace {

/// Accumulates receivers as (demand, interference) pairs so side information
/// can be materialized once the final message count (after dummy allocation)
/// is known. All labels 0-based.
struct FixtureBuilder {
  int n_core;
  int extra = 0;
  std::vector<std::pair<Msg, MsgSet>> pending;
  std::map<MsgSet, Msg> triple_dummies;

  explicit FixtureBuilder(int core) : n_core(core) {}

  /// Pins `t` as an interfering set at a fresh dummy demander (reused if the
  /// same triple was pinned before).
  Msg triple(const MsgSet& t) {
    MsgSet key = t;
    std::sort(key.begin(), key.end());
    auto it = triple_dummies.find(key);
    if (it != triple_dummies.end()) return it->second;
    Msg d = n_core + extra++;
    triple_dummies.emplace(key, d);
    pending.emplace_back(d, key);
    return d;
  }

  void interf(Msg demand, MsgSet interference) {
    std::sort(interference.begin(), interference.end());
    pending.emplace_back(demand, std::move(interference));
  }

  /// Conflict (a,b) without alignment structure: one receiver demanding b
  /// with a as its only interferer.
  void conflict(Msg a, Msg b) { interf(std::max(a, b), {std::min(a, b)}); }

  Problem build() {
    int n = n_core + extra;
    std::sort(pending.begin(), pending.end());
    pending.erase(std::unique(pending.begin(), pending.end()), pending.end());
    std::vector<Receiver> recs;
    MsgSet demanded;
    for (const auto& [d, interference] : pending) {
      recs.push_back(demand_with_interference(n, d, interference));
      demanded.push_back(d);
    }
    demanded = make_set(std::move(demanded));
    for (Msg m = 0; m < n; ++m)
      if (!set_contains(demanded, m)) recs.push_back(sink(n, m));
    return make_problem(n, std::move(recs));
  }
};

/// Successive-triangle gadget: roles r[0..5] are the canonical messages
/// 1..6. Triples {1,2,3},{2,4,5},{3,5,6} at dummies; pairs {1,2},{2,4}
/// interfere at 6, {1,3},{3,6} at 4, {4,5},{5,6} at 1.
void add_stic(FixtureBuilder& b, const std::array<Msg, 6>& r) {
  b.triple({r[0], r[1], r[2]});
  b.triple({r[1], r[3], r[4]});
  b.triple({r[2], r[4], r[5]});
  b.interf(r[5], {r[0], r[1]});
  b.interf(r[5], {r[1], r[3]});
  b.interf(r[3], {r[0], r[2]});
  b.interf(r[3], {r[2], r[5]});
  b.interf(r[0], {r[3], r[4]});
  b.interf(r[0], {r[4], r[5]});
}

/// Square-pyramid gadget: roles r[0..4] are the canonical messages 1..5.
/// Triples {1,2,3},{1,3,4},{3,4,5},{2,3,5} at dummies; {1,2} interferes at 5,
/// {4,5} at 2; 1 and 3 conflict.
void add_spic(FixtureBuilder& b, const std::array<Msg, 5>& r) {
  b.triple({r[0], r[1], r[2]});
  b.triple({r[0], r[2], r[3]});
  b.triple({r[2], r[3], r[4]});
  b.triple({r[1], r[2], r[4]});
  b.interf(r[4], {r[0], r[1]});
  b.interf(r[1], {r[3], r[4]});
  b.interf(r[2], {r[0]});
}

}  // namespace

Problem pair_conflict() {
  return make_problem(2, {Receiver{{0}, {}}, Receiver{{1}, {}}});
}

Problem triangle() {
  return make_problem(3, {Receiver{{0}, {}}, Receiver{{1}, {}}, Receiver{{2}, {}}});
}

Problem stic() {
  FixtureBuilder b(6);
  add_stic(b, {0, 1, 2, 3, 4, 5});
  return b.build();
}

Problem spic() {
  FixtureBuilder b(5);
  add_spic(b, {0, 1, 2, 3, 4});
  return b.build();
}

Problem double_stic() {
  FixtureBuilder b(9);
  add_stic(b, {0, 1, 2, 3, 4, 5});
  add_stic(b, {6, 3, 1, 7, 4, 8});  // roles 1..6 -> messages 7,4,2,8,5,9
  return b.build();
}

Problem spic_chain() {
  FixtureBuilder b(15);
  // Five pyramid gadgets; consecutive images intersect in a strictly
  // rate-1-infeasible set ({1,3,4} with its 1-4 conflict, {2,5}, {6,8},
  // {9,10,11} with its 9-10 conflict; all labels 1-based).
  add_spic(b, {13, 0, 2, 14, 3});   // (14, 1, 3, 15, 4)
  add_spic(b, {1, 0, 2, 4, 3});     // ( 2, 1, 3,  5, 4)
  add_spic(b, {1, 5, 6, 4, 7});     // ( 2, 6, 7,  5, 8)
  add_spic(b, {8, 5, 9, 10, 7});    // ( 9, 6,10, 11, 8)
  add_spic(b, {8, 11, 9, 10, 12});  // ( 9,12,10, 11,13)
  return b.build();
}

Problem from_triangles(int n_core, const std::vector<std::array<Msg, 3>>& triangles) {
  FixtureBuilder b(n_core);
  std::vector<std::pair<Msg, Msg>> pairs;
  for (const auto& t : triangles) {
    b.triple({t[0], t[1], t[2]});
    pairs.emplace_back(std::min(t[0], t[1]), std::max(t[0], t[1]));
    pairs.emplace_back(std::min(t[0], t[2]), std::max(t[0], t[2]));
    pairs.emplace_back(std::min(t[1], t[2]), std::max(t[1], t[2]));
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  for (const auto& [a, c] : pairs) b.conflict(a, c);
  return b.build();
}

Problem xtype2_grid() {
  return from_triangles(12, {{0, 1, 2},
                             {1, 2, 3},
                             {0, 4, 5},
                             {1, 4, 6},
                             {2, 7, 8},
                             {3, 5, 6},
                             {9, 10, 11}});
}

std::vector<Problem> type2_suite() {
  std::vector<Problem> out;
  auto with_receiver = [](Problem p, Msg d, MsgSet interference) {
    p.receivers.push_back(demand_with_interference(p.n, d, interference));
    return make_problem(p.n, std::move(p.receivers), p.field_hint);
  };
  Problem single = from_triangles(3, {{0, 1, 2}});
  Problem chain2 = from_triangles(4, {{0, 1, 2}, {1, 2, 3}});
  Problem path3 = from_triangles(5, {{0, 1, 2}, {1, 2, 3}, {2, 3, 4}});
  Problem fan = from_triangles(5, {{0, 1, 2}, {0, 1, 3}, {0, 1, 4}});
  Problem disjoint = from_triangles(6, {{0, 1, 2}, {3, 4, 5}});
  Problem chain2b = from_triangles(4, {{0, 1, 2}, {0, 2, 3}});
  out.push_back(single);
  out.push_back(chain2);
  out.push_back(path3);
  out.push_back(fan);
  out.push_back(disjoint);
  out.push_back(chain2b);
  // Same gadgets with a conflicting pair pushed inside a restricted
  // alignment set (the extra receiver's interference pair is already in
  // conflict, so only the restricted structure changes).
  out.push_back(with_receiver(single, 0, {1, 2}));
  out.push_back(with_receiver(chain2, 0, {2, 3}));
  out.push_back(with_receiver(path3, 4, {1, 2}));
  out.push_back(with_receiver(fan, 2, {0, 1}));
  out.push_back(with_receiver(disjoint, 3, {4, 5}));
  out.push_back(with_receiver(chain2b, 1, {0, 2}));
  return out;
}

std::vector<Problem> construction_suite() {
  std::vector<Problem> out;
  out.push_back(xtype2_grid());
  out.push_back(from_triangles(3, {{0, 1, 2}}));
  out.push_back(from_triangles(5, {{0, 1, 2}, {2, 3, 4}}));
  out.push_back(from_triangles(7, {{0, 1, 2}, {2, 3, 4}, {4, 5, 6}}));
  out.push_back(from_triangles(9, {{0, 1, 2}, {0, 3, 4}, {1, 5, 6}, {2, 7, 8}}));
  out.push_back(from_triangles(8, {{0, 1, 4}, {1, 2, 5}, {2, 3, 6}, {3, 0, 7}}));
  out.push_back(from_triangles(8, {{0, 1, 2}, {1, 2, 3}, {4, 5, 6}, {5, 6, 7}}));
  out.push_back(from_triangles(6, {{0, 1, 2}, {3, 4, 5}}));
  out.push_back(from_triangles(7, {{0, 1, 2}, {0, 3, 4}, {1, 4, 5}}));
  out.push_back(from_triangles(9, {{0, 1, 2}, {1, 2, 3}, {0, 4, 5}, {6, 7, 8}}));
  return out;
}

Problem random_problem(Rng& rng) {
  int n = 2 + static_cast<int>(rng.below(4));
  auto random_side_info = [&](Msg d) {
    MsgSet s;
    for (Msg m = 0; m < n; ++m)
      if (m != d && rng.below(2) == 0) s.push_back(m);
    return s;
  };
  std::vector<Receiver> recs;
  for (Msg k = 0; k < n; ++k) recs.push_back(Receiver{{k}, random_side_info(k)});
  int extra = static_cast<int>(rng.below(static_cast<uint64_t>(n) + 1));
  for (int i = 0; i < extra; ++i) {
    Msg d = static_cast<Msg>(rng.below(static_cast<uint64_t>(n)));
    recs.push_back(Receiver{{d}, random_side_info(d)});
  }
  return make_problem(n, std::move(recs));
}

Problem random_gadget_chain(Rng& rng, bool inject_internal_conflict) {
  // Gadget vocabulary, sized so the core stays oracle-friendly:
  //   triangle      3 fresh messages first / 1 when glued onto a pair
  //   two triangles 4 fresh / 2 glued
  //   pyramid       5 fresh, never glued, never under injection
  int core = 0;
  const int core_budget = 7;
  std::vector<std::array<Msg, 3>> tris;
  std::vector<std::array<Msg, 5>> pyramids;
  std::vector<std::pair<Msg, Msg>> pointy_pairs;
  std::vector<std::pair<Msg, Msg>> exposed;  // pairs the next gadget may glue onto

  auto add_pointy = [&](Msg a, Msg c) {
    pointy_pairs.emplace_back(std::min(a, c), std::max(a, c));
  };
  auto fresh = [&]() { return core++; };

  auto first_triangle = [&]() {
    Msg a = fresh(), c = fresh(), d = fresh();
    tris.push_back({a, c, d});
    add_pointy(a, c);
    add_pointy(a, d);
    add_pointy(c, d);
    exposed = {{a, c}, {a, d}, {c, d}};
  };
  auto first_double = [&]() {
    Msg a = fresh(), c = fresh(), d = fresh(), e = fresh();
    tris.push_back({a, c, d});
    tris.push_back({c, d, e});
    for (auto [x, y] : std::initializer_list<std::pair<Msg, Msg>>{
             {a, c}, {a, d}, {c, d}, {c, e}, {d, e}})
      add_pointy(x, y);
    exposed = {{c, d}, {c, e}, {d, e}};
  };
  auto first_pyramid = [&]() {
    std::array<Msg, 5> r{fresh(), fresh(), fresh(), fresh(), fresh()};
    pyramids.push_back(r);
    // Conflicting pairs of the image, plus the strictly rate-1-infeasible
    // non-conflicting pair {1,4}; all glueable under the stitch condition.
    exposed = {{r[0], r[2]}, {r[0], r[4]}, {r[1], r[4]}, {r[1], r[3]}, {r[0], r[3]}};
  };
  auto glue_triangle = [&](std::pair<Msg, Msg> on) {
    Msg f = fresh();
    tris.push_back({on.first, on.second, f});
    add_pointy(on.first, f);
    add_pointy(on.second, f);
    exposed = {{on.first, f}, {on.second, f}};
  };
  auto glue_double = [&](std::pair<Msg, Msg> on) {
    Msg f1 = fresh(), f2 = fresh();
    tris.push_back({on.first, on.second, f1});
    tris.push_back({on.second, f1, f2});
    add_pointy(on.first, f1);
    add_pointy(on.second, f1);
    add_pointy(on.second, f2);
    add_pointy(f1, f2);
    exposed = {{on.first, f1}, {on.second, f1}, {on.second, f2}, {f1, f2}};
  };

  int gadgets = 2 + static_cast<int>(rng.below(3));
  if (inject_internal_conflict) gadgets = 2;

  for (int g = 0; g < gadgets; ++g) {
    if (g == 0) {
      uint64_t roll = rng.below(inject_internal_conflict ? 2 : 4);
      if (roll == 0) first_triangle();
      else if (roll == 1) first_double();
      else first_pyramid();  // probability 1/2 so the stitch rule sees pyramids often
      continue;
    }
    auto on = exposed[rng.below(exposed.size())];
    int room = core_budget - core;
    if (room >= 2 && !inject_internal_conflict && rng.below(2) == 0) glue_double(on);
    else if (room >= 1) glue_triangle(on);
    else break;
  }

  FixtureBuilder b(core);
  for (const auto& r : pyramids) add_spic(b, r);
  for (const auto& t : tris) b.triple({t[0], t[1], t[2]});
  std::sort(pointy_pairs.begin(), pointy_pairs.end());
  pointy_pairs.erase(std::unique(pointy_pairs.begin(), pointy_pairs.end()), pointy_pairs.end());
  for (auto [a, c] : pointy_pairs) b.conflict(a, c);
  if (inject_internal_conflict) b.interf(0, {1, 2});
  return b.build();
}

}  // namespace ixc::instances
