#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "doctest.h"
#include "ixc/inference.hpp"
#include "ixc/instances.hpp"
#include "ixc/structure.hpp"

using namespace ixc;

namespace {

std::optional<StrictRateFact> fact_on(const std::vector<StrictRateFact>& facts,
                                      const MsgSet& subset) {
  for (const auto& f : facts)
    if (f.subset == subset) return f;
  return std::nullopt;
}

DimMask dims_on(const std::vector<StrictRateFact>& facts, const MsgSet& subset) {
  auto f = fact_on(facts, subset);
  REQUIRE(f.has_value());
  return f->allowed_dims;
}

bool has_rule(const StrictRateFact& f, const std::string& rule) {
  return std::any_of(f.sources.begin(), f.sources.end(),
                     [&rule](const Contribution& c) { return c.rule == rule; });
}

std::vector<StrictRateFact> closed_facts(const Problem& p) {
  return stitch_closure(seed_facts(p, collect_matches(p)), p);
}

}  // namespace

TEST_SUITE("inference") {

TEST_CASE("dimension masks") {
  CHECK(make_dims({}) == 0);
  CHECK(make_dims({1, 2, 3}) == kAllDims);
  CHECK(make_dims({2}) == dim_bit(2));
  CHECK(dim_allowed(make_dims({1, 3}), 1));
  CHECK(!dim_allowed(make_dims({1, 3}), 2));
  CHECK(dims_list(make_dims({1, 3})) == std::vector<int>{1, 3});
  CHECK(dims_to_string(make_dims({1, 3})) == "{1,3}");
  CHECK(dims_to_string(0) == "{}");
}

TEST_CASE("seeded facts on the conflicting pair") {
  Problem p = instances::pair_conflict();
  auto facts = seed_facts(p, collect_matches(p));
  REQUIRE(facts.size() == 1);
  CHECK(facts[0].subset == MsgSet{0, 1});
  CHECK(facts[0].allowed_dims == dim_bit(2));
  REQUIRE(facts[0].sources.size() == 1);
  CHECK(facts[0].sources[0].rule == "conflict-pair");
  REQUIRE(facts[0].sources[0].pair.has_value());
  CHECK(*facts[0].sources[0].pair == std::pair<Msg, Msg>{0, 1});
}

TEST_CASE("seeded facts on the three-triple configuration") {
  Problem p = instances::stic();
  auto facts = seed_facts(p, collect_matches(p));

  auto inner = fact_on(facts, {1, 2, 4});
  REQUIRE(inner.has_value());
  CHECK(inner->allowed_dims == make_dims({1, 3}));
  CHECK(has_rule(*inner, "stic-inner"));

  for (const MsgSet& triple : {MsgSet{0, 1, 2}, MsgSet{1, 3, 4}, MsgSet{2, 4, 5}}) {
    auto f = fact_on(facts, triple);
    REQUIRE(f.has_value());
    CHECK(f->allowed_dims == dim_bit(2));
    CHECK(has_rule(*f, "stic-outer"));
    CHECK(has_rule(*f, "interfering-set"));  // each triple interferes at a dummy
  }
}

TEST_CASE("seeded facts on the square pyramid") {
  Problem p = instances::spic();
  auto facts = seed_facts(p, collect_matches(p));
  CHECK(dims_on(facts, {0, 1, 2, 3}) == dim_bit(2));
  CHECK(dims_on(facts, {0, 1, 2, 3, 4}) == dim_bit(2));
  CHECK(dims_on(facts, {0, 3}) == dim_bit(2));
  CHECK(dims_on(facts, {1, 4}) == dim_bit(2));
  CHECK(dims_on(facts, {3, 4}) == dim_bit(1));
  CHECK(dims_on(facts, {0, 1}) == dim_bit(1));

  auto cross = fact_on(facts, {0, 3});
  REQUIRE(cross.has_value());
  CHECK(has_rule(*cross, "spic-pair-dim2"));
  CHECK(!in_conflict(conflict_pairs(p), 0, 3));  // derived, not a conflict
}

TEST_CASE("every seeded witness certifies a real containment") {
  for (const Problem& p : {instances::stic(), instances::spic(), instances::double_stic(),
                           instances::spic_chain(), instances::xtype2_grid()}) {
    for (const auto& f : seed_facts(p, collect_matches(p)))
      for (const auto& c : f.sources)
        for (const Witness& w : c.witnesses) {
          CHECK(w.receiver >= 0);
          CHECK(is_subset(w.messages, interfering_set(p, w.receiver, w.demand)));
        }
  }
}

TEST_CASE("union stitching chains the pyramids end to end") {
  Problem p = instances::spic_chain();
  // only pyramid matches: the whole-chain fact must come from stitching
  auto facts = stitch_closure(seed_facts(p, detect_spic(p)), p);
  MsgSet core;
  for (Msg m = 0; m < 15; ++m) core.push_back(m);
  auto whole = fact_on(facts, core);
  REQUIRE(whole.has_value());
  CHECK(whole->allowed_dims == dim_bit(2));
  REQUIRE(has_rule(*whole, "union-stitch"));
  for (const auto& c : whole->sources) {
    if (c.rule != "union-stitch") continue;
    REQUIRE(c.parents.size() == 2);
    REQUIRE(c.link.has_value());
    CHECK(is_subset(*c.link, set_intersect(c.parents[0], c.parents[1])));
    auto linked = fact_on(facts, *c.link);
    REQUIRE(linked.has_value());
    CHECK(!dim_allowed(linked->allowed_dims, 1));
  }
  // disjoint exactly-2 sets must not stitch
  CHECK(!fact_on(facts, set_union({0, 1, 2}, {8, 9, 11})).has_value());
}

TEST_CASE("subset refinement pins a conflicting pair inside an exactly-2 set") {
  Problem p = instances::triangle();
  std::vector<StrictRateFact> start;
  start.push_back({MsgSet{0, 1, 2}, dim_bit(2), {Contribution{"triangular-set", dim_bit(2), {}, {}, {}, {}, {}}}});
  start.push_back({MsgSet{0, 1}, make_dims({1, 3}), {Contribution{"stic-inner", make_dims({1, 3}), {}, {}, {}, {}, {}}}});
  auto facts = stitch_closure(std::move(start), p);
  auto pair = fact_on(facts, {0, 1});
  REQUIRE(pair.has_value());
  CHECK(pair->allowed_dims == 0);
  CHECK(has_rule(*pair, "subset-refine"));
}

TEST_CASE("two overlapping three-triple configurations contradict") {
  Problem p = instances::double_stic();
  Certificate cert = quick_verdict(p);
  CHECK(cert.verdict == Verdict::RateThirdInfeasible);
  REQUIRE(cert.subject.has_value());
  CHECK(*cert.subject == MsgSet{1, 3, 4});
  REQUIRE(cert.facts_used.size() == 2);
  CHECK(cert.facts_used[0].allowed_dims == dim_bit(2));
  CHECK(cert.facts_used[1].allowed_dims == make_dims({1, 3}));
  CHECK(cert.facts_used[0].sources.front().rule == "stic-outer");
  CHECK(cert.facts_used[1].sources.front().rule == "stic-inner");
  CHECK(cert.reason.find("{2,4,5}") != std::string::npos);
  CHECK(!cert.conflict.has_value());

  std::string json = certificate_to_json(cert);
  CHECK(json.find("\"verdict\": \"rate-1/3-infeasible\"") != std::string::npos);
  CHECK(json.find("\"stic-inner\"") != std::string::npos);
  CHECK(json == certificate_to_json(quick_verdict(instances::double_stic())));
}

TEST_CASE("internal conflict inside an exactly-2 set contradicts") {
  Problem base = instances::from_triangles(3, {{0, 1, 2}});
  auto receivers = base.receivers;
  receivers.push_back(demand_with_interference(base.n, 0, {1, 2}));
  Problem p = make_problem(base.n, std::move(receivers));

  Certificate cert = quick_verdict(p);
  CHECK(cert.verdict == Verdict::RateThirdInfeasible);
  REQUIRE(cert.subject.has_value());
  CHECK(*cert.subject == MsgSet{0, 1, 2});
  REQUIRE(cert.conflict.has_value());
  CHECK(*cert.conflict == std::pair<Msg, Msg>{1, 2});
  REQUIRE(cert.facts_used.size() == 1);
  CHECK(cert.facts_used[0].allowed_dims == dim_bit(2));
  // without the planted receiver the same facts pass
  CHECK(quick_verdict(base).verdict == Verdict::Inconclusive);
}

TEST_CASE("verdicts on the named fixtures") {
  Problem all_known = make_problem(
      2, {Receiver{{0}, {1}}, Receiver{{1}, {0}}});
  CHECK(quick_verdict(all_known).verdict == Verdict::Rate1Feasible);
  CHECK(quick_verdict(instances::pair_conflict()).verdict == Verdict::RateHalfFeasible);
  CHECK(quick_verdict(instances::triangle()).verdict == Verdict::Inconclusive);
  CHECK(quick_verdict(instances::stic()).verdict == Verdict::Inconclusive);
  CHECK(quick_verdict(instances::spic()).verdict == Verdict::Inconclusive);
  CHECK(quick_verdict(instances::spic_chain()).verdict == Verdict::Inconclusive);
  CHECK(quick_verdict(instances::xtype2_grid()).verdict == Verdict::Inconclusive);
  CHECK(quick_verdict(instances::double_stic()).verdict == Verdict::RateThirdInfeasible);
}

TEST_CASE("pairs unable to share a dimension") {
  Problem p = instances::spic();
  auto pairs = rate1_infeasible_pairs(p, closed_facts(p));
  auto has = [&pairs](Msg a, Msg b) {
    return std::find(pairs.begin(), pairs.end(), std::pair<Msg, Msg>{a, b}) != pairs.end();
  };
  CHECK(has(0, 2));  // conflict
  CHECK(has(0, 3));  // pyramid cross pair, not a conflict
  CHECK(has(1, 4));
  CHECK(!has(3, 4));  // must share a dimension instead
  CHECK(!has(0, 1));
}

TEST_CASE("two-phase match collection finds the pyramid alignment class") {
  auto matches = collect_matches(instances::spic_chain());
  MsgSet core;
  for (Msg m = 0; m < 15; ++m) core.push_back(m);
  bool found = false;
  for (const auto& m : matches)
    if (m.kind == PatternKind::SpicAlignment && m.members == core) found = true;
  CHECK(found);
}

}  // TEST_SUITE
