#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "doctest.h"
#include "ixc/encoder.hpp"
#include "ixc/instances.hpp"

using namespace ixc;

namespace {

// One interfering triple with all three pairs conflicting, plus a receiver
// that makes messages 2,3 interfere where 1 is demanded: the triple's set
// then has a restricted internal conflict.
Problem planted_internal_conflict() {
  return make_problem(4, {demand_with_interference(4, 3, {0, 1, 2}),
                          demand_with_interference(4, 1, {0}), demand_with_interference(4, 2, {0}),
                          demand_with_interference(4, 2, {1}),
                          demand_with_interference(4, 0, {1, 2})});
}

PatternMatch xset(MsgSet members) {
  return PatternMatch{PatternKind::Xtype2, std::move(members), {}, {}};
}

Subspace span2(Field f, const FVector& a, const FVector& b) {
  std::vector<FVector> vs{a, b};
  return span_of(f, 3, vs);
}

}  // namespace

TEST_SUITE("encoder") {

TEST_CASE("structural conditions on the grid fixture") {
  Problem pc = instances::xtype2_grid();
  ConditionReport rep = check_xtype2_conditions(pc);
  CHECK(rep.ok());
  REQUIRE(rep.xsets.size() == 6);
  CHECK(rep.xsets[0].members == MsgSet{0, 1, 2, 3});
  CHECK(rep.xsets[5].members == MsgSet{9, 10, 11});

  Etig etig = build_etig(rep.xsets);
  std::vector<std::pair<int, int>> expected{{0, 1}, {0, 2}, {0, 3}, {0, 4},
                                            {1, 2}, {1, 4}, {2, 4}};
  CHECK(etig.edges == expected);
}

TEST_CASE("condition violations are itemized") {
  SUBCASE("no extended type-2 sets: vacuous pass") {
    ConditionReport rep = check_xtype2_conditions(instances::triangle());
    CHECK(rep.ok());
    CHECK(rep.xsets.empty());
  }
  SUBCASE("contractible edge left in place") {
    Problem loose =
        make_problem(3, {demand_with_interference(3, 2, {0, 1}), sink(3, 0), sink(3, 1)});
    CHECK_THROWS_AS(check_xtype2_conditions(loose), NotMaximal);
  }
  SUBCASE("restricted internal conflict") {
    ConditionReport rep = check_xtype2_conditions(planted_internal_conflict());
    REQUIRE(rep.xsets.size() == 1);
    REQUIRE(rep.issues.size() == 1);
    CHECK(rep.issues[0].condition == 'a');
    CHECK(rep.issues[0].messages == MsgSet{1, 2});
  }
  SUBCASE("message shared by three sets") {
    ConditionReport rep = check_xtype2_conditions(instances::pair_conflict(),
                                                  {xset({0}), xset({0}), xset({0})});
    REQUIRE(rep.issues.size() == 1);
    CHECK(rep.issues[0].condition == 'b');
    CHECK(rep.issues[0].sets == std::vector<int>{0, 1, 2});
    CHECK(rep.issues[0].messages == MsgSet{0});
  }
  SUBCASE("conflict inside a pairwise intersection") {
    ConditionReport rep =
        check_xtype2_conditions(instances::pair_conflict(), {xset({0, 1}), xset({0, 1})});
    REQUIRE(rep.issues.size() == 1);
    CHECK(rep.issues[0].condition == 'c');
    CHECK(rep.issues[0].messages == MsgSet{0, 1});
  }
}

TEST_CASE("edge vectors follow the pinned processing order") {
  Field f = Field::of(101);
  Etig etig{{{0, 1, 2, 3}, {0, 4, 5}, {1, 4, 6}, {2, 7, 8}, {3, 5, 6}, {9, 10, 11}},
            {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 4}, {2, 4}}};
  std::vector<std::pair<int, int>> order{{0, 1}, {0, 2}, {0, 3}, {0, 4},
                                         {1, 4}, {1, 2}, {2, 4}};
  EtigAssignment ea = assign_etig_vectors(etig, f, 1, order);
  REQUIRE(ea.complete());
  const FVector& v01 = *ea.edge_vectors[0];
  const FVector& v02 = *ea.edge_vectors[1];
  const FVector& v03 = *ea.edge_vectors[2];
  const FVector& v04 = *ea.edge_vectors[3];
  const FVector& v12 = *ea.edge_vectors[4];
  const FVector& v14 = *ea.edge_vectors[5];
  const FVector& v24 = *ea.edge_vectors[6];

  // the first two vectors at vertex 0 pin its plane; later edges stay inside
  Subspace plane0 = span2(f, v01, v02);
  REQUIRE(plane0.dim() == 2);
  CHECK(in_span(v03, plane0));
  CHECK(in_span(v04, plane0));

  // vertex 1 was filled by (0,1) and (1,4) before (1,2) came up
  Subspace plane1 = span2(f, v01, v14);
  REQUIRE(plane1.dim() == 2);
  CHECK(in_span(v12, plane1));

  // the last edge joins two full planes, so it lives in their intersection
  Subspace plane2 = span2(f, v02, v12);
  Subspace plane4 = span2(f, v04, v14);
  REQUIRE(plane2.dim() == 2);
  REQUIRE(plane4.dim() == 2);
  CHECK(in_span(v24, plane2));
  CHECK(in_span(v24, plane4));

  for (int i : {0, 1, 2, 4}) CHECK(ea.vertex_spans[static_cast<size_t>(i)].dim() == 2);
  CHECK(ea.vertex_spans[3].dim() == 1);  // degree 1: only (0,3) is incident
  CHECK(ea.vertex_spans[5].dim() == 0);

  EtigAssignment again = assign_etig_vectors(etig, f, 1, order);
  CHECK(again.edge_vectors == ea.edge_vectors);
  CHECK(again.vertex_spans == ea.vertex_spans);
}

TEST_CASE("edge assignment basics") {
  Field f = Field::of(101);
  SUBCASE("default order is the graph order") {
    Etig etig{{{0}, {1}, {2}}, {{0, 1}, {0, 2}, {1, 2}}};
    EtigAssignment a = assign_etig_vectors(etig, f, 9);
    EtigAssignment b = assign_etig_vectors(etig, f, 9, etig.edges);
    CHECK(a.edge_vectors == b.edge_vectors);
    CHECK(a.vertex_spans == b.vertex_spans);
  }
  SUBCASE("single edge gets one nonzero vector") {
    Etig etig{{{0}, {1}}, {{0, 1}}};
    EtigAssignment ea = assign_etig_vectors(etig, f, 0);
    REQUIRE(ea.complete());
    CHECK(!ea.edge_vectors[0]->is_zero());
  }
  SUBCASE("star centers never exceed two dimensions") {
    Etig star{{{0}, {1}, {2}, {3}}, {{0, 1}, {0, 2}, {0, 3}}};
    for (uint64_t seed = 0; seed < 100; ++seed) {
      EtigAssignment ea = assign_etig_vectors(star, f, seed);
      for (const Subspace& s : ea.vertex_spans) CHECK(s.dim() <= 2);
    }
  }
  SUBCASE("orders must be edge permutations") {
    Etig etig{{{0}, {1}, {2}}, {{0, 1}, {0, 2}}};
    CHECK_THROWS_AS(assign_etig_vectors(etig, f, 0, {{0, 1}}), IndexMismatch);
    CHECK_THROWS_AS(assign_etig_vectors(etig, f, 0, {{0, 1}, {0, 1}}), IndexMismatch);
    CHECK_THROWS_AS(assign_etig_vectors(etig, f, 0, {{0, 1}, {1, 2}}), IndexMismatch);
  }
}

TEST_CASE("message vectors fill sets from planes") {
  Field f = Field::of(101);

  SUBCASE("grid end to end") {
    Problem pc = instances::xtype2_grid();
    ConditionReport rep = check_xtype2_conditions(pc);
    REQUIRE(rep.ok());
    Etig etig = build_etig(rep.xsets);
    EtigAssignment ea = assign_etig_vectors(etig, f, 5);
    PrecodingAssignment code = assign_message_vectors(pc, ea, 6);
    CHECK(code.L == 3);
    REQUIRE(static_cast<int>(code.vectors.size()) == pc.n);

    // the first set's members are all pairwise intersections, so they carry
    // the edge vectors and sit inside the vertex's plane
    CHECK(code.vectors[0] == *ea.edge_vectors[0]);
    for (Msg m : MsgSet{0, 1, 2, 3}) {
      CHECK(in_span(code.vectors[static_cast<size_t>(m)], ea.vertex_spans[0]));
    }

    // an isolated set samples from one plane, a degree-1 set extends its edge
    std::vector<FVector> iso{code.vectors[9], code.vectors[10], code.vectors[11]};
    CHECK(span_of(f, 3, iso).dim() == 2);
    std::vector<FVector> deg1{code.vectors[2], code.vectors[7], code.vectors[8]};
    CHECK(span_of(f, 3, deg1).dim() <= 2);
    CHECK(code.vectors[2] == *ea.edge_vectors[2]);

    for (const FVector& v : code.vectors) CHECK(!v.is_zero());
  }

  SUBCASE("one isolated set of four messages shares a plane") {
    EtigAssignment ea{{{{0, 1, 2, 3}}, {}}, f, {}, {Subspace::zero(f, 3)}};
    Problem pc = make_problem(4, {sink(4, 0), sink(4, 1), sink(4, 2), sink(4, 3)});
    PrecodingAssignment code = assign_message_vectors(pc, ea, 11);
    REQUIRE(code.vectors.size() == 4);
    CHECK(span_of(f, 3, code.vectors).dim() == 2);
  }

  SUBCASE("no sets at all: independent nonzero vectors") {
    EtigAssignment ea{{{}, {}}, f, {}, {}};
    PrecodingAssignment code = assign_message_vectors(instances::triangle(), ea, 0);
    REQUIRE(code.vectors.size() == 3);
    for (const FVector& v : code.vectors) CHECK(!v.is_zero());
  }

  SUBCASE("incomplete or clashing assignments are rejected") {
    EtigAssignment hole{{{{0}, {1}}, {{0, 1}}}, f, {std::nullopt},
                        {Subspace::zero(f, 3), Subspace::zero(f, 3)}};
    Problem pc = make_problem(4, {sink(4, 0), sink(4, 1), sink(4, 2), sink(4, 3)});
    CHECK_THROWS_AS(assign_message_vectors(pc, hole, 0), ConditionViolation);

    EtigAssignment clash{{{{0, 1}, {0, 2}, {0, 3}}, {{0, 1}, {0, 2}, {1, 2}}},
                         f,
                         {FVector{1, 0, 0}, FVector{0, 1, 0}, FVector{0, 0, 1}},
                         {Subspace::zero(f, 3), Subspace::zero(f, 3), Subspace::zero(f, 3)}};
    CHECK_THROWS_AS(assign_message_vectors(pc, clash, 0), ConditionViolation);
  }
}

TEST_CASE("length-3 construction") {
  SUBCASE("fixture suite verifies on the original problems") {
    for (const Problem& p : instances::construction_suite()) {
      ConstructResult res = construct_length3_code(p);
      CHECK(res.code.L == 3);
      CHECK(res.map.source_n == p.n);
      CHECK(verify_code(p, res.code).empty());
      CHECK(res.retries_used < 32);
    }
  }
  SUBCASE("independent vectors cover a conflict cycle with no sets") {
    ConstructOptions o;
    o.seed = 3;
    ConstructResult res = construct_length3_code(instances::triangle(), o);
    CHECK(res.map.history.empty());
    CHECK(verify_code(instances::triangle(), res.code).empty());

    std::string json = construct_result_to_json(res);
    CHECK(json.find("\"L\": 3") != std::string::npos);
    CHECK(json.find("\"q\": 101") != std::string::npos);
    CHECK(json.find("\"seed\": 3") != std::string::npos);
    CHECK(json.find("\"policy\": \"lexicographic\"") != std::string::npos);
    CHECK(json.find("\"retries_used\"") != std::string::npos);
    CHECK(json == construct_result_to_json(construct_length3_code(instances::triangle(), o)));
  }
  SUBCASE("provably infeasible input fails honestly") {
    ConstructOptions o;
    o.max_retries = 4;
    o.policies = {ContractionPolicy::Lexicographic};
    bool threw = false;
    try {
      construct_length3_code(instances::double_stic(), o);
    } catch (const NoQualifyingContraction&) {
      threw = true;
    } catch (const RetryExhausted&) {
      threw = true;
    }
    CHECK(threw);
  }
}

TEST_CASE("fork and cycle screening") {
  SUBCASE("pure cycle passes") {
    ForkCycleReport rep = fork_cycle_report(instances::triangle());
    CHECK(rep.ok);
    REQUIRE(rep.sets.size() == 1);
    CHECK(rep.sets[0].has_cycle);
    CHECK(!rep.sets[0].has_fork);
  }
  SUBCASE("fork plus cycle with no type-2 rescue fails") {
    Problem p = make_problem(6, {demand_with_interference(6, 4, {0, 1, 2}),
                                 demand_with_interference(6, 5, {0, 1, 3}), sink(6, 0),
                                 sink(6, 1), sink(6, 2), sink(6, 3)});
    ForkCycleReport rep = fork_cycle_report(p);
    CHECK(!rep.ok);
    REQUIRE(!rep.sets.empty());
    CHECK(rep.sets[0].members == MsgSet{0, 1, 2, 3});
    CHECK(rep.sets[0].has_fork);
    CHECK(rep.sets[0].has_cycle);
    CHECK(!rep.sets[0].clean_type2);
  }
  SUBCASE("clean type-2 set rescues a fork plus cycle") {
    Problem p = make_problem(6, {demand_with_interference(6, 4, {0, 1, 2}),
                                 demand_with_interference(6, 5, {0, 2, 3}),
                                 demand_with_interference(6, 2, {0}), sink(6, 0), sink(6, 1),
                                 sink(6, 3)});
    ForkCycleReport rep = fork_cycle_report(p);
    CHECK(rep.ok);
    REQUIRE(!rep.sets.empty());
    CHECK(rep.sets[0].members == MsgSet{0, 1, 2, 3});
    CHECK(rep.sets[0].has_fork);
    CHECK(rep.sets[0].has_cycle);
    CHECK(rep.sets[0].clean_type2);
  }
}

}  // TEST_SUITE
