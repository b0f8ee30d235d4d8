#include "ixc/report.hpp"

#include <string>

#include "doctest.h"
#include "ixc/code.hpp"
#include "ixc/dot.hpp"
#include "ixc/errors.hpp"
#include "ixc/instances.hpp"
#include "ixc/oracle.hpp"

using namespace ixc;
using namespace ixc::instances;

namespace {

size_t count_of(const std::string& text, const std::string& needle) {
  size_t n = 0;
  for (size_t at = text.find(needle); at != std::string::npos; at = text.find(needle, at + 1)) ++n;
  return n;
}

}  // namespace

TEST_SUITE("report") {

TEST_CASE("summary fields mirror the instance") {
  Report r = analyze(spic());
  CHECK(r.n == 9);
  CHECK(r.receivers == static_cast<int>(spic().receivers.size()));
  CHECK(r.conflicts == conflict_pairs(spic()));
  CHECK(in_conflict(r.conflicts, 0, 2));
  CHECK(r.alignment_sets == alignment_sets(spic()).sets);
  bool found_spic = false;
  for (const PatternMatch& m : r.patterns) found_spic = found_spic || m.kind == PatternKind::Spic;
  CHECK(found_spic);
}

TEST_CASE("positive verdicts skip construction") {
  Problem swap = make_problem(2, {Receiver{{0}, {1}}, Receiver{{1}, {0}}});
  Report one = analyze(swap);
  CHECK(one.certificate.verdict == Verdict::Rate1Feasible);
  CHECK_FALSE(one.code.has_value());

  Report half = analyze(pair_conflict());
  CHECK(half.certificate.verdict == Verdict::RateHalfFeasible);
  CHECK_FALSE(half.code.has_value());
}

TEST_CASE("an inconclusive verdict is settled by an explicit code when possible") {
  Problem p = from_triangles(3, {{0, 1, 2}});
  Report r = analyze(p);
  CHECK(r.certificate.verdict == Verdict::Inconclusive);
  REQUIRE(r.code.has_value());
  CHECK(verify_code(p, r.code->code).empty());
}

TEST_CASE("infeasibility keeps its certificate and never attaches a code") {
  Report r = analyze(double_stic());
  CHECK(r.certificate.verdict == Verdict::RateThirdInfeasible);
  CHECK_FALSE(r.code.has_value());
}

TEST_CASE("construction can be turned off") {
  AnalyzeOptions opts;
  opts.attempt_construction = false;
  Report r = analyze(from_triangles(3, {{0, 1, 2}}), opts);
  CHECK(r.certificate.verdict == Verdict::Inconclusive);
  CHECK_FALSE(r.code.has_value());
}

TEST_CASE("corrupted matches fail re-validation") {
  Problem p = spic();
  std::vector<PatternMatch> good = collect_matches(p);
  CHECK_NOTHROW(validate_patterns(p, good));

  std::vector<PatternMatch> bad = good;
  bad[0].members = {0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
  CHECK_THROWS_AS(validate_patterns(p, bad), InvariantError);

  std::vector<PatternMatch> fake;
  fake.push_back(
      PatternMatch{PatternKind::Triangular, {0, 1}, {}, {Witness{0, 99, {0}}}});
  CHECK_THROWS_AS(validate_patterns(p, fake), InvariantError);
}

TEST_CASE("json carries every section and is deterministic") {
  Report r = analyze(spic());
  std::string j = report_to_json(r);
  CHECK(j == report_to_json(r));
  for (const char* key : {"\"n\"", "\"receivers\"", "\"conflicts\"", "\"alignment_sets\"",
                          "\"patterns\"", "\"certificate\"", "\"code\"", "\"oracle\""})
    CHECK(j.find(key) != std::string::npos);
  CHECK(j.find("\"oracle\": null") != std::string::npos);

  r.oracle = feasible_rate(spic(), 3);
  std::string with_oracle = report_to_json(r);
  CHECK(with_oracle.find("\"oracle\": null") == std::string::npos);
  CHECK(with_oracle.find("\"nodes_explored\"") != std::string::npos);
}

TEST_CASE("text rendering names the verdict and inventory") {
  Problem p = double_stic();
  Report r = analyze(p);
  std::string t = report_to_text(r);
  CHECK(t.find("messages: " + std::to_string(p.n)) != std::string::npos);
  CHECK(t.find("verdict: rate-1/3-infeasible") != std::string::npos);
  CHECK(t.find("patterns:") != std::string::npos);
  CHECK(t.find("stic:") != std::string::npos);
  CHECK(t == report_to_text(r));
}

TEST_CASE("dot export draws messages, alignment edges, and constraint stars") {
  Problem p = spic();
  std::string dot = problem_to_dot(p);
  CHECK(dot == problem_to_dot(p));
  CHECK(count_of(dot, "[label=\"") == 9);
  CHECK(count_of(dot, "shape=point") == 7);
  size_t solid = alignment_sets(p).graph.edges.size();
  CHECK(count_of(dot, " -- ") - count_of(dot, "style=dashed") == solid);
  CHECK(dot.substr(0, 6) == "graph ");
  CHECK(dot.back() == '\n');
}

TEST_CASE("empty interference draws no star") {
  std::string dot = problem_to_dot(make_problem(2, {Receiver{{0}, {1}}, Receiver{{1}, {0}}}));
  CHECK(count_of(dot, "shape=point") == 0);
  CHECK(count_of(dot, "[label=\"") == 2);
}

}  // TEST_SUITE
