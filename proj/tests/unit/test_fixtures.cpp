#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "ixc/instances.hpp"
#include "ixc/problem.hpp"

using namespace ixc;
using namespace ixc::instances;

namespace {

std::string fixture_bytes(const std::string& name) {
  std::ifstream in(std::string(IXC_FIXTURE_DIR) + "/" + name + ".json", std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "missing fixture ", name);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_SUITE("fixtures") {

TEST_CASE("shipped instances match their builders byte for byte") {
  CHECK(fixture_bytes("pair") == instance_to_json(pair_conflict()));
  CHECK(fixture_bytes("triangle") == instance_to_json(triangle()));
  CHECK(fixture_bytes("stic") == instance_to_json(stic()));
  CHECK(fixture_bytes("spic") == instance_to_json(spic()));
  CHECK(fixture_bytes("double_stic") == instance_to_json(double_stic()));
  CHECK(fixture_bytes("spic_chain") == instance_to_json(spic_chain()));
  CHECK(fixture_bytes("xtype2_grid") == instance_to_json(xtype2_grid()));
}

TEST_CASE("the construction suite ships one file per instance") {
  auto suite = construction_suite();
  REQUIRE(suite.size() == 10);
  for (size_t i = 0; i < suite.size(); ++i) {
    char name[32];
    std::snprintf(name, sizeof name, "construction_%02zu", i + 1);
    CAPTURE(name);
    CHECK(fixture_bytes(name) == instance_to_json(suite[i]));
  }
}

TEST_CASE("fixtures survive a parse and serialize round trip") {
  for (const char* name : {"pair", "triangle", "stic", "spic", "double_stic", "spic_chain",
                           "xtype2_grid", "construction_05"}) {
    CAPTURE(name);
    std::string bytes = fixture_bytes(name);
    CHECK(instance_to_json(parse_instance(bytes)) == bytes);
  }
}

}  // TEST_SUITE
