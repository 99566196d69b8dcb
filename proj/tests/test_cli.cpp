#include <doctest.h>

#include <json.hpp>

#include "densesol/cli.hpp"

using namespace densesol::cli;
using nlohmann::json;

namespace {

json parse(const CommandResult& r) { return json::parse(r.output); }

void check_round_trip(const CommandResult& r) {
  CHECK(parse(r).dump() + "\n" == r.output);
}

}  // namespace

TEST_CASE("output format names") {
  CHECK(parse_output_format("text") == OutputFormat::Text);
  CHECK(parse_output_format("json") == OutputFormat::Json);
  CHECK(parse_output_format("dot") == OutputFormat::Dot);
  CHECK_FALSE(parse_output_format("yaml"));
}

TEST_CASE("group specs") {
  CHECK(parse_group_spec("zm:3,2,2").order() == 6);
  CHECK(parse_group_spec("cyclic:1").order() == 1);
  CHECK(parse_group_spec("dihedral:4").order() == 8);
  CHECK(parse_group_spec("quaternion:4").order() == 16);
  CHECK_THROWS_AS(parse_group_spec("klein:4"), SpecError);
  CHECK_THROWS_AS(parse_group_spec("cyclic"), SpecError);
  CHECK_THROWS_AS(parse_group_spec("cyclic:x"), SpecError);
  CHECK_THROWS_AS(parse_group_spec("cyclic:-3"), SpecError);
  CHECK_THROWS_AS(parse_group_spec("zm:3,2"), SpecError);
  CHECK_THROWS_AS(parse_group_spec("cyclic:600"), densesol::OrderCapExceeded);
}

TEST_CASE("zm-info") {
  const auto ok = cmd_zm_info(3, 2, 2, OutputFormat::Json);
  CHECK(ok.exit_code == kExitOk);
  const auto doc = parse(ok);
  CHECK(doc["valid"] == true);
  CHECK(doc["d"] == 2);
  CHECK(doc["order"] == 6);
  CHECK(doc["subgroups"] == 6);
  CHECK(doc["solitary"] == 3);
  CHECK(doc["center"] == 1);
  CHECK(doc["schema"] == kJsonSchema);
  check_round_trip(ok);

  const auto bad = cmd_zm_info(13, 6, 2, OutputFormat::Json);
  CHECK(bad.exit_code == kExitInvalid);
  CHECK(parse(bad)["error"] == "order_violation");
  CHECK(parse(bad)["valid"] == false);
  check_round_trip(bad);
  CHECK(cmd_zm_info(13, 6, 2, OutputFormat::Text).error.find("r^n != 1") != std::string::npos);

  const auto dic3 = cmd_zm_info(3, 4, 2, OutputFormat::Text);
  CHECK(dic3.exit_code == kExitOk);
  CHECK(dic3.output.find("order:        12") != std::string::npos);
  CHECK(dic3.output.find("d = o_m(r):   2") != std::string::npos);

  CHECK(cmd_zm_info(3, 2, 2, OutputFormat::Dot).exit_code == kExitInvalid);
  CHECK(cmd_zm_info(3, 200, 2, OutputFormat::Json).exit_code == kExitInvalid);
  CHECK(parse(cmd_zm_info(3, 200, 2, OutputFormat::Json))["error"] == "order_cap");
}

TEST_CASE("lattice command") {
  const auto dot = cmd_lattice("zm:3,2,2", OutputFormat::Dot);
  CHECK(dot.exit_code == kExitOk);
  std::size_t nodes = 0, marked = 0, edges = 0;
  for (std::size_t pos = 0; (pos = dot.output.find("[label=", pos)) != std::string::npos; ++pos) ++nodes;
  for (std::size_t pos = 0; (pos = dot.output.find("peripheries=2", pos)) != std::string::npos; ++pos) ++marked;
  for (std::size_t pos = 0; (pos = dot.output.find(" -> ", pos)) != std::string::npos; ++pos) ++edges;
  CHECK(nodes == 6);
  CHECK(marked == 3);
  CHECK(edges == 8);

  const auto single = cmd_lattice("cyclic:1", OutputFormat::Json);
  CHECK(parse(single)["nodes"].size() == 1);
  CHECK(parse(single)["covers"].empty());

  const auto q8 = cmd_lattice("quaternion:3", OutputFormat::Json);
  check_round_trip(q8);
  const auto doc = parse(q8);
  REQUIRE(doc["nodes"].size() == 6);
  std::vector<std::size_t> solitary_orders;
  for (const auto& node : doc["nodes"])
    if (node["solitary"] == true) solitary_orders.push_back(node["order"]);
  CHECK(solitary_orders == std::vector<std::size_t>{1, 2, 8});
  for (const auto& node : doc["nodes"]) {
    CHECK(node.contains("members"));
    CHECK(node.contains("normal"));
    CHECK(node["members"].size() == node["order"]);
  }
  // Every cover edge goes up in order, so the DOT graph is acyclic.
  for (const auto& e : doc["covers"])
    CHECK(doc["nodes"][e["from"].get<std::size_t>()]["order"] <
          doc["nodes"][e["to"].get<std::size_t>()]["order"]);

  const auto text = cmd_lattice("dihedral:4", OutputFormat::Text);
  CHECK(text.output.find("10 subgroups") != std::string::npos);
  CHECK(cmd_lattice("klein:4", OutputFormat::Text).exit_code == kExitInvalid);
  CHECK(cmd_lattice("zm:13,6,2", OutputFormat::Json).exit_code == kExitInvalid);
  CHECK(parse(cmd_lattice("zm:13,6,2", OutputFormat::Json))["error"] == "order_violation");
}

TEST_CASE("density command") {
  const auto s3 = cmd_density("zm:3,2,2", OutputFormat::Json);
  CHECK(s3.exit_code == kExitOk);
  CHECK(parse(s3)["dense"] == true);
  CHECK(parse(s3)["counterexample"].is_null());
  check_round_trip(s3);

  const auto q8 = cmd_density("quaternion:3", OutputFormat::Json);
  CHECK(q8.exit_code == kExitFalse);
  const auto doc = parse(q8);
  CHECK(doc["dense"] == false);
  CHECK(doc["counterexample"]["lower"]["order"] == 2);
  CHECK(doc["counterexample"]["upper"]["order"] == 8);
  CHECK(doc["counterexample"]["interval"].size() == 3);
  check_round_trip(q8);

  CHECK(cmd_density("quaternion:3", OutputFormat::Dot).exit_code == kExitInvalid);
  CHECK(cmd_density("cyclic:7", OutputFormat::Text).output.find("yes") != std::string::npos);
}

TEST_CASE("verify command") {
  const auto r = cmd_verify(100, OutputFormat::Json);
  CHECK(r.exit_code == kExitOk);
  const auto doc = parse(r);
  CHECK(doc["triples"] == 102);
  CHECK(doc["disagreements"].empty());
  check_round_trip(r);
  CHECK(cmd_verify(1000, OutputFormat::Json).exit_code == kExitInvalid);
  CHECK(cmd_verify(20, OutputFormat::Dot).exit_code == kExitInvalid);
}
