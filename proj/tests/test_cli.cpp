#include "doctest.h"
#include "latcoh/error.hpp"
#include "latcoh/graph.hpp"
#include "latcoh/homology.hpp"
#include "latcoh/property_suites.hpp"
#include "latcoh/serialize.hpp"
#include "latcoh/triangle.hpp"

using namespace latcoh;

namespace {

PlumbingGraph named(const std::string& name) {
  for (auto& n : bundled_corpus())
    if (n.name == name) return n.graph;
  throw std::runtime_error("no corpus graph " + name);
}

}  // namespace

TEST_CASE("region JSON round trip") {
  Region r = explicit_region({0, 2}, {-1, -2}, {3, 4}, 2);
  r.weight_cap = 7;
  const Region back = region_from_json(to_json(r), 5);
  CHECK(back.base == r.base);
  CHECK(back.xmin == r.xmin);
  CHECK(back.xmax == r.xmax);
  CHECK(back.mcap == 2);
  CHECK(back.weight_cap == r.weight_cap);
  const Region d = region_from_json_text(R"({"base":[0],"xmin":[-2],"xmax":[2]})", 4);
  CHECK(d.mcap == 4);
  CHECK_FALSE(d.weight_cap);
  CHECK_THROWS_AS(region_from_json_text("{\"base\":[0]}", 3), RegionError);
  CHECK_THROWS_AS(region_from_json_text("not json", 3), RegionError);
  CHECK_THROWS_AS(region_from_json_text(R"({"base":[0],"xmin":[2],"xmax":[1]})", 3), RegionError);
}

TEST_CASE("presentation entries follow the schema") {
  const auto g = named("s3");
  const auto r = stabilize(Lattice(g), {1}, 0, 3);
  const Json entries = presentation_entries(graph_hash(g), r);
  REQUIRE(entries.size() == 2);
  std::vector<std::string> keys;
  for (auto it = entries[0].begin(); it != entries[0].end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"graph_hash", "class_index", "degree", "towers", "torsions", "stabilized",
                                         "region"});
  CHECK(entries[0]["graph_hash"] == graph_hash(g));
  CHECK(entries[0]["towers"] == Json::parse(R"([{"bottom":0}])"));
  CHECK(entries[1]["towers"].empty());
  CHECK(entries[0]["region"]["base"] == Json::parse("[1]"));
}

TEST_CASE("reports serialize deterministically") {
  const auto ctx = TriangleContext::make(named("rp3"), 0);
  const auto a = to_json(verify_ses(ctx)).dump();
  const auto b = to_json(verify_ses(ctx)).dump();
  CHECK(a == b);
  CHECK(a.find("\"A_injective\":true") != std::string::npos);
}

TEST_CASE("content hash is FNV-1a") {
  CHECK(content_hash("") == "cbf29ce484222325");
  CHECK(content_hash("a") == "af63dc4c8601ec8c");
}
