#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "gbh/fi_family.hpp"
#include "gbh/json_io.hpp"

using namespace gbh;

TEST_CASE("graph json round-trip") {
  const char* text = R"({"vertices": ["a","b"], "edges": [{"id":"e1","ends":["a","b"]}]})";
  Graph g = graph_from_json_text(text, "inline");
  CHECK(g == segment_graph());
  Graph again = graph_from_json_text(graph_to_json_text(g), "roundtrip");
  CHECK(again == g);
  // emission is deterministic
  CHECK(graph_to_json_text(g) == graph_to_json_text(again));
}

TEST_CASE("graph json diagnostics name the offending field") {
  auto message_of = [](const std::string& text) {
    try {
      graph_from_json_text(text, "bad.json");
    } catch (const Error& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message_of("{") .find("bad.json") != std::string::npos);
  CHECK(message_of(R"({"vertices": ["a"], "edges": [{"id":"e1"}]})").find("edges[0]") !=
        std::string::npos);
  CHECK(message_of(R"({"vertices": ["a"], "edges": [{"id":"e1","ends":["a","a"]}]})")
            .find("LoopEdge") != std::string::npos);
  CHECK(message_of(R"({"vertices": [3], "edges": []})").find("vertices") != std::string::npos);
}

TEST_CASE("family json round-trip") {
  const char* text = R"({
    "base": {"vertices": ["u"], "edges": []},
    "copy": {"vertices": ["c","d"], "edges": [{"id":"e","ends":["c","d"]}]},
    "overlap": {"vertices": ["z"], "edges": []},
    "embed_base": {"z": "u"},
    "embed_copy": {"z": "c"},
    "n_min": 0
  })";
  FIGraphFamily fam = family_from_json_text(text, "inline");
  CHECK(evaluate(fam, 3).edge_count() == 3);
  FIGraphFamily again = family_from_json_text(family_to_json_text(fam), "roundtrip");
  CHECK(evaluate(again, 3) == evaluate(fam, 3));
  CHECK(family_to_json_text(again) == family_to_json_text(fam));

  CHECK_THROWS_AS(family_from_json_text("{}", "empty"), Error);
}

TEST_CASE("report serializations parse as json") {
  StabilizationReport rep;
  rep.target = "beta(q=1,p=0,j=2)";
  rep.n_values = {3, 4, 5};
  rep.values = {1, 3, 6};
  rep.stabilized = true;
  rep.polynomial = {1, mpq_class(-3, 2), mpq_class(1, 2)};
  rep.holdouts = {{4, true}, {5, true}};
  auto parsed = nlohmann::json::parse(stabilization_report_to_json_text(rep));
  CHECK(parsed.at("stabilized") == true);
  CHECK(parsed.at("polynomial")[1] == "-3/2");

  LesReport les = verify_les(segment_graph(), "a", 1, 2, FieldTag::Q());
  auto lj = nlohmann::json::parse(les_report_to_json_text(les));
  CHECK(lj.at("ok") == true);
  CHECK(lj.at("exactness").is_array());

  StarRegressionReport reg = star_example_regression();
  auto rj = nlohmann::json::parse(star_regression_to_json_text(reg));
  CHECK(rj.at("ok") == true);
  CHECK(rj.at("rows").size() == 3);
}

TEST_CASE("abelian group serialization") {
  CHECK(abelian_to_json_text(make_abelian(2, {2, 4})) ==
        R"({"free_rank":2,"torsion":["2","4"]})");
  CHECK(make_abelian(0, {}).to_string() == "0");
  CHECK(make_abelian(1, {3}).to_string() == "Z^1 + Z/3");
}
