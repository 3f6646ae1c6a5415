#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "fullgroup/expr.hpp"
#include "fullgroup/groupoid_json.hpp"

using namespace fullgroup;
using nlohmann::json;

namespace {

struct TempJson {
  std::string path;
  explicit TempJson(const std::string& name, const json& content)
      : path("expr_test_" + name + ".json") {
    std::ofstream out(path);
    out << content.dump(2);
  }
  ~TempJson() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("descriptions round-trip through the canonical printer") {
  for (const char* text :
       {"group:cyclic:4", "group:sym:3", "pair:2", "union(pair:2,group:cyclic:3)",
        "product(pair:3,group:cyclic:2)",
        "union(union(group:cyclic:2,pair:2),product(pair:2,group:sym:3))",
        "file:/some/path.json"}) {
    CAPTURE(text);
    GroupoidExpr e = parse_expr(text);
    CHECK(to_string(e) == text);
    CHECK(parse_expr(to_string(e)) == e);
  }
}

TEST_CASE("whitespace is allowed between tokens") {
  GroupoidExpr e = parse_expr("  union ( pair:2 ,  group:cyclic:3 )  ");
  CHECK(to_string(e) == "union(pair:2,group:cyclic:3)");
  CHECK(parse_expr(" pair:4") == parse_expr("pair:4"));
}

TEST_CASE("parse errors carry the offending position") {
  CHECK_THROWS_AS(parse_expr("pair:"), ParseError);
  CHECK_THROWS_AS(parse_expr("pear:3"), ParseError);
  CHECK_THROWS_AS(parse_expr("union(pair:2 pair:3)"), ParseError);
  CHECK_THROWS_AS(parse_expr("union(pair:2,pair:3"), ParseError);
  CHECK_THROWS_AS(parse_expr("pair:3 extra"), ParseError);
  CHECK_THROWS_AS(parse_expr("pair:99999999"), ParseError);
  CHECK_THROWS_AS(parse_expr(""), ParseError);

  try {
    parse_expr("union(pair:2 pair:3)");
  } catch (const ParseError& e) {
    CHECK(e.position == 13);
    CHECK(std::string(e.what()).find("position 13") != std::string::npos);
  }
}

TEST_CASE("degenerate sizes parse fine and fail at construction") {
  GroupoidExpr e = parse_expr("pair:0");
  CHECK(e.kind == GroupoidExpr::Kind::Pair);
  CHECK_THROWS_AS(build(e), std::invalid_argument);
  CHECK_THROWS_AS(build(parse_expr("group:cyclic:0")), std::invalid_argument);
}

TEST_CASE("groupoid JSON round-trips every constructor family") {
  for (const char* text :
       {"group:cyclic:5", "group:sym:3", "pair:3", "union(pair:2,group:cyclic:3)",
        "product(pair:2,group:cyclic:2)"}) {
    CAPTURE(text);
    FiniteGroupoid g = build(parse_expr(text));
    FiniteGroupoid back = groupoid_from_json(groupoid_to_json(g));
    CHECK(back.validate().ok);
    CHECK(back.num_units() == g.num_units());
    CHECK(back.range_vector() == g.range_vector());
    CHECK(back.source_vector() == g.source_vector());
    CHECK(back.inverse_vector() == g.inverse_vector());
    CHECK(back.compose_table() == g.compose_table());
    CHECK(back.labels() == g.labels());
  }
}

TEST_CASE("file descriptions load, validate, and reject broken input") {
  FiniteGroupoid g = build(parse_expr("union(pair:2,group:cyclic:2)"));
  TempJson good("good", groupoid_to_json(g));
  FiniteGroupoid loaded = build(parse_expr("file:" + good.path));
  CHECK(loaded.compose_table() == g.compose_table());
  CHECK(loaded.labels() == g.labels());

  // Structural problem: an arrow referencing an unknown inverse id.
  json broken = groupoid_to_json(g);
  broken["arrows"][0]["inverse"] = "nonexistent";
  TempJson structural("structural", broken);
  CHECK_THROWS_AS(build(parse_expr("file:" + structural.path)), std::invalid_argument);

  // Axiom problem: inverse tables swapped so inversion is not involutive.
  json axiom = groupoid_to_json(build(parse_expr("group:cyclic:3")));
  axiom["arrows"][0]["inverse"] = "g";  // g's inverse should be g2
  TempJson invalid("invalid", axiom);
  CHECK_THROWS_WITH_AS(build(parse_expr("file:" + invalid.path)),
                       doctest::Contains("fails validation"), std::invalid_argument);

  CHECK_THROWS_AS(build(parse_expr("file:/no/such/file.json")), std::invalid_argument);

  TempJson garbage("garbage", json::object());
  std::ofstream(garbage.path) << "not json at all {";
  CHECK_THROWS_AS(build(parse_expr("file:" + garbage.path)), std::invalid_argument);
}

TEST_CASE("JSON loader rejects structural damage with clear messages") {
  FiniteGroupoid g = build(parse_expr("pair:2"));
  json base = groupoid_to_json(g);

  json no_version = base;
  no_version.erase("schema_version");
  CHECK_THROWS_AS(groupoid_from_json(no_version), std::invalid_argument);

  json dup = base;
  dup["arrows"][1]["id"] = dup["arrows"][0]["id"];
  CHECK_THROWS_AS(groupoid_from_json(dup), std::invalid_argument);

  json nonunit_range = base;
  nonunit_range["arrows"][0]["range"] = base["arrows"][1]["id"];
  CHECK_THROWS_AS(groupoid_from_json(nonunit_range), std::invalid_argument);

  json empty_units = base;
  empty_units["units"] = json::array();
  CHECK_THROWS_AS(groupoid_from_json(empty_units), std::invalid_argument);

  json bad_triple = base;
  bad_triple["compose"].push_back({"a0_1"});
  CHECK_THROWS_AS(groupoid_from_json(bad_triple), std::invalid_argument);
}

TEST_CASE("unit-law compositions are implied by the JSON form") {
  FiniteGroupoid g = build(parse_expr("pair:2"));
  json j = groupoid_to_json(g);
  // Only non-unit pairs are listed explicitly.
  for (const auto& entry : j["compose"]) {
    CHECK(entry.size() == 3);
    // Both factors are non-units (their product may still be one).
    CHECK(entry[0].get<std::string>().rfind("u", 0) != 0);
    CHECK(entry[1].get<std::string>().rfind("u", 0) != 0);
  }
  // ...yet the loaded table regenerates them.
  FiniteGroupoid back = groupoid_from_json(j);
  ArrowId a01 = back.arrow_by_label("a0_1");
  CHECK(back.compose(back.arrow_by_label("u0"), a01) == a01);
  CHECK(back.compose(a01, back.arrow_by_label("u1")) == a01);
}
