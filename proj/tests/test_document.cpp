#include "compomat/document.hpp"

#include "compomat/error.hpp"

#include <doctest.h>

using namespace compomat;

namespace {

std::string minimal_doc(const std::string& payload) {
  return R"({
    "schema_version": "1",
    "objects": ["X", "Y"],
    "groupoids": [{"name": "g", "mode": "matrix", "arrows": [
      {"src": "X", "dst": "Y", "payload": )" +
         payload + R"(}]}],
    "composite": {"omega1": "g", "omega2": "g"}
  })";
}

}  // namespace

TEST_CASE("fixture documents round-trip byte-identically") {
  for (const char* fixture : {"pair:3", "crystalline:default", "triclinic:default", "random:4"}) {
    BodyDocument doc = document_from_fixture(fixture);
    std::string first = serialize_body(doc);
    BodyDocument reparsed = parse_body_json(first);
    CHECK(serialize_body(reparsed) == first);
    Composite c = realize_composite(reparsed);
    CHECK(c.body.names == doc.body.names);
  }
}

TEST_CASE("realized fixture composites match the direct constructors") {
  BodyDocument doc = document_from_fixture("crystalline:default");
  Composite from_doc = realize_composite(doc);
  Composite direct = crystalline_composite(crystalline_default());
  CHECK(from_doc.g1().arrows() == direct.g1().arrows());
  CHECK(from_doc.g2().arrows() == direct.g2().arrows());
}

TEST_CASE("parse errors carry their category") {
  CHECK_THROWS_WITH_AS(parse_body_json("{nope"), doctest::Contains("ParseError"), Error);
  CHECK_THROWS_WITH_AS(parse_body_json("[]"), doctest::Contains("SchemaError"), Error);
  CHECK_THROWS_WITH_AS(parse_body_json(R"({"schema_version": "2", "objects": ["X"],
                                           "composite": {"omega1": "g", "omega2": "g"}})"),
                       doctest::Contains("SchemaError"), Error);
  // malformed rational 1/0
  CHECK_THROWS_WITH_AS(
      parse_body_json(minimal_doc(R"([["1/0","0","0"],["0","1","0"],["0","0","1"]])")),
      doctest::Contains("SchemaError"), Error);
  // singular payload
  CHECK_THROWS_WITH_AS(
      parse_body_json(minimal_doc(R"([["1","0","0"],["1","0","0"],["0","0","1"]])")),
      doctest::Contains("SchemaError"), Error);
  // unknown reference
  BodyDocument doc = parse_body_json(R"({
    "schema_version": "1",
    "objects": ["X"],
    "groupoids": [],
    "composite": {"omega1": "missing", "omega2": "missing"}
  })");
  CHECK_THROWS_WITH_AS(realize_composite(doc), doctest::Contains("ResolutionError"), Error);
}

TEST_CASE("tabular document round trip") {
  BodyDocument doc = document_from_fixture("pair:3");
  std::string text = serialize_body(doc);
  BodyDocument again = parse_body_json(text);
  Composite c = realize_composite(again);
  CHECK(c.g1().mode() == Mode::Tabular);
  CHECK(check_axioms(c.g1()).passed);
  CHECK(serialize_body(again) == text);
}

TEST_CASE("response extraction documents") {
  std::string text = R"({
    "schema_version": "1",
    "objects": ["P1", "P2"],
    "responses": [{"name": "W", "kind": "det"}],
    "composite": {
      "omega1": {"response": "W", "candidates": "signed_permutations", "tol": "0"},
      "omega2": {"response": "W"}
    }
  })";
  BodyDocument doc = parse_body_json(text);
  Composite c = realize_composite(doc);
  CHECK(c.omega1.provenance == Provenance::ExtractedFromW);
  CHECK(c.g1().hom_indices(0, 1).size() == 24);
  CHECK(check_axioms(c.g1()).passed);
  CHECK(c.g1().arrows() == c.g2().arrows());
}

TEST_CASE("pointwise table response document") {
  std::string text = R"({
    "schema_version": "1",
    "objects": ["P1"],
    "responses": [{"name": "W", "kind": "pointwise_table",
                   "params": {"dim_v": 2, "values": [
                     {"point": "P1", "F": [["1","0","0"],["0","1","0"],["0","0","1"]],
                      "value": ["3", "1/2"]}]},
                   "samples": [[["1","0","0"],["0","1","0"],["0","0","1"]]]}],
    "composite": {
      "omega1": {"response": "W", "candidates": "idgroupoid"},
      "omega2": {"response": "W", "candidates": "idgroupoid"}
    },
    "groupoids": [{"name": "idgroupoid", "mode": "matrix", "arrows": []}]
  })";
  BodyDocument doc = parse_body_json(text);
  MechanicalResponse w = realize_response(doc.responses[0], doc.body);
  CHECK(w.dim_v() == 2);
  CHECK(w.value(0, Mat3::identity()) == std::vector<Rational>{Rational(3), Rational(1, 2)});
  CHECK_THROWS_WITH_AS(w.value(0, Mat3::diag(2, 1, 1)), doctest::Contains("ResolutionError"),
                       Error);
  Composite c = realize_composite(doc);
  CHECK(c.g1().size() == 1);
}

TEST_CASE("classify report validates against the published schema") {
  Composite c = realize_composite(document_from_fixture("crystalline:default"));
  UniformityReport r = classify_composite(c);
  Json report = classify_report_json("crystalline:default", c, r);
  Json schema = Json::parse(classify_report_schema());
  validate_against_schema(schema, report);

  Json missing = report;
  missing.erase("flags");
  CHECK_THROWS_WITH_AS(validate_against_schema(schema, missing), doctest::Contains("SchemaError"),
                       Error);
  Json extra = report;
  extra["surprise"] = 1;
  CHECK_THROWS_WITH_AS(validate_against_schema(schema, extra), doctest::Contains("SchemaError"),
                       Error);
  Json wrong_type = report;
  wrong_type["standing_hypothesis"] = "yes";
  CHECK_THROWS_WITH_AS(validate_against_schema(schema, wrong_type),
                       doctest::Contains("SchemaError"), Error);
  Json bad_flag = report;
  bad_flag["flags"]["uniform"]["value"] = 3;
  CHECK_THROWS_WITH_AS(validate_against_schema(schema, bad_flag), doctest::Contains("SchemaError"),
                       Error);
}

TEST_CASE("text report carries every flag") {
  Composite c = realize_composite(document_from_fixture("crystalline:default"));
  UniformityReport r = classify_composite(c);
  std::string text = classify_report_text("crystalline:default", c, r);
  for (const char* key :
       {"uniform", "horizontally_transitive", "vertically_transitive",
        "weak_horizontally_transitive", "weak_vertically_transitive", "strongly_uniform",
        "weakly_uniform_corners", "weakly_uniform_midpoint", "identity_filling",
        "proposition cross-checks"})
    CHECK(text.find(key) != std::string::npos);
}

TEST_CASE("partial squares parse from JSON") {
  Composite c = realize_composite(document_from_fixture("crystalline:default"));
  Json pj = Json::parse(R"({
    "bottom": {"src": "X", "dst": "X", "payload": [["1","0","0"],["0","1","0"],["0","0","1"]]},
    "right":  {"src": "X", "dst": "X", "payload": [["1","0","0"],["0","1","0"],["0","0","1"]]}
  })");
  PartialSquare p = partial_square_from_json(c.body, pj);
  CHECK(p.bottom.has_value());
  CHECK(p.right.has_value());
  CHECK(!p.top.has_value());
  CHECK(complete_square(c, p).size() == 3);
}

TEST_CASE("arrows serialize to stable JSON") {
  Body body{{"X", "Y"}};
  Arrow a(0, 1, Payload(Mat3::diag(Rational(1, 2), 1, 1)));
  Json j = arrow_to_json(body, a);
  CHECK(j["src"] == "X");
  CHECK(j["dst"] == "Y");
  CHECK(arrow_from_json(body, j) == a);
  Arrow l(1, 0, Payload(std::string("lab")));
  CHECK(arrow_from_json(body, arrow_to_json(body, l)) == l);
}
