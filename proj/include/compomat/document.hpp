#pragma once

#include "compomat/fixtures.hpp"
#include "compomat/uniformity.hpp"

#include <json.hpp>

namespace compomat {

using Json = nlohmann::json;

struct NamedGroupoid {
  std::string name;
  FiniteGroupoid groupoid;
};

struct ResponseSpec {
  std::string name;
  std::string kind;  // "det", "trace_CtC", "pointwise_table"
  int dim_v = 1;
  std::vector<Mat3> samples;  // empty = default sample set
  std::map<std::pair<int, Mat3>, std::vector<Rational>> table;  // pointwise_table only
};

struct CompositeRef {
  std::string groupoid;    // set for declared groupoids
  std::string response;    // set for response extraction
  std::string candidates;  // "signed_permutations" or a groupoid name
  Rational tol = Rational(0);
};

struct BodyDocument {
  Body body;
  std::vector<NamedGroupoid> groupoids;
  std::vector<ResponseSpec> responses;
  CompositeRef omega1, omega2;
  std::string ambient;  // groupoid name, required for tabular composites
  bool hypothesis_override = false;
};

BodyDocument parse_body_json(const std::string& text);
BodyDocument parse_body_file(const std::string& path);
std::string serialize_body(const BodyDocument& doc);  // canonical; parse->serialize is a fixed point

MechanicalResponse realize_response(const ResponseSpec& spec, const Body& body);
Composite realize_composite(const BodyDocument& doc);

// Fixture specs: "pair:N", "crystalline:default", "triclinic:default",
// "random:SEED". ("triclinic:search" is a CLI-level report, not a document.)
BodyDocument document_from_fixture(const std::string& spec);

// arrows / squares as JSON values
Json arrow_to_json(const Body& body, const Arrow& a);
Arrow arrow_from_json(const Body& body, const Json& j);
Json square_to_json(const Body& body, const Square& sq);
PartialSquare partial_square_from_json(const Body& body, const Json& j);

// reports
Json classify_report_json(const std::string& source, const Composite& c, const UniformityReport& r);
std::string classify_report_text(const std::string& source, const Composite& c, const UniformityReport& r);
Json axiom_report_json(const std::string& source, const std::vector<std::pair<std::string, AxiomReport>>& reports);
std::string axiom_report_text(const std::string& source, const std::vector<std::pair<std::string, AxiomReport>>& reports);
Json groupoid_to_json(const FiniteGroupoid& g);
Json triclinic_search_json(const std::vector<TriclinicSearchReport>& reports);
std::string triclinic_search_text(const std::vector<TriclinicSearchReport>& reports);

// canonical dump: sorted keys, two-space indent, trailing newline
std::string dump_json(const Json& j);

// the published schema for classify reports, and a structural validator
// driven by that very document
const char* classify_report_schema();
void validate_against_schema(const Json& schema, const Json& instance);

}  // namespace compomat
