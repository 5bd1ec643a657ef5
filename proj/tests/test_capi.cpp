#include "compomat.h"

#include <doctest.h>

#include <json.hpp>

#include <string>

namespace {

struct Result {
  compomat_result* res = nullptr;
  ~Result() { compomat_result_free(res); }
};

struct Doc {
  compomat_doc* doc = nullptr;
  ~Doc() { compomat_doc_free(doc); }
};

std::string take_string(char* s) {
  std::string out = s ? s : "";
  compomat_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("version and schema are exposed") {
  CHECK(std::string(compomat_version()) == "1.0.0");
  nlohmann::json schema = nlohmann::json::parse(compomat_classify_schema());
  CHECK(schema["type"] == "object");
}

TEST_CASE("classify through the C surface") {
  char err[256] = {0};
  Doc doc;
  REQUIRE(compomat_doc_from_fixture("crystalline:default", &doc.doc, err, sizeof err) ==
          COMPOMAT_OK);
  Result res;
  REQUIRE(compomat_run_classify(doc.doc, nullptr, &res.res, err, sizeof err) == COMPOMAT_OK);
  char* json_text = nullptr;
  REQUIRE(compomat_result_json(res.res, &json_text, err, sizeof err) == COMPOMAT_OK);
  nlohmann::json j = nlohmann::json::parse(take_string(json_text));
  CHECK(j["flags"]["uniform"]["value"] == true);
  CHECK(j["flags"]["strongly_uniform"]["value"] == false);
  char* text = nullptr;
  REQUIRE(compomat_result_text(res.res, &text, err, sizeof err) == COMPOMAT_OK);
  CHECK(take_string(text).find("uniform") != std::string::npos);
}

TEST_CASE("document serialization round trip through C") {
  char err[256] = {0};
  Doc doc;
  REQUIRE(compomat_doc_from_fixture("pair:3", &doc.doc, err, sizeof err) == COMPOMAT_OK);
  char* text = nullptr;
  REQUIRE(compomat_doc_serialize(doc.doc, &text, err, sizeof err) == COMPOMAT_OK);
  std::string first = take_string(text);
  Doc again;
  REQUIRE(compomat_doc_from_json(first.c_str(), &again.doc, err, sizeof err) == COMPOMAT_OK);
  char* second = nullptr;
  REQUIRE(compomat_doc_serialize(again.doc, &second, err, sizeof err) == COMPOMAT_OK);
  CHECK(take_string(second) == first);
}

TEST_CASE("error codes separate input from engine failures") {
  char err[256] = {0};
  Doc doc;
  CHECK(compomat_doc_from_fixture("nosuch:fixture", &doc.doc, err, sizeof err) ==
        COMPOMAT_E_INPUT);
  CHECK(std::string(err).find("fixture") != std::string::npos);

  CHECK(compomat_doc_from_json("{bad json", &doc.doc, err, sizeof err) == COMPOMAT_E_INPUT);
  CHECK(compomat_doc_from_file("/nonexistent/file.json", &doc.doc, err, sizeof err) ==
        COMPOMAT_E_INPUT);

  // an extraction whose accepted set fails closure is an engine error
  const char* text = R"({
    "schema_version": "1",
    "objects": ["P1"],
    "groupoids": [{"name": "cand", "mode": "matrix", "arrows": [
      {"src": "P1", "dst": "P1", "payload": [["1","0","0"],["0","1","0"],["0","0","2"]]}]}],
    "responses": [{"name": "W", "kind": "det",
                   "samples": [[["1","0","0"],["0","1","0"],["0","0","1"]]]}],
    "composite": {
      "omega1": {"response": "W", "candidates": "cand", "tol": "3/2"},
      "omega2": {"response": "W", "candidates": "cand", "tol": "3/2"}
    }
  })";
  Doc bad;
  REQUIRE(compomat_doc_from_json(text, &bad.doc, err, sizeof err) == COMPOMAT_OK);
  Result res;
  CHECK(compomat_run_classify(bad.doc, nullptr, &res.res, err, sizeof err) == COMPOMAT_E_ENGINE);
  CHECK(std::string(err).find("NotClosed") != std::string::npos);
}

TEST_CASE("options control tolerance") {
  char err[256] = {0};
  compomat_options* opt = compomat_options_new();
  CHECK(compomat_options_set_tol(opt, "not-a-rational", err, sizeof err) == COMPOMAT_E_INPUT);
  CHECK(compomat_options_set_tol(opt, "1/4", err, sizeof err) == COMPOMAT_OK);
  compomat_options_free(opt);
}

TEST_CASE("triclinic search through the C surface") {
  char err[256] = {0};
  Result res;
  REQUIRE(compomat_run_triclinic_search(3, nullptr, &res.res, err, sizeof err) == COMPOMAT_OK);
  char* json_text = nullptr;
  REQUIRE(compomat_result_json(res.res, &json_text, err, sizeof err) == COMPOMAT_OK);
  nlohmann::json j = nlohmann::json::parse(take_string(json_text));
  CHECK(j["any_realizes_paper_claim"] == false);
  CHECK(j["per_points"][0]["findings"].size() == 8);
  CHECK(compomat_run_triclinic_search(9, nullptr, &res.res, err, sizeof err) == COMPOMAT_E_INPUT);
}

TEST_CASE("axioms, core, intersect and complete through the C surface") {
  char err[256] = {0};
  Doc doc;
  REQUIRE(compomat_doc_from_fixture("crystalline:default", &doc.doc, err, sizeof err) ==
          COMPOMAT_OK);

  Result ax;
  REQUIRE(compomat_run_axioms(doc.doc, nullptr, &ax.res, err, sizeof err) == COMPOMAT_OK);
  char* s = nullptr;
  REQUIRE(compomat_result_json(ax.res, &s, err, sizeof err) == COMPOMAT_OK);
  CHECK(nlohmann::json::parse(take_string(s))["all_passed"] == true);

  Result core;
  REQUIRE(compomat_run_core(doc.doc, nullptr, &core.res, err, sizeof err) == COMPOMAT_OK);
  REQUIRE(compomat_result_json(core.res, &s, err, sizeof err) == COMPOMAT_OK);
  nlohmann::json cj = nlohmann::json::parse(take_string(s));
  CHECK(cj["axioms_passed"] == true);
  CHECK(cj["core"]["arrows"].size() == 9);

  Result inter;
  REQUIRE(compomat_run_intersect(doc.doc, nullptr, &inter.res, err, sizeof err) == COMPOMAT_OK);
  REQUIRE(compomat_result_json(inter.res, &s, err, sizeof err) == COMPOMAT_OK);
  nlohmann::json ij = nlohmann::json::parse(take_string(s));
  CHECK(ij["uniform"] == true);
  CHECK(ij["intersection"]["arrows"].size() == 9);

  const char* partial = R"({
    "bottom": {"src": "X", "dst": "X", "payload": [["1","0","0"],["0","1","0"],["0","0","1"]]},
    "right":  {"src": "X", "dst": "X", "payload": [["1","0","0"],["0","1","0"],["0","0","1"]]}
  })";
  Result comp;
  REQUIRE(compomat_run_complete(doc.doc, partial, nullptr, &comp.res, err, sizeof err) ==
          COMPOMAT_OK);
  REQUIRE(compomat_result_json(comp.res, &s, err, sizeof err) == COMPOMAT_OK);
  CHECK(nlohmann::json::parse(take_string(s))["count"] == 3);
}
