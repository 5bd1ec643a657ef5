#include "compomat.h"

#include "compomat/document.hpp"
#include "compomat/error.hpp"

#include <cstring>
#include <optional>

using namespace compomat;

struct compomat_doc {
  BodyDocument doc;
  std::string source;
};

struct compomat_result {
  Json json;
  std::string text;
};

struct compomat_options {
  int threads = 1;
  std::uint64_t cap = 1000000;
  std::optional<Rational> tol;
};

namespace {

void put_err(char* err, size_t errlen, const std::string& msg) {
  if (!err || errlen == 0) return;
  std::size_t n = std::min(msg.size(), errlen - 1);
  std::memcpy(err, msg.data(), n);
  err[n] = '\0';
}

compomat_status status_of(Err e) {
  switch (e) {
    case Err::ParseError:
    case Err::SchemaError:
    case Err::ResolutionError:
    case Err::UsageError:
    case Err::UnknownObject:
    case Err::ObjectMismatch:
    case Err::ModeMismatch:
    case Err::CornerMismatch:
    case Err::WrongGroupoid:
    case Err::InvalidParams:
    case Err::InvalidPartial:
    case Err::NotAGroup:
      return COMPOMAT_E_INPUT;
    default:
      return COMPOMAT_E_ENGINE;
  }
}

template <typename F>
compomat_status guard(char* err, size_t errlen, F&& f) {
  try {
    f();
    return COMPOMAT_OK;
  } catch (const Error& e) {
    put_err(err, errlen, e.what());
    return status_of(e.code());
  } catch (const std::exception& e) {
    put_err(err, errlen, e.what());
    return COMPOMAT_E_ENGINE;
  }
}

compomat_options default_options;

const compomat_options& opts(const compomat_options* opt) {
  return opt ? *opt : default_options;
}

// applies the CLI-level tolerance override to extraction references
BodyDocument with_tol(const BodyDocument& doc, const compomat_options& o) {
  if (!o.tol) return doc;
  BodyDocument copy = doc;
  if (copy.omega1.groupoid.empty()) copy.omega1.tol = *o.tol;
  if (copy.omega2.groupoid.empty()) copy.omega2.tol = *o.tol;
  return copy;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* compomat_version(void) { return "1.0.0"; }

compomat_options* compomat_options_new(void) { return new compomat_options(); }

void compomat_options_free(compomat_options* opt) { delete opt; }

void compomat_options_set_threads(compomat_options* opt, int threads) {
  if (opt && threads >= 1) opt->threads = threads;
}

void compomat_options_set_cap(compomat_options* opt, uint64_t cap) {
  if (opt && cap > 0) opt->cap = cap;
}

compomat_status compomat_options_set_tol(compomat_options* opt, const char* tol, char* err,
                                         size_t errlen) {
  return guard(err, errlen, [&] {
    if (!opt || !tol) fail(Err::UsageError, "null options or tolerance");
    Rational r = rat_parse(tol);
    if (r < 0) fail(Err::UsageError, "tolerance must be nonnegative");
    opt->tol = r;
  });
}

compomat_status compomat_doc_from_file(const char* path, compomat_doc** out, char* err,
                                       size_t errlen) {
  return guard(err, errlen, [&] {
    if (!path || !out) fail(Err::UsageError, "null argument");
    auto* d = new compomat_doc{parse_body_file(path), path};
    *out = d;
  });
}

compomat_status compomat_doc_from_json(const char* json, compomat_doc** out, char* err,
                                       size_t errlen) {
  return guard(err, errlen, [&] {
    if (!json || !out) fail(Err::UsageError, "null argument");
    auto* d = new compomat_doc{parse_body_json(json), "inline"};
    *out = d;
  });
}

compomat_status compomat_doc_from_fixture(const char* fixture, compomat_doc** out, char* err,
                                          size_t errlen) {
  return guard(err, errlen, [&] {
    if (!fixture || !out) fail(Err::UsageError, "null argument");
    auto* d = new compomat_doc{document_from_fixture(fixture), fixture};
    *out = d;
  });
}

void compomat_doc_free(compomat_doc* doc) { delete doc; }

compomat_status compomat_doc_serialize(const compomat_doc* doc, char** out_json, char* err,
                                       size_t errlen) {
  return guard(err, errlen, [&] {
    if (!doc || !out_json) fail(Err::UsageError, "null argument");
    *out_json = dup_string(serialize_body(doc->doc));
  });
}

compomat_status compomat_run_axioms(const compomat_doc* doc, const compomat_options* opt,
                                    compomat_result** out, char* err, size_t errlen) {
  return guard(err, errlen, [&] {
    if (!doc || !out) fail(Err::UsageError, "null argument");
    const compomat_options& o = opts(opt);
    BodyDocument d = with_tol(doc->doc, o);
    std::vector<std::pair<std::string, AxiomReport>> reports;
    for (const NamedGroupoid& ng : d.groupoids)
      reports.emplace_back(ng.name, check_axioms(ng.groupoid));
    Composite c = realize_composite(d);
    if (d.omega1.groupoid.empty()) reports.emplace_back("omega1(extracted)", check_axioms(c.g1()));
    if (d.omega2.groupoid.empty()) reports.emplace_back("omega2(extracted)", check_axioms(c.g2()));
    reports.emplace_back("intersection", check_axioms(composite_groupoid(c)));
    *out = new compomat_result{axiom_report_json(doc->source, reports),
                               axiom_report_text(doc->source, reports)};
  });
}

compomat_status compomat_run_classify(const compomat_doc* doc, const compomat_options* opt,
                                      compomat_result** out, char* err, size_t errlen) {
  return guard(err, errlen, [&] {
    if (!doc || !out) fail(Err::UsageError, "null argument");
    const compomat_options& o = opts(opt);
    Composite c = realize_composite(with_tol(doc->doc, o));
    UniformityReport r = classify_composite(c, o.threads);
    *out = new compomat_result{classify_report_json(doc->source, c, r),
                               classify_report_text(doc->source, c, r)};
  });
}

compomat_status compomat_run_core(const compomat_doc* doc, const compomat_options* opt,
                                  compomat_result** out, char* err, size_t errlen) {
  return guard(err, errlen, [&] {
    if (!doc || !out) fail(Err::UsageError, "null argument");
    Composite c = realize_composite(with_tol(doc->doc, opts(opt)));
    FiniteGroupoid core = core_groupoid(c);
    AxiomReport rep = check_axioms(core);
    Json j;
    j["schema_version"] = "1";
    j["kind"] = "core";
    j["source"] = doc->source;
    j["core"] = groupoid_to_json(core);
    j["axioms_passed"] = rep.passed;
    std::string text = "core groupoid of " + doc->source + ": " + std::to_string(core.size()) +
                       " arrows over " + std::to_string(core.body().size()) + " points, axioms " +
                       (rep.passed ? "passed" : "FAILED") + "\n";
    for (const Arrow& a : core.arrows()) text += "  " + arrow_str(core, a) + "\n";
    *out = new compomat_result{std::move(j), std::move(text)};
  });
}

compomat_status compomat_run_intersect(const compomat_doc* doc, const compomat_options* opt,
                                       compomat_result** out, char* err, size_t errlen) {
  return guard(err, errlen, [&] {
    if (!doc || !out) fail(Err::UsageError, "null argument");
    Composite c = realize_composite(with_tol(doc->doc, opts(opt)));
    FiniteGroupoid inter = composite_groupoid(c);
    bool uniform = orbit_partition(inter).kind == OrbitKind::Transitive;
    Json j;
    j["schema_version"] = "1";
    j["kind"] = "intersect";
    j["source"] = doc->source;
    j["intersection"] = groupoid_to_json(inter);
    j["uniform"] = uniform;
    std::string text = "intersection of " + doc->source + ": " + std::to_string(inter.size()) +
                       " arrows, uniform " + (uniform ? "yes" : "no") + "\n";
    for (const Arrow& a : inter.arrows()) text += "  " + arrow_str(inter, a) + "\n";
    *out = new compomat_result{std::move(j), std::move(text)};
  });
}

compomat_status compomat_run_complete(const compomat_doc* doc, const char* partial_json,
                                      const compomat_options* opt, compomat_result** out,
                                      char* err, size_t errlen) {
  return guard(err, errlen, [&] {
    if (!doc || !partial_json || !out) fail(Err::UsageError, "null argument");
    Composite c = realize_composite(with_tol(doc->doc, opts(opt)));
    Json pj;
    try {
      pj = Json::parse(partial_json);
    } catch (const Json::parse_error& e) {
      fail(Err::ParseError, e.what());
    }
    PartialSquare p = partial_square_from_json(c.body, pj);
    std::vector<Square> completions = complete_square(c, p);
    if (completions.size() > opts(opt).cap)
      fail(Err::SizeCap, "completion list exceeds cap of " + std::to_string(opts(opt).cap));
    Json j;
    j["schema_version"] = "1";
    j["kind"] = "complete";
    j["source"] = doc->source;
    Json arr = Json::array();
    for (const Square& sq : completions) arr.push_back(square_to_json(c.body, sq));
    j["completions"] = std::move(arr);
    j["count"] = completions.size();
    std::string text = "completions of the partial square in " + doc->source + ": " +
                       std::to_string(completions.size()) + "\n";
    for (const Square& sq : completions) text += "  " + square_str(c, sq) + "\n";
    *out = new compomat_result{std::move(j), std::move(text)};
  });
}

compomat_status compomat_run_triclinic_search(int max_points, const compomat_options* opt,
                                              compomat_result** out, char* err, size_t errlen) {
  (void)opt;
  return guard(err, errlen, [&] {
    if (!out) fail(Err::UsageError, "null argument");
    if (max_points < 3 || max_points > 5)
      fail(Err::UsageError, "triclinic search covers 3 to 5 points");
    std::vector<TriclinicSearchReport> reports;
    for (int n = 3; n <= max_points; ++n) reports.push_back(triclinic_search(n));
    *out = new compomat_result{triclinic_search_json(reports), triclinic_search_text(reports)};
  });
}

compomat_status compomat_result_json(const compomat_result* res, char** out, char* err,
                                     size_t errlen) {
  return guard(err, errlen, [&] {
    if (!res || !out) fail(Err::UsageError, "null argument");
    *out = dup_string(dump_json(res->json));
  });
}

compomat_status compomat_result_text(const compomat_result* res, char** out, char* err,
                                     size_t errlen) {
  return guard(err, errlen, [&] {
    if (!res || !out) fail(Err::UsageError, "null argument");
    *out = dup_string(res->text);
  });
}

void compomat_result_free(compomat_result* res) { delete res; }

void compomat_string_free(char* s) { std::free(s); }

const char* compomat_classify_schema(void) { return classify_report_schema(); }

}  // extern "C"
