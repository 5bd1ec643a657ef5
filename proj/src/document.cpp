#include "compomat/document.hpp"

#include "compomat/error.hpp"

#include <fstream>
#include <sstream>

namespace compomat {

namespace {

[[noreturn]] void schema_fail(const std::string& where, const std::string& what) {
  fail(Err::SchemaError, where + ": " + what);
}

const Json& need(const Json& j, const char* key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) schema_fail(where, std::string("missing field '") + key + "'");
  return *it;
}

std::string need_string(const Json& j, const char* key, const std::string& where) {
  const Json& v = need(j, key, where);
  if (!v.is_string()) schema_fail(where, std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

Rational parse_rat_field(const Json& v, const std::string& where) {
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (!v.is_string()) schema_fail(where, "rationals are strings like \"p/q\"");
  try {
    return rat_parse(v.get<std::string>());
  } catch (const Error& e) {
    schema_fail(where, e.what());
  }
}

Mat3 mat_from_json(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 3) schema_fail(where, "matrix must be a 3x3 array");
  Mat3 m;
  for (int r = 0; r < 3; ++r) {
    const Json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || row.size() != 3) schema_fail(where, "matrix must be a 3x3 array");
    for (int c = 0; c < 3; ++c)
      m.at(r, c) = parse_rat_field(row[static_cast<std::size_t>(c)], where);
  }
  return m;
}

Json mat_to_json(const Mat3& m) {
  Json rows = Json::array();
  for (int r = 0; r < 3; ++r) {
    Json row = Json::array();
    for (int c = 0; c < 3; ++c) row.push_back(rat_str(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

int object_id(const Body& body, const std::string& name, const std::string& where) {
  int id = body.index_of(name);
  if (id < 0) fail(Err::ResolutionError, where + ": unknown object '" + name + "'");
  return id;
}

}  // namespace

Json arrow_to_json(const Body& body, const Arrow& a) {
  Json j;
  j["src"] = body.name(a.src);
  j["dst"] = body.name(a.dst);
  if (a.payload.is_label())
    j["payload"] = Json{{"label", a.payload.label()}};
  else
    j["payload"] = mat_to_json(a.payload.matrix());
  return j;
}

Arrow arrow_from_json(const Body& body, const Json& j) {
  const std::string where = "arrow";
  if (!j.is_object()) schema_fail(where, "arrow must be an object");
  int src = object_id(body, need_string(j, "src", where), where);
  int dst = object_id(body, need_string(j, "dst", where), where);
  const Json& p = need(j, "payload", where);
  if (p.is_object()) return Arrow(src, dst, Payload(need_string(p, "label", where)));
  Mat3 m = mat_from_json(p, where);
  if (mat_det(m) == 0) schema_fail(where, "matrix payload must be invertible");
  return Arrow(src, dst, Payload(std::move(m)));
}

Json square_to_json(const Body& body, const Square& sq) {
  Json j;
  j["bottom"] = arrow_to_json(body, sq.bottom);
  j["top"] = arrow_to_json(body, sq.top);
  j["right"] = arrow_to_json(body, sq.right);
  j["left"] = arrow_to_json(body, sq.left);
  return j;
}

PartialSquare partial_square_from_json(const Body& body, const Json& j) {
  if (!j.is_object()) schema_fail("partial square", "must be an object");
  PartialSquare p;
  if (j.contains("bottom")) p.bottom = arrow_from_json(body, j["bottom"]);
  if (j.contains("top")) p.top = arrow_from_json(body, j["top"]);
  if (j.contains("right")) p.right = arrow_from_json(body, j["right"]);
  if (j.contains("left")) p.left = arrow_from_json(body, j["left"]);
  return p;
}

Json groupoid_to_json(const FiniteGroupoid& g) {
  Json j;
  j["mode"] = g.mode() == Mode::MatrixDerived ? "matrix" : "table";
  Json arrows = Json::array();
  for (const Arrow& a : g.arrows()) arrows.push_back(arrow_to_json(g.body(), a));
  j["arrows"] = std::move(arrows);
  if (g.mode() == Mode::Tabular) {
    Json tables;
    tables["identity"] = g.tables().identity;
    tables["inverse"] = g.tables().inverse;
    Json comp = Json::array();
    for (const auto& [key, val] : g.tables().compose)
      comp.push_back(Json::array({key.first, key.second, val}));
    tables["compose"] = std::move(comp);
    j["tables"] = std::move(tables);
  }
  return j;
}

namespace {

FiniteGroupoid groupoid_from_json(const Body& doc_body, const Json& j, const std::string& name) {
  const std::string where = "groupoid '" + name + "'";
  // an explicit object list overrides the document body (a groupoid over a
  // different body cannot enter a composite and trips ObjectMismatch there)
  Body body = doc_body;
  if (j.contains("objects")) {
    body.names.clear();
    for (const Json& o : j["objects"]) {
      if (!o.is_string()) schema_fail(where, "object names must be strings");
      body.names.push_back(o.get<std::string>());
    }
    if (body.names.empty()) schema_fail(where, "'objects' must be nonempty");
  }
  std::string mode = need_string(j, "mode", where);
  const Json& arrows_json = need(j, "arrows", where);
  if (!arrows_json.is_array()) schema_fail(where, "'arrows' must be an array");
  std::vector<Arrow> arrows;
  for (const Json& aj : arrows_json) arrows.push_back(arrow_from_json(body, aj));
  if (mode == "matrix") {
    for (const Arrow& a : arrows)
      if (!a.payload.is_matrix()) schema_fail(where, "matrix groupoid with label payload");
    return FiniteGroupoid::matrix_derived(body, std::move(arrows));
  }
  if (mode != "table") schema_fail(where, "mode must be \"matrix\" or \"table\"");
  for (const Arrow& a : arrows)
    if (!a.payload.is_label()) schema_fail(where, "table groupoid with matrix payload");
  const Json& tj = need(j, "tables", where);
  Tables t;
  const Json& ident = need(tj, "identity", where);
  if (!ident.is_array()) schema_fail(where, "'tables.identity' must be an array");
  for (const Json& v : ident) t.identity.push_back(v.get<int>());
  const Json& inv = need(tj, "inverse", where);
  if (!inv.is_array()) schema_fail(where, "'tables.inverse' must be an array");
  for (const Json& v : inv) t.inverse.push_back(v.get<int>());
  const Json& comp = need(tj, "compose", where);
  if (!comp.is_array()) schema_fail(where, "'tables.compose' must be an array");
  for (const Json& e : comp) {
    if (!e.is_array() || e.size() != 3) schema_fail(where, "compose entries are [g, h, result]");
    t.compose[{e[0].get<int>(), e[1].get<int>()}] = e[2].get<int>();
  }
  return FiniteGroupoid::tabular(body, std::move(arrows), std::move(t));
}

CompositeRef composite_ref_from_json(const Json& j, const std::string& where) {
  CompositeRef ref;
  if (j.is_string()) {
    ref.groupoid = j.get<std::string>();
    return ref;
  }
  if (!j.is_object()) schema_fail(where, "composite reference must be a name or an object");
  if (j.contains("groupoid")) {
    ref.groupoid = need_string(j, "groupoid", where);
    return ref;
  }
  ref.response = need_string(j, "response", where);
  ref.candidates = j.contains("candidates") ? need_string(j, "candidates", where)
                                            : std::string("signed_permutations");
  if (j.contains("tol")) ref.tol = parse_rat_field(j["tol"], where);
  return ref;
}

Json composite_ref_to_json(const CompositeRef& ref) {
  Json j;
  if (!ref.groupoid.empty()) {
    j["groupoid"] = ref.groupoid;
    return j;
  }
  j["response"] = ref.response;
  j["candidates"] = ref.candidates;
  j["tol"] = rat_str(ref.tol);
  return j;
}

}  // namespace

BodyDocument parse_body_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(Err::ParseError, e.what());
  }
  if (!j.is_object()) fail(Err::SchemaError, "document must be a JSON object");
  std::string version = need_string(j, "schema_version", "document");
  if (version != "1") fail(Err::SchemaError, "unsupported schema_version '" + version + "'");

  BodyDocument doc;
  const Json& objects = need(j, "objects", "document");
  if (!objects.is_array() || objects.empty())
    fail(Err::SchemaError, "document needs a nonempty 'objects' array");
  for (const Json& o : objects) {
    if (!o.is_string()) fail(Err::SchemaError, "object names must be strings");
    doc.body.names.push_back(o.get<std::string>());
  }

  if (j.contains("groupoids")) {
    const Json& gs = j["groupoids"];
    if (!gs.is_array()) fail(Err::SchemaError, "'groupoids' must be an array");
    for (const Json& gj : gs) {
      std::string name = need_string(gj, "name", "groupoid");
      for (const auto& existing : doc.groupoids)
        if (existing.name == name) fail(Err::SchemaError, "duplicate groupoid name '" + name + "'");
      doc.groupoids.push_back({name, groupoid_from_json(doc.body, gj, name)});
    }
  }
  if (j.contains("responses")) {
    const Json& rs = j["responses"];
    if (!rs.is_array()) fail(Err::SchemaError, "'responses' must be an array");
    for (const Json& rj : rs) {
      ResponseSpec spec;
      spec.name = need_string(rj, "name", "response");
      spec.kind = need_string(rj, "kind", "response");
      if (spec.kind != "det" && spec.kind != "trace_CtC" && spec.kind != "pointwise_table")
        fail(Err::SchemaError, "unknown response kind '" + spec.kind + "'");
      if (rj.contains("samples"))
        for (const Json& s : rj["samples"]) spec.samples.push_back(mat_from_json(s, "response samples"));
      if (spec.kind == "pointwise_table") {
        const Json& params = need(rj, "params", "response");
        spec.dim_v = need(params, "dim_v", "response params").get<int>();
        const Json& values = need(params, "values", "response params");
        if (!values.is_array()) fail(Err::SchemaError, "'values' must be an array");
        for (const Json& vj : values) {
          int x = object_id(doc.body, need_string(vj, "point", "response value"), "response value");
          Mat3 f = mat_from_json(need(vj, "F", "response value"), "response value");
          std::vector<Rational> val;
          for (const Json& c : need(vj, "value", "response value"))
            val.push_back(parse_rat_field(c, "response value"));
          spec.table[{x, f}] = std::move(val);
        }
      }
      doc.responses.push_back(std::move(spec));
    }
  }

  const Json& comp = need(j, "composite", "document");
  doc.omega1 = composite_ref_from_json(need(comp, "omega1", "composite"), "composite.omega1");
  doc.omega2 = composite_ref_from_json(need(comp, "omega2", "composite"), "composite.omega2");
  if (comp.contains("ambient")) doc.ambient = need_string(comp, "ambient", "composite");
  if (comp.contains("hypothesis_override"))
    doc.hypothesis_override = comp["hypothesis_override"].get<bool>();
  return doc;
}

BodyDocument parse_body_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Err::ParseError, "cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_body_json(buf.str());
}

std::string serialize_body(const BodyDocument& doc) {
  Json j;
  j["schema_version"] = "1";
  j["objects"] = doc.body.names;
  Json gs = Json::array();
  for (const NamedGroupoid& ng : doc.groupoids) {
    Json gj = groupoid_to_json(ng.groupoid);
    gj["name"] = ng.name;
    if (!(ng.groupoid.body() == doc.body)) gj["objects"] = ng.groupoid.body().names;
    gs.push_back(std::move(gj));
  }
  j["groupoids"] = std::move(gs);
  if (!doc.responses.empty()) {
    Json rs = Json::array();
    for (const ResponseSpec& spec : doc.responses) {
      Json rj;
      rj["name"] = spec.name;
      rj["kind"] = spec.kind;
      if (!spec.samples.empty()) {
        Json ss = Json::array();
        for (const Mat3& m : spec.samples) ss.push_back(mat_to_json(m));
        rj["samples"] = std::move(ss);
      }
      if (spec.kind == "pointwise_table") {
        Json params;
        params["dim_v"] = spec.dim_v;
        Json values = Json::array();
        for (const auto& [key, val] : spec.table) {
          Json vj;
          vj["point"] = doc.body.name(key.first);
          vj["F"] = mat_to_json(key.second);
          Json arr = Json::array();
          for (const Rational& r : val) arr.push_back(rat_str(r));
          vj["value"] = std::move(arr);
          values.push_back(std::move(vj));
        }
        params["values"] = std::move(values);
        rj["params"] = std::move(params);
      }
      rs.push_back(std::move(rj));
    }
    j["responses"] = std::move(rs);
  }
  Json comp;
  comp["omega1"] = composite_ref_to_json(doc.omega1);
  comp["omega2"] = composite_ref_to_json(doc.omega2);
  if (!doc.ambient.empty()) comp["ambient"] = doc.ambient;
  if (doc.hypothesis_override) comp["hypothesis_override"] = true;
  j["composite"] = std::move(comp);
  return dump_json(j);
}

MechanicalResponse realize_response(const ResponseSpec& spec, const Body& body) {
  std::vector<Mat3> samples = spec.samples.empty() ? default_sample_set() : spec.samples;
  if (spec.kind == "det") return response_det(body, std::move(samples));
  if (spec.kind == "trace_CtC") return response_trace_ctc(body, std::move(samples));
  if (spec.kind == "pointwise_table")
    return response_pointwise_table(body, spec.dim_v, spec.table, std::move(samples));
  fail(Err::SchemaError, "unknown response kind '" + spec.kind + "'");
}

namespace {

const FiniteGroupoid* find_groupoid(const BodyDocument& doc, const std::string& name) {
  for (const NamedGroupoid& ng : doc.groupoids)
    if (ng.name == name) return &ng.groupoid;
  return nullptr;
}

const ResponseSpec* find_response(const BodyDocument& doc, const std::string& name) {
  for (const ResponseSpec& spec : doc.responses)
    if (spec.name == name) return &spec;
  return nullptr;
}

MaterialGroupoid realize_ref(const BodyDocument& doc, const CompositeRef& ref) {
  if (!ref.groupoid.empty()) {
    const FiniteGroupoid* g = find_groupoid(doc, ref.groupoid);
    if (!g) fail(Err::ResolutionError, "unknown groupoid reference '" + ref.groupoid + "'");
    return declared_material_groupoid(*g);
  }
  const ResponseSpec* spec = find_response(doc, ref.response);
  if (!spec) fail(Err::ResolutionError, "unknown response reference '" + ref.response + "'");
  MechanicalResponse w = realize_response(*spec, doc.body);
  std::vector<Arrow> candidates;
  if (ref.candidates == "signed_permutations") {
    for (int x = 0; x < doc.body.size(); ++x)
      for (int y = 0; y < doc.body.size(); ++y)
        for (const Mat3& m : signed_permutations()) candidates.emplace_back(x, y, Payload(m));
  } else {
    const FiniteGroupoid* g = find_groupoid(doc, ref.candidates);
    if (!g) fail(Err::ResolutionError, "unknown candidate groupoid '" + ref.candidates + "'");
    if (g->mode() != Mode::MatrixDerived)
      fail(Err::ModeMismatch, "candidate groupoid must be matrix-derived");
    candidates = g->arrows();
  }
  return build_material_groupoid(w, candidates, ref.tol, ref.response);
}

}  // namespace

Composite realize_composite(const BodyDocument& doc) {
  MaterialGroupoid o1 = realize_ref(doc, doc.omega1);
  MaterialGroupoid o2 = realize_ref(doc, doc.omega2);
  std::optional<FiniteGroupoid> ambient;
  if (!doc.ambient.empty()) {
    const FiniteGroupoid* g = find_groupoid(doc, doc.ambient);
    if (!g) fail(Err::ResolutionError, "unknown ambient groupoid '" + doc.ambient + "'");
    ambient = *g;
  }
  return make_composite(std::move(o1), std::move(o2), std::move(ambient), doc.hypothesis_override);
}

BodyDocument document_from_fixture(const std::string& fixture) {
  auto colon = fixture.find(':');
  std::string kind = colon == std::string::npos ? fixture : fixture.substr(0, colon);
  std::string arg = colon == std::string::npos ? std::string() : fixture.substr(colon + 1);

  BodyDocument doc;
  if (kind == "pair") {
    int n = 3;
    if (!arg.empty()) {
      try {
        n = std::stoi(arg);
      } catch (...) {
        fail(Err::UsageError, "bad pair fixture '" + fixture + "'");
      }
    }
    FiniteGroupoid g = pair_groupoid(n);
    doc.body = g.body();
    doc.groupoids.push_back({"pair", std::move(g)});
    doc.omega1.groupoid = "pair";
    doc.omega2.groupoid = "pair";
    doc.ambient = "pair";
    return doc;
  }
  if (kind == "crystalline") {
    if (!arg.empty() && arg != "default") fail(Err::UsageError, "unknown crystalline fixture '" + fixture + "'");
    Composite c = crystalline_composite(crystalline_default());
    doc.body = c.body;
    doc.groupoids.push_back({"omega1", c.g1()});
    doc.groupoids.push_back({"omega2", c.g2()});
    doc.omega1.groupoid = "omega1";
    doc.omega2.groupoid = "omega2";
    return doc;
  }
  if (kind == "triclinic") {
    if (!arg.empty() && arg != "default") fail(Err::UsageError, "unknown triclinic fixture '" + fixture + "'");
    Composite c = triclinic_composite(triclinic_default());
    doc.body = c.body;
    doc.groupoids.push_back({"omega1", c.g1()});
    doc.groupoids.push_back({"omega2", c.g2()});
    doc.omega1.groupoid = "omega1";
    doc.omega2.groupoid = "omega2";
    return doc;
  }
  if (kind == "random") {
    std::uint64_t seed = 0;
    if (!arg.empty()) {
      try {
        seed = std::stoull(arg);
      } catch (...) {
        fail(Err::UsageError, "bad random fixture '" + fixture + "'");
      }
    }
    Composite c = random_composite(seed);
    doc.body = c.body;
    doc.groupoids.push_back({"omega1", c.g1()});
    doc.groupoids.push_back({"omega2", c.g2()});
    doc.omega1.groupoid = "omega1";
    doc.omega2.groupoid = "omega2";
    return doc;
  }
  fail(Err::UsageError, "unknown fixture '" + fixture + "'");
}

namespace {

Json flag_json(const FlagResult& f) {
  Json j;
  j["value"] = f.value;
  j["witness"] = f.witness;
  return j;
}

}  // namespace

Json classify_report_json(const std::string& source, const Composite& c,
                          const UniformityReport& r) {
  Json j;
  j["schema_version"] = "1";
  j["kind"] = "classify";
  j["source"] = source;
  j["body"] = c.body.names;
  Json sizes;
  sizes["omega1_arrows"] = c.g1().size();
  sizes["omega2_arrows"] = c.g2().size();
  sizes["intersection_arrows"] = composite_groupoid(c).size();
  j["sizes"] = std::move(sizes);
  j["standing_hypothesis"] = r.standing_hypothesis;
  Json flags;
  flags["uniform"] = flag_json(r.uniform);
  flags["horizontally_transitive"] = flag_json(r.horizontally_transitive);
  flags["vertically_transitive"] = flag_json(r.vertically_transitive);
  flags["weak_horizontally_transitive"] = flag_json(r.weak_horizontally_transitive);
  flags["weak_vertically_transitive"] = flag_json(r.weak_vertically_transitive);
  flags["strongly_uniform"] = flag_json(r.strongly_uniform);
  flags["weakly_uniform_corners"] = flag_json(r.weakly_uniform_corners);
  flags["weakly_uniform_midpoint"] = flag_json(r.weakly_uniform_midpoint);
  j["flags"] = std::move(flags);
  j["identity_filling"] = r.identity_filling;
  Json incs = Json::array();
  for (const IsotropyInclusion& inc : r.isotropy_inclusions) {
    Json ij;
    ij["point"] = c.body.name(inc.point);
    ij["omega2_in_omega1"] = inc.omega2_in_omega1;
    ij["omega1_in_omega2"] = inc.omega1_in_omega2;
    incs.push_back(std::move(ij));
  }
  j["isotropy_inclusions"] = std::move(incs);
  Json checks = Json::array();
  for (const CrossCheck& cc : r.proposition_crosschecks) {
    Json cj;
    cj["id"] = cc.id;
    cj["lhs"] = cc.lhs;
    cj["rhs"] = cc.rhs;
    cj["hypothesis"] = cc.hypothesis;
    cj["agree"] = cc.agree;
    cj["note"] = cc.note;
    checks.push_back(std::move(cj));
  }
  j["proposition_crosschecks"] = std::move(checks);
  Json meta;
  meta["weak_uniformity_map"] =
      "corner map (alpha(bottom), beta(bottom), beta(right), beta(top)); the displayed four-tuple "
      "map repeats its coordinates on consistent squares";
  j["metadata"] = std::move(meta);
  return j;
}

std::string classify_report_text(const std::string& source, const Composite& c,
                                 const UniformityReport& r) {
  std::ostringstream out;
  auto line = [&](const std::string& name, const FlagResult& f) {
    out << "  " << name << ": " << (f.value ? "yes" : "no") << "\n    " << f.witness << "\n";
  };
  out << "classification of " << source << " (" << c.body.size() << " points, |Omega1| = "
      << c.g1().size() << ", |Omega2| = " << c.g2().size() << ")\n";
  out << "standing hypothesis (both materials transitive): "
      << (r.standing_hypothesis ? "yes" : "no") << "\n";
  out << "flags:\n";
  line("uniform", r.uniform);
  line("horizontally_transitive", r.horizontally_transitive);
  line("vertically_transitive", r.vertically_transitive);
  line("weak_horizontally_transitive", r.weak_horizontally_transitive);
  line("weak_vertically_transitive", r.weak_vertically_transitive);
  line("strongly_uniform", r.strongly_uniform);
  line("weakly_uniform_corners", r.weakly_uniform_corners);
  line("weakly_uniform_midpoint", r.weakly_uniform_midpoint);
  out << "  identity_filling: " << (r.identity_filling ? "yes" : "no") << "\n";
  out << "isotropy inclusions per point (Omega2<=Omega1, Omega1<=Omega2):\n";
  for (const IsotropyInclusion& inc : r.isotropy_inclusions)
    out << "  " << c.body.name(inc.point) << ": " << (inc.omega2_in_omega1 ? "yes" : "no") << ", "
        << (inc.omega1_in_omega2 ? "yes" : "no") << "\n";
  out << "proposition cross-checks:\n";
  for (const CrossCheck& cc : r.proposition_crosschecks)
    out << "  [" << (cc.agree ? "agree" : "DISAGREE") << "] " << cc.id << " (lhs "
        << (cc.lhs ? "true" : "false") << ", rhs " << (cc.rhs ? "true" : "false")
        << (cc.hypothesis ? "" : ", hypothesis not satisfied: vacuous") << ")\n";
  return out.str();
}

Json axiom_report_json(const std::string& source,
                       const std::vector<std::pair<std::string, AxiomReport>>& reports) {
  Json j;
  j["schema_version"] = "1";
  j["kind"] = "axioms";
  j["source"] = source;
  bool all = true;
  Json gs = Json::array();
  for (const auto& [name, rep] : reports) {
    Json gj;
    gj["name"] = name;
    gj["passed"] = rep.passed;
    Json vs = Json::array();
    for (const AxiomViolation& v : rep.violations) {
      Json vj;
      vj["axiom"] = v.axiom;
      vj["offender"] = v.offender;
      vj["explanation"] = v.explanation;
      vs.push_back(std::move(vj));
    }
    gj["violations"] = std::move(vs);
    gs.push_back(std::move(gj));
    all = all && rep.passed;
  }
  j["groupoids"] = std::move(gs);
  j["all_passed"] = all;
  return j;
}

std::string axiom_report_text(const std::string& source,
                              const std::vector<std::pair<std::string, AxiomReport>>& reports) {
  std::ostringstream out;
  out << "axiom check of " << source << "\n";
  bool all = true;
  for (const auto& [name, rep] : reports) {
    out << "  " << name << ": " << (rep.passed ? "passed" : "FAILED") << "\n";
    for (const AxiomViolation& v : rep.violations)
      out << "    [" << v.axiom << "] " << v.offender << ": " << v.explanation << "\n";
    all = all && rep.passed;
  }
  out << (all ? "passed" : "failed") << "\n";
  return out.str();
}

Json triclinic_search_json(const std::vector<TriclinicSearchReport>& reports) {
  Json j;
  j["schema_version"] = "1";
  j["kind"] = "triclinic_search";
  bool any = false;
  Json per = Json::array();
  for (const TriclinicSearchReport& rep : reports) {
    Json rj;
    rj["n_points"] = rep.n_points;
    rj["instances_scanned"] = rep.instances_scanned;
    rj["distinct_condition_holders"] = rep.distinct_condition_holders;
    Json fs = Json::array();
    for (const TriclinicFinding& f : rep.findings) {
      Json fj;
      fj["profile"] = f.profile;
      fj["commuting_distinct"] = f.commuting_distinct;
      fj["commuting_all"] = f.commuting_all;
      fj["uniform"] = f.uniform;
      fj["completely_non_uniform"] = f.completely_non_uniform;
      fj["weak_corners"] = f.weak_corners;
      fj["weak_midpoint"] = f.weak_midpoint;
      fj["realizes_paper_claim"] = f.realizes_paper_claim;
      fs.push_back(std::move(fj));
    }
    rj["findings"] = std::move(fs);
    rj["any_realizes_paper_claim"] = rep.any_realizes_paper_claim;
    any = any || rep.any_realizes_paper_claim;
    per.push_back(std::move(rj));
  }
  j["per_points"] = std::move(per);
  j["any_realizes_paper_claim"] = any;
  j["note"] =
      "profiles list P2 implants as indices into the sorted signed permutations with P1 = I and "
      "P2(first) = I; every signed-permutation implant pair is gauge-equivalent to such a profile";
  return j;
}

std::string triclinic_search_text(const std::vector<TriclinicSearchReport>& reports) {
  std::ostringstream out;
  out << "triclinic implant search (signed permutations, P1 = I, P2(first) = I)\n";
  bool any = false;
  for (const TriclinicSearchReport& rep : reports) {
    out << "  n = " << rep.n_points << ": scanned " << rep.instances_scanned << " profiles, "
        << rep.distinct_condition_holders << " satisfy the pairwise-distinct commuting condition, "
        << rep.findings.size() << " of them nonconstant\n";
    for (const TriclinicFinding& f : rep.findings) {
      out << "    profile [";
      for (std::size_t i = 0; i < f.profile.size(); ++i)
        out << (i ? "," : "") << f.profile[i];
      out << "]: uniform " << (f.uniform ? "yes" : "no") << ", completely_non_uniform "
          << (f.completely_non_uniform ? "yes" : "no") << ", weak_corners "
          << (f.weak_corners ? "yes" : "no") << ", weak_midpoint "
          << (f.weak_midpoint ? "yes" : "no") << ", commuting_all "
          << (f.commuting_all ? "yes" : "no") << "\n";
      any = any || f.realizes_paper_claim;
    }
  }
  out << "any instance completely non uniform yet corners-weak-uniform: " << (any ? "yes" : "no")
      << "\n";
  return out.str();
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

const char* classify_report_schema() {
  return R"({
  "$schema": "http://json-schema.org/draft-07/schema#",
  "title": "classify report",
  "type": "object",
  "required": ["schema_version", "kind", "source", "body", "sizes", "standing_hypothesis",
               "flags", "identity_filling", "isotropy_inclusions",
               "proposition_crosschecks", "metadata"],
  "additionalProperties": false,
  "properties": {
    "schema_version": {"type": "string", "enum": ["1"]},
    "kind": {"type": "string", "enum": ["classify"]},
    "source": {"type": "string"},
    "body": {"type": "array", "items": {"type": "string"}},
    "sizes": {
      "type": "object",
      "required": ["omega1_arrows", "omega2_arrows", "intersection_arrows"],
      "additionalProperties": false,
      "properties": {
        "omega1_arrows": {"type": "integer"},
        "omega2_arrows": {"type": "integer"},
        "intersection_arrows": {"type": "integer"}
      }
    },
    "standing_hypothesis": {"type": "boolean"},
    "flags": {
      "type": "object",
      "required": ["uniform", "horizontally_transitive", "vertically_transitive",
                   "weak_horizontally_transitive", "weak_vertically_transitive",
                   "strongly_uniform", "weakly_uniform_corners", "weakly_uniform_midpoint"],
      "additionalProperties": false,
      "properties": {
        "uniform": {"$ref": "#/definitions/flag"},
        "horizontally_transitive": {"$ref": "#/definitions/flag"},
        "vertically_transitive": {"$ref": "#/definitions/flag"},
        "weak_horizontally_transitive": {"$ref": "#/definitions/flag"},
        "weak_vertically_transitive": {"$ref": "#/definitions/flag"},
        "strongly_uniform": {"$ref": "#/definitions/flag"},
        "weakly_uniform_corners": {"$ref": "#/definitions/flag"},
        "weakly_uniform_midpoint": {"$ref": "#/definitions/flag"}
      }
    },
    "identity_filling": {"type": "boolean"},
    "isotropy_inclusions": {
      "type": "array",
      "items": {
        "type": "object",
        "required": ["point", "omega2_in_omega1", "omega1_in_omega2"],
        "additionalProperties": false,
        "properties": {
          "point": {"type": "string"},
          "omega2_in_omega1": {"type": "boolean"},
          "omega1_in_omega2": {"type": "boolean"}
        }
      }
    },
    "proposition_crosschecks": {
      "type": "array",
      "items": {
        "type": "object",
        "required": ["id", "lhs", "rhs", "hypothesis", "agree", "note"],
        "additionalProperties": false,
        "properties": {
          "id": {"type": "string"},
          "lhs": {"type": "boolean"},
          "rhs": {"type": "boolean"},
          "hypothesis": {"type": "boolean"},
          "agree": {"type": "boolean"},
          "note": {"type": "string"}
        }
      }
    },
    "metadata": {"type": "object"}
  },
  "definitions": {
    "flag": {
      "type": "object",
      "required": ["value", "witness"],
      "additionalProperties": false,
      "properties": {
        "value": {"type": "boolean"},
        "witness": {"type": "string"}
      }
    }
  }
})";
}

namespace {

void validate_node(const Json& root, const Json& schema, const Json& inst, const std::string& path) {
  if (schema.contains("$ref")) {
    std::string ref = schema["$ref"].get<std::string>();
    const std::string prefix = "#/definitions/";
    if (ref.rfind(prefix, 0) != 0) schema_fail(path, "unsupported $ref '" + ref + "'");
    const Json& defs = need(root, "definitions", path);
    std::string name = ref.substr(prefix.size());
    if (!defs.contains(name)) schema_fail(path, "dangling $ref '" + ref + "'");
    validate_node(root, defs[name], inst, path);
    return;
  }
  if (schema.contains("type")) {
    std::string t = schema["type"].get<std::string>();
    bool ok = (t == "object" && inst.is_object()) || (t == "array" && inst.is_array()) ||
              (t == "string" && inst.is_string()) || (t == "boolean" && inst.is_boolean()) ||
              (t == "integer" && inst.is_number_integer()) || (t == "number" && inst.is_number());
    if (!ok) schema_fail(path, "expected type " + t);
  }
  if (schema.contains("enum")) {
    bool ok = false;
    for (const Json& v : schema["enum"])
      if (v == inst) ok = true;
    if (!ok) schema_fail(path, "value not in enum");
  }
  if (inst.is_object()) {
    if (schema.contains("required"))
      for (const Json& req : schema["required"])
        if (!inst.contains(req.get<std::string>()))
          schema_fail(path, "missing required field '" + req.get<std::string>() + "'");
    const Json* props = schema.contains("properties") ? &schema["properties"] : nullptr;
    bool extra_ok = !schema.contains("additionalProperties") ||
                    schema["additionalProperties"].get<bool>();
    for (auto it = inst.begin(); it != inst.end(); ++it) {
      if (props && props->contains(it.key()))
        validate_node(root, (*props)[it.key()], it.value(), path + "." + it.key());
      else if (!extra_ok)
        schema_fail(path, "unexpected field '" + it.key() + "'");
    }
  }
  if (inst.is_array() && schema.contains("items")) {
    std::size_t i = 0;
    for (const Json& el : inst) validate_node(root, schema["items"], el, path + "[" + std::to_string(i++) + "]");
  }
}

}  // namespace

void validate_against_schema(const Json& schema, const Json& instance) {
  validate_node(schema, schema, instance, "$");
}

}  // namespace compomat
