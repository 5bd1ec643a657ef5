// Command-line front end. Talks to the engine exclusively through the C API.

#include "compomat.h"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

struct Cleanup {
  compomat_options* opt = nullptr;
  compomat_doc* doc = nullptr;
  compomat_result* res = nullptr;
  ~Cleanup() {
    if (res) compomat_result_free(res);
    if (doc) compomat_doc_free(doc);
    if (opt) compomat_options_free(opt);
  }
};

bool looks_like_fixture(const std::string& arg) {
  for (const char* prefix : {"pair:", "crystalline:", "triclinic:", "random:"})
    if (arg.rfind(prefix, 0) == 0) return true;
  return arg == "pair" || arg == "crystalline" || arg == "triclinic" || arg == "random";
}

compomat_status load_doc(const std::string& arg, compomat_doc** out, char* err, size_t errlen) {
  if (looks_like_fixture(arg)) return compomat_doc_from_fixture(arg.c_str(), out, err, errlen);
  return compomat_doc_from_file(arg.c_str(), out, err, errlen);
}

int emit(const compomat_result* res, const std::string& format) {
  char err[512] = {0};
  char* text = nullptr;
  compomat_status st = format == "json" ? compomat_result_json(res, &text, err, sizeof err)
                                        : compomat_result_text(res, &text, err, sizeof err);
  if (st != COMPOMAT_OK) {
    std::cerr << "error: " << err << "\n";
    return st;
  }
  std::fputs(text, stdout);
  compomat_string_free(text);
  return COMPOMAT_OK;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite composite-material groupoid engine"};
  app.require_subcommand(0, 1);
  app.fallthrough();  // global flags remain usable after a subcommand

  std::string format = "text";
  int threads = 1;
  unsigned long long cap = 0;
  std::string tol;
  bool emit_schema = false;
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--threads", threads, "worker threads (output is thread-count independent)")
      ->check(CLI::PositiveNumber);
  app.add_option("--cap", cap, "enumeration cap override (also via COMPOMAT_CAP)");
  app.add_option("--tol", tol, "predicate tolerance as p/q (extraction documents only)");
  app.add_flag("--emit-schema", emit_schema, "print the classify report JSON schema and exit");

  std::string input, partial_path, demo_kind;
  unsigned long long seed = 0;
  bool classify_json = false;
  int search_points = 5;

  CLI::App* cmd_axioms = app.add_subcommand("axioms", "check the groupoid axioms");
  cmd_axioms->add_option("input", input, "body file or fixture")->required();
  CLI::App* cmd_classify = app.add_subcommand("classify", "full uniformity classification");
  cmd_classify->add_option("input", input, "body file or fixture")->required();
  cmd_classify->add_flag("--json", classify_json, "shorthand for --format json");
  cmd_classify->add_option("--search-points", search_points,
                           "points covered by classify triclinic:search (3..5)");
  CLI::App* cmd_complete = app.add_subcommand("complete", "complete a partial square");
  cmd_complete->add_option("input", input, "body file or fixture")->required();
  cmd_complete->add_option("--partial", partial_path, "JSON file with the partial square")->required();
  CLI::App* cmd_core = app.add_subcommand("core", "core groupoid of the composite");
  cmd_core->add_option("input", input, "body file or fixture")->required();
  CLI::App* cmd_intersect = app.add_subcommand("intersect", "intersection of the two materials");
  cmd_intersect->add_option("input", input, "body file or fixture")->required();
  CLI::App* cmd_demo = app.add_subcommand("demo", "canned demonstrations");
  cmd_demo->add_option("what", demo_kind, "pair | crystalline | triclinic | random")->required();
  cmd_demo->add_option("--seed", seed, "seed for the random demo");
  cmd_demo->add_option("--search-points", search_points, "triclinic search size (3..5)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : COMPOMAT_E_INPUT;
  }

  if (emit_schema) {
    std::fputs(compomat_classify_schema(), stdout);
    std::fputs("\n", stdout);
    return 0;
  }
  if (app.get_subcommands().empty()) {
    std::cerr << app.help();
    return COMPOMAT_E_INPUT;
  }

  char err[512] = {0};
  Cleanup guard;
  guard.opt = compomat_options_new();
  compomat_options_set_threads(guard.opt, threads);
  if (const char* env_cap = std::getenv("COMPOMAT_CAP"))
    compomat_options_set_cap(guard.opt, std::strtoull(env_cap, nullptr, 10));
  if (cap > 0) compomat_options_set_cap(guard.opt, cap);
  if (!tol.empty()) {
    if (compomat_options_set_tol(guard.opt, tol.c_str(), err, sizeof err) != COMPOMAT_OK) {
      std::cerr << "error: " << err << "\n";
      return COMPOMAT_E_INPUT;
    }
  }

  auto run_and_emit = [&](compomat_status st, const std::string& fmt) -> int {
    if (st != COMPOMAT_OK) {
      std::cerr << "error: " << err << "\n";
      return st;
    }
    return emit(guard.res, fmt);
  };

  if (cmd_demo->parsed()) {
    std::string fixture;
    if (demo_kind == "pair") fixture = "pair:3";
    else if (demo_kind == "crystalline") fixture = "crystalline:default";
    else if (demo_kind == "triclinic") fixture = "triclinic:default";
    else if (demo_kind == "random") fixture = "random:" + std::to_string(seed);
    else {
      std::cerr << "error: unknown demo '" << demo_kind << "'\n";
      return COMPOMAT_E_INPUT;
    }
    compomat_status st = compomat_doc_from_fixture(fixture.c_str(), &guard.doc, err, sizeof err);
    if (st != COMPOMAT_OK) {
      std::cerr << "error: " << err << "\n";
      return st;
    }
    st = compomat_run_classify(guard.doc, guard.opt, &guard.res, err, sizeof err);
    int rc = run_and_emit(st, format);
    if (rc != 0 || demo_kind != "triclinic") return rc;
    // the triclinic demo additionally reports the exhaustive implant search
    compomat_result_free(guard.res);
    guard.res = nullptr;
    st = compomat_run_triclinic_search(search_points, guard.opt, &guard.res, err, sizeof err);
    return run_and_emit(st, format);
  }

  // the search fixture is a report of its own, not a composite
  if (input == "triclinic:search") {
    if (!cmd_classify->parsed()) {
      std::cerr << "error: triclinic:search is only meaningful for classify "
                   "(use triclinic:default for a single instance)\n";
      return COMPOMAT_E_INPUT;
    }
    compomat_status st =
        compomat_run_triclinic_search(search_points, guard.opt, &guard.res, err, sizeof err);
    return run_and_emit(st, classify_json ? "json" : format);
  }

  compomat_status st = load_doc(input, &guard.doc, err, sizeof err);
  if (st != COMPOMAT_OK) {
    std::cerr << "error: " << err << "\n";
    return st;
  }

  if (cmd_axioms->parsed())
    return run_and_emit(compomat_run_axioms(guard.doc, guard.opt, &guard.res, err, sizeof err), format);
  if (cmd_classify->parsed())
    return run_and_emit(compomat_run_classify(guard.doc, guard.opt, &guard.res, err, sizeof err),
                        classify_json ? "json" : format);
  if (cmd_core->parsed())
    return run_and_emit(compomat_run_core(guard.doc, guard.opt, &guard.res, err, sizeof err), format);
  if (cmd_intersect->parsed())
    return run_and_emit(compomat_run_intersect(guard.doc, guard.opt, &guard.res, err, sizeof err), format);
  if (cmd_complete->parsed()) {
    std::ifstream in(partial_path);
    if (!in) {
      std::cerr << "error: cannot open '" << partial_path << "'\n";
      return COMPOMAT_E_INPUT;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    std::string partial = buf.str();
    return run_and_emit(
        compomat_run_complete(guard.doc, partial.c_str(), guard.opt, &guard.res, err, sizeof err),
        format);
  }
  std::cerr << app.help();
  return COMPOMAT_E_INPUT;
}
