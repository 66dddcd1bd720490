// Batch front end: analyze a q-matrix, run verification suites, or emit a
// module/cover report, all as deterministic JSON (sorted keys, fixed indent).
// Exit codes: 0 success, 1 suite failure, 2 invalid input.

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "qtorus/json_io.hpp"
#include "qtorus/suites.hpp"

namespace {

using qtorus::json;

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  json j;
  in >> j;
  return j;
}

void emit(const json& report, const std::string& output) {
  std::string text = qtorus::dump_report(report);
  if (!output.empty()) {
    std::ofstream out(output, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file: " + output);
    out << text;
  }
  std::cout << text;
}

json suite_json(const qtorus::SuiteResult& r) {
  return json{{"pass", r.pass}, {"checks", r.checks}, {"counterexample", r.counterexample}};
}

int cmd_analyze(const std::string& input, const std::string& output) {
  json j = read_json_file(input);
  qtorus::QMatrix q = qtorus::q_from_json(j.contains("q") ? j.at("q") : j);
  emit(qtorus::analyze_report(q), output);
  return 0;
}

int cmd_verify(const std::string& input, const std::string& output,
               const std::vector<std::string>& suite_flags, long long window_flag,
               long long seed_flag) {
  json j = read_json_file(input);
  qtorus::CliConfig cfg = qtorus::config_from_json(j);
  if (!suite_flags.empty()) cfg.suites = suite_flags;
  if (window_flag >= 0) cfg.window = window_flag;
  if (seed_flag >= 0) cfg.seed = static_cast<unsigned long long>(seed_flag);
  if (cfg.suites.empty()) throw std::invalid_argument("verify: no suites requested");
  if (cfg.window < 1) throw std::invalid_argument("verify: window must be >= 1");

  qtorus::QMatrix q = qtorus::q_from_json(cfg.q);
  json suites = json::object();
  bool all_pass = true;
  for (const std::string& name : cfg.suites) {
    qtorus::SuiteResult r;
    if (name == "jacobi") {
      r = qtorus::suite_jacobi(q, cfg.window, cfg.fault);
    } else if (name == "loop-hom") {
      r = qtorus::suite_loop_hom(q, cfg.window);
    } else if (name == "rep" || name == "cover") {
      if (cfg.module.is_null())
        throw std::invalid_argument("suite '" + name + "' needs a module config");
      qtorus::ModuleDescriptor desc = qtorus::descriptor_from_json(q, cfg.module);
      if (cfg.fault) desc.fault = cfg.fault;
      if (name == "rep") {
        r = qtorus::suite_rep(desc, cfg.window);
      } else {
        qtorus::CoverSuiteParams params;
        params.identity_radius = cfg.window;
        r = qtorus::suite_cover(desc, params, cfg.seed);
      }
    } else {
      throw std::invalid_argument("unknown suite: " + name);
    }
    suites[r.name] = suite_json(r);
    all_pass = all_pass && r.pass;
  }
  json report{{"schema", 1},      {"command", "verify"}, {"window", cfg.window},
              {"seed", cfg.seed}, {"suites", suites},    {"pass", all_pass}};
  emit(report, output);
  return all_pass ? 0 : 1;
}

int cmd_module(const std::string& input, const std::string& output, long long window_flag) {
  json j = read_json_file(input);
  qtorus::CliConfig cfg = qtorus::config_from_json(j);
  if (window_flag >= 0) cfg.window = window_flag;
  if (cfg.module.is_null()) throw std::invalid_argument("module: missing module config");
  qtorus::QMatrix q = qtorus::q_from_json(cfg.q);
  qtorus::ModuleDescriptor desc = qtorus::descriptor_from_json(q, cfg.module);

  json weight_dims = json::array();
  for (const qtorus::IntVec& n : qtorus::box_points(q.dim(), cfg.window)) {
    json deg = json::array();
    for (long long i = 0; i < n.size(); ++i) deg.push_back(n[i]);
    weight_dims.push_back(json{{"degree", deg}, {"dim", desc.weight_dim(n)}});
  }

  std::mt19937_64 rng(cfg.seed);
  json probes = json::array();
  for (const qtorus::GradedVector& seed : qtorus::probe_seeds(desc, 3, rng)) {
    qtorus::ProbeReport rep = qtorus::submodule_probe(desc, seed, cfg.window + 2);
    probes.push_back(json{{"window_reducible", rep.window_reducible},
                          {"radius", rep.radius},
                          {"margin", rep.margin}});
  }

  qtorus::RatVec u = qtorus::window_generic_u(q.dim(), 2 * cfg.window + 2);
  auto l_min = qtorus::minimal_annihilating_l(desc, 2, 4, u);

  json cover = json::array();
  std::vector<qtorus::IntVec> lambdas;
  lambdas.push_back(qtorus::IntVec::Zero(q.dim()));
  qtorus::IntVec l1 = qtorus::IntVec::Zero(q.dim());
  l1[0] = 1;
  lambdas.push_back(l1);
  for (const qtorus::IntVec& lambda : lambdas) {
    qtorus::CoverDim cd =
        qtorus::cover_weight_space(desc, lambda, 3, 2, l_min ? *l_min : 3);
    json deg = json::array();
    for (long long i = 0; i < lambda.size(); ++i) deg.push_back(lambda[i]);
    cover.push_back(json{{"lambda", deg},
                         {"dim", cd.dim},
                         {"dim_prev", cd.dim_prev},
                         {"stabilized", cd.stabilized},
                         {"bound", cd.bound},
                         {"bound_ok", cd.bound_ok},
                         {"boundary_term", cd.boundary_term}});
  }

  json report{{"schema", 1},
              {"command", "module"},
              {"window", cfg.window},
              {"seed", cfg.seed},
              {"weight_dims", weight_dims},
              {"probes", probes},
              {"minimal_l", l_min ? json(*l_min) : json(nullptr)},
              {"cover", cover}};
  emit(report, output);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rational quantum torus toolkit"};
  app.require_subcommand(1);

  std::string input, output;
  std::vector<std::string> suites;
  long long window = -1, seed = -1;

  CLI::App* analyze = app.add_subcommand("analyze", "structural report for a q-matrix");
  analyze->add_option("--input", input)->required();
  analyze->add_option("--output", output);

  CLI::App* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--input", input)->required();
  verify->add_option("--output", output);
  verify->add_option("--suite", suites)->delimiter(',');
  verify->add_option("--window", window);
  verify->add_option("--seed", seed);

  CLI::App* module = app.add_subcommand("module", "weight-module and cover report");
  module->add_option("--input", input)->required();
  module->add_option("--output", output);
  module->add_option("--window", window);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(analyze)) return cmd_analyze(input, output);
    if (app.got_subcommand(verify)) return cmd_verify(input, output, suites, window, seed);
    return cmd_module(input, output, window);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
