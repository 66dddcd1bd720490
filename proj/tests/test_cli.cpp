#define DOCTEST_CONFIG_IMPLEMENT
#include "doctest.h"

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

std::string g_cli;  // path to the command-line binary, from argv

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

int run_cli(const std::string& args) {
  std::string cmd = g_cli + " " + args + " >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

const char* kQ1 =
    R"({"entries": [[[0,1],[-1,2]], [[1,2],[0,1]]]})";

std::string verify_config(const std::string& suites, int fault) {
  std::ostringstream os;
  os << R"({"schema": 1, "q": )" << kQ1
     << R"(, "module": {"V": {"lambda": [1], "b": 1}, "W": "left-regular",)"
     << R"( "alpha": ["1/2", "1/3"]}, "suites": [)" << suites
     << R"(], "window": 2, "seed": 7, "fault": )" << fault << "}";
  return os.str();
}

}  // namespace

TEST_CASE("analyze reports the structural invariants") {
  write_file("cli_q.json", kQ1);
  CHECK(run_cli("analyze --input cli_q.json --output cli_analyze.json") == 0);
  std::string report = read_file("cli_analyze.json");
  CHECK(report.find("\"N\": 2") != std::string::npos);
  CHECK(report.find("\"gamma_order\": 4") != std::string::npos);
  CHECK(report.find("\"z\": 1") != std::string::npos);
}

TEST_CASE("analyze rejects an invalid q-matrix") {
  // q_12 must be the inverse of q_21.
  write_file("cli_bad_q.json", R"({"entries": [[[0,1],[1,4]], [[1,4],[0,1]]]})");
  CHECK(run_cli("analyze --input cli_bad_q.json") == 2);
  CHECK(run_cli("analyze --input cli_missing.json") == 2);
}

TEST_CASE("verify is deterministic byte for byte") {
  write_file("cli_verify.json", verify_config(R"("jacobi", "loop-hom", "rep", "cover")", 0));
  CHECK(run_cli("verify --input cli_verify.json --output cli_out1.json") == 0);
  CHECK(run_cli("verify --input cli_verify.json --output cli_out2.json") == 0);
  std::string a = read_file("cli_out1.json");
  CHECK(!a.empty());
  CHECK(a == read_file("cli_out2.json"));
  CHECK(a.find("\"pass\": true") != std::string::npos);
}

TEST_CASE("verify exit codes follow the contract") {
  // Corrupted structure constants: suites fail, exit 1.
  write_file("cli_fault.json", verify_config(R"("jacobi")", 1));
  CHECK(run_cli("verify --input cli_fault.json --output cli_fault_out.json") == 1);
  CHECK(read_file("cli_fault_out.json").find("\"pass\": false") != std::string::npos);
  // Unknown suite name: config error, exit 2.
  write_file("cli_badsuite.json", verify_config(R"("frobnicate")", 0));
  CHECK(run_cli("verify --input cli_badsuite.json") == 2);
  // Suite flag overrides the config list.
  CHECK(run_cli("verify --input cli_fault.json --suite loop-hom") == 0);
}

TEST_CASE("module reports and validates the descriptor") {
  write_file("cli_module.json", verify_config(R"("rep")", 0));
  CHECK(run_cli("module --input cli_module.json --output cli_module_out.json") == 0);
  std::string report = read_file("cli_module_out.json");
  CHECK(report.find("\"minimal_l\": 2") != std::string::npos);
  CHECK(report.find("\"weight_dims\"") != std::string::npos);
  // A user-supplied W whose identity acts as zero is rejected.
  std::ostringstream os;
  os << R"({"schema": 1, "q": )" << kQ1
     << R"(, "module": {"V": {"lambda": [], "b": 0},)"
     << R"( "W": {"N": 1, "dim": 1, "grading": [0],)"
     << R"( "action": [{"degree": [0, 0], "matrix": [[0]]}]},)"
     << R"( "alpha": ["0", "0"]}, "window": 2, "seed": 1})";
  write_file("cli_bad_w.json", os.str());
  CHECK(run_cli("module --input cli_bad_w.json") == 2);
}

int main(int argc, char** argv) {
  doctest::Context ctx(argc, argv);
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (!a.empty() && a[0] != '-') g_cli = a;
  }
  if (g_cli.empty()) {
    std::fprintf(stderr, "usage: test_cli <path-to-cli-binary>\n");
    return 2;
  }
  return ctx.run();
}
