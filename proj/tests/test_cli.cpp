#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "../tools/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

CliResult run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cstarineq::cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_file(const std::string& name, const std::string& body) {
  const fs::path dir = fs::temp_directory_path() / "cstarineq_cli_tests";
  fs::create_directories(dir);
  const fs::path path = dir / name;
  std::ofstream(path) << body;
  return path.string();
}

const std::string kT = write_file(
    "t.json", R"({"rows": 2, "cols": 2, "entries": [[2, 1], [1, 2]]})");
const std::string kX = write_file(
    "x.json", R"({"rows": 2, "cols": 2, "entries": [[1, 1], [0, 1]]})");
const std::string kColumn = write_file(
    "col.json", R"({"rows": 2, "cols": 1, "entries": [[1], [0]]})");
const std::string kRho = write_file(
    "rho.json", R"({"rows": 2, "cols": 2, "entries": [[0.5, 0], [0, 0.5]]})");
const std::string kDiagT = write_file(
    "diag_t.json", R"({"rows": 2, "cols": 2, "entries": [[2, 0], [0, 3]]})");
const std::string kDiagX = write_file(
    "diag_x.json", R"({"rows": 2, "cols": 2, "entries": [[1, 0], [0, 2]]})");
const std::string kEye = write_file(
    "eye.json", R"({"rows": 2, "cols": 2, "entries": [[1, 0], [0, 1]]})");
const std::string kComplexT = write_file(
    "tc.json", R"({"rows": 2, "cols": 2, "entries": [[2, [0, -1]], [[0, 1], 2]]})");
const std::string kRagged = write_file(
    "ragged.json", R"({"rows": 2, "cols": 2, "entries": [[1, 2], [3]]})");

}  // namespace

TEST_CASE("verify-paper passes, prints the recorded entries, and is byte stable") {
  CliResult first = run({"verify-paper"});
  CHECK(first.code == 0);
  CHECK(first.out.find("98.0000") != std::string::npos);
  CHECK(first.out.find("-2.0426") != std::string::npos);
  CHECK(first.out.find("C = B - A") != std::string::npos);
  CHECK(first.out.find("C = A - B") != std::string::npos);

  CliResult second = run({"verify-paper"});
  CHECK(first.out == second.out);
}

TEST_CASE("verify-paper json carries both failing instances") {
  CliResult result = run({"verify-paper", "--out", "json"});
  REQUIRE(result.code == 0);
  nlohmann::json doc = nlohmann::json::parse(result.out);
  CHECK(doc["exit_code"] == 0);
  REQUIRE(doc["reports"].size() == 2);
  CHECK(doc["reports"][0]["report"]["holds"] == false);
  CHECK(doc["reports"][1]["report"]["holds"] == false);
  const double det = doc["reports"][1]["report"]["difference_det"].get<double>();
  CHECK(det == doctest::Approx(-0.0108).epsilon(0.2));
}

TEST_CASE("text and json emissions agree numerically") {
  CliResult as_json = run({"verify-paper", "--out", "json"});
  CliResult as_text = run({"verify-paper", "--out", "text"});
  nlohmann::json doc = nlohmann::json::parse(as_json.out);
  const std::string row =
      doc["reports"][0]["report"]["difference"]["entries"][0].dump();
  CHECK(as_text.out.find(row) != std::string::npos);
}

TEST_CASE("check reports the violation through exit code 1") {
  CliResult result = run({"check", "--family", "loewner", "--t", kT, "--x", kX, "--r", "3",
                          "--out", "json"});
  CHECK(result.code == 1);
  nlohmann::json doc = nlohmann::json::parse(result.out);
  CHECK(doc["reports"][0]["holds"] == false);
  CHECK(doc["exit_code"] == 1);
}

TEST_CASE("check passes at exponent one") {
  CliResult result = run({"check", "--family", "loewner", "--t", kT, "--x", kX, "--r", "1"});
  CHECK(result.code == 0);
}

TEST_CASE("check handles every family spelling") {
  CHECK(run({"check", "--family", "hilbert", "--t", kT, "--x", kColumn, "--r", "2"}).code == 0);
  CHECK(run({"check", "--family", "norm", "--t", kT, "--x", kX, "--r", "3"}).code == 0);
  CHECK(run({"check", "--family", "state", "--t", kT, "--x", kX, "--r", "2", "--rho", kRho})
            .code == 0);
  CHECK(run({"check", "--family", "commutative", "--t", kDiagT, "--x", kDiagX, "--r", "3"})
            .code == 0);
  CHECK(run({"check", "--family", "mond-pecaric", "--t", kT, "--x", kEye, "--r", "2", "--rho",
             kRho, "--f", "pow:2"})
            .code == 0);
}

TEST_CASE("complex entries parse from [re, im] pairs") {
  CliResult result =
      run({"check", "--family", "loewner", "--t", kComplexT, "--x", kEye, "--r", "1"});
  CHECK(result.code == 0);
}

TEST_CASE("usage problems exit with code 2") {
  CliResult unknown = run({"check", "--family", "mystery", "--t", kT, "--x", kX, "--r", "2"});
  CHECK(unknown.code == 2);
  CHECK(unknown.err.find("unknown family") != std::string::npos);

  CHECK(run({"check", "--family", "loewner", "--t", kRagged, "--x", kX, "--r", "2"}).code == 2);
  CHECK(run({"check", "--family", "loewner", "--t", "/nonexistent.json", "--x", kX, "--r", "2"})
            .code == 2);
  CHECK(run({"check", "--family", "mond-pecaric", "--t", kT, "--x", kX, "--r", "2"}).code == 2);
  CHECK(run({}).code == 2);
}

TEST_CASE("tolerance falls back to the environment and the flag wins") {
  setenv("CSTAR_INEQ_TOL", "10", 1);
  CHECK(run({"check", "--family", "loewner", "--t", kT, "--x", kX, "--r", "3"}).code == 0);
  CHECK(run({"check", "--family", "loewner", "--t", kT, "--x", kX, "--r", "3", "--tol", "1e-9"})
            .code == 1);
  setenv("CSTAR_INEQ_TOL", "not-a-number", 1);
  CHECK(run({"check", "--family", "loewner", "--t", kT, "--x", kX, "--r", "3"}).code == 2);
  unsetenv("CSTAR_INEQ_TOL");
}

TEST_CASE("search with zero trials is an empty pass") {
  CliResult result = run({"search", "--family", "loewner-r>1", "--trials", "0", "--out", "json"});
  CHECK(result.code == 0);
  nlohmann::json doc = nlohmann::json::parse(result.out);
  CHECK(doc["finding_count"] == 0);
}

TEST_CASE("search rejects theorem families") {
  CliResult result = run({"search", "--family", "hilbert-mccarty", "--trials", "10"});
  CHECK(result.code == 2);
}

TEST_CASE("search emissions are deterministic") {
  const std::vector<std::string> args = {"search",  "--family", "loewner-r>1", "--trials",
                                         "500",     "--r-min",  "2.5",         "--r-max",
                                         "3.5",     "--seed",   "7",           "--out",
                                         "json"};
  CliResult first = run(args);
  CliResult second = run(args);
  CHECK(first.code != 2);
  CHECK(first.out == second.out);
}

TEST_CASE("gns reports the quotient dimension") {
  CliResult result = run({"gns", "--m", "2", "--n", "2", "--rho", kRho, "--t", kT, "--f",
                          "pow:3", "--samples", "2", "--seed", "3", "--out", "json"});
  REQUIRE(result.code == 0);
  nlohmann::json doc = nlohmann::json::parse(result.out);
  CHECK(doc["reports"][0]["dim_quotient"] == 4);
  CHECK(doc["reports"][0]["pass"] == true);
}

TEST_CASE("supporting-line emits the line data") {
  CliResult result = run({"supporting-line", "--f", "pow:2", "--a", "0", "--b", "2", "--x0",
                          "1", "--eps", "1e-4", "--out", "json"});
  REQUIRE(result.code == 0);
  nlohmann::json doc = nlohmann::json::parse(result.out);
  CHECK(doc["reports"][0]["slope"].get<double>() == doctest::Approx(2.0).epsilon(1e-2));
  CHECK(doc["reports"][0]["min_margin"].get<double>() >= 0.0);
}

TEST_CASE("help is reachable") {
  CliResult result = run({"--help"});
  CHECK(result.code == 0);
  CHECK(result.out.find("verify-paper") != std::string::npos);
}
