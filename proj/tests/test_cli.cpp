#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "rabiparity/cli.hpp"
#include "rabiparity/linalg.hpp"
#include "rabiparity/model.hpp"

using rabiparity::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> result;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) result.push_back(line);
  return result;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("rabiparity_test_" + name);
}

}  // namespace

TEST_CASE("verify: generalized parity passes") {
  const Result r = invoke({"verify", "--k", "3", "--dim", "24", "--alpha", "1", "--omega", "1", "--g", "0.2"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["relative_residual"].get<double>() < 1e-12);
  CHECK(j["is_involution"].get<bool>());
  CHECK(j["intertwines"].get<bool>());
  CHECK(j["spectra_match"].get<double>() < 1e-9);
  CHECK(j["params"]["k"].get<int>() == 3);
  CHECK(j["tolerance"].get<double>() == 1e-10);
}

TEST_CASE("verify: bosonic parity fails for even k") {
  const Result r = invoke({"verify", "--k", "2", "--dim", "16", "--alpha", "1", "--omega", "1", "--g", "0.5",
                           "--candidate", "p"});
  CHECK(r.code == 1);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["relative_residual"].get<double>() > 1e-3);
  CHECK_FALSE(j["intertwines"].get<bool>());
}

TEST_CASE("verify: csv format, tolerance override and dump") {
  const auto dump = temp_file("dump.txt");
  const Result r = invoke({"verify", "--k", "1", "--dim", "2", "--alpha", "0.5", "--g", "1", "--format", "csv",
                           "--tol", "1e-8", "--dump", dump.string()});
  CHECK(r.code == 0);
  const auto rows = lines(r.out);
  CHECK(rows.front() == "key,value");
  CHECK(std::find(rows.begin(), rows.end(), "passed,true") != rows.end());
  CHECK(std::find(rows.begin(), rows.end(), "tolerance,1.0000000000000000e-08") != rows.end());

  std::ifstream in(dump);
  const rabiparity::ComplexMatrix m = rabiparity::read_matrix(in);
  rabiparity::ModelParams p;
  p.k = 1;
  p.dim = 2;
  p.alpha = 0.5;
  p.g = 1.0;
  CHECK(m == rabiparity::build_full(p));
  std::filesystem::remove(dump);
}

TEST_CASE("parity-table") {
  const Result r = invoke({"parity-table", "--k", "1", "--dim", "4"});
  CHECK(r.code == 0);
  CHECK(lines(r.out) == std::vector<std::string>{"p,n,l,sign", "0,0,1,1", "1,1,1,-1", "2,2,1,1", "3,3,1,-1"});

  const Result three = invoke({"parity-table", "--k", "3", "--dim", "9"});
  const auto rows = lines(three.out);
  REQUIRE(rows.size() == 10);
  CHECK(rows[4] == "3,1,1,-1");
  CHECK(rows[8] == "7,2,2,1");
  CHECK(three.err.empty());

  const Result uneven = invoke({"parity-table", "--k", "3", "--dim", "10"});
  CHECK(uneven.code == 0);
  CHECK(uneven.err.rfind("warning:", 0) == 0);
}

TEST_CASE("spectrum reports block levels and the full-spectrum deviation") {
  const Result r = invoke({"spectrum", "--k", "1", "--dim", "2", "--alpha", "0.5", "--omega", "1", "--g", "1",
                           "--levels", "2"});
  CHECK(r.code == 0);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 8);
  CHECK(rows[0] == "block,level,eigenvalue");
  CHECK(rows[1].rfind("+,0,", 0) == 0);
  CHECK(std::abs(std::stod(rows[1].substr(4)) + 0.5) <= 1e-12);
  CHECK(rows[7].rfind("deviation,0,", 0) == 0);
  CHECK(std::stod(rows[7].substr(12)) <= 1e-12);
}

TEST_CASE("sweep output is byte-identical across runs") {
  const std::vector<std::string> args{"sweep", "--k", "2", "--dim", "12", "--param", "g", "--lo", "0", "--hi", "0.4",
                                      "--steps", "3", "--levels", "2"};
  const Result a = invoke(args);
  const Result b = invoke(args);
  std::vector<std::string> parallel = args;
  parallel.insert(parallel.end(), {"--jobs", "2"});
  const Result c = invoke(parallel);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);
  CHECK(lines(a.out).size() == 1 + 3 * 4);
}

TEST_CASE("evolve summary, trajectory and state file") {
  const Result summary = invoke({"evolve", "--k", "1", "--dim", "8", "--t-max", "1", "--steps", "4"});
  CHECK(summary.code == 0);
  const auto rows = lines(summary.out);
  REQUIRE(rows.size() == 6);
  CHECK(rows[0] == "t,norm,plus_weight,minus_weight");
  CHECK(rows[1] == "0.0000000000000000e+00,1.0000000000000000e+00,1.0000000000000000e+00,0.0000000000000000e+00");

  const Result traj = invoke({"evolve", "--k", "1", "--dim", "4", "--t-max", "1", "--steps", "2", "--trajectory"});
  CHECK(traj.code == 0);
  CHECK(lines(traj.out).size() == 1 + 3 * 8);
  CHECK(lines(traj.out)[0] == "t,component_index,re,im");

  const auto state = temp_file("state.txt");
  {
    std::ofstream f(state);
    f << "8\n0 0\n0.6 0\n0 0\n0 0\n0 0\n0 0.8\n0 0\n0 0\n";
  }
  const Result from_file = invoke({"evolve", "--k", "2", "--dim", "4", "--t-max", "0.5", "--steps", "2", "--state",
                                   state.string()});
  CHECK(from_file.code == 0);
  std::filesystem::remove(state);
}

TEST_CASE("--out writes to a file") {
  const auto path = temp_file("out.csv");
  const Result r = invoke({"parity-table", "--k", "2", "--dim", "4", "--out", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream content;
  content << in.rdbuf();
  CHECK(lines(content.str()).size() == 5);
  std::filesystem::remove(path);
}

TEST_CASE("usage errors exit 2 with a single error line") {
  const std::vector<std::vector<std::string>> cases{
      {"parity-table", "--k", "0", "--dim", "4"},
      {"verify", "--k", "-1", "--dim", "4"},
      {"verify", "--k", "3", "--dim", "5"},
      {"verify", "--k", "1", "--dim", "4", "--g", "1+2j"},
      {"verify", "--k", "1", "--dim", "4", "--bogus"},
      {"verify", "--k", "1", "--dim", "4", "--candidate", "q"},
      {"verify", "--k", "1", "--dim", "4", "--tol", "0"},
      {"verify", "--dim", "4"},
      {"sweep", "--k", "1", "--dim", "4", "--lo", "1", "--hi", "0"},
      {"evolve", "--k", "1", "--dim", "4", "--state", "/nonexistent/state"},
      {"spectrum", "--k", "1", "--dim", "4", "--levels", "9"},
      {},
      {"frobnicate"},
  };
  for (const auto& args : cases) {
    const Result r = invoke(args);
    std::string joined;
    for (const auto& a : args) joined += a + " ";
    CAPTURE(joined);
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    const auto err_lines = lines(r.err);
    REQUIRE(err_lines.size() == 1);
    CHECK(err_lines[0].rfind("error: ", 0) == 0);
  }

  const Result k0 = invoke({"parity-table", "--k", "0", "--dim", "4"});
  CHECK(k0.err.find("k must be >= 1") != std::string::npos);
}

TEST_CASE("help exits 0") {
  const Result r = invoke({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("parity-table") != std::string::npos);
}
