// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "connlap/generators.hpp"
#include "connlap/graph_io.hpp"
#include "reference_tables.hpp"

using namespace connlap;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<nlohmann::ordered_json> json_lines(const std::string& s) {
  std::vector<nlohmann::ordered_json> v;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) v.push_back(nlohmann::ordered_json::parse(line));
  return v;
}

}  // namespace

TEST_CASE("verify passes seven checks on a cycle") {
  const Result r = run({"verify", "cycle:4", "--format", "json"});
  CHECK(r.code == cli::kExitOk);
  const auto rows = json_lines(r.out);
  CHECK(rows.size() == 7);
  for (const auto& row : rows) CHECK(row["status"] == "pass");
}

TEST_CASE("verify on the figure eight and over a field") {
  CHECK(run({"verify", "figure8"}).code == cli::kExitOk);
  const Result r = run({"verify", "--field", "2", "star:4", "--format", "json"});
  CHECK(r.code == cli::kExitOk);
  CHECK(json_lines(r.out).back()["check"] == "field_2");
  CHECK(run({"verify", "--field", "4", "star:4"}).code == cli::kExitUsage);
}

TEST_CASE("verify over ranges and files") {
  CHECK(run({"verify", "cycle:3..6", "wheel:3..5"}).code == cli::kExitOk);
  const auto path = std::filesystem::temp_directory_path() / "connlap_cli_test.edges";
  {
    std::ofstream f(path);
    write_graph(f, gen::figure_eight());
  }
  const Result r = run({"verify", path.string(), "--format", "csv"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.rfind("graph,check,status,detail\n", 0) == 0);
  std::filesystem::remove(path);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"frobnicate"}).code == cli::kExitUsage);
  CHECK(run({"verify"}).code == cli::kExitUsage);
  CHECK(run({"verify", "nosuch:3"}).code == cli::kExitUsage);
  CHECK(run({"verify", "--format", "xml", "cycle:4"}).code == cli::kExitUsage);
  CHECK(run({"spectrum", "--operator", "Q", "cycle:4"}).code == cli::kExitUsage);
  CHECK(run({"walk", "cycle:4", "cycle:5"}).code == cli::kExitUsage);
  CHECK(run({"walk", "--start", "99", "cycle:4"}).code == cli::kExitUsage);
  CHECK(run({"product", "cycle:4"}).code == cli::kExitUsage);
  CHECK(run({"--help"}).code == cli::kExitOk);
}

TEST_CASE("bounds rows in the published column order") {
  const Result r = run({"bounds", "complete_bipartite:3,3..9", "--format", "json"});
  CHECK(r.code == cli::kExitOk);
  const auto rows = json_lines(r.out);
  const auto& table = cli::reference_table("complete_bipartite");
  REQUIRE(rows.size() == table.rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::vector<std::string> keys;
    for (auto it = rows[i].begin(); it != rows[i].end(); ++it) keys.push_back(it.key());
    CHECK(keys[1] == "rho");
    CHECK(keys[6] == "lsc");
    for (std::size_t c = 0; c < 6; ++c)
      CHECK(std::abs(rows[i][cli::kReferenceColumns[c]].get<double>() - table.rows[i].published[c]) <=
            cli::kReferenceTolerance);
  }
}

TEST_CASE("bounds reports bad rows inline") {
  const Result r = run({"bounds", "cycle:4", "nosuch:1", "star:3", "--format", "json"});
  CHECK(r.code == cli::kExitCheckFailed);
  const auto rows = json_lines(r.out);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0]["rho"].get<double>() == doctest::Approx(4.0));
  CHECK(rows[1]["rho"].is_null());
  CHECK(rows[1]["note"].get<std::string>().rfind("error:", 0) == 0);
  CHECK(rows[2]["rho"].get<double>() == doctest::Approx(4.0));
}

TEST_CASE("bounds with more walk lengths") {
  const auto rows = json_lines(run({"bounds", "figure8", "--k", "1,3,12", "--format", "json"}).out);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].contains("walk1"));
  CHECK(rows[0].contains("walk12"));
}

TEST_CASE("spectrum of L pairs lambda^2 with its reciprocal") {
  const Result r = run({"spectrum", "--operator", "L", "cycle:4", "--format", "json"});
  CHECK(r.code == cli::kExitOk);
  const auto row = json_lines(r.out).at(0);
  CHECK(row["eigenvalues"].size() == 8);
  CHECK(row["reciprocal_pairing_error"].get<double>() < 1e-8);
  CHECK(run({"spectrum", "--operator", "H0", "cycle:4", "--format", "json"}).code == cli::kExitOk);
}

TEST_CASE("walk round trip") {
  const Result r = run({"walk", "--steps", "6", "--reverse", "cycle:4"});
  CHECK(r.code == cli::kExitOk);
  const auto lines = json_lines(r.out);
  REQUIRE(lines.size() == 13);
  CHECK(lines.front()["n"] == 0);
  CHECK(lines[6]["n"] == 6);
  CHECK(lines.back()["n"] == 0);
  CHECK(lines.back()["state"] == lines.front()["state"]);
}

TEST_CASE("walk states too large for 64 bits are strings") {
  const auto lines = json_lines(run({"walk", "--steps", "40", "complete:6"}).out);
  CHECK(lines.back()["state"][0].is_string());
  CHECK(lines.front()["state"][0].is_number());
}

TEST_CASE("automaton round trip") {
  const Result r = run({"automaton", "--prime", "5", "--steps", "12", "--reverse", "figure8"});
  CHECK(r.code == cli::kExitOk);
  const auto lines = json_lines(r.out);
  REQUIRE(lines.size() == 25);
  for (const auto& l : lines)
    for (const auto& x : l["state"]) CHECK(x.get<int>() < 5);
  CHECK(lines.back()["state"] == lines.front()["state"]);
  CHECK(run({"automaton", "--prime", "6", "cycle:4"}).code == cli::kExitUsage);
}

TEST_CASE("newton reports its outcome as JSON") {
  const Result tree = run({"newton", "--graph", "path:4", "--eps", "0.01", "--format", "json"});
  const auto obj = json_lines(tree.out).at(0);
  for (const char* key : {"converged", "iterations", "residual", "support_violation_max"}) CHECK(obj.contains(key));
  CHECK(obj["converged"] == true);
  CHECK(obj["residual"].get<double>() < 1e-10);
  const Result cycle = run({"newton", "--graph", "cycle:4", "--format", "json"});
  CHECK(cycle.code == cli::kExitCheckFailed);
  CHECK(json_lines(cycle.out).at(0)["status"] == "singular_jacobian");
}

TEST_CASE("product of two intervals") {
  const auto path = std::filesystem::temp_directory_path() / "connlap_k2.txt";
  {
    std::ofstream f(path);
    write_graph(f, gen::complete(2));
  }
  const Result r = run({"product", path.string(), path.string(), "--format", "json"});
  std::filesystem::remove(path);
  CHECK(r.code == cli::kExitOk);
  const auto obj = json_lines(r.out).at(0);
  CHECK(obj["check_spectral_multiplicativity"] == true);
  CHECK(obj["energy"] == 1);
  CHECK(obj["hydrogen_residual_max"].get<int>() > 0);
}

TEST_CASE("dump prints the matrix format") {
  const Result r = run({"--dump", "L", "verify", "complete:2"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out == "3 3\n1 0 1\n0 1 1\n1 1 1\n");
  CHECK(run({"--dump", "Linv", "bounds", "path:2", "path:3"}).out.find("\n\n5 5\n") != std::string::npos);
  CHECK(run({"--dump", "nope", "verify", "path:2"}).code == cli::kExitUsage);
}

TEST_CASE("identical invocations give identical bytes") {
  for (std::vector<std::string> args : {std::vector<std::string>{"bounds", "gnm:12,20", "gnp:15,0.3", "--seed", "9"},
                                        std::vector<std::string>{"verify", "gnm:10,14", "--seed", "3"},
                                        std::vector<std::string>{"newton", "--graph", "star:3", "--seed", "4",
                                                                 "--format", "json"}}) {
    const Result a = run(args), b = run(args);
    CHECK(a.out == b.out);
    CHECK(a.code == b.code);
  }
  CHECK(run({"bounds", "gnm:12,20", "--seed", "9"}).out != run({"bounds", "gnm:12,20", "--seed", "10"}).out);
}

TEST_CASE("report reproduces the deterministic tables") {
  const Result r = run({"report", "--no-random", "--format", "json"});
  CHECK(r.code == cli::kExitOk);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["mismatches"] == 0);
  CHECK(doc["reference"].size() == 56);
}

TEST_CASE("sparse random graphs favour the dual vertex bound over 2d - Q") {
  const Result r = run({"report", "--p", "0.1", "--seeds", "50", "--format", "json"});
  CHECK(r.code == cli::kExitOk);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["unsound"] == 0);
  const auto& gnp = doc["random_summary"][0];
  CHECK(gnp["family"] == "gnp");
  CHECK(gnp["seeds"] == 50);
  CHECK(gnp["dual_below_lsc"].get<int>() > 25);
  CHECK(doc["random_rows"].size() == 100);
}
