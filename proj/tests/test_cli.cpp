#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "adp/catalog.hpp"
#include "adp/cli.hpp"
#include "json.hpp"

using namespace adp;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

std::string golden(const std::string& name) { return slurp(std::string(ADP_GOLDEN_DIR) + "/" + name + ".txt"); }

}  // namespace

TEST_CASE("output matches golden files") {
  CHECK(run({"enumerate", "--case", "quadric", "--format", "table"}).out == golden("quadric_table"));
  CHECK(run({"show", "thm3.5-1"}).out == golden("show_thm3.5-1"));
  CHECK(run({"export", "--format", "json"}).out == golden("export_json"));
}

TEST_CASE("repeated runs are byte identical") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"enumerate", "--case", "p2bundle"},
           {"enumerate", "--case", "rho3", "--surface", "f2", "--format", "json"},
           {"enumerate", "--case", "highdim", "--dim", "5"},
           {"verify", "--format", "json"},
           {"export", "--format", "csv"}}) {
    const Run a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
  }
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"--bogus"}).code == kExitUsage);
  CHECK(run({"enumerate"}).code == kExitUsage);
  CHECK(run({"enumerate", "--case", "cubic"}).code == kExitUsage);
  CHECK(run({"enumerate", "--case", "quadric", "--dim", "5"}).code == kExitUsage);
  CHECK(run({"enumerate", "--case", "p2bundle", "--surface", "f2"}).code == kExitUsage);
  CHECK(run({"enumerate", "--case", "highdim", "--dim", "3"}).code == kExitUsage);
  CHECK(run({"export"}).code == kExitUsage);
  CHECK(run({"verify", "--only", "nothing"}).code == kExitUsage);
  const Run unknown = run({"show", "thm9.9-9"});
  CHECK(unknown.code == kExitUsage);
  CHECK(unknown.err.find("unknown family id") != std::string::npos);
  CHECK(run({"--help"}).code == kExitOk);
  const Run v = run({"verify"});
  CHECK(v.code == kExitOk);
  CHECK(v.out.find(", 0 fail,") != std::string::npos);
}

TEST_CASE("show resolves aliases") {
  const Run a = run({"show", "V_{2,5}"});
  CHECK(a.code == 0);
  CHECK(a.out.rfind("id: thm2.1-5\n", 0) == 0);
  const Run j = run({"show", "thm3.4-3", "--format", "json"});
  const auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed.at("degree") == 4);
  CHECK(parsed.contains("model"));
}

TEST_CASE("json outputs parse") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"enumerate", "--case", "quadric", "--format", "json"},
           {"enumerate", "--case", "blowup", "--format", "json"},
           {"verify", "--only", "constructions", "--format", "json"},
           {"export", "--format", "json"}}) {
    const Run r = run(args);
    CHECK(r.code == 0);
    CHECK(nlohmann::json::accept(r.out));
  }
}

TEST_CASE("export to a file") {
  const auto path = std::filesystem::temp_directory_path() / "adp_cli_export_test.csv";
  const Run r = run({"export", "--format", "csv", "--out", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(slurp(path.string()) == export_catalog(builtin_catalog(), ExportFormat::Csv));
  std::filesystem::remove(path);
  CHECK(run({"export", "--format", "csv", "--out", "/nonexistent-dir/x.csv"}).code == kExitUsage);
}
