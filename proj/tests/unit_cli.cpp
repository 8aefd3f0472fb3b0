#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "eiscomp/cli.hpp"
#include "eiscomp/registry.hpp"

using eiscomp::cli::run_cli;
using json = nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("euler command prints the exact value") {
  const Result r = run({"euler", "--n", "4", "--weight", "1,1,1,1"});
  CHECK(r.code == 0);
  CHECK(r.out == "-1\n");
  const Result q = run({"euler", "--n", "4", "--weight", "0,0,0,0"});
  CHECK(q.out == "1\n");
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({"euler", "--n", "4", "--weight", "1,1"}).code == 2);        // length mismatch
  CHECK(run({"euler", "--n", "4", "--weight", "a,b,c,d"}).code == 2);    // malformed
  CHECK(run({"faces", "--n", "4", "--weight", "1,1,1,1", "--face", "Z_9"}).code == 2);
  CHECK(run({"kostant", "--n", "5", "--weight", "1,1,1,1,1"}).code == 2);  // unsupported n
  CHECK(run({"bogus-command"}).code == 2);
  CHECK(run({"euler", "--n", "4"}).code == 2);  // missing required option
  // Branch needed for GL_4 det faces when the registry leaves it open.
  CHECK(run({"faces", "--n", "4", "--weight", "1,1,1,1"}).code == 2);
}

TEST_CASE("ghost-prove prints the transcript and succeeds") {
  const Result r = run({"ghost-prove"});
  CHECK(r.code == 0);
  CHECK(r.out.find("result: H^3(GL_4(Z), det) = (0|2|0|2)") != std::string::npos);
  CHECK(r.out.find("[5]") != std::string::npos);
}

TEST_CASE("boundary text and struct outputs carry identical data") {
  const Result text = run({"boundary", "--n", "4", "--weight", "1,1,1,1", "--branch", "ghost"});
  const Result strct = run({"boundary", "--n", "4", "--weight", "1,1,1,1", "--branch",
                            "ghost", "--format", "struct"});
  REQUIRE(text.code == 0);
  REQUIRE(strct.code == 0);
  const json j = json::parse(strct.out);
  // Every E_1 / E_2 / E_3 label and boundary degree in the JSON appears
  // verbatim in the text rendering, and vice versa for the key lines.
  CHECK(j["E1"].size() == 5);
  for (const auto& cell : j["E1"])
    for (const auto& l : cell["labels"])
      CHECK(text.out.find(l["label"].get<std::string>()) != std::string::npos);
  for (const auto& cell : j["E2"])
    for (const auto& l : cell["labels"])
      CHECK(text.out.find(l["label"].get<std::string>()) != std::string::npos);
  for (const auto& deg : j["h_boundary"]) {
    const std::string line = "q=" + std::to_string(deg["degree"].get<int>());
    CHECK(text.out.find(line) != std::string::npos);
    for (const auto& l : deg["labels"])
      CHECK(text.out.find(l["label"].get<std::string>()) != std::string::npos);
  }
  CHECK(j["h_boundary"].size() == 2);
  CHECK(j["h_boundary"][0]["degree"] == 3);
  CHECK(j["h_boundary"][0]["labels"][0]["label"] == "(0|2|0|2)");
  CHECK(j["h_boundary"][1]["degree"] == 8);
  CHECK(j["h_boundary"][1]["labels"][0]["label"] == "(-2|0|2|4)");
}

TEST_CASE("kostant struct output mirrors the text table") {
  const Result text = run({"kostant", "--n", "3", "--weight", "1,1,0"});
  const Result strct =
      run({"kostant", "--n", "3", "--weight", "1,1,0", "--format", "struct"});
  REQUIRE(text.code == 0);
  REQUIRE(strct.code == 0);
  const json j = json::parse(strct.out);
  CHECK(j["rows"].size() == 6);
  int populated = 0;
  for (const auto& row : j["rows"])
    for (const auto& [face, classes] : row["entries"].items())
      for (const auto& c : classes) {
        ++populated;
        CHECK(text.out.find(c["label"].get<std::string>()) != std::string::npos);
      }
  CHECK(populated == 4);  // (1,-1|2), (0|2|0), (-2|2|2) x2
}

TEST_CASE("no-ghost boundary reports the contradiction as data, exit 0") {
  const Result r = run({"boundary", "--n", "4", "--weight", "1,1,1,1", "--branch",
                        "no-ghost", "--format", "struct"});
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  REQUIRE(j.contains("contradiction"));
  CHECK(j["contradiction"]["survivor"] == "(0|2|0|2)");
  CHECK(j["contradiction"]["total_degree"] == 4);
}

TEST_CASE("pgh and pgh-scan") {
  const Result r = run({"pgh", "--weight", "1,1,0", "--format", "struct"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["spaces"][0]["degree"] == 2);
  CHECK(j["spaces"][0]["labels"][0] == "(0|2|0)");
  const Result trivial = run({"pgh", "--weight", "0,0,0"});
  CHECK(trivial.out.find("pGh^2(GL_3(Z), V_(0,0,0)) = 0") != std::string::npos);

  const Result scan = run({"pgh-scan", "--weights", "1,1,0;2,1,1", "--format", "struct"});
  REQUIRE(scan.code == 0);
  const json s = json::parse(scan.out);
  REQUIRE(s["rows"].size() == 2);
  CHECK(s["rows"][0]["pgh"][0]["labels"][0] == "(0|2|0)");
  CHECK(s["rows"][1]["pgh"][0]["labels"][0] == "(2|0|2)");
  CHECK(run({"pgh-scan"}).code == 2);
}

TEST_CASE("table1 struct output matches the frozen totals") {
  const Result r = run({"table1", "--format", "struct"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["rows"].size() == 13);
  CHECK(j["chi_trivial"] == "1");
  CHECK(j["chi_det"] == "-1");
  CHECK(j["rows"][0]["polynomial"] == "Phi_1^2 Phi_2^2");
  CHECK(j["rows"][0]["res"] == 16);
}

TEST_CASE("help exits zero") {
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("a registry that breaks the deduction exits 3") {
  // Strip the degree-3 class from the SL_4 fact: the transcript's step 2
  // check must abort with a contradiction status.
  std::string text;
  {
    std::ostringstream out, err;
    // Load built-in text through the library header instead of re-declaring.
    text = eiscomp::levi::FactsRegistry::builtin_text();
  }
  const std::string needle = "nonzero_degrees = 0, 3";
  text.replace(text.find(needle), needle.size(), "nonzero_degrees = 0");
  const std::string path = "cli_bad_registry_tmp.txt";
  {
    std::ofstream f(path);
    f << text;
  }
  setenv("EISCOMP_REGISTRY", path.c_str(), 1);
  const Result r = run({"ghost-prove"});
  unsetenv("EISCOMP_REGISTRY");
  std::remove(path.c_str());
  CHECK(r.code == 3);
  CHECK(r.err.find("contradiction") != std::string::npos);
}
