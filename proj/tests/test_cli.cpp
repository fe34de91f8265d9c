#include "flexcontact/cli.hpp"
#include "flexcontact/json_io.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

using namespace flexcontact;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "flexcontact");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& body) {
  auto path = std::filesystem::temp_directory_path() / ("flexcontact_test_" + name);
  std::ofstream(path) << body;
  return path.string();
}

}  // namespace

TEST_CASE("chord-degree report") {
  auto r = run({"chord-degree", "--down", "2", "--up", "0", "--index", "3"});
  REQUIRE(r.code == kExitOk);
  auto j = Json::parse(r.out);
  CHECK(j["schema"] == 1);
  CHECK(j["command"] == "chord-degree");
  CHECK(j["result"]["degree"] == 4);
  CHECK(j.contains("formula"));
  CHECK(j["inputs"]["down"] == 2);
}

TEST_CASE("reports are deterministic") {
  auto a = run({"examples", "words"});
  auto b = run({"examples", "words"});
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
}

TEST_CASE("exit codes follow the verdict") {
  CHECK(run({"cem-bound", "--k", "3", "--h1", "1"}).code == kExitOk);
  CHECK(run({"cem-bound", "--k", "2", "--h1", "1"}).code == kExitNegative);
  CHECK(run({"no-such-command"}).code == kExitInvalid);
  CHECK(run({"chord-degree", "--down", "2"}).code == kExitInvalid);
  CHECK(run({"homology", "/nonexistent/file.json"}).code == kExitInvalid);
}

TEST_CASE("schema violations are invalid input") {
  auto bad_schema = write_temp("bad_schema.json", R"({"schema": 2, "n": 3, "stages": []})");
  CHECK(run({"adc-check", bad_schema}).code == kExitInvalid);
  auto not_json = write_temp("not_json.json", "{ nope");
  CHECK(run({"adc-check", not_json}).code == kExitInvalid);
  auto wrong_type = write_temp("wrong_type.json", R"({"schema": 1, "n": "three", "stages": []})");
  CHECK(run({"adc-check", wrong_type}).code == kExitInvalid);
}

TEST_CASE("adc-check verdicts") {
  auto empty = write_temp("empty.json", R"({"schema": 1, "n": 3, "stages": []})");
  auto r = run({"adc-check", empty});
  CHECK(r.code == kExitOk);
  CHECK(Json::parse(r.out)["verdict"] == "pass");
  auto failing = write_temp("failing.json", R"({"schema": 1, "n": 3, "stages": [
    {"scale": "1", "bound": "4", "orbits": [{"degree": 0, "action": "1", "origin": "old"}]}]})");
  auto f = run({"adc-check", failing});
  CHECK(f.code == kExitNegative);
  CHECK(Json::parse(f.out)["result"]["stage"] == 0);
}

TEST_CASE("words command reproduces the seven-word table") {
  auto file = write_temp("chords.json", R"({"schema": 1, "n": 3, "bound": "5", "chords": [
    {"id": "a", "degree": 1, "action": "1"}, {"id": "b", "degree": 2, "action": "3/2"}]})");
  auto r = run({"--bound", "4", "words", file});
  REQUIRE(r.code == kExitOk);
  CHECK(Json::parse(r.out)["result"]["count"] == 7);
  auto t = run({"words", file, "--bound", "4", "--table"});
  CHECK(t.code == kExitOk);
  CHECK(t.out.find("result.count") != std::string::npos);
}

TEST_CASE("homology command on a presentation") {
  auto file = write_temp("rp2.json", R"({"schema": 1, "n": 3, "dimension": 6,
    "handles": [{"index": 0, "label": "h0"}, {"index": 1, "label": "a"}, {"index": 2, "label": "b"}],
    "boundary_matrices": {"2": [[2]]}})");
  auto r = run({"homology", file});
  REQUIRE(r.code == kExitOk);
  auto j = Json::parse(r.out);
  CHECK(j["result"]["homology"]["1"]["torsion"][0] == "2");
}

TEST_CASE("examples corpus") {
  auto all = run({"examples"});
  CHECK(all.code == kExitOk);
  auto wedge = run({"examples", "wedge-family", "--i", "7"});
  REQUIRE(wedge.code == kExitOk);
  auto j = Json::parse(wedge.out);
  CHECK(j["result"]["cases"][0]["result"][0]["dim_H2_W"] == 7);
  auto injected = run({"examples", "adc-surgery", "--inject-degree-zero"});
  CHECK(injected.code == kExitNegative);
  CHECK(run({"examples", "no-such-example"}).code == kExitInvalid);
}
