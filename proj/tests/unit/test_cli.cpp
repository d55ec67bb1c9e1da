#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "support/blade.hpp"
#include "cli.hpp"
#include "petriforge/models.hpp"
#include "petriforge/pnml.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = petriforge::cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("petriforge_cli_" + name);
  std::ofstream(path, std::ios::binary) << content;
  return path;
}

// "key: value" lines to a map
std::map<std::string, std::string> fields(const std::string& text) {
  std::map<std::string, std::string> m;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    const auto colon = line.find(':');
    if (colon == std::string::npos) continue;
    const auto v = line.find_first_not_of(' ', colon + 1);
    m[line.substr(0, colon)] = v == std::string::npos ? "" : line.substr(v);
  }
  return m;
}

}  // namespace

TEST_CASE("analyze reports the O. schinzii state count") {
  const auto r = run({"analyze", "--model", "o-schinzii", "--param", "p=1"});
  CHECK(r.code == 0);
  CHECK(fields(r.out)["states"] == "663");
}

TEST_CASE("analyze a PNML file of the blade net") {
  const auto path = temp_file("blade.pnml", petriforge::write_pnml(testsupport::blade_net(3, 1)));
  const auto r = run({"analyze", "--pnml", path.string()});
  CHECK(r.code == 0);
  CHECK(fields(r.out)["states"] == "2");
  CHECK(fields(r.out)["edges"] == "1");
}

TEST_CASE("json output matches the text report") {
  const auto text = run({"analyze", "--model", "a-coranica"});
  const auto json = run({"analyze", "--model", "a-coranica", "--json"});
  REQUIRE(json.code == 0);
  const auto j = nlohmann::json::parse(json.out);
  const auto f = fields(text.out);
  for (const char* key : {"states", "edges", "deadlocks", "goal_deadlocks", "max_concurrency"}) {
    CAPTURE(key);
    CHECK(std::to_string(j[key].get<std::uint64_t>()) == f.at(key));
  }
}

TEST_CASE("validate passes the A. coranica contracts") {
  const auto r = run({"validate", "--model", "a-coranica"});
  CHECK(r.code == 0);
  std::size_t pass = 0;
  for (std::size_t pos = 0; (pos = r.out.find("  PASS  ", pos)) != std::string::npos; ++pos) ++pass;
  CHECK(pass == 8);
  const auto j = nlohmann::json::parse(run({"validate", "--model", "o-schinzii", "--json"}).out);
  CHECK(j["pass"] == true);
  CHECK(j["contracts"].size() == 8);
}

TEST_CASE("usage errors exit 2") {
  auto r = run({"analyze", "--frobnicate"});
  CHECK(r.code == 2);
  CHECK(r.err.find("frobnicate") != std::string::npos);
  CHECK(run({}).code == 2);
  CHECK(run({"analyze"}).code == 2);
  CHECK(run({"analyze", "--model", "nope"}).code == 2);
  r = run({"analyze", "--model", "a-coranica", "--param", "p"});
  CHECK(r.code == 2);
  CHECK(r.err.find("--param") != std::string::npos);
  CHECK(run({"analyze", "--model", "a-coranica", "--param", "zz=1"}).code == 2);
  CHECK(run({"analyze", "--model", "blade", "--pnml", "x.pnml"}).code == 2);
  CHECK(run({"sweep", "--model", "blade", "--p", "3..1"}).code == 2);
  CHECK(run({"validate", "--model", "blade"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("I/O and parse errors exit 3") {
  auto r = run({"analyze", "--pnml", "/nonexistent/file.pnml"});
  CHECK(r.code == 3);
  CHECK(r.err.find("/nonexistent/file.pnml") != std::string::npos);
  const auto bad = temp_file("bad.pnml", "<pnml><net id=\"x\" type=\"nope\"/></pnml>");
  r = run({"info", "--pnml", bad.string()});
  CHECK(r.code == 3);
  CHECK(r.err.find("'x'") != std::string::npos);
  CHECK(run({"info", "--model", "blade", "--params", "/nonexistent/params"}).code == 3);
}

TEST_CASE("exploration limit exits 1") {
  setenv("PETRIFORGE_MAX_NODES", "10", 1);
  const auto r = run({"analyze", "--model", "a-coranica"});
  unsetenv("PETRIFORGE_MAX_NODES");
  CHECK(r.code == 1);
  CHECK(r.err.find("PETRIFORGE_MAX_NODES") != std::string::npos);
}

TEST_CASE("params file and overrides") {
  const auto path = temp_file("params.txt", "# people\np=2\n");
  const auto a = run({"analyze", "--model", "o-schinzii", "--params", path.string()});
  CHECK(fields(a.out)["states"] == "4464");
  const auto b =
      run({"analyze", "--model", "o-schinzii", "--params", path.string(), "--param", "p=1"});
  CHECK(fields(b.out)["states"] == "663");
  const auto bad = temp_file("params_bad.txt", "p=2\nq\n");
  const auto c = run({"info", "--model", "o-schinzii", "--params", bad.string()});
  CHECK(c.code == 2);
  CHECK(c.err.find("line 2") != std::string::npos);
}

TEST_CASE("sweep emits CSV in p order, serial or parallel") {
  const auto serial = run({"sweep", "--model", "o-schinzii", "--p", "1..3"});
  CHECK(serial.code == 0);
  CHECK(serial.out.starts_with("p,states,edges\n1,663,"));
  CHECK(run({"sweep", "--model", "o-schinzii", "--p", "1..3", "--jobs", "3"}).out == serial.out);
  const auto j = nlohmann::json::parse(run({"sweep", "--model", "o-schinzii", "--p", "2", "--json"}).out);
  CHECK(j["rows"][0]["states"] == 4464);
}

TEST_CASE("simulate is deterministic") {
  const std::vector<std::string> args = {"simulate", "--model", "a-coranica", "--seed", "3", "--trace"};
  const auto a = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == run(args).out);
  CHECK(fields(a.out)["stop_reason"] == "deadlock");
  CHECK(a.out.find(" | (") != std::string::npos);
  const auto s = run({"simulate", "--model", "o-schinzii", "--runs", "5"});
  CHECK(fields(s.out)["goal_fraction"] == "1.0");
  CHECK(run({"simulate", "--model", "blade", "--max-steps", "0"}).code == 2);
}

TEST_CASE("export formats") {
  const auto pnml = run({"export", "--model", "blade", "--format", "pnml"});
  CHECK(pnml.code == 0);
  CHECK(petriforge::parse_pnml(pnml.out).net ==
        petriforge::build_model(petriforge::ModelVariant::BladeExample));
  CHECK(run({"export", "--model", "blade", "--format", "dot"}).out.find("shape=box") != std::string::npos);
  CHECK(run({"export", "--model", "blade", "--format", "graph"}).out.find("t1") != std::string::npos);
  CHECK(run({"export", "--model", "o-schinzii", "--format", "csv", "--p", "1"}).out.starts_with("p,states,edges\n1,663,"));
  const auto out = std::filesystem::temp_directory_path() / "petriforge_cli_out.dot";
  CHECK(run({"export", "--model", "blade", "--format", "dot", "-o", out.string()}).code == 0);
  CHECK(std::filesystem::file_size(out) > 0);
  CHECK(run({"export", "--model", "blade", "--format", "dot", "-o", "/nonexistent/x.dot"}).code == 3);
  CHECK(run({"export", "--model", "blade", "--format", "svg"}).code == 2);
}

TEST_CASE("cover and info") {
  const auto c = run({"cover", "--model", "blade"});
  CHECK(fields(c.out)["bounded"] == "true");
  const auto i = run({"info", "--model", "o-schinzii", "--json"});
  const auto j = nlohmann::json::parse(i.out);
  CHECK(j["subprocesses"] == 8);
  CHECK(j["params"]["p"] == 1);
}
