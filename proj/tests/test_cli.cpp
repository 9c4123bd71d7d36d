#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "singlink/cli.hpp"
#include "singlink/diagram.hpp"
#include "singlink/pairs.hpp"
#include "singlink/presentation.hpp"

using namespace singlink;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "singlink");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / ("singlink_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST_CASE("tables") {
  auto r = run({"tables", "--which", "flip-counts"});
  CHECK(r.code == 0);
  CHECK(r.out.find("2 2 2\n3 24 7\n4 3360 169\n") != std::string::npos);

  r = run({"tables", "--which", "lr-invertible", "--n", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\n3 216 44 24 7\n") != std::string::npos);

  r = run({"tables", "--which", "tau-phi", "--n", "8"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\n8 ") != std::string::npos);
  CHECK(r.out.find(" 56\n") != std::string::npos);
}

TEST_CASE("state sum command") {
  auto r = run({"invariant", "statesum", "@four_sing_right", "--pair", "builtin:flip-s2"});
  CHECK(r.code == 0);
  CHECK(r.out == "4*a*b^2*c\n");
  r = run({"invariant", "statesum", "builtin:four_sing_left", "--pair", "builtin:flip-s2"});
  CHECK(r.out == "2*a^2*c^2 + 2*b^4\n");
}

TEST_CASE("nc invariant command") {
  auto r = run({"invariant", "nc", "@sing_trefoil", "--pair", "builtin:flip-i2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("{b^2} x2") != std::string::npos);

  r = run({"invariant", "nc", "@four_sing_left", "--pair", "builtin:flip-i2", "--target", "symmetric:3"});
  CHECK(r.code == 2);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"pairs"}).code == 2);
  CHECK(run({"group", "--pair", "builtin:flip-i2", "--kind", "xx"}).code == 2);
  CHECK(run({"--help"}).code == 0);

  auto r = run({"diagram", "show", "@nope"});
  CHECK(r.code == 1);
  CHECK_FALSE(r.err.empty());
  CHECK(run({"color", "@unknot", "--pair", "builtin:nope"}).code == 1);

  auto bad = temp_file("bad.txt", "X? a b c d\n");
  r = run({"diagram", "show", bad});
  CHECK(r.code == 1);
  CHECK(r.err.find("SyntaxError") != std::string::npos);
  auto badjson = temp_file("bad.json", "{");
  CHECK(run({"color", "@unknot", "--pair", badjson}).code == 1);
}

TEST_CASE("color command") {
  auto r = run({"color", "@sing_hopf", "--pair", "builtin:flip-i2", "--count-only"});
  CHECK(r.code == 0);
  CHECK(r.out == "colorings: 0\n");
  auto a = run({"--json", "color", "@sing_trefoil", "--pair", "builtin:d3-d3"});
  auto b = run({"--json", "color", "@sing_trefoil", "--pair", "builtin:d3-d3", "--brute-force"});
  CHECK(a.out == b.out);
  CHECK(json::parse(a.out)["count"] == 9);
}

TEST_CASE("group command") {
  auto r = run({"group", "--pair", "builtin:flip-flip", "--kind", "nc", "--coord-map"});
  CHECK(r.code == 0);
  CHECK(r.out.find("group: Z^4") != std::string::npos);
  CHECK(r.out.find("f12 = b*c^-1") != std::string::npos);

  r = run({"--json", "group", "--pair", "builtin:flip-s2", "--kind", "ab"});
  CHECK(r.code == 0);
  auto g = abelian_group_from_json(json::parse(r.out));
  CHECK(g.rank == 3);
  CHECK(g.torsion == std::vector<long long>{2, 2});
}

TEST_CASE("json output round trips") {
  for (const auto& name : builtin_diagram_names()) {
    auto r = run({"--json", "diagram", "show", "@" + name});
    REQUIRE(r.code == 0);
    CHECK(is_isomorphic(diagram_from_json(json::parse(r.out)), builtin_diagram(name)));
    auto file = temp_file(name + ".json", r.out);
    auto again = run({"--json", "diagram", "show", file});
    CHECK(again.out == r.out);
  }

  auto r = run({"diagram", "show", "@four_sing_right"});
  auto txt = temp_file("fsr.txt", r.out);
  CHECK(run({"diagram", "show", txt}).out == r.out);

  r = run({"--json", "pairs", "enumerate", "--switch", "flip:3", "--list", "--classes"});
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["count"] == 24);
  CHECK(j["classes"].size() == 7);
  auto flip = make_flip(3);
  for (const auto& t : j["taus"]) CHECK(check_singular_pair(flip, t.get<PairTable>()).ok);
  for (const auto& c : j["classes"]) {
    auto p = pair_from_json(c);
    CHECK(p.S() == flip.table());
  }

  json pj = SingularPair(make_flip(2), make_i2().table());
  auto pf = temp_file("pair.json", pj.dump());
  r = run({"--json", "pairs", "check", pf});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["valid"] == true);
  r = run({"invariant", "statesum", "@four_sing_right", "--pair", pf});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("4*", 0) == 0);
}

TEST_CASE("moves through the command line") {
  auto r = run({"--json", "diagram", "moves", "@sing_trefoil", "--move", "RV"});
  REQUIRE(r.code == 0);
  auto sites = json::parse(r.out);
  REQUIRE_FALSE(sites.empty());
  r = run({"--json", "diagram", "move", "@sing_trefoil", "--move", "RV", "--site", "0"});
  CHECK(r.code == 0);
  auto moved = diagram_from_json(json::parse(r.out));
  CHECK(moved.crossing_count() == 3);
  CHECK(run({"diagram", "move", "@sing_trefoil", "--move", "RV", "--site", "99"}).code != 0);
}

TEST_CASE("identical invocations give identical output") {
  std::vector<std::vector<std::string>> cmds{
      {"tables", "--which", "flip-classes", "--n", "3"},
      {"--json", "pairs", "enumerate", "--switch", "dihedral:3", "--list", "--classes"},
      {"invariant", "nc", "@four_sing_left", "--pair", "builtin:flip-i2", "--per-coloring"},
      {"--threads", "4", "invariant", "nc", "@sing_trefoil", "--pair", "builtin:d3-d3"},
  };
  for (const auto& c : cmds) {
    auto a = run(c), b = run(c);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}
