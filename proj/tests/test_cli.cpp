#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "toric/cli.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "toric");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = toric::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(TORIC_DATA_DIR) + "/" + name; }

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("toric_test_" + name);
  std::ofstream(path) << content;
  return path;
}

json run_json(std::vector<std::string> args) {
  args.push_back("--json");
  const auto r = run(args);
  REQUIRE(r.code == 0);
  return json::parse(r.out);
}

}  // namespace

TEST_CASE("faces lists the lattice and star tables") {
  const auto j = run_json({"faces", "--input", data("sq.json")});
  CHECK(j["results"]["faceCount"] == 9);
  CHECK(j["results"]["faces"].size() == 9);
  CHECK(j["command"] == "faces");

  const auto s = run_json({"faces", "--input", data("sq.json"), "--star", "0,0"});
  const auto& t = s["results"]["star"];
  CHECK(t["face"] == "[(0,0)]");
  CHECK(t["star"] == json({"[(0,0)]", "[(0,0),(0,1)]", "[(0,0),(1,0)]"}));
  CHECK(t["link"] == json({"[(0,1)]", "[(1,0)]"}));
  CHECK(t["openAntistar"] == json({"[(1,1)]", "[(0,1),(1,1)]", "[(1,0),(1,1)]"}));

  const auto text = run({"faces", "--input", data("sq.json"), "--star", "0,0;1,0"});
  CHECK(text.code == 0);
  CHECK(text.out.find("9 faces") != std::string::npos);
  CHECK(run({"faces", "--input", data("sq.json"), "--star", "0,0;1,1"}).code == 2);
  CHECK(run({"faces", "--input", data("sq.json"), "--star", "5,5"}).code == 2);
}

TEST_CASE("ehrhart, classify and cohomology wrappers") {
  const auto e = run_json({"ehrhart", "--input", data("tri.json")});
  CHECK(e["results"]["coefficients"] == json({"1", "3/2", "1/2"}));
  CHECK(e["results"]["integralRoots"] == json({-2, -1}));
  CHECK(e["results"]["splittingIndex"] == 2);
  CHECK(e["results"]["reciprocity"].size() == 4);

  const auto c = run_json({"classify", "--kind", "vis", "--x", "2,2", "--input", data("sq.json")});
  CHECK(c["results"]["filterSide"] == json({"[(0,0)]", "[(0,0),(0,1)]", "[(0,0),(1,0)]"}));
  CHECK(c["results"]["complexSide"].size() == 5);
  const auto f = run_json({"classify", "--kind", "frontback", "--x", "1/2,-1", "--input", data("sq.json")});
  CHECK(f["results"]["filterSide"] == json({"[(0,0),(1,0)]"}));
  CHECK(f["results"]["x"] == json({"1/2", "-1"}));

  const auto h = run_json({"cohomology", "--input", data("sq.json"), "--twist", "-2", "--ring", "Z"});
  const auto& per = h["results"]["perDegree"];
  CHECK(per[2]["degree"] == 2);
  CHECK(per[2]["freeRank"] == 1);
  CHECK(per[0]["freeRank"] == 0);
  CHECK(h["results"]["contributors"][0]["x"] == json({-1, -1}));
  CHECK(h["results"]["shellCertified"] == true);
  const auto h2 = run_json({"cohomology", "--input", data("tri.json"), "--twist", "2", "--ring", "Zp:3"});
  CHECK(h2["results"]["perDegree"][0]["freeRank"] == 6);
  CHECK(h2["results"]["ring"] == "Z/3");
}

TEST_CASE("verify passes on valid input and names the failing check otherwise") {
  CHECK(run({"verify", "--input", data("tri.json"), "--suite", "all"}).code == 0);
  CHECK(run({"verify", "--input", data("seg.json"), "--suite", "cohomology"}).code == 0);
  const auto bad = run({"verify", "--input", data("sq_corrupt.json"), "--json"});
  CHECK(bad.code == 1);
  const auto j = json::parse(bad.out);
  CHECK(j["passed"] == false);
  bool named = false;
  for (const auto& s : j["suites"])
    if (s["name"] == "facet-irredundancy" && s["passed"] == false) named = true;
  CHECK(named);
}

TEST_CASE("input errors exit with code 2") {
  CHECK(run({"faces", "--input", data("malformed.json")}).code == 2);
  CHECK(run({"faces", "--input", data("does_not_exist.json")}).code == 2);
  CHECK(run({"faces"}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"classify", "--kind", "vis", "--x", "1/2,1/2", "--input", data("sq.json")}).code == 2);
  CHECK(run({"classify", "--kind", "nope", "--x", "3,3", "--input", data("sq.json")}).code == 2);
  CHECK(run({"classify", "--kind", "vis", "--x", "3", "--input", data("sq.json")}).code == 2);
  CHECK(run({"cohomology", "--input", data("sq.json"), "--twist", "1", "--ring", "Zp:4"}).code == 2);
  CHECK(run({"verify", "--input", data("sq.json"), "--suite", "nope"}).code == 2);
  const auto degenerate = temp_file("line.json", R"({"vertices": [[0, 0], [1, 1], [2, 2]]})");
  CHECK(run({"faces", "--input", degenerate.string()}).code == 2);
  const auto mixed = temp_file("mixed.json", R"({"vertices": [[0, 0], [1], [0, 1]]})");
  CHECK(run({"faces", "--input", mixed.string()}).code == 2);
  const auto noverts = temp_file("noverts.json", R"({"points": []})");
  CHECK(run({"faces", "--input", noverts.string()}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("a margin that is too small is a failure") {
  const auto r = run({"cohomology", "--input", data("sq.json"), "--twist", "1", "--margin", "0"});
  CHECK(r.code == 1);
  CHECK(r.err.find("margin too small") != std::string::npos);
}

TEST_CASE("reports are canonical and deterministic") {
  const auto path = std::filesystem::temp_directory_path() / "toric_test_report.json";
  const auto r1 = run({"verify", "--input", data("tri.json"), "--json", "--output", path.string()});
  REQUIRE(r1.code == 0);
  std::ifstream in(path);
  std::stringstream file;
  file << in.rdbuf();
  CHECK(file.str() == r1.out);
  CHECK(json::parse(r1.out).dump(2) + "\n" == r1.out);
  const auto r2 = run({"verify", "--input", data("tri.json"), "--json"});
  CHECK(r1.out == r2.out);
  CHECK(json::parse(r1.out).count("timing_ms") == 0);
  CHECK(json::parse(run({"faces", "--input", data("tri.json"), "--json", "--timing"}).out).count("timing_ms") == 1);

  const auto a = run({"cohomology", "--input", data("tri2.json"), "--twist", "2", "--json"});
  setenv("TORIC_THREADS", "1", 1);
  const auto b = run({"cohomology", "--input", data("tri2.json"), "--twist", "2", "--json"});
  setenv("TORIC_THREADS", "2", 1);
  CHECK(a.out == b.out);
}

TEST_CASE("digests and integer encoding") {
  CHECK(toric::fnv1a_hex("") == "cbf29ce484222325");
  CHECK(toric::fnv1a_hex("a") == "af63dc4c8601ec8c");
  CHECK(toric::integer_to_json(toric::Integer(5)) == json(5));
  CHECK(toric::integer_to_json(toric::Integer("9007199254740993")) == json("9007199254740993"));
  CHECK(toric::integer_to_json(toric::Integer("-9007199254740992")) == json(-9007199254740992LL));
}

TEST_CASE("polytope JSON with explicit facets is taken verbatim") {
  const auto doc = json::parse(R"({"vertices": [[0], [1]], "facets": [{"normal": [1], "offset": 0},
                                  {"normal": [-1], "offset": "1"}]})");
  const auto p = toric::polytope_from_json(doc);
  CHECK(p.facets().size() == 2);
  CHECK_THROWS_AS(toric::polytope_from_json(json::parse(R"({"vertices": [[0], [1]], "facets": [{"normal": [1, 0],
                                                           "offset": 0}]})")),
                  toric::ToricError);
  CHECK_THROWS_AS(toric::polytope_from_json(json::parse(R"({"vertices": [[0.5], [1]]})")), toric::ToricError);
}
