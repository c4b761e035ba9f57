#include "overlap/cli.hpp"
#include "overlap/polygon_io.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <sstream>
#include <unistd.h>

using namespace overlap;
namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream o, e;
  int c = run_cli(args, o, e);
  return {c, o.str(), e.str()};
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("overlap_cli_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string put(const std::string& name, const std::string& text) const {
    std::string p = (path / name).string();
    write_text_file(p, text);
    return p;
  }
  std::string at(const std::string& name) const { return (path / name).string(); }
};

const char* kSquare = "ortho 4\n0 0\n1 0\n1 1\n0 1\n";
const char* kL = "ortho 6\n0 0\n2 0\n2 1\n1 1\n1 2\n0 2\n";

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("solve unit squares") {
    TempDir t;
    std::string sq = t.put("sq.poly", kSquare);
    for (const char* algo : {"fast", "baseline", "brute"}) {
      Run r = run({"solve", "--algo", algo, "--in", sq, sq});
      REQUIRE(r.code == 0);
      json j = json::parse(r.out);
      CHECK(j["area"] == 1);
      CHECK(j["algo"] == algo);
      CHECK(j["tau"] == json::array({0, 0}));
      CHECK(j["stats"].contains("slabs"));
    }
  }

  TEST_CASE("solve output follows the documented schema") {
    TempDir t;
    std::string l = t.put("l.poly", kL), sq = t.put("sq.poly", kSquare);
    Run r = run({"solve", "--in", l, sq, "--check"});
    REQUIRE(r.code == 0);
    json out = json::parse(r.out);
    json schema = json::parse(read_text_file(std::string(OVERLAP_SOURCE_DIR) + "/docs/solve_result.schema.json"));
    for (const auto& k : schema["required"]) CHECK(out.contains(k.get<std::string>()));
    for (const auto& [k, v] : out.items()) CHECK(schema["properties"].contains(k));
    const json& st = schema["properties"]["stats"];
    CHECK(out["stats"].size() == st["required"].size());
    for (const auto& k : st["required"]) CHECK(out["stats"].contains(k.get<std::string>()));
  }

  TEST_CASE("solve with check writes the result file") {
    TempDir t;
    std::string l = t.put("l.poly", kL), sq = t.put("sq.poly", kSquare);
    Run r = run({"solve", "--in", l, sq, "--check", "--out", t.at("res.json")});
    REQUIRE(r.code == 0);
    json j = json::parse(read_text_file(t.at("res.json")));
    CHECK(j["area"] == 1);
    CHECK(j["check"] == true);
  }

  TEST_CASE("exit codes") {
    TempDir t;
    std::string bad = t.put("bad.poly", "ortho 3\n0 0\n1 0\n1 1\n");
    std::string sq = t.put("sq.poly", kSquare);
    Run r = run({"solve", "--in", bad, sq});
    CHECK(r.code == 2);
    CHECK(r.err.find("NotClosedOrthogonal") != std::string::npos);
    CHECK(r.err.find("line") != std::string::npos);
    CHECK(run({"solve", "--in", t.at("missing.poly"), sq}).code == 1);
    CHECK(run({"solve", "--in", sq}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({"solve", "--algo", "quantum", "--in", sq, sq}).code == 1);
    std::string big = t.put("big.poly", format_polygon(validate_polygon(
                                            {{0, 0}, {4000, 0}, {4000, 10}, {10, 10}, {10, 4000}, {0, 4000}})));
    CHECK(run({"solve", "--algo", "brute", "--brute-limit", "1", "--in", big, sq}).code == 3);
    CHECK(run({"--help"}).code == 0);
  }

  TEST_CASE("gen slabs, random and comb") {
    TempDir t;
    std::string sq = t.put("sq.poly", kSquare);
    Run s = run({"gen", "slabs", "--in", sq, sq});
    CHECK(s.code == 0);
    CHECK(s.out.rfind("l\tr\tb\tA\tB\tC\tD\n", 0) == 0);
    Run a = run({"gen", "random", "--n", "20", "--seed", "5"});
    Run b = run({"gen", "random", "--n", "20", "--seed", "5"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(parse_polygon_text(a.out).ortho.size() <= 20);
    CHECK(run({"gen", "comb", "--k", "4", "--out", t.at("P.poly"), t.at("Q.poly")}).code == 0);
    CHECK(read_polygon_file(t.at("P.poly")).ortho.size() == 16);
  }

  TEST_CASE("hardness generation and verification") {
    TempDir t;
    std::string sets = t.put("sets.json", R"({"A":[4],"B":[1],"C":[1],"D":[1],"E":[1]})");
    Run g = run({"gen", "hardness", "--sets", sets, "--variant", "overlap", "--out", t.at("P.poly"), t.at("Q.poly"),
                 t.at("meta.json")});
    REQUIRE(g.code == 0);
    CHECK(read_polygon_file(t.at("P.poly")).general);
    Run v = run({"verify", "reduction", "--in", t.at("meta.json"), "--samples", "100"});
    REQUIRE(v.code == 0);
    json rep = json::parse(v.out);
    CHECK(rep["pass"] == true);
    CHECK(rep["sat"] == true);
    CHECK(rep["sweep"]["verdict"] == true);

    std::string c = t.put("c.json", R"({"A":[5],"B":[1],"C":[1]})");
    REQUIRE(run({"gen", "hardness", "--sets", c, "--variant", "containment", "--out", t.at("cP.poly"),
                 t.at("cQ.poly"), t.at("cmeta.json")})
                .code == 0);
    Run cv = run({"verify", "reduction", "--in", t.at("cmeta.json"), "--samples", "50"});
    REQUIRE(cv.code == 0);
    CHECK(json::parse(cv.out)["sat"] == false);

    t.put("Q.poly", kSquare);
    CHECK(run({"verify", "reduction", "--in", t.at("meta.json")}).code == 2);
    std::string bad = t.put("bad.json", R"({"A":[0],"B":[1],"C":[1],"D":[1],"E":[1]})");
    CHECK(run({"gen", "hardness", "--sets", bad, "--out", t.at("x"), t.at("y"), t.at("z")}).code != 0);
  }

  TEST_CASE("viz output is deterministic and shades the overlap") {
    TempDir t;
    std::string sq = t.put("sq.poly", kSquare);
    Run a = run({"viz", "--in", sq, sq, "--tau", "0", "0"});
    Run b = run({"viz", "--in", sq, sq, "--tau", "0", "0"});
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("<svg") != std::string::npos);
    CHECK(a.out.find("id=\"intersection\"") != std::string::npos);
    size_t shaded = 0;
    for (size_t p = a.out.find("class=\"cell\""); p != std::string::npos; p = a.out.find("class=\"cell\"", p + 1)) ++shaded;
    CHECK(shaded == 1);
    Run far = run({"viz", "--in", sq, sq, "--tau", "5", "1/2"});
    CHECK(far.out.find("class=\"cell\"") == std::string::npos);
  }

  TEST_CASE("bench and fit") {
    TempDir t;
    Run b = run({"bench", "--family", "comb", "--sizes", "16,24,32", "--out", t.at("bench.csv")});
    REQUIRE(b.code == 0);
    CHECK(b.out.find("algo=fast") != std::string::npos);
    Run f = run({"bench", "fit", "--in", t.at("bench.csv")});
    CHECK(f.code == 0);
    CHECK(f.out == b.out);
  }
}
