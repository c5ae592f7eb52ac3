#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

using homlink::cli::Json;

namespace {

const std::string kFixtures = HOMLINK_FIXTURE_DIR;

struct Run {
  int code;
  std::string out, err;
  Json report;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Json report;
  int code = homlink::cli::run(args, out, err, &report);
  return {code, out.str(), err.str(), report};
}

std::string temp_file(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / ("homlink_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("reproduce exit codes follow the headline verdict") {
  struct Case {
    const char* id;
    int code;
  };
  for (Case c : {Case{"ex2.2", 1}, Case{"ex2.3", 0}, Case{"thm2.4", 1}}) {
    auto r = run({"reproduce", c.id, "--fixtures", kFixtures});
    INFO(c.id, r.err);
    CHECK(r.code == c.code);
    CHECK(r.report["verdict"]["exit_code"] == c.code);
    CHECK(r.report["results"]["reproduced"] == true);
    for (const auto& claim : r.report["results"]["claims"]) CHECK(claim["holds"] == true);
  }
}

TEST_CASE("reproduce of the degree-28 construction and its section") {
  for (const char* id : {"cor3.3-n28", "prop3.4"}) {
    auto r = run({"--format", "json", "reproduce", id, "--fixtures", kFixtures});
    INFO(id, r.err);
    CHECK(r.code == 0);
    CHECK(r.report["results"]["reproduced"] == true);
    CHECK(Json::parse(r.out)["results"] == r.report["results"]);
  }
}

TEST_CASE("reproduce report for the non-minimal licci chain") {
  auto r = run({"reproduce", "thm2.4", "--fixtures", kFixtures});
  const auto& res = r.report["results"];
  CHECK(res["chain"]["steps"][0]["min_degrees"] == Json::array({3, 3, 6}));
  CHECK(res["chain"]["steps"][0]["minimal"] == false);
  CHECK(res["chain"]["steps"][0]["sequence"]["degrees"] == Json::array({3, 4, 6}));
  CHECK(res["chain"]["terminal_is_ci"] == true);
  CHECK(res["obstruction"]["ci_dim"] == 35);
  CHECK(res["obstruction"]["resolution_bound"] == 32);
  CHECK(r.report["verdict"]["summary"].get<std::string>().find("not minimal") != std::string::npos);
}

TEST_CASE("text and JSON carry the same report") {
  const std::string ideal = kFixtures + "/ex2.2.ideal";
  for (const char* cmd : {"gb", "hilbert", "betti", "height", "mindeg", "monomial-scan"}) {
    auto text = run({cmd, "--ideal", ideal});
    auto json = run({"--format", "json", cmd, "--ideal", ideal});
    INFO(cmd);
    CHECK(text.code == json.code);
    CHECK(text.out == homlink::cli::render_text(text.report));
    Json parsed = Json::parse(json.out);
    CHECK(parsed == json.report);
    CHECK(parsed["results"] == text.report["results"]);
    CHECK(parsed["verdict"] == text.report["verdict"]);
    CHECK(parsed["inputs"] == text.report["inputs"]);
  }
  auto b = run({"betti", "--ideal", ideal});
  CHECK(b.out.find("total:  1  7 10  4") != std::string::npos);
}

TEST_CASE("the report file matches standard output") {
  auto path = (std::filesystem::temp_directory_path() / "homlink_test_report.json").string();
  auto r = run({"--format", "json", "--out", path, "hilbert", "--ideal", kFixtures + "/ex2.2.ideal"});
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(Json::parse(ss.str()) == Json::parse(r.out));
  CHECK(r.report["results"]["hilbert"]["h_vector"] == Json::array({1, 3, 6, 8, 7, 6, 2}));
}

TEST_CASE("input errors exit 2 with an empty results object") {
  auto missing = run({"--format", "json", "gb", "--ideal", "/nonexistent/file.ideal"});
  CHECK(missing.code == 2);
  Json rep = Json::parse(missing.out);
  CHECK(rep["results"] == Json::object());
  CHECK(rep["error"].is_string());
  CHECK(rep["verdict"]["exit_code"] == 2);

  auto bad = temp_file("bad.ideal", "ring = x, y\n\nideal = x^2,\n  y^ + x\n");
  auto parse = run({"gb", "--ideal", bad});
  CHECK(parse.code == 2);
  CHECK(parse.err.find(bad + ": line 3:") != std::string::npos);

  auto chain = temp_file("bad.chain", "ring = x, y\nideal = x^2, y^2\nstep\n  seq = x^2; y^2\n  colour = red\n");
  auto c = run({"chain-verify", "--chain", chain});
  CHECK(c.code == 2);
  CHECK(c.err.find("line 5") != std::string::npos);

  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"reproduce", "ex9.9", "--fixtures", kFixtures}).code == 2);
  CHECK(run({"construct-thm32", "--params", "1,4,5,7"}).code == 2);
  CHECK(run({"construct-thm32", "--field", "QQ"}).code == 2);
  CHECK(run({"link", "--ideal", kFixtures + "/ex2.2.ideal"}).code == 2);
}

TEST_CASE("verdict-bearing commands") {
  const std::string ideal = kFixtures + "/ex2.2.ideal";
  auto ok = run({"link", "--ideal", ideal, "--seq", "z^3; x^4; y^6"});
  CHECK(ok.code == 0);
  CHECK(ok.report["results"]["step"]["minimal"] == true);
  auto notreg = run({"link", "--ideal", ideal, "--seq", "x*y*z; x^3*y; z^3"});
  CHECK(notreg.code == 1);
  auto socle = run({"socle-check", "--ideal", ideal, "--degrees", "3,4,6"});
  CHECK(socle.code == 0);
  CHECK(socle.report["results"]["sum"] == 13);
  CHECK(socle.report["results"]["bound"] == 9);
  auto chain = run({"chain-verify", "--chain", kFixtures + "/ex2.3.chain"});
  CHECK(chain.code == 0);
  CHECK(chain.report["results"]["chain"]["minimally_licci"] == true);
  auto chain24 = run({"chain-verify", "--chain", kFixtures + "/thm2.4.chain"});
  CHECK(chain24.code == 1);
  CHECK(chain24.report["results"]["chain"]["complete"] == true);
}

TEST_CASE("field override and seeds") {
  const std::string ideal = kFixtures + "/ex2.2.ideal";
  auto gf = run({"--field", "GF:101", "hilbert", "--ideal", ideal});
  CHECK(gf.report["inputs"]["field"] == "GF:101");
  CHECK(gf.report["results"]["hilbert"]["degree"] == 33);
  auto a = run({"--seed", "9", "link", "--ideal", ideal, "--degrees", "3,4,6"});
  auto b = run({"--seed", "9", "link", "--ideal", ideal, "--degrees", "3,4,6"});
  CHECK(a.code == 0);
  CHECK(a.report["results"] == b.report["results"]);
  CHECK(a.report["seed"] == 9);
}
