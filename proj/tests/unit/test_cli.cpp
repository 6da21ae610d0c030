#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gkz/cli/commands.hpp"
#include "gkz/errors.hpp"

using namespace gkz;
using namespace gkz::cli;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run gkz_run(std::vector<std::string> args) {
  args.insert(args.begin(), "gkz");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(GKZ_FIXTURE_DIR) + "/" + name + ".json"; }

std::string temp_file(const std::string& name, const std::string& text) {
  auto path = fs::temp_directory_path() / ("gkz_cli_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

json report(const std::vector<std::string>& args) {
  auto r = gkz_run(args);
  REQUIRE(r.err.empty());
  return json::parse(r.out);
}

const char* kResultant =
    "x1^2*x6^2 - x1*x2*x5*x6 - 2*x1*x3*x4*x6 + x1*x3*x5^2 + x2^2*x4*x6 - x2*x3*x4*x5 + x3^2*x4^2";

}  // namespace

TEST_CASE("every fixture classifies as recorded") {
  std::size_t count = 0;
  for (const auto& entry : fs::directory_iterator(GKZ_FIXTURE_DIR)) {
    if (entry.path().extension() != ".json") continue;
    std::ifstream in(entry.path());
    json fx = json::parse(in);
    auto r = report({"--json", "-i", entry.path().string(), "classify"});
    CAPTURE(entry.path().filename().string());
    CHECK(r["result"]["verdict"] == fx["expected"]["verdict"]);
    CHECK_FALSE(r["citations"].empty());
    ++count;
  }
  CHECK(count >= 21);
}

TEST_CASE("classify reports witnesses and rules") {
  auto scroll = report({"--json", "-i", fixture("scroll"), "classify"});
  CHECK(scroll["result"]["rule"] == "essential-cayley");
  CHECK(scroll["result"]["witness"]["cayley"]["groups"] == json::parse("[[1,2,3],[4,5,6]]"));
  auto veronese = report({"--json", "-i", fixture("veronese"), "classify"});
  CHECK(veronese["result"]["verdict"] == "NotRational");
  CHECK(veronese["result"]["rule"] == "dimension-at-most-4");
  auto point = gkz_run({"-i", temp_file("point.json", R"({"d":1,"s":1,"matrix":[[1]]})"), "classify"});
  CHECK(point.code == Ok);
  CHECK(point.out.find("Degenerate") != std::string::npos);
}

TEST_CASE("circuits, faces and cayley subcommands") {
  auto circuits = report({"--json", "-i", fixture("wedge_1_2"), "circuits"});
  std::size_t spanning = 0;
  for (const auto& c : circuits["result"]["circuits"]) {
    if (!c["spanning"].get<bool>()) continue;
    ++spanning;
    CHECK(c["support"] == json::parse("[2,3,4,5]"));
    CHECK(c["balanced"] == true);
  }
  CHECK(spanning == 1);

  auto faces = report({"--json", "-i", fixture("simplex_1_3"), "faces"});
  CHECK(faces["result"]["faces"].size() == 15);
  CHECK(faces["result"]["normalized_volume"] == "1");

  auto cay = report({"--json", "-i", fixture("scroll"), "cayley"});
  REQUIRE(!cay["result"]["structures"].empty());
  CHECK(cay["result"]["structures"][0]["groups"] == json::parse("[[1,2,3],[4,5,6]]"));
  CHECK(cay["result"]["structures"][0]["essential"] == true);
}

TEST_CASE("verify exit codes and certificates") {
  auto ok = gkz_run({"--json", "-i", fixture("gauss_square"), "verify", "-f", "1/(x1*x2-x3*x4)"});
  CHECK(ok.code == Ok);
  auto j = json::parse(ok.out);
  CHECK(j["result"]["status"] == "certified");
  CHECK(j["result"]["beta"] == json::parse(R"(["-1","-1","-1"])"));

  auto bad = gkz_run({"--json", "-i", fixture("scroll"), "verify", "-f", std::string("1/(") + kResultant + ")"});
  CHECK(bad.code == Refuted);
  auto b = json::parse(bad.out);
  CHECK(b["result"]["status"] == "refuted");
  CHECK(b["result"].contains("counterexample"));

  auto file = temp_file("quotient.txt", std::string("(x1*x6 - x3*x4)/(") + kResultant + ")");
  CHECK(gkz_run({"-i", fixture("scroll"), "verify", "-f", "@" + file}).code == Ok);

  auto x1 = report({"--json", "-i", fixture("veronese"), "verify", "-f", "x1"});
  CHECK(x1["result"]["beta"] == json::parse(R"(["2","0","0"])"));

  auto parse = gkz_run({"-i", fixture("scroll"), "verify", "-f", "1/(x1+"});
  CHECK(parse.code == InputError);
  CHECK(parse.err.find("position") != std::string::npos);
  CHECK(gkz_run({"-i", fixture("scroll"), "verify", "-f", "x9"}).code == InputError);
}

TEST_CASE("residue and resultant subcommands") {
  auto quad = temp_file("quad.json", R"({"r":1,"m":2,"coeffs":[["1","2","3"],["-1","1/2","5"]],"a":[2]})");
  auto q = report({"--json", "-i", quad, "residue"});
  CHECK(q["result"]["residue"] == "32/171");
  CHECK(q["result"]["jacobian_residue"] == "2");

  auto lin = temp_file("lin.json", R"({"r":2,"m":1,"coeffs":[[2,1,0],[0,3,1],[1,0,1]],"a":[1,1]})");
  CHECK(report({"--json", "-i", lin, "residue"})["result"]["residue"] == "1/7");

  auto all = report({"--json", "-i", temp_file("all.json", R"({"r":1,"m":2,"coeffs":[[1,2,3],[-1,"1/2",5]]})"),
                     "residue"});
  CHECK(all["result"]["residues"].size() == 3);

  auto degenerate = gkz_run({"-i", temp_file("deg.json", R"({"r":1,"m":1,"coeffs":[[1,1],[2,2]],"a":[1]})"),
                             "residue"});
  CHECK(degenerate.code == Degenerate);
  CHECK(degenerate.err.find("degenerate instance") != std::string::npos);

  auto outside = gkz_run({"-i", temp_file("outside.json", R"({"r":1,"m":2,"coeffs":[[1,2,3],[1,1,5]],"a":[4]})"),
                          "residue"});
  CHECK(outside.code == InputError);

  auto sym = report({"--json", "-i", temp_file("sym.json", R"({"degrees":[2,2]})"), "resultant"});
  CHECK(sym["result"]["resultant"] == kResultant);
  auto num = report({"--json", "-i", temp_file("num.json", R"({"f":[-1,1],"g":[-2,0,1]})"), "resultant"});
  CHECK(num["result"]["resultant"] == "-1");

  auto witness = report({"--json", "--seed", "3", "-i", temp_file("wit.json", R"({"witness":true,"m":2,"a":2})"),
                         "residue"});
  CHECK(witness["result"]["function"] == std::string("(x1*x6 - x3*x4)/(") + kResultant + ")");
  CHECK(witness["result"]["certificate"]["status"] == "certified");
}

TEST_CASE("budgets, input errors and determinism") {
  CHECK(gkz_run({"--max-subsets", "2", "-i", fixture("scroll"), "classify"}).code == BudgetError);
  CHECK(gkz_run({"--budget", "5", "-i", fixture("scroll"), "verify", "-f", "x1"}).code == BudgetError);

  setenv("GKZ_BUDGET", "5", 1);
  CHECK(gkz_run({"-i", fixture("scroll"), "verify", "-f", "x1"}).code == BudgetError);
  CHECK(gkz_run({"--budget", "1000000", "-i", fixture("scroll"), "verify", "-f", "x1"}).code == Ok);
  unsetenv("GKZ_BUDGET");

  CHECK(gkz_run({"-i", "/nonexistent/file.json", "classify"}).code == InputError);
  CHECK(gkz_run({"-i", temp_file("broken.json", "{"), "classify"}).code == InputError);
  CHECK(gkz_run({"-i", temp_file("rank.json", R"({"matrix":[[1,1],[2,2]]})"), "classify"}).code == InputError);
  CHECK(gkz_run({"-i", temp_file("ds.json", R"({"d":2,"s":2,"matrix":[[1,1]]})"), "classify"}).code == InputError);
  CHECK(gkz_run({"classify"}).code == InputError);
  CHECK(gkz_run({"bogus"}).code == InputError);

  auto strip = [](json j) {
    j.erase("seconds");
    return j.dump();
  };
  for (const char* name : {"scroll", "six_points_1_1", "product_1_2"}) {
    auto a = report({"--json", "-i", fixture(name), "classify"});
    auto b = report({"--json", "-i", fixture(name), "classify"});
    CHECK(strip(a) == strip(b));
    CHECK(a["input_digest"].get<std::string>().size() == 16);
  }
  CHECK(digest("") == "cbf29ce484222325");
}

TEST_CASE("JSON schemas round trip") {
  std::ifstream in(fixture("scroll"));
  json fx = json::parse(in);
  auto a = configuration_from_json(fx);
  auto back = configuration_to_json(a);
  CHECK(back["matrix"] == fx["matrix"]);
  CHECK(configuration_from_json(back).matrix() == a.matrix());

  auto p = residue_problem_from_json(json::parse(R"({"r":1,"m":2,"coeffs":[["1/2",2,"-3"],[1,1,1]],"a":[1]})"));
  auto pj = residue_problem_to_json(p);
  CHECK(pj["coeffs"][0] == json::parse(R"(["1/2","2","-3"])"));
  auto p2 = residue_problem_from_json(pj);
  CHECK(p2.coeffs == p.coeffs);
  CHECK(p2.a == p.a);
  CHECK(rational_from_json(rational_to_json(exact::Rational(-7, 3))) == exact::Rational(-7, 3));
  CHECK_THROWS_AS(rational_from_json(json(1.5)), InvalidInput);
}
