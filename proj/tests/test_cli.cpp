#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ncchrom/cli.hpp"

using namespace ncchrom;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(NCCHROM_DATA_DIR) + "/" + name; }
std::string golden(const std::string& name) { return std::string(NCCHROM_TEST_DIR) + "/golden/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string temp_file(const std::string& name, const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() / ("ncchrom_test_" + name);
  std::ofstream(path, std::ios::binary) << contents;
  return path.string();
}

bool has_line(const std::string& text, const std::string& line) {
  std::istringstream in(text);
  std::string l;
  while (std::getline(in, l))
    if (l == line) return true;
  return false;
}

}  // namespace

TEST_CASE("verify-k4 at n = 6 passes") {
  const auto r = run({"verify-k4", "--n", "6"});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "result = pass"));
  CHECK(has_line(r.out, "s_polynomial_failures = 0"));
  CHECK(has_line(r.out, "unit_absent = yes"));
}

TEST_CASE("chi-alg of K5") {
  const auto r = run({"chi-alg", "--graph", data("k5.col")});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "chi_alg = 4"));
}

TEST_CASE("chi-lc of C5 in kv format") {
  const auto r = run({"chi-lc", "--graph", data("c5.col"), "--format", "kv"});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "graph=c5.col"));
  CHECK(has_line(r.out, "invariant=chi_lc"));
  CHECK(has_line(r.out, "lo=3"));
  CHECK(has_line(r.out, "hi=3"));
  CHECK(has_line(r.out, "certificate=coloring"));
  CHECK(r.out.find("wall_time") == std::string::npos);
  const auto timed = run({"chi-lc", "--graph", data("c5.col"), "--format", "kv", "--timing"});
  CHECK(timed.out.find("wall_time=") != std::string::npos);
}

TEST_CASE("dim-lc of K2 with three colors") {
  const auto r = run({"dim-lc", "--graph", data("k2.col"), "--colors", "3"});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "dim = 6"));
  CHECK(has_line(r.out, "predicted = 6"));
  const auto c5 = run({"dim-lc", "--graph", data("k2.col"), "--target", data("c5.col")});
  CHECK(has_line(c5.out, "dim = 10"));
}

TEST_CASE("gb, nf and member round trip through a basis file") {
  const auto path = (std::filesystem::temp_directory_path() / "ncchrom_test_k1k2.basis").string();
  const auto r = run({"gb", "--graph", data("k1.col"), "--colors", "2", "--out", path});
  REQUIRE(r.code == 0);
  CHECK(has_line(r.out, "rules = 2"));
  CHECK(slurp(path) == "order: deglex\ngenerators: 1 2\nstatus: complete\nx[0,1] + x[0,0] - 1\nx[0,0]*x[0,0] - x[0,0]\n");

  const auto nf = run({"nf", "--basis", path, "--poly", "x[0,1]*x[0,1]"});
  CHECK(nf.code == 0);
  CHECK(has_line(nf.out, "nf = -x[0,0] + 1"));

  const auto m = run({"member", "--basis", path, "--poly", "x[0,0]*x[0,1]"});
  CHECK(has_line(m.out, "verdict = member"));
  const auto n = run({"member", "--basis", path, "--poly", "1/2"});
  CHECK(has_line(n.out, "verdict = non-member"));
  CHECK(has_line(n.out, "normal_form = 1/2"));
}

TEST_CASE("bounded basis files refuse non-membership") {
  const auto path = temp_file("bounded.basis", "order: deglex\ngenerators: 1 2\nstatus: bounded:8\nx[0,0]*x[0,1]\n");
  const auto r = run({"member", "--basis", path, "--poly", "x[0,1]"});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "verdict = unknown"));
}

TEST_CASE("the K3 four-color basis matches the golden file") {
  const auto r = run({"gb", "--graph", data("k3.col"), "--colors", "4"});
  REQUIRE(r.code == 0);
  CHECK(r.out == slurp(golden("k3_k4.basis")));
  const auto b = load_basis(golden("k3_k4.basis"));
  CHECK(serialize_basis(b) == r.out);
  CHECK(b.rules().size() == 66);
}

TEST_CASE("output does not depend on the thread count") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"gb", "--graph", data("k4.col"), "--colors", "4"},
           {"gb", "--graph", data("c5.col"), "--colors", "3", "--lc"},
           {"chi-lc", "--graph", data("prism.col")},
           {"dim-lc", "--graph", data("k3.col"), "--colors", "4"}}) {
    auto one = args, four = args;
    one.insert(one.end(), {"--threads", "1"});
    four.insert(four.end(), {"--threads", "4"});
    const auto a = run(one), b = run(four);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("crosscheck passes and is deterministic") {
  const auto a = run({"crosscheck", "--seed", "3", "--samples", "4"});
  CHECK(a.code == 0);
  CHECK(has_line(a.out, "failures = 0"));
  CHECK(has_line(a.out, "result = pass"));
  const auto b = run({"crosscheck", "--seed", "3", "--samples", "4", "--threads", "2"});
  CHECK(a.out == b.out);
}

TEST_CASE("usage errors exit with status 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"chi-alg", "--bogus"}).code == 2);
  CHECK(run({"chi-alg"}).code == 2);
  CHECK(run({"verify-k4", "--n", "9"}).code == 2);
  CHECK(run({"gb", "--graph", data("k2.col")}).code == 2);
  CHECK(run({"gb", "--graph", data("k2.col"), "--colors", "2", "--max-degree", "1"}).code == 2);
  CHECK(run({"dim-lc", "--graph", data("k2.col"), "--colors", "2", "--target", data("k3.col")}).code == 2);
  CHECK(run({"nf", "--basis", data("missing.basis"), "--poly", "1"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("malformed inputs exit with status 2 naming the line") {
  const auto bad_graph = temp_file("bad.col", "p edge 3 1\ne 1 1\n");
  const auto g = run({"chi-alg", "--graph", bad_graph});
  CHECK(g.code == 2);
  CHECK(g.err.find("line 2") != std::string::npos);

  const auto bad_basis = temp_file("bad.basis", "order: deglex\ngenerators: 1 2\nstatus: complete\nx[0,0] +\n");
  const auto b = run({"nf", "--basis", bad_basis, "--poly", "1"});
  CHECK(b.code == 2);
  CHECK(b.err.find("line 4") != std::string::npos);

  const auto basis = temp_file("ok.basis", "order: deglex\ngenerators: 1 2\nstatus: complete\nx[0,0]\n");
  CHECK(run({"nf", "--basis", basis, "--poly", "x[3,0]"}).code == 2);

  const auto bad_game = temp_file("bad.game", "game 2 2\ndeny 0 1 0 5\n");
  const auto gm = run({"gb", "--game", bad_game});
  CHECK(gm.code == 2);
  CHECK(gm.err.find("line 2") != std::string::npos);
}

TEST_CASE("game files drive gb") {
  const auto game = temp_file("k2.game", serialize_game(coloring_game(complete_graph(2), 2)));
  const auto a = run({"gb", "--game", game});
  const auto b = run({"gb", "--graph", data("k2.col"), "--colors", "2"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const auto asym = temp_file("asym.game", "game 2 1\ndeny 0 1 0 0\n");
  CHECK(run({"gb", "--game", asym}).code == 2);
}
