#include "cli.hpp"
#include "report.hpp"

#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = sblf::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(SBLF_TEST_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("word commands") {
  CHECK(run({"word", "reduce", "b b"}).out == "e\n");
  CHECK(run({"word", "reduce", "a", "a", "a", "b"}).out == "b\n");
  CHECK(run({"word", "multiply", "a b", "b a2"}).out == "e\n");
  CHECK(run({"word", "inverse", "a b"}).out == "b a2\n");
  CHECK(run({"word", "t", "a b a2"}).out == "a2 b a\n");
  CHECK(run({"word", "eval", "- a b a"}).out == "[[-1,0],[-1,-1]]\n");
  CHECK(run({"word", "power", "X1", "-2"}).out == "a2 b a b a2\n");
  CHECK(run({"word", "reduce", "c"}).code == 2);
}

TEST_CASE("matrix commands") {
  CHECK(run({"matrix", "word", "[[1,0],[1,1]]"}).out == "+ a b a\n");
  CHECK(run({"matrix", "generator", "X2"}).out == "[[1,-1],[0,1]]\n");
  CHECK(run({"matrix", "multiply", "[[1,0],[1,1]]", "[[1,0],[1,1]]"}).out == "[[1,0],[2,1]]\n");
  CHECK(run({"matrix", "inverse", "[[2,1],[1,1]]"}).out == "[[1,-1],[-1,2]]\n");
  CHECK(run({"matrix", "parabolic", "[[-1,-1],[4,3]]"}).out == "+ T(2,1)^1\n");
  CHECK(run({"matrix", "parabolic", "[[2,1],[1,1]]"}).code == 1);
  CHECK(run({"matrix", "twist", "1", "-1"}).out == "[[2,-1],[1,0]]\n");
  CHECK(run({"matrix", "apply-twist", "2", "1", "6", "1"}).out == "(2,3)\n");
  CHECK(run({"matrix", "boundary", "[[-1,0],[4,-1]]"}).out == "- [[1,0],[-4,1]]\n");
  CHECK(run({"matrix", "boundary", "[[1,-1],[0,1]]"}).code == 1);
  CHECK(run({"matrix", "word", "[[1,1],[1,1]]"}).code == 2);
  CHECK(run({"matrix", "word", "[[1,1],[1,1"}).code == 2);
}

TEST_CASE("system commands") {
  const Run product = run({"system", "product", "--normal", "S0 T(1,-1)"});
  CHECK(product.code == 0);
  CHECK(product.out == "- [[1,0],[-4,1]]\n");
  CHECK(run({"system", "compatible", "--normal", "T(10,6,1,-2,-6,-11)"}).out == "- [[1,0],[-24,1]]\n");
  CHECK(run({"system", "compatible", "--normal", "T(1,2)"}).code == 1);
  CHECK(run({"system", "expand", "--normal", "S1 T(0)"}).out == "[[1,0],[1,1]]\n[[1,-1],[0,1]]\n");
  CHECK(run({"system", "move", "--normal", "S1 T(1)", "forward", "1"}).code == 0);
  CHECK(run({"system", "move", "--normal", "S1 T(1)", "forward", "2"}).code == 2);
  CHECK(run({"system", "conjugate", "--normal", "S1", "[[1,0],[3,1]]"}).out == "[[1,0],[1,1]]\n");
  const Run search = run({"system", "search", "--normal", "S0 T(3,1)", "--to", "S0 T(1,-1)"});
  CHECK(search.code == 0);
  CHECK(search.out.rfind("found", 0) == 0);
  const Run inconclusive =
      run({"--budget", "10", "system", "search", "--normal", "T(10,6,1,-2,-6,-11)", "--to", "T(9,10,6,2,-2,-9)"});
  CHECK(inconclusive.code == 0);
  CHECK(inconclusive.out.rfind("inconclusive", 0) == 0);
  CHECK(run({"system", "product"}).code == 2);
  CHECK(run({"system", "search", "--normal", "S2", "--to", "S3"}).code == 2);
}

TEST_CASE("system files") {
  const std::string path = "sblf_cli_test_system.txt";
  {
    std::ofstream f(path);
    f << "X1\nX2\nX1\nX2\nX1\nX2\nX1\nX2\nX1\nX2\nX1\nX2\n";
  }
  const Run m = run({"system", "matsumoto", "--file", path});
  CHECK(m.code == 0);
  CHECK(m.out.rfind("found 0 moves", 0) == 0);
  {
    std::ofstream f(path);
    f << "X1\nX9\n";
  }
  const Run bad = run({"system", "product", "--file", path});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("error: 2:1:") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("classify commands") {
  CHECK(run({"classify", "solve", "--s", "4", "--bound", "25", "--filtered"}).out == "(3,4,3)\n(4,3,4)\n");
  CHECK(run({"classify", "solve", "--s", "2"}).out == "(2) x1^-2\n");
  CHECK(run({"classify", "solve", "--s", "1"}).code == 2);
  CHECK(run({"classify", "chi", "S2xS2 # 2CP2bar"}).out == "6\n");
  CHECK(run({"classify", "witness", "--tuple", "(3,4,3)"}).out == "irreducible\n");
  CHECK(run({"classify", "witness", "--tuple", "(1,1)"}).out.find("backward 1") != std::string::npos);
  CHECK(run({"classify", "table", "--r", "6"}).code == 2);
  const Run table = run({"classify", "table", "--r", "2"});
  CHECK(table.code == 0);
  CHECK(table.out.find("S0 T(2,0)  S2xS2 | S2~S2") != std::string::npos);
  CHECK(run({"classify", "identify", "--normal", "S1 T(2,0)"}).out == "S2xS2 # CP2bar | S2~S2 # CP2bar\n");
}

TEST_CASE("chart commands") {
  CHECK(run({"chart", "validate", data("comb.chart")}).out == "valid\n");
  const Run bad = run({"chart", "validate", data("degree_five.chart")});
  CHECK(bad.code == 1);
  CHECK(bad.out.rfind("C1 ", 0) == 0);
  CHECK(run({"chart", "validate", "no-such-file.chart"}).code == 2);
  CHECK(run({"chart", "boundary", data("outward_leaf.chart")}).out == "((1,-1))\n");
  CHECK(run({"chart", "decompose", data("comb.chart")}).out.rfind("3 units, 2 combs", 0) == 0);
  CHECK(run({"chart", "decompose", "--sequence", "((2,+1))"}).code == 1);
  CHECK(run({"chart", "word", data("comb.chart"), "--path", "1+ 2+"}).code == 0);
  CHECK(run({"chart", "word", data("comb.chart"), "--path", "1+ 1-"}).out == "+ e\n");
  CHECK(run({"chart", "format", data("bad_boundary.chart")}).out ==
        "vertex 1 interior-1\nvertex 2 boundary\nedge 1 2 1 2\nboundary 2\n");
  CHECK(run({"chart", "tables"}).out == "756 identities over 36 cases, 0 mismatches\n");
}

TEST_CASE("global flags") {
  const Run machine = run({"--format", "machine", "system", "product", "--normal", "S0 T(1,-1)"});
  const auto j = nlohmann::json::parse(machine.out);
  CHECK(j["sign"] == "-");
  CHECK(j["m"] == "-4");
  CHECK(run({"--format", "xml", "word", "reduce", "a"}).code == 2);
  CHECK(run({"--bound", "0", "classify", "solve", "--s", "2"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"word"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  const std::string path = "sblf_cli_test_out.txt";
  CHECK(run({"--out", path, "word", "reduce", "a a"}).out.empty());
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  CHECK(line == "a2");
  std::remove(path.c_str());
}

TEST_CASE("report rendering") {
  sblf::cli::Report r;
  r.suite = "demo";
  r.add("b", "x=y", true, "fine");
  r.add("a", "y=z", sblf::cli::Status::Inconclusive, "open");
  r.sort();
  CHECK(r.rows.front().id == "a");
  CHECK_FALSE(r.any_fail());
  CHECK(r.render_machine() ==
        "{\"id\":\"a\",\"anchor\":\"y=z\",\"status\":\"inconclusive\",\"detail\":\"open\"}\n"
        "{\"id\":\"b\",\"anchor\":\"x=y\",\"status\":\"pass\",\"detail\":\"fine\"}\n");
  r.add("c", "", false, "broken");
  CHECK(r.any_fail());
}

TEST_CASE("verify-paper is deterministic") {
  const Run first = run({"--format", "machine", "verify-paper"});
  const Run second = run({"--format", "machine", "verify-paper"});
  CHECK(first.out == second.out);
  CHECK(first.code == 1);
  std::istringstream lines(first.out);
  std::size_t rows = 0;
  std::size_t fails = 0;
  for (std::string l; std::getline(lines, l); ++rows) {
    const auto j = nlohmann::json::parse(l);
    CHECK(j.contains("anchor"));
    if (j["status"] == "fail") ++fails;
  }
  CHECK(rows > 200);
  CHECK(fails == 2);
}
