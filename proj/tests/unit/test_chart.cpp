#include "fixtures.hpp"

#include <sblf/chart.hpp>
#include <sblf/errors.hpp>

#include <doctest.h>

#include <fstream>
#include <random>
#include <set>
#include <sstream>

using namespace sblf;

namespace {

std::set<std::string> codes(const Chart& chart) {
  std::set<std::string> out;
  for (const Violation& v : validate(chart)) out.insert(v.code());
  return out;
}

std::string read(const std::string& name) {
  std::ifstream in(std::string(SBLF_TEST_DATA_DIR) + "/" + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t error_line(std::string_view text) {
  try {
    parse_chart(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_CASE("data files match the built-in fixtures") {
  CHECK(read("comb.chart") == fixtures::kCombChart);
  CHECK(read("hexagon_pair.chart") == fixtures::kHexagonPairChart);
  CHECK(read("degree_five.chart") == fixtures::kDegreeFiveChart);
  CHECK(read("outward_leaf.chart") == fixtures::kOutwardLeafChart);
  CHECK(read("bad_boundary.chart") == fixtures::kBadBoundaryChart);
}

TEST_CASE("valid charts") {
  CHECK(validate(Chart{}).empty());
  CHECK(validate(parse_chart("")).empty());
  CHECK(codes(parse_chart(fixtures::kCombChart)).empty());
  CHECK(codes(parse_chart(fixtures::kHexagonPairChart)).empty());
}

TEST_CASE("seeded invalid charts") {
  CHECK(codes(parse_chart(fixtures::kDegreeFiveChart)) == std::set<std::string>{"C1"});
  CHECK(codes(parse_chart(fixtures::kOutwardLeafChart)) == std::set<std::string>{"C4"});
  CHECK(codes(parse_chart(fixtures::kBadBoundaryChart)) == std::set<std::string>{"C8"});
}

TEST_CASE("other violations") {
  CHECK(codes(parse_chart("vertex 1 interior-1\nvertex 2 interior-1\nedge 1 1 2 3\n")).count("C3"));
  CHECK(codes(parse_chart("vertex 1 boundary\nvertex 2 boundary\nvertex 3 interior-1\n"
                          "edge 1 1 3 1\nedge 2 2 3 1\nboundary 1 2\n"))
            .count("C1"));
  CHECK(codes(parse_chart("vertex 1 boundary\nvertex 2 interior-1\nboundary 1\n")).count("C1"));
  CHECK(codes(parse_chart("vertex 1 boundary\nboundary 1\n")) == std::set<std::string>{"C2"});
  // no rotation at a degree-6 vertex
  std::string hex(fixtures::kHexagonPairChart);
  hex = hex.substr(0, hex.find("rot 1"));
  CHECK(codes(parse_chart(hex)).count("C5"));
  // labels that do not alternate
  CHECK(codes(parse_chart("vertex 1 interior-6\nvertex 2 interior-6\n"
                          "edge 1 2 1 1\nedge 2 2 1 1\nedge 3 2 1 1\nedge 4 1 2 2\nedge 5 1 2 1\nedge 6 1 2 2\n"
                          "rot 1 1 2 3 4 5 6\nrot 2 4 5 6 1 2 3\n"))
            .count("C5"));
  // boundary vertex left out of the order
  CHECK(codes(parse_chart("vertex 1 interior-1\nvertex 2 boundary\nedge 1 2 1 1\n")).count("C8"));
}

TEST_CASE("parse errors carry positions") {
  CHECK(error_line("vertex 1 interior\nvertex 1 boundary\n") == 2);
  CHECK(error_line("vertex 1 interior\nfrobnicate 3\n") == 2);
  CHECK(error_line("vertex 1 interior\nedge 1 1 1 1\n") == 2);
  CHECK(error_line("vertex 1 interior\n\nedge 1 1 9 1\n") == 3);
  CHECK(error_line("vertex 1 interior\nhoop 1 1\nhoop 1 2\n") == 3);
  CHECK(error_line("vertex 1\n") == 1);
  CHECK(error_line("vertex 1 kind\n") == 1);
  CHECK(error_line("boundary\nboundary\n") == 2);
  CHECK(error_line("vertex 1 interior-1\nedge 1 1 1 5000\n") == 2);
}

TEST_CASE("serialization round-trips") {
  for (std::string_view text : {fixtures::kCombChart, fixtures::kHexagonPairChart, fixtures::kDegreeFiveChart,
                                fixtures::kOutwardLeafChart, fixtures::kBadBoundaryChart}) {
    const Chart c = parse_chart(text);
    const std::string once = serialize(c);
    CHECK(parse_chart(once) == c);
    CHECK(serialize(parse_chart(once)) == once);
  }
}

TEST_CASE("boundary sequences") {
  const BoundarySeq seq = boundary_sequence(parse_chart(fixtures::kCombChart));
  REQUIRE(seq.size() == 15);
  CHECK(seq[0] == BoundaryPoint{1, Sign::Plus});
  CHECK(seq[1] == BoundaryPoint{2, Sign::Plus});
  CHECK(seq[14] == BoundaryPoint{1, Sign::Minus});
  const auto d = decompose_boundary(seq);
  REQUIRE(d);
  CHECK(d->combs() == 2);
  CHECK(d->singletons() == 3);
  CHECK(parse_boundary_sequence(to_string(seq)) == seq);
}

TEST_CASE("boundary decompositions") {
  const auto example = decompose_boundary(parse_boundary_sequence(fixtures::kExampleBoundarySequence));
  REQUIRE(example);
  CHECK(example->singletons() == 4);
  CHECK(example->combs() == 1);
  const auto empty = decompose_boundary({});
  REQUIRE(empty);
  CHECK(empty->blocks.empty());
  CHECK_FALSE(decompose_boundary(parse_boundary_sequence("((2,+1))")));
  // a comb may wrap around the end of the sequence
  const auto wrapped = decompose_boundary(parse_boundary_sequence("((1,+1),(2,+1),(1,+1),(1,-1),(2,+1),(1,+1),(2,+1))"));
  REQUIRE(wrapped);
  CHECK(wrapped->combs() == 1);
  // mixed signs inside six terms are not a comb
  CHECK_FALSE(decompose_boundary(parse_boundary_sequence("((2,+1),(1,+1),(2,-1),(1,+1),(2,+1),(1,+1))")));
  CHECK_THROWS_AS(parse_boundary_sequence("((3,+1))"), InputError);
  CHECK_THROWS_AS(parse_boundary_sequence("((1,+2))"), InputError);
}

TEST_CASE("intersection words") {
  const Chart c = parse_chart(fixtures::kCombChart);
  CHECK(to_string(intersection_word(c, {})) == "+ e");
  CHECK(intersection_matrix(c, parse_path("1+")) == generator(Generator::X1));
  CHECK(intersection_matrix(c, parse_path("2+")) == generator(Generator::X2));
  CHECK(intersection_matrix(c, parse_path("15-")) == generator(Generator::X2).inverse());
  CHECK(intersection_matrix(c, parse_path("3+ 3-")).is_identity());
  CHECK_THROWS_AS(intersection_word(c, parse_path("99+")), InputError);
  CHECK_THROWS_AS(parse_path("3"), InputError);

  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> edge(1, 15);
  std::uniform_int_distribution<int> coin(0, 1);
  auto random_path = [&] {
    PathCrossing p(static_cast<std::size_t>(edge(rng)));
    for (Crossing& x : p) x = {edge(rng), coin(rng) ? Sign::Plus : Sign::Minus};
    return p;
  };
  for (int trial = 0; trial < 200; ++trial) {
    const PathCrossing p = random_path();
    const PathCrossing q = random_path();
    PathCrossing pq = p;
    pq.insert(pq.end(), q.begin(), q.end());
    CHECK(intersection_matrix(c, pq) == intersection_matrix(c, p) * intersection_matrix(c, q));
    PathCrossing back(p.rbegin(), p.rend());
    for (Crossing& x : back) x.sign = negate(x.sign);
    CHECK(intersection_matrix(c, back) == intersection_matrix(c, p).inverse());
    CHECK(evaluate(intersection_word(c, p)) == intersection_matrix(c, p));
  }
}
