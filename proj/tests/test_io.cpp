#include "flowpoly/canonical.hpp"
#include "flowpoly/errors.hpp"
#include "flowpoly/families.hpp"
#include "flowpoly/io.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <sstream>

using namespace flowpoly;

TEST_CASE("text format round-trips") {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 40; ++i) {
    const auto g = oracle::random_connected(rng, 1 + i % 7, i % 7 + 2);
    CHECK(parse_text_graph(to_text(g)) == g);
    CHECK(parse_text_graph(to_text_line(g)) == g);
  }
  CHECK(to_text_line(make_z3()) == "2 3 0 1 3");
}

TEST_CASE("text reader handles comments, several records and one-line records") {
  std::istringstream in("# two graphs\n2 3\n0 1 3\n\n1 1 0 0 1\n4 6 0 1 2 1 2 1 2 3 2 3 0 1\n");
  const auto gs = read_text_graphs(in);
  REQUIRE(gs.size() == 3);
  CHECK(gs[0] == make_z3());
  CHECK(gs[1] == make_cycle(1));
  CHECK(is_isomorphic(gs[2], make_l4()));
}

TEST_CASE("text reader rejects malformed input") {
  CHECK_THROWS_AS(parse_text_graph("2 3\n0 2 3\n"), ParseError);
  CHECK_THROWS_AS(parse_text_graph("2 3\n0 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_text_graph("2 x\n"), ParseError);
  CHECK_THROWS_AS(parse_text_graph("2 1\n0 1 -1\n"), ParseError);
  CHECK_THROWS_AS(parse_text_graph(""), ParseError);
  CHECK_THROWS_AS(parse_text_graph("2 3 0 1 3 2 3 0 1 3"), ParseError);
}

TEST_CASE("graph6 known encodings") {
  CHECK(to_graph6(make_k4()) == "C~");
  CHECK(is_isomorphic(read_graph6("C~"), make_k4()));
  CHECK(is_isomorphic(read_graph6(">>graph6<<C~"), make_k4()));
  const auto petersen = read_graph6("IheA@GUAo");
  CHECK(petersen.order() == 10);
  CHECK(petersen.size() == 15);
  CHECK(is_cubic(petersen));
  CHECK_THROWS_AS(read_graph6(":Fa@x^"), ParseError);
  CHECK_THROWS_AS(read_graph6("C"), ParseError);
  CHECK_THROWS_AS(to_graph6(make_l4()), InvalidOperation);
}

TEST_CASE("graph6 round-trips simple graphs") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 60; ++i) {
    const std::size_t n = 2 + i % 69;
    auto g = oracle::random_connected(rng, n, n + i % 5, false);
    std::vector<Multigraph::Triple> simple;
    for (const auto& c : g.classes()) simple.push_back({c.u, c.v, 1});
    const Multigraph s(n, simple);
    CHECK(read_graph6(to_graph6(s)) == s);
  }
}

TEST_CASE("format autodetection") {
  std::istringstream text("2 3\n0 1 3\n");
  CHECK(read_graphs(text).front() == make_z3());
  std::istringstream g6("C~\nEhEG\n");
  const auto gs = read_graphs(g6);
  REQUIRE(gs.size() == 2);
  CHECK(is_isomorphic(gs[0], make_k4()));
  CHECK(gs[1].order() == 6);
}
