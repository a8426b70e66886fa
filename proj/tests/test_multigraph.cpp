#include "flowpoly/errors.hpp"
#include "flowpoly/families.hpp"
#include "flowpoly/multigraph.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>

using namespace flowpoly;
using T = Multigraph::Triple;

namespace {

Multigraph two_triangles_bridge() {
  return Multigraph(6, {T{0, 1, 1}, T{1, 2, 1}, T{2, 0, 1}, T{3, 4, 1}, T{4, 5, 1}, T{5, 3, 1}, T{2, 3, 1}});
}

Multigraph two_triangles_sharing_vertex() {
  return Multigraph(5, {T{0, 1, 1}, T{1, 2, 1}, T{2, 0, 1}, T{2, 3, 1}, T{3, 4, 1}, T{4, 2, 1}});
}

std::vector<std::pair<Vertex, Vertex>> as_pairs(const CutSet& c) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (const auto& e : c.edges) out.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("construction merges repeated pairs and counts loops") {
  Multigraph g(3, {T{0, 1, 1}, T{1, 0, 2}, T{2, 2, 1}, T{2, 2, 1}});
  CHECK(g.order() == 3);
  CHECK(g.size() == 5);
  CHECK(g.multiplicity(0, 1) == 3);
  CHECK(g.multiplicity(1, 0) == 3);
  CHECK(g.loops(2) == 2);
  CHECK(g.total_loops() == 2);
  CHECK(g.degree(2) == 4);
  CHECK(g.degree(0) == 3);
  CHECK(g.edge_list().size() == 5);
  CHECK_THROWS_AS(Multigraph(2, {T{0, 2, 1}}), InvalidEdge);
}

TEST_CASE("deleting edges") {
  const auto z3 = make_z3();
  const auto h = delete_edge(z3, EdgeRef{0, 1, 0});
  CHECK(h.size() == 2);
  CHECK(h.multiplicity(0, 1) == 2);

  const Multigraph looped(2, {T{0, 1, 1}, T{1, 1, 2}});
  const auto dl = delete_edge(looped, EdgeRef{1, 1, 0});
  CHECK(dl.loops(1) == 1);
  CHECK(dl.multiplicity(0, 1) == 1);

  const auto k4 = delete_edge(make_k4(), EdgeRef{0, 1, 0});
  CHECK(sorted_degrees(k4) == std::vector<std::uint32_t>{3, 3, 2, 2});

  CHECK_THROWS_AS(delete_edge(z3, EdgeRef{0, 1, 3}), InvalidEdge);
  CHECK_THROWS_AS(delete_edge(z3, EdgeRef{0, 0, 0}), InvalidEdge);
}

TEST_CASE("contracting edges") {
  const auto c = contract_edge(make_z3(), EdgeRef{0, 1, 0});
  CHECK(c.order() == 1);
  CHECK(c.loops(0) == 2);

  const auto k = contract_edge(make_k4(), EdgeRef{0, 1, 0});
  CHECK(k.order() == 3);
  CHECK(k.size() == 5);
  std::vector<std::uint32_t> mults;
  for (const auto& cl : k.classes()) mults.push_back(cl.mult);
  std::sort(mults.begin(), mults.end());
  CHECK(mults == std::vector<std::uint32_t>{1, 2, 2});

  const auto tri = contract_edge(make_cycle(4), EdgeRef{0, 1, 0});
  CHECK(tri == make_cycle(3));

  CHECK_THROWS_AS(contract_edge(make_cycle(1), EdgeRef{0, 0, 0}), InvalidOperation);
}

TEST_CASE("subdividing and desubdividing") {
  const auto z3 = make_z3();
  const auto s = subdivide(z3, EdgeRef{0, 1, 0});
  CHECK(s.order() == 3);
  CHECK(s.degree(2) == 2);
  CHECK(desubdivide(s, 2) == z3);

  const auto digon = desubdivide(make_cycle(3), 1);
  CHECK(digon.order() == 2);
  CHECK(digon.multiplicity(0, 1) == 2);

  // Both neighbours coincide: a loop appears.
  const auto loop = desubdivide(make_cycle(2), 1);
  CHECK(loop.order() == 1);
  CHECK(loop.loops(0) == 1);

  CHECK_THROWS_AS(desubdivide(make_k4(), 0), InvalidOperation);
  CHECK_THROWS_AS(desubdivide(make_cycle(1), 0), InvalidOperation);
}

TEST_CASE("other constructions") {
  CHECK(remove_loops(make_l4_loops(3)) == make_l4());
  const auto u = disjoint_union(make_z3(), make_k4());
  CHECK(u.order() == 6);
  CHECK(u.size() == 9);
  const std::vector<Vertex> keep{0, 1, 2};
  const auto ind = induced_subgraph(make_k4(), keep);
  CHECK(ind == make_cycle(3));
  const std::vector<Vertex> perm{1, 0, 3, 2};
  const auto p = permute(make_l4(), perm);
  CHECK(p.size() == 6);
  CHECK(p.multiplicity(1, 0) == 2);
  CHECK(p.multiplicity(2, 3) == 2);
  CHECK(p.multiplicity(0, 3) == 1);
  CHECK(p.multiplicity(0, 2) == 0);
  CHECK(p.multiplicity(1, 2) == 1);
}

TEST_CASE("components") {
  CHECK(components(make_z3()).size() == 1);
  CHECK(components(disjoint_union(make_z3(), make_k4())).size() == 2);
  CHECK(components(Multigraph(3)).size() == 3);
  CHECK_FALSE(is_connected(Multigraph(3)));
  CHECK(is_connected(Multigraph(1)));
}

TEST_CASE("bridges") {
  const auto b = bridges(two_triangles_bridge());
  REQUIRE(b.size() == 1);
  CHECK(b[0] == EdgeClass{2, 3, 1});
  CHECK(bridges(make_k4()).empty());
  CHECK(bridges(make_k2h(2)).empty());
  CHECK(is_bridgeless(make_l4()));
}

TEST_CASE("blocks") {
  CHECK(blocks(make_k4()) == 1);
  CHECK(blocks(two_triangles_sharing_vertex()) == 2);
  CHECK(blocks(make_l4()) == 1);
  CHECK(blocks(make_l4_loops(2)) == 3);
  CHECK(blocks(two_triangles_bridge()) == 3);
  CHECK_THROWS_AS(blocks(disjoint_union(make_z3(), make_z3())), DomainError);
}

TEST_CASE("small edge cuts") {
  CHECK(small_edge_cuts(make_l4(), 2).size() == 1);
  CHECK(small_edge_cuts(make_k4(), 2).empty());
  const auto k4_three = small_edge_cuts(make_k4(), 3);
  CHECK(k4_three.size() == 4);
  for (const auto& c : k4_three) CHECK(c.size() == 3);
  const auto z3 = small_edge_cuts(make_z3(), 3);
  REQUIRE(z3.size() == 1);
  CHECK(z3[0].size() == 3);
  CHECK(z3[0].side == std::vector<Vertex>{0});
  CHECK(small_edge_cuts(make_z3(), 2).empty());
}

TEST_CASE("structure queries agree with brute force on random graphs") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 2 + trial % 6;
    const std::size_t m = n - 1 + trial % 5;
    auto g = oracle::random_connected(rng, n, m);
    if (trial % 3 == 0) g = disjoint_union(g, oracle::random_connected(rng, 3, 3));
    CHECK(components(g).size() == oracle::brute_force_components(g));
    CHECK(bridges(g).size() == oracle::brute_force_bridge_count(g));
    if (!is_connected(g) || g.size() - g.total_loops() > 12) continue;
    std::set<std::vector<std::pair<Vertex, Vertex>>> ours;
    for (const auto& c : small_edge_cuts(g, 3)) {
      CHECK(ours.insert(as_pairs(c)).second);
      // The side holds vertex 0 and is exactly one shore of the cut.
      CHECK(std::find(c.side.begin(), c.side.end(), 0u) != c.side.end());
    }
    CHECK(ours == oracle::brute_force_cuts(g, 3));
  }
}

TEST_CASE("edge connectivity and vertex 3-connectivity") {
  CHECK(is_k_edge_connected(make_k4(), 3));
  CHECK_FALSE(is_k_edge_connected(make_l4(), 3));
  CHECK(is_k_edge_connected(make_l4(), 2));
  CHECK_FALSE(is_k_edge_connected(two_triangles_bridge(), 2));
  CHECK(is_3_connected(make_k4()));
  CHECK(is_3_connected(make_k33()));
  CHECK(is_3_connected(make_prism()));
  CHECK_FALSE(is_3_connected(make_l4()));
  CHECK_FALSE(is_3_connected(make_z3_necklace(8)));
}

TEST_CASE("degree queries") {
  CHECK(is_cubic(make_k4()));
  CHECK(near_cubic_center(make_k4()) == Vertex{0});
  const auto k4l = make_k4_loops(1);
  CHECK(near_cubic_center(k4l) == Vertex{0});
  CHECK(k4l.degree(0) == 5);
  CHECK_FALSE(near_cubic_center(make_cycle(4)).has_value());
  CHECK(is_simple(make_k4()));
  CHECK_FALSE(is_simple(make_l4()));
  CHECK_FALSE(is_simple(make_k4_loops(1)));
  const auto prof = degree_profile(make_l4_loops(1));
  CHECK(prof.at(0) == 5);
  CHECK(prof.at(1) == 3);
}
