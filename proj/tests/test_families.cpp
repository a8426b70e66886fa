#include "flowpoly/canonical.hpp"
#include "flowpoly/errors.hpp"
#include "flowpoly/families.hpp"
#include "flowpoly/flow.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace flowpoly;

namespace {

IntPoly one_then_twos(std::size_t twos) {
  return IntPoly{-1, 1} * pow(IntPoly{-2, 1}, static_cast<unsigned>(twos));
}

std::vector<RationalRoot> necklace_roots(std::size_t n) {
  return {{Rational(1), 1}, {Rational(2), static_cast<unsigned>(n / 2)}};
}

}  // namespace

TEST_CASE("small fixed graphs") {
  CHECK(make_z3().size() == 3);
  CHECK(sorted_degrees(make_z3()) == std::vector<std::uint32_t>{3, 3});
  CHECK(canonical_key(make_z3()) == canonical_key(make_z3()));
  for (const auto& g : {make_z3(), make_k4(), make_l4(), make_k33(), make_prism()}) {
    CHECK(is_connected(g));
    CHECK(is_bridgeless(g));
    CHECK(is_cubic(g));
  }
  CHECK(make_l4().size() == 6);
  CHECK(flow(make_k2h(2)).poly == IntPoly{-1, 1});
  CHECK(flow(make_k2h(3)).poly == IntPoly{2, -3, 1});
  CHECK_THROWS_AS(make_k2h(4), DomainError);
  CHECK_THROWS_AS(make_cycle(0), DomainError);
}

TEST_CASE("cycles have flow polynomial t - 1") {
  for (std::size_t n = 1; n <= 10; ++n) {
    CHECK(make_cycle(n).size() == n);
    CHECK(flow(make_cycle(n)).poly == IntPoly{-1, 1});
  }
}

TEST_CASE("necklaces and ladders") {
  CHECK(make_z3_necklace(2) == make_z3());
  CHECK(is_isomorphic(make_z3_necklace(4), make_l4()));
  CHECK(is_isomorphic(make_z3_ladder(4), make_l4()));
  CHECK_THROWS_AS(make_z3_necklace(5), DomainError);
  CHECK(make_z3_ladder(2) == make_z3());
  CHECK_THROWS_AS(make_z3_ladder(3), DomainError);
  for (std::size_t n = 2; n <= 14; n += 2) {
    CAPTURE(n);
    const auto g = make_z3_necklace(n);
    CHECK(is_cubic(g));
    CHECK(is_bridgeless(g));
    CHECK(flow(g).poly == one_then_twos(n / 2));
    CHECK(rational_roots(flow(g).poly) == necklace_roots(n));
    const auto d = two_edge_cut_decomposition(g);
    CHECK(d.k == n / 2 - 1);
    CHECK(d.pieces.size() == n / 2);
    for (const auto& p : d.pieces) CHECK(is_isomorphic(p, make_z3()));
    if (n >= 4) {
      const auto l = make_z3_ladder(n);
      CHECK(is_cubic(l));
      CHECK(is_bridgeless(l));
      CHECK(flow(l).poly == one_then_twos(n / 2));
    }
  }
  // From 6 vertices on the two realizations differ.
  CHECK_FALSE(is_isomorphic(make_z3_necklace(6), make_z3_ladder(6)));
}

TEST_CASE("the extremal simple graph") {
  CHECK_THROWS_AS(make_gstar(6), DomainError);
  CHECK_THROWS_AS(make_gstar(9), DomainError);
  for (std::size_t n = 8; n <= 14; n += 2) {
    CAPTURE(n);
    const auto g = make_gstar(n);
    CHECK(g.order() == n);
    CHECK(is_simple(g));
    CHECK(is_cubic(g));
    CHECK(is_bridgeless(g));
    const IntPoly expected = one_then_twos(n / 2 - 2) * pow(IntPoly{-3, 1}, 2);
    CHECK(flow(g).poly == expected);
    CHECK(flow_dc(g).poly == expected);
    const auto d = two_edge_cut_decomposition(g);
    CHECK(d.k == n / 2 - 3);
    std::size_t k4 = 0, z3 = 0;
    for (const auto& p : d.pieces) {
      k4 += is_isomorphic(p, make_k4());
      z3 += is_isomorphic(p, make_z3());
    }
    CHECK(k4 == 2);
    CHECK(z3 == n / 2 - 4);
  }
}

TEST_CASE("looped variants") {
  for (unsigned k = 0; k <= 4; ++k) {
    CAPTURE(k);
    const auto l = make_l4_loops(k);
    const auto q = make_k4_loops(k);
    CHECK(is_connected(l));
    CHECK(near_cubic_center(l) == Vertex{0});
    CHECK(l.degree(0) == 3 + 2 * k);
    CHECK(flow(l).poly == pow(IntPoly{-1, 1}, k + 1) * pow(IntPoly{-2, 1}, 2));
    CHECK(flow(q).poly == pow(IntPoly{-1, 1}, k + 1) * IntPoly{-2, 1} * IntPoly{-3, 1});
  }
  CHECK(make_k4_loops(0) == make_k4());
  CHECK(near_cubic_center(make_k4_loops(1)) == Vertex{0});
}

TEST_CASE("families by name") {
  for (const auto& name : family_names()) {
    CAPTURE(name);
    std::size_t n = 8;
    if (name == "k2h") n = 3;
    if (name == "l4-loops" || name == "k4-loops") n = 2;
    CHECK(make_family(name, n).order() > 0);
  }
  CHECK(make_family("gstar", 10) == make_gstar(10));
  CHECK_THROWS_AS(make_family("petersen", 10), DomainError);
}
