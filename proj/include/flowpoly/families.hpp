#pragma once

#include "flowpoly/multigraph.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace flowpoly {

/// Two vertices joined by three parallel edges (the theta graph).
Multigraph make_z3();
Multigraph make_k4();
/// C4 on 0-1-2-3 with 0-1 and 2-3 doubled.
Multigraph make_l4();
/// Two vertices joined by h parallel edges, h in {2, 3}.
Multigraph make_k2h(unsigned h);
/// n = 1 is a single loop, n = 2 a digon.
Multigraph make_cycle(std::size_t n);

/// Cyclic chain of n/2 digon gadgets: gadget i is x = 2i, y = 2i + 1 joined by
/// a double edge, with a single edge from y to the next gadget's x. n = 2 gives
/// Z3 and n = 4 gives L4.
Multigraph make_z3_necklace(std::size_t n);

/// Open ladder with doubled end rungs: top rail 0, 2, 4, ..., bottom rail
/// 1, 3, 5, ..., rung 2i-(2i+1) single except the first and last, which are
/// double. n = 4 gives L4.
Multigraph make_z3_ladder(std::size_t n);

/// Simple cubic graph made of two K4-minus-an-edge caps joined by a ladder of
/// n/2 - 4 rungs. Left cap is 0..3 with degree-2 vertices 0 and 3, rung i is
/// 4 + 2i (top) and 5 + 2i (bottom), right cap is the last four vertices with
/// the same layout. Vertex 0 of each cap sits on the top rail.
Multigraph make_gstar(std::size_t n);

/// L4 (resp. K4) with k loops at vertex 0.
Multigraph make_l4_loops(unsigned k);
Multigraph make_k4_loops(unsigned k);

/// K_{3,3}, sides {0,1,2} and {3,4,5}.
Multigraph make_k33();
/// Triangular prism: triangles 0-1-2 and 3-4-5 with rungs i-(i+3).
Multigraph make_prism();

/// Names accepted by make_family, in display order.
std::vector<std::string> family_names();
/// Builds a family by name; `n` is the family's size parameter (vertex count,
/// h for k2h, loop count for l4-loops and k4-loops) and is ignored by the
/// fixed graphs. Throws DomainError for unknown names.
Multigraph make_family(std::string_view name, std::size_t n);

}  // namespace flowpoly
