#pragma once

// Slow, independent reference implementations used to cross-check the library.

#include "flowpoly/multigraph.hpp"
#include "flowpoly/polynomial.hpp"

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using flowpoly::Multigraph;
using flowpoly::Vertex;

/// Number of nowhere-zero Z_k flows, by trying every edge labelling. Each
/// copy of an edge is oriented from the smaller to the larger endpoint.
std::uint64_t count_nowhere_zero_flows(const Multigraph& g, unsigned k);

/// Minimal edge cuts of size <= max_size found by removing every subset of
/// edge copies; each cut is returned as a sorted list of (u, v) copies.
std::set<std::vector<std::pair<Vertex, Vertex>>> brute_force_cuts(const Multigraph& g, std::size_t max_size);

/// Lexicographically smallest upper-triangle encoding over all vertex
/// permutations. n <= 8.
std::string brute_force_canonical(const Multigraph& g);

/// Isomorphism classes of connected cubic multigraphs (loops allowed) on n
/// vertices from every labelled multiplicity matrix with row sums 3, as the
/// set of brute_force_canonical strings. n <= 6.
std::set<std::string> naive_cubic_classes(std::size_t n);
/// The same labelled matrices deduplicated by the library's canonical key
/// (hex). Usable up to n = 8.
std::set<std::string> naive_cubic_keys(std::size_t n);

/// Bridges by deleting each edge copy and counting components.
std::size_t brute_force_bridge_count(const Multigraph& g);

/// Components by repeated edge relaxation.
std::size_t brute_force_components(const Multigraph& g);

/// Random connected multigraph: a random spanning tree plus extra edges
/// (parallel edges and loops allowed).
Multigraph random_connected(std::mt19937_64& rng, std::size_t n, std::size_t m, bool allow_loops = true);

/// Random connected bridgeless multigraph built from a cycle by adding `ears`
/// ears, so m - n == ears.
Multigraph random_bridgeless(std::mt19937_64& rng, std::size_t cycle_len, std::size_t ears, std::size_t max_ear_len);

/// Product of (t - r) over the given roots.
flowpoly::IntPoly from_roots(const std::vector<long long>& roots);

}  // namespace oracle
