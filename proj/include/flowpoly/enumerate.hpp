#pragma once

#include "flowpoly/multigraph.hpp"

#include <cstddef>
#include <functional>
#include <vector>

namespace flowpoly {

struct EnumSpec {
  std::size_t n = 2;
  /// false restricts the output to simple graphs.
  bool allow_multiedges = true;
  bool require_bridgeless = false;
  /// 1 = connected, 2 = bridgeless, 3 = 3-edge-connected.
  unsigned min_edge_connectivity = 1;
  /// Worker threads used to extend each level.
  std::size_t jobs = 1;
};

inline constexpr std::size_t kMaxEnumerationOrder = 14;

/// One canonical representative per isomorphism class of connected cubic
/// multigraphs on spec.n vertices passing the filters, sorted by canonical
/// key. Loops appear only when multiedges are allowed and bridges are too.
///
/// Graphs are grown two vertices at a time from the two cubic graphs on two
/// vertices, either by subdividing two edge slots and joining the new
/// vertices, or by hanging a looped vertex off a subdivided slot; every
/// connected cubic graph arises this way and each level is deduplicated by
/// canonical key. Throws DomainError for odd or too small n, LimitExceeded
/// past kMaxEnumerationOrder.
std::vector<Multigraph> enumerate_cubic(const EnumSpec& spec);

/// Calls visit on each graph of enumerate_cubic(spec), in the same order.
void for_each_cubic(const EnumSpec& spec, const std::function<void(const Multigraph&)>& visit);

std::size_t count_cubic(const EnumSpec& spec);

/// All connected cubic multigraphs (loops allowed) on n vertices, unfiltered.
std::vector<Multigraph> connected_cubic_level(std::size_t n, std::size_t jobs = 1);

}  // namespace flowpoly
