#pragma once

#include "flowpoly/multigraph.hpp"

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace flowpoly {

/// Byte string identifying the isomorphism class of a multigraph, loops and
/// multiplicities included. Layout: order as two bytes, then the upper
/// triangle (diagonal = loop count) of the canonically relabeled
/// multiplicity matrix, row by row.
struct CanonicalKey {
  std::string bytes;

  [[nodiscard]] std::string hex() const;
  static CanonicalKey from_hex(std::string_view hex);

  friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
  friend std::strong_ordering operator<=>(const CanonicalKey& a, const CanonicalKey& b) {
    return a.bytes.compare(b.bytes) <=> 0;
  }
};

struct CanonicalKeyHash {
  std::size_t operator()(const CanonicalKey& k) const noexcept;
};

/// Canonical relabeling: result[i] is the original vertex placed at position i.
/// Partition refinement on (loops, degree, neighbor-color multisets) followed
/// by individualization with automorphism pruning.
std::vector<Vertex> canonical_labeling(const Multigraph& g);

CanonicalKey canonical_key(const Multigraph& g);

/// The graph relabeled into canonical order.
Multigraph canonical_form(const Multigraph& g);

/// Rebuilds the canonical form from its key. Throws ParseError on malformed keys.
Multigraph graph_from_key(const CanonicalKey& key);

bool is_isomorphic(const Multigraph& a, const Multigraph& b);

}  // namespace flowpoly
