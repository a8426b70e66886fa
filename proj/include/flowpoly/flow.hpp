#pragma once

#include "flowpoly/canonical.hpp"
#include "flowpoly/multigraph.hpp"
#include "flowpoly/polynomial.hpp"

#include <cstdint>
#include <optional>
#include <shared_mutex>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace flowpoly {

enum class Engine { oracle, deletion_contraction, decomposition };
enum class Method { automatic, oracle, dc, decompose };

std::string_view to_string(Engine e);
std::string_view to_string(Method m);
/// "auto", "oracle", "dc", "decompose"
Method parse_method(std::string_view text);

struct FlowStats {
  std::uint64_t nodes = 0;
  std::uint64_t cache_hits = 0;
  std::uint64_t pieces = 0;
};

struct FlowResult {
  IntPoly poly;
  Engine engine = Engine::deletion_contraction;
  FlowStats stats;
};

/// Thread-safe map from canonical key to flow polynomial. Inserts are
/// idempotent: the first value stored for a key wins.
class MemoCache {
 public:
  std::optional<IntPoly> lookup(const CanonicalKey& key) const;
  void insert(const CanonicalKey& key, const IntPoly& poly);
  [[nodiscard]] std::size_t size() const;
  void clear();
  /// Entries sorted by key.
  [[nodiscard]] std::vector<std::pair<CanonicalKey, IntPoly>> snapshot() const;

  /// Process-wide cache used when FlowOptions does not name one.
  static MemoCache& global();

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<CanonicalKey, IntPoly, CanonicalKeyHash> map_;
};

struct FlowOptions {
  /// flow_oracle refuses graphs with more edges than this.
  std::size_t oracle_limit = 20;
  /// nullptr disables memoization.
  MemoCache* cache = &MemoCache::global();
  /// Also split along 3-edge cuts in flow_decompose.
  bool use_three_cuts = true;
};

/// Subset expansion over all 2^m edge subsets, each parallel copy and loop a
/// distinct element. Throws LimitExceeded when m > oracle_limit.
FlowResult flow_oracle(const Multigraph& g, const FlowOptions& opts = {});

/// Deletion-contraction with component, bridge, loop and desubdivision rules,
/// memoized by canonical key.
FlowResult flow_dc(const Multigraph& g, const FlowOptions& opts = {});

/// Splits along edge cuts of size 2 (then 3) whose sides both have at least
/// two vertices and recombines F(G) = F(G1) F(G2) / F(K2^h). Pieces without
/// such a cut go to flow_dc. Throws DomainError on disconnected or bridged
/// input, InexactDivision if recombination does not divide.
FlowResult flow_decompose(const Multigraph& g, const FlowOptions& opts = {});

/// `automatic` decomposes when a usable small cut exists and otherwise runs
/// deletion-contraction; disconnected input is handled per component.
FlowResult flow(const Multigraph& g, Method method = Method::automatic, const FlowOptions& opts = {});

/// (-1)^(m-n+1) F(G,-t). Throws DomainError on disconnected input.
IntPoly tau(const Multigraph& g, const FlowOptions& opts = {});

/// The contraction of G across a cut: `keep` stays, every other vertex merges
/// into one new vertex (last index) and the edges among them disappear.
Multigraph contract_side(const Multigraph& g, std::span<const Vertex> keep);

struct Decomposition {
  /// 3-edge-connected cubic pieces, sorted by (order, canonical key).
  std::vector<Multigraph> pieces;
  /// Number of splits performed.
  std::size_t k = 0;
};

/// Repeatedly replaces a 2-edge cut {uv, u'v'} (u, u' on one side) by the
/// edges uu' and vv' until no piece has a 2-edge cut. Throws DomainError
/// unless G is connected, bridgeless and cubic.
Decomposition two_edge_cut_decomposition(const Multigraph& g);

}  // namespace flowpoly
