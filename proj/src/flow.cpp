#include "flowpoly/flow.hpp"

#include "flowpoly/errors.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <numeric>

namespace flowpoly {

std::string_view to_string(Engine e) {
  switch (e) {
    case Engine::oracle: return "oracle";
    case Engine::deletion_contraction: return "deletion-contraction";
    case Engine::decomposition: return "decomposition";
  }
  return "unknown";
}

std::string_view to_string(Method m) {
  switch (m) {
    case Method::automatic: return "auto";
    case Method::oracle: return "oracle";
    case Method::dc: return "dc";
    case Method::decompose: return "decompose";
  }
  return "unknown";
}

Method parse_method(std::string_view text) {
  if (text == "auto") return Method::automatic;
  if (text == "oracle") return Method::oracle;
  if (text == "dc") return Method::dc;
  if (text == "decompose") return Method::decompose;
  throw ParseError("unknown method '" + std::string(text) + "' (expected auto|oracle|dc|decompose)");
}

// ------------------------------------------------------------------ MemoCache

std::optional<IntPoly> MemoCache::lookup(const CanonicalKey& key) const {
  std::shared_lock lock(mutex_);
  const auto it = map_.find(key);
  if (it == map_.end()) return std::nullopt;
  return it->second;
}

void MemoCache::insert(const CanonicalKey& key, const IntPoly& poly) {
  std::unique_lock lock(mutex_);
  map_.try_emplace(key, poly);
}

std::size_t MemoCache::size() const {
  std::shared_lock lock(mutex_);
  return map_.size();
}

void MemoCache::clear() {
  std::unique_lock lock(mutex_);
  map_.clear();
}

std::vector<std::pair<CanonicalKey, IntPoly>> MemoCache::snapshot() const {
  std::vector<std::pair<CanonicalKey, IntPoly>> out;
  {
    std::shared_lock lock(mutex_);
    out.assign(map_.begin(), map_.end());
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

MemoCache& MemoCache::global() {
  static MemoCache cache;
  return cache;
}

// ---------------------------------------------------------------------- oracle

namespace {

struct Dsu {
  explicit Dsu(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
  std::vector<std::uint32_t> parent;
};

constexpr std::size_t kOracleHardLimit = 30;

}  // namespace

FlowResult flow_oracle(const Multigraph& g, const FlowOptions& opts) {
  const std::size_t m = g.size();
  const std::size_t n = g.order();
  if (m > opts.oracle_limit || m > kOracleHardLimit) {
    throw LimitExceeded("subset-expansion oracle refuses a graph with " + std::to_string(m) +
                        " edges (limit " + std::to_string(std::min(opts.oracle_limit, kOracleHardLimit)) +
                        "): it sums over 2^m edge subsets");
  }
  const auto edges = g.edge_list();
  // |Z| + c(Z) - n equals the nullity of Z, which lies in [0, m].
  std::vector<long long> count(m + 1, 0);
  const std::uint64_t total = std::uint64_t{1} << m;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    Dsu dsu(n);
    std::size_t size = 0;
    std::size_t merges = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (!(mask >> i & 1)) continue;
      ++size;
      if (dsu.unite(edges[i].u, edges[i].v)) ++merges;
    }
    // c(Z) = n - merges, so |Z| + c(Z) - n = size - merges.
    const std::size_t exponent = size - merges;
    count[exponent] += ((m - size) % 2 == 0) ? 1 : -1;
  }
  std::vector<BigInt> coeffs(count.begin(), count.end());
  FlowResult result;
  result.poly = IntPoly(std::move(coeffs));
  result.engine = Engine::oracle;
  result.stats.nodes = total;
  return result;
}

// --------------------------------------------------------- deletion-contraction

namespace {

const IntPoly& t_minus_1() {
  static const IntPoly p = IntPoly::linear(-1);
  return p;
}

class DcEngine {
 public:
  explicit DcEngine(const FlowOptions& opts) : cache_(opts.cache) {}

  IntPoly run(Multigraph g) {
    ++stats.nodes;
    IntPoly factor = IntPoly::constant(1);
    for (;;) {
      if (g.order() == 0) return factor;
      if (!is_connected(g)) {
        for (const auto& comp : components(g)) {
          factor *= run(induced_subgraph(g, comp));
          if (factor.is_zero()) break;
        }
        return factor;
      }
      if (!is_bridgeless(g)) return {};
      if (const auto loops = g.total_loops(); loops > 0) {
        factor *= pow(t_minus_1(), loops);
        g = remove_loops(g);
        continue;
      }
      if (g.order() == 1) return factor;
      bool reduced = false;
      for (Vertex v = 0; v < g.order(); ++v) {
        if (g.degree(v) == 2) {
          g = desubdivide(g, v);
          reduced = true;
          break;
        }
      }
      if (!reduced) break;
    }

    std::optional<CanonicalKey> key;
    if (cache_ != nullptr) {
      try {
        key = canonical_key(g);
      } catch (const LimitExceeded&) {
        key.reset();
      }
      if (key) {
        if (auto hit = cache_->lookup(*key)) {
          ++stats.cache_hits;
          return factor * *hit;
        }
      }
    }

    const EdgeRef e = pivot(g);
    IntPoly value = run(contract_edge(g, e)) - run(delete_edge(g, e));
    if (key) cache_->insert(*key, value);
    return factor * value;
  }

  FlowStats stats;

 private:
  // An edge in a smallest parallel class at a vertex of maximum degree.
  static EdgeRef pivot(const Multigraph& g) {
    Vertex best = 0;
    for (Vertex v = 1; v < g.order(); ++v) {
      if (g.degree(v) > g.degree(best)) best = v;
    }
    const auto nbrs = g.neighbors(best);
    auto choice = nbrs.front();
    for (const auto& nb : nbrs) {
      if (nb.mult < choice.mult) choice = nb;
    }
    return EdgeRef{std::min(best, choice.vertex), std::max(best, choice.vertex), 0};
  }

  MemoCache* cache_;
};

std::optional<CutSet> find_usable_cut(const Multigraph& g, std::size_t max_size) {
  const auto cuts = small_edge_cuts(g, max_size);
  const std::size_t n = g.order();
  for (std::size_t h = 2; h <= max_size; ++h) {
    for (const auto& cut : cuts) {
      if (cut.size() == h && cut.side.size() >= 2 && n - cut.side.size() >= 2) return cut;
    }
  }
  return std::nullopt;
}

std::vector<Vertex> complement(std::size_t n, std::span<const Vertex> side) {
  std::vector<char> in(n, 0);
  for (const Vertex v : side) in[v] = 1;
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v) {
    if (!in[v]) out.push_back(v);
  }
  return out;
}

IntPoly decompose_rec(const Multigraph& g, const FlowOptions& opts, DcEngine& dc, FlowStats& stats) {
  const auto cut = find_usable_cut(g, opts.use_three_cuts ? 3 : 2);
  if (!cut) {
    ++stats.pieces;
    return dc.run(g);
  }
  const auto other = complement(g.order(), cut->side);
  const IntPoly left = decompose_rec(contract_side(g, cut->side), opts, dc, stats);
  const IntPoly right = decompose_rec(contract_side(g, other), opts, dc, stats);
  IntPoly divisor = t_minus_1();
  if (cut->size() == 3) divisor *= IntPoly::linear(-2);
  return exact_div(left * right, divisor);
}

}  // namespace

FlowResult flow_dc(const Multigraph& g, const FlowOptions& opts) {
  DcEngine engine(opts);
  FlowResult result;
  result.poly = engine.run(g);
  result.engine = Engine::deletion_contraction;
  result.stats = engine.stats;
  return result;
}

Multigraph contract_side(const Multigraph& g, std::span<const Vertex> keep) {
  const auto merged = static_cast<Vertex>(keep.size());
  std::vector<Vertex> index(g.order(), merged);
  for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = static_cast<Vertex>(i);
  std::vector<Multigraph::Triple> ts;
  for (const auto& t : g.triples()) {
    const Vertex a = index[t.u];
    const Vertex b = index[t.v];
    if (a == merged && b == merged) continue;
    ts.push_back({a, b, t.count});
  }
  return Multigraph(keep.size() + 1, ts);
}

FlowResult flow_decompose(const Multigraph& g, const FlowOptions& opts) {
  if (!is_connected(g)) throw DomainError("flow_decompose needs a connected graph");
  if (!is_bridgeless(g)) throw DomainError("flow_decompose needs a bridgeless graph");
  DcEngine dc(opts);
  FlowResult result;
  result.poly = decompose_rec(g, opts, dc, result.stats);
  result.engine = Engine::decomposition;
  result.stats.nodes = dc.stats.nodes;
  result.stats.cache_hits = dc.stats.cache_hits;
  return result;
}

FlowResult flow(const Multigraph& g, Method method, const FlowOptions& opts) {
  switch (method) {
    case Method::oracle: return flow_oracle(g, opts);
    case Method::dc: return flow_dc(g, opts);
    case Method::decompose: return flow_decompose(g, opts);
    case Method::automatic: break;
  }
  if (!is_connected(g)) {
    FlowResult result;
    result.poly = IntPoly::constant(1);
    result.engine = Engine::deletion_contraction;
    for (const auto& comp : components(g)) {
      const auto part = flow(induced_subgraph(g, comp), Method::automatic, opts);
      result.poly *= part.poly;
      if (part.engine == Engine::decomposition) result.engine = Engine::decomposition;
      result.stats.nodes += part.stats.nodes;
      result.stats.cache_hits += part.stats.cache_hits;
      result.stats.pieces += part.stats.pieces;
    }
    return result;
  }
  if (is_bridgeless(g) && find_usable_cut(g, opts.use_three_cuts ? 3 : 2)) return flow_decompose(g, opts);
  return flow_dc(g, opts);
}

IntPoly tau(const Multigraph& g, const FlowOptions& opts) {
  if (!is_connected(g)) throw DomainError("tau needs a connected graph");
  return tau_transform(flow(g, Method::automatic, opts).poly, static_cast<long long>(g.size()),
                       static_cast<long long>(g.order()));
}

// ----------------------------------------------------- 2-edge-cut decomposition

Decomposition two_edge_cut_decomposition(const Multigraph& g) {
  if (!is_connected(g)) throw DomainError("two_edge_cut_decomposition needs a connected graph");
  if (!is_cubic(g)) throw DomainError("two_edge_cut_decomposition needs a cubic graph");
  if (!is_bridgeless(g)) throw DomainError("two_edge_cut_decomposition needs a bridgeless graph");

  Decomposition out;
  std::vector<Multigraph> work{g};
  while (!work.empty()) {
    Multigraph piece = std::move(work.back());
    work.pop_back();
    std::optional<CutSet> cut;
    for (auto& c : small_edge_cuts(piece, 2)) {
      if (c.size() == 2) {
        cut = std::move(c);
        break;
      }
    }
    if (!cut) {
      out.pieces.push_back(std::move(piece));
      continue;
    }
    ++out.k;
    std::vector<char> in_side(piece.order(), 0);
    for (const Vertex v : cut->side) in_side[v] = 1;
    // Orient each cut edge as (endpoint in side, endpoint outside).
    std::array<std::pair<Vertex, Vertex>, 2> ends{};
    for (std::size_t i = 0; i < 2; ++i) {
      const auto& e = cut->edges[i];
      ends[i] = in_side[e.u] ? std::pair{e.u, e.v} : std::pair{e.v, e.u};
    }
    const auto other = complement(piece.order(), cut->side);
    auto build = [&](std::span<const Vertex> side, Vertex x, Vertex y) {
      std::vector<Vertex> index(piece.order(), 0);
      for (std::size_t i = 0; i < side.size(); ++i) index[side[i]] = static_cast<Vertex>(i);
      auto ts = induced_subgraph(piece, side).triples();
      ts.push_back({index[x], index[y], 1});
      return Multigraph(side.size(), ts);
    };
    work.push_back(build(cut->side, ends[0].first, ends[1].first));
    work.push_back(build(other, ends[0].second, ends[1].second));
  }
  std::vector<std::pair<CanonicalKey, Multigraph>> keyed;
  for (auto& p : out.pieces) keyed.emplace_back(canonical_key(p), std::move(p));
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.second.order() != b.second.order()) return a.second.order() < b.second.order();
    return a.first < b.first;
  });
  out.pieces.clear();
  for (auto& kp : keyed) out.pieces.push_back(std::move(kp.second));
  return out;
}

}  // namespace flowpoly
