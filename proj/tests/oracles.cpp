#include "oracles.hpp"

#include "flowpoly/canonical.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace oracle {

namespace {

std::vector<std::pair<Vertex, Vertex>> copies(const Multigraph& g) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (const auto& t : g.triples()) {
    for (std::uint32_t i = 0; i < t.count; ++i) out.emplace_back(std::min(t.u, t.v), std::max(t.u, t.v));
  }
  return out;
}

std::size_t components_of(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges,
                          const std::vector<char>& removed, std::vector<std::size_t>* label = nullptr) {
  std::vector<std::size_t> comp(n);
  std::iota(comp.begin(), comp.end(), 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (removed[i]) continue;
      auto [u, v] = edges[i];
      const auto lo = std::min(comp[u], comp[v]);
      if (comp[u] != lo || comp[v] != lo) {
        comp[u] = comp[v] = lo;
        changed = true;
      }
    }
  }
  std::set<std::size_t> distinct(comp.begin(), comp.end());
  if (label) *label = comp;
  return distinct.size();
}

}  // namespace

std::uint64_t count_nowhere_zero_flows(const Multigraph& g, unsigned k) {
  const auto edges = copies(g);
  const std::size_t loops = g.total_loops();
  // A loop carries any nonzero value without affecting conservation.
  std::uint64_t loop_factor = 1;
  for (std::size_t i = 0; i < loops; ++i) loop_factor *= (k - 1);
  std::vector<std::pair<Vertex, Vertex>> proper;
  for (const auto& e : edges) {
    if (e.first != e.second) proper.push_back(e);
  }
  std::vector<unsigned> value(proper.size(), 1);
  std::uint64_t count = 0;
  for (;;) {
    std::vector<long long> net(g.order(), 0);
    for (std::size_t i = 0; i < proper.size(); ++i) {
      net[proper[i].first] += value[i];
      net[proper[i].second] -= value[i];
    }
    bool ok = std::all_of(net.begin(), net.end(), [&](long long x) { return ((x % k) + k) % k == 0; });
    if (ok) ++count;
    std::size_t i = 0;
    while (i < value.size() && value[i] == k - 1) value[i++] = 1;
    if (i == value.size()) break;
    ++value[i];
  }
  return count * loop_factor;
}

std::set<std::vector<std::pair<Vertex, Vertex>>> brute_force_cuts(const Multigraph& g, std::size_t max_size) {
  auto edges = copies(g);
  std::vector<std::pair<Vertex, Vertex>> proper;
  for (const auto& e : edges) {
    if (e.first != e.second) proper.push_back(e);
  }
  const std::size_t m = proper.size();
  std::vector<char> removed(m, 0);
  const std::size_t base = components_of(g.order(), proper, removed);
  std::set<std::vector<std::pair<Vertex, Vertex>>> out;
  std::vector<std::size_t> label;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) > max_size) continue;
    for (std::size_t i = 0; i < m; ++i) removed[i] = (mask >> i) & 1;
    if (components_of(g.order(), proper, removed, &label) != base + 1) continue;
    bool crossing = true;
    std::vector<std::pair<Vertex, Vertex>> cut;
    for (std::size_t i = 0; i < m; ++i) {
      if (!removed[i]) continue;
      crossing = crossing && label[proper[i].first] != label[proper[i].second];
      cut.push_back(proper[i]);
    }
    if (!crossing) continue;
    std::sort(cut.begin(), cut.end());
    out.insert(cut);
  }
  return out;
}

std::string brute_force_canonical(const Multigraph& g) {
  const std::size_t n = g.order();
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0u);
  std::string best;
  bool first = true;
  do {
    // perm[i] is the original vertex placed at position i.
    std::string enc;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        enc.push_back(static_cast<char>(i == j ? g.loops(perm[i]) : g.multiplicity(perm[i], perm[j])));
      }
    }
    if (first || enc < best) {
      best = enc;
      first = false;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::to_string(n) + ":" + best;
}

namespace {

void for_each_labelled_cubic(std::size_t n, const std::function<void(const Multigraph&)>& visit) {
  // Fill the upper triangle (diagonal = loops, weight 2) row by row.
  std::vector<std::vector<unsigned>> a(n, std::vector<unsigned>(n, 0));
  std::vector<unsigned> deg(n, 0);
  std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t i, std::size_t j) {
    if (i == n) {
      std::vector<Multigraph::Triple> ts;
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u; v < n; ++v) {
          if (a[u][v]) ts.push_back({u, v, a[u][v]});
        }
      }
      Multigraph g(n, ts);
      if (flowpoly::is_connected(g)) visit(g);
      return;
    }
    if (j == n) {
      if (deg[i] == 3) fill(i + 1, i + 1);
      return;
    }
    const unsigned weight = i == j ? 2 : 1;
    for (unsigned c = 0;; ++c) {
      if (deg[i] + weight * c > 3 || (i != j && deg[j] + c > 3)) break;
      a[i][j] = c;
      deg[i] += weight * c;
      if (i != j) deg[j] += c;
      fill(i, j + 1);
      deg[i] -= weight * c;
      if (i != j) deg[j] -= c;
      a[i][j] = 0;
    }
  };
  fill(0, 0);
}

}  // namespace

std::set<std::string> naive_cubic_classes(std::size_t n) {
  std::set<std::string> out;
  for_each_labelled_cubic(n, [&](const Multigraph& g) { out.insert(brute_force_canonical(g)); });
  return out;
}

std::set<std::string> naive_cubic_keys(std::size_t n) {
  std::set<std::string> out;
  for_each_labelled_cubic(n, [&](const Multigraph& g) { out.insert(flowpoly::canonical_key(g).hex()); });
  return out;
}

std::size_t brute_force_bridge_count(const Multigraph& g) {
  auto edges = copies(g);
  std::vector<char> removed(edges.size(), 0);
  const std::size_t base = components_of(g.order(), edges, removed);
  std::size_t count = 0;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    removed[i] = 1;
    if (components_of(g.order(), edges, removed) > base) ++count;
    removed[i] = 0;
  }
  return count;
}

std::size_t brute_force_components(const Multigraph& g) {
  auto edges = copies(g);
  std::vector<char> removed(edges.size(), 0);
  return components_of(g.order(), edges, removed);
}

Multigraph random_connected(std::mt19937_64& rng, std::size_t n, std::size_t m, bool allow_loops) {
  std::vector<Multigraph::Triple> ts;
  for (Vertex v = 1; v < n; ++v) {
    std::uniform_int_distribution<Vertex> pick(0, v - 1);
    ts.push_back({pick(rng), v, 1});
  }
  std::uniform_int_distribution<Vertex> any(0, static_cast<Vertex>(n - 1));
  while (ts.size() < m) {
    const Vertex u = any(rng);
    const Vertex v = any(rng);
    if (u == v && !allow_loops) continue;
    ts.push_back({u, v, 1});
  }
  return Multigraph(n, ts);
}

Multigraph random_bridgeless(std::mt19937_64& rng, std::size_t cycle_len, std::size_t ears, std::size_t max_ear_len) {
  std::vector<Multigraph::Triple> ts;
  std::size_t n = cycle_len;
  if (cycle_len == 1) {
    ts.push_back({0, 0, 1});
  } else {
    for (std::size_t i = 0; i < cycle_len; ++i) {
      ts.push_back({static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % cycle_len), 1});
    }
  }
  std::uniform_int_distribution<std::size_t> len(0, max_ear_len);
  for (std::size_t e = 0; e < ears; ++e) {
    std::uniform_int_distribution<Vertex> any(0, static_cast<Vertex>(n - 1));
    const Vertex a = any(rng);
    const Vertex b = any(rng);
    const std::size_t inner = len(rng);
    Vertex prev = a;
    for (std::size_t i = 0; i < inner; ++i) {
      const auto x = static_cast<Vertex>(n++);
      ts.push_back({prev, x, 1});
      prev = x;
    }
    ts.push_back({prev, b, 1});
  }
  return Multigraph(n, ts);
}

flowpoly::IntPoly from_roots(const std::vector<long long>& roots) {
  flowpoly::IntPoly p = flowpoly::IntPoly::constant(1);
  for (long long r : roots) p *= flowpoly::IntPoly::linear(-r);
  return p;
}

}  // namespace oracle
