#include "flowpoly/multigraph.hpp"

#include "flowpoly/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

namespace flowpoly {

namespace {

std::string edge_name(const EdgeRef& e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")#" + std::to_string(e.instance);
}

void check_vertex(const Multigraph& g, Vertex v) {
  if (v >= g.order()) {
    throw InvalidEdge("vertex " + std::to_string(v) + " out of range for a graph of order " +
                      std::to_string(g.order()));
  }
}

// Union-find over vertex indices.
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

// Component count of g with the classes flagged in `removed` taken out.
std::size_t count_components_without(const Multigraph& g, const std::vector<char>& removed,
                                      std::vector<std::uint32_t>* labels = nullptr) {
  Dsu dsu(g.order());
  std::size_t comps = g.order();
  const auto cls = g.classes();
  for (std::size_t i = 0; i < cls.size(); ++i) {
    if (!removed[i] && dsu.unite(cls[i].u, cls[i].v)) --comps;
  }
  if (labels) {
    labels->resize(g.order());
    for (Vertex v = 0; v < g.order(); ++v) (*labels)[v] = dsu.find(v);
  }
  return comps;
}

// DFS low-link data over parallel classes.
struct LowLink {
  std::vector<int> disc;
  std::vector<int> low;
  std::size_t block_count = 0;
  std::vector<std::size_t> bridge_classes;
};

LowLink low_link(const Multigraph& g) {
  const std::size_t n = g.order();
  LowLink ll;
  ll.disc.assign(n, -1);
  ll.low.assign(n, -1);
  // class index lookup for (u, v)
  std::vector<std::vector<std::pair<Vertex, std::size_t>>> inc(n);
  const auto cls = g.classes();
  for (std::size_t i = 0; i < cls.size(); ++i) {
    inc[cls[i].u].push_back({cls[i].v, i});
    inc[cls[i].v].push_back({cls[i].u, i});
  }
  int timer = 0;
  struct Frame {
    Vertex v;
    std::size_t parent_class;
    std::size_t next;
  };
  const std::size_t kNone = static_cast<std::size_t>(-1);
  for (Vertex root = 0; root < n; ++root) {
    if (ll.disc[root] != -1) continue;
    std::vector<Frame> stack{{root, kNone, 0}};
    ll.disc[root] = ll.low[root] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next < inc[f.v].size()) {
        const auto [w, ci] = inc[f.v][f.next++];
        if (ci == f.parent_class) {
          // A parallel copy of the tree edge acts as a back edge.
          if (cls[ci].mult >= 2) ll.low[f.v] = std::min(ll.low[f.v], ll.disc[w]);
          continue;
        }
        if (ll.disc[w] == -1) {
          ll.disc[w] = ll.low[w] = timer++;
          stack.push_back({w, ci, 0});
        } else {
          ll.low[f.v] = std::min(ll.low[f.v], ll.disc[w]);
        }
      } else {
        const Frame done = f;
        stack.pop_back();
        if (!stack.empty()) {
          Frame& parent = stack.back();
          ll.low[parent.v] = std::min(ll.low[parent.v], ll.low[done.v]);
          if (ll.low[done.v] >= ll.disc[parent.v]) ++ll.block_count;
          if (ll.low[done.v] > ll.disc[parent.v] && cls[done.parent_class].mult == 1) {
            ll.bridge_classes.push_back(done.parent_class);
          }
        }
      }
    }
  }
  std::sort(ll.bridge_classes.begin(), ll.bridge_classes.end());
  return ll;
}

}  // namespace

// ------------------------------------------------------------ Multigraph

Multigraph::Multigraph(std::size_t n) : n_(n), loops_(n, 0), adj_(n), degree_(n, 0) {}

Multigraph::Multigraph(std::size_t n, std::span<const Triple> edges) : n_(n) { build(edges); }

Multigraph::Multigraph(std::size_t n, std::initializer_list<Triple> edges) : n_(n) {
  build(std::span<const Triple>(edges.begin(), edges.size()));
}

void Multigraph::build(std::span<const Triple> edges) {
  loops_.assign(n_, 0);
  std::vector<EdgeClass> raw;
  raw.reserve(edges.size());
  for (const auto& t : edges) {
    if (t.u >= n_ || t.v >= n_) {
      throw InvalidEdge("edge (" + std::to_string(t.u) + "," + std::to_string(t.v) +
                        ") out of range for a graph of order " + std::to_string(n_));
    }
    if (t.count == 0) continue;
    if (t.u == t.v) {
      loops_[t.u] += t.count;
    } else {
      raw.push_back({std::min(t.u, t.v), std::max(t.u, t.v), t.count});
    }
  }
  std::sort(raw.begin(), raw.end(), [](const EdgeClass& a, const EdgeClass& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  classes_.clear();
  for (const auto& c : raw) {
    if (!classes_.empty() && classes_.back().u == c.u && classes_.back().v == c.v) {
      classes_.back().mult += c.mult;
    } else {
      classes_.push_back(c);
    }
  }
  adj_.assign(n_, {});
  degree_.assign(n_, 0);
  m_ = 0;
  for (Vertex v = 0; v < n_; ++v) {
    degree_[v] += 2 * loops_[v];
    m_ += loops_[v];
  }
  for (const auto& c : classes_) {
    adj_[c.u].push_back({c.v, c.mult});
    adj_[c.v].push_back({c.u, c.mult});
    degree_[c.u] += c.mult;
    degree_[c.v] += c.mult;
    m_ += c.mult;
  }
  for (auto& list : adj_) {
    std::sort(list.begin(), list.end(), [](const Neighbor& a, const Neighbor& b) { return a.vertex < b.vertex; });
  }
}

std::uint32_t Multigraph::loops(Vertex v) const {
  check_vertex(*this, v);
  return loops_[v];
}

std::uint32_t Multigraph::total_loops() const noexcept {
  return std::accumulate(loops_.begin(), loops_.end(), std::uint32_t{0});
}

std::uint32_t Multigraph::multiplicity(Vertex u, Vertex v) const {
  check_vertex(*this, u);
  check_vertex(*this, v);
  if (u == v) return loops_[u];
  for (const auto& nb : adj_[u]) {
    if (nb.vertex == v) return nb.mult;
  }
  return 0;
}

std::uint32_t Multigraph::degree(Vertex v) const {
  check_vertex(*this, v);
  return degree_[v];
}

std::span<const Multigraph::Neighbor> Multigraph::neighbors(Vertex v) const {
  check_vertex(*this, v);
  return adj_[v];
}

bool Multigraph::has_edge(const EdgeRef& e) const {
  if (e.u >= n_ || e.v >= n_) return false;
  return e.instance < multiplicity(e.u, e.v);
}

std::vector<EdgeRef> Multigraph::edge_list() const {
  std::vector<EdgeRef> out;
  out.reserve(m_);
  for (const auto& c : classes_) {
    for (std::uint32_t i = 0; i < c.mult; ++i) out.push_back({c.u, c.v, i});
  }
  for (Vertex v = 0; v < n_; ++v) {
    for (std::uint32_t i = 0; i < loops_[v]; ++i) out.push_back({v, v, i});
  }
  return out;
}

std::vector<Multigraph::Triple> Multigraph::triples() const {
  std::vector<Triple> out;
  out.reserve(classes_.size() + n_);
  for (const auto& c : classes_) out.push_back({c.u, c.v, c.mult});
  for (Vertex v = 0; v < n_; ++v) {
    if (loops_[v]) out.push_back({v, v, loops_[v]});
  }
  return out;
}

// ------------------------------------------------------------ local operations

Multigraph delete_edge(const Multigraph& g, const EdgeRef& e) {
  if (!g.has_edge(e)) throw InvalidEdge("delete_edge: no edge " + edge_name(e));
  auto ts = g.triples();
  const Vertex a = std::min(e.u, e.v);
  const Vertex b = std::max(e.u, e.v);
  for (auto& t : ts) {
    if (t.u == a && t.v == b) {
      --t.count;
      break;
    }
  }
  return Multigraph(g.order(), ts);
}

Multigraph contract_edge(const Multigraph& g, const EdgeRef& e) {
  if (e.is_loop()) throw InvalidOperation("contract_edge: cannot contract a loop; apply the loop rule");
  if (!g.has_edge(e)) throw InvalidEdge("contract_edge: no edge " + edge_name(e));
  const Vertex a = std::min(e.u, e.v);
  const Vertex b = std::max(e.u, e.v);
  auto relabel = [&](Vertex x) -> Vertex { return x == b ? a : (x > b ? x - 1 : x); };
  std::vector<Multigraph::Triple> ts;
  for (const auto& t : g.triples()) {
    std::uint32_t count = t.count;
    if (t.u == a && t.v == b) --count;
    ts.push_back({relabel(t.u), relabel(t.v), count});
  }
  return Multigraph(g.order() - 1, ts);
}

Multigraph desubdivide(const Multigraph& g, Vertex u) {
  check_vertex(g, u);
  if (g.degree(u) != 2 || g.loops(u) != 0) {
    throw InvalidOperation("desubdivide: vertex " + std::to_string(u) + " must have degree 2 and no loop");
  }
  const auto nbrs = g.neighbors(u);
  const Vertex w1 = nbrs[0].vertex;
  const Vertex w2 = nbrs.size() == 2 ? nbrs[1].vertex : nbrs[0].vertex;
  auto relabel = [&](Vertex x) -> Vertex { return x > u ? x - 1 : x; };
  std::vector<Multigraph::Triple> ts;
  for (const auto& t : g.triples()) {
    if (t.u == u || t.v == u) continue;
    ts.push_back({relabel(t.u), relabel(t.v), t.count});
  }
  ts.push_back({relabel(w1), relabel(w2), 1});
  return Multigraph(g.order() - 1, ts);
}

Multigraph subdivide(const Multigraph& g, const EdgeRef& e) {
  if (!g.has_edge(e)) throw InvalidEdge("subdivide: no edge " + edge_name(e));
  auto ts = g.triples();
  const Vertex a = std::min(e.u, e.v);
  const Vertex b = std::max(e.u, e.v);
  for (auto& t : ts) {
    if (t.u == a && t.v == b) {
      --t.count;
      break;
    }
  }
  const auto x = static_cast<Vertex>(g.order());
  ts.push_back({a, x, 1});
  ts.push_back({x, b, 1});
  return Multigraph(g.order() + 1, ts);
}

Multigraph remove_loops(const Multigraph& g) {
  std::vector<Multigraph::Triple> ts;
  for (const auto& c : g.classes()) ts.push_back({c.u, c.v, c.mult});
  return Multigraph(g.order(), ts);
}

Multigraph induced_subgraph(const Multigraph& g, std::span<const Vertex> vertices) {
  std::vector<std::int64_t> index(g.order(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    check_vertex(g, vertices[i]);
    index[vertices[i]] = static_cast<std::int64_t>(i);
  }
  std::vector<Multigraph::Triple> ts;
  for (const auto& t : g.triples()) {
    if (index[t.u] < 0 || index[t.v] < 0) continue;
    ts.push_back({static_cast<Vertex>(index[t.u]), static_cast<Vertex>(index[t.v]), t.count});
  }
  return Multigraph(vertices.size(), ts);
}

Multigraph disjoint_union(const Multigraph& a, const Multigraph& b) {
  auto ts = a.triples();
  const auto shift = static_cast<Vertex>(a.order());
  for (const auto& t : b.triples()) ts.push_back({t.u + shift, t.v + shift, t.count});
  return Multigraph(a.order() + b.order(), ts);
}

Multigraph permute(const Multigraph& g, std::span<const Vertex> perm) {
  if (perm.size() != g.order()) throw InvalidOperation("permute: permutation size mismatch");
  std::vector<Multigraph::Triple> ts;
  for (const auto& t : g.triples()) ts.push_back({perm[t.u], perm[t.v], t.count});
  return Multigraph(g.order(), ts);
}

// ------------------------------------------------------------ structure queries

std::vector<std::uint32_t> component_labels(const Multigraph& g) {
  Dsu dsu(g.order());
  for (const auto& c : g.classes()) dsu.unite(c.u, c.v);
  std::vector<std::uint32_t> root_to_label(g.order(), UINT32_MAX);
  std::vector<std::uint32_t> labels(g.order());
  std::uint32_t next = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto r = dsu.find(v);
    if (root_to_label[r] == UINT32_MAX) root_to_label[r] = next++;
    labels[v] = root_to_label[r];
  }
  return labels;
}

std::vector<std::vector<Vertex>> components(const Multigraph& g) {
  const auto labels = component_labels(g);
  std::vector<std::vector<Vertex>> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (labels[v] >= out.size()) out.resize(labels[v] + 1);
    out[labels[v]].push_back(v);
  }
  return out;
}

bool is_connected(const Multigraph& g) { return components(g).size() <= 1; }

std::vector<EdgeClass> bridges(const Multigraph& g) {
  const auto ll = low_link(g);
  std::vector<EdgeClass> out;
  for (auto i : ll.bridge_classes) out.push_back(g.classes()[i]);
  return out;
}

bool is_bridgeless(const Multigraph& g) { return low_link(g).bridge_classes.empty(); }

std::size_t blocks(const Multigraph& g) {
  if (!is_connected(g)) throw DomainError("blocks: graph is disconnected");
  const std::size_t loop_blocks = g.total_loops();
  const std::size_t edge_blocks = g.classes().empty() ? 0 : low_link(g).block_count;
  const std::size_t total = loop_blocks + edge_blocks;
  return total == 0 ? 1 : total;
}

std::vector<CutSet> small_edge_cuts(const Multigraph& g, std::size_t max_size) {
  if (max_size < 1 || max_size > 3) throw DomainError("small_edge_cuts: max_size must be 1, 2 or 3");
  const auto cls = g.classes();
  const std::size_t k = cls.size();
  std::vector<CutSet> out;
  std::vector<char> removed(k, 0);
  std::vector<std::uint32_t> labels;
  const std::size_t base_components = count_components_without(g, removed);

  auto try_cut = [&](std::span<const std::size_t> picked) {
    std::size_t total = 0;
    for (auto i : picked) total += cls[i].mult;
    if (total > max_size) return;
    for (auto i : picked) removed[i] = 1;
    const std::size_t comps = count_components_without(g, removed, &labels);
    bool minimal = comps == base_components + 1;
    if (minimal) {
      for (auto i : picked) minimal = minimal && labels[cls[i].u] != labels[cls[i].v];
    }
    if (minimal) {
      CutSet cut;
      for (auto i : picked) {
        for (std::uint32_t c = 0; c < cls[i].mult; ++c) cut.edges.push_back({cls[i].u, cls[i].v, c});
      }
      const auto anchor = labels[cls[picked[0]].u];
      const auto other = labels[cls[picked[0]].v];
      // The side containing the lower-numbered endpoint root.
      const auto side_label = std::min(anchor, other);
      for (Vertex v = 0; v < g.order(); ++v) {
        if (labels[v] == side_label) cut.side.push_back(v);
      }
      out.push_back(std::move(cut));
    }
    for (auto i : picked) removed[i] = 0;
  };

  std::size_t picked[3];
  for (std::size_t a = 0; a < k; ++a) {
    picked[0] = a;
    try_cut(std::span<const std::size_t>(picked, 1));
    for (std::size_t b = a + 1; b < k && max_size >= 2; ++b) {
      picked[1] = b;
      try_cut(std::span<const std::size_t>(picked, 2));
      for (std::size_t c = b + 1; c < k && max_size >= 3; ++c) {
        picked[2] = c;
        try_cut(std::span<const std::size_t>(picked, 3));
      }
    }
  }
  return out;
}

bool is_k_edge_connected(const Multigraph& g, std::size_t k) {
  if (k > 4) throw DomainError("is_k_edge_connected: k must be at most 4");
  if (!is_connected(g)) return k == 0;
  if (k <= 1) return true;
  if (!is_bridgeless(g)) return false;
  if (k == 2) return true;
  return small_edge_cuts(g, k - 1).empty();
}

bool is_3_connected(const Multigraph& g) {
  const std::size_t n = g.order();
  if (n < 4 || !is_connected(g)) return false;
  std::vector<char> gone(n, 0);
  auto connected_without = [&]() {
    Vertex start = 0;
    while (start < n && gone[start]) ++start;
    std::vector<char> seen(n, 0);
    std::vector<Vertex> stack{start};
    seen[start] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (const auto& nb : g.neighbors(v)) {
        if (gone[nb.vertex] || seen[nb.vertex]) continue;
        seen[nb.vertex] = 1;
        ++reached;
        stack.push_back(nb.vertex);
      }
    }
    std::size_t alive = 0;
    for (Vertex v = 0; v < n; ++v) alive += gone[v] ? 0 : 1;
    return reached == alive;
  };
  for (Vertex a = 0; a < n; ++a) {
    gone[a] = 1;
    if (!connected_without()) return false;
    for (Vertex b = a + 1; b < n; ++b) {
      gone[b] = 1;
      const bool ok = connected_without();
      gone[b] = 0;
      if (!ok) return false;
    }
    gone[a] = 0;
  }
  return true;
}

std::map<Vertex, std::uint32_t> degree_profile(const Multigraph& g) {
  std::map<Vertex, std::uint32_t> out;
  for (Vertex v = 0; v < g.order(); ++v) out[v] = g.degree(v);
  return out;
}

bool is_cubic(const Multigraph& g) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 3) return false;
  }
  return g.order() > 0;
}

bool is_simple(const Multigraph& g) {
  if (g.total_loops() != 0) return false;
  return std::all_of(g.classes().begin(), g.classes().end(), [](const EdgeClass& c) { return c.mult == 1; });
}

std::optional<Vertex> near_cubic_center(const Multigraph& g) {
  std::optional<Vertex> odd;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 3) continue;
    if (odd) return std::nullopt;
    odd = v;
  }
  if (odd) return odd;
  if (g.order() == 0) return std::nullopt;
  return Vertex{0};
}

std::vector<std::uint32_t> sorted_degrees(const Multigraph& g) {
  std::vector<std::uint32_t> out;
  for (Vertex v = 0; v < g.order(); ++v) out.push_back(g.degree(v));
  std::sort(out.rbegin(), out.rend());
  return out;
}

}  // namespace flowpoly
