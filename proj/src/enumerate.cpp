#include "flowpoly/enumerate.hpp"

#include "flowpoly/canonical.hpp"
#include "flowpoly/errors.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <thread>
#include <unordered_map>

namespace flowpoly {

namespace {

using T = Multigraph::Triple;
using KeyedGraphs = std::unordered_map<CanonicalKey, Multigraph, CanonicalKeyHash>;

struct Slot {
  Vertex a;
  Vertex b;  // a == b for a loop
  std::uint32_t copies;
};

std::vector<Slot> slots_of(const Multigraph& g) {
  std::vector<Slot> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.loops(v) > 0) out.push_back({v, v, g.loops(v)});
  }
  for (const auto& c : g.classes()) out.push_back({c.u, c.v, c.mult});
  return out;
}

std::vector<T> without(const std::vector<T>& ts, const Slot& s, std::uint32_t copies) {
  std::vector<T> out = ts;
  for (auto& t : out) {
    if ((t.u == s.a && t.v == s.b) || (t.u == s.b && t.v == s.a)) {
      t.count -= copies;
      break;
    }
  }
  return out;
}

// Every graph one step above g, keyed by canonical key.
void extend(const Multigraph& g, KeyedGraphs& out) {
  const auto n = static_cast<Vertex>(g.order());
  const Vertex x = n;
  const Vertex y = n + 1;
  const auto ts = g.triples();
  const auto slots = slots_of(g);
  auto emit = [&](std::vector<T> edges) {
    Multigraph h(g.order() + 2, edges);
    auto key = canonical_key(h);
    out.try_emplace(std::move(key), std::move(h));
  };

  for (std::size_t i = 0; i < slots.size(); ++i) {
    const Slot& s = slots[i];
    // Hang a looped vertex y off a new vertex x on the slot.
    {
      auto e = without(ts, s, 1);
      e.insert(e.end(), {T{s.a, x, 1}, T{x, s.b, 1}, T{x, y, 1}, T{y, y, 1}});
      emit(std::move(e));
    }
    // Both new vertices on the same copy, joined to each other.
    {
      auto e = without(ts, s, 1);
      e.insert(e.end(), {T{s.a, x, 1}, T{x, y, 2}, T{y, s.b, 1}});
      emit(std::move(e));
    }
    // Two different copies of the same class.
    if (s.copies >= 2) {
      auto e = without(ts, s, 2);
      e.insert(e.end(), {T{s.a, x, 1}, T{x, s.b, 1}, T{s.a, y, 1}, T{y, s.b, 1}, T{x, y, 1}});
      emit(std::move(e));
    }
    // Copies of two different classes.
    for (std::size_t j = i + 1; j < slots.size(); ++j) {
      const Slot& r = slots[j];
      auto e = without(without(ts, s, 1), r, 1);
      e.insert(e.end(), {T{s.a, x, 1}, T{x, s.b, 1}, T{r.a, y, 1}, T{y, r.b, 1}, T{x, y, 1}});
      emit(std::move(e));
    }
  }
}

KeyedGraphs next_level(const std::vector<Multigraph>& level, std::size_t jobs) {
  jobs = std::max<std::size_t>(1, std::min(jobs, level.size()));
  if (jobs == 1) {
    KeyedGraphs out;
    for (const auto& g : level) extend(g, out);
    return out;
  }
  std::vector<KeyedGraphs> partial(jobs);
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t j = 0; j < jobs; ++j) {
    pool.emplace_back([&, j]() {
      for (std::size_t i = next.fetch_add(1); i < level.size(); i = next.fetch_add(1)) extend(level[i], partial[j]);
    });
  }
  for (auto& t : pool) t.join();
  KeyedGraphs out = std::move(partial[0]);
  for (std::size_t j = 1; j < jobs; ++j) {
    for (auto& [k, g] : partial[j]) out.try_emplace(k, std::move(g));
  }
  return out;
}

void check_order(std::size_t n) {
  if (n < 2 || n % 2 != 0) throw DomainError("cubic graphs need an even vertex count >= 2, got " + std::to_string(n));
  if (n > kMaxEnumerationOrder) {
    throw LimitExceeded("enumeration is limited to " + std::to_string(kMaxEnumerationOrder) + " vertices");
  }
}

bool passes(const EnumSpec& spec, const Multigraph& g) {
  if (!spec.allow_multiedges && !is_simple(g)) return false;
  unsigned k = std::max(spec.min_edge_connectivity, spec.require_bridgeless ? 2u : 1u);
  if (k >= 2 && !is_bridgeless(g)) return false;
  if (k >= 3 && !is_k_edge_connected(g, 3)) return false;
  return true;
}

}  // namespace

std::vector<Multigraph> connected_cubic_level(std::size_t n, std::size_t jobs) {
  check_order(n);
  // Theta graph and dumbbell.
  std::vector<Multigraph> level{Multigraph(2, {T{0, 1, 3}}), Multigraph(2, {T{0, 0, 1}, T{0, 1, 1}, T{1, 1, 1}})};
  for (std::size_t order = 4; order <= n; order += 2) {
    auto keyed = next_level(level, jobs);
    level.clear();
    level.reserve(keyed.size());
    for (auto& [k, g] : keyed) level.push_back(std::move(g));
  }
  std::vector<std::pair<CanonicalKey, Multigraph>> sorted;
  sorted.reserve(level.size());
  for (auto& g : level) sorted.emplace_back(canonical_key(g), canonical_form(g));
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Multigraph> out;
  out.reserve(sorted.size());
  for (auto& kg : sorted) out.push_back(std::move(kg.second));
  return out;
}

std::vector<Multigraph> enumerate_cubic(const EnumSpec& spec) {
  check_order(spec.n);
  if (spec.min_edge_connectivity < 1 || spec.min_edge_connectivity > 3) {
    throw DomainError("min_edge_connectivity must be 1, 2 or 3");
  }
  std::vector<Multigraph> out;
  for (auto& g : connected_cubic_level(spec.n, spec.jobs)) {
    if (passes(spec, g)) out.push_back(std::move(g));
  }
  return out;
}

void for_each_cubic(const EnumSpec& spec, const std::function<void(const Multigraph&)>& visit) {
  for (const auto& g : enumerate_cubic(spec)) visit(g);
}

std::size_t count_cubic(const EnumSpec& spec) { return enumerate_cubic(spec).size(); }

}  // namespace flowpoly
