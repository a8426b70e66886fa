#include "flowpoly/families.hpp"

#include "flowpoly/errors.hpp"

namespace flowpoly {

namespace {

using T = Multigraph::Triple;

void require_even(std::size_t n, std::size_t min, const char* what) {
  if (n % 2 != 0 || n < min) {
    throw DomainError(std::string(what) + " needs an even vertex count >= " + std::to_string(min) + ", got " +
                      std::to_string(n));
  }
}

}  // namespace

Multigraph make_z3() { return Multigraph(2, {T{0, 1, 3}}); }

Multigraph make_k4() {
  return Multigraph(4, {T{0, 1, 1}, T{0, 2, 1}, T{0, 3, 1}, T{1, 2, 1}, T{1, 3, 1}, T{2, 3, 1}});
}

Multigraph make_l4() { return Multigraph(4, {T{0, 1, 2}, T{1, 2, 1}, T{2, 3, 2}, T{3, 0, 1}}); }

Multigraph make_k2h(unsigned h) {
  if (h != 2 && h != 3) throw DomainError("make_k2h: h must be 2 or 3");
  return Multigraph(2, {T{0, 1, h}});
}

Multigraph make_cycle(std::size_t n) {
  if (n == 0) throw DomainError("make_cycle: n must be at least 1");
  if (n == 1) return Multigraph(1, {T{0, 0, 1}});
  if (n == 2) return Multigraph(2, {T{0, 1, 2}});
  std::vector<T> ts;
  for (std::size_t i = 0; i < n; ++i) {
    ts.push_back({static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n), 1});
  }
  return Multigraph(n, ts);
}

Multigraph make_z3_necklace(std::size_t n) {
  require_even(n, 2, "make_z3_necklace");
  if (n == 2) return make_z3();
  const std::size_t gadgets = n / 2;
  std::vector<T> ts;
  for (std::size_t i = 0; i < gadgets; ++i) {
    const auto x = static_cast<Vertex>(2 * i);
    const auto y = static_cast<Vertex>(2 * i + 1);
    const auto next = static_cast<Vertex>(2 * ((i + 1) % gadgets));
    ts.push_back({x, y, 2});
    ts.push_back({y, next, 1});
  }
  return Multigraph(n, ts);
}

Multigraph make_z3_ladder(std::size_t n) {
  require_even(n, 2, "make_z3_ladder");
  if (n == 2) return make_z3();
  const std::size_t rungs = n / 2;
  std::vector<T> ts;
  for (std::size_t i = 0; i < rungs; ++i) {
    const auto top = static_cast<Vertex>(2 * i);
    const auto bottom = static_cast<Vertex>(2 * i + 1);
    const bool end = i == 0 || i + 1 == rungs;
    ts.push_back({top, bottom, end ? 2u : 1u});
    if (i + 1 < rungs) {
      ts.push_back({top, static_cast<Vertex>(top + 2), 1});
      ts.push_back({bottom, static_cast<Vertex>(bottom + 2), 1});
    }
  }
  return Multigraph(n, ts);
}

Multigraph make_gstar(std::size_t n) {
  require_even(n, 8, "make_gstar");
  const std::size_t rungs = n / 2 - 4;
  std::vector<T> ts;
  // K4 minus the edge a-d, with a, d of degree 2.
  auto cap = [&](Vertex a) {
    const Vertex b = a + 1, c = a + 2, d = a + 3;
    ts.push_back({a, b, 1});
    ts.push_back({a, c, 1});
    ts.push_back({b, c, 1});
    ts.push_back({b, d, 1});
    ts.push_back({c, d, 1});
  };
  const Vertex left = 0;
  const auto right = static_cast<Vertex>(4 + 2 * rungs);
  cap(left);
  cap(right);
  Vertex top = left;
  Vertex bottom = left + 3;
  for (std::size_t i = 0; i < rungs; ++i) {
    const auto t = static_cast<Vertex>(4 + 2 * i);
    const auto b = static_cast<Vertex>(5 + 2 * i);
    ts.push_back({t, b, 1});
    ts.push_back({top, t, 1});
    ts.push_back({bottom, b, 1});
    top = t;
    bottom = b;
  }
  ts.push_back({top, right, 1});
  ts.push_back({bottom, static_cast<Vertex>(right + 3), 1});
  return Multigraph(n, ts);
}

Multigraph make_l4_loops(unsigned k) {
  auto ts = make_l4().triples();
  if (k > 0) ts.push_back({0, 0, k});
  return Multigraph(4, ts);
}

Multigraph make_k4_loops(unsigned k) {
  auto ts = make_k4().triples();
  if (k > 0) ts.push_back({0, 0, k});
  return Multigraph(4, ts);
}

Multigraph make_k33() {
  std::vector<T> ts;
  for (Vertex a = 0; a < 3; ++a) {
    for (Vertex b = 3; b < 6; ++b) ts.push_back({a, b, 1});
  }
  return Multigraph(6, ts);
}

Multigraph make_prism() {
  return Multigraph(6, {T{0, 1, 1}, T{1, 2, 1}, T{2, 0, 1}, T{3, 4, 1}, T{4, 5, 1}, T{5, 3, 1}, T{0, 3, 1},
                        T{1, 4, 1}, T{2, 5, 1}});
}

std::vector<std::string> family_names() {
  return {"z3", "k4", "l4", "k2h", "cycle", "necklace", "ladder", "gstar", "l4-loops", "k4-loops", "k33", "prism"};
}

Multigraph make_family(std::string_view name, std::size_t n) {
  if (name == "z3") return make_z3();
  if (name == "k4") return make_k4();
  if (name == "l4") return make_l4();
  if (name == "k2h") return make_k2h(static_cast<unsigned>(n));
  if (name == "cycle") return make_cycle(n);
  if (name == "necklace") return make_z3_necklace(n);
  if (name == "ladder") return make_z3_ladder(n);
  if (name == "gstar") return make_gstar(n);
  if (name == "l4-loops") return make_l4_loops(static_cast<unsigned>(n));
  if (name == "k4-loops") return make_k4_loops(static_cast<unsigned>(n));
  if (name == "k33") return make_k33();
  if (name == "prism") return make_prism();
  throw DomainError("unknown family '" + std::string(name) + "'");
}

}  // namespace flowpoly
