#include "flowpoly/canonical.hpp"

#include "flowpoly/errors.hpp"

#include <algorithm>
#include <numeric>

namespace flowpoly {

namespace {

constexpr std::size_t kMaxOrder = 4096;

class Canonicalizer {
 public:
  explicit Canonicalizer(const Multigraph& g) : n_(g.order()), matrix_(n_ * n_, 0), adj_(n_) {
    if (n_ > kMaxOrder) throw LimitExceeded("canonical labeling limited to " + std::to_string(kMaxOrder) + " vertices");
    for (Vertex v = 0; v < n_; ++v) {
      const auto loops = g.loops(v);
      if (loops > 255) throw LimitExceeded("canonical labeling supports at most 255 loops per vertex");
      matrix_[v * n_ + v] = static_cast<std::uint8_t>(loops);
    }
    for (const auto& c : g.classes()) {
      if (c.mult > 255) throw LimitExceeded("canonical labeling supports multiplicities up to 255");
      matrix_[c.u * n_ + c.v] = matrix_[c.v * n_ + c.u] = static_cast<std::uint8_t>(c.mult);
      adj_[c.u].push_back({c.v, c.mult});
      adj_[c.v].push_back({c.u, c.mult});
    }
    degree_.resize(n_);
    for (Vertex v = 0; v < n_; ++v) degree_[v] = g.degree(v);
  }

  std::vector<Vertex> run() {
    if (n_ == 0) {
      best_ = encode({});
      return {};
    }
    // Initial ordered partition by (loops, degree).
    std::vector<Vertex> lab(n_);
    std::iota(lab.begin(), lab.end(), 0u);
    auto init_key = [&](Vertex v) { return std::pair{degree_[v], matrix_[v * n_ + v]}; };
    std::sort(lab.begin(), lab.end(), [&](Vertex a, Vertex b) { return init_key(a) < init_key(b); });
    std::vector<char> starts(n_, 0);
    starts[0] = 1;
    for (std::size_t i = 1; i < n_; ++i) starts[i] = init_key(lab[i]) != init_key(lab[i - 1]);
    std::vector<Vertex> prefix;
    search(std::move(lab), std::move(starts), prefix);
    return best_lab_;
  }

  /// Encoding of the canonical leaf; valid after run().
  [[nodiscard]] const std::string& encoding() const { return best_; }

 private:
  struct Adj {
    Vertex vertex;
    std::uint32_t mult;
  };

  // Splits cells until every vertex in a cell sees the same multiset of
  // (neighbor cell, multiplicity) pairs.
  void refine(std::vector<Vertex>& lab, std::vector<char>& starts) {
    std::vector<std::uint32_t> color(n_);
    std::vector<std::vector<std::uint32_t>> sig(n_);
    for (;;) {
      std::uint32_t cell_start = 0;
      for (std::size_t i = 0; i < n_; ++i) {
        if (starts[i]) cell_start = static_cast<std::uint32_t>(i);
        color[lab[i]] = cell_start;
      }
      bool changed = false;
      std::size_t s = 0;
      while (s < n_) {
        std::size_t e = s + 1;
        while (e < n_ && !starts[e]) ++e;
        if (e - s > 1) {
          for (std::size_t i = s; i < e; ++i) {
            const Vertex v = lab[i];
            auto& sv = sig[v];
            sv.clear();
            for (const auto& a : adj_[v]) sv.push_back((color[a.vertex] << 8) | a.mult);
            std::sort(sv.begin(), sv.end());
          }
          std::sort(lab.begin() + static_cast<std::ptrdiff_t>(s), lab.begin() + static_cast<std::ptrdiff_t>(e),
                    [&](Vertex a, Vertex b) { return sig[a] < sig[b]; });
          for (std::size_t i = s + 1; i < e; ++i) {
            if (sig[lab[i]] != sig[lab[i - 1]]) {
              starts[i] = 1;
              changed = true;
            }
          }
        }
        s = e;
      }
      if (!changed) return;
    }
  }

  std::string encode(const std::vector<Vertex>& lab) const {
    std::string out;
    out.reserve(2 + n_ * (n_ + 1) / 2);
    out.push_back(static_cast<char>((n_ >> 8) & 0xff));
    out.push_back(static_cast<char>(n_ & 0xff));
    for (std::size_t i = 0; i < n_; ++i) {
      const std::size_t row = lab[i] * n_;
      for (std::size_t j = i; j < n_; ++j) out.push_back(static_cast<char>(matrix_[row + lab[j]]));
    }
    return out;
  }

  void leaf(const std::vector<Vertex>& lab) {
    std::string enc = encode(lab);
    if (best_lab_.empty() || enc < best_) {
      best_ = std::move(enc);
      best_lab_ = lab;
      return;
    }
    if (enc == best_) {
      // Automorphism mapping best_lab_[i] -> lab[i].
      std::vector<Vertex> gamma(n_);
      bool identity = true;
      for (std::size_t i = 0; i < n_; ++i) {
        gamma[best_lab_[i]] = lab[i];
        identity = identity && best_lab_[i] == lab[i];
      }
      if (!identity) generators_.push_back(std::move(gamma));
    }
  }

  // Orbit representatives under the known automorphisms fixing `prefix`.
  std::vector<Vertex> orbit_roots(const std::vector<Vertex>& prefix) const {
    std::vector<Vertex> parent(n_);
    std::iota(parent.begin(), parent.end(), 0u);
    auto find = [&](Vertex x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& gamma : generators_) {
      const bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](Vertex v) { return gamma[v] == v; });
      if (!fixes) continue;
      for (Vertex v = 0; v < n_; ++v) {
        const Vertex a = find(v);
        const Vertex b = find(gamma[v]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    for (Vertex v = 0; v < n_; ++v) parent[v] = find(v);
    return parent;
  }

  void search(std::vector<Vertex> lab, std::vector<char> starts, std::vector<Vertex>& prefix) {
    refine(lab, starts);
    // First non-singleton cell.
    std::size_t s = 0;
    std::size_t e = 0;
    bool found = false;
    while (s < n_) {
      e = s + 1;
      while (e < n_ && !starts[e]) ++e;
      if (e - s > 1) {
        found = true;
        break;
      }
      s = e;
    }
    if (!found) {
      leaf(lab);
      return;
    }
    std::vector<Vertex> cell(lab.begin() + static_cast<std::ptrdiff_t>(s), lab.begin() + static_cast<std::ptrdiff_t>(e));
    std::sort(cell.begin(), cell.end());
    std::vector<Vertex> tried;
    for (const Vertex v : cell) {
      if (!tried.empty() && !generators_.empty()) {
        const auto roots = orbit_roots(prefix);
        const bool redundant =
            std::any_of(tried.begin(), tried.end(), [&](Vertex u) { return roots[u] == roots[v]; });
        if (redundant) continue;
      }
      tried.push_back(v);
      std::vector<Vertex> child_lab = lab;
      std::vector<char> child_starts = starts;
      auto pos = std::find(child_lab.begin() + static_cast<std::ptrdiff_t>(s),
                           child_lab.begin() + static_cast<std::ptrdiff_t>(e), v);
      std::iter_swap(child_lab.begin() + static_cast<std::ptrdiff_t>(s), pos);
      child_starts[s + 1] = 1;
      prefix.push_back(v);
      search(std::move(child_lab), std::move(child_starts), prefix);
      prefix.pop_back();
    }
  }

  std::size_t n_;
  std::vector<std::uint8_t> matrix_;
  std::vector<std::vector<Adj>> adj_;
  std::vector<std::uint32_t> degree_;
  std::string best_;
  std::vector<Vertex> best_lab_;
  std::vector<std::vector<Vertex>> generators_;
};

}  // namespace

std::string CanonicalKey::hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    out.push_back(kDigits[c >> 4]);
    out.push_back(kDigits[c & 0xf]);
  }
  return out;
}

CanonicalKey CanonicalKey::from_hex(std::string_view hex) {
  if (hex.size() % 2 != 0) throw ParseError("canonical key hex has odd length");
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw ParseError(std::string("bad hex digit '") + c + "'");
  };
  CanonicalKey key;
  key.bytes.reserve(hex.size() / 2);
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    key.bytes.push_back(static_cast<char>((nibble(hex[i]) << 4) | nibble(hex[i + 1])));
  }
  return key;
}

std::size_t CanonicalKeyHash::operator()(const CanonicalKey& k) const noexcept {
  return std::hash<std::string>{}(k.bytes);
}

std::vector<Vertex> canonical_labeling(const Multigraph& g) { return Canonicalizer(g).run(); }

CanonicalKey canonical_key(const Multigraph& g) {
  Canonicalizer canon(g);
  canon.run();
  return CanonicalKey{canon.encoding()};
}

Multigraph canonical_form(const Multigraph& g) {
  const auto lab = canonical_labeling(g);
  std::vector<Vertex> perm(g.order());
  for (std::size_t i = 0; i < lab.size(); ++i) perm[lab[i]] = static_cast<Vertex>(i);
  return permute(g, perm);
}

Multigraph graph_from_key(const CanonicalKey& key) {
  const std::string& b = key.bytes;
  if (b.size() < 2) throw ParseError("canonical key too short");
  const std::size_t n = (static_cast<unsigned char>(b[0]) << 8) | static_cast<unsigned char>(b[1]);
  if (b.size() != 2 + n * (n + 1) / 2) throw ParseError("canonical key length does not match its order");
  std::vector<Multigraph::Triple> ts;
  std::size_t pos = 2;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i; j < n; ++j) {
      const auto count = static_cast<unsigned char>(b[pos++]);
      if (count) ts.push_back({i, j, count});
    }
  }
  return Multigraph(n, ts);
}

bool is_isomorphic(const Multigraph& a, const Multigraph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  if (sorted_degrees(a) != sorted_degrees(b)) return false;
  return canonical_key(a) == canonical_key(b);
}

}  // namespace flowpoly
