#include "mcds/structure.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <queue>

namespace mcds {

namespace {

void check_compatible(const Graph& g, const VertexSet& s) {
  if (s.order() != g.order()) {
    throw RangeError("vertex set of order " + std::to_string(s.order()) + " used with graph of order " +
                     std::to_string(g.order()));
  }
}

void require_connected(const Graph& g) {
  if (!is_connected(g)) throw DisconnectedGraphError("connected dominating sets are undefined on a disconnected graph");
}

/// Vertices of `allowed` reachable from `start` through `allowed`.
VertexSet reach(const Graph& g, Vertex start, const VertexSet& allowed) {
  VertexSet seen(g.order());
  seen.insert(start);
  std::vector<Vertex> stack{start};
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(u)) {
      if (allowed.contains(w) && !seen.contains(w)) {
        seen.insert(w);
        stack.push_back(w);
      }
    }
  }
  return seen;
}

}  // namespace

bool is_connected(const Graph& g) {
  if (g.order() == 0) return false;
  return reach(g, 0, VertexSet::full(g.order())).size() == g.order();
}

bool is_connected_induced(const Graph& g, const VertexSet& s) {
  check_compatible(g, s);
  if (s.empty()) return false;
  const Vertex first = s.members().front();
  return reach(g, first, s) == s;
}

bool is_dominating(const Graph& g, const VertexSet& s) {
  check_compatible(g, s);
  VertexSet covered = s;
  s.for_each([&](Vertex v) { covered |= g.open_neighborhood(v); });
  return covered.size() == g.order();
}

bool is_cds(const Graph& g, const VertexSet& s) {
  check_compatible(g, s);
  require_connected(g);
  return is_dominating(g, s) && is_connected_induced(g, s);
}

bool is_minimal_cds(const Graph& g, const VertexSet& s) {
  if (!is_cds(g, s)) return false;
  for (Vertex v : s.members()) {
    VertexSet smaller = s;
    smaller.erase(v);
    if (is_dominating(g, smaller) && is_connected_induced(g, smaller)) return false;
  }
  return true;
}

bool is_minimal_cds_exhaustive(const Graph& g, const VertexSet& s) {
  if (!is_cds(g, s)) return false;
  const auto members = s.members();
  if (members.size() > 30) throw GuardError("exhaustive minimality check limited to sets of size <= 30");
  const std::uint64_t all = (std::uint64_t{1} << members.size()) - 1;
  for (std::uint64_t pick = 0; pick < all; ++pick) {
    VertexSet sub(g.order());
    for (std::size_t i = 0; i < members.size(); ++i) {
      if ((pick >> i) & 1U) sub.insert(members[i]);
    }
    if (is_dominating(g, sub) && is_connected_induced(g, sub)) return false;
  }
  return true;
}

VertexSet cut_vertices(const Graph& g) {
  const std::size_t n = g.order();
  VertexSet cuts(n);
  constexpr std::size_t kUnvisited = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> disc(n, kUnvisited);
  std::vector<std::size_t> low(n, 0);
  std::vector<Vertex> parent(n, 0);
  std::vector<std::size_t> next_edge(n, 0);
  std::size_t timer = 0;

  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] != kUnvisited) continue;
    std::size_t root_children = 0;
    disc[root] = low[root] = timer++;
    parent[root] = root;
    std::vector<Vertex> stack{root};
    while (!stack.empty()) {
      const Vertex u = stack.back();
      const auto nbrs = g.neighbors(u);
      if (next_edge[u] < nbrs.size()) {
        const Vertex w = nbrs[next_edge[u]++];
        if (disc[w] == kUnvisited) {
          parent[w] = u;
          disc[w] = low[w] = timer++;
          if (u == root) ++root_children;
          stack.push_back(w);
        } else if (w != parent[u]) {
          low[u] = std::min(low[u], disc[w]);
        }
        continue;
      }
      stack.pop_back();
      if (u == root) continue;
      const Vertex p = parent[u];
      low[p] = std::min(low[p], low[u]);
      if (p != root && low[u] >= disc[p]) cuts.insert(p);
    }
    if (root_children > 1) cuts.insert(root);
  }
  return cuts;
}

TwoColoring two_coloring(const Graph& g) {
  const std::size_t n = g.order();
  constexpr std::uint8_t kNone = 2;
  std::vector<std::uint8_t> side(n, kNone);
  std::vector<Vertex> parent(n, 0);
  std::vector<std::size_t> depth(n, 0);

  for (Vertex root = 0; root < n; ++root) {
    if (side[root] != kNone) continue;
    side[root] = 0;
    parent[root] = root;
    std::queue<Vertex> queue;
    queue.push(root);
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop();
      for (Vertex w : g.neighbors(u)) {
        if (side[w] == kNone) {
          side[w] = static_cast<std::uint8_t>(1 - side[u]);
          parent[w] = u;
          depth[w] = depth[u] + 1;
          queue.push(w);
        } else if (side[w] == side[u]) {
          // Walk both endpoints up the BFS tree to their common ancestor.
          std::vector<Vertex> left{u};
          std::vector<Vertex> right{w};
          Vertex a = u;
          Vertex b = w;
          while (depth[a] > depth[b]) left.push_back(a = parent[a]);
          while (depth[b] > depth[a]) right.push_back(b = parent[b]);
          while (a != b) {
            left.push_back(a = parent[a]);
            right.push_back(b = parent[b]);
          }
          right.pop_back();
          TwoColoring out;
          out.odd_cycle = left;
          out.odd_cycle.insert(out.odd_cycle.end(), right.rbegin(), right.rend());
          out.odd_cycle.push_back(u);
          return out;
        }
      }
    }
  }
  return TwoColoring{Coloring{std::move(side)}, {}};
}

std::optional<Coloring> is_bipartite(const Graph& g) { return two_coloring(g).coloring; }

Degeneracy degeneracy(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> deg(n);
  for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
  std::vector<bool> removed(n, false);
  Degeneracy out;
  out.order.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    Vertex pick = 0;
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (Vertex v = 0; v < n; ++v) {
      if (!removed[v] && deg[v] < best) {
        best = deg[v];
        pick = v;
      }
    }
    removed[pick] = true;
    out.value = std::max(out.value, best);
    out.order.push_back(pick);
    for (Vertex w : g.neighbors(pick)) {
      if (!removed[w]) --deg[w];
    }
  }
  return out;
}

namespace {

/// Branch-and-bound over relabelings, placing one new label per column of the
/// upper triangle. A prefix that already exceeds the best completed string is
/// abandoned.
class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : n_(g.order()), adj_(g.adjacency_masks()) {
    total_bits_ = n_ * (n_ - 1) / 2;
  }

  std::string run() {
    if (n_ <= 1) return {};
    std::vector<Vertex> perm;
    std::uint64_t used = 0;
    extend(perm, used, 0, 0, false);
    std::string out(total_bits_, '0');
    for (std::size_t i = 0; i < total_bits_; ++i) {
      if ((best_ >> (total_bits_ - 1 - i)) & 1U) out[i] = '1';
    }
    return out;
  }

 private:
  void extend(std::vector<Vertex>& perm, std::uint64_t used, std::uint64_t prefix, std::size_t bits,
              bool strictly_less) {
    if (perm.size() == n_) {
      if (!have_best_ || prefix < best_) {
        best_ = prefix;
        have_best_ = true;
      }
      return;
    }
    for (Vertex v = 0; v < n_; ++v) {
      if ((used >> v) & 1U) continue;
      std::uint64_t next = prefix;
      for (Vertex placed : perm) next = (next << 1) | ((adj_[placed] >> v) & 1U);
      const std::size_t next_bits = bits + perm.size();
      bool less = strictly_less;
      if (have_best_ && !less) {
        const std::uint64_t best_prefix = best_ >> (total_bits_ - next_bits);
        if (next > best_prefix) continue;
        less = next < best_prefix;
      }
      perm.push_back(v);
      extend(perm, used | (std::uint64_t{1} << v), next, next_bits, less);
      perm.pop_back();
    }
  }

  std::size_t n_;
  std::vector<std::uint64_t> adj_;
  std::size_t total_bits_ = 0;
  std::uint64_t best_ = 0;
  bool have_best_ = false;
};

}  // namespace

std::string canonical_form(const Graph& g) {
  if (g.order() > kCanonicalFormMaxOrder) {
    throw GuardError("canonical_form supports order <= 8, got " + std::to_string(g.order()));
  }
  return CanonicalSearch(g).run();
}

}  // namespace mcds
