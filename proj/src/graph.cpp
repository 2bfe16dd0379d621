#include "mcds/graph.hpp"

#include <algorithm>
#include <string>

namespace mcds {

namespace {

void check_vertex(std::size_t order, Vertex v) {
  if (v >= order) {
    throw RangeError("vertex " + std::to_string(v) + " out of range for order " + std::to_string(order));
  }
}

}  // namespace

Graph make_graph(std::size_t order, std::span<const Edge> edges) {
  Graph g;
  g.order_ = order;
  g.edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u >= order || v >= order) {
      throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") has an endpoint outside [0," +
                       std::to_string(order) + ")");
    }
    if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
    g.edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());

  g.adjacency_.assign(order, {});
  g.neighborhoods_.assign(order, VertexSet(order));
  for (auto [u, v] : g.edges_) {
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
    g.neighborhoods_[u].insert(v);
    g.neighborhoods_[v].insert(u);
  }
  for (auto& list : g.adjacency_) std::sort(list.begin(), list.end());
  return g;
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  check_vertex(order_, v);
  return adjacency_[v];
}

const VertexSet& Graph::open_neighborhood(Vertex v) const {
  check_vertex(order_, v);
  return neighborhoods_[v];
}

VertexSet Graph::closed_neighborhood(Vertex v) const {
  VertexSet out = open_neighborhood(v);
  out.insert(v);
  return out;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  check_vertex(order_, u);
  check_vertex(order_, v);
  return neighborhoods_[u].contains(v);
}

std::vector<std::uint64_t> Graph::adjacency_masks() const {
  if (order_ > 64) throw GuardError("adjacency masks require order <= 64");
  std::vector<std::uint64_t> masks(order_);
  for (std::size_t v = 0; v < order_; ++v) masks[v] = neighborhoods_[v].to_mask();
  return masks;
}

}  // namespace mcds
