#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "mcds/vertex_set.hpp"

namespace mcds {

using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Edges are stored normalized (u < v), deduplicated and sorted. Adjacency is
/// kept both as sorted neighbor lists and as per-vertex bitsets so membership
/// tests are constant time.
class Graph {
 public:
  Graph() = default;

  [[nodiscard]] std::size_t order() const noexcept { return order_; }
  [[nodiscard]] std::size_t edge_count() const noexcept { return edges_.size(); }
  [[nodiscard]] std::span<const Edge> edges() const noexcept { return edges_; }

  [[nodiscard]] std::span<const Vertex> neighbors(Vertex v) const;
  [[nodiscard]] std::size_t degree(Vertex v) const { return neighbors(v).size(); }
  [[nodiscard]] const VertexSet& open_neighborhood(Vertex v) const;
  [[nodiscard]] VertexSet closed_neighborhood(Vertex v) const;
  [[nodiscard]] bool has_edge(Vertex u, Vertex v) const;

  /// Per-vertex adjacency as 64-bit masks. Only valid for order <= 64.
  [[nodiscard]] std::vector<std::uint64_t> adjacency_masks() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.order_ == b.order_ && a.edges_ == b.edges_;
  }

 private:
  friend Graph make_graph(std::size_t order, std::span<const Edge> edges);

  std::size_t order_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<VertexSet> neighborhoods_;
};

/// Builds a graph from an edge list. Duplicate and reversed pairs collapse.
/// Throws GraphError on self-loops or endpoints outside [0, order).
Graph make_graph(std::size_t order, std::span<const Edge> edges);

inline Graph make_graph(std::size_t order, const std::vector<Edge>& edges) {
  return make_graph(order, std::span<const Edge>(edges));
}

}  // namespace mcds
