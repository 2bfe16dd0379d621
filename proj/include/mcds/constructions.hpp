#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mcds/embedding.hpp"
#include "mcds/graph.hpp"

namespace mcds {

struct BaseSpec {
  std::size_t t = 0;
  bool clique_x = true;
};

struct CompositeSpec {
  std::size_t t = 0;
  std::size_t k = 0;
  bool clique_x = false;
};

/// A block graph H with the set A of vertices the hub attaches to.
struct BlockSpec {
  Graph graph;
  VertexSet attachment;
};

/// A built graph together with its public vertex labeling and layer sets.
///
/// Base graph: x_1..x_t are 0..t-1, y_1..y_t are t..2t-1, z is 2t.
/// Composite: the hub s is 0 and block b (0-based) occupies
/// 1+b(2t+1) .. (b+1)(2t+1) in the base layout.
struct Construction {
  Graph graph;
  std::vector<std::string> labels;
  VertexSet x;
  VertexSet y;
  VertexSet z;
  std::optional<Vertex> hub;
};

/// G_t, optionally with X as a clique. Order 2t+1. Throws GraphError for t < 2.
[[nodiscard]] Construction base_graph(const BaseSpec& spec);

/// G_t^k: k copies of G_t joined through a hub adjacent to every x-vertex.
[[nodiscard]] Construction composite(const CompositeSpec& spec);

/// Generic hub composition of k copies of a block. The hub is vertex 0 and
/// copy b occupies 1 + b|V(H)| onward. Throws GraphError for an empty
/// attachment or when the hub-augmented block is disconnected.
[[nodiscard]] Graph compose(const BlockSpec& block, std::size_t k);

/// H plus one extra vertex (index |V(H)|) adjacent to A.
[[nodiscard]] Graph hub_augmented(const BlockSpec& block);

/// G_t - E(X) as a block attached through X.
[[nodiscard]] BlockSpec base_block(std::size_t t);

/// Plane rotation system for composite(t=3, k, clique_x=false), following the
/// drawing where each block's Y row reads y_2, y_3, y_1 and the edge y_2 x_3
/// is routed above z.
[[nodiscard]] RotationSystem planar_rotation_g3k(std::size_t k);

}  // namespace mcds
