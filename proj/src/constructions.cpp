#include "mcds/constructions.hpp"

#include <array>

#include "mcds/structure.hpp"

namespace mcds {

namespace {

void check_t(std::size_t t) {
  if (t < 2) throw GraphError("t must be at least 2 (got " + std::to_string(t) + ")");
}

/// Edges of G_t in base layout, shifted by `offset`.
void append_base_edges(std::vector<Edge>& edges, std::size_t t, bool clique_x, Vertex offset) {
  const auto x = [&](std::size_t i) { return static_cast<Vertex>(offset + i); };
  const auto y = [&](std::size_t j) { return static_cast<Vertex>(offset + t + j); };
  const auto z = static_cast<Vertex>(offset + 2 * t);
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t j = 0; j < t; ++j) {
      if (i != j) edges.emplace_back(x(i), y(j));
    }
    edges.emplace_back(z, y(i));
  }
  if (clique_x) {
    for (std::size_t i = 0; i < t; ++i) {
      for (std::size_t j = i + 1; j < t; ++j) edges.emplace_back(x(i), x(j));
    }
  }
}

}  // namespace

Construction base_graph(const BaseSpec& spec) {
  check_t(spec.t);
  const std::size_t t = spec.t;
  const std::size_t n = 2 * t + 1;
  std::vector<Edge> edges;
  append_base_edges(edges, t, spec.clique_x, 0);

  Construction out{make_graph(n, edges), {}, VertexSet(n), VertexSet(n), VertexSet(n), std::nullopt};
  out.labels.resize(n);
  for (std::size_t i = 0; i < t; ++i) {
    out.labels[i] = "x_" + std::to_string(i + 1);
    out.labels[t + i] = "y_" + std::to_string(i + 1);
    out.x.insert(static_cast<Vertex>(i));
    out.y.insert(static_cast<Vertex>(t + i));
  }
  out.labels[2 * t] = "z";
  out.z.insert(static_cast<Vertex>(2 * t));
  return out;
}

Construction composite(const CompositeSpec& spec) {
  check_t(spec.t);
  if (spec.k < 1) throw GraphError("k must be at least 1");
  const std::size_t t = spec.t;
  const std::size_t block = 2 * t + 1;
  const std::size_t n = spec.k * block + 1;

  std::vector<Edge> edges;
  for (std::size_t b = 0; b < spec.k; ++b) {
    const auto offset = static_cast<Vertex>(1 + b * block);
    append_base_edges(edges, t, spec.clique_x, offset);
    for (std::size_t i = 0; i < t; ++i) edges.emplace_back(0, static_cast<Vertex>(offset + i));
  }

  Construction out{make_graph(n, edges), {}, VertexSet(n), VertexSet(n), VertexSet(n), Vertex{0}};
  out.labels.resize(n);
  out.labels[0] = "s";
  for (std::size_t b = 0; b < spec.k; ++b) {
    const std::size_t offset = 1 + b * block;
    const std::string tag = std::to_string(b + 1) + ",";
    for (std::size_t i = 0; i < t; ++i) {
      out.labels[offset + i] = "x_{" + tag + std::to_string(i + 1) + "}";
      out.labels[offset + t + i] = "y_{" + tag + std::to_string(i + 1) + "}";
      out.x.insert(static_cast<Vertex>(offset + i));
      out.y.insert(static_cast<Vertex>(offset + t + i));
    }
    out.labels[offset + 2 * t] = "z_" + std::to_string(b + 1);
    out.z.insert(static_cast<Vertex>(offset + 2 * t));
  }
  return out;
}

Graph hub_augmented(const BlockSpec& block) {
  const std::size_t m = block.graph.order();
  if (block.attachment.order() != m) throw RangeError("attachment set order does not match block order");
  std::vector<Edge> edges(block.graph.edges().begin(), block.graph.edges().end());
  block.attachment.for_each([&](Vertex a) { edges.emplace_back(a, static_cast<Vertex>(m)); });
  return make_graph(m + 1, edges);
}

Graph compose(const BlockSpec& block, std::size_t k) {
  if (k < 1) throw GraphError("k must be at least 1");
  if (block.attachment.empty()) throw GraphError("attachment set must be nonempty");
  if (!is_connected(hub_augmented(block))) throw GraphError("hub-augmented block is disconnected");

  const std::size_t m = block.graph.order();
  std::vector<Edge> edges;
  for (std::size_t b = 0; b < k; ++b) {
    const auto offset = static_cast<Vertex>(1 + b * m);
    for (auto [u, v] : block.graph.edges()) edges.emplace_back(u + offset, v + offset);
    block.attachment.for_each([&](Vertex a) { edges.emplace_back(0, a + offset); });
  }
  return make_graph(1 + k * m, edges);
}

BlockSpec base_block(std::size_t t) {
  auto c = base_graph({t, false});
  return BlockSpec{std::move(c.graph), std::move(c.x)};
}

RotationSystem planar_rotation_g3k(std::size_t k) {
  if (k < 1) throw GraphError("k must be at least 1");
  constexpr std::size_t kBlock = 7;
  // Local ids: x_1..x_3 = 0..2, y_1..y_3 = 3..5, z = 6, hub = kHub.
  // Counter-clockwise order read off the drawing.
  constexpr Vertex kHub = 99;
  static constexpr std::array<std::array<Vertex, 3>, kBlock> kLocal{{
      {kHub, 5, 4},  // x_1: s, y_3, y_2
      {kHub, 3, 5},  // x_2: s, y_1, y_3
      {kHub, 4, 3},  // x_3: s, y_2 (arc), y_1
      {1, 2, 6},     // y_1: x_2, x_3, z
      {0, 6, 2},     // y_2: x_1, z, x_3 (arc)
      {0, 1, 6},     // y_3: x_1, x_2, z
      {4, 5, 3},     // z: y_2, y_3, y_1
  }};

  std::vector<std::vector<Vertex>> rot(1 + k * kBlock);
  // Blocks sit left to right above the hub, so counter-clockwise around s the
  // rightmost block comes first.
  for (std::size_t b = k; b-- > 0;) {
    const auto offset = static_cast<Vertex>(1 + b * kBlock);
    for (Vertex i = 3; i-- > 0;) rot[0].push_back(offset + i);
  }
  for (std::size_t b = 0; b < k; ++b) {
    const auto offset = static_cast<Vertex>(1 + b * kBlock);
    for (std::size_t local = 0; local < kBlock; ++local) {
      for (Vertex w : kLocal[local]) rot[offset + local].push_back(w == kHub ? 0 : offset + w);
    }
  }
  return RotationSystem(std::move(rot));
}

}  // namespace mcds
