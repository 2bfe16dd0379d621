#include "mcds/embedding.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "mcds/structure.hpp"

namespace mcds {

void RotationSystem::validate(const Graph& g) const {
  if (rotations_.size() != g.order()) {
    throw GraphError("rotation system has " + std::to_string(rotations_.size()) + " lists for a graph of order " +
                     std::to_string(g.order()));
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    std::vector<Vertex> sorted = rotations_[v];
    std::sort(sorted.begin(), sorted.end());
    const auto nbrs = g.neighbors(v);
    if (!std::equal(sorted.begin(), sorted.end(), nbrs.begin(), nbrs.end())) {
      throw GraphError("rotation at vertex " + std::to_string(v) + " is not a permutation of its neighbors");
    }
  }
}

std::vector<Face> trace_faces(const Graph& g, const RotationSystem& rotation) {
  rotation.validate(g);
  if (!is_connected(g)) throw DisconnectedGraphError("face tracing requires a connected graph");
  // K1: the outer face has an empty boundary.
  if (g.edge_count() == 0) return {Face{}};

  // position[(v, u)] = index of u in v's rotation.
  std::map<Edge, std::size_t> position;
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto& rot = rotation.rotation(v);
    for (std::size_t i = 0; i < rot.size(); ++i) position[{v, rot[i]}] = i;
  }

  std::map<Edge, bool> used;
  std::vector<Face> faces;
  for (Vertex v = 0; v < g.order(); ++v) {
    for (Vertex w : rotation.rotation(v)) {
      if (used[{v, w}]) continue;
      Face face;
      Vertex a = v;
      Vertex b = w;
      while (!used[{a, b}]) {
        used[{a, b}] = true;
        face.push_back(a);
        const auto& rot = rotation.rotation(b);
        const Vertex c = rot[(position.at({b, a}) + 1) % rot.size()];
        a = b;
        b = c;
      }
      faces.push_back(std::move(face));
    }
  }
  return faces;
}

long euler_characteristic(const Graph& g, const RotationSystem& rotation) {
  const auto faces = trace_faces(g, rotation);
  return static_cast<long>(g.order()) - static_cast<long>(g.edge_count()) + static_cast<long>(faces.size());
}

}  // namespace mcds
