#pragma once

#include <cstddef>
#include <vector>

#include "mcds/graph.hpp"

namespace mcds {

/// Cyclic neighbor order at each vertex (a combinatorial embedding).
class RotationSystem {
 public:
  RotationSystem() = default;
  explicit RotationSystem(std::vector<std::vector<Vertex>> rotations) : rotations_(std::move(rotations)) {}

  [[nodiscard]] std::size_t order() const noexcept { return rotations_.size(); }
  [[nodiscard]] const std::vector<Vertex>& rotation(Vertex v) const { return rotations_.at(v); }

  /// Throws GraphError unless every list is a permutation of the vertex's
  /// neighbors in `g`.
  void validate(const Graph& g) const;

 private:
  std::vector<std::vector<Vertex>> rotations_;
};

/// A face as the cyclic sequence of vertices met along its boundary walk; the
/// directed edges are (v[i], v[i+1 mod len]).
using Face = std::vector<Vertex>;

/// Traces faces with the rule (u,v) -> (v,w), w the successor of u in v's
/// rotation. Every directed edge lies on exactly one face.
[[nodiscard]] std::vector<Face> trace_faces(const Graph& g, const RotationSystem& rotation);

/// V - E + F for the traced faces; 2 iff the embedding is planar (connected g).
[[nodiscard]] long euler_characteristic(const Graph& g, const RotationSystem& rotation);

}  // namespace mcds
