#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mcds/graph.hpp"

namespace mcds {

[[nodiscard]] bool is_connected(const Graph& g);

/// True iff the subgraph induced by `s` is connected. The empty set is not
/// connected.
[[nodiscard]] bool is_connected_induced(const Graph& g, const VertexSet& s);

/// True iff N[s] = V(g).
[[nodiscard]] bool is_dominating(const Graph& g, const VertexSet& s);

/// Connected dominating set test. Throws DisconnectedGraphError if `g` is not
/// connected.
[[nodiscard]] bool is_cds(const Graph& g, const VertexSet& s);

/// Minimality via single-vertex deletions. Supersets of a CDS in a connected
/// graph are CDSs, so this agrees with the literal definition; the agreement
/// is checked against is_minimal_cds_exhaustive in the tests.
[[nodiscard]] bool is_minimal_cds(const Graph& g, const VertexSet& s);

/// Literal definition: `s` is a CDS and no proper subset of it is. Exponential
/// in |s|.
[[nodiscard]] bool is_minimal_cds_exhaustive(const Graph& g, const VertexSet& s);

/// Articulation points (iterative lowlink DFS over every component).
[[nodiscard]] VertexSet cut_vertices(const Graph& g);

struct Coloring {
  std::vector<std::uint8_t> side;  // 0 or 1 per vertex
};

/// Result of one BFS 2-coloring sweep: either a proper coloring or an odd
/// closed walk (first vertex repeated at the end) certifying non-bipartiteness.
struct TwoColoring {
  std::optional<Coloring> coloring;
  std::vector<Vertex> odd_cycle;
};

[[nodiscard]] TwoColoring two_coloring(const Graph& g);
[[nodiscard]] std::optional<Coloring> is_bipartite(const Graph& g);

struct Degeneracy {
  std::size_t value = 0;
  /// Elimination order; each vertex has at most `value` neighbors after it.
  std::vector<Vertex> order;
};

[[nodiscard]] Degeneracy degeneracy(const Graph& g);

inline constexpr std::size_t kCanonicalFormMaxOrder = 8;

/// Lexicographically least upper-triangle adjacency string ('0'/'1', column
/// major as in graph6) over all vertex relabelings. Equal iff isomorphic.
/// Throws GuardError for order > 8.
[[nodiscard]] std::string canonical_form(const Graph& g);

}  // namespace mcds
