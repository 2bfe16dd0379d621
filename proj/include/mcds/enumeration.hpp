#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "mcds/constructions.hpp"
#include "mcds/graph.hpp"

namespace mcds {

using BigInt = boost::multiprecision::cpp_int;

enum class EnumerationMode { kCountOnly, kStreamSets };

inline constexpr std::size_t kDefaultSizeLimit = 30;
/// Subsets are bitmasks in a 64-bit word.
inline constexpr std::size_t kHardSizeLimit = 63;
inline constexpr std::size_t kDefaultMaterializeCap = 1'000'000;

using SetSink = std::function<void(const VertexSet&)>;

struct EnumerationRequest {
  EnumerationMode mode = EnumerationMode::kCountOnly;
  /// Keep only solutions meeting this set.
  std::optional<VertexSet> intersect_filter;
  /// Vertices assumed to lie in every solution; only prunes the search.
  std::optional<VertexSet> forced;
  /// Brute-force guard on the number of vertices; at most kHardSizeLimit.
  std::size_t size_limit = kDefaultSizeLimit;
  /// Stream mode: at most this many sets are kept in the result.
  std::size_t materialize_cap = kDefaultMaterializeCap;
  /// Stream mode: called once per solution in ascending encoding order.
  SetSink sink;
  /// Contiguous ranges of the subset space evaluated concurrently.
  unsigned threads = 1;
};

struct EnumerationStats {
  std::uint64_t subsets_inspected = 0;
  std::uint64_t cds_found = 0;
  std::chrono::duration<double> elapsed{};
};

struct EnumerationResult {
  BigInt count = 0;
  std::vector<VertexSet> sets;
  bool truncated = false;  // more solutions than materialize_cap
  EnumerationStats stats;
};

/// Visits every subset containing the forced vertices in ascending bitmask
/// order and reports the minimal connected dominating sets.
///
/// Throws DisconnectedGraphError for a disconnected graph and GuardError when
/// the order exceeds the size limit.
[[nodiscard]] EnumerationResult enumerate_mcds(const Graph& g, const EnumerationRequest& request = {});

/// Number of minimal connected dominating sets. Cut vertices are forced for
/// n >= 3 since every CDS contains them.
[[nodiscard]] BigInt count_mcds(const Graph& g, std::size_t size_limit = kDefaultSizeLimit);

/// Minimal T in V(H) such that A together with N_H[T] covers V(H) and T plus
/// the hub induces a connected graph in H + hub. Minimality is over T; the
/// hub is always present. Sets are reported in H's vertex numbering.
[[nodiscard]] EnumerationResult block_mcds(const BlockSpec& block, const EnumerationRequest& request = {});

/// block_mcds(block)^k, the count for compose(block, k). Requires k >= 2
/// (throws GraphError otherwise; for k = 1 count the composed graph).
[[nodiscard]] BigInt composite_count_via_blocks(const BlockSpec& block, std::size_t k);

}  // namespace mcds
