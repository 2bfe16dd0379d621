#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "mcds/enumeration.hpp"
#include "mcds/graph.hpp"

namespace mcds::search {

inline constexpr std::size_t kGeneratorMaxOrder = 7;
inline constexpr std::size_t kAllPolicyMaxOrder = 10;
/// Composed k = 2 graphs up to this order get a brute-force product check.
inline constexpr std::size_t kProductCheckMaxOrder = 26;

/// One representative per isomorphism class of connected graphs on n
/// vertices, in canonical labeling, sorted by canonical form. Throws
/// GuardError for n > 7.
[[nodiscard]] std::vector<Graph> generate_connected(std::size_t n);

struct AttachmentPolicy {
  enum class Kind { kAllNonempty, kFullVertexSet, kExplicit };
  Kind kind = Kind::kAllNonempty;
  std::vector<std::vector<Vertex>> sets;  // kExplicit only

  static AttachmentPolicy all() { return {Kind::kAllNonempty, {}}; }
  static AttachmentPolicy full() { return {Kind::kFullVertexSet, {}}; }
  static AttachmentPolicy explicit_sets(std::vector<std::vector<Vertex>> sets) {
    return {Kind::kExplicit, std::move(sets)};
  }
  [[nodiscard]] std::string name() const;
};

struct CandidateEvaluation {
  std::optional<VertexSet> attachment;  // best A, absent if every A was skipped
  BigInt count = 0;
  std::size_t evaluated = 0;
  std::size_t skipped = 0;  // disconnecting or out-of-range attachment sets
};

/// Maximizes block_mcds(H, A) over the policy's attachment sets. Ties go to
/// the lexicographically least sorted vertex list. Throws GuardError when the
/// all-subsets policy meets a block larger than kAllPolicyMaxOrder.
[[nodiscard]] CandidateEvaluation evaluate_candidate(const Graph& h, const AttachmentPolicy& policy);

struct ThresholdMode {
  enum class Kind { kBeatT4, kMinCount };
  Kind kind = Kind::kBeatT4;
  BigInt min_count = 0;

  static ThresholdMode beat_t4() { return {Kind::kBeatT4, 0}; }
  static ThresholdMode at_least(BigInt n) { return {Kind::kMinCount, std::move(n)}; }
  [[nodiscard]] std::string name() const;
  /// Count a block of this order must reach to be reported.
  [[nodiscard]] BigInt threshold_for(std::size_t order) const;
};

struct SearchHit {
  std::size_t seq = 0;
  std::string graph6;
  std::size_t order = 0;
  std::vector<Vertex> attachment;
  BigInt count;
  BigInt threshold;
  double rate = 0.0;
  /// "verified", "mismatch" or "skipped" (composed order too large).
  std::string product_check;
};

struct SkippedInput {
  std::size_t line = 0;
  std::string error;
};

struct BestSeen {
  std::size_t seq = 0;
  std::string graph6;
  std::size_t order = 0;
  std::vector<Vertex> attachment;
  BigInt count;
  double rate = 0.0;
};

struct SearchSummary {
  std::size_t processed = 0;
  std::size_t hits = 0;
  std::vector<SkippedInput> skipped_inputs;
  std::size_t attachments_evaluated = 0;
  std::size_t attachments_skipped = 0;
  std::optional<BestSeen> best;
  bool aborted = false;
  double elapsed_ms = 0.0;
};

struct SearchConfig {
  /// graph6 stream; when null the internal generator supplies orders
  /// 1..generator_max_order.
  std::istream* input = nullptr;
  std::size_t generator_max_order = 6;
  AttachmentPolicy policy = AttachmentPolicy::all();
  ThresholdMode mode = ThresholdMode::beat_t4();
  unsigned jobs = 1;
  /// Receives one JSON object per hit and a final {"summary": ...} line.
  std::ostream* output = nullptr;
  bool include_timing = false;
  bool product_check = true;
};

/// Evaluates every input graph once and reports hits in input order,
/// independent of `jobs`.
SearchSummary search_stream(const SearchConfig& config);

/// 0 completed, 2 completed with skipped inputs, 1 aborted.
[[nodiscard]] int exit_code(const SearchSummary& summary);

[[nodiscard]] std::string hit_json(const SearchHit& hit);
[[nodiscard]] std::string summary_json(const SearchSummary& summary, const SearchConfig& config);

}  // namespace mcds::search
