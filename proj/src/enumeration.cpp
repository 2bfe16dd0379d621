#include "mcds/enumeration.hpp"

#include <algorithm>
#include <bit>
#include <thread>

#include "mcds/structure.hpp"

namespace mcds {

namespace {

/// Bitmask predicates over a graph of order <= 64.
class MaskKernel {
 public:
  explicit MaskKernel(const Graph& g) : open_(g.adjacency_masks()) {
    const std::size_t n = g.order();
    all_ = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    closed_.resize(n);
    for (std::size_t v = 0; v < n; ++v) closed_[v] = open_[v] | (std::uint64_t{1} << v);
  }

  [[nodiscard]] std::uint64_t all() const { return all_; }

  [[nodiscard]] bool dominating(std::uint64_t s) const {
    std::uint64_t covered = 0;
    for (std::uint64_t rest = s; rest != 0; rest &= rest - 1) covered |= closed_[std::countr_zero(rest)];
    return covered == all_;
  }

  [[nodiscard]] bool connected(std::uint64_t s) const {
    if (s == 0) return false;
    std::uint64_t seen = s & (~s + 1);
    std::uint64_t frontier = seen;
    while (frontier != 0) {
      std::uint64_t next = 0;
      for (std::uint64_t rest = frontier; rest != 0; rest &= rest - 1) next |= open_[std::countr_zero(rest)];
      next &= s & ~seen;
      seen |= next;
      frontier = next;
    }
    return seen == s;
  }

  [[nodiscard]] bool qualifies(std::uint64_t s) const { return dominating(s) && connected(s); }

  /// No single deletion among `deletable` keeps the set qualifying.
  [[nodiscard]] bool minimal(std::uint64_t s, std::uint64_t deletable) const {
    for (std::uint64_t rest = s & deletable; rest != 0; rest &= rest - 1) {
      if (qualifies(s & ~(rest & (~rest + 1)))) return false;
    }
    return true;
  }

 private:
  std::vector<std::uint64_t> open_;
  std::vector<std::uint64_t> closed_;
  std::uint64_t all_ = 0;
};

/// Deposits the low bits of `rank` into the set positions of `mask`.
std::uint64_t deposit(std::uint64_t rank, std::uint64_t mask) {
  std::uint64_t out = 0;
  for (std::uint64_t rest = mask; rest != 0 && rank != 0; rest &= rest - 1, rank >>= 1) {
    if (rank & 1U) out |= rest & (~rest + 1);
  }
  return out;
}

struct Search {
  const MaskKernel& kernel;
  std::uint64_t forced = 0;
  std::uint64_t deletable = 0;
  std::uint64_t filter = 0;  // 0 = no filter
  /// Bits to drop before reporting (the hub in block mode).
  std::uint64_t report_drop = 0;
  std::size_t report_order = 0;
};

struct ChunkResult {
  std::uint64_t count = 0;
  std::uint64_t inspected = 0;
  std::uint64_t cds = 0;
  std::vector<std::uint64_t> sets;
};

/// Scans submask ranks [lo, hi) of the free positions.
ChunkResult scan(const Search& search, std::uint64_t free, std::uint64_t lo, std::uint64_t hi, bool collect) {
  ChunkResult out;
  std::uint64_t sub = deposit(lo, free);
  for (std::uint64_t rank = lo; rank < hi; ++rank, sub = (sub - free) & free) {
    const std::uint64_t s = search.forced | sub;
    ++out.inspected;
    if (!search.kernel.qualifies(s)) continue;
    ++out.cds;
    if (search.filter != 0 && (s & search.filter) == 0) continue;
    if (!search.kernel.minimal(s, search.deletable)) continue;
    ++out.count;
    if (collect) out.sets.push_back(s);
  }
  return out;
}

EnumerationResult run(const Search& search, const EnumerationRequest& request) {
  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t free = search.kernel.all() & ~search.forced;
  const int free_bits = std::popcount(free);
  const std::uint64_t total = free_bits >= 64 ? ~std::uint64_t{0} : std::uint64_t{1} << free_bits;
  const bool collect = request.mode == EnumerationMode::kStreamSets;

  const unsigned threads = std::max(1U, request.threads);
  const std::uint64_t chunks = std::min<std::uint64_t>(threads, total);
  std::vector<ChunkResult> parts(chunks);
  if (chunks <= 1) {
    parts[0] = scan(search, free, 0, total, collect);
  } else {
    std::vector<std::jthread> workers;
    const std::uint64_t step = total / chunks;
    for (std::uint64_t c = 0; c < chunks; ++c) {
      const std::uint64_t lo = c * step;
      const std::uint64_t hi = c + 1 == chunks ? total : lo + step;
      workers.emplace_back([&, c, lo, hi] { parts[c] = scan(search, free, lo, hi, collect); });
    }
  }

  EnumerationResult result;
  for (const auto& part : parts) {
    result.count += part.count;
    result.stats.subsets_inspected += part.inspected;
    result.stats.cds_found += part.cds;
    for (std::uint64_t s : part.sets) {
      const auto set = VertexSet::from_mask(search.report_order, s & ~search.report_drop);
      if (request.sink) request.sink(set);
      if (result.sets.size() < request.materialize_cap) {
        result.sets.push_back(set);
      } else {
        result.truncated = true;
      }
    }
  }
  result.stats.elapsed = std::chrono::steady_clock::now() - start;
  return result;
}

void check_guard(std::size_t order, std::size_t limit) {
  const std::size_t effective = std::min(limit, kHardSizeLimit);
  if (order > effective) {
    throw GuardError("brute-force enumeration limited to " + std::to_string(effective) + " vertices (got " +
                     std::to_string(order) +
                     "); decompose at the hub with block_mcds / composite_count_via_blocks, or raise the limit "
                     "(MCDS_FORCE_LIMIT)");
  }
}

std::uint64_t optional_mask(const std::optional<VertexSet>& s, std::size_t order, const char* what) {
  if (!s) return 0;
  if (s->order() != order) throw RangeError(std::string(what) + " set order does not match the graph");
  return s->to_mask();
}

}  // namespace

EnumerationResult enumerate_mcds(const Graph& g, const EnumerationRequest& request) {
  check_guard(g.order(), request.size_limit);
  if (!is_connected(g)) throw DisconnectedGraphError("enumeration requires a connected graph");
  const MaskKernel kernel(g);
  Search search{kernel};
  search.forced = optional_mask(request.forced, g.order(), "forced");
  search.filter = optional_mask(request.intersect_filter, g.order(), "filter");
  search.deletable = kernel.all();
  search.report_order = g.order();
  if (request.intersect_filter && request.intersect_filter->empty()) return {};
  return run(search, request);
}

BigInt count_mcds(const Graph& g, std::size_t size_limit) {
  EnumerationRequest request;
  request.size_limit = size_limit;
  if (g.order() >= 3) {
    check_guard(g.order(), size_limit);
    request.forced = cut_vertices(g);
  }
  return enumerate_mcds(g, request).count;
}

EnumerationResult block_mcds(const BlockSpec& block, const EnumerationRequest& request) {
  const std::size_t m = block.graph.order();
  check_guard(m, request.size_limit);
  if (block.attachment.empty()) throw GraphError("attachment set must be nonempty");
  const Graph augmented = hub_augmented(block);
  if (!is_connected(augmented)) throw GraphError("hub-augmented block is disconnected");

  const MaskKernel kernel(augmented);
  const std::uint64_t hub = std::uint64_t{1} << m;
  Search search{kernel};
  search.forced = hub | optional_mask(request.forced, m, "forced");
  search.filter = optional_mask(request.intersect_filter, m, "filter");
  search.deletable = kernel.all() & ~hub;
  search.report_drop = hub;
  search.report_order = m;
  if (request.intersect_filter && request.intersect_filter->empty()) return {};
  return run(search, request);
}

BigInt composite_count_via_blocks(const BlockSpec& block, std::size_t k) {
  if (k < 2) {
    throw GraphError("the block product needs k >= 2 (the hub is a cut vertex only then); use count_mcds on the "
                     "composed graph");
  }
  const BigInt per_block = block_mcds(block).count;
  BigInt total = 1;
  for (std::size_t i = 0; i < k; ++i) total *= per_block;
  return total;
}

}  // namespace mcds
