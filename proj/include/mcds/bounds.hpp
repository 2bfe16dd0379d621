#pragma once

#include <cstddef>
#include <string>

#include "mcds/enumeration.hpp"

namespace mcds::bounds {

/// (t^3 + t^2)/2 - t: minimal CDSs of G_t meeting X. Throws GraphError for t < 2.
[[nodiscard]] BigInt f(std::size_t t);

struct RateReport {
  std::size_t t = 0;
  BigInt count;
  std::size_t block_order = 0;
  double rate = 0.0;
  /// Rate truncated (not rounded) to four decimals.
  std::string rendered;
};

/// f(t)^(1/(2t+1)).
[[nodiscard]] RateReport growth_rate(std::size_t t);

/// Per-block growth rate c^(1/m) of a block with c solutions on m vertices.
[[nodiscard]] double block_rate(const BigInt& count, std::size_t order);

/// argmax of growth_rate over [2, t_max]; ties go to the smaller t.
[[nodiscard]] std::size_t best_t(std::size_t t_max);

/// Least C with C^9 > 36^m: the per-block count an order-m base graph needs
/// to beat the t = 4 construction. Exact integer arithmetic.
[[nodiscard]] BigInt threshold(std::size_t order);

/// c^9 > 36^m, exactly.
[[nodiscard]] bool beats_t4(const BigInt& count, std::size_t order);

/// Four-decimal truncation of a positive value, e.g. 1.48909 -> "1.4890".
[[nodiscard]] std::string truncate4(double value);

}  // namespace mcds::bounds
