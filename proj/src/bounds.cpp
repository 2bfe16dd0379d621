#include "mcds/bounds.hpp"

#include <cmath>

namespace mcds::bounds {

namespace {

BigInt power(const BigInt& base, std::size_t exp) {
  BigInt out = 1;
  for (std::size_t i = 0; i < exp; ++i) out *= base;
  return out;
}

// The t = 4 block: 36 solutions on 9 vertices.
constexpr unsigned kReferenceCount = 36;
constexpr std::size_t kReferenceOrder = 9;

}  // namespace

BigInt f(std::size_t t) {
  if (t < 2) throw GraphError("f(t) is defined for t >= 2");
  const BigInt tt = t;
  const BigInt twice = tt * tt * tt + tt * tt;
  return twice / 2 - tt;
}

double block_rate(const BigInt& count, std::size_t order) {
  if (order == 0) return 0.0;
  return std::pow(count.convert_to<double>(), 1.0 / static_cast<double>(order));
}

RateReport growth_rate(std::size_t t) {
  RateReport r;
  r.t = t;
  r.count = f(t);
  r.block_order = 2 * t + 1;
  r.rate = block_rate(r.count, r.block_order);
  r.rendered = truncate4(r.rate);
  return r;
}

std::size_t best_t(std::size_t t_max) {
  if (t_max < 2) throw GraphError("best_t needs t_max >= 2");
  std::size_t best = 2;
  double best_rate = growth_rate(2).rate;
  for (std::size_t t = 3; t <= t_max; ++t) {
    const double r = growth_rate(t).rate;
    if (r > best_rate) {
      best = t;
      best_rate = r;
    }
  }
  return best;
}

bool beats_t4(const BigInt& count, std::size_t order) {
  return power(count, kReferenceOrder) > power(BigInt(kReferenceCount), order);
}

BigInt threshold(std::size_t order) {
  if (order < 1) throw GraphError("threshold needs order >= 1");
  // Least c with beats_t4(c): gallop to an upper bound, then bisect.
  BigInt lo = 0;  // never beats
  BigInt hi = 1;
  while (!beats_t4(hi, order)) {
    lo = hi;
    hi *= 2;
  }
  while (hi - lo > 1) {
    const BigInt mid = (lo + hi) / 2;
    if (beats_t4(mid, order)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

std::string truncate4(double value) {
  const auto scaled = static_cast<long long>(std::floor(value * 10000.0));
  std::string digits = std::to_string(scaled % 10000);
  digits.insert(0, 4 - digits.size(), '0');
  return std::to_string(scaled / 10000) + "." + digits;
}

}  // namespace mcds::bounds
