#include <cmath>

#include "doctest.h"
#include "mcds/bounds.hpp"
#include "mcds/errors.hpp"

using namespace mcds;

namespace {

BigInt pow_big(BigInt base, std::size_t e) {
  BigInt r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace

TEST_CASE("f(t)") {
  CHECK(bounds::f(2) == 4);
  CHECK(bounds::f(3) == 15);
  CHECK(bounds::f(4) == 36);
  CHECK(bounds::f(5) == 70);
  CHECK(bounds::f(10) == 540);
  CHECK_THROWS_AS((void)bounds::f(1), GraphError);
}

TEST_CASE("growth rates") {
  const auto r4 = bounds::growth_rate(4);
  CHECK(r4.count == 36);
  CHECK(r4.block_order == 9);
  CHECK(std::abs(r4.rate - std::pow(36.0L, 1.0L / 9)) < 5e-5);
  CHECK(r4.rendered == "1.4890");
  CHECK(std::abs(r4.rate - 1.489) < 5e-4);
  // The rate is the real ninth root of 36: bracket it with exact powers.
  CHECK(pow_big(148905, 9) < 36 * pow_big(100000, 9));
  CHECK(pow_big(148915, 9) > 36 * pow_big(100000, 9));
  CHECK(r4.rate > 1.48905);
  CHECK(r4.rate < 1.48915);

  const auto r3 = bounds::growth_rate(3);
  CHECK(std::abs(r3.rate - std::pow(15.0L, 1.0L / 7)) < 5e-5);
  CHECK(std::abs(r3.rate - 1.472) < 5e-4);
  CHECK(r3.rendered == "1.4723");

  CHECK(std::abs(bounds::growth_rate(2).rate - std::pow(4.0, 0.2)) < 1e-12);
  CHECK(std::abs(bounds::block_rate(225, 14) - std::pow(225.0, 1.0 / 14)) < 1e-12);
}

TEST_CASE("argmax of the rate") {
  CHECK(bounds::best_t(2) == 2);
  CHECK(bounds::best_t(3) == 3);
  CHECK(bounds::best_t(4) == 4);
  CHECK(bounds::best_t(50) == 4);
  const double top = bounds::growth_rate(4).rate;
  for (std::size_t t = 2; t <= 50; ++t) CHECK(bounds::growth_rate(t).rate <= top);
}

TEST_CASE("thresholds") {
  CHECK(bounds::threshold(7) == 17);
  CHECK(bounds::threshold(8) == 25);
  CHECK(bounds::threshold(9) == 37);
  CHECK(bounds::threshold(10) == 54);
  CHECK(bounds::threshold(11) == 80);
}

TEST_CASE("threshold brackets the defining inequality") {
  BigInt previous = 0;
  for (std::size_t m = 1; m <= 64; ++m) {
    const BigInt c = bounds::threshold(m);
    const BigInt rhs = pow_big(36, m);
    CHECK(pow_big(c, 9) > rhs);
    CHECK(pow_big(c - 1, 9) <= rhs);
    CHECK(bounds::beats_t4(c, m));
    CHECK_FALSE(bounds::beats_t4(c - 1, m));
    CHECK(c >= previous);
    previous = c;
  }
  // 36 per block on 9 vertices ties the t = 4 rate and does not beat it.
  CHECK_FALSE(bounds::beats_t4(36, 9));
}

TEST_CASE("four-decimal truncation") {
  CHECK(bounds::truncate4(1.48909) == "1.4890");
  CHECK(bounds::truncate4(1.47236) == "1.4723");
  CHECK(bounds::truncate4(2.0) == "2.0000");
  CHECK(bounds::truncate4(1.99999) == "1.9999");
}
