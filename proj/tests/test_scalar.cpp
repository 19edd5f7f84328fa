#include <gtest/gtest.h>

#include <cstring>
#include <thread>

#include "charpoly/engine.hpp"
#include "charpoly/matrix_gen.hpp"
#include "charpoly/scalar.hpp"

namespace charpoly {
namespace {

TEST(Flop64, CountsOneUnitPerOperation) {
  const FlopScope scope;
  Flop64 a = 1.5, b = 2.0;
  Flop64 c = a + b;
  c = c - a;
  c = c * b;
  c = c / b;
  c = -c;  // not counted
  (void)sqrt(Flop64(4.0));
  const FlopCounts got = scope.elapsed();
  EXPECT_EQ(got.adds, 2u);
  EXPECT_EQ(got.muls, 1u);
  EXPECT_EQ(got.divs, 1u);
  EXPECT_EQ(got.sqrts, 1u);
  EXPECT_EQ(got.flops(), 4u);
  EXPECT_EQ(c.value(), -2.0);
}

TEST(Flop64, ResetClearsCounters) {
  Flop64 a = 1.0;
  a += a;
  reset_flop_counts();
  EXPECT_EQ(flop_counts().flops(), 0u);
}

TEST(Flop64, InstrumentedTierIsBitwiseIdenticalToStandard) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto u = gen_uniform_scaled(9, seed);
    const auto plain = pbar_coeffs(u);
    const auto counted = pbar_coeffs(u.cast<Flop64>());
    ASSERT_EQ(plain.size(), counted.size());
    for (std::size_t k = 0; k < plain.size(); ++k) {
      const double c = counted[k].value();
      EXPECT_EQ(std::memcmp(&plain[k], &c, sizeof(double)), 0) << "seed " << seed << " k " << k;
    }
  }
}

TEST(Flop64, CountersArePerThread) {
  const auto u = gen_uniform_scaled(12, 3).cast<Flop64>();
  const FlopScope main_scope;
  (void)pbar_coeffs(u);
  const std::uint64_t single = main_scope.elapsed().flops();

  std::uint64_t a = 0, b = 0;
  std::thread ta([&] {
    const FlopScope s;
    (void)pbar_coeffs(u);
    a = s.elapsed().flops();
  });
  std::thread tb([&] {
    const FlopScope s;
    (void)pbar_coeffs(u);
    (void)pbar_coeffs(u);
    b = s.elapsed().flops();
  });
  ta.join();
  tb.join();
  EXPECT_EQ(a, single);
  EXPECT_EQ(b, 2 * single);
  EXPECT_EQ(main_scope.elapsed().flops(), single);
}

TEST(ScalarTraits, EpsilonFollowsTier) {
  EXPECT_EQ(epsilon<double>(), std::numeric_limits<double>::epsilon());
  EXPECT_EQ(epsilon<float>(), std::numeric_limits<float>::epsilon());
  EXPECT_EQ(epsilon<Flop64>().value(), std::numeric_limits<double>::epsilon());
  EXPECT_EQ(ScalarTraits<float>::tier, ScalarTier::Reduced);
}

}  // namespace
}  // namespace charpoly
