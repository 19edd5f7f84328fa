#include <gtest/gtest.h>

#include "charpoly/engine.hpp"
#include "charpoly/hessenberg.hpp"
#include "charpoly/lab.hpp"
#include "charpoly/linalg.hpp"
#include "charpoly/matrix_gen.hpp"
#include "oracles.hpp"

namespace charpoly {
namespace {

template <class T>
void expect_hessenberg_pattern(const HessenbergMatrix<T>& h) {
  for (std::size_t i = 0; i < h.size(); ++i)
    for (std::size_t k = 0; k + 1 < i; ++k) EXPECT_TRUE(h(i, k) == T(0)) << i << "," << k;
}

TEST(Hessenberg, SmallMatricesAreUnchanged) {
  const Matrix<double> one(1, {3.5});
  EXPECT_EQ(reduce_to_hessenberg(one).matrix(), one);
  const Matrix<double> two(2, {1, 2, 3, 4});
  EXPECT_EQ(reduce_to_hessenberg(two).matrix(), two);
}

TEST(Hessenberg, IdentitySkipsAllReflectors) {
  const auto h = reduce_to_hessenberg(Matrix<double>::identity(3));
  EXPECT_EQ(h.matrix(), Matrix<double>::identity(3));
}

TEST(Hessenberg, ZeroPatternIsExact) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const std::size_t n = 3 + seed;
    expect_hessenberg_pattern(reduce_to_hessenberg(gen_uniform_scaled(n, seed)));
    expect_hessenberg_pattern(reduce_to_hessenberg(gen_uniform_scaled(n, seed).cast<float>()));
  }
}

TEST(Hessenberg, NegligibleTailIsZeroedWithoutReflector) {
  // Column 0 below the subdiagonal is 1e-300, far below eps * |x|.
  Matrix<double> u(3, {1, 2, 3, 4, 5, 6, 1e-300, 8, 9});
  const auto h = reduce_to_hessenberg(u);
  EXPECT_EQ(h(2, 0), 0.0);
  EXPECT_EQ(h(1, 0), 4.0);
  EXPECT_EQ(h(0, 1), 2.0);
}

TEST(Hessenberg, TraceAndDeterminantArePreserved) {
  for (std::size_t n : {5, 17, 50}) {
    const auto u = gen_uniform_scaled(n, 7 * n);
    const auto h = reduce_to_hessenberg(u);
    EXPECT_NEAR(h.matrix().trace(), u.trace(), 1e-12 * static_cast<double>(n) * max_abs(u));
    const double du = det_lu(u);
    EXPECT_NEAR(det_lu(h.matrix()), du, 1e-10 * std::fabs(du));
  }
}

TEST(Hessenberg, PointEvaluationAtFixedX) {
  const auto u = gen_uniform_scaled(5, 2024);
  const auto c = pbar_coeffs_hessenberg(reduce_to_hessenberg(u));
  const double d = det_lu(shifted_identity(u, 0.37));
  EXPECT_NEAR(poly_eval(c, 0.37), d, 1e-10 * std::fabs(d));
}

TEST(Hessenberg, PreservesCharacteristicPolynomialAgainstMinorOracle) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const std::size_t n = 1 + seed % 6;
    const auto u = gen_uniform_scaled(n, seed);
    const auto ref = testing::principal_minor_pbar(u);
    const auto got = pbar_coeffs_hessenberg(reduce_to_hessenberg(u));
    const double scale = testing::max_abs_of(ref);
    for (std::size_t k = 0; k <= n; ++k) EXPECT_NEAR(got[k], ref[k], 1e-10 * scale);
  }
}

TEST(Hessenberg, FromDenseValidatesPattern) {
  EXPECT_NO_THROW(HessenbergMatrix<double>::from_dense(Matrix<double>(3, {1, 2, 3, 4, 5, 6, 0, 8, 9})));
  EXPECT_THROW(HessenbergMatrix<double>::from_dense(Matrix<double>(3, {1, 2, 3, 4, 5, 6, 7, 8, 9})),
               std::invalid_argument);
}

TEST(Hessenberg, CostConstantBelowFour) {
  for (std::size_t n : {50, 100, 200, 400}) {
    const auto rec = flop_census_one(n, 5);
    const double c = static_cast<double>(rec.hessenberg_flops) / std::pow(static_cast<double>(n), 3);
    EXPECT_LE(c, 4.0) << "n " << n;
    EXPECT_GT(c, 3.0) << "n " << n;  // ~10/3
  }
}

}  // namespace
}  // namespace charpoly
