#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "bohr/series.hpp"
#include "oracles.hpp"

using namespace bohr;

namespace {

TruncatedSeries random_series(std::mt19937_64& rng, int order, bool zero_constant = false) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> c(static_cast<std::size_t>(order) + 1);
  for (double& x : c) x = u(rng);
  if (zero_constant) c[0] = 0.0;
  return TruncatedSeries(std::move(c));
}

void expect_near_series(const TruncatedSeries& a, const TruncatedSeries& b, double tol) {
  ASSERT_EQ(a.order(), b.order());
  for (int n = 0; n <= a.order(); ++n) EXPECT_NEAR(a[n], b[n], tol) << "n = " << n;
}

}  // namespace

TEST(Series, ConstructionValidates) {
  EXPECT_THROW(TruncatedSeries(0), contract_error);
  EXPECT_THROW(TruncatedSeries(std::vector<double>{1.0}), contract_error);
  EXPECT_THROW(TruncatedSeries(std::vector<double>{1.0, NAN}), contract_error);
  const TruncatedSeries s({1.0, 2.0}, 5);
  EXPECT_EQ(s.order(), 5);
  EXPECT_EQ(s[1], 2.0);
  EXPECT_EQ(s[5], 0.0);
  EXPECT_THROW(s[6], std::out_of_range);
}

TEST(Series, MixedOrdersRejected) {
  EXPECT_THROW(add(TruncatedSeries(3), TruncatedSeries(4)), contract_error);
  EXPECT_THROW(mul(TruncatedSeries(3), TruncatedSeries(4)), contract_error);
}

TEST(Series, GeometricProduct) {
  // 1/(1-z) squared is sum (n+1) z^n
  std::vector<double> g(11, 1.0);
  const TruncatedSeries geo(g);
  const TruncatedSeries sq = mul(geo, geo);
  for (int n = 0; n <= 10; ++n) EXPECT_DOUBLE_EQ(sq[n], n + 1.0);
}

TEST(Series, RingLaws) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_series(rng, 24);
    const auto b = random_series(rng, 24);
    const auto c = random_series(rng, 24);
    expect_near_series(add(a, b), add(b, a), 0.0);
    expect_near_series(mul(a, b), mul(b, a), 1e-13);
    expect_near_series(mul(mul(a, b), c), mul(a, mul(b, c)), 1e-12);
    expect_near_series(mul(a, add(b, c)), add(mul(a, b), mul(a, c)), 1e-12);
    expect_near_series(sub(a, a), TruncatedSeries(24), 0.0);
    expect_near_series(mul(a, TruncatedSeries::constant(1.0, 24)), a, 0.0);
  }
}

TEST(Series, ComposeMatchesExplicitPowers) {
  // Koebe function composed with a one-zero Blaschke factor
  std::vector<double> koebe(9);
  for (int n = 0; n <= 8; ++n) koebe[static_cast<std::size_t>(n)] = n;
  const auto w = oracle::blaschke_one(0.5, 1, 8);
  const TruncatedSeries got = compose(TruncatedSeries(koebe), TruncatedSeries(w));
  const double expected[] = {0, -0.5, 1.25, -1.5, 2.5, -2.5, 3.75, -3.5, 5};
  for (int n = 0; n <= 8; ++n) EXPECT_NEAR(got[n], expected[n], 1e-14);

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const auto f = random_series(rng, 20);
    const auto inner = random_series(rng, 20, true);
    const auto ref = oracle::naive_compose(detail::to_vector(f), detail::to_vector(inner));
    expect_near_series(compose(f, inner), TruncatedSeries(ref), 1e-11);
  }
}

TEST(Series, ComposeRequiresZeroConstant) {
  EXPECT_THROW(compose(TruncatedSeries({1.0, 1.0}, 4), TruncatedSeries({0.5, 1.0}, 4)),
               contract_error);
}

TEST(Series, ExpAgainstDirectSum) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const auto h = random_series(rng, 20, true);
    expect_near_series(exp_series(h), TruncatedSeries(oracle::naive_exp(detail::to_vector(h))), 1e-12);
  }
  EXPECT_THROW(exp_series(TruncatedSeries({1.0}, 4)), contract_error);
}

TEST(Series, ExpAdditivity) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    const auto a = random_series(rng, 30, true);
    const auto b = random_series(rng, 30, true);
    expect_near_series(exp_series(add(a, b)), mul(exp_series(a), exp_series(b)), 1e-11);
  }
}

TEST(Series, DerivativeOfProduct) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    const auto a = random_series(rng, 16);
    const auto b = random_series(rng, 16);
    // Leibniz holds below the top coefficient, which the truncation loses.
    const auto lhs = derivative(mul(a, b));
    const auto rhs = add(mul(derivative(a), b), mul(a, derivative(b)));
    for (int n = 0; n < 15; ++n) EXPECT_NEAR(lhs[n], rhs[n], 1e-12);
    EXPECT_EQ(lhs[16], 0.0);
  }
}

TEST(Series, IntegrateOverT) {
  // (c_n / n) z^n inverts z d/dz on series without constant term
  const TruncatedSeries h({0.0, 2.0, 6.0, 12.0}, 6);
  const TruncatedSeries got = integrate_over_t(h);
  EXPECT_DOUBLE_EQ(got[1], 2.0);
  EXPECT_DOUBLE_EQ(got[2], 3.0);
  EXPECT_DOUBLE_EQ(got[3], 4.0);
  EXPECT_THROW(integrate_over_t(TruncatedSeries({1.0}, 3)), contract_error);
}

TEST(Series, ShiftUp) {
  const TruncatedSeries s({1.0, 2.0, 3.0}, 4);
  const TruncatedSeries up = shift_up(s, 2);
  EXPECT_EQ(up[0], 0.0);
  EXPECT_EQ(up[2], 1.0);
  EXPECT_EQ(up[4], 3.0);
}

TEST(Series, EvalAbsDominatesEval) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 50; ++trial) {
    const auto f = random_series(rng, 32);
    for (double r : {0.0, 0.1, 0.5, 0.9}) {
      EXPECT_GE(eval_abs(f, r) + 1e-15, std::abs(eval(f, r)));
      EXPECT_GE(eval_abs(f, r) + 1e-15, std::abs(eval(f, -r)));
      EXPECT_NEAR(eval_abs_from(f, 3, r), oracle::sum_abs_from(detail::to_vector(f), 3, r), 1e-14);
    }
  }
}

TEST(Series, EvalDomain) {
  const TruncatedSeries f({0.0, 1.0}, 4);
  EXPECT_THROW(eval(f, 1.0), domain_error);
  EXPECT_THROW(eval_abs(f, -0.1), domain_error);
  EXPECT_DOUBLE_EQ(eval_partial_sum(f, 2.0), 2.0);
}

TEST(Series, TailBound) {
  std::vector<double> g(41, 0.5);
  g[0] = 0.0;
  const TruncatedSeries s(g);
  // rho = 1: |c_K| r^K / (1 - r)
  EXPECT_NEAR(s.tail_bound(0.5), 0.5 * std::pow(0.5, 40) / 0.5, 1e-25);
  EXPECT_DOUBLE_EQ(s.tail_hint(), s.tail_bound(1.0 / 3.0));
  EXPECT_EQ(TruncatedSeries({1.0}, 5).tail_bound(0.9), 0.0);
  std::vector<double> big(5, 1.0);
  big[4] = 4.0;  // rho clamps at 2
  EXPECT_TRUE(std::isinf(TruncatedSeries(big).tail_bound(0.5)));
}
