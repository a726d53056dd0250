#include <cmath>

#include <gtest/gtest.h>

#include "bohr/radius.hpp"
#include "oracles.hpp"

using namespace bohr;

namespace {

RadiusResult run(const PsiSpec& psi, int m, int N, Mode mode = Mode::BohrRogosinski,
                 Family family = Family::Starlike) {
  RadiusProblem p{psi, family, m, N, mode};
  return solve(p);
}

}  // namespace

TEST(Radius, ClassicalStarlike) {
  // 8r = (1 - r)^2
  const auto res = run(PsiSpec::classical_starlike(), 1, 1);
  EXPECT_NEAR(res.r0, 5.0 - 2.0 * std::sqrt(6.0), 1e-9);
  EXPECT_EQ(res.rb, res.r0);
  EXPECT_FALSE(res.clamp_policy);
  EXPECT_TRUE(res.sharp);
}

TEST(Radius, ClassicalConvex) {
  const auto res = run(PsiSpec::classical_convex(), 1, 1, Mode::BohrRogosinski, Family::Convex);
  EXPECT_NEAR(res.r0, 0.2, 1e-9);
}

TEST(Radius, ClassicalStarlikePrintedEquation) {
  // 4r^m - (1-r^m)^2 + 4 r^N (N(1-r) + r) ((1-r^m)/(1-r))^2 = 0
  for (int m : {1, 2, 3}) {
    for (int N : {1, 2, 4}) {
      auto eq = [&](double r) {
        const double rm = std::pow(r, m);
        const double q = (1.0 - rm) / (1.0 - r);
        return 4.0 * rm - (1.0 - rm) * (1.0 - rm) + 4.0 * std::pow(r, N) * (N * (1.0 - r) + r) * q * q;
      };
      const double ref = oracle::toms748_root(eq, 1e-12, 0.99);
      EXPECT_NEAR(run(PsiSpec::classical_starlike(), m, N).r0, ref, 1e-9) << m << "," << N;
    }
  }
}

TEST(Radius, ClassicalConvexPrintedEquation) {
  // 3r^m - 1 + 2 r^N (1-r^m)/(1-r) = 0
  for (int m : {1, 2}) {
    for (int N : {1, 3}) {
      auto eq = [&](double r) {
        const double rm = std::pow(r, m);
        return 3.0 * rm - 1.0 + 2.0 * std::pow(r, N) * (1.0 - rm) / (1.0 - r);
      };
      const double ref = oracle::toms748_root(eq, 1e-12, 0.99);
      const auto res = run(PsiSpec::classical_convex(), m, N, Mode::BohrRogosinski, Family::Convex);
      EXPECT_NEAR(res.r0, ref, 1e-9) << m << "," << N;
    }
  }
}

TEST(Radius, CardioidSweepOverN) {
  for (int N = 1; N <= 10; ++N) {
    const auto res = run(PsiSpec::cardioid(), 1, N);
    EXPECT_NEAR(res.r0, oracle::frozen::kCardioidRN[N - 1], 1e-11) << N;
    EXPECT_TRUE(res.clamp_policy);
    EXPECT_EQ(res.rb, res.r0);  // all below 1/3
  }
}

TEST(Radius, CardioidBohrLimit) {
  const auto res = run(PsiSpec::cardioid(), 1, 7, Mode::BohrLimit);
  EXPECT_EQ(res.N, 1);
  EXPECT_NEAR(res.r0, oracle::frozen::kCardioidLimit, 1e-11);
  EXPECT_NEAR(res.r0, 0.25588, 1e-4);
}

TEST(Radius, CardioidPowerTwo) {
  EXPECT_NEAR(run(PsiSpec::cardioid(), 2, 1).r0, oracle::frozen::kCardioidM2N1, 1e-11);
  // the 1/3 clamp takes over once N >= 2
  const auto res = run(PsiSpec::cardioid(), 2, 2);
  EXPECT_GT(res.r0, 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(res.rb, 1.0 / 3.0);
  EXPECT_FALSE(res.sharp);
}

TEST(Radius, SineStabilizes) {
  for (int N = 1; N <= 12; ++N) {
    const auto res = run(PsiSpec::sine(), 1, N);
    EXPECT_NEAR(res.r0, oracle::frozen::kSineRN[N - 1], 1e-11) << N;
    EXPECT_LT(res.r0, 1.0 / 3.0);
    EXPECT_FALSE(res.sharp);  // f0 has negative coefficients
  }
  EXPECT_NEAR(run(PsiSpec::sine(), 1, 1, Mode::BohrLimit).r0, oracle::frozen::kSineLimit, 1e-11);
}

TEST(Radius, MatchesIndependentRoot) {
  for (const auto& psi : default_catalog()) {
    RadiusProblem p{psi, Family::Starlike, 1, 2};
    const auto ex = build_extremal(psi, p.order);
    const auto res = solve(p, ex);
    const double ref = oracle::toms748_root([&](double r) { return g_function(p, ex, r); }, 0.0, res.hi + 1e-3);
    EXPECT_NEAR(res.r0, ref, 1e-10) << psi.name();
    EXPECT_LE(std::abs(res.residual), 1e-10 * std::max(1.0, res.koebe)) << psi.name();
  }
}

TEST(Radius, GIsIncreasing) {
  for (const auto& psi : default_catalog()) {
    for (Family fam : {Family::Starlike, Family::Convex}) {
      RadiusProblem p{psi, fam, 2, 3};
      const auto ex = build_extremal(psi, p.order);
      double prev = g_function(p, ex, 0.0);
      EXPECT_LT(prev, 0.0);
      for (int i = 1; i < 100; ++i) {
        const double g = g_function(p, ex, i / 100.0);
        EXPECT_GT(g, prev) << psi.name() << " r=" << i / 100.0;
        prev = g;
      }
    }
  }
}

TEST(Radius, JanowskiClosedEquationAgreesWithSeries) {
  for (auto [d, e] : {std::pair{0.5, -0.5}, {1.0, 0.0}, {0.5, 0.0}, {1.0, -1.0}, {0.6, -0.2}}) {
    for (int m : {1, 2, 3}) {
      for (int N : {1, 2, 3, 5}) {
        const auto series = run(PsiSpec::janowski(d, e), m, N);
        const auto exact = solve_janowski_exact(d, e, m, N, 1e-12);
        EXPECT_NEAR(series.r0, exact.r0, 1e-8) << d << "," << e << " m=" << m << " N=" << N;
        EXPECT_EQ(exact.rb, exact.r0);
      }
    }
    const auto lim = run(PsiSpec::janowski(d, e), 1, 1, Mode::BohrLimit);
    EXPECT_NEAR(lim.r0, solve_janowski_exact(d, e, 1, 1, 1e-12, Mode::BohrLimit).r0, 1e-8);
  }
}

TEST(Radius, JanowskiPositiveEUsesSignedHead) {
  // For E > 0 the closed equation carries f0(r^m) itself, which is smaller
  // than the majorant the series path uses, so its root sits higher.
  for (int m : {1, 2}) {
    const auto series = run(PsiSpec::janowski(0.8, 0.3), m, 2);
    const auto exact = solve_janowski_exact(0.8, 0.3, m, 2, 1e-12);
    EXPECT_GT(exact.r0, series.r0 + 1e-7);
    EXPECT_FALSE(exact.sharp);
  }
}

TEST(Radius, JanowskiFrozenRoots) {
  EXPECT_NEAR(solve_janowski_exact(1.0, 0.0, 1, 1, 1e-12, Mode::BohrLimit).r0,
              oracle::frozen::kJanowskiD1E0Limit, 1e-11);
  EXPECT_NEAR(run(PsiSpec::starlike_alpha(0.25), 1, 2).r0, oracle::frozen::kAlphaQuarterM1N2, 1e-11);
  EXPECT_NEAR(solve_janowski_exact(0.5, -1.0, 1, 2, 1e-12).r0, oracle::frozen::kAlphaQuarterM1N2, 1e-11);
}

TEST(Radius, LargePowerApproachesLimit) {
  for (const auto& psi : default_catalog()) {
    const double big = run(psi, 50, 1).r0;
    const double lim = run(psi, 1, 1, Mode::BohrLimit).r0;
    EXPECT_LT(std::abs(big - lim), 1e-6) << psi.name();
  }
}

TEST(Radius, Validation) {
  RadiusProblem p{PsiSpec::cardioid()};
  p.N = 0;
  EXPECT_THROW(solve(p), config_error);
  p.N = 65;
  EXPECT_THROW(solve(p), config_error);
  p.N = 1;
  p.tol = 0.0;
  EXPECT_THROW(solve(p), config_error);
  p.tol = 1e-10;
  p.m = 0;
  EXPECT_THROW(solve(p), config_error);
  EXPECT_THROW(janowski_exact_equation(1.0, 0.0, 1, 1, Mode::BohrRogosinski, 1.0), domain_error);
}

TEST(Radius, SweepOverPowers) {
  RadiusProblem base{PsiSpec::cardioid()};
  const auto table = sweep(base, SweepAxis::M, 1, 5);
  ASSERT_EQ(table.rows.size(), 5u);
  EXPECT_NEAR(table.rows[1].r0, oracle::frozen::kCardioidM2N1, 1e-11);
  EXPECT_TRUE(table.nondecreasing);
  EXPECT_THROW(sweep(base, SweepAxis::N, 3, 2), config_error);
}

TEST(Radius, PolynomialHead) {
  const TruncatedSeries s({0.0, 1.0, -2.0, 3.0}, 5);
  EXPECT_DOUBLE_EQ(polynomial_head(s, 1, 0.5), 0.0);
  EXPECT_DOUBLE_EQ(polynomial_head(s, 3, 0.5), 0.5 + 2.0 * 0.25);
}
