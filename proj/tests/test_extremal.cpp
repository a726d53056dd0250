#include <cmath>

#include <gtest/gtest.h>

#include "bohr/extremal.hpp"
#include "oracles.hpp"

using namespace bohr;

TEST(Extremal, CardioidLeadingCoefficients) {
  const auto f0 = build_f0(PsiSpec::cardioid(), 10);
  EXPECT_EQ(f0[0], 0.0);
  EXPECT_EQ(f0[1], 1.0);
  EXPECT_NEAR(f0[2], 4.0 / 3.0, 1e-15);
  EXPECT_NEAR(f0[3], 11.0 / 9.0, 1e-15);
  EXPECT_NEAR(f0[4], 68.0 / 81.0, 1e-15);
}

TEST(Extremal, RecurrenceAgreesWithExpRoute) {
  for (const auto& psi : default_catalog()) {
    const auto a = build_f0(psi, kDefaultOrder);
    const auto b = build_f0_via_exp(psi, kDefaultOrder);
    for (int n = 0; n <= kDefaultOrder; ++n) {
      EXPECT_NEAR(a[n], b[n], 1e-11 * std::max(1.0, std::abs(a[n]))) << psi.name() << " n=" << n;
    }
  }
}

TEST(Extremal, CardioidAgainstDirectExponential) {
  // z exp(4z/3 + z^2/3) summed term by term
  oracle::Poly h(31, 0.0);
  h[1] = 4.0 / 3.0;
  h[2] = 1.0 / 3.0;
  const auto e = oracle::naive_exp(h);
  const auto f0 = build_f0(PsiSpec::cardioid(), 31);
  for (int n = 1; n <= 31; ++n) EXPECT_NEAR(f0[n], e[static_cast<std::size_t>(n - 1)], 1e-14) << n;
}

TEST(Extremal, JanowskiAgainstBinomialSeries) {
  for (auto [d, e] : {std::pair{1.0, -1.0}, {0.5, -0.5}, {1.0, 0.0}, {0.8, 0.3}}) {
    const auto f0 = build_f0(PsiSpec::janowski(d, e), 30);
    const auto ref = oracle::janowski_f0(d, e, 30);
    for (int n = 0; n <= 30; ++n) {
      EXPECT_NEAR(f0[n], ref[static_cast<std::size_t>(n)], 1e-12 * std::max(1.0, std::abs(ref[static_cast<std::size_t>(n)])));
    }
  }
}

TEST(Extremal, AlexanderRelation) {
  const auto f0 = build_f0(PsiSpec::sine(), 20);
  const auto l0 = build_l0(f0);
  // z l0' = f0
  const auto zl = shift_up(derivative(l0), 1);
  for (int n = 0; n < 20; ++n) EXPECT_NEAR(zl[n], f0[n], 1e-15);
}

TEST(Extremal, StarlikeKoebeQuadratureMatchesClosedForms) {
  std::vector<PsiSpec> grid = {PsiSpec::classical_starlike(), PsiSpec::cardioid(), PsiSpec::sine(),
                               PsiSpec::zexpz()};
  for (double d : {0.25, 0.5, 1.0}) grid.push_back(PsiSpec::janowski(d, 0.0));
  for (double a : {0.0, 0.25, 0.5}) grid.push_back(PsiSpec::starlike_alpha(a));
  for (const auto& psi : grid) {
    EXPECT_NEAR(koebe_radius_quadrature(psi, Family::Starlike), *psi.koebe_closed(), 1e-9) << psi.name();
  }
}

TEST(Extremal, ConvexKoebe) {
  EXPECT_NEAR(koebe_radius(PsiSpec::classical_convex(), Family::Convex), 0.5, 1e-12);
  EXPECT_NEAR(koebe_radius(PsiSpec::cardioid(), Family::Convex), oracle::frozen::kCardioidConvexKoebe, 1e-12);
  // Janowski E = 0: l0(z) = (e^{Dz} - 1)/D
  EXPECT_NEAR(koebe_radius(PsiSpec::janowski(1.0, 0.0), Family::Convex), 1.0 - std::exp(-1.0), 1e-12);
  // alpha = 1/2: f0 = z/(1-z), l0 = -log(1-z)
  EXPECT_NEAR(koebe_radius(PsiSpec::starlike_alpha(0.5), Family::Convex), std::log(2.0), 1e-12);
}

TEST(Extremal, KoebeIsMinusF0AtMinusOne) {
  // For Janowski E = 0.5 the series converges at z = -1 fast enough to compare.
  const auto psi = PsiSpec::janowski(0.9, 0.5);
  const auto f0 = build_f0(psi, 200);
  EXPECT_NEAR(-eval_partial_sum(f0, -1.0), koebe_radius_quadrature(psi, Family::Starlike), 1e-10);
}

TEST(Extremal, BuildPairCarriesBothRadii) {
  const auto pair = build_extremal(PsiSpec::sine());
  EXPECT_NEAR(pair.koebe(Family::Starlike), oracle::frozen::kSineKoebe, 1e-12);
  EXPECT_GT(pair.koebe(Family::Convex), pair.koebe(Family::Starlike));
  EXPECT_EQ(&pair.series(Family::Convex), &pair.l0);
}
