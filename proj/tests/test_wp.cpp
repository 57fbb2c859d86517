#include <taut/wp.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace taut;

TEST(WpVolume, Examples)
{
  Evaluator ev;
  EXPECT_EQ(wp_volume(ev, 0, 3), 1);
  EXPECT_EQ(wp_volume(ev, 0, 4), 1);
  EXPECT_EQ(wp_volume(ev, 0, 5), 5);
  EXPECT_EQ(wp_volume(ev, 0, 6), 61);
  EXPECT_EQ(wp_volume(ev, 1, 1), Rational(1, 24));
  EXPECT_EQ(wp_volume(ev, 1, 2), Rational(1, 8));
  EXPECT_EQ(wp_volume(ev, 1, 3), Rational(7, 6));
  EXPECT_EQ(wp_volume(ev, 1, 4), Rational(529, 24));
  EXPECT_THROW(wp_volume(ev, 0, 2), unstable_key);
  EXPECT_THROW(wp_volume(ev, 1, 0), unstable_key);
  EXPECT_THROW(wp_volume(ev, 2, 1), unsupported_genus);
}

TEST(WpVolume, MatchesPunctureDilatonRoute)
{
  Evaluator ev, other;
  for (int g = 0; g <= 1; ++g)
    for (int n = g == 0 ? 3 : 1; n <= 12; ++n) {
      const auto p = MultiIndex::unit(IndexKind::S1, 1, static_cast<unsigned>(3 * g - 3 + n));
      const auto k = require_key(g, MultiIndex::unit(IndexKind::S0, 0, static_cast<unsigned>(n)), p);
      ASSERT_TRUE(k);
      const Rational w = wp_volume(ev, g, n);
      EXPECT_EQ(w, other.eval_puncture_dilaton(*k)) << g << "," << n;
      EXPECT_GT(w, 0);
    }
}

TEST(Bessel, Constants)
{
  const auto bc = bessel_constants();
  EXPECT_NEAR(bc.gamma0, 2.40482555777, 1e-9);
  EXPECT_NEAR(bc.C, 2.496918339, 1e-8);
  EXPECT_LT(std::abs(bessel_j0(bc.gamma0)), 1e-12);
  EXPECT_NEAR(bessel_j0(0), 1, 0);
  EXPECT_NEAR(bessel_j1(1), 0.44005058574493355, 1e-15);
}

TEST(LogRational, LargeValues)
{
  Integer big;
  mpz_ui_pow_ui(big.get_mpz_t(), 10, 4000);
  EXPECT_NEAR(log_integer(big), 4000 * std::log(10.0), 1e-9);
  EXPECT_NEAR(log_rational(Rational(1, 24)), -std::log(24.0), 1e-15);
  EXPECT_THROW(log_integer(Integer(0)), std::domain_error);
}

TEST(Asymptotics, GenusOneRatioConverges)
{
  Evaluator ev;
  const auto rows = asymptotic_ratio_table(ev, 1, 50);
  ASSERT_EQ(rows.size(), 50u);
  EXPECT_EQ(rows.front().w, Rational(1, 24));
  EXPECT_GT(rows.back().ratio, 0.9);
  EXPECT_LT(rows.back().ratio, 1.1);
  for (int n = 35; n <= 50; n += 5) EXPECT_LT(std::abs(rows[n - 1].ratio - 1), std::abs(rows[n - 6].ratio - 1)) << n;
}

// The genus zero leading term as stated undershoots by a constant factor
// that tends to pi: the ratio grows monotonically towards it.
TEST(Asymptotics, GenusZeroRatioTendsToPi)
{
  Evaluator ev;
  const auto rows = asymptotic_ratio_table(ev, 0, 50);
  ASSERT_EQ(rows.size(), 48u);
  EXPECT_TRUE(std::isnan(rows.front().ratio));
  EXPECT_EQ(rows[1].w, 1);
  EXPECT_EQ(rows[2].w, 5);
  for (std::size_t i = 2; i < rows.size(); ++i) EXPECT_GT(rows[i].ratio, rows[i - 1].ratio);
  EXPECT_NEAR(rows.back().ratio / std::numbers::pi, 1, 2e-3);
}
