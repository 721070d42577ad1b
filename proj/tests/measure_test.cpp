#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "prosody/annotate.hpp"
#include "prosody/error.hpp"
#include "prosody/f0.hpp"
#include "prosody/measure.hpp"

namespace prosody::measure {
namespace {

// Contour built by hand: two frames per mora, layout given per mora.
f0::Contour handmade(const std::vector<std::pair<std::size_t, std::vector<double>>>& moras) {
  f0::Contour c;
  c.frame_rate_hz = 100;
  std::size_t idx = 0;
  for (std::size_t m = 0; m < moras.size(); ++m) {
    for (double hz : moras[m].second) c.frames.push_back({idx++ / 100.0, hz, m, moras[m].first});
  }
  return c;
}

TEST(Semitones, KnownValues) {
  EXPECT_NEAR(semitones(220, 110), 12.0, 1e-9);
  EXPECT_NEAR(semitones(110, 110), 0.0, 1e-12);
  EXPECT_NEAR(semitones(0.7, 1.0), -6.1748, 1e-4);
  EXPECT_NEAR(semitones(1.4, 1.0), 5.825, 1e-3);
  EXPECT_NEAR(semitones(146.83, 110), 4.9997, 1e-4);
}

TEST(Semitones, RejectsNonPositive) {
  EXPECT_THROW(semitones(0, 110), Error);
  EXPECT_THROW(semitones(110, -1), Error);
  EXPECT_THROW(semitones(NAN, 110), Error);
}

TEST(Semitones, AlgebraicLaws) {
  std::mt19937 rng(61);
  std::uniform_real_distribution<double> hz(20.0, 2000.0), k(0.1, 10.0);
  for (int i = 0; i < 200; ++i) {
    double a = hz(rng), b = hz(rng), c = hz(rng), s = k(rng);
    EXPECT_NEAR(semitones(a, b), -semitones(b, a), 1e-9);
    EXPECT_NEAR(semitones(a, c), semitones(a, b) + semitones(b, c), 1e-9);
    EXPECT_NEAR(semitones(s * a, s * b), semitones(a, b), 1e-9);
    EXPECT_NEAR(semitones(a, b), testing::oracle_semitones(a, b), 1e-9);
  }
}

TEST(RiseSize, MaxOfSecondMoraOverMinOfFirst) {
  auto c = handmade({{0, {100, 100}}, {1, {90, 80}}, {1, {150, 160}}, {2, {100, 100}}});
  EXPECT_NEAR(rise_size(c, 0), testing::oracle_semitones(160, 80), 1e-12);
  EXPECT_THROW(rise_size(c, 1), Error);  // word 2 has one mora
  EXPECT_THROW(rise_size(c, 2), Error);  // no word 3
}

TEST(PeakDescent, LaterMinusEarlier) {
  auto c = handmade({{0, {100, 200}}, {1, {140, 120}}, {2, {100, 100}}});
  EXPECT_NEAR(peak_descent(c, 0, 1), testing::oracle_semitones(140, 200), 1e-12);
  EXPECT_LT(peak_descent(c, 0, 1), 0.0);
  EXPECT_NEAR(peak_descent(c, 1, 0), -peak_descent(c, 0, 1), 1e-12);
  EXPECT_NEAR(peak_descent(c, 0, 2), peak_descent(c, 0, 1) + peak_descent(c, 1, 2), 1e-12);
  try {
    peak_descent(c, 0, 9);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::MissingWord);
  }
}

TEST(Classify, InitialLowering) {
  EXPECT_TRUE(classify_initial_lowering(1.0, 2.0, TreeKind::tree1));
  EXPECT_FALSE(classify_initial_lowering(2.0, 1.0, TreeKind::tree1));
  EXPECT_TRUE(classify_initial_lowering(2.0, 1.0, TreeKind::tree2));
  EXPECT_FALSE(classify_initial_lowering(1.0, 1.0, TreeKind::tree1));
  EXPECT_FALSE(classify_initial_lowering(1.0, 1.0, TreeKind::tree2));
}

TEST(Classify, Boost) {
  EXPECT_TRUE(classify_boost(-6, -1, -6));
  EXPECT_TRUE(classify_boost(-6, 2, -6));
  EXPECT_FALSE(classify_boost(-6, -6, -6));
  EXPECT_FALSE(classify_boost(1, 2, -6));
  EXPECT_FALSE(classify_boost(-6, -1, -6, 6.0));
  EXPECT_FALSE(classify_boost(-6.17, -6.17 + 1e-12, -6.17));
}

TEST(Classify, MonotoneInTheMiddleDescent) {
  // Raising d23 never turns a Yes into a No; raising the margin never turns a No into a Yes.
  std::mt19937 rng(62);
  std::uniform_real_distribution<double> d(-10.0, 3.0), up(0.0, 5.0), m(0.0, 3.0);
  for (int i = 0; i < 500; ++i) {
    double a = d(rng), b = d(rng), c = d(rng), bump = up(rng), margin = m(rng);
    if (classify_boost(a, b, c, margin)) EXPECT_TRUE(classify_boost(a, b + bump, c, margin));
    if (!classify_boost(a, b, c, margin)) EXPECT_FALSE(classify_boost(a, b, c, margin + bump));
    double ra = up(rng), rb = up(rng);
    if (classify_initial_lowering(ra, rb, TreeKind::tree1)) {
      EXPECT_TRUE(classify_initial_lowering(ra, rb + bump, TreeKind::tree1));
    }
    EXPECT_FALSE(classify_initial_lowering(ra, rb, TreeKind::tree1) && classify_initial_lowering(ra, rb, TreeKind::tree2));
  }
}

TEST(JunctureMetrics, CoversEveryGap) {
  auto c = f0::synthesize(annotate::parse_proposed("{[ka na][ya \\ma][[e]].}"), f0::F0Params{});
  auto m = juncture_metrics(c);
  ASSERT_EQ(m.rise_size_st.size(), 2u);
  ASSERT_EQ(m.peak_descent_st.size(), 2u);
  EXPECT_NEAR(m.rise_size_st[0], rise_size(c, 0), 1e-12);
  EXPECT_TRUE(std::isnan(m.rise_size_st[1]));  // only one mora left after the last gap
  EXPECT_NEAR(m.peak_descent_st[0], peak_descent(c, 0, 1), 1e-12);
}

}  // namespace
}  // namespace prosody::measure
