#include <gtest/gtest.h>

#include "orthofold/errors.hpp"
#include "orthofold/generator.hpp"
#include "orthofold/oned.hpp"
#include "orthofold/random.hpp"
#include "support.hpp"

using namespace orthofold;
using namespace testing_support;

TEST(SplitMix64, ReferenceSequence) {
  // Published reference outputs for seed 1234567.
  SplitMix64 rng(1234567);
  EXPECT_EQ(rng.next(), 6457827717110365317ULL);
  EXPECT_EQ(rng.next(), 3203168211198807973ULL);
  EXPECT_EQ(rng.next(), 9817491932198370423ULL);
  EXPECT_EQ(rng.next(), 4593380528125082431ULL);
  EXPECT_EQ(rng.next(), 16408922859458223821ULL);
}

TEST(SplitMix64, BelowAndBetween) {
  SplitMix64 a(9), b(9);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.below(7), b.next() % 7);
  SplitMix64 c(3);
  for (int i = 0; i < 1000; ++i) {
    const auto v = c.between(-2, 2);
    EXPECT_GE(v, -2);
    EXPECT_LE(v, 2);
  }
}

TEST(UnfoldInstance, IdentityUnfold) {
  const auto inst = foldcut::unfold_instance({R("2"), R("2")}, {}, {}, line_through(P(0, 0), P(1, 1)));
  ASSERT_TRUE(inst);
  EXPECT_EQ(inst->cuts, std::vector<Segment>{S(0, 0, 2, 2)});
}

TEST(UnfoldInstance, OneReflectionGivesV) {
  const auto inst = foldcut::unfold_instance({R("6"), R("4")}, Rs({"3"}), {}, line_through(P(0, 4), P(3, 1)));
  ASSERT_TRUE(inst);
  EXPECT_EQ(inst->cuts, (std::vector<Segment>{S(0, 4, 3, 1), S(3, 1, 6, 4)}));
}

TEST(UnfoldInstance, RejectsMissesAndCornerTouches) {
  EXPECT_FALSE(foldcut::unfold_instance({R("2"), R("2")}, {}, {}, line_through(P(0, 5), P(1, 6))));
  // Grazes the corner (2, 2) only.
  EXPECT_FALSE(foldcut::unfold_instance({R("2"), R("2")}, {}, {}, line_through(P(0, 4), P(1, 3))));
}

TEST(UnfoldGenerate, DeterministicInSeed) {
  foldcut::GenParams params;
  const auto a = foldcut::unfold_generate(77, params);
  const auto b = foldcut::unfold_generate(77, params);
  EXPECT_EQ(a.instance.cuts, b.instance.cuts);
  EXPECT_EQ(a.vertical_creases, b.vertical_creases);
  EXPECT_EQ(a.horizontal_creases, b.horizontal_creases);
  const auto c = foldcut::unfold_generate(78, params);
  EXPECT_FALSE(a.instance.cuts == c.instance.cuts && a.vertical_creases == c.vertical_creases);
}

TEST(UnfoldGenerate, CreaseCountsAndFoldedSize) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    foldcut::GenParams params;
    params.kx = static_cast<int>(seed % 5);
    params.ky = static_cast<int>((seed + 2) % 5);
    params.folded_w = 3;
    params.folded_h = 2;
    const auto g = foldcut::unfold_generate(seed, params);
    EXPECT_EQ(g.vertical_creases.size(), static_cast<std::size_t>(params.kx));
    EXPECT_EQ(g.horizontal_creases.size(), static_cast<std::size_t>(params.ky));
    const FoldMap2D map(g.instance.paper, g.vertical_creases, g.horizontal_creases);
    const Interval fx = map.horizontal.image(), fy = map.vertical.image();
    EXPECT_EQ(fx, (Interval{Rational(0), Rational(3)}));
    EXPECT_EQ(fy, (Interval{Rational(0), Rational(2)}));
    // Round trip: unfolding the same line again reproduces the cuts.
    const auto again = foldcut::unfold_instance(g.instance.paper, g.vertical_creases, g.horizontal_creases, g.folded_line);
    ASSERT_TRUE(again);
    EXPECT_EQ(again->cuts, g.instance.cuts);
  }
}

TEST(UnfoldGenerate, InvalidParams) {
  foldcut::GenParams params;
  params.kx = -1;
  EXPECT_THROW(foldcut::unfold_generate(1, params), InvalidInstance);
  params.kx = 1;
  params.folded_w = 0;
  EXPECT_THROW(foldcut::unfold_generate(1, params), InvalidInstance);
}

TEST(UnfoldGenerateInterval, Deterministic) {
  const auto a = oned::unfold_generate_interval(5, {});
  const auto b = oned::unfold_generate_interval(5, {});
  ASSERT_EQ(a.cut_intervals.size(), b.cut_intervals.size());
  for (std::size_t i = 0; i < a.cut_intervals.size(); ++i) {
    EXPECT_EQ(a.cut_intervals[i].span, b.cut_intervals[i].span);
    EXPECT_EQ(a.cut_intervals[i].required_creases, b.cut_intervals[i].required_creases);
  }
  EXPECT_NO_THROW(oned::validate(a));
}
