#include <gtest/gtest.h>

#include "orthofold/generator.hpp"
#include "orthofold/kernels.hpp"
#include "support.hpp"

using namespace orthofold;
using namespace testing_support;

namespace {

bool same(const std::optional<kernels::CellFailure>& a, const std::optional<kernels::CellFailure>& b) {
  if (a.has_value() != b.has_value()) return false;
  return !a || (a->cell == b->cell && a->reason == b->reason && a->witness == b->witness);
}

}  // namespace

TEST(Kernels, CellLayoutIsRowMajor) {
  const FoldMap2D map(PaperRect{R("4"), R("3")}, Rs({"1", "2"}), Rs({"2"}));
  EXPECT_EQ(kernels::cell_count(map), 6u);
  const Box b = kernels::cell_box(map, 4);  // row 1, column 1
  EXPECT_EQ(b.x0, 1);
  EXPECT_EQ(b.x1, 2);
  EXPECT_EQ(b.y0, 2);
  EXPECT_EQ(b.y1, 3);
}

TEST(Kernels, CellPreimageIsReflectedLine) {
  const FoldMap2D map(PaperRect{R("6"), R("4")}, Rs({"3"}), {});
  const Line folded = line_through(P(0, 4), P(3, 1));
  EXPECT_TRUE(kernels::cell_preimage(map, 0, folded).same_as(folded));
  EXPECT_TRUE(kernels::cell_preimage(map, 1, folded).same_as(line_through(P(3, 1), P(6, 4))));
}

TEST(Kernels, SerialAndParallelAgree) {
  SplitMix64 rng(6);
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    foldcut::GenParams params;
    params.kx = static_cast<int>(seed % 6);
    params.ky = static_cast<int>((seed / 6) % 6);
    const auto g = foldcut::unfold_generate(seed, params);
    const FoldMap2D map(g.instance.paper, g.vertical_creases, g.horizontal_creases);
    const auto& cuts = g.instance.cuts;

    EXPECT_EQ(kernels::serial::pairwise_intersections(cuts), kernels::omp::pairwise_intersections(cuts));

    std::vector<Point> pts;
    for (int i = 0; i < 200; ++i) {
      pts.push_back({random_rational(rng, 0, g.instance.paper.width, 16),
                     random_rational(rng, 0, g.instance.paper.height, 16)});
    }
    EXPECT_EQ(kernels::serial::fold_points(map, pts), kernels::omp::fold_points(map, pts));

    EXPECT_TRUE(same(kernels::serial::check_cells(map, cuts, g.folded_line),
                     kernels::omp::check_cells(map, cuts, g.folded_line)));
    EXPECT_FALSE(kernels::serial::check_cells(map, cuts, g.folded_line));

    // A wrong line fails, and both pick the same first cell.
    const Line off{{g.folded_line.point.x, g.folded_line.point.y + Rational(1, 8)}, g.folded_line.direction};
    const auto s = kernels::serial::check_cells(map, cuts, off);
    EXPECT_TRUE(s);
    EXPECT_TRUE(same(s, kernels::omp::check_cells(map, cuts, off)));

    // Dropping a cut leaves some preimage uncut.
    if (cuts.size() > 1) {
      std::vector<Segment> fewer(cuts.begin() + 1, cuts.end());
      const auto d = kernels::serial::check_cells(map, fewer, g.folded_line);
      ASSERT_TRUE(d);
      EXPECT_EQ(d->reason, "uncut-preimage");
      EXPECT_TRUE(same(d, kernels::omp::check_cells(map, fewer, g.folded_line)));
    }
  }
}

TEST(Kernels, FoldPointsMatchesMap) {
  const FoldMap2D map(PaperRect{R("4"), R("4")}, Rs({"1", "3"}), Rs({"2"}));
  const std::vector<Point> pts{P(2, 3), P(4, 4), P(0, 0)};
  EXPECT_EQ(kernels::omp::fold_points(map, pts), (std::vector<Point>{P(0, 1), P(0, 0), P(0, 0)}));
}
