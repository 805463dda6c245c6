#include <gtest/gtest.h>

#include <algorithm>

#include "orthofold/errors.hpp"
#include "orthofold/geometry.hpp"
#include "support.hpp"

using namespace orthofold;
using namespace testing_support;

TEST(Segment, RejectsZeroLength) { EXPECT_THROW(S(1, 1, 1, 1), InvalidInstance); }

TEST(Paper, RejectsNonpositiveSides) {
  EXPECT_THROW(validate(PaperRect{R("0"), R("1")}), InvalidInstance);
  EXPECT_THROW(validate(PaperRect{R("1"), R("-1")}), InvalidInstance);
  EXPECT_NO_THROW(validate(PaperRect{R("1/2"), R("1")}));
}

TEST(SegmentIntersection, Examples) {
  EXPECT_EQ(segment_intersection(S(0, 0, 2, 2), S(0, 2, 2, 0)), P(1, 1));
  EXPECT_EQ(segment_intersection(S(0, 0, 1, 1), S(1, 1, 2, 0)), P(1, 1));
  EXPECT_FALSE(segment_intersection(S(0, 0, 1, 1), S(3, 0, 4, 1)));
}

TEST(SegmentIntersection, TContactAndCollinearTouch) {
  EXPECT_EQ(segment_intersection(S(0, 0, 4, 0), S(2, 0, 2, 3)), P(2, 0));
  EXPECT_EQ(segment_intersection(S(0, 0, 2, 2), S(2, 2, 3, 3)), P(2, 2));
  EXPECT_FALSE(segment_intersection(S(0, 0, 1, 1), S(2, 2, 3, 3)));
}

TEST(SegmentIntersection, OverlapThrows) {
  EXPECT_THROW(segment_intersection(S(0, 0, 2, 2), S(1, 1, 3, 3)), OverlapError);
  EXPECT_THROW(segment_intersection(S(0, 0, 2, 2), S(2, 2, 0, 0)), OverlapError);
}

TEST(SegmentIntersection, NonLatticeCrossing) {
  const auto p = segment_intersection(S(0, 0, 3, 1), S(0, 1, 1, 0));
  ASSERT_TRUE(p);
  EXPECT_EQ(p->x, R("3/4"));
  EXPECT_EQ(p->y, R("1/4"));
}

// Independent oracle: solve the two implicit line equations by Cramer's rule,
// and handle the parallel case by testing each endpoint against the other
// segment's bounding box.
static std::optional<Point> oracle_intersection(const Segment& s, const Segment& t, bool& overlap) {
  overlap = false;
  auto coeffs = [](const Segment& u) {
    const Rational a = u.b().y - u.a().y;
    const Rational b = u.a().x - u.b().x;
    const Rational c = a * u.a().x + b * u.a().y;
    return std::array<Rational, 3>{a, b, c};
  };
  auto in_box = [](const Segment& u, const Point& p) {
    return std::min(u.a().x, u.b().x) <= p.x && p.x <= std::max(u.a().x, u.b().x) &&
           std::min(u.a().y, u.b().y) <= p.y && p.y <= std::max(u.a().y, u.b().y);
  };
  const auto [a1, b1, c1] = coeffs(s);
  const auto [a2, b2, c2] = coeffs(t);
  const Rational det = a1 * b2 - a2 * b1;
  if (det != 0) {
    const Point p{Rational((c1 * b2 - c2 * b1) / det), Rational((a1 * c2 - a2 * c1) / det)};
    if (in_box(s, p) && in_box(t, p)) return p;
    return std::nullopt;
  }
  // Parallel: collinear iff t.a satisfies s's equation.
  if (a1 * t.a().x + b1 * t.a().y != c1) return std::nullopt;
  std::vector<Point> shared;
  for (const Point& p : {s.a(), s.b()}) if (in_box(t, p)) shared.push_back(p);
  for (const Point& p : {t.a(), t.b()}) if (in_box(s, p)) shared.push_back(p);
  std::sort(shared.begin(), shared.end());
  shared.erase(std::unique(shared.begin(), shared.end()), shared.end());
  if (shared.size() > 1) overlap = true;
  if (shared.empty()) return std::nullopt;
  return shared.front();
}

TEST(SegmentIntersection, AgreesWithCramerOracle) {
  SplitMix64 rng(3);
  int hits = 0;
  for (int i = 0; i < 5000; ++i) {
    auto pt = [&] { return P(rng.between(0, 4), rng.between(0, 4)); };
    Point a = pt(), b = pt(), c = pt(), d = pt();
    if (a == b || c == d) continue;
    const Segment s(a, b), t(c, d);
    bool overlap = false;
    const auto expected = oracle_intersection(s, t, overlap);
    if (overlap) {
      EXPECT_THROW(segment_intersection(s, t), OverlapError);
      continue;
    }
    const auto got = segment_intersection(s, t);
    ASSERT_EQ(got.has_value(), expected.has_value());
    if (got) {
      EXPECT_EQ(*got, *expected);
      ++hits;
    }
  }
  EXPECT_GT(hits, 500);
}

TEST(CutGraphVertices, Examples) {
  const std::vector<Segment> x{S(0, 0, 2, 2), S(0, 2, 2, 0)};
  std::vector<Point> want{P(0, 0), P(2, 2), P(0, 2), P(2, 0), P(1, 1)};
  std::sort(want.begin(), want.end());
  EXPECT_EQ(cut_graph_vertices(x), want);

  const std::vector<Segment> v{S(0, 4, 3, 1), S(3, 1, 6, 4)};
  EXPECT_EQ(cut_graph_vertices(v), (std::vector<Point>{P(0, 4), P(3, 1), P(6, 4)}));

  const std::vector<Segment> lone{S(1, 1, 3, 3)};
  EXPECT_EQ(cut_graph_vertices(lone), (std::vector<Point>{P(1, 1), P(3, 3)}));
}

TEST(CutGraphVertices, OverlapPropagates) {
  const std::vector<Segment> cuts{S(0, 0, 2, 2), S(1, 1, 3, 3)};
  EXPECT_THROW(cut_graph_vertices(cuts), OverlapError);
}

TEST(LineThrough, Normalized) {
  const Line l = line_through(P(0, 4), P(3, 1));
  EXPECT_EQ(l.point, P(0, 4));
  EXPECT_EQ(l.direction, P(1, -1));
  EXPECT_EQ(line_through(P(3, 1), P(0, 4)).point, l.point);
  const Line v = line_through(P(2, 5), P(2, 1));
  EXPECT_EQ(v.point, P(2, 0));
  EXPECT_EQ(v.direction, P(0, 1));
}

TEST(Line, SameAsIgnoresParametrization) {
  const Line a{P(1, 1), P(2, 2)};
  const Line b{P(-3, -3), P(-1, -1)};
  EXPECT_TRUE(a.same_as(b));
  EXPECT_FALSE(a.same_as(Line{P(0, 1), P(1, 1)}));
  EXPECT_TRUE(a.contains(P(5, 5)));
  EXPECT_FALSE(a.contains(P(5, 4)));
}

TEST(MergeCollinear, MergesOverlapsKeepsTouches) {
  const auto merged = merge_collinear({S(0, 0, 2, 2), S(1, 1, 3, 3), S(5, 0, 6, 0)});
  ASSERT_EQ(merged.size(), 2u);
  EXPECT_EQ(merged[0], S(0, 0, 3, 3));
  EXPECT_EQ(merged[1], S(5, 0, 6, 0));

  const auto touching = merge_collinear({S(0, 0, 1, 1), S(1, 1, 2, 2)});
  EXPECT_EQ(touching.size(), 2u);
}

TEST(CanonicalSegments, SetEquality) {
  const auto a = canonical_segments({S(2, 2, 0, 0), S(2, 2, 3, 3), S(4, 0, 4, 1)});
  const auto b = canonical_segments({S(4, 1, 4, 0), S(0, 0, 3, 3)});
  EXPECT_EQ(a, b);
  ASSERT_EQ(a.size(), 2u);
  EXPECT_EQ(a[0], S(0, 0, 3, 3));
}

TEST(Clip, SegmentAndLine) {
  const Box box{R("0"), R("2"), R("0"), R("2")};
  const auto s = clip(S(-1, -1, 3, 3), box);
  ASSERT_TRUE(s);
  EXPECT_EQ(s->first, P(0, 0));
  EXPECT_EQ(s->second, P(2, 2));

  const auto corner = clip(Line{P(0, 4), P(1, -1)}, box);
  ASSERT_TRUE(corner);
  EXPECT_EQ(corner->first, P(2, 2));
  EXPECT_EQ(corner->second, P(2, 2));

  EXPECT_FALSE(clip(Line{P(0, 5), P(1, -1)}, box));
  EXPECT_FALSE(clip(S(3, 0, 4, 1), box));
}
