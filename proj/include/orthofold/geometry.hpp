#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "orthofold/rational.hpp"

namespace orthofold {

struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point& a, const Point& b) {
    return a.x == b.x && a.y == b.y;
  }
  // Lexicographic (x, then y).
  friend bool operator<(const Point& a, const Point& b) {
    const int c = cmp(a.x, b.x);
    return c != 0 ? c < 0 : a.y < b.y;
  }
};

// A cut: a closed line segment of positive length.
class Segment {
 public:
  Segment(Point a, Point b);

  const Point& a() const { return a_; }
  const Point& b() const { return b_; }
  Point direction() const { return {b_.x - a_.x, b_.y - a_.y}; }

  friend bool operator==(const Segment& s, const Segment& t) {
    return s.a_ == t.a_ && s.b_ == t.b_;
  }

 private:
  Point a_;
  Point b_;
};

struct PaperRect {
  Rational width;
  Rational height;
};

// Throws InvalidInstance unless both dimensions are positive.
void validate(const PaperRect& paper);

// Closed interval [lo, hi].
struct Interval {
  Rational lo;
  Rational hi;

  friend bool operator==(const Interval& a, const Interval& b) {
    return a.lo == b.lo && a.hi == b.hi;
  }
  bool contains(const Rational& v) const { return lo <= v && v <= hi; }
};

// Closed axis-aligned box; also used for grid cells and slabs.
struct Box {
  Rational x0, x1, y0, y1;

  bool contains(const Point& p) const {
    return x0 <= p.x && p.x <= x1 && y0 <= p.y && p.y <= y1;
  }
};

// Infinite line through `point` with nonzero `direction`.
struct Line {
  Point point;
  Point direction;

  // True for lines describing the same point set.
  bool same_as(const Line& other) const;
  bool contains(const Point& p) const;
};

// Line through two distinct points, normalized so that equal lines compare
// equal field-wise: direction (1, m) with the point on x = 0, or (0, 1) with
// the point on y = 0 for vertical lines.
Line line_through(const Point& p, const Point& q);

inline Rational cross(const Point& u, const Point& v) { return u.x * v.y - u.y * v.x; }

// Signed area test of c relative to the directed line a->b.
inline Rational orient(const Point& a, const Point& b, const Point& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

bool on_segment(const Segment& s, const Point& p);

// Unique common point of two segments (crossings, shared endpoints and
// T-contacts). Throws OverlapError for collinear segments sharing more than
// one point.
std::optional<Point> segment_intersection(const Segment& s1, const Segment& s2);

// All endpoints plus all pairwise intersection points, sorted and unique.
std::vector<Point> cut_graph_vertices(std::span<const Segment> cuts);

bool collinear(const Segment& s, const Segment& t);

// Merges collinear segments that overlap in more than a point into maximal
// segments. Segments that only touch at an endpoint stay distinct. The order
// of untouched segments is preserved.
std::vector<Segment> merge_collinear(std::vector<Segment> cuts);

// Set-canonical form: collinear segments that overlap or touch are merged,
// each segment is oriented with a < b, and the list is sorted. Two cut sets
// cover the same points iff their canonical forms are equal.
std::vector<Segment> canonical_segments(std::vector<Segment> cuts);

// Closed clip of a segment or line against a box. The result may be a single
// point (returned as a pair of equal points).
std::optional<std::pair<Point, Point>> clip(const Segment& s, const Box& box);
std::optional<std::pair<Point, Point>> clip(const Line& line, const Box& box);

}  // namespace orthofold
