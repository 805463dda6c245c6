#include "orthofold/geometry.hpp"

#include <algorithm>

#include "orthofold/errors.hpp"
#include "orthofold/kernels.hpp"

namespace orthofold {

namespace {

Point sub(const Point& p, const Point& q) { return {p.x - q.x, p.y - q.y}; }

Rational dot(const Point& u, const Point& v) { return u.x * v.x + u.y * v.y; }

Point at(const Point& p, const Point& d, const Rational& t) {
  return {p.x + t * d.x, p.y + t * d.y};
}

// Parameter of p along the line a + t*d (p assumed on the line).
Rational param(const Point& a, const Point& d, const Point& p) {
  Rational t = dot(sub(p, a), d);
  t /= dot(d, d);
  return t;
}

// Parameter range of t restricted by lo <= p + t*d <= hi on one axis.
struct Range {
  std::optional<Rational> lo;
  std::optional<Rational> hi;
};

bool restrict_axis(Range& r, const Rational& p, const Rational& d,
                   const Rational& lo, const Rational& hi) {
  if (d == 0) return lo <= p && p <= hi;
  Rational t0 = (lo - p) / d;
  Rational t1 = (hi - p) / d;
  if (t0 > t1) std::swap(t0, t1);
  if (!r.lo || t0 > *r.lo) r.lo = t0;
  if (!r.hi || t1 < *r.hi) r.hi = t1;
  return *r.lo <= *r.hi;
}

std::optional<std::pair<Point, Point>> clip_param(const Point& p, const Point& d,
                                                  Range r, const Box& box) {
  if (!restrict_axis(r, p.x, d.x, box.x0, box.x1)) return std::nullopt;
  if (!restrict_axis(r, p.y, d.y, box.y0, box.y1)) return std::nullopt;
  if (!r.lo || !r.hi || *r.lo > *r.hi) return std::nullopt;
  return std::pair{at(p, d, *r.lo), at(p, d, *r.hi)};
}

// Overlap of t (along s) and its collinear partner, as a parameter range on s.
std::pair<Rational, Rational> collinear_range(const Segment& s, const Segment& t) {
  const Point d = s.direction();
  Rational u0 = param(s.a(), d, t.a());
  Rational u1 = param(s.a(), d, t.b());
  if (u0 > u1) std::swap(u0, u1);
  return {u0, u1};
}

bool overlaps_more_than_point(const Segment& s, const Segment& t) {
  if (!collinear(s, t)) return false;
  auto [u0, u1] = collinear_range(s, t);
  return u0 < 1 && u1 > 0;
}

bool overlaps_or_touches(const Segment& s, const Segment& t) {
  if (!collinear(s, t)) return false;
  auto [u0, u1] = collinear_range(s, t);
  return u0 <= 1 && u1 >= 0;
}

// Smallest segment covering two collinear segments, oriented like `ref`.
Segment hull(const Segment& ref, const Segment& other) {
  const Point d = ref.direction();
  auto [u0, u1] = collinear_range(ref, other);
  Rational lo = u0 < 0 ? u0 : Rational(0);
  Rational hi = u1 > 1 ? u1 : Rational(1);
  return Segment(at(ref.a(), d, lo), at(ref.a(), d, hi));
}

Segment oriented(const Segment& s) {
  return s.b() < s.a() ? Segment(s.b(), s.a()) : s;
}

}  // namespace

Segment::Segment(Point a, Point b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_ == b_) {
    throw InvalidInstance("degenerate segment at (" + to_string(a_.x) + ", " +
                          to_string(a_.y) + ")");
  }
}

void validate(const PaperRect& paper) {
  if (paper.width <= 0 || paper.height <= 0) {
    throw InvalidInstance("paper dimensions must be positive");
  }
}

bool Line::contains(const Point& p) const { return cross(direction, sub(p, point)) == 0; }

bool Line::same_as(const Line& other) const {
  return contains(other.point) && cross(direction, other.direction) == 0;
}

Line line_through(const Point& p, const Point& q) {
  if (p == q) throw InvalidInstance("line through coincident points");
  if (p.x == q.x) return Line{{p.x, Rational(0)}, {Rational(0), Rational(1)}};
  Rational m = (q.y - p.y) / (q.x - p.x);
  Rational intercept = p.y - m * p.x;
  return Line{{Rational(0), intercept}, {Rational(1), m}};
}

bool on_segment(const Segment& s, const Point& p) {
  if (orient(s.a(), s.b(), p) != 0) return false;
  return std::min(s.a().x, s.b().x) <= p.x && p.x <= std::max(s.a().x, s.b().x) &&
         std::min(s.a().y, s.b().y) <= p.y && p.y <= std::max(s.a().y, s.b().y);
}

bool collinear(const Segment& s, const Segment& t) {
  return orient(s.a(), s.b(), t.a()) == 0 && orient(s.a(), s.b(), t.b()) == 0;
}

std::optional<Point> segment_intersection(const Segment& s1, const Segment& s2) {
  const Point d1 = s1.direction();
  const Point d2 = s2.direction();
  const Point w = sub(s2.a(), s1.a());
  const Rational denom = cross(d1, d2);

  if (denom != 0) {
    Rational t = cross(w, d2) / denom;
    Rational u = cross(w, d1) / denom;
    if (t < 0 || t > 1 || u < 0 || u > 1) return std::nullopt;
    return at(s1.a(), d1, t);
  }
  if (cross(w, d1) != 0) return std::nullopt;  // parallel, distinct lines

  auto [u0, u1] = collinear_range(s1, s2);
  Rational lo = u0 > 0 ? u0 : Rational(0);
  Rational hi = u1 < 1 ? u1 : Rational(1);
  if (lo > hi) return std::nullopt;
  if (lo == hi) return at(s1.a(), d1, lo);
  throw OverlapError("collinear cuts overlap between (" + to_string(s1.a().x) + ", " +
                     to_string(s1.a().y) + ") and (" + to_string(s1.b().x) + ", " +
                     to_string(s1.b().y) + ")");
}

std::vector<Point> cut_graph_vertices(std::span<const Segment> cuts) {
  std::vector<Point> vertices = kernels::omp::pairwise_intersections(cuts);
  for (const Segment& s : cuts) {
    vertices.push_back(s.a());
    vertices.push_back(s.b());
  }
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return vertices;
}

std::vector<Segment> merge_collinear(std::vector<Segment> cuts) {
  std::vector<std::optional<Segment>> out;
  for (const Segment& seg : cuts) {
    Segment cur = seg;
    std::optional<std::size_t> home;
    for (bool again = true; again;) {
      again = false;
      for (std::size_t k = 0; k < out.size(); ++k) {
        if (!out[k] || (home && k == *home)) continue;
        if (!overlaps_more_than_point(*out[k], cur)) continue;
        if (!home) {
          cur = hull(*out[k], cur);
          home = k;
        } else if (k < *home) {
          cur = hull(*out[k], cur);
          out[*home].reset();
          home = k;
        } else {
          cur = hull(cur, *out[k]);
          out[k].reset();
        }
        out[*home] = cur;
        again = true;
      }
    }
    if (!home) out.emplace_back(cur);
  }

  std::vector<Segment> merged;
  for (auto& s : out) {
    if (s) merged.push_back(*s);
  }
  return merged;
}

std::vector<Segment> canonical_segments(std::vector<Segment> cuts) {
  for (bool again = true; again;) {
    again = false;
    for (std::size_t i = 0; i < cuts.size() && !again; ++i) {
      for (std::size_t j = i + 1; j < cuts.size(); ++j) {
        if (overlaps_or_touches(cuts[i], cuts[j])) {
          cuts[i] = hull(cuts[i], cuts[j]);
          cuts.erase(cuts.begin() + static_cast<std::ptrdiff_t>(j));
          again = true;
          break;
        }
      }
    }
  }
  for (auto& s : cuts) s = oriented(s);
  std::sort(cuts.begin(), cuts.end(), [](const Segment& s, const Segment& t) {
    if (!(s.a() == t.a())) return s.a() < t.a();
    return s.b() < t.b();
  });
  return cuts;
}

std::optional<std::pair<Point, Point>> clip(const Segment& s, const Box& box) {
  return clip_param(s.a(), s.direction(), Range{Rational(0), Rational(1)}, box);
}

std::optional<std::pair<Point, Point>> clip(const Line& line, const Box& box) {
  return clip_param(line.point, line.direction, Range{}, box);
}

}  // namespace orthofold
