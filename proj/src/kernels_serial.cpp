#include <algorithm>

#include "orthofold/kernels.hpp"

namespace orthofold::kernels {

namespace {

const FoldMap1D::Piece& column_piece(const FoldMap2D& map, std::size_t cell) {
  const std::size_t columns = map.horizontal.pieces().size();
  return map.horizontal.pieces()[cell % columns];
}

const FoldMap1D::Piece& row_piece(const FoldMap2D& map, std::size_t cell) {
  const std::size_t columns = map.horizontal.pieces().size();
  return map.vertical.pieces()[cell / columns];
}

Rational param_on(const Point& origin, const Point& d, const Point& p) {
  // d is nonzero; p lies on the line through origin with direction d.
  if (d.x != 0) return (p.x - origin.x) / d.x;
  return (p.y - origin.y) / d.y;
}

}  // namespace

std::size_t cell_count(const FoldMap2D& map) {
  return map.horizontal.pieces().size() * map.vertical.pieces().size();
}

Box cell_box(const FoldMap2D& map, std::size_t cell) {
  const auto& col = column_piece(map, cell);
  const auto& row = row_piece(map, cell);
  return {col.lo, col.hi, row.lo, row.hi};
}

Line cell_preimage(const FoldMap2D& map, std::size_t cell, const Line& folded_line) {
  const auto& col = column_piece(map, cell);
  const auto& row = row_piece(map, cell);
  // Inverse of X = s*x + b is x = s*(X - b).
  Point p{col.sign * (folded_line.point.x - col.offset),
          row.sign * (folded_line.point.y - row.offset)};
  Point d{col.sign * folded_line.direction.x, row.sign * folded_line.direction.y};
  return {p, d};
}

namespace detail {

std::vector<Point> intersections_after(std::span<const Segment> cuts, std::size_t i) {
  std::vector<Point> out;
  for (std::size_t j = i + 1; j < cuts.size(); ++j) {
    if (auto p = segment_intersection(cuts[i], cuts[j])) out.push_back(std::move(*p));
  }
  return out;
}

std::optional<CellFailure> check_cell(const FoldMap2D& map, std::span<const Segment> cuts,
                                      const Line& folded_line, std::size_t cell) {
  const Box box = cell_box(map, cell);
  const auto& col = column_piece(map, cell);
  const auto& row = row_piece(map, cell);
  auto fold = [&](const Point& p) { return Point{col.apply(p.x), row.apply(p.y)}; };

  std::vector<std::pair<Point, Point>> pieces;
  for (const Segment& s : cuts) {
    auto piece = clip(s, box);
    if (!piece) continue;
    if (!folded_line.contains(fold(piece->first)) || !folded_line.contains(fold(piece->second))) {
      return CellFailure{cell, "cut-off-line", {piece->first, piece->second}};
    }
    pieces.push_back(std::move(*piece));
  }

  const Line preimage = cell_preimage(map, cell, folded_line);
  const auto span = clip(preimage, box);
  if (!span) return std::nullopt;

  const Point& s0 = span->first;
  const Point& s1 = span->second;
  if (s0 == s1) {
    for (const auto& [p, q] : pieces) {
      if (p == s0 || q == s0 || (!(p == q) && on_segment(Segment(p, q), s0))) {
        return std::nullopt;
      }
    }
    return CellFailure{cell, "uncut-preimage", {s0}};
  }

  const Point d{s1.x - s0.x, s1.y - s0.y};
  std::vector<std::pair<Rational, Rational>> covered;
  covered.reserve(pieces.size());
  for (const auto& [p, q] : pieces) {
    Rational u0 = param_on(s0, d, p);
    Rational u1 = param_on(s0, d, q);
    if (u0 > u1) std::swap(u0, u1);
    covered.emplace_back(std::move(u0), std::move(u1));
  }
  std::sort(covered.begin(), covered.end());

  auto at = [&](const Rational& u) { return Point{s0.x + u * d.x, s0.y + u * d.y}; };
  Rational reach = 0;
  for (const auto& [u0, u1] : covered) {
    if (u0 > reach) return CellFailure{cell, "uncut-preimage", {at(reach), at(u0)}};
    if (u1 > reach) reach = u1;
  }
  if (reach < 1) return CellFailure{cell, "uncut-preimage", {at(reach), s1}};
  return std::nullopt;
}

}  // namespace detail

namespace serial {

std::vector<Point> pairwise_intersections(std::span<const Segment> cuts) {
  std::vector<Point> out;
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    auto part = detail::intersections_after(cuts, i);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::vector<Point> fold_points(const FoldMap2D& map, std::span<const Point> points) {
  std::vector<Point> out;
  out.reserve(points.size());
  for (const Point& p : points) out.push_back(map(p));
  return out;
}

std::optional<CellFailure> check_cells(const FoldMap2D& map, std::span<const Segment> cuts,
                                       const Line& folded_line) {
  const std::size_t n = cell_count(map);
  for (std::size_t cell = 0; cell < n; ++cell) {
    if (auto failure = detail::check_cell(map, cuts, folded_line, cell)) return failure;
  }
  return std::nullopt;
}

}  // namespace serial

}  // namespace orthofold::kernels
