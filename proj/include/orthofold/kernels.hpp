#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "orthofold/fold_map.hpp"
#include "orthofold/geometry.hpp"

// Data-parallel loops behind the solvers. `serial` is the reference
// implementation; `omp` must produce identical results (same order, same
// first failure) and is what the library calls.
namespace orthofold::kernels {

// A grid cell (rectangle between consecutive creases/paper edges) whose cut
// set differs from the preimage of the folded cut line.
struct CellFailure {
  std::size_t cell;     // row-major: row * columns + column
  std::string reason;   // "cut-off-line" or "uncut-preimage"
  std::vector<Point> witness;
};

std::size_t cell_count(const FoldMap2D& map);
Box cell_box(const FoldMap2D& map, std::size_t cell);

// Preimage of a folded line inside one cell (an infinite line in paper
// coordinates; the fold map is a fixed isometry on the cell).
Line cell_preimage(const FoldMap2D& map, std::size_t cell, const Line& folded_line);

namespace serial {

// Intersection points of all pairs i < j, in (i, j) order; may repeat.
std::vector<Point> pairwise_intersections(std::span<const Segment> cuts);

std::vector<Point> fold_points(const FoldMap2D& map, std::span<const Point> points);

// Per cell: every cut piece folds onto `folded_line`, and the preimage of the
// line in the cell is covered by cut pieces. Returns the lowest failing cell.
std::optional<CellFailure> check_cells(const FoldMap2D& map, std::span<const Segment> cuts,
                                       const Line& folded_line);

}  // namespace serial

namespace omp {

std::vector<Point> pairwise_intersections(std::span<const Segment> cuts);
std::vector<Point> fold_points(const FoldMap2D& map, std::span<const Point> points);
std::optional<CellFailure> check_cells(const FoldMap2D& map, std::span<const Segment> cuts,
                                       const Line& folded_line);

}  // namespace omp

namespace detail {
std::vector<Point> intersections_after(std::span<const Segment> cuts, std::size_t i);
std::optional<CellFailure> check_cell(const FoldMap2D& map, std::span<const Segment> cuts,
                                      const Line& folded_line, std::size_t cell);
}  // namespace detail

}  // namespace orthofold::kernels
