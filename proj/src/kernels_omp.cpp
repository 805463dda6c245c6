#include <exception>

#include "orthofold/kernels.hpp"

namespace orthofold::kernels::omp {

namespace {

// Runs body(i) for i in [0, n) in parallel; rethrows the exception of the
// lowest failing index so behaviour matches the serial loop.
template <typename Body>
void parallel_for(std::size_t n, Body&& body) {
  std::vector<std::exception_ptr> errors(n);
  const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace

std::vector<Point> pairwise_intersections(std::span<const Segment> cuts) {
  std::vector<std::vector<Point>> rows(cuts.size());
  parallel_for(cuts.size(), [&](std::size_t i) { rows[i] = detail::intersections_after(cuts, i); });
  std::vector<Point> out;
  for (auto& row : rows) {
    for (auto& p : row) out.push_back(std::move(p));
  }
  return out;
}

std::vector<Point> fold_points(const FoldMap2D& map, std::span<const Point> points) {
  std::vector<Point> out(points.size());
  parallel_for(points.size(), [&](std::size_t i) { out[i] = map(points[i]); });
  return out;
}

std::optional<CellFailure> check_cells(const FoldMap2D& map, std::span<const Segment> cuts,
                                       const Line& folded_line) {
  const std::size_t n = cell_count(map);
  std::vector<std::optional<CellFailure>> results(n);
  parallel_for(n, [&](std::size_t cell) {
    results[cell] = detail::check_cell(map, cuts, folded_line, cell);
  });
  for (auto& r : results) {
    if (r) return std::move(r);
  }
  return std::nullopt;
}

}  // namespace orthofold::kernels::omp
