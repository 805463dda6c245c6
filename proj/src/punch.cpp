#include "orthofold/punch.hpp"

#include <algorithm>
#include <cassert>

#include "orthofold/errors.hpp"
#include "orthofold/fold_map.hpp"

namespace orthofold::punch {

namespace {

std::vector<Rational> sorted_unique(std::vector<Rational> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<Rational> midpoints(const std::vector<Rational>& v) {
  std::vector<Rational> out;
  for (std::size_t i = 1; i < v.size(); ++i) out.push_back(midpoint(v[i - 1], v[i]));
  return out;
}

}  // namespace

void validate(const HoleInstance& inst) {
  validate(inst.paper);
  if (inst.holes.empty()) throw InvalidInstance("no holes");
  for (const Point& h : inst.holes) {
    if (h.x <= 0 || h.x >= inst.paper.width || h.y <= 0 || h.y >= inst.paper.height) {
      throw InvalidInstance("hole (" + to_string(h.x) + ", " + to_string(h.y) +
                            ") is not strictly inside the paper");
    }
  }
  std::vector<Point> sorted = inst.holes;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidInstance("duplicate hole");
  }
}

std::variant<CombRect, NotRectangle> check_combinatorial_rectangle(const HoleInstance& inst) {
  validate(inst);
  std::vector<Rational> xs, ys;
  for (const Point& h : inst.holes) {
    xs.push_back(h.x);
    ys.push_back(h.y);
  }
  xs = sorted_unique(std::move(xs));
  ys = sorted_unique(std::move(ys));

  std::vector<Point> holes = inst.holes;
  std::sort(holes.begin(), holes.end());
  for (const Rational& x : xs) {
    for (const Rational& y : ys) {
      Point p{x, y};
      if (!std::binary_search(holes.begin(), holes.end(), p)) return NotRectangle{p};
    }
  }
  return CombRect{std::move(xs), std::move(ys)};
}

std::variant<Solution, NotRectangle> solve_punch(const HoleInstance& inst) {
  auto rect = check_combinatorial_rectangle(inst);
  if (auto* miss = std::get_if<NotRectangle>(&rect)) return *miss;
  const auto& [xs, ys] = std::get<CombRect>(rect);

  Solution sol{midpoints(xs), midpoints(ys), {}};
  // Midpoints of distinct coordinates never land on a hole coordinate.
  assert(std::none_of(sol.vertical_creases.begin(), sol.vertical_creases.end(),
                      [&](const Rational& c) { return std::binary_search(xs.begin(), xs.end(), c); }));
  const FoldMap2D map(inst.paper, sol.vertical_creases, sol.horizontal_creases);
  sol.punch_point = map(Point{xs.front(), ys.front()});
  return sol;
}

std::optional<PunchFailure> verify_punch(const HoleInstance& inst,
                                         const std::vector<Rational>& vertical_creases,
                                         const std::vector<Rational>& horizontal_creases,
                                         const Point& punch_point) {
  validate(inst);
  const FoldMap2D map(inst.paper, vertical_creases, horizontal_creases);
  if (!map.horizontal.image().contains(punch_point.x) ||
      !map.vertical.image().contains(punch_point.y)) {
    throw InvalidInstance("punch point lies outside the folded paper");
  }

  std::vector<Point> punched = map.preimages(punch_point);
  std::sort(punched.begin(), punched.end());
  std::vector<Point> holes = inst.holes;
  std::sort(holes.begin(), holes.end());

  for (const Point& p : punched) {
    if (!std::binary_search(holes.begin(), holes.end(), p)) {
      return PunchFailure{"aligned-non-hole", p};
    }
  }
  for (const Point& h : holes) {
    if (!std::binary_search(punched.begin(), punched.end(), h)) {
      return PunchFailure{"unaligned-hole", h};
    }
  }
  return std::nullopt;
}

}  // namespace orthofold::punch
