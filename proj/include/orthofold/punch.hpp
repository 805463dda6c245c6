#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "orthofold/geometry.hpp"

// Orthogonal fold & punch: fold with horizontal and vertical creases, then
// punch a single point of the folded state.
namespace orthofold::punch {

struct HoleInstance {
  PaperRect paper;
  std::vector<Point> holes;  // distinct, strictly inside the paper
};

void validate(const HoleInstance& inst);

// Hole set written as X x Y.
struct CombRect {
  std::vector<Rational> xs;
  std::vector<Rational> ys;
};

struct NotRectangle {
  Point missing;  // a point of X x Y that is not a hole
};

std::variant<CombRect, NotRectangle> check_combinatorial_rectangle(const HoleInstance& inst);

struct Solution {
  std::vector<Rational> vertical_creases;
  std::vector<Rational> horizontal_creases;
  Point punch_point;  // in folded coordinates
};

std::variant<Solution, NotRectangle> solve_punch(const HoleInstance& inst);

struct PunchFailure {
  std::string reason;  // "aligned-non-hole" or "unaligned-hole"
  Point witness;
};

// nullopt when punching `punch_point` after folding removes exactly the
// holes. Throws InvalidCreases for creases outside the paper or unsorted,
// and InvalidInstance when the punch misses the folded paper.
std::optional<PunchFailure> verify_punch(const HoleInstance& inst,
                                         const std::vector<Rational>& vertical_creases,
                                         const std::vector<Rational>& horizontal_creases,
                                         const Point& punch_point);

}  // namespace orthofold::punch
