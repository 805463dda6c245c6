#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "orthofold/fold_map.hpp"
#include "orthofold/geometry.hpp"

// Fold & cut on a line segment: plain cut points, signed cut points, and cut
// intervals with required creases.
namespace orthofold::oned {

struct UnsignedInstance {
  Interval domain;
  std::vector<Rational> cut_points;  // strictly increasing, within the domain
};

enum class Sign : int { Negative = -1, Positive = 1 };

struct SignedCut {
  Rational position;
  Sign sign;
};

struct SignedInstance {
  Interval domain;
  std::vector<SignedCut> cut_points;
};

struct CutInterval {
  Interval span;                          // positive length
  std::vector<Rational> required_creases;  // strictly inside span
};

struct IntervalInstance {
  Interval domain;
  std::vector<CutInterval> cut_intervals;  // sorted, separated by positive gaps
};

// Throw InvalidInstance when an invariant is violated.
void validate(const UnsignedInstance& inst);
void validate(const SignedInstance& inst);
void validate(const IntervalInstance& inst);

struct Solution {
  std::vector<Rational> creases;
  // A point for the point problems, the common interval I for intervals.
  std::variant<Rational, Interval> cut_image;
  // Signed problem only: the whole folded state is turned over so that every
  // orientation read from the identity-anchored fold map is negated.
  bool flip_whole_paper = false;
};

struct Unsolvable {
  std::string reason;
  std::vector<Rational> witness;
};

using Result = std::variant<Solution, Unsolvable>;

// Midpoints of consecutive cut points. Always succeeds.
Solution solve_unsigned(const UnsignedInstance& inst);

// Succeeds iff the signs alternate; otherwise the witness is the first
// adjacent pair of equal sign.
Result solve_signed(const SignedInstance& inst);

// Required creases plus the midpoint of every gap between cut intervals.
std::vector<Rational> canonical_creases(const IntervalInstance& inst);

Result solve_interval(const IntervalInstance& inst);

// Checks a crease pattern for the interval problem: every cut interval must
// fold onto the same interval I and nothing outside the cut intervals may
// land on I. Throws InvalidCreases if a required crease is missing or a
// non-required crease lies inside a cut interval.
std::variant<Interval, Unsolvable> verify_interval(const IntervalInstance& inst,
                                                    const std::vector<Rational>& creases);

// Checks a crease pattern for the point problems. Creases at cut points are
// rejected with InvalidCreases. On success returns the common image.
std::variant<Rational, Unsolvable> verify_unsigned(const UnsignedInstance& inst,
                                                   const std::vector<Rational>& creases);
std::variant<Rational, Unsolvable> verify_signed(const SignedInstance& inst,
                                                 const std::vector<Rational>& creases,
                                                 bool flip_whole_paper);

struct IntervalGenParams {
  int creases = 4;        // creases of the generating fold
  std::int64_t folded = 8;  // folded length, in grid units
  std::int64_t grid = 4;    // coordinates are multiples of 1/grid
};

// A solvable interval instance built by folding a random crease pattern and
// taking the preimage components of a random target interval. Deterministic
// in the seed.
IntervalInstance unfold_generate_interval(std::uint64_t seed, const IntervalGenParams& params);

}  // namespace orthofold::oned
