#pragma once

#include <span>
#include <vector>

#include "orthofold/geometry.hpp"
#include "orthofold/rational.hpp"

namespace orthofold {

// Position of every point of a creased interval in the flat-folded state.
//
// The map is continuous and piecewise linear: the identity on the leftmost
// piece [lo, c1], and each crease reflects everything to its right, so slopes
// alternate +1, -1, +1, ... Layer order is not modelled; only positions.
class FoldMap1D {
 public:
  // One linear piece: f(t) = sign * t + offset for t in [lo, hi].
  struct Piece {
    Rational lo;
    Rational hi;
    int sign;
    Rational offset;

    Rational apply(const Rational& t) const {
      if (sign > 0) return t + offset;
      return offset - t;
    }
  };

  // Throws InvalidCreases unless lo < hi and the creases are strictly
  // increasing and strictly inside (lo, hi).
  FoldMap1D(Rational lo, Rational hi, std::vector<Rational> creases = {});

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  const std::vector<Rational>& creases() const { return creases_; }
  std::span<const Piece> pieces() const { return pieces_; }

  // f(x). Throws DomainError outside [lo, hi].
  Rational operator()(const Rational& x) const;

  // Every x in the domain with f(x) == value, sorted, without duplicates.
  std::vector<Rational> preimages(const Rational& value) const;

  // +1 where f is increasing, -1 where decreasing, i.e. (-1)^(creases < x).
  // Throws OrientationUndefined at a crease and DomainError outside.
  int orientation(const Rational& x) const;

  // Index of the piece containing x; at a crease, the piece to its left.
  std::size_t piece_index(const Rational& x) const;

  // [min f, max f] over [a, b] (a <= b, both in the domain).
  Interval image(const Rational& a, const Rational& b) const;

  // Image of the whole domain.
  Interval image() const { return image(lo_, hi_); }

 private:
  void check_domain(const Rational& x) const;

  Rational lo_;
  Rational hi_;
  std::vector<Rational> creases_;
  std::vector<Piece> pieces_;
};

// Orthogonal creases on a rectangle fold (x, y) to (h(x), v(y)).
struct FoldMap2D {
  FoldMap1D horizontal;  // acts on x; built from the vertical creases
  FoldMap1D vertical;    // acts on y; built from the horizontal creases

  FoldMap2D(const PaperRect& paper, std::vector<Rational> vertical_creases,
            std::vector<Rational> horizontal_creases);

  Point operator()(const Point& p) const { return {horizontal(p.x), vertical(p.y)}; }

  // Every paper point folding onto `folded`: the product of both 1D preimages.
  std::vector<Point> preimages(const Point& folded) const;
};

}  // namespace orthofold
