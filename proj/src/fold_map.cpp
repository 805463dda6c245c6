#include "orthofold/fold_map.hpp"

#include <algorithm>

#include "orthofold/errors.hpp"

namespace orthofold {

FoldMap1D::FoldMap1D(Rational lo, Rational hi, std::vector<Rational> creases)
    : lo_(std::move(lo)), hi_(std::move(hi)), creases_(std::move(creases)) {
  if (!(lo_ < hi_)) throw InvalidCreases("fold map domain must have lo < hi");
  for (std::size_t i = 0; i < creases_.size(); ++i) {
    if (creases_[i] <= lo_ || creases_[i] >= hi_) {
      throw InvalidCreases("crease " + to_string(creases_[i]) +
                           " is not strictly inside the domain");
    }
    if (i > 0 && creases_[i] <= creases_[i - 1]) {
      throw InvalidCreases("creases must be strictly increasing");
    }
  }

  pieces_.reserve(creases_.size() + 1);
  int sign = 1;
  Rational offset = 0;
  Rational start = lo_;
  for (const Rational& c : creases_) {
    pieces_.push_back({start, c, sign, offset});
    // Continuity at c: sign*c + offset == -sign*c + next_offset.
    offset += 2 * sign * c;
    sign = -sign;
    start = c;
  }
  pieces_.push_back({start, hi_, sign, offset});
}

void FoldMap1D::check_domain(const Rational& x) const {
  if (x < lo_ || x > hi_) {
    throw DomainError(to_string(x) + " is outside [" + to_string(lo_) + ", " +
                      to_string(hi_) + "]");
  }
}

std::size_t FoldMap1D::piece_index(const Rational& x) const {
  check_domain(x);
  // Number of creases strictly less than x.
  auto it = std::lower_bound(creases_.begin(), creases_.end(), x);
  return static_cast<std::size_t>(it - creases_.begin());
}

Rational FoldMap1D::operator()(const Rational& x) const {
  return pieces_[piece_index(x)].apply(x);
}

std::vector<Rational> FoldMap1D::preimages(const Rational& value) const {
  std::vector<Rational> out;
  for (const Piece& p : pieces_) {
    Rational t = p.sign > 0 ? value - p.offset : p.offset - value;
    if (p.lo <= t && t <= p.hi && (out.empty() || out.back() != t)) out.push_back(t);
  }
  return out;
}

int FoldMap1D::orientation(const Rational& x) const {
  check_domain(x);
  if (std::binary_search(creases_.begin(), creases_.end(), x)) {
    throw OrientationUndefined("orientation is undefined at crease " + to_string(x));
  }
  return pieces_[piece_index(x)].sign;
}

Interval FoldMap1D::image(const Rational& a, const Rational& b) const {
  check_domain(a);
  check_domain(b);
  Rational lo = (*this)(a);
  Rational hi = lo;
  auto extend = [&](const Rational& v) {
    if (v < lo) lo = v;
    if (v > hi) hi = v;
  };
  extend((*this)(b));
  for (const Rational& c : creases_) {
    if (a < c && c < b) extend((*this)(c));
  }
  return {lo, hi};
}

FoldMap2D::FoldMap2D(const PaperRect& paper, std::vector<Rational> vertical_creases,
                     std::vector<Rational> horizontal_creases)
    : horizontal(0, paper.width, std::move(vertical_creases)),
      vertical(0, paper.height, std::move(horizontal_creases)) {}

std::vector<Point> FoldMap2D::preimages(const Point& folded) const {
  std::vector<Point> out;
  const auto xs = horizontal.preimages(folded.x);
  const auto ys = vertical.preimages(folded.y);
  for (const Rational& x : xs) {
    for (const Rational& y : ys) out.push_back({x, y});
  }
  return out;
}

}  // namespace orthofold
