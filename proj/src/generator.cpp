#include "orthofold/generator.hpp"

#include <algorithm>

#include "orthofold/errors.hpp"
#include "orthofold/kernels.hpp"
#include "orthofold/oned.hpp"
#include "orthofold/random.hpp"

namespace orthofold {

namespace {

struct Walk {
  std::vector<std::int64_t> creases;  // unfolded positions, grid units
  std::int64_t length = 0;            // unfolded length, grid units
};

// Accordion walk inside [0, folded]. The first piece spans the whole folded
// extent; each later one runs back toward the other side without leaving
// it, then the crease turns the direction around.
Walk accordion_walk(SplitMix64& rng, int creases, std::int64_t folded) {
  Walk walk;
  std::int64_t pos = 0;
  int dir = 1;
  for (int k = 0; k <= creases; ++k) {
    const std::int64_t room = dir > 0 ? folded - pos : pos;
    const std::int64_t len = k == 0 ? room : rng.between(1, room);
    pos += dir * len;
    walk.length += len;
    if (k < creases) walk.creases.push_back(walk.length);
    dir = -dir;
  }
  return walk;
}

std::vector<Rational> scaled(const std::vector<std::int64_t>& units, const Rational& unit) {
  std::vector<Rational> out;
  for (auto u : units) out.push_back(unit * u);
  return out;
}

}  // namespace

namespace oned {

IntervalInstance unfold_generate_interval(std::uint64_t seed, const IntervalGenParams& params) {
  if (params.creases < 0 || params.folded < 2 || params.grid < 1) {
    throw InvalidInstance("invalid interval generator parameters");
  }
  SplitMix64 rng(seed);
  const Rational unit(1, params.grid);

  for (int attempt = 0; attempt < 1000; ++attempt) {
    const Walk walk = accordion_walk(rng, params.creases, params.folded);
    const std::vector<Rational> creases = scaled(walk.creases, unit);
    const FoldMap1D map(0, unit * walk.length, creases);

    const std::int64_t m = rng.between(0, params.folded - 1);
    const std::int64_t width = rng.between(1, params.folded - m);
    const Rational lo = unit * m;
    const Rational hi = unit * (m + width);

    // Preimage of [lo, hi]: one interval per piece, merged into components.
    std::vector<Interval> components;
    for (const auto& piece : map.pieces()) {
      Rational a = piece.sign > 0 ? Rational(lo - piece.offset) : Rational(piece.offset - hi);
      Rational b = piece.sign > 0 ? Rational(hi - piece.offset) : Rational(piece.offset - lo);
      if (a < piece.lo) a = piece.lo;
      if (b > piece.hi) b = piece.hi;
      if (a > b) continue;
      if (!components.empty() && a <= components.back().hi) {
        if (b > components.back().hi) components.back().hi = b;
      } else {
        components.push_back({a, b});
      }
    }
    // Every component has to fold onto the whole target; one clipped by the
    // paper end or turned back early covers only part of it.
    const Interval target{lo, hi};
    const bool partial = std::any_of(components.begin(), components.end(), [&](const Interval& c) {
      return c.lo == c.hi || !(map.image(c.lo, c.hi) == target);
    });
    if (components.empty() || partial) continue;

    IntervalInstance inst{{Rational(0), unit * walk.length}, {}};
    for (const auto& comp : components) {
      CutInterval ci{comp, {}};
      for (const Rational& c : creases) {
        if (comp.lo < c && c < comp.hi) ci.required_creases.push_back(c);
      }
      inst.cut_intervals.push_back(std::move(ci));
    }
    return inst;
  }
  throw InvalidInstance("interval generator failed to produce an instance");
}

}  // namespace oned

namespace foldcut {

std::optional<CutInstance> unfold_instance(const PaperRect& paper,
                                           const std::vector<Rational>& vertical_creases,
                                           const std::vector<Rational>& horizontal_creases,
                                           const Line& folded_line) {
  const FoldMap2D map(paper, vertical_creases, horizontal_creases);
  std::vector<Segment> cuts;
  std::vector<Point> touches;
  for (std::size_t cell = 0; cell < kernels::cell_count(map); ++cell) {
    const Line pre = kernels::cell_preimage(map, cell, folded_line);
    auto piece = clip(pre, kernels::cell_box(map, cell));
    if (!piece) continue;
    if (piece->first == piece->second) {
      touches.push_back(piece->first);
    } else {
      cuts.emplace_back(piece->first, piece->second);
    }
  }
  if (cuts.empty()) return std::nullopt;
  for (const Point& p : touches) {
    const bool covered = std::any_of(cuts.begin(), cuts.end(),
                                     [&](const Segment& s) { return on_segment(s, p); });
    if (!covered) return std::nullopt;
  }
  return CutInstance{paper, canonical_segments(std::move(cuts))};
}

Generated unfold_generate(std::uint64_t seed, const GenParams& params) {
  if (params.kx < 0 || params.ky < 0 || params.folded_w < 1 || params.folded_h < 1 ||
      params.grid < 1) {
    throw InvalidInstance("invalid generator parameters");
  }
  SplitMix64 rng(seed);
  const Rational unit(1, params.grid);
  const Rational half(1, 2 * params.grid);

  for (int attempt = 0; attempt < 1000; ++attempt) {
    const Walk wx = accordion_walk(rng, params.kx, params.folded_w * params.grid);
    const Walk wy = accordion_walk(rng, params.ky, params.folded_h * params.grid);
    const PaperRect paper{unit * wx.length, unit * wy.length};
    std::vector<Rational> v = scaled(wx.creases, unit);
    std::vector<Rational> h = scaled(wy.creases, unit);

    Line line;
    if (params.line) {
      line = *params.line;
    } else {
      // A point of the folded rectangle on the half grid, and slope +-1.
      const FoldMap2D map(paper, v, h);
      const Interval fx = map.horizontal.image();
      const Interval fy = map.vertical.image();
      const Rational span_x = (fx.hi - fx.lo) / half;
      const Rational span_y = (fy.hi - fy.lo) / half;
      const auto px = rng.between(0, span_x.get_num().get_si());
      const auto py = rng.between(0, span_y.get_num().get_si());
      const int slope = rng.below(2) == 0 ? 1 : -1;
      line = Line{{fx.lo + half * px, fy.lo + half * py}, {Rational(1), Rational(slope)}};
    }

    auto inst = unfold_instance(paper, v, h, line);
    if (!inst) continue;
    return Generated{std::move(*inst), std::move(v), std::move(h), line};
  }
  throw InvalidInstance("generator failed to produce an instance");
}

}  // namespace foldcut

}  // namespace orthofold
