#include "orthofold/foldcut.hpp"

#include <algorithm>

#include "orthofold/errors.hpp"
#include "orthofold/kernels.hpp"

namespace orthofold::foldcut {

namespace {

const Rational& coord(const Point& p, Axis axis) { return axis == Axis::X ? p.x : p.y; }

std::vector<Rational> midpoints(const std::vector<Rational>& v) {
  std::vector<Rational> out;
  for (std::size_t i = 1; i < v.size(); ++i) out.push_back(midpoint(v[i - 1], v[i]));
  return out;
}

Point scale_y(const Point& p, const Rational& factor) { return {p.x, p.y * factor}; }

Segment scale_y(const Segment& s, const Rational& factor) {
  return Segment(scale_y(s.a(), factor), scale_y(s.b(), factor));
}

Box slab(const CutInstance& inst, Axis axis, const Rational& lo, const Rational& hi) {
  if (axis == Axis::X) return {lo, hi, Rational(0), inst.paper.height};
  return {Rational(0), inst.paper.width, lo, hi};
}

std::vector<Segment> cuts_in(const CutInstance& inst, const Box& box) {
  std::vector<Segment> out;
  for (const Segment& s : inst.cuts) {
    auto piece = clip(s, box);
    if (piece && !(piece->first == piece->second)) out.emplace_back(piece->first, piece->second);
  }
  return out;
}

Point reflect(const Point& p, Axis axis, const Rational& c) {
  if (axis == Axis::X) return {2 * c - p.x, p.y};
  return {p.x, 2 * c - p.y};
}

std::string describe(Axis axis, const Rational& c) {
  return axis == Axis::X ? "vertical stripe at x = " + to_string(c)
                         : "horizontal stripe at y = " + to_string(c);
}

}  // namespace

CutInstance ingest(PaperRect paper, std::vector<Segment> cuts) {
  validate(paper);
  if (cuts.empty()) throw NoCuts();
  const Box sheet{Rational(0), paper.width, Rational(0), paper.height};
  for (const Segment& s : cuts) {
    if (!sheet.contains(s.a()) || !sheet.contains(s.b())) {
      throw InvalidInstance("cut endpoint outside the paper");
    }
  }
  return CutInstance{std::move(paper), merge_collinear(std::move(cuts))};
}

SlopeClass classify_slopes(const CutInstance& inst) {
  if (inst.cuts.empty()) throw NoCuts();
  enum class K { Horizontal, Vertical, Sloped };
  auto kind_of = [](const Segment& s) {
    const Point d = s.direction();
    if (d.x == 0) return K::Vertical;
    if (d.y == 0) return K::Horizontal;
    return K::Sloped;
  };
  auto magnitude = [](const Segment& s) {
    const Point d = s.direction();
    Rational m = d.y / d.x;
    return Rational(abs(m));
  };

  const Segment& first = inst.cuts.front();
  const K k0 = kind_of(first);
  const Rational alpha = k0 == K::Sloped ? magnitude(first) : Rational(0);
  for (const Segment& s : inst.cuts) {
    const K k = kind_of(s);
    if (k != k0 || (k == K::Sloped && magnitude(s) != alpha)) {
      return SlopeClass{SlopeKind::Mixed, Rational(0), std::pair{first, s}};
    }
  }
  switch (k0) {
    case K::Horizontal: return SlopeClass{SlopeKind::Horizontal, Rational(0), std::nullopt};
    case K::Vertical: return SlopeClass{SlopeKind::Vertical, Rational(0), std::nullopt};
    default: return SlopeClass{SlopeKind::Uniform, alpha, std::nullopt};
  }
}

Normalized normalize_slope(const CutInstance& inst, const Rational& alpha) {
  if (alpha <= 0) throw InvalidInstance("slope magnitude must be positive");
  const Rational scale = 1 / alpha;
  CutInstance out{{inst.paper.width, inst.paper.height * scale}, {}};
  out.cuts.reserve(inst.cuts.size());
  for (const Segment& s : inst.cuts) out.cuts.push_back(scale_y(s, scale));
  return {std::move(out), scale};
}

std::vector<Element> Decomposition::stripes() const {
  std::vector<Element> out;
  std::copy_if(elements.begin(), elements.end(), std::back_inserter(out),
               [](const Element& e) { return e.stripe; });
  return out;
}

Decomposition compute_decomposition(const CutInstance& inst, Axis axis) {
  const Rational extent = axis == Axis::X ? inst.paper.width : inst.paper.height;
  const std::vector<Point> vertices = cut_graph_vertices(inst.cuts);

  // Open projection of each cut, punctured at the cut-graph vertices on it.
  std::vector<std::pair<Rational, Rational>> banned;
  for (const Segment& s : inst.cuts) {
    Rational lo = coord(s.a(), axis);
    Rational hi = coord(s.b(), axis);
    if (lo > hi) std::swap(lo, hi);
    if (lo == hi) continue;
    std::vector<Rational> punctures;
    for (const Point& v : vertices) {
      const Rational& c = coord(v, axis);
      if (lo < c && c < hi && on_segment(s, v)) punctures.push_back(c);
    }
    std::sort(punctures.begin(), punctures.end());
    punctures.erase(std::unique(punctures.begin(), punctures.end()), punctures.end());
    Rational start = lo;
    for (const Rational& c : punctures) {
      banned.emplace_back(start, c);
      start = c;
    }
    banned.emplace_back(start, hi);
  }
  std::sort(banned.begin(), banned.end());

  // Union of open intervals: (a, b) and (c, d) merge only when c < b.
  std::vector<std::pair<Rational, Rational>> merged;
  for (auto& iv : banned) {
    if (!merged.empty() && iv.first < merged.back().second) {
      if (iv.second > merged.back().second) merged.back().second = iv.second;
    } else {
      merged.push_back(std::move(iv));
    }
  }

  Decomposition dec{axis, extent, {}};
  if (merged.empty()) {
    dec.elements.push_back({false, Rational(0), extent});
    return dec;
  }
  // Allowed components touching the paper edge belong to the adjacent band.
  for (std::size_t i = 0; i < merged.size(); ++i) {
    const Rational band_lo = i == 0 ? Rational(0) : merged[i].first;
    const Rational band_hi = i + 1 == merged.size() ? extent : merged[i].second;
    dec.elements.push_back({false, band_lo, band_hi});
    if (i + 1 < merged.size()) {
      dec.elements.push_back({true, merged[i].second, merged[i + 1].first});
    }
  }
  return dec;
}

std::vector<Rational> canonical_creases(const Decomposition& dec) {
  std::vector<Rational> out;
  for (const Element& e : dec.elements) {
    if (e.stripe) out.push_back(midpoint(e.lo, e.hi));
  }
  return out;
}

std::variant<Line, VerifyFailure> verify_solution(const CutInstance& inst,
                                                  const std::vector<Rational>& vertical_creases,
                                                  const std::vector<Rational>& horizontal_creases) {
  if (inst.cuts.empty()) throw NoCuts();
  const FoldMap2D map(inst.paper, vertical_creases, horizontal_creases);

  // A crease may meet a slanted cut only at a cut-graph vertex.
  const std::vector<Point> vertices = cut_graph_vertices(inst.cuts);
  for (const Segment& s : inst.cuts) {
    const Point d = s.direction();
    if (d.x == 0 || d.y == 0) continue;
    auto check = [&](const std::vector<Rational>& creases, Axis axis) -> std::optional<Point> {
      const Rational& a = coord(s.a(), axis);
      const Rational& b = coord(s.b(), axis);
      const Rational& da = coord(d, axis);
      for (const Rational& c : creases) {
        if ((c - a) * (c - b) >= 0) continue;  // not strictly between
        Rational t = (c - a) / da;
        Point p{s.a().x + t * d.x, s.a().y + t * d.y};
        if (!std::binary_search(vertices.begin(), vertices.end(), p)) return p;
      }
      return std::nullopt;
    };
    if (auto p = check(vertical_creases, Axis::X)) return VerifyFailure{"crease-crosses-cut", {*p}};
    if (auto p = check(horizontal_creases, Axis::Y)) {
      return VerifyFailure{"crease-crosses-cut", {*p}};
    }
  }

  // The folded line: image of the first piece of the first cut.
  const Segment& first = inst.cuts.front();
  const Point d = first.direction();
  Rational t_end = 1;
  auto shorten = [&](const std::vector<Rational>& creases, const Rational& a, const Rational& da) {
    if (da == 0) return;
    for (const Rational& c : creases) {
      Rational t = (c - a) / da;
      if (t > 0 && t < t_end) t_end = t;
    }
  };
  shorten(vertical_creases, first.a().x, d.x);
  shorten(horizontal_creases, first.a().y, d.y);
  const Point end{first.a().x + t_end * d.x, first.a().y + t_end * d.y};
  const Line line = line_through(map(first.a()), map(end));

  if (auto failure = kernels::omp::check_cells(map, inst.cuts, line)) {
    return VerifyFailure{std::move(failure->reason), std::move(failure->witness)};
  }
  return line;
}

std::optional<BandMismatch> band_match_check(const CutInstance& inst, const Decomposition& dec_x,
                                             const Decomposition& dec_y) {
  for (const Decomposition* dec : {&dec_x, &dec_y}) {
    const auto& el = dec->elements;
    for (std::size_t k = 1; k + 1 < el.size(); ++k) {
      if (!el[k].stripe) continue;
      const Element& left = el[k - 1];
      const Element& stripe = el[k];
      const Element& right = el[k + 1];
      const Rational c = midpoint(stripe.lo, stripe.hi);
      const Rational wl = stripe.lo - left.lo;
      const Rational wr = right.hi - stripe.hi;

      Box narrow, wide;
      if (wl <= wr) {
        narrow = slab(inst, dec->axis, left.lo, stripe.lo);
        wide = slab(inst, dec->axis, stripe.hi, stripe.hi + wl);
      } else {
        narrow = slab(inst, dec->axis, stripe.hi, right.hi);
        wide = slab(inst, dec->axis, stripe.lo - wr, stripe.lo);
      }

      std::vector<Segment> reflected;
      for (const Segment& s : cuts_in(inst, narrow)) {
        reflected.emplace_back(reflect(s.a(), dec->axis, c), reflect(s.b(), dec->axis, c));
      }
      reflected = canonical_segments(std::move(reflected));
      std::vector<Segment> portion = canonical_segments(cuts_in(inst, wide));
      if (reflected != portion) {
        return BandMismatch{dec->axis, c, std::move(reflected), std::move(portion)};
      }
    }
  }
  return std::nullopt;
}

MvLabeling assign_mountain_valley(std::span<const Rational> vertical_creases,
                                  std::span<const Rational> horizontal_creases) {
  MvLabeling mv;
  for (std::size_t j = 0; j < vertical_creases.size(); ++j) {
    mv.vertical.push_back(j % 2 == 0 ? Fold::Mountain : Fold::Valley);
  }
  const std::size_t columns = vertical_creases.size() + 1;
  for (std::size_t i = 0; i < horizontal_creases.size(); ++i) {
    std::vector<Fold> row;
    for (std::size_t j = 0; j < columns; ++j) {
      // Column j lies face down after the vertical accordion when j is odd.
      row.push_back((i + j) % 2 == 0 ? Fold::Mountain : Fold::Valley);
    }
    mv.horizontal.push_back(std::move(row));
  }
  return mv;
}

const char* stage_name(Stage stage) {
  switch (stage) {
    case Stage::SlopeMismatch: return "SlopeMismatch";
    case Stage::AxisCutNotFullWidth: return "AxisCutNotFullWidth";
    case Stage::BandMismatch: return "BandMismatch";
    case Stage::CanonicalVerificationFailed: return "CanonicalVerificationFailed";
  }
  return "?";
}

Verdict solve_axis_aligned(const CutInstance& inst, SlopeKind kind) {
  if (inst.cuts.empty()) throw NoCuts();
  if (kind != SlopeKind::Horizontal && kind != SlopeKind::Vertical) {
    throw InvalidInstance("solve_axis_aligned needs horizontal or vertical cuts");
  }
  const bool horizontal = kind == SlopeKind::Horizontal;
  const Axis along = horizontal ? Axis::X : Axis::Y;
  const Rational& length = horizontal ? inst.paper.width : inst.paper.height;

  std::vector<Rational> offsets;
  for (const Segment& s : canonical_segments(inst.cuts)) {
    if (coord(s.a(), along) != 0 || coord(s.b(), along) != length) {
      return Unsolvable{Stage::AxisCutNotFullWidth,
                        horizontal ? "horizontal cut does not span the paper width"
                                   : "vertical cut does not span the paper height",
                        {s.a(), s.b()}};
    }
    offsets.push_back(coord(s.a(), horizontal ? Axis::Y : Axis::X));
  }
  std::sort(offsets.begin(), offsets.end());

  std::vector<Rational> v, h;
  (horizontal ? h : v) = midpoints(offsets);
  auto verified = verify_solution(inst, v, h);
  if (auto* failure = std::get_if<VerifyFailure>(&verified)) {
    return Unsolvable{Stage::CanonicalVerificationFailed, failure->reason, failure->witness};
  }
  MvLabeling mv = assign_mountain_valley(v, h);
  return Solution2D{std::move(v), std::move(h), std::move(mv), std::get<Line>(verified),
                    Rational(1)};
}

Verdict solve(const CutInstance& inst) {
  if (inst.cuts.empty()) throw NoCuts();
  const SlopeClass slopes = classify_slopes(inst);
  switch (slopes.kind) {
    case SlopeKind::Mixed: {
      const auto& [s, t] = *slopes.witness;
      return Unsolvable{Stage::SlopeMismatch, "cuts with slopes of different magnitude",
                        {s.a(), s.b(), t.a(), t.b()}};
    }
    case SlopeKind::Horizontal:
    case SlopeKind::Vertical:
      return solve_axis_aligned(inst, slopes.kind);
    case SlopeKind::Uniform:
      break;
  }

  const Normalized norm = normalize_slope(inst, slopes.alpha);
  const Decomposition dec_x = compute_decomposition(norm.instance, Axis::X);
  const Decomposition dec_y = compute_decomposition(norm.instance, Axis::Y);

  if (auto mismatch = band_match_check(norm.instance, dec_x, dec_y)) {
    // Report the first segment present on one side only, in original units.
    const Rational& back = slopes.alpha;
    std::vector<Point> witness;
    auto first_missing = [](const std::vector<Segment>& from, const std::vector<Segment>& in) {
      for (const Segment& s : from) {
        if (std::find(in.begin(), in.end(), s) == in.end()) return std::optional<Segment>(s);
      }
      return std::optional<Segment>();
    };
    auto odd = first_missing(mismatch->narrow_reflected, mismatch->wide_portion);
    if (!odd) odd = first_missing(mismatch->wide_portion, mismatch->narrow_reflected);
    if (odd) witness = {scale_y(odd->a(), back), scale_y(odd->b(), back)};
    const Rational crease = mismatch->axis == Axis::X ? mismatch->crease : mismatch->crease * back;
    return Unsolvable{Stage::BandMismatch, describe(mismatch->axis, crease), std::move(witness)};
  }

  const std::vector<Rational> v = canonical_creases(dec_x);
  std::vector<Rational> h = canonical_creases(dec_y);
  for (Rational& c : h) c *= slopes.alpha;

  auto verified = verify_solution(inst, v, h);
  if (auto* failure = std::get_if<VerifyFailure>(&verified)) {
    return Unsolvable{Stage::CanonicalVerificationFailed, failure->reason, failure->witness};
  }
  MvLabeling mv = assign_mountain_valley(v, h);
  return Solution2D{v, std::move(h), std::move(mv), std::get<Line>(verified), norm.scale};
}

}  // namespace orthofold::foldcut
