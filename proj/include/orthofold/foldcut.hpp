#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "orthofold/fold_map.hpp"
#include "orthofold/geometry.hpp"

// Orthogonal fold & cut on rectangular paper.
//
// Pipeline: classify cut slopes; axis-parallel instances are solved directly,
// otherwise the paper is scaled so every cut has slope +-1, each axis is split
// into bands (positions where a perpendicular crease would cross a cut away
// from a cut-graph vertex) and stripes (everything else, possibly single
// points), one crease goes at the center of every stripe, and the result is
// checked by exact simulation of the folded state.
namespace orthofold::foldcut {

struct CutInstance {
  PaperRect paper;
  std::vector<Segment> cuts;
};

// Validates the paper and cut endpoints (inside the closed rectangle) and
// merges collinear overlapping cuts. Throws InvalidInstance or NoCuts.
CutInstance ingest(PaperRect paper, std::vector<Segment> cuts);

enum class SlopeKind { Uniform, Horizontal, Vertical, Mixed };

struct SlopeClass {
  SlopeKind kind;
  Rational alpha;  // Uniform only; positive
  std::optional<std::pair<Segment, Segment>> witness;  // Mixed only
};

SlopeClass classify_slopes(const CutInstance& inst);

struct Normalized {
  CutInstance instance;
  Rational scale;  // 1/alpha, applied to every y coordinate
};

// Scales y by 1/alpha so that slopes +-alpha become +-1.
Normalized normalize_slope(const CutInstance& inst, const Rational& alpha);

// Positions along x decide vertical creases; positions along y horizontal ones.
enum class Axis { X, Y };

struct Element {
  bool stripe;  // false: band (open interval); true: stripe (closed, maybe a point)
  Rational lo;
  Rational hi;
};

struct Decomposition {
  Axis axis;
  Rational extent;
  // Alternates band, stripe, band, ..., band and tiles [0, extent].
  std::vector<Element> elements;

  std::vector<Element> stripes() const;
};

// Expects slopes normalized to +-1.
Decomposition compute_decomposition(const CutInstance& inst, Axis axis);

// One crease at the center of each stripe.
std::vector<Rational> canonical_creases(const Decomposition& dec);

struct VerifyFailure {
  std::string reason;  // "crease-crosses-cut", "cut-off-line", "uncut-preimage"
  std::vector<Point> witness;
};

// Exact check of a crease pattern: fold the paper, take the line through the
// folded image of the first cut, and require that the paper lying on that
// line after folding is exactly the union of the cuts. Returns the folded cut
// line on success. Throws NoCuts for an empty instance and InvalidCreases for
// creases that are unsorted or not strictly inside the paper.
std::variant<Line, VerifyFailure> verify_solution(const CutInstance& inst,
                                                  const std::vector<Rational>& vertical_creases,
                                                  const std::vector<Rational>& horizontal_creases);

struct BandMismatch {
  Axis axis;
  Rational crease;
  std::vector<Segment> narrow_reflected;  // narrower band reflected across the crease
  std::vector<Segment> wide_portion;      // matching slab of the wider band
};

// Screening check: for each stripe, the cuts of the narrower adjacent band
// reflected across the stripe center must equal the cuts in the mirrored slab
// of the wider band. A pass does not imply solvability.
std::optional<BandMismatch> band_match_check(const CutInstance& inst, const Decomposition& dec_x,
                                             const Decomposition& dec_y);

enum class Fold { Mountain, Valley };

struct MvLabeling {
  std::vector<Fold> vertical;                 // one label per vertical crease
  std::vector<std::vector<Fold>> horizontal;  // [crease][column]
};

// Two-stage accordion: vertical creases alternate M, V, ... left to right;
// horizontal crease i in column j is M iff i + j is even.
MvLabeling assign_mountain_valley(std::span<const Rational> vertical_creases,
                                  std::span<const Rational> horizontal_creases);

struct Solution2D {
  std::vector<Rational> vertical_creases;
  std::vector<Rational> horizontal_creases;
  MvLabeling mv;
  Line folded_line;  // the cut line in folded coordinates
  Rational scale;    // 1/alpha used internally; 1 for axis-parallel cuts
};

enum class Stage { SlopeMismatch, AxisCutNotFullWidth, BandMismatch, CanonicalVerificationFailed };

const char* stage_name(Stage stage);

struct Unsolvable {
  Stage stage;
  std::string detail;
  std::vector<Point> witness;
};

using Verdict = std::variant<Solution2D, Unsolvable>;

// Horizontal or vertical cuts only: solvable iff every cut spans the paper.
Verdict solve_axis_aligned(const CutInstance& inst, SlopeKind kind);

Verdict solve(const CutInstance& inst);

}  // namespace orthofold::foldcut
