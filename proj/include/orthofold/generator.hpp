#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "orthofold/foldcut.hpp"

namespace orthofold::foldcut {

// The cut set produced by folding `paper` along the given creases and cutting
// along `folded_line`: every paper point whose folded image is on the line.
// nullopt when that set is empty or contains an isolated point (the line only
// grazes a cell corner), since such a set is not a union of cuts.
std::optional<CutInstance> unfold_instance(const PaperRect& paper,
                                           const std::vector<Rational>& vertical_creases,
                                           const std::vector<Rational>& horizontal_creases,
                                           const Line& folded_line);

struct GenParams {
  int kx = 2;                  // vertical creases
  int ky = 2;                  // horizontal creases
  std::int64_t folded_w = 4;   // folded rectangle, in paper units
  std::int64_t folded_h = 4;
  std::int64_t grid = 4;       // crease spacing is a multiple of 1/grid
  std::optional<Line> line;    // folded cut line; random slope +-1 if absent
};

struct Generated {
  CutInstance instance;
  std::vector<Rational> vertical_creases;
  std::vector<Rational> horizontal_creases;
  Line folded_line;
};

// A solvable instance built backwards: pick creases by walking an accordion
// inside the folded rectangle, pick a cut line across it, and unfold.
// Deterministic in the seed (SplitMix64).
Generated unfold_generate(std::uint64_t seed, const GenParams& params);

}  // namespace orthofold::foldcut
