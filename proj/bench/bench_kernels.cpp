#include <chrono>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include <omp.h>

#include "orthofold/foldcut.hpp"
#include "orthofold/generator.hpp"
#include "orthofold/kernels.hpp"
#include "orthofold/random.hpp"

using namespace orthofold;

template <typename F>
static double seconds(F&& f, int reps) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int r = 0; r < reps; ++r) f();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count() / reps;
}

static void row(const std::string& name, double serial, double parallel) {
  std::cout << std::left << std::setw(24) << name << std::right << std::fixed << std::setprecision(4)
            << std::setw(10) << serial * 1e3 << " ms" << std::setw(10) << parallel * 1e3 << " ms"
            << std::setw(8) << std::setprecision(2) << serial / parallel << "x\n";
}

int main(int argc, char** argv) {
  int creases = argc > 1 ? std::stoi(argv[1]) : 10;
  int reps = argc > 2 ? std::stoi(argv[2]) : 5;

  foldcut::GenParams params;
  params.kx = creases;
  params.ky = creases;
  params.folded_w = 6;
  params.folded_h = 6;
  const auto g = foldcut::unfold_generate(42, params);
  const auto& cuts = g.instance.cuts;
  const FoldMap2D map(g.instance.paper, g.vertical_creases, g.horizontal_creases);

  SplitMix64 rng(7);
  std::vector<Point> points;
  const std::int64_t den = 1 << 12;
  const auto w = Rational(g.instance.paper.width * den).get_num().get_si();
  const auto h = Rational(g.instance.paper.height * den).get_num().get_si();
  for (int i = 0; i < 20000; ++i) {
    points.push_back({Rational(rng.between(0, w)) / den, Rational(rng.between(0, h)) / den});
  }

  std::cout << "threads " << omp_get_max_threads() << ", " << cuts.size() << " cuts, "
            << kernels::cell_count(map) << " cells, " << points.size() << " points\n";
  std::cout << std::left << std::setw(24) << "kernel" << std::right << std::setw(13) << "serial"
            << std::setw(13) << "omp" << std::setw(9) << "ratio" << "\n";

  row("pairwise_intersections",
      seconds([&] { kernels::serial::pairwise_intersections(cuts); }, reps),
      seconds([&] { kernels::omp::pairwise_intersections(cuts); }, reps));
  row("fold_points", seconds([&] { kernels::serial::fold_points(map, points); }, reps),
      seconds([&] { kernels::omp::fold_points(map, points); }, reps));
  row("check_cells",
      seconds([&] { kernels::serial::check_cells(map, cuts, g.folded_line); }, reps),
      seconds([&] { kernels::omp::check_cells(map, cuts, g.folded_line); }, reps));
  return 0;
}
