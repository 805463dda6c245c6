#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "orthofold/errors.hpp"
#include "orthofold/generator.hpp"
#include "orthofold/io.hpp"
#include "orthofold/svg.hpp"

namespace {

using namespace orthofold;

constexpr int kOk = 0;
constexpr int kNo = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw UsageError("cannot write " + path);
}

io::InstanceDocument load_instance(const std::string& path) {
  try {
    return io::parse_instance(slurp(path));
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

struct SolveArgs {
  std::string in, out, svg;
};

int run_solve(const SolveArgs& args, std::optional<io::Kind> expect) {
  const io::InstanceDocument doc = load_instance(args.in);
  if (expect && doc.kind() != *expect) {
    throw UsageError(args.in + ": expected a \"" + io::kind_name(*expect) + "\" instance, got \"" +
                     io::kind_name(doc.kind()) + "\"");
  }
  const io::SolutionDocument sol = io::solve(doc);
  emit(io::serialize(sol), args.out);
  if (!args.svg.empty()) emit(io::render_svg(doc, &sol), args.svg);
  if (!sol.solvable()) {
    std::cerr << "unsolvable\n";
    return kNo;
  }
  return kOk;
}

void add_solve_options(CLI::App* cmd, SolveArgs& args) {
  cmd->add_option("--out", args.out, "write the solution document here (default stdout)");
  cmd->add_option("--svg", args.svg, "also render instance and crease pattern as SVG");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact fold-and-cut, fold-and-punch and 1D folding solver"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "solve an instance of any kind");
  solve->add_option("in", solve_args.in, "instance document")->required();
  add_solve_options(solve, solve_args);

  std::string verify_in, verify_sol;
  auto* verify = app.add_subcommand("verify", "check a solution document against its instance");
  verify->add_option("in", verify_in, "instance document")->required();
  verify->add_option("solution", verify_sol, "solution document")->required();

  SolveArgs punch_args;
  auto* punch = app.add_subcommand("punch", "solve a fold-and-punch instance");
  punch->add_option("in", punch_args.in, "instance document")->required();
  add_solve_options(punch, punch_args);

  SolveArgs oned_args;
  std::string variant;
  auto* oned = app.add_subcommand("oned", "solve a one-dimensional instance");
  oned->add_option("variant", variant, "unsigned, signed or interval")
      ->required()
      ->check(CLI::IsMember({"unsigned", "signed", "interval"}));
  oned->add_option("in", oned_args.in, "instance document")->required();
  add_solve_options(oned, oned_args);

  std::uint64_t seed = 0;
  int kx = 2, ky = 2;
  std::int64_t grid = 4;
  std::string folded = "4x4", gen_out, gen_solution;
  auto* gen = app.add_subcommand("gen", "generate a solvable fold-and-cut instance");
  gen->add_option("--seed", seed, "generator seed")->required();
  gen->add_option("--kx", kx, "number of vertical creases")->required()->check(CLI::NonNegativeNumber);
  gen->add_option("--ky", ky, "number of horizontal creases")->required()->check(CLI::NonNegativeNumber);
  gen->add_option("--folded", folded, "folded rectangle WxH, integers")->required();
  gen->add_option("--grid", grid, "crease positions are multiples of 1/grid")
      ->check(CLI::PositiveNumber);
  gen->add_option("--out", gen_out, "write the instance here (default stdout)");
  gen->add_option("--solution", gen_solution, "also write the generating solution");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*solve) return run_solve(solve_args, std::nullopt);
    if (*punch) return run_solve(punch_args, io::Kind::Punch);
    if (*oned) {
      const io::Kind kind = variant == "unsigned" ? io::Kind::OnedUnsigned
                            : variant == "signed" ? io::Kind::OnedSigned
                                                  : io::Kind::OnedInterval;
      return run_solve(oned_args, kind);
    }
    if (*verify) {
      const io::InstanceDocument doc = load_instance(verify_in);
      io::SolutionDocument sol;
      try {
        sol = io::parse_solution(slurp(verify_sol));
      } catch (const ParseError& e) {
        throw UsageError(verify_sol + ": " + e.what());
      }
      const io::Check check = io::verify(doc, sol);
      std::cerr << (check.ok ? "ok: " : "failed: ") << check.message << "\n";
      return check.ok ? kOk : kNo;
    }
    if (*gen) {
      foldcut::GenParams params;
      params.kx = kx;
      params.ky = ky;
      params.grid = grid;
      const auto x = folded.find('x');
      try {
        std::size_t used = 0;
        if (x == std::string::npos) throw std::invalid_argument("missing x");
        params.folded_w = std::stoll(folded.substr(0, x), &used);
        if (used != x) throw std::invalid_argument("trailing characters");
        params.folded_h = std::stoll(folded.substr(x + 1), &used);
        if (used != folded.size() - x - 1) throw std::invalid_argument("trailing characters");
      } catch (const std::logic_error&) {
        throw UsageError("--folded expects WxH with positive integers, got \"" + folded + "\"");
      }
      const auto g = foldcut::unfold_generate(seed, params);
      emit(io::serialize(io::InstanceDocument{g.instance}), gen_out);
      if (!gen_solution.empty()) {
        foldcut::Solution2D sol{g.vertical_creases, g.horizontal_creases,
                                foldcut::assign_mountain_valley(g.vertical_creases, g.horizontal_creases),
                                g.folded_line, Rational(1)};
        emit(io::serialize(io::SolutionDocument{io::Kind::FoldCut, foldcut::Verdict{sol}}),
             gen_solution);
      }
      return kOk;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
