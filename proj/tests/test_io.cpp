#include <gtest/gtest.h>

#include <filesystem>

#include "orthofold/errors.hpp"
#include "orthofold/io.hpp"
#include "orthofold/svg.hpp"
#include "support.hpp"

using namespace orthofold;
using namespace testing_support;
namespace fs = std::filesystem;

namespace {

const std::string kData = ORTHOFOLD_DATA_DIR "/examples";
const std::string kGolden = ORTHOFOLD_GOLDEN_DIR;

std::vector<std::string> example_names() {
  std::vector<std::string> names;
  for (const auto& e : fs::directory_iterator(kData)) {
    if (e.path().extension() == ".json") names.push_back(e.path().stem().string());
  }
  std::sort(names.begin(), names.end());
  return names;
}

// Path and reason of the ParseError thrown for `text`.
std::pair<std::string, std::string> parse_failure(const std::string& text) {
  try {
    io::parse_instance(text);
  } catch (const ParseError& e) {
    return {e.path(), e.reason()};
  }
  return {"", "no error"};
}

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST(ParseInstance, PunchSchemaExample) {
  const auto doc = io::parse_instance(
      R"({"kind":"punch","paper":{"width":"4","height":"3"},"holes":[["1","1"],["1","2"],["2","1"],["2","2"]]})");
  ASSERT_EQ(doc.kind(), io::Kind::Punch);
  const auto& inst = std::get<punch::HoleInstance>(doc.instance);
  EXPECT_EQ(inst.paper.width, 4);
  EXPECT_EQ(inst.holes.size(), 4u);
  EXPECT_EQ(inst.holes[3], P(2, 2));
}

TEST(ParseInstance, LocatedErrors) {
  EXPECT_EQ(parse_failure(R"({"kind":"foldcut","paper":{"width":"4","height":"4"},"cuts":[[["0","0"],["0","0"]]]})"),
            (std::pair<std::string, std::string>{"$.cuts[0]", "degenerate segment"}));
  EXPECT_EQ(parse_failure(R"({"kind":"foldcut","paper":{"width":"-1","height":"4"},"cuts":[[["0","0"],["1","1"]]]})"),
            (std::pair<std::string, std::string>{"$.paper.width", "nonpositive paper dimension"}));
  EXPECT_EQ(parse_failure(R"({"kind":"punch","paper":{"width":"4","height":"3"},"holes":[["1","1"]],"extra":1})").first,
            "$.extra");
  EXPECT_EQ(parse_failure(R"({"kind":"punch","paper":{"width":"4","height":"3","depth":"1"},"holes":[["1","1"]]})").first,
            "$.paper.depth");
  EXPECT_EQ(parse_failure(R"({"kind":"punch","paper":{"width":4,"height":"3"},"holes":[["1","1"]]})").first,
            "$.paper.width");
  EXPECT_EQ(parse_failure(R"({"kind":"punch","paper":{"width":"4","height":"3"},"holes":[["1.5","1"]]})").first,
            "$.holes[0][0]");
  EXPECT_EQ(parse_failure(R"({"kind":"punch","paper":{"width":"4","height":"3"},"holes":[["1/0","1"]]})").first,
            "$.holes[0][0]");
  EXPECT_EQ(parse_failure(R"({"kind":"punch","paper":{"width":"4","height":"3"}})").second,
            "missing field \"holes\"");
  EXPECT_EQ(parse_failure(R"({"kind":"origami"})").first, "$.kind");
  EXPECT_EQ(parse_failure("{\"kind\": ").first, "$");
  EXPECT_EQ(parse_failure(R"({"kind":"oned-signed","domain":["0","4"],"cut_points":[{"position":"1","sign":"*"}]})").first,
            "$.cut_points[0].sign");
  // Constraint violations found after parsing are still located.
  EXPECT_EQ(parse_failure(R"({"kind":"punch","paper":{"width":"4","height":"3"},"holes":[["0","1"]]})").first,
            "$.holes");
  EXPECT_EQ(parse_failure(R"({"kind":"foldcut","paper":{"width":"4","height":"4"},"cuts":[[["0","0"],["5","5"]]]})").first,
            "$.cuts");
  EXPECT_EQ(parse_failure(R"({"kind":"oned-unsigned","domain":["0","4"],"cut_points":["3","1"]})").first, "$");
}

TEST(ParseInstance, ExactRationals) {
  const auto doc = io::parse_instance(R"({"kind":"oned-unsigned","domain":["0","1"],"cut_points":["1/3"]})");
  const Rational third = std::get<oned::UnsignedInstance>(doc.instance).cut_points[0];
  EXPECT_EQ(to_string(Rational(third * 3)), "1");
}

TEST(Serialize, CanonicalRationals) {
  const auto doc = io::parse_instance(R"({"kind":"oned-unsigned","domain":["0","8/2"],"cut_points":["2/4","3"]})");
  EXPECT_EQ(io::serialize(doc),
            "{\n  \"kind\": \"oned-unsigned\",\n  \"domain\": [\"0\", \"4\"],\n  \"cut_points\": [\"1/2\", \"3\"]\n}\n");
}

TEST(RoundTrip, ExampleInstancesByteIdentical) {
  const auto names = example_names();
  ASSERT_GE(names.size(), 10u);
  for (const auto& name : names) {
    const std::string text = read_file(kData + "/" + name + ".json");
    EXPECT_EQ(io::serialize(io::parse_instance(text)), text) << name;
  }
}

TEST(RoundTrip, GoldenSolutionsByteIdentical) {
  for (const auto& name : example_names()) {
    const std::string text = read_file(kGolden + "/" + name + ".solution.json");
    ASSERT_FALSE(text.empty()) << name;
    EXPECT_EQ(io::serialize(io::parse_solution(text)), text) << name;
  }
}

TEST(Golden, SolutionsAndSvg) {
  for (const auto& name : example_names()) {
    const auto doc = io::parse_instance(read_file(kData + "/" + name + ".json"));
    const auto sol = io::solve(doc);
    EXPECT_EQ(io::serialize(sol), read_file(kGolden + "/" + name + ".solution.json")) << name;
    EXPECT_EQ(io::render_svg(doc, &sol), read_file(kGolden + "/" + name + ".svg")) << name;
  }
  const auto v = io::parse_instance(read_file(kData + "/v.json"));
  EXPECT_EQ(io::render_svg(v), read_file(kGolden + "/v.instance.svg"));
}

TEST(Verify, GoldenSolutionsPass) {
  for (const auto& name : example_names()) {
    const auto doc = io::parse_instance(read_file(kData + "/" + name + ".json"));
    const auto sol = io::parse_solution(read_file(kGolden + "/" + name + ".solution.json"));
    const auto check = io::verify(doc, sol);
    EXPECT_TRUE(check.ok) << name << ": " << check.message;
  }
}

TEST(Verify, TamperedSolutionsFail) {
  const auto v = io::parse_instance(read_file(kData + "/v.json"));
  auto sol = io::solve(v);

  auto bad_crease = sol;
  std::get<foldcut::Solution2D>(std::get<foldcut::Verdict>(bad_crease.result)).vertical_creases = Rs({"2"});
  EXPECT_FALSE(io::verify(v, bad_crease).ok);

  auto bad_line = sol;
  std::get<foldcut::Solution2D>(std::get<foldcut::Verdict>(bad_line.result)).folded_line = line_through(P(0, 0), P(1, 1));
  EXPECT_FALSE(io::verify(v, bad_line).ok);

  auto bad_mv = sol;
  std::get<foldcut::Solution2D>(std::get<foldcut::Verdict>(bad_mv.result)).mv.vertical = {foldcut::Fold::Valley};
  EXPECT_FALSE(io::verify(v, bad_mv).ok);

  // Claiming unsolvable for a solvable instance fails.
  io::SolutionDocument wrong{io::Kind::FoldCut,
                             foldcut::Verdict{foldcut::Unsolvable{foldcut::Stage::BandMismatch, "", {}}}};
  EXPECT_FALSE(io::verify(v, wrong).ok);

  // Kind mismatch.
  const auto punch = io::parse_instance(read_file(kData + "/punch-grid.json"));
  EXPECT_FALSE(io::verify(punch, sol).ok);
  EXPECT_TRUE(io::verify(v, sol).ok);
}

TEST(Verify, OnedAndPunchTampering) {
  const auto u = io::parse_instance(read_file(kData + "/oned-unsigned.json"));
  auto sol = io::solve(u);
  std::get<oned::Solution>(std::get<oned::Result>(sol.result)).creases = Rs({"3/2"});
  EXPECT_FALSE(io::verify(u, sol).ok);

  const auto s = io::parse_instance(read_file(kData + "/oned-signed.json"));
  auto ssol = io::solve(s);
  std::get<oned::Solution>(std::get<oned::Result>(ssol.result)).flip_whole_paper = false;
  EXPECT_FALSE(io::verify(s, ssol).ok);

  const auto p = io::parse_instance(read_file(kData + "/punch-grid.json"));
  auto psol = io::solve(p);
  std::get<punch::Solution>(std::get<io::PunchResult>(psol.result)).horizontal_creases.clear();
  EXPECT_FALSE(io::verify(p, psol).ok);
}

TEST(ParseSolution, Errors) {
  EXPECT_THROW(io::parse_solution(R"({"kind":"foldcut","verdict":"maybe"})"), ParseError);
  EXPECT_THROW(io::parse_solution(R"({"kind":"foldcut","verdict":"unsolvable","stage":"Nope","detail":"","witness":[]})"),
               ParseError);
  EXPECT_THROW(io::parse_solution(R"({"kind":"oned-unsigned","verdict":"solvable","creases":[],"cut_image":"1","x":1})"),
               ParseError);
}

TEST(Svg, VInstanceElements) {
  const auto v = io::parse_instance(read_file(kData + "/v.json"));
  const auto sol = io::solve(v);
  const std::string svg = io::render_svg(v, &sol);
  EXPECT_NE(svg.find("viewBox=\"0 0 6 4\""), std::string::npos);
  EXPECT_EQ(count(svg, "class=\"cut\""), 2u);
  EXPECT_EQ(count(svg, "class=\"crease"), 1u);
  EXPECT_NE(svg.find("x1=\"3\" y1=\"0\" x2=\"3\" y2=\"4\""), std::string::npos);
  EXPECT_EQ(count(svg, io::svg_style::kCut), 2u);
  EXPECT_EQ(count(svg, io::svg_style::kMountain), 1u);

  const std::string bare = io::render_svg(v);
  EXPECT_EQ(count(bare, "class=\"cut\""), 2u);
  EXPECT_EQ(count(bare, "class=\"crease"), 0u);
  EXPECT_EQ(bare, io::render_svg(v));
}

TEST(Svg, OnedStripWithDots) {
  const auto u = io::parse_instance(read_file(kData + "/oned-unsigned.json"));
  const auto sol = io::solve(u);
  const std::string svg = io::render_svg(u, &sol);
  EXPECT_EQ(count(svg, "<circle class=\"cut\""), 3u);
  EXPECT_EQ(count(svg, "<circle class=\"crease\""), 2u);
  EXPECT_EQ(count(svg, io::svg_style::kUnsigned), 2u);
}
