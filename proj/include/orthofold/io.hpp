#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "orthofold/foldcut.hpp"
#include "orthofold/oned.hpp"
#include "orthofold/punch.hpp"

// JSON instance and solution documents. Every scalar coordinate is a rational
// string ("p" or "p/q"); see docs/formats.md.
namespace orthofold::io {

enum class Kind { OnedUnsigned, OnedSigned, OnedInterval, Punch, FoldCut };

const char* kind_name(Kind kind);

using Instance = std::variant<oned::UnsignedInstance, oned::SignedInstance,
                              oned::IntervalInstance, punch::HoleInstance, foldcut::CutInstance>;

struct InstanceDocument {
  Instance instance;

  Kind kind() const { return static_cast<Kind>(instance.index()); }
};

using PunchResult = std::variant<punch::Solution, punch::NotRectangle>;

struct SolutionDocument {
  Kind kind;
  std::variant<oned::Result, PunchResult, foldcut::Verdict> result;

  bool solvable() const;
};

// Throws ParseError carrying the JSON path of the offending value.
InstanceDocument parse_instance(std::string_view text);
SolutionDocument parse_solution(std::string_view text);

// Canonical layout: two-space indentation, objects one key per line, arrays
// without objects on one line, trailing newline.
std::string serialize(const InstanceDocument& doc);
std::string serialize(const SolutionDocument& doc);

SolutionDocument solve(const InstanceDocument& doc);

struct Check {
  bool ok;
  std::string message;
};

// Re-checks a solution document against its instance. A solvable document
// is verified from its crease pattern alone; an unsolvable one is confirmed
// by re-running the canonical solver.
Check verify(const InstanceDocument& instance, const SolutionDocument& solution);

}  // namespace orthofold::io
