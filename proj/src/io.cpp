#include "orthofold/io.hpp"

#include <algorithm>
#include <initializer_list>

#include "json.hpp"
#include "orthofold/errors.hpp"

namespace orthofold::io {

using json = nlohmann::ordered_json;

namespace {

constexpr const char* kKindNames[] = {"oned-unsigned", "oned-signed", "oned-interval", "punch",
                                      "foldcut"};

// ---------------------------------------------------------------------------
// Reading

class Reader {
 public:
  Reader(const json& value, std::string path) : value_(value), path_(std::move(path)) {}

  [[noreturn]] void fail(const std::string& reason) const { throw ParseError(path_, reason); }

  const std::string& path() const { return path_; }

  Reader at(const char* key) const {
    if (!value_.is_object()) fail("expected an object");
    auto it = value_.find(key);
    if (it == value_.end()) fail(std::string("missing field \"") + key + "\"");
    return Reader(*it, path_ + "." + key);
  }

  bool has(const char* key) const { return value_.is_object() && value_.contains(key); }

  Reader at(std::size_t i) const { return Reader(value_.at(i), path_ + "[" + std::to_string(i) + "]"); }

  void only(std::initializer_list<std::string_view> allowed) const {
    if (!value_.is_object()) fail("expected an object");
    for (const auto& [key, _] : value_.items()) {
      if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
        throw ParseError(path_ + "." + key, "unknown field");
      }
    }
  }

  std::size_t size() const {
    if (!value_.is_array()) fail("expected an array");
    return value_.size();
  }

  std::string str() const {
    if (!value_.is_string()) fail("expected a string");
    return value_.get<std::string>();
  }

  bool boolean() const {
    if (!value_.is_boolean()) fail("expected true or false");
    return value_.get<bool>();
  }

  Rational rational() const {
    if (!value_.is_string()) fail("expected a rational string such as \"3/2\"");
    try {
      return parse_rational(value_.get<std::string>());
    } catch (const ParseError& e) {
      fail(e.reason());
    }
  }

  std::vector<Rational> rationals() const {
    std::vector<Rational> out;
    for (std::size_t i = 0, n = size(); i < n; ++i) out.push_back(at(i).rational());
    return out;
  }

  Point point() const {
    if (size() != 2) fail("expected a point [x, y]");
    return {at(std::size_t{0}).rational(), at(1).rational()};
  }

  Interval interval() const {
    if (size() != 2) fail("expected an interval [lo, hi]");
    return {at(std::size_t{0}).rational(), at(1).rational()};
  }

  std::vector<Point> points() const {
    std::vector<Point> out;
    for (std::size_t i = 0, n = size(); i < n; ++i) out.push_back(at(i).point());
    return out;
  }

 private:
  const json& value_;
  std::string path_;
};

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("$", std::string("malformed JSON: ") + e.what());
  }
}

Kind read_kind(const Reader& root) {
  const std::string name = root.at("kind").str();
  for (std::size_t k = 0; k < std::size(kKindNames); ++k) {
    if (name == kKindNames[k]) return static_cast<Kind>(k);
  }
  root.at("kind").fail("unknown kind \"" + name + "\"");
}

PaperRect read_paper(const Reader& r) {
  r.only({"width", "height"});
  PaperRect paper{r.at("width").rational(), r.at("height").rational()};
  if (paper.width <= 0) r.at("width").fail("nonpositive paper dimension");
  if (paper.height <= 0) r.at("height").fail("nonpositive paper dimension");
  return paper;
}

oned::Sign read_sign(const Reader& r) {
  const std::string s = r.str();
  if (s == "+") return oned::Sign::Positive;
  if (s == "-") return oned::Sign::Negative;
  r.fail("sign must be \"+\" or \"-\"");
}

// Runs a module validator, reporting its complaint at `path`.
template <typename F>
auto validated(const std::string& path, F&& f) {
  try {
    return f();
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(path, e.what());
  }
}

Instance read_instance(const Reader& root, Kind kind) {
  switch (kind) {
    case Kind::OnedUnsigned: {
      root.only({"kind", "domain", "cut_points"});
      oned::UnsignedInstance inst{root.at("domain").interval(), root.at("cut_points").rationals()};
      validated("$", [&] { oned::validate(inst); return 0; });
      return inst;
    }
    case Kind::OnedSigned: {
      root.only({"kind", "domain", "cut_points"});
      oned::SignedInstance inst{root.at("domain").interval(), {}};
      const Reader cuts = root.at("cut_points");
      for (std::size_t i = 0, n = cuts.size(); i < n; ++i) {
        const Reader c = cuts.at(i);
        c.only({"position", "sign"});
        inst.cut_points.push_back({c.at("position").rational(), read_sign(c.at("sign"))});
      }
      validated("$", [&] { oned::validate(inst); return 0; });
      return inst;
    }
    case Kind::OnedInterval: {
      root.only({"kind", "domain", "cut_intervals"});
      oned::IntervalInstance inst{root.at("domain").interval(), {}};
      const Reader list = root.at("cut_intervals");
      for (std::size_t i = 0, n = list.size(); i < n; ++i) {
        const Reader c = list.at(i);
        c.only({"interval", "required_creases"});
        inst.cut_intervals.push_back(
            {c.at("interval").interval(), c.at("required_creases").rationals()});
      }
      validated("$", [&] { oned::validate(inst); return 0; });
      return inst;
    }
    case Kind::Punch: {
      root.only({"kind", "paper", "holes"});
      punch::HoleInstance inst{read_paper(root.at("paper")), root.at("holes").points()};
      validated("$.holes", [&] { punch::validate(inst); return 0; });
      return inst;
    }
    case Kind::FoldCut: {
      root.only({"kind", "paper", "cuts"});
      PaperRect paper = read_paper(root.at("paper"));
      const Reader list = root.at("cuts");
      std::vector<Segment> cuts;
      for (std::size_t i = 0, n = list.size(); i < n; ++i) {
        const Reader c = list.at(i);
        if (c.size() != 2) c.fail("expected a segment [[x, y], [x, y]]");
        Point a = c.at(std::size_t{0}).point();
        Point b = c.at(1).point();
        if (a == b) c.fail("degenerate segment");
        cuts.emplace_back(std::move(a), std::move(b));
      }
      return validated("$.cuts", [&] { return foldcut::ingest(paper, std::move(cuts)); });
    }
  }
  root.fail("unreachable");
}

// ---------------------------------------------------------------------------
// Writing

json to_json(const Rational& r) { return to_string(r); }

json to_json(const std::vector<Rational>& v) {
  json a = json::array();
  for (const auto& r : v) a.push_back(to_json(r));
  return a;
}

json to_json(const Point& p) { return json::array({to_string(p.x), to_string(p.y)}); }

json to_json(const std::vector<Point>& v) {
  json a = json::array();
  for (const auto& p : v) a.push_back(to_json(p));
  return a;
}

json to_json(const Interval& i) { return json::array({to_string(i.lo), to_string(i.hi)}); }

json to_json(const PaperRect& p) {
  json o = json::object();
  o["width"] = to_string(p.width);
  o["height"] = to_string(p.height);
  return o;
}

json to_json(const Line& l) {
  json o = json::object();
  o["point"] = to_json(l.point);
  o["direction"] = to_json(l.direction);
  return o;
}

const char* fold_name(foldcut::Fold f) { return f == foldcut::Fold::Mountain ? "M" : "V"; }

bool contains_object(const json& j) {
  return std::any_of(j.begin(), j.end(), [](const json& e) {
    return e.is_object() || (e.is_array() && contains_object(e));
  });
}

void write(std::string& out, const json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  const std::string inner(static_cast<std::size_t>(indent + 2), ' ');
  if (j.is_object()) {
    if (j.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    std::size_t k = 0;
    for (const auto& [key, value] : j.items()) {
      out += inner + json(key).dump() + ": ";
      write(out, value, indent + 2);
      out += ++k < j.size() ? ",\n" : "\n";
    }
    out += pad + "}";
  } else if (j.is_array()) {
    if (j.empty()) {
      out += "[]";
    } else if (contains_object(j)) {
      out += "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        out += inner;
        write(out, j[i], indent + 2);
        out += i + 1 < j.size() ? ",\n" : "\n";
      }
      out += pad + "]";
    } else {
      out += "[";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i > 0) out += ", ";
        write(out, j[i], indent);
      }
      out += "]";
    }
  } else {
    out += j.dump();
  }
}

std::string render(const json& j) {
  std::string out;
  write(out, j, 0);
  out += "\n";
  return out;
}

json instance_json(const InstanceDocument& doc) {
  json o = json::object();
  o["kind"] = kind_name(doc.kind());
  std::visit(
      [&](const auto& inst) {
        using T = std::decay_t<decltype(inst)>;
        if constexpr (std::is_same_v<T, oned::UnsignedInstance>) {
          o["domain"] = to_json(inst.domain);
          o["cut_points"] = to_json(inst.cut_points);
        } else if constexpr (std::is_same_v<T, oned::SignedInstance>) {
          o["domain"] = to_json(inst.domain);
          json cuts = json::array();
          for (const auto& c : inst.cut_points) {
            json e = json::object();
            e["position"] = to_string(c.position);
            e["sign"] = c.sign == oned::Sign::Positive ? "+" : "-";
            cuts.push_back(e);
          }
          o["cut_points"] = cuts;
        } else if constexpr (std::is_same_v<T, oned::IntervalInstance>) {
          o["domain"] = to_json(inst.domain);
          json list = json::array();
          for (const auto& c : inst.cut_intervals) {
            json e = json::object();
            e["interval"] = to_json(c.span);
            e["required_creases"] = to_json(c.required_creases);
            list.push_back(e);
          }
          o["cut_intervals"] = list;
        } else if constexpr (std::is_same_v<T, punch::HoleInstance>) {
          o["paper"] = to_json(inst.paper);
          o["holes"] = to_json(inst.holes);
        } else {
          o["paper"] = to_json(inst.paper);
          json cuts = json::array();
          for (const auto& s : inst.cuts) cuts.push_back(json::array({to_json(s.a()), to_json(s.b())}));
          o["cuts"] = cuts;
        }
      },
      doc.instance);
  return o;
}

json solution_json(const SolutionDocument& doc) {
  json o = json::object();
  o["kind"] = kind_name(doc.kind);
  o["verdict"] = doc.solvable() ? "solvable" : "unsolvable";

  if (const auto* r = std::get_if<oned::Result>(&doc.result)) {
    if (const auto* sol = std::get_if<oned::Solution>(r)) {
      o["creases"] = to_json(sol->creases);
      if (const auto* p = std::get_if<Rational>(&sol->cut_image)) {
        o["cut_image"] = to_json(*p);
      } else {
        o["cut_image"] = to_json(std::get<Interval>(sol->cut_image));
      }
      if (doc.kind == Kind::OnedSigned) o["flip_whole_paper"] = sol->flip_whole_paper;
    } else {
      const auto& u = std::get<oned::Unsolvable>(*r);
      o["reason"] = u.reason;
      o["witness"] = to_json(u.witness);
    }
  } else if (const auto* p = std::get_if<PunchResult>(&doc.result)) {
    if (const auto* sol = std::get_if<punch::Solution>(p)) {
      o["vertical_creases"] = to_json(sol->vertical_creases);
      o["horizontal_creases"] = to_json(sol->horizontal_creases);
      o["punch_point"] = to_json(sol->punch_point);
    } else {
      o["reason"] = "not-combinatorial-rectangle";
      o["witness"] = to_json(std::get<punch::NotRectangle>(*p).missing);
    }
  } else {
    const auto& verdict = std::get<foldcut::Verdict>(doc.result);
    if (const auto* sol = std::get_if<foldcut::Solution2D>(&verdict)) {
      o["vertical_creases"] = to_json(sol->vertical_creases);
      o["horizontal_creases"] = to_json(sol->horizontal_creases);
      json mv = json::object();
      json vert = json::array();
      for (auto f : sol->mv.vertical) vert.push_back(fold_name(f));
      json horiz = json::array();
      for (const auto& row : sol->mv.horizontal) {
        json r = json::array();
        for (auto f : row) r.push_back(fold_name(f));
        horiz.push_back(r);
      }
      mv["vertical"] = vert;
      mv["horizontal"] = horiz;
      o["mountain_valley"] = mv;
      o["folded_line"] = to_json(sol->folded_line);
      o["scale"] = to_json(sol->scale);
    } else {
      const auto& u = std::get<foldcut::Unsolvable>(verdict);
      o["stage"] = foldcut::stage_name(u.stage);
      o["detail"] = u.detail;
      o["witness"] = to_json(u.witness);
    }
  }
  return o;
}

foldcut::Fold read_fold(const Reader& r) {
  const std::string s = r.str();
  if (s == "M") return foldcut::Fold::Mountain;
  if (s == "V") return foldcut::Fold::Valley;
  r.fail("label must be \"M\" or \"V\"");
}

foldcut::Stage read_stage(const Reader& r) {
  const std::string s = r.str();
  for (auto st : {foldcut::Stage::SlopeMismatch, foldcut::Stage::AxisCutNotFullWidth,
                  foldcut::Stage::BandMismatch, foldcut::Stage::CanonicalVerificationFailed}) {
    if (s == foldcut::stage_name(st)) return st;
  }
  r.fail("unknown stage \"" + s + "\"");
}

Line read_line(const Reader& r) {
  r.only({"point", "direction"});
  Line l{r.at("point").point(), r.at("direction").point()};
  if (l.direction.x == 0 && l.direction.y == 0) r.at("direction").fail("zero direction");
  return l;
}

}  // namespace

const char* kind_name(Kind kind) { return kKindNames[static_cast<std::size_t>(kind)]; }

bool SolutionDocument::solvable() const {
  return std::visit(
      [](const auto& r) {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, oned::Result>) {
          return std::holds_alternative<oned::Solution>(r);
        } else if constexpr (std::is_same_v<T, PunchResult>) {
          return std::holds_alternative<punch::Solution>(r);
        } else {
          return std::holds_alternative<foldcut::Solution2D>(r);
        }
      },
      result);
}

InstanceDocument parse_instance(std::string_view text) {
  const json j = parse_json(text);
  const Reader root(j, "$");
  const Kind kind = read_kind(root);
  return InstanceDocument{read_instance(root, kind)};
}

SolutionDocument parse_solution(std::string_view text) {
  const json j = parse_json(text);
  const Reader root(j, "$");
  const Kind kind = read_kind(root);
  const std::string verdict = root.at("verdict").str();
  if (verdict != "solvable" && verdict != "unsolvable") {
    root.at("verdict").fail("verdict must be \"solvable\" or \"unsolvable\"");
  }
  const bool ok = verdict == "solvable";

  switch (kind) {
    case Kind::OnedUnsigned:
    case Kind::OnedSigned:
    case Kind::OnedInterval: {
      if (!ok) {
        root.only({"kind", "verdict", "reason", "witness"});
        return {kind, oned::Result{oned::Unsolvable{root.at("reason").str(),
                                                    root.at("witness").rationals()}}};
      }
      if (kind == Kind::OnedSigned) {
        root.only({"kind", "verdict", "creases", "cut_image", "flip_whole_paper"});
      } else {
        root.only({"kind", "verdict", "creases", "cut_image"});
      }
      oned::Solution sol;
      sol.creases = root.at("creases").rationals();
      if (kind == Kind::OnedInterval) {
        sol.cut_image = root.at("cut_image").interval();
      } else {
        sol.cut_image = root.at("cut_image").rational();
      }
      if (kind == Kind::OnedSigned) sol.flip_whole_paper = root.at("flip_whole_paper").boolean();
      return {kind, oned::Result{std::move(sol)}};
    }
    case Kind::Punch: {
      if (!ok) {
        root.only({"kind", "verdict", "reason", "witness"});
        return {kind, PunchResult{punch::NotRectangle{root.at("witness").point()}}};
      }
      root.only({"kind", "verdict", "vertical_creases", "horizontal_creases", "punch_point"});
      return {kind, PunchResult{punch::Solution{root.at("vertical_creases").rationals(),
                                                root.at("horizontal_creases").rationals(),
                                                root.at("punch_point").point()}}};
    }
    case Kind::FoldCut: {
      if (!ok) {
        root.only({"kind", "verdict", "stage", "detail", "witness"});
        return {kind, foldcut::Verdict{foldcut::Unsolvable{read_stage(root.at("stage")),
                                                           root.at("detail").str(),
                                                           root.at("witness").points()}}};
      }
      root.only({"kind", "verdict", "vertical_creases", "horizontal_creases", "mountain_valley",
                 "folded_line", "scale"});
      foldcut::Solution2D sol;
      sol.vertical_creases = root.at("vertical_creases").rationals();
      sol.horizontal_creases = root.at("horizontal_creases").rationals();
      const Reader mv = root.at("mountain_valley");
      mv.only({"vertical", "horizontal"});
      const Reader vert = mv.at("vertical");
      for (std::size_t i = 0, n = vert.size(); i < n; ++i) sol.mv.vertical.push_back(read_fold(vert.at(i)));
      const Reader horiz = mv.at("horizontal");
      for (std::size_t i = 0, n = horiz.size(); i < n; ++i) {
        std::vector<foldcut::Fold> row;
        const Reader r = horiz.at(i);
        for (std::size_t j = 0, m = r.size(); j < m; ++j) row.push_back(read_fold(r.at(j)));
        sol.mv.horizontal.push_back(std::move(row));
      }
      sol.folded_line = read_line(root.at("folded_line"));
      sol.scale = root.at("scale").rational();
      return {kind, foldcut::Verdict{std::move(sol)}};
    }
  }
  root.fail("unreachable");
}

std::string serialize(const InstanceDocument& doc) { return render(instance_json(doc)); }

std::string serialize(const SolutionDocument& doc) { return render(solution_json(doc)); }

SolutionDocument solve(const InstanceDocument& doc) {
  return std::visit(
      [&](const auto& inst) -> SolutionDocument {
        using T = std::decay_t<decltype(inst)>;
        if constexpr (std::is_same_v<T, oned::UnsignedInstance>) {
          return {doc.kind(), oned::Result{oned::solve_unsigned(inst)}};
        } else if constexpr (std::is_same_v<T, oned::SignedInstance>) {
          return {doc.kind(), oned::solve_signed(inst)};
        } else if constexpr (std::is_same_v<T, oned::IntervalInstance>) {
          return {doc.kind(), oned::solve_interval(inst)};
        } else if constexpr (std::is_same_v<T, punch::HoleInstance>) {
          auto r = punch::solve_punch(inst);
          if (auto* sol = std::get_if<punch::Solution>(&r)) return {doc.kind(), PunchResult{*sol}};
          return {doc.kind(), PunchResult{std::get<punch::NotRectangle>(r)}};
        } else {
          return {doc.kind(), foldcut::solve(inst)};
        }
      },
      doc.instance);
}

Check verify(const InstanceDocument& instance, const SolutionDocument& solution) {
  if (instance.kind() != solution.kind) {
    return {false, std::string("solution is for \"") + kind_name(solution.kind) +
                       "\" but the instance is \"" + kind_name(instance.kind()) + "\""};
  }
  if (!solution.solvable()) {
    if (solve(instance).solvable()) return {false, "instance is solvable by the canonical crease pattern"};
    return {true, "unsolvability confirmed by the canonical solver"};
  }

  auto describe = [](const oned::Unsolvable& u) {
    std::string s = u.reason;
    for (const auto& w : u.witness) s += " " + to_string(w);
    return s;
  };

  try {
    switch (instance.kind()) {
      case Kind::OnedUnsigned:
      case Kind::OnedSigned: {
        const auto& sol = std::get<oned::Solution>(std::get<oned::Result>(solution.result));
        auto r = instance.kind() == Kind::OnedUnsigned
                     ? oned::verify_unsigned(std::get<oned::UnsignedInstance>(instance.instance),
                                             sol.creases)
                     : oned::verify_signed(std::get<oned::SignedInstance>(instance.instance),
                                           sol.creases, sol.flip_whole_paper);
        if (auto* u = std::get_if<oned::Unsolvable>(&r)) return {false, describe(*u)};
        const auto* claimed = std::get_if<Rational>(&sol.cut_image);
        if (!claimed || *claimed != std::get<Rational>(r)) return {false, "cut_image does not match"};
        return {true, "verified"};
      }
      case Kind::OnedInterval: {
        const auto& sol = std::get<oned::Solution>(std::get<oned::Result>(solution.result));
        auto r = oned::verify_interval(std::get<oned::IntervalInstance>(instance.instance), sol.creases);
        if (auto* u = std::get_if<oned::Unsolvable>(&r)) return {false, describe(*u)};
        const auto* claimed = std::get_if<Interval>(&sol.cut_image);
        if (!claimed || !(*claimed == std::get<Interval>(r))) return {false, "cut_image does not match"};
        return {true, "verified"};
      }
      case Kind::Punch: {
        const auto& sol = std::get<punch::Solution>(std::get<PunchResult>(solution.result));
        auto failure = punch::verify_punch(std::get<punch::HoleInstance>(instance.instance),
                                           sol.vertical_creases, sol.horizontal_creases,
                                           sol.punch_point);
        if (failure) {
          return {false, failure->reason + " at (" + to_string(failure->witness.x) + ", " +
                             to_string(failure->witness.y) + ")"};
        }
        return {true, "verified"};
      }
      case Kind::FoldCut: {
        const auto& sol = std::get<foldcut::Solution2D>(std::get<foldcut::Verdict>(solution.result));
        auto r = foldcut::verify_solution(std::get<foldcut::CutInstance>(instance.instance),
                                          sol.vertical_creases, sol.horizontal_creases);
        if (auto* f = std::get_if<foldcut::VerifyFailure>(&r)) {
          std::string s = f->reason;
          for (const auto& p : f->witness) s += " (" + to_string(p.x) + ", " + to_string(p.y) + ")";
          return {false, s};
        }
        if (!std::get<Line>(r).same_as(sol.folded_line)) return {false, "folded_line does not match"};
        const auto expected = foldcut::assign_mountain_valley(sol.vertical_creases, sol.horizontal_creases);
        if (sol.mv.vertical != expected.vertical || sol.mv.horizontal != expected.horizontal) {
          return {false, "mountain/valley labels are not the two-stage accordion assignment"};
        }
        return {true, "verified"};
      }
    }
  } catch (const Error& e) {
    return {false, e.what()};
  }
  return {false, "unreachable"};
}

}  // namespace orthofold::io
