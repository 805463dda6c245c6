#include "orthofold/svg.hpp"

#include <algorithm>
#include <cstdio>

namespace orthofold::io {

namespace {

using namespace svg_style;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  std::string s = buf;
  return s == "-0" ? "0" : s;
}

class Canvas {
 public:
  Canvas(double x0, double y0, double w, double h) : scale_(std::max(w, h)) {
    out_ = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
           "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" +
           num(x0) + " " + num(y0) + " " + num(w) + " " + num(h) + "\">\n";
  }

  void rect(double x, double y, double w, double h) {
    out_ += "  <rect class=\"paper\" x=\"" + num(x) + "\" y=\"" + num(y) + "\" width=\"" + num(w) +
            "\" height=\"" + num(h) + "\" fill=\"#ffffff\" stroke=\"#000000\" stroke-width=\"" +
            num(kCreaseWidth * scale_) + "\"/>\n";
  }

  void line(const char* cls, const char* color, double width, double x1, double y1, double x2,
            double y2) {
    out_ += std::string("  <line class=\"") + cls + "\" x1=\"" + num(x1) + "\" y1=\"" + num(y1) +
            "\" x2=\"" + num(x2) + "\" y2=\"" + num(y2) + "\" stroke=\"" + color +
            "\" stroke-width=\"" + num(width * scale_) + "\" stroke-linecap=\"round\"/>\n";
  }

  void dot(const char* cls, const char* color, double x, double y) {
    out_ += std::string("  <circle class=\"") + cls + "\" cx=\"" + num(x) + "\" cy=\"" + num(y) +
            "\" r=\"" + num(kDotRadius * scale_) + "\" fill=\"" + color + "\"/>\n";
  }

  std::string finish() { return out_ + "</svg>\n"; }

 private:
  double scale_;
  std::string out_;
};

const char* fold_color(foldcut::Fold f) { return f == foldcut::Fold::Mountain ? kMountain : kValley; }
const char* fold_class(foldcut::Fold f) {
  return f == foldcut::Fold::Mountain ? "crease mountain" : "crease valley";
}

std::string render_2d(const PaperRect& paper, const std::vector<Segment>* cuts,
                      const std::vector<Point>* holes, const SolutionDocument* solution) {
  const double w = paper.width.get_d();
  const double h = paper.height.get_d();
  Canvas c(0, 0, w, h);
  c.rect(0, 0, w, h);
  auto fy = [&](const Rational& y) { return h - y.get_d(); };

  if (solution && solution->solvable()) {
    std::vector<Rational> v, hz;
    const foldcut::MvLabeling* mv = nullptr;
    if (const auto* p = std::get_if<PunchResult>(&solution->result)) {
      const auto& sol = std::get<punch::Solution>(*p);
      v = sol.vertical_creases;
      hz = sol.horizontal_creases;
    } else if (const auto* f = std::get_if<foldcut::Verdict>(&solution->result)) {
      const auto& sol = std::get<foldcut::Solution2D>(*f);
      v = sol.vertical_creases;
      hz = sol.horizontal_creases;
      mv = &sol.mv;
    }
    for (std::size_t i = 0; i < v.size(); ++i) {
      const bool labeled = mv && i < mv->vertical.size();
      c.line(labeled ? fold_class(mv->vertical[i]) : "crease", labeled ? fold_color(mv->vertical[i]) : kUnsigned,
             kCreaseWidth, v[i].get_d(), 0, v[i].get_d(), h);
    }
    // Horizontal creases one column at a time, since labels vary per column.
    std::vector<double> cols{0};
    for (const auto& x : v) cols.push_back(x.get_d());
    cols.push_back(w);
    for (std::size_t i = 0; i < hz.size(); ++i) {
      for (std::size_t j = 0; j + 1 < cols.size(); ++j) {
        const bool labeled = mv && i < mv->horizontal.size() && j < mv->horizontal[i].size();
        const auto f = labeled ? mv->horizontal[i][j] : foldcut::Fold::Mountain;
        c.line(labeled ? fold_class(f) : "crease", labeled ? fold_color(f) : kUnsigned, kCreaseWidth,
               cols[j], fy(hz[i]), cols[j + 1], fy(hz[i]));
      }
    }
  }
  if (cuts) {
    for (const auto& s : *cuts) {
      c.line("cut", kCut, kCutWidth, s.a().x.get_d(), fy(s.a().y), s.b().x.get_d(), fy(s.b().y));
    }
  }
  if (holes) {
    for (const auto& p : *holes) c.dot("hole", kHole, p.x.get_d(), fy(p.y));
  }
  return c.finish();
}

std::string render_1d(const InstanceDocument& doc, const SolutionDocument* solution) {
  const Interval domain = std::visit(
      [](const auto& inst) -> Interval {
        if constexpr (requires { inst.domain; }) {
          return inst.domain;
        } else {
          return {};
        }
      },
      doc.instance);
  const double lo = domain.lo.get_d();
  const double len = Rational(domain.hi - domain.lo).get_d();
  const double height = len * kStripHeight;
  const double mid = height / 2;
  Canvas c(lo, 0, len, height);
  c.line("paper", "#000000", kCreaseWidth, lo, mid, lo + len, mid);

  std::vector<Rational> required;
  if (const auto* inst = std::get_if<oned::IntervalInstance>(&doc.instance)) {
    for (const auto& ci : inst->cut_intervals) {
      c.line("cut", kCut, kCutWidth, ci.span.lo.get_d(), mid, ci.span.hi.get_d(), mid);
      required.insert(required.end(), ci.required_creases.begin(), ci.required_creases.end());
    }
  }
  if (solution && solution->solvable()) {
    const auto& sol = std::get<oned::Solution>(std::get<oned::Result>(solution->result));
    for (const auto& x : sol.creases) {
      if (std::find(required.begin(), required.end(), x) != required.end()) continue;
      c.dot("crease", kUnsigned, x.get_d(), mid);
    }
  }
  for (const auto& x : required) c.dot("crease required", kCut, x.get_d(), mid);
  if (const auto* inst = std::get_if<oned::UnsignedInstance>(&doc.instance)) {
    for (const auto& x : inst->cut_points) c.dot("cut", kCut, x.get_d(), mid);
  } else if (const auto* inst = std::get_if<oned::SignedInstance>(&doc.instance)) {
    for (const auto& p : inst->cut_points) {
      c.dot(p.sign == oned::Sign::Positive ? "cut positive" : "cut negative", kCut, p.position.get_d(),
            mid);
    }
  }
  return c.finish();
}

}  // namespace

std::string render_svg(const InstanceDocument& instance, const SolutionDocument* solution) {
  if (solution && solution->kind != instance.kind()) solution = nullptr;
  if (const auto* inst = std::get_if<foldcut::CutInstance>(&instance.instance)) {
    return render_2d(inst->paper, &inst->cuts, nullptr, solution);
  }
  if (const auto* inst = std::get_if<punch::HoleInstance>(&instance.instance)) {
    return render_2d(inst->paper, nullptr, &inst->holes, solution);
  }
  return render_1d(instance, solution);
}

}  // namespace orthofold::io
