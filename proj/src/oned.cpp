#include "orthofold/oned.hpp"

#include <algorithm>
#include <stdexcept>

#include "orthofold/errors.hpp"

namespace orthofold::oned {

namespace {

void validate_domain(const Interval& domain) {
  if (!(domain.lo < domain.hi)) throw InvalidInstance("domain must have lo < hi");
}

void validate_points(const Interval& domain, const std::vector<Rational>& points) {
  validate_domain(domain);
  if (points.empty()) throw InvalidInstance("no cut points");
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!domain.contains(points[i])) {
      throw InvalidInstance("cut point " + to_string(points[i]) + " is outside the domain");
    }
    if (i > 0 && points[i] <= points[i - 1]) {
      throw InvalidInstance("cut points must be strictly increasing");
    }
  }
}

std::vector<Rational> positions(const SignedInstance& inst) {
  std::vector<Rational> out;
  out.reserve(inst.cut_points.size());
  for (const auto& c : inst.cut_points) out.push_back(c.position);
  return out;
}

std::vector<Rational> midpoints(const std::vector<Rational>& points) {
  std::vector<Rational> out;
  for (std::size_t i = 1; i < points.size(); ++i) out.push_back(midpoint(points[i - 1], points[i]));
  return out;
}

// A piece of the domain restricted to a non-cut region, with the open/closed
// state of each end.
struct Stretch {
  Rational lo, hi;
  bool lo_open, hi_open;
};

}  // namespace

void validate(const UnsignedInstance& inst) { validate_points(inst.domain, inst.cut_points); }

void validate(const SignedInstance& inst) { validate_points(inst.domain, positions(inst)); }

void validate(const IntervalInstance& inst) {
  validate_domain(inst.domain);
  if (inst.cut_intervals.empty()) throw InvalidInstance("no cut intervals");
  for (std::size_t i = 0; i < inst.cut_intervals.size(); ++i) {
    const auto& ci = inst.cut_intervals[i];
    if (!(ci.span.lo < ci.span.hi)) {
      throw InvalidInstance("cut interval [" + to_string(ci.span.lo) + ", " +
                            to_string(ci.span.hi) + "] has no positive length");
    }
    if (ci.span.lo < inst.domain.lo || ci.span.hi > inst.domain.hi) {
      throw InvalidInstance("cut interval outside the domain");
    }
    if (i > 0 && !(inst.cut_intervals[i - 1].span.hi < ci.span.lo)) {
      throw InvalidInstance("cut intervals must be sorted with positive gaps");
    }
    for (std::size_t k = 0; k < ci.required_creases.size(); ++k) {
      const Rational& c = ci.required_creases[k];
      if (c <= ci.span.lo || c >= ci.span.hi) {
        throw InvalidInstance("required crease " + to_string(c) +
                              " is not strictly inside its cut interval");
      }
      if (k > 0 && c <= ci.required_creases[k - 1]) {
        throw InvalidInstance("required creases must be strictly increasing");
      }
    }
  }
}

Solution solve_unsigned(const UnsignedInstance& inst) {
  validate(inst);
  Solution sol{midpoints(inst.cut_points), Rational(0), false};
  const FoldMap1D map(inst.domain.lo, inst.domain.hi, sol.creases);
  const Rational image = map(inst.cut_points.front());
  if (map.preimages(image) != inst.cut_points) {
    throw std::logic_error("midpoint creases failed to align exactly the cut points");
  }
  sol.cut_image = image;
  return sol;
}

Result solve_signed(const SignedInstance& inst) {
  validate(inst);
  const auto& cuts = inst.cut_points;
  for (std::size_t i = 1; i < cuts.size(); ++i) {
    if (cuts[i].sign == cuts[i - 1].sign) {
      return Unsolvable{"same-sign-neighbours", {cuts[i - 1].position, cuts[i].position}};
    }
  }
  Solution sol = solve_unsigned(UnsignedInstance{inst.domain, positions(inst)});
  // Under the identity anchor the first cut point is face up.
  sol.flip_whole_paper = cuts.front().sign == Sign::Negative;
  return sol;
}

std::vector<Rational> canonical_creases(const IntervalInstance& inst) {
  std::vector<Rational> creases;
  for (std::size_t i = 0; i < inst.cut_intervals.size(); ++i) {
    const auto& ci = inst.cut_intervals[i];
    if (i > 0) creases.push_back(midpoint(inst.cut_intervals[i - 1].span.hi, ci.span.lo));
    creases.insert(creases.end(), ci.required_creases.begin(), ci.required_creases.end());
  }
  return creases;
}

Result solve_interval(const IntervalInstance& inst) {
  validate(inst);
  std::vector<Rational> creases = canonical_creases(inst);
  auto verdict = verify_interval(inst, creases);
  if (auto* failure = std::get_if<Unsolvable>(&verdict)) return *failure;
  return Solution{std::move(creases), std::get<Interval>(verdict), false};
}

std::variant<Interval, Unsolvable> verify_interval(const IntervalInstance& inst,
                                                    const std::vector<Rational>& creases) {
  validate(inst);
  for (const auto& ci : inst.cut_intervals) {
    for (const Rational& r : ci.required_creases) {
      if (!std::binary_search(creases.begin(), creases.end(), r)) {
        throw InvalidCreases("required crease " + to_string(r) + " is missing");
      }
    }
    for (const Rational& c : creases) {
      if (ci.span.contains(c) &&
          !std::binary_search(ci.required_creases.begin(), ci.required_creases.end(), c)) {
        throw InvalidCreases("crease " + to_string(c) + " lies inside a cut interval");
      }
    }
  }
  const FoldMap1D map(inst.domain.lo, inst.domain.hi, creases);

  // (1) Every cut interval folds onto the same interval.
  const Interval target = map.image(inst.cut_intervals.front().span.lo,
                                    inst.cut_intervals.front().span.hi);
  for (const auto& ci : inst.cut_intervals) {
    const Interval img = map.image(ci.span.lo, ci.span.hi);
    if (!(img == target)) {
      return Unsolvable{"image-mismatch", {target.lo, target.hi, img.lo, img.hi}};
    }
  }

  // (2) Nothing outside the cut intervals lands on it.
  std::vector<Stretch> regions;
  const auto& cis = inst.cut_intervals;
  if (inst.domain.lo < cis.front().span.lo) {
    regions.push_back({inst.domain.lo, cis.front().span.lo, false, true});
  }
  for (std::size_t i = 1; i < cis.size(); ++i) {
    regions.push_back({cis[i - 1].span.hi, cis[i].span.lo, true, true});
  }
  if (cis.back().span.hi < inst.domain.hi) {
    regions.push_back({cis.back().span.hi, inst.domain.hi, true, false});
  }

  for (const Stretch& region : regions) {
    for (const auto& piece : map.pieces()) {
      Stretch s{piece.lo > region.lo ? piece.lo : region.lo,
                piece.hi < region.hi ? piece.hi : region.hi, false, false};
      if (!(s.lo < s.hi)) continue;
      s.lo_open = s.lo == region.lo && region.lo_open;
      s.hi_open = s.hi == region.hi && region.hi_open;

      // Image of the stretch, with open ends carried along.
      Rational jlo = piece.apply(s.lo);
      Rational jhi = piece.apply(s.hi);
      bool jlo_open = s.lo_open;
      bool jhi_open = s.hi_open;
      if (piece.sign < 0) {
        std::swap(jlo, jhi);
        std::swap(jlo_open, jhi_open);
      }

      // Intersect with the closed target.
      Rational lower = jlo > target.lo ? jlo : target.lo;
      bool lower_open = jlo >= target.lo && jlo_open;
      Rational upper = jhi < target.hi ? jhi : target.hi;
      bool upper_open = jhi <= target.hi && jhi_open;
      const bool hit = lower < upper || (lower == upper && !lower_open && !upper_open);
      if (!hit) continue;

      Rational y = lower == upper ? lower : midpoint(lower, upper);
      Rational x = piece.sign > 0 ? Rational(y - piece.offset) : Rational(piece.offset - y);
      return Unsolvable{"stray-coverage", {x, y}};
    }
  }
  return target;
}

std::variant<Rational, Unsolvable> verify_unsigned(const UnsignedInstance& inst,
                                                   const std::vector<Rational>& creases) {
  validate(inst);
  for (const Rational& p : inst.cut_points) {
    if (std::binary_search(creases.begin(), creases.end(), p)) {
      throw InvalidCreases("crease at cut point " + to_string(p));
    }
  }
  const FoldMap1D map(inst.domain.lo, inst.domain.hi, creases);
  const Rational image = map(inst.cut_points.front());
  const auto aligned = map.preimages(image);
  for (const Rational& p : inst.cut_points) {
    if (!std::binary_search(aligned.begin(), aligned.end(), p)) {
      return Unsolvable{"unaligned-cut-point", {p}};
    }
  }
  for (const Rational& x : aligned) {
    if (!std::binary_search(inst.cut_points.begin(), inst.cut_points.end(), x)) {
      return Unsolvable{"aligned-non-cut", {x}};
    }
  }
  return image;
}

std::variant<Rational, Unsolvable> verify_signed(const SignedInstance& inst,
                                                 const std::vector<Rational>& creases,
                                                 bool flip_whole_paper) {
  auto verdict = verify_unsigned(UnsignedInstance{inst.domain, positions(inst)}, creases);
  if (std::holds_alternative<Unsolvable>(verdict)) return verdict;
  const FoldMap1D map(inst.domain.lo, inst.domain.hi, creases);
  for (const auto& c : inst.cut_points) {
    int o = map.orientation(c.position);
    if (flip_whole_paper) o = -o;
    if (o != static_cast<int>(c.sign)) return Unsolvable{"wrong-orientation", {c.position}};
  }
  return verdict;
}

}  // namespace orthofold::oned
