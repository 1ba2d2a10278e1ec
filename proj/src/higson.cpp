#include "coarsekit/higson.hpp"

#include "coarsekit/entourages.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace coarse {

bool is_bounded_set(const PointSet& set, const ExtMetric& d) {
  return !std::isinf(diameter(set, d));
}

ProperFamilyResult proper_family_check(const Family& family, const std::vector<PointSet>& ks,
                                       const ExtMetric& d, double star_bound) {
  require_same_universe(family.universe(), d.universe(), "proper_family_check");
  ProperFamilyResult result;
  for (const auto& k : ks) {
    require_same_universe(k.universe(), d.universe(), "proper_family_check");
    if (!is_bounded_set(k, d)) throw PreconditionError("proper_family_check: K must be bounded");
  }
  for (const auto& k : ks) {
    const double diam = diameter(star(k, family), d);
    result.star_diameters.push_back(diam);
    if (result.proper && (std::isinf(diam) || diam > star_bound)) {
      result.proper = false;
      result.violating_set = k;
    }
  }
  return result;
}

bool star_proper_inclusion_check(const Family& b1, const Family& b2, const PointSet& k) {
  require_same_universe(b1.universe(), b2.universe(), "star_proper_inclusion_check");
  require_same_universe(b1.universe(), k.universe(), "star_proper_inclusion_check");
  const auto lhs = star(k, star_family(b1, b2));
  const auto rhs = star(star(k, b1), b2) | star(star(k, b2), b1);
  return lhs.is_subset_of(rhs);
}

bool star_of_star_identity_check(const Family& b1, const Family& b2, const PointSet& k) {
  require_same_universe(b1.universe(), b2.universe(), "star_of_star_identity_check");
  require_same_universe(b1.universe(), k.universe(), "star_of_star_identity_check");
  return star(k, star_family(b1, b2)) == star(star(star(k, b2), b1), b2);
}

bool delta_image_bridge_check(const Family& family, const PointSet& k) {
  require_same_universe(family.universe(), k.universe(), "delta_image_bridge_check");
  return image_of_set(delta_of_family(family), k) == star(k, family);
}

namespace {

void require_function(const RealFunction& f, const Universe& u, const char* where) {
  if (f.size() != u->size()) {
    throw PreconditionError(std::string(where) + ": function must have one value per point");
  }
  for (double v : f) {
    if (!std::isfinite(v)) throw PreconditionError(std::string(where) + ": values must be finite");
  }
}

}  // namespace

double higson_defect(const RealFunction& f, const Family& family, const PointSet& truncation) {
  require_same_universe(family.universe(), truncation.universe(), "higson_defect");
  require_function(f, family.universe(), "higson_defect");
  double worst = 0;
  for (const auto& b : family) {
    double lo = 0, hi = 0;
    bool any = false;
    (b - truncation).for_each([&](PointIndex x) {
      lo = any ? std::min(lo, f[x]) : f[x];
      hi = any ? std::max(hi, f[x]) : f[x];
      any = true;
    });
    if (any) worst = std::max(worst, hi - lo);
  }
  return worst;
}

Exhaustion::Exhaustion(std::vector<PointSet> stages) : stages_(std::move(stages)) {
  for (std::size_t i = 1; i < stages_.size(); ++i) {
    require_same_universe(stages_[0].universe(), stages_[i].universe(), "Exhaustion");
    if (!stages_[i - 1].is_subset_of(stages_[i])) {
      throw PreconditionError("Exhaustion: stage " + std::to_string(i - 1) +
                              " is not contained in stage " + std::to_string(i));
    }
  }
}

Exhaustion prefix_exhaustion(const Universe& universe, std::size_t step, bool include_full) {
  if (step == 0) throw PreconditionError("prefix_exhaustion: step must be positive");
  std::vector<PointSet> stages;
  PointSet current(universe);
  PointIndex next = 0;
  for (std::size_t end = step; end < universe->size(); end += step) {
    for (; next < end; ++next) current.insert(next);
    stages.push_back(current);
  }
  if (include_full) stages.push_back(PointSet::full(universe));
  return Exhaustion(std::move(stages));
}

std::optional<std::size_t> minimal_truncation(const RealFunction& f, const Family& family,
                                              double eps, const Exhaustion& exhaustion) {
  if (!(eps > 0)) throw PreconditionError("minimal_truncation: eps must be positive");
  for (std::size_t i = 0; i < exhaustion.size(); ++i) {
    if (higson_defect(f, family, exhaustion.stages()[i]) < eps) return i;
  }
  return std::nullopt;
}

StarDefectReport higson_star_bound_check(const RealFunction& f, const Family& b1, const Family& b2,
                                         const PointSet& k, double eps) {
  if (!(eps > 0)) throw PreconditionError("higson_star_bound_check: eps must be positive");
  StarDefectReport r{.truncation = star(star(k, b1), b2) | k};
  r.defect_b1 = higson_defect(f, b1, k);
  r.defect_b2 = higson_defect(f, b2, k);
  r.defect_star = higson_defect(f, star_family(b1, b2), r.truncation);
  r.hypothesis = r.defect_b1 < eps / 4 && r.defect_b2 < eps / 4;
  r.bound = r.defect_star < 3 * eps / 4;
  return r;
}

RealFunction builtin_function(std::string_view name, std::size_t size, double scale, double shift) {
  RealFunction out(size);
  for (std::size_t x = 0; x < size; ++x) {
    const double t = scale * static_cast<double>(x) + shift;
    if (name == "linear") {
      out[x] = t;
    } else if (name == "log1p") {
      if (!(t > -1)) throw PreconditionError("log1p: argument must exceed -1");
      out[x] = std::log1p(t);
    } else if (name == "sin") {
      out[x] = std::sin(t);
    } else {
      throw PreconditionError("unknown builtin function '" + std::string(name) + "'");
    }
  }
  return out;
}

}  // namespace coarse
