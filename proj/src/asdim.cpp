#include "coarsekit/asdim.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace coarse {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

ComponentPartition collect_classes(const Universe& u, const std::vector<PointIndex>& pts,
                                   UnionFind& uf) {
  std::vector<std::optional<std::size_t>> slot(pts.size());
  ComponentPartition out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto root = uf.find(i);
    if (!slot[root]) {
      slot[root] = out.classes.size();
      out.classes.emplace_back(u);
    }
    out.classes[*slot[root]].insert(pts[i]);
  }
  return out;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  auto q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::size_t box_size(const std::vector<std::size_t>& extents) {
  std::size_t n = extents.empty() ? 0 : 1;
  for (auto e : extents) n *= e;
  return n;
}

std::vector<std::size_t> box_coords(PointIndex p, const std::vector<std::size_t>& extents) {
  std::vector<std::size_t> c(extents.size());
  for (std::size_t axis = extents.size(); axis-- > 0;) {
    c[axis] = p % extents[axis];
    p /= extents[axis];
  }
  return c;
}

std::int64_t slab_side(double r) {
  if (!(r > 0) || std::isinf(r)) throw PreconditionError("scale must be positive and finite");
  return 4 * static_cast<std::int64_t>(std::ceil(r));
}

}  // namespace

// Decomposition

Decomposition::Decomposition(Universe universe, std::vector<PointSet> parts)
    : universe_(std::move(universe)), parts_(std::move(parts)) {
  PointSet seen(universe_);
  for (const auto& p : parts_) {
    require_same_universe(universe_, p.universe(), "Decomposition");
    if (p.intersects(seen)) throw PreconditionError("Decomposition: parts must be pairwise disjoint");
    seen |= p;
  }
  if (seen != PointSet::full(universe_)) {
    throw PreconditionError("Decomposition: parts must cover the universe");
  }
}

Decomposition Decomposition::from_coloring(Universe universe, const std::vector<std::size_t>& color,
                                           std::size_t part_count) {
  if (color.size() != universe->size()) throw PreconditionError("coloring size mismatch");
  std::vector<PointSet> parts(part_count, PointSet(universe));
  for (PointIndex x = 0; x < color.size(); ++x) {
    if (color[x] >= part_count) throw PreconditionError("color index out of range");
    parts[color[x]].insert(x);
  }
  return Decomposition(std::move(universe), std::move(parts));
}

Decomposition Decomposition::trivial(Universe universe) {
  auto full = PointSet::full(universe);
  return Decomposition(std::move(universe), {std::move(full)});
}

std::size_t Decomposition::nonempty_part_count() const {
  return static_cast<std::size_t>(
      std::count_if(parts_.begin(), parts_.end(), [](const PointSet& p) { return !p.empty(); }));
}

std::vector<std::size_t> Decomposition::coloring() const {
  std::vector<std::size_t> color(universe_->size(), 0);
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    parts_[i].for_each([&](PointIndex x) { color[x] = i; });
  }
  return color;
}

// Components

std::size_t multiplicity(const Family& family) {
  std::vector<std::size_t> count(family.universe()->size(), 0);
  for (const auto& b : family) b.for_each([&](PointIndex x) { ++count[x]; });
  return count.empty() ? 0 : *std::max_element(count.begin(), count.end());
}

ComponentPartition b_components(const Family& family, const PointSet& subset) {
  require_same_universe(family.universe(), subset.universe(), "b_components");
  const auto pts = subset.members();
  std::vector<std::size_t> local(subset.universe_size(), 0);
  for (std::size_t i = 0; i < pts.size(); ++i) local[pts[i]] = i;
  UnionFind uf(pts.size());
  for (const auto& b : family) {
    std::optional<std::size_t> anchor;
    (b & subset).for_each([&](PointIndex x) {
      if (anchor) uf.unite(*anchor, local[x]);
      else anchor = local[x];
    });
  }
  return collect_classes(subset.universe(), pts, uf);
}

ComponentPartition metric_components(const ExtMetric& d, const PointSet& subset, double r) {
  require_same_universe(d.universe(), subset.universe(), "metric_components");
  const auto pts = subset.members();
  UnionFind uf(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (d(pts[i], pts[j]) <= r) uf.unite(i, j);
    }
  }
  return collect_classes(subset.universe(), pts, uf);
}

bool decomposition_check(const Decomposition& decomposition, const Family& family,
                         const Family& bound_family) {
  require_same_universe(decomposition.universe(), family.universe(), "decomposition_check");
  require_same_universe(decomposition.universe(), bound_family.universe(), "decomposition_check");
  for (const auto& part : decomposition.parts()) {
    for (const auto& c : b_components(family, part).classes) {
      const bool inside = std::any_of(bound_family.begin(), bound_family.end(),
                                      [&](const PointSet& m) { return c.is_subset_of(m); });
      if (!inside) return false;
    }
  }
  return true;
}

double max_component_diameter(const Decomposition& decomposition, const ExtMetric& d, double r) {
  return max_component_diameter(decomposition, d, r, PointSet::full(decomposition.universe()));
}

double max_component_diameter(const Decomposition& decomposition, const ExtMetric& d, double r,
                              const PointSet& region, double cutoff) {
  require_same_universe(decomposition.universe(), d.universe(), "max_component_diameter");
  double best = 0;
  for (const auto& part : decomposition.parts()) {
    for (const auto& c : metric_components(d, part & region, r).classes) {
      const auto pts = c.members();
      for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
          best = std::max(best, d(pts[i], pts[j]));
          if (best > cutoff) return best;
        }
      }
    }
  }
  return best;
}

Family scale_pair_family(const ExtMetric& d, double r) {
  Family out(d.universe());
  for (PointIndex x = 0; x < d.size(); ++x) {
    out.push_back(PointSet::singleton(d.universe(), x));
    for (PointIndex y = x + 1; y < d.size(); ++y) {
      if (d(x, y) <= r) out.push_back(PointSet(d.universe(), {x, y}));
    }
  }
  return out;
}

namespace {

std::vector<std::vector<PointSet>> components_by_part(const Decomposition& decomposition,
                                                      const Family& cover) {
  const auto scale = star_family(trivial_extension(cover), trivial_extension(cover));
  std::vector<std::vector<PointSet>> out;
  for (const auto& part : decomposition.parts()) out.push_back(b_components(scale, part).classes);
  return out;
}

}  // namespace

Family components_to_cover(const Decomposition& decomposition, const Family& cover) {
  require_same_universe(decomposition.universe(), cover.universe(), "components_to_cover");
  const MemberIndex index(cover);
  Family out(cover.universe());
  for (const auto& comps : components_by_part(decomposition, cover)) {
    for (const auto& c : comps) out.push_back(index.star(c) | c);
  }
  return out;
}

bool same_part_stars_disjoint(const Decomposition& decomposition, const Family& cover) {
  require_same_universe(decomposition.universe(), cover.universe(), "same_part_stars_disjoint");
  const MemberIndex index(cover);
  for (const auto& comps : components_by_part(decomposition, cover)) {
    std::vector<PointSet> stars;
    for (const auto& c : comps) stars.push_back(index.star(c));
    for (std::size_t i = 0; i < stars.size(); ++i) {
      for (std::size_t j = i + 1; j < stars.size(); ++j) {
        if (stars[i].intersects(stars[j])) return false;
      }
    }
  }
  return true;
}

// Exhaustive search

namespace {

struct ColoringSearch {
  const ExtMetric& d;
  double r;
  std::size_t colors;
  double bound;
  std::vector<std::size_t> color;
  std::vector<std::vector<PointIndex>> members;

  // Diameter of the r-component of p among the points already given p's color.
  double component_diameter(PointIndex p, std::size_t c) const {
    const auto& pool = members[c];
    std::vector<PointIndex> comp{p};
    std::vector<bool> taken(pool.size(), false);
    for (std::size_t head = 0; head < comp.size(); ++head) {
      for (std::size_t i = 0; i < pool.size(); ++i) {
        if (!taken[i] && d(comp[head], pool[i]) <= r) {
          taken[i] = true;
          comp.push_back(pool[i]);
        }
      }
    }
    double best = 0;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (std::size_t j = i + 1; j < comp.size(); ++j) best = std::max(best, d(comp[i], comp[j]));
    }
    return best;
  }

  bool assign(PointIndex p) {
    if (p == d.size()) return true;
    for (std::size_t c = 0; c < colors; ++c) {
      if (component_diameter(p, c) > bound) continue;
      color[p] = c;
      members[c].push_back(p);
      if (assign(p + 1)) return true;
      members[c].pop_back();
    }
    return false;
  }
};

}  // namespace

std::optional<Decomposition> find_decomposition_bruteforce(const ExtMetric& d, double r,
                                                           std::size_t n, double component_bound,
                                                           std::size_t cap) {
  if (d.size() > cap) {
    throw PreconditionError("find_decomposition_bruteforce: " + std::to_string(d.size()) +
                            " points exceed the exact-search cap of " + std::to_string(cap) +
                            "; use brick_decomposition or a grid finder instead");
  }
  // Merging components only grows diameters, so a partial coloring that already violates the
  // bound cannot be completed.
  ColoringSearch search{d, r, n + 1, component_bound, std::vector<std::size_t>(d.size(), 0),
                        std::vector<std::vector<PointIndex>>(n + 1)};
  if (!search.assign(0)) return std::nullopt;
  return Decomposition::from_coloring(d.universe(), search.color, n + 1);
}

// Grid decompositions

Decomposition band_decomposition(const std::vector<std::size_t>& extents, std::size_t axis,
                                 double r) {
  if (axis >= extents.size()) throw PreconditionError("band_decomposition: axis out of range");
  const auto side = slab_side(r);
  const auto n = box_size(extents);
  std::vector<std::size_t> color(n);
  for (PointIndex p = 0; p < n; ++p) {
    const auto c = box_coords(p, extents);
    color[p] = static_cast<std::size_t>((static_cast<std::int64_t>(c[axis]) / side) % 2);
  }
  return Decomposition::from_coloring(make_universe(n), color, 2);
}

Decomposition brick_decomposition(std::size_t dim, const std::vector<std::size_t>& extents, double r) {
  if (dim != 1 && dim != 2) throw PreconditionError("brick_decomposition: only dim 1 and 2 are supported");
  if (extents.size() != dim) throw PreconditionError("brick_decomposition: extents must have dim entries");
  if (dim == 1) return band_decomposition(extents, 0, r);
  const auto side = slab_side(r);
  const auto half = side / 2;
  const auto n = box_size(extents);
  std::vector<std::size_t> color(n);
  for (PointIndex p = 0; p < n; ++p) {
    const auto c = box_coords(p, extents);
    const auto row = static_cast<std::int64_t>(c[0]) / side;
    const auto col = floor_div(static_cast<std::int64_t>(c[1]) - half * row, side);
    color[p] = static_cast<std::size_t>((((col - row) % 3) + 3) % 3);
  }
  return Decomposition::from_coloring(make_universe(n), color, 3);
}

// Hurewicz report

DecompositionFinder grid_finder(std::vector<std::size_t> extents) {
  return [extents](double r, double) {
    std::vector<Decomposition> out;
    for (std::size_t axis = 0; axis < extents.size(); ++axis) {
      out.push_back(band_decomposition(extents, axis, r));
    }
    if (extents.size() == 2) out.push_back(brick_decomposition(2, extents, r));
    return out;
  };
}

DecompositionFinder exact_finder(ExtMetric d, std::size_t max_parts) {
  return [d, max_parts](double r, double bound) {
    std::vector<Decomposition> out;
    for (std::size_t parts = 1; parts <= max_parts; ++parts) {
      if (auto found = find_decomposition_bruteforce(d, r, parts - 1, bound)) {
        out.push_back(std::move(*found));
        break;
      }
    }
    return out;
  };
}

namespace {

// Least (nonempty part count - 1) among bounded candidates; the one-part decomposition first.
std::optional<std::size_t> least_dimension(const Universe& u, const ExtMetric& d, double r,
                                           double bound, const DecompositionFinder& finder,
                                           const std::vector<PointSet>& regions) {
  std::vector<Decomposition> candidates{Decomposition::trivial(u)};
  if (finder) {
    for (auto& c : finder(r, bound)) candidates.push_back(std::move(c));
  }
  std::optional<std::size_t> best;
  for (const auto& cand : candidates) {
    require_same_universe(u, cand.universe(), "hurewicz_report candidate");
    std::size_t parts_used = 0;
    bool ok = true;
    for (const auto& region : regions) {
      if (max_component_diameter(cand, d, r, region, bound) > bound) {
        ok = false;
        break;
      }
      std::size_t used = 0;
      for (const auto& p : cand.parts()) used += p.intersects(region) ? 1 : 0;
      parts_used = std::max(parts_used, used);
    }
    if (!ok) continue;
    const auto dim = parts_used == 0 ? 0 : parts_used - 1;
    if (!best || dim < *best) best = dim;
  }
  return best;
}

}  // namespace

std::vector<HurewiczScale> hurewicz_report(const HurewiczInputs& in) {
  const auto& ux = in.dx.universe();
  const auto& uy = in.dy.universe();
  if (in.map.size() != ux->size()) throw PreconditionError("hurewicz_report: f must be total on X");
  for (auto y : in.map) {
    if (y >= uy->size()) throw PreconditionError("hurewicz_report: f maps outside Y");
  }
  std::vector<HurewiczScale> out;
  for (double r : in.scales) {
    HurewiczScale s;
    s.scale = r;
    s.component_bound = in.bound_factor * r;

    for (PointIndex x = 0; x < ux->size(); ++x) {
      PointSet image(uy);
      closed_ball(in.dx, x, r).for_each([&](PointIndex p) { image.insert(in.map[p]); });
      s.image_diameter = std::max(s.image_diameter, diameter(image, in.dy));
    }
    s.uniform = !std::isinf(s.image_diameter);
    if (!s.uniform) {
      s.note = "f is not large scale uniform at this scale; skipped";
      out.push_back(std::move(s));
      continue;
    }

    s.n_y = least_dimension(uy, in.dy, r, s.component_bound, in.y_finder, {PointSet::full(uy)});

    std::vector<PointSet> fibers;
    for (const auto& c : distinct_members(ball_family(in.dy, r))) {
      PointSet fiber(ux);
      for (PointIndex x = 0; x < ux->size(); ++x) {
        if (c.contains(in.map[x])) fiber.insert(x);
      }
      if (!fiber.empty()) fibers.push_back(std::move(fiber));
    }
    s.n_f = least_dimension(ux, in.dx, r, s.component_bound, in.fiber_finder, fibers);
    s.n_x = least_dimension(ux, in.dx, r, s.component_bound, in.x_finder, {PointSet::full(ux)});

    if (s.n_f && s.n_y && s.n_x) {
      s.inequality_holds = *s.n_x <= *s.n_f + *s.n_y;
    } else {
      s.note = "no bounded decomposition found for some space at this scale";
    }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace coarse
