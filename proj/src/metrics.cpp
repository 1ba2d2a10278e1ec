#include "coarsekit/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace coarse {

ExtMetric::ExtMetric(Universe universe, std::vector<double> dense, Kernel kernel)
    : universe_(std::move(universe)), dense_(std::move(dense)), kernel_(std::move(kernel)) {
  if (!universe_) throw PreconditionError("ExtMetric: null universe");
}

ExtMetric ExtMetric::dense(Universe universe, std::vector<double> row_major) {
  const auto n = universe ? universe->size() : 0;
  if (row_major.size() != n * n) {
    throw PreconditionError("ExtMetric::dense: expected " + std::to_string(n * n) +
                            " entries, got " + std::to_string(row_major.size()));
  }
  for (double v : row_major) {
    if (std::isnan(v) || v < 0) throw PreconditionError("ExtMetric::dense: negative or NaN entry");
  }
  return ExtMetric(std::move(universe), std::move(row_major), nullptr);
}

ExtMetric ExtMetric::from_kernel(Universe universe, Kernel kernel) {
  if (!kernel) throw PreconditionError("ExtMetric::from_kernel: empty kernel");
  return ExtMetric(std::move(universe), {}, std::move(kernel));
}

double ExtMetric::operator()(PointIndex x, PointIndex y) const {
  const auto n = size();
  if (x >= n || y >= n) throw std::out_of_range("ExtMetric: index outside universe");
  return kernel_ ? kernel_(x, y) : dense_[x * n + y];
}

std::vector<double> ExtMetric::matrix() const {
  if (!kernel_) return dense_;
  const auto n = size();
  std::vector<double> out(n * n);
  for (PointIndex x = 0; x < n; ++x) {
    for (PointIndex y = 0; y < n; ++y) out[x * n + y] = kernel_(x, y);
  }
  return out;
}

std::optional<MetricViolation> find_metric_violation(const ExtMetric& d, double tolerance) {
  const auto n = d.size();
  const auto m = d.matrix();
  auto at = [&](PointIndex x, PointIndex y) { return m[x * n + y]; };
  for (PointIndex x = 0; x < n; ++x) {
    if (at(x, x) != 0) return MetricViolation{"d(x,x)=0", {x}};
    for (PointIndex y = 0; y < n; ++y) {
      if (std::isnan(at(x, y)) || at(x, y) < 0) return MetricViolation{"nonnegativity", {x, y}};
      if (at(x, y) != at(y, x)) return MetricViolation{"symmetry", {x, y}};
      if (x != y && at(x, y) == 0) return MetricViolation{"d(x,y)=0 implies x=y", {x, y}};
    }
  }
  for (PointIndex x = 0; x < n; ++x) {
    for (PointIndex y = 0; y < n; ++y) {
      const double dxy = at(x, y);
      if (std::isinf(dxy)) continue;
      for (PointIndex z = 0; z < n; ++z) {
        const double bound = dxy + at(y, z);
        if (at(x, z) > bound + tolerance) return MetricViolation{"triangle", {x, y, z}};
      }
    }
  }
  return std::nullopt;
}

ExtMetric path_metric(std::size_t n) {
  return ExtMetric::from_kernel(make_universe(n), [](PointIndex x, PointIndex y) {
    return static_cast<double>(x > y ? x - y : y - x);
  });
}

ExtMetric grid_l1_metric(const std::vector<std::size_t>& extents) {
  std::size_t n = extents.empty() ? 0 : 1;
  for (auto e : extents) n *= e;
  return ExtMetric::from_kernel(make_universe(n), [extents](PointIndex x, PointIndex y) {
    double total = 0;
    for (std::size_t axis = extents.size(); axis-- > 0;) {
      const auto e = extents[axis];
      const auto cx = x % e;
      const auto cy = y % e;
      total += static_cast<double>(cx > cy ? cx - cy : cy - cx);
      x /= e;
      y /= e;
    }
    return total;
  });
}

ExtMetric shortest_path_metric(const Universe& universe, const std::vector<WeightedEdge>& edges) {
  const auto n = universe->size();
  std::vector<double> dist(n * n, kInfinity);
  for (PointIndex x = 0; x < n; ++x) dist[x * n + x] = 0;
  for (const auto& e : edges) {
    if (e.a >= n || e.b >= n) throw std::out_of_range("shortest_path_metric: edge outside universe");
    if (!(e.weight > 0)) throw PreconditionError("shortest_path_metric: edge weights must be positive");
    if (e.a == e.b) continue;
    dist[e.a * n + e.b] = std::min(dist[e.a * n + e.b], e.weight);
    dist[e.b * n + e.a] = std::min(dist[e.b * n + e.a], e.weight);
  }
  for (PointIndex k = 0; k < n; ++k) {
    for (PointIndex i = 0; i < n; ++i) {
      const double dik = dist[i * n + k];
      if (std::isinf(dik)) continue;
      for (PointIndex j = 0; j < n; ++j) {
        const double via = dik + dist[k * n + j];
        if (via < dist[i * n + j]) dist[i * n + j] = via;
      }
    }
  }
  return ExtMetric::dense(universe, std::move(dist));
}

ExtMetric restrict_metric(const ExtMetric& d, const std::vector<PointIndex>& points) {
  const auto m = points.size();
  std::vector<double> dist(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) dist[i * m + j] = d(points[i], points[j]);
  }
  return ExtMetric::dense(make_universe(m), std::move(dist));
}

double diameter(const PointSet& set, const ExtMetric& d) {
  require_same_universe(set.universe(), d.universe(), "diameter");
  const auto pts = set.members();
  double best = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      best = std::max(best, d(pts[i], pts[j]));
      if (std::isinf(best)) return best;
    }
  }
  return best;
}

double max_member_diameter(const Family& family, const ExtMetric& d) {
  require_same_universe(family.universe(), d.universe(), "max_member_diameter");
  double best = 0;
  for (const auto& b : family) best = std::max(best, diameter(b, d));
  return best;
}

bool is_uniformly_bounded(const Family& family, const ExtMetric& d, double bound) {
  require_same_universe(family.universe(), d.universe(), "is_uniformly_bounded");
  return std::all_of(family.begin(), family.end(),
                     [&](const PointSet& b) { return diameter(b, d) <= bound; });
}

PointSet closed_ball(const ExtMetric& d, PointIndex center, double radius) {
  PointSet out(d.universe());
  for (PointIndex y = 0; y < d.size(); ++y) {
    if (d(center, y) <= radius) out.insert(y);
  }
  return out;
}

Family ball_family(const ExtMetric& d, double radius) {
  if (!(radius > 0) || std::isinf(radius)) {
    throw PreconditionError("ball_family: radius must be positive and finite");
  }
  Family out(d.universe());
  for (PointIndex x = 0; x < d.size(); ++x) out.push_back(closed_ball(d, x, radius));
  return out;
}

Family sublinear_ball_family(const ExtMetric& d, PointIndex basepoint,
                             const std::vector<double>& radius) {
  if (basepoint >= d.size() && d.size() > 0) {
    throw PreconditionError("sublinear_ball_family: basepoint outside universe");
  }
  if (radius.size() != d.size()) {
    throw PreconditionError("sublinear_ball_family: radius function must be defined at every point");
  }
  Family out(d.universe());
  for (PointIndex x = 0; x < d.size(); ++x) {
    if (!(radius[x] > 0)) throw PreconditionError("sublinear_ball_family: radii must be positive");
    out.push_back(closed_ball(d, x, radius[x]));
  }
  return out;
}

ExtMetric disjoint_union(const std::vector<ExtMetric>& parts) {
  if (parts.size() == 1) return parts.front();
  std::size_t n = 0;
  std::vector<std::size_t> offsets;
  for (const auto& p : parts) {
    offsets.push_back(n);
    n += p.size();
  }
  std::vector<double> dist(n * n, kInfinity);
  for (std::size_t b = 0; b < parts.size(); ++b) {
    const auto m = parts[b].matrix();
    const auto k = parts[b].size();
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) dist[(offsets[b] + i) * n + offsets[b] + j] = m[i * k + j];
    }
  }
  return ExtMetric::dense(make_universe(n), std::move(dist));
}

// Scale chains

ScaleChain::ScaleChain(Universe universe, std::vector<Family> levels)
    : universe_(std::move(universe)), levels_(std::move(levels)) {
  if (levels_.empty()) throw PreconditionError("ScaleChain: at least one level is required");
  for (const auto& l : levels_) require_same_universe(universe_, l.universe(), "ScaleChain");
}

std::optional<std::string> ScaleChain::violation() const {
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    if (!levels_[i].covers()) return "level " + std::to_string(i + 1) + " does not cover X";
    if (i + 1 < levels_.size() && !refines(star_family(levels_[i], levels_[i]), levels_[i + 1])) {
      return "St(level " + std::to_string(i + 1) + ", level " + std::to_string(i + 1) +
             ") does not refine level " + std::to_string(i + 2);
    }
  }
  return std::nullopt;
}

ScaleChain generate_chain(const Family& seed, std::size_t depth) {
  if (depth == 0) throw PreconditionError("generate_chain: depth must be at least 1");
  std::vector<Family> levels;
  levels.push_back(trivial_extension(seed));
  while (levels.size() < depth) levels.push_back(star_family(levels.back(), levels.back()));
  return ScaleChain(seed.universe(), std::move(levels));
}

ExtMetric metrize(const ScaleChain& chain) {
  if (auto v = chain.violation()) throw PreconditionError("metrize: " + *v);
  const auto n = chain.universe()->size();
  std::vector<double> dist(n * n, kInfinity);
  for (PointIndex x = 0; x < n; ++x) dist[x * n + x] = 0;
  for (std::size_t i = 1; i <= chain.depth(); ++i) {
    const auto value = static_cast<double>(i);
    for (const auto& b : chain.level(i)) {
      const auto pts = b.members();
      for (auto x : pts) {
        for (auto y : pts) {
          if (x != y && std::isinf(dist[x * n + y])) dist[x * n + y] = value;
        }
      }
    }
  }
  return ExtMetric::dense(chain.universe(), std::move(dist));
}

bool ChainMetricReport::all_pass() const {
  return std::all_of(levels.begin(), levels.end(), [](const LevelEquivalence& l) {
    return l.level_refines_balls && l.balls_refine_level;
  });
}

ChainMetricReport chain_metric_equivalence(const ScaleChain& chain, const ExtMetric& d) {
  require_same_universe(chain.universe(), d.universe(), "chain_metric_equivalence");
  ChainMetricReport report;
  std::vector<Family> balls;  // balls[r] = closed r-balls, r = 0 .. depth
  for (std::size_t r = 0; r <= chain.depth(); ++r) {
    Family f(d.universe());
    for (PointIndex x = 0; x < d.size(); ++x) f.push_back(closed_ball(d, x, static_cast<double>(r)));
    balls.push_back(std::move(f));
  }
  for (std::size_t i = 1; i <= chain.depth(); ++i) {
    LevelEquivalence entry;
    entry.level = i;
    entry.level_refines_balls = refines(chain.level(i), balls[i]);
    entry.balls_refine_level = true;
    for (std::size_t r = 0; r < i; ++r) {
      if (!refines(balls[r], chain.level(i))) {
        entry.balls_refine_level = false;
        break;
      }
    }
    report.levels.push_back(entry);
  }
  return report;
}

}  // namespace coarse
