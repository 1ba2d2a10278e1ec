#pragma once

#include "coarsekit/core_sets.hpp"

#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace coarse {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// An infinity-metric on a finite window. Either dense (row-major matrix) or backed by a
/// distance kernel for large structured windows such as integer grids.
class ExtMetric {
 public:
  using Kernel = std::function<double(PointIndex, PointIndex)>;

  static ExtMetric dense(Universe universe, std::vector<double> row_major);
  static ExtMetric from_kernel(Universe universe, Kernel kernel);

  const Universe& universe() const { return universe_; }
  std::size_t size() const { return universe_->size(); }
  double operator()(PointIndex x, PointIndex y) const;

  /// Row-major copy of all distances.
  std::vector<double> matrix() const;
  bool is_dense() const { return !dense_.empty() || size() == 0; }

 private:
  ExtMetric(Universe universe, std::vector<double> dense, Kernel kernel);

  Universe universe_;
  std::vector<double> dense_;
  Kernel kernel_;
};

/// First violated metric axiom, if any. Triangle checks treat infinity as absorbing.
struct MetricViolation {
  std::string axiom;
  std::vector<PointIndex> points;
};
std::optional<MetricViolation> find_metric_violation(const ExtMetric& d, double tolerance = 1e-9);

// Standard windows.

/// {0, ..., n-1} with |i - j|.
ExtMetric path_metric(std::size_t n);
/// Integer box with the given extents (row-major, last axis fastest) and the l1 distance.
ExtMetric grid_l1_metric(const std::vector<std::size_t>& extents);
/// Shortest-path metric of a weighted undirected graph; unreachable pairs are infinite.
struct WeightedEdge {
  PointIndex a;
  PointIndex b;
  double weight;
};
ExtMetric shortest_path_metric(const Universe& universe, const std::vector<WeightedEdge>& edges);
/// Restriction of d to the listed points, reindexed in the given order.
ExtMetric restrict_metric(const ExtMetric& d, const std::vector<PointIndex>& points);

/// Supremum of pairwise distances; 0 for sets with fewer than two points.
double diameter(const PointSet& set, const ExtMetric& d);
bool is_uniformly_bounded(const Family& family, const ExtMetric& d, double bound);
/// Largest member diameter (0 for an empty family).
double max_member_diameter(const Family& family, const ExtMetric& d);

/// Closed ball {y : d(x, y) <= r}.
PointSet closed_ball(const ExtMetric& d, PointIndex center, double radius);
/// {B(x, r)} for every x, in point order.
Family ball_family(const ExtMetric& d, double radius);
/// {B(x, f(x))} for every x. The radius function must be positive everywhere.
Family sublinear_ball_family(const ExtMetric& d, PointIndex basepoint,
                             const std::vector<double>& radius);

/// Block metric over the concatenated universes; cross-block distances are infinite.
ExtMetric disjoint_union(const std::vector<ExtMetric>& parts);

/// Levels B_1, ..., B_k with St(B_i, B_i) refining B_{i+1} and every level covering X.
class ScaleChain {
 public:
  ScaleChain(Universe universe, std::vector<Family> levels);

  const Universe& universe() const { return universe_; }
  std::size_t depth() const { return levels_.size(); }
  /// 1-based level access.
  const Family& level(std::size_t i) const { return levels_.at(i - 1); }
  const std::vector<Family>& levels() const { return levels_; }

  /// Description of the first broken chain condition, if any.
  std::optional<std::string> violation() const;

 private:
  Universe universe_;
  std::vector<Family> levels_;
};

/// levels[1] = e(seed), levels[i+1] = St(levels[i], levels[i]).
ScaleChain generate_chain(const Family& seed, std::size_t depth);

/// d(x, y) = least i with x, y in a common member of level i; infinity beyond the chain depth.
ExtMetric metrize(const ScaleChain& chain);

struct LevelEquivalence {
  std::size_t level = 0;
  /// level i refines the closed i-balls of the chain metric (hence also the (i+1)-balls).
  bool level_refines_balls = false;
  /// for every integer radius r < i: the closed r-balls refine level i.
  bool balls_refine_level = false;
};

struct ChainMetricReport {
  std::vector<LevelEquivalence> levels;
  bool all_pass() const;
};

/// Both refinement directions between the chain levels and the balls of d, restricted to
/// radii below the chain depth.
ChainMetricReport chain_metric_equivalence(const ScaleChain& chain, const ExtMetric& d);

}  // namespace coarse
