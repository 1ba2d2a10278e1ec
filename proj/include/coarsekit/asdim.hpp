#pragma once

#include "coarsekit/core_sets.hpp"
#include "coarsekit/metrics.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace coarse {

/// X = X_0 u ... u X_n with pairwise disjoint parts. Parts may be empty.
class Decomposition {
 public:
  Decomposition(Universe universe, std::vector<PointSet> parts);
  /// One part per color, from a color index per point.
  static Decomposition from_coloring(Universe universe, const std::vector<std::size_t>& color,
                                     std::size_t part_count);
  static Decomposition trivial(Universe universe);

  const Universe& universe() const { return universe_; }
  const std::vector<PointSet>& parts() const { return parts_; }
  std::size_t part_count() const { return parts_.size(); }
  std::size_t nonempty_part_count() const;
  /// Part index of each point.
  std::vector<std::size_t> coloring() const;

 private:
  Universe universe_;
  std::vector<PointSet> parts_;
};

/// Classes sorted by least element.
struct ComponentPartition {
  std::vector<PointSet> classes;
};

/// Largest number of members (with repetition) containing a single point.
std::size_t multiplicity(const Family& family);

/// Classes of the chain relation on `subset`: consecutive chain points share a member of
/// `family`, and every chain point lies in `subset`.
ComponentPartition b_components(const Family& family, const PointSet& subset);

/// r-components of `subset`: chains with steps d <= r staying inside `subset`.
ComponentPartition metric_components(const ExtMetric& d, const PointSet& subset, double r);

/// Every B-component of every part lies inside some member of `bound_family`.
bool decomposition_check(const Decomposition& decomposition, const Family& family,
                         const Family& bound_family);

/// Largest diameter of an r-component of any part.
double max_component_diameter(const Decomposition& decomposition, const ExtMetric& d, double r);
/// Same, restricted to parts intersected with `region`. Returns early with a value above
/// `cutoff` as soon as one is seen.
double max_component_diameter(const Decomposition& decomposition, const ExtMetric& d, double r,
                              const PointSet& region, double cutoff = kInfinity);

/// Singletons and the pairs {x, y} with d(x, y) <= r; its B-components are the r-components.
Family scale_pair_family(const ExtMetric& d, double r);

/// {St(C, B1) u C : C a B2-component of some part}, B2 = St(e(B1), e(B1)). Ordered by part,
/// then by component.
Family components_to_cover(const Decomposition& decomposition, const Family& cover);

/// Distinct B2-components of the same part have disjoint B1-stars.
bool same_part_stars_disjoint(const Decomposition& decomposition, const Family& cover);

inline constexpr std::size_t kExactSearchCap = 16;

/// Exhaustive search over (n+1)-colorings whose per-color r-components all have diameter at
/// most `component_bound`. Colorings are explored in lexicographic order of the color
/// vector, so the first valid one in that order is returned. Throws PreconditionError when
/// the window exceeds `cap` points.
std::optional<Decomposition> find_decomposition_bruteforce(const ExtMetric& d, double r,
                                                           std::size_t n, double component_bound,
                                                           std::size_t cap = kExactSearchCap);

/// Alternating slabs of thickness 4*ceil(r) across `axis` of an integer box (2 parts).
Decomposition band_decomposition(const std::vector<std::size_t>& extents, std::size_t axis, double r);

/// dim + 1 parts of axis-aligned bricks of side 4*ceil(r). For dim = 1 these are alternating
/// intervals; for dim = 2 the rows of square bricks are staggered by half a brick and colored
/// (column - row) mod 3, so same-colored bricks are more than 2r apart in l1.
Decomposition brick_decomposition(std::size_t dim, const std::vector<std::size_t>& extents,
                                  double r);

// Hurewicz-type desk report.

/// Candidate decompositions of a space at scale r with component bound `bound`.
using DecompositionFinder =
    std::function<std::vector<Decomposition>(double r, double bound)>;

/// Bands along each axis and (for 2-dimensional boxes) bricks.
DecompositionFinder grid_finder(std::vector<std::size_t> extents);
/// Exhaustive colorings with 1 ... max_parts parts (small windows only).
DecompositionFinder exact_finder(ExtMetric d, std::size_t max_parts);

struct HurewiczScale {
  double scale = 0;
  double component_bound = 0;
  /// Largest diameter of f(B(x, r)) over x.
  double image_diameter = 0;
  bool uniform = false;
  std::optional<std::size_t> n_f;
  std::optional<std::size_t> n_y;
  std::optional<std::size_t> n_x;
  bool inequality_holds = false;
  std::string note;
};

struct HurewiczInputs {
  std::vector<PointIndex> map;  // f : X -> Y, one image per point of X
  ExtMetric dx;
  ExtMetric dy;
  std::vector<double> scales;
  DecompositionFinder x_finder;
  DecompositionFinder y_finder;
  /// Decompositions of X whose restrictions to the fibers are tried.
  DecompositionFinder fiber_finder;
  /// Shared component bound at scale r is bound_factor * r.
  double bound_factor = 8.0;
};

/// Per scale r: n_Y from decompositions of Y, n_f from decompositions of the fibers f^-1(C)
/// over the r-balls C of Y under one shared bound, n_X from decompositions of X; each the
/// least part count minus one among candidates whose r-components are bounded (the one-part
/// decomposition is always tried first).
std::vector<HurewiczScale> hurewicz_report(const HurewiczInputs& inputs);

}  // namespace coarse
