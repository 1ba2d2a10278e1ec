#pragma once

#include "coarsekit/core_sets.hpp"
#include "coarsekit/metrics.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace coarse {

/// Finite diameter in the oo-metric.
bool is_bounded_set(const PointSet& set, const ExtMetric& d);

struct ProperFamilyResult {
  bool proper = true;
  /// First supplied K whose star is unbounded or exceeds the bound.
  std::optional<PointSet> violating_set;
  /// diam St(K, B) for each supplied K, in order.
  std::vector<double> star_diameters;
};

/// St(K, B) is bounded for every supplied K. With a finite `star_bound`, stars must
/// also have diameter at most `star_bound`, which lets a window detect stars that escape
/// every fixed bound. Throws PreconditionError when some K is unbounded.
ProperFamilyResult proper_family_check(const Family& family, const std::vector<PointSet>& ks,
                                       const ExtMetric& d, double star_bound = kInfinity);

/// St(K, St(B1, B2)) inside St(St(K, B1), B2) u St(St(K, B2), B1), tested literally.
/// This inclusion does not hold in general; see star_of_star_identity_check.
bool star_proper_inclusion_check(const Family& b1, const Family& b2, const PointSet& k);

/// St(K, St(B1, B2)) == St(St(St(K, B2), B1), B2). Holds for all inputs and bounds the
/// stars of St(B1, B2) by stars of the input families.
bool star_of_star_identity_check(const Family& b1, const Family& b2, const PointSet& k);

/// Delta(B)[K] == St(K, B).
bool delta_image_bridge_check(const Family& family, const PointSet& k);

/// Values of a real function, one per point.
using RealFunction = std::vector<double>;

/// Largest oscillation max f - min f over B \ U, B in the family.
double higson_defect(const RealFunction& f, const Family& family, const PointSet& truncation);

/// U_0 inside U_1 inside ... on one ground set.
class Exhaustion {
 public:
  explicit Exhaustion(std::vector<PointSet> stages);
  const std::vector<PointSet>& stages() const { return stages_; }
  std::size_t size() const { return stages_.size(); }

 private:
  std::vector<PointSet> stages_;
};

/// Prefixes {0, ..., k*step - 1} for k = 1, 2, ... that are proper subsets of the window;
/// the whole window is appended when `include_full` is set.
Exhaustion prefix_exhaustion(const Universe& universe, std::size_t step, bool include_full = false);

/// Least 0-based stage index whose defect is strictly below eps; nullopt means the window
/// is inconclusive, not that f fails to be Higson.
std::optional<std::size_t> minimal_truncation(const RealFunction& f, const Family& family,
                                              double eps, const Exhaustion& exhaustion);

struct StarDefectReport {
  double defect_b1 = 0;
  double defect_b2 = 0;
  /// Defect of St(B1, B2) outside L = St(St(K, B1), B2) u K.
  double defect_star = 0;
  PointSet truncation;
  /// Both input defects outside K are below eps / 4.
  bool hypothesis = false;
  /// The star defect is below 3 eps / 4.
  bool bound = false;
};
StarDefectReport higson_star_bound_check(const RealFunction& f, const Family& b1, const Family& b2,
                                         const PointSet& k, double eps);

/// g(scale * x + shift) at each point index x, g one of "linear", "log1p", "sin".
RealFunction builtin_function(std::string_view name, std::size_t size, double scale = 1.0,
                              double shift = 0.0);

}  // namespace coarse
