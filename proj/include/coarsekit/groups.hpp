#pragma once

#include "coarsekit/core_sets.hpp"
#include "coarsekit/metrics.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace coarse {

/// Canonical normal form owned by a GroupOracle; payload equality is group equality.
/// Ordering is lexicographic on the payload and fixes every "least element" choice.
struct GroupElement {
  std::vector<std::int64_t> payload;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

/// A finite set of group elements, sorted and duplicate-free.
using FiniteSubset = std::vector<GroupElement>;
FiniteSubset make_subset(std::vector<GroupElement> elements);

enum class GroupKind { Zn, Free, BS12, Table };

namespace detail {
class GroupModel;
}

/// Exact multiplication, inversion and normal-form I/O for one concrete group.
///
/// Supported groups:
///   - Zn: integer vectors under addition, generators the unit vectors.
///   - Free: reduced words over `rank` letters, written a b c ... with inverses A B C ...
///   - BS12: the Baumslag-Solitar group <a, t | t a t^-1 = a^2> as pairs (q, n) with q a dyadic
///     rational and n an integer, (q1, n1)(q2, n2) = (q1 + 2^n1 q2, n1 + n2); a = (1, 0),
///     t = (0, 1). Elements are written "m/2^j|n", or "m|n" when j = 0.
///   - Table: a finite group given by its Cayley table.
/// Integer overflow in normal-form arithmetic throws std::overflow_error.
class GroupOracle {
 public:
  static GroupOracle zn(std::size_t rank);
  static GroupOracle free_group(std::size_t rank);
  static GroupOracle bs12();
  /// `mul[a][b]` is the index of a*b. Group axioms are validated on construction.
  static GroupOracle table(std::vector<std::vector<std::size_t>> mul,
                           std::optional<std::vector<std::size_t>> generators = std::nullopt);

  GroupKind kind() const;
  std::string name() const;
  GroupElement identity() const;
  GroupElement multiply(const GroupElement& a, const GroupElement& b) const;
  GroupElement invert(const GroupElement& a) const;
  const std::vector<GroupElement>& generators() const;

  bool is_canonical(const GroupElement& a) const;
  std::string format(const GroupElement& a) const;
  GroupElement parse(std::string_view text) const;

  GroupElement multiply_all(std::initializer_list<GroupElement> factors) const;
  /// a^k for any integer k.
  GroupElement power(const GroupElement& a, std::int64_t k) const;

 private:
  explicit GroupOracle(std::shared_ptr<const detail::GroupModel> model);
  std::shared_ptr<const detail::GroupModel> model_;
};

// Set arithmetic.

/// {x * f : f in F}
FiniteSubset left_translate(const GroupOracle& g, const GroupElement& x, const FiniteSubset& f);
/// {f * x : f in F}
FiniteSubset right_translate(const GroupOracle& g, const FiniteSubset& f, const GroupElement& x);
FiniteSubset inverse_set(const GroupOracle& g, const FiniteSubset& f);
/// {a * b : a in A, b in B}
FiniteSubset product_set(const GroupOracle& g, const FiniteSubset& a, const FiniteSubset& b);
FiniteSubset symmetrize(const GroupOracle& g, const FiniteSubset& f);
/// Elements of word length at most `radius` over the generators and their inverses.
FiniteSubset word_ball(const GroupOracle& g, std::size_t radius);

// Shift structures.

/// [x * F for x in basepoints]
std::vector<FiniteSubset> left_shift_family(const GroupOracle& g, const FiniteSubset& f,
                                            const std::vector<GroupElement>& basepoints);
/// [F * x for x in basepoints]
std::vector<FiniteSubset> right_shift_family(const GroupOracle& g, const FiniteSubset& f,
                                             const std::vector<GroupElement>& basepoints);

/// F = union over members B of b_B^-1 * B, b_B the least element of B, so that every
/// B lies in b_B * F. Members must be nonempty.
FiniteSubset left_witness(const GroupOracle& g, const std::vector<FiniteSubset>& members);

/// Candidate right translates: F^-1 * (x * e) for each e in E.
struct CoverCertificate {
  GroupElement x;
  std::vector<std::pair<GroupElement, FiniteSubset>> candidates_per_e;
  FiniteSubset intersection;
};
CoverCertificate cover_certificate(const GroupOracle& g, const GroupElement& x,
                                   const FiniteSubset& e, const FiniteSubset& f);

/// Least y with x * E inside F * y, if any.
std::optional<GroupElement> shift_cover_search(const GroupOracle& g, const GroupElement& x,
                                               const FiniteSubset& e, const FiniteSubset& f);

/// First x in `search_space` (in the given order) admitting no y with x * E inside F * y.
std::optional<GroupElement> divergence_search(const GroupOracle& g, const FiniteSubset& e,
                                              const FiniteSubset& f,
                                              const std::vector<GroupElement>& search_space);

/// Canonical BS(1,2) elements (m / 2^j, n) with |m| <= max_numerator, 0 <= j <= max_exponent and
/// |n| <= max_t, sorted.
std::vector<GroupElement> bs12_box(std::int64_t max_numerator, std::int64_t max_exponent,
                                   std::int64_t max_t);
/// Z^n elements with every coordinate in [-radius, radius], sorted.
std::vector<GroupElement> zn_box(std::size_t rank, std::int64_t radius);

// Oracle self-tests.

struct GroupAxiomReport {
  std::size_t trials = 0;
  std::size_t associativity_failures = 0;
  std::size_t identity_failures = 0;
  std::size_t inverse_failures = 0;
  std::size_t canonical_failures = 0;
  bool ok() const {
    return associativity_failures + identity_failures + inverse_failures + canonical_failures == 0;
  }
};
/// Random elements are products of up to `word_length` random generators or inverses.
GroupAxiomReport self_test(const GroupOracle& g, std::size_t trials, std::uint64_t seed,
                           std::size_t word_length = 8);

// Actions on metric windows.

/// Left action of a group on a labelled metric window. `act` returns nullopt when g * x
/// falls outside the window.
struct ActionOracle {
  GroupOracle group;
  ExtMetric space;
  std::function<std::optional<PointIndex>(const GroupElement&, PointIndex)> act;
};

/// Z^n acting by translation on the integer box prod [lo_i, lo_i + extents_i), l1 metric.
/// Point labels are the coordinates.
ActionOracle translation_action(const std::vector<std::size_t>& extents,
                                const std::vector<std::int64_t>& lower_corner);
/// Every element acts as the identity.
ActionOracle trivial_action(const GroupOracle& g, const ExtMetric& space);

struct OrbitPoint {
  GroupElement element;
  std::optional<PointIndex> point;
};
/// g -> g * x0 for each g, with partiality recorded per element.
std::vector<OrbitPoint> orbit_map(const ActionOracle& a, PointIndex x0,
                                  const std::vector<GroupElement>& elements);

struct SvarcMilnorReport {
  /// U = orbit points of the candidates inside the closed ball B(x0, r).
  PointSet orbit_ball;
  std::vector<GroupElement> hits;
  bool boundary_truncated = false;
};
/// All candidates g with g * U meeting U.
SvarcMilnorReport svarc_milnor_finiteness_check(const ActionOracle& a, PointIndex x0, double radius,
                                                const std::vector<GroupElement>& candidates);

/// {f^-1(C) : C in family}, where f maps the points of `domain` into the universe of `family`.
Family pullback_family(const Universe& domain, const std::vector<PointIndex>& f,
                       const Family& family);

}  // namespace coarse
