#pragma once

#include "coarsekit/core_sets.hpp"

#include <utility>
#include <vector>

namespace coarse {

using PointPair = std::pair<PointIndex, PointIndex>;

/// A relation on X x X (a candidate controlled set). Stored as one row bitset per point:
/// row(x) = {y : (x, y) in E}. Reflexivity and symmetry are never assumed.
class Entourage {
 public:
  explicit Entourage(Universe universe);
  Entourage(Universe universe, const std::vector<PointPair>& pairs);

  const Universe& universe() const { return universe_; }
  std::size_t universe_size() const { return universe_->size(); }

  bool contains(PointIndex x, PointIndex y) const;
  void insert(PointIndex x, PointIndex y);
  const PointSet& row(PointIndex x) const { return rows_[x]; }

  std::size_t size() const;
  bool empty() const;
  /// Pairs in lexicographic order.
  std::vector<PointPair> pairs() const;

  bool is_subset_of(const Entourage& other) const;
  bool is_reflexive() const;
  bool is_symmetric() const;

  Entourage& operator|=(const Entourage& other);
  friend Entourage operator|(Entourage a, const Entourage& b) { return a |= b; }
  friend bool operator==(const Entourage& a, const Entourage& b);

 private:
  Universe universe_;
  std::vector<PointSet> rows_;
};

Entourage diagonal(const Universe& universe);
Entourage inverse(const Entourage& e);
/// {(x, y) : exists z with (x, z) in first and (z, y) in second}. The first argument is the
/// first leg.
Entourage compose(const Entourage& first, const Entourage& second);

/// Union of the squares B x B over the members of `family`.
Entourage delta_of_family(const Family& family);
/// {(x, y) : (x,x), (y,y), (x,y), (y,x) all in E}; equals E exactly when E is reflexive on
/// its support points and symmetric.
Entourage reflexive_symmetric_interior(const Entourage& e);
/// The inclusion-maximal B with B x B inside E, i.e. the maximal cliques of the graph on
/// {x : (x,x) in E} with x ~ y iff both (x,y) and (y,x) are in E. Sorted canonically.
/// When no point carries a loop the only such B is the empty set, returned as {{}}.
Family maximal_family_of_entourage(const Entourage& e);

/// E[K] = {x' : exists x in K with (x', x) in E}.
PointSet image_of_set(const Entourage& e, const PointSet& k);

/// E is inside Delta(B) for some B in `witnesses`.
bool lss_to_coarse_witness(const std::vector<Family>& witnesses, const Entourage& e);
/// Delta(B) is inside some E in `witnesses`.
bool coarse_to_lss_witness(const std::vector<Entourage>& witnesses, const Family& family);

}  // namespace coarse
