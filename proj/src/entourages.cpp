#include "coarsekit/entourages.hpp"

#include <algorithm>

namespace coarse {

Entourage::Entourage(Universe universe) : universe_(std::move(universe)) {
  if (!universe_) throw PreconditionError("Entourage: null universe");
  rows_.assign(universe_->size(), PointSet(universe_));
}

Entourage::Entourage(Universe universe, const std::vector<PointPair>& pairs)
    : Entourage(std::move(universe)) {
  for (const auto& [x, y] : pairs) insert(x, y);
}

bool Entourage::contains(PointIndex x, PointIndex y) const {
  return x < rows_.size() && rows_[x].contains(y);
}

void Entourage::insert(PointIndex x, PointIndex y) {
  if (x >= rows_.size()) throw std::out_of_range("Entourage: index outside universe");
  rows_[x].insert(y);
}

std::size_t Entourage::size() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

bool Entourage::empty() const {
  return std::all_of(rows_.begin(), rows_.end(), [](const PointSet& r) { return r.empty(); });
}

std::vector<PointPair> Entourage::pairs() const {
  std::vector<PointPair> out;
  for (PointIndex x = 0; x < rows_.size(); ++x) {
    rows_[x].for_each([&](PointIndex y) { out.emplace_back(x, y); });
  }
  return out;
}

bool Entourage::is_subset_of(const Entourage& other) const {
  require_same_universe(universe_, other.universe_, "Entourage::is_subset_of");
  for (PointIndex x = 0; x < rows_.size(); ++x) {
    if (!rows_[x].is_subset_of(other.rows_[x])) return false;
  }
  return true;
}

bool Entourage::is_reflexive() const {
  for (PointIndex x = 0; x < rows_.size(); ++x) {
    if (!rows_[x].contains(x)) return false;
  }
  return true;
}

bool Entourage::is_symmetric() const { return *this == inverse(*this); }

Entourage& Entourage::operator|=(const Entourage& other) {
  require_same_universe(universe_, other.universe_, "Entourage union");
  for (PointIndex x = 0; x < rows_.size(); ++x) rows_[x] |= other.rows_[x];
  return *this;
}

bool operator==(const Entourage& a, const Entourage& b) {
  return same_universe(a.universe_, b.universe_) && a.rows_ == b.rows_;
}

Entourage diagonal(const Universe& universe) {
  Entourage d(universe);
  for (PointIndex x = 0; x < universe->size(); ++x) d.insert(x, x);
  return d;
}

Entourage inverse(const Entourage& e) {
  Entourage out(e.universe());
  for (PointIndex x = 0; x < e.universe_size(); ++x) {
    e.row(x).for_each([&](PointIndex y) { out.insert(y, x); });
  }
  return out;
}

Entourage compose(const Entourage& first, const Entourage& second) {
  require_same_universe(first.universe(), second.universe(), "compose");
  Entourage out(first.universe());
  for (PointIndex x = 0; x < first.universe_size(); ++x) {
    PointSet reach(first.universe());
    first.row(x).for_each([&](PointIndex z) { reach |= second.row(z); });
    reach.for_each([&](PointIndex y) { out.insert(x, y); });
  }
  return out;
}

Entourage delta_of_family(const Family& family) {
  Entourage out(family.universe());
  for (const auto& b : family) {
    b.for_each([&](PointIndex x) {
      b.for_each([&](PointIndex y) { out.insert(x, y); });
    });
  }
  return out;
}

Entourage reflexive_symmetric_interior(const Entourage& e) {
  Entourage out(e.universe());
  const auto n = e.universe_size();
  for (PointIndex x = 0; x < n; ++x) {
    if (!e.contains(x, x)) continue;
    e.row(x).for_each([&](PointIndex y) {
      if (e.contains(y, y) && e.contains(y, x)) out.insert(x, y);
    });
  }
  return out;
}

namespace {

// Bron-Kerbosch with Tomita pivoting over bitset vertex sets.
void bron_kerbosch(const std::vector<PointSet>& adjacency, PointSet& clique, PointSet candidates,
                   PointSet excluded, std::vector<PointSet>& out) {
  if (candidates.empty() && excluded.empty()) {
    out.push_back(clique);
    return;
  }
  std::size_t best = 0;
  std::optional<PointIndex> pivot;
  (candidates | excluded).for_each([&](PointIndex u) {
    const auto score = (candidates & adjacency[u]).size();
    if (!pivot || score > best) {
      best = score;
      pivot = u;
    }
  });
  const PointSet branch = candidates - adjacency[*pivot];
  branch.for_each([&](PointIndex v) {
    clique.insert(v);
    bron_kerbosch(adjacency, clique, candidates & adjacency[v], excluded & adjacency[v], out);
    clique.erase(v);
    candidates.erase(v);
    excluded.insert(v);
  });
}

}  // namespace

Family maximal_family_of_entourage(const Entourage& e) {
  const auto& u = e.universe();
  const auto n = e.universe_size();
  PointSet vertices(u);
  for (PointIndex x = 0; x < n; ++x) {
    if (e.contains(x, x)) vertices.insert(x);
  }
  std::vector<PointSet> adjacency(n, PointSet(u));
  vertices.for_each([&](PointIndex x) {
    e.row(x).for_each([&](PointIndex y) {
      if (y != x && vertices.contains(y) && e.contains(y, x)) adjacency[x].insert(y);
    });
  });

  std::vector<PointSet> cliques;
  if (vertices.empty()) {
    cliques.emplace_back(u);
  } else {
    PointSet clique(u);
    bron_kerbosch(adjacency, clique, vertices, PointSet(u), cliques);
  }
  std::sort(cliques.begin(), cliques.end());
  return Family(u, std::move(cliques));
}

PointSet image_of_set(const Entourage& e, const PointSet& k) {
  require_same_universe(e.universe(), k.universe(), "image_of_set");
  PointSet out(e.universe());
  for (PointIndex xp = 0; xp < e.universe_size(); ++xp) {
    if (e.row(xp).intersects(k)) out.insert(xp);
  }
  return out;
}

bool lss_to_coarse_witness(const std::vector<Family>& witnesses, const Entourage& e) {
  return std::any_of(witnesses.begin(), witnesses.end(), [&](const Family& b) {
    require_same_universe(b.universe(), e.universe(), "lss_to_coarse_witness");
    return e.is_subset_of(delta_of_family(b));
  });
}

bool coarse_to_lss_witness(const std::vector<Entourage>& witnesses, const Family& family) {
  if (witnesses.empty()) return false;
  const Entourage delta = delta_of_family(family);
  return std::any_of(witnesses.begin(), witnesses.end(), [&](const Entourage& e) {
    require_same_universe(e.universe(), family.universe(), "coarse_to_lss_witness");
    return delta.is_subset_of(e);
  });
}

}  // namespace coarse
