#include "coarsekit/core_sets.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace coarse {

namespace {

std::size_t word_count(std::size_t n) { return (n + 63) / 64; }

}  // namespace

GroundSet::GroundSet(std::size_t size) : size_(size) {}

GroundSet::GroundSet(std::size_t size, std::vector<std::string> labels)
    : size_(size), labels_(std::move(labels)) {
  if (labels_.size() != size_) {
    throw PreconditionError("GroundSet: label count " + std::to_string(labels_.size()) +
                            " does not match size " + std::to_string(size_));
  }
  std::unordered_set<std::string> seen;
  for (const auto& l : labels_) {
    if (!seen.insert(l).second) {
      throw PreconditionError("GroundSet: duplicate label '" + l + "'");
    }
  }
}

std::string GroundSet::label(PointIndex x) const {
  if (x >= size_) throw std::out_of_range("GroundSet::label: index out of range");
  return labels_.empty() ? std::to_string(x) : labels_[x];
}

Universe make_universe(std::size_t size) { return std::make_shared<const GroundSet>(size); }

Universe make_universe(std::vector<std::string> labels) {
  const auto n = labels.size();
  return std::make_shared<const GroundSet>(n, std::move(labels));
}

bool same_universe(const Universe& a, const Universe& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

void require_same_universe(const Universe& a, const Universe& b, const char* where) {
  if (!same_universe(a, b)) throw UniverseMismatch(where);
}

// PointSet

PointSet::PointSet(Universe universe) : universe_(std::move(universe)) {
  if (!universe_) throw PreconditionError("PointSet: null universe");
  words_.assign(word_count(universe_->size()), 0);
}

PointSet::PointSet(Universe universe, std::initializer_list<PointIndex> members)
    : PointSet(std::move(universe)) {
  for (auto x : members) insert(x);
}

PointSet::PointSet(Universe universe, std::span<const PointIndex> members)
    : PointSet(std::move(universe)) {
  for (auto x : members) insert(x);
}

PointSet PointSet::full(Universe universe) {
  PointSet s(std::move(universe));
  const auto n = s.universe_size();
  for (std::size_t w = 0; w < s.words_.size(); ++w) s.words_[w] = ~std::uint64_t{0};
  if (n % 64 != 0) s.words_.back() = (std::uint64_t{1} << (n % 64)) - 1;
  return s;
}

PointSet PointSet::singleton(Universe universe, PointIndex x) {
  PointSet s(std::move(universe));
  s.insert(x);
  return s;
}

void PointSet::check_index(PointIndex x) const {
  if (x >= universe_->size()) {
    throw std::out_of_range("PointSet: index " + std::to_string(x) + " outside universe of size " +
                            std::to_string(universe_->size()));
  }
}

bool PointSet::contains(PointIndex x) const {
  if (x >= universe_->size()) return false;
  return (words_[x / 64] >> (x % 64)) & 1U;
}

std::size_t PointSet::size() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(__builtin_popcountll(w));
  return n;
}

bool PointSet::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
}

std::optional<PointIndex> PointSet::first() const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) return w * 64 + static_cast<std::size_t>(__builtin_ctzll(words_[w]));
  }
  return std::nullopt;
}

std::vector<PointIndex> PointSet::members() const {
  std::vector<PointIndex> out;
  for_each([&](PointIndex x) { out.push_back(x); });
  return out;
}

void PointSet::insert(PointIndex x) {
  check_index(x);
  words_[x / 64] |= std::uint64_t{1} << (x % 64);
}

void PointSet::erase(PointIndex x) {
  check_index(x);
  words_[x / 64] &= ~(std::uint64_t{1} << (x % 64));
}

bool PointSet::intersects(const PointSet& other) const {
  require_same_universe(universe_, other.universe_, "PointSet::intersects");
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & other.words_[w]) != 0) return true;
  }
  return false;
}

bool PointSet::is_subset_of(const PointSet& other) const {
  require_same_universe(universe_, other.universe_, "PointSet::is_subset_of");
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  }
  return true;
}

PointSet& PointSet::operator|=(const PointSet& other) {
  require_same_universe(universe_, other.universe_, "PointSet union");
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

PointSet& PointSet::operator&=(const PointSet& other) {
  require_same_universe(universe_, other.universe_, "PointSet intersection");
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

PointSet& PointSet::operator-=(const PointSet& other) {
  require_same_universe(universe_, other.universe_, "PointSet difference");
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
  return *this;
}

bool operator==(const PointSet& a, const PointSet& b) {
  return same_universe(a.universe_, b.universe_) &&
         std::equal(a.words_.begin(), a.words_.end(), b.words_.begin(), b.words_.end());
}

bool operator<(const PointSet& a, const PointSet& b) {
  const auto ma = a.members();
  const auto mb = b.members();
  return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
}

// Family

Family::Family(Universe universe) : universe_(std::move(universe)) {
  if (!universe_) throw PreconditionError("Family: null universe");
}

Family::Family(Universe universe, std::vector<PointSet> sets) : Family(std::move(universe)) {
  sets_.reserve(sets.size());
  for (auto& s : sets) push_back(std::move(s));
}

Family::Family(Universe universe, const std::vector<std::vector<PointIndex>>& sets)
    : Family(std::move(universe)) {
  sets_.reserve(sets.size());
  for (const auto& s : sets) sets_.emplace_back(universe_, std::span<const PointIndex>(s));
}

void Family::push_back(PointSet set) {
  require_same_universe(universe_, set.universe(), "Family::push_back");
  sets_.push_back(std::move(set));
}

PointSet Family::support() const {
  PointSet out(universe_);
  for (const auto& s : sets_) out |= s;
  return out;
}

bool Family::covers() const { return support() == PointSet::full(universe_); }

std::vector<PointSet> distinct_members(const Family& f) {
  std::vector<PointSet> out(f.begin(), f.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool same_members(const Family& a, const Family& b) {
  if (!same_universe(a.universe(), b.universe())) return false;
  return distinct_members(a) == distinct_members(b);
}

// Star calculus

MemberIndex::MemberIndex(const Family& family)
    : family_(&family), incidence_(family.universe()->size()) {
  for (std::size_t i = 0; i < family.size(); ++i) {
    family[i].for_each([&](PointIndex x) { incidence_[x].push_back(i); });
  }
}

PointSet MemberIndex::star(const PointSet& set) const {
  require_same_universe(set.universe(), family_->universe(), "star");
  PointSet out(set.universe());
  std::vector<bool> used(family_->size(), false);
  set.for_each([&](PointIndex x) {
    for (auto i : incidence_[x]) {
      if (!used[i]) {
        used[i] = true;
        out |= (*family_)[i];
      }
    }
  });
  return out;
}

bool MemberIndex::contained_in_some(const PointSet& set) const {
  require_same_universe(set.universe(), family_->universe(), "refines");
  const auto x = set.first();
  if (!x) return true;
  const auto& candidates = incidence_[*x];
  return std::any_of(candidates.begin(), candidates.end(),
                     [&](std::size_t i) { return set.is_subset_of((*family_)[i]); });
}

PointSet star(const PointSet& set, const Family& cover) {
  require_same_universe(set.universe(), cover.universe(), "star");
  PointSet out(set.universe());
  for (const auto& member : cover) {
    if (member.intersects(set)) out |= member;
  }
  return out;
}

Family star_family(const Family& family, const Family& cover) {
  require_same_universe(family.universe(), cover.universe(), "star_family");
  const MemberIndex index(cover);
  Family out(family.universe());
  for (const auto& b : family) out.push_back(index.star(b));
  return out;
}

Family trivial_extension(const Family& family) {
  Family out = family;
  const auto n = family.universe()->size();
  for (PointIndex x = 0; x < n; ++x) out.push_back(PointSet::singleton(family.universe(), x));
  return out;
}

bool refines(const Family& fine, const Family& coarse) {
  require_same_universe(fine.universe(), coarse.universe(), "refines");
  const MemberIndex index(coarse);
  return std::all_of(fine.begin(), fine.end(),
                     [&](const PointSet& s) { return index.contained_in_some(s); });
}

bool refines_mod_singletons(const Family& fine, const Family& coarse) {
  require_same_universe(fine.universe(), coarse.universe(), "refines_mod_singletons");
  const MemberIndex index(coarse);
  return std::all_of(fine.begin(), fine.end(), [&](const PointSet& s) {
    return s.size() < 2 || index.contained_in_some(s);
  });
}

Family union_families(const Family& a, const Family& b) {
  require_same_universe(a.universe(), b.universe(), "union_families");
  Family out = a;
  for (const auto& s : b) out.push_back(s);
  return out;
}

Family discrete_generators(const PointSet& block) {
  Family out(block.universe());
  out.push_back(block);
  return out;
}

}  // namespace coarse
