#pragma once

#include <boost/container/small_vector.hpp>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace coarse {

using PointIndex = std::size_t;

/// Raised when two values built over different ground sets meet in one operation.
class UniverseMismatch : public std::invalid_argument {
 public:
  explicit UniverseMismatch(const std::string& where)
      : std::invalid_argument(where + ": operands live on different ground sets") {}
};

/// Raised when an operation's documented precondition does not hold.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A finite indexed universe {0, ..., size-1}, optionally labelled.
class GroundSet {
 public:
  explicit GroundSet(std::size_t size);
  GroundSet(std::size_t size, std::vector<std::string> labels);

  std::size_t size() const { return size_; }
  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(PointIndex x) const;

  friend bool operator==(const GroundSet&, const GroundSet&) = default;

 private:
  std::size_t size_;
  std::vector<std::string> labels_;
};

using Universe = std::shared_ptr<const GroundSet>;

Universe make_universe(std::size_t size);
Universe make_universe(std::vector<std::string> labels);

/// Same ground set: identical object or equal size and labels.
bool same_universe(const Universe& a, const Universe& b);
void require_same_universe(const Universe& a, const Universe& b, const char* where);

/// A subset of a ground set held as a bitset.
class PointSet {
 public:
  explicit PointSet(Universe universe);
  PointSet(Universe universe, std::initializer_list<PointIndex> members);
  PointSet(Universe universe, std::span<const PointIndex> members);

  static PointSet full(Universe universe);
  static PointSet singleton(Universe universe, PointIndex x);

  const Universe& universe() const { return universe_; }
  std::size_t universe_size() const { return universe_->size(); }

  bool contains(PointIndex x) const;
  std::size_t size() const;
  bool empty() const;
  std::optional<PointIndex> first() const;
  std::vector<PointIndex> members() const;

  void insert(PointIndex x);
  void erase(PointIndex x);

  bool intersects(const PointSet& other) const;
  bool is_subset_of(const PointSet& other) const;

  PointSet& operator|=(const PointSet& other);
  PointSet& operator&=(const PointSet& other);
  PointSet& operator-=(const PointSet& other);

  friend PointSet operator|(PointSet a, const PointSet& b) { return a |= b; }
  friend PointSet operator&(PointSet a, const PointSet& b) { return a &= b; }
  friend PointSet operator-(PointSet a, const PointSet& b) { return a -= b; }

  friend bool operator==(const PointSet& a, const PointSet& b);
  /// Lexicographic on sorted member lists; a total order for canonical sorting.
  friend bool operator<(const PointSet& a, const PointSet& b);

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int bit = __builtin_ctzll(bits);
        fn(static_cast<PointIndex>(w * 64 + static_cast<std::size_t>(bit)));
        bits &= bits - 1;
      }
    }
  }

 private:
  void check_index(PointIndex x) const;

  Universe universe_;
  boost::container::small_vector<std::uint64_t, 2> words_;
};

/// A finite list of subsets of one ground set; duplicates and empty members are allowed.
class Family {
 public:
  explicit Family(Universe universe);
  Family(Universe universe, std::vector<PointSet> sets);
  /// Convenience: each inner list becomes a member.
  Family(Universe universe, const std::vector<std::vector<PointIndex>>& sets);

  const Universe& universe() const { return universe_; }
  std::size_t size() const { return sets_.size(); }
  bool empty() const { return sets_.empty(); }
  const PointSet& operator[](std::size_t i) const { return sets_[i]; }
  const std::vector<PointSet>& sets() const { return sets_; }
  auto begin() const { return sets_.begin(); }
  auto end() const { return sets_.end(); }

  void push_back(PointSet set);

  /// Union of all members.
  PointSet support() const;
  /// True iff every point of the ground set lies in some member.
  bool covers() const;

 private:
  Universe universe_;
  std::vector<PointSet> sets_;
};

/// Order-insensitive comparison of the sets of distinct members.
bool same_members(const Family& a, const Family& b);
/// Distinct members in canonical (sorted) order.
std::vector<PointSet> distinct_members(const Family& f);

// Star calculus.

/// Point-to-member incidence of a family, for repeated stars and containment queries.
/// The family must outlive the index.
class MemberIndex {
 public:
  explicit MemberIndex(const Family& family);
  PointSet star(const PointSet& set) const;
  /// `set` lies inside some member; the empty set always does.
  bool contained_in_some(const PointSet& set) const;

 private:
  const Family* family_;
  std::vector<std::vector<std::size_t>> incidence_;
};

/// Union of the members of `cover` meeting `set`. `set` itself is not added.
PointSet star(const PointSet& set, const Family& cover);
/// {star(B, cover) : B in family}, in the order of `family`.
Family star_family(const Family& family, const Family& cover);
/// `family` followed by every singleton of the ground set.
Family trivial_extension(const Family& family);
/// Every member of `fine` lies inside some member of `coarse`.
bool refines(const Family& fine, const Family& coarse);
/// Every member of `fine` with at least two points lies inside some member of `coarse`.
bool refines_mod_singletons(const Family& fine, const Family& coarse);
Family union_families(const Family& a, const Family& b);
/// The single-block family {K}, used as a generator of the discrete structure.
Family discrete_generators(const PointSet& block);

}  // namespace coarse
