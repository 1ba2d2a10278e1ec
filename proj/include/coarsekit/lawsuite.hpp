#pragma once

#include "coarsekit/core_sets.hpp"
#include "coarsekit/entourages.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace coarse {

/// Deliberate implementation faults used to check that the suite can catch them.
enum class Mutation {
  None,
  /// delta_star_composition composes (E2 o E1) o E1 instead of (E2 o E1) o E2.
  WrongFinalLeg,
};

/// Plain-data law instance; everything a law needs, reindexable by the shrinker.
struct LawInstance {
  std::size_t universe_size = 0;
  std::vector<std::vector<PointIndex>> b1;
  std::vector<std::vector<PointIndex>> b2;
  std::vector<PointIndex> k;
  /// Pairs added to Delta(B1), Delta(B2) for superset hypotheses.
  std::vector<PointPair> extra1, extra2;
  /// Pairs removed from Delta(B1), Delta(B2) for subset hypotheses.
  std::vector<PointPair> removed1, removed2;
  /// Row-major metric for metric laws; empty means the path metric 0 - 1 - ... - (n-1).
  std::vector<double> metric;

  friend bool operator==(const LawInstance&, const LawInstance&) = default;
};

struct CaseSpec {
  std::uint64_t seed = 1;
  std::size_t min_universe = 2;
  std::size_t max_universe = 12;
  /// Members per family.
  std::size_t min_members = 0;
  std::size_t max_members = 4;
  std::size_t min_member_size = 1;
  std::size_t max_member_size = 4;
  std::size_t trials = 500;
  Mutation mutation = Mutation::None;
};

/// Every family of at most `max_members` members (with repetition, empty members allowed)
/// of size at most `max_member_size`, on every universe of 1 ... `max_universe` points.
/// B1 ranges over representatives of its orbit under point permutations; B2 and K range
/// over everything. Delta hypotheses use E_i = Delta(B_i) exactly, which by monotonicity
/// of composition is the extreme case of each inclusion law.
struct ExhaustiveSpec {
  std::size_t max_universe = 5;
  std::size_t max_members = 3;
  std::size_t max_member_size = 3;
  Mutation mutation = Mutation::None;
};

struct LawReport {
  std::string law_id;
  std::string statement;
  std::size_t trials = 0;
  std::size_t failures = 0;
  /// Instances where an inequality law is attained with equality.
  std::size_t tight = 0;
  /// First failing instance, shrunk.
  std::optional<LawInstance> counterexample;
  bool passed() const { return failures == 0; }
};

struct LawInfo {
  std::string id;
  std::string statement;
};
const std::vector<LawInfo>& known_laws();
std::vector<std::string> all_law_ids();

/// True iff the law holds on the instance. Throws PreconditionError for an unknown id.
bool law_holds(const std::string& law_id, const LawInstance& instance,
               Mutation mutation = Mutation::None);

/// Greedy shrinking: drop points (reindexing), members, member points, K points and
/// perturbation pairs while the law still fails.
LawInstance shrink_counterexample(const std::string& law_id, LawInstance failing,
                                  Mutation mutation = Mutation::None);

/// Seeded random trials; identical specs give identical reports.
std::vector<LawReport> run_laws(const CaseSpec& spec, const std::vector<std::string>& law_ids);
std::vector<LawReport> run_laws_exhaustive(const ExhaustiveSpec& spec,
                                           const std::vector<std::string>& law_ids);

// Reproducible draws.

/// Uniform integer in [lo, hi] by rejection on raw 64-bit outputs, so that draws do not
/// depend on the standard library's distribution implementation.
std::uint64_t draw_uniform(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi);
/// `count` distinct points of {0, ..., n-1} by a partial Fisher-Yates shuffle, sorted.
std::vector<PointIndex> draw_without_replacement(std::mt19937_64& rng, std::size_t n,
                                                 std::size_t count);
/// Member count uniform in [min_members, max_members]; each member's size uniform in
/// [min_size, min(max_size, n)], points drawn without replacement.
std::vector<std::vector<PointIndex>> draw_family(std::mt19937_64& rng, std::size_t n,
                                                 std::size_t min_members, std::size_t max_members,
                                                 std::size_t min_size, std::size_t max_size);

// Generated structures.

/// Layer 1 = {e(B) : B a seed}; layer i+1 = {e(U u V u St(U, V)) : U, V in layer i}. Each
/// family is normalised to its distinct inclusion-maximal members plus all singletons,
/// which leaves refinement unchanged, and families refining (mod singletons) another
/// family of the same layer are dropped. depth must be in 1 ... 6.
std::vector<std::vector<Family>> generated_closure(const std::vector<Family>& seeds,
                                                   std::size_t depth);

/// 1-based depth of the first layer containing a family that `candidate` refines mod
/// singletons: "member by depth k". nullopt: not found by the closure's depth.
std::optional<std::size_t> generated_membership(const std::vector<std::vector<Family>>& layers,
                                                const Family& candidate);

}  // namespace coarse
