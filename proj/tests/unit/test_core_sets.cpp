#include "doctest.h"
#include "oracles.hpp"

#include "coarsekit/core_sets.hpp"

#include <random>

using namespace coarse;

namespace {

Family fam(const Universe& u, std::vector<std::vector<PointIndex>> sets) { return Family(u, sets); }

std::vector<std::vector<PointIndex>> random_lists(std::mt19937_64& rng, std::size_t n,
                                                  std::size_t members) {
  std::uniform_int_distribution<std::size_t> count(0, members);
  std::uniform_int_distribution<int> coin(0, 2);
  std::vector<std::vector<PointIndex>> out(count(rng));
  for (auto& b : out) {
    for (std::size_t x = 0; x < n; ++x) {
      if (coin(rng) == 0) b.push_back(x);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("ground sets validate labels") {
  CHECK(make_universe(3)->size() == 3);
  CHECK_THROWS_AS(make_universe(std::vector<std::string>{"a", "a"}), std::invalid_argument);
  const auto u = make_universe(std::vector<std::string>{"p", "q"});
  CHECK(u->label(1) == "q");
  CHECK(make_universe(0)->size() == 0);
}

TEST_CASE("point sets reject foreign indices and universes") {
  const auto u = make_universe(3);
  CHECK_THROWS(PointSet(u, {3}));
  const auto v = make_universe(4);
  CHECK_THROWS_AS((void)(PointSet(u, {0}) | PointSet(v, {1})), UniverseMismatch);
  // Universes compare by content.
  CHECK(same_universe(u, make_universe(3)));
  CHECK_FALSE(same_universe(u, make_universe(std::vector<std::string>{"a", "b", "c"})));
}

TEST_CASE("point set algebra crosses the word boundary") {
  const auto u = make_universe(130);
  PointSet a(u, {0, 63, 64, 129});
  PointSet b(u, {63, 64, 100});
  CHECK((a & b).members() == std::vector<PointIndex>{63, 64});
  CHECK((a - b).members() == std::vector<PointIndex>{0, 129});
  CHECK((a | b).size() == 5);
  CHECK(a.intersects(b));
  CHECK(PointSet(u, {63}).is_subset_of(a));
}

TEST_CASE("star examples") {
  const auto u = make_universe(6);
  CHECK(star(PointSet(u, {1, 2}), fam(u, {{2, 3}, {4, 5}})) == PointSet(u, {2, 3}));
  CHECK(star(PointSet(u), fam(u, {{0, 1}})).empty());
  CHECK(star(PointSet(u, {0}), fam(u, {{1, 2}})).empty());
}

TEST_CASE("star keeps only the members it meets") {
  // B is added to its star only when some member covers it.
  const auto u = make_universe(6);
  const auto s = star(PointSet(u, {1, 2}), fam(u, {{2, 3}, {4, 5}}));
  CHECK(!s.contains(1));
}

TEST_CASE("star_family examples") {
  const auto u = make_universe(4);
  CHECK(same_members(star_family(fam(u, {{0, 1}}), fam(u, {{1, 2}, {3}})), fam(u, {{1, 2}})));
  CHECK(star_family(Family(u), fam(u, {{0}})).empty());
  CHECK(same_members(star_family(fam(u, {{0}}), fam(u, {{0}, {0, 1}})), fam(u, {{0, 1}})));
}

TEST_CASE("trivial extension") {
  const auto u = make_universe(3);
  CHECK(same_members(trivial_extension(fam(u, {{1, 2}})), fam(u, {{1, 2}, {0}, {1}, {2}})));
  const auto one = make_universe(1);
  CHECK(same_members(trivial_extension(Family(one)), fam(one, {{0}})));
  const auto twice = trivial_extension(trivial_extension(fam(u, {{1, 2}})));
  CHECK(distinct_members(twice).size() == 4);
}

TEST_CASE("refinement examples") {
  const auto u = make_universe(4);
  const Family none(u);
  CHECK(refines(fam(u, {{0}, {1, 2}}), fam(u, {{0, 1, 2}})));
  CHECK_FALSE(refines(fam(u, {{0, 3}}), fam(u, {{0, 1}, {2, 3}})));
  CHECK(refines(none, none));
  CHECK(refines(fam(u, {{}}), none));
  const auto six = make_universe(6);
  CHECK(refines_mod_singletons(fam(six, {{0}, {5}}), Family(six)));
  CHECK(refines_mod_singletons(fam(u, {{0, 1}}), fam(u, {{0, 1, 2}})));
  CHECK_FALSE(refines_mod_singletons(fam(u, {{0, 1}, {2, 3}}), fam(u, {{0, 1}})));
}

TEST_CASE("union and discrete generators") {
  const auto u = make_universe(3);
  CHECK(same_members(union_families(fam(u, {{0}}), fam(u, {{1}})), fam(u, {{0}, {1}})));
  CHECK(same_members(union_families(fam(u, {{0, 1}}), Family(u)), fam(u, {{0, 1}})));
  CHECK(same_members(discrete_generators(PointSet(u, {0, 1})), fam(u, {{0, 1}})));
  const auto empty = discrete_generators(PointSet(u));
  REQUIRE(empty.size() == 1);
  CHECK(empty[0].empty());
  CHECK_THROWS_AS(union_families(fam(u, {{0}}), fam(make_universe(5), {{0}})), UniverseMismatch);
}

TEST_CASE("stars agree with the naive oracle on random instances") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 1 + trial % 12;
    const auto u = make_universe(n);
    const auto b = random_lists(rng, n, 4);
    const auto c = random_lists(rng, n, 4);
    const auto fb = Family(u, b);
    const auto fc = Family(u, c);
    const auto ob = oracle::to_fam(fb);
    const auto oc = oracle::to_fam(fc);
    CHECK(oracle::to_fam(star_family(fb, fc)) == oracle::star_family(ob, oc));
    CHECK(refines(fb, fc) == oracle::refines(ob, oc));
    for (const auto& m : fb) CHECK(oracle::to_set(star(m, fc)) == oracle::star(oracle::to_set(m), oc));
  }
}

TEST_CASE("star monotonicity and refinement properties") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + trial % 10;
    const auto u = make_universe(n);
    const Family b(u, random_lists(rng, n, 3));
    const Family c(u, random_lists(rng, n, 3));
    const Family d(u, random_lists(rng, n, 3));
    const auto bc = union_families(b, c);
    PointSet k(u);
    for (std::size_t x = 0; x < n; x += 2) k.insert(x);
    // Monotone in the cover.
    CHECK(star(k, b).is_subset_of(star(k, bc)));
    // Monotone in the set.
    CHECK(star(k, b).is_subset_of(star(PointSet::full(u), b)));
    // A member lies in its own star unless empty.
    for (const auto& m : b) CHECK(m.is_subset_of(star(m, b)));
    // Refinement is reflexive and transitive.
    CHECK(refines(b, b));
    if (refines(b, c) && refines(c, d)) CHECK(refines(b, d));
    if (refines(b, c)) CHECK(star(k, b).is_subset_of(star(k, c)));
    CHECK(same_members(union_families(b, c), union_families(c, b)));
    CHECK(same_members(union_families(union_families(b, c), d), union_families(b, union_families(c, d))));
    // union_families(B1, B2) refines star_family(e(B1), e(B2)).
    CHECK(refines(bc, star_family(trivial_extension(b), trivial_extension(c))));
  }
}
