#include "doctest.h"
#include "oracles.hpp"

#include "coarsekit/higson.hpp"

#include <cmath>
#include <random>

using namespace coarse;

namespace {

Family blocks(const Universe& u, std::size_t length) {
  Family f(u);
  for (std::size_t a = 0; a < u->size(); a += length) {
    PointSet b(u);
    for (std::size_t x = a; x < a + length && x < u->size(); ++x) b.insert(x);
    f.push_back(b);
  }
  return f;
}

Family intervals(const Universe& u, std::size_t length) {
  Family f(u);
  for (std::size_t a = 0; a < u->size(); ++a) {
    PointSet b(u);
    for (std::size_t x = a; x <= a + length && x < u->size(); ++x) b.insert(x);
    f.push_back(b);
  }
  return f;
}

PointSet random_set(std::mt19937_64& rng, const Universe& u, double p) {
  std::bernoulli_distribution coin(p);
  PointSet s(u);
  for (std::size_t x = 0; x < u->size(); ++x) {
    if (coin(rng)) s.insert(x);
  }
  return s;
}

Family random_family(std::mt19937_64& rng, const Universe& u, int members) {
  Family f(u);
  for (int m = 0; m < members; ++m) f.push_back(random_set(rng, u, 0.3));
  return f;
}

// Naive range of f over one member minus U.
double block_range(const RealFunction& f, const oracle::Set& b, const oracle::Set& u) {
  double lo = INFINITY;
  double hi = -INFINITY;
  for (auto x : b) {
    if (u.count(x)) continue;
    lo = std::min(lo, f[x]);
    hi = std::max(hi, f[x]);
  }
  return hi > lo ? hi - lo : 0;
}

}  // namespace

TEST_CASE("bounded sets") {
  const auto d = disjoint_union({path_metric(4), path_metric(3)});
  const auto u = d.universe();
  CHECK(is_bounded_set(PointSet(u, {5}), d));
  CHECK_FALSE(is_bounded_set(PointSet(u, {0, 5}), d));
  CHECK(is_bounded_set(PointSet(u, {0, 1, 3}), d));
}

TEST_CASE("proper family examples") {
  const auto d = disjoint_union({path_metric(4), path_metric(3)});
  const auto u = d.universe();
  const Family singles(u, {{0}, {1}, {2}, {3}, {4}, {5}, {6}});
  CHECK(proper_family_check(singles, {PointSet(u, {0, 1})}, d).proper);
  const auto bad = proper_family_check(Family(u, {{3, 4}}), {PointSet(u, {3})}, d);
  CHECK_FALSE(bad.proper);
  REQUIRE(bad.violating_set);
  CHECK(*bad.violating_set == PointSet(u, {3}));
  CHECK_THROWS(proper_family_check(singles, {PointSet(u, {0, 4})}, d));
}

TEST_CASE("growing members escape a star bound") {
  // Member k is [k^2, (k+1)^2]; stars of [0, m] grow without bound along the window.
  const auto d = path_metric(50);
  const auto u = d.universe();
  Family f(u);
  for (std::size_t k = 0; (k + 1) * (k + 1) < 50; ++k) {
    PointSet b(u);
    for (std::size_t x = k * k; x <= (k + 1) * (k + 1); ++x) b.insert(x);
    f.push_back(b);
  }
  std::vector<PointSet> ks;
  for (std::size_t m = 1; m < 40; m += 5) {
    PointSet k(u);
    for (std::size_t x = 0; x <= m; ++x) k.insert(x);
    ks.push_back(k);
  }
  const auto rep = proper_family_check(f, ks, d, 30);
  CHECK_FALSE(rep.proper);
  REQUIRE(rep.violating_set);
  CHECK(diameter(star(*rep.violating_set, f), d) > 30);
  for (std::size_t i = 1; i < rep.star_diameters.size(); ++i) {
    CHECK(rep.star_diameters[i] >= rep.star_diameters[i - 1]);
  }
}

TEST_CASE("properness is antitone in the family and in K") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    const auto d = path_metric(10);
    const auto u = d.universe();
    const auto f = random_family(rng, u, 4);
    auto k = random_set(rng, u, 0.3);
    const double bound = 6;
    const auto full = proper_family_check(f, {k}, d, bound);
    if (!full.proper) continue;
    Family fewer(u, std::vector<PointSet>(f.begin(), f.begin() + 2));
    CHECK(proper_family_check(fewer, {k}, d, bound).proper);
    if (auto first = k.first()) CHECK(proper_family_check(f, {PointSet(u, {*first})}, d, bound).proper);
  }
}

TEST_CASE("the literal star inclusion has a two-point counterexample") {
  const auto u = make_universe(2);
  const Family b1(u, std::vector<std::vector<PointIndex>>{{0}});
  const Family b2(u, {{0, 1}});
  const PointSet k(u, {1});
  CHECK_FALSE(star_proper_inclusion_check(b1, b2, k));
  CHECK(star_of_star_identity_check(b1, b2, k));
  const auto four = make_universe(4);
  CHECK_FALSE(star_proper_inclusion_check(Family(four, {{1, 2}}), Family(four, {{0, 1}, {2, 3}}),
                                          PointSet(four, {0})));
}

TEST_CASE("star inclusion special cases") {
  const auto u = make_universe(5);
  const Family b(u, {{0, 1}, {1, 2}, {3}});
  CHECK(star_proper_inclusion_check(b, b, PointSet(u)));
  CHECK(star_of_star_identity_check(b, b, PointSet(u)));
  CHECK(star_proper_inclusion_check(b, b, PointSet(u, {0})));
}

TEST_CASE("star of star identity against the naive oracle") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 500; ++trial) {
    const auto u = make_universe(2 + trial % 11);
    const auto b1 = random_family(rng, u, 3);
    const auto b2 = random_family(rng, u, 3);
    const auto k = random_set(rng, u, 0.25);
    const auto ob1 = oracle::to_fam(b1);
    const auto ob2 = oracle::to_fam(b2);
    const auto ok = oracle::to_set(k);
    const auto lhs = oracle::star(ok, oracle::star_family(ob1, ob2));
    const auto rhs = oracle::star(oracle::star(oracle::star(ok, ob2), ob1), ob2);
    CHECK(star_of_star_identity_check(b1, b2, k) == (lhs == rhs));
    CHECK(lhs == rhs);
    auto literal = oracle::star(oracle::star(ok, ob1), ob2);
    const auto other = oracle::star(oracle::star(ok, ob2), ob1);
    literal.insert(other.begin(), other.end());
    CHECK(star_proper_inclusion_check(b1, b2, k) == oracle::subset(lhs, literal));
  }
}

TEST_CASE("delta image bridge") {
  const auto u = make_universe(3);
  CHECK(delta_image_bridge_check(Family(u, {{1, 2}}), PointSet(u)));
  CHECK(delta_image_bridge_check(Family(u, {{1, 2}}), PointSet(u, {1})));
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 200; ++trial) {
    const auto w = make_universe(2 + trial % 11);
    CHECK(delta_image_bridge_check(random_family(rng, w, 4), random_set(rng, w, 0.3)));
  }
}

TEST_CASE("higson defect examples") {
  const auto u = make_universe(10);
  RealFunction f(10);
  for (std::size_t x = 0; x < 10; ++x) f[x] = static_cast<double>(x);
  const auto pairs = blocks(u, 2);
  CHECK(higson_defect(f, pairs, PointSet(u)) == 1);
  CHECK(higson_defect(f, pairs, PointSet::full(u)) == 0);
  CHECK(higson_defect(RealFunction(10, 3.5), pairs, PointSet(u)) == 0);
  CHECK_THROWS(higson_defect(RealFunction(9, 0), pairs, PointSet(u)));
}

TEST_CASE("higson defect matches the naive oracle and is monotone") {
  std::mt19937_64 rng(43);
  std::normal_distribution<double> value(0, 1);
  for (int trial = 0; trial < 100; ++trial) {
    const auto u = make_universe(3 + trial % 10);
    RealFunction f(u->size());
    for (auto& v : f) v = value(rng);
    const auto fam = random_family(rng, u, 4);
    const auto small = random_set(rng, u, 0.3);
    const auto large = small | random_set(rng, u, 0.3);
    double expect = 0;
    for (const auto& b : oracle::to_fam(fam)) expect = std::max(expect, block_range(f, b, oracle::to_set(small)));
    CHECK(higson_defect(f, fam, small) == expect);
    CHECK(higson_defect(f, fam, large) <= higson_defect(f, fam, small));
  }
}

TEST_CASE("exhaustions") {
  const auto u = make_universe(10);
  const auto ex = prefix_exhaustion(u, 3);
  REQUIRE(ex.size() == 3);
  CHECK(ex.stages()[2].size() == 9);
  CHECK(prefix_exhaustion(u, 5, true).size() == 2);
  CHECK_THROWS(Exhaustion({PointSet(u, {0, 1}), PointSet(u, {1})}));
}

TEST_CASE("minimal truncation") {
  const auto u = make_universe(20);
  const auto f = builtin_function("linear", 20);
  const auto ex = prefix_exhaustion(u, 2);
  CHECK(minimal_truncation(f, blocks(u, 2), 100, ex) == 0u);
  CHECK_FALSE(minimal_truncation(f, blocks(u, 2), 0.5, ex));
  // Strict comparison: a defect equal to eps does not count.
  CHECK_FALSE(minimal_truncation(f, blocks(u, 2), 1, ex));
}

TEST_CASE("log1p settles on a large window while sin does not") {
  const std::size_t n = 10001;
  const auto u = make_universe(n);
  // Stages cover at most half the window, so the tail beyond every stage stays large.
  const auto all = prefix_exhaustion(u, 100);
  const Exhaustion ex(std::vector<PointSet>(all.stages().begin(), all.stages().begin() + all.size() / 2));
  const auto log_stage = minimal_truncation(builtin_function("log1p", n), intervals(u, 10), 0.01, ex);
  REQUIRE(log_stage);
  // The defect of [a, a + 10] is log((a + 11) / (a + 1)), below 0.01 once a > 999.
  const auto& kept = ex.stages()[*log_stage];
  CHECK(kept.size() >= 990);
  CHECK(kept.size() <= 1100);
  CHECK_FALSE(minimal_truncation(builtin_function("sin", n), intervals(u, 1), 0.1, ex));
}

TEST_CASE("the three-quarter star bound on constructed instances") {
  const std::size_t n = 400;
  const auto u = make_universe(n);
  const auto f = builtin_function("log1p", n);
  const auto b1 = blocks(u, 3);
  const auto b2 = intervals(u, 2);
  const double eps = 0.02;
  for (std::size_t m : {0u, 50u, 120u, 300u}) {
    PointSet k(u);
    for (std::size_t x = 0; x < m; ++x) k.insert(x);
    const auto rep = higson_star_bound_check(f, b1, b2, k, eps);
    // Naive replay.
    const auto ob1 = oracle::to_fam(b1);
    const auto ob2 = oracle::to_fam(b2);
    const auto ok = oracle::to_set(k);
    double d1 = 0;
    double d2 = 0;
    for (const auto& b : ob1) d1 = std::max(d1, block_range(f, b, ok));
    for (const auto& b : ob2) d2 = std::max(d2, block_range(f, b, ok));
    auto l = oracle::star(oracle::star(ok, ob1), ob2);
    l.insert(ok.begin(), ok.end());
    double ds = 0;
    for (const auto& b : oracle::star_family(ob1, ob2)) ds = std::max(ds, block_range(f, b, l));
    CHECK(rep.defect_b1 == d1);
    CHECK(rep.defect_b2 == d2);
    CHECK(rep.defect_star == ds);
    CHECK(oracle::to_set(rep.truncation) == l);
    CHECK(rep.hypothesis == (d1 < eps / 4 && d2 < eps / 4));
    if (rep.hypothesis) CHECK(ds < 3 * eps / 4);
    CHECK(rep.bound == (ds < 3 * eps / 4));
  }
}

TEST_CASE("the star bound replays on random functions") {
  std::mt19937_64 rng(47);
  std::uniform_real_distribution<double> jitter(-1, 1);
  std::size_t hypotheses = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto u = make_universe(12);
    RealFunction f(12);
    for (std::size_t x = 0; x < 12; ++x) f[x] = jitter(rng) * (x < 6 ? 1.0 : 0.001);
    const auto b1 = random_family(rng, u, 3);
    const auto b2 = random_family(rng, u, 3);
    PointSet k(u, {0, 1, 2, 3, 4, 5});
    const auto rep = higson_star_bound_check(f, b1, b2, k, 0.02);
    if (rep.hypothesis) {
      ++hypotheses;
      CHECK(rep.bound);
    }
  }
  CHECK(hypotheses > 0);
}

TEST_CASE("builtin functions") {
  CHECK(builtin_function("linear", 3, 2, 1) == RealFunction{1, 3, 5});
  CHECK(builtin_function("log1p", 2)[1] == std::log1p(1.0));
  CHECK_THROWS(builtin_function("cube", 3));
}
