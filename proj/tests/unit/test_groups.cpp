#include "doctest.h"
#include "oracles.hpp"

#include "coarsekit/groups.hpp"

#include <random>

using namespace coarse;

namespace {

FiniteSubset parse_all(const GroupOracle& g, std::initializer_list<const char*> texts) {
  std::vector<GroupElement> out;
  for (auto t : texts) out.push_back(g.parse(t));
  return make_subset(out);
}

std::vector<std::string> formats(const GroupOracle& g, const FiniteSubset& s) {
  std::vector<std::string> out;
  for (const auto& e : s) out.push_back(g.format(e));
  return out;
}

GroupOracle klein_table() {
  return GroupOracle::table({{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}});
}

}  // namespace

TEST_CASE("oracle self-tests for every kind") {
  for (const auto& g : {GroupOracle::zn(2), GroupOracle::free_group(2), GroupOracle::bs12(), klein_table()}) {
    const auto rep = self_test(g, 2000, 99);
    CHECK(rep.trials == 2000);
    CHECK(rep.ok());
  }
}

TEST_CASE("BS(1,2) relation and normal forms") {
  const auto g = GroupOracle::bs12();
  const auto a = g.parse("1|0");
  const auto t = g.parse("0|1");
  CHECK(g.multiply_all({t, a, g.invert(t)}) == g.power(a, 2));
  CHECK(g.format(g.multiply(t, a)) == "2|1");
  CHECK(g.format(g.multiply_all({g.invert(t), a, t})) == "1/2^1|0");
  CHECK(g.parse("2/2^1|0") == a);
  CHECK_THROWS(g.parse("1/3|0"));
  CHECK_THROWS(g.parse("7"));
}

TEST_CASE("BS(1,2) multiplication matches affine matrices") {
  const auto g = GroupOracle::bs12();
  std::mt19937_64 rng(41);
  const auto& gens = g.generators();
  auto random_element = [&] {
    std::uniform_int_distribution<int> pick(0, 3);
    auto x = g.identity();
    for (int i = 0; i < 10; ++i) {
      const int k = pick(rng);
      const auto& s = gens[static_cast<std::size_t>(k % 2)];
      x = g.multiply(x, k < 2 ? s : g.invert(s));
    }
    return x;
  };
  for (int trial = 0; trial < 2000; ++trial) {
    const auto x = random_element();
    const auto y = random_element();
    const auto mx = oracle::affine_of(g.format(x));
    const auto my = oracle::affine_of(g.format(y));
    CHECK(oracle::affine_of(g.format(g.multiply(x, y))) == oracle::mat_mul(mx, my));
    CHECK(oracle::affine_of(g.format(g.invert(x))) == oracle::mat_inv(mx));
  }
}

TEST_CASE("shift families") {
  const auto z = GroupOracle::zn(1);
  const auto f = parse_all(z, {"0", "1", "2", "3", "4", "5"});
  const auto fam = left_shift_family(z, f, {z.parse("0"), z.parse("10")});
  REQUIRE(fam.size() == 2);
  CHECK(formats(z, fam[1]) == std::vector<std::string>{"10", "11", "12", "13", "14", "15"});
  const auto id = make_subset({z.identity()});
  const auto singles = left_shift_family(z, id, {z.parse("3"), z.parse("-2")});
  CHECK(singles[0].size() == 1);

  const auto g = GroupOracle::bs12();
  const auto a = g.parse("1|0");
  const auto t = g.parse("0|1");
  const auto one_a = make_subset({g.identity(), a});
  const auto one_t = make_subset({g.identity(), t});
  CHECK(left_translate(g, t, one_a) == parse_all(g, {"0|1", "2|1"}));
  CHECK(right_translate(g, one_t, a) == parse_all(g, {"1|0", "2|1"}));
  CHECK(left_translate(g, a, one_t) == parse_all(g, {"1|0", "1|1"}));
  for (const auto& x : zn_box(1, 4)) CHECK(left_translate(z, x, f) == right_translate(z, f, x));
}

TEST_CASE("left witnesses") {
  const auto z = GroupOracle::zn(1);
  const auto a = parse_all(z, {"0", "1", "2", "3", "4", "5"});
  const auto b = parse_all(z, {"10", "11", "12", "13", "14", "15"});
  CHECK(left_witness(z, {a, b}) == a);
  CHECK(left_witness(z, {parse_all(z, {"4"}), parse_all(z, {"-1"})}) == make_subset({z.identity()}));
  const auto f2 = GroupOracle::free_group(2);
  const auto m = parse_all(f2, {"1", "a", "ab"});
  CHECK(left_witness(f2, {m}) == m);
  CHECK_THROWS(left_witness(z, {FiniteSubset{}}));
}

TEST_CASE("left witness soundness on random members") {
  std::mt19937_64 rng(8);
  for (const auto& g : {GroupOracle::zn(2), GroupOracle::free_group(2), GroupOracle::bs12()}) {
    const auto ball = word_ball(g, 2);
    const std::vector<GroupElement> pool(ball.begin(), ball.end());
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (int trial = 0; trial < 30; ++trial) {
      std::vector<FiniteSubset> members;
      for (int m = 0; m < 3; ++m) {
        const auto base = pool[pick(rng)];
        members.push_back(make_subset({g.multiply(base, pool[pick(rng)]), g.multiply(base, pool[pick(rng)])}));
      }
      const auto f = left_witness(g, members);
      for (const auto& m : members) {
        const auto shifted = left_translate(g, m.front(), f);
        CHECK(std::includes(shifted.begin(), shifted.end(), m.begin(), m.end()));
      }
    }
  }
}

TEST_CASE("shift cover search") {
  const auto z = GroupOracle::zn(2);
  const auto f = word_ball(z, 1);
  const auto e = make_subset({z.identity(), z.parse("1,0")});
  const auto x = z.parse("3,-2");
  CHECK(shift_cover_search(z, x, e, f).has_value());
  const auto id = make_subset({z.identity()});
  CHECK(shift_cover_search(z, x, id, f).has_value());
}

TEST_CASE("left and right shift structures diverge in BS(1,2)") {
  const auto g = GroupOracle::bs12();
  const auto e = make_subset({g.identity(), g.parse("0|1")});
  const auto space = bs12_box(64, 0, 2);
  for (std::size_t k : {1u, 2u}) {
    const auto f = word_ball(g, k);
    const auto x = divergence_search(g, e, f, space);
    REQUIRE(x.has_value());
    CHECK_FALSE(shift_cover_search(g, *x, e, f).has_value());
    // The certificate candidate sets have empty intersection.
    const auto cert = cover_certificate(g, *x, e, f);
    CHECK(cert.intersection.empty());
    // Independent check: no y in a generous window has x * E inside F * y.
    const auto xe = left_translate(g, *x, e);
    for (const auto& y : bs12_box(256, 3, 4)) {
      const auto fy = right_translate(g, f, y);
      CHECK_FALSE(std::includes(fy.begin(), fy.end(), xe.begin(), xe.end()));
    }
  }
}

TEST_CASE("abelian control never diverges") {
  const auto z = GroupOracle::zn(2);
  const auto e = make_subset({z.identity(), z.parse("0,1")});
  for (std::size_t k : {1u, 2u, 3u}) CHECK_FALSE(divergence_search(z, e, word_ball(z, k), zn_box(2, 6)));
  const auto space = zn_box(1, 3);
  const auto z1 = GroupOracle::zn(1);
  const auto whole = make_subset(space);
  CHECK_FALSE(divergence_search(z1, make_subset({z1.identity()}), whole, space));
}

TEST_CASE("word balls have the expected sizes") {
  CHECK(word_ball(GroupOracle::zn(2), 2).size() == 13);
  CHECK(word_ball(GroupOracle::free_group(2), 2).size() == 17);
  CHECK(word_ball(GroupOracle::bs12(), 1).size() == 5);
  CHECK(word_ball(GroupOracle::bs12(), 2).size() == 17);
}

TEST_CASE("translation actions and orbit maps") {
  const auto a = translation_action({21}, {-10});
  const auto& z = a.group;
  const PointIndex x0 = 10;
  const auto orbit = orbit_map(a, x0, {z.identity(), z.parse("3"), z.parse("11")});
  CHECK(orbit[0].point == x0);
  CHECK(orbit[1].point == x0 + 3);
  CHECK_FALSE(orbit[2].point);
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<int> v(-4, 4);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = z.parse(std::to_string(v(rng)));
    const auto h = z.parse(std::to_string(v(rng)));
    const auto hx = a.act(h, x0);
    const auto ghx = a.act(z.multiply(g, h), x0);
    const auto gx = a.act(g, x0);
    REQUIRE(hx);
    REQUIRE(ghx);
    REQUIRE(gx);
    CHECK(a.space(*ghx, *gx) == a.space(*hx, x0));
    CHECK(a.act(g, *hx) == ghx);
  }
}

TEST_CASE("finiteness check for orbit neighbourhoods") {
  const auto a = translation_action({41}, {-20});
  const auto& z = a.group;
  const auto candidates = zn_box(1, 10);
  CHECK(formats(z, make_subset(svarc_milnor_finiteness_check(a, 20, 0, candidates).hits)) ==
        std::vector<std::string>{"0"});
  for (int r : {1, 2, 3}) {
    const auto rep = svarc_milnor_finiteness_check(a, 20, r, candidates);
    CHECK(rep.hits.size() == static_cast<std::size_t>(4 * r + 1));
    CHECK_FALSE(rep.boundary_truncated);
    for (const auto& h : rep.hits) CHECK(std::find(rep.hits.begin(), rep.hits.end(), z.invert(h)) != rep.hits.end());
  }
  const auto trivial = trivial_action(z, path_metric(1));
  CHECK(svarc_milnor_finiteness_check(trivial, 0, 1, candidates).hits.size() == candidates.size());
}

TEST_CASE("pullback families") {
  const auto y = make_universe(3);
  const auto x = make_universe(3);
  const Family c(y, {{0}, {1, 2}});
  CHECK(same_members(pullback_family(x, {0, 1, 2}, c), Family(x, {{0}, {1, 2}})));
  const auto constant = pullback_family(x, {1, 1, 1}, Family(y, {{0}, {1}, {2}}));
  CHECK(same_members(constant, Family(x, {{}, {0, 1, 2}, {}})));
  // Projection of a 4 x 5 window onto its rows: preimages of 1-balls are strips of at most 3 rows.
  const auto grid = make_universe(20);
  std::vector<PointIndex> proj(20);
  for (PointIndex p = 0; p < 20; ++p) proj[p] = p / 5;
  for (const auto& m : pullback_family(grid, proj, ball_family(path_metric(4), 1))) {
    CHECK(m.size() <= 15);
    CHECK(m.size() % 5 == 0);
  }
}

TEST_CASE("finite table groups") {
  CHECK_THROWS(GroupOracle::table({{0, 1}, {0, 1}}));
  const auto g = klein_table();
  CHECK(g.format(g.multiply(g.parse("1"), g.parse("2"))) == "3");
  CHECK(word_ball(g, 2).size() == 4);
}
