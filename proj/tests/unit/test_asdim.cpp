#include "doctest.h"
#include "oracles.hpp"

#include "coarsekit/asdim.hpp"

#include <random>

using namespace coarse;

namespace {

using Matrix = std::vector<std::vector<double>>;

Matrix matrix_of(const ExtMetric& d) {
  Matrix m(d.size(), std::vector<double>(d.size()));
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = 0; j < d.size(); ++j) m[i][j] = d(i, j);
  }
  return m;
}

// Every r-component of every color class has diameter at most `bound`.
bool coloring_ok(const std::vector<std::size_t>& color, const Matrix& d, double r, double bound) {
  std::map<std::size_t, oracle::Set> classes;
  for (std::size_t x = 0; x < color.size(); ++x) classes[color[x]].insert(x);
  for (const auto& [c, pts] : classes) {
    for (const auto& comp : oracle::r_components(pts, d, r)) {
      if (oracle::diameter(comp, d) > bound) return false;
    }
  }
  return true;
}

bool any_coloring_ok(const Matrix& d, double r, std::size_t parts, double bound) {
  const auto n = d.size();
  std::vector<std::size_t> color(n, 0);
  while (true) {
    if (coloring_ok(color, d, r, bound)) return true;
    std::size_t i = 0;
    while (i < n && ++color[i] == parts) color[i++] = 0;
    if (i == n) return false;
  }
}

}  // namespace

TEST_CASE("multiplicity") {
  const auto u = make_universe(6);
  CHECK(multiplicity(Family(u, {{0, 1}, {2}})) == 1);
  CHECK(multiplicity(Family(u)) == 0);
  CHECK(multiplicity(Family(u, {{0, 1}, {1, 2}})) == 2);
  CHECK(multiplicity(ball_family(path_metric(6), 1)) == 3);
}

TEST_CASE("b-components") {
  const auto u = make_universe(3);
  const auto all = PointSet::full(u);
  CHECK(b_components(Family(u), all).classes.size() == 3);
  const Family chain(u, {{0, 1}, {1, 2}});
  CHECK(b_components(chain, all).classes.size() == 1);
  const auto split = b_components(chain, PointSet(u, {0, 2}));
  REQUIRE(split.classes.size() == 2);
  CHECK(split.classes[0] == PointSet(u, {0}));
}

TEST_CASE("b-components coarsen as the family grows") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 4 + trial % 8;
    const auto u = make_universe(n);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    Family small(u);
    for (int m = 0; m < 2; ++m) small.push_back(PointSet(u, {pick(rng), pick(rng)}));
    Family big = small;
    for (int m = 0; m < 2; ++m) big.push_back(PointSet(u, {pick(rng), pick(rng)}));
    const auto all = PointSet::full(u);
    const auto fine = b_components(small, all);
    const auto coarse_classes = b_components(big, all);
    for (const auto& c : fine.classes) {
      bool inside = false;
      for (const auto& c2 : coarse_classes.classes) inside = inside || c.is_subset_of(c2);
      CHECK(inside);
    }
    CHECK(multiplicity(union_families(small, big)) <= multiplicity(small) + multiplicity(big));
  }
}

TEST_CASE("decomposition_check examples") {
  const auto d = path_metric(4);
  const auto u = d.universe();
  const Family singles(u, {{0}, {1}, {2}, {3}});
  CHECK(decomposition_check(Decomposition::from_coloring(u, {0, 1, 2, 3}, 4), singles, singles));
  CHECK_FALSE(decomposition_check(Decomposition::trivial(u), Family(u, {{0, 1}, {1, 2}, {2, 3}}), singles));
  for (std::size_t r : {1u, 2u, 3u}) {
    const auto w = path_metric(4 * r);
    std::vector<std::size_t> color(4 * r);
    for (std::size_t x = 0; x < 4 * r; ++x) color[x] = (x / r) % 2;
    const auto dec = Decomposition::from_coloring(w.universe(), color, 2);
    Family blocks(w.universe());
    for (std::size_t b = 0; b < 4; ++b) {
      PointSet s(w.universe());
      for (std::size_t x = b * r; x < (b + 1) * r; ++x) s.insert(x);
      blocks.push_back(s);
    }
    CHECK(decomposition_check(dec, scale_pair_family(w, static_cast<double>(r)), blocks));
  }
}

TEST_CASE("decompositions must partition the universe") {
  const auto u = make_universe(3);
  CHECK_THROWS(Decomposition(u, {PointSet(u, {0, 1}), PointSet(u, {1, 2})}));
  CHECK_THROWS(Decomposition(u, {PointSet(u, {0})}));
}

TEST_CASE("exact finder examples") {
  const auto d = path_metric(8);
  const auto tiny = find_decomposition_bruteforce(d, 0.5, 0, 0);
  REQUIRE(tiny);
  CHECK(tiny->nonempty_part_count() == 1);
  const auto found = find_decomposition_bruteforce(d, 1, 1, 1);
  REQUIRE(found);
  CHECK(coloring_ok(found->coloring(), matrix_of(d), 1, 1));
  CHECK(decomposition_check(*found, scale_pair_family(d, 1), ball_family(d, 1)));
  // The alternating pairs pattern is another valid answer.
  CHECK(coloring_ok({0, 0, 1, 1, 0, 0, 1, 1}, matrix_of(d), 1, 1));
  CHECK_FALSE(find_decomposition_bruteforce(d, 1, 0, 3));
  CHECK_THROWS(find_decomposition_bruteforce(path_metric(17), 1, 1, 2));
}

TEST_CASE("exact finder agrees with full enumeration on small metrics") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = 2 + trial % 7;
    const auto m = oracle::random_metric(rng, n, 3, 0.45);
    const auto d = oracle::to_metric(make_universe(n), m);
    const double r = 1 + trial % 2;
    const double bound = trial % 4;
    const std::size_t parts = 1 + trial % 3;
    const auto found = find_decomposition_bruteforce(d, r, parts - 1, bound);
    CHECK(found.has_value() == any_coloring_ok(m, r, parts, bound));
    if (found) CHECK(coloring_ok(found->coloring(), m, r, bound));
  }
}

TEST_CASE("1-dimensional bands") {
  for (double r : {1.0, 2.0, 3.0}) {
    const std::size_t n = static_cast<std::size_t>(40 * r);
    const auto d = path_metric(n);
    const auto dec = band_decomposition({n}, 0, r);
    CHECK(dec.nonempty_part_count() == 2);
    CHECK(coloring_ok(dec.coloring(), matrix_of(d), r, 8 * r));
    const auto balls = ball_family(d, r);
    const auto cover = components_to_cover(dec, balls);
    CHECK(multiplicity(cover) <= 2);
    CHECK(refines(balls, cover));
    CHECK(same_part_stars_disjoint(dec, balls));
  }
}

TEST_CASE("2-dimensional bricks") {
  for (double r : {1.0, 2.0}) {
    const std::size_t side = static_cast<std::size_t>(32 * r);
    const auto d = grid_l1_metric({side, side});
    const auto dec = brick_decomposition(2, {side, side}, r);
    CHECK(dec.nonempty_part_count() == 3);
    CHECK(max_component_diameter(dec, d, r) <= 16 * r);
    CHECK(decomposition_check(dec, scale_pair_family(d, r), ball_family(d, 16 * r)));
  }
}

TEST_CASE("brick covers have multiplicity at most 3") {
  const double r = 1;
  const auto d = grid_l1_metric({40, 40});
  const auto dec = brick_decomposition(2, {40, 40}, r);
  const auto balls = ball_family(d, r);
  const auto cover = components_to_cover(dec, balls);
  CHECK(multiplicity(cover) <= 3);
  CHECK(refines(balls, cover));
  CHECK(same_part_stars_disjoint(dec, balls));
}

TEST_CASE("components_to_cover of singletons") {
  const auto u = make_universe(4);
  const Family singles(u, {{0}, {1}, {2}, {3}});
  const auto cover = components_to_cover(Decomposition::from_coloring(u, {0, 1, 2, 3}, 4), singles);
  CHECK(multiplicity(cover) == 1);
  CHECK(same_members(cover, singles));
}

TEST_CASE("components_to_cover refines its ball family after a checked decomposition") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 4 + trial % 6;
    const auto m = oracle::random_metric(rng, n, 2, 0.5);
    const auto d = oracle::to_metric(make_universe(n), m);
    const auto b1 = ball_family(d, 1);
    const auto b2 = star_family(trivial_extension(b1), trivial_extension(b1));
    const auto c = ball_family(d, 6);
    const auto found = find_decomposition_bruteforce(d, 2, 2, 6);
    if (!found || !decomposition_check(*found, b2, c)) continue;
    CHECK(refines(b1, components_to_cover(*found, b1)));
    if (same_part_stars_disjoint(*found, b1)) {
      CHECK(multiplicity(components_to_cover(*found, b1)) <= found->part_count());
    }
  }
}

TEST_CASE("Hurewicz report for the identity and constant maps") {
  const auto d = path_metric(12);
  std::vector<PointIndex> id(12);
  for (PointIndex x = 0; x < 12; ++x) id[x] = x;
  const auto finder = exact_finder(d, 3);
  HurewiczInputs in{.map = id, .dx = d, .dy = d, .scales = {1}, .x_finder = finder,
                    .y_finder = finder, .fiber_finder = finder};
  const auto rep = hurewicz_report(in);
  REQUIRE(rep.size() == 1);
  CHECK(rep[0].n_f == 0u);
  CHECK(rep[0].n_x == rep[0].n_y);
  CHECK(rep[0].inequality_holds);

  const std::vector<PointIndex> constant(12, 0);
  HurewiczInputs in2{.map = constant, .dx = d, .dy = path_metric(1), .scales = {1},
                     .x_finder = finder, .y_finder = exact_finder(path_metric(1), 3),
                     .fiber_finder = finder};
  const auto rep2 = hurewicz_report(in2);
  CHECK(rep2[0].n_y == 0u);
  CHECK(rep2[0].n_x <= rep2[0].n_f);
}

TEST_CASE("Hurewicz report for a projection") {
  const std::size_t rows = 24;
  const std::size_t cols = 24;
  std::vector<PointIndex> proj(rows * cols);
  for (PointIndex p = 0; p < proj.size(); ++p) proj[p] = p / cols;
  HurewiczInputs in{.map = proj, .dx = grid_l1_metric({rows, cols}), .dy = path_metric(rows),
                    .scales = {1, 2}, .x_finder = grid_finder({rows, cols}),
                    .y_finder = grid_finder({rows}), .fiber_finder = grid_finder({rows, cols})};
  for (const auto& s : hurewicz_report(in)) {
    CHECK(s.uniform);
    CHECK(s.n_f == 1u);
    CHECK(s.n_y == 1u);
    CHECK(s.n_x <= 2u);
    CHECK(s.inequality_holds);
  }
}
