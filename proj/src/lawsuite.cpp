#include "coarsekit/lawsuite.hpp"

#include "coarsekit/higson.hpp"
#include "coarsekit/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>

namespace coarse {

// Reproducible draws

std::uint64_t draw_uniform(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
  if (lo > hi) throw PreconditionError("draw_uniform: empty range");
  const std::uint64_t span = hi - lo;
  if (span == std::numeric_limits<std::uint64_t>::max()) return rng();
  const std::uint64_t range = span + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return lo + v % range;
}

std::vector<PointIndex> draw_without_replacement(std::mt19937_64& rng, std::size_t n,
                                                 std::size_t count) {
  if (count > n) throw PreconditionError("draw_without_replacement: count exceeds population");
  std::vector<PointIndex> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  for (std::size_t i = 0; i < count; ++i) {
    std::swap(pool[i], pool[draw_uniform(rng, i, n - 1)]);
  }
  pool.resize(count);
  std::sort(pool.begin(), pool.end());
  return pool;
}

std::vector<std::vector<PointIndex>> draw_family(std::mt19937_64& rng, std::size_t n,
                                                 std::size_t min_members, std::size_t max_members,
                                                 std::size_t min_size, std::size_t max_size) {
  const auto members = draw_uniform(rng, min_members, std::max(min_members, max_members));
  const auto hi = std::min(max_size, n);
  const auto lo = std::min(min_size, hi);
  std::vector<std::vector<PointIndex>> out;
  for (std::uint64_t i = 0; i < members; ++i) {
    out.push_back(draw_without_replacement(rng, n, draw_uniform(rng, lo, hi)));
  }
  return out;
}

namespace {

std::vector<PointPair> square_pairs(const std::vector<std::vector<PointIndex>>& family) {
  std::vector<PointPair> out;
  for (const auto& b : family) {
    for (auto x : b) {
      for (auto y : b) out.emplace_back(x, y);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Law evaluation context built once per instance.

struct Prepared {
  Universe u;
  Family b1, b2;
  PointSet k;
  Entourage e1_super, e2_super, e1_sub, e2_sub;
  ExtMetric d;
  bool metric_valid;

  Prepared(Universe universe, Family f1, Family f2, PointSet kk, ExtMetric metric, bool valid)
      : u(universe),
        b1(std::move(f1)),
        b2(std::move(f2)),
        k(std::move(kk)),
        e1_super(delta_of_family(b1)),
        e2_super(delta_of_family(b2)),
        e1_sub(e1_super),
        e2_sub(e2_super),
        d(std::move(metric)),
        metric_valid(valid) {}
};

Family to_family(const Universe& u, const std::vector<std::vector<PointIndex>>& sets) {
  return Family(u, sets);
}

Entourage minus(const Entourage& e, const std::vector<PointPair>& removed) {
  Entourage out(e.universe());
  for (const auto& [x, y] : e.pairs()) {
    if (std::find(removed.begin(), removed.end(), PointPair{x, y}) == removed.end()) out.insert(x, y);
  }
  return out;
}

Prepared prepare(const LawInstance& in) {
  const auto u = make_universe(in.universe_size);
  auto check = [&](PointIndex x) {
    if (x >= in.universe_size) throw PreconditionError("law instance: point outside universe");
  };
  for (const auto* fam : {&in.b1, &in.b2}) {
    for (const auto& b : *fam) std::for_each(b.begin(), b.end(), check);
  }
  std::for_each(in.k.begin(), in.k.end(), check);
  for (const auto* pairs : {&in.extra1, &in.extra2, &in.removed1, &in.removed2}) {
    for (const auto& [x, y] : *pairs) {
      check(x);
      check(y);
    }
  }
  bool valid = true;
  ExtMetric d = path_metric(in.universe_size);
  if (!in.metric.empty()) {
    d = ExtMetric::dense(u, in.metric);
    valid = !find_metric_violation(d).has_value();
  } else {
    d = ExtMetric::from_kernel(u, [](PointIndex x, PointIndex y) {
      return static_cast<double>(x > y ? x - y : y - x);
    });
  }
  Prepared p(u, to_family(u, in.b1), to_family(u, in.b2),
             PointSet(u, std::span<const PointIndex>(in.k)), std::move(d), valid);
  for (const auto& [x, y] : in.extra1) p.e1_super.insert(x, y);
  for (const auto& [x, y] : in.extra2) p.e2_super.insert(x, y);
  p.e1_sub = minus(p.e1_sub, in.removed1);
  p.e2_sub = minus(p.e2_sub, in.removed2);
  return p;
}

struct Outcome {
  bool holds = true;
  bool tight = false;
};

struct Law {
  LawInfo info;
  bool uses_b2;
  bool uses_k;
  bool uses_metric;
  std::function<Outcome(const Prepared&, Mutation)> eval;
};

Outcome delta_star_composition(const Prepared& p, Mutation m) {
  const auto& last = m == Mutation::WrongFinalLeg ? p.e1_super : p.e2_super;
  const auto rhs = compose(compose(p.e2_super, p.e1_super), last);
  return {delta_of_family(star_family(p.b1, p.b2)).is_subset_of(rhs)};
}

Outcome composition_in_star_delta(const Prepared& p, Mutation) {
  const auto rhs = delta_of_family(star_family(p.b2, union_families(p.b1, p.b2)));
  return {compose(p.e1_sub, p.e2_sub).is_subset_of(rhs)};
}

Outcome delta_image_is_star(const Prepared& p, Mutation) {
  return {delta_image_bridge_check(p.b1, p.k)};
}

Outcome union_refines_star(const Prepared& p, Mutation) {
  return {refines(union_families(p.b1, p.b2),
                  star_family(trivial_extension(p.b1), trivial_extension(p.b2)))};
}

Outcome star_diameter_bound(const Prepared& p, Mutation) {
  if (!p.metric_valid) return {};
  const double m1 = max_member_diameter(p.b1, p.d);
  const double m2 = max_member_diameter(p.b2, p.d);
  const double bound = 2 * m2 + m1;
  const double achieved = max_member_diameter(star_family(p.b1, p.b2), p.d);
  if (std::isinf(bound)) return {};
  return {achieved <= bound, achieved == bound};
}

Outcome star_of_proper_inclusion(const Prepared& p, Mutation) {
  return {star_proper_inclusion_check(p.b1, p.b2, p.k)};
}

Outcome star_of_star_identity(const Prepared& p, Mutation) {
  return {star_of_star_identity_check(p.b1, p.b2, p.k)};
}

Outcome generated_closure_layers(const Prepared& p, Mutation) {
  const auto layers = generated_closure({p.b1, p.b2}, 3);
  auto in_layer = [](const Family& f, const std::vector<Family>& layer) {
    return std::any_of(layer.begin(), layer.end(),
                       [&](const Family& g) { return refines_mod_singletons(f, g); });
  };
  const auto merged = union_families(union_families(p.b1, p.b2), star_family(p.b1, p.b2));
  if (!in_layer(merged, layers[1])) return {false};
  for (std::size_t i = 0; i + 1 < layers.size(); ++i) {
    for (const auto& f : layers[i]) {
      if (!in_layer(f, layers[i + 1])) return {false};
    }
  }
  return {};
}

Outcome chain_metrization(const Prepared& p, Mutation) {
  constexpr std::size_t depth = 6;
  const auto chain = generate_chain(p.b1, depth);
  const auto d = metrize(chain);
  if (find_metric_violation(d, 0)) return {false};
  const auto n = d.size();
  for (PointIndex x = 0; x < n; ++x) {
    for (PointIndex y = 0; y < n; ++y) {
      for (PointIndex z = 0; z < n; ++z) {
        const double rhs = std::max(d(x, y), d(y, z)) + 1;
        if (!std::isinf(rhs) && d(x, z) > rhs) return {false};
      }
    }
  }
  return {chain_metric_equivalence(chain, d).all_pass()};
}

const std::vector<Law>& registry() {
  static const std::vector<Law> laws = {
      {{"delta_star_composition",
        "Delta(St(B1,B2)) is inside (E2 o E1) o E2 whenever E1 contains Delta(B1) and E2 "
        "contains Delta(B2)"},
       true, false, false, delta_star_composition},
      {{"composition_in_star_delta",
        "E1 o E2 is inside Delta(St(B2, B1 u B2)) whenever E1 is inside Delta(B1) and E2 is "
        "inside Delta(B2)"},
       true, false, false, composition_in_star_delta},
      {{"delta_image_is_star", "Delta(B)[K] = St(K, B)"}, false, true, false, delta_image_is_star},
      {{"union_refines_star", "B1 u B2 refines St(e(B1), e(B2))"}, true, false, false,
       union_refines_star},
      {{"star_diameter_bound",
        "members of St(B1,B2) have diameter at most 2 M2 + M1 when members of B_i have "
        "diameter at most M_i"},
       true, false, true, star_diameter_bound},
      {{"star_of_proper_inclusion",
        "St(K, St(B1,B2)) is inside St(St(K,B1),B2) u St(St(K,B2),B1)"},
       true, true, false, star_of_proper_inclusion},
      {{"star_of_star_identity", "St(K, St(B1,B2)) = St(St(St(K,B2),B1),B2)"}, true, true, false,
       star_of_star_identity},
      {{"generated_closure_layers",
        "B1 u B2 u St(B1,B2) is a member of the generated structure by depth 2, and every "
        "closure layer refines mod singletons into the next"},
       true, false, false, generated_closure_layers},
      {{"chain_metrization",
        "metrize(generate_chain(B, 6)) is an oo-metric with d(x,z) <= max(d(x,y), d(y,z)) + 1 "
        "whose balls and chain levels refine each other"},
       false, false, false, chain_metrization},
  };
  return laws;
}

const Law& find_law(const std::string& id) {
  for (const auto& law : registry()) {
    if (law.info.id == id) return law;
  }
  throw PreconditionError("unknown law id '" + id + "'");
}

std::size_t law_index(const std::string& id) {
  const auto& laws = registry();
  for (std::size_t i = 0; i < laws.size(); ++i) {
    if (laws[i].info.id == id) return i;
  }
  throw PreconditionError("unknown law id '" + id + "'");
}

// Shrinking

void drop_index(std::vector<std::vector<PointIndex>>& family, PointIndex p) {
  for (auto& b : family) {
    std::vector<PointIndex> kept;
    for (auto x : b) {
      if (x != p) kept.push_back(x > p ? x - 1 : x);
    }
    b = std::move(kept);
  }
}

void drop_index(std::vector<PointPair>& pairs, PointIndex p) {
  std::vector<PointPair> kept;
  for (auto [x, y] : pairs) {
    if (x == p || y == p) continue;
    kept.emplace_back(x > p ? x - 1 : x, y > p ? y - 1 : y);
  }
  pairs = std::move(kept);
}

LawInstance without_point(const LawInstance& in, PointIndex p) {
  LawInstance out = in;
  out.universe_size = in.universe_size - 1;
  drop_index(out.b1, p);
  drop_index(out.b2, p);
  std::vector<std::vector<PointIndex>> k{in.k};
  drop_index(k, p);
  out.k = k.front();
  for (auto* pairs : {&out.extra1, &out.extra2, &out.removed1, &out.removed2}) drop_index(*pairs, p);
  if (!in.metric.empty()) {
    const auto n = in.universe_size;
    out.metric.clear();
    for (PointIndex x = 0; x < n; ++x) {
      for (PointIndex y = 0; y < n; ++y) {
        if (x != p && y != p) out.metric.push_back(in.metric[x * n + y]);
      }
    }
  }
  return out;
}

std::vector<LawInstance> shrink_candidates(const LawInstance& in) {
  std::vector<LawInstance> out;
  for (PointIndex p = in.universe_size; p-- > 0;) out.push_back(without_point(in, p));
  for (auto fam : {&LawInstance::b1, &LawInstance::b2}) {
    for (std::size_t i = (in.*fam).size(); i-- > 0;) {
      auto c = in;
      (c.*fam).erase((c.*fam).begin() + static_cast<std::ptrdiff_t>(i));
      out.push_back(std::move(c));
    }
  }
  for (auto fam : {&LawInstance::b1, &LawInstance::b2}) {
    for (std::size_t i = 0; i < (in.*fam).size(); ++i) {
      for (std::size_t j = (in.*fam)[i].size(); j-- > 0;) {
        auto c = in;
        auto& member = (c.*fam)[i];
        member.erase(member.begin() + static_cast<std::ptrdiff_t>(j));
        out.push_back(std::move(c));
      }
    }
  }
  for (std::size_t j = in.k.size(); j-- > 0;) {
    auto c = in;
    c.k.erase(c.k.begin() + static_cast<std::ptrdiff_t>(j));
    out.push_back(std::move(c));
  }
  for (auto pairs : {&LawInstance::extra1, &LawInstance::extra2, &LawInstance::removed1,
                     &LawInstance::removed2}) {
    for (std::size_t j = (in.*pairs).size(); j-- > 0;) {
      auto c = in;
      (c.*pairs).erase((c.*pairs).begin() + static_cast<std::ptrdiff_t>(j));
      out.push_back(std::move(c));
    }
  }
  return out;
}

// Random instances

LawInstance draw_instance(std::mt19937_64& rng, const CaseSpec& spec, bool metric) {
  LawInstance in;
  const auto n = static_cast<std::size_t>(
      draw_uniform(rng, spec.min_universe, std::max(spec.min_universe, spec.max_universe)));
  in.universe_size = n;
  in.b1 = draw_family(rng, n, spec.min_members, spec.max_members, spec.min_member_size,
                      spec.max_member_size);
  in.b2 = draw_family(rng, n, spec.min_members, spec.max_members, spec.min_member_size,
                      spec.max_member_size);
  in.k = draw_without_replacement(rng, n, draw_uniform(rng, 0, n));
  if (n > 0) {
    for (auto* extra : {&in.extra1, &in.extra2}) {
      const auto count = draw_uniform(rng, 0, 3);
      for (std::uint64_t i = 0; i < count; ++i) {
        const auto x = draw_uniform(rng, 0, n - 1);
        extra->emplace_back(x, draw_uniform(rng, 0, n - 1));
      }
    }
  }
  for (auto [fam, removed] : {std::pair{&in.b1, &in.removed1}, std::pair{&in.b2, &in.removed2}}) {
    const auto pairs = square_pairs(*fam);
    for (auto idx : draw_without_replacement(rng, pairs.size(), draw_uniform(rng, 0, pairs.size()))) {
      removed->push_back(pairs[idx]);
    }
  }
  if (!metric || n == 0) return in;
  if (draw_uniform(rng, 0, 2) == 0) {
    // Collinear configuration on the path metric: an interval flanked by two intervals that
    // touch its endpoints, where the star bound is attained.
    const auto m1 = draw_uniform(rng, 0, n - 1);
    const auto m2 = draw_uniform(rng, 0, (n - 1 - m1) / 2);
    const auto a = draw_uniform(rng, m2, n - 1 - m1 - m2);
    auto interval = [](std::uint64_t lo, std::uint64_t hi) {
      std::vector<PointIndex> v;
      for (auto x = lo; x <= hi; ++x) v.push_back(x);
      return v;
    };
    in.b1 = {interval(a, a + m1)};
    in.b2 = {interval(a - m2, a), interval(a + m1, a + m1 + m2)};
    return in;
  }
  const auto u = make_universe(n);
  std::vector<WeightedEdge> edges;
  for (PointIndex x = 0; x < n; ++x) {
    for (PointIndex y = x + 1; y < n; ++y) {
      if (draw_uniform(rng, 0, 2) == 0) {
        edges.push_back({x, y, static_cast<double>(draw_uniform(rng, 1, 4))});
      }
    }
  }
  in.metric = shortest_path_metric(u, edges).matrix();
  return in;
}

// Exhaustive enumeration

using Mask = std::uint32_t;

std::vector<std::vector<Mask>> all_families(std::size_t n, std::size_t max_members,
                                            std::size_t max_member_size) {
  std::vector<Mask> subsets;
  for (Mask m = 0; m < (Mask{1} << n); ++m) {
    if (static_cast<std::size_t>(__builtin_popcount(m)) <= max_member_size) subsets.push_back(m);
  }
  std::vector<std::vector<Mask>> out{{}};
  std::vector<std::vector<std::size_t>> frontier{{}};
  for (std::size_t size = 1; size <= max_members; ++size) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& idx : frontier) {
      for (std::size_t s = idx.empty() ? 0 : idx.back(); s < subsets.size(); ++s) {
        auto grown = idx;
        grown.push_back(s);
        std::vector<Mask> fam;
        for (auto i : grown) fam.push_back(subsets[i]);
        out.push_back(std::move(fam));
        next.push_back(std::move(grown));
      }
    }
    frontier = std::move(next);
  }
  return out;
}

bool is_orbit_representative(const std::vector<Mask>& family, std::size_t n) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Mask> image(family.size());
  while (std::next_permutation(perm.begin(), perm.end())) {
    for (std::size_t i = 0; i < family.size(); ++i) {
      Mask m = 0;
      for (std::size_t x = 0; x < n; ++x) {
        if (family[i] >> x & 1U) m |= Mask{1} << perm[x];
      }
      image[i] = m;
    }
    std::sort(image.begin(), image.end());
    if (image < family) return false;
  }
  return true;
}

std::vector<std::vector<PointIndex>> unpack(const std::vector<Mask>& family) {
  std::vector<std::vector<PointIndex>> out;
  for (auto m : family) {
    std::vector<PointIndex> b;
    for (PointIndex x = 0; x < 32; ++x) {
      if (m >> x & 1U) b.push_back(x);
    }
    out.push_back(std::move(b));
  }
  return out;
}

std::vector<PointIndex> unpack_mask(Mask m) { return unpack({m}).front(); }

}  // namespace

const std::vector<LawInfo>& known_laws() {
  static const std::vector<LawInfo> infos = [] {
    std::vector<LawInfo> v;
    for (const auto& law : registry()) v.push_back(law.info);
    return v;
  }();
  return infos;
}

std::vector<std::string> all_law_ids() {
  std::vector<std::string> ids;
  for (const auto& law : registry()) ids.push_back(law.info.id);
  return ids;
}

bool law_holds(const std::string& law_id, const LawInstance& instance, Mutation mutation) {
  return find_law(law_id).eval(prepare(instance), mutation).holds;
}

LawInstance shrink_counterexample(const std::string& law_id, LawInstance failing, Mutation mutation) {
  const auto& law = find_law(law_id);
  bool progress = true;
  while (progress) {
    progress = false;
    for (auto& candidate : shrink_candidates(failing)) {
      if (!law.eval(prepare(candidate), mutation).holds) {
        failing = std::move(candidate);
        progress = true;
        break;
      }
    }
  }
  return failing;
}

std::vector<LawReport> run_laws(const CaseSpec& spec, const std::vector<std::string>& law_ids) {
  if (spec.min_universe > spec.max_universe || spec.max_universe > 64) {
    throw PreconditionError("CaseSpec: universe sizes must satisfy min <= max <= 64");
  }
  std::vector<LawReport> reports;
  for (const auto& id : law_ids) {
    const auto& law = find_law(id);
    std::seed_seq seq{static_cast<std::uint32_t>(spec.seed), static_cast<std::uint32_t>(spec.seed >> 32),
                      static_cast<std::uint32_t>(law_index(id))};
    std::mt19937_64 rng(seq);
    LawReport report;
    report.law_id = id;
    report.statement = law.info.statement;
    for (std::size_t t = 0; t < spec.trials; ++t) {
      auto instance = draw_instance(rng, spec, law.uses_metric);
      const auto outcome = law.eval(prepare(instance), spec.mutation);
      ++report.trials;
      if (outcome.tight) ++report.tight;
      if (!outcome.holds) {
        ++report.failures;
        if (!report.counterexample) {
          report.counterexample = shrink_counterexample(id, std::move(instance), spec.mutation);
        }
      }
    }
    reports.push_back(std::move(report));
  }
  return reports;
}

std::vector<LawReport> run_laws_exhaustive(const ExhaustiveSpec& spec,
                                           const std::vector<std::string>& law_ids) {
  if (spec.max_universe > 8) throw PreconditionError("ExhaustiveSpec: at most 8 points");
  std::vector<const Law*> laws;
  std::vector<LawReport> reports;
  for (const auto& id : law_ids) {
    laws.push_back(&find_law(id));
    reports.emplace_back();
    reports.back().law_id = id;
    reports.back().statement = laws.back()->info.statement;
  }
  std::vector<LawInstance> first_failure(laws.size());
  auto record = [&](std::size_t li, const Outcome& o, const auto& make_instance) {
    ++reports[li].trials;
    if (o.tight) ++reports[li].tight;
    if (!o.holds) {
      if (reports[li].failures++ == 0) first_failure[li] = make_instance();
    }
  };
  for (std::size_t n = 1; n <= spec.max_universe; ++n) {
    const auto u = make_universe(n);
    const auto families = all_families(n, spec.max_members, spec.max_member_size);
    const auto d = path_metric(n);
    const auto path = ExtMetric::from_kernel(u, [&d](PointIndex x, PointIndex y) { return d(x, y); });
    std::vector<Family> built;
    for (const auto& f : families) built.emplace_back(u, unpack(f));
    for (std::size_t i1 = 0; i1 < families.size(); ++i1) {
      if (!is_orbit_representative(families[i1], n)) continue;
      for (std::size_t i2 = 0; i2 < families.size(); ++i2) {
        Prepared p(u, built[i1], built[i2], PointSet(u), path, true);
        auto instance = [&](Mask k) {
          return [&, k] {
            LawInstance in;
            in.universe_size = n;
            in.b1 = unpack(families[i1]);
            in.b2 = unpack(families[i2]);
            in.k = unpack_mask(k);
            return in;
          };
        };
        for (std::size_t li = 0; li < laws.size(); ++li) {
          const auto& law = *laws[li];
          if (!law.uses_b2 && i2 != 0) continue;
          if (!law.uses_k) {
            p.k = PointSet(u);
            record(li, law.eval(p, spec.mutation), instance(0));
            continue;
          }
          for (Mask k = 0; k < (Mask{1} << n); ++k) {
            p.k = PointSet(u, std::span<const PointIndex>(unpack_mask(k)));
            record(li, law.eval(p, spec.mutation), instance(k));
          }
        }
      }
    }
  }
  for (std::size_t li = 0; li < laws.size(); ++li) {
    if (reports[li].failures > 0) {
      reports[li].counterexample =
          shrink_counterexample(reports[li].law_id, first_failure[li], spec.mutation);
    }
  }
  return reports;
}

// Generated structures

namespace {

Family normalise(const Family& f) {
  auto members = distinct_members(trivial_extension(f));
  std::vector<PointSet> maximal;
  for (std::size_t i = 0; i < members.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < members.size() && !dominated; ++j) {
      dominated = j != i && members[i].is_subset_of(members[j]) && !(members[i] == members[j]);
    }
    if (!dominated) maximal.push_back(members[i]);
  }
  return Family(f.universe(), std::move(maximal));
}

void add_pruned(std::vector<Family>& layer, Family candidate) {
  for (const auto& kept : layer) {
    if (refines_mod_singletons(candidate, kept)) return;
  }
  std::erase_if(layer, [&](const Family& kept) { return refines_mod_singletons(kept, candidate); });
  layer.push_back(std::move(candidate));
}

}  // namespace

std::vector<std::vector<Family>> generated_closure(const std::vector<Family>& seeds, std::size_t depth) {
  if (depth == 0 || depth > 6) throw PreconditionError("generated_closure: depth must be in 1..6");
  if (seeds.empty()) throw PreconditionError("generated_closure: at least one seed is required");
  for (const auto& s : seeds) require_same_universe(seeds.front().universe(), s.universe(), "generated_closure");
  std::vector<std::vector<Family>> layers(1);
  for (const auto& s : seeds) add_pruned(layers[0], normalise(s));
  while (layers.size() < depth) {
    const auto& prev = layers.back();
    std::vector<Family> next;
    for (const auto& a : prev) {
      for (const auto& b : prev) {
        add_pruned(next, normalise(union_families(union_families(a, b), star_family(a, b))));
      }
    }
    layers.push_back(std::move(next));
  }
  return layers;
}

std::optional<std::size_t> generated_membership(const std::vector<std::vector<Family>>& layers,
                                                const Family& candidate) {
  for (std::size_t i = 0; i < layers.size(); ++i) {
    for (const auto& f : layers[i]) {
      if (refines_mod_singletons(candidate, f)) return i + 1;
    }
  }
  return std::nullopt;
}

}  // namespace coarse
