#include "coarsekit/cli.hpp"

#include "coarsekit/io.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

namespace coarse::cli {

using io::json;
using io::require;
using io::SchemaError;

namespace {

struct Options {
  std::string input;
  std::string output;
  std::uint64_t seed = 1;
  std::size_t depth = 6;
  std::vector<double> scales;
  double eps = 0.1;
  std::string mode;
  std::string direction;
  std::string action;
  std::string laws = "all";
  std::string mutation = "none";
  std::size_t trials = 500;
  std::size_t max_universe = 12;
  std::size_t dim = 1;
  double bound = 0;
};

struct Result {
  json report;
  int code = kExitOk;
};

json load_input(const Options& opt, bool required) {
  if (opt.input.empty()) {
    if (required) throw SchemaError("--input is required for this subcommand");
    return json::object();
  }
  std::stringstream buffer;
  if (opt.input == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(opt.input);
    if (!in) throw SchemaError("cannot read input file '" + opt.input + "'");
    buffer << in.rdbuf();
  }
  try {
    auto j = json::parse(buffer.str());
    if (!j.is_object()) throw SchemaError("input must be a JSON object");
    return j;
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("invalid JSON: ") + e.what());
  }
}

double single_scale(const Options& opt) {
  if (opt.scales.size() != 1) throw SchemaError("exactly one --scale is required");
  if (!(opt.scales[0] > 0) || std::isinf(opt.scales[0])) throw SchemaError("--scale must be positive");
  return opt.scales[0];
}

Universe universe_of(const json& in) {
  if (in.contains("ground_set")) return io::read_ground_set(in.at("ground_set"));
  if (in.contains("metric")) return io::read_metric(in.at("metric")).universe();
  throw SchemaError("missing required field 'ground_set'");
}

ExtMetric metric_of(const json& in) {
  if (in.contains("metric")) return io::read_metric(in.at("metric"));
  if (in.contains("window")) {
    std::vector<std::size_t> extents;
    for (const auto& e : in.at("window")) {
      if (!e.is_number_integer() || e.get<std::int64_t>() <= 0) {
        throw SchemaError("window: extents must be positive integers");
      }
      extents.push_back(e.get<std::size_t>());
    }
    if (extents.empty()) throw SchemaError("window: at least one extent is required");
    return grid_l1_metric(extents);
  }
  throw SchemaError("missing required field 'metric' or 'window'");
}

std::vector<std::size_t> extents_of(const json& j, const std::string& where) {
  std::vector<std::size_t> extents;
  if (!j.is_array() || j.empty()) throw SchemaError(where + ": expected an array of extents");
  for (const auto& e : j) {
    if (!e.is_number_integer() || e.get<std::int64_t>() <= 0) {
      throw SchemaError(where + ": extents must be positive integers");
    }
    extents.push_back(e.get<std::size_t>());
  }
  return extents;
}

// convert

Result cmd_convert(const Options& opt) {
  const auto in = load_input(opt, true);
  const auto u = universe_of(in);
  std::string direction = opt.direction;
  if (direction.empty()) direction = in.contains("family") ? "family-to-entourage" : "entourage-to-family";
  Result r;
  r.report["ground_set"] = io::to_json(u);
  if (direction == "family-to-entourage") {
    const auto family = io::read_family(require(in, "family"), u);
    const auto e = delta_of_family(family);
    Family nonempty(u);
    for (const auto& b : family) {
      if (!b.empty()) nonempty.push_back(b);
    }
    r.report["entourage"] = io::to_json(e);
    r.report["diagnostics"] = {
        {"pairs", e.size()},
        {"family_refines_maximal_family", refines(nonempty, maximal_family_of_entourage(e))},
        {"reflexive_symmetric_interior_identity",
         delta_of_family(maximal_family_of_entourage(e)) == reflexive_symmetric_interior(e)}};
  } else if (direction == "entourage-to-family") {
    const auto e = io::read_entourage(require(in, "entourage"), u);
    const auto family = maximal_family_of_entourage(e);
    const auto back = delta_of_family(family);
    const auto interior = reflexive_symmetric_interior(e);
    r.report["family"] = io::to_json(family);
    r.report["diagnostics"] = {{"reflexive", e.is_reflexive()},
                               {"symmetric", e.is_symmetric()},
                               {"interior", io::to_json(interior)},
                               {"reflexive_symmetric_interior_identity", back == interior},
                               {"round_trip_exact", back == e}};
  } else {
    throw SchemaError("--direction must be family-to-entourage or entourage-to-family");
  }
  return r;
}

// verify

Mutation mutation_of(const std::string& name) {
  if (name == "none") return Mutation::None;
  if (name == "wrong-final-leg") return Mutation::WrongFinalLeg;
  throw SchemaError("--mutation must be none or wrong-final-leg");
}

std::vector<std::string> law_list(const std::string& laws) {
  if (laws == "all") return all_law_ids();
  std::vector<std::string> ids;
  std::stringstream ss(laws);
  std::string id;
  const auto known = all_law_ids();
  while (std::getline(ss, id, ',')) {
    if (id.empty()) continue;
    if (std::find(known.begin(), known.end(), id) == known.end()) {
      throw SchemaError("unknown law id '" + id + "'");
    }
    ids.push_back(id);
  }
  return ids;
}

Result cmd_verify(const Options& opt) {
  const auto in = load_input(opt, false);
  const auto ids = law_list(opt.laws);
  const auto mutation = mutation_of(opt.mutation);
  const std::string mode = opt.mode.empty() ? "random" : opt.mode;
  std::vector<LawReport> reports;
  Result r;
  r.report["mode"] = mode;
  r.report["mutation"] = opt.mutation;
  if (mode == "random") {
    CaseSpec spec;
    spec.seed = opt.seed;
    spec.trials = opt.trials;
    spec.max_universe = opt.max_universe;
    spec.mutation = mutation;
    if (in.contains("case")) {
      const auto& c = in.at("case");
      spec.min_universe = c.value("min_universe", spec.min_universe);
      spec.max_universe = c.value("max_universe", spec.max_universe);
      spec.min_members = c.value("min_members", spec.min_members);
      spec.max_members = c.value("max_members", spec.max_members);
      spec.min_member_size = c.value("min_member_size", spec.min_member_size);
      spec.max_member_size = c.value("max_member_size", spec.max_member_size);
    }
    if (spec.min_universe > spec.max_universe || spec.max_universe > 64) {
      throw SchemaError("universe sizes must satisfy min <= max <= 64");
    }
    r.report["seed"] = opt.seed;
    reports = run_laws(spec, ids);
  } else if (mode == "exhaustive") {
    ExhaustiveSpec spec;
    spec.mutation = mutation;
    spec.max_universe = std::min<std::size_t>(opt.max_universe, 5);
    if (in.contains("case")) {
      const auto& c = in.at("case");
      spec.max_universe = c.value("max_universe", spec.max_universe);
      spec.max_members = c.value("max_members", spec.max_members);
      spec.max_member_size = c.value("max_member_size", spec.max_member_size);
    }
    if (spec.max_universe > 8) throw SchemaError("exhaustive mode supports at most 8 points");
    reports = run_laws_exhaustive(spec, ids);
  } else {
    throw SchemaError("--mode must be random or exhaustive");
  }
  json laws = json::array();
  bool all_pass = true;
  for (const auto& rep : reports) {
    laws.push_back(io::to_json(rep));
    all_pass = all_pass && rep.passed();
  }
  r.report["laws"] = laws;
  r.report["all_pass"] = all_pass;
  r.code = all_pass ? kExitOk : kExitFailed;
  return r;
}

// metrize

Result cmd_metrize(const Options& opt) {
  if (opt.depth == 0) throw SchemaError("--depth must be at least 1");
  const auto in = load_input(opt, true);
  const auto u = universe_of(in);
  const auto seed = io::read_family(require(in, "seed"), u);
  const auto chain = generate_chain(seed, opt.depth);
  const auto d = metrize(chain);
  const auto eq = chain_metric_equivalence(chain, d);
  Result r;
  json levels = json::array();
  for (const auto& l : chain.levels()) levels.push_back(io::to_json(l));
  json report = json::array();
  for (const auto& l : eq.levels) {
    report.push_back({{"level", l.level},
                      {"level_refines_balls", l.level_refines_balls},
                      {"balls_refine_level", l.balls_refine_level}});
  }
  r.report = {{"ground_set", io::to_json(u)},
              {"depth", opt.depth},
              {"chain", levels},
              {"metric", io::to_json(d)},
              {"equivalence", report},
              {"all_pass", eq.all_pass()},
              {"note", "pairs not covered by the chain within its depth are at distance inf"}};
  r.code = eq.all_pass() ? kExitOk : kExitFailed;
  return r;
}

// asdim

json cover_report(const Decomposition& dec, const ExtMetric& d, double r) {
  const auto balls = ball_family(d, r);
  const auto cover = components_to_cover(dec, balls);
  return {{"members", cover.size()},
          {"multiplicity", multiplicity(cover)},
          {"refined_by_balls", refines(balls, cover)},
          {"same_part_stars_disjoint", same_part_stars_disjoint(dec, balls)}};
}

Result cmd_asdim_exact(const Options& opt, const json& in) {
  const auto d = metric_of(in);
  const double r = single_scale(opt);
  const double bound = opt.bound > 0 ? opt.bound : 8 * r;
  Result res;
  const auto found = find_decomposition_bruteforce(d, r, opt.dim, bound);
  res.report = {{"mode", "exact"}, {"scale", io::number(r)}, {"n", opt.dim},
                {"component_bound", io::number(bound)}, {"found", found.has_value()}};
  if (!found) {
    res.code = kExitFailed;
    return res;
  }
  const double diam = max_component_diameter(*found, d, r);
  const bool checked = decomposition_check(*found, scale_pair_family(d, r), ball_family(d, bound));
  res.report["decomposition"] = io::to_json(*found);
  res.report["max_component_diameter"] = io::number(diam);
  res.report["verified"] = checked && diam <= bound;
  res.code = checked && diam <= bound ? kExitOk : kExitFailed;
  return res;
}

Result cmd_asdim_brick(const Options& opt, const json& in) {
  const auto extents = extents_of(require(in, "window"), "window");
  const double r = single_scale(opt);
  const auto dim = extents.size();
  const auto dec = brick_decomposition(dim, extents, r);
  const auto d = grid_l1_metric(extents);
  const double bound = 8 * r * static_cast<double>(dim);
  const double diam = max_component_diameter(dec, d, r);
  const bool checked = decomposition_check(dec, scale_pair_family(d, r), ball_family(d, bound));
  Result res;
  res.report = {{"mode", "brick"},
                {"scale", io::number(r)},
                {"window", extents},
                {"decomposition", io::to_json(dec)},
                {"parts", dec.nonempty_part_count()},
                {"component_bound", io::number(bound)},
                {"max_component_diameter", io::number(diam)},
                {"verified", checked && diam <= bound},
                {"cover", cover_report(dec, d, r)}};
  res.code = checked && diam <= bound ? kExitOk : kExitFailed;
  return res;
}

Result cmd_asdim_hurewicz(const Options& opt, const json& in) {
  std::vector<double> scales = opt.scales;
  if (scales.empty() && in.contains("scales")) {
    for (const auto& s : in.at("scales")) scales.push_back(io::read_number(s, "scales"));
  }
  if (scales.empty()) throw SchemaError("hurewicz mode needs --scale or 'scales'");
  for (double s : scales) {
    if (!(s > 0) || std::isinf(s)) throw SchemaError("scales must be positive and finite");
  }
  std::optional<HurewiczInputs> inputs;
  if (in.contains("projection")) {
    const auto extents = extents_of(require(in.at("projection"), "extents"), "projection.extents");
    if (extents.size() != 2) throw SchemaError("projection.extents: expected [rows, cols]");
    std::vector<PointIndex> map;
    for (PointIndex p = 0; p < extents[0] * extents[1]; ++p) map.push_back(p / extents[1]);
    inputs = HurewiczInputs{.map = std::move(map),
                            .dx = grid_l1_metric(extents),
                            .dy = path_metric(extents[0]),
                            .scales = scales,
                            .x_finder = grid_finder(extents),
                            .y_finder = grid_finder({extents[0]}),
                            .fiber_finder = grid_finder(extents)};
  } else {
    auto dx = io::read_metric(require(in, "dx"));
    auto dy = io::read_metric(require(in, "dy"));
    std::vector<PointIndex> map;
    for (const auto& v : require(in, "map")) {
      if (!v.is_number_integer() || v.get<std::int64_t>() < 0 ||
          v.get<std::size_t>() >= dy.size()) {
        throw SchemaError("map: images must be indices of Y");
      }
      map.push_back(v.get<std::size_t>());
    }
    if (map.size() != dx.size()) throw SchemaError("map: one image per point of X is required");
    auto finder = [](const ExtMetric& d) {
      return d.size() <= kExactSearchCap ? exact_finder(d, 4) : DecompositionFinder{};
    };
    inputs = HurewiczInputs{.map = std::move(map), .dx = dx, .dy = dy, .scales = scales,
                            .x_finder = finder(dx), .y_finder = finder(dy),
                            .fiber_finder = finder(dx)};
  }
  Result res;
  json entries = json::array();
  bool all = true;
  for (const auto& s : hurewicz_report(*inputs)) {
    entries.push_back(io::to_json(s));
    all = all && s.uniform && s.inequality_holds;
  }
  res.report = {{"mode", "hurewicz"}, {"scales", entries}, {"inequality_holds", all}};
  res.code = all ? kExitOk : kExitFailed;
  return res;
}

Result cmd_asdim(const Options& opt) {
  const auto in = load_input(opt, true);
  if (opt.mode == "exact") return cmd_asdim_exact(opt, in);
  if (opt.mode == "brick") return cmd_asdim_brick(opt, in);
  if (opt.mode == "hurewicz") return cmd_asdim_hurewicz(opt, in);
  throw SchemaError("--mode must be exact, brick or hurewicz");
}

// group

std::vector<GroupElement> search_space_of(const json& in, const GroupOracle& g) {
  if (in.contains("search_space")) {
    const auto s = io::read_elements(in.at("search_space"), g);
    return {s.begin(), s.end()};
  }
  const auto& box = require(in, "box");
  if (g.kind() == GroupKind::BS12) {
    return bs12_box(box.value("max_numerator", 64), box.value("max_exponent", 0),
                    box.value("max_t", 2));
  }
  if (g.kind() == GroupKind::Zn) {
    return zn_box(g.generators().size(), box.value("radius", 5));
  }
  throw SchemaError("box: only bs12 and Zn groups have search boxes; give 'search_space'");
}

FiniteSubset f_set_of(const json& in, const GroupOracle& g) {
  if (in.contains("F")) return io::read_elements(in.at("F"), g);
  const auto& k = require(in, "F_ball");
  if (!k.is_number_integer() || k.get<std::int64_t>() < 0) throw SchemaError("F_ball: expected a radius");
  return word_ball(g, k.get<std::size_t>());
}

Result cmd_group(const Options& opt) {
  const auto in = load_input(opt, true);
  const auto g = io::read_group(require(in, "group"));
  Result res;
  res.report["group"] = g.name();
  if (opt.action == "witness") {
    std::vector<FiniteSubset> members;
    for (const auto& m : require(in, "members")) members.push_back(io::read_elements(m, g));
    for (const auto& m : members) {
      if (m.empty()) throw SchemaError("members: every member must be nonempty");
    }
    const auto f = left_witness(g, members);
    json bases = json::array();
    bool contained = true;
    for (const auto& m : members) {
      const auto& base = m.front();
      bases.push_back(g.format(base));
      const auto shifted = left_translate(g, base, f);
      contained = contained && std::includes(shifted.begin(), shifted.end(), m.begin(), m.end());
    }
    res.report["witness"] = io::to_json(f, g);
    res.report["basepoints"] = bases;
    res.report["members_contained"] = contained;
    res.code = contained ? kExitOk : kExitFailed;
  } else if (opt.action == "divergence") {
    const auto e = io::read_elements(require(in, "E"), g);
    const auto f = f_set_of(in, g);
    if (e.empty() || f.empty()) throw SchemaError("E and F must be nonempty");
    const auto space = search_space_of(in, g);
    if (space.empty()) throw SchemaError("the search space is empty");
    const auto x = divergence_search(g, e, f, space);
    res.report["E"] = io::to_json(e, g);
    res.report["F_size"] = f.size();
    res.report["searched"] = space.size();
    if (x) {
      const auto cert = cover_certificate(g, *x, e, f);
      json per_e = json::array();
      for (const auto& [ee, cands] : cert.candidates_per_e) {
        per_e.push_back({{"e", g.format(ee)}, {"candidates", io::to_json(cands, g)}});
      }
      res.report["witness"] = g.format(*x);
      res.report["certificate"] = {{"x", g.format(cert.x)},
                                   {"candidates_per_e", per_e},
                                   {"intersection", io::to_json(cert.intersection, g)}};
    } else {
      res.report["witness"] = nullptr;
    }
  } else if (opt.action == "svarc-milnor") {
    const auto& action = require(in, "action");
    const auto kind = require(action, "kind");
    if (kind != "translation") throw SchemaError("action.kind: only 'translation' is supported");
    if (g.kind() != GroupKind::Zn) throw SchemaError("translation actions need a Zn group");
    const auto extents = extents_of(require(action, "extents"), "action.extents");
    std::vector<std::int64_t> lower(extents.size(), 0);
    if (action.contains("lower")) lower = action.at("lower").get<std::vector<std::int64_t>>();
    if (lower.size() != extents.size() || extents.size() != g.generators().size()) {
      throw SchemaError("action: extents, lower corner and group rank must agree");
    }
    const auto a = translation_action(extents, lower);
    PointIndex x0 = 0;
    const auto& x = require(in, "x0");
    if (x.is_string()) {
      const auto& labels = a.space.universe()->labels();
      const auto it = std::find(labels.begin(), labels.end(), x.get<std::string>());
      if (it == labels.end()) throw SchemaError("x0: unknown point label");
      x0 = static_cast<PointIndex>(it - labels.begin());
    } else if (x.is_number_integer() && x.get<std::int64_t>() >= 0 &&
               x.get<std::size_t>() < a.space.size()) {
      x0 = x.get<std::size_t>();
    } else {
      throw SchemaError("x0: expected a point index or label");
    }
    const double radius = io::read_number(require(in, "radius"), "radius");
    if (!(radius >= 0) || std::isinf(radius)) throw SchemaError("radius must be finite");
    std::vector<GroupElement> candidates;
    if (in.contains("candidates")) {
      const auto c = io::read_elements(in.at("candidates"), g);
      candidates.assign(c.begin(), c.end());
    } else {
      candidates = zn_box(g.generators().size(), in.value("candidate_radius", 10));
    }
    const auto rep = svarc_milnor_finiteness_check(a, x0, radius, candidates);
    json ball = json::array();
    rep.orbit_ball.for_each([&](PointIndex p) { ball.push_back(a.space.universe()->label(p)); });
    res.report["orbit_ball"] = ball;
    res.report["hits"] = io::to_json(make_subset(rep.hits), g);
    res.report["boundary_truncated"] = rep.boundary_truncated;
  } else {
    throw SchemaError("--action must be witness, divergence or svarc-milnor");
  }
  return res;
}

// higson

Family family_of(const json& j, const Universe& u) {
  if (j.is_object()) {
    const auto& spec = require(j, "intervals");
    const std::size_t length = spec.value("length", 1);
    const std::size_t step = spec.value("step", 1);
    if (step == 0) throw SchemaError("intervals.step must be positive");
    Family f(u);
    for (std::size_t a = 0; a < u->size(); a += step) {
      PointSet b(u);
      for (std::size_t x = a; x <= a + length && x < u->size(); ++x) b.insert(x);
      f.push_back(std::move(b));
    }
    return f;
  }
  return io::read_family(j, u);
}

Result cmd_higson(const Options& opt) {
  const auto in = load_input(opt, true);
  const auto u = universe_of(in);
  Result res;
  res.report["mode"] = opt.mode;
  auto subset = [&](const char* key) {
    return in.contains(key) ? io::read_point_set(in.at(key), u) : PointSet(u);
  };
  if (opt.mode == "defect") {
    const auto f = io::read_function(require(in, "function"), u->size());
    const auto fam = family_of(require(in, "family"), u);
    res.report["defect"] = io::number(higson_defect(f, fam, subset("subset")));
  } else if (opt.mode == "truncation") {
    if (!(opt.eps > 0)) throw SchemaError("--eps must be positive");
    const auto f = io::read_function(require(in, "function"), u->size());
    const auto fam = family_of(require(in, "family"), u);
    const auto ex = io::read_exhaustion(require(in, "exhaustion"), u);
    const auto stage = minimal_truncation(f, fam, opt.eps, ex);
    res.report["eps"] = io::number(opt.eps);
    res.report["stages"] = ex.size();
    res.report["stage"] = stage ? json(*stage) : json(nullptr);
    res.report["stage_size"] = stage ? json(ex.stages()[*stage].size()) : json(nullptr);
    res.report["status"] = stage ? "found" : "window-inconclusive";
  } else if (opt.mode == "proper") {
    const auto d = metric_of(in);
    if (!same_universe(d.universe(), u)) throw SchemaError("metric and ground_set disagree");
    const auto fam = family_of(require(in, "family"), d.universe());
    std::vector<PointSet> ks;
    for (const auto& k : require(in, "ks")) ks.push_back(io::read_point_set(k, d.universe()));
    for (const auto& k : ks) {
      if (!is_bounded_set(k, d)) throw SchemaError("ks: every K must be bounded");
    }
    const double star_bound = in.contains("star_bound")
                                  ? io::read_number(in.at("star_bound"), "star_bound")
                                  : kInfinity;
    const auto rep = proper_family_check(fam, ks, d, star_bound);
    json diams = json::array();
    for (double v : rep.star_diameters) diams.push_back(io::number(v));
    res.report["proper"] = rep.proper;
    res.report["star_diameters"] = diams;
    res.report["violating_set"] = rep.violating_set ? io::to_json(*rep.violating_set) : json(nullptr);
    res.code = rep.proper ? kExitOk : kExitFailed;
  } else if (opt.mode == "bridge") {
    const auto fam = family_of(require(in, "family"), u);
    const bool ok = delta_image_bridge_check(fam, subset("subset"));
    res.report["holds"] = ok;
    res.code = ok ? kExitOk : kExitFailed;
  } else if (opt.mode == "inclusion") {
    const auto b1 = family_of(require(in, "family"), u);
    const auto b2 = family_of(require(in, "family2"), u);
    const auto k = subset("subset");
    const bool literal = star_proper_inclusion_check(b1, b2, k);
    res.report["holds"] = literal;
    res.report["star_of_star_identity"] = star_of_star_identity_check(b1, b2, k);
    res.code = literal ? kExitOk : kExitFailed;
  } else if (opt.mode == "star-bound") {
    if (!(opt.eps > 0)) throw SchemaError("--eps must be positive");
    const auto f = io::read_function(require(in, "function"), u->size());
    const auto b1 = family_of(require(in, "family"), u);
    const auto b2 = family_of(require(in, "family2"), u);
    const auto rep = higson_star_bound_check(f, b1, b2, subset("subset"), opt.eps);
    res.report["defect_b1"] = io::number(rep.defect_b1);
    res.report["defect_b2"] = io::number(rep.defect_b2);
    res.report["defect_star"] = io::number(rep.defect_star);
    res.report["truncation"] = io::to_json(rep.truncation);
    res.report["hypothesis"] = rep.hypothesis;
    res.report["bound"] = rep.bound;
    res.code = !rep.hypothesis || rep.bound ? kExitOk : kExitFailed;
  } else {
    throw SchemaError("--mode must be defect, truncation, proper, bridge, inclusion or star-bound");
  }
  return res;
}

void add_io(CLI::App* sub, Options& opt) {
  sub->add_option("--input,-i", opt.input, "Workspace JSON file ('-' for stdin)");
  sub->add_option("--output,-o", opt.output, "Report file (default: stdout)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Large scale structures on finite windows", "coarse_cli"};
  app.require_subcommand(1);

  auto* convert = app.add_subcommand("convert", "Families to entourages and back");
  add_io(convert, opt);
  convert->add_option("--direction", opt.direction, "family-to-entourage | entourage-to-family");

  auto* verify = app.add_subcommand("verify", "Run the law suite");
  add_io(verify, opt);
  verify->add_option("--laws", opt.laws, "Comma-separated law ids, or 'all'");
  verify->add_option("--seed", opt.seed, "Random seed");
  verify->add_option("--mode", opt.mode, "random | exhaustive");
  verify->add_option("--trials", opt.trials, "Random trials per law");
  verify->add_option("--max-universe", opt.max_universe, "Largest universe size");
  verify->add_option("--mutation", opt.mutation, "none | wrong-final-leg");

  auto* metrize_cmd = app.add_subcommand("metrize", "Metrize the scale chain of a seed family");
  add_io(metrize_cmd, opt);
  metrize_cmd->add_option("--depth", opt.depth, "Chain depth");

  auto* asdim = app.add_subcommand("asdim", "Decompositions and the Hurewicz report");
  add_io(asdim, opt);
  asdim->add_option("--mode", opt.mode, "exact | brick | hurewicz")->required();
  asdim->add_option("--scale", opt.scales, "Scale r (repeatable in hurewicz mode)");
  asdim->add_option("--dim", opt.dim, "Exact mode: n, for n + 1 parts");
  asdim->add_option("--bound", opt.bound, "Exact mode: component diameter bound (default 8r)");

  auto* group = app.add_subcommand("group", "Shift structures of groups");
  add_io(group, opt);
  group->add_option("--action", opt.action, "witness | divergence | svarc-milnor")->required();

  auto* higson = app.add_subcommand("higson", "Bounded sets, proper families and Higson defects");
  add_io(higson, opt);
  higson->add_option("--mode", opt.mode, "defect | truncation | proper | bridge | inclusion | star-bound")
      ->required();
  higson->add_option("--eps", opt.eps, "Epsilon for truncation and star-bound");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  Result result;
  try {
    if (*convert) result = cmd_convert(opt);
    else if (*verify) result = cmd_verify(opt);
    else if (*metrize_cmd) result = cmd_metrize(opt);
    else if (*asdim) result = cmd_asdim(opt);
    else if (*group) result = cmd_group(opt);
    else result = cmd_higson(opt);
  } catch (const SchemaError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const json::exception& e) {
    err << "error: malformed input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailed;
  }

  const auto text = result.report.dump(2) + "\n";
  if (opt.output.empty()) {
    out << text;
  } else {
    std::ofstream file(opt.output, std::ios::binary | std::ios::trunc);
    if (!file) {
      err << "error: cannot write '" << opt.output << "'\n";
      return kExitUsage;
    }
    file << text;
  }
  return result.code;
}

}  // namespace coarse::cli
