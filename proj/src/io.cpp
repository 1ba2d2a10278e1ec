#include "coarsekit/io.hpp"

#include <cmath>

namespace coarse::io {

namespace {

[[noreturn]] void fail(const std::string& message) { throw SchemaError(message); }

std::size_t read_index(const json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0) fail(where + ": expected a nonnegative integer");
  return j.get<std::size_t>();
}

const json& require_array(const json& j, const std::string& where) {
  if (!j.is_array()) fail(where + ": expected an array");
  return j;
}

std::vector<std::size_t> read_indices(const json& j, const std::string& where) {
  std::vector<std::size_t> out;
  for (const auto& v : require_array(j, where)) out.push_back(read_index(v, where));
  return out;
}

template <typename Fn>
auto rethrow_as_schema(const std::string& where, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const SchemaError&) {
    throw;
  } catch (const std::exception& e) {
    fail(where + ": " + e.what());
  }
}

std::vector<std::pair<std::size_t, std::size_t>> read_pairs(const json& j, const std::string& where) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& p : require_array(j, where)) {
    if (!p.is_array() || p.size() != 2) fail(where + ": expected [x, y] pairs");
    out.emplace_back(read_index(p[0], where), read_index(p[1], where));
  }
  return out;
}

json pairs_json(const std::vector<PointPair>& pairs) {
  json out = json::array();
  for (const auto& [x, y] : pairs) out.push_back({x, y});
  return out;
}

json family_lists(const std::vector<std::vector<PointIndex>>& family) {
  json out = json::array();
  for (const auto& b : family) out.push_back(b);
  return out;
}

std::vector<std::vector<PointIndex>> read_lists(const json& j, const std::string& where) {
  std::vector<std::vector<PointIndex>> out;
  for (const auto& b : require_array(j, where)) out.push_back(read_indices(b, where));
  return out;
}

}  // namespace

json number(double value) {
  if (std::isinf(value)) return "inf";
  if (std::nearbyint(value) == value && std::fabs(value) < 9.0e15) {
    return static_cast<std::int64_t>(value);
  }
  return value;
}

double read_number(const json& j, const std::string& where) {
  if (j.is_string() && j.get<std::string>() == "inf") return kInfinity;
  if (!j.is_number()) fail(where + ": expected a number or \"inf\"");
  return j.get<double>();
}

const json& require(const json& j, const std::string& key) {
  if (!j.is_object() || !j.contains(key)) fail("missing required field '" + key + "'");
  return j.at(key);
}

json to_json(const Universe& universe) {
  json out = {{"size", universe->size()}};
  if (universe->has_labels()) out["labels"] = universe->labels();
  return out;
}

Universe read_ground_set(const json& j) {
  const auto size = read_index(require(j, "size"), "ground_set.size");
  if (!j.contains("labels")) return make_universe(size);
  const auto& labels = require_array(j.at("labels"), "ground_set.labels");
  std::vector<std::string> names;
  for (const auto& l : labels) {
    if (!l.is_string()) fail("ground_set.labels: expected strings");
    names.push_back(l.get<std::string>());
  }
  if (names.size() != size) fail("ground_set.labels: label count must equal size");
  return rethrow_as_schema("ground_set", [&] { return make_universe(std::move(names)); });
}

json to_json(const PointSet& set) { return set.members(); }

PointSet read_point_set(const json& j, const Universe& universe) {
  const auto members = read_indices(j, "point set");
  return rethrow_as_schema("point set", [&] {
    return PointSet(universe, std::span<const PointIndex>(members));
  });
}

json to_json(const Family& family) {
  json out = json::array();
  for (const auto& b : family) out.push_back(to_json(b));
  return out;
}

Family read_family(const json& j, const Universe& universe) {
  Family out(universe);
  for (const auto& b : require_array(j, "family")) out.push_back(read_point_set(b, universe));
  return out;
}

json to_json(const Entourage& e) { return pairs_json(e.pairs()); }

Entourage read_entourage(const json& j, const Universe& universe) {
  const auto pairs = read_pairs(j, "entourage");
  return rethrow_as_schema("entourage", [&] { return Entourage(universe, pairs); });
}

json to_json(const ExtMetric& d) {
  json dist = json::array();
  for (double v : d.matrix()) dist.push_back(number(v));
  return {{"size", d.size()}, {"dist", dist}, {"inf", "inf"}};
}

ExtMetric read_metric(const json& j) {
  const auto size = read_index(require(j, "size"), "metric.size");
  if (j.contains("inf") && j.at("inf") != "inf") fail("metric.inf: the sentinel must be \"inf\"");
  std::vector<double> dist;
  for (const auto& v : require_array(require(j, "dist"), "metric.dist")) {
    dist.push_back(read_number(v, "metric.dist"));
  }
  const Universe u = j.contains("labels") ? read_ground_set(j) : make_universe(size);
  auto d = rethrow_as_schema("metric", [&] { return ExtMetric::dense(u, std::move(dist)); });
  if (auto v = find_metric_violation(d)) fail("metric: violates " + v->axiom);
  return d;
}

json to_json(const Decomposition& d) {
  json parts = json::array();
  for (const auto& p : d.parts()) parts.push_back(to_json(p));
  return {{"parts", parts}, {"coloring", d.coloring()}};
}

GroupOracle read_group(const json& j) {
  const auto& kind = require(j, "kind");
  if (!kind.is_string()) fail("group.kind: expected a string");
  const auto k = kind.get<std::string>();
  return rethrow_as_schema("group", [&] {
    if (k == "Zn") return GroupOracle::zn(read_index(require(j, "n"), "group.n"));
    if (k == "free") return GroupOracle::free_group(read_index(require(j, "rank"), "group.rank"));
    if (k == "bs12") return GroupOracle::bs12();
    if (k == "table") {
      std::vector<std::vector<std::size_t>> mul;
      for (const auto& row : require_array(require(j, "mul"), "group.mul")) {
        mul.push_back(read_indices(row, "group.mul"));
      }
      std::optional<std::vector<std::size_t>> gens;
      if (j.contains("generators")) gens = read_indices(j.at("generators"), "group.generators");
      return GroupOracle::table(std::move(mul), std::move(gens));
    }
    fail("group.kind: unknown group kind '" + k + "'");
  });
}

FiniteSubset read_elements(const json& j, const GroupOracle& g) {
  std::vector<GroupElement> out;
  for (const auto& e : require_array(j, "elements")) {
    std::string text;
    if (e.is_string()) {
      text = e.get<std::string>();
    } else if (e.is_number_integer()) {
      text = std::to_string(e.get<std::int64_t>());
    } else {
      fail("elements: expected canonical strings");
    }
    out.push_back(rethrow_as_schema("element '" + text + "'", [&] { return g.parse(text); }));
  }
  return make_subset(std::move(out));
}

json to_json(const FiniteSubset& elements, const GroupOracle& g) {
  json out = json::array();
  for (const auto& e : elements) out.push_back(g.format(e));
  return out;
}

RealFunction read_function(const json& j, std::size_t size) {
  if (j.is_array()) {
    RealFunction f;
    for (const auto& v : j) f.push_back(read_number(v, "function"));
    if (f.size() != size) fail("function: expected one value per point");
    for (double v : f) {
      if (!std::isfinite(v)) fail("function: values must be finite");
    }
    return f;
  }
  const auto& name = require(j, "builtin");
  if (!name.is_string()) fail("function.builtin: expected a string");
  const double scale = j.contains("scale") ? read_number(j.at("scale"), "function.scale") : 1.0;
  const double shift = j.contains("shift") ? read_number(j.at("shift"), "function.shift") : 0.0;
  return rethrow_as_schema("function", [&] {
    return builtin_function(name.get<std::string>(), size, scale, shift);
  });
}

Exhaustion read_exhaustion(const json& j, const Universe& universe) {
  if (j.is_object()) {
    const auto step = read_index(require(j, "prefix_step"), "exhaustion.prefix_step");
    const bool full = j.value("include_full", false);
    auto ex = rethrow_as_schema("exhaustion", [&] { return prefix_exhaustion(universe, step, full); });
    if (!j.contains("max_stage_size")) return ex;
    const auto cap = read_index(j.at("max_stage_size"), "exhaustion.max_stage_size");
    std::vector<PointSet> kept;
    for (const auto& s : ex.stages()) {
      if (s.size() <= cap) kept.push_back(s);
    }
    return Exhaustion(std::move(kept));
  }
  std::vector<PointSet> stages;
  for (const auto& s : require_array(j, "exhaustion")) stages.push_back(read_point_set(s, universe));
  return rethrow_as_schema("exhaustion", [&] { return Exhaustion(std::move(stages)); });
}

json to_json(const LawInstance& in) {
  json out = {{"universe_size", in.universe_size},
              {"b1", family_lists(in.b1)},
              {"b2", family_lists(in.b2)},
              {"k", in.k}};
  if (!in.extra1.empty()) out["extra1"] = pairs_json(in.extra1);
  if (!in.extra2.empty()) out["extra2"] = pairs_json(in.extra2);
  if (!in.removed1.empty()) out["removed1"] = pairs_json(in.removed1);
  if (!in.removed2.empty()) out["removed2"] = pairs_json(in.removed2);
  if (!in.metric.empty()) {
    json dist = json::array();
    for (double v : in.metric) dist.push_back(number(v));
    out["metric"] = dist;
  }
  return out;
}

LawInstance read_law_instance(const json& j) {
  LawInstance in;
  in.universe_size = read_index(require(j, "universe_size"), "instance.universe_size");
  in.b1 = read_lists(require(j, "b1"), "instance.b1");
  in.b2 = read_lists(require(j, "b2"), "instance.b2");
  in.k = read_indices(require(j, "k"), "instance.k");
  if (j.contains("extra1")) in.extra1 = read_pairs(j.at("extra1"), "instance.extra1");
  if (j.contains("extra2")) in.extra2 = read_pairs(j.at("extra2"), "instance.extra2");
  if (j.contains("removed1")) in.removed1 = read_pairs(j.at("removed1"), "instance.removed1");
  if (j.contains("removed2")) in.removed2 = read_pairs(j.at("removed2"), "instance.removed2");
  if (j.contains("metric")) {
    for (const auto& v : require_array(j.at("metric"), "instance.metric")) {
      in.metric.push_back(read_number(v, "instance.metric"));
    }
  }
  return in;
}

json to_json(const LawReport& r) {
  json out = {{"law_id", r.law_id},
              {"statement", r.statement},
              {"trials", r.trials},
              {"failures", r.failures},
              {"tight", r.tight},
              {"passed", r.passed()}};
  if (r.counterexample) out["counterexample"] = to_json(*r.counterexample);
  return out;
}

json to_json(const HurewiczScale& s) {
  auto opt = [](const std::optional<std::size_t>& v) { return v ? json(*v) : json(nullptr); };
  json out = {{"scale", number(s.scale)},
              {"component_bound", number(s.component_bound)},
              {"image_diameter", number(s.image_diameter)},
              {"uniform", s.uniform},
              {"n_f", opt(s.n_f)},
              {"n_Y", opt(s.n_y)},
              {"n_X", opt(s.n_x)},
              {"inequality_holds", s.inequality_holds}};
  if (!s.note.empty()) out["note"] = s.note;
  return out;
}

}  // namespace coarse::io
