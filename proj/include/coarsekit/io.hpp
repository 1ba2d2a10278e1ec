#pragma once

#include "coarsekit/asdim.hpp"
#include "coarsekit/core_sets.hpp"
#include "coarsekit/entourages.hpp"
#include "coarsekit/groups.hpp"
#include "coarsekit/higson.hpp"
#include "coarsekit/lawsuite.hpp"
#include "coarsekit/metrics.hpp"

#include "json.hpp"

#include <stdexcept>
#include <string>

namespace coarse::io {

using nlohmann::json;

/// Malformed or inconsistent workspace input.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Finite values as numbers (integral ones as integers), oo as the string "inf".
json number(double value);
double read_number(const json& j, const std::string& where);

const json& require(const json& j, const std::string& key);

json to_json(const Universe& universe);
Universe read_ground_set(const json& j);

json to_json(const PointSet& set);
PointSet read_point_set(const json& j, const Universe& universe);
json to_json(const Family& family);
Family read_family(const json& j, const Universe& universe);
json to_json(const Entourage& e);
Entourage read_entourage(const json& j, const Universe& universe);

/// {"size": n, "dist": row-major, "inf": "inf"}
json to_json(const ExtMetric& d);
ExtMetric read_metric(const json& j);

json to_json(const Decomposition& d);

/// {"kind": "Zn", "n": k} | {"kind": "free", "rank": k} | {"kind": "bs12"} |
/// {"kind": "table", "mul": [[...]], "generators": [...]}
GroupOracle read_group(const json& j);
FiniteSubset read_elements(const json& j, const GroupOracle& g);
json to_json(const FiniteSubset& elements, const GroupOracle& g);

/// An array of values, or {"builtin": name, "scale": a, "shift": b}.
RealFunction read_function(const json& j, std::size_t size);
/// An array of stages, or {"prefix_step": s, "include_full": bool, "max_stage_size": m}.
Exhaustion read_exhaustion(const json& j, const Universe& universe);

json to_json(const LawInstance& instance);
LawInstance read_law_instance(const json& j);
json to_json(const LawReport& report);

json to_json(const HurewiczScale& scale);

}  // namespace coarse::io
