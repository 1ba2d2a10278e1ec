#include "coarsekit/asdim.hpp"
#include "coarsekit/cli.hpp"
#include "coarsekit/entourages.hpp"
#include "coarsekit/groups.hpp"
#include "coarsekit/higson.hpp"
#include "coarsekit/io.hpp"
#include "coarsekit/lawsuite.hpp"
#include "coarsekit/metrics.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace coarse;

namespace {

using Lists = std::vector<std::vector<PointIndex>>;
using Matrix = std::vector<std::vector<double>>;

Lists lists_of(const Family& f) {
  Lists out;
  for (const auto& b : f) out.push_back(b.members());
  return out;
}

Matrix matrix_of(const ExtMetric& d) {
  Matrix out(d.size(), std::vector<double>(d.size()));
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = 0; j < d.size(); ++j) out[i][j] = d(i, j);
  }
  return out;
}

ExtMetric metric_of(const Matrix& m) {
  std::vector<double> flat;
  for (const auto& row : m) {
    if (row.size() != m.size()) throw std::invalid_argument("distance matrix must be square");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return ExtMetric::dense(make_universe(m.size()), std::move(flat));
}

py::dict report_dict(const LawReport& r) {
  return py::module_::import("json").attr("loads")(io::to_json(r).dump());
}

GroupOracle group_named(const std::string& kind, std::size_t rank) {
  if (kind == "Zn") return GroupOracle::zn(rank);
  if (kind == "free") return GroupOracle::free_group(rank);
  if (kind == "bs12") return GroupOracle::bs12();
  throw std::invalid_argument("unknown group kind '" + kind + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Large scale structures on finite windows";

  m.def("star", [](const std::vector<PointIndex>& b, const Lists& cover, std::size_t n) {
    const auto u = make_universe(n);
    return star(PointSet(u, std::span<const PointIndex>(b)), Family(u, cover)).members();
  }, py::arg("b"), py::arg("cover"), py::arg("n"));
  m.def("star_family", [](const Lists& fam, const Lists& cover, std::size_t n) {
    const auto u = make_universe(n);
    return lists_of(star_family(Family(u, fam), Family(u, cover)));
  }, py::arg("family"), py::arg("cover"), py::arg("n"));
  m.def("trivial_extension", [](const Lists& fam, std::size_t n) {
    return lists_of(trivial_extension(Family(make_universe(n), fam)));
  }, py::arg("family"), py::arg("n"));
  m.def("refines", [](const Lists& fine, const Lists& coarse_fam, std::size_t n) {
    const auto u = make_universe(n);
    return refines(Family(u, fine), Family(u, coarse_fam));
  }, py::arg("fine"), py::arg("coarse"), py::arg("n"));

  m.def("delta_of_family", [](const Lists& fam, std::size_t n) {
    return delta_of_family(Family(make_universe(n), fam)).pairs();
  }, py::arg("family"), py::arg("n"));
  m.def("maximal_family_of_entourage", [](const std::vector<PointPair>& pairs, std::size_t n) {
    return lists_of(maximal_family_of_entourage(Entourage(make_universe(n), pairs)));
  }, py::arg("pairs"), py::arg("n"));
  m.def("compose", [](const std::vector<PointPair>& first, const std::vector<PointPair>& second, std::size_t n) {
    const auto u = make_universe(n);
    return compose(Entourage(u, first), Entourage(u, second)).pairs();
  }, py::arg("first"), py::arg("second"), py::arg("n"));

  m.def("metrize", [](const Lists& seed, std::size_t n, std::size_t depth) {
    return matrix_of(metrize(generate_chain(Family(make_universe(n), seed), depth)));
  }, py::arg("seed"), py::arg("n"), py::arg("depth") = 6);
  m.def("path_metric", [](std::size_t n) { return matrix_of(path_metric(n)); }, py::arg("n"));
  m.def("ball_family", [](const Matrix& d, double r) { return lists_of(ball_family(metric_of(d), r)); },
        py::arg("dist"), py::arg("r"));

  m.def("multiplicity", [](const Lists& fam, std::size_t n) {
    return multiplicity(Family(make_universe(n), fam));
  }, py::arg("family"), py::arg("n"));
  m.def("find_decomposition", [](const Matrix& d, double r, std::size_t dim, double bound)
            -> std::optional<std::vector<std::size_t>> {
    const auto found = find_decomposition_bruteforce(metric_of(d), r, dim, bound);
    if (!found) return std::nullopt;
    return found->coloring();
  }, py::arg("dist"), py::arg("r"), py::arg("dim"), py::arg("bound"));
  m.def("brick_coloring", [](std::vector<std::size_t> extents, double r) {
    return brick_decomposition(extents.size(), extents, r).coloring();
  }, py::arg("extents"), py::arg("r"));

  m.def("group_multiply", [](const std::string& kind, std::size_t rank, const std::string& a,
                             const std::string& b) {
    const auto g = group_named(kind, rank);
    return g.format(g.multiply(g.parse(a), g.parse(b)));
  }, py::arg("kind"), py::arg("rank"), py::arg("a"), py::arg("b"));
  m.def("bs12_divergence", [](std::size_t k, std::int64_t max_numerator, std::int64_t max_t)
            -> std::optional<std::string> {
    const auto g = GroupOracle::bs12();
    const auto e = make_subset({g.identity(), g.generators()[1]});
    const auto x = divergence_search(g, e, word_ball(g, k), bs12_box(max_numerator, 0, max_t));
    if (!x) return std::nullopt;
    return g.format(*x);
  }, py::arg("k"), py::arg("max_numerator") = 64, py::arg("max_t") = 2);

  m.def("higson_defect", [](const std::vector<double>& f, const Lists& fam, const std::vector<PointIndex>& u) {
    const auto w = make_universe(f.size());
    return higson_defect(f, Family(w, fam), PointSet(w, std::span<const PointIndex>(u)));
  }, py::arg("f"), py::arg("family"), py::arg("truncation"));

  m.def("law_ids", &all_law_ids);
  m.def("run_laws", [](std::uint64_t seed, std::size_t trials, std::size_t max_universe,
                       std::vector<std::string> laws) {
    CaseSpec spec;
    spec.seed = seed;
    spec.trials = trials;
    spec.max_universe = max_universe;
    if (laws.empty()) laws = all_law_ids();
    py::list out;
    for (const auto& r : run_laws(spec, laws)) out.append(report_dict(r));
    return out;
  }, py::arg("seed") = 1, py::arg("trials") = 500, py::arg("max_universe") = 12,
        py::arg("laws") = std::vector<std::string>{});

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"));
}
