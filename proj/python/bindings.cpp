#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gaindex/checks.hpp"
#include "gaindex/enumeration.hpp"
#include "gaindex/errors.hpp"
#include "gaindex/graph_io.hpp"
#include "gaindex/indices.hpp"
#include "gaindex/line_graph.hpp"
#include "gaindex/sweep.hpp"

namespace py = pybind11;
using namespace gaindex;

namespace {

// Reports cross the boundary as plain dicts built from their JSON form.
py::object to_python(const nlohmann::ordered_json& value) {
  return py::module_::import("json").attr("loads")(value.dump());
}

py::dict index_dict(const IndexValue& v) { return to_python(to_json(v)); }

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  return Graph::from_edge_list(n, edges);
}

Graph named(const std::string& name) {
  if (auto g = parse_named_graph(name)) return *g;
  throw py::value_error("unknown graph name '" + name + "'");
}

py::list buckets_to_python(const std::vector<Bucket>& buckets) {
  py::list out;
  for (const Bucket& b : buckets) {
    py::list members;
    for (const BucketMember& m : b.members) {
      py::dict entry;
      entry["name"] = m.name;
      entry["graph6"] = to_graph6(m.graph);
      entry["value"] = m.value.to_string();
      entry["approx"] = to_float(m.value).value;
      if (m.line_name) entry["line_name"] = *m.line_name;
      members.append(entry);
    }
    py::dict bucket;
    bucket["label"] = b.label();
    bucket["members"] = members;
    out.append(bucket);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact GA1, degree-based indices, line graphs and inequality checks";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<GraphError>(m, "GraphError", PyExc_ValueError);
  py::register_exception<StandingAssumptionError>(m, "StandingAssumptionError", PyExc_ValueError);
  py::register_exception<LimitError>(m, "LimitError", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
      .def(py::init(&make_graph), py::arg("n"), py::arg("edges"))
      .def_static("from_graph6", [](const std::string& s) { return parse_graph6(s); })
      .def_static("named", &named, py::arg("name"))
      .def_property_readonly("n", &Graph::order)
      .def_property_readonly("m", &Graph::size)
      .def_property_readonly("edges",
                             [](const Graph& g) {
                               std::vector<std::pair<int, int>> out;
                               for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
                               return out;
                             })
      .def("degrees", &Graph::degrees)
      .def("graph6", [](const Graph& g) { return to_graph6(g); })
      .def("classify", [](const Graph& g) { return classify(g).describe(); })
      .def("name", [](const Graph& g) { return display_name(g); })
      .def("is_connected", [](const Graph& g) { return is_connected(g); })
      .def("is_isomorphic", [](const Graph& a, const Graph& b) { return are_isomorphic(a, b); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.order()) + ", m=" + std::to_string(g.size()) +
               ", graph6='" + to_graph6(g) + "')";
      });

  m.def("ga1", [](const Graph& g) { return index_dict(ga1(g)); }, py::arg("g"),
        "GA1 as {'exact': str, 'approx': float, ...}");
  m.def("m1", [](const Graph& g) { return index_dict(m1(g)); });
  m.def("m2", [](const Graph& g) { return index_dict(m2(g)); });
  m.def("forgotten", [](const Graph& g) { return index_dict(forgotten(g)); });
  m.def("harmonic", [](const Graph& g) { return index_dict(harmonic(g)); });
  m.def("inverse_degree", [](const Graph& g) { return index_dict(inverse_degree(g)); });
  m.def("randic", [](const Graph& g) { return index_dict(randic(g)); });
  m.def("sum_connectivity", [](const Graph& g) { return index_dict(sum_connectivity(g)); });
  m.def("m1_alpha", [](const Graph& g, double a) { return index_dict(m1_alpha(g, a)); });
  m.def("m2_alpha", [](const Graph& g, double a) { return index_dict(m2_alpha(g, a)); });
  m.def("chi_alpha", [](const Graph& g, double a) { return index_dict(chi_alpha(g, a)); });

  m.def("line_graph", [](const Graph& g) { return line_graph(g).lg; }, py::arg("g"));
  m.def("m1_line_identity", [](const Graph& g) { return to_python(to_json(m1_line_identity(g))); });

  m.def("checker_ids", &checker_ids);
  m.def(
      "check",
      [](const Graph& g, const std::vector<std::string>& ids, const std::vector<double>& alphas) {
        py::list out;
        for (const CheckReport& r : run_checks(g, ids, alphas)) out.append(to_python(to_json(r)));
        return out;
      },
      py::arg("g"), py::arg("theorems") = std::vector<std::string>{},
      py::arg("alphas") = std::vector<double>(std::begin(kDefaultAlphas), std::end(kDefaultAlphas)));

  m.def("enumerate_connected", &enumerate_connected, py::arg("n"),
        py::arg("limit") = kDefaultEnumerationLimit);
  m.def("enumerate_trees", &enumerate_trees, py::arg("n"), py::arg("limit") = kDefaultEnumerationLimit);
  m.def("classify_small_values", [](int n) { return buckets_to_python(classify_small_values(n)); },
        py::arg("n_max") = 6);
  m.def("classify_line_small_values",
        [](int n) { return buckets_to_python(classify_line_small_values(n)); }, py::arg("n_max") = 7);
  m.def("find_line_preimages", [](const Graph& t) { return find_line_preimages(t); });

  m.def(
      "sweep",
      [](int nmax, int trials, std::uint64_t seed, const std::vector<std::string>& theorems,
         int random_nmax, unsigned threads) {
        SweepConfig config;
        config.exhaustive_nmax = nmax;
        config.random_trials = trials;
        config.seed = seed;
        config.theorems = theorems;
        config.random_nmax = random_nmax;
        config.threads = threads;
        SweepSummary summary;
        {
          py::gil_scoped_release release;
          summary = run_sweep(config);
        }
        py::dict out;
        out["exhaustive_graphs"] = summary.exhaustive_graphs;
        out["random_graphs"] = summary.random_graphs;
        py::dict tallies;
        for (const TheoremTally& t : summary.tallies) {
          py::dict entry;
          entry["evaluated"] = t.evaluated;
          entry["skipped"] = t.skipped;
          entry["violations"] = t.violations;
          entry["equalities"] = t.equalities;
          entry["mismatches"] = t.mismatches;
          entry["witnesses"] = t.witnesses;
          tallies[py::str(t.id)] = entry;
        }
        out["tallies"] = tallies;
        return out;
      },
      py::arg("nmax") = 5, py::arg("trials") = 0, py::arg("seed") = 42,
      py::arg("theorems") = std::vector<std::string>{}, py::arg("random_nmax") = 12,
      py::arg("threads") = 0);
}
