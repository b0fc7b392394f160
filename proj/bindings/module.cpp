#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <utility>
#include <vector>

#include "vertexenergy/catalog.hpp"
#include "vertexenergy/energy.hpp"
#include "vertexenergy/errors.hpp"
#include "vertexenergy/graph6.hpp"
#include "vertexenergy/spectral.hpp"
#include "vertexenergy/walks.hpp"

namespace py = pybind11;
namespace ve = vertexenergy;

namespace {

std::vector<std::vector<double>> rows_of(const ve::Matrix& m) {
  std::vector<std::vector<double>> rows(m.rows(), std::vector<double>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j);
  return rows;
}

std::vector<std::vector<std::int64_t>> rows_of(const ve::IntMatrix& m) {
  std::vector<std::vector<std::int64_t>> rows(m.rows(), std::vector<std::int64_t>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j);
  return rows;
}

ve::Graph graph_by_name(const std::string& name) {
  const auto id = ve::named_graph_id_from_string(name);
  if (!id) throw ve::BadParametersError("unknown catalog graph '" + name + "'");
  return ve::named_graph(*id);
}

ve::Method method_by_name(const std::string& name) {
  const auto method = ve::method_from_string(name);
  if (!method)
    throw ve::BadParametersError("unknown method '" + name +
                                 "' (expected spectral, weights, moments or transitive)");
  return *method;
}

py::dict diagnostics_dict(const ve::Diagnostics& d) {
  py::dict out;
  out["eigen_residual"] = d.eigen_residual;
  out["max_row_sum_dev"] = d.max_row_sum_dev;
  out["min_weight"] = d.min_weight;
  if (d.moment_residual) out["moment_residual"] = *d.moment_residual;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Per-vertex graph energy: spectral, weight and moment routes";

  py::register_exception<ve::Error>(m, "Error");

  py::class_<ve::Graph>(m, "Graph")
      .def(py::init<std::size_t, const std::vector<ve::Edge>&>(), py::arg("n"), py::arg("edges"))
      .def_property_readonly("n", &ve::Graph::vertex_count)
      .def_property_readonly("edges", &ve::Graph::edges)
      .def("degree", &ve::Graph::degree, py::arg("v"))
      .def("is_regular",
           [](const ve::Graph& g) -> std::optional<std::size_t> { return g.regular_degree(); })
      .def("has_edge", &ve::Graph::has_edge, py::arg("u"), py::arg("v"))
      .def("adjacency", [](const ve::Graph& g) { return rows_of(g.adjacency_matrix()); })
      .def("__eq__", [](const ve::Graph& a, const ve::Graph& b) { return a == b; })
      .def("__repr__", [](const ve::Graph& g) {
        return "Graph(n=" + std::to_string(g.vertex_count()) + ", edges=" +
               std::to_string(g.edge_count()) + ")";
      });

  py::class_<ve::EnergyReport>(m, "EnergyReport")
      .def_property_readonly("method",
                             [](const ve::EnergyReport& r) { return std::string(to_string(r.method)); })
      .def_readonly("energies", &ve::EnergyReport::energies)
      .def_readonly("total", &ve::EnergyReport::total)
      .def_property_readonly(
          "diagnostics", [](const ve::EnergyReport& r) { return diagnostics_dict(r.diagnostics); })
      .def("__repr__", [](const ve::EnergyReport& r) {
        return "EnergyReport(method='" + std::string(to_string(r.method)) +
               "', n=" + std::to_string(r.energies.size()) + ", total=" + std::to_string(r.total) +
               ")";
      });

  m.def("parse_graph6", [](const std::string& text) { return ve::parse_graph6(text); },
        py::arg("text"), "Decode a graph6 line.");
  m.def("write_graph6", &ve::write_graph6, py::arg("graph"), "Encode a graph as graph6.");

  m.def("catalog_names", [] {
    std::vector<std::string> names;
    for (ve::NamedGraphId id : ve::kAllNamedGraphs) names.emplace_back(ve::to_string(id));
    return names;
  });
  m.def("named_graph", &graph_by_name, py::arg("name"));
  m.def("lcf_graph", &ve::lcf_graph, py::arg("shifts"), py::arg("repeats"));
  m.def("generalized_petersen", &ve::generalized_petersen, py::arg("n"), py::arg("k"));
  m.def("shrikhande_graph", &ve::shrikhande_graph);

  m.def("spectrum", [](const ve::Graph& g) {
    const ve::Spectrum s = ve::eigendecompose(g.adjacency_matrix());
    return std::make_pair(s.values, rows_of(s.vectors));
  }, py::arg("graph"), "Eigenvalues (ascending) and the eigenvector matrix, row per vertex.");

  m.def("eigenvalue_classes", [](const ve::Graph& g, double tol) {
    const ve::Spectrum s = ve::eigendecompose(g.adjacency_matrix());
    std::vector<std::pair<double, std::vector<std::size_t>>> out;
    for (const auto& c : ve::cluster_eigenvalues(s, tol).classes)
      out.emplace_back(c.representative, c.members);
    return out;
  }, py::arg("graph"), py::arg("tol") = ve::kDefaultClusterTolerance,
     "Distinct eigenvalue classes as (representative, member indices) pairs.");

  m.def("weight_matrix", [](const ve::Graph& g) {
    return rows_of(ve::weight_matrix(ve::eigendecompose(g.adjacency_matrix())));
  }, py::arg("graph"), "Doubly stochastic squared-eigenvector weights.");

  m.def("class_weights", [](const ve::Graph& g, double tol) {
    const ve::Spectrum s = ve::eigendecompose(g.adjacency_matrix());
    return rows_of(ve::class_weights(ve::weight_matrix(s), ve::cluster_eigenvalues(s, tol)));
  }, py::arg("graph"), py::arg("tol") = ve::kDefaultClusterTolerance);

  m.def("matrix_abs", [](const ve::Graph& g) {
    return rows_of(ve::matrix_abs(ve::eigendecompose(g.adjacency_matrix())));
  }, py::arg("graph"), "The positive-semidefinite absolute value of the adjacency matrix.");

  m.def("walk_table", [](const ve::Graph& g, std::size_t kmax) {
    return rows_of(ve::walk_table(g, kmax).counts);
  }, py::arg("graph"), py::arg("kmax"),
     "Closed-walk counts: row k holds the diagonal of A^k.");

  m.def("vertex_energies", [](const ve::Graph& g, const std::string& method) {
    return ve::vertex_energies(g, method_by_name(method));
  }, py::arg("graph"), py::arg("method") = "spectral");

  m.def("graph_energy", &ve::graph_energy, py::arg("graph"),
        "Sum of the absolute adjacency eigenvalues.");
}
