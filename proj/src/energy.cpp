#include "vertexenergy/energy.hpp"

#include <cmath>
#include <string>

#include "vertexenergy/errors.hpp"
#include "vertexenergy/walks.hpp"

namespace vertexenergy {

namespace {

double eigen_residual(const IntMatrix& adjacency, const Spectrum& s) {
  const Matrix a = to_real(adjacency);
  Matrix lhs = multiply(a, s.vectors);
  const std::size_t n = s.values.size();
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      worst = std::max(worst, std::abs(lhs(i, j) - s.vectors(i, j) * s.values[j]));
  return worst;
}

double max_row_sum_deviation(const Matrix& weights) {
  double worst = 0.0;
  for (std::size_t i = 0; i < weights.rows(); ++i) {
    double sum = 0.0;
    for (std::size_t j = 0; j < weights.cols(); ++j) sum += weights(i, j);
    worst = std::max(worst, std::abs(sum - 1.0));
  }
  return worst;
}

double min_entry(const Matrix& weights) {
  double least = weights.data().empty() ? 0.0 : weights.data().front();
  for (double x : weights.data()) least = std::min(least, x);
  return least;
}

double sum_of(const std::vector<double>& xs) {
  double sum = 0.0;
  for (double x : xs) sum += x;
  return sum;
}

}  // namespace

std::string_view to_string(Method m) {
  switch (m) {
    case Method::Spectral: return "spectral";
    case Method::Weights: return "weights";
    case Method::Moments: return "moments";
    case Method::Transitive: return "transitive";
  }
  return "unknown";
}

std::optional<Method> method_from_string(std::string_view name) {
  for (Method m : {Method::Spectral, Method::Weights, Method::Moments, Method::Transitive})
    if (name == to_string(m)) return m;
  return std::nullopt;
}

MomentSystem build_moment_system(const EigenClasses& classes) {
  MomentSystem ms;
  ms.nodes.reserve(classes.count());
  for (const auto& c : classes.classes) ms.nodes.push_back(c.representative);
  const std::size_t d = ms.nodes.size();
  ms.vandermonde = Matrix(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    double power = 1.0;
    for (std::size_t k = 0; k < d; ++k) {
      ms.vandermonde(k, j) = power;
      power *= ms.nodes[j];
    }
  }
  return ms;
}

MomentSolution solve_moment_system(const MomentSystem& ms, const std::vector<std::int64_t>& rhs) {
  const std::size_t d = ms.nodes.size();
  if (rhs.size() != d)
    throw DimensionMismatchError("solve_moment_system: rhs length " + std::to_string(rhs.size()) +
                                 " does not match " + std::to_string(d) + " classes");
  std::vector<double> b(d);
  double rhs_scale = 0.0;
  for (std::size_t k = 0; k < d; ++k) {
    b[k] = static_cast<double>(rhs[k]);
    rhs_scale = std::max(rhs_scale, std::abs(b[k]));
  }

  MomentSolution sol;
  sol.weights = solve_linear(ms.vandermonde, b);
  for (std::size_t k = 0; k < d; ++k) {
    double row = 0.0;
    for (std::size_t j = 0; j < d; ++j) row += ms.vandermonde(k, j) * sol.weights[j];
    sol.residual = std::max(sol.residual, std::abs(row - b[k]));
  }
  if (sol.residual > 1e-6 * rhs_scale)
    throw IllConditionedError("solve_moment_system: residual " + std::to_string(sol.residual) +
                              " exceeds 1e-6 * " + std::to_string(rhs_scale) +
                              "; eigenvalue nodes too close for the clustering tolerance");
  return sol;
}

EnergyReport vertex_energies_spectral(const Graph& g) {
  const IntMatrix adjacency = g.adjacency_matrix();
  const Spectrum s = eigendecompose(adjacency);
  const Matrix abs_a = matrix_abs(s);
  const std::size_t n = g.vertex_count();

  EnergyReport report;
  report.method = Method::Spectral;
  report.energies.resize(n);
  for (std::size_t i = 0; i < n; ++i) report.energies[i] = abs_a(i, i);
  report.total = sum_of(report.energies);

  const Matrix p = weight_matrix(s);
  report.diagnostics.eigen_residual = eigen_residual(adjacency, s);
  report.diagnostics.max_row_sum_dev = max_row_sum_deviation(p);
  report.diagnostics.min_weight = min_entry(p);
  return report;
}

EnergyReport vertex_energies_weights(const Graph& g) {
  const IntMatrix adjacency = g.adjacency_matrix();
  const Spectrum s = eigendecompose(adjacency);
  const Matrix p = weight_matrix(s);
  const std::size_t n = g.vertex_count();

  EnergyReport report;
  report.method = Method::Weights;
  report.energies.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) report.energies[i] += p(i, j) * std::abs(s.values[j]);
  report.total = sum_of(report.energies);

  report.diagnostics.eigen_residual = eigen_residual(adjacency, s);
  report.diagnostics.max_row_sum_dev = max_row_sum_deviation(p);
  report.diagnostics.min_weight = min_entry(p);
  return report;
}

EnergyReport vertex_energies_moments(const Graph& g) {
  const IntMatrix adjacency = g.adjacency_matrix();
  const Spectrum s = eigendecompose(adjacency);
  const EigenClasses classes = cluster_eigenvalues(s);
  const MomentSystem ms = build_moment_system(classes);
  const std::size_t d = ms.nodes.size();
  const std::size_t n = g.vertex_count();
  const WalkTable table = walk_table(g, d - 1);

  EnergyReport report;
  report.method = Method::Moments;
  report.energies.assign(n, 0.0);
  report.diagnostics.eigen_residual = eigen_residual(adjacency, s);
  report.diagnostics.min_weight = 0.0;
  double worst_relative_residual = 0.0;

  for (std::size_t v = 0; v < n; ++v) {
    const std::vector<std::int64_t> rhs = moments_for_vertex(table, v);
    const MomentSolution sol = solve_moment_system(ms, rhs);

    double rhs_scale = 1.0;
    for (std::int64_t m : rhs) rhs_scale = std::max(rhs_scale, std::abs(static_cast<double>(m)));
    worst_relative_residual = std::max(worst_relative_residual, sol.residual / rhs_scale);

    double row_sum = 0.0;
    for (std::size_t c = 0; c < d; ++c) {
      const double q = sol.weights[c];
      if (q < -1e-6)
        throw IllConditionedError("vertex_energies_moments: class weight " + std::to_string(q) +
                                  " at vertex " + std::to_string(v) +
                                  " below the -1e-6 noise floor");
      report.diagnostics.min_weight = std::min(report.diagnostics.min_weight, q);
      row_sum += q;
      report.energies[v] += q * std::abs(ms.nodes[c]);
    }
    report.diagnostics.max_row_sum_dev =
        std::max(report.diagnostics.max_row_sum_dev, std::abs(row_sum - 1.0));
  }
  report.diagnostics.moment_residual = worst_relative_residual;
  report.total = sum_of(report.energies);
  return report;
}

EnergyReport transitive_energy(const Graph& g) {
  if (!g.regular_degree())
    throw NotPlausiblyTransitiveError(
        "transitive_energy: degree sequence is not constant, so the graph cannot be "
        "vertex-transitive");
  const IntMatrix adjacency = g.adjacency_matrix();
  const Spectrum s = eigendecompose(adjacency);
  double energy = 0.0;
  for (double v : s.values) energy += std::abs(v);
  const std::size_t n = g.vertex_count();

  EnergyReport report;
  report.method = Method::Transitive;
  report.energies.assign(n, energy / static_cast<double>(n));
  report.total = sum_of(report.energies);
  report.diagnostics.eigen_residual = eigen_residual(adjacency, s);
  return report;
}

EnergyReport vertex_energies(const Graph& g, Method method) {
  switch (method) {
    case Method::Spectral: return vertex_energies_spectral(g);
    case Method::Weights: return vertex_energies_weights(g);
    case Method::Moments: return vertex_energies_moments(g);
    case Method::Transitive: return transitive_energy(g);
  }
  throw BadParametersError("vertex_energies: unknown method");
}

double graph_energy(const Graph& g) {
  const Spectrum s = eigendecompose(g.adjacency_matrix());
  double energy = 0.0;
  for (double v : s.values) energy += std::abs(v);
  return energy;
}

}  // namespace vertexenergy
