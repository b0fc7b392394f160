#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "vertexenergy/graph.hpp"
#include "vertexenergy/spectral.hpp"

namespace vertexenergy {

enum class Method { Spectral, Weights, Moments, Transitive };

std::string_view to_string(Method m);
std::optional<Method> method_from_string(std::string_view name);

struct Diagnostics {
  double eigen_residual = 0.0;    // max entry of A*U - U*diag(values)
  double max_row_sum_dev = 0.0;   // worst |row sum - 1| of the weights used
  double min_weight = 0.0;        // most negative weight encountered
  std::optional<double> moment_residual;  // worst relative Vandermonde residual
};

/// Per-vertex energies, their sum, and how they were obtained.
struct EnergyReport {
  Method method = Method::Spectral;
  std::vector<double> energies;  // vertex-index order
  double total = 0.0;
  Diagnostics diagnostics;
};

/// Square moment system on the distinct eigenvalue classes: row k of the
/// matrix is nodes^k for k = 0..d-1, so the class weights of vertex v solve
/// vandermonde * q = (closed-walk counts of v).
struct MomentSystem {
  std::vector<double> nodes;  // ascending class representatives
  Matrix vandermonde;         // d x d
};

struct MomentSolution {
  std::vector<double> weights;
  double residual = 0.0;  // max |V*q - rhs|
};

MomentSystem build_moment_system(const EigenClasses& classes);

/// Solves for the class weights and verifies the residual postcondition
/// max|V*q - rhs| <= 1e-6 * max|rhs|; violations throw IllConditionedError
/// (eigenvalue nodes too close for the clustering tolerance).
MomentSolution solve_moment_system(const MomentSystem& ms, const std::vector<std::int64_t>& rhs);

/// Energy as the diagonal of |A| = U diag(|lambda|) U^T.
EnergyReport vertex_energies_spectral(const Graph& g);

/// Energy as sum_j u_ij^2 * |lambda_j| (squared-eigenvector weights).
EnergyReport vertex_energies_weights(const Graph& g);

/// Energy from exact closed-walk moments: per vertex, solve the square
/// Vandermonde system on the distinct eigenvalue classes, then take
/// sum_c q_c * |node_c|. Class weights below -1e-6 throw IllConditionedError.
EnergyReport vertex_energies_moments(const Graph& g);

/// Shortcut for vertex-transitive graphs: every vertex gets E(G)/n.
/// Only the necessary degree-regularity condition is checked
/// (NotPlausiblyTransitiveError otherwise); full transitivity is up to the
/// caller.
EnergyReport transitive_energy(const Graph& g);

EnergyReport vertex_energies(const Graph& g, Method method);

/// Total graph energy, the sum of the absolute eigenvalues.
double graph_energy(const Graph& g);

}  // namespace vertexenergy
