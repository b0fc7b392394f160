#pragma once

#include <cstddef>
#include <vector>

#include "vertexenergy/linalg.hpp"

namespace vertexenergy {

/// Eigendecomposition of a real symmetric matrix: `values` ascending,
/// column j of `vectors` is a unit eigenvector for values[j].
struct Spectrum {
  std::vector<double> values;
  Matrix vectors;
};

/// Absolute tolerance used to group numerically coincident eigenvalues.
/// Adjacency spectra of the shipped catalog have gaps of 0.07 or more, so
/// this sits many orders of magnitude away from both the gaps and the
/// rounding error of the decomposition.
inline constexpr double kDefaultClusterTolerance = 1e-6;

inline constexpr int kMaxJacobiSweeps = 30;

/// One group of numerically coincident eigenvalues.
struct EigenClass {
  double representative = 0.0;     // mean of the member eigenvalues
  std::vector<std::size_t> members;  // indices into Spectrum::values
};

struct EigenClasses {
  std::vector<EigenClass> classes;  // representatives strictly increasing
  double tolerance = kDefaultClusterTolerance;

  std::size_t count() const { return classes.size(); }
};

/// Cyclic Jacobi diagonalization. Deterministic for a fixed input (fixed
/// rotation order); throws ConvergenceFailureError after kMaxJacobiSweeps.
Spectrum eigendecompose(const Matrix& symmetric);
Spectrum eigendecompose(const IntMatrix& adjacency);

/// Greedy left-to-right clustering of the sorted eigenvalues: a new class
/// starts whenever the gap to the previous value exceeds tol. Throws
/// AmbiguousClusteringError when a class spreads wider than tol/2 while an
/// adjacent between-class gap is under 2*tol (tol poorly chosen for this
/// spectrum).
EigenClasses cluster_eigenvalues(const Spectrum& s, double tol = kDefaultClusterTolerance);

/// Doubly stochastic weight matrix with p_ij = u_ij^2.
Matrix weight_matrix(const Spectrum& s);

/// Collapses the weight matrix onto eigenvalue classes:
/// entry (i, c) = sum of p_ij over j in class c. Rows sum to 1.
Matrix class_weights(const Matrix& weights, const EigenClasses& classes);

/// U diag(|lambda|) U^T, the positive-semidefinite absolute value.
Matrix matrix_abs(const Spectrum& s);

/// Square root of a symmetric positive-semidefinite matrix by an inverse-free
/// Newton-Schulz iteration. Serves as a cross-check for matrix_abs that never
/// touches the eigensolver. Throws ConvergenceFailureError when the residual
/// cannot be driven below 1e-8 * max(1, max|m_ij|) within the iteration cap
/// (e.g. for indefinite input).
Matrix psd_sqrt(const Matrix& m);

}  // namespace vertexenergy
