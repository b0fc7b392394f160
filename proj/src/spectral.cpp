#include "vertexenergy/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "vertexenergy/errors.hpp"

namespace vertexenergy {

namespace {

double offdiag_norm(const Matrix& a) {
  double sum = 0.0;
  for (std::size_t p = 0; p + 1 < a.rows(); ++p)
    for (std::size_t q = p + 1; q < a.cols(); ++q) sum += 2.0 * a(p, q) * a(p, q);
  return std::sqrt(sum);
}

void require_square_symmetric(const Matrix& m, const char* who) {
  if (m.rows() != m.cols()) throw DimensionMismatchError(std::string(who) + ": matrix not square");
  const double scale = std::max(1.0, max_abs(m));
  for (std::size_t i = 0; i + 1 < m.rows(); ++i)
    for (std::size_t j = i + 1; j < m.cols(); ++j)
      if (std::abs(m(i, j) - m(j, i)) > 1e-10 * scale)
        throw BadParametersError(std::string(who) + ": matrix not symmetric");
}

}  // namespace

Spectrum eigendecompose(const Matrix& symmetric) {
  require_square_symmetric(symmetric, "eigendecompose");
  const std::size_t n = symmetric.rows();
  Matrix a = symmetric;
  Matrix vectors = Matrix::identity(n);

  // Frobenius norm is invariant under the rotations, so the stopping
  // threshold can be fixed up front.
  const double scale = frobenius_norm(a);
  const double stop = std::numeric_limits<double>::epsilon() * scale;

  bool converged = scale == 0.0;
  for (int sweep = 0; !converged && sweep < kMaxJacobiSweeps; ++sweep) {
    if (offdiag_norm(a) <= stop) {
      converged = true;
      break;
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        // Entries too small to affect the diagonal are flushed to zero.
        const double g = 100.0 * std::abs(apq);
        if (std::abs(a(p, p)) + g == std::abs(a(p, p)) &&
            std::abs(a(q, q)) + g == std::abs(a(q, q))) {
          a(p, q) = a(q, p) = 0.0;
          continue;
        }
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 1.0 / (2.0 * theta);
        } else {
          t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
          if (theta < 0.0) t = -t;
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);

        a(p, p) -= t * apq;
        a(q, q) += t * apq;
        a(p, q) = a(q, p) = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
          if (r != p && r != q) {
            const double arp = a(r, p);
            const double arq = a(r, q);
            a(r, p) = a(p, r) = arp - s * (arq + tau * arp);
            a(r, q) = a(q, r) = arq + s * (arp - tau * arq);
          }
          const double vrp = vectors(r, p);
          const double vrq = vectors(r, q);
          vectors(r, p) = vrp - s * (vrq + tau * vrp);
          vectors(r, q) = vrq + s * (vrp - tau * vrq);
        }
      }
    }
  }
  if (!converged && offdiag_norm(a) > stop)
    throw ConvergenceFailureError("eigendecompose: off-diagonal norm " +
                                  std::to_string(offdiag_norm(a)) + " after " +
                                  std::to_string(kMaxJacobiSweeps) + " sweeps");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });

  Spectrum spectrum;
  spectrum.values.resize(n);
  spectrum.vectors = Matrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    spectrum.values[j] = a(order[j], order[j]);
    for (std::size_t i = 0; i < n; ++i) spectrum.vectors(i, j) = vectors(i, order[j]);
  }
  return spectrum;
}

Spectrum eigendecompose(const IntMatrix& adjacency) { return eigendecompose(to_real(adjacency)); }

EigenClasses cluster_eigenvalues(const Spectrum& s, double tol) {
  if (tol <= 0.0) throw BadParametersError("cluster_eigenvalues: tolerance must be positive");
  EigenClasses out;
  out.tolerance = tol;
  const std::size_t n = s.values.size();
  for (std::size_t j = 0; j < n; ++j) {
    if (out.classes.empty() || s.values[j] - s.values[out.classes.back().members.back()] > tol)
      out.classes.emplace_back();
    out.classes.back().members.push_back(j);
  }
  for (auto& c : out.classes) {
    double sum = 0.0;
    for (std::size_t j : c.members) sum += s.values[j];
    c.representative = sum / static_cast<double>(c.members.size());
  }
  for (std::size_t k = 0; k < out.classes.size(); ++k) {
    const auto& members = out.classes[k].members;
    const double spread = s.values[members.back()] - s.values[members.front()];
    if (spread <= tol / 2.0) continue;
    const double gap_prev =
        k > 0 ? s.values[members.front()] - s.values[out.classes[k - 1].members.back()]
              : std::numeric_limits<double>::infinity();
    const double gap_next =
        k + 1 < out.classes.size()
            ? s.values[out.classes[k + 1].members.front()] - s.values[members.back()]
            : std::numeric_limits<double>::infinity();
    if (gap_prev < 2.0 * tol || gap_next < 2.0 * tol)
      throw AmbiguousClusteringError(
          "cluster_eigenvalues: class spread " + std::to_string(spread) +
          " exceeds tol/2 next to a between-class gap under 2*tol; tolerance " +
          std::to_string(tol) + " suits this spectrum poorly");
  }
  return out;
}

Matrix weight_matrix(const Spectrum& s) {
  const std::size_t n = s.values.size();
  Matrix p(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) p(i, j) = s.vectors(i, j) * s.vectors(i, j);
  return p;
}

Matrix class_weights(const Matrix& weights, const EigenClasses& classes) {
  const std::size_t n = weights.rows();
  std::size_t total = 0;
  for (const auto& c : classes.classes) total += c.members.size();
  if (total != weights.cols() || weights.cols() != n)
    throw DimensionMismatchError("class_weights: classes do not partition the weight columns");

  Matrix q(n, classes.count());
  for (std::size_t k = 0; k < classes.count(); ++k)
    for (std::size_t j : classes.classes[k].members) {
      if (j >= n) throw DimensionMismatchError("class_weights: member index out of range");
      for (std::size_t i = 0; i < n; ++i) q(i, k) += weights(i, j);
    }
  return q;
}

Matrix matrix_abs(const Spectrum& s) {
  const std::size_t n = s.values.size();
  Matrix scaled = s.vectors;
  for (std::size_t j = 0; j < n; ++j) {
    const double a = std::abs(s.values[j]);
    for (std::size_t i = 0; i < n; ++i) scaled(i, j) *= a;
  }
  Matrix result = multiply(scaled, transpose(s.vectors));
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      result(i, j) = result(j, i) = 0.5 * (result(i, j) + result(j, i));
  return result;
}

Matrix psd_sqrt(const Matrix& m) {
  require_square_symmetric(m, "psd_sqrt");
  const std::size_t n = m.rows();
  const double scale = frobenius_norm(m);
  if (scale == 0.0) return Matrix(n, n);

  const double target = std::max(1.0, max_abs(m));
  const double sqrt_scale = std::sqrt(scale);

  Matrix y(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) y(i, j) = m(i, j) / scale;
  Matrix z = Matrix::identity(n);

  Matrix best;
  double best_residual = std::numeric_limits<double>::infinity();
  constexpr int kMaxIterations = 100;
  for (int iter = 0; iter < kMaxIterations; ++iter) {
    Matrix candidate = y;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) candidate(i, j) *= sqrt_scale;
    const double residual = max_abs_diff(multiply(candidate, candidate), m);
    if (!std::isfinite(residual)) break;  // diverged (indefinite input); keep the best iterate
    if (residual < best_residual) {
      best_residual = residual;
      best = candidate;
    }
    if (residual <= 1e-10 * target) break;

    Matrix f = multiply(z, y);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) f(i, j) = (i == j ? 1.5 : 0.0) - 0.5 * f(i, j);
    y = multiply(y, f);
    z = multiply(f, z);
  }

  if (best_residual > 1e-8 * target)
    throw ConvergenceFailureError("psd_sqrt: residual " + std::to_string(best_residual) +
                                  " after iteration cap (input singular, defective or indefinite)");
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) best(i, j) = best(j, i) = 0.5 * (best(i, j) + best(j, i));
  return best;
}

}  // namespace vertexenergy
