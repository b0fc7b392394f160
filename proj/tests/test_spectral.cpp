#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "testutil.hpp"
#include "vertexenergy/catalog.hpp"
#include "vertexenergy/errors.hpp"
#include "vertexenergy/spectral.hpp"

using namespace vertexenergy;
using vetest::near;

namespace {

// The Spectrum contract: residual and orthogonality within 64*n*eps, trace
// preserved.
void check_spectrum_contract(const IntMatrix& a, const Spectrum& s) {
  const std::size_t n = a.rows();
  const double eps = std::numeric_limits<double>::epsilon();
  const double bound = 64.0 * static_cast<double>(n) * eps * std::max<double>(1, max_abs(to_real(a)));

  const Matrix av = multiply(to_real(a), s.vectors);
  double residual = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      residual = std::max(residual, std::abs(av(i, j) - s.vectors(i, j) * s.values[j]));
  CHECK(residual <= bound);

  const Matrix gram = multiply(transpose(s.vectors), s.vectors);
  CHECK(max_abs_diff(gram, Matrix::identity(n)) <= 64.0 * static_cast<double>(n) * eps);

  double trace = 0.0;
  for (double v : s.values) trace += v;
  CHECK(std::abs(trace) <= 1e-10 * static_cast<double>(n));

  for (std::size_t j = 0; j + 1 < n; ++j) CHECK(s.values[j] <= s.values[j + 1]);
}

}  // namespace

TEST_CASE("eigendecompose small graphs") {
  const Spectrum k2 = eigendecompose(Graph(2, {{0, 1}}).adjacency_matrix());
  CHECK(near(k2.values[0], -1.0, 1e-14));
  CHECK(near(k2.values[1], 1.0, 1e-14));

  const Spectrum k1 = eigendecompose(Graph(1, {}).adjacency_matrix());
  CHECK(k1.values[0] == 0.0);
  CHECK(k1.vectors(0, 0) == 1.0);
}

TEST_CASE("eigendecompose catalog spectra") {
  SUBCASE("petersen") {
    const Spectrum s = eigendecompose(named_graph(NamedGraphId::Petersen).adjacency_matrix());
    for (std::size_t j = 0; j < 4; ++j) CHECK(near(s.values[j], -2.0, 1e-9));
    for (std::size_t j = 4; j < 9; ++j) CHECK(near(s.values[j], 1.0, 1e-9));
    CHECK(near(s.values[9], 3.0, 1e-9));
  }
  SUBCASE("heawood") {
    const Spectrum s = eigendecompose(named_graph(NamedGraphId::Heawood).adjacency_matrix());
    const double r2 = std::sqrt(2.0);
    CHECK(near(s.values[0], -3.0, 1e-9));
    for (std::size_t j = 1; j < 7; ++j) CHECK(near(s.values[j], -r2, 1e-9));
    for (std::size_t j = 7; j < 13; ++j) CHECK(near(s.values[j], r2, 1e-9));
    CHECK(near(s.values[13], 3.0, 1e-9));
  }
}

TEST_CASE("spectrum contract on corpus and catalog") {
  for (const Graph& g : vetest::random_corpus(200))
    check_spectrum_contract(g.adjacency_matrix(), eigendecompose(g.adjacency_matrix()));
  for (NamedGraphId id : kAllNamedGraphs) {
    const IntMatrix a = named_graph(id).adjacency_matrix();
    check_spectrum_contract(a, eigendecompose(a));
  }
}

TEST_CASE("eigendecompose input validation") {
  Matrix m(2, 2);
  m(0, 1) = 1.0;  // asymmetric
  CHECK_THROWS_AS(eigendecompose(m), BadParametersError);
  CHECK_THROWS_AS(eigendecompose(Matrix(2, 3)), DimensionMismatchError);
}

TEST_CASE("cluster_eigenvalues") {
  SUBCASE("catalog multiplicities") {
    auto multiplicities = [](NamedGraphId id) {
      const Spectrum s = eigendecompose(named_graph(id).adjacency_matrix());
      std::vector<std::size_t> out;
      for (const auto& c : cluster_eigenvalues(s).classes) out.push_back(c.members.size());
      return out;
    };
    CHECK(multiplicities(NamedGraphId::Petersen) == std::vector<std::size_t>{4, 5, 1});
    CHECK(multiplicities(NamedGraphId::Desargues) == std::vector<std::size_t>{1, 4, 5, 5, 4, 1});
    CHECK(multiplicities(NamedGraphId::Frucht) == std::vector<std::size_t>(12, 1));
    CHECK(multiplicities(NamedGraphId::TutteCoxeter) == std::vector<std::size_t>{1, 9, 10, 9, 1});
    CHECK(multiplicities(NamedGraphId::Heawood) == std::vector<std::size_t>{1, 6, 6, 1});
    CHECK(multiplicities(NamedGraphId::Shrikhande) == std::vector<std::size_t>{9, 6, 1});
  }

  SUBCASE("representatives are strictly increasing means") {
    const Spectrum s = eigendecompose(named_graph(NamedGraphId::Petersen).adjacency_matrix());
    const EigenClasses classes = cluster_eigenvalues(s);
    REQUIRE(classes.count() == 3);
    CHECK(near(classes.classes[0].representative, -2.0, 1e-12));
    CHECK(near(classes.classes[1].representative, 1.0, 1e-12));
    CHECK(near(classes.classes[2].representative, 3.0, 1e-12));
    for (std::size_t k = 0; k + 1 < classes.count(); ++k)
      CHECK(classes.classes[k + 1].representative - classes.classes[k].representative >
            classes.tolerance);
  }

  SUBCASE("classes partition all indices") {
    const Spectrum s = eigendecompose(named_graph(NamedGraphId::Desargues).adjacency_matrix());
    const EigenClasses classes = cluster_eigenvalues(s);
    std::vector<bool> seen(s.values.size(), false);
    for (const auto& c : classes.classes)
      for (std::size_t j : c.members) {
        CHECK_FALSE(seen[j]);
        seen[j] = true;
        CHECK(std::abs(s.values[j] - c.representative) <= classes.tolerance);
      }
    for (bool b : seen) CHECK(b);
  }

  SUBCASE("poorly chosen tolerance is flagged") {
    Spectrum fake;
    fake.values = {0.0, 0.4e-6, 0.8e-6, 1.2e-6, 3.0e-6};
    fake.vectors = Matrix::identity(5);
    CHECK_THROWS_AS(cluster_eigenvalues(fake, 1e-6), AmbiguousClusteringError);
    CHECK_THROWS_AS(cluster_eigenvalues(fake, -1.0), BadParametersError);
    CHECK(cluster_eigenvalues(fake, 1e-5).count() == 1);
  }
}

TEST_CASE("weight matrix") {
  SUBCASE("k2 weights are uniform") {
    const Matrix p = weight_matrix(eigendecompose(Graph(2, {{0, 1}}).adjacency_matrix()));
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) CHECK(near(p(i, j), 0.5, 1e-12));
  }

  SUBCASE("doubly stochastic and nonnegative on the corpus") {
    for (const Graph& g : vetest::random_corpus(200)) {
      const Matrix p = weight_matrix(eigendecompose(g.adjacency_matrix()));
      const std::size_t n = p.rows();
      for (std::size_t i = 0; i < n; ++i) {
        double row = 0.0, col = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
          CHECK(p(i, j) >= 0.0);
          row += p(i, j);
          col += p(j, i);
        }
        CHECK(near(row, 1.0, 1e-10));
        CHECK(near(col, 1.0, 1e-10));
      }
    }
  }
}

TEST_CASE("class weights") {
  SUBCASE("petersen rows") {
    const Spectrum s = eigendecompose(named_graph(NamedGraphId::Petersen).adjacency_matrix());
    const Matrix q = class_weights(weight_matrix(s), cluster_eigenvalues(s));
    REQUIRE(q.cols() == 3);
    for (std::size_t i = 0; i < 10; ++i) {
      CHECK(near(q(i, 0), 0.4, 1e-10));
      CHECK(near(q(i, 1), 0.5, 1e-10));
      CHECK(near(q(i, 2), 0.1, 1e-10));
    }
  }

  SUBCASE("desargues and shrikhande rows") {
    const Spectrum sd = eigendecompose(named_graph(NamedGraphId::Desargues).adjacency_matrix());
    const Matrix qd = class_weights(weight_matrix(sd), cluster_eigenvalues(sd));
    const double expected_d[] = {0.05, 0.2, 0.25, 0.25, 0.2, 0.05};
    for (std::size_t i = 0; i < 20; ++i)
      for (std::size_t k = 0; k < 6; ++k) CHECK(near(qd(i, k), expected_d[k], 1e-10));

    const Spectrum ss = eigendecompose(named_graph(NamedGraphId::Shrikhande).adjacency_matrix());
    const Matrix qs = class_weights(weight_matrix(ss), cluster_eigenvalues(ss));
    const double expected_s[] = {0.5625, 0.375, 0.0625};
    for (std::size_t i = 0; i < 16; ++i)
      for (std::size_t k = 0; k < 3; ++k) CHECK(near(qs(i, k), expected_s[k], 1e-10));
  }

  SUBCASE("path end vertex") {
    const Spectrum s = eigendecompose(Graph(3, {{0, 1}, {1, 2}}).adjacency_matrix());
    const Matrix q = class_weights(weight_matrix(s), cluster_eigenvalues(s));
    CHECK(near(q(0, 0), 0.25, 1e-12));
    CHECK(near(q(0, 1), 0.5, 1e-12));
    CHECK(near(q(0, 2), 0.25, 1e-12));
  }

  SUBCASE("singleton classes collapse to the weight matrix itself") {
    const Spectrum s = eigendecompose(named_graph(NamedGraphId::Frucht).adjacency_matrix());
    const Matrix p = weight_matrix(s);
    const Matrix q = class_weights(p, cluster_eigenvalues(s));
    CHECK(max_abs_diff(p, q) == 0.0);
  }

  SUBCASE("row sums stay 1") {
    for (const Graph& g : vetest::random_corpus(60)) {
      const Spectrum s = eigendecompose(g.adjacency_matrix());
      const Matrix q = class_weights(weight_matrix(s), cluster_eigenvalues(s));
      for (std::size_t i = 0; i < q.rows(); ++i) {
        double row = 0.0;
        for (std::size_t k = 0; k < q.cols(); ++k) row += q(i, k);
        CHECK(near(row, 1.0, 1e-10));
      }
    }
  }

  SUBCASE("mismatched inputs are rejected") {
    const Spectrum s3 = eigendecompose(Graph(3, {{0, 1}, {1, 2}}).adjacency_matrix());
    const Spectrum s4 = eigendecompose(Graph(4, {{0, 1}}).adjacency_matrix());
    CHECK_THROWS_AS(class_weights(weight_matrix(s3), cluster_eigenvalues(s4)),
                    DimensionMismatchError);
  }
}

TEST_CASE("matrix_abs") {
  SUBCASE("k2 gives the identity") {
    const Matrix m = matrix_abs(eigendecompose(Graph(2, {{0, 1}}).adjacency_matrix()));
    CHECK(max_abs_diff(m, Matrix::identity(2)) <= 1e-12);
  }

  SUBCASE("k1 gives zero") {
    const Matrix m = matrix_abs(eigendecompose(Graph(1, {}).adjacency_matrix()));
    CHECK(m(0, 0) == 0.0);
  }

  SUBCASE("petersen diagonal is constant 1.6") {
    const Matrix m = matrix_abs(eigendecompose(named_graph(NamedGraphId::Petersen).adjacency_matrix()));
    for (std::size_t i = 0; i < 10; ++i) CHECK(near(m(i, i), 1.6, 1e-9));
  }

  SUBCASE("trace equals the absolute eigenvalue sum on the corpus") {
    for (const Graph& g : vetest::random_corpus(200)) {
      const Spectrum s = eigendecompose(g.adjacency_matrix());
      const Matrix m = matrix_abs(s);
      double trace = 0.0, abs_sum = 0.0;
      for (std::size_t i = 0; i < m.rows(); ++i) trace += m(i, i);
      for (double v : s.values) abs_sum += std::abs(v);
      CHECK(near(trace, abs_sum, 1e-10));
    }
  }
}

TEST_CASE("psd_sqrt") {
  SUBCASE("identity and diagonal cases") {
    CHECK(max_abs_diff(psd_sqrt(Matrix::identity(3)), Matrix::identity(3)) <= 1e-12);

    Matrix d(2, 2);
    d(0, 0) = 4.0;
    d(1, 1) = 9.0;
    const Matrix r = psd_sqrt(d);
    CHECK(near(r(0, 0), 2.0, 1e-9));
    CHECK(near(r(1, 1), 3.0, 1e-9));
    CHECK(near(r(0, 1), 0.0, 1e-9));

    CHECK(max_abs(psd_sqrt(Matrix(3, 3))) == 0.0);
  }

  SUBCASE("matches matrix_abs on the frucht graph") {
    const IntMatrix a = named_graph(NamedGraphId::Frucht).adjacency_matrix();
    const Matrix m = multiply(to_real(a), to_real(a));  // A * A^T with A symmetric
    const Matrix via_iteration = psd_sqrt(m);
    const Matrix via_spectrum = matrix_abs(eigendecompose(a));
    CHECK(max_abs_diff(via_iteration, via_spectrum) <= 1e-8);
  }

  SUBCASE("residual postcondition on the corpus") {
    for (const Graph& g : vetest::random_corpus(60)) {
      const Matrix a = to_real(g.adjacency_matrix());
      const Matrix m = multiply(a, a);
      const Matrix r = psd_sqrt(m);
      CHECK(max_abs_diff(multiply(r, r), m) <= 1e-8 * std::max(1.0, max_abs(m)));
    }
  }

  SUBCASE("rejects indefinite and asymmetric input") {
    Matrix neg(2, 2);
    neg(0, 0) = 1.0;
    neg(1, 1) = -1.0;
    CHECK_THROWS_AS(psd_sqrt(neg), ConvergenceFailureError);

    Matrix asym(2, 2);
    asym(0, 1) = 0.5;
    CHECK_THROWS_AS(psd_sqrt(asym), BadParametersError);
  }
}
