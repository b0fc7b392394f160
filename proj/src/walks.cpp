#include "vertexenergy/walks.hpp"

#include <string>

#include "vertexenergy/errors.hpp"

namespace vertexenergy {

namespace {

// a * adjacency with per-entry overflow checks. k names the power being
// formed, only for error reporting.
IntMatrix checked_multiply(const IntMatrix& a, const IntMatrix& b, std::size_t k) {
  const std::size_t n = a.rows();
  IntMatrix c(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::int64_t acc = 0;
      for (std::size_t l = 0; l < n; ++l) {
        std::int64_t prod;
        if (__builtin_mul_overflow(a(i, l), b(l, j), &prod) ||
            __builtin_add_overflow(acc, prod, &acc))
          throw WalkOverflowError("walk counts exceed the signed 64-bit range at power k=" +
                                  std::to_string(k) + ", vertex " + std::to_string(i));
      }
      c(i, j) = acc;
    }
  }
  return c;
}

}  // namespace

WalkTable walk_table(const Graph& g, std::size_t kmax) {
  const std::size_t n = g.vertex_count();
  WalkTable table;
  table.n = n;
  table.kmax = kmax;
  table.counts = IntMatrix(kmax + 1, n);

  const IntMatrix adjacency = g.adjacency_matrix();
  IntMatrix power = IntMatrix::identity(n);
  for (std::size_t k = 0; k <= kmax; ++k) {
    if (k > 0) power = checked_multiply(power, adjacency, k);
    for (std::size_t i = 0; i < n; ++i) table.counts(k, i) = power(i, i);
  }
  return table;
}

std::vector<std::int64_t> moments_for_vertex(const WalkTable& t, std::size_t v) {
  if (v >= t.n) throw OutOfRangeError("moments_for_vertex: vertex " + std::to_string(v) +
                                      " out of range for order " + std::to_string(t.n));
  std::vector<std::int64_t> column(t.kmax + 1);
  for (std::size_t k = 0; k <= t.kmax; ++k) column[k] = t.counts(k, v);
  return column;
}

}  // namespace vertexenergy
