#pragma once

#include <cstdint>
#include <vector>

#include "vertexenergy/graph.hpp"
#include "vertexenergy/linalg.hpp"

namespace vertexenergy {

/// Exact closed-walk counts: entry (k, i) is the number of closed walks of
/// length k at vertex i, i.e. the i-th diagonal entry of A^k. Rows run
/// k = 0..kmax. All arithmetic is 64-bit integer with overflow detection.
struct WalkTable {
  std::size_t n = 0;
  std::size_t kmax = 0;
  IntMatrix counts;  // (kmax+1) x n

  std::int64_t at(std::size_t k, std::size_t i) const { return counts(k, i); }
};

/// Computes the table by iterated exact integer matrix multiplication.
/// Throws WalkOverflowError (naming the power and vertex) if any entry
/// leaves the signed 64-bit range.
WalkTable walk_table(const Graph& g, std::size_t kmax);

/// Column v of the table: the moment vector (phi_v(A^0), ..., phi_v(A^kmax)).
std::vector<std::int64_t> moments_for_vertex(const WalkTable& t, std::size_t v);

}  // namespace vertexenergy
