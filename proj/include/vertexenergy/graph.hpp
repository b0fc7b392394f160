#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "vertexenergy/linalg.hpp"

namespace vertexenergy {

using Edge = std::pair<std::size_t, std::size_t>;

/// Simple undirected graph on vertices 0..n-1. Edges are deduplicated and
/// stored as ordered pairs (u < v); self-loops are rejected. Immutable after
/// construction.
class Graph {
 public:
  /// Throws OutOfRangeError if an endpoint is >= n, SelfLoopError if u == v,
  /// BadParametersError if n == 0.
  Graph(std::size_t n, const std::vector<Edge>& edges);

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }

  /// Sorted, deduplicated edge list with u < v in every pair.
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_edge(std::size_t u, std::size_t v) const;

  /// Throws OutOfRangeError if v >= n.
  std::size_t degree(std::size_t v) const;

  /// The common degree r when the graph is r-regular, otherwise empty.
  std::optional<std::size_t> regular_degree() const;

  /// Dense 0/1 adjacency matrix: symmetric, zero diagonal.
  IntMatrix adjacency_matrix() const;

  bool operator==(const Graph&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> degrees_;
};

}  // namespace vertexenergy
