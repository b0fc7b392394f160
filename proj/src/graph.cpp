#include "vertexenergy/graph.hpp"

#include <algorithm>
#include <string>

#include "vertexenergy/errors.hpp"

namespace vertexenergy {

Graph::Graph(std::size_t n, const std::vector<Edge>& edges) : n_(n) {
  if (n == 0) throw BadParametersError("graph order must be at least 1");
  edges_.reserve(edges.size());
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n)
      throw OutOfRangeError("edge endpoint " + std::to_string(std::max(u, v)) +
                            " out of range for order " + std::to_string(n));
    if (u == v) throw SelfLoopError("self-loop at vertex " + std::to_string(u));
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

  degrees_.assign(n_, 0);
  for (const auto& [u, v] : edges_) {
    ++degrees_[u];
    ++degrees_[v];
  }
}

bool Graph::has_edge(std::size_t u, std::size_t v) const {
  if (u == v) return false;
  const Edge e{std::min(u, v), std::max(u, v)};
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::size_t Graph::degree(std::size_t v) const {
  if (v >= n_) throw OutOfRangeError("vertex " + std::to_string(v) + " out of range");
  return degrees_[v];
}

std::optional<std::size_t> Graph::regular_degree() const {
  const std::size_t r = degrees_[0];
  for (std::size_t d : degrees_)
    if (d != r) return std::nullopt;
  return r;
}

IntMatrix Graph::adjacency_matrix() const {
  IntMatrix a(n_, n_);
  for (const auto& [u, v] : edges_) {
    a(u, v) = 1;
    a(v, u) = 1;
  }
  return a;
}

}  // namespace vertexenergy
