#include "vertexenergy/catalog.hpp"

#include <cstdlib>
#include <string>

#include "vertexenergy/errors.hpp"

namespace vertexenergy {

std::string_view to_string(NamedGraphId id) {
  switch (id) {
    case NamedGraphId::Frucht: return "frucht";
    case NamedGraphId::Desargues: return "desargues";
    case NamedGraphId::TutteCoxeter: return "tutte_coxeter";
    case NamedGraphId::Heawood: return "heawood";
    case NamedGraphId::Shrikhande: return "shrikhande";
    case NamedGraphId::Petersen: return "petersen";
  }
  return "unknown";
}

std::optional<NamedGraphId> named_graph_id_from_string(std::string_view name) {
  for (NamedGraphId id : kAllNamedGraphs)
    if (name == to_string(id)) return id;
  return std::nullopt;
}

Graph lcf_graph(const std::vector<int>& shifts, std::size_t repeats) {
  if (shifts.empty() || repeats == 0) throw InvalidLcfError("lcf: empty shift pattern");
  const std::size_t len = shifts.size();
  const std::size_t m = len * repeats;
  if (m < 3) throw InvalidLcfError("lcf: needs at least 3 vertices");

  auto shift_at = [&](std::size_t i) { return shifts[i % len]; };
  auto chord_end = [&](std::size_t i) {
    const long long j = (static_cast<long long>(i) + shift_at(i)) % static_cast<long long>(m);
    return static_cast<std::size_t>(j < 0 ? j + static_cast<long long>(m) : j);
  };

  std::vector<Edge> edges;
  edges.reserve(3 * m / 2);
  for (std::size_t i = 0; i < m; ++i) edges.emplace_back(i, (i + 1) % m);

  for (std::size_t i = 0; i < m; ++i) {
    const int s = shift_at(i);
    if (s == 0 || static_cast<std::size_t>(std::abs(s)) >= m)
      throw InvalidLcfError("lcf: shift " + std::to_string(s) + " out of range for order " +
                            std::to_string(m));
    const std::size_t j = chord_end(i);
    if (j == (i + 1) % m || i == (j + 1) % m)
      throw InvalidLcfError("lcf: chord from vertex " + std::to_string(i) +
                            " duplicates a cycle edge");
    // Chords must pair up exactly; a shift of ±m/2 has no distinct partner.
    if (shift_at(j) != -s)
      throw InvalidLcfError("lcf: chord from vertex " + std::to_string(i) +
                            " is not matched by shift " + std::to_string(-s) + " at vertex " +
                            std::to_string(j));
    if (i < j) edges.emplace_back(i, j);
  }

  Graph g(m, edges);
  for (std::size_t v = 0; v < m; ++v)
    if (g.degree(v) != 3)
      throw InvalidLcfError("lcf: vertex " + std::to_string(v) + " has degree " +
                            std::to_string(g.degree(v)) + ", expected 3");
  return g;
}

Graph generalized_petersen(std::size_t n, std::size_t k) {
  if (n < 3 || k < 1 || 2 * k >= n)
    throw BadParametersError("generalized_petersen: requires n >= 3 and 1 <= k < n/2");
  std::vector<Edge> edges;
  edges.reserve(3 * n);
  for (std::size_t i = 0; i < n; ++i) {
    edges.emplace_back(i, (i + 1) % n);
    edges.emplace_back(i, n + i);
    edges.emplace_back(n + i, n + (i + k) % n);
  }
  return Graph(2 * n, edges);
}

Graph shrikhande_graph() {
  constexpr int deltas[][2] = {{1, 0}, {3, 0}, {0, 1}, {0, 3}, {1, 1}, {3, 3}};
  std::vector<Edge> edges;
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      const std::size_t u = static_cast<std::size_t>(a * 4 + b);
      for (const auto& d : deltas) {
        const std::size_t v = static_cast<std::size_t>(((a + d[0]) % 4) * 4 + (b + d[1]) % 4);
        if (u < v) edges.emplace_back(u, v);
      }
    }
  }
  return Graph(16, edges);
}

Graph named_graph(NamedGraphId id) {
  switch (id) {
    case NamedGraphId::Frucht:
      return lcf_graph({-5, -2, -4, 2, 5, -2, 2, 5, -2, -5, 4, 2}, 1);
    case NamedGraphId::Desargues:
      return lcf_graph({5, -5, 9, -9}, 5);
    case NamedGraphId::TutteCoxeter:
      return lcf_graph({-13, -9, 7, -7, 9, 13}, 5);
    case NamedGraphId::Heawood:
      return lcf_graph({5, -5}, 7);
    case NamedGraphId::Shrikhande:
      return shrikhande_graph();
    case NamedGraphId::Petersen:
      return generalized_petersen(5, 2);
  }
  throw BadParametersError("named_graph: unknown id");
}

}  // namespace vertexenergy
