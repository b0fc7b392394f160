#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "vertexenergy/graph.hpp"

namespace vertexenergy {

/// The six graphs the library ships ready-made constructions for.
enum class NamedGraphId {
  Frucht,
  Desargues,
  TutteCoxeter,
  Heawood,
  Shrikhande,
  Petersen,
};

inline constexpr std::array<NamedGraphId, 6> kAllNamedGraphs = {
    NamedGraphId::Frucht,       NamedGraphId::Desargues,  NamedGraphId::TutteCoxeter,
    NamedGraphId::Heawood,      NamedGraphId::Shrikhande, NamedGraphId::Petersen,
};

std::string_view to_string(NamedGraphId id);
std::optional<NamedGraphId> named_graph_id_from_string(std::string_view name);

/// Cubic Hamiltonian graph from LCF notation: a cycle on
/// m = shifts.size() * repeats vertices plus the chord i -- i + shifts[i mod len]
/// (mod m). The shift list must pair up exactly: the chord leaving i must be
/// matched by shift -s at its far endpoint, no chord may duplicate a cycle
/// edge, and every vertex receives exactly one chord. Violations throw
/// InvalidLcfError.
Graph lcf_graph(const std::vector<int>& shifts, std::size_t repeats);

/// Generalized Petersen graph GP(n, k): outer n-cycle u_0..u_{n-1}
/// (vertices 0..n-1), spokes u_i -- w_i, inner edges w_i -- w_{i+k}
/// (vertices n..2n-1). Requires n >= 3 and 1 <= k < n/2.
Graph generalized_petersen(std::size_t n, std::size_t k);

/// Shrikhande graph: Cayley graph on Z4 x Z4 with connection set
/// {±(1,0), ±(0,1), ±(1,1)}. 16 vertices, 6-regular.
Graph shrikhande_graph();

Graph named_graph(NamedGraphId id);

}  // namespace vertexenergy
