#pragma once

#include <optional>
#include <vector>

#include "lucas/bigint.hpp"
#include "lucas/planar_map.hpp"

namespace lucas {

// Exact perfect-matching count. Graphs with at most 63 vertices go through the
// memoized bitmask recursion (after a bandwidth-reducing relabeling); larger
// graphs through the frontier dynamic program. Odd |V| gives 0.
BigInt count_perfect_matchings(const Graph& g);

// Memoized recursion on the set of unmatched vertices, taking the lowest
// unmatched vertex and branching over its incident edges. Uses the labeling
// as given. Throws TooLarge above 63 vertices.
BigInt count_matchings_bitmask(const Graph& g);

// Vertex-elimination dynamic program along a breadth-first order started at a
// peripheral vertex. The state is the set of not-yet-eliminated vertices
// already matched to an eliminated one, kept as a window bitmask. Throws
// TooLarge if the order's bandwidth exceeds 63.
BigInt count_matchings_frontier(const Graph& g);

// Breadth-first order from a pseudo-peripheral vertex, component by component.
std::vector<int> bandwidth_order(const Graph& g);

// Each matching lists edge indices in increasing order. Without a limit the
// graph must have at most 24 vertices. Throws LimitExceeded.
std::vector<std::vector<int>> enumerate_perfect_matchings(const Graph& g,
                                                          std::optional<std::size_t> limit = {});

// Every source vertex of degree d >= 2 becomes a d-cycle (d = 2 gives a
// double edge) whose vertices follow the source rotation; pendant vertices
// are kept. Source dart ids are preserved, so each source edge survives with
// the same darts; polygon darts are appended after them.
struct BlowUp {
  PlanarMap result;
  std::vector<Vertex> vertex_origin;              // result vertex -> source vertex
  std::vector<std::vector<Vertex>> polygon_of;    // source vertex -> polygon cycle (empty if pendant)
  std::vector<char> is_original_edge;             // by result edge index
};

// Requires a connected map with at least two vertices; throws TooSmall or
// NotConnected.
BlowUp blow_up(const PlanarMap& m);

struct Theorem5Report {
  BigInt m_of_g;  // sum of 2^Sp over Lucas-colorings of the source
  BigInt M_of_G;  // perfect matchings of the blow-up
  bool equal = false;
};

Theorem5Report verify_theorem5(const PlanarMap& m);

}  // namespace lucas
