#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include <nlohmann/json.hpp>

#include "lucas/bigint.hpp"
#include "lucas/planar_map.hpp"

namespace lucas {

// A 4-regular connected planar projection. Crossing data is not stored: the
// summand count is the same for every diagram over a given projection.
// crossing_order[i] is the vertex carrying coordinate i of a cube word.
struct Projection {
  PlanarMap map;
  std::vector<Vertex> crossing_order;
};

// Checks 4-regularity and connectivity (InvalidMap / NotConnected) and that
// the order is a permutation of the vertices (defaults to 0..n-1).
Projection make_projection(PlanarMap map, std::vector<Vertex> crossing_order = {});

using CubeWord = std::uint32_t;  // bit i = smoothing at crossing_order[i]

inline constexpr int kMaxCrossings = 16;

// At a vertex with rotation (d0,d1,d2,d3) the 0-smoothing joins (d0,d1) and
// (d2,d3), the 1-smoothing joins (d1,d2) and (d3,d0). Circles are numbered
// by their smallest dart.
struct Resolution {
  CubeWord u = 0;
  int circles = 0;
  std::vector<int> circle_of_dart;
};

Resolution resolve(const Projection& p, CubeWord u);
// Word as a list of 0/1; throws WordLengthMismatch.
Resolution resolve(const Projection& p, const std::vector<int>& u);

// Cover u -> u + e_k with sign (-1)^(u_0 + ... + u_{k-1}).
struct CoverEdge {
  CubeWord from = 0;
  CubeWord to = 0;
  int coordinate = 0;
  int sign = 1;
  bool merge = false;
  std::vector<int> from_circles;  // participating circles of D(from)
  std::vector<int> to_circles;    // participating circles of D(to)
  std::vector<int> spectator;     // circle of D(from) -> circle of D(to), -1 if participating
};

CoverEdge cover_edge(const Projection& p, const Resolution& from, const Resolution& to, int coordinate);

struct Cube {
  std::vector<Resolution> resolutions;  // indexed by word
  std::vector<CoverEdge> edges;         // by source word, then coordinate
};

// Throws TooLarge above 16 crossings.
Cube cube(const Projection& p);

// A resolution with its circles colored; bit c of red set means circle c is red.
struct CubeState {
  CubeWord u = 0;
  std::uint64_t red = 0;
};

// Nonzero iff spectators keep their colors and every participating circle
// has one common color. Throws NotCoverPair.
bool nonzero_differential(const Projection& p, const CubeState& s, const CubeState& t);

// Homological degrees met by each connected component of the state graph, in
// order of each component's first state (words ascending, colorings
// ascending). Throws TooLarge past 16 crossings or 10^7 states.
std::vector<std::set<int>> summand_degrees(const Projection& p);

BigInt count_summands(const Projection& p);

// Closed curves traced straight through every crossing ((d0,d2), (d1,d3)).
int link_components(const Projection& p);

struct Theorem2Report {
  BigInt summands;
  BigInt luc;
  bool equal = false;
};

Theorem2Report verify_theorem2(const Projection& p);

// Map JSON plus "crossing_order":[v,...] (optional).
Projection parse_projection(const nlohmann::json& document);
nlohmann::json serialize_projection(const Projection& p);
// {"summands":"<bigint>","luc":"<bigint>","equal":bool}
nlohmann::json serialize_report(const Theorem2Report& r);

}  // namespace lucas
