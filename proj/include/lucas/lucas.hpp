#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "lucas/bigint.hpp"
#include "lucas/planar_map.hpp"

namespace lucas {

// y: edge "kept" (green); n: edge "paired" (red).
enum class Color : std::uint8_t { y = 0, n = 1 };

inline Color flip(Color c) { return c == Color::y ? Color::n : Color::y; }
inline char to_char(Color c) { return c == Color::y ? 'y' : 'n'; }

// One color per edge, indexed by PlanarMap::edge_index.
using EdgeColoring = std::vector<Color>;

// True iff the n-positions of a linear word split into adjacent pairs, i.e.
// every maximal run of n has even length.
bool is_fibonacci_word(std::span<const Color> word);

// Cyclic version: every maximal cyclic run of n has even length; the all-n
// word is valid iff its length is even.
bool is_local_valid(std::span<const Color> cyclic_word);

// Colors around v in rotation order.
std::vector<Color> local_word(const PlanarMap& m, const EdgeColoring& c, Vertex v);

bool is_lucas_coloring(const PlanarMap& m, const EdgeColoring& c);

// Visits every Lucas-coloring exactly once, lexicographically over edge
// indices with y < n. Throws LoopEdge (the map type already excludes loops,
// so this only surfaces from parse paths).
void enumerate_lucas(const PlanarMap& m, const std::function<void(const EdgeColoring&)>& visit);

std::vector<EdgeColoring> lucas_colorings(const PlanarMap& m, std::optional<std::size_t> limit = {});

// Vertices whose incident edges are all n (resp. all y). Degree-0 vertices
// count for both.
int special_count(const PlanarMap& m, const EdgeColoring& c);
int dual_special_count(const PlanarMap& m, const EdgeColoring& c);

// Swaps y and n. Requires every vertex to have even degree >= 2; throws
// OddDegreeVertex naming the first offending vertex.
EdgeColoring dual_coloring(const PlanarMap& m, const EdgeColoring& c);

// The pairing of n-darts at each vertex into cyclically adjacent pairs. At an
// all-n vertex the pairing starting at rotation position 0 is returned (the
// other one is accounted for by the weight 2^Sp).
std::vector<std::vector<std::pair<Dart, Dart>>> pairings(const PlanarMap& m, const EdgeColoring& c);

struct LucasStats {
  BigInt count;
  BigInt m;  // sum over colorings of 2^Sp
  std::vector<std::uint64_t> sp_histogram;  // number of colorings by Sp
  std::vector<std::pair<EdgeColoring, int>> per_coloring;  // filled on request only
};

struct LucasOptions {
  bool keep_colorings = false;
  unsigned jobs = 1;
};

LucasStats lucas_statistic(const PlanarMap& m, const LucasOptions& options = {});

// Same statistic with Sp' (all-y vertices) in place of Sp.
BigInt dual_statistic(const PlanarMap& m);

// {"edges":{"<edgeId>":"y"|"n"}}; "green"/"red" are accepted on input.
nlohmann::json serialize_coloring(const PlanarMap& m, const EdgeColoring& c);
EdgeColoring parse_coloring(const PlanarMap& m, const nlohmann::json& document);

// {"count":"<bigint>","m":"<bigint>"}
nlohmann::json serialize_stats(const LucasStats& stats);

}  // namespace lucas
