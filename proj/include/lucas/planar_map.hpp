#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace lucas {

using Dart = int;
using Vertex = int;

// An abstract multigraph: vertices 0..n-1, edges as unordered endpoint pairs.
// Parallel edges are distinct entries; loops are never produced by this library.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  std::vector<std::vector<int>> adjacency() const;  // neighbor list with multiplicity
  bool operator==(const Graph&) const = default;
};

// Embedded planar multigraph as a combinatorial map.
//
// Darts are dense integers 0..2|E|-1. partner() is a fixed-point-free
// involution; every dart sits in exactly one vertex rotation, listed
// counterclockwise. Loops are rejected. An edge is identified by the smaller
// of its two darts (its canonical id); edge_index() numbers edges densely in
// increasing canonical-id order.
class PlanarMap {
 public:
  PlanarMap() = default;

  // Validates every invariant; throws Error{InvalidMap | LoopEdge}.
  PlanarMap(std::vector<Dart> partner, std::vector<std::vector<Dart>> rotation);

  int num_vertices() const { return static_cast<int>(rotation_.size()); }
  int num_darts() const { return static_cast<int>(partner_.size()); }
  int num_edges() const { return num_darts() / 2; }

  Dart partner(Dart d) const { return partner_[d]; }
  Vertex vertex_of(Dart d) const { return vertex_of_[d]; }
  int position(Dart d) const { return position_[d]; }
  const std::vector<Dart>& rotation(Vertex v) const { return rotation_[v]; }
  int degree(Vertex v) const { return static_cast<int>(rotation_[v].size()); }

  // Next / previous dart counterclockwise around vertex_of(d).
  Dart next_ccw(Dart d) const;
  Dart prev_ccw(Dart d) const;

  Dart edge_id(int edge_index) const { return edge_ids_[edge_index]; }
  int edge_index(Dart d) const { return edge_index_of_dart_[d]; }
  std::pair<Vertex, Vertex> endpoints(int edge_index) const;

  bool is_connected() const;

  // Same vertices and pairing with every rotation reversed.
  PlanarMap mirrored() const;

  // Edges in edge_index order.
  Graph graph() const;

  const std::vector<std::vector<Dart>>& rotations() const { return rotation_; }
  const std::vector<Dart>& partners() const { return partner_; }

  bool operator==(const PlanarMap& other) const {
    return partner_ == other.partner_ && rotation_ == other.rotation_;
  }

 private:
  std::vector<Dart> partner_;
  std::vector<std::vector<Dart>> rotation_;
  std::vector<Vertex> vertex_of_;
  std::vector<int> position_;
  std::vector<Dart> edge_ids_;
  std::vector<int> edge_index_of_dart_;
};

// Incremental construction: add_edge(u, v) appends a dart to the end of each
// endpoint's rotation, so callers control the cyclic order by call order.
class MapBuilder {
 public:
  explicit MapBuilder(int vertices) : rotation_(vertices) {}

  Vertex add_vertex();
  // Returns the pair of darts (at u, at v).
  std::pair<Dart, Dart> add_edge(Vertex u, Vertex v);
  // Appends an already-created dart to a rotation (for hand-ordered rotations).
  std::pair<Dart, Dart> add_unplaced_edge();
  void place(Vertex v, Dart d) { rotation_[v].push_back(d); }

  PlanarMap build() const { return PlanarMap(partner_, rotation_); }

 private:
  std::vector<Dart> partner_;
  std::vector<std::vector<Dart>> rotation_;
};

// Face orbits of d -> next_ccw(partner(d)). A connected map with no edges has
// a single empty face. Throws Error{NotConnected}.
std::vector<std::vector<Dart>> faces(const PlanarMap& m);

// |V| - |E| + |F| == 2 for a connected map.
bool satisfies_euler(const PlanarMap& m);

std::vector<int> degree_sequence(const PlanarMap& m);

// JSON map schema:
//   {"vertices":[{"id":int,"rotation":[dart,...]},...],"edges":[[dartA,dartB],...]}
// Vertex ids must be exactly 0..|V|-1 (in any order). A dart paired with itself
// or with a dart at the same vertex raises LoopEdge.
PlanarMap parse_map(const nlohmann::json& document);
PlanarMap parse_map(const std::string& text);
nlohmann::json serialize_map(const PlanarMap& m);

// {"n":int,"edges":[[u,v],...]}
Graph parse_graph(const nlohmann::json& document);
nlohmann::json serialize_graph(const Graph& g);

// `graph { 0 -- 1; ... }`, one line per edge so multiplicity is visible.
std::string to_dot(const PlanarMap& m);

// Random connected loopless planar map: a random plane tree on `vertices`
// vertices, then `extra_edges` chords each inserted across a random face
// between two distinct corner vertices (parallel edges may appear).
PlanarMap random_planar_map(std::mt19937_64& rng, int vertices, int extra_edges);

}  // namespace lucas
