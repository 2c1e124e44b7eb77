#include "lucas/planar_map.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

#include "lucas/error.hpp"

namespace lucas {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::MalformedDocument: return "MalformedDocument";
    case ErrorCode::InvalidMap: return "InvalidMap";
    case ErrorCode::LoopEdge: return "LoopEdge";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::OddDegreeVertex: return "OddDegreeVertex";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::DuplicateDistinguished: return "DuplicateDistinguished";
    case ErrorCode::NotDistinguishedEndpoints: return "NotDistinguishedEndpoints";
    case ErrorCode::LimitExceeded: return "LimitExceeded";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::InvalidAsm: return "InvalidAsm";
    case ErrorCode::InvalidColoring: return "InvalidColoring";
    case ErrorCode::ColumnInconsistent: return "ColumnInconsistent";
    case ErrorCode::WordLengthMismatch: return "WordLengthMismatch";
    case ErrorCode::NotCoverPair: return "NotCoverPair";
  }
  return "Unknown";
}

std::vector<std::vector<int>> Graph::adjacency() const {
  std::vector<std::vector<int>> adj(n);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

PlanarMap::PlanarMap(std::vector<Dart> partner, std::vector<std::vector<Dart>> rotation)
    : partner_(std::move(partner)), rotation_(std::move(rotation)) {
  const int darts = num_darts();
  if (darts % 2 != 0) throw Error(ErrorCode::InvalidMap, "odd number of darts");

  vertex_of_.assign(darts, -1);
  position_.assign(darts, -1);
  for (Vertex v = 0; v < num_vertices(); ++v) {
    for (int i = 0; i < degree(v); ++i) {
      const Dart d = rotation_[v][i];
      if (d < 0 || d >= darts) {
        throw Error(ErrorCode::InvalidMap, "dart " + std::to_string(d) + " out of range");
      }
      if (vertex_of_[d] != -1) {
        throw Error(ErrorCode::InvalidMap, "dart " + std::to_string(d) + " listed twice");
      }
      vertex_of_[d] = v;
      position_[d] = i;
    }
  }
  for (Dart d = 0; d < darts; ++d) {
    if (vertex_of_[d] == -1) {
      throw Error(ErrorCode::InvalidMap, "dart " + std::to_string(d) + " in no rotation");
    }
    const Dart p = partner_[d];
    if (p < 0 || p >= darts || partner_[p] != d) {
      throw Error(ErrorCode::InvalidMap, "pairing is not an involution at dart " + std::to_string(d));
    }
    if (p == d || vertex_of_[p] == vertex_of_[d]) {
      throw Error(ErrorCode::LoopEdge, "loop at dart " + std::to_string(d));
    }
  }

  edge_index_of_dart_.assign(darts, -1);
  for (Dart d = 0; d < darts; ++d) {
    if (d < partner_[d]) {
      edge_index_of_dart_[d] = edge_index_of_dart_[partner_[d]] = static_cast<int>(edge_ids_.size());
      edge_ids_.push_back(d);
    }
  }
}

Dart PlanarMap::next_ccw(Dart d) const {
  const auto& rot = rotation_[vertex_of_[d]];
  return rot[(position_[d] + 1) % rot.size()];
}

Dart PlanarMap::prev_ccw(Dart d) const {
  const auto& rot = rotation_[vertex_of_[d]];
  return rot[(position_[d] + rot.size() - 1) % rot.size()];
}

std::pair<Vertex, Vertex> PlanarMap::endpoints(int edge_index) const {
  const Dart d = edge_ids_[edge_index];
  return {vertex_of_[d], vertex_of_[partner_[d]]};
}

bool PlanarMap::is_connected() const {
  if (num_vertices() == 0) return true;
  std::vector<char> seen(num_vertices(), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Dart d : rotation_[v]) {
      const Vertex w = vertex_of_[partner_[d]];
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == num_vertices();
}

PlanarMap PlanarMap::mirrored() const {
  auto rotation = rotation_;
  for (auto& rot : rotation) std::reverse(rot.begin(), rot.end());
  return PlanarMap(partner_, std::move(rotation));
}

Graph PlanarMap::graph() const {
  Graph g;
  g.n = num_vertices();
  for (int e = 0; e < num_edges(); ++e) g.edges.push_back(endpoints(e));
  return g;
}

Vertex MapBuilder::add_vertex() {
  rotation_.emplace_back();
  return static_cast<Vertex>(rotation_.size() - 1);
}

std::pair<Dart, Dart> MapBuilder::add_unplaced_edge() {
  const Dart a = static_cast<Dart>(partner_.size());
  partner_.push_back(a + 1);
  partner_.push_back(a);
  return {a, a + 1};
}

std::pair<Dart, Dart> MapBuilder::add_edge(Vertex u, Vertex v) {
  auto [a, b] = add_unplaced_edge();
  rotation_[u].push_back(a);
  rotation_[v].push_back(b);
  return {a, b};
}

std::vector<std::vector<Dart>> faces(const PlanarMap& m) {
  if (!m.is_connected()) throw Error(ErrorCode::NotConnected, "faces require a connected map");
  std::vector<std::vector<Dart>> result;
  if (m.num_darts() == 0) {
    if (m.num_vertices() > 0) result.emplace_back();
    return result;
  }
  std::vector<char> seen(m.num_darts(), 0);
  for (Dart start = 0; start < m.num_darts(); ++start) {
    if (seen[start]) continue;
    std::vector<Dart> face;
    for (Dart d = start; !seen[d]; d = m.next_ccw(m.partner(d))) {
      seen[d] = 1;
      face.push_back(d);
    }
    result.push_back(std::move(face));
  }
  return result;
}

bool satisfies_euler(const PlanarMap& m) {
  const auto f = static_cast<int>(faces(m).size());
  return m.num_vertices() - m.num_edges() + f == 2;
}

std::vector<int> degree_sequence(const PlanarMap& m) {
  std::vector<int> degrees;
  degrees.reserve(m.num_vertices());
  for (Vertex v = 0; v < m.num_vertices(); ++v) degrees.push_back(m.degree(v));
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

namespace {

[[noreturn]] void malformed(const std::string& why) { throw Error(ErrorCode::MalformedDocument, why); }

int as_int(const nlohmann::json& j, const char* what) {
  if (!j.is_number_integer()) malformed(std::string(what) + " must be an integer");
  return j.get<int>();
}

}  // namespace

PlanarMap parse_map(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges")) {
    malformed("expected an object with \"vertices\" and \"edges\"");
  }
  const auto& verts = doc.at("vertices");
  const auto& edges = doc.at("edges");
  if (!verts.is_array() || !edges.is_array()) malformed("\"vertices\" and \"edges\" must be arrays");

  const int darts = static_cast<int>(edges.size()) * 2;
  std::vector<Dart> partner(darts, -1);
  for (const auto& e : edges) {
    if (!e.is_array() || e.size() != 2) malformed("each edge must be a pair of darts");
    const int a = as_int(e[0], "dart");
    const int b = as_int(e[1], "dart");
    if (a < 0 || a >= darts || b < 0 || b >= darts) {
      throw Error(ErrorCode::InvalidMap, "dart out of range in edge [" + std::to_string(a) + "," +
                                             std::to_string(b) + "]");
    }
    if (a == b) throw Error(ErrorCode::LoopEdge, "dart " + std::to_string(a) + " paired with itself");
    if (partner[a] != -1 || partner[b] != -1) {
      throw Error(ErrorCode::InvalidMap, "dart used by two edges: [" + std::to_string(a) + "," +
                                             std::to_string(b) + "]");
    }
    partner[a] = b;
    partner[b] = a;
  }

  std::vector<std::vector<Dart>> rotation(verts.size());
  std::vector<char> have(verts.size(), 0);
  for (const auto& v : verts) {
    if (!v.is_object() || !v.contains("id") || !v.contains("rotation") || !v.at("rotation").is_array()) {
      malformed("each vertex needs \"id\" and \"rotation\"");
    }
    const int id = as_int(v.at("id"), "vertex id");
    if (id < 0 || id >= static_cast<int>(verts.size()) || have[id]) {
      malformed("vertex ids must be a permutation of 0..|V|-1 (bad id " + std::to_string(id) + ")");
    }
    have[id] = 1;
    for (const auto& d : v.at("rotation")) rotation[id].push_back(as_int(d, "dart"));
  }
  return PlanarMap(std::move(partner), std::move(rotation));
}

PlanarMap parse_map(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    malformed(e.what());
  }
  return parse_map(doc);
}

nlohmann::json serialize_map(const PlanarMap& m) {
  nlohmann::json verts = nlohmann::json::array();
  for (Vertex v = 0; v < m.num_vertices(); ++v) {
    verts.push_back({{"id", v}, {"rotation", m.rotation(v)}});
  }
  nlohmann::json edges = nlohmann::json::array();
  for (int e = 0; e < m.num_edges(); ++e) {
    const Dart d = m.edge_id(e);
    edges.push_back({d, m.partner(d)});
  }
  return {{"vertices", verts}, {"edges", edges}};
}

Graph parse_graph(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges") || !doc.at("edges").is_array()) {
    malformed("expected {\"n\":int,\"edges\":[[u,v],...]}");
  }
  Graph g;
  g.n = as_int(doc.at("n"), "n");
  if (g.n < 0) malformed("n must be nonnegative");
  for (const auto& e : doc.at("edges")) {
    if (!e.is_array() || e.size() != 2) malformed("each edge must be a vertex pair");
    const int u = as_int(e[0], "vertex");
    const int v = as_int(e[1], "vertex");
    if (u < 0 || u >= g.n || v < 0 || v >= g.n) malformed("edge endpoint out of range");
    if (u == v) throw Error(ErrorCode::LoopEdge, "loop at vertex " + std::to_string(u));
    g.edges.emplace_back(u, v);
  }
  return g;
}

nlohmann::json serialize_graph(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : g.edges) edges.push_back({u, v});
  return {{"n", g.n}, {"edges", edges}};
}

std::string to_dot(const PlanarMap& m) {
  std::ostringstream out;
  out << "graph {\n";
  for (Vertex v = 0; v < m.num_vertices(); ++v) {
    if (m.degree(v) == 0) out << "  " << v << ";\n";
  }
  for (int e = 0; e < m.num_edges(); ++e) {
    auto [u, v] = m.endpoints(e);
    out << "  " << u << " -- " << v << ";\n";
  }
  out << "}\n";
  return out.str();
}

PlanarMap random_planar_map(std::mt19937_64& rng, int vertices, int extra_edges) {
  if (vertices < 1) throw Error(ErrorCode::TooSmall, "need at least one vertex");
  std::vector<Dart> partner;
  std::vector<std::vector<Dart>> rotation(vertices);
  auto pick = [&rng](std::size_t bound) {
    return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng);
  };
  auto new_edge = [&partner]() {
    const Dart a = static_cast<Dart>(partner.size());
    partner.push_back(a + 1);
    partner.push_back(a);
    return std::pair{a, a + 1};
  };

  for (Vertex v = 1; v < vertices; ++v) {
    const auto parent = static_cast<Vertex>(pick(v));
    auto [a, b] = new_edge();
    auto& rot = rotation[parent];
    rot.insert(rot.begin() + static_cast<std::ptrdiff_t>(pick(rot.size() + 1)), a);
    rotation[v].push_back(b);
  }

  for (int added = 0, attempts = 0; added < extra_edges && attempts < 64 * (extra_edges + 1); ++attempts) {
    const PlanarMap current(partner, rotation);
    const auto fs = faces(current);
    const auto& face = fs[pick(fs.size())];
    if (face.empty()) break;  // lone vertex, nowhere to put a chord
    // Corner k of the face sits at the head of face[k], after partner(face[k]).
    const std::size_t i = pick(face.size());
    const std::size_t j = pick(face.size());
    const Dart after_i = current.partner(face[i]);
    const Dart after_j = current.partner(face[j]);
    if (current.vertex_of(after_i) == current.vertex_of(after_j)) continue;
    auto [a, b] = new_edge();
    auto insert_after = [&](Dart anchor, Dart fresh) {
      auto& rot = rotation[current.vertex_of(anchor)];
      const auto it = std::find(rot.begin(), rot.end(), anchor);
      rot.insert(it + 1, fresh);
    };
    insert_after(after_i, a);
    insert_after(after_j, b);
    ++added;
  }
  return PlanarMap(std::move(partner), std::move(rotation));
}

}  // namespace lucas
