#include "lucas/fixtures.hpp"

#include <algorithm>

#include "lucas/error.hpp"

namespace lucas::fixtures {

PlanarMap isolated_vertex() { return MapBuilder(1).build(); }

PlanarMap triangle() {
  MapBuilder b(3);
  b.add_edge(0, 1);
  b.add_edge(1, 2);
  b.add_edge(2, 0);
  return b.build();
}

PlanarMap wheel4() {
  MapBuilder b(5);
  std::pair<Dart, Dart> spoke[4];
  std::pair<Dart, Dart> rim[4];  // rim[i] joins i+1 to the next rim vertex
  for (int i = 0; i < 4; ++i) spoke[i] = b.add_unplaced_edge();
  for (int i = 0; i < 4; ++i) rim[i] = b.add_unplaced_edge();
  for (int i = 0; i < 4; ++i) b.place(0, spoke[i].first);
  for (int i = 0; i < 4; ++i) {
    // seen from the rim: next, hub, previous
    b.place(i + 1, rim[i].first);
    b.place(i + 1, spoke[i].second);
    b.place(i + 1, rim[(i + 3) % 4].second);
  }
  return b.build();
}

PlanarMap k4() {
  // 0 top, 1 bottom-left, 2 bottom-right, 3 centre
  MapBuilder b(4);
  const auto e01 = b.add_unplaced_edge();
  const auto e02 = b.add_unplaced_edge();
  const auto e03 = b.add_unplaced_edge();
  const auto e12 = b.add_unplaced_edge();
  const auto e13 = b.add_unplaced_edge();
  const auto e23 = b.add_unplaced_edge();
  for (Dart d : {e01.first, e03.first, e02.first}) b.place(0, d);
  for (Dart d : {e12.first, e13.first, e01.second}) b.place(1, d);
  for (Dart d : {e02.second, e23.first, e12.second}) b.place(2, d);
  for (Dart d : {e03.second, e13.second, e23.second}) b.place(3, d);
  return b.build();
}

PlanarMap doubled_triangle() {
  MapBuilder b(3);
  const auto a = b.add_unplaced_edge();  // 0-1 outer
  const auto c = b.add_unplaced_edge();  // 0-1 inner
  const auto d = b.add_unplaced_edge();  // 1-2
  const auto e = b.add_unplaced_edge();  // 2-0
  for (Dart x : {a.first, c.first, e.second}) b.place(0, x);
  for (Dart x : {d.first, c.second, a.second}) b.place(1, x);
  for (Dart x : {e.first, d.second}) b.place(2, x);
  return b.build();
}

Graph path_graph(int k) {
  Graph g;
  g.n = k;
  for (int i = 0; i + 1 < k; ++i) g.edges.emplace_back(i, i + 1);
  return g;
}

Graph cycle_graph(int k) {
  if (k < 2) throw Error(ErrorCode::TooSmall, "polygon needs k >= 2");
  Graph g = path_graph(k);
  g.edges.emplace_back(k - 1, 0);
  return g;
}

Projection torus_projection(int k) {
  if (k < 2) throw Error(ErrorCode::TooSmall, "torus projection needs k >= 2");
  MapBuilder b(k);
  std::vector<std::pair<Dart, Dart>> outer(k);
  std::vector<std::pair<Dart, Dart>> inner(k);
  for (int i = 0; i < k; ++i) {
    outer[i] = b.add_unplaced_edge();
    inner[i] = b.add_unplaced_edge();
  }
  for (int i = 0; i < k; ++i) {
    const int prev = (i + k - 1) % k;
    b.place(i, outer[i].first);
    b.place(i, inner[i].first);
    b.place(i, inner[prev].second);
    b.place(i, outer[prev].second);
  }
  return make_projection(b.build());
}

Projection medial(const PlanarMap& m) {
  for (Vertex v = 0; v < m.num_vertices(); ++v) {
    if (m.degree(v) < 2) throw Error(ErrorCode::TooSmall, "medial needs minimum degree 2");
  }
  // Corner (a, next_ccw(a)) becomes a medial edge with dart A(a) at the
  // crossing of a's edge and dart B(a) at the crossing of next_ccw(a)'s edge.
  const auto A = [](Dart a) { return 2 * a; };
  const auto B = [](Dart a) { return 2 * a + 1; };
  std::vector<Dart> partner(2 * m.num_darts());
  for (Dart a = 0; a < m.num_darts(); ++a) {
    partner[A(a)] = B(a);
    partner[B(a)] = A(a);
  }
  std::vector<std::vector<Dart>> rotation(m.num_edges());
  for (int e = 0; e < m.num_edges(); ++e) {
    const Dart h = m.edge_id(e);
    const Dart h2 = m.partner(h);
    rotation[e] = {B(m.prev_ccw(h2)), A(h), B(m.prev_ccw(h)), A(h2)};
  }
  return make_projection(PlanarMap(std::move(partner), std::move(rotation)));
}

PlanarMap random_min_degree2_map(std::mt19937_64& rng, int vertices, int extra_edges) {
  if (vertices < 2) throw Error(ErrorCode::TooSmall, "need two vertices");
  for (int attempt = 1;; ++attempt) {
    PlanarMap m = random_planar_map(rng, vertices, extra_edges);
    bool ok = true;
    for (Vertex v = 0; v < m.num_vertices(); ++v) ok = ok && m.degree(v) >= 2;
    if (ok) return m;
    if (attempt % 32 == 0) ++extra_edges;  // trees never qualify
  }
}

}  // namespace lucas::fixtures
