#include "lucas/karoubi.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <optional>

#include <boost/pending/disjoint_sets.hpp>

#include "lucas/error.hpp"
#include "lucas/lucas.hpp"

namespace lucas {

namespace {

// Plain path-compressing union-find over dense ids.
class Forest {
 public:
  explicit Forest(std::size_t n) : rank_(n), parent_(n), sets_(rank_.data(), parent_.data()) {
    for (std::size_t i = 0; i < n; ++i) sets_.make_set(i);
  }
  std::size_t find(std::size_t x) { return sets_.find_set(x); }
  void unite(std::size_t a, std::size_t b) { sets_.union_set(a, b); }

 private:
  std::vector<std::size_t> rank_;
  std::vector<std::size_t> parent_;
  boost::disjoint_sets<std::size_t*, std::size_t*> sets_;
};

// Number the classes of a dart partition by smallest member.
int label_classes(Forest& f, int darts, std::vector<int>& label) {
  label.assign(darts, -1);
  std::vector<int> of_root(darts, -1);
  int count = 0;
  for (int d = 0; d < darts; ++d) {
    const auto r = f.find(d);
    if (of_root[r] == -1) of_root[r] = count++;
    label[d] = of_root[r];
  }
  return count;
}

int circle_color(std::uint64_t red, int circle) { return static_cast<int>(red >> circle & 1); }

}  // namespace

Projection make_projection(PlanarMap map, std::vector<Vertex> order) {
  for (Vertex v = 0; v < map.num_vertices(); ++v) {
    if (map.degree(v) != 4) {
      throw Error(ErrorCode::InvalidMap, "vertex " + std::to_string(v) + " has degree " + std::to_string(map.degree(v)));
    }
  }
  if (!map.is_connected()) throw Error(ErrorCode::NotConnected, "projection must be connected");
  if (order.empty()) {
    order.resize(map.num_vertices());
    std::iota(order.begin(), order.end(), 0);
  }
  auto sorted = order;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < static_cast<int>(sorted.size()); ++i) {
    if (sorted[i] != i || static_cast<int>(sorted.size()) != map.num_vertices()) {
      throw Error(ErrorCode::InvalidMap, "crossing_order is not a permutation of the vertices");
    }
  }
  return {std::move(map), std::move(order)};
}

Resolution resolve(const Projection& p, CubeWord u) {
  const PlanarMap& m = p.map;
  Forest f(m.num_darts());
  for (Dart d = 0; d < m.num_darts(); ++d) f.unite(d, m.partner(d));
  for (int i = 0; i < static_cast<int>(p.crossing_order.size()); ++i) {
    const auto& r = m.rotation(p.crossing_order[i]);
    if (u >> i & 1) {
      f.unite(r[1], r[2]);
      f.unite(r[3], r[0]);
    } else {
      f.unite(r[0], r[1]);
      f.unite(r[2], r[3]);
    }
  }
  Resolution out;
  out.u = u;
  out.circles = label_classes(f, m.num_darts(), out.circle_of_dart);
  return out;
}

Resolution resolve(const Projection& p, const std::vector<int>& u) {
  const int n = static_cast<int>(p.crossing_order.size());
  if (static_cast<int>(u.size()) != n) {
    throw Error(ErrorCode::WordLengthMismatch,
                "word has " + std::to_string(u.size()) + " letters for " + std::to_string(n) + " crossings");
  }
  if (n > 32) throw Error(ErrorCode::TooLarge, "at most 32 crossings");
  CubeWord w = 0;
  for (int i = 0; i < n; ++i) {
    if (u[i] != 0 && u[i] != 1) throw Error(ErrorCode::MalformedDocument, "cube words use 0/1");
    if (u[i]) w |= CubeWord{1} << i;
  }
  return resolve(p, w);
}

CoverEdge cover_edge(const Projection& p, const Resolution& from, const Resolution& to, int k) {
  const int n = static_cast<int>(p.crossing_order.size());
  if (k < 0 || k >= n || (from.u >> k & 1) || to.u != (from.u | CubeWord{1} << k)) {
    throw Error(ErrorCode::NotCoverPair, "resolutions are not a cover pair along coordinate " + std::to_string(k));
  }
  CoverEdge e;
  e.from = from.u;
  e.to = to.u;
  e.coordinate = k;
  e.sign = std::popcount(from.u & ((CubeWord{1} << k) - 1)) % 2 == 0 ? 1 : -1;
  e.merge = to.circles < from.circles;
  const auto& r = p.map.rotation(p.crossing_order[k]);
  for (Dart d : r) {
    e.from_circles.push_back(from.circle_of_dart[d]);
    e.to_circles.push_back(to.circle_of_dart[d]);
  }
  for (auto* v : {&e.from_circles, &e.to_circles}) {
    std::sort(v->begin(), v->end());
    v->erase(std::unique(v->begin(), v->end()), v->end());
  }
  e.spectator.assign(from.circles, -1);
  for (Dart d = 0; d < p.map.num_darts(); ++d) {
    const int c = from.circle_of_dart[d];
    if (!std::binary_search(e.from_circles.begin(), e.from_circles.end(), c)) e.spectator[c] = to.circle_of_dart[d];
  }
  return e;
}

Cube cube(const Projection& p) {
  const int n = static_cast<int>(p.crossing_order.size());
  if (n > kMaxCrossings) throw Error(ErrorCode::TooLarge, "cube is limited to 16 crossings");
  Cube c;
  for (CubeWord u = 0; u < (CubeWord{1} << n); ++u) c.resolutions.push_back(resolve(p, u));
  for (CubeWord u = 0; u < (CubeWord{1} << n); ++u) {
    for (int k = 0; k < n; ++k) {
      if (u >> k & 1) continue;
      c.edges.push_back(cover_edge(p, c.resolutions[u], c.resolutions[u | CubeWord{1} << k], k));
    }
  }
  return c;
}

namespace {

// Given a colored source, the unique target coloring along e, if any.
std::optional<std::uint64_t> push_colors(const CoverEdge& e, std::uint64_t red) {
  const int color = circle_color(red, e.from_circles.front());
  for (int c : e.from_circles) {
    if (circle_color(red, c) != color) return std::nullopt;
  }
  std::uint64_t out = 0;
  for (int c = 0; c < static_cast<int>(e.spectator.size()); ++c) {
    if (e.spectator[c] != -1 && circle_color(red, c)) out |= std::uint64_t{1} << e.spectator[c];
  }
  if (color) {
    for (int c : e.to_circles) out |= std::uint64_t{1} << c;
  }
  return out;
}

}  // namespace

bool nonzero_differential(const Projection& p, const CubeState& s, const CubeState& t) {
  const CubeWord diff = s.u ^ t.u;
  if (std::popcount(diff) != 1 || (s.u & diff)) throw Error(ErrorCode::NotCoverPair, "states are not a cover pair");
  const int k = std::countr_zero(diff);
  if (k >= static_cast<int>(p.crossing_order.size())) throw Error(ErrorCode::NotCoverPair, "coordinate out of range");
  const auto e = cover_edge(p, resolve(p, s.u), resolve(p, t.u), k);
  const auto pushed = push_colors(e, s.red);
  return pushed && *pushed == t.red;
}

std::vector<std::set<int>> summand_degrees(const Projection& p) {
  const Cube c = cube(p);
  std::vector<std::size_t> offset(c.resolutions.size() + 1, 0);
  for (std::size_t u = 0; u < c.resolutions.size(); ++u) {
    if (c.resolutions[u].circles > 40) throw Error(ErrorCode::TooLarge, "too many circles");
    offset[u + 1] = offset[u] + (std::size_t{1} << c.resolutions[u].circles);
    if (offset[u + 1] > 10'000'000) throw Error(ErrorCode::TooLarge, "more than 10^7 Karoubi states");
  }
  Forest f(offset.back());
  for (const CoverEdge& e : c.edges) {
    const std::uint64_t colorings = std::uint64_t{1} << c.resolutions[e.from].circles;
    for (std::uint64_t red = 0; red < colorings; ++red) {
      if (auto target = push_colors(e, red)) f.unite(offset[e.from] + red, offset[e.to] + *target);
    }
  }
  std::vector<std::set<int>> out;
  std::vector<int> component(offset.back(), -1);
  for (CubeWord u = 0; u < c.resolutions.size(); ++u) {
    for (std::size_t s = offset[u]; s < offset[u + 1]; ++s) {
      const auto root = f.find(s);
      if (component[root] == -1) {
        component[root] = static_cast<int>(out.size());
        out.emplace_back();
      }
      out[component[root]].insert(std::popcount(u));
    }
  }
  return out;
}

BigInt count_summands(const Projection& p) { return BigInt(summand_degrees(p).size()); }

int link_components(const Projection& p) {
  const PlanarMap& m = p.map;
  Forest f(m.num_darts());
  for (Dart d = 0; d < m.num_darts(); ++d) f.unite(d, m.partner(d));
  for (Vertex v = 0; v < m.num_vertices(); ++v) {
    const auto& r = m.rotation(v);
    f.unite(r[0], r[2]);
    f.unite(r[1], r[3]);
  }
  std::vector<int> label;
  return label_classes(f, m.num_darts(), label);
}

Theorem2Report verify_theorem2(const Projection& p) {
  Theorem2Report r;
  r.summands = count_summands(p);
  r.luc = lucas_statistic(p.map).count;
  r.equal = r.summands == r.luc;
  return r;
}

Projection parse_projection(const nlohmann::json& doc) {
  PlanarMap m = parse_map(doc);
  std::vector<Vertex> order;
  if (doc.contains("crossing_order")) {
    try {
      order = doc.at("crossing_order").get<std::vector<Vertex>>();
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::MalformedDocument, std::string("crossing_order: ") + e.what());
    }
    if (order.empty() && m.num_vertices() > 0) throw Error(ErrorCode::InvalidMap, "empty crossing_order");
  }
  return make_projection(std::move(m), std::move(order));
}

nlohmann::json serialize_projection(const Projection& p) {
  auto doc = serialize_map(p.map);
  doc["crossing_order"] = p.crossing_order;
  return doc;
}

nlohmann::json serialize_report(const Theorem2Report& r) {
  return {{"summands", to_decimal(r.summands)}, {"luc", to_decimal(r.luc)}, {"equal", r.equal}};
}

}  // namespace lucas
