#include "lucas/matchings.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <queue>
#include <unordered_map>

#include "lucas/error.hpp"
#include "lucas/lucas.hpp"

namespace lucas {

namespace {

Graph relabel(const Graph& g, const std::vector<int>& order) {
  std::vector<int> pos(g.n);
  for (int i = 0; i < g.n; ++i) pos[order[i]] = i;
  Graph out;
  out.n = g.n;
  out.edges.reserve(g.edges.size());
  for (auto [u, v] : g.edges) out.edges.emplace_back(pos[u], pos[v]);
  return out;
}

// Incident (neighbor, edge index) lists.
std::vector<std::vector<std::pair<int, int>>> incidence(const Graph& g) {
  std::vector<std::vector<std::pair<int, int>>> inc(g.n);
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
    auto [u, v] = g.edges[e];
    inc[u].emplace_back(v, e);
    inc[v].emplace_back(u, e);
  }
  return inc;
}

std::vector<int> bfs_distances(const std::vector<std::vector<int>>& adj, int source, std::vector<int>& order) {
  std::vector<int> dist(adj.size(), -1);
  std::queue<int> q;
  dist[source] = 0;
  q.push(source);
  order.clear();
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    order.push_back(v);
    for (int w : adj[v]) {
      if (dist[w] == -1) {
        dist[w] = dist[v] + 1;
        q.push(w);
      }
    }
  }
  return dist;
}

class BitmaskCounter {
 public:
  explicit BitmaskCounter(const Graph& g) : inc_(incidence(g)) {}

  BigInt count(std::uint64_t unmatched) {
    if (unmatched == 0) return 1;
    if (auto it = memo_.find(unmatched); it != memo_.end()) return it->second;
    const int v = std::countr_zero(unmatched);
    const std::uint64_t rest = unmatched & ~(std::uint64_t{1} << v);
    BigInt total = 0;
    for (auto [w, e] : inc_[v]) {
      if (rest >> w & 1) total += count(rest & ~(std::uint64_t{1} << w));
    }
    memo_.emplace(unmatched, total);
    return total;
  }

 private:
  std::vector<std::vector<std::pair<int, int>>> inc_;
  std::unordered_map<std::uint64_t, BigInt> memo_;
};

}  // namespace

std::vector<int> bandwidth_order(const Graph& g) {
  const auto adj = g.adjacency();
  std::vector<char> placed(g.n, 0);
  std::vector<int> result;
  result.reserve(g.n);
  std::vector<int> order;
  for (int s = 0; s < g.n; ++s) {
    if (placed[s]) continue;
    // Two sweeps to land on a far end of the component.
    auto dist = bfs_distances(adj, s, order);
    int far = s;
    for (int v : order) {
      if (dist[v] > dist[far] || (dist[v] == dist[far] && adj[v].size() < adj[far].size())) far = v;
    }
    bfs_distances(adj, far, order);
    for (int v : order) {
      placed[v] = 1;
      result.push_back(v);
    }
  }
  return result;
}

BigInt count_matchings_bitmask(const Graph& g) {
  if (g.n > 63) throw Error(ErrorCode::TooLarge, "bitmask counter supports at most 63 vertices");
  if (g.n % 2 != 0) return 0;
  BitmaskCounter counter(g);
  return counter.count(g.n == 0 ? 0 : (std::uint64_t{1} << g.n) - 1);
}

BigInt count_matchings_frontier(const Graph& g) {
  if (g.n % 2 != 0) return 0;
  const Graph h = relabel(g, bandwidth_order(g));
  // Forward edges from each vertex, with parallel edges kept separately.
  std::vector<std::vector<int>> forward(h.n);
  int bandwidth = 0;
  for (auto [u, v] : h.edges) {
    if (u > v) std::swap(u, v);
    forward[u].push_back(v - u);
    bandwidth = std::max(bandwidth, v - u);
  }
  if (bandwidth > 63) throw Error(ErrorCode::TooLarge, "elimination order bandwidth exceeds 63");

  // Bit t of a state: vertex (current + t) is already matched.
  std::map<std::uint64_t, BigInt> states{{0, 1}};
  for (int v = 0; v < h.n; ++v) {
    std::map<std::uint64_t, BigInt> next;
    for (const auto& [mask, ways] : states) {
      if (mask & 1) {
        next[mask >> 1] += ways;
        continue;
      }
      for (int offset : forward[v]) {
        const std::uint64_t bit = std::uint64_t{1} << offset;
        if (mask & bit) continue;
        next[(mask | bit) >> 1] += ways;
      }
    }
    states = std::move(next);
    if (states.empty()) return 0;
  }
  auto it = states.find(0);
  return it == states.end() ? BigInt(0) : it->second;
}

BigInt count_perfect_matchings(const Graph& g) {
  if (g.n % 2 != 0) return 0;
  if (g.n <= 63) return count_matchings_bitmask(relabel(g, bandwidth_order(g)));
  return count_matchings_frontier(g);
}

std::vector<std::vector<int>> enumerate_perfect_matchings(const Graph& g, std::optional<std::size_t> limit) {
  if (!limit && g.n > 24) {
    throw Error(ErrorCode::LimitExceeded, "explicit enumeration above 24 vertices needs a limit");
  }
  std::vector<std::vector<int>> out;
  if (g.n % 2 != 0) return out;
  const auto inc = incidence(g);
  std::vector<char> matched(g.n, 0);
  std::vector<int> chosen;
  auto rec = [&](auto&& self) -> void {
    int v = 0;
    while (v < g.n && matched[v]) ++v;
    if (v == g.n) {
      if (limit && out.size() >= *limit) {
        throw Error(ErrorCode::LimitExceeded, "more than " + std::to_string(*limit) + " matchings");
      }
      auto sorted = chosen;
      std::sort(sorted.begin(), sorted.end());
      out.push_back(std::move(sorted));
      return;
    }
    matched[v] = 1;
    for (auto [w, e] : inc[v]) {
      if (matched[w]) continue;
      matched[w] = 1;
      chosen.push_back(e);
      self(self);
      chosen.pop_back();
      matched[w] = 0;
    }
    matched[v] = 0;
  };
  rec(rec);
  return out;
}

BlowUp blow_up(const PlanarMap& m) {
  if (m.num_vertices() < 2) throw Error(ErrorCode::TooSmall, "blow-up needs at least two vertices");
  if (!m.is_connected()) throw Error(ErrorCode::NotConnected, "blow-up needs a connected map");

  BlowUp out;
  out.polygon_of.resize(m.num_vertices());
  std::vector<Dart> partner = m.partners();
  std::vector<std::vector<Dart>> rotation;

  for (Vertex v = 0; v < m.num_vertices(); ++v) {
    const auto& rot = m.rotation(v);
    if (rot.size() == 1) {
      rotation.push_back({rot[0]});
      out.vertex_origin.push_back(v);
      continue;
    }
    const int k = static_cast<int>(rot.size());
    const auto first = static_cast<Vertex>(rotation.size());
    for (int i = 0; i < k; ++i) {
      rotation.push_back({rot[i]});
      out.vertex_origin.push_back(v);
      out.polygon_of[v].push_back(first + i);
    }
    // Polygon edge i joins corner i to corner i+1. Around corner i the
    // counterclockwise order is: source dart, toward i+1, toward i-1.
    std::vector<Dart> toward_next(k);
    std::vector<Dart> toward_prev(k);
    for (int i = 0; i < k; ++i) {
      const Dart a = static_cast<Dart>(partner.size());
      partner.push_back(a + 1);
      partner.push_back(a);
      toward_next[i] = a;
      toward_prev[(i + 1) % k] = a + 1;
    }
    for (int i = 0; i < k; ++i) {
      rotation[first + i].push_back(toward_next[i]);
      rotation[first + i].push_back(toward_prev[i]);
    }
  }

  out.result = PlanarMap(std::move(partner), std::move(rotation));
  out.is_original_edge.assign(out.result.num_edges(), 0);
  for (int e = 0; e < out.result.num_edges(); ++e) {
    out.is_original_edge[e] = out.result.edge_id(e) < m.num_darts();
  }
  return out;
}

Theorem5Report verify_theorem5(const PlanarMap& m) {
  Theorem5Report report;
  const auto blown = blow_up(m);
  report.m_of_g = lucas_statistic(m).m;
  report.M_of_G = count_perfect_matchings(blown.result.graph());
  report.equal = report.m_of_g == report.M_of_G;
  return report;
}

}  // namespace lucas
