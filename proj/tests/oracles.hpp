#pragma once

// Slow, obviously-correct reference computations. Nothing here shares code
// with the library beyond the plain data types.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lucas/bigint.hpp"
#include "lucas/planar_map.hpp"

namespace oracle {

using lucas::BigInt;
using lucas::Graph;
using lucas::PlanarMap;

// Perfect matchings: the smallest uncovered vertex tries each of its edges.
inline BigInt matchings(const Graph& g) {
  if (g.n % 2 != 0) return 0;
  std::vector<std::vector<int>> other(g.n);
  for (auto [u, v] : g.edges) {
    other[u].push_back(v);
    other[v].push_back(u);
  }
  std::vector<char> used(g.n, 0);
  auto rec = [&](auto&& self, int from) -> BigInt {
    while (from < g.n && used[from]) ++from;
    if (from == g.n) return 1;
    BigInt total = 0;
    used[from] = 1;
    for (int w : other[from]) {
      if (used[w]) continue;
      used[w] = 1;
      total += self(self, from + 1);
      used[w] = 0;
    }
    used[from] = 0;
    return total;
  };
  return rec(rec, 0);
}

// A cyclic word (true = n) is valid iff its n-letters can be split into pairs
// of cyclic neighbours. Tries both ways of pairing each position.
inline bool pairs_up(const std::vector<bool>& w) {
  const int k = static_cast<int>(w.size());
  int ns = 0;
  for (bool b : w) ns += b;
  if (ns == 0) return true;
  if (ns % 2 != 0) return false;
  for (int phase = 0; phase < 2; ++phase) {
    std::vector<char> taken(k, 0);
    bool ok = true;
    for (int s = 0; s < k && ok; ++s) {
      const int i = (s + phase) % k;
      if (!w[i] || taken[i]) continue;
      const int j = (i + 1) % k;
      if (j == i || !w[j] || taken[j]) {
        ok = false;
      } else {
        taken[i] = taken[j] = 1;
      }
    }
    if (ok) return true;
  }
  return false;
}

struct LucasTotals {
  BigInt count = 0;
  BigInt m = 0;       // sum of 2^(all-n vertices)
  BigInt m_dual = 0;  // sum of 2^(all-y vertices)
};

// Every one of the 2^E colorings is checked vertex by vertex.
inline LucasTotals lucas(const PlanarMap& m) {
  LucasTotals t;
  const int e = m.num_edges();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << e); ++mask) {
    bool ok = true;
    int special = 0, dual_special = 0;
    for (int v = 0; v < m.num_vertices() && ok; ++v) {
      std::vector<bool> w;
      for (auto d : m.rotation(v)) w.push_back(mask >> m.edge_index(d) & 1);
      ok = pairs_up(w);
      bool all_n = true, all_y = true;
      for (bool b : w) {
        all_n = all_n && b;
        all_y = all_y && !b;
      }
      special += all_n;
      dual_special += all_y;
    }
    if (!ok) continue;
    t.count += 1;
    t.m += lucas::pow2(special);
    t.m_dual += lucas::pow2(dual_special);
  }
  return t;
}

// Rows of an ASM are exactly the {-1,0,1} sequences whose nonzeros alternate
// +,-,...,+. Stack n such rows and keep the stacks whose columns also
// alternate that way.
inline std::vector<std::vector<int>> alternating_rows(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> row(n);
  auto rec = [&](auto&& self, int j, int expect) -> void {
    if (j == n) {
      if (expect == -1) out.push_back(row);  // last nonzero was +1
      return;
    }
    row[j] = 0;
    self(self, j + 1, expect);
    row[j] = expect;
    self(self, j + 1, -expect);
    row[j] = 0;
  };
  rec(rec, 0, 1);
  return out;
}

inline bool alternates(const std::vector<int>& line) {
  int expect = 1;
  for (int x : line) {
    if (x == 0) continue;
    if (x != expect) return false;
    expect = -expect;
  }
  return expect == -1;
}

inline std::vector<std::vector<std::vector<int>>> asms(int n) {
  const auto rows = alternating_rows(n);
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<std::vector<int>> mat;
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(mat.size()) == n) {
      for (int j = 0; j < n; ++j) {
        std::vector<int> col;
        for (int i = 0; i < n; ++i) col.push_back(mat[i][j]);
        if (!alternates(col)) return;
      }
      out.push_back(mat);
      return;
    }
    for (const auto& r : rows) {
      mat.push_back(r);
      self(self);
      mat.pop_back();
    }
  };
  rec(rec);
  return out;
}

// Word string (letter i = 'n' keeps distinguished vertex i) -> count.
inline std::map<std::string, BigInt> state_sum(const Graph& g, const std::vector<int>& dist) {
  std::map<std::string, BigInt> out;
  const int k = static_cast<int>(dist.size());
  for (std::uint64_t w = 0; w < (std::uint64_t{1} << k); ++w) {
    std::vector<char> gone(g.n, 0);
    std::string word(k, 'y');
    for (int i = 0; i < k; ++i) {
      if (w >> i & 1) {
        word[i] = 'n';
      } else {
        gone[dist[i]] = 1;
      }
    }
    std::vector<int> id(g.n, -1);
    Graph r;
    for (int v = 0; v < g.n; ++v) {
      if (!gone[v]) id[v] = r.n++;
    }
    for (auto [u, v] : g.edges) {
      if (id[u] != -1 && id[v] != -1) r.edges.emplace_back(id[u], id[v]);
    }
    const BigInt c = matchings(r);
    if (c != 0) out[word] = c;
  }
  return out;
}

}  // namespace oracle
