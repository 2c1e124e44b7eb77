#include "lucas/asm_grid.hpp"

#include <algorithm>

#include "lucas/error.hpp"
#include "lucas/matchings.hpp"

namespace lucas {

AsmMatrix::AsmMatrix(const std::vector<std::vector<int>>& rows) : AsmMatrix(static_cast<int>(rows.size())) {
  for (int i = 0; i < n_; ++i) {
    if (static_cast<int>(rows[i].size()) != n_) throw Error(ErrorCode::InvalidAsm, "matrix is not square");
    for (int j = 0; j < n_; ++j) (*this)(i, j) = rows[i][j];
  }
}

AsmMatrix AsmMatrix::identity(int n) {
  AsmMatrix a(n);
  for (int i = 0; i < n; ++i) a(i, i) = 1;
  return a;
}

std::vector<std::vector<int>> AsmMatrix::rows() const {
  std::vector<std::vector<int>> out(n_, std::vector<int>(n_));
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) out[i][j] = (*this)(i, j);
  }
  return out;
}

bool validate_asm(const AsmMatrix& a) {
  const int n = a.size();
  for (int line = 0; line < n; ++line) {
    int row = 0;
    int col = 0;
    for (int k = 0; k < n; ++k) {
      const int r = a(line, k);
      const int c = a(k, line);
      if (r < -1 || r > 1 || c < -1 || c > 1) return false;
      row += r;
      col += c;
      if (row < 0 || row > 1 || col < 0 || col > 1) return false;
    }
    if (row != 1 || col != 1) return false;
  }
  return true;
}

bool validate_asm(const std::vector<std::vector<int>>& rows) {
  for (const auto& r : rows) {
    if (r.size() != rows.size()) return false;
  }
  return validate_asm(AsmMatrix(rows));
}

std::vector<AsmMatrix> enumerate_asms(int n) {
  if (n < 1) throw Error(ErrorCode::TooSmall, "n must be positive");
  if (n > 6) throw Error(ErrorCode::TooLarge, "ASM enumeration is limited to n <= 6");
  std::vector<AsmMatrix> out;
  AsmMatrix a(n);
  std::vector<int> column_sum(n, 0);
  // Cell-by-cell with row and column partial sums kept in {0, 1}.
  auto rec = [&](auto&& self, int cell, int row_sum) -> void {
    if (cell == n * n) {
      out.push_back(a);
      return;
    }
    const int i = cell / n;
    const int j = cell % n;
    for (int x : {-1, 0, 1}) {
      const int r = row_sum + x;
      const int c = column_sum[j] + x;
      if (r < 0 || r > 1 || c < 0 || c > 1) continue;
      if (j == n - 1 && r != 1) continue;
      if (i == n - 1 && c != 1) continue;
      a(i, j) = x;
      column_sum[j] = c;
      self(self, cell + 1, j == n - 1 ? 0 : r);
      column_sum[j] -= x;
    }
    a(i, j) = 0;
  };
  rec(rec, 0, 0);
  return out;
}

int n_plus(const AsmMatrix& a) {
  int count = 0;
  for (int i = 0; i < a.size(); ++i) {
    for (int j = 0; j < a.size(); ++j) count += a(i, j) == 1;
  }
  return count;
}

int n_minus(const AsmMatrix& a) {
  int count = 0;
  for (int i = 0; i < a.size(); ++i) {
    for (int j = 0; j < a.size(); ++j) count += a(i, j) == -1;
  }
  return count;
}

int GridGraph::label_edge(const std::string& label) const {
  auto it = labels.find(label);
  if (it == labels.end()) throw Error(ErrorCode::IndexOutOfRange, "no boundary label \"" + label + "\"");
  return map.edge_index(map.rotation(it->second).front());
}

GridGraph grid_graph(int n) {
  if (n < 1) throw Error(ErrorCode::TooSmall, "grid needs n >= 1");
  GridGraph g;
  g.n = n;
  const int internal = n * n;
  const Vertex left0 = internal;
  const Vertex right0 = internal + n;
  const Vertex top0 = internal + 2 * n;
  const Vertex bottom0 = internal + 3 * n;
  MapBuilder b(internal + 4 * n);

  // h_dart[i][k]: darts of horizontal edge k on row i (first at the left end).
  std::vector<std::vector<std::pair<Dart, Dart>>> h(n, std::vector<std::pair<Dart, Dart>>(n + 1));
  std::vector<std::vector<std::pair<Dart, Dart>>> v(n + 1, std::vector<std::pair<Dart, Dart>>(n));
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k <= n; ++k) h[i][k] = b.add_unplaced_edge();
  }
  for (int k = 0; k <= n; ++k) {
    for (int j = 0; j < n; ++j) v[k][j] = b.add_unplaced_edge();
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Vertex x = i * n + j;
      b.place(x, h[i][j + 1].first);   // east
      b.place(x, v[i][j].second);      // north
      b.place(x, h[i][j].second);      // west
      b.place(x, v[i + 1][j].first);   // south
    }
  }
  for (int i = 0; i < n; ++i) {
    b.place(left0 + i, h[i][0].first);
    b.place(right0 + i, h[i][n].second);
  }
  for (int j = 0; j < n; ++j) {
    b.place(top0 + j, v[0][j].first);
    b.place(bottom0 + j, v[n][j].second);
  }
  g.map = b.build();

  g.horizontal.assign(n, {});
  g.vertical.assign(n, {});
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k <= n; ++k) g.horizontal[i].push_back(g.map.edge_index(h[i][k].first));
  }
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k <= n; ++k) g.vertical[j].push_back(g.map.edge_index(v[k][j].first));
  }

  for (int t = 1; t <= n; ++t) {
    const std::string s = std::to_string(t);
    g.labels[s] = left0 + (t - 1);
    g.labels[s + "'"] = top0 + (t - 1);
    g.labels[s + "_"] = right0 + (n - t);
    g.labels[s + "''"] = bottom0 + (n - t);
  }
  return g;
}

namespace {

bool alternates(const std::vector<Color>& side) {
  for (std::size_t t = 1; t < side.size(); ++t) {
    if (side[t] == side[t - 1]) return false;
  }
  return true;
}

}  // namespace

bool is_restricted(const GridGraph& g, const EdgeColoring& c) {
  const int n = g.n;
  if (static_cast<int>(c.size()) != g.map.num_edges()) return false;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (!is_local_valid(local_word(g.map, c, g.internal(i, j)))) return false;
    }
  }
  const auto side = [&](const char* suffix) {
    std::vector<Color> colors;
    for (int t = 1; t <= n; ++t) colors.push_back(c[g.label_edge(std::to_string(t) + suffix)]);
    return colors;
  };
  const auto a = side("");
  const auto bp = side("'");
  const auto cu = side("_");
  const auto dpp = side("''");
  if (!alternates(a) || !alternates(bp) || !alternates(cu) || !alternates(dpp)) return false;
  const std::string last = std::to_string(n);
  const auto same = [&](const std::string& x, const std::string& y) {
    return c[g.label_edge(x)] == c[g.label_edge(y)];
  };
  if (!same("1", "1'") || !same(last + "'", last + "_") || !same("1_", "1''") || !same(last + "''", last)) {
    return false;
  }
  return c[g.label_edge("1")] == Color::y;
}

EdgeColoring asm_to_coloring(const GridGraph& g, const AsmMatrix& a) {
  if (a.size() != g.n || !validate_asm(a)) throw Error(ErrorCode::InvalidAsm, "not an ASM of the grid's size");
  const int n = g.n;
  EdgeColoring c(g.map.num_edges(), Color::y);
  // Left ends of H_i alternate from green at label 1; corner (1,1') and
  // alternation pin the top ends of V_j the same way.
  for (int i = 0; i < n; ++i) {
    Color color = i % 2 == 0 ? Color::y : Color::n;
    c[g.horizontal[i][0]] = color;
    for (int k = 0; k < n; ++k) {
      if (a(i, k) == 0) color = flip(color);
      c[g.horizontal[i][k + 1]] = color;
    }
  }
  for (int j = 0; j < n; ++j) {
    Color color = j % 2 == 0 ? Color::y : Color::n;
    c[g.vertical[j][0]] = color;
    for (int k = 0; k < n; ++k) {
      if (a(k, j) == 0) color = flip(color);
      c[g.vertical[j][k + 1]] = color;
    }
  }
  if (!is_restricted(g, c)) throw Error(ErrorCode::InvalidAsm, "ASM did not extend to a restricted coloring");
  return c;
}

AsmMatrix coloring_to_asm(const GridGraph& g, const EdgeColoring& c) {
  if (!is_restricted(g, c)) throw Error(ErrorCode::InvalidColoring, "not a restricted coloring of G_n");
  const int n = g.n;
  AsmMatrix by_rows(n);
  AsmMatrix by_columns(n);
  for (int i = 0; i < n; ++i) {
    int sign = 1;
    for (int k = 0; k < n; ++k) {
      if (c[g.horizontal[i][k]] == c[g.horizontal[i][k + 1]]) {
        by_rows(i, k) = sign;
        sign = -sign;
      }
    }
  }
  for (int j = 0; j < n; ++j) {
    int sign = 1;
    for (int k = 0; k < n; ++k) {
      if (c[g.vertical[j][k]] == c[g.vertical[j][k + 1]]) {
        by_columns(k, j) = sign;
        sign = -sign;
      }
    }
  }
  if (by_rows != by_columns) throw Error(ErrorCode::ColumnInconsistent, "row and column readings differ");
  if (!validate_asm(by_rows)) throw Error(ErrorCode::InvalidColoring, "coloring does not read as an ASM");
  return by_rows;
}

std::vector<EdgeColoring> enumerate_restricted(int n) {
  if (n > 5) throw Error(ErrorCode::TooLarge, "restricted enumeration is limited to n <= 5");
  const GridGraph g = grid_graph(n);
  std::vector<EdgeColoring> out;
  EdgeColoring c(g.map.num_edges(), Color::y);

  // Left side is fixed by normalization and alternation; both phases of the
  // top side are tried. Sweeping vertices row by row, the west and north
  // edges are known and the six local schemes leave at most two choices for
  // the east and south edges.
  for (int i = 0; i < n; ++i) c[g.horizontal[i][0]] = i % 2 == 0 ? Color::y : Color::n;
  for (Color top_phase : {Color::y, Color::n}) {
    for (int j = 0; j < n; ++j) c[g.vertical[j][0]] = j % 2 == 0 ? top_phase : flip(top_phase);
    auto rec = [&](auto&& self, int cell) -> void {
      if (cell == n * n) {
        if (is_restricted(g, c)) out.push_back(c);
        return;
      }
      const int i = cell / n;
      const int j = cell % n;
      const Color west = c[g.horizontal[i][j]];
      const Color north = c[g.vertical[j][i]];
      for (Color east : {Color::y, Color::n}) {
        for (Color south : {Color::y, Color::n}) {
          const std::vector<Color> word{east, north, west, south};
          if (!is_local_valid(word)) continue;
          c[g.horizontal[i][j + 1]] = east;
          c[g.vertical[j][i + 1]] = south;
          self(self, cell + 1);
        }
      }
    };
    rec(rec, 0);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Graph aztec_dual(int n) {
  if (n < 1) throw Error(ErrorCode::TooSmall, "order must be positive");
  Graph g;
  std::map<std::pair<int, int>, int> id;  // (row y, column x) of the lower-left corner
  for (int y = n; y >= -(n + 1); --y) {
    for (int x = -(n + 1); x <= n; ++x) {
      const int reach = std::max(std::abs(x), std::abs(x + 1)) + std::max(std::abs(y), std::abs(y + 1));
      if (reach <= n + 1) id[{y, x}] = g.n++;
    }
  }
  for (const auto& [cell, v] : id) {
    const auto [y, x] = cell;
    if (auto it = id.find({y, x + 1}); it != id.end()) g.edges.emplace_back(v, it->second);
    if (auto it = id.find({y + 1, x}); it != id.end()) g.edges.emplace_back(v, it->second);
  }
  return g;
}

Theorem1Report verify_theorem1(int n, bool deep) {
  if (n < 1) throw Error(ErrorCode::TooSmall, "order must be positive");
  if (n > (deep ? 5 : 4)) throw Error(ErrorCode::TooLarge, "Aztec/ASM check limited to n <= 4 (5 with deep)");
  Theorem1Report r;
  r.matchings = count_perfect_matchings(aztec_dual(n));
  for (const auto& a : enumerate_asms(n)) r.plus_weighted += pow2(n_plus(a));
  for (const auto& a : enumerate_asms(n + 1)) r.minus_weighted += pow2(n_minus(a));
  r.equal = r.matchings == r.plus_weighted && r.plus_weighted == r.minus_weighted;
  return r;
}

nlohmann::json serialize_asm(const AsmMatrix& a) { return {{"n", a.size()}, {"rows", a.rows()}}; }

AsmMatrix parse_asm(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("rows") || !doc.at("rows").is_array()) {
    throw Error(ErrorCode::MalformedDocument, "expected {\"n\":k,\"rows\":[[...],...]}");
  }
  std::vector<std::vector<int>> rows;
  try {
    rows = doc.at("rows").get<std::vector<std::vector<int>>>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::MalformedDocument, e.what());
  }
  if (doc.contains("n") && doc.at("n") != static_cast<int>(rows.size())) {
    throw Error(ErrorCode::MalformedDocument, "\"n\" disagrees with the number of rows");
  }
  for (const auto& r : rows) {
    if (r.size() != rows.size()) throw Error(ErrorCode::MalformedDocument, "matrix is not square");
  }
  return AsmMatrix(rows);
}

}  // namespace lucas
