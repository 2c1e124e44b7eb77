#include "lucas/tilings.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

#include "lucas/error.hpp"
#include "lucas/lucas.hpp"
#include "lucas/matchings.hpp"

namespace lucas {

namespace {

std::array<std::pair<int, int>, 3> corners(const Cell& c) {
  if (c.o == Orientation::up) return {{{c.x, c.y}, {c.x + 1, c.y}, {c.x, c.y + 1}}};
  return {{{c.x + 1, c.y}, {c.x, c.y + 1}, {c.x + 1, c.y + 1}}};
}

void add_prime_exponents(std::map<int, int>& exps, int value, int sign) {
  for (int p = 2; p * p <= value; ++p) {
    while (value % p == 0) {
      exps[p] += sign;
      value /= p;
    }
  }
  if (value > 1) exps[value] += sign;
}

}  // namespace

TriangularRegion region_from_cells(std::vector<Cell> cells) {
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  TriangularRegion r;
  r.cells = std::move(cells);
  r.dual.n = static_cast<int>(r.cells.size());
  auto index = [&](const Cell& c) -> int {
    auto it = std::lower_bound(r.cells.begin(), r.cells.end(), c);
    return it != r.cells.end() && *it == c ? static_cast<int>(it - r.cells.begin()) : -1;
  };
  for (int i = 0; i < r.dual.n; ++i) {
    const Cell& c = r.cells[i];
    if (c.o != Orientation::up) continue;
    for (const Cell& d : {Cell{c.x, c.y, Orientation::down}, Cell{c.x - 1, c.y, Orientation::down},
                          Cell{c.x, c.y - 1, Orientation::down}}) {
      if (int j = index(d); j != -1) r.dual.edges.emplace_back(i, j);
    }
  }
  return r;
}

TriangularRegion hexagon_region(int a, int b, int c) {
  if (a < 1 || b < 1 || c < 1) throw Error(ErrorCode::TooSmall, "hexagon sides must be positive");
  auto inside = [&](std::pair<int, int> p) {
    const auto [x, y] = p;
    return -c <= x && x <= a && 0 <= y && y <= b + c && 0 <= x + y && x + y <= a + b;
  };
  std::vector<Cell> cells;
  for (int x = -c - 1; x <= a + 1; ++x) {
    for (int y = -1; y <= b + c + 1; ++y) {
      for (Orientation o : {Orientation::up, Orientation::down}) {
        const Cell cell{x, y, o};
        const auto cs = corners(cell);
        if (std::all_of(cs.begin(), cs.end(), inside)) cells.push_back(cell);
      }
    }
  }
  return region_from_cells(std::move(cells));
}

BigInt macmahon(int a, int b, int c) {
  if (a < 1 || b < 1 || c < 1) throw Error(ErrorCode::TooSmall, "hexagon sides must be positive");
  std::map<int, int> exps;
  for (int i = 1; i <= a; ++i) {
    for (int j = 1; j <= b; ++j) {
      for (int k = 1; k <= c; ++k) {
        add_prime_exponents(exps, i + j + k - 1, +1);
        add_prime_exponents(exps, i + j + k - 2, -1);
      }
    }
  }
  BigInt out = 1;
  for (auto [p, e] : exps) {
    if (e < 0) throw Error(ErrorCode::InvalidMap, "MacMahon product left a denominator");  // cannot happen
    for (int t = 0; t < e; ++t) out *= p;
  }
  return out;
}

TaRegion ta_region(int a) {
  if (a < 1) throw Error(ErrorCode::TooSmall, "a must be positive");
  if (a > 6) throw Error(ErrorCode::TooLarge, "T_a region is limited to a <= 6");
  std::map<Cell, int> owner;
  for (int r = 0; r < a; ++r) {
    for (int c = 0; c <= r; ++c) {
      const int x = -r + 2 * c;
      const int y = 2 * r - c;
      const int v = r * (r + 1) / 2 + c;
      for (const Cell& cell : {Cell{x, y, Orientation::up}, Cell{x - 1, y, Orientation::up},
                               Cell{x, y - 1, Orientation::up}, Cell{x - 1, y, Orientation::down},
                               Cell{x, y - 1, Orientation::down}, Cell{x - 1, y - 1, Orientation::down}}) {
        owner.emplace(cell, v);
      }
    }
  }
  std::vector<Cell> cells;
  for (const auto& [cell, v] : owner) cells.push_back(cell);
  TaRegion out;
  out.region = region_from_cells(std::move(cells));
  for (const Cell& cell : out.region.cells) out.hexagon_of_cell.push_back(owner.at(cell));
  return out;
}

PlanarMap t_graph(int a) {
  if (a < 1) throw Error(ErrorCode::TooSmall, "a must be positive");
  auto id = [](int r, int c) { return r * (r + 1) / 2 + c; };
  auto valid = [a](int r, int c) { return 0 <= r && r < a && 0 <= c && c <= r; };
  MapBuilder b(a * (a + 1) / 2);
  std::map<std::pair<int, int>, Dart> dart_toward;  // (from, to) -> dart at from
  for (int r = 0; r < a; ++r) {
    for (int c = 0; c <= r; ++c) {
      for (auto [dr, dc] : {std::pair{0, 1}, std::pair{1, 0}, std::pair{1, 1}}) {
        if (!valid(r + dr, c + dc)) continue;
        const auto [d, e] = b.add_unplaced_edge();
        dart_toward[{id(r, c), id(r + dr, c + dc)}] = d;
        dart_toward[{id(r + dr, c + dc), id(r, c)}] = e;
      }
    }
  }
  // 0, 60, 120, 180, 240, 300 degrees
  constexpr std::pair<int, int> around[] = {{0, 1}, {-1, 0}, {-1, -1}, {0, -1}, {1, 0}, {1, 1}};
  for (int r = 0; r < a; ++r) {
    for (int c = 0; c <= r; ++c) {
      for (auto [dr, dc] : around) {
        if (valid(r + dr, c + dc)) b.place(id(r, c), dart_toward.at({id(r, c), id(r + dr, c + dc)}));
      }
    }
  }
  return b.build();
}

std::vector<std::pair<int, int>> table_factorization(int a) {
  switch (a) {
    case 1: return {{2, 1}};
    case 2: return {{3, 2}};
    case 3: return {{2, 3}, {13, 1}};
    case 4: return {{2, 2}, {5, 2}, {31, 1}};
    case 5: return {{2, 1}, {3, 2}, {19, 2}, {37, 1}};
    case 6: return {{2, 1}, {7, 3}, {13, 1}, {43, 1}, {127, 1}};
    case 7: return {{2, 7}, {3, 5}, {5, 3}, {7, 1}, {13, 1}, {73, 1}};
    default: throw Error(ErrorCode::IndexOutOfRange, "no table entry for a = " + std::to_string(a));
  }
}

BigInt table_value(int a) {
  BigInt out = 1;
  for (auto [p, e] : table_factorization(a)) {
    for (int t = 0; t < e; ++t) out *= p;
  }
  return out;
}

BigInt m_t(int a, unsigned jobs) {
  LucasOptions options;
  options.jobs = jobs;
  return lucas_statistic(t_graph(a), options).m;
}

Theorem4Report verify_theorem4(int a, bool deep, unsigned jobs) {
  if (a < 1) throw Error(ErrorCode::TooSmall, "a must be positive");
  if (a > 7) throw Error(ErrorCode::TooLarge, "no table entry beyond a = 7");
  if (a > 5 && !deep) throw Error(ErrorCode::TooLarge, "a = 6, 7 need --deep");
  Theorem4Report r;
  r.a = a;
  r.table = table_value(a);
  if (a <= 5) r.region_matchings = count_perfect_matchings(ta_region(a).region.dual);
  r.m_t = m_t(a, jobs);
  r.all_equal = *r.m_t == r.table && (!r.region_matchings || *r.region_matchings == r.table);
  return r;
}

nlohmann::json serialize_region(const TriangularRegion& r) {
  nlohmann::json cells = nlohmann::json::array();
  for (const Cell& c : r.cells) cells.push_back({c.x, c.y, c.o == Orientation::up ? "up" : "down"});
  return {{"cells", cells}};
}

TriangularRegion parse_region(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("cells") || !doc.at("cells").is_array()) {
    throw Error(ErrorCode::MalformedDocument, "expected {\"cells\":[[x,y,\"up\"|\"down\"],...]}");
  }
  std::vector<Cell> cells;
  for (const auto& item : doc.at("cells")) {
    if (!item.is_array() || item.size() != 3 || !item[0].is_number_integer() || !item[1].is_number_integer() ||
        !item[2].is_string()) {
      throw Error(ErrorCode::MalformedDocument, "bad cell " + item.dump());
    }
    const auto o = item[2].get<std::string>();
    if (o != "up" && o != "down") throw Error(ErrorCode::MalformedDocument, "bad orientation " + item.dump());
    cells.push_back({item[0].get<int>(), item[1].get<int>(), o == "up" ? Orientation::up : Orientation::down});
  }
  std::vector<Cell> sorted = cells;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorCode::MalformedDocument, "repeated cell");
  }
  return region_from_cells(std::move(cells));
}

std::string region_svg(const TriangularRegion& r) {
  const double h = std::sqrt(3.0) / 2.0;
  const double scale = 20.0;
  double min_x = 1e9, max_x = -1e9, min_y = 1e9, max_y = -1e9;
  auto project = [&](std::pair<int, int> p) {
    return std::pair{(p.first + 0.5 * p.second) * scale, -p.second * h * scale};
  };
  for (const Cell& c : r.cells) {
    for (auto p : corners(c)) {
      const auto [x, y] = project(p);
      min_x = std::min(min_x, x);
      max_x = std::max(max_x, x);
      min_y = std::min(min_y, y);
      max_y = std::max(max_y, y);
    }
  }
  if (r.cells.empty()) min_x = max_x = min_y = max_y = 0;
  std::ostringstream out;
  out << std::fixed << std::setprecision(2);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << min_x - 2 << ' ' << min_y - 2 << ' '
      << max_x - min_x + 4 << ' ' << max_y - min_y + 4 << "\">\n";
  for (const Cell& c : r.cells) {
    out << "  <polygon points=\"";
    bool first = true;
    for (auto p : corners(c)) {
      const auto [x, y] = project(p);
      out << (first ? "" : " ") << x << ',' << y;
      first = false;
    }
    out << "\" fill=\"" << (c.o == Orientation::up ? "#e8e8e8" : "#bdbdbd") << "\" stroke=\"#333\" stroke-width=\"0.5\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace lucas
