#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "lucas/bigint.hpp"
#include "lucas/planar_map.hpp"

namespace lucas {

// Unit triangles of the triangular lattice, in lattice coordinates where a
// point is x*e1 + y*e2 with e1, e2 at 60 degrees.
//   up(x, y):   corners (x, y), (x+1, y), (x, y+1)
//   down(x, y): corners (x+1, y), (x, y+1), (x+1, y+1)
// up(x, y) shares a side with down(x, y), down(x-1, y) and down(x, y-1).
enum class Orientation : std::uint8_t { up = 0, down = 1 };

struct Cell {
  int x = 0;
  int y = 0;
  Orientation o = Orientation::up;

  auto operator<=>(const Cell&) const = default;
};

// Cells sorted; dual vertex i is cells[i].
struct TriangularRegion {
  std::vector<Cell> cells;
  Graph dual;
};

TriangularRegion region_from_cells(std::vector<Cell> cells);

// Semiregular hexagon with sides a, b, c, a, b, c:
// -c <= x <= a, 0 <= y <= b + c, 0 <= x + y <= a + b.
TriangularRegion hexagon_region(int a, int b, int c);

// Lozenge tilings of H(a,b,c), evaluated on prime exponents so no division
// ever leaves the integers.
BigInt macmahon(int a, int b, int c);

// T_a: the union of the a(a+1)/2 hexagons of six cells centred on the
// triangle of lattice points (-r + 2c, 2r - c), 0 <= c <= r < a. This is
// H(a,a,a) minus a staircase of a(a-1) cells at three alternating corners.
// Throws TooLarge for a > 6.
struct TaRegion {
  TriangularRegion region;
  std::vector<int> hexagon_of_cell;  // t_graph vertex owning each cell
};

TaRegion ta_region(int a);

// Triangular grid of side a; vertex (r, c), 0 <= c <= r < a, has id
// r(r+1)/2 + c and is drawn at (c - r/2, -r).
PlanarMap t_graph(int a);

// Tabulated M(T_a) for a = 1..7 as prime factorizations.
std::vector<std::pair<int, int>> table_factorization(int a);
BigInt table_value(int a);

// lucas_statistic(t_graph(a)).m
BigInt m_t(int a, unsigned jobs = 1);

struct Theorem4Report {
  int a = 0;
  std::optional<BigInt> region_matchings;  // a <= 5
  std::optional<BigInt> m_t;               // a <= 5, or a <= 7 when deep
  BigInt table;
  bool all_equal = false;
};

// Throws TooLarge when a > 7, or a > 5 without deep.
Theorem4Report verify_theorem4(int a, bool deep = false, unsigned jobs = 1);

// {"cells":[[x,y,"up"|"down"],...]}
nlohmann::json serialize_region(const TriangularRegion& r);
TriangularRegion parse_region(const nlohmann::json& document);

// Flat polygons, one per cell.
std::string region_svg(const TriangularRegion& r);

}  // namespace lucas
