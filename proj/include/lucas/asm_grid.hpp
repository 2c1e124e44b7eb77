#pragma once

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lucas/bigint.hpp"
#include "lucas/lucas.hpp"
#include "lucas/planar_map.hpp"

namespace lucas {

// Square matrix over {-1, 0, +1}, row-major.
class AsmMatrix {
 public:
  AsmMatrix() = default;
  explicit AsmMatrix(int n) : n_(n), entries_(static_cast<std::size_t>(n) * n, 0) {}
  explicit AsmMatrix(const std::vector<std::vector<int>>& rows);

  static AsmMatrix identity(int n);

  int size() const { return n_; }
  int operator()(int i, int j) const { return entries_[static_cast<std::size_t>(i) * n_ + j]; }
  int& operator()(int i, int j) { return entries_[static_cast<std::size_t>(i) * n_ + j]; }

  std::vector<std::vector<int>> rows() const;

  auto operator<=>(const AsmMatrix&) const = default;

 private:
  int n_ = 0;
  std::vector<int> entries_;
};

// Every row and column sums to 1 and its nonzero entries alternate in sign
// starting with +1 (equivalently every partial sum lies in {0, 1}).
bool validate_asm(const AsmMatrix& a);
bool validate_asm(const std::vector<std::vector<int>>& rows);

// All n x n ASMs in lexicographic row-major order (entries ordered -1 < 0 < 1).
// Throws TooLarge for n > 6.
std::vector<AsmMatrix> enumerate_asms(int n);

int n_plus(const AsmMatrix& a);
int n_minus(const AsmMatrix& a);

// The n x n grid: n horizontal lines H_i (top to bottom) crossing n vertical
// lines V_j (left to right) in n^2 degree-4 vertices, plus 4n pendant
// vertices. Internal vertex (i, j) has rotation east, north, west, south.
//
// Boundary labels, read counterclockwise from the top-left corner:
//   "1".."n"        left ends of H_1..H_n
//   "n''".."1''"    bottom ends of V_1..V_n
//   "1_".."n_"      right ends of H_n..H_1
//   "n'".."1'"      top ends of V_n..V_1
// so the corner pairs (1,1'), (n',n_), (1_,1''), (n'',n) are adjacent.
struct GridGraph {
  int n = 0;
  PlanarMap map;
  std::map<std::string, Vertex> labels;
  std::vector<std::vector<int>> horizontal;  // H_i as n+1 edge indices, left to right
  std::vector<std::vector<int>> vertical;    // V_j as n+1 edge indices, top to bottom

  Vertex internal(int i, int j) const { return i * n + j; }
  // Edge index of the pendant edge at a boundary label.
  int label_edge(const std::string& label) const;
};

GridGraph grid_graph(int n);

// Internal vertices obey the Lucas rule, each side alternates, the corner
// pairs agree and the edge at label 1 is green (y).
bool is_restricted(const GridGraph& g, const EdgeColoring& c);

// ASM -> restricted coloring: along each line, the two edges at an entry
// agree iff the entry is nonzero. Throws InvalidAsm.
EdgeColoring asm_to_coloring(const GridGraph& g, const AsmMatrix& a);

// Restricted coloring -> ASM: zeros where a line changes color, then +1, -1,
// +1, ... along each row. The column reading is checked to agree.
// Throws InvalidColoring or ColumnInconsistent.
AsmMatrix coloring_to_asm(const GridGraph& g, const EdgeColoring& c);

// Exhaustive search directly on the restricted-coloring constraints.
// Throws TooLarge for n > 5.
std::vector<EdgeColoring> enumerate_restricted(int n);

// Weak dual of the Aztec diamond of order n: one vertex per unit square
// inside |x| + |y| <= n + 1, rows of 2, 4, ..., 2n, 2n, ..., 2.
Graph aztec_dual(int n);

struct Theorem1Report {
  BigInt matchings;         // M(AD(n))
  BigInt plus_weighted;     // sum over n x n ASMs of 2^{N+}
  BigInt minus_weighted;    // sum over (n+1) x (n+1) ASMs of 2^{N-}
  bool equal = false;
};

// Throws TooLarge for n > 4 unless deep (then n <= 5).
Theorem1Report verify_theorem1(int n, bool deep = false);

// {"n":3,"rows":[[0,1,0],[1,-1,1],[0,1,0]]}
nlohmann::json serialize_asm(const AsmMatrix& a);
AsmMatrix parse_asm(const nlohmann::json& document);

}  // namespace lucas
