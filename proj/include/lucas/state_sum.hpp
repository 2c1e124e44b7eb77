#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lucas/bigint.hpp"
#include "lucas/planar_map.hpp"

namespace lucas {

// a*y + b*n in the matching algebra: y*y = y, y*n = n*y = n, n*n = 0.
struct AlgebraElement {
  BigInt coeff_y = 0;
  BigInt coeff_n = 0;

  bool operator==(const AlgebraElement&) const = default;
};

AlgebraElement algebra_mul(const AlgebraElement& a, const AlgebraElement& b);

// A word in {y,n}^k packed into a mask: bit i set <=> letter i is n.
using Word = std::uint64_t;

inline constexpr int kMaxArity = 62;

// A finitely supported element of M^{(x)k} with nonnegative coefficients.
// Zero coefficients are never stored; arity 0 is a scalar (the empty word).
class StateSum {
 public:
  StateSum() = default;
  explicit StateSum(int arity);

  static StateSum scalar(const BigInt& value);
  // Parses words such as "yny" (letter 1 first).
  static StateSum from_terms(int arity, const std::map<std::string, BigInt>& terms);

  int arity() const { return arity_; }
  const std::map<Word, BigInt>& terms() const { return terms_; }
  BigInt coefficient(Word w) const;
  BigInt coefficient(const std::string& word) const;

  void add(Word w, const BigInt& value);
  void set(Word w, const BigInt& value);

  bool operator==(const StateSum&) const = default;

 private:
  int arity_ = 0;
  std::map<Word, BigInt> terms_;
};

std::string word_to_string(Word w, int arity);
Word word_from_string(const std::string& s);
inline Word all_n(int arity) { return arity == 0 ? 0 : (~Word{0} >> (64 - arity)); }
// The bar involution: y <-> n on every letter.
inline Word complement(Word w, int arity) { return ~w & all_n(arity); }
// sigma(e1 ... ek) = ek e1 ... e(k-1)
Word rotate_word(Word w, int arity);

// Plain tensor product (W letters first).
StateSum tensor(const StateSum& w, const StateSum& v);

// Internal multiplication along 0-based index lists I (into W) and J (into V),
// both strictly increasing and of equal length. The multiplied letters stay
// at W's positions I; V's remaining letters are appended in order.
// Throws ArityMismatch or IndexOutOfRange.
StateSum internal_mul(const StateSum& w, const StateSum& v, const std::vector<int>& I,
                      const std::vector<int>& J);

// Gluing reading of internal_mul: W = v_G1, V = v_G2, the coordinates I of W
// identified with the coordinates J of V; the result is v of the glued graph.
inline StateSum patch(const StateSum& w, const StateSum& v, const std::vector<int>& I,
                      const std::vector<int>& J) {
  return internal_mul(w, v, I, J);
}

// Coefficient of each word: perfect matchings of g with the i-th distinguished
// vertex deleted where the word has y and kept where it has n.
// Throws DuplicateDistinguished or IndexOutOfRange.
StateSum state_sum(const Graph& g, const std::vector<int>& distinguished);

// Sum of all words whose n's split into adjacent pairs, coefficient 1.
StateSum fibonacci_tensor(int k);

// F_k + n (x) F_{k-2} (x) n, k >= 2.
StateSum polygon_state_sum(int k);

// Rotation closure of the support with coefficient 1; for even arity the
// all-n word (when present) gets coefficient 2.
StateSum cyclic_closure(const StateSum& t);

// sum_e W(e) V(bar e): perfect matchings after identifying the distinguished
// vertices pairwise.
BigInt connected_sum_count(const StateSum& w, const StateSum& v);

// sum_e W(e) V(e): perfect matchings after joining the distinguished vertices
// pairwise by new edges.
BigInt edge_glue_count(const StateSum& w, const StateSum& v);

// Replaces edge `edge` of g by a path through `inserted` new vertices
// (appended after the existing ones, never distinguished).
Graph subdivide_edge(const Graph& g, int edge, int inserted);

// v_G == v_G' where G' inserts `inserted` vertices on `edge`, whose endpoints
// must both be distinguished (NotDistinguishedEndpoints otherwise).
bool subdivision_preserves_state_sum(const Graph& g, const std::vector<int>& distinguished, int edge,
                                     int inserted);

// The even case: 2 * pairs inserted vertices.
inline bool check_subdivision_invariance(const Graph& g, const std::vector<int>& distinguished, int edge,
                                         int pairs) {
  return subdivision_preserves_state_sum(g, distinguished, edge, 2 * pairs);
}

// {"arity":k,"terms":{"<word>":"<bigint>"}}
nlohmann::json serialize_state_sum(const StateSum& s);
StateSum parse_state_sum(const nlohmann::json& document);

}  // namespace lucas
