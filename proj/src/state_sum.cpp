#include "lucas/state_sum.hpp"

#include <algorithm>

#include "lucas/error.hpp"
#include "lucas/lucas.hpp"
#include "lucas/matchings.hpp"

namespace lucas {

AlgebraElement algebra_mul(const AlgebraElement& a, const AlgebraElement& b) {
  return {a.coeff_y * b.coeff_y, a.coeff_y * b.coeff_n + a.coeff_n * b.coeff_y};
}

StateSum::StateSum(int arity) : arity_(arity) {
  if (arity < 0 || arity > kMaxArity) {
    throw Error(ErrorCode::IndexOutOfRange, "arity " + std::to_string(arity) + " outside [0, 62]");
  }
}

StateSum StateSum::scalar(const BigInt& value) {
  StateSum s(0);
  s.add(0, value);
  return s;
}

StateSum StateSum::from_terms(int arity, const std::map<std::string, BigInt>& terms) {
  StateSum s(arity);
  for (const auto& [word, value] : terms) {
    if (static_cast<int>(word.size()) != arity) {
      throw Error(ErrorCode::ArityMismatch, "word \"" + word + "\" has length " + std::to_string(word.size()));
    }
    s.add(word_from_string(word), value);
  }
  return s;
}

BigInt StateSum::coefficient(Word w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? BigInt(0) : it->second;
}

BigInt StateSum::coefficient(const std::string& word) const { return coefficient(word_from_string(word)); }

void StateSum::add(Word w, const BigInt& value) {
  if (value == 0) return;
  auto& slot = terms_[w];
  slot += value;
  if (slot == 0) terms_.erase(w);
}

void StateSum::set(Word w, const BigInt& value) {
  if (value == 0) {
    terms_.erase(w);
  } else {
    terms_[w] = value;
  }
}

std::string word_to_string(Word w, int arity) {
  std::string s(arity, 'y');
  for (int i = 0; i < arity; ++i) {
    if (w >> i & 1) s[i] = 'n';
  }
  return s;
}

Word word_from_string(const std::string& s) {
  if (s.size() > kMaxArity) throw Error(ErrorCode::IndexOutOfRange, "word longer than 62 letters");
  Word w = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == 'n') {
      w |= Word{1} << i;
    } else if (s[i] != 'y') {
      throw Error(ErrorCode::MalformedDocument, "word \"" + s + "\" has a letter other than y/n");
    }
  }
  return w;
}

Word rotate_word(Word w, int arity) {
  if (arity <= 1) return w;
  const Word last = w >> (arity - 1) & 1;
  return ((w << 1) & all_n(arity)) | last;
}

StateSum tensor(const StateSum& w, const StateSum& v) { return internal_mul(w, v, {}, {}); }

StateSum internal_mul(const StateSum& w, const StateSum& v, const std::vector<int>& I,
                      const std::vector<int>& J) {
  if (I.size() != J.size()) throw Error(ErrorCode::ArityMismatch, "|I| != |J|");
  auto check = [](const std::vector<int>& idx, int arity, const char* name) {
    for (std::size_t t = 0; t < idx.size(); ++t) {
      if (idx[t] < 0 || idx[t] >= arity || (t > 0 && idx[t] <= idx[t - 1])) {
        throw Error(ErrorCode::IndexOutOfRange,
                    std::string(name) + " must be strictly increasing within [0, " + std::to_string(arity) + ")");
      }
    }
  };
  check(I, w.arity(), "I");
  check(J, v.arity(), "J");

  const int arity = w.arity() + v.arity() - static_cast<int>(I.size());
  StateSum out(arity);

  std::vector<int> survivors;  // V coordinates not in J, in order
  for (int j = 0; j < v.arity(); ++j) {
    if (!std::binary_search(J.begin(), J.end(), j)) survivors.push_back(j);
  }

  for (const auto& [a, ca] : w.terms()) {
    for (const auto& [b, cb] : v.terms()) {
      Word word = a;
      bool vanishes = false;
      for (std::size_t t = 0; t < I.size(); ++t) {
        const bool an = a >> I[t] & 1;
        const bool bn = b >> J[t] & 1;
        if (an && bn) {
          vanishes = true;  // n * n = 0
          break;
        }
        if (bn) word |= Word{1} << I[t];
      }
      if (vanishes) continue;
      for (std::size_t s = 0; s < survivors.size(); ++s) {
        if (b >> survivors[s] & 1) word |= Word{1} << (w.arity() + static_cast<int>(s));
      }
      out.add(word, ca * cb);
    }
  }
  return out;
}

StateSum state_sum(const Graph& g, const std::vector<int>& distinguished) {
  const int k = static_cast<int>(distinguished.size());
  StateSum out(k);
  std::vector<int> slot(g.n, -1);
  for (int i = 0; i < k; ++i) {
    const int v = distinguished[i];
    if (v < 0 || v >= g.n) throw Error(ErrorCode::IndexOutOfRange, "vertex " + std::to_string(v));
    if (slot[v] != -1) throw Error(ErrorCode::DuplicateDistinguished, "vertex " + std::to_string(v));
    slot[v] = i;
  }
  for (Word word = 0; word < (Word{1} << k); ++word) {
    // Keep distinguished vertex i iff letter i is n.
    std::vector<int> index(g.n, -1);
    Graph reduced;
    for (int v = 0; v < g.n; ++v) {
      if (slot[v] == -1 || (word >> slot[v] & 1)) index[v] = reduced.n++;
    }
    if (reduced.n % 2 != 0) continue;
    for (auto [u, v] : g.edges) {
      if (index[u] != -1 && index[v] != -1) reduced.edges.emplace_back(index[u], index[v]);
    }
    out.add(word, count_perfect_matchings(reduced));
  }
  return out;
}

StateSum fibonacci_tensor(int k) {
  StateSum out(k);
  std::vector<Color> letters(k);
  for (Word w = 0; w < (Word{1} << k); ++w) {
    for (int i = 0; i < k; ++i) letters[i] = (w >> i & 1) ? Color::n : Color::y;
    if (is_fibonacci_word(letters)) out.add(w, 1);
  }
  return out;
}

StateSum polygon_state_sum(int k) {
  if (k < 2) throw Error(ErrorCode::TooSmall, "polygon needs k >= 2");
  const StateSum n_letter = StateSum::from_terms(1, {{"n", 1}});
  StateSum out = fibonacci_tensor(k);
  const StateSum wrapped = tensor(tensor(n_letter, fibonacci_tensor(k - 2)), n_letter);
  for (const auto& [w, c] : wrapped.terms()) out.add(w, c);
  return out;
}

StateSum cyclic_closure(const StateSum& t) {
  const int k = t.arity();
  if (k < 1) throw Error(ErrorCode::TooSmall, "cyclic closure needs arity >= 1");
  StateSum out(k);
  for (const auto& [w, c] : t.terms()) {
    Word r = w;
    for (int i = 0; i < k; ++i) {
      out.set(r, 1);
      r = rotate_word(r, k);
    }
  }
  if (k % 2 == 0 && out.coefficient(all_n(k)) != 0) out.set(all_n(k), 2);
  return out;
}

BigInt connected_sum_count(const StateSum& w, const StateSum& v) {
  if (w.arity() != v.arity()) throw Error(ErrorCode::ArityMismatch, "arities differ");
  BigInt total = 0;
  for (const auto& [word, c] : w.terms()) total += c * v.coefficient(complement(word, w.arity()));
  return total;
}

BigInt edge_glue_count(const StateSum& w, const StateSum& v) {
  if (w.arity() != v.arity()) throw Error(ErrorCode::ArityMismatch, "arities differ");
  BigInt total = 0;
  for (const auto& [word, c] : w.terms()) total += c * v.coefficient(word);
  return total;
}

Graph subdivide_edge(const Graph& g, int edge, int inserted) {
  if (edge < 0 || edge >= static_cast<int>(g.edges.size())) {
    throw Error(ErrorCode::IndexOutOfRange, "edge " + std::to_string(edge));
  }
  Graph out = g;
  const auto [u, v] = g.edges[edge];
  out.edges.erase(out.edges.begin() + edge);
  int prev = u;
  for (int i = 0; i < inserted; ++i) {
    const int w = out.n++;
    out.edges.emplace_back(prev, w);
    prev = w;
  }
  out.edges.emplace_back(prev, v);
  return out;
}

bool subdivision_preserves_state_sum(const Graph& g, const std::vector<int>& distinguished, int edge,
                                     int inserted) {
  if (edge < 0 || edge >= static_cast<int>(g.edges.size())) {
    throw Error(ErrorCode::IndexOutOfRange, "edge " + std::to_string(edge));
  }
  const auto [u, v] = g.edges[edge];
  auto is_distinguished = [&](int x) {
    return std::find(distinguished.begin(), distinguished.end(), x) != distinguished.end();
  };
  if (!is_distinguished(u) || !is_distinguished(v)) {
    throw Error(ErrorCode::NotDistinguishedEndpoints,
                "edge " + std::to_string(edge) + " joins " + std::to_string(u) + " and " + std::to_string(v));
  }
  return state_sum(g, distinguished) == state_sum(subdivide_edge(g, edge, inserted), distinguished);
}

nlohmann::json serialize_state_sum(const StateSum& s) {
  nlohmann::json terms = nlohmann::json::object();
  for (const auto& [w, c] : s.terms()) terms[word_to_string(w, s.arity())] = to_decimal(c);
  return {{"arity", s.arity()}, {"terms", terms}};
}

StateSum parse_state_sum(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("arity") || !doc.contains("terms") ||
      !doc.at("arity").is_number_integer() || !doc.at("terms").is_object()) {
    throw Error(ErrorCode::MalformedDocument, "expected {\"arity\":k,\"terms\":{...}}");
  }
  std::map<std::string, BigInt> terms;
  for (const auto& [word, value] : doc.at("terms").items()) {
    if (!value.is_string()) throw Error(ErrorCode::MalformedDocument, "coefficients are decimal strings");
    try {
      terms[word] = BigInt(value.get<std::string>());
    } catch (const std::exception&) {
      throw Error(ErrorCode::MalformedDocument, "bad coefficient for \"" + word + "\"");
    }
  }
  return StateSum::from_terms(doc.at("arity").get<int>(), terms);
}

}  // namespace lucas
