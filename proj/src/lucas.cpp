#include "lucas/lucas.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "lucas/error.hpp"

namespace lucas {

bool is_fibonacci_word(std::span<const Color> word) {
  std::size_t run = 0;
  for (Color c : word) {
    if (c == Color::n) {
      ++run;
    } else {
      if (run % 2 != 0) return false;
      run = 0;
    }
  }
  return run % 2 == 0;
}

bool is_local_valid(std::span<const Color> word) {
  const std::size_t k = word.size();
  const auto first_y = std::find(word.begin(), word.end(), Color::y);
  if (first_y == word.end()) return k % 2 == 0;
  // Rotate so the word starts at a y; cyclic runs become linear runs.
  const auto start = static_cast<std::size_t>(first_y - word.begin());
  std::size_t run = 0;
  for (std::size_t i = 0; i < k; ++i) {
    if (word[(start + i) % k] == Color::n) {
      ++run;
    } else {
      if (run % 2 != 0) return false;
      run = 0;
    }
  }
  return run % 2 == 0;
}

std::vector<Color> local_word(const PlanarMap& m, const EdgeColoring& c, Vertex v) {
  std::vector<Color> word;
  word.reserve(m.degree(v));
  for (Dart d : m.rotation(v)) word.push_back(c[m.edge_index(d)]);
  return word;
}

bool is_lucas_coloring(const PlanarMap& m, const EdgeColoring& c) {
  if (static_cast<int>(c.size()) != m.num_edges()) return false;
  for (Vertex v = 0; v < m.num_vertices(); ++v) {
    if (!is_local_valid(local_word(m, c, v))) return false;
  }
  return true;
}

namespace {

constexpr std::int8_t kUnset = -1;

// Backtracking over edges in index order with run-parity pruning at both
// endpoints of the edge just colored.
class LucasSearch {
 public:
  explicit LucasSearch(const PlanarMap& m)
      : m_(m), state_(m.num_darts(), kUnset), remaining_(m.num_vertices()), coloring_(m.num_edges()) {
    for (Vertex v = 0; v < m.num_vertices(); ++v) remaining_[v] = m.degree(v);
  }

  bool assign(int e, Color c) {
    const Dart a = m_.edge_id(e);
    const Dart b = m_.partner(a);
    state_[a] = state_[b] = static_cast<std::int8_t>(c);
    --remaining_[m_.vertex_of(a)];
    --remaining_[m_.vertex_of(b)];
    coloring_[e] = c;
    return consistent_at(a) && consistent_at(b);
  }

  void unassign(int e) {
    const Dart a = m_.edge_id(e);
    const Dart b = m_.partner(a);
    state_[a] = state_[b] = kUnset;
    ++remaining_[m_.vertex_of(a)];
    ++remaining_[m_.vertex_of(b)];
  }

  template <typename Visit>
  void run(int e, Visit&& visit) {
    if (e == m_.num_edges()) {
      visit(coloring_);
      return;
    }
    for (Color c : {Color::y, Color::n}) {
      if (assign(e, c)) run(e + 1, visit);
      unassign(e);
    }
  }

  // Valid partial colorings of edges [0, depth), in enumeration order.
  void prefixes(int e, int depth, std::vector<EdgeColoring>& out) {
    if (e == depth) {
      out.emplace_back(coloring_.begin(), coloring_.begin() + depth);
      return;
    }
    for (Color c : {Color::y, Color::n}) {
      if (assign(e, c)) prefixes(e + 1, depth, out);
      unassign(e);
    }
  }

 private:
  std::int8_t at(const std::vector<Dart>& rot, int i) const {
    const int k = static_cast<int>(rot.size());
    return state_[rot[((i % k) + k) % k]];
  }

  // Length of the run of n starting next to position p, walking in direction
  // step; `closed` reports whether the run ends at a colored y.
  int run_from(const std::vector<Dart>& rot, int p, int step, bool& closed) const {
    const int k = static_cast<int>(rot.size());
    int len = 0;
    for (int i = p + step; len < k; i += step) {
      const auto s = at(rot, i);
      if (s == static_cast<std::int8_t>(Color::n)) {
        ++len;
        continue;
      }
      closed = (s == static_cast<std::int8_t>(Color::y));
      return len;
    }
    closed = false;
    return len;
  }

  bool consistent_at(Dart d) const {
    const Vertex v = m_.vertex_of(d);
    const auto& rot = m_.rotation(v);
    if (remaining_[v] == 0) {
      std::vector<Color> word;
      word.reserve(rot.size());
      for (Dart x : rot) word.push_back(static_cast<Color>(state_[x]));
      return is_local_valid(word);
    }
    const int p = m_.position(d);
    bool left_closed = false;
    bool right_closed = false;
    const int left = run_from(rot, p, -1, left_closed);
    const int right = run_from(rot, p, +1, right_closed);
    if (state_[d] == static_cast<std::int8_t>(Color::n)) {
      return !(left_closed && right_closed && (left + right + 1) % 2 != 0);
    }
    return !(left_closed && left % 2 != 0) && !(right_closed && right % 2 != 0);
  }

  const PlanarMap& m_;
  std::vector<std::int8_t> state_;
  std::vector<int> remaining_;
  EdgeColoring coloring_;
};

}  // namespace

void enumerate_lucas(const PlanarMap& m, const std::function<void(const EdgeColoring&)>& visit) {
  LucasSearch search(m);
  search.run(0, visit);
}

std::vector<EdgeColoring> lucas_colorings(const PlanarMap& m, std::optional<std::size_t> limit) {
  std::vector<EdgeColoring> out;
  enumerate_lucas(m, [&](const EdgeColoring& c) {
    if (limit && out.size() >= *limit) {
      throw Error(ErrorCode::LimitExceeded, "more than " + std::to_string(*limit) + " colorings");
    }
    out.push_back(c);
  });
  return out;
}

namespace {

int count_uniform(const PlanarMap& m, const EdgeColoring& c, Color target) {
  int count = 0;
  for (Vertex v = 0; v < m.num_vertices(); ++v) {
    const auto& rot = m.rotation(v);
    const bool all = std::all_of(rot.begin(), rot.end(),
                                 [&](Dart d) { return c[m.edge_index(d)] == target; });
    if (all) ++count;
  }
  return count;
}

}  // namespace

int special_count(const PlanarMap& m, const EdgeColoring& c) { return count_uniform(m, c, Color::n); }

int dual_special_count(const PlanarMap& m, const EdgeColoring& c) { return count_uniform(m, c, Color::y); }

EdgeColoring dual_coloring(const PlanarMap& m, const EdgeColoring& c) {
  for (Vertex v = 0; v < m.num_vertices(); ++v) {
    if (m.degree(v) < 2 || m.degree(v) % 2 != 0) {
      throw Error(ErrorCode::OddDegreeVertex,
                  "vertex " + std::to_string(v) + " has degree " + std::to_string(m.degree(v)));
    }
  }
  EdgeColoring out(c.size());
  std::transform(c.begin(), c.end(), out.begin(), flip);
  return out;
}

std::vector<std::vector<std::pair<Dart, Dart>>> pairings(const PlanarMap& m, const EdgeColoring& c) {
  std::vector<std::vector<std::pair<Dart, Dart>>> out(m.num_vertices());
  for (Vertex v = 0; v < m.num_vertices(); ++v) {
    const auto& rot = m.rotation(v);
    const int k = static_cast<int>(rot.size());
    auto is_n = [&](int i) { return c[m.edge_index(rot[((i % k) + k) % k])] == Color::n; };
    int start = 0;
    // Begin just after a y so runs are read linearly; all-n keeps start 0.
    for (int i = 0; i < k; ++i) {
      if (!is_n(i)) {
        start = i + 1;
        break;
      }
    }
    for (int i = 0; i < k; ++i) {
      const int p = start + i;
      if (!is_n(p)) continue;
      if (i + 1 >= k || !is_n(p + 1)) {
        throw Error(ErrorCode::InvalidColoring, "odd run of n at vertex " + std::to_string(v));
      }
      out[v].emplace_back(rot[p % k], rot[(p + 1) % k]);
      ++i;
    }
  }
  return out;
}

LucasStats lucas_statistic(const PlanarMap& m, const LucasOptions& options) {
  LucasStats stats;
  stats.sp_histogram.assign(m.num_vertices() + 1, 0);

  const unsigned jobs = std::max(1u, options.jobs);
  if (jobs == 1 || options.keep_colorings || m.num_edges() < 8) {
    LucasSearch search(m);
    search.run(0, [&](const EdgeColoring& c) {
      const int sp = special_count(m, c);
      ++stats.sp_histogram[sp];
      if (options.keep_colorings) stats.per_coloring.emplace_back(c, sp);
    });
  } else {
    // Disjoint subtrees fixed by the colors of the first few edges.
    std::vector<EdgeColoring> prefixes;
    {
      LucasSearch seed(m);
      seed.prefixes(0, std::min(m.num_edges(), 12), prefixes);
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::vector<std::uint64_t>> partial(jobs, std::vector<std::uint64_t>(stats.sp_histogram.size()));
    {
      std::vector<std::jthread> workers;
      for (unsigned w = 0; w < jobs; ++w) {
        workers.emplace_back([&, w] {
          for (std::size_t i = next++; i < prefixes.size(); i = next++) {
            LucasSearch search(m);
            const auto& prefix = prefixes[i];
            for (int e = 0; e < static_cast<int>(prefix.size()); ++e) search.assign(e, prefix[e]);
            search.run(static_cast<int>(prefix.size()),
                       [&](const EdgeColoring& c) { ++partial[w][special_count(m, c)]; });
          }
        });
      }
    }
    for (const auto& h : partial) {
      for (std::size_t s = 0; s < h.size(); ++s) stats.sp_histogram[s] += h[s];
    }
  }

  for (std::size_t s = 0; s < stats.sp_histogram.size(); ++s) {
    stats.count += stats.sp_histogram[s];
    stats.m += BigInt(stats.sp_histogram[s]) << static_cast<unsigned>(s);
  }
  return stats;
}

BigInt dual_statistic(const PlanarMap& m) {
  BigInt total = 0;
  enumerate_lucas(m, [&](const EdgeColoring& c) { total += pow2(dual_special_count(m, c)); });
  return total;
}

nlohmann::json serialize_coloring(const PlanarMap& m, const EdgeColoring& c) {
  nlohmann::json edges = nlohmann::json::object();
  for (int e = 0; e < m.num_edges(); ++e) edges[std::to_string(m.edge_id(e))] = std::string(1, to_char(c[e]));
  return {{"edges", edges}};
}

EdgeColoring parse_coloring(const PlanarMap& m, const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("edges") || !doc.at("edges").is_object()) {
    throw Error(ErrorCode::MalformedDocument, "expected {\"edges\":{\"<edgeId>\":\"y\"|\"n\"}}");
  }
  EdgeColoring c(m.num_edges(), Color::y);
  std::vector<char> seen(m.num_edges(), 0);
  for (const auto& [key, value] : doc.at("edges").items()) {
    int dart = -1;
    try {
      std::size_t used = 0;
      dart = std::stoi(key, &used);
      if (used != key.size()) dart = -1;
    } catch (const std::exception&) {
      dart = -1;
    }
    if (dart < 0 || dart >= m.num_darts() || m.edge_id(m.edge_index(dart)) != dart) {
      throw Error(ErrorCode::MalformedDocument, "unknown edge id \"" + key + "\"");
    }
    if (!value.is_string()) throw Error(ErrorCode::MalformedDocument, "color must be a string");
    const auto s = value.get<std::string>();
    Color col;
    if (s == "y" || s == "green") {
      col = Color::y;
    } else if (s == "n" || s == "red") {
      col = Color::n;
    } else {
      throw Error(ErrorCode::MalformedDocument, "unknown color \"" + s + "\"");
    }
    c[m.edge_index(dart)] = col;
    seen[m.edge_index(dart)] = 1;
  }
  for (int e = 0; e < m.num_edges(); ++e) {
    if (!seen[e]) throw Error(ErrorCode::MalformedDocument, "edge " + std::to_string(m.edge_id(e)) + " has no color");
  }
  return c;
}

nlohmann::json serialize_stats(const LucasStats& stats) {
  return {{"count", to_decimal(stats.count)}, {"m", to_decimal(stats.m)}};
}

}  // namespace lucas
