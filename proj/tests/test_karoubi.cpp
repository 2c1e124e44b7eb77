#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <random>

#include "lucas/error.hpp"
#include "lucas/fixtures.hpp"
#include "lucas/karoubi.hpp"
#include "lucas/lucas.hpp"

using namespace lucas;
using fixtures::torus_projection;

namespace {

const Projection& hopf() {
  static const Projection p = torus_projection(2);
  return p;
}

// Cycles the rotation at v by one step, which swaps its two smoothings.
Projection swap_labels(const Projection& p, Vertex v) {
  const auto& m = p.map;
  std::vector<Dart> partner(m.num_darts());
  for (Dart d = 0; d < m.num_darts(); ++d) partner[d] = m.partner(d);
  std::vector<std::vector<Dart>> rot;
  for (Vertex w = 0; w < m.num_vertices(); ++w) rot.push_back(m.rotation(w));
  std::rotate(rot[v].begin(), rot[v].begin() + 1, rot[v].end());
  return make_projection(PlanarMap(partner, rot), p.crossing_order);
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::MalformedDocument;
}

std::vector<Projection> bundled() {
  std::vector<Projection> out;
  for (int k = 2; k <= 6; ++k) out.push_back(torus_projection(k));
  out.push_back(fixtures::medial(fixtures::triangle()));
  out.push_back(fixtures::medial(fixtures::k4()));
  out.push_back(fixtures::medial(fixtures::doubled_triangle()));
  return out;
}

}  // namespace

TEST_CASE("Hopf resolutions") {
  CHECK(resolve(hopf(), std::vector<int>{0, 0}).circles == 2);
  CHECK(resolve(hopf(), std::vector<int>{0, 1}).circles == 1);
  CHECK(resolve(hopf(), std::vector<int>{1, 0}).circles == 1);
  CHECK(resolve(hopf(), std::vector<int>{1, 1}).circles == 2);
  CHECK(code_of([] { resolve(hopf(), std::vector<int>{0}); }) == ErrorCode::WordLengthMismatch);
  const auto c = cube(hopf());
  CHECK(c.resolutions.size() == 4);
  CHECK(c.edges.size() == 4);
}

TEST_CASE("projections must be 4-regular") {
  CHECK(code_of([] { make_projection(fixtures::triangle()); }) == ErrorCode::InvalidMap);
  CHECK(code_of([] { make_projection(torus_projection(3).map, {0, 0, 1}); }) == ErrorCode::InvalidMap);
}

TEST_CASE("cube structure") {
  for (const auto& p : bundled()) {
    const int n = p.map.num_vertices();
    if (n > 10) continue;
    const auto c = cube(p);
    REQUIRE(c.resolutions.size() == (std::size_t{1} << n));
    CHECK(c.edges.size() == static_cast<std::size_t>(n) << (n - 1));
    std::vector<int> layer(n + 1, 0);
    for (const auto& r : c.resolutions) {
      ++layer[std::popcount(r.u)];
      CHECK(r.circles >= 1);
    }
    int binom = 1;
    for (int i = 0; i <= n; ++i) {
      CHECK(layer[i] == binom);
      binom = binom * (n - i) / (i + 1);
    }
    std::map<std::pair<CubeWord, CubeWord>, int> sign;
    for (const auto& e : c.edges) {
      const int a = c.resolutions[e.from].circles, b = c.resolutions[e.to].circles;
      CHECK(std::abs(a - b) == 1);
      CHECK(e.merge == (b < a));
      CHECK(e.from_circles.size() == (e.merge ? 2u : 1u));
      CHECK(e.to_circles.size() == (e.merge ? 1u : 2u));
      sign[{e.from, e.to}] = e.sign;
    }
    // every square anticommutes
    for (CubeWord u = 0; u < (CubeWord{1} << n); ++u) {
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          if ((u >> i & 1) || (u >> j & 1)) continue;
          const CubeWord ui = u | 1u << i, uj = u | 1u << j, uij = ui | 1u << j;
          CHECK(sign[{u, ui}] * sign[{ui, uij}] == -sign[{u, uj}] * sign[{uj, uij}]);
        }
      }
    }
  }
}

TEST_CASE("non-zero differentials") {
  const auto& p = hopf();
  // 00 has two circles, 01 one: a merge
  CHECK(nonzero_differential(p, {0, 0b11}, {1, 0b1}));
  CHECK(nonzero_differential(p, {0, 0b00}, {1, 0b0}));
  CHECK_FALSE(nonzero_differential(p, {0, 0b01}, {1, 0b1}));
  CHECK_FALSE(nonzero_differential(p, {0, 0b01}, {1, 0b0}));
  CHECK_FALSE(nonzero_differential(p, {0, 0b11}, {1, 0b0}));
  // 01 -> 11 splits
  CHECK(nonzero_differential(p, {1, 0b0}, {3, 0b00}));
  CHECK_FALSE(nonzero_differential(p, {1, 0b0}, {3, 0b01}));
  CHECK_FALSE(nonzero_differential(p, {1, 0b0}, {3, 0b10}));
  CHECK(code_of([&] { nonzero_differential(p, {0, 0}, {3, 0}); }) == ErrorCode::NotCoverPair);
  CHECK(code_of([&] { nonzero_differential(p, {1, 0}, {0, 0}); }) == ErrorCode::NotCoverPair);
}

TEST_CASE("spectators must keep their color") {
  const auto p = torus_projection(3);
  const auto c = cube(p);
  for (const auto& e : c.edges) {
    const auto& from = c.resolutions[e.from];
    const auto& to = c.resolutions[e.to];
    for (std::uint64_t red = 0; red < (std::uint64_t{1} << from.circles); ++red) {
      int hits = 0;
      for (std::uint64_t red2 = 0; red2 < (std::uint64_t{1} << to.circles); ++red2) {
        hits += nonzero_differential(p, {e.from, red}, {e.to, red2});
      }
      // monochrome participants have exactly one partner state
      bool mono = true;
      for (int k : e.from_circles) mono = mono && ((red >> k & 1) == (red >> e.from_circles[0] & 1));
      CHECK(hits == (mono ? 1 : 0));
    }
  }
}

TEST_CASE("summands equal Lucas colorings on bundled projections") {
  const int torus[] = {6, 10, 18, 34, 66};
  for (int k = 2; k <= 6; ++k) CHECK(count_summands(torus_projection(k)) == torus[k - 2]);
  CHECK(count_summands(fixtures::medial(fixtures::triangle())) == 10);
  for (const auto& p : bundled()) {
    const auto r = verify_theorem2(p);
    CHECK(r.equal);
    CHECK(r.summands == lucas_statistic(p.map).count);
    CHECK(count_summands(make_projection(p.map.mirrored())) == r.summands);
  }
}

TEST_CASE("label swap keeps the count") {
  for (const auto& p : {torus_projection(3), fixtures::medial(fixtures::triangle())}) {
    const BigInt base = count_summands(p);
    for (Vertex v = 0; v < p.map.num_vertices(); ++v) CHECK(count_summands(swap_labels(p, v)) == base);
  }
}

TEST_CASE("components sit on intervals of degrees") {
  for (const auto& p : {torus_projection(3), torus_projection(4), fixtures::medial(fixtures::triangle())}) {
    const auto deg = summand_degrees(p);
    CHECK(deg.size() == count_summands(p));
    for (const auto& s : deg) {
      REQUIRE_FALSE(s.empty());
      CHECK(*s.rbegin() - *s.begin() + 1 == static_cast<int>(s.size()));
    }
  }
}

TEST_CASE("link components") {
  CHECK(link_components(hopf()) == 2);
  CHECK(link_components(torus_projection(3)) == 1);
  CHECK(link_components(torus_projection(4)) == 2);
  CHECK(link_components(fixtures::medial(fixtures::k4())) == 3);
  CHECK(link_components(fixtures::medial(fixtures::doubled_triangle())) == 1);
}

TEST_CASE("random medial projections") {
  std::mt19937_64 rng(31);
  int tested = 0;
  for (int i = 0; i < 60 && tested < 20; ++i) {
    const auto g = fixtures::random_min_degree2_map(rng, 2 + static_cast<int>(rng() % 3), static_cast<int>(rng() % 3));
    if (g.num_edges() > 6) continue;
    ++tested;
    const auto p = fixtures::medial(g);
    CHECK(verify_theorem2(p).equal);
  }
  CHECK(tested >= 10);
}

TEST_CASE("limits and json") {
  const auto p = torus_projection(4);
  const auto doc = serialize_projection(p);
  const auto back = parse_projection(doc);
  CHECK(back.map == p.map);
  CHECK(back.crossing_order == p.crossing_order);
  CHECK(serialize_report(verify_theorem2(hopf()))["summands"] == "6");
  CHECK(code_of([] { cube(torus_projection(17)); }) == ErrorCode::TooLarge);
}
