#include <doctest.h>

#include "linkless/constructions.hpp"
#include "linkless/embedding.hpp"
#include "support.hpp"

using namespace linkless;

namespace {

Embedding3 points(std::initializer_list<Point3> list) { return Embedding3{std::vector<Point3>(list)}; }

Cycle cycle_of(std::initializer_list<int> vs) {
  std::vector<int> v(vs);
  return make_cycle(v);
}

Cycle reversed(const Cycle& c) {
  Cycle r = c;
  std::reverse(r.vertices.begin(), r.vertices.end());
  return r;
}

// Graph with two disjoint triangles on 0-1-2 and 3-4-5.
Graph two_triangles() {
  return Graph::from_index_edges(numbered_labels(6, "v"),
                                 std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
}

Embedding3 hopf() {
  return points({{2, 0, 0}, {-2, 2, 0}, {-2, -2, 0}, {0, 0, 2}, {0, 4, -2}, {0, 0, -2}});
}

// Count of simple cycles by Hamiltonian-path DP over vertex subsets; each
// cycle is rooted at its least vertex and counted once per direction.
std::uint64_t dp_cycle_count(const Graph& g) {
  const int n = g.order();
  std::uint64_t twice = 0;
  for (int s = 0; s < n; ++s) {
    const int m = n - s - 1;  // vertices above s
    std::vector<std::vector<std::uint64_t>> dp(std::size_t{1} << m, std::vector<std::uint64_t>(static_cast<std::size_t>(m), 0));
    for (int v = 0; v < m; ++v)
      if (g.adjacent(s, s + 1 + v)) dp[std::size_t{1} << v][static_cast<std::size_t>(v)] = 1;
    for (std::size_t mask = 1; mask < dp.size(); ++mask)
      for (int v = 0; v < m; ++v) {
        const auto ways = dp[mask][static_cast<std::size_t>(v)];
        if (ways == 0) continue;
        if (std::popcount(mask) >= 2 && g.adjacent(s + 1 + v, s)) twice += ways;
        for (int w = 0; w < m; ++w)
          if (!((mask >> w) & 1U) && g.adjacent(s + 1 + v, s + 1 + w))
            dp[mask | (std::size_t{1} << w)][static_cast<std::size_t>(w)] += ways;
      }
  }
  return twice / 2;
}

// Straight 2D segment test with plain int64 orientations.
int orient(std::int64_t ax, std::int64_t ay, std::int64_t bx, std::int64_t by, std::int64_t cx, std::int64_t cy) {
  const auto v = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax);
  return (v > 0) - (v < 0);
}

bool plane_segments_touch(const Point3& a, const Point3& b, const Point3& c, const Point3& d) {
  const int o1 = orient(a.x, a.y, b.x, b.y, c.x, c.y), o2 = orient(a.x, a.y, b.x, b.y, d.x, d.y);
  const int o3 = orient(c.x, c.y, d.x, d.y, a.x, a.y), o4 = orient(c.x, c.y, d.x, d.y, b.x, b.y);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  auto within = [](const Point3& p, const Point3& q, const Point3& r) {
    return std::min(p.x, q.x) <= r.x && r.x <= std::max(p.x, q.x) && std::min(p.y, q.y) <= r.y &&
           r.y <= std::max(p.y, q.y);
  };
  return (o1 == 0 && within(a, b, c)) || (o2 == 0 && within(a, b, d)) || (o3 == 0 && within(c, d, a)) ||
         (o4 == 0 && within(c, d, b));
}

std::vector<Vec3> generic_for(const Embedding3& e, const Cycle& a, const Cycle& b, std::size_t want) {
  std::vector<Vec3> out;
  for (const auto& d : candidate_directions()) {
    try {
      (void)crossings(e, a, b, d);
      out.push_back(d);
    } catch (const EmbeddingError&) {
    }
    if (out.size() == want) break;
  }
  return out;
}

Embedding3 random_points(std::mt19937_64& rng, int n, int range) {
  std::uniform_int_distribution<int> coord(-range, range);
  Embedding3 e;
  for (int i = 0; i < n; ++i) e.coords.push_back({coord(rng), coord(rng), coord(rng)});
  return e;
}

}  // namespace

TEST_CASE("validate_embedding fixtures") {
  const auto k3 = complete_graph(3);
  CHECK(validate_embedding(k3, points({{0, 0, 0}, {4, 0, 0}, {0, 4, 0}})));
  CHECK_FALSE(validate_embedding(k3, points({{0, 0, 0}, {4, 0, 0}, {0, 0, 0}})));
  CHECK_FALSE(validate_embedding(k3, points({{0, 0, 0}, {4, 0, 0}, {2, 0, 0}})));

  // Two disjoint edges crossing at (1, 1, 0).
  const auto two = Graph::from_index_edges(numbered_labels(4, "v"), std::vector<Edge>{{0, 1}, {2, 3}});
  CHECK_FALSE(validate_embedding(two, points({{0, 0, 0}, {2, 2, 0}, {0, 2, 0}, {2, 0, 0}})));
  CHECK(validate_embedding(two, points({{0, 0, 0}, {2, 2, 0}, {0, 2, 1}, {2, 0, 1}})));
  // Overlapping collinear edges.
  CHECK_FALSE(validate_embedding(two, points({{0, 0, 0}, {4, 0, 0}, {2, 0, 0}, {6, 0, 0}})));
  // Vertex lying on a non-incident edge.
  CHECK_FALSE(validate_embedding(two, points({{0, 0, 0}, {4, 4, 4}, {2, 2, 2}, {9, 0, 1}})));

  CHECK_THROWS_AS(validate_embedding(two, points({{0, 0, 0}})), EmbeddingError);
  CHECK_THROWS_AS(validate_embedding(k3, points({{0, 0, 0}, {kMaxCoordinate, 0, 0}, {0, 1, 0}})), EmbeddingError);
}

TEST_CASE("canonical embedding of G") {
  const auto g = build_g();
  const auto e = canonical_embedding_g();
  REQUIRE(e.coords.size() == 13);
  CHECK(validate_embedding(g, e));
  CHECK(e.coords[static_cast<std::size_t>(g.index("P"))].z > 0);
  CHECK(e.coords[static_cast<std::size_t>(g.index("T"))].z < 0);
  for (int v = 0; v < 13; ++v)
    if (g.label(v) != "P" && g.label(v) != "T") CHECK(e.coords[static_cast<std::size_t>(v)].z == 0);

  // Plane drawing crossing-free by a direct 2D check over all disjoint edge pairs.
  const auto edges = g.edges();
  const Bits off_plane = bit(g.index("P")) | bit(g.index("T"));
  int plane_pairs = 0;
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      auto [a, b] = edges[i];
      auto [c, d] = edges[j];
      if ((bit(a) | bit(b) | bit(c) | bit(d)) & off_plane) continue;
      if (a == c || a == d || b == c || b == d) continue;
      ++plane_pairs;
      CHECK_FALSE(plane_segments_touch(e.coords[static_cast<std::size_t>(a)], e.coords[static_cast<std::size_t>(b)],
                                       e.coords[static_cast<std::size_t>(c)], e.coords[static_cast<std::size_t>(d)]));
    }
  CHECK(plane_pairs > 0);
  const auto plane = induced_subgraph(g, VertexSet(g.vertices().bits() & ~off_plane));
  Embedding3 flat;
  for (int v = 0; v < 13; ++v)
    if (!((off_plane >> v) & 1U)) flat.coords.push_back(e.coords[static_cast<std::size_t>(v)]);
  CHECK(validate_embedding(plane, flat));
}

TEST_CASE("injected crossings are rejected") {
  std::mt19937_64 rng(41);
  int injected = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const auto g = testing::random_graph(rng, 7, 0.5);
    auto e = random_points(rng, 7, 40);
    for (auto& p : e.coords) p = {2 * p.x, 2 * p.y, 2 * p.z};
    if (!validate_embedding(g, e)) continue;
    std::vector<std::pair<Edge, Edge>> candidates;
    for (auto e1 : g.edges())
      for (auto e2 : g.edges())
        if (e1 < e2 && e1.first != e2.first && e1.first != e2.second && e1.second != e2.first &&
            e1.second != e2.second)
          candidates.push_back({e1, e2});
    if (candidates.empty()) continue;
    auto [e1, e2] = candidates[rng() % candidates.size()];
    const auto& a = e.coords[static_cast<std::size_t>(e1.first)];
    const auto& b = e.coords[static_cast<std::size_t>(e1.second)];
    const Point3 mid{(a.x + b.x) / 2, (a.y + b.y) / 2, (a.z + b.z) / 2};
    const auto& c = e.coords[static_cast<std::size_t>(e2.first)];
    // Reflect c through the midpoint of ab so that segment c d passes through it.
    e.coords[static_cast<std::size_t>(e2.second)] = {2 * mid.x - c.x, 2 * mid.y - c.y, 2 * mid.z - c.z};
    CHECK_FALSE(validate_embedding(g, e));
    ++injected;
  }
  CHECK(injected >= 100);
}

TEST_CASE("cycle enumeration") {
  CHECK(enumerate_cycles(complete_graph(3)).size() == 1);
  CHECK(enumerate_cycles(complete_graph(4)).size() == 7);
  CHECK(enumerate_cycles(path_graph(6)).empty());
  const auto g = build_g();
  const auto cycles = enumerate_cycles(g);
  CHECK(cycles.size() == 14252);
  CHECK(dp_cycle_count(g) == 14252);

  std::set<std::vector<int>> seen;
  for (const auto& c : cycles) {
    REQUIRE(c.vertices.size() >= 3);
    CHECK(seen.insert(c.vertices).second);
    CHECK(c.vertices.front() == *std::min_element(c.vertices.begin(), c.vertices.end()));
    CHECK(c.vertices[1] < c.vertices.back());
    Bits mask = 0;
    for (std::size_t i = 0; i < c.vertices.size(); ++i) {
      mask |= bit(c.vertices[i]);
      CHECK(g.adjacent(c.vertices[i], c.vertices[(i + 1) % c.vertices.size()]));
    }
    CHECK(mask == c.mask);
    CHECK(std::popcount(mask) == static_cast<int>(c.vertices.size()));
  }

  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 60; ++trial) {
    const auto h = testing::random_graph(rng, 4 + trial % 6, 0.5);
    CHECK(enumerate_cycles(h).size() == dp_cycle_count(h));
  }
  CHECK_THROWS_AS(cycle_of({0, 1}), GraphError);
  CHECK(cycle_of({3, 1, 2}).vertices == std::vector<int>{1, 2, 3});
  CHECK(cycle_of({1, 3, 2}).vertices == std::vector<int>{1, 2, 3});
}

TEST_CASE("disjoint cycle pairs") {
  const auto k6 = complete_graph(6);
  std::vector<Cycle> tris;
  for (const auto& t : triangles(k6)) tris.push_back(cycle_of({t[0], t[1], t[2]}));
  CHECK(disjoint_pairs(tris).size() == 10);
  const auto k4 = enumerate_cycles(complete_graph(4));
  CHECK(disjoint_pairs(k4).empty());
  for (auto [i, j] : disjoint_pairs(tris)) CHECK((tris[i].mask & tris[j].mask) == 0);
}

TEST_CASE("linking number fixtures") {
  const auto c1 = cycle_of({0, 1, 2});
  const auto c2 = cycle_of({3, 4, 5});
  const auto far = points({{0, 0, 0}, {4, 0, 0}, {0, 4, 0}, {10, 0, 0}, {14, 0, 0}, {10, 4, 0}});
  CHECK(linking_number(far, c1, c2) == 0);

  const auto e = hopf();
  REQUIRE(validate_embedding(two_triangles(), e));
  const int lk = linking_number(e, c1, c2);
  CHECK(std::abs(lk) == 1);
  const auto oracle = testing::seifert_disk_lk({e.coords[0], e.coords[1], e.coords[2]},
                                               {e.coords[3], e.coords[4], e.coords[5]});
  REQUIRE(oracle);
  CHECK(lk == *oracle);
  CHECK(linking_number(e, c2, c1) == lk);
  CHECK(linking_number(e, reversed(c1), c2) == -lk);
  CHECK(linking_number(e, c1, reversed(c2)) == -lk);

  const auto dirs = generic_for(e, c1, c2, 5);
  REQUIRE(dirs.size() >= 3);
  for (const auto& d : dirs) {
    const auto count = crossings(e, c1, c2, d);
    CHECK(count.over == lk);
    CHECK(count.under == lk);
    CHECK(((count.unsigned_over - lk) % 2 + 2) % 2 == 0);
  }

  CHECK_THROWS_AS(linking_number(e, c1, cycle_of({2, 3, 4})), EmbeddingError);
  CHECK_THROWS_AS(linking_number(e, c1, c2, Vec3{0, 0, 0}), EmbeddingError);
  // The vertical segment of the second triangle is parallel to (0, 0, 1).
  CHECK_THROWS_AS(linking_number(e, c1, c2, Vec3{0, 0, 1}), EmbeddingError);
}

TEST_CASE("linking number matches a Seifert disk count") {
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<int> coord(-30, 30);
  std::uniform_int_distribution<int> side(4, 25);
  int compared = 0, linked = 0;
  for (int trial = 0; trial < 600; ++trial) {
    // Convex quadrilateral disk in z = 0, random order around its centre.
    const int w = side(rng), h = side(rng);
    std::vector<Point3> disk{{-w, -h, 0}, {w, -h, 0}, {w, h, 0}, {-w, h, 0}};
    if (rng() % 2) std::reverse(disk.begin(), disk.end());
    const int len = 3 + static_cast<int>(rng() % 4);
    std::vector<Point3> loop;
    for (int i = 0; i < len; ++i) {
      int z = coord(rng);
      if (z == 0) z = 1;
      loop.push_back({coord(rng), coord(rng), z});
    }
    const auto expected = testing::seifert_disk_lk(disk, loop);
    if (!expected) continue;
    Embedding3 e;
    for (const auto& p : disk) e.coords.push_back(p);
    for (const auto& p : loop) e.coords.push_back(p);
    std::vector<int> a{0, 1, 2, 3}, b;
    for (int i = 0; i < len; ++i) b.push_back(4 + i);
    // Cycles in the drawn vertex order, without canonical rotation.
    Cycle c1{a, low_bits(4)};
    Cycle c2{b, low_bits(4 + len) & ~low_bits(4)};
    int got = 0;
    try {
      got = linking_number(e, c1, c2);
    } catch (const EmbeddingError&) {
      continue;  // loop passes through the disk boundary or meets itself degenerately
    }
    CHECK(got == *expected);
    for (const auto& d : generic_for(e, c1, c2, 3)) CHECK(crossings(e, c1, c2, d).over == got);
    ++compared;
    linked += got != 0;
  }
  CHECK(compared >= 300);
  CHECK(linked >= 30);
}

TEST_CASE("G embedding is linkless on every disjoint cycle pair") {
  const auto g = build_g();
  const auto e = canonical_embedding_g();
  const auto report = linkless_report(g, e, 1);
  CHECK(report.cycle_count == 14252);
  CHECK(report.pair_count == 7700);
  CHECK(report.max_abs_lk == 0);
  CHECK_FALSE(report.first_linked.has_value());
  CHECK(report.histogram.size() == 1);

  const auto threaded = linkless_report(g, e, 3);
  CHECK(threaded.pair_count == report.pair_count);
  CHECK(threaded.histogram == report.histogram);

  // Direction invariance and crossing parity on every pair.
  const auto cycles = enumerate_cycles(g);
  const std::vector<Vec3> dirs(candidate_directions().begin(), candidate_directions().begin() + 6);
  std::size_t checked = 0;
  int nonzero_crossing_pairs = 0;
  for (auto [i, j] : disjoint_pairs(cycles)) {
    int agreed = 0;
    for (const auto& d : dirs) {
      CrossingCount c;
      try {
        c = crossings(e, cycles[i], cycles[j], d);
      } catch (const EmbeddingError&) {
        continue;
      }
      CHECK(c.over == 0);
      CHECK(c.under == 0);
      CHECK(c.unsigned_over % 2 == 0);
      nonzero_crossing_pairs += c.unsigned_over > 0;
      ++agreed;
    }
    CHECK(agreed >= 3);
    ++checked;
  }
  CHECK(checked == 7700);
  CHECK(nonzero_crossing_pairs > 0);
}

TEST_CASE("K6 embeddings carry an odd linked pair") {
  const auto k6 = complete_graph(6);
  std::mt19937_64 rng(44);
  int embeddings = 0;
  while (embeddings < 8) {
    const auto e = random_points(rng, 6, 50);
    if (!validate_embedding(k6, e)) continue;
    CHECK(conway_gordon_parity(k6, e) == 1);
    const auto report = linkless_report(k6, e, 1);
    CHECK(report.cycle_count == 197);
    std::size_t odd = 0;
    for (auto [k, n] : report.histogram)
      if (k % 2 == 1) odd += n;
    CHECK(odd % 2 == 1);
    CHECK(report.max_abs_lk >= 1);
    ++embeddings;
  }

  auto collinear = points({{0, 0, 0}, {1, 1, 1}, {2, 2, 2}, {5, 0, 1}, {0, 7, 3}, {3, -4, 9}});
  CHECK_THROWS_AS(conway_gordon_parity(k6, collinear), EmbeddingError);
  CHECK_THROWS_AS(conway_gordon_parity(complete_graph(5), random_points(rng, 5, 50)), GraphError);
}

TEST_CASE("K4 has no disjoint cycle pairs") {
  const auto k4 = complete_graph(4);
  const auto report = linkless_report(k4, points({{0, 0, 0}, {5, 0, 0}, {0, 5, 0}, {1, 1, 5}}), 1);
  CHECK(report.cycle_count == 7);
  CHECK(report.pair_count == 0);
  CHECK(report.max_abs_lk == 0);
}
