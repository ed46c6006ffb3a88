#include "linkless/embedding.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>

#include "linkless/parallel.hpp"

namespace linkless {

namespace {

__extension__ typedef __int128 Wide;

Vec3 operator-(const Point3& a, const Point3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }

// |components| < 2^21 in, < 2^43 out.
Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

Wide dot(const Vec3& a, const Vec3& b) {
  return Wide{a.x} * b.x + Wide{a.y} * b.y + Wide{a.z} * b.z;
}

int sign(Wide v) { return (v > 0) - (v < 0); }

bool is_zero(const Vec3& v) { return v.x == 0 && v.y == 0 && v.z == 0; }

// Orientation of r relative to the directed line p->q, seen along `d`.
int projected_orient(const Point3& p, const Point3& q, const Point3& r, const Vec3& d) {
  return sign(dot(cross(q - p, r - p), d));
}

bool on_segment(const Point3& p, const Point3& a, const Point3& b) {
  const Vec3 ab = b - a;
  const Vec3 ap = p - a;
  if (!is_zero(cross(ab, ap))) return false;
  const Wide t = dot(ap, ab);
  return t >= 0 && t <= dot(ab, ab);
}

struct Point2 {
  std::int64_t x;
  std::int64_t y;
};

int orient2(const Point2& a, const Point2& b, const Point2& c) {
  return sign(Wide{b.x - a.x} * (c.y - a.y) - Wide{b.y - a.y} * (c.x - a.x));
}

bool on_segment2(const Point2& p, const Point2& a, const Point2& b) {
  return orient2(a, b, p) == 0 && std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

bool segments_meet2(const Point2& a, const Point2& b, const Point2& c, const Point2& d) {
  const int o1 = orient2(a, b, c);
  const int o2 = orient2(a, b, d);
  const int o3 = orient2(c, d, a);
  const int o4 = orient2(c, d, b);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  return on_segment2(c, a, b) || on_segment2(d, a, b) || on_segment2(a, c, d) || on_segment2(b, c, d);
}

// Closed segments ab and cd in space.
bool segments_meet(const Point3& a, const Point3& b, const Point3& c, const Point3& d) {
  const Vec3 ab = b - a;
  if (dot(cross(ab, c - a), d - a) != 0) return false;
  Vec3 normal = cross(ab, c - a);
  if (is_zero(normal)) normal = cross(ab, d - a);
  if (is_zero(normal)) {
    // All four points collinear: compare along the dominant axis of ab.
    auto key = [&](const Point3& p) {
      const std::int64_t ax = std::abs(ab.x), ay = std::abs(ab.y), az = std::abs(ab.z);
      return ax >= ay && ax >= az ? p.x : (ay >= az ? p.y : p.z);
    };
    const auto lo1 = std::min(key(a), key(b)), hi1 = std::max(key(a), key(b));
    const auto lo2 = std::min(key(c), key(d)), hi2 = std::max(key(c), key(d));
    return lo1 <= hi2 && lo2 <= hi1;
  }
  // Coplanar: drop the axis along which the normal is largest.
  const std::int64_t nx = std::abs(normal.x), ny = std::abs(normal.y), nz = std::abs(normal.z);
  auto flat = [&](const Point3& p) -> Point2 {
    if (nx >= ny && nx >= nz) return {p.y, p.z};
    if (ny >= nz) return {p.x, p.z};
    return {p.x, p.y};
  };
  return segments_meet2(flat(a), flat(b), flat(c), flat(d));
}

std::string point_text(const Point3& p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + "," + std::to_string(p.z) + ")";
}

void check_shape(const Graph& g, const Embedding3& e) {
  if (static_cast<int>(e.coords.size()) != g.order())
    throw EmbeddingError("embedding has " + std::to_string(e.coords.size()) + " coordinates for " +
                         std::to_string(g.order()) + " vertices");
  for (const auto& p : e.coords)
    if (std::abs(p.x) >= kMaxCoordinate || std::abs(p.y) >= kMaxCoordinate || std::abs(p.z) >= kMaxCoordinate)
      throw EmbeddingError("coordinate " + point_text(p) + " out of range");
}

}  // namespace

std::optional<std::string> embedding_defect(const Graph& g, const Embedding3& e) {
  check_shape(g, e);
  const auto& at = e.coords;
  auto pos = [&](int v) -> const Point3& { return at[static_cast<std::size_t>(v)]; };
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (pos(u) == pos(v)) return "vertices " + g.label(u) + " and " + g.label(v) + " coincide";

  const auto edges = g.edges();
  for (auto [u, v] : edges)
    for (int w = 0; w < g.order(); ++w)
      if (w != u && w != v && on_segment(pos(w), pos(u), pos(v)))
        return "vertex " + g.label(w) + " lies on edge " + g.label(u) + "-" + g.label(v);

  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      auto [a, b] = edges[i];
      auto [c, d] = edges[j];
      if (a == c || a == d || b == c || b == d) continue;
      if (segments_meet(pos(a), pos(b), pos(c), pos(d)))
        return "edges " + g.label(a) + "-" + g.label(b) + " and " + g.label(c) + "-" + g.label(d) + " intersect";
    }
  return std::nullopt;
}

bool validate_embedding(const Graph& g, const Embedding3& e) { return !embedding_defect(g, e); }

Embedding3 canonical_embedding_g() {
  // Index order A B C D A' B' C' D' P Q R S T. The plane part is mirror
  // symmetric about x = 0, matching the A..D <-> A'..D' automorphism.
  return Embedding3{{
      {-6, 10, 0},   // A
      {-3, 4, 0},    // B
      {-2, -1, 0},   // C
      {-6, -10, 0},  // D
      {6, 10, 0},    // A'
      {3, 4, 0},     // B'
      {2, -1, 0},    // C'
      {6, -10, 0},   // D'
      {1, 2, 7},     // P
      {0, 6, 0},     // Q
      {0, 0, 0},     // R
      {0, -6, 0},    // S
      {-1, -3, -7},  // T
  }};
}

Cycle make_cycle(std::span<const int> vertices) {
  if (vertices.size() < 3) throw GraphError("a cycle needs at least 3 vertices");
  const auto n = vertices.size();
  const auto start = static_cast<std::size_t>(std::min_element(vertices.begin(), vertices.end()) - vertices.begin());
  const int next = vertices[(start + 1) % n];
  const int prev = vertices[(start + n - 1) % n];
  Cycle c;
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t i = next < prev ? (start + k) % n : (start + n - k) % n;
    c.vertices.push_back(vertices[i]);
    if ((c.mask >> vertices[i]) & 1U) throw GraphError("cycle repeats a vertex");
    c.mask |= bit(vertices[i]);
  }
  return c;
}

namespace {

void extend_cycles(const Graph& g, int start, std::vector<int>& path, Bits on_path, std::vector<Cycle>& out) {
  const int tail = path.back();
  for (Bits nb = g.neighbors(tail); nb != 0; nb &= nb - 1) {
    const int w = std::countr_zero(nb);
    if (w == start) {
      // Each cycle is seen in both directions; keep the one whose second
      // vertex is smaller than its last.
      if (path.size() >= 3 && path[1] < path.back()) {
        Cycle c;
        c.vertices = path;
        c.mask = on_path;
        out.push_back(std::move(c));
      }
      continue;
    }
    if (w < start || ((on_path >> w) & 1U)) continue;
    path.push_back(w);
    extend_cycles(g, start, path, on_path | bit(w), out);
    path.pop_back();
  }
}

}  // namespace

std::vector<Cycle> enumerate_cycles(const Graph& g) {
  std::vector<Cycle> out;
  std::vector<int> path;
  for (int s = 0; s < g.order(); ++s) {
    path.assign(1, s);
    extend_cycles(g, s, path, bit(s), out);
  }
  std::sort(out.begin(), out.end(), [](const Cycle& a, const Cycle& b) { return a.vertices < b.vertices; });
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> disjoint_pairs(std::span<const Cycle> cycles) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < cycles.size(); ++i)
    for (std::size_t j = i + 1; j < cycles.size(); ++j)
      if ((cycles[i].mask & cycles[j].mask) == 0) out.emplace_back(i, j);
  return out;
}

const std::vector<Vec3>& candidate_directions() {
  static const std::vector<Vec3> dirs = [] {
    std::vector<Vec3> out{{1, 2, 3}, {3, -1, 2}, {-2, 3, 5}};
    std::mt19937_64 rng(0x6c696e6b);  // fixed seed
    while (out.size() < 64) {
      auto draw = [&] { return static_cast<std::int64_t>(rng() % 41) - 20; };
      Vec3 d{draw(), draw(), draw()};
      if (!is_zero(d)) out.push_back(d);
    }
    return out;
  }();
  return dirs;
}

namespace {

struct SegmentCrossing {
  bool generic = true;
  bool crosses = false;
  bool first_over = false;
  int sign = 0;  // crossing sign: over-direction x under-direction, along d
};

// Whether r, already known to project onto the line through p->q, projects
// onto the closed segment pq.
bool projects_onto(const Point3& p, const Point3& q, const Point3& r, const Vec3& d) {
  const Vec3 base = cross(q - p, d);
  const Wide s = dot(cross(r - p, d), base);
  return s >= 0 && s <= dot(base, base);
}

// Projected crossing of a0->a1 with b0->b1 along d. The direction is
// degenerate for the pair when a segment is parallel to d or an endpoint
// projects onto the other segment.
SegmentCrossing cross_segments(const Point3& a0, const Point3& a1, const Point3& b0, const Point3& b1, const Vec3& d) {
  SegmentCrossing out;
  if (is_zero(cross(a1 - a0, d)) || is_zero(cross(b1 - b0, d))) {
    out.generic = false;
    return out;
  }
  const int o1 = projected_orient(a0, a1, b0, d);
  const int o2 = projected_orient(a0, a1, b1, d);
  const int o3 = projected_orient(b0, b1, a0, d);
  const int o4 = projected_orient(b0, b1, a1, d);
  if ((o1 == 0 && projects_onto(a0, a1, b0, d)) || (o2 == 0 && projects_onto(a0, a1, b1, d)) ||
      (o3 == 0 && projects_onto(b0, b1, a0, d)) || (o4 == 0 && projects_onto(b0, b1, a1, d))) {
    out.generic = false;
    return out;
  }
  if (o1 == 0 || o2 == 0 || o3 == 0 || o4 == 0) return out;
  if (o1 == o2 || o3 == o4) return out;
  const Vec3 u = a1 - a0;
  const Vec3 v = b1 - b0;
  const Vec3 w = cross(u, v);
  const int height = sign(dot(b0 - a0, w));
  if (height == 0) throw EmbeddingError("segments meet in space");
  const int facing = sign(dot(d, w));
  // (point on b) - (point on a) = t d with sign(t) = height * facing.
  out.crosses = true;
  out.first_over = height * facing < 0;
  out.sign = out.first_over ? facing : -facing;
  return out;
}

void require_disjoint(const Cycle& c1, const Cycle& c2) {
  if ((c1.mask & c2.mask) != 0) throw EmbeddingError("cycles share a vertex");
}

}  // namespace

namespace {

std::optional<CrossingCount> try_crossings(const Embedding3& e, const Cycle& c1, const Cycle& c2, const Vec3& d) {
  require_disjoint(c1, c2);
  if (is_zero(d)) throw EmbeddingError("projection direction is zero");
  auto pos = [&](int v) -> const Point3& { return e.coords.at(static_cast<std::size_t>(v)); };
  CrossingCount count;
  const auto n1 = c1.vertices.size();
  const auto n2 = c2.vertices.size();
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = 0; j < n2; ++j) {
      const auto x = cross_segments(pos(c1.vertices[i]), pos(c1.vertices[(i + 1) % n1]), pos(c2.vertices[j]),
                                    pos(c2.vertices[(j + 1) % n2]), d);
      if (!x.generic) return std::nullopt;
      if (!x.crosses) continue;
      if (x.first_over) {
        count.over += x.sign;
        ++count.unsigned_over;
      } else {
        count.under += x.sign;
      }
    }
  return count;
}

}  // namespace

CrossingCount crossings(const Embedding3& e, const Cycle& c1, const Cycle& c2, const Vec3& direction) {
  if (auto count = try_crossings(e, c1, c2, direction)) return *count;
  throw EmbeddingError("projection direction is not generic for this cycle pair");
}

int linking_number(const Embedding3& e, const Cycle& c1, const Cycle& c2, const Vec3& direction) {
  return crossings(e, c1, c2, direction).over;
}

int linking_number(const Embedding3& e, const Cycle& c1, const Cycle& c2) {
  for (const auto& d : candidate_directions())
    if (auto count = try_crossings(e, c1, c2, d)) return count->over;
  throw EmbeddingError("no generic projection direction among the candidates");
}

Vec3 generic_direction(const Graph& g, const Embedding3& e) {
  check_shape(g, e);
  const auto edges = g.edges();
  auto pos = [&](int v) -> const Point3& { return e.coords[static_cast<std::size_t>(v)]; };
  for (const auto& d : candidate_directions()) {
    bool ok = true;
    for (std::size_t i = 0; i < edges.size() && ok; ++i)
      for (std::size_t j = i + 1; j < edges.size() && ok; ++j) {
        auto [a, b] = edges[i];
        auto [c, w] = edges[j];
        if (a == c || a == w || b == c || b == w) continue;
        ok = cross_segments(pos(a), pos(b), pos(c), pos(w), d).generic;
      }
    if (ok) return d;
  }
  throw EmbeddingError("no generic projection direction among the candidates");
}

LinklessReport linkless_report(const Graph& g, const Embedding3& e, int jobs) {
  if (auto defect = embedding_defect(g, e)) throw EmbeddingError("invalid embedding: " + *defect);
  LinklessReport report;
  report.direction = generic_direction(g, e);

  // over[a][b]: signed crossing of edge a over edge b, both oriented from
  // lower to higher index.
  const auto edges = g.edges();
  const auto m = edges.size();
  std::vector<int> edge_id(static_cast<std::size_t>(g.order() * g.order()), -1);
  for (std::size_t i = 0; i < m; ++i) {
    auto [u, v] = edges[i];
    edge_id[static_cast<std::size_t>(u * g.order() + v)] = static_cast<int>(i);
    edge_id[static_cast<std::size_t>(v * g.order() + u)] = static_cast<int>(i);
  }
  std::vector<int> over(m * m, 0);
  auto pos = [&](int v) -> const Point3& { return e.coords[static_cast<std::size_t>(v)]; };
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      auto [a, b] = edges[i];
      auto [c, d] = edges[j];
      if (a == c || a == d || b == c || b == d) continue;
      const auto x = cross_segments(pos(a), pos(b), pos(c), pos(d), report.direction);
      if (x.crosses && x.first_over) over[i * m + j] = x.sign;
    }

  const auto cycles = enumerate_cycles(g);
  report.cycle_count = cycles.size();

  // Per cycle: signed edge list, and its row of over-crossing weights.
  std::vector<std::vector<std::pair<int, int>>> signed_edges(cycles.size());
  std::vector<std::vector<int>> weights(cycles.size(), std::vector<int>(m, 0));
  for (std::size_t c = 0; c < cycles.size(); ++c) {
    const auto& vs = cycles[c].vertices;
    for (std::size_t k = 0; k < vs.size(); ++k) {
      const int u = vs[k];
      const int v = vs[(k + 1) % vs.size()];
      const int id = edge_id[static_cast<std::size_t>(u * g.order() + v)];
      const int s = u < v ? 1 : -1;
      signed_edges[c].emplace_back(id, s);
      for (std::size_t f = 0; f < m; ++f) weights[c][f] += s * over[static_cast<std::size_t>(id) * m + f];
    }
  }

  struct Partial {
    std::size_t pairs = 0;
    std::map<int, std::size_t> histogram;
    std::optional<std::pair<std::size_t, std::size_t>> first;
    int first_lk = 0;
  };
  std::vector<Partial> partials(cycles.size());
  parallel_for(cycles.size(), jobs, [&](std::size_t i) {
    Partial& part = partials[i];
    for (std::size_t j = i + 1; j < cycles.size(); ++j) {
      if ((cycles[i].mask & cycles[j].mask) != 0) continue;
      int lk = 0;
      for (auto [id, s] : signed_edges[j]) lk += s * weights[i][static_cast<std::size_t>(id)];
      ++part.pairs;
      ++part.histogram[std::abs(lk)];
      if (lk != 0 && !part.first) {
        part.first = std::pair{i, j};
        part.first_lk = lk;
      }
    }
  });

  for (const auto& part : partials) {
    report.pair_count += part.pairs;
    for (auto [k, n] : part.histogram) report.histogram[k] += n;
    if (part.first && !report.first_linked) {
      report.first_linked = std::pair{cycles[part.first->first], cycles[part.first->second]};
      report.first_linked_lk = part.first_lk;
    }
  }
  report.max_abs_lk = report.histogram.empty() ? 0 : report.histogram.rbegin()->first;
  return report;
}

int conway_gordon_parity(const Graph& g, const Embedding3& e) {
  if (g.order() != 6 || g.size() != 15) throw GraphError("Conway-Gordon parity needs K6");
  if (auto defect = embedding_defect(g, e)) throw EmbeddingError("invalid embedding: " + *defect);
  const Vec3 d = generic_direction(g, e);
  int total = 0;
  // Triangles through vertex 0 pair off with their complements.
  for (int a = 1; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b) {
      std::vector<int> first{0, a, b};
      std::vector<int> second;
      for (int v = 1; v < 6; ++v)
        if (v != a && v != b) second.push_back(v);
      total += linking_number(e, make_cycle(first), make_cycle(second), d);
    }
  return ((total % 2) + 2) % 2;
}

}  // namespace linkless
