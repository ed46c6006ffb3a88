#pragma once

// Shared test helpers: seeded random graphs and brute-force oracles that do
// not reuse the library's search or crossing code.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "linkless/embedding.hpp"
#include "linkless/graph.hpp"

namespace testing {

using namespace linkless;

inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  GraphBuilder b(numbered_labels(n, "v"));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) b.connect(u, v);
  return std::move(b).build();
}

inline Permutation random_permutation(std::mt19937_64& rng, int n) {
  std::vector<int> map(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) map[static_cast<std::size_t>(i)] = i;
  std::shuffle(map.begin(), map.end(), rng);
  return Permutation(std::move(map));
}

// Connectivity by repeated neighbourhood expansion over plain adjacency.
inline bool naive_connected(const Graph& g, std::uint64_t set) {
  if (set == 0) return false;
  std::uint64_t seen = set & (~set + 1);
  for (;;) {
    std::uint64_t next = seen;
    for (int v = 0; v < g.order(); ++v)
      if ((seen >> v) & 1U)
        for (int w = 0; w < g.order(); ++w)
          if (((set >> w) & 1U) && g.adjacent(v, w)) next |= std::uint64_t{1} << w;
    if (next == seen) return seen == set;
    seen = next;
  }
}

// Tries every map host vertex -> {unused, pattern vertex 0..k-1}.
inline bool naive_has_minor(const Graph& pattern, const Graph& host) {
  const int k = pattern.order();
  const int n = host.order();
  if (k > n) return false;
  std::vector<int> assign(static_cast<std::size_t>(n), 0);  // 0 = unused, x+1 = pattern vertex x
  for (;;) {
    std::vector<std::uint64_t> sets(static_cast<std::size_t>(k), 0);
    for (int v = 0; v < n; ++v)
      if (assign[static_cast<std::size_t>(v)] > 0)
        sets[static_cast<std::size_t>(assign[static_cast<std::size_t>(v)] - 1)] |= std::uint64_t{1} << v;
    bool ok = true;
    for (int x = 0; x < k && ok; ++x) ok = naive_connected(host, sets[static_cast<std::size_t>(x)]);
    for (int x = 0; x < k && ok; ++x)
      for (int y = x + 1; y < k && ok; ++y) {
        if (!pattern.adjacent(x, y)) continue;
        bool joined = false;
        for (int a = 0; a < n && !joined; ++a)
          if ((sets[static_cast<std::size_t>(x)] >> a) & 1U)
            for (int b = 0; b < n && !joined; ++b)
              if (((sets[static_cast<std::size_t>(y)] >> b) & 1U) && host.adjacent(a, b)) joined = true;
        ok = joined;
      }
    if (ok) return true;
    int i = 0;
    while (i < n && ++assign[static_cast<std::size_t>(i)] > k) assign[static_cast<std::size_t>(i++)] = 0;
    if (i == n) return false;
  }
}

// Linking number of a closed polygon `loop` with a convex polygon `disk`
// lying in z = 0, counted as signed passages of `loop` through the disk.
// The disk normal follows the right-hand rule on its vertex order.
// Returns nullopt when the loop touches the disk plane at a vertex or meets
// the disk boundary, where the count is not defined.
inline std::optional<int> seifert_disk_lk(const std::vector<Point3>& disk, const std::vector<Point3>& loop) {
  long double area2 = 0;
  for (std::size_t i = 0; i < disk.size(); ++i) {
    const auto& a = disk[i];
    const auto& b = disk[(i + 1) % disk.size()];
    area2 += static_cast<long double>(a.x) * b.y - static_cast<long double>(b.x) * a.y;
  }
  const int normal = area2 > 0 ? 1 : -1;
  int total = 0;
  for (std::size_t i = 0; i < loop.size(); ++i) {
    const auto& p = loop[i];
    const auto& q = loop[(i + 1) % loop.size()];
    if (p.z == 0 || q.z == 0) return std::nullopt;
    if ((p.z > 0) == (q.z > 0)) continue;
    // Crossing point scaled by dz = q.z - p.z: X = p.x*dz + (q.x - p.x)*(-p.z).
    const std::int64_t dz = q.z - p.z;
    const std::int64_t sx = p.x * dz - (q.x - p.x) * p.z;
    const std::int64_t sy = p.y * dz - (q.y - p.y) * p.z;
    const int s = dz > 0 ? 1 : -1;
    int side = 0;
    bool boundary = false;
    for (std::size_t j = 0; j < disk.size(); ++j) {
      const auto& a = disk[j];
      const auto& b = disk[(j + 1) % disk.size()];
      // orient(a, b, X) * dz, computed exactly in scaled coordinates.
      const __int128 o = static_cast<__int128>(b.x - a.x) * (sy - a.y * dz) -
                         static_cast<__int128>(b.y - a.y) * (sx - a.x * dz);
      const int sign = (o > 0) - (o < 0);
      if (sign == 0) boundary = true;
      const int oriented = sign * s * normal;
      if (oriented < 0) side = -1;
    }
    if (side < 0) continue;
    if (boundary) return std::nullopt;
    total += (q.z > p.z ? 1 : -1) * normal;
  }
  return total;
}

}  // namespace testing
