#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "linkless/graph.hpp"

namespace linkless {

struct Point3 {
  std::int64_t x = 0;
  std::int64_t y = 0;
  std::int64_t z = 0;

  bool operator==(const Point3&) const = default;
  auto operator<=>(const Point3&) const = default;
};

using Vec3 = Point3;

/// Straight-line embedding: coords[v] is the position of vertex v.
/// Coordinates are kept below 2^20 in magnitude so every predicate fits in
/// 128-bit intermediates.
struct Embedding3 {
  std::vector<Point3> coords;
};

class EmbeddingError : public GraphError {
public:
  using GraphError::GraphError;
};

inline constexpr std::int64_t kMaxCoordinate = std::int64_t{1} << 20;

/// First general-position violation, or nullopt when the embedding is valid:
/// distinct points, no vertex on a non-incident edge, no two disjoint edges
/// meeting. Exact integer predicates only. Throws EmbeddingError when the
/// coordinate count does not match the graph or a coordinate is out of range.
std::optional<std::string> embedding_defect(const Graph& g, const Embedding3& e);
bool validate_embedding(const Graph& g, const Embedding3& e);

/// Coordinates for build_g(): everything except P and T on z = 0, P above,
/// T below.
Embedding3 canonical_embedding_g();

/// Simple cycle in canonical form: least vertex first, and its smaller
/// neighbour on the cycle second.
struct Cycle {
  std::vector<int> vertices;
  Bits mask = 0;

  bool operator==(const Cycle&) const = default;
};

Cycle make_cycle(std::span<const int> vertices);

/// Every simple cycle of g exactly once, sorted by vertex sequence.
std::vector<Cycle> enumerate_cycles(const Graph& g);

/// Index pairs (i, j), i < j, of vertex-disjoint cycles.
std::vector<std::pair<std::size_t, std::size_t>> disjoint_pairs(std::span<const Cycle> cycles);

/// Fixed pseudo-random sequence of small integer projection directions.
const std::vector<Vec3>& candidate_directions();

/// Linking number of two vertex-disjoint polygonal cycles, read off the
/// projection along `direction` as the signed count of crossings where c1
/// passes over c2. Throws EmbeddingError when the direction is not generic for
/// the pair or the cycles share a vertex.
int linking_number(const Embedding3& e, const Cycle& c1, const Cycle& c2, const Vec3& direction);
/// Same, using the first generic candidate direction.
int linking_number(const Embedding3& e, const Cycle& c1, const Cycle& c2);

struct CrossingCount {
  int over = 0;       // signed crossings with c1 over c2
  int under = 0;      // signed crossings with c2 over c1
  int unsigned_over = 0;
};

CrossingCount crossings(const Embedding3& e, const Cycle& c1, const Cycle& c2, const Vec3& direction);

/// First candidate direction generic for every pair of vertex-disjoint edges
/// of g; throws EmbeddingError when none is.
Vec3 generic_direction(const Graph& g, const Embedding3& e);

struct LinklessReport {
  std::size_t cycle_count = 0;
  std::size_t pair_count = 0;
  int max_abs_lk = 0;
  std::map<int, std::size_t> histogram;  // |lk| -> number of pairs
  std::optional<std::pair<Cycle, Cycle>> first_linked;
  int first_linked_lk = 0;
  Vec3 direction;
};

/// Linking number of every vertex-disjoint cycle pair. The embedding must be
/// valid. `jobs` worker threads share the pairs; the result does not depend
/// on `jobs`.
LinklessReport linkless_report(const Graph& g, const Embedding3& e, int jobs = 1);

/// Sum of linking numbers over the ten disjoint triangle pairs of an embedded
/// K6, mod 2. Throws when g is not K6 or the embedding is not valid.
int conway_gordon_parity(const Graph& g, const Embedding3& e);

}  // namespace linkless
