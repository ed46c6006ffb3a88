#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "linkless/graph.hpp"

namespace linkless {

/// Witness that `pattern` is a minor of `host`: branch_sets[x] is the host
/// vertex set standing in for pattern vertex x.
struct MinorModel {
  std::vector<VertexSet> branch_sets;

  bool operator==(const MinorModel&) const = default;
};

/// Checks the model invariants: one branch set per pattern vertex, pairwise
/// disjoint, nonempty, connected in host, and every pattern edge realised by a
/// host edge between the corresponding branch sets. Throws GraphError when the
/// model has the wrong number of sets or names a vertex outside the host.
bool verify_model(const Graph& pattern, const Graph& host, const MinorModel& model);

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t leaves = 0;
};

/// Complete minor test. Returns a model that passes verify_model, or nullopt,
/// which proves pattern is not a minor of host.
///
/// Host vertices are visited in a connected greedy order, one component at a
/// time. Each vertex either joins an open branch set or opens the next one, so
/// branch sets are enumerated as unlabeled set partitions; a whole component
/// may instead be dropped. Covering every vertex of each kept component loses
/// nothing, because a vertex left out of a model can always be absorbed into a
/// neighbouring branch set. At a full partition the quotient graph is tested
/// for a spanning copy of the pattern. Pruning:
///   - a branch set must stay inside one component of (itself ∪ undecided);
///   - upper bounds on final quotient degrees must dominate the pattern's
///     degree sequence;
///   - enough undecided vertices must remain to open the missing sets.
std::optional<MinorModel> find_minor(const Graph& pattern, const Graph& host, SearchStats* stats = nullptr);

std::optional<MinorModel> has_k6_minor(const Graph& g, SearchStats* stats = nullptr);

/// Ordered partition of V(g) into six parts; the pair (parts[0], parts[1]) is
/// the one allowed to be non-adjacent.
struct PartitionCertificate {
  std::vector<VertexSet> parts;
};

struct CertificateResult {
  bool verified = false;
  std::vector<std::string> failures;
  /// Every pair (u, v), u < v, with one end in parts[0] and the other in
  /// parts[1]. Empty unless verified.
  std::vector<Edge> eliminated;
};

/// Verifies that adding any edge between the first two parts yields a K6
/// minor with the parts as branch sets. Throws GraphError when the parts do not
/// partition V(g) or there are not exactly six of them.
CertificateResult verify_partition_certificate(const Graph& g, const PartitionCertificate& cert);

/// The seven graphs generated from K6 by Delta-Y and Y-Delta moves, sorted by
/// (vertex count, canonical form).
std::vector<Graph> petersen_family();

struct LinkedWitness {
  int family_index = -1;
  MinorModel model;
};

/// Searches for each Petersen-family graph as a minor, smallest first.
/// nullopt certifies that g has a linkless embedding.
std::optional<LinkedWitness> is_intrinsically_linked(const Graph& g, const std::vector<Graph>& family);
std::optional<LinkedWitness> is_intrinsically_linked(const Graph& g);

}  // namespace linkless
