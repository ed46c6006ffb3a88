#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "linkless/graph.hpp"
#include "linkless/minor.hpp"

namespace linkless {

// ---------------------------------------------------------------------------
// The 13-vertex graph G and its certificate data.

/// Vertex labels of G in index order: A B C D A' B' C' D' P Q R S T.
const std::vector<std::string>& g_labels();

/// The 47 missing edges of G, as transcribed from the maximality tables
/// (each row with its mirror partner).
std::vector<LabelEdge> g_non_edges();

/// G = complement of g_non_edges() on g_labels(); 13 vertices, 31 edges.
Graph build_g();

/// Swaps A B C D with A' B' C' D' and fixes P Q R S T.
Permutation sigma();

struct EdgeOrbit {
  Edge representative;  // lexicographically least member
  std::vector<Edge> members;
};

struct OrbitTable {
  std::vector<EdgeOrbit> orbits;  // sorted by representative

  /// Representative of the orbit containing the pair, in either order.
  Edge representative_of(Edge pair) const;
  std::size_t fixed_count() const;
};

/// Groups the non-edges of g into orbits under the cyclic group generated by
/// p. Throws GraphError when p is not an automorphism of g.
OrbitTable non_edge_orbits(const Graph& g, const Permutation& p);

/// The eight K6-minor partitions of V(G), in case order.
std::vector<PartitionCertificate> reference_certificates();

/// Per-case eliminated edges as printed in the certificate table.
std::vector<std::vector<Edge>> reference_eliminated_lists();

using CoverageMap = std::map<Edge, std::set<int>>;

/// The 26-row representative/case coverage table.
CoverageMap reference_coverage_table();

struct CoverageResult {
  CoverageMap coverage;                       // representative -> 1-based case indices
  std::vector<std::set<Edge>> per_case;       // folded eliminated representatives
  std::vector<CertificateResult> certificates;
  std::vector<Edge> uncovered;                // representatives no case reaches

  bool complete() const;
};

/// Verifies every certificate, folds its eliminated pairs onto orbit
/// representatives and reports which representatives each case covers.
CoverageResult coverage_check(const Graph& g, const std::vector<PartitionCertificate>& certs, const OrbitTable& table);

// ---------------------------------------------------------------------------
// Clique sums over a triangle.

/// Glues g2 onto g1 by identifying t2[i] with t1[i]. Non-triangle vertices of
/// g2 keep their labels with `suffix` appended (repeated until unique).
Graph triangle_sum(const Graph& g1, const Triangle& t1, const Graph& g2, const Triangle& t2,
                   std::string_view suffix = "_2");

struct CountReport {
  int n = 0;
  int m = 0;
  bool at_least_2n = false;      // m >= 2n
  bool within_14_5 = false;      // 5m <= 14n
  bool within_mader = false;     // m <= 4n - 10
  int versus_3n_minus_3 = 0;     // sign of m - (3n - 3)
  long long slack_14_5_x5 = 0;   // 5m - 14n

  bool operator==(const CountReport&) const = default;
};

CountReport count_report(const Graph& g);

struct FamilyReport {
  int k = 0;
  CountReport counts;
};

struct FamilyMember {
  Graph graph;
  FamilyReport report;
};

/// True when no vertex outside t is adjacent to all three corners of t.
bool has_private_triangle(const Graph& g, const Triangle& t);

/// k copies of G sharing one triangle (default P Q R). Copy i > 1 carries
/// the suffix "_i" on its non-triangle labels.
FamilyMember build_family(int k, const std::array<std::string, 3>& triangle = {"P", "Q", "R"});

// ---------------------------------------------------------------------------
// Fixtures.

Graph apex(const Graph& g, std::string_view label = "apex");
/// Maximal planar graph built by repeatedly stacking a vertex into a face.
Graph stacked_triangulation(int n);
Graph octahedron();
Graph petersen_graph();

/// One low-degree reduction step: a vertex of minimum degree d <= 3 (lowest
/// index on ties) is deleted for d <= 1, deleted with its two neighbours
/// joined for d == 2, or replaced by a triangle (Y-Delta) for d == 3.
/// nullopt when the minimum degree is at least 4.
std::optional<Graph> reduce_low_degree(const Graph& g);

std::string edge_name(const Graph& g, Edge e);

}  // namespace linkless
