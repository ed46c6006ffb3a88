#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace linkless {

using Bits = std::uint64_t;

inline constexpr int kMaxVertices = 64;

/// Thrown for malformed graph input or a violated operation precondition.
class GraphError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

constexpr Bits bit(int v) { return Bits{1} << v; }

constexpr Bits low_bits(int n) { return n >= 64 ? ~Bits{0} : bit(n) - 1; }

/// Bitmask of vertices of one fixed graph.
class VertexSet {
public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(Bits bits) : bits_(bits) {}

  static VertexSet of(std::initializer_list<int> vertices) {
    VertexSet s;
    for (int v : vertices) s.insert(v);
    return s;
  }

  constexpr Bits bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  constexpr void insert(int v) { bits_ |= bit(v); }
  constexpr void erase(int v) { bits_ &= ~bit(v); }
  constexpr int front() const { return std::countr_zero(bits_); }

  constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }
  constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr bool operator==(const VertexSet&) const = default;
  constexpr auto operator<=>(const VertexSet&) const = default;

  /// Members in ascending order.
  std::vector<int> members() const;

private:
  Bits bits_ = 0;
};

/// Bijection on 0..n-1.
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<int> map);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(map_.size()); }
  int operator()(int v) const { return map_[static_cast<std::size_t>(v)]; }
  const std::vector<int>& map() const { return map_; }

  Permutation compose(const Permutation& inner) const;  // this ∘ inner
  Permutation inverse() const;
  bool is_identity() const;

  bool operator==(const Permutation&) const = default;

private:
  std::vector<int> map_;
};

using Edge = std::pair<int, int>;
using LabelEdge = std::pair<std::string, std::string>;

/// Labeled simple undirected graph on at most 64 vertices. Row v of the
/// adjacency matrix is one 64-bit word of neighbor bits. Values are immutable;
/// every edit returns a new graph.
class Graph {
public:
  Graph() = default;

  /// Edgeless graph on the given labels.
  explicit Graph(std::vector<std::string> labels);

  static Graph from_edges(std::vector<std::string> labels, std::span<const LabelEdge> edges);
  static Graph from_index_edges(std::vector<std::string> labels, std::span<const Edge> edges);

  int order() const { return static_cast<int>(labels_.size()); }
  int size() const;

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int v) const { return labels_.at(static_cast<std::size_t>(v)); }
  std::optional<int> find(std::string_view label) const;
  /// Index of `label`; throws GraphError when absent.
  int index(std::string_view label) const;

  Bits neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  bool adjacent(int u, int v) const { return (adj_[static_cast<std::size_t>(u)] >> v) & 1U; }
  VertexSet vertices() const { return VertexSet(low_bits(order())); }

  /// Edges (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;
  /// Absent pairs (u, v) with u < v, sorted.
  std::vector<Edge> non_edges() const;

  bool operator==(const Graph&) const = default;

private:
  friend class GraphBuilder;

  std::vector<std::string> labels_;
  std::vector<Bits> adj_;
};

/// Mutable staging area used by the operations that derive new graphs.
class GraphBuilder {
public:
  explicit GraphBuilder(std::vector<std::string> labels);
  explicit GraphBuilder(const Graph& g);

  void connect(int u, int v);
  void disconnect(int u, int v);
  bool adjacent(int u, int v) const { return (adj_[static_cast<std::size_t>(u)] >> v) & 1U; }
  int add_vertex(std::string label);
  Graph build() &&;

private:
  std::vector<std::string> labels_;
  std::vector<Bits> adj_;
};

// Elementary operations. All return new values.

Graph complement(const Graph& g);
Graph add_edge(const Graph& g, int u, int v);
Graph add_edge(const Graph& g, std::string_view u, std::string_view v);
Graph remove_edge(const Graph& g, int u, int v);
Graph delete_vertex(const Graph& g, int v);
Graph delete_vertex(const Graph& g, std::string_view v);
/// Merges the endpoints of edge uv. The merged vertex keeps the label and
/// position of the lower-indexed endpoint.
Graph contract_edge(const Graph& g, int u, int v);
Graph contract_edge(const Graph& g, std::string_view u, std::string_view v);
Graph induced_subgraph(const Graph& g, VertexSet keep);
/// Vertex v of g becomes vertex p(v) of the result, labels travel with it.
Graph relabel(const Graph& g, const Permutation& p);

int degree(const Graph& g, int v);
int min_degree(const Graph& g);
std::vector<int> degree_sequence(const Graph& g);  // descending

bool is_connected(const Graph& g, VertexSet s);
/// Vertices reachable from `from` inside `within`.
Bits reach(const Graph& g, Bits from, Bits within);
std::vector<VertexSet> components(const Graph& g);
/// Length of a shortest cycle; 0 for a forest.
int girth(const Graph& g);

using Triangle = std::array<int, 3>;

/// All 3-cliques, each sorted ascending, listed in lexicographic order.
std::vector<Triangle> triangles(const Graph& g);
bool is_triangle(const Graph& g, const Triangle& t);

bool is_automorphism(const Graph& g, const Permutation& p);

/// Equal strings iff the graphs are isomorphic. Labels are ignored.
std::string canonical_form(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b);

/// Replaces triangle t by a new vertex joined to its three corners.
Graph delta_y(const Graph& g, const Triangle& t);
/// Replaces degree-3 vertex v by a triangle on its neighbors.
Graph y_delta(const Graph& g, int v);

// Standard fixtures.
Graph complete_graph(int n, std::string_view prefix = "v");
Graph cycle_graph(int n, std::string_view prefix = "v");
Graph path_graph(int n, std::string_view prefix = "v");
Graph edgeless_graph(int n, std::string_view prefix = "v");
std::vector<std::string> numbered_labels(int n, std::string_view prefix);

}  // namespace linkless
