#include "linkless/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <unordered_set>

namespace linkless {

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (Bits b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

Permutation::Permutation(std::vector<int> map) : map_(std::move(map)) {
  std::vector<bool> seen(map_.size(), false);
  for (int v : map_) {
    if (v < 0 || v >= static_cast<int>(map_.size()) || seen[static_cast<std::size_t>(v)])
      throw GraphError("permutation is not a bijection");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> map(static_cast<std::size_t>(n));
  std::iota(map.begin(), map.end(), 0);
  return Permutation(std::move(map));
}

Permutation Permutation::compose(const Permutation& inner) const {
  if (inner.size() != size()) throw GraphError("permutation sizes differ");
  std::vector<int> out(map_.size());
  for (int v = 0; v < size(); ++v) out[static_cast<std::size_t>(v)] = (*this)(inner(v));
  return Permutation(std::move(out));
}

Permutation Permutation::inverse() const {
  std::vector<int> out(map_.size());
  for (int v = 0; v < size(); ++v) out[static_cast<std::size_t>((*this)(v))] = v;
  return Permutation(std::move(out));
}

bool Permutation::is_identity() const {
  for (int v = 0; v < size(); ++v)
    if ((*this)(v) != v) return false;
  return true;
}

namespace {

void check_labels(const std::vector<std::string>& labels) {
  if (labels.size() > static_cast<std::size_t>(kMaxVertices))
    throw GraphError("graph has " + std::to_string(labels.size()) + " vertices; at most 64 supported");
  std::unordered_set<std::string_view> seen;
  for (const auto& l : labels) {
    if (l.empty()) throw GraphError("empty vertex label");
    if (std::any_of(l.begin(), l.end(), [](unsigned char c) { return c <= ' '; }))
      throw GraphError("vertex label contains whitespace: '" + l + "'");
    if (!seen.insert(l).second) throw GraphError("duplicate vertex label '" + l + "'");
  }
}

void check_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) throw GraphError("vertex index " + std::to_string(v) + " out of range");
}

}  // namespace

Graph::Graph(std::vector<std::string> labels) : labels_(std::move(labels)) {
  check_labels(labels_);
  adj_.assign(labels_.size(), 0);
}

Graph Graph::from_edges(std::vector<std::string> labels, std::span<const LabelEdge> edges) {
  GraphBuilder b(labels);
  Graph lookup(std::move(labels));
  for (const auto& [u, v] : edges) {
    int a = lookup.index(u);
    int c = lookup.index(v);
    if (a == c) throw GraphError("loop edge at '" + u + "'");
    b.connect(a, c);
  }
  return std::move(b).build();
}

Graph Graph::from_index_edges(std::vector<std::string> labels, std::span<const Edge> edges) {
  GraphBuilder b(std::move(labels));
  for (auto [u, v] : edges) b.connect(u, v);
  return std::move(b).build();
}

int Graph::size() const {
  int twice = 0;
  for (Bits row : adj_) twice += std::popcount(row);
  return twice / 2;
}

std::optional<int> Graph::find(std::string_view label) const {
  for (int v = 0; v < order(); ++v)
    if (labels_[static_cast<std::size_t>(v)] == label) return v;
  return std::nullopt;
}

int Graph::index(std::string_view label) const {
  if (auto v = find(label)) return *v;
  throw GraphError("unknown vertex '" + std::string(label) + "'");
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < order(); ++u)
    for (Bits b = adj_[static_cast<std::size_t>(u)] & ~low_bits(u + 1); b != 0; b &= b - 1)
      out.emplace_back(u, std::countr_zero(b));
  return out;
}

std::vector<Edge> Graph::non_edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < order(); ++u)
    for (int v = u + 1; v < order(); ++v)
      if (!adjacent(u, v)) out.emplace_back(u, v);
  return out;
}

GraphBuilder::GraphBuilder(std::vector<std::string> labels) : labels_(std::move(labels)) {
  check_labels(labels_);
  adj_.assign(labels_.size(), 0);
}

GraphBuilder::GraphBuilder(const Graph& g) : labels_(g.labels_), adj_(g.adj_) {}

void GraphBuilder::connect(int u, int v) {
  const int n = static_cast<int>(labels_.size());
  if (u < 0 || v < 0 || u >= n || v >= n) throw GraphError("edge endpoint out of range");
  if (u == v) throw GraphError("loop edge at '" + labels_[static_cast<std::size_t>(u)] + "'");
  adj_[static_cast<std::size_t>(u)] |= bit(v);
  adj_[static_cast<std::size_t>(v)] |= bit(u);
}

void GraphBuilder::disconnect(int u, int v) {
  adj_[static_cast<std::size_t>(u)] &= ~bit(v);
  adj_[static_cast<std::size_t>(v)] &= ~bit(u);
}

int GraphBuilder::add_vertex(std::string label) {
  labels_.push_back(std::move(label));
  check_labels(labels_);
  adj_.push_back(0);
  return static_cast<int>(labels_.size()) - 1;
}

Graph GraphBuilder::build() && {
  Graph g;
  g.labels_ = std::move(labels_);
  g.adj_ = std::move(adj_);
  return g;
}

Graph complement(const Graph& g) {
  GraphBuilder b(g.labels());
  for (auto [u, v] : g.non_edges()) b.connect(u, v);
  return std::move(b).build();
}

Graph add_edge(const Graph& g, int u, int v) {
  check_vertex(g, u);
  check_vertex(g, v);
  if (u == v) throw GraphError("loop edge at '" + g.label(u) + "'");
  if (g.adjacent(u, v)) throw GraphError("edge " + g.label(u) + g.label(v) + " already present");
  GraphBuilder b(g);
  b.connect(u, v);
  return std::move(b).build();
}

Graph add_edge(const Graph& g, std::string_view u, std::string_view v) {
  return add_edge(g, g.index(u), g.index(v));
}

Graph remove_edge(const Graph& g, int u, int v) {
  check_vertex(g, u);
  check_vertex(g, v);
  if (!g.adjacent(u, v)) throw GraphError("edge " + g.label(u) + g.label(v) + " not present");
  GraphBuilder b(g);
  b.disconnect(u, v);
  return std::move(b).build();
}

Graph induced_subgraph(const Graph& g, VertexSet keep) {
  if (!keep.subset_of(g.vertices())) throw GraphError("vertex set out of range");
  const auto kept = keep.members();
  std::vector<int> position(static_cast<std::size_t>(g.order()), -1);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    position[static_cast<std::size_t>(kept[i])] = static_cast<int>(i);
    labels.push_back(g.label(kept[i]));
  }
  GraphBuilder b(std::move(labels));
  for (auto [u, v] : g.edges())
    if (keep.contains(u) && keep.contains(v))
      b.connect(position[static_cast<std::size_t>(u)], position[static_cast<std::size_t>(v)]);
  return std::move(b).build();
}

Graph delete_vertex(const Graph& g, int v) {
  check_vertex(g, v);
  VertexSet keep = g.vertices();
  keep.erase(v);
  return induced_subgraph(g, keep);
}

Graph delete_vertex(const Graph& g, std::string_view v) { return delete_vertex(g, g.index(v)); }

Graph contract_edge(const Graph& g, int u, int v) {
  check_vertex(g, u);
  check_vertex(g, v);
  if (u == v || !g.adjacent(u, v))
    throw GraphError("cannot contract: " + g.label(u) + g.label(v) + " is not an edge");
  const int keep = std::min(u, v);
  const int gone = std::max(u, v);
  GraphBuilder b(g);
  for (Bits nb = g.neighbors(gone) & ~bit(keep); nb != 0; nb &= nb - 1) b.connect(keep, std::countr_zero(nb));
  Graph merged = std::move(b).build();
  return delete_vertex(merged, gone);
}

Graph contract_edge(const Graph& g, std::string_view u, std::string_view v) {
  return contract_edge(g, g.index(u), g.index(v));
}

Graph relabel(const Graph& g, const Permutation& p) {
  if (p.size() != g.order()) throw GraphError("permutation size does not match graph");
  std::vector<std::string> labels(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) labels[static_cast<std::size_t>(p(v))] = g.label(v);
  GraphBuilder b(std::move(labels));
  for (auto [u, v] : g.edges()) b.connect(p(u), p(v));
  return std::move(b).build();
}

int degree(const Graph& g, int v) {
  check_vertex(g, v);
  return std::popcount(g.neighbors(v));
}

int min_degree(const Graph& g) {
  int best = g.order() == 0 ? 0 : kMaxVertices;
  for (int v = 0; v < g.order(); ++v) best = std::min(best, degree(g, v));
  return best;
}

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> out;
  for (int v = 0; v < g.order(); ++v) out.push_back(degree(g, v));
  std::sort(out.rbegin(), out.rend());
  return out;
}

Bits reach(const Graph& g, Bits from, Bits within) {
  Bits seen = from & within;
  Bits frontier = seen;
  while (frontier != 0) {
    Bits next = 0;
    for (Bits f = frontier; f != 0; f &= f - 1) next |= g.neighbors(std::countr_zero(f));
    next &= within & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

bool is_connected(const Graph& g, VertexSet s) {
  if (s.empty()) throw GraphError("connectivity of an empty vertex set is undefined");
  if (!s.subset_of(g.vertices())) throw GraphError("vertex set out of range");
  return reach(g, bit(s.front()), s.bits()) == s.bits();
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  Bits left = g.vertices().bits();
  while (left != 0) {
    Bits comp = reach(g, left & (~left + 1), left);
    out.emplace_back(comp);
    left &= ~comp;
  }
  return out;
}

int girth(const Graph& g) {
  int best = 0;
  const int n = g.order();
  for (int s = 0; s < n; ++s) {
    std::vector<int> dist(static_cast<std::size_t>(n), -1);
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    std::queue<int> q;
    dist[static_cast<std::size_t>(s)] = 0;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (Bits nb = g.neighbors(u); nb != 0; nb &= nb - 1) {
        int w = std::countr_zero(nb);
        auto wi = static_cast<std::size_t>(w);
        if (dist[wi] < 0) {
          dist[wi] = dist[static_cast<std::size_t>(u)] + 1;
          parent[wi] = u;
          q.push(w);
        } else if (parent[static_cast<std::size_t>(u)] != w) {
          int len = dist[static_cast<std::size_t>(u)] + dist[wi] + 1;
          if (best == 0 || len < best) best = len;
        }
      }
    }
  }
  return best;
}

std::vector<Triangle> triangles(const Graph& g) {
  std::vector<Triangle> out;
  for (int a = 0; a < g.order(); ++a)
    for (Bits bs = g.neighbors(a) & ~low_bits(a + 1); bs != 0; bs &= bs - 1) {
      int b = std::countr_zero(bs);
      for (Bits cs = g.neighbors(a) & g.neighbors(b) & ~low_bits(b + 1); cs != 0; cs &= cs - 1)
        out.push_back({a, b, std::countr_zero(cs)});
    }
  return out;
}

bool is_triangle(const Graph& g, const Triangle& t) {
  for (int v : t)
    if (v < 0 || v >= g.order()) return false;
  return g.adjacent(t[0], t[1]) && g.adjacent(t[1], t[2]) && g.adjacent(t[0], t[2]);
}

bool is_automorphism(const Graph& g, const Permutation& p) {
  if (p.size() != g.order()) throw GraphError("permutation size does not match graph");
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (g.adjacent(u, v) != g.adjacent(p(u), p(v))) return false;
  return true;
}

namespace {

// Colour refinement: start from degrees, split by the multiset of neighbour
// colours until stable. Colours are ranks of sorted signatures, so the result
// depends only on the isomorphism class.
std::vector<int> refine_colours(const Graph& g) {
  const int n = g.order();
  std::vector<int> colour(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) colour[static_cast<std::size_t>(v)] = degree(g, v);
  int classes = -1;
  while (true) {
    std::vector<std::vector<int>> sig(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      auto& s = sig[static_cast<std::size_t>(v)];
      s.push_back(colour[static_cast<std::size_t>(v)]);
      std::vector<int> nb;
      for (Bits b = g.neighbors(v); b != 0; b &= b - 1)
        nb.push_back(colour[static_cast<std::size_t>(std::countr_zero(b))]);
      std::sort(nb.begin(), nb.end());
      s.insert(s.end(), nb.begin(), nb.end());
    }
    std::map<std::vector<int>, int> rank;
    for (const auto& s : sig) rank.emplace(s, 0);
    int r = 0;
    for (auto& [s, id] : rank) id = r++;
    for (int v = 0; v < n; ++v) colour[static_cast<std::size_t>(v)] = rank[sig[static_cast<std::size_t>(v)]];
    if (r == classes) break;
    classes = r;
  }
  return colour;
}

// Row i of a candidate ordering: adjacency of position i to positions 0..i-1,
// position 0 in the most significant bit so integer order is lexicographic.
class CanonicalSearch {
public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()) {
    auto colour = refine_colours(g);
    std::vector<int> by_colour(static_cast<std::size_t>(n_));
    std::iota(by_colour.begin(), by_colour.end(), 0);
    std::stable_sort(by_colour.begin(), by_colour.end(), [&](int a, int b) {
      return colour[static_cast<std::size_t>(a)] < colour[static_cast<std::size_t>(b)];
    });
    cell_of_position_.resize(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) {
      int c = colour[static_cast<std::size_t>(by_colour[static_cast<std::size_t>(i)])];
      cell_of_position_[static_cast<std::size_t>(i)] = c;
      if (c >= static_cast<int>(cells_.size())) cells_.resize(static_cast<std::size_t>(c) + 1, 0);
      cells_[static_cast<std::size_t>(c)] |= bit(by_colour[static_cast<std::size_t>(i)]);
    }
    order_.resize(static_cast<std::size_t>(n_));
    rows_.resize(static_cast<std::size_t>(n_));
  }

  std::string run() {
    if (n_ > 0) place(0, 0, false);
    std::string out;
    out.push_back(static_cast<char>(n_));
    std::vector<int> colours(cell_of_position_);
    for (int c : colours) out.push_back(static_cast<char>(c));
    for (Bits row : best_)
      for (int k = 0; k < 8; ++k) out.push_back(static_cast<char>((row >> (8 * k)) & 0xFF));
    return out;
  }

private:
  void place(int pos, Bits used, bool greater) {
    if (pos == n_) {
      if (greater || best_.empty()) best_ = rows_;
      return;
    }
    Bits candidates = cells_[static_cast<std::size_t>(cell_of_position_[static_cast<std::size_t>(pos)])] & ~used;
    for (; candidates != 0; candidates &= candidates - 1) {
      int v = std::countr_zero(candidates);
      Bits row = 0;
      for (int j = 0; j < pos; ++j)
        if (g_.adjacent(v, order_[static_cast<std::size_t>(j)])) row |= bit(63 - j);
      bool now_greater = greater;
      if (!greater && !best_.empty()) {
        Bits best_row = best_[static_cast<std::size_t>(pos)];
        if (row < best_row) continue;
        now_greater = row > best_row;
      }
      order_[static_cast<std::size_t>(pos)] = v;
      rows_[static_cast<std::size_t>(pos)] = row;
      place(pos + 1, used | bit(v), now_greater);
    }
  }

  const Graph& g_;
  int n_;
  std::vector<int> cell_of_position_;
  std::vector<Bits> cells_;
  std::vector<int> order_;
  std::vector<Bits> rows_;
  std::vector<Bits> best_;
};

}  // namespace

std::string canonical_form(const Graph& g) { return CanonicalSearch(g).run(); }

bool isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.size() == b.size() && canonical_form(a) == canonical_form(b);
}

namespace {

std::string fresh_label(const Graph& g, std::string_view stem) {
  for (int k = 0;; ++k) {
    std::string candidate = std::string(stem) + std::to_string(k);
    if (!g.find(candidate)) return candidate;
  }
}

}  // namespace

Graph delta_y(const Graph& g, const Triangle& t) {
  if (!is_triangle(g, t)) throw GraphError("delta_y: vertices do not form a triangle");
  GraphBuilder b(g);
  b.disconnect(t[0], t[1]);
  b.disconnect(t[1], t[2]);
  b.disconnect(t[0], t[2]);
  int hub = b.add_vertex(fresh_label(g, "y"));
  for (int v : t) b.connect(hub, v);
  return std::move(b).build();
}

Graph y_delta(const Graph& g, int v) {
  check_vertex(g, v);
  if (degree(g, v) != 3) throw GraphError("y_delta: vertex '" + g.label(v) + "' does not have degree 3");
  auto nb = VertexSet(g.neighbors(v)).members();
  GraphBuilder b(g);
  b.connect(nb[0], nb[1]);
  b.connect(nb[1], nb[2]);
  b.connect(nb[0], nb[2]);
  return delete_vertex(std::move(b).build(), v);
}

std::vector<std::string> numbered_labels(int n, std::string_view prefix) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(std::string(prefix) + std::to_string(i));
  return out;
}

Graph complete_graph(int n, std::string_view prefix) {
  GraphBuilder b(numbered_labels(n, prefix));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) b.connect(u, v);
  return std::move(b).build();
}

Graph cycle_graph(int n, std::string_view prefix) {
  if (n < 3) throw GraphError("a cycle needs at least 3 vertices");
  GraphBuilder b(numbered_labels(n, prefix));
  for (int v = 0; v < n; ++v) b.connect(v, (v + 1) % n);
  return std::move(b).build();
}

Graph path_graph(int n, std::string_view prefix) {
  GraphBuilder b(numbered_labels(n, prefix));
  for (int v = 0; v + 1 < n; ++v) b.connect(v, v + 1);
  return std::move(b).build();
}

Graph edgeless_graph(int n, std::string_view prefix) { return Graph(numbered_labels(n, prefix)); }

}  // namespace linkless
