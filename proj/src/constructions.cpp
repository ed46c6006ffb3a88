#include "linkless/constructions.hpp"

#include <algorithm>

namespace linkless {

namespace {

// Representative/case rows of the maximality table. The first pair is the
// representative; a second pair, when present, is its mirror image.
struct CoverageRow {
  const char* u;
  const char* v;
  const char* mirror_u;
  const char* mirror_v;
  std::vector<int> cases;
};

const std::vector<CoverageRow>& coverage_rows() {
  static const std::vector<CoverageRow> rows = {
      {"A", "C", "A'", "C'", {3}},
      {"A", "B'", "A'", "B", {1}},
      {"A", "C'", "A'", "C", {1, 6}},
      {"A", "D'", "A'", "D", {6}},
      {"A", "Q", "A'", "Q", {5}},
      {"A", "R", "A'", "R", {3, 5, 6}},
      {"A", "S", "A'", "S", {3}},
      {"A", "T", "A'", "T", {3}},
      {"B", "B'", nullptr, nullptr, {1}},
      {"B", "C'", "B'", "C", {1, 4, 6, 7, 8}},
      {"B", "D'", "B'", "D", {1, 6, 7, 8}},
      {"B", "P", "B'", "P", {4}},
      {"B", "R", "B'", "R", {6}},
      {"B", "S", "B'", "S", {7}},
      {"C", "C'", nullptr, nullptr, {1, 8}},
      {"C", "D'", "C'", "D", {1, 8}},
      {"C", "Q", "C'", "Q", {7}},
      {"C", "S", "C'", "S", {4}},
      {"C", "T", "C'", "T", {4, 8}},
      {"D", "P", "D'", "P", {2}},
      {"D", "Q", "D'", "Q", {2, 5, 7}},
      {"D", "R", "D'", "R", {5}},
      {"D", "T", "D'", "T", {8}},
      {"P", "S", nullptr, nullptr, {2, 4}},
      {"P", "T", nullptr, nullptr, {4}},
      {"Q", "S", nullptr, nullptr, {2, 7}},
  };
  return rows;
}

using Parts = std::vector<std::vector<const char*>>;

const std::vector<Parts>& certificate_parts() {
  static const std::vector<Parts> cases = {
      {{"A", "B", "C", "D"}, {"B'", "C'"}, {"S", "T", "D'"}, {"P", "A'"}, {"Q"}, {"R"}},
      {{"D", "S"}, {"P", "Q"}, {"A", "B", "A'"}, {"T", "B'"}, {"C", "R"}, {"C'", "D'"}},
      {{"C", "R", "S", "T"}, {"A"}, {"D", "C'", "D'"}, {"B", "Q"}, {"A'", "B'"}, {"P"}},
      {{"B", "S", "T"}, {"P", "C'"}, {"Q", "R", "B'"}, {"A", "A'"}, {"C", "D"}, {"D'"}},
      {{"A", "D"}, {"Q", "R"}, {"B", "S", "T"}, {"C", "P"}, {"A'", "B'"}, {"C'", "D'"}},
      {{"A", "B"}, {"R", "C'", "D'"}, {"D", "S", "T"}, {"C", "P"}, {"A'", "B'"}, {"Q"}},
      {{"C", "D", "S"}, {"Q", "B'"}, {"A", "B", "A'"}, {"R", "T"}, {"C'", "D'"}, {"P"}},
      {{"T", "B'", "C'"}, {"C", "D"}, {"A", "A'", "D'"}, {"B", "Q"}, {"R", "S"}, {"P"}},
  };
  return cases;
}

const std::vector<std::vector<LabelEdge>>& eliminated_columns() {
  static const std::vector<std::vector<LabelEdge>> cols = {
      {{"A", "B'"}, {"A", "C'"}, {"B", "B'"}, {"B", "C'"}, {"C", "C'"}, {"B", "D'"}, {"C", "D'"}},
      {{"D", "P"}, {"D", "Q"}, {"S", "P"}, {"S", "Q"}},
      {{"A", "C"}, {"A", "R"}, {"A", "S"}, {"A", "T"}},
      {{"B", "P"}, {"P", "S"}, {"P", "T"}, {"B", "C'"}, {"C", "S"}, {"C", "T"}},
      {{"A", "Q"}, {"A", "R"}, {"D", "Q"}, {"D", "R"}},
      {{"A", "R"}, {"B", "R"}, {"A", "C'"}, {"A", "D'"}, {"B", "C'"}, {"B", "D'"}},
      {{"C", "Q"}, {"B", "C'"}, {"D", "Q"}, {"Q", "S"}, {"B", "D'"}, {"B", "S"}},
      {{"B", "C'"}, {"B", "D'"}, {"C", "C'"}, {"C", "D'"}, {"C", "T"}, {"D", "T"}},
  };
  return cols;
}

Edge ordered(int u, int v) { return {std::min(u, v), std::max(u, v)}; }

Edge label_edge(const Graph& g, const LabelEdge& e) { return ordered(g.index(e.first), g.index(e.second)); }

}  // namespace

const std::vector<std::string>& g_labels() {
  static const std::vector<std::string> labels = {"A",  "B",  "C", "D", "A'", "B'", "C'",
                                                  "D'", "P",  "Q", "R", "S",  "T"};
  return labels;
}

std::vector<LabelEdge> g_non_edges() {
  std::vector<LabelEdge> out;
  for (const auto& row : coverage_rows()) {
    out.emplace_back(row.u, row.v);
    if (row.mirror_u != nullptr) out.emplace_back(row.mirror_u, row.mirror_v);
  }
  return out;
}

Graph build_g() {
  const auto missing = g_non_edges();
  return complement(Graph::from_edges(g_labels(), missing));
}

Permutation sigma() {
  // A B C D <-> A' B' C' D'; P Q R S T fixed.
  return Permutation({4, 5, 6, 7, 0, 1, 2, 3, 8, 9, 10, 11, 12});
}

Edge OrbitTable::representative_of(Edge pair) const {
  pair = ordered(pair.first, pair.second);
  for (const auto& orbit : orbits)
    if (std::find(orbit.members.begin(), orbit.members.end(), pair) != orbit.members.end()) return orbit.representative;
  throw GraphError("pair is not a non-edge of the orbit table");
}

std::size_t OrbitTable::fixed_count() const {
  return static_cast<std::size_t>(
      std::count_if(orbits.begin(), orbits.end(), [](const EdgeOrbit& o) { return o.members.size() == 1; }));
}

OrbitTable non_edge_orbits(const Graph& g, const Permutation& p) {
  if (!is_automorphism(g, p)) throw GraphError("permutation is not an automorphism of the graph");
  OrbitTable table;
  std::set<Edge> assigned;
  for (Edge e : g.non_edges()) {
    if (assigned.contains(e)) continue;
    EdgeOrbit orbit;
    Edge cur = e;
    do {
      orbit.members.push_back(cur);
      assigned.insert(cur);
      cur = ordered(p(cur.first), p(cur.second));
    } while (cur != e);
    std::sort(orbit.members.begin(), orbit.members.end());
    orbit.representative = orbit.members.front();
    table.orbits.push_back(std::move(orbit));
  }
  std::sort(table.orbits.begin(), table.orbits.end(),
            [](const EdgeOrbit& a, const EdgeOrbit& b) { return a.representative < b.representative; });
  return table;
}

std::vector<PartitionCertificate> reference_certificates() {
  const Graph lookup(g_labels());
  std::vector<PartitionCertificate> out;
  for (const auto& parts : certificate_parts()) {
    PartitionCertificate cert;
    for (const auto& part : parts) {
      VertexSet s;
      for (const char* label : part) s.insert(lookup.index(label));
      cert.parts.push_back(s);
    }
    out.push_back(std::move(cert));
  }
  return out;
}

std::vector<std::vector<Edge>> reference_eliminated_lists() {
  const Graph lookup(g_labels());
  std::vector<std::vector<Edge>> out;
  for (const auto& col : eliminated_columns()) {
    std::vector<Edge> edges;
    for (const auto& e : col) edges.push_back(label_edge(lookup, e));
    out.push_back(std::move(edges));
  }
  return out;
}

CoverageMap reference_coverage_table() {
  const Graph lookup(g_labels());
  CoverageMap out;
  for (const auto& row : coverage_rows()) out[label_edge(lookup, {row.u, row.v})] = std::set<int>(row.cases.begin(), row.cases.end());
  return out;
}

bool CoverageResult::complete() const {
  return uncovered.empty() &&
         std::all_of(certificates.begin(), certificates.end(), [](const CertificateResult& c) { return c.verified; });
}

CoverageResult coverage_check(const Graph& g, const std::vector<PartitionCertificate>& certs, const OrbitTable& table) {
  CoverageResult result;
  for (const auto& orbit : table.orbits) result.coverage[orbit.representative];
  for (std::size_t i = 0; i < certs.size(); ++i) {
    auto cert = verify_partition_certificate(g, certs[i]);
    std::set<Edge> reps;
    for (Edge e : cert.eliminated) {
      Edge rep = table.representative_of(e);
      reps.insert(rep);
      result.coverage[rep].insert(static_cast<int>(i) + 1);
    }
    result.per_case.push_back(std::move(reps));
    result.certificates.push_back(std::move(cert));
  }
  for (const auto& [rep, cases] : result.coverage)
    if (cases.empty()) result.uncovered.push_back(rep);
  return result;
}

Graph triangle_sum(const Graph& g1, const Triangle& t1, const Graph& g2, const Triangle& t2, std::string_view suffix) {
  if (!is_triangle(g1, t1)) throw GraphError("triangle_sum: first triple is not a triangle");
  if (!is_triangle(g2, t2)) throw GraphError("triangle_sum: second triple is not a triangle");
  if (t1[0] == t1[1] || t1[1] == t1[2] || t1[0] == t1[2] || t2[0] == t2[1] || t2[1] == t2[2] || t2[0] == t2[2])
    throw GraphError("triangle_sum: correspondence is not a bijection");

  GraphBuilder b(g1);
  std::vector<int> image(static_cast<std::size_t>(g2.order()), -1);
  for (std::size_t i = 0; i < 3; ++i) image[static_cast<std::size_t>(t2[i])] = t1[i];
  std::set<std::string> taken(g1.labels().begin(), g1.labels().end());
  for (int v = 0; v < g2.order(); ++v) {
    if (image[static_cast<std::size_t>(v)] >= 0) continue;
    std::string label = g2.label(v) + std::string(suffix);
    while (taken.contains(label)) label += suffix;
    taken.insert(label);
    image[static_cast<std::size_t>(v)] = b.add_vertex(label);
  }
  for (auto [u, v] : g2.edges()) b.connect(image[static_cast<std::size_t>(u)], image[static_cast<std::size_t>(v)]);
  return std::move(b).build();
}

CountReport count_report(const Graph& g) {
  CountReport r;
  r.n = g.order();
  r.m = g.size();
  r.at_least_2n = r.m >= 2 * r.n;
  r.within_14_5 = 5 * r.m <= 14 * r.n;
  r.within_mader = r.m <= 4 * r.n - 10;
  const int dehkordi_farr = 3 * r.n - 3;
  r.versus_3n_minus_3 = (r.m > dehkordi_farr) - (r.m < dehkordi_farr);
  r.slack_14_5_x5 = 5LL * r.m - 14LL * r.n;
  return r;
}

bool has_private_triangle(const Graph& g, const Triangle& t) {
  if (!is_triangle(g, t)) throw GraphError("vertices do not form a triangle");
  const Bits common = g.neighbors(t[0]) & g.neighbors(t[1]) & g.neighbors(t[2]);
  return common == 0;
}

FamilyMember build_family(int k, const std::array<std::string, 3>& triangle) {
  if (k < 1) throw GraphError("family index k must be at least 1");
  const Graph g = build_g();
  Triangle t{};
  for (std::size_t i = 0; i < 3; ++i) t[i] = g.index(triangle[i]);
  if (!is_triangle(g, t)) throw GraphError("gluing vertices do not form a triangle of G");
  if (!has_private_triangle(g, t))
    throw GraphError("gluing triangle has a common neighbour outside it; maximality of the sum would fail");

  Graph h = g;
  for (int copy = 2; copy <= k; ++copy) h = triangle_sum(h, t, g, t, "_" + std::to_string(copy));
  return {h, {k, count_report(h)}};
}

Graph apex(const Graph& g, std::string_view label) {
  GraphBuilder b(g);
  std::string name(label);
  while (g.find(name)) name += "'";
  const int hub = b.add_vertex(name);
  for (int v = 0; v < g.order(); ++v) b.connect(hub, v);
  return std::move(b).build();
}

Graph stacked_triangulation(int n) {
  if (n < 3) throw GraphError("stacked triangulation needs at least 3 vertices");
  GraphBuilder b(numbered_labels(n, "v"));
  b.connect(0, 1);
  b.connect(1, 2);
  b.connect(0, 2);
  std::vector<Triangle> faces{{0, 1, 2}};
  for (int v = 3; v < n; ++v) {
    // Cycle through the available faces so the result is not a fan.
    const std::size_t pick = static_cast<std::size_t>(v) % faces.size();
    const Triangle f = faces[pick];
    for (int c : f) b.connect(v, c);
    faces[pick] = {f[0], f[1], v};
    faces.push_back({f[1], f[2], v});
    faces.push_back({f[0], f[2], v});
  }
  return std::move(b).build();
}

Graph octahedron() {
  GraphBuilder b(numbered_labels(6, "o"));
  for (int u = 0; u < 6; ++u)
    for (int v = u + 1; v < 6; ++v)
      if (v != u + 3) b.connect(u, v);
  return std::move(b).build();
}

Graph petersen_graph() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);      // outer cycle
    edges.emplace_back(i, i + 5);            // spokes
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return Graph::from_index_edges(numbered_labels(10, "p"), edges);
}

std::optional<Graph> reduce_low_degree(const Graph& g) {
  if (g.order() == 0) return std::nullopt;
  int v = 0;
  for (int u = 1; u < g.order(); ++u)
    if (degree(g, u) < degree(g, v)) v = u;
  const int d = degree(g, v);
  if (d >= 4) return std::nullopt;
  if (d <= 1) return delete_vertex(g, v);
  if (d == 3) return y_delta(g, v);
  const auto nb = VertexSet(g.neighbors(v)).members();
  Graph joined = g.adjacent(nb[0], nb[1]) ? g : add_edge(g, nb[0], nb[1]);
  return delete_vertex(joined, v);
}

std::string edge_name(const Graph& g, Edge e) {
  auto short_label = [](const std::string& s) { return s.size() == 1 || (s.size() == 2 && s[1] == '\''); };
  const auto& a = g.label(e.first);
  const auto& b = g.label(e.second);
  return short_label(a) && short_label(b) ? a + b : a + "-" + b;
}

}  // namespace linkless
