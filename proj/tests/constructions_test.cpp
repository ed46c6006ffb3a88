#include <doctest.h>

#include "linkless/constructions.hpp"
#include "linkless/minor.hpp"
#include "support.hpp"

using namespace linkless;

namespace {

Edge named(const Graph& g, const char* a, const char* b) {
  const int u = g.index(a), v = g.index(b);
  return {std::min(u, v), std::max(u, v)};
}

}  // namespace

TEST_CASE("G") {
  const auto g = build_g();
  CHECK(g.order() == 13);
  CHECK(g.size() == 31);
  CHECK(g.labels() == std::vector<std::string>{"A", "B", "C", "D", "A'", "B'", "C'", "D'", "P", "Q", "R", "S", "T"});
  CHECK(min_degree(g) == 4);
  CHECK(g_non_edges().size() == 47);
  for (const auto& [a, b] : g_non_edges()) CHECK_FALSE(g.adjacent(g.index(a), g.index(b)));
  CHECK_FALSE(reduce_low_degree(g).has_value());
}

TEST_CASE("sigma") {
  const auto g = build_g();
  const auto s = sigma();
  CHECK(s(g.index("A")) == g.index("A'"));
  CHECK(s(g.index("C'")) == g.index("C"));
  CHECK(s(g.index("Q")) == g.index("Q"));
  CHECK(s.compose(s).is_identity());
  CHECK(is_automorphism(g, s));
}

TEST_CASE("non-edge orbits") {
  const auto g = build_g();
  const auto table = non_edge_orbits(g, sigma());
  CHECK(table.orbits.size() == 26);
  std::size_t pairs = 0, pairs_of_two = 0;
  std::set<Edge> fixed;
  for (const auto& o : table.orbits) {
    pairs += o.members.size();
    if (o.members.size() == 2) ++pairs_of_two;
    if (o.members.size() == 1) fixed.insert(o.representative);
    CHECK(o.representative == *std::min_element(o.members.begin(), o.members.end()));
  }
  CHECK(pairs == 47);
  CHECK(pairs_of_two == 21);
  CHECK(table.fixed_count() == 5);
  CHECK(fixed == std::set<Edge>{named(g, "B", "B'"), named(g, "C", "C'"), named(g, "P", "S"), named(g, "P", "T"),
                                named(g, "Q", "S")});
  CHECK(table.representative_of(named(g, "A'", "R")) == named(g, "A", "R"));

  const auto trivial = non_edge_orbits(g, Permutation::identity(13));
  CHECK(trivial.orbits.size() == 47);

  std::vector<int> swap_ab(13);
  for (int i = 0; i < 13; ++i) swap_ab[static_cast<std::size_t>(i)] = i;
  std::swap(swap_ab[0], swap_ab[1]);
  CHECK_THROWS_AS(non_edge_orbits(g, Permutation(swap_ab)), GraphError);
}

TEST_CASE("certificates reproduce the coverage table") {
  const auto g = build_g();
  const auto table = non_edge_orbits(g, sigma());
  const auto result = coverage_check(g, reference_certificates(), table);
  for (const auto& c : result.certificates) CHECK(c.verified);
  CHECK(result.complete());
  CHECK(result.uncovered.empty());
  CHECK(result.coverage.size() == 26);
  CHECK(result.coverage == reference_coverage_table());
  CHECK(result.coverage.at(named(g, "A", "R")) == std::set<int>{3, 5, 6});
  CHECK(result.coverage.at(named(g, "B", "C'")) == std::set<int>{1, 4, 6, 7, 8});
  CHECK(result.coverage.at(named(g, "D", "Q")) == std::set<int>{2, 5, 7});

  const auto printed = reference_eliminated_lists();
  REQUIRE(printed.size() == 8);
  for (std::size_t i = 0; i < 8; ++i) {
    std::set<Edge> reps;
    for (Edge e : printed[i]) reps.insert(table.representative_of(e));
    CHECK_MESSAGE(result.per_case[i] == reps, "case " << i + 1);
  }
  CHECK(result.per_case[0] == std::set<Edge>{named(g, "A", "B'"), named(g, "A", "C'"), named(g, "B", "B'"),
                                             named(g, "B", "C'"), named(g, "C", "C'"), named(g, "B", "D'"),
                                             named(g, "C", "D'")});
  CHECK(result.per_case[3] == std::set<Edge>{named(g, "B", "P"), named(g, "P", "S"), named(g, "P", "T"),
                                             named(g, "B", "C'"), named(g, "C", "S"), named(g, "C", "T")});
  CHECK(result.per_case[2] == std::set<Edge>{named(g, "A", "C"), named(g, "A", "R"), named(g, "A", "S"),
                                             named(g, "A", "T")});
}

TEST_CASE("a missing certificate leaves gaps") {
  const auto g = build_g();
  const auto table = non_edge_orbits(g, sigma());
  auto certs = reference_certificates();
  certs.erase(certs.begin() + 7);  // only case 8 covers DT
  const auto result = coverage_check(g, certs, table);
  CHECK_FALSE(result.complete());
  CHECK(std::find(result.uncovered.begin(), result.uncovered.end(), named(g, "D", "T")) != result.uncovered.end());
}

TEST_CASE("triangle sums") {
  const auto k3 = complete_graph(3);
  const auto s = triangle_sum(k3, {0, 1, 2}, k3, {0, 1, 2});
  CHECK(s.order() == 3);
  CHECK(s.size() == 3);

  const auto g = build_g();
  const Triangle pqr{g.index("P"), g.index("Q"), g.index("R")};
  const auto h2 = triangle_sum(g, pqr, g, pqr);
  CHECK(h2.order() == 23);
  CHECK(h2.size() == 59);
  CHECK_THROWS_AS(triangle_sum(g, {0, 1, 2}, g, pqr), GraphError);

  std::mt19937_64 rng(31);
  int checked = 0;
  for (int trial = 0; trial < 200 && checked < 100; ++trial) {
    const auto a = testing::random_graph(rng, 5 + trial % 5, 0.6);
    const auto b = testing::random_graph(rng, 4 + trial % 6, 0.6);
    const auto ta = triangles(a), tb = triangles(b);
    if (ta.empty() || tb.empty()) continue;
    const auto t1 = ta[rng() % ta.size()];
    const auto t2 = tb[rng() % tb.size()];
    const auto sum = triangle_sum(a, t1, b, t2);
    CHECK(sum.order() == a.order() + b.order() - 3);
    CHECK(sum.size() == a.size() + b.size() - 3);
    ++checked;
  }
  CHECK(checked == 100);
}

TEST_CASE("gluing linkless fixtures stays linkless") {
  const auto a = apex(stacked_triangulation(4));
  const auto b = octahedron();
  const auto ta = triangles(a).front();
  const auto tb = triangles(b).front();
  CHECK_FALSE(is_intrinsically_linked(triangle_sum(a, ta, b, tb)));
  CHECK_FALSE(is_intrinsically_linked(triangle_sum(b, tb, b, tb)));
}

TEST_CASE("clique-sum family counts") {
  const auto g = build_g();
  CHECK(has_private_triangle(g, {g.index("P"), g.index("Q"), g.index("R")}));
  const auto h1 = build_family(1);
  CHECK(h1.graph == g);
  for (int k = 1; k <= 5; ++k) {
    const auto h = build_family(k);
    const auto& r = h.report.counts;
    CHECK(h.report.k == k);
    CHECK(h.graph.order() == 3 + 10 * k);
    CHECK(h.graph.size() == 3 + 28 * k);
    CHECK(r.n == 3 + 10 * k);
    CHECK(r.m == 3 + 28 * k);
    CHECK(r.slack_14_5_x5 == -27);  // 5m - 14n
    CHECK(r.at_least_2n);
    CHECK(r.within_14_5);
    CHECK(min_degree(h.graph) == 4);
  }
  const auto h2 = build_family(2).report.counts;
  CHECK(h2.n == 23);
  CHECK(h2.m == 59);
  CHECK_THROWS_AS(build_family(0), GraphError);
  CHECK_THROWS_AS(build_family(2, {"A", "C", "R"}), GraphError);
}

TEST_CASE("family rejects a triangle with a common outside neighbour") {
  for (const auto& t : triangles(build_g())) {
    const auto g = build_g();
    std::array<std::string, 3> names{g.label(t[0]), g.label(t[1]), g.label(t[2])};
    if (has_private_triangle(g, t))
      CHECK_NOTHROW(build_family(2, names));
    else
      CHECK_THROWS_AS(build_family(2, names), GraphError);
  }
}

TEST_CASE("count reports") {
  const auto g = count_report(build_g());
  CHECK(g.n == 13);
  CHECK(g.m == 31);
  CHECK(g.at_least_2n);
  CHECK(g.versus_3n_minus_3 < 0);
  const auto k6 = count_report(complete_graph(6));
  CHECK(k6.m == 15);
  CHECK_FALSE(k6.within_mader);
  CHECK(count_report(apex(octahedron())).within_mader);
}

TEST_CASE("apex and stacked triangulations") {
  const auto ao = apex(octahedron());
  CHECK(ao.order() == 7);
  CHECK(ao.size() == 18);
  const auto st5 = stacked_triangulation(5);
  CHECK(st5.order() == 5);
  CHECK(st5.size() == 9);
  CHECK_THROWS_AS(stacked_triangulation(2), GraphError);
  for (int n = 3; n <= 12; ++n) {
    const auto st = stacked_triangulation(n);
    CHECK(st.size() == 3 * n - 6);
    CHECK(apex(st).size() == 4 * (n + 1) - 10);
  }
}

TEST_CASE("apex of the octahedron is K6-maximal") {
  const auto ao = apex(octahedron());
  CHECK_FALSE(has_k6_minor(ao));
  const auto non = ao.non_edges();
  CHECK(non.size() == 3);
  for (auto [u, v] : non) {
    const auto h = add_edge(ao, u, v);
    CHECK(h.size() == 19);
    const auto model = has_k6_minor(h);
    REQUIRE(model);
    CHECK(verify_model(complete_graph(6), h, *model));
  }
}

TEST_CASE("reduction step") {
  const auto p3 = path_graph(3);
  const auto r = reduce_low_degree(p3);
  REQUIRE(r);
  CHECK(r->order() == 2);
  CHECK(r->size() == 1);

  const auto k4e = remove_edge(complete_graph(4), 0, 1);
  const auto k3 = reduce_low_degree(k4e);
  REQUIRE(k3);
  CHECK(isomorphic(*k3, complete_graph(3)));

  const auto dy = delta_y(complete_graph(6), {0, 1, 2});
  const auto back = reduce_low_degree(dy);
  REQUIRE(back);
  CHECK(isomorphic(*back, complete_graph(6)));

  const auto isolated = reduce_low_degree(edgeless_graph(3));
  REQUIRE(isolated);
  CHECK(isolated->order() == 2);

  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = testing::random_graph(rng, 3 + trial % 8, 0.45);
    const auto next = reduce_low_degree(g);
    if (!next) {
      CHECK(min_degree(g) >= 4);
      continue;
    }
    CHECK(next->order() == g.order() - 1);
    CHECK(next->size() <= g.size() + 1);
  }
}

TEST_CASE("edge names") {
  const auto g = build_g();
  CHECK(edge_name(g, named(g, "A", "B'")) == "AB'");
  CHECK(edge_name(g, named(g, "Q", "S")) == "QS");
}
