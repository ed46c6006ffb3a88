#include "linkless/verify.hpp"

#include <chrono>
#include <sstream>

#include "linkless/parallel.hpp"

namespace linkless {

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

const std::vector<Graph>& family_cache() {
  static const std::vector<Graph> family = petersen_family();
  return family;
}

// Searches `host` for the pattern; fills found/model_valid/family_index.
void search(const Graph& host, ForbiddenPattern pattern, EdgeCheck& out) {
  if (pattern == ForbiddenPattern::k6) {
    static const Graph k6 = complete_graph(6);
    if (auto model = find_minor(k6, host)) {
      out.found = true;
      out.model_valid = verify_model(k6, host, *model);
    }
    return;
  }
  const auto& family = family_cache();
  if (auto witness = is_intrinsically_linked(host, family)) {
    out.found = true;
    out.family_index = witness->family_index;
    out.model_valid = verify_model(family[static_cast<std::size_t>(witness->family_index)], host, witness->model);
  }
}

std::string pattern_name(ForbiddenPattern p) { return p == ForbiddenPattern::k6 ? "K6" : "Petersen-family"; }

}  // namespace

bool MaximalityResult::passed() const {
  if (base_searched && !base_free) return false;
  for (const auto& e : edges)
    if (!e.found || !e.model_valid) return false;
  return true;
}

std::size_t MaximalityResult::found_count() const {
  std::size_t n = 0;
  for (const auto& e : edges) n += (e.found && e.model_valid) ? 1 : 0;
  return n;
}

MaximalityResult check_added_edges(const Graph& g, ForbiddenPattern pattern, const std::vector<Edge>& edges,
                                   int jobs) {
  MaximalityResult result;
  result.pattern = pattern;
  result.edges.resize(edges.size());
  if (pattern == ForbiddenPattern::petersen_family) family_cache();
  parallel_for(edges.size(), jobs, [&](std::size_t i) {
    auto& check = result.edges[i];
    check.edge = edges[i];
    const auto start = std::chrono::steady_clock::now();
    search(add_edge(g, edges[i].first, edges[i].second), pattern, check);
    check.seconds = seconds_since(start);
  });
  return result;
}

MaximalityResult verify_maximal(const Graph& g, ForbiddenPattern pattern, int jobs, std::vector<Edge> edges) {
  if (edges.empty()) edges = g.non_edges();
  const auto start = std::chrono::steady_clock::now();
  EdgeCheck base;
  search(g, pattern, base);
  const double base_seconds = seconds_since(start);
  auto result = check_added_edges(g, pattern, edges, jobs);
  result.base_searched = true;
  result.base_free = !base.found;
  result.base_seconds = base_seconds;
  return result;
}

std::vector<Edge> cross_copy_non_edges(const FamilyMember& member) {
  const Graph& h = member.graph;
  // Copy 1 occupies indices 0..12; copy c >= 2 appends ten vertices.
  auto copy_of = [](int v) { return v < 13 ? 1 : 2 + (v - 13) / 10; };
  const Bits shared = bit(h.index("P")) | bit(h.index("Q")) | bit(h.index("R"));
  std::vector<Edge> out;
  for (auto [u, v] : h.non_edges()) {
    if (((shared >> u) & 1U) || ((shared >> v) & 1U)) continue;
    if (copy_of(u) != copy_of(v)) out.emplace_back(u, v);
  }
  return out;
}

std::vector<Edge> sample_edges(const std::vector<Edge>& all, std::size_t count) {
  if (count >= all.size()) return all;
  std::vector<Edge> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(all[i * all.size() / count]);
  return out;
}

std::string format_count_report(const CountReport& r) {
  std::ostringstream out;
  out << "n = " << r.n << "\n"
      << "m = " << r.m << "\n"
      << "m >= 2n: " << (r.at_least_2n ? "yes" : "no") << " (2n = " << 2 * r.n << ")\n"
      << "m <= 14n/5: " << (r.within_14_5 ? "yes" : "no") << " (5m - 14n = " << r.slack_14_5_x5 << ")\n"
      << "m <= 4n-10: " << (r.within_mader ? "yes" : "no") << " (4n-10 = " << 4 * r.n - 10 << ")\n"
      << "m vs 3n-3: " << (r.versus_3n_minus_3 < 0 ? "below" : r.versus_3n_minus_3 == 0 ? "equal" : "above")
      << " (3n-3 = " << 3 * r.n - 3 << ")\n";
  return out.str();
}

std::string format_coverage_report(const Graph& g, const OrbitTable& table, const CoverageResult& coverage) {
  std::ostringstream out;
  std::size_t pairs = 0;
  for (const auto& o : table.orbits) pairs += o.members.size();
  out << "non-edges: " << pairs << ", orbits: " << table.orbits.size() << " (" << table.fixed_count() << " fixed)\n";
  for (std::size_t i = 0; i < coverage.certificates.size(); ++i) {
    const auto& cert = coverage.certificates[i];
    out << "case " << i + 1 << ": " << (cert.verified ? "verified" : "FAILED");
    if (cert.verified) {
      out << "; eliminates";
      for (Edge e : coverage.per_case[i]) out << " " << edge_name(g, e);
    }
    out << "\n";
    for (const auto& f : cert.failures) out << "  " << f << "\n";
  }
  out << "coverage:\n";
  for (const auto& [rep, cases] : coverage.coverage) {
    out << "  " << edge_name(g, rep) << ":";
    if (cases.empty()) out << " UNCOVERED";
    for (int c : cases) out << " " << c;
    out << "\n";
  }
  out << "covered " << coverage.coverage.size() - coverage.uncovered.size() << "/" << coverage.coverage.size()
      << " representatives\n";
  return out.str();
}

std::string format_maximality_report(const Graph& g, const MaximalityResult& result, bool timings) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(3);
  const auto name = pattern_name(result.pattern);
  out << "pattern: " << name << "\n";
  out << "base graph: " << (!result.base_searched ? "not searched" : result.base_free ? "no minor" : "MINOR FOUND");
  if (timings && result.base_searched) out << " [" << result.base_seconds << " s]";
  out << "\n";
  for (const auto& e : result.edges) {
    out << "+" << edge_name(g, e.edge) << ": ";
    if (!e.found) {
      out << "NO MINOR";
    } else if (!e.model_valid) {
      out << "INVALID MODEL";
    } else {
      out << "minor found";
      if (result.pattern == ForbiddenPattern::petersen_family) out << " (family member " << e.family_index << ")";
    }
    if (timings) out << " [" << e.seconds << " s]";
    out << "\n";
  }
  out << result.found_count() << "/" << result.edges.size() << " augmented graphs contain a " << name << " minor\n";
  return out.str();
}

std::string format_linkless_report(const Graph& g, const LinklessReport& report) {
  std::ostringstream out;
  out << "cycles: " << report.cycle_count << "\n"
      << "disjoint pairs: " << report.pair_count << "\n"
      << "projection: (" << report.direction.x << "," << report.direction.y << "," << report.direction.z << ")\n"
      << "max |lk|: " << report.max_abs_lk << "\n";
  for (auto [k, n] : report.histogram) out << "  |lk| = " << k << ": " << n << "\n";
  if (report.first_linked) {
    auto names = [&](const Cycle& c) {
      std::string s;
      for (int v : c.vertices) s += (s.empty() ? "" : " ") + g.label(v);
      return s;
    };
    out << "first linked pair: [" << names(report.first_linked->first) << "] [" << names(report.first_linked->second)
        << "] lk = " << report.first_linked_lk << "\n";
  }
  return out.str();
}

}  // namespace linkless
