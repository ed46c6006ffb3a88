#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "linkless/constructions.hpp"
#include "linkless/embedding.hpp"
#include "linkless/minor.hpp"
#include "linkless/text_format.hpp"
#include "linkless/verify.hpp"

namespace fs = std::filesystem;
using namespace linkless;

namespace {

constexpr int kOk = 0;
constexpr int kCounterResult = 1;
constexpr int kUsage = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Wraps parse failures with the offending path.
template <class Parse>
auto load(const std::string& path, Parse parse) {
  const std::string text = read_file(path);
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  } catch (const GraphError& e) {
    throw InputError(path + ": " + e.what());
  }
}

Graph load_graph(const std::string& path) {
  return load(path, [](std::string_view t) { return parse_graph(t); });
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-")
    std::cout << text;
  else
    write_file(path, text);
}

std::optional<Graph> builtin_pattern(const std::string& name) {
  if (name == "k4") return complete_graph(4);
  if (name == "k5") return complete_graph(5);
  if (name == "k6") return complete_graph(6);
  if (name == "c4") return cycle_graph(4);
  if (name == "petersen") return petersen_graph();
  return std::nullopt;
}

Graph load_pattern(const std::string& arg) {
  if (!fs::exists(arg))
    if (auto g = builtin_pattern(arg)) return *g;
  return load_graph(arg);
}

Permutation parse_permutation(const std::string& text, const Graph& g) {
  std::istringstream in(text);
  std::vector<int> map;
  for (std::string token; in >> token;) {
    if (auto v = g.find(token))
      map.push_back(*v);
    else
      throw InputError("automorphism: unknown vertex '" + token + "'");
  }
  if (static_cast<int>(map.size()) != g.order())
    throw InputError("automorphism: expected " + std::to_string(g.order()) + " images");
  try {
    return Permutation(std::move(map));
  } catch (const GraphError& e) {
    throw InputError(std::string("automorphism: ") + e.what());
  }
}

double elapsed(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// --- build ------------------------------------------------------------------

struct BuildArgs {
  std::string what;
  int count = 0;
  std::string out;
  std::string out_dir;
};

int run_build(const BuildArgs& a) {
  if (a.what == "g") {
    emit(a.out, write_graph(build_g()));
  } else if (a.what == "family") {
    if (a.count < 1) throw CLI::ValidationError("family", "K must be at least 1");
    auto member = build_family(a.count);
    const std::string path = !a.out_dir.empty() ? (fs::path(a.out_dir) / ("h" + std::to_string(a.count) + ".graph")).string() : a.out;
    if (!a.out_dir.empty()) fs::create_directories(a.out_dir);
    emit(path, write_graph(member.graph));
  } else if (a.what == "apex") {
    if (a.count < 3) throw CLI::ValidationError("apex", "N must be at least 3");
    emit(a.out, write_graph(apex(stacked_triangulation(a.count))));
  } else if (a.what == "petersen-family") {
    const auto family = petersen_family();
    if (!a.out_dir.empty()) {
      fs::create_directories(a.out_dir);
      for (std::size_t i = 0; i < family.size(); ++i)
        write_file((fs::path(a.out_dir) / ("petersen_" + std::to_string(i) + ".graph")).string(), write_graph(family[i]));
    } else {
      std::string text;
      for (std::size_t i = 0; i < family.size(); ++i)
        text += "# member " + std::to_string(i) + "\n" + write_graph(family[i]);
      emit(a.out, text);
    }
  } else if (a.what == "certificates") {
    emit(a.out, write_certificates(build_g(), reference_certificates()));
  } else if (a.what == "embedding") {
    emit(a.out, write_embedding(build_g(), canonical_embedding_g()));
  } else {
    throw CLI::ValidationError("build", "unknown object '" + a.what + "'");
  }
  return kOk;
}

// --- verification commands ---------------------------------------------------

int run_verify_certificates(const std::string& graph_path, const std::string& certs_path, const std::string& automorphism) {
  const Graph g = load_graph(graph_path);
  const auto certs = load(certs_path, [&](std::string_view t) { return parse_certificates(t, g); });
  Permutation p = Permutation::identity(g.order());
  if (!automorphism.empty())
    p = parse_permutation(automorphism, g);
  else if (g.labels() == g_labels())
    p = sigma();
  if (!is_automorphism(g, p)) {
    std::cout << "automorphism: NOT an automorphism of the graph\n";
    return kCounterResult;
  }
  const auto table = non_edge_orbits(g, p);
  CoverageResult coverage;
  try {
    coverage = coverage_check(g, certs, table);
  } catch (const GraphError& e) {
    throw InputError(certs_path + ": " + e.what());
  }
  std::cout << format_coverage_report(g, table, coverage);
  bool ok = coverage.complete();
  for (const auto& c : coverage.certificates) ok = ok && c.verified;
  if (g == build_g() && p == sigma()) {
    const bool match = coverage.coverage == reference_coverage_table();
    std::cout << "matches reference table: " << (match ? "yes" : "NO") << "\n";
    ok = ok && match;
  }
  return ok ? kOk : kCounterResult;
}

int run_verify_maximal(const std::string& graph_path, const std::string& pattern, int jobs, bool deterministic,
                       const std::string& report_path) {
  const Graph g = load_graph(graph_path);
  const auto kind = pattern == "k6" ? ForbiddenPattern::k6 : ForbiddenPattern::petersen_family;
  const auto start = std::chrono::steady_clock::now();
  const auto result = verify_maximal(g, kind, deterministic ? 1 : jobs);
  std::string text = format_maximality_report(g, result, !deterministic);
  if (!deterministic) {
    std::ostringstream t;
    t.setf(std::ios::fixed);
    t.precision(3);
    t << "total: " << elapsed(start) << " s\n";
    text += t.str();
  }
  std::cout << text;
  if (!report_path.empty()) write_file(report_path, text);
  return result.passed() ? kOk : kCounterResult;
}

int run_find_minor(const std::string& pattern_arg, const std::string& host_path, const std::string& model_out) {
  const Graph pattern = load_pattern(pattern_arg);
  const Graph host = load_graph(host_path);
  SearchStats stats;
  const auto model = find_minor(pattern, host, &stats);
  std::cout << "search nodes: " << stats.nodes << "\n";
  if (!model) {
    std::cout << "no minor\n";
    return kCounterResult;
  }
  const std::string text = write_model(pattern, host, *model);
  if (!verify_model(pattern, host, *model)) {
    std::cout << "INVALID MODEL\n" << text;
    return kCounterResult;
  }
  std::cout << "minor found\n";
  if (model_out.empty())
    std::cout << text;
  else
    write_file(model_out, text);
  return kOk;
}

int run_check_embedding(const std::string& graph_path, const std::string& coords_path, int jobs) {
  const Graph g = load_graph(graph_path);
  const auto e = load(coords_path, [&](std::string_view t) { return parse_embedding(t, g); });
  if (auto defect = embedding_defect(g, e)) {
    std::cout << "embedding: INVALID (" << *defect << ")\n";
    return kCounterResult;
  }
  std::cout << "embedding: valid\n";
  const auto report = linkless_report(g, e, jobs);
  std::cout << format_linkless_report(g, report);
  return report.max_abs_lk == 0 ? kOk : kCounterResult;
}

int run_counts(const std::string& graph_path) {
  std::cout << format_count_report(count_report(load_graph(graph_path)));
  return kOk;
}

int run_family_check(int k, std::size_t samples, bool deep, int jobs, bool deterministic) {
  if (k < 1) throw CLI::ValidationError("family-check", "K must be at least 1");
  const auto member = build_family(k);
  const auto& r = member.report.counts;
  const bool counts_ok = r.n == 3 + 10 * k && r.m == 3 + 28 * k && r.slack_14_5_x5 == -27 && r.at_least_2n;
  std::cout << "H_" << k << "\n" << format_count_report(r);
  std::cout << "count identities: " << (counts_ok ? "hold" : "FAIL") << "\n";
  bool ok = counts_ok;
  if (deep) {
    const auto cross = cross_copy_non_edges(member);
    const auto picked = sample_edges(cross, samples);
    std::cout << "cross-copy non-edges: " << cross.size() << ", sampled: " << picked.size() << "\n";
    const auto result =
        k <= 2 ? verify_maximal(member.graph, ForbiddenPattern::k6, deterministic ? 1 : jobs, picked)
               : check_added_edges(member.graph, ForbiddenPattern::k6, picked, deterministic ? 1 : jobs);
    std::cout << format_maximality_report(member.graph, result, !deterministic);
    ok = ok && result.passed();
  }
  return ok ? kOk : kCounterResult;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximally linkless graph toolkit"};
  app.require_subcommand(1);

  BuildArgs build;
  auto* build_cmd = app.add_subcommand("build", "Write a constructed object (g, family K, apex N, petersen-family, certificates, embedding)");
  build_cmd->add_option("what", build.what, "Object to build")
      ->required()
      ->check(CLI::IsMember({"g", "family", "apex", "petersen-family", "certificates", "embedding"}));
  build_cmd->add_option("count", build.count, "K for family, N for apex");
  build_cmd->add_option("-o,--out", build.out, "Output file (stdout when omitted)");
  build_cmd->add_option("--out-dir", build.out_dir, "Output directory for multi-file objects");

  std::string graph_path, certs_path, coords_path, automorphism, pattern = "k6", report_path, model_out, pattern_arg;
  int jobs = 1;
  bool deterministic = false;

  auto* certs_cmd = app.add_subcommand("verify-certificates", "Check partition certificates and orbit coverage");
  certs_cmd->add_option("GRAPH", graph_path)->required();
  certs_cmd->add_option("CERTS", certs_path)->required();
  certs_cmd->add_option("--automorphism", automorphism, "Vertex images in label order, space separated");

  auto* max_cmd = app.add_subcommand("verify-maximal", "Search GRAPH and GRAPH+e for every non-edge e");
  max_cmd->add_option("GRAPH", graph_path)->required();
  max_cmd->add_option("--pattern", pattern)->check(CLI::IsMember({"k6", "petersen"}));
  auto* max_jobs = max_cmd->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  auto* max_det = max_cmd->add_flag("--deterministic", deterministic, "Omit timings; single worker");
  max_cmd->add_option("--report", report_path, "Also write the report to FILE");
  max_det->excludes(max_jobs);

  auto* find_cmd = app.add_subcommand("find-minor", "Search HOST for a PATTERN minor");
  find_cmd->add_option("PATTERN", pattern_arg, "Graph file or one of k4 k5 k6 c4 petersen")->required();
  find_cmd->add_option("HOST", graph_path)->required();
  find_cmd->add_option("--model-out", model_out);

  auto* emb_cmd = app.add_subcommand("check-embedding", "Validate coordinates and compute all linking numbers");
  emb_cmd->add_option("GRAPH", graph_path)->required();
  emb_cmd->add_option("COORDS", coords_path)->required();
  emb_cmd->add_option("--jobs", jobs)->check(CLI::PositiveNumber);

  auto* counts_cmd = app.add_subcommand("counts", "Vertex and edge counts with bound flags");
  counts_cmd->add_option("GRAPH", graph_path)->required();

  int family_k = 2;
  std::size_t samples = 10;
  bool deep = false;
  auto* family_cmd = app.add_subcommand("family-check", "Count identities for H_K; --deep adds K6 spot checks");
  family_cmd->add_option("K", family_k)->required();
  family_cmd->add_option("--samples", samples, "Cross-copy non-edges to test with --deep");
  family_cmd->add_flag("--deep", deep, "Run the slow minor searches");
  auto* fam_jobs = family_cmd->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  family_cmd->add_flag("--deterministic", deterministic)->excludes(fam_jobs);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*build_cmd) return run_build(build);
    if (*certs_cmd) return run_verify_certificates(graph_path, certs_path, automorphism);
    if (*max_cmd) return run_verify_maximal(graph_path, pattern, jobs, deterministic, report_path);
    if (*find_cmd) return run_find_minor(pattern_arg, graph_path, model_out);
    if (*emb_cmd) return run_check_embedding(graph_path, coords_path, jobs);
    if (*counts_cmd) return run_counts(graph_path);
    if (*family_cmd) return run_family_check(family_k, samples, deep, jobs, deterministic);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
