#pragma once

#include <optional>
#include <string>
#include <vector>

#include "linkless/constructions.hpp"
#include "linkless/embedding.hpp"
#include "linkless/minor.hpp"

namespace linkless {

enum class ForbiddenPattern { k6, petersen_family };

struct EdgeCheck {
  Edge edge;
  bool found = false;        // pattern minor present in g + edge
  bool model_valid = false;  // returned model passed verify_model
  int family_index = 0;      // which forbidden graph matched (0 for K6)
  double seconds = 0;
};

struct MaximalityResult {
  ForbiddenPattern pattern = ForbiddenPattern::k6;
  bool base_searched = false;
  bool base_free = false;  // no forbidden minor in g itself
  double base_seconds = 0;
  std::vector<EdgeCheck> edges;

  bool passed() const;
  std::size_t found_count() const;
};

/// Searches g for the forbidden pattern(s), then g + e for every listed
/// non-edge (all non-edges when `edges` is empty). The per-edge searches are
/// independent and spread over `jobs` threads; results keep input order.
MaximalityResult verify_maximal(const Graph& g, ForbiddenPattern pattern, int jobs = 1,
                                std::vector<Edge> edges = {});

/// Same per-edge search, skipping the search in g itself.
MaximalityResult check_added_edges(const Graph& g, ForbiddenPattern pattern, const std::vector<Edge>& edges,
                                   int jobs = 1);

/// Non-edges of a family member joining non-triangle vertices of two
/// different copies of G.
std::vector<Edge> cross_copy_non_edges(const FamilyMember& member);

/// Evenly spaced sample of `count` items from `all`, deterministic.
std::vector<Edge> sample_edges(const std::vector<Edge>& all, std::size_t count);

// Plain-text reports with stable ordering. Wall times appear only when
// `timings` is set.
std::string format_count_report(const CountReport& r);
std::string format_coverage_report(const Graph& g, const OrbitTable& table, const CoverageResult& coverage);
std::string format_maximality_report(const Graph& g, const MaximalityResult& result, bool timings);
std::string format_linkless_report(const Graph& g, const LinklessReport& report);

}  // namespace linkless
