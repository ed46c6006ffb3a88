#include "linkless/minor.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace linkless {

namespace {

Bits neighbourhood(const Graph& g, Bits s) {
  Bits out = 0;
  for (Bits b = s; b != 0; b &= b - 1) out |= g.neighbors(std::countr_zero(b));
  return out;
}

}  // namespace

bool verify_model(const Graph& pattern, const Graph& host, const MinorModel& model) {
  if (static_cast<int>(model.branch_sets.size()) != pattern.order())
    throw GraphError("model has " + std::to_string(model.branch_sets.size()) + " branch sets for a pattern on " +
                     std::to_string(pattern.order()) + " vertices");
  for (const auto& s : model.branch_sets)
    if (!s.subset_of(host.vertices())) throw GraphError("branch set references a vertex outside the host");

  Bits used = 0;
  for (const auto& s : model.branch_sets) {
    if (s.empty() || (s.bits() & used) != 0) return false;
    used |= s.bits();
    if (!is_connected(host, s)) return false;
  }
  for (auto [x, y] : pattern.edges()) {
    const Bits reach_x = neighbourhood(host, model.branch_sets[static_cast<std::size_t>(x)].bits());
    if ((reach_x & model.branch_sets[static_cast<std::size_t>(y)].bits()) == 0) return false;
  }
  return true;
}

namespace {

// Greedy order over `within`: start at a vertex of maximum degree, then keep
// taking the vertex with most already-ordered neighbours (then higher degree,
// then lower index). Each component of `within` is finished before the next.
std::vector<int> connected_order(const Graph& g, Bits within) {
  std::vector<int> order;
  Bits placed = 0;
  while ((within & ~placed) != 0) {
    int best = -1;
    int best_links = -1;
    int best_degree = -1;
    for (Bits b = within & ~placed; b != 0; b &= b - 1) {
      const int v = std::countr_zero(b);
      const int links = std::popcount(g.neighbors(v) & placed);
      const int deg = std::popcount(g.neighbors(v));
      if (links > best_links || (links == best_links && deg > best_degree)) {
        best = v;
        best_links = links;
        best_degree = deg;
      }
    }
    placed |= bit(best);
    order.push_back(best);
  }
  return order;
}

class BranchSetSearch {
public:
  BranchSetSearch(const Graph& pattern, const Graph& host, SearchStats* stats)
      : pattern_(pattern), host_(host), stats_(stats), p_(pattern.order()) {
    pattern_degrees_ = degree_sequence(pattern);
    pattern_order_ = connected_order(pattern, pattern.vertices().bits());
    build_order();
    parts_.assign(static_cast<std::size_t>(p_), 0);
    undecided_ = host.vertices().bits();
  }

  std::optional<MinorModel> run() {
    if (dfs(0)) return result_;
    return std::nullopt;
  }

private:
  void build_order() {
    auto comps = components(host_);
    std::stable_sort(comps.begin(), comps.end(), [](VertexSet a, VertexSet b) { return a.size() > b.size(); });
    for (VertexSet comp : comps) {
      component_at_.push_back({static_cast<int>(order_.size()), comp.bits()});
      auto part = connected_order(host_, comp.bits());
      order_.insert(order_.end(), part.begin(), part.end());
    }
    component_at_.push_back({static_cast<int>(order_.size()), 0});
  }

  bool dfs(int pos) {
    if (stats_ != nullptr) ++stats_->nodes;
    if (pos == static_cast<int>(order_.size())) return opened_ == p_ && check_leaf();

    // At the start of a component, optionally drop all of it.
    auto comp = std::find_if(component_at_.begin(), component_at_.end(),
                             [pos](const auto& c) { return c.first == pos; });
    if (comp != component_at_.end()) {
      if (try_place(pos)) return true;
      const Bits members = comp->second;
      const int next = std::next(comp)->first;
      undecided_ &= ~members;
      bool found = feasible() && dfs(next);
      undecided_ |= members;
      return found;
    }
    return try_place(pos);
  }

  bool try_place(int pos) {
    const int v = order_[static_cast<std::size_t>(pos)];
    undecided_ &= ~bit(v);
    for (int j = 0; j < opened_; ++j) {
      auto& part = parts_[static_cast<std::size_t>(j)];
      part |= bit(v);
      bool found = feasible() && dfs(pos + 1);
      part &= ~bit(v);
      if (found) return true;
    }
    if (opened_ < p_) {
      parts_[static_cast<std::size_t>(opened_)] = bit(v);
      ++opened_;
      bool found = feasible() && dfs(pos + 1);
      --opened_;
      parts_[static_cast<std::size_t>(opened_)] = 0;
      if (found) return true;
    }
    undecided_ |= bit(v);
    return false;
  }

  bool feasible() {
    if (opened_ + std::popcount(undecided_) < p_) return false;

    std::array<Bits, kMaxVertices> region{};
    for (int j = 0; j < opened_; ++j) {
      const Bits part = parts_[static_cast<std::size_t>(j)];
      const Bits r = reach(host_, part & (~part + 1), part | undecided_);
      if ((part & ~r) != 0) return false;
      region[static_cast<std::size_t>(j)] = r;
    }

    const int unopened = p_ - opened_;
    std::array<int, kMaxVertices> bound{};
    for (int j = 0; j < opened_; ++j) {
      const Bits r = region[static_cast<std::size_t>(j)];
      const Bits touch = r | neighbourhood(host_, r);
      int count = 0;
      for (int i = 0; i < opened_; ++i)
        if (i != j && (region[static_cast<std::size_t>(i)] & touch) != 0) ++count;
      if ((r & undecided_) != 0) count += unopened;
      bound[static_cast<std::size_t>(j)] = count;
    }
    for (int j = opened_; j < p_; ++j) bound[static_cast<std::size_t>(j)] = p_ - 1;
    std::sort(bound.begin(), bound.begin() + p_, std::greater<>());
    for (int i = 0; i < p_; ++i)
      if (bound[static_cast<std::size_t>(i)] < pattern_degrees_[static_cast<std::size_t>(i)]) return false;
    return true;
  }

  bool check_leaf() {
    if (stats_ != nullptr) ++stats_->leaves;
    quotient_.assign(static_cast<std::size_t>(p_), 0);
    for (int i = 0; i < p_; ++i) {
      const Bits nb = neighbourhood(host_, parts_[static_cast<std::size_t>(i)]);
      for (int j = 0; j < p_; ++j)
        if (i != j && (nb & parts_[static_cast<std::size_t>(j)]) != 0) quotient_[static_cast<std::size_t>(i)] |= bit(j);
    }
    int quotient_edges = 0;
    for (Bits row : quotient_) quotient_edges += std::popcount(row);
    if (quotient_edges / 2 < pattern_.size()) return false;
    // roomy_[d] = quotient vertices of degree at least d
    roomy_.assign(static_cast<std::size_t>(p_) + 1, 0);
    for (int q = 0; q < p_; ++q)
      for (int d = 0; d <= std::popcount(quotient_[static_cast<std::size_t>(q)]) && d <= p_; ++d)
        roomy_[static_cast<std::size_t>(d)] |= bit(q);
    image_.assign(static_cast<std::size_t>(p_), -1);
    if (!embed(0, 0)) return false;
    result_.branch_sets.clear();
    for (int x = 0; x < p_; ++x)
      result_.branch_sets.emplace_back(parts_[static_cast<std::size_t>(image_[static_cast<std::size_t>(x)])]);
    return true;
  }

  // Spanning subgraph embedding of the pattern into the quotient graph. The
  // next pattern vertex is the one with fewest candidates; a wipe-out
  // anywhere fails the branch.
  bool embed(int k, Bits used) {
    if (k == p_) return true;
    int x = -1;
    Bits best = 0;
    int best_count = kMaxVertices + 1;
    for (int y = 0; y < p_; ++y) {
      if (image_[static_cast<std::size_t>(y)] >= 0) continue;
      const Bits c = candidates(y, used);
      const int count = std::popcount(c);
      if (count == 0) return false;
      if (count < best_count) {
        x = y;
        best = c;
        best_count = count;
      }
    }
    for (Bits cand = best; cand != 0; cand &= cand - 1) {
      const int q = std::countr_zero(cand);
      image_[static_cast<std::size_t>(x)] = q;
      if (embed(k + 1, used | bit(q))) return true;
      image_[static_cast<std::size_t>(x)] = -1;
    }
    return false;
  }

  Bits candidates(int x, Bits used) const {
    Bits cand = roomy_[static_cast<std::size_t>(degree(pattern_, x))] & ~used;
    for (Bits nb = pattern_.neighbors(x); nb != 0 && cand != 0; nb &= nb - 1) {
      const int img = image_[static_cast<std::size_t>(std::countr_zero(nb))];
      if (img >= 0) cand &= quotient_[static_cast<std::size_t>(img)];
    }
    // Room for the still-unmapped pattern neighbours.
    int pending = 0;
    for (Bits nb = pattern_.neighbors(x); nb != 0; nb &= nb - 1)
      if (image_[static_cast<std::size_t>(std::countr_zero(nb))] < 0) ++pending;
    Bits ok = 0;
    for (Bits c = cand; c != 0; c &= c - 1) {
      const int q = std::countr_zero(c);
      if (std::popcount(quotient_[static_cast<std::size_t>(q)] & ~used) >= pending) ok |= bit(q);
    }
    return ok;
  }

  const Graph& pattern_;
  const Graph& host_;
  SearchStats* stats_;
  int p_;
  std::vector<int> pattern_degrees_;
  std::vector<int> pattern_order_;
  std::vector<int> order_;
  std::vector<std::pair<int, Bits>> component_at_;
  std::vector<Bits> parts_;
  int opened_ = 0;
  Bits undecided_ = 0;
  std::vector<Bits> quotient_;
  std::vector<Bits> roomy_;
  std::vector<int> image_;
  MinorModel result_;
};

}  // namespace

std::optional<MinorModel> find_minor(const Graph& pattern, const Graph& host, SearchStats* stats) {
  if (pattern.order() == 0) return MinorModel{};
  if (pattern.order() > host.order() || pattern.size() > host.size()) return std::nullopt;
  return BranchSetSearch(pattern, host, stats).run();
}

std::optional<MinorModel> has_k6_minor(const Graph& g, SearchStats* stats) {
  static const Graph k6 = complete_graph(6);
  return find_minor(k6, g, stats);
}

CertificateResult verify_partition_certificate(const Graph& g, const PartitionCertificate& cert) {
  if (cert.parts.size() != 6)
    throw GraphError("certificate must have exactly 6 parts, got " + std::to_string(cert.parts.size()));
  Bits covered = 0;
  for (const auto& part : cert.parts) {
    if (part.empty()) throw GraphError("certificate has an empty part");
    if (!part.subset_of(g.vertices())) throw GraphError("certificate part references a vertex outside the graph");
    if ((part.bits() & covered) != 0) throw GraphError("certificate parts overlap");
    covered |= part.bits();
  }
  if (covered != g.vertices().bits()) throw GraphError("certificate parts do not cover every vertex");

  auto name = [&](VertexSet s) {
    std::string out;
    for (int v : s.members()) out += (out.empty() ? "" : " ") + g.label(v);
    return "{" + out + "}";
  };

  CertificateResult result;
  for (const auto& part : cert.parts)
    if (!is_connected(g, part)) result.failures.push_back("part " + name(part) + " is not connected");
  for (std::size_t i = 0; i < cert.parts.size(); ++i)
    for (std::size_t j = i + 1; j < cert.parts.size(); ++j) {
      const bool joined = (neighbourhood(g, cert.parts[i].bits()) & cert.parts[j].bits()) != 0;
      if (i == 0 && j == 1) {
        if (joined) result.failures.push_back("distinguished parts " + name(cert.parts[0]) + " and " +
                                              name(cert.parts[1]) + " are already adjacent");
      } else if (!joined) {
        result.failures.push_back("parts " + name(cert.parts[i]) + " and " + name(cert.parts[j]) + " are not adjacent");
      }
    }
  result.verified = result.failures.empty();
  if (result.verified) {
    for (int u : cert.parts[0].members())
      for (int v : cert.parts[1].members()) result.eliminated.emplace_back(std::min(u, v), std::max(u, v));
    std::sort(result.eliminated.begin(), result.eliminated.end());
  }
  return result;
}

std::vector<Graph> petersen_family() {
  // Y-Delta is applied only where the three neighbours are pairwise
  // non-adjacent; elsewhere it would merge edges and leave the family.
  std::map<std::string, Graph> seen;
  std::vector<Graph> frontier{complete_graph(6)};
  seen.emplace(canonical_form(frontier.front()), frontier.front());
  while (!frontier.empty()) {
    std::vector<Graph> next;
    auto offer = [&](Graph h) {
      // Fresh labels keep every member on v0..v(n-1).
      Graph clean = Graph::from_index_edges(numbered_labels(h.order(), "v"), h.edges());
      if (seen.emplace(canonical_form(clean), clean).second) next.push_back(std::move(clean));
    };
    for (const auto& g : frontier) {
      for (const auto& t : triangles(g)) offer(delta_y(g, t));
      for (int v = 0; v < g.order(); ++v) {
        if (degree(g, v) != 3) continue;
        auto nb = VertexSet(g.neighbors(v)).members();
        if (g.adjacent(nb[0], nb[1]) || g.adjacent(nb[1], nb[2]) || g.adjacent(nb[0], nb[2])) continue;
        offer(y_delta(g, v));
      }
    }
    frontier = std::move(next);
  }
  std::vector<std::pair<std::string, Graph>> ordered(seen.begin(), seen.end());
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const auto& a, const auto& b) { return a.second.order() < b.second.order(); });
  std::vector<Graph> out;
  for (auto& [form, g] : ordered) out.push_back(std::move(g));
  return out;
}

std::optional<LinkedWitness> is_intrinsically_linked(const Graph& g, const std::vector<Graph>& family) {
  for (std::size_t i = 0; i < family.size(); ++i)
    if (auto model = find_minor(family[i], g)) return LinkedWitness{static_cast<int>(i), std::move(*model)};
  return std::nullopt;
}

std::optional<LinkedWitness> is_intrinsically_linked(const Graph& g) {
  static const std::vector<Graph> family = petersen_family();
  return is_intrinsically_linked(g, family);
}

}  // namespace linkless
