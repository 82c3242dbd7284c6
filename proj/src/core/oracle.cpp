#include "oracle.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <stdexcept>
#include <unordered_set>

#include "cliques.hpp"

namespace mpex {

namespace {

using Mask = unsigned __int128;

struct MaskHash {
  std::size_t operator()(Mask m) const noexcept {
    const auto lo = static_cast<std::uint64_t>(m);
    const auto hi = static_cast<std::uint64_t>(m >> 64);
    return std::hash<std::uint64_t>{}(lo ^ (hi * 0x9e3779b97f4a7c15ULL));
  }
};

struct BudgetExhausted {};

class DeletionSearch {
 public:
  DeletionSearch(const MultipartiteGraph& host, int t, int k, const OracleBudget& budget)
      : host_(host), t_(t), k_(k), budget_(budget), edges_(host.edges()),
        start_(std::chrono::steady_clock::now()) {
    const int n = host.vertex_count();
    edge_id_.assign(static_cast<std::size_t>(n) * n, -1);
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      edge_id_[edges_[i].u * n + edges_[i].v] = static_cast<int>(i);
    }
  }

  OracleResult run() {
    OracleResult out;
    out.host_edges = static_cast<Int>(edges_.size());

    // Greedy deletions give a feasible subgraph and an upper bound.
    MultipartiteGraph greedy = host_;
    int greedy_deletions = 0;
    while (auto w = find_disjoint_cliques(greedy, t_, k_)) {
      const Edge e = busiest_edge(greedy, *w);
      greedy.erase_edge(e.u, e.v);
      ++greedy_deletions;
    }
    int best_deletions = greedy_deletions;
    example_ = greedy;

    int refuted_below = lower_bound(host_);
    try {
      for (int limit = refuted_below; limit < best_deletions; ++limit) {
        memo_.clear();
        if (dfs(host_, 0, 0, limit)) {
          best_deletions = limit;
          break;
        }
        refuted_below = limit + 1;
      }
      refuted_below = best_deletions;
    } catch (const BudgetExhausted&) {
      out.timed_out = true;
    }

    out.nodes_explored = nodes_;
    out.value_lower = out.host_edges - best_deletions;
    out.value_upper = out.host_edges - refuted_below;
    out.extremal_example = example_.edges();
    if (!out.timed_out) {
      out.value = out.value_lower;
      out.deletions = best_deletions;
    }
    return out;
  }

 private:
  bool dfs(const MultipartiteGraph& g, Mask deleted, int depth, int limit) {
    if (++nodes_ > budget_.max_nodes) throw BudgetExhausted{};
    if ((nodes_ & 255) == 0) {
      const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
      if (elapsed.count() > budget_.max_seconds) throw BudgetExhausted{};
    }
    auto witness = find_disjoint_cliques(g, t_, k_);
    if (!witness) {
      example_ = g;
      return true;
    }
    if (depth == limit) return false;
    // The depth of a node equals the popcount of its mask, so a mask that
    // already failed under this limit fails again.
    if (memo_.contains(deleted)) return false;
    if (depth + lower_bound(g) > limit) {
      memo_.insert(deleted);
      return false;
    }
    for (const Edge& e : witness_edges(*witness)) {
      const int id = edge_id_[e.u * host_.vertex_count() + e.v];
      MultipartiteGraph next = g;
      next.erase_edge(e.u, e.v);
      if (dfs(next, deleted | (Mask{1} << id), depth + 1, limit)) return true;
    }
    memo_.insert(deleted);
    return false;
  }

  std::vector<Edge> witness_edges(const PackingWitness& w) const {
    std::vector<Edge> out;
    for (const auto& c : w.cliques) {
      for (std::size_t i = 0; i < c.size(); ++i) {
        for (std::size_t j = i + 1; j < c.size(); ++j) out.emplace_back(c[i], c[j]);
      }
    }
    return out;
  }

  // Number of t-cliques through each edge of g, indexed by host edge id.
  std::vector<int> clique_degrees(const MultipartiteGraph& g, int& clique_count) const {
    std::vector<int> degree(edges_.size(), 0);
    const int n = host_.vertex_count();
    clique_count = 0;
    for_each_clique(g, t_, [&](std::span<const int> c) {
      ++clique_count;
      for (std::size_t i = 0; i < c.size(); ++i) {
        for (std::size_t j = i + 1; j < c.size(); ++j) ++degree[edge_id_[c[i] * n + c[j]]];
      }
      return true;
    });
    return degree;
  }

  Edge busiest_edge(const MultipartiteGraph& g, const PackingWitness& w) const {
    int cliques = 0;
    const auto degree = clique_degrees(g, cliques);
    const int n = host_.vertex_count();
    Edge best;
    int best_degree = -1;
    for (const Edge& e : witness_edges(w)) {
      const int d = degree[edge_id_[e.u * n + e.v]];
      if (d > best_degree) {
        best_degree = d;
        best = e;
      }
    }
    return best;
  }

  // Every kK_t-free subgraph misses an edge of each witness in a family of
  // edge-disjoint witnesses. For k = 1 a deletion of edge e destroys at most
  // deg(e) cliques, which gives a second bound.
  int lower_bound(const MultipartiteGraph& g) const {
    MultipartiteGraph scratch = g;
    int disjoint = 0;
    while (auto w = find_disjoint_cliques(scratch, t_, k_)) {
      for (const Edge& e : witness_edges(*w)) scratch.erase_edge(e.u, e.v);
      ++disjoint;
    }
    if (k_ != 1) return disjoint;

    int cliques = 0;
    auto degree = clique_degrees(g, cliques);
    std::sort(degree.begin(), degree.end(), std::greater<>());
    int covered = 0;
    int needed = 0;
    while (covered < cliques) covered += degree[needed++];
    return std::max(disjoint, needed);
  }

  const MultipartiteGraph& host_;
  int t_;
  int k_;
  OracleBudget budget_;
  std::vector<Edge> edges_;
  std::vector<int> edge_id_;
  std::chrono::steady_clock::time_point start_;
  std::unordered_set<Mask, MaskHash> memo_;
  std::uint64_t nodes_ = 0;
  MultipartiteGraph example_;
};

}  // namespace

OracleResult brute_force_ex(const SizeMultiset& ns, int t, int k, const OracleBudget& budget) {
  if (t < 2) throw Error(ErrorCode::InvalidArgument, "t must be at least 2");
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be at least 1");
  if (ns.empty()) throw Error(ErrorCode::InvalidArity, "host needs at least one part");
  if (ns.pair_product_sum() > kMaxOracleEdges) {
    throw Error(ErrorCode::OutOfRange, "oracle hosts are limited to " +
                                           std::to_string(kMaxOracleEdges) + " edges");
  }
  const auto host = MultipartiteGraph::complete(ns);
  DeletionSearch search(host, t, k, budget);
  OracleResult result = search.run();

  auto example = MultipartiteGraph::edgeless(ns.values());
  for (const Edge& e : result.extremal_example) example.add_edge(e.u, e.v);
  if (naive_contains_packing(example, t, k)) {
    throw std::logic_error("oracle example for " + ns.to_string() + " contains kK_t");
  }
  return result;
}

bool naive_contains_packing(const MultipartiteGraph& g, int t, int k) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> cliques;
  std::vector<int> pick;
  std::function<void(int)> choose = [&](int from) {
    if (static_cast<int>(pick.size()) == t) {
      for (std::size_t i = 0; i < pick.size(); ++i) {
        for (std::size_t j = i + 1; j < pick.size(); ++j) {
          if (!g.adjacent(pick[i], pick[j])) return;
        }
      }
      cliques.push_back(pick);
      return;
    }
    for (int v = from; v < n; ++v) {
      pick.push_back(v);
      choose(v + 1);
      pick.pop_back();
    }
  };
  choose(0);

  std::vector<char> used(n, 0);
  std::function<bool(std::size_t, int)> pack = [&](std::size_t from, int need) {
    if (need == 0) return true;
    for (std::size_t i = from; i < cliques.size(); ++i) {
      const auto& c = cliques[i];
      if (std::any_of(c.begin(), c.end(), [&](int v) { return used[v] != 0; })) continue;
      for (int v : c) used[v] = 1;
      const bool ok = pack(i + 1, need - 1);
      for (int v : c) used[v] = 0;
      if (ok) return true;
    }
    return false;
  };
  return pack(0, k);
}

}  // namespace mpex
