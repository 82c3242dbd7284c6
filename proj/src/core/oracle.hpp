#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "graph.hpp"

namespace mpex {

struct OracleBudget {
  std::uint64_t max_nodes = 10'000'000;
  double max_seconds = 60.0;
};

/// Result of the exact extremal-number search on K_{n_1..n_r}.
struct OracleResult {
  Int host_edges = 0;
  /// ex(host, kK_t); absent when the budget ran out first.
  std::optional<Int> value;
  std::optional<Int> deletions;
  /// Proven bounds on ex. Equal to value when exact.
  Int value_lower = 0;
  Int value_upper = 0;
  /// Edges of a kK_t-free spanning subgraph with value_lower edges.
  std::vector<Edge> extremal_example;
  std::uint64_t nodes_explored = 0;
  bool timed_out = false;
};

/// Hosts larger than this many edges are rejected by brute_force_ex.
inline constexpr int kMaxOracleEdges = 128;

/// Exact ex(K_{n_1..n_r}, kK_t) by iterative deepening on the number of
/// deleted edges, branching on the edges of a kK_t witness. Never throws on
/// budget exhaustion; inspect timed_out instead.
OracleResult brute_force_ex(const SizeMultiset& ns, int t, int k, const OracleBudget& budget = {});

/// Independent kK_t containment test: lists all t-subsets that are cliques
/// and searches for k pairwise disjoint ones. Only meant for tiny graphs.
bool naive_contains_packing(const MultipartiteGraph& g, int t, int k);

}  // namespace mpex
