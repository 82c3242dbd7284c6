#pragma once

#include <optional>

#include "cliques.hpp"
#include "graph.hpp"
#include "turan_formulas.hpp"

namespace mpex {

struct ConstructionSpec {
  HostParams params;
  /// Maximizing partition of f_t(n_1 - (k-1), n_2, ..., n_r); a single
  /// block when t = 2.
  PartitionAssignment witness_partition;
  int v0_size = 0;
};

struct Construction {
  MultipartiteGraph graph;
  ConstructionSpec spec;
};

/// Lower-bound graph inside K_{n_1..n_r}: the first k-1 vertices of the
/// smallest part form V_0, joined to every vertex outside that part; the
/// remaining vertices form the complete (t-1)-partite graph given by the
/// f_t witness. Its edge count is (k-1)(n-n_1) + f_t(n_1-(k-1), n_2..n_r).
Construction build_lower_bound_graph(const SizeMultiset& ns, int t, int k);

/// K_{k-1} joined with T_2(n-k+1), as the complete multipartite graph with
/// k-1 singleton parts and two balanced classes.
MultipartiteGraph build_erdos_graph(Int n, int k);

struct Certificate {
  std::size_t edges_measured = 0;
  Int edges_claimed = 0;
  bool edge_count_ok = false;
  bool kkt_free = false;
  std::optional<PackingWitness> witness;
  bool spanning_ok = false;

  bool passed() const noexcept { return edge_count_ok && kkt_free && spanning_ok; }
};

/// Checks edge count, kK_t-freeness (exact search) and that no edge joins
/// two vertices of one part. Failures are reported, never thrown.
Certificate certify(const MultipartiteGraph& g, int t, int k, Int claimed_edges);

}  // namespace mpex
