#include "construct.hpp"

#include "partition_opt.hpp"

namespace mpex {

Construction build_lower_bound_graph(const SizeMultiset& ns, int t, int k) {
  HostParams params(ns, t, k);
  const int r = static_cast<int>(ns.size());
  if (r < t) {
    throw Error(ErrorCode::OutOfRange, "construction needs r >= t, got r = " +
                                           std::to_string(r) + ", t = " + std::to_string(t));
  }
  if (ns[0] < k) {
    throw Error(ErrorCode::OutOfRange, "construction needs n_1 >= k, got n_1 = " +
                                           std::to_string(ns[0]) + ", k = " + std::to_string(k));
  }
  const auto shifted = ns.with_value(0, ns[0] - (k - 1));
  PartitionAssignment blocks;
  if (t == 2) {
    std::vector<int> all(r);
    for (int i = 0; i < r; ++i) all[i] = i;
    blocks = PartitionAssignment(r, {all});
  } else {
    blocks = *f_value(shifted, t).witness;
  }

  auto g = MultipartiteGraph::edgeless(ns.values());
  const int v0_size = k - 1;
  const VertexSet v0 = VertexSet::range(0, v0_size);
  g.join(v0, g.all_vertices() - VertexSet::range(g.part_begin(0), g.part_end(0)));

  std::vector<VertexSet> block_vertices;
  for (const auto& block : blocks.blocks()) {
    VertexSet s;
    for (int part : block) s |= VertexSet::range(g.part_begin(part), g.part_end(part));
    block_vertices.push_back(s - v0);
  }
  for (std::size_t a = 0; a < block_vertices.size(); ++a) {
    for (std::size_t b = a + 1; b < block_vertices.size(); ++b) {
      g.join(block_vertices[a], block_vertices[b]);
    }
  }
  return Construction{std::move(g), ConstructionSpec{std::move(params), std::move(blocks), v0_size}};
}

MultipartiteGraph build_erdos_graph(Int n, int k) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be at least 1");
  if (n < Int{k} + 1) {
    throw Error(ErrorCode::OutOfRange, "K_{k-1} v T_2(n-k+1) needs n >= k + 1");
  }
  const Int m = n - (k - 1);
  std::vector<Int> parts(static_cast<std::size_t>(k - 1), 1);
  parts.push_back(m / 2);
  parts.push_back(m - m / 2);
  return MultipartiteGraph::complete(SizeMultiset(std::move(parts)));
}

Certificate certify(const MultipartiteGraph& g, int t, int k, Int claimed_edges) {
  Certificate c;
  c.edges_measured = g.edge_count();
  c.edges_claimed = claimed_edges;
  c.edge_count_ok = claimed_edges >= 0 && static_cast<std::size_t>(claimed_edges) == c.edges_measured;
  c.witness = find_disjoint_cliques(g, t, k);
  c.kkt_free = !c.witness.has_value();
  c.spanning_ok = true;
  for (const Edge& e : g.edges()) {
    if (g.part_of(e.u) == g.part_of(e.v)) c.spanning_ok = false;
  }
  return c;
}

}  // namespace mpex
