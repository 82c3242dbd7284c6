#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "multiset.hpp"
#include "vertex_set.hpp"

namespace mpex {

struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  /// Stores the endpoints ordered so that u < v.
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Spanning subgraph of a complete multipartite graph. Vertex ids are
/// assigned part-contiguously in the stored part order; adjacency is kept
/// symmetric, loop-free and free of intra-part edges.
class MultipartiteGraph {
 public:
  MultipartiteGraph() = default;

  /// Edgeless graph on the given parts, in the given order.
  static MultipartiteGraph edgeless(std::span<const Int> part_sizes);
  /// K_{n_1..n_r} with parts in ascending order.
  static MultipartiteGraph complete(const SizeMultiset& ns);

  int vertex_count() const noexcept { return static_cast<int>(part_of_.size()); }
  int part_count() const noexcept { return static_cast<int>(part_sizes_.size()); }
  std::span<const Int> part_sizes() const noexcept { return part_sizes_; }
  int part_of(int v) const { return part_of_.at(v); }
  int part_begin(int p) const { return part_begin_.at(p); }
  int part_end(int p) const { return part_begin_.at(p + 1); }

  bool adjacent(int u, int v) const noexcept { return adj_[u].contains(v); }
  const VertexSet& neighbors(int v) const noexcept { return adj_[v]; }
  const VertexSet& all_vertices() const noexcept { return all_; }
  int degree(int v) const noexcept { return adj_[v].count(); }

  std::size_t edge_count() const noexcept;
  /// Edges sorted lexicographically by (u, v).
  std::vector<Edge> edges() const;

  /// Adds a cross-part edge. Throws InvalidArgument for loops, intra-part
  /// pairs or out-of-range ids; adding an existing edge is a no-op.
  void add_edge(int u, int v);
  /// Joins every vertex of `a` to every vertex of `b` lying in a different part.
  void join(const VertexSet& a, const VertexSet& b);
  void erase_edge(int u, int v) noexcept;

  /// Copy with the listed edges absent. Throws NotAnEdge if one is missing.
  MultipartiteGraph remove_edges(std::span<const Edge> edges) const;

  friend bool operator==(const MultipartiteGraph&, const MultipartiteGraph&) = default;

 private:
  std::vector<Int> part_sizes_;
  std::vector<int> part_begin_;
  std::vector<int> part_of_;
  std::vector<VertexSet> adj_;
  VertexSet all_;
};

/// Edge-list text: "parts: n_1,...,n_r" then one "u v" line per edge
/// (0-indexed, u < v), lexicographic order, each line newline-terminated.
std::string write_edge_list(const MultipartiteGraph& g);
MultipartiteGraph parse_edge_list(std::string_view text);

MultipartiteGraph read_edge_list_file(const std::string& path);
void write_edge_list_file(const MultipartiteGraph& g, const std::string& path);

}  // namespace mpex
