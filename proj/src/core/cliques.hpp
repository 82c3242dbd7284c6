#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "graph.hpp"

namespace mpex {

/// k pairwise vertex-disjoint t-cliques, each sorted ascending, listed in
/// the order the search found them (ascending minimum vertex).
struct PackingWitness {
  std::vector<std::vector<int>> cliques;

  friend bool operator==(const PackingWitness&, const PackingWitness&) = default;
};

/// Calls visit(clique) for every t-clique of g in lexicographic vertex
/// order; stops early when visit returns false.
void for_each_clique(const MultipartiteGraph& g, int t,
                     const std::function<bool(std::span<const int>)>& visit);

/// Same, restricted to cliques inside `within`.
void for_each_clique_in(const MultipartiteGraph& g, int t, const VertexSet& within,
                        const std::function<bool(std::span<const int>)>& visit);

std::vector<std::vector<int>> enumerate_cliques(const MultipartiteGraph& g, int t);

/// Exact decision: returns k disjoint t-cliques if g contains kK_t.
std::optional<PackingWitness> find_disjoint_cliques(const MultipartiteGraph& g, int t, int k);

/// Largest m with mK_t contained in g.
int max_packing_size(const MultipartiteGraph& g, int t);

/// Empty string if `w` is a valid kK_t copy in g, otherwise a description
/// of the first violated condition.
std::string check_witness(const MultipartiteGraph& g, int t, int k, const PackingWitness& w);

}  // namespace mpex
