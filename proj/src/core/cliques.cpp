#include "cliques.hpp"

namespace mpex {

namespace {

void require_t(int t) {
  if (t < 2) throw Error(ErrorCode::InvalidArgument, "clique order t must be at least 2");
}

// Depth-first extension of `current` by `need` more vertices from `cand`.
// Every vertex of cand is adjacent to all of current and larger than it.
bool extend(const MultipartiteGraph& g, const VertexSet& cand, int need,
            std::vector<int>& current,
            const std::function<bool(std::span<const int>)>& visit) {
  if (need == 0) return visit(current);
  if (cand.count() < need) return true;
  for (int u = cand.first(); u >= 0; u = cand.next(u + 1)) {
    current.push_back(u);
    const bool go_on = extend(g, cand & g.neighbors(u).above(u), need - 1, current, visit);
    current.pop_back();
    if (!go_on) return false;
  }
  return true;
}

// First t-clique (lexicographic) whose minimum vertex is v, inside `within`.
std::optional<std::vector<int>> first_clique_from(const MultipartiteGraph& g, int t, int v,
                                                  const VertexSet& within) {
  std::optional<std::vector<int>> found;
  std::vector<int> current{v};
  extend(g, g.neighbors(v).above(v) & within, t - 1, current, [&](std::span<const int> c) {
    found.emplace(c.begin(), c.end());
    return false;
  });
  return found;
}

class PackingSearch {
 public:
  PackingSearch(const MultipartiteGraph& g, int t) : g_(g), t_(t) {}

  bool search(VertexSet avail, int need) {
    if (need == 0) return true;
    if (avail.count() < need * t_) return false;
    if (hitting_set_bound(avail, need) < need) return false;

    // Drop leading vertices that lie in no clique; the first survivor is
    // the branching vertex.
    int v = avail.first();
    for (; v >= 0; v = avail.next(v + 1)) {
      if (first_clique_from(g_, t_, v, avail)) break;
      avail.erase(v);
    }
    if (v < 0) return false;

    bool done = false;
    std::vector<int> current{v};
    extend(g_, g_.neighbors(v).above(v) & avail, t_ - 1, current,
           [&](std::span<const int> clique) {
             VertexSet rest = avail;
             for (int u : clique) rest.erase(u);
             chosen_.emplace_back(clique.begin(), clique.end());
             if (search(rest, need - 1)) {
               done = true;
               return false;
             }
             chosen_.pop_back();
             return true;
           });
    if (done) return true;
    avail.erase(v);
    return search(avail, need);
  }

  std::vector<std::vector<int>> take() { return std::move(chosen_); }

 private:
  // Size of a greedily built vertex set meeting every clique inside avail,
  // capped at `need`. The packing number never exceeds it.
  int hitting_set_bound(const VertexSet& avail, int need) const {
    VertexSet rest = avail;
    int size = 0;
    while (size < need) {
      std::optional<std::vector<int>> clique;
      for (int v = rest.first(); v >= 0 && !clique; v = rest.next(v + 1)) {
        clique = first_clique_from(g_, t_, v, rest);
      }
      if (!clique) break;
      int pick = -1;
      int best_degree = -1;
      for (int u : *clique) {
        const int d = (g_.neighbors(u) & avail).count();
        if (d > best_degree) {
          best_degree = d;
          pick = u;
        }
      }
      rest.erase(pick);
      ++size;
    }
    return size;
  }

  const MultipartiteGraph& g_;
  int t_;
  std::vector<std::vector<int>> chosen_;
};

}  // namespace

void for_each_clique_in(const MultipartiteGraph& g, int t, const VertexSet& within,
                        const std::function<bool(std::span<const int>)>& visit) {
  require_t(t);
  std::vector<int> current;
  current.reserve(t);
  for (int v = within.first(); v >= 0; v = within.next(v + 1)) {
    current.assign(1, v);
    if (!extend(g, g.neighbors(v).above(v) & within, t - 1, current, visit)) return;
  }
}

void for_each_clique(const MultipartiteGraph& g, int t,
                     const std::function<bool(std::span<const int>)>& visit) {
  for_each_clique_in(g, t, g.all_vertices(), visit);
}

std::vector<std::vector<int>> enumerate_cliques(const MultipartiteGraph& g, int t) {
  std::vector<std::vector<int>> out;
  for_each_clique(g, t, [&](std::span<const int> c) {
    out.emplace_back(c.begin(), c.end());
    return true;
  });
  return out;
}

std::optional<PackingWitness> find_disjoint_cliques(const MultipartiteGraph& g, int t, int k) {
  require_t(t);
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be at least 1");
  PackingSearch search(g, t);
  if (!search.search(g.all_vertices(), k)) return std::nullopt;
  return PackingWitness{search.take()};
}

int max_packing_size(const MultipartiteGraph& g, int t) {
  require_t(t);
  int k = 0;
  while (find_disjoint_cliques(g, t, k + 1)) ++k;
  return k;
}

std::string check_witness(const MultipartiteGraph& g, int t, int k, const PackingWitness& w) {
  if (static_cast<int>(w.cliques.size()) != k) {
    return "expected " + std::to_string(k) + " cliques, got " + std::to_string(w.cliques.size());
  }
  VertexSet used;
  for (const auto& c : w.cliques) {
    if (static_cast<int>(c.size()) != t) return "clique of wrong size";
    for (std::size_t i = 0; i < c.size(); ++i) {
      const int u = c[i];
      if (u < 0 || u >= g.vertex_count()) return "vertex out of range";
      if (used.contains(u)) return "cliques share vertex " + std::to_string(u);
      used.insert(u);
      for (std::size_t j = i + 1; j < c.size(); ++j) {
        if (g.part_of(u) == g.part_of(c[j])) return "two clique vertices share a part";
        if (!g.adjacent(u, c[j])) {
          return "missing edge " + std::to_string(u) + " " + std::to_string(c[j]);
        }
      }
    }
  }
  return {};
}

}  // namespace mpex
