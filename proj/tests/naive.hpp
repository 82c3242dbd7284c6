// Slow reference implementations used only by tests. Nothing here shares
// code with src/core beyond the plain value types.
#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace naive {

using Int = std::int64_t;

// f_t by trying every labelling of [r] with t-1 labels.
struct Ft {
  Int value = -1;
  std::vector<std::vector<int>> best;  // smallest maximizing block list
};

inline std::vector<std::vector<int>> blocks_of(const std::vector<int>& label, int blocks) {
  std::vector<std::vector<int>> out(blocks);
  for (int i = 0; i < static_cast<int>(label.size()); ++i) out[label[i]].push_back(i);
  std::sort(out.begin(), out.end());
  return out;
}

inline Ft ft(std::vector<Int> xs, int t) {
  std::sort(xs.begin(), xs.end());
  Ft res;
  if (t == 2) {
    res.value = 0;
    return res;
  }
  const int b = t - 1;
  const int r = static_cast<int>(xs.size());
  std::vector<int> label(r, 0);
  while (true) {
    std::vector<Int> sums(b, 0);
    std::vector<int> used(b, 0);
    for (int i = 0; i < r; ++i) {
      sums[label[i]] += xs[i];
      used[label[i]] = 1;
    }
    if (std::all_of(used.begin(), used.end(), [](int u) { return u == 1; })) {
      Int v = 0;
      for (int i = 0; i < b; ++i)
        for (int j = i + 1; j < b; ++j) v += sums[i] * sums[j];
      auto blocks = blocks_of(label, b);
      if (v > res.value || (v == res.value && blocks < res.best)) {
        res.value = v;
        res.best = std::move(blocks);
      }
    }
    int i = 0;
    while (i < r && ++label[i] == b) label[i++] = 0;
    if (i == r) break;
  }
  return res;
}

// Plain adjacency-matrix graph on <= 64 vertices.
struct Graph {
  int n = 0;
  std::vector<std::uint64_t> adj;
  explicit Graph(int n_) : n(n_), adj(n_, 0) {}
  void add(int u, int v) {
    adj[u] |= std::uint64_t{1} << v;
    adj[v] |= std::uint64_t{1} << u;
  }
  bool has(int u, int v) const { return (adj[u] >> v) & 1U; }
};

inline std::vector<std::uint64_t> cliques(const Graph& g, int t) {
  std::vector<std::uint64_t> out;
  std::vector<int> pick;
  std::function<void(int)> rec = [&](int from) {
    if (static_cast<int>(pick.size()) == t) {
      std::uint64_t m = 0;
      for (int v : pick) m |= std::uint64_t{1} << v;
      out.push_back(m);
      return;
    }
    for (int v = from; v < g.n; ++v) {
      bool ok = true;
      for (int u : pick) ok = ok && g.has(u, v);
      if (!ok) continue;
      pick.push_back(v);
      rec(v + 1);
      pick.pop_back();
    }
  };
  rec(0);
  return out;
}

inline bool has_packing(const std::vector<std::uint64_t>& cl, std::size_t from, int k,
                        std::uint64_t used) {
  if (k == 0) return true;
  for (std::size_t i = from; i < cl.size(); ++i) {
    if ((cl[i] & used) == 0 && has_packing(cl, i + 1, k - 1, used | cl[i])) return true;
  }
  return false;
}

inline bool contains_kkt(const Graph& g, int t, int k) {
  return has_packing(cliques(g, t), 0, k, 0);
}

struct Host {
  Graph g{0};
  std::vector<std::pair<int, int>> edges;
};

inline Host complete(const std::vector<Int>& sizes) {
  int n = 0;
  std::vector<int> part;
  for (std::size_t p = 0; p < sizes.size(); ++p)
    for (Int i = 0; i < sizes[p]; ++i) {
      part.push_back(static_cast<int>(p));
      ++n;
    }
  Host h;
  h.g = Graph(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (part[u] != part[v]) {
        h.g.add(u, v);
        h.edges.emplace_back(u, v);
      }
  return h;
}

// ex by checking every edge subset, largest first within each popcount.
inline Int ex(std::vector<Int> sizes, int t, int k) {
  std::sort(sizes.begin(), sizes.end());
  const Host h = complete(sizes);
  const int m = static_cast<int>(h.edges.size());
  Int best = -1;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    const int pc = std::popcount(mask);
    if (pc <= best) continue;
    Graph g(h.g.n);
    for (int e = 0; e < m; ++e)
      if ((mask >> e) & 1U) g.add(h.edges[e].first, h.edges[e].second);
    if (!contains_kkt(g, t, k)) best = pc;
  }
  return best;
}

}  // namespace naive
