#include <doctest.h>

#include <random>
#include <vector>

#include "../naive.hpp"
#include "core/cliques.hpp"
#include "core/construct.hpp"
#include "core/error.hpp"
#include "core/graph.hpp"

using namespace mpex;

namespace {

naive::Graph to_naive(const MultipartiteGraph& g) {
  naive::Graph h(g.vertex_count());
  for (const Edge& e : g.edges()) h.add(e.u, e.v);
  return h;
}

MultipartiteGraph random_subgraph(const MultipartiteGraph& host, std::mt19937& rng, double keep) {
  std::bernoulli_distribution coin(keep);
  std::vector<Edge> drop;
  for (const Edge& e : host.edges())
    if (!coin(rng)) drop.push_back(e);
  return host.remove_edges(drop);
}

}  // namespace

TEST_CASE("complete multipartite edge counts") {
  CHECK(MultipartiteGraph::complete({2, 2}).edge_count() == 4);
  CHECK(MultipartiteGraph::complete({2, 2, 2}).edge_count() == 12);
  CHECK(MultipartiteGraph::complete({1, 2, 3, 4}).edge_count() == 35);
  const auto g = MultipartiteGraph::complete({3, 1, 2});
  CHECK(g.part_sizes()[0] == 1);
  CHECK(g.part_of(0) == 0);
  CHECK(g.part_of(1) == 1);
  CHECK(g.part_of(5) == 2);
  CHECK_FALSE(g.adjacent(1, 2));
  CHECK(g.adjacent(0, 5));
  CHECK_THROWS_AS(MultipartiteGraph::complete(SizeMultiset({0, 2})), Error);
}

TEST_CASE("remove_edges has value semantics") {
  const auto k22 = MultipartiteGraph::complete({2, 2});
  const std::vector<Edge> one{{0, 2}};
  const auto g = k22.remove_edges(one);
  CHECK(g.edge_count() == 3);
  CHECK(k22.edge_count() == 4);

  const auto oct = MultipartiteGraph::complete({2, 2, 2});
  CHECK(oct.remove_edges(oct.edges()).edge_count() == 0);

  const auto tri = MultipartiteGraph::complete({1, 1, 1});
  const std::vector<Edge> all{{0, 1}, {1, 2}, {0, 2}};
  CHECK(tri.remove_edges(all).edge_count() == 0);

  const std::vector<Edge> bad{{0, 1}};
  try {
    k22.remove_edges(bad);
    FAIL("expected NotAnEdge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAnEdge);
  }
  const std::vector<Edge> twice{{0, 2}, {0, 2}};
  CHECK_THROWS_AS(k22.remove_edges(twice), Error);
}

TEST_CASE("clique enumeration") {
  const auto oct = MultipartiteGraph::complete({2, 2, 2});
  const auto tris = enumerate_cliques(oct, 3);
  CHECK(tris.size() == 8);
  CHECK(std::is_sorted(tris.begin(), tris.end()));
  CHECK(tris.front() == std::vector<int>{0, 2, 4});
  CHECK(enumerate_cliques(MultipartiteGraph::complete({2, 2}), 3).empty());
  CHECK(enumerate_cliques(MultipartiteGraph::complete({1, 1, 1, 1}), 4).size() == 1);
  CHECK(enumerate_cliques(MultipartiteGraph::complete({1, 2, 3}), 2).size() == 11);
}

TEST_CASE("packing detector examples") {
  const auto oct = MultipartiteGraph::complete({2, 2, 2});
  const auto w = find_disjoint_cliques(oct, 3, 2);
  REQUIRE(w);
  CHECK(check_witness(oct, 3, 2, *w).empty());
  CHECK_FALSE(find_disjoint_cliques(MultipartiteGraph::complete({1, 1, 1}), 3, 2));
  const auto c = build_lower_bound_graph({2, 2, 2}, 3, 2);
  CHECK_FALSE(find_disjoint_cliques(c.graph, 3, 2));

  CHECK(max_packing_size(oct, 3) == 2);
  CHECK(max_packing_size(MultipartiteGraph::complete({2, 2}), 3) == 0);
  CHECK(max_packing_size(MultipartiteGraph::complete({3, 3, 3}), 3) == 3);
  CHECK(max_packing_size(MultipartiteGraph::complete({3, 3, 3, 3}), 3) == 4);
}

TEST_CASE("check_witness rejects bad witnesses") {
  const auto oct = MultipartiteGraph::complete({2, 2, 2});
  CHECK_FALSE(check_witness(oct, 3, 2, PackingWitness{{{0, 2, 4}, {0, 3, 5}}}).empty());
  CHECK_FALSE(check_witness(oct, 3, 2, PackingWitness{{{0, 1, 4}, {2, 3, 5}}}).empty());
  CHECK_FALSE(check_witness(oct, 3, 2, PackingWitness{{{0, 2, 4}}}).empty());
  CHECK(check_witness(oct, 3, 2, PackingWitness{{{0, 2, 4}, {1, 3, 5}}}).empty());
}

TEST_CASE("detector agrees with naive search on random subgraphs") {
  std::mt19937 rng(12345);
  const std::vector<std::vector<Int>> hosts{
      {2, 2, 2}, {1, 2, 3}, {2, 2, 2, 2}, {3, 3, 3}, {1, 1, 2, 2, 3}, {2, 3, 3, 4}};
  for (const auto& sizes : hosts) {
    const auto host = MultipartiteGraph::complete(SizeMultiset(sizes));
    for (int trial = 0; trial < 60; ++trial) {
      const auto g = random_subgraph(host, rng, 0.5 + 0.5 * (trial % 5) / 5.0);
      const auto ng = to_naive(g);
      for (int t = 2; t <= 4; ++t) {
        CHECK((find_disjoint_cliques(g, t, 1).has_value()) == !enumerate_cliques(g, t).empty());
        CHECK(enumerate_cliques(g, t).size() == naive::cliques(ng, t).size());
        for (int k = 1; k <= 4; ++k) {
          const auto w = find_disjoint_cliques(g, t, k);
          CHECK(w.has_value() == naive::contains_kkt(ng, t, k));
          if (w) CHECK(check_witness(g, t, k, *w).empty());
        }
      }
    }
  }
}

TEST_CASE("packing absence is monotone under edge removal") {
  std::mt19937 rng(777);
  const auto c = build_lower_bound_graph({2, 3, 3, 4}, 3, 2);
  REQUIRE_FALSE(find_disjoint_cliques(c.graph, 3, 2));
  for (int trial = 0; trial < 100; ++trial) {
    CHECK_FALSE(find_disjoint_cliques(random_subgraph(c.graph, rng, 0.8), 3, 2));
  }
}

TEST_CASE("detector is deterministic") {
  const auto g = MultipartiteGraph::complete({3, 3, 3, 3});
  const auto a = find_disjoint_cliques(g, 3, 3);
  const auto b = find_disjoint_cliques(g, 3, 3);
  REQUIRE(a);
  CHECK(*a == *b);
}

TEST_CASE("edge list round trip") {
  std::mt19937 rng(99);
  const std::vector<std::vector<Int>> hosts{{1}, {2, 2}, {1, 2, 3}, {3, 3, 4, 5}, {1, 1, 1, 1, 1}};
  for (const auto& sizes : hosts) {
    const auto host = MultipartiteGraph::complete(SizeMultiset(sizes));
    for (int trial = 0; trial < 20; ++trial) {
      const auto g = random_subgraph(host, rng, 0.6);
      const auto text = write_edge_list(g);
      const auto back = parse_edge_list(text);
      CHECK(back == g);
      CHECK(write_edge_list(back) == text);
    }
  }
  CHECK(write_edge_list(MultipartiteGraph::complete({1, 2})) == "parts: 1,2\n0 1\n0 2\n");
}

TEST_CASE("edge list keeps part order as written") {
  const auto g = parse_edge_list("parts: 3,1\n0 3\n");
  CHECK(g.part_sizes()[0] == 3);
  CHECK(g.adjacent(0, 3));
  CHECK(write_edge_list(g) == "parts: 3,1\n0 3\n");
}

TEST_CASE("edge list parse errors") {
  const char* bad[] = {
      "",                        // no header
      "part: 1,2\n0 1\n",        // wrong header
      "parts: 1,0\n",            // zero part
      "parts: 2,2\n0 1\n",       // same part
      "parts: 2,2\n0 9\n",       // out of range
      "parts: 2,2\n2 0\n",       // u > v
      "parts: 2,2\n0 2\n0 2\n",  // duplicate
      "parts: 2,2\n0 x\n",       // junk
      "parts: 2,2\n0 2 3\n",     // extra token
  };
  for (const char* text : bad) {
    try {
      parse_edge_list(text);
      FAIL("accepted: " << text);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::Parse);
    }
  }
}
