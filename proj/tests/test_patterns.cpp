#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "tilebench/patterns.hpp"

using namespace tilebench;

TEST_CASE("pattern catalog") {
  const Pattern h = Pattern::H();
  CHECK(h.order() == 6);
  CHECK(h.graph().size() == 5);
  for (const char* e : {"uv", "ua", "ub", "vc", "vd"})
    CHECK(h.graph().adjacent(h.index_of(std::string(1, e[0])), h.index_of(std::string(1, e[1]))));
  const Pattern hh = Pattern::Hhat();
  CHECK(hh.order() == 7);
  CHECK(hh.graph().size() == 7);
  CHECK(hh.graph().adjacent(hh.index_of("w"), hh.index_of("b")));
  CHECK(hh.graph().adjacent(hh.index_of("w"), hh.index_of("c")));
  CHECK(Pattern::complete_bipartite(3, 3).graph().size() == 9);
  CHECK(parse_pattern("K{3,3}") == Pattern::complete_bipartite(3, 3));
  CHECK(parse_pattern("K2,5").order() == 7);
  CHECK(parse_pattern("Hhat") == Pattern::Hhat());
  CHECK_THROWS_AS(parse_pattern("Q"), std::invalid_argument);
  CHECK_THROWS_AS(h.index_of("w"), std::invalid_argument);
  CHECK_THROWS_AS(Pattern::custom(empty_graph(3)), std::invalid_argument);
  CHECK_THROWS_AS(Pattern::complete_bipartite(9, 8), std::invalid_argument);
}

TEST_CASE("embedding validation") {
  const SmallGraph k33 = complete_bipartite_graph(3, 3);
  CHECK(is_copy({Pattern::H(), {0, 3, 4, 5, 1, 2}}, k33));
  CHECK(embedding_error({Pattern::H(), {0, 1, 4, 5, 3, 2}}, k33));
  CHECK(embedding_error({Pattern::H(), {0, 3, 4, 5, 1, 1}}, k33));
  CHECK(embedding_error({Pattern::H(), {0, 3, 4, 5, 1}}, k33));
  CHECK(embedding_error({Pattern::H(), {0, 3, 4, 5, 1, 9}}, k33));
  const Embedding e{Pattern::K2(), {4, 1}};
  CHECK(image_vertices(e) == std::vector<Vertex>{1, 4});
  CHECK(image_edges(e) == std::vector<Edge>{{1, 4}});
}

TEST_CASE("copy enumeration examples") {
  CHECK(enumerate_copies(Pattern::H(), complete_bipartite_graph(3, 3)).size() == 9);
  CHECK(enumerate_copies(Pattern::K2(), complete_graph(3)).size() == 3);
  CHECK(enumerate_copies(Pattern::H(), complete_bipartite_graph(2, 10)).empty());
  CHECK(enumerate_copies(Pattern::H(), complete_graph(8), 5).size() == 5);
}

TEST_CASE("copy enumeration matches the naive oracle") {
  std::mt19937_64 rng(2024);
  const std::vector<Pattern> patterns{Pattern::H(), Pattern::Hhat(), Pattern::K2(), Pattern::complete_bipartite(2, 2),
                                      Pattern::custom(graph_from_edges(4, std::vector<Edge>{{0, 1}}), "K2+2K1")};
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const SmallGraph g = oracle::random_graph(n, 0.3 + 0.5 * (trial % 5) / 4.0, rng);
    for (const auto& f : patterns) {
      const auto copies = enumerate_copies(f, g);
      CHECK(copies.size() == oracle::distinct_copies(f.graph(), g).size());
      for (const auto& c : copies) CHECK(is_copy(c, g));
    }
  }
}

TEST_CASE("covering numbers and rigidity") {
  CHECK(covering_number(Pattern::H(), 1) == 2);
  CHECK(covering_number(Pattern::H(), 2) == 6);
  CHECK(covering_number(Pattern::complete_bipartite(3, 3), 1) == 3);
  CHECK_THROWS_AS(covering_number(Pattern::H(), 3), std::invalid_argument);
  CHECK(is_rigid(Pattern::complete_bipartite(3, 3), 3, 3));
  CHECK_FALSE(is_rigid(Pattern::H(), 3, 3));
  CHECK(is_rigid(Pattern::K2(), 1, 1));
  CHECK_THROWS_AS(is_rigid(Pattern::H(), 4, 2), std::invalid_argument);

  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 8);
    SmallGraph g = oracle::random_graph(n, 0.4, rng);
    if (g.size() == 0) continue;
    const Pattern f = Pattern::custom(g);
    const int t1 = covering_number(f, 1);
    CHECK(t1 == oracle::naive_vertex_cover(g));
    CHECK(t1 <= covering_number(f, 2));
    CHECK(covering_number(f, 2) == n);
    GraphBuilder b(g);
    const Vertex u = static_cast<Vertex>(rng() % n);
    Vertex v = static_cast<Vertex>(rng() % n);
    if (u == v) v = (v + 1) % n;
    b.add_edge(u, v);
    CHECK(covering_number(Pattern::custom(std::move(b).build()), 1) >= t1);
  }
}

TEST_CASE("automorphism orbits") {
  const Pattern h = Pattern::H();
  CHECK(automorphism_orbits(h) == std::vector<int>{0, 0, 2, 2, 2, 2});
  const auto k23 = automorphism_orbits(Pattern::complete_bipartite(2, 3));
  CHECK(k23 == std::vector<int>{0, 0, 2, 2, 2});
}
