#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "racg/errors.hpp"
#include "racg/graph.hpp"

using namespace racg;

TEST_CASE("link returns exactly the neighbors") {
  auto c4 = SimplicialGraph::from_edges({{"a", "x"}, {"x", "b"}, {"b", "y"}, {"y", "a"}});
  CHECK(link(c4, "a") == std::set<std::string>{"x", "y"});

  auto k33 = fixtures::k33s1();
  CHECK(link(k33, "a") == std::set<std::string>{"ax1", "ay1", "az1"});

  auto path = SimplicialGraph::from_edges({{"a", "b"}, {"b", "c"}});
  CHECK(link(path, "a") == std::set<std::string>{"b"});

  CHECK_THROWS_AS((void)link(path, "zz"), Error);
}

TEST_CASE("double of small cycles") {
  auto c4 = SimplicialGraph::from_edges({{"a", "x"}, {"x", "b"}, {"b", "y"}, {"y", "a"}});
  auto d4 = double_over(c4, "a");
  CHECK(d4.graph.vertex_count() == 4);
  CHECK(are_isomorphic(d4.graph, c4));

  auto c5 = fixtures::cycle(5);
  auto d5 = double_over(c5, "v0");
  CHECK(d5.graph.vertex_count() == 6);
  CHECK(are_isomorphic(d5.graph, fixtures::cycle(6)));
  CHECK(d5.primed.size() == 2);
  CHECK(d5.correspondence.at("v2#1") == "v2");
}

TEST_CASE("doubling laws on random graphs") {
  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 40; ++trial) {
    auto g = oracles::random_graph(3 + static_cast<int>(rng() % 10), 0.35, rng);
    const bool tf = is_triangle_free(g);
    for (const auto& v : g.labels()) {
      auto d = double_over(g, v);
      const int lk = static_cast<int>(link(g, v).size());
      CHECK(d.graph.vertex_count() == 2 * (g.vertex_count() - 1) - lk);
      // folding: every edge of the double maps to an edge of g
      for (const auto& [p, q] : d.graph.edges()) {
        const auto& fp = d.correspondence.at(p);
        const auto& fq = d.correspondence.at(q);
        CHECK(g.has_edge(fp, fq));
      }
      if (tf) CHECK(is_triangle_free(d.graph));
    }
  }
}

TEST_CASE("nested doubling keeps labels collision-free") {
  auto c5 = fixtures::cycle(5);
  auto d1 = double_over(c5, "v0");
  auto d2 = double_over(d1.graph, "v2");
  std::set<std::string> labels(d2.graph.labels().begin(), d2.graph.labels().end());
  CHECK(static_cast<int>(labels.size()) == d2.graph.vertex_count());
  // a vertex doubled twice picks a fresh generation counter
  bool has_nested = false;
  for (const auto& l : labels) has_nested |= l.find("#") != l.rfind("#");
  CHECK(has_nested);
}

TEST_CASE("triangle detection") {
  auto k3 = SimplicialGraph::from_edges({{"a", "b"}, {"b", "c"}, {"a", "c"}});
  CHECK_FALSE(is_triangle_free(k3));
  CHECK(is_triangle_free(fixtures::k33s1()));
  CHECK(is_triangle_free(fixtures::mobius(4)));
}

TEST_CASE("induced subgraphs") {
  auto k33 = SimplicialGraph::from_edges({{"a", "x"}, {"a", "y"}, {"a", "z"},
                                          {"b", "x"}, {"b", "y"}, {"b", "z"},
                                          {"c", "x"}, {"c", "y"}, {"c", "z"}});
  auto sub = induced_subgraph(k33, {"a", "x"});
  CHECK(sub.vertex_count() == 2);
  CHECK(sub.edge_count() == 1);

  auto c5 = fixtures::cycle(5);
  auto sub2 = induced_subgraph(c5, {"v0", "v1", "v3"});
  CHECK(sub2.edge_count() == 1);
  CHECK(sub2.has_edge("v0", "v1"));

  auto m4 = fixtures::mobius(4);
  auto sub3 = induced_subgraph(m4, {"v0", "v1", "v4", "v5"});
  CHECK(sub3.edge_count() == 4);
  CHECK(are_isomorphic(sub3, fixtures::cycle(4)));

  CHECK_THROWS_AS((void)induced_subgraph(c5, {"nope"}), Error);
}

TEST_CASE("induced cycle enumeration") {
  auto c4 = fixtures::cycle(4);
  CHECK(enumerate_induced_cycles(c4, 4).size() == 1);

  auto c5 = fixtures::cycle(5);
  CHECK(enumerate_induced_cycles(c5, 4).empty());
  CHECK(enumerate_induced_cycles(c5, 5).size() == 1);

  auto m4 = fixtures::mobius(4);
  auto squares = enumerate_induced_cycles(m4, 4);
  REQUIRE(squares.size() == 4);
  // the four induced squares are {v_i, v_{i+1}, v_{i+5}, v_{i+4}}
  std::set<std::set<std::string>> expected;
  for (int i = 0; i < 4; ++i)
    expected.insert({"v" + std::to_string(i), "v" + std::to_string((i + 1) % 8),
                     "v" + std::to_string((i + 5) % 8), "v" + std::to_string((i + 4) % 8)});
  std::set<std::set<std::string>> got;
  for (const auto& c : squares) got.insert({c.vertices.begin(), c.vertices.end()});
  CHECK(got == expected);
}

TEST_CASE("cycle enumeration matches subset scan on random graphs") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    auto g = oracles::random_graph(4 + static_cast<int>(rng() % 5), 0.4, rng);
    const int max_len = 3 + static_cast<int>(rng() % 6);
    CHECK(static_cast<int>(enumerate_induced_cycles(g, max_len).size()) ==
          oracles::count_induced_cycles(g, max_len));
  }
}

TEST_CASE("graph construction rejects bad input") {
  CHECK_THROWS_AS((void)SimplicialGraph::from_edges({{"a", "a"}}), Error);
  CHECK_THROWS_AS((void)SimplicialGraph::from_edges({{"a", "b"}, {"b", "a"}}), Error);
}

TEST_CASE("isomorphism test distinguishes graphs") {
  CHECK(are_isomorphic(fixtures::cycle(6), fixtures::cycle(6)));
  CHECK_FALSE(are_isomorphic(fixtures::cycle(6), fixtures::cycle(5)));
  CHECK_FALSE(are_isomorphic(
      SimplicialGraph::from_edges({{"a", "b"}, {"c", "d"}, {"b", "c"}}),
      SimplicialGraph::from_edges({{"a", "b"}, {"a", "c"}, {"a", "d"}})));
}
