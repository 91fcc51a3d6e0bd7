#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "racg/errors.hpp"
#include "racg/predicates.hpp"

using namespace racg;

namespace {

bool witness_disconnects(const SimplicialGraph& g, const std::vector<std::string>& witness) {
  std::set<int> cut;
  for (const auto& v : witness) cut.insert(g.index_of(v));
  return oracles::separator_disconnects(g, cut);
}

}  // namespace

TEST_CASE("inseparability on the named examples") {
  auto p4 = generate("path", {4});
  auto rp = is_inseparable(p4);
  CHECK_FALSE(rp.inseparable);
  REQUIRE(rp.separating_vertex);
  CHECK(witness_disconnects(p4, *rp.separating_vertex));

  auto c5 = fixtures::cycle(5);
  auto rc = is_inseparable(c5);
  CHECK_FALSE(rc.inseparable);
  CHECK_FALSE(rc.separating_vertex);
  REQUIRE(rc.cut_pair);
  CHECK(witness_disconnects(c5, *rc.cut_pair));

  auto m4 = fixtures::mobius(4);
  auto rm = is_inseparable(m4);
  CHECK(rm.inseparable);
  CHECK(rm.connected);
  CHECK_FALSE(rm.separating_vertex);
  CHECK_FALSE(rm.separating_edge);
  CHECK_FALSE(rm.cut_pair);
  CHECK_FALSE(rm.separating_vertex_suspension);
}

TEST_CASE("inseparability witnesses re-verify and agree with the scan") {
  std::mt19937 rng(424242);
  for (int trial = 0; trial < 80; ++trial) {
    auto g = oracles::random_triangle_free(4 + static_cast<int>(rng() % 5), 0.35, rng);
    auto rep = is_inseparable(g);
    CHECK(rep.inseparable == oracles::inseparable_by_scan(g));
    for (const auto& w : {rep.separating_vertex, rep.separating_edge, rep.cut_pair,
                          rep.separating_vertex_suspension})
      if (w) CHECK(witness_disconnects(g, *w));
  }
}

TEST_CASE("separating edge is detected") {
  // two squares joined by an edge
  auto g = SimplicialGraph::from_edges({{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"},
                                        {"p", "q"}, {"q", "r"}, {"r", "s"}, {"s", "p"},
                                        {"a", "p"}});
  auto rep = is_inseparable(g);
  CHECK_FALSE(rep.inseparable);
  REQUIRE(rep.separating_edge);
  CHECK(witness_disconnects(g, *rep.separating_edge));
}

TEST_CASE("hyperbolicity is the no-induced-square test") {
  CHECK_FALSE(is_hyperbolic_racg(fixtures::cycle(4)));
  CHECK(is_hyperbolic_racg(fixtures::cycle(5)));
  CHECK_FALSE(is_hyperbolic_racg(fixtures::mobius(4)));

  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    auto g = oracles::random_triangle_free(4 + static_cast<int>(rng() % 5), 0.3, rng);
    bool square = false;
    for (const auto& c : enumerate_induced_cycles(g, 4)) square |= c.length() == 4;
    CHECK(is_hyperbolic_racg(g) == !square);
  }
}

TEST_CASE("isolated flats predicate") {
  auto k23 = SimplicialGraph::from_edges(
      {{"a", "x"}, {"a", "y"}, {"a", "z"}, {"b", "x"}, {"b", "y"}, {"b", "z"}});
  CHECK_FALSE(has_isolated_flats(k23));
  CHECK(has_isolated_flats(fixtures::mobius(4)));
  CHECK(has_isolated_flats(fixtures::cycle(5)));
  CHECK(default_isolated_flats_strategy().name == "caprace-k23-default");

  // no squares at all implies no shared flats
  std::mt19937 rng(321);
  for (int trial = 0; trial < 50; ++trial) {
    auto g = oracles::random_triangle_free(4 + static_cast<int>(rng() % 5), 0.3, rng);
    if (is_hyperbolic_racg(g)) CHECK(has_isolated_flats(g));
  }
}

TEST_CASE("predicates reject triangles") {
  auto k3 = SimplicialGraph::from_edges({{"a", "b"}, {"b", "c"}, {"a", "c"}});
  CHECK_THROWS_AS((void)is_inseparable(k3), Error);
  CHECK_THROWS_AS((void)is_hyperbolic_racg(k3), Error);
  CHECK_THROWS_AS((void)has_isolated_flats(k3), Error);
}
