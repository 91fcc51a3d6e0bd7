#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "fixtures.hpp"
#include "racg/errors.hpp"
#include "racg/subdivision.hpp"
#include "racg/witness.hpp"

using namespace racg;

namespace {

// The abstract witness graph as a simple graph (no witness we build here has
// parallel arcs between the same point pair except the Theta/circle halves,
// which the caller avoids passing through this).
SimplicialGraph abstract_simple_graph(const SymbolicWitness& w) {
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& a : w.arcs) edges.emplace_back(a.from, a.to);
  return SimplicialGraph::from_edges(edges);
}

}  // namespace

TEST_CASE("theta witness") {
  auto g = fixtures::theta233();
  auto emb = find_subdivision(g, PatternId::Theta);
  REQUIRE(emb);
  auto w = theta_witness(g, *emb);
  CHECK(w.points.size() == 2);
  CHECK(w.arcs.size() == 3);
  CHECK(w.claimed_type == WitnessType::Theta);
  auto check = verify_witness(w, g);
  CHECK(check.ok);

  // branch lengths (1, 2, 2) violate the precondition
  auto bad = SimplicialGraph::from_edges({
      {"p", "q"}, {"p", "m1"}, {"m1", "q"}, {"p", "n1"}, {"n1", "q"},
  });
  auto bemb = find_subdivision(bad, PatternId::Theta);
  REQUIRE(bemb);
  CHECK_THROWS_AS((void)theta_witness(bad, *bemb), Error);
}

TEST_CASE("theta witness from a theta inside a K33 subdivision") {
  auto g = fixtures::k33s1();
  auto emb = find_subdivision(g, PatternId::Theta);
  REQUIRE(emb);
  auto w = theta_witness(g, *emb);
  CHECK(verify_witness(w, g).ok);
}

TEST_CASE("k33 boundary witness") {
  auto g = fixtures::k33s1();
  auto emb = find_subdivision(g, PatternId::K33);
  REQUIRE(emb);
  auto res = k33_boundary_witness(g, *emb);
  CHECK_FALSE(res.join_of_cantor_sets);
  REQUIRE(res.witness);
  CHECK(res.witness->points.size() == 6);
  CHECK(res.witness->arcs.size() == 9);
  CHECK(verify_witness(*res.witness, g).ok);

  // the abstract graph is itself a non-planar K33
  auto abstract = abstract_simple_graph(*res.witness);
  CHECK_FALSE(is_planar(abstract).planar);

  // trivial K33: join of two Cantor sets
  auto trivial = generate("k33_subdiv", {0});
  auto temb = find_subdivision(trivial, PatternId::K33);
  REQUIRE(temb);
  auto tres = k33_boundary_witness(trivial, *temb);
  CHECK(tres.join_of_cantor_sets);
  CHECK_FALSE(tres.witness);

  // a chord on the image makes the embedding non-induced
  auto edges = g.edges();
  edges.emplace_back("x", "y");
  auto chorded = SimplicialGraph::from_edges(edges);
  CHECK_THROWS_AS((void)k33_boundary_witness(chorded, *emb), Error);
}

TEST_CASE("fig5right witness") {
  auto g = fixtures::fig5r1();
  auto emb = find_subdivision(g, PatternId::Fig5Right);
  REQUIRE(emb);
  auto w = fig5right_witness(g, *emb);
  CHECK(w.claimed_type == WitnessType::K33);
  CHECK(w.points.size() == 6);
  CHECK(w.arcs.size() == 9);
  CHECK(verify_witness(w, g).ok);
  CHECK_FALSE(is_planar(abstract_simple_graph(w)).planar);

  // four provenance circles
  std::set<std::vector<std::string>> cycles;
  for (const auto& a : w.arcs) cycles.insert(a.cycle);
  CHECK(cycles.size() == 4);

  // heavier subdivision changes nothing structurally
  auto g2 = generate("fig5_right", {2});
  auto emb2 = find_subdivision(g2, PatternId::Fig5Right);
  REQUIRE(emb2);
  auto w2 = fig5right_witness(g2, *emb2);
  CHECK(verify_witness(w2, g2).ok);

  // collapsing the subdivided branch between b and y is a pattern violation
  auto broken = *emb;
  for (auto& path : broken.branches)
    if ((path.front() == "b" && path.back() == "y") ||
        (path.front() == "y" && path.back() == "b"))
      path = {path.front(), path.back()};
  CHECK_THROWS_AS((void)fig5right_witness(g, broken), Error);
}

TEST_CASE("pi witness and the involution obstruction") {
  auto g = fixtures::pi1();
  auto emb = find_subdivision(g, PatternId::Fig5Left);
  REQUIRE(emb);
  auto w = pi_witness(g, *emb);
  CHECK(w.claimed_type == WitnessType::ThreeCirclesWithPoles);
  CHECK(w.points.size() == 8);   // two poles + two junctions per circle
  CHECK(w.arcs.size() == 12);    // six halves + six connecting arcs
  REQUIRE(w.involution);
  CHECK(w.involution->generator == "y");
  CHECK(verify_witness(w, g).ok);
  CHECK(obstruction_check(w));

  // dropping the involution keeps the witness valid but loses the flag
  auto stripped = w;
  stripped.involution.reset();
  CHECK(verify_witness(stripped, g).ok);
  CHECK_FALSE(obstruction_check(stripped));
}

TEST_CASE("pi witness with an unsubdivided spoke") {
  // branch between a and x collapsed to an edge: the finite-order case
  auto g = generate("pi", {0, 1, 1, 1, 1, 1, 1, 1, 1});
  REQUIRE(is_triangle_free(g));
  auto emb = find_subdivision(g, PatternId::Fig5Left);
  REQUIRE(emb);
  auto w = pi_witness(g, *emb);
  CHECK(verify_witness(w, g).ok);
  CHECK(obstruction_check(w));
  // the finite-order spoke attaches through a translated named point
  bool has_named = false;
  for (const auto& p : w.points) has_named |= !p.generators.has_value();
  CHECK(has_named);
}

TEST_CASE("witness verification catches corrupted data") {
  auto g = fixtures::k33s1();
  auto emb = find_subdivision(g, PatternId::K33);
  auto w = *k33_boundary_witness(g, *emb).witness;

  SUBCASE("cycle with a chord") {
    // make the provenance cycle claim a vertex set carrying a chord
    auto edges = g.edges();
    edges.emplace_back(w.arcs[0].cycle[0], w.arcs[0].cycle[2]);
    auto chorded = SimplicialGraph::from_edges(edges);
    auto check = verify_witness(w, chorded);
    CHECK_FALSE(check.ok);
    CHECK(check.failure.find("not induced") != std::string::npos);
  }
  SUBCASE("side leaving the cycle") {
    auto bad = w;
    bad.arcs[0].side = {"zz"};
    CHECK_FALSE(verify_witness(bad, g).ok);
  }
  SUBCASE("adjacent generators in a point label") {
    auto bad = w;
    bad.points[0].generators = std::make_pair(std::string("a"), std::string("ax1"));
    CHECK_FALSE(verify_witness(bad, g).ok);
  }
  SUBCASE("wrong abstract type") {
    auto bad = w;
    bad.claimed_type = WitnessType::Theta;
    auto check = verify_witness(bad, g);
    CHECK_FALSE(check.ok);
    CHECK(check.failure.find("subdivision of") != std::string::npos);
  }
  SUBCASE("broken involution") {
    auto pi = fixtures::pi1();
    auto pemb = find_subdivision(pi, PatternId::Fig5Left);
    auto pw = pi_witness(pi, *pemb);
    auto bad = pw;
    bad.involution->arc_map["A:half1"] = "A:half1";
    bad.involution->arc_map["A:half2"] = "A:half2";
    auto check = verify_witness(bad, pi);
    CHECK_FALSE(check.ok);
  }
}
