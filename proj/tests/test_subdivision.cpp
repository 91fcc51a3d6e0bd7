#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "racg/errors.hpp"
#include "racg/io.hpp"
#include "racg/subdivision.hpp"

using namespace racg;

TEST_CASE("pattern catalog sanity") {
  CHECK(pattern_spec(PatternId::K33).automorphisms.size() == 72);
  CHECK(pattern_spec(PatternId::K5).automorphisms.size() == 120);
  CHECK(pattern_spec(PatternId::Theta).automorphisms.size() == 2);
  CHECK(pattern_spec(PatternId::Fig5Left).automorphisms.size() == 12);
  // flank swaps on either side and the two side exchanges fix Fig5Right
  CHECK(pattern_spec(PatternId::Fig5Right).automorphisms.size() == 16);
  CHECK(pattern_edge_name(pattern_spec(PatternId::Theta), 1) == "p-q#2");
}

TEST_CASE("planarity with witnesses") {
  CHECK(is_planar(fixtures::cycle(6)).planar);

  auto k33 = fixtures::k33s1();
  auto res = is_planar(k33);
  CHECK_FALSE(res.planar);
  REQUIRE(res.witness);
  CHECK(res.witness->pattern == PatternId::K33);
  CHECK(validate_embedding(k33, *res.witness).empty());

  auto pet = generate("petersen", {});
  auto pres = is_planar(pet);
  CHECK_FALSE(pres.planar);
  REQUIRE(pres.witness);
  CHECK(pres.witness->pattern == PatternId::K33);
  CHECK(validate_embedding(pet, *pres.witness).empty());

  // K5 subdivisions admit no K33, so the witness falls back to K5
  auto k5 = fixtures::k5s1();
  auto kres = is_planar(k5);
  CHECK_FALSE(kres.planar);
  REQUIRE(kres.witness);
  CHECK(kres.witness->pattern == PatternId::K5);
}

TEST_CASE("find_subdivision basics") {
  CHECK_FALSE(find_subdivision(fixtures::cycle(9), PatternId::K33));

  auto k5 = fixtures::k5s1();
  auto emb = find_subdivision(k5, PatternId::K5);
  REQUIRE(emb);
  CHECK(validate_embedding(k5, *emb).empty());
  CHECK(emb->total_length() == 20);

  auto pi = fixtures::pi1();
  auto pemb = find_subdivision(pi, PatternId::Fig5Left);
  REQUIRE(pemb);
  CHECK(validate_embedding(pi, *pemb).empty());
  for (const auto& name : {"a", "b", "c", "x", "y", "z"})
    CHECK(pemb->essential_map.at(name) == name);
}

TEST_CASE("find_subdivision respects the budget") {
  SearchOptions opts;
  opts.budget = 10;
  CHECK_THROWS_AS((void)find_subdivision(fixtures::pi1(), PatternId::K33, opts), Error);
}

TEST_CASE("bad edge classification") {
  auto k33 = fixtures::k33s1();
  auto emb = find_subdivision(k33, PatternId::K33);
  REQUIRE(emb);
  CHECK(classify_bad_edges(k33, *emb).count == 0);

  // the canonical K33 inside the obstruction pattern sees the two chords
  auto pi = fixtures::pi1();
  auto sel = select_canonical_k33(pi);
  REQUIRE(sel);
  const auto& report = sel->second;
  CHECK(report.count == 2);
  REQUIRE(report.bad_edges.size() == 2);
  CHECK(report.bad_edges[0].u == "x");
  CHECK(report.bad_edges[0].w == "y");
  CHECK(report.bad_edges[0].cls == BadEdgeClass::EssEssSameSide);
  CHECK(report.bad_edges[1].u == "y");
  CHECK(report.bad_edges[1].w == "z");
  CHECK(report.bad_edges[1].cls == BadEdgeClass::EssEssSameSide);

  // chord from an essential vertex to the interior of a disjoint branch
  auto k5_edges = fixtures::k5s1().edges();
  k5_edges.emplace_back("a", "de1");
  auto k5c = SimplicialGraph::from_edges(k5_edges);
  auto k5emb = find_subdivision(k5c, PatternId::K5);
  REQUIRE(k5emb);
  auto rep = classify_bad_edges(k5c, *k5emb);
  REQUIRE(rep.count == 1);
  CHECK(rep.bad_edges[0].u == "a");
  CHECK(rep.bad_edges[0].w == "de1");
  CHECK(rep.bad_edges[0].cls == BadEdgeClass::EssToDisjointBranch);

  // count always equals induced-edge surplus
  CHECK(rep.count == induced_subgraph(k5c, k5emb->image_vertices()).edge_count() -
                         static_cast<int>(k5emb->image_edges().size()));
}

TEST_CASE("classify_bad_edges rejects invalid embeddings") {
  auto k33 = fixtures::k33s1();
  auto emb = find_subdivision(k33, PatternId::K33);
  REQUIRE(emb);
  auto broken = *emb;
  broken.branches[0].insert(broken.branches[0].begin() + 1, "zz");
  CHECK_THROWS_AS((void)classify_bad_edges(k33, broken), Error);
}

TEST_CASE("canonical K33 selection") {
  auto k33 = fixtures::k33s1();
  auto sel = select_canonical_k33(k33);
  REQUIRE(sel);
  CHECK(sel->second.count == 0);
  CHECK(sel->first.total_length() == 18);

  CHECK_FALSE(select_canonical_k33(fixtures::cycle(9)));

  // no K33 subdivision of the obstruction pattern has fewer than two chords
  auto pi = fixtures::pi1();
  oracles::SubdivisionOracle oracle(pi, PatternId::K33);
  CHECK(oracle.min_bad_edges() == 2);
  CHECK(select_canonical_k33(pi)->second.count == 2);

  // determinism: repeated runs return identical embeddings
  auto again = select_canonical_k33(pi);
  CHECK(sel->first.essential_map == select_canonical_k33(k33)->first.essential_map);
  CHECK(again->first.essential_map == select_canonical_k33(pi)->first.essential_map);
  CHECK(again->first.branches == select_canonical_k33(pi)->first.branches);
}

TEST_CASE("oracle equivalence on random connected graphs") {
  std::mt19937 rng(20240209);
  int nontrivial = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 5);  // up to 8 vertices
    auto g = oracles::random_connected_graph(n, 0.45, rng);
    const bool has_k33 = oracles::has_subdivision(g, PatternId::K33);
    const bool has_k5 = oracles::has_subdivision(g, PatternId::K5);
    CHECK(static_cast<bool>(find_subdivision(g, PatternId::K33)) == has_k33);
    CHECK(static_cast<bool>(find_subdivision(g, PatternId::K5)) == has_k5);
    CHECK(is_planar(g).planar == oracles::planar_by_kuratowski(g));
    if (has_k33 || has_k5) ++nontrivial;
  }
  CHECK(nontrivial > 10);  // the sample actually exercises non-planar graphs
}

TEST_CASE("returned embeddings re-validate") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    auto g = oracles::random_connected_graph(7, 0.5, rng);
    for (PatternId p : {PatternId::K33, PatternId::K5, PatternId::Theta}) {
      if (auto emb = find_subdivision(g, p)) CHECK(validate_embedding(g, *emb).empty());
    }
  }
}

TEST_CASE("theta subdivisions honor the parallel-edge rule") {
  // triangle-free graph with max degree 3 but no theta
  CHECK_FALSE(find_subdivision(fixtures::cycle(8), PatternId::Theta));
  auto theta = fixtures::theta233();
  auto emb = find_subdivision(theta, PatternId::Theta);
  REQUIRE(emb);
  CHECK(validate_embedding(theta, *emb).empty());
}

TEST_CASE("fig5right detection is exact") {
  auto f = fixtures::fig5r1();
  auto emb = find_subdivision(f, PatternId::Fig5Right);
  REQUIRE(emb);
  CHECK(validate_embedding(f, *emb).empty());

  // adding any extra adjacency breaks the induced requirement
  auto edges = f.edges();
  edges.emplace_back("ax1", "cz1");
  auto spoiled = SimplicialGraph::from_edges(edges);
  CHECK_FALSE(find_subdivision(spoiled, PatternId::Fig5Right));
}
