#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "racg/errors.hpp"
#include "racg/reduction.hpp"

using namespace racg;

namespace {

SimplicialGraph with_extra_edge(const SimplicialGraph& g, const std::string& u,
                                const std::string& w) {
  auto edges = g.edges();
  edges.emplace_back(u, w);
  return SimplicialGraph::from_edges(edges);
}

std::pair<int, int> cost(const SimplicialGraph& g, const SubdivisionEmbedding& emb) {
  return {classify_bad_edges(g, emb).count, emb.total_length()};
}

}  // namespace

TEST_CASE("k5 conversion doubles when no chord helps") {
  auto k5 = fixtures::k5s1();
  auto emb = find_subdivision(k5, PatternId::K5);
  REQUIRE(emb);
  auto conv = k5_to_k33(k5, *emb);
  REQUIRE(conv.doubled_vertex);
  CHECK(conv.graph.vertex_count() == 2 * (k5.vertex_count() - 1) - 4);
  CHECK(validate_embedding(conv.graph, conv.k33).empty());
}

TEST_CASE("k5 conversion uses an essential-to-branch chord directly") {
  auto g = with_extra_edge(fixtures::k5s1(), "a", "de1");
  REQUIRE(is_triangle_free(g));
  auto emb = find_subdivision(g, PatternId::K5);
  REQUIRE(emb);
  auto conv = k5_to_k33(g, *emb);
  CHECK_FALSE(conv.doubled_vertex);
  CHECK(validate_embedding(g, conv.k33).empty());
  // vertex partition {a, e, d} x {b, c, f} with f interior to the d-e branch
  std::set<std::string> side0, side1;
  for (const auto& name : {"a", "b", "c"}) side0.insert(conv.k33.image_of(name));
  for (const auto& name : {"x", "y", "z"}) side1.insert(conv.k33.image_of(name));
  CHECK(side0 == std::set<std::string>{"a", "d", "e"});
  CHECK(side1 == std::set<std::string>{"b", "c", "de1"});
}

TEST_CASE("k5 conversion rejects non-K5 input") {
  auto c9 = fixtures::cycle(9);
  SubdivisionEmbedding fake;
  fake.pattern = PatternId::K5;
  CHECK_THROWS_AS((void)k5_to_k33(c9, fake), Error);

  auto k3 = SimplicialGraph::from_edges({{"a", "b"}, {"b", "c"}, {"a", "c"}});
  SubdivisionEmbedding fake2;
  fake2.pattern = PatternId::K5;
  CHECK_THROWS_AS((void)k5_to_k33(k3, fake2), Error);
}

TEST_CASE("reduce terminates on the four reference graphs") {
  SUBCASE("induced K33 immediately") {
    auto cert = reduce(fixtures::k33s1());
    CHECK(cert.terminal == TerminalPattern::InducedK33);
    CHECK(cert.doubling_sequence.empty());
    CHECK(verify_certificate(cert).ok);
  }
  SUBCASE("obstruction pattern") {
    auto cert = reduce(fixtures::pi1());
    CHECK(cert.terminal == TerminalPattern::Fig5Left);
    CHECK(cert.doubling_sequence.empty());
    CHECK(verify_certificate(cert).ok);
  }
  SUBCASE("four-chord pattern") {
    auto cert = reduce(fixtures::fig5r1());
    CHECK((cert.terminal == TerminalPattern::Fig5Right ||
           cert.terminal == TerminalPattern::InducedK33));
    CHECK(verify_certificate(cert).ok);
  }
  SUBCASE("K5 subdivision via the doubling lemma") {
    auto cert = reduce(fixtures::k5s1());
    CHECK(cert.terminal == TerminalPattern::InducedK33);
    const auto first_k33 = std::find_if(cert.steps.begin(), cert.steps.end(), [](const auto& s) {
      return s.embedding.pattern == PatternId::K33;
    });
    REQUIRE(first_k33 != cert.steps.end());
    CHECK(static_cast<int>(cert.doubling_sequence.size()) <= first_k33->report.count + 1);
    CHECK(verify_certificate(cert).ok);
  }
}

TEST_CASE("reduce rejects bad input") {
  CHECK_THROWS_AS((void)reduce(fixtures::cycle(6)), Error);  // planar
  auto k3 = SimplicialGraph::from_edges({{"a", "b"}, {"b", "c"}, {"a", "c"}});
  CHECK_THROWS_AS((void)reduce(k3), Error);  // triangle
  SearchOptions opts;
  opts.budget = 5;
  CHECK_THROWS_AS((void)reduce(fixtures::k33s1(), opts), Error);  // too large
}

TEST_CASE("certificate verification catches corruption") {
  auto cert = reduce(fixtures::mobius(4));
  REQUIRE(verify_certificate(cert).ok);
  REQUIRE(!cert.doubling_sequence.empty());

  SUBCASE("tampered double replay") {
    auto bad = cert;
    // replace the successor graph with one carrying an extra edge
    auto& step = bad.steps[1];
    auto edges = step.graph_before.edges();
    const auto& labels = step.graph_before.labels();
    for (size_t i = 0; i < labels.size() && edges.size() == step.graph_before.edges().size(); ++i)
      for (size_t j = i + 1; j < labels.size(); ++j)
        if (!step.graph_before.has_edge(labels[i], labels[j])) {
          edges.emplace_back(labels[i], labels[j]);
          goto added;
        }
  added:
    step.graph_before = SimplicialGraph::make(labels, edges);
    auto res = verify_certificate(bad);
    CHECK_FALSE(res.ok);
  }

  SUBCASE("tampered report count") {
    auto bad = cert;
    bad.steps[0].report.count += 1;
    auto res = verify_certificate(bad);
    CHECK_FALSE(res.ok);
    CHECK(res.failure.find("report mismatch") != std::string::npos);
  }

  SUBCASE("tampered doubling sequence") {
    auto bad = cert;
    bad.doubling_sequence.push_back("v0");
    CHECK_FALSE(verify_certificate(bad).ok);
  }

  SUBCASE("empty certificate") {
    ReductionCertificate empty;
    auto res = verify_certificate(empty);
    CHECK_FALSE(res.ok);
    CHECK(res.failure == "empty certificate");
  }
}

TEST_CASE("terminal claims are re-checked") {
  // a certificate that claims induced K33 while the image carries a chord
  auto g = with_extra_edge(fixtures::k33s1(), "x", "y");
  auto sel = select_canonical_k33(g);
  REQUIRE(sel);
  REQUIRE(sel->second.count == 1);

  ReductionCertificate fake;
  fake.initial_graph = g;
  ReductionStep step;
  step.graph_before = g;
  step.embedding = sel->first;
  step.report = sel->second;
  ReductionAction action;
  action.type = ReductionAction::Type::Terminal;
  action.terminal = TerminalPattern::InducedK33;
  step.action = action;
  fake.steps.push_back(step);
  fake.terminal = TerminalPattern::InducedK33;
  fake.terminal_embedding = sel->first;

  auto res = verify_certificate(fake);
  CHECK_FALSE(res.ok);
  CHECK(res.failure == "not induced");
}

TEST_CASE("rewrites shrink non-canonical embeddings") {
  SUBCASE("chord inside one branch") {
    auto g = with_extra_edge(generate("k33_subdiv", {4, 1, 1, 1, 1, 1, 1, 1, 1}), "ax1", "ax4");
    REQUIRE(is_triangle_free(g));
    // force the long detour branch into the embedding
    auto sel = select_canonical_k33(g);
    REQUIRE(sel);
    REQUIRE(sel->second.count == 0);  // the canonical one shortcuts already
    SubdivisionEmbedding detour = sel->first;
    // rebuild the a-x branch through all four interior vertices
    for (auto& path : detour.branches)
      if (path.front() == "a" && path.back() == "x")
        path = {"a", "ax1", "ax2", "ax3", "ax4", "x"};
    REQUIRE(validate_embedding(g, detour).empty());
    auto rep = classify_bad_edges(g, detour);
    REQUIRE(rep.count == 1);
    CHECK(rep.bad_edges[0].cls == BadEdgeClass::SameBranch);

    auto rewritten = rewrite_chord_within_branch(g, detour, rep.bad_edges[0]);
    REQUIRE(rewritten);
    CHECK(cost(g, *rewritten) < cost(g, detour));

    auto step = reduce_step(g, detour, rep);
    CHECK(step.action.type == ReductionAction::Type::ShortenRewrite);
    CHECK(*step.action.rule == RewriteRule::ChordWithinBranch);
  }

  SUBCASE("chord between adjacent branches") {
    auto g = with_extra_edge(generate("k33_subdiv", {2, 2, 1, 1, 1, 1, 1, 1, 1}), "ax2", "ay1");
    REQUIRE(is_triangle_free(g));
    auto base = find_subdivision(generate("k33_subdiv", {2, 2, 1, 1, 1, 1, 1, 1, 1}),
                                 PatternId::K33);
    REQUIRE(base);
    REQUIRE(validate_embedding(g, *base).empty());
    auto rep = classify_bad_edges(g, *base);
    REQUIRE(rep.count == 1);
    CHECK(rep.bad_edges[0].cls == BadEdgeClass::NonEssAdjacentBranches);

    auto rewritten = rewrite_adjacent_branch_chord(g, *base, rep.bad_edges[0]);
    REQUIRE(rewritten);
    CHECK(validate_embedding(g, *rewritten).empty());
    CHECK(cost(g, *rewritten) < cost(g, *base));

    auto step = reduce_step(g, *base, rep);
    CHECK(step.action.type == ReductionAction::Type::ShortenRewrite);
    CHECK(*step.action.rule == RewriteRule::AdjacentBranchChord);
  }

  SUBCASE("chord between disjoint branches") {
    auto g = with_extra_edge(fixtures::k33s1(), "ax1", "cz1");
    REQUIRE(is_triangle_free(g));
    auto base = find_subdivision(fixtures::k33s1(), PatternId::K33);
    REQUIRE(base);
    REQUIRE(validate_embedding(g, *base).empty());
    auto rep = classify_bad_edges(g, *base);
    REQUIRE(rep.count == 1);
    CHECK(rep.bad_edges[0].cls == BadEdgeClass::NonEssDisjointBranches);

    auto rewritten = rewrite_disjoint_branch_chord(g, *base, rep.bad_edges[0]);
    REQUIRE(rewritten);
    CHECK(validate_embedding(g, *rewritten).empty());
    CHECK(cost(g, *rewritten) < cost(g, *base));
  }

  SUBCASE("disjoint-branch rewrite needs a subdivided complementary branch") {
    // branch between b and y collapsed to an edge
    auto base_graph = generate("k33_subdiv", {1, 1, 1, 1, 0, 1, 1, 1, 1});
    auto g = with_extra_edge(base_graph, "ax1", "cz1");
    REQUIRE(is_triangle_free(g));
    auto base = find_subdivision(base_graph, PatternId::K33);
    REQUIRE(base);
    auto rep = classify_bad_edges(g, *base);
    REQUIRE(rep.count == 1);
    CHECK_FALSE(rewrite_disjoint_branch_chord(g, *base, rep.bad_edges[0]));
  }
}

TEST_CASE("reduction handles essential-essential chords by doubling") {
  // one chord on one side: the step doubles over its smaller endpoint
  auto g = with_extra_edge(fixtures::k33s1(), "x", "y");
  auto sel = select_canonical_k33(g);
  REQUIRE(sel);
  REQUIRE(sel->second.count == 1);
  auto step = reduce_step(g, sel->first, sel->second);
  CHECK(step.action.type == ReductionAction::Type::Double);
  CHECK(*step.action.vertex == "x");

  auto cert = reduce(g);
  CHECK(verify_certificate(cert).ok);
  CHECK(cert.doubling_sequence.size() <= 2);
}

TEST_CASE("small monotonicity fuzz") {
  std::mt19937 rng(555);
  SearchOptions opts;
  opts.budget = 64;
  for (int trial = 0; trial < 12; ++trial) {
    auto counts = std::vector<int>(9, 0);
    int extra = 4 + static_cast<int>(rng() % 4);
    while (extra-- > 0) ++counts[rng() % 9];
    auto g = generate("k33_subdiv", counts);
    // sprinkle a triangle-safe chord between non-adjacent vertices
    for (int tries = 0; tries < 20; ++tries) {
      const auto& labels = g.labels();
      const auto& u = labels[rng() % labels.size()];
      const auto& w = labels[rng() % labels.size()];
      if (u == w || g.has_edge(u, w)) continue;
      auto candidate = with_extra_edge(g, u, w);
      if (is_triangle_free(candidate)) {
        g = candidate;
        break;
      }
    }
    auto cert = reduce(g, opts);
    CHECK(verify_certificate(cert).ok);
    std::optional<int> prev;
    bool prev_doubled = false;
    for (const auto& step : cert.steps) {
      if (step.embedding.pattern != PatternId::K33) continue;
      if (prev && prev_doubled) CHECK(step.report.count < *prev);
      prev = step.report.count;
      prev_doubled = step.action.type == ReductionAction::Type::Double;
    }
  }
}
