#ifndef RACG_REDUCTION_HPP
#define RACG_REDUCTION_HPP

#include <optional>
#include <string>
#include <vector>

#include "racg/graph.hpp"
#include "racg/subdivision.hpp"

namespace racg {

enum class TerminalPattern { InducedK33, Fig5Left, Fig5Right };
const char* terminal_pattern_name(TerminalPattern t);

enum class RewriteRule {
  ChordWithinBranch,     // shortcut a chord whose endpoints share a branch
  AdjacentBranchChord,   // reroute at a chord between adjacent branch interiors
  DisjointBranchChord,   // reroute at a chord between disjoint branch interiors
};
const char* rewrite_rule_name(RewriteRule r);

struct ReductionAction {
  enum class Type { ShortenRewrite, Double, Terminal };
  Type type = Type::Terminal;
  std::optional<RewriteRule> rule;            // ShortenRewrite
  std::optional<std::string> vertex;          // Double
  std::optional<TerminalPattern> terminal;    // Terminal
};

struct ReductionStep {
  SimplicialGraph graph_before;
  SubdivisionEmbedding embedding;
  BadEdgeReport report;
  ReductionAction action;
};

/// A complete, independently verifiable run of the doubling reduction:
/// replaying doubling_sequence from initial_graph reproduces every
/// intermediate graph, the bad-edge count drops strictly across doubling
/// steps taken from a K33 embedding, and the terminal subgraph matches the
/// claimed pattern.
struct ReductionCertificate {
  SimplicialGraph initial_graph;
  std::vector<ReductionStep> steps;
  TerminalPattern terminal = TerminalPattern::InducedK33;
  SubdivisionEmbedding terminal_embedding;
  std::vector<std::string> doubling_sequence;
};

struct K5ToK33Result {
  SimplicialGraph graph;  // the input graph, or its double
  SubdivisionEmbedding k33;
  std::optional<std::string> doubled_vertex;
};

/// Converts a K5 subdivision into a K33 subdivision, either inside the graph
/// itself (when some essential vertex has a chord to a disjoint branch) or
/// inside the double over a suitably chosen essential vertex. The supplied
/// embedding is only used as evidence that a K5 subdivision exists; the
/// shortest one is recomputed internally.
K5ToK33Result k5_to_k33(const SimplicialGraph& g, const SubdivisionEmbedding& k5,
                        const SearchOptions& opts = {});

/// One step of the reduction loop, given the canonical K33 embedding and its
/// bad-edge report: a terminal match, a doubling move, or (for non-canonical
/// input) a shortening rewrite. Doubling candidates are validated against the
/// trial double before being committed.
ReductionStep reduce_step(const SimplicialGraph& g, const SubdivisionEmbedding& emb,
                          const BadEdgeReport& report, const SearchOptions& opts = {});

ReductionCertificate reduce(const SimplicialGraph& g, const SearchOptions& opts = {});

struct VerificationResult {
  bool ok = true;
  std::string failure;  // first failing check when !ok
};

/// Re-validates a certificate from scratch: embeddings, reports, doubling
/// replays, monotonicity, and the terminal pattern. Trusts nothing from the
/// producer.
VerificationResult verify_certificate(const ReductionCertificate& cert);

/// The paper-style path reroutes behind ShortenRewrite actions. Each returns
/// a strictly (bad count, length)-smaller K33 embedding, or nullopt when the
/// rule's side condition fails. Canonical embeddings never admit any of them.
std::optional<SubdivisionEmbedding> rewrite_chord_within_branch(const SimplicialGraph& g,
                                                                const SubdivisionEmbedding& emb,
                                                                const BadEdge& bad);
std::optional<SubdivisionEmbedding> rewrite_adjacent_branch_chord(const SimplicialGraph& g,
                                                                  const SubdivisionEmbedding& emb,
                                                                  const BadEdge& bad);
std::optional<SubdivisionEmbedding> rewrite_disjoint_branch_chord(const SimplicialGraph& g,
                                                                  const SubdivisionEmbedding& emb,
                                                                  const BadEdge& bad);

}  // namespace racg

#endif
