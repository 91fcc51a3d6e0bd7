#ifndef RACG_SUBDIVISION_HPP
#define RACG_SUBDIVISION_HPP

#include <chrono>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "racg/graph.hpp"
#include "racg/pattern.hpp"

namespace racg {

struct SearchOptions {
  /// Hard cap on |V| for subdivision searches; exceeding it raises
  /// GraphTooLarge rather than approximating.
  int budget = 30;
  /// Cooperative cancellation for long-running searches.
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

/// An embedding of a pattern into a graph: images of the pattern vertices
/// plus one path per pattern edge (endpoints included). Paths are stored in
/// the order of pattern_spec(pattern).edges.
struct SubdivisionEmbedding {
  PatternId pattern = PatternId::K33;
  std::map<std::string, std::string> essential_map;   // pattern vertex -> label
  std::vector<std::vector<std::string>> branches;

  /// All graph vertices used by the embedding.
  std::set<std::string> image_vertices() const;
  /// Edges of the image subgraph, as sorted label pairs.
  std::set<std::pair<std::string, std::string>> image_edges() const;
  int total_length() const;
  const std::string& image_of(const std::string& pattern_vertex) const;
};

/// Re-checks every embedding invariant against g. Returns an empty string on
/// success, otherwise a description of the first failure.
std::string validate_embedding(const SimplicialGraph& g, const SubdivisionEmbedding& emb);

enum class BadEdgeClass {
  SameBranch,               // both endpoints on one branch
  NonEssAdjacentBranches,   // interior vertices of branches sharing an endpoint
  NonEssDisjointBranches,   // interior vertices of disjoint branches
  EssToIncidentBranch,      // essential vertex to the interior of its own branch
  EssToDisjointBranch,      // essential vertex to the interior of a branch avoiding it
  EssEssSameSide,           // two essential vertices not joined by a branch
};

const char* bad_edge_class_name(BadEdgeClass c);

struct BadEdge {
  std::string u, w;  // u < w
  BadEdgeClass cls;
  bool operator==(const BadEdge& o) const { return u == o.u && w == o.w && cls == o.cls; }
};

/// The graph edges landing on the embedding's image without being part of it,
/// classified by where their endpoints sit.
struct BadEdgeReport {
  SubdivisionEmbedding embedding;
  std::vector<BadEdge> bad_edges;  // sorted by (u, w)
  int count = 0;
};

BadEdgeReport classify_bad_edges(const SimplicialGraph& g, const SubdivisionEmbedding& emb);

struct PlanarityResult {
  bool planar = false;
  /// K5 or K33 subdivision witness when non-planar (K33 preferred). Absent
  /// only if the graph exceeds the witness search budget.
  std::optional<SubdivisionEmbedding> witness;
};

PlanarityResult is_planar(const SimplicialGraph& g, const SearchOptions& opts = {});

/// First embedding of the pattern found in canonical search order, or
/// nullopt. For Fig5Left/Fig5Right the image must be induced with exactly the
/// pattern's edges.
std::optional<SubdivisionEmbedding> find_subdivision(const SimplicialGraph& g, PatternId pattern,
                                                     const SearchOptions& opts = {});

/// The canonical K33 subdivision: minimizes (bad-edge count, total length,
/// canonical key) lexicographically over all K33 subdivision embeddings.
std::optional<std::pair<SubdivisionEmbedding, BadEdgeReport>> select_canonical_k33(
    const SimplicialGraph& g, const SearchOptions& opts = {});

/// Minimum-length embedding of a pattern (ties broken canonically).
std::optional<SubdivisionEmbedding> find_shortest_subdivision(const SimplicialGraph& g,
                                                              PatternId pattern,
                                                              const SearchOptions& opts = {});

}  // namespace racg

#endif
