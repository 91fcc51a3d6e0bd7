#ifndef RACG_PATTERN_HPP
#define RACG_PATTERN_HPP

#include <string>
#include <vector>

namespace racg {

/// The fixed patterns the subdivision search knows how to locate.
enum class PatternId { K5, K33, Theta, Fig5Left, Fig5Right };

const char* pattern_name(PatternId id);
PatternId pattern_from_name(const std::string& name);

enum class BranchKind {
  Free,             // may be any path
  ForcedEdge,       // must map to a single graph edge
  ForcedSubdivided  // must map to a path of length >= 2
};

struct PatternEdgeSpec {
  int u, v;         // pattern vertex indices, u < v
  BranchKind kind;
};

/// Static description of a pattern: named vertices, branch list with
/// per-branch constraints, an optional bipartition, and whether embeddings
/// must be induced (image carries no adjacency beyond the pattern's own
/// edges). Automorphisms are enumerated once for symmetry pruning.
struct PatternSpec {
  PatternId id;
  std::vector<std::string> vertex_names;
  std::vector<PatternEdgeSpec> edges;
  bool induced = false;
  std::vector<int> side_of;                       // per vertex: 0/1, or -1
  std::vector<int> min_degree;                    // per vertex
  std::vector<std::vector<int>> automorphisms;    // vertex permutations
};

const PatternSpec& pattern_spec(PatternId id);

/// Name of a pattern edge, e.g. "a-x" or "p-q#2" for parallel branches.
std::string pattern_edge_name(const PatternSpec& spec, int edge_index);
int pattern_edge_index(const PatternSpec& spec, const std::string& name);

}  // namespace racg

#endif
