#ifndef RACG_GRAPH_HPP
#define RACG_GRAPH_HPP

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace racg {

/// A finite simple graph with string vertex labels.
///
/// Labels are stored sorted; all iteration (neighbors, edges, searches built
/// on top) follows that lexicographic order, so every operation downstream is
/// deterministic. Instances are immutable once built: the named operations
/// below return new graphs.
class SimplicialGraph {
 public:
  SimplicialGraph() = default;

  /// Builds a graph from explicit vertex labels and edges. Vertices mentioned
  /// only in edges are rejected; self-loops and duplicate edges are errors.
  static SimplicialGraph make(std::vector<std::string> vertices,
                              const std::vector<std::pair<std::string, std::string>>& edges);

  /// Convenience: vertex set inferred from the edge list.
  static SimplicialGraph from_edges(const std::vector<std::pair<std::string, std::string>>& edges);

  int vertex_count() const { return static_cast<int>(labels_.size()); }
  int edge_count() const { return edge_count_; }

  const std::vector<std::string>& labels() const { return labels_; }
  bool has_vertex(const std::string& v) const;
  bool has_edge(const std::string& u, const std::string& v) const;

  /// Index of a label in the sorted vertex order; throws UnknownVertex.
  int index_of(const std::string& v) const;
  const std::string& label_of(int i) const { return labels_[i]; }

  bool adjacent(int i, int j) const { return adj_matrix_[i][j]; }
  const std::vector<int>& neighbors(int i) const { return adj_[i]; }
  int degree(int i) const { return static_cast<int>(adj_[i].size()); }

  /// Edges as sorted label pairs (u < v), in lexicographic order.
  std::vector<std::pair<std::string, std::string>> edges() const;

  bool operator==(const SimplicialGraph& other) const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::vector<bool>> adj_matrix_;
  int edge_count_ = 0;
};

/// Result of doubling a graph over a vertex v: two copies of G minus the open
/// star of v, glued along the link of v.
struct DoublingResult {
  SimplicialGraph graph;
  std::string doubled_vertex;
  /// Folding map: every vertex of the double to the vertex of G it copies.
  std::map<std::string, std::string> correspondence;
  /// Vertices belonging to the second copy.
  std::set<std::string> primed;
};

/// An embedded cycle, stored in canonical rotation: starts at the smallest
/// label and proceeds toward its smaller neighbor.
struct Cycle {
  std::vector<std::string> vertices;
  int length() const { return static_cast<int>(vertices.size()); }
};

/// Neighbors of v.
std::set<std::string> link(const SimplicialGraph& g, const std::string& v);

/// The double of g over v. Duplicated vertices (those outside v's closed
/// star) get labels "s#k" with k the smallest counter avoiding collisions,
/// so nested doublings stay collision-free and replayable.
DoublingResult double_over(const SimplicialGraph& g, const std::string& v);

bool is_triangle_free(const SimplicialGraph& g);

SimplicialGraph induced_subgraph(const SimplicialGraph& g, const std::set<std::string>& keep);

/// All induced cycles of length between 3 and max_length, deduplicated up to
/// rotation and reflection, in lexicographic order of their canonical form.
std::vector<Cycle> enumerate_induced_cycles(const SimplicialGraph& g, int max_length);

/// Exact isomorphism test (backtracking; intended for small graphs).
bool are_isomorphic(const SimplicialGraph& a, const SimplicialGraph& b);

}  // namespace racg

#endif
