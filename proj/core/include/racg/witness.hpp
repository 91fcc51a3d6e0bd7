#ifndef RACG_WITNESS_HPP
#define RACG_WITNESS_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "racg/graph.hpp"
#include "racg/subdivision.hpp"

namespace racg {

/// A formal boundary point: either the limit "(u v)^inf" of the infinite
/// order product of two non-adjacent generators, or a named point obtained by
/// translating such a limit.
struct FormalBoundaryPoint {
  std::string label;
  std::optional<std::pair<std::string, std::string>> generators;
  bool operator==(const FormalBoundaryPoint& o) const {
    return label == o.label && generators == o.generators;
  }
};

/// One arc of a symbolic witness. Provenance is an induced cycle of the
/// graph (so the corresponding reflection subgroup has a circle boundary)
/// together with the cycle vertices whose letters start the arc's rays.
/// translated_by marks arcs obtained from the provenance circle by a
/// generator of the cycle.
struct WitnessArc {
  std::string name;
  std::string from, to;
  std::vector<std::string> cycle;
  std::vector<std::string> side;
  std::optional<std::string> translated_by;
};

enum class WitnessType { Theta, K33, ThreeCirclesWithPoles };
const char* witness_type_name(WitnessType t);

/// Order-two symmetry data for the three-circles witness: the generator
/// fixes the poles, preserves each circle setwise and reverses it (its two
/// fixed points' complementary arcs swap). Point and arc maps record the
/// induced permutation of the witness graph; fixed_point_labels documents
/// the reflection's fixed pair on each circle.
struct WitnessInvolution {
  std::string generator;
  std::map<std::string, std::string> point_map;
  std::map<std::string, std::string> arc_map;
  std::vector<std::string> action_fixed_points;
  std::vector<std::string> reversed_circles;
  std::map<std::string, std::pair<std::string, std::string>> fixed_point_labels;
};

struct SymbolicWitness {
  std::vector<FormalBoundaryPoint> points;
  std::vector<WitnessArc> arcs;
  WitnessType claimed_type = WitnessType::Theta;
  std::optional<WitnessInvolution> involution;
};

struct WitnessCheck {
  bool ok = true;
  std::string failure;
};

/// Re-checks every witness invariant against g: point labels are justified
/// by non-adjacency, provenance cycles are induced of length at least four,
/// the abstract graph is a subdivision of the claimed type, and the
/// involution (when present) is a consistent order-two symmetry.
WitnessCheck verify_witness(const SymbolicWitness& w, const SimplicialGraph& g);

/// True when the involution pins the planarity obstruction: both poles fixed
/// and all three circles reversed.
bool obstruction_check(const SymbolicWitness& w);

/// Theta-graph in the boundary, from a Theta subdivision whose branches all
/// have length at least two with some branch of length at least three.
SymbolicWitness theta_witness(const SimplicialGraph& g, const SubdivisionEmbedding& emb);

struct K33BoundaryWitness {
  /// Absent exactly when the embedding is the unsubdivided K33, whose
  /// boundary is a join of Cantor sets (already non-planar).
  std::optional<SymbolicWitness> witness;
  bool join_of_cantor_sets = false;
};

/// Embedded K33 in the boundary, from an induced K33 subdivision.
K33BoundaryWitness k33_boundary_witness(const SimplicialGraph& g, const SubdivisionEmbedding& emb);

/// Embedded K33 in the boundary from the four-circle configuration of an
/// induced Fig5Right subgraph.
SymbolicWitness fig5right_witness(const SimplicialGraph& g, const SubdivisionEmbedding& emb);

/// Three invariant circles joined to two fixed poles, plus the order-two
/// symmetry that obstructs extending the action to the sphere.
SymbolicWitness pi_witness(const SimplicialGraph& g, const SubdivisionEmbedding& emb);

}  // namespace racg

#endif
