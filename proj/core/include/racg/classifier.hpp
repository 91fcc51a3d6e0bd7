#ifndef RACG_CLASSIFIER_HPP
#define RACG_CLASSIFIER_HPP

#include <optional>
#include <string>
#include <vector>

#include "racg/graph.hpp"
#include "racg/predicates.hpp"
#include "racg/reduction.hpp"
#include "racg/subdivision.hpp"
#include "racg/witness.hpp"

namespace racg {

enum class VerdictTag {
  GraphPlanarBoundary,
  EveryBoundaryNonPlanar,
  PiObstruction,
  MengerCurve,
  SierpinskiCarpetCandidate,
};
const char* verdict_tag_name(VerdictTag t);

/// A boundary statement together with the hypotheses it is conditional on.
/// Hypotheses the tool cannot check (topological properties of the boundary)
/// are carried verbatim, never silently assumed.
struct Verdict {
  VerdictTag tag;
  std::string citation;
  std::vector<std::string> hypotheses;
  std::string statement;
};

struct ClassificationReport {
  SimplicialGraph input_graph;
  bool triangle_free = false;
  bool graph_planar = false;
  std::optional<SubdivisionEmbedding> kuratowski_witness;
  InseparabilityReport inseparability;
  bool hyperbolic = false;
  bool isolated_flats = false;
  std::string isolated_flats_strategy;
  std::optional<ReductionCertificate> reduction;
  bool reduction_skipped = false;
  std::string reduction_skip_reason;
  std::optional<SymbolicWitness> boundary_witness;
  bool join_of_cantor_sets = false;
  std::optional<bool> pi_obstruction;
  std::vector<Verdict> verdicts;
};

ClassificationReport classify(const SimplicialGraph& g, const SearchOptions& opts = {});

}  // namespace racg

#endif
