#ifndef RACG_PREDICATES_HPP
#define RACG_PREDICATES_HPP

#include <optional>
#include <string>
#include <vector>

#include "racg/graph.hpp"

namespace racg {

/// Connectivity report for the four separator shapes relevant to
/// triangle-free graphs: single vertex, edge, non-adjacent pair, and
/// non-adjacent pair plus common neighbor. Each witness, removed from the
/// graph, leaves at least two components.
struct InseparabilityReport {
  bool connected = false;
  std::optional<std::vector<std::string>> separating_vertex;
  std::optional<std::vector<std::string>> separating_edge;
  std::optional<std::vector<std::string>> cut_pair;
  std::optional<std::vector<std::string>> separating_vertex_suspension;
  bool inseparable = false;
};

InseparabilityReport is_inseparable(const SimplicialGraph& g);

/// No induced square: Moussong's condition specialized to triangle-free
/// defining graphs.
bool is_hyperbolic_racg(const SimplicialGraph& g);

/// Pluggable isolated-flats criterion; the classifier records which strategy
/// produced its verdict.
struct IsolatedFlatsStrategy {
  std::string name;
  bool (*evaluate)(const SimplicialGraph&);
};

/// Default strategy "caprace-k23-default": no non-adjacent pair with three or
/// more common neighbors (no induced K_{2,3}).
const IsolatedFlatsStrategy& default_isolated_flats_strategy();

bool has_isolated_flats(const SimplicialGraph& g,
                        const IsolatedFlatsStrategy& strategy = default_isolated_flats_strategy());

}  // namespace racg

#endif
