#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "racg/errors.hpp"
#include "racg/subdivision.hpp"

namespace racg {

PlanarityResult is_planar(const SimplicialGraph& g, const SearchOptions& opts) {
  using BoostGraph =
      boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  BoostGraph bg(g.vertex_count());
  for (int i = 0; i < g.vertex_count(); ++i)
    for (int j : g.neighbors(i))
      if (i < j) boost::add_edge(i, j, bg);

  PlanarityResult result;
  result.planar = boost::boyer_myrvold_planarity_test(bg);
  if (result.planar) return result;

  // The classifier consumes subdivision witnesses, not booleans; extract one
  // with the exact search unless the graph is over budget.
  if (g.vertex_count() <= opts.budget) {
    result.witness = find_subdivision(g, PatternId::K33, opts);
    if (!result.witness) result.witness = find_subdivision(g, PatternId::K5, opts);
    if (!result.witness)
      fail(ErrorCode::InternalInvariantViolation,
           "non-planar graph without a Kuratowski subdivision");
  }
  return result;
}

}  // namespace racg
