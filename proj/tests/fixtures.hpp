#ifndef RACG_TESTS_FIXTURES_HPP
#define RACG_TESTS_FIXTURES_HPP

#include "racg/graph.hpp"
#include "racg/io.hpp"

namespace fixtures {

inline racg::SimplicialGraph k33s1() { return racg::generate("k33_subdiv", {1}); }
inline racg::SimplicialGraph k5s1() { return racg::generate("k5_subdiv", {1}); }
inline racg::SimplicialGraph pi1() { return racg::generate("pi", {1}); }
inline racg::SimplicialGraph fig5r1() { return racg::generate("fig5_right", {1}); }
inline racg::SimplicialGraph mobius(int n) { return racg::generate("mobius", {n}); }

// Theta graph with branch lengths 2, 2, 3 between p and q.
inline racg::SimplicialGraph theta233() {
  return racg::SimplicialGraph::from_edges({
      {"p", "m1"}, {"m1", "q"},            // branch of length 2
      {"p", "n1"}, {"n1", "q"},            // branch of length 2
      {"p", "o1"}, {"o1", "o2"}, {"o2", "q"},  // branch of length 3
  });
}

inline racg::SimplicialGraph cycle(int n) { return racg::generate("cycle", {n}); }

}  // namespace fixtures

#endif
