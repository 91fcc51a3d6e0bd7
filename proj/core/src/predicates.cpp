#include "racg/predicates.hpp"

#include <algorithm>

#include "racg/errors.hpp"

namespace racg {

namespace {

void require_triangle_free(const SimplicialGraph& g) {
  if (!is_triangle_free(g)) fail(ErrorCode::NotTriangleFree, "graph contains a triangle");
}

int component_count_without(const SimplicialGraph& g, const std::vector<int>& removed) {
  const int n = g.vertex_count();
  std::vector<char> gone(n, 0), seen(n, 0);
  for (int v : removed) gone[v] = 1;
  int components = 0;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (gone[s] || seen[s]) continue;
    ++components;
    stack.push_back(s);
    seen[s] = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v))
        if (!gone[w] && !seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
  }
  return components;
}

bool separates(const SimplicialGraph& g, const std::vector<int>& removed) {
  return component_count_without(g, removed) >= 2;
}

std::vector<std::string> to_labels(const SimplicialGraph& g, const std::vector<int>& idx) {
  std::vector<std::string> out;
  for (int v : idx) out.push_back(g.label_of(v));
  return out;
}

}  // namespace

InseparabilityReport is_inseparable(const SimplicialGraph& g) {
  require_triangle_free(g);
  const int n = g.vertex_count();
  InseparabilityReport report;
  report.connected = n > 0 && component_count_without(g, {}) == 1;

  for (int v = 0; v < n && !report.separating_vertex; ++v)
    if (separates(g, {v})) report.separating_vertex = to_labels(g, {v});

  for (int u = 0; u < n && !report.separating_edge; ++u)
    for (int w : g.neighbors(u)) {
      if (w <= u) continue;
      if (separates(g, {u, w})) {
        report.separating_edge = to_labels(g, {u, w});
        break;
      }
    }

  for (int u = 0; u < n && !report.cut_pair; ++u)
    for (int w = u + 1; w < n; ++w) {
      if (g.adjacent(u, w)) continue;
      if (separates(g, {u, w})) {
        report.cut_pair = to_labels(g, {u, w});
        break;
      }
    }

  for (int u = 0; u < n && !report.separating_vertex_suspension; ++u)
    for (int w = u + 1; w < n && !report.separating_vertex_suspension; ++w) {
      if (g.adjacent(u, w)) continue;
      for (int c = 0; c < n; ++c) {
        if (c == u || c == w || !g.adjacent(c, u) || !g.adjacent(c, w)) continue;
        if (separates(g, {u, w, c})) {
          report.separating_vertex_suspension = to_labels(g, {u, w, c});
          break;
        }
      }
    }

  report.inseparable = report.connected && !report.separating_vertex &&
                       !report.separating_edge && !report.cut_pair &&
                       !report.separating_vertex_suspension;
  return report;
}

bool is_hyperbolic_racg(const SimplicialGraph& g) {
  require_triangle_free(g);
  for (const Cycle& c : enumerate_induced_cycles(g, 4))
    if (c.length() == 4) return false;
  return true;
}

namespace {

bool no_induced_k23(const SimplicialGraph& g) {
  const int n = g.vertex_count();
  for (int u = 0; u < n; ++u)
    for (int w = u + 1; w < n; ++w) {
      if (g.adjacent(u, w)) continue;
      int common = 0;
      for (int c : g.neighbors(u))
        if (g.adjacent(c, w)) ++common;
      if (common >= 3) return false;
    }
  return true;
}

}  // namespace

const IsolatedFlatsStrategy& default_isolated_flats_strategy() {
  static const IsolatedFlatsStrategy strategy{"caprace-k23-default", &no_induced_k23};
  return strategy;
}

bool has_isolated_flats(const SimplicialGraph& g, const IsolatedFlatsStrategy& strategy) {
  require_triangle_free(g);
  return strategy.evaluate(g);
}

}  // namespace racg
