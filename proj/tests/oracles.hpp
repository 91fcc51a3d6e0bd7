// Brute-force reference implementations used only by tests. These stay
// deliberately naive and independent of the search code they check.
#ifndef RACG_TESTS_ORACLES_HPP
#define RACG_TESTS_ORACLES_HPP

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "racg/graph.hpp"
#include "racg/pattern.hpp"

namespace oracles {

// All induced cycles of length <= max_len by subset enumeration: a vertex
// subset spans an induced cycle iff its induced subgraph is connected and
// two-regular.
inline int count_induced_cycles(const racg::SimplicialGraph& g, int max_len) {
  const int n = g.vertex_count();
  int count = 0;
  for (int mask = 0; mask < (1 << n); ++mask) {
    const int size = __builtin_popcount(mask);
    if (size < 3 || size > max_len) continue;
    std::vector<int> verts;
    for (int v = 0; v < n; ++v)
      if (mask & (1 << v)) verts.push_back(v);
    bool two_regular = true;
    for (int v : verts) {
      int deg = 0;
      for (int w : verts)
        if (w != v && g.adjacent(v, w)) ++deg;
      if (deg != 2) {
        two_regular = false;
        break;
      }
    }
    if (!two_regular) continue;
    // connected?
    std::set<int> seen{verts[0]};
    std::vector<int> stack{verts[0]};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : verts)
        if (g.adjacent(v, w) && !seen.count(w)) {
          seen.insert(w);
          stack.push_back(w);
        }
    }
    if (static_cast<int>(seen.size()) == size) ++count;
  }
  return count;
}

// Plain subdivision search: try every injective essential assignment and
// every system of internally disjoint paths, no pruning beyond validity.
class SubdivisionOracle {
 public:
  SubdivisionOracle(const racg::SimplicialGraph& g, racg::PatternId pattern)
      : g_(g), spec_(racg::pattern_spec(pattern)), n_(g.vertex_count()) {}

  bool exists() {
    found_ = false;
    min_bad_ = -1;
    run(false);
    return found_;
  }

  // Minimum number of bad edges over all embeddings, or -1 if none exists.
  int min_bad_edges() {
    found_ = false;
    min_bad_ = -1;
    run(true);
    return min_bad_;
  }

 private:
  void run(bool exhaustive) {
    const int m = static_cast<int>(spec_.vertex_names.size());
    img_.assign(m, -1);
    used_.assign(n_, false);
    exhaustive_ = exhaustive;
    assign(0);
  }

  void assign(size_t pos) {
    if (found_ && !exhaustive_) return;
    const int m = static_cast<int>(spec_.vertex_names.size());
    if (pos == static_cast<size_t>(m)) {
      paths_.assign(spec_.edges.size(), {});
      route(0);
      return;
    }
    for (int v = 0; v < n_; ++v) {
      if (used_[v]) continue;
      img_[pos] = v;
      used_[v] = true;
      assign(pos + 1);
      used_[v] = false;
      img_[pos] = -1;
    }
  }

  void route(size_t edge) {
    if (found_ && !exhaustive_) return;
    if (edge == spec_.edges.size()) {
      found_ = true;
      if (exhaustive_) {
        const int b = bad_edges();
        if (min_bad_ < 0 || b < min_bad_) min_bad_ = b;
      }
      return;
    }
    const auto& e = spec_.edges[edge];
    std::vector<int> path{img_[e.u]};
    extend(edge, path, img_[e.v]);
  }

  void extend(size_t edge, std::vector<int>& path, int target) {
    if (found_ && !exhaustive_) return;
    const int cur = path.back();
    for (int next = 0; next < n_; ++next) {
      if (!g_.adjacent(cur, next)) continue;
      if (next == target) {
        const auto& e = spec_.edges[edge];
        if (e.kind == racg::BranchKind::ForcedEdge && path.size() != 1) continue;
        if (e.kind == racg::BranchKind::ForcedSubdivided && path.size() < 2) continue;
        // reject a duplicate parallel single edge
        bool dup = false;
        if (path.size() == 1)
          for (size_t p = 0; p < edge; ++p)
            if (paths_[p].size() == 2 &&
                ((paths_[p].front() == cur && paths_[p].back() == target) ||
                 (paths_[p].front() == target && paths_[p].back() == cur)))
              dup = true;
        if (dup) continue;
        paths_[edge] = path;
        paths_[edge].push_back(target);
        route(edge + 1);
        paths_[edge].clear();
        continue;
      }
      if (used_[next]) continue;
      used_[next] = true;
      path.push_back(next);
      extend(edge, path, target);
      path.pop_back();
      used_[next] = false;
    }
  }

  int bad_edges() const {
    std::set<int> verts(img_.begin(), img_.end());
    std::set<std::pair<int, int>> lambda_edges;
    for (const auto& p : paths_)
      for (size_t i = 0; i + 1 < p.size(); ++i) {
        verts.insert(p[i]);
        verts.insert(p[i + 1]);
        lambda_edges.insert({std::min(p[i], p[i + 1]), std::max(p[i], p[i + 1])});
      }
    int bad = 0;
    for (int u : verts)
      for (int w : verts)
        if (u < w && g_.adjacent(u, w) && !lambda_edges.count({u, w})) ++bad;
    return bad;
  }

  const racg::SimplicialGraph& g_;
  const racg::PatternSpec& spec_;
  int n_;
  std::vector<int> img_;
  std::vector<bool> used_;
  std::vector<std::vector<int>> paths_;
  bool found_ = false;
  bool exhaustive_ = false;
  int min_bad_ = -1;
};

inline bool has_subdivision(const racg::SimplicialGraph& g, racg::PatternId pattern) {
  return SubdivisionOracle(g, pattern).exists();
}

inline bool planar_by_kuratowski(const racg::SimplicialGraph& g) {
  return !has_subdivision(g, racg::PatternId::K5) && !has_subdivision(g, racg::PatternId::K33);
}

// Separator scans written from the definitions, independent of the library.
inline bool separator_disconnects(const racg::SimplicialGraph& g, const std::set<int>& cut) {
  const int n = g.vertex_count();
  std::vector<int> keep;
  for (int v = 0; v < n; ++v)
    if (!cut.count(v)) keep.push_back(v);
  if (keep.empty()) return false;
  std::set<int> seen{keep.front()};
  std::vector<int> stack{keep.front()};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : keep)
      if (g.adjacent(v, w) && !seen.count(w)) {
        seen.insert(w);
        stack.push_back(w);
      }
  }
  return seen.size() != keep.size();
}

inline bool inseparable_by_scan(const racg::SimplicialGraph& g) {
  const int n = g.vertex_count();
  if (n == 0 || separator_disconnects(g, {})) return false;
  for (int v = 0; v < n; ++v)
    if (separator_disconnects(g, {v})) return false;
  for (int u = 0; u < n; ++u)
    for (int w = u + 1; w < n; ++w) {
      if (g.adjacent(u, w)) {
        if (separator_disconnects(g, {u, w})) return false;
      } else {
        if (separator_disconnects(g, {u, w})) return false;
        for (int c = 0; c < n; ++c)
          if (c != u && c != w && g.adjacent(c, u) && g.adjacent(c, w) &&
              separator_disconnects(g, {u, w, c}))
            return false;
      }
    }
  return true;
}

// --- random graph generators (seeded by the caller) ---

inline racg::SimplicialGraph random_graph(int n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<std::string> verts;
  for (int i = 0; i < n; ++i) verts.push_back("v" + std::to_string(i));
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) edges.emplace_back(verts[i], verts[j]);
  return racg::SimplicialGraph::make(verts, edges);
}

inline racg::SimplicialGraph random_connected_graph(int n, double p, std::mt19937& rng) {
  for (;;) {
    auto g = random_graph(n, p, rng);
    if (!separator_disconnects(g, {})) return g;
  }
}

inline racg::SimplicialGraph random_triangle_free(int n, double p, std::mt19937& rng) {
  for (;;) {
    auto g = random_graph(n, p, rng);
    if (racg::is_triangle_free(g)) return g;
  }
}

}  // namespace oracles

#endif
