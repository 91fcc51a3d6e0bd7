#include "racg/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "racg/errors.hpp"

namespace racg {

SimplicialGraph SimplicialGraph::make(
    std::vector<std::string> vertices,
    const std::vector<std::pair<std::string, std::string>>& edges) {
  std::sort(vertices.begin(), vertices.end());
  for (size_t i = 1; i < vertices.size(); ++i) {
    if (vertices[i] == vertices[i - 1])
      fail(ErrorCode::BadParams, "duplicate vertex label '" + vertices[i] + "'");
  }
  SimplicialGraph g;
  g.labels_ = std::move(vertices);
  const int n = g.vertex_count();
  g.adj_.assign(n, {});
  g.adj_matrix_.assign(n, std::vector<bool>(n, false));
  for (const auto& [u, v] : edges) {
    if (u == v) fail(ErrorCode::SelfLoop, "edge " + u + " -- " + v);
    const int i = g.index_of(u);
    const int j = g.index_of(v);
    if (g.adj_matrix_[i][j]) fail(ErrorCode::DuplicateEdge, "edge " + u + " -- " + v);
    g.adj_matrix_[i][j] = g.adj_matrix_[j][i] = true;
    g.adj_[i].push_back(j);
    g.adj_[j].push_back(i);
    ++g.edge_count_;
  }
  for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());
  return g;
}

SimplicialGraph SimplicialGraph::from_edges(
    const std::vector<std::pair<std::string, std::string>>& edges) {
  std::set<std::string> verts;
  for (const auto& [u, v] : edges) {
    verts.insert(u);
    verts.insert(v);
  }
  return make(std::vector<std::string>(verts.begin(), verts.end()), edges);
}

bool SimplicialGraph::has_vertex(const std::string& v) const {
  return std::binary_search(labels_.begin(), labels_.end(), v);
}

int SimplicialGraph::index_of(const std::string& v) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), v);
  if (it == labels_.end() || *it != v) fail(ErrorCode::UnknownVertex, "'" + v + "'");
  return static_cast<int>(it - labels_.begin());
}

bool SimplicialGraph::has_edge(const std::string& u, const std::string& v) const {
  return adj_matrix_[index_of(u)][index_of(v)];
}

std::vector<std::pair<std::string, std::string>> SimplicialGraph::edges() const {
  std::vector<std::pair<std::string, std::string>> out;
  out.reserve(edge_count_);
  for (int i = 0; i < vertex_count(); ++i)
    for (int j : adj_[i])
      if (i < j) out.emplace_back(labels_[i], labels_[j]);
  return out;
}

bool SimplicialGraph::operator==(const SimplicialGraph& other) const {
  return labels_ == other.labels_ && adj_matrix_ == other.adj_matrix_;
}

std::set<std::string> link(const SimplicialGraph& g, const std::string& v) {
  std::set<std::string> out;
  for (int j : g.neighbors(g.index_of(v))) out.insert(g.label_of(j));
  return out;
}

namespace {

std::string fresh_primed_suffix(const SimplicialGraph& g,
                                const std::vector<std::string>& to_copy) {
  for (int k = 1;; ++k) {
    const std::string suffix = "#" + std::to_string(k);
    bool clash = false;
    for (const auto& s : to_copy) {
      if (g.has_vertex(s + suffix)) {
        clash = true;
        break;
      }
    }
    if (!clash) return suffix;
  }
}

}  // namespace

DoublingResult double_over(const SimplicialGraph& g, const std::string& v) {
  const int vi = g.index_of(v);
  std::set<std::string> lk = link(g, v);

  std::vector<std::string> to_copy;  // vertices outside the closed star of v
  for (const auto& s : g.labels())
    if (s != v && !lk.count(s)) to_copy.push_back(s);
  const std::string suffix = fresh_primed_suffix(g, to_copy);

  DoublingResult result;
  result.doubled_vertex = v;
  auto primed_name = [&](const std::string& s) { return s + suffix; };

  std::vector<std::string> vertices;
  for (const auto& s : g.labels()) {
    if (s == v) continue;
    vertices.push_back(s);
    result.correspondence[s] = s;
  }
  for (const auto& s : to_copy) {
    vertices.push_back(primed_name(s));
    result.correspondence[primed_name(s)] = s;
    result.primed.insert(primed_name(s));
  }

  auto copy2 = [&](const std::string& s) {
    return lk.count(s) ? s : primed_name(s);
  };
  std::set<std::pair<std::string, std::string>> edge_set;
  auto add = [&](std::string a, std::string b) {
    if (b < a) std::swap(a, b);
    edge_set.emplace(std::move(a), std::move(b));
  };
  for (int i = 0; i < g.vertex_count(); ++i) {
    if (i == vi) continue;
    for (int j : g.neighbors(i)) {
      if (j == vi || j < i) continue;
      const std::string& a = g.label_of(i);
      const std::string& b = g.label_of(j);
      add(a, b);
      add(copy2(a), copy2(b));
    }
  }
  result.graph = SimplicialGraph::make(
      vertices, std::vector<std::pair<std::string, std::string>>(edge_set.begin(), edge_set.end()));
  return result;
}

bool is_triangle_free(const SimplicialGraph& g) {
  const int n = g.vertex_count();
  for (int i = 0; i < n; ++i)
    for (int j : g.neighbors(i)) {
      if (j <= i) continue;
      for (int k : g.neighbors(j))
        if (k > j && g.adjacent(i, k)) return false;
    }
  return true;
}

SimplicialGraph induced_subgraph(const SimplicialGraph& g, const std::set<std::string>& keep) {
  std::vector<std::string> vertices;
  for (const auto& s : keep) {
    g.index_of(s);  // validates
    vertices.push_back(s);
  }
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& u : vertices)
    for (const auto& w : vertices)
      if (u < w && g.has_edge(u, w)) edges.emplace_back(u, w);
  return SimplicialGraph::make(vertices, edges);
}

namespace {

std::vector<int> canonical_rotation(const std::vector<int>& cycle) {
  const int len = static_cast<int>(cycle.size());
  int start = 0;
  for (int i = 1; i < len; ++i)
    if (cycle[i] < cycle[start]) start = i;
  const int prev = cycle[(start + len - 1) % len];
  const int next = cycle[(start + 1) % len];
  std::vector<int> out;
  out.reserve(len);
  const int dir = next < prev ? 1 : -1;
  for (int k = 0; k < len; ++k) out.push_back(cycle[((start + dir * k) % len + len) % len]);
  return out;
}

}  // namespace

std::vector<Cycle> enumerate_induced_cycles(const SimplicialGraph& g, int max_length) {
  if (max_length < 3) fail(ErrorCode::BadParams, "max_length must be >= 3");
  const int n = g.vertex_count();
  std::set<std::vector<int>> found;
  std::vector<int> path;
  std::vector<bool> on_path(n, false);

  // Grow paths rooted at their minimum vertex. A vertex adjacent to the root
  // either closes the cycle right away or would leave a chord, so extension
  // stops there; chords into the path interior are rejected outright.
  std::function<void(int)> extend = [&](int root) {
    const int tail = path.back();
    for (int next : g.neighbors(tail)) {
      if (next <= root || on_path[next]) continue;
      bool chord = false;
      for (size_t k = 1; k + 1 < path.size(); ++k)
        if (g.adjacent(next, path[k])) {
          chord = true;
          break;
        }
      if (chord) continue;
      const bool closes = g.adjacent(next, root);
      path.push_back(next);
      on_path[next] = true;
      if (closes && path.size() >= 3) found.insert(canonical_rotation(path));
      if ((path.size() == 2 || !closes) && static_cast<int>(path.size()) < max_length)
        extend(root);
      on_path[next] = false;
      path.pop_back();
    }
  };

  for (int root = 0; root < n; ++root) {
    path = {root};
    on_path.assign(n, false);
    on_path[root] = true;
    extend(root);
  }

  std::vector<Cycle> out;
  for (const auto& idx_cycle : found) {
    Cycle c;
    for (int i : idx_cycle) c.vertices.push_back(g.label_of(i));
    out.push_back(std::move(c));
  }
  return out;
}

bool are_isomorphic(const SimplicialGraph& a, const SimplicialGraph& b) {
  const int n = a.vertex_count();
  if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> deg_a(n), deg_b(n);
  for (int i = 0; i < n; ++i) {
    deg_a[i] = a.degree(i);
    deg_b[i] = b.degree(i);
  }
  {
    auto sa = deg_a, sb = deg_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  std::vector<int> map_ab(n, -1);
  std::vector<bool> used(n, false);
  std::function<bool(int)> assign = [&](int i) {
    if (i == n) return true;
    for (int j = 0; j < n; ++j) {
      if (used[j] || deg_a[i] != deg_b[j]) continue;
      bool ok = true;
      for (int k = 0; k < i; ++k)
        if (a.adjacent(i, k) != b.adjacent(j, map_ab[k])) {
          ok = false;
          break;
        }
      if (!ok) continue;
      map_ab[i] = j;
      used[j] = true;
      if (assign(i + 1)) return true;
      used[j] = false;
      map_ab[i] = -1;
    }
    return false;
  };
  return assign(0);
}

}  // namespace racg
