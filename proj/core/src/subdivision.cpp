#include "racg/subdivision.hpp"

#include <algorithm>
#include <array>
#include <climits>
#include <functional>

#include "racg/errors.hpp"

namespace racg {

std::set<std::string> SubdivisionEmbedding::image_vertices() const {
  std::set<std::string> out;
  for (const auto& [pv, gv] : essential_map) out.insert(gv);
  for (const auto& path : branches) out.insert(path.begin(), path.end());
  return out;
}

std::set<std::pair<std::string, std::string>> SubdivisionEmbedding::image_edges() const {
  std::set<std::pair<std::string, std::string>> out;
  for (const auto& path : branches)
    for (size_t i = 0; i + 1 < path.size(); ++i) {
      auto a = path[i], b = path[i + 1];
      if (b < a) std::swap(a, b);
      out.emplace(a, b);
    }
  return out;
}

int SubdivisionEmbedding::total_length() const {
  int len = 0;
  for (const auto& path : branches) len += static_cast<int>(path.size()) - 1;
  return len;
}

const std::string& SubdivisionEmbedding::image_of(const std::string& pattern_vertex) const {
  auto it = essential_map.find(pattern_vertex);
  if (it == essential_map.end())
    fail(ErrorCode::InvalidEmbedding, "no image for pattern vertex '" + pattern_vertex + "'");
  return it->second;
}

const char* bad_edge_class_name(BadEdgeClass c) {
  switch (c) {
    case BadEdgeClass::SameBranch: return "SameBranch";
    case BadEdgeClass::NonEssAdjacentBranches: return "NonEssAdjacentBranches";
    case BadEdgeClass::NonEssDisjointBranches: return "NonEssDisjointBranches";
    case BadEdgeClass::EssToIncidentBranch: return "EssToIncidentBranch";
    case BadEdgeClass::EssToDisjointBranch: return "EssToDisjointBranch";
    case BadEdgeClass::EssEssSameSide: return "EssEssSameSide";
  }
  return "?";
}

std::string validate_embedding(const SimplicialGraph& g, const SubdivisionEmbedding& emb) {
  const PatternSpec& spec = pattern_spec(emb.pattern);
  const int m = static_cast<int>(spec.vertex_names.size());
  if (static_cast<int>(emb.branches.size()) != static_cast<int>(spec.edges.size()))
    return "branch count does not match pattern";

  std::vector<std::string> images(m);
  std::set<std::string> image_set;
  for (int i = 0; i < m; ++i) {
    auto it = emb.essential_map.find(spec.vertex_names[i]);
    if (it == emb.essential_map.end())
      return "missing image for pattern vertex " + spec.vertex_names[i];
    if (!g.has_vertex(it->second)) return "image vertex '" + it->second + "' not in graph";
    images[i] = it->second;
    if (!image_set.insert(it->second).second)
      return "essential map is not injective at '" + it->second + "'";
  }

  std::set<std::string> interior_seen;
  std::set<std::pair<std::string, std::string>> single_edges_seen;
  for (size_t bi = 0; bi < emb.branches.size(); ++bi) {
    const auto& e = spec.edges[bi];
    const auto& path = emb.branches[bi];
    if (path.size() < 2) return "branch " + pattern_edge_name(spec, bi) + " is degenerate";
    if (path.front() != images[e.u] || path.back() != images[e.v])
      return "branch " + pattern_edge_name(spec, bi) + " endpoints do not match images";
    if (e.kind == BranchKind::ForcedEdge && path.size() != 2)
      return "branch " + pattern_edge_name(spec, bi) + " must be a single edge";
    if (e.kind == BranchKind::ForcedSubdivided && path.size() < 3)
      return "branch " + pattern_edge_name(spec, bi) + " must be subdivided";
    for (size_t i = 0; i + 1 < path.size(); ++i) {
      if (!g.has_vertex(path[i]) || !g.has_edge(path[i], path[i + 1]))
        return "branch " + pattern_edge_name(spec, bi) + " is not a path in the graph";
    }
    for (size_t i = 1; i + 1 < path.size(); ++i) {
      if (image_set.count(path[i]))
        return "interior vertex '" + path[i] + "' collides with an essential image";
      if (!interior_seen.insert(path[i]).second)
        return "interior vertex '" + path[i] + "' is used by two branches";
    }
    if (path.size() == 2) {
      auto a = path.front(), b = path.back();
      if (b < a) std::swap(a, b);
      if (!single_edges_seen.emplace(a, b).second)
        return "two parallel branches map to the same edge";
    }
  }

  if (spec.induced) {
    auto img_edges = emb.image_edges();
    std::set<std::string> all = emb.image_vertices();
    for (const auto& u : all)
      for (const auto& w : all) {
        if (u >= w || !g.has_edge(u, w)) continue;
        if (!img_edges.count({u, w}))
          return "image is not induced: extra edge " + u + " -- " + w;
      }
  }
  return "";
}

BadEdgeReport classify_bad_edges(const SimplicialGraph& g, const SubdivisionEmbedding& emb) {
  if (auto msg = validate_embedding(g, emb); !msg.empty())
    fail(ErrorCode::InvalidEmbedding, msg);
  const PatternSpec& spec = pattern_spec(emb.pattern);

  // Locate every image vertex: essential images carry their incident
  // branches, interiors carry exactly one.
  std::map<std::string, std::vector<int>> branches_of;
  std::set<std::string> essential;
  for (const auto& [pv, gv] : emb.essential_map) essential.insert(gv);
  for (size_t bi = 0; bi < emb.branches.size(); ++bi)
    for (const auto& v : emb.branches[bi]) branches_of[v].push_back(static_cast<int>(bi));

  auto share_branch = [&](const std::string& u, const std::string& w) {
    for (int bu : branches_of[u])
      for (int bw : branches_of[w])
        if (bu == bw) return true;
    return false;
  };
  auto branches_adjacent = [&](int b1, int b2) {
    const auto& e1 = spec.edges[b1];
    const auto& e2 = spec.edges[b2];
    return e1.u == e2.u || e1.u == e2.v || e1.v == e2.u || e1.v == e2.v;
  };

  auto img_edges = emb.image_edges();
  std::set<std::string> all = emb.image_vertices();
  BadEdgeReport report;
  report.embedding = emb;
  for (const auto& u : all)
    for (const auto& w : all) {
      if (u >= w || !g.has_edge(u, w) || img_edges.count({u, w})) continue;
      BadEdge be;
      be.u = u;
      be.w = w;
      const bool ue = essential.count(u), we = essential.count(w);
      if (ue && we) {
        be.cls = share_branch(u, w) ? BadEdgeClass::SameBranch : BadEdgeClass::EssEssSameSide;
      } else if (ue || we) {
        const std::string& interior = ue ? w : u;
        const int bi = branches_of[interior].front();
        const std::string& ess = ue ? u : w;
        const auto& e = spec.edges[bi];
        const bool incident = emb.image_of(spec.vertex_names[e.u]) == ess ||
                              emb.image_of(spec.vertex_names[e.v]) == ess;
        be.cls = incident ? BadEdgeClass::EssToIncidentBranch : BadEdgeClass::EssToDisjointBranch;
      } else {
        const int b1 = branches_of[u].front();
        const int b2 = branches_of[w].front();
        if (b1 == b2)
          be.cls = BadEdgeClass::SameBranch;
        else
          be.cls = branches_adjacent(b1, b2) ? BadEdgeClass::NonEssAdjacentBranches
                                             : BadEdgeClass::NonEssDisjointBranches;
      }
      report.bad_edges.push_back(std::move(be));
    }
  report.count = static_cast<int>(report.bad_edges.size());
  return report;
}

namespace {

struct IndexedEmbedding {
  std::vector<int> img;                  // pattern vertex -> graph index
  std::vector<std::vector<int>> paths;   // per pattern edge
  int total_len = 0;
  int bad = 0;
};

// Canonical key: sorted essential images, then the sorted list of branch
// paths, each oriented toward its lexicographically smaller reading.
std::vector<std::string> canonical_key(const SimplicialGraph& g, const IndexedEmbedding& e) {
  std::vector<std::string> key;
  for (int v : e.img) key.push_back(g.label_of(v));
  std::sort(key.begin(), key.end());
  std::vector<std::string> paths;
  for (const auto& p : e.paths) {
    std::string fwd, rev;
    for (int v : p) fwd += g.label_of(v) + "|";
    for (auto it = p.rbegin(); it != p.rend(); ++it) rev += g.label_of(*it) + "|";
    paths.push_back(std::min(fwd, rev));
  }
  std::sort(paths.begin(), paths.end());
  key.insert(key.end(), paths.begin(), paths.end());
  return key;
}

class Searcher {
 public:
  enum class Mode { FirstFound, Minimize };

  Searcher(const SimplicialGraph& g, const PatternSpec& spec, const SearchOptions& opts,
           Mode mode, int bad_cap)
      : g_(g), spec_(spec), opts_(opts), mode_(mode), bad_cap_(bad_cap) {
    n_ = g_.vertex_count();
    m_ = static_cast<int>(spec_.vertex_names.size());
    k_ = static_cast<int>(spec_.edges.size());
    if (spec_.induced) bad_cap_ = std::min(bad_cap_, 0);
  }

  std::optional<IndexedEmbedding> run() {
    if (n_ > opts_.budget)
      fail(ErrorCode::GraphTooLarge,
           std::to_string(n_) + " vertices exceeds search budget " + std::to_string(opts_.budget));
    candidates_.assign(m_, {});
    for (int pv = 0; pv < m_; ++pv)
      for (int v = 0; v < n_; ++v)
        if (g_.degree(v) >= spec_.min_degree[pv]) candidates_[pv].push_back(v);
    for (int pv = 0; pv < m_; ++pv)
      if (candidates_[pv].empty()) return std::nullopt;

    build_orders();
    build_distances();
    base_length_ = 0;
    for (const auto& e : spec_.edges)
      base_length_ += e.kind == BranchKind::ForcedSubdivided ? 2 : 1;
    img_.assign(m_, -1);
    in_image_.assign(n_, false);
    image_list_.clear();
    img_edge_.assign(n_, std::vector<char>(n_, 0));
    paths_.assign(k_, {});
    partial_bad_ = 0;
    placed_len_ = 0;
    dist_bound_ = 0;
    found_ = false;
    best_.reset();

    try {
      assign(0);
    } catch (const EarlyStop&) {
    }
    return best_;
  }

 private:
  struct EarlyStop {};

  void build_orders() {
    // Assign pattern vertices so constrained ones come early.
    assign_order_.clear();
    std::vector<bool> chosen(m_, false);
    for (int step = 0; step < m_; ++step) {
      int best = -1, best_score = -1;
      for (int pv = 0; pv < m_; ++pv) {
        if (chosen[pv]) continue;
        int score = 0;
        for (const auto& e : spec_.edges)
          if ((e.u == pv && chosen[e.v]) || (e.v == pv && chosen[e.u]))
            score += e.kind == BranchKind::ForcedEdge ? 4 : 1;
        if (score > best_score) {
          best_score = score;
          best = pv;
        }
      }
      chosen[best] = true;
      assign_order_.push_back(best);
    }
    // Route forced edges first, then everything else in spec order.
    route_order_.clear();
    for (int e = 0; e < k_; ++e)
      if (spec_.edges[e].kind == BranchKind::ForcedEdge) route_order_.push_back(e);
    for (int e = 0; e < k_; ++e)
      if (spec_.edges[e].kind != BranchKind::ForcedEdge) route_order_.push_back(e);
  }

  void tick() {
    if (++ticks_ % 4096 == 0 && opts_.deadline &&
        std::chrono::steady_clock::now() > *opts_.deadline)
      fail(ErrorCode::DeadlineExceeded, "subdivision search deadline exceeded");
  }

  void build_distances() {
    dist_.assign(n_, std::vector<int>(n_, kUnreachable));
    std::vector<int> queue;
    for (int s = 0; s < n_; ++s) {
      auto& d = dist_[s];
      d[s] = 0;
      queue.assign(1, s);
      for (size_t head = 0; head < queue.size(); ++head) {
        const int v = queue[head];
        for (int w : g_.neighbors(v))
          if (d[w] == kUnreachable) {
            d[w] = d[v] + 1;
            queue.push_back(w);
          }
      }
    }
  }

  // Lower bound on the length of a branch for pattern edge e between
  // graph vertices s and t.
  int edge_length_bound(int e, int s, int t) const {
    const int d = dist_[s][t];
    if (d == kUnreachable) return kUnreachable;
    return std::max(d, spec_.edges[e].kind == BranchKind::ForcedSubdivided ? 2 : 1);
  }

  // Edges between assigned essentials that can never belong to the image:
  // pattern non-edges, and forced-subdivided pairs that are graph-adjacent.
  bool assignment_feasible(int pv, int gv, int* extra_bad) {
    *extra_bad = 0;
    for (int q = 0; q < m_; ++q) {
      if (img_[q] < 0 || q == pv) continue;
      const PatternEdgeSpec* edge = nullptr;
      for (const auto& e : spec_.edges)
        if ((e.u == pv && e.v == q) || (e.v == pv && e.u == q)) {
          edge = &e;
          break;
        }
      const bool adj = g_.adjacent(gv, img_[q]);
      if (edge == nullptr) {
        if (adj) ++*extra_bad;
      } else if (edge->kind == BranchKind::ForcedEdge) {
        if (!adj) return false;
      } else if (edge->kind == BranchKind::ForcedSubdivided) {
        if (adj) ++*extra_bad;
      }
    }
    return partial_bad_ + *extra_bad <= bad_cap_;
  }

  bool orbit_minimal() const {
    for (const auto& sigma : spec_.automorphisms) {
      for (int i = 0; i < m_; ++i) {
        const int a = img_[sigma[i]];
        const int b = img_[i];
        if (a < b) goto reject_check;  // transformed tuple smaller: not minimal
        if (a > b) break;
      }
      continue;
    reject_check:
      return false;
    }
    return true;
  }

  // Sum over pattern edges at pv with an already-assigned other endpoint of
  // the distance-based length bound; kUnreachable when some branch cannot be
  // routed at all.
  int bound_delta(int pv, int gv) const {
    int delta = 0;
    for (int e = 0; e < k_; ++e) {
      const auto& edge = spec_.edges[e];
      int other = -1;
      if (edge.u == pv) other = edge.v;
      else if (edge.v == pv) other = edge.u;
      else continue;
      if (img_[other] < 0) continue;
      const int b = edge_length_bound(e, gv, img_[other]);
      if (b == kUnreachable) return kUnreachable;
      delta += b - (edge.kind == BranchKind::ForcedSubdivided ? 2 : 1);
    }
    return delta;
  }

  void assign(int pos) {
    tick();
    if (pos == m_) {
      if (!orbit_minimal()) return;
      route_bound_.assign(k_ + 1, 0);
      for (int i = k_ - 1; i >= 0; --i) {
        const int e = route_order_[i];
        route_bound_[i] =
            route_bound_[i + 1] + edge_length_bound(e, img_[spec_.edges[e].u], img_[spec_.edges[e].v]);
      }
      route(0);
      return;
    }
    const int pv = assign_order_[pos];
    for (int gv : candidates_[pv]) {
      if (in_image_[gv]) continue;
      int extra = 0;
      if (!assignment_feasible(pv, gv, &extra)) continue;
      const int delta = bound_delta(pv, gv);
      if (delta == kUnreachable) continue;
      if (mode_ == Mode::Minimize && best_ &&
          dist_bound_ + delta + base_length_ > best_->total_len)
        continue;
      img_[pv] = gv;
      in_image_[gv] = true;
      image_list_.push_back(gv);
      partial_bad_ += extra;
      dist_bound_ += delta;
      assign(pos + 1);
      dist_bound_ -= delta;
      partial_bad_ -= extra;
      image_list_.pop_back();
      in_image_[gv] = false;
      img_[pv] = -1;
    }
  }

  void route(int route_pos) {
    tick();
    if (mode_ == Mode::Minimize && best_ &&
        placed_len_ + route_bound_[route_pos] > best_->total_len)
      return;
    if (route_pos == k_) {
      complete();
      return;
    }
    const int e = route_order_[route_pos];
    const auto& edge = spec_.edges[e];
    const int start = img_[edge.u];
    const int target = img_[edge.v];

    if (edge.kind == BranchKind::ForcedEdge) {
      // Adjacency was checked during assignment.
      paths_[e] = {start, target};
      img_edge_[start][target] = img_edge_[target][start] = 1;
      ++placed_len_;
      route(route_pos + 1);
      --placed_len_;
      img_edge_[start][target] = img_edge_[target][start] = 0;
      paths_[e].clear();
      return;
    }

    path_.assign(1, start);
    extend(route_pos, e, start, target);
  }

  // Count of graph edges from w into the current image, excluding the path
  // predecessor and the branch target (the target edge may become an image
  // edge on closing; leaving it out keeps the count a true lower bound).
  int interior_delta(int w, int pred, int target) const {
    int d = 0;
    for (int q : g_.neighbors(w))
      if (in_image_[q] && q != pred && q != target) ++d;
    return d;
  }

  void extend(int route_pos, int e, int cur, int target) {
    tick();
    const auto& edge = spec_.edges[e];
    for (int next : g_.neighbors(cur)) {
      if (next == target) {
        const int len = static_cast<int>(path_.size());
        if (edge.kind == BranchKind::ForcedSubdivided && len < 2) continue;
        if (!parallel_ok(e, target)) continue;
        close_branch(route_pos, e, target);
        continue;
      }
      if (in_image_[next]) continue;
      if (dist_[next][target] == kUnreachable) continue;
      if (mode_ == Mode::Minimize && best_ &&
          placed_len_ + static_cast<int>(path_.size()) + dist_[next][target] +
                  route_bound_[route_pos + 1] >
              best_->total_len)
        continue;
      const int delta = interior_delta(next, cur, target);
      if (partial_bad_ + delta > bad_cap_) continue;
      path_.push_back(next);
      in_image_[next] = true;
      image_list_.push_back(next);
      img_edge_[cur][next] = img_edge_[next][cur] = 1;
      partial_bad_ += delta;
      extend(route_pos, e, next, target);
      partial_bad_ -= delta;
      img_edge_[cur][next] = img_edge_[next][cur] = 0;
      image_list_.pop_back();
      in_image_[next] = false;
      path_.pop_back();
    }
  }

  // Parallel pattern edges must carry strictly increasing paths; this both
  // removes duplicate work and rejects two parallel single-edge branches.
  bool parallel_ok(int e, int target) const {
    const auto& edge = spec_.edges[e];
    for (int prev = 0; prev < e; ++prev) {
      const auto& pe = spec_.edges[prev];
      if (pe.u != edge.u || pe.v != edge.v || paths_[prev].empty()) continue;
      std::vector<int> mine = path_;
      mine.push_back(target);
      if (canonical_path(mine) <= canonical_path(paths_[prev])) return false;
    }
    return true;
  }

  static std::vector<int> canonical_path(std::vector<int> p) {
    std::vector<int> r(p.rbegin(), p.rend());
    return std::min(p, r);
  }

  void close_branch(int route_pos, int e, int target) {
    const int last = path_.back();
    paths_[e] = path_;
    paths_[e].push_back(target);
    img_edge_[last][target] = img_edge_[target][last] = 1;
    const int len = static_cast<int>(paths_[e].size()) - 1;
    placed_len_ += len;
    // An uncovered chord between branch endpoints becomes permanently bad.
    const int chord = (len > 1 && g_.adjacent(paths_[e].front(), target)) ? 1 : 0;
    partial_bad_ += chord;

    std::vector<int> saved = path_;
    if (partial_bad_ <= bad_cap_) route(route_pos + 1);
    path_ = std::move(saved);

    partial_bad_ -= chord;
    placed_len_ -= len;
    img_edge_[last][target] = img_edge_[target][last] = 0;
    paths_[e].clear();
  }

  int exact_bad() const {
    int bad = 0;
    for (size_t i = 0; i < image_list_.size(); ++i)
      for (size_t j = i + 1; j < image_list_.size(); ++j) {
        const int u = image_list_[i], w = image_list_[j];
        if (g_.adjacent(u, w) && !img_edge_[u][w]) ++bad;
      }
    return bad;
  }

  void complete() {
    const int bad = exact_bad();
    if (bad > bad_cap_) return;
    IndexedEmbedding emb;
    emb.img = img_;
    emb.paths = paths_;
    emb.total_len = placed_len_;
    emb.bad = bad;
    if (mode_ == Mode::FirstFound) {
      best_ = std::move(emb);
      found_ = true;
      throw EarlyStop{};
    }
    if (!best_ || emb.total_len < best_->total_len ||
        (emb.total_len == best_->total_len &&
         canonical_key(g_, emb) < canonical_key(g_, *best_))) {
      best_ = std::move(emb);
    }
  }

  static constexpr int kUnreachable = 1 << 20;

  const SimplicialGraph& g_;
  const PatternSpec& spec_;
  SearchOptions opts_;
  Mode mode_;
  int bad_cap_;
  int n_ = 0, m_ = 0, k_ = 0;

  std::vector<std::vector<int>> candidates_;
  std::vector<int> assign_order_, route_order_;
  std::vector<std::vector<int>> dist_;
  std::vector<int> route_bound_;
  std::vector<int> img_;
  std::vector<char> in_image_;
  std::vector<int> image_list_;
  std::vector<std::vector<char>> img_edge_;
  std::vector<std::vector<int>> paths_;
  std::vector<int> path_;
  int partial_bad_ = 0;
  int placed_len_ = 0;
  int dist_bound_ = 0;
  int base_length_ = 0;
  bool found_ = false;
  long ticks_ = 0;
  std::optional<IndexedEmbedding> best_;
};

SubdivisionEmbedding to_embedding(const SimplicialGraph& g, const PatternSpec& spec,
                                  const IndexedEmbedding& idx) {
  SubdivisionEmbedding emb;
  emb.pattern = spec.id;
  for (int pv = 0; pv < static_cast<int>(spec.vertex_names.size()); ++pv)
    emb.essential_map[spec.vertex_names[pv]] = g.label_of(idx.img[pv]);
  for (const auto& p : idx.paths) {
    std::vector<std::string> path;
    for (int v : p) path.push_back(g.label_of(v));
    emb.branches.push_back(std::move(path));
  }
  return emb;
}

}  // namespace

std::optional<SubdivisionEmbedding> find_subdivision(const SimplicialGraph& g, PatternId pattern,
                                                     const SearchOptions& opts) {
  const PatternSpec& spec = pattern_spec(pattern);
  Searcher s(g, spec, opts, Searcher::Mode::FirstFound, INT_MAX);
  auto res = s.run();
  if (!res) return std::nullopt;
  return to_embedding(g, spec, *res);
}

std::optional<SubdivisionEmbedding> find_shortest_subdivision(const SimplicialGraph& g,
                                                              PatternId pattern,
                                                              const SearchOptions& opts) {
  const PatternSpec& spec = pattern_spec(pattern);
  Searcher s(g, spec, opts, Searcher::Mode::Minimize, INT_MAX);
  auto res = s.run();
  if (!res) return std::nullopt;
  return to_embedding(g, spec, *res);
}

std::optional<std::pair<SubdivisionEmbedding, BadEdgeReport>> select_canonical_k33(
    const SimplicialGraph& g, const SearchOptions& opts) {
  const PatternSpec& spec = pattern_spec(PatternId::K33);
  Searcher any(g, spec, opts, Searcher::Mode::FirstFound, INT_MAX);
  auto first = any.run();
  if (!first) return std::nullopt;

  // Stage the bad-edge cap upward: the first stage that admits an embedding
  // pins the global minimum B, and the stage search already minimizes length
  // and breaks ties canonically.
  for (int cap = 0; cap <= first->bad; ++cap) {
    Searcher stage(g, spec, opts, Searcher::Mode::Minimize, cap);
    if (auto res = stage.run()) {
      SubdivisionEmbedding emb = to_embedding(g, spec, *res);
      BadEdgeReport report = classify_bad_edges(g, emb);
      return std::make_pair(std::move(emb), std::move(report));
    }
  }
  fail(ErrorCode::InternalInvariantViolation, "staged search missed the witness embedding");
}

}  // namespace racg
