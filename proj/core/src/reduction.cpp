#include "racg/reduction.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

#include "racg/errors.hpp"

namespace racg {

const char* terminal_pattern_name(TerminalPattern t) {
  switch (t) {
    case TerminalPattern::InducedK33: return "InducedK33";
    case TerminalPattern::Fig5Left: return "Fig5Left";
    case TerminalPattern::Fig5Right: return "Fig5Right";
  }
  return "?";
}

const char* rewrite_rule_name(RewriteRule r) {
  switch (r) {
    case RewriteRule::ChordWithinBranch: return "ChordWithinBranch";
    case RewriteRule::AdjacentBranchChord: return "AdjacentBranchChord";
    case RewriteRule::DisjointBranchChord: return "DisjointBranchChord";
  }
  return "?";
}

namespace {

using Path = std::vector<std::string>;

Path oriented(const Path& p, const std::string& from) {
  if (p.front() == from) return p;
  if (p.back() == from) return Path(p.rbegin(), p.rend());
  fail(ErrorCode::InternalInvariantViolation, "path does not start or end at " + from);
}

Path reversed(const Path& p) { return Path(p.rbegin(), p.rend()); }

int position_in(const Path& p, const std::string& v) {
  for (size_t i = 0; i < p.size(); ++i)
    if (p[i] == v) return static_cast<int>(i);
  return -1;
}

Path slice(const Path& p, int from, int to) {  // inclusive, from <= to
  return Path(p.begin() + from, p.begin() + to + 1);
}

Path concat(std::initializer_list<Path> parts) {
  Path out;
  for (const Path& part : parts) {
    if (out.empty()) {
      out = part;
    } else {
      if (out.back() != part.front())
        fail(ErrorCode::InternalInvariantViolation, "path concatenation endpoints disagree");
      out.insert(out.end(), part.begin() + 1, part.end());
    }
  }
  return out;
}

// Index arithmetic for the K33 pattern: edge (side-0 slot i, side-1 slot j)
// sits at 3*i + (j - 3) in spec order.
int k33_edge_index(int side0_slot, int side1_slot) { return 3 * side0_slot + side1_slot - 3; }

struct K33View {
  const SubdivisionEmbedding* emb;
  std::array<std::string, 6> img;
  std::map<std::string, int> slot_of;

  explicit K33View(const SubdivisionEmbedding& e) : emb(&e) {
    const PatternSpec& spec = pattern_spec(PatternId::K33);
    for (int i = 0; i < 6; ++i) {
      img[i] = e.image_of(spec.vertex_names[i]);
      slot_of[img[i]] = i;
    }
  }

  const Path& branch(int side0_slot, int side1_slot) const {
    return emb->branches[k33_edge_index(side0_slot, side1_slot)];
  }

  /// Branch id containing an interior label, or -1.
  int branch_of_interior(const std::string& v) const {
    for (size_t i = 0; i < emb->branches.size(); ++i) {
      const Path& p = emb->branches[i];
      for (size_t k = 1; k + 1 < p.size(); ++k)
        if (p[k] == v) return static_cast<int>(i);
    }
    return -1;
  }
};

SubdivisionEmbedding assemble_k33(const SimplicialGraph& g,
                                  const std::array<std::string, 6>& images,
                                  const std::array<Path, 9>& paths) {
  const PatternSpec& spec = pattern_spec(PatternId::K33);
  SubdivisionEmbedding emb;
  emb.pattern = PatternId::K33;
  for (int i = 0; i < 6; ++i) emb.essential_map[spec.vertex_names[i]] = images[i];
  for (int i = 0; i < 3; ++i)
    for (int j = 3; j < 6; ++j)
      emb.branches.push_back(oriented(paths[k33_edge_index(i, j)], images[i]));
  if (auto msg = validate_embedding(g, emb); !msg.empty())
    fail(ErrorCode::InternalInvariantViolation, "constructed K33 invalid: " + msg);
  return emb;
}

std::pair<int, long> cost_of(const SimplicialGraph& g, const SubdivisionEmbedding& emb) {
  return {classify_bad_edges(g, emb).count, emb.total_length()};
}

void require_strictly_smaller(const SimplicialGraph& g, const SubdivisionEmbedding& before,
                              const SubdivisionEmbedding& after) {
  if (cost_of(g, after) >= cost_of(g, before))
    fail(ErrorCode::InternalInvariantViolation, "rewrite failed to shrink the subdivision");
}

}  // namespace

std::optional<SubdivisionEmbedding> rewrite_chord_within_branch(const SimplicialGraph& g,
                                                                const SubdivisionEmbedding& emb,
                                                                const BadEdge& bad) {
  for (size_t bi = 0; bi < emb.branches.size(); ++bi) {
    const Path& p = emb.branches[bi];
    int iu = position_in(p, bad.u);
    int iw = position_in(p, bad.w);
    if (iu < 0 || iw < 0) continue;
    if (iu > iw) std::swap(iu, iw);
    SubdivisionEmbedding out = emb;
    Path shortcut = slice(p, 0, iu);
    const Path tail = slice(p, iw, static_cast<int>(p.size()) - 1);
    shortcut.insert(shortcut.end(), tail.begin(), tail.end());
    out.branches[bi] = std::move(shortcut);
    if (auto msg = validate_embedding(g, out); !msg.empty())
      fail(ErrorCode::InternalInvariantViolation, "chord shortcut invalid: " + msg);
    require_strictly_smaller(g, emb, out);
    return out;
  }
  return std::nullopt;
}

std::optional<SubdivisionEmbedding> rewrite_adjacent_branch_chord(const SimplicialGraph& g,
                                                                  const SubdivisionEmbedding& emb,
                                                                  const BadEdge& bad) {
  if (emb.pattern != PatternId::K33) return std::nullopt;
  K33View view(emb);
  int b1 = view.branch_of_interior(bad.u);
  int b2 = view.branch_of_interior(bad.w);
  if (b1 < 0 || b2 < 0 || b1 == b2) return std::nullopt;
  const PatternSpec& spec = pattern_spec(PatternId::K33);
  int shared = -1;
  {
    const auto& e1 = spec.edges[b1];
    const auto& e2 = spec.edges[b2];
    if (e1.u == e2.u) shared = e1.u;
    if (e1.v == e2.v) shared = e1.v;
    if (shared < 0) return std::nullopt;
  }
  const std::string s = view.img[shared];

  // The segment from the shared essential vertex to w must be subdivided;
  // swap roles if needed (triangle-freeness guarantees one side works).
  std::string v = bad.u, w = bad.w;
  auto seg = [&](int branch, const std::string& t) {
    return position_in(oriented(emb.branches[branch], s), t);
  };
  if (seg(b2, w) < 2) {
    std::swap(v, w);
    std::swap(b1, b2);
  }
  if (seg(b2, w) < 2) return std::nullopt;

  const auto& ev = spec.edges[b1];  // branch carrying v
  const auto& ew = spec.edges[b2];
  const int pv_other = ev.u == shared ? ev.v : ev.u;
  const int pw_other = ew.u == shared ? ew.v : ew.u;
  int third = -1;  // the remaining branch slot opposite the shared vertex
  for (int slot = 0; slot < 6; ++slot)
    if (spec.side_of[slot] != spec.side_of[shared] && slot != pv_other && slot != pw_other)
      third = slot;

  const Path ov = oriented(emb.branches[b1], s);
  const Path ow = oriented(emb.branches[b2], s);
  const int posv = position_in(ov, v);
  const int posw = position_in(ow, w);

  SubdivisionEmbedding out = emb;
  out.essential_map[spec.vertex_names[shared]] = v;
  auto put = [&](int slot_a, int slot_b, const Path& p) {
    const int s0 = spec.side_of[slot_a] == 0 ? slot_a : slot_b;
    const int s1 = s0 == slot_a ? slot_b : slot_a;
    out.branches[k33_edge_index(s0, s1)] =
        oriented(p, out.essential_map.at(spec.vertex_names[s0]));
  };
  auto old_branch = [&](int slot_a, int slot_b) -> const Path& {
    const int s0 = spec.side_of[slot_a] == 0 ? slot_a : slot_b;
    const int s1 = s0 == slot_a ? slot_b : slot_a;
    return view.branch(s0, s1);
  };
  // v takes the shared slot: out along its own branch, across the chord and
  // down w's tail, and back through s onto the third branch.
  put(shared, pv_other, slice(ov, posv, static_cast<int>(ov.size()) - 1));
  put(shared, pw_other, concat({Path{v, w}, slice(ow, posw, static_cast<int>(ow.size()) - 1)}));
  put(shared, third, concat({reversed(slice(ov, 0, posv)), oriented(old_branch(shared, third), s)}));

  if (auto msg = validate_embedding(g, out); !msg.empty())
    fail(ErrorCode::InternalInvariantViolation, "adjacent-branch reroute invalid: " + msg);
  require_strictly_smaller(g, emb, out);
  return out;
}

std::optional<SubdivisionEmbedding> rewrite_disjoint_branch_chord(const SimplicialGraph& g,
                                                                  const SubdivisionEmbedding& emb,
                                                                  const BadEdge& bad) {
  if (emb.pattern != PatternId::K33) return std::nullopt;
  K33View view(emb);
  const PatternSpec& spec = pattern_spec(PatternId::K33);
  int b_alpha = view.branch_of_interior(bad.u);
  int b_gamma = view.branch_of_interior(bad.w);
  std::string v = bad.u, w = bad.w;
  if (b_alpha < 0 || b_gamma < 0) return std::nullopt;
  const auto& ea = spec.edges[b_alpha];
  const auto& eg = spec.edges[b_gamma];
  if (ea.u == eg.u || ea.v == eg.v || ea.u == eg.v || ea.v == eg.u) return std::nullopt;

  const int sa0 = ea.u, sa1 = ea.v;      // alpha endpoints (side 0, side 1)
  const int sg0 = eg.u, sg1 = eg.v;      // gamma endpoints
  const int sb = 3 - sa0 - sg0;          // remaining side-0 slot
  const int sy = 12 - sa1 - sg1;         // remaining side-1 slot
  const Path& delta = view.branch(sb, sy);
  if (delta.size() == 2) return std::nullopt;  // complementary branch is an edge

  const std::string aE = view.img[sa0], xE = view.img[sa1];
  const std::string cE = view.img[sg0], zE = view.img[sg1];
  const std::string bI = view.img[sb], yI = view.img[sy];

  const Path oa = oriented(emb.branches[b_alpha], aE);
  const Path og = oriented(emb.branches[b_gamma], cE);
  const int posv = position_in(oa, v);
  const int posw = position_in(og, w);

  std::array<std::string, 6> images = {v, cE, zE, w, aE, xE};
  std::array<Path, 9> paths;
  paths[k33_edge_index(0, 3)] = Path{v, w};
  paths[k33_edge_index(0, 4)] = reversed(slice(oa, 0, posv));                      // v..aE
  paths[k33_edge_index(0, 5)] = slice(oa, posv, static_cast<int>(oa.size()) - 1);  // v..xE
  paths[k33_edge_index(1, 3)] = slice(og, 0, posw);                                // cE..w
  paths[k33_edge_index(1, 4)] =
      concat({oriented(view.branch(sg0, sy), cE), oriented(view.branch(sa0, sy), yI)});
  paths[k33_edge_index(1, 5)] = oriented(view.branch(sg0, sa1), cE);
  paths[k33_edge_index(2, 3)] = reversed(slice(og, posw, static_cast<int>(og.size()) - 1));
  paths[k33_edge_index(2, 4)] = oriented(view.branch(sa0, sg1), zE);
  paths[k33_edge_index(2, 5)] =
      concat({oriented(view.branch(sb, sg1), zE), oriented(view.branch(sb, sa1), bI)});

  SubdivisionEmbedding out = assemble_k33(g, images, paths);
  require_strictly_smaller(g, emb, out);
  return out;
}

namespace {

// --- Lemma on K5 subdivisions: conversion to a K33 subdivision. ---

struct K5View {
  std::array<std::string, 5> img;
  std::map<std::string, int> slot_of;
  const SubdivisionEmbedding* emb;

  explicit K5View(const SubdivisionEmbedding& e) : emb(&e) {
    const PatternSpec& spec = pattern_spec(PatternId::K5);
    for (int i = 0; i < 5; ++i) {
      img[i] = e.image_of(spec.vertex_names[i]);
      slot_of[img[i]] = i;
    }
  }

  static int edge_index(int u, int v) {
    if (u > v) std::swap(u, v);
    // K5 spec order: (0,1),(0,2),(0,3),(0,4),(1,2),...
    int idx = 0;
    for (int a = 0; a < 5; ++a)
      for (int b = a + 1; b < 5; ++b) {
        if (a == u && b == v) return idx;
        ++idx;
      }
    fail(ErrorCode::InternalInvariantViolation, "bad K5 edge");
  }

  const Path& branch(int u, int v) const { return emb->branches[edge_index(u, v)]; }
};

}  // namespace

K5ToK33Result k5_to_k33(const SimplicialGraph& g, const SubdivisionEmbedding& k5,
                        const SearchOptions& opts) {
  if (!is_triangle_free(g)) fail(ErrorCode::NotTriangleFree, "graph contains a triangle");
  if (k5.pattern != PatternId::K5) fail(ErrorCode::NoK5, "embedding is not a K5 subdivision");
  if (auto msg = validate_embedding(g, k5); !msg.empty())
    fail(ErrorCode::NoK5, "invalid K5 embedding: " + msg);

  auto shortest = find_shortest_subdivision(g, PatternId::K5, opts);
  if (!shortest) fail(ErrorCode::NoK5, "no K5 subdivision found");
  K5View view(*shortest);

  // Interior lookup across the shortest subdivision.
  std::map<std::string, int> branch_of_interior;  // interior label -> edge index
  for (size_t bi = 0; bi < shortest->branches.size(); ++bi) {
    const Path& p = shortest->branches[bi];
    for (size_t k = 1; k + 1 < p.size(); ++k) branch_of_interior[p[k]] = static_cast<int>(bi);
  }

  // Case one: an essential vertex sees the interior of a disjoint branch.
  std::vector<std::string> essentials(view.img.begin(), view.img.end());
  std::sort(essentials.begin(), essentials.end());
  for (const auto& s : essentials) {
    const int slot = view.slot_of[s];
    for (int t_idx : g.neighbors(g.index_of(s))) {
      const std::string t = g.label_of(t_idx);
      auto it = branch_of_interior.find(t);
      if (it == branch_of_interior.end()) continue;
      const PatternSpec& spec = pattern_spec(PatternId::K5);
      const auto& be = spec.edges[it->second];
      if (be.u == slot || be.v == slot) continue;  // incident branch
      // Partition {s, e, d} x {b, c, t} with t interior to the branch [d, e].
      const int d = be.u, e = be.v;
      std::vector<int> rest;
      for (int q = 0; q < 5; ++q)
        if (q != slot && q != d && q != e) rest.push_back(q);
      const int b = rest[0], c = rest[1];
      const Path od = oriented(shortest->branches[it->second], view.img[d]);
      const int post = position_in(od, t);

      std::array<std::string, 6> images = {s, view.img[e], view.img[d],
                                           view.img[b], view.img[c], t};
      std::array<Path, 9> paths;
      paths[k33_edge_index(0, 3)] = view.branch(slot, b);
      paths[k33_edge_index(0, 4)] = view.branch(slot, c);
      paths[k33_edge_index(0, 5)] = Path{s, t};
      paths[k33_edge_index(1, 3)] = view.branch(e, b);
      paths[k33_edge_index(1, 4)] = view.branch(e, c);
      paths[k33_edge_index(1, 5)] = slice(od, post, static_cast<int>(od.size()) - 1);
      paths[k33_edge_index(2, 3)] = view.branch(d, b);
      paths[k33_edge_index(2, 4)] = view.branch(d, c);
      paths[k33_edge_index(2, 5)] = slice(od, 0, post);
      return {g, assemble_k33(g, images, paths), std::nullopt};
    }
  }

  // Case two: double over an essential vertex with two non-adjacent essential
  // neighbors-to-be. Triangle-freeness guarantees such a relabeling exists.
  int slot_a = -1;
  std::array<int, 4> roles{};  // b, c, d, e slots
  for (const auto& s : essentials) {
    const int slot = view.slot_of[s];
    std::vector<int> nonadj, adj;
    for (int q = 0; q < 5; ++q) {
      if (q == slot) continue;
      (g.has_edge(s, view.img[q]) ? adj : nonadj).push_back(q);
    }
    if (nonadj.size() >= 2) {
      slot_a = slot;
      std::sort(nonadj.begin(), nonadj.end(),
                [&](int p, int q) { return view.img[p] < view.img[q]; });
      std::sort(adj.begin(), adj.end(), [&](int p, int q) { return view.img[p] < view.img[q]; });
      roles = {nonadj[0], nonadj[1], -1, -1};
      std::vector<int> rest;
      for (int q = 0; q < 5; ++q)
        if (q != slot && q != nonadj[0] && q != nonadj[1]) rest.push_back(q);
      std::sort(rest.begin(), rest.end(), [&](int p, int q) { return view.img[p] < view.img[q]; });
      roles[2] = rest[0];
      roles[3] = rest[1];
      break;
    }
  }
  if (slot_a < 0)
    fail(ErrorCode::InternalInvariantViolation,
         "no doubling vertex candidate in a triangle-free K5 subdivision");

  const std::string a_img = view.img[slot_a];
  const int rb = roles[0], rc = roles[1], rd = roles[2], re = roles[3];
  DoublingResult dres = double_over(g, a_img);
  const SimplicialGraph& dg = dres.graph;

  std::map<std::string, std::string> primed_of;
  for (const auto& [fresh, orig] : dres.correspondence)
    if (fresh != orig) primed_of[orig] = fresh;
  auto prime = [&](const std::string& s) {
    auto it = primed_of.find(s);
    return it == primed_of.end() ? s : it->second;
  };
  auto prime_path = [&](const Path& p) {
    Path out;
    for (const auto& s : p) out.push_back(prime(s));
    return out;
  };

  // Through-the-link path from t to t' used by the glued subdivision.
  auto through = [&](int role_slot) {
    const Path o = oriented(view.branch(slot_a, role_slot), a_img);
    const Path tail = slice(o, 1, static_cast<int>(o.size()) - 1);  // link vertex .. t
    return concat({reversed(tail), prime_path(tail)});              // t .. link .. t'
  };

  std::array<std::string, 6> images = {view.img[rb], view.img[rd], prime(view.img[rc]),
                                       view.img[rc], view.img[re], prime(view.img[rb])};
  std::array<Path, 9> paths;
  paths[k33_edge_index(0, 3)] = view.branch(rb, rc);
  paths[k33_edge_index(0, 4)] = view.branch(rb, re);
  paths[k33_edge_index(0, 5)] = through(rb);
  paths[k33_edge_index(1, 3)] = view.branch(rd, rc);
  paths[k33_edge_index(1, 4)] = view.branch(rd, re);
  paths[k33_edge_index(1, 5)] =
      concat({through(rd), prime_path(oriented(view.branch(rd, rb), view.img[rd]))});
  paths[k33_edge_index(2, 3)] = through(rc);
  paths[k33_edge_index(2, 4)] =
      concat({through(re), prime_path(oriented(view.branch(re, rc), view.img[re]))});
  paths[k33_edge_index(2, 5)] = prime_path(view.branch(rc, rb));

  return {dg, assemble_k33(dg, images, paths), a_img};
}

namespace {

// --- Case analysis for one reduction step. ---

struct InteriorInfo {
  int branch = -1;
  std::vector<std::string> essential_neighbors;          // via bad edges
  std::map<int, std::vector<std::string>> interior_neighbors;  // branch id -> labels
};

std::map<std::string, InteriorInfo> interior_bad_endpoints(const K33View& view,
                                                           const BadEdgeReport& report) {
  std::map<std::string, InteriorInfo> out;
  auto note = [&](const std::string& v, const std::string& other) {
    const int b = view.branch_of_interior(v);
    if (b < 0) return;  // essential endpoint
    auto& info = out[v];
    info.branch = b;
    const int ob = view.branch_of_interior(other);
    if (ob < 0)
      info.essential_neighbors.push_back(other);
    else
      info.interior_neighbors[ob].push_back(other);
  };
  for (const auto& bad : report.bad_edges) {
    note(bad.u, bad.w);
    note(bad.w, bad.u);
  }
  return out;
}

// Lemma condition: v sees exactly one off-branch essential vertex s, and at
// least one interior vertex on each of the two branches avoiding both v's
// branch and s.
bool lemma_configuration(const K33View& view, const InteriorInfo& info) {
  if (info.essential_neighbors.size() != 1) return false;
  const PatternSpec& spec = pattern_spec(PatternId::K33);
  const auto& ea = spec.edges[info.branch];
  const int ps = view.slot_of.at(info.essential_neighbors.front());
  int hit = 0;
  for (int bi = 0; bi < 9; ++bi) {
    const auto& e = spec.edges[bi];
    if (e.u == ea.u || e.v == ea.v || e.u == ps || e.v == ps) continue;
    if (info.interior_neighbors.count(bi)) ++hit;
  }
  return hit == 2;
}

ReductionAction double_action(const std::string& v) {
  ReductionAction a;
  a.type = ReductionAction::Type::Double;
  a.vertex = v;
  return a;
}

ReductionAction terminal_action(TerminalPattern t) {
  ReductionAction a;
  a.type = ReductionAction::Type::Terminal;
  a.terminal = t;
  return a;
}

ReductionAction rewrite_action(RewriteRule r) {
  ReductionAction a;
  a.type = ReductionAction::Type::ShortenRewrite;
  a.rule = r;
  return a;
}

}  // namespace

namespace {

// Doubling over an endpoint of a bad edge removes that edge, and the proof's
// vertex choice usually yields a strictly smaller canonical bad-edge count in
// the double. It can fail, though: when every glued path is forced through a
// vertex whose chord lands on a shared link vertex, the copied chord keeps
// the count flat. So the candidates are tried in the proof's preference
// order, each validated by re-running the canonical selection in the trial
// double, with the remaining bad-edge endpoints and finally all vertices as
// fallbacks.
std::optional<std::string> first_reducing_double(const SimplicialGraph& g, int current_bad,
                                                 const std::vector<std::string>& preferred,
                                                 const SearchOptions& opts) {
  std::vector<std::string> candidates = preferred;
  for (const auto& v : g.labels())
    if (std::find(candidates.begin(), candidates.end(), v) == candidates.end())
      candidates.push_back(v);
  for (const auto& v : candidates) {
    DoublingResult d = double_over(g, v);
    if (d.graph.vertex_count() > opts.budget)
      fail(ErrorCode::GraphTooLarge, "doubled graph exceeds the search budget");
    auto sel = select_canonical_k33(d.graph, opts);
    if (sel && sel->second.count < current_bad) return v;
  }
  return std::nullopt;
}

}  // namespace

ReductionStep reduce_step(const SimplicialGraph& g, const SubdivisionEmbedding& emb,
                          const BadEdgeReport& report, const SearchOptions& opts) {
  if (!is_triangle_free(g)) fail(ErrorCode::NotTriangleFree, "graph contains a triangle");
  if (emb.pattern != PatternId::K33)
    fail(ErrorCode::InvalidEmbedding, "reduce_step expects a K33 embedding");
  if (auto msg = validate_embedding(g, emb); !msg.empty())
    fail(ErrorCode::InvalidEmbedding, msg);

  ReductionStep step;
  step.graph_before = g;
  step.embedding = emb;
  step.report = report;

  if (report.count == 0) {
    step.action = terminal_action(TerminalPattern::InducedK33);
    return step;
  }

  // Shortening rewrites: only reachable when the caller passed a
  // non-canonical embedding, since the canonical one minimizes (B, length).
  for (const auto& bad : report.bad_edges) {
    if (bad.cls == BadEdgeClass::SameBranch || bad.cls == BadEdgeClass::EssToIncidentBranch) {
      if (rewrite_chord_within_branch(g, emb, bad)) {
        step.action = rewrite_action(RewriteRule::ChordWithinBranch);
        return step;
      }
    }
  }
  for (const auto& bad : report.bad_edges) {
    if (bad.cls == BadEdgeClass::NonEssAdjacentBranches) {
      if (rewrite_adjacent_branch_chord(g, emb, bad)) {
        step.action = rewrite_action(RewriteRule::AdjacentBranchChord);
        return step;
      }
    }
  }
  for (const auto& bad : report.bad_edges) {
    if (bad.cls == BadEdgeClass::NonEssDisjointBranches) {
      if (rewrite_disjoint_branch_chord(g, emb, bad)) {
        step.action = rewrite_action(RewriteRule::DisjointBranchChord);
        return step;
      }
    }
  }

  K33View view(emb);

  // Case one: some bad edge ends on a branch interior. Prefer doubling over
  // interior endpoints whose local configuration fails the lemma's exception
  // shape, then the remaining bad-edge endpoints.
  auto interiors = interior_bad_endpoints(view, report);
  if (!interiors.empty()) {
    std::vector<std::string> preferred;
    for (const auto& [v, info] : interiors)
      if (!lemma_configuration(view, info)) preferred.push_back(v);
    std::set<std::string> endpoint_pool;
    for (const auto& bad : report.bad_edges) {
      endpoint_pool.insert(bad.u);
      endpoint_pool.insert(bad.w);
    }
    for (const auto& v : endpoint_pool)
      if (std::find(preferred.begin(), preferred.end(), v) == preferred.end())
        preferred.push_back(v);
    if (auto v = first_reducing_double(g, report.count, preferred, opts)) {
      step.action = double_action(*v);
      return step;
    }
    fail(ErrorCode::InternalInvariantViolation,
         "no doubling vertex decreases the bad-edge count");
  }

  // Case two: all bad edges join essential vertices on a common side.
  std::array<std::vector<BadEdge>, 2> side_edges;
  for (const auto& bad : report.bad_edges) {
    if (bad.cls != BadEdgeClass::EssEssSameSide)
      fail(ErrorCode::InternalInvariantViolation, "unexpected bad edge class in case two");
    side_edges[pattern_spec(PatternId::K33).side_of[view.slot_of.at(bad.u)]].push_back(bad);
  }
  for (const auto& edges : side_edges)
    if (edges.size() > 2)
      fail(ErrorCode::NotTriangleFree, "three chords on one side force a triangle");

  bool any_single_side = false;
  std::vector<std::string> preferred;
  for (const auto& edges : side_edges) {
    if (edges.size() == 1) {
      any_single_side = true;
      preferred.push_back(std::min(edges.front().u, edges.front().w));
      preferred.push_back(std::max(edges.front().u, edges.front().w));
    }
  }
  if (any_single_side) {
    for (const auto& bad : report.bad_edges)
      for (const auto& v : {bad.u, bad.w})
        if (std::find(preferred.begin(), preferred.end(), v) == preferred.end())
          preferred.push_back(v);
    if (auto v = first_reducing_double(g, report.count, preferred, opts)) {
      step.action = double_action(*v);
      return step;
    }
    fail(ErrorCode::InternalInvariantViolation,
         "no doubling vertex decreases the bad-edge count");
  }
  const bool side0_two = side_edges[0].size() == 2;
  const bool side1_two = side_edges[1].size() == 2;
  if (side0_two != side1_two) {
    step.action = terminal_action(TerminalPattern::Fig5Left);
    return step;
  }
  if (side0_two && side1_two) {
    step.action = terminal_action(TerminalPattern::Fig5Right);
    return step;
  }
  fail(ErrorCode::InternalInvariantViolation, "unclassified case-two configuration");
}

namespace {

std::string shared_vertex(const std::vector<BadEdge>& pair) {
  const auto& e1 = pair[0];
  const auto& e2 = pair[1];
  if (e1.u == e2.u || e1.u == e2.w) return e1.u;
  if (e1.w == e2.u || e1.w == e2.w) return e1.w;
  fail(ErrorCode::InternalInvariantViolation, "two side chords without a shared vertex");
}

// Terminal embedding for Fig5Left / Fig5Right, assembled from the K33
// embedding plus the side chords.
SubdivisionEmbedding build_terminal_embedding(const SimplicialGraph& g,
                                              const SubdivisionEmbedding& emb,
                                              const BadEdgeReport& report, TerminalPattern t) {
  if (t == TerminalPattern::InducedK33) return emb;
  K33View view(emb);
  const PatternSpec& k33 = pattern_spec(PatternId::K33);

  std::array<std::vector<BadEdge>, 2> side_edges;
  for (const auto& bad : report.bad_edges)
    side_edges[k33.side_of[view.slot_of.at(bad.u)]].push_back(bad);

  // Assign middles and flanks per side; sides without chords keep slot order.
  auto side_labels = [&](int side) {
    std::vector<std::string> labels;
    for (int slot = 0; slot < 6; ++slot)
      if (k33.side_of[slot] == side) labels.push_back(view.img[slot]);
    std::sort(labels.begin(), labels.end());
    return labels;
  };
  auto arranged = [&](int side) -> std::array<std::string, 3> {  // {flank, middle, flank}
    auto labels = side_labels(side);
    if (side_edges[side].size() == 2) {
      const std::string mid = shared_vertex(side_edges[side]);
      std::vector<std::string> rest;
      for (const auto& l : labels)
        if (l != mid) rest.push_back(l);
      return {rest[0], mid, rest[1]};
    }
    return {labels[0], labels[1], labels[2]};
  };

  const PatternSpec& spec =
      pattern_spec(t == TerminalPattern::Fig5Left ? PatternId::Fig5Left : PatternId::Fig5Right);
  // The chorded side maps to (x, y, z); for Fig5Right both sides carry chords
  // and side 0 of the K33 maps to (a, b, c).
  int xyz_side = side_edges[1].size() == 2 ? 1 : 0;
  const auto xyz = arranged(xyz_side);
  const auto abc = arranged(1 - xyz_side);

  SubdivisionEmbedding out;
  out.pattern = spec.id;
  const std::array<std::string, 6> images = {abc[0], abc[1], abc[2], xyz[0], xyz[1], xyz[2]};
  for (int i = 0; i < 6; ++i) out.essential_map[spec.vertex_names[i]] = images[i];
  for (size_t ei = 0; ei < spec.edges.size(); ++ei) {
    const auto& e = spec.edges[ei];
    const std::string& iu = images[e.u];
    const std::string& iv = images[e.v];
    if (ei < 9) {
      const int s0 = view.slot_of.at(e.u < 3 ? iu : iv);
      const int s1 = view.slot_of.at(e.u < 3 ? iv : iu);
      out.branches.push_back(oriented(view.branch(s0, s1), iu));
    } else {
      out.branches.push_back(Path{iu, iv});  // chord edge
    }
  }
  if (auto msg = validate_embedding(g, out); !msg.empty())
    fail(ErrorCode::InternalInvariantViolation,
         std::string("terminal embedding invalid: ") + msg);
  return out;
}

}  // namespace

ReductionCertificate reduce(const SimplicialGraph& g, const SearchOptions& opts) {
  if (!is_triangle_free(g)) fail(ErrorCode::NotTriangleFree, "graph contains a triangle");
  if (g.vertex_count() > opts.budget)
    fail(ErrorCode::GraphTooLarge, "input exceeds the search budget");
  if (is_planar(g, opts).planar) fail(ErrorCode::PlanarInput, "graph is planar");

  ReductionCertificate cert;
  cert.initial_graph = g;
  SimplicialGraph cur = g;

  if (!find_subdivision(cur, PatternId::K33, opts)) {
    auto k5 = find_shortest_subdivision(cur, PatternId::K5, opts);
    if (!k5)
      fail(ErrorCode::InternalInvariantViolation,
           "non-planar graph with neither K33 nor K5 subdivision");
    auto conv = k5_to_k33(cur, *k5, opts);
    if (conv.doubled_vertex) {
      ReductionStep step;
      step.graph_before = cur;
      step.embedding = *k5;
      step.report = classify_bad_edges(cur, *k5);
      step.action = double_action(*conv.doubled_vertex);
      cert.steps.push_back(step);
      cert.doubling_sequence.push_back(*conv.doubled_vertex);
      cur = conv.graph;
    }
  }

  std::optional<int> bound;        // doubling steps allowed after the first K33
  std::optional<int> last_k33_bad;
  int k33_doubles = 0;
  for (;;) {
    if (cur.vertex_count() > opts.budget)
      fail(ErrorCode::GraphTooLarge, "doubled graph exceeds the search budget");
    auto sel = select_canonical_k33(cur, opts);
    if (!sel)
      fail(ErrorCode::InternalInvariantViolation, "K33 subdivision vanished during reduction");
    const auto& [emb, report] = *sel;
    if (!bound) bound = report.count + 1;
    if (last_k33_bad && report.count >= *last_k33_bad)
      fail(ErrorCode::InternalInvariantViolation,
           "bad-edge count failed to decrease after doubling");

    ReductionStep step = reduce_step(cur, emb, report, opts);
    cert.steps.push_back(step);
    if (step.action.type == ReductionAction::Type::Terminal) {
      cert.terminal = *step.action.terminal;
      cert.terminal_embedding = build_terminal_embedding(cur, emb, report, cert.terminal);
      break;
    }
    if (step.action.type != ReductionAction::Type::Double)
      fail(ErrorCode::InternalInvariantViolation,
           "canonical embedding produced a rewrite action");
    last_k33_bad = report.count;
    if (++k33_doubles > *bound)
      fail(ErrorCode::InternalInvariantViolation, "doubling bound exceeded");
    cert.doubling_sequence.push_back(*step.action.vertex);
    cur = double_over(cur, *step.action.vertex).graph;
  }
  return cert;
}

namespace {

VerificationResult failure(const std::string& msg) { return {false, msg}; }

}  // namespace

VerificationResult verify_certificate(const ReductionCertificate& cert) {
  if (cert.steps.empty()) return failure("empty certificate");
  if (!(cert.steps.front().graph_before == cert.initial_graph))
    return failure("first step does not start at the initial graph");

  std::vector<std::string> doubles;
  std::optional<int> first_k33_bad;
  std::optional<int> prev_k33_bad;
  for (size_t i = 0; i < cert.steps.size(); ++i) {
    const ReductionStep& step = cert.steps[i];
    const SimplicialGraph& graph = step.graph_before;
    if (!is_triangle_free(graph)) return failure("intermediate graph has a triangle");
    if (auto msg = validate_embedding(graph, step.embedding); !msg.empty())
      return failure("invalid embedding at step " + std::to_string(i) + ": " + msg);

    BadEdgeReport recount;
    try {
      recount = classify_bad_edges(graph, step.embedding);
    } catch (const Error& e) {
      return failure(std::string("report recount failed: ") + e.what());
    }
    if (recount.count != step.report.count || !(recount.bad_edges == step.report.bad_edges))
      return failure("bad-edge report mismatch at step " + std::to_string(i));

    const bool last = i + 1 == cert.steps.size();
    switch (step.action.type) {
      case ReductionAction::Type::Terminal: {
        if (!last) return failure("terminal action before the final step");
        if (!step.action.terminal || *step.action.terminal != cert.terminal)
          return failure("terminal pattern mismatch");
        break;
      }
      case ReductionAction::Type::Double: {
        if (last) return failure("certificate ends on a doubling step");
        if (!step.action.vertex) return failure("doubling step without a vertex");
        doubles.push_back(*step.action.vertex);
        DoublingResult d;
        try {
          d = double_over(graph, *step.action.vertex);
        } catch (const Error& e) {
          return failure(std::string("double replay mismatch: ") + e.what());
        }
        if (!(d.graph == cert.steps[i + 1].graph_before)) return failure("double replay mismatch");
        if (step.embedding.pattern == PatternId::K33) {
          if (prev_k33_bad && step.report.count >= *prev_k33_bad)
            return failure("bad-edge count did not decrease across doubling");
          prev_k33_bad = step.report.count;
        }
        break;
      }
      case ReductionAction::Type::ShortenRewrite: {
        if (last) return failure("certificate ends on a rewrite step");
        const ReductionStep& next = cert.steps[i + 1];
        if (!(next.graph_before == graph)) return failure("rewrite changed the graph");
        auto cost = [](const ReductionStep& s) {
          return std::make_pair(s.report.count, s.embedding.total_length());
        };
        if (cost(next) >= cost(step)) return failure("rewrite did not shrink the subdivision");
        break;
      }
    }
    if (step.embedding.pattern == PatternId::K33 && !first_k33_bad)
      first_k33_bad = step.report.count;
  }

  if (doubles != cert.doubling_sequence) return failure("doubling sequence mismatch");
  SimplicialGraph replay = cert.initial_graph;
  for (const auto& v : cert.doubling_sequence) {
    try {
      replay = double_over(replay, v).graph;
    } catch (const Error& e) {
      return failure(std::string("double replay mismatch: ") + e.what());
    }
  }
  if (!(replay == cert.steps.back().graph_before)) return failure("double replay mismatch");

  if (first_k33_bad && static_cast<int>(doubles.size()) > *first_k33_bad + 1)
    return failure("more doubling steps than the bad-edge bound allows");

  const SimplicialGraph& final_graph = cert.steps.back().graph_before;
  if (auto msg = validate_embedding(final_graph, cert.terminal_embedding); !msg.empty())
    return failure("invalid terminal embedding: " + msg);
  switch (cert.terminal) {
    case TerminalPattern::InducedK33: {
      if (cert.terminal_embedding.pattern != PatternId::K33)
        return failure("terminal pattern mismatch");
      if (classify_bad_edges(final_graph, cert.terminal_embedding).count != 0)
        return failure("not induced");
      break;
    }
    case TerminalPattern::Fig5Left:
      if (cert.terminal_embedding.pattern != PatternId::Fig5Left)
        return failure("terminal pattern mismatch");
      break;
    case TerminalPattern::Fig5Right:
      if (cert.terminal_embedding.pattern != PatternId::Fig5Right)
        return failure("terminal pattern mismatch");
      break;
  }
  return {};
}

}  // namespace racg
