#include "racg/witness.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <set>

#include "racg/errors.hpp"

namespace racg {

const char* witness_type_name(WitnessType t) {
  switch (t) {
    case WitnessType::Theta: return "Theta";
    case WitnessType::K33: return "K33";
    case WitnessType::ThreeCirclesWithPoles: return "ThreeCirclesWithPoles";
  }
  return "?";
}

namespace {

using Path = std::vector<std::string>;

std::string limit_label(const std::string& u, const std::string& v) {
  return "(" + u + " " + v + ")^inf";
}

FormalBoundaryPoint limit_point(const std::string& u, const std::string& v) {
  return {limit_label(u, v), std::make_pair(u, v)};
}

FormalBoundaryPoint named_point(const std::string& label) { return {label, std::nullopt}; }

Path reversed(const Path& p) { return Path(p.rbegin(), p.rend()); }

// Joins oriented paths into a closed cycle vertex list (closing vertex not
// repeated).
Path make_cycle(const std::vector<Path>& parts) {
  Path out;
  for (const Path& part : parts) {
    if (out.empty()) {
      out = part;
    } else {
      if (out.back() != part.front())
        fail(ErrorCode::InternalInvariantViolation, "cycle segments do not meet");
      out.insert(out.end(), part.begin() + 1, part.end());
    }
  }
  if (out.front() != out.back())
    fail(ErrorCode::InternalInvariantViolation, "cycle does not close");
  out.pop_back();
  return out;
}

std::string induced_cycle_failure(const SimplicialGraph& g, const Path& cycle) {
  const int len = static_cast<int>(cycle.size());
  if (len < 4) return "cycle has length " + std::to_string(len) + " < 4";
  std::set<std::string> seen(cycle.begin(), cycle.end());
  if (static_cast<int>(seen.size()) != len) return "cycle repeats a vertex";
  for (int i = 0; i < len; ++i) {
    if (!g.has_vertex(cycle[i])) return "cycle vertex '" + cycle[i] + "' not in graph";
    if (!g.has_edge(cycle[i], cycle[(i + 1) % len])) return "cycle not closed in graph";
  }
  for (int i = 0; i < len; ++i)
    for (int j = i + 2; j < len; ++j) {
      if (i == 0 && j == len - 1) continue;
      if (g.has_edge(cycle[i], cycle[j]))
        return "cycle not induced: chord " + cycle[i] + " -- " + cycle[j];
    }
  return "";
}

// --- abstract multigraph recognition ---

struct Multigraph {
  int n = 0;
  std::vector<std::vector<int>> mult;

  explicit Multigraph(int size) : n(size), mult(size, std::vector<int>(size, 0)) {}
  void add(int a, int b) {
    ++mult[a][b];
    ++mult[b][a];
  }
  int degree(int v) const {
    int d = 0;
    for (int w = 0; w < n; ++w) d += mult[v][w];
    return d;
  }
};

// Suppress degree-two vertices whose neighbors are distinct.
Multigraph smooth(Multigraph g) {
  std::vector<bool> removed(g.n, false);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < g.n; ++v) {
      if (removed[v] || g.degree(v) != 2) continue;
      std::vector<int> nbrs;
      for (int w = 0; w < g.n; ++w)
        for (int k = 0; k < g.mult[v][w]; ++k) nbrs.push_back(w);
      if (nbrs.size() != 2 || nbrs[0] == nbrs[1]) continue;
      g.mult[v][nbrs[0]] = g.mult[nbrs[0]][v] = 0;
      g.mult[v][nbrs[1]] = g.mult[nbrs[1]][v] = 0;
      ++g.mult[nbrs[0]][nbrs[1]];
      ++g.mult[nbrs[1]][nbrs[0]];
      removed[v] = true;
      changed = true;
    }
  }
  std::vector<int> keep;
  for (int v = 0; v < g.n; ++v)
    if (!removed[v]) keep.push_back(v);
  Multigraph out(static_cast<int>(keep.size()));
  for (size_t i = 0; i < keep.size(); ++i)
    for (size_t j = 0; j < keep.size(); ++j) out.mult[i][j] = g.mult[keep[i]][keep[j]];
  return out;
}

bool multigraphs_isomorphic(const Multigraph& a, const Multigraph& b) {
  if (a.n != b.n) return false;
  std::vector<int> da(a.n), db(b.n);
  for (int v = 0; v < a.n; ++v) da[v] = a.degree(v);
  for (int v = 0; v < b.n; ++v) db[v] = b.degree(v);
  {
    auto sa = da, sb = db;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  std::vector<int> map(a.n, -1);
  std::vector<bool> used(b.n, false);
  std::function<bool(int)> go = [&](int v) {
    if (v == a.n) return true;
    for (int w = 0; w < b.n; ++w) {
      if (used[w] || da[v] != db[w]) continue;
      bool ok = true;
      for (int u = 0; u < v; ++u)
        if (a.mult[v][u] != b.mult[w][map[u]]) {
          ok = false;
          break;
        }
      if (!ok) continue;
      map[v] = w;
      used[w] = true;
      if (go(v + 1)) return true;
      used[w] = false;
      map[v] = -1;
    }
    return false;
  };
  return go(0);
}

const Multigraph& reference_pattern(WitnessType t) {
  static const Multigraph theta = [] {
    Multigraph g(2);
    for (int i = 0; i < 3; ++i) g.add(0, 1);
    return g;
  }();
  static const Multigraph k33 = [] {
    Multigraph g(6);
    for (int i = 0; i < 3; ++i)
      for (int j = 3; j < 6; ++j) g.add(i, j);
    return g;
  }();
  static const Multigraph three_circles = [] {
    // poles 0 and 1; circle i joins nodes 2+i and 5+i by a pair of arcs
    Multigraph g(8);
    for (int i = 0; i < 3; ++i) {
      g.add(2 + i, 5 + i);
      g.add(2 + i, 5 + i);
      g.add(0, 2 + i);
      g.add(1, 5 + i);
    }
    return g;
  }();
  switch (t) {
    case WitnessType::Theta: return theta;
    case WitnessType::K33: return k33;
    case WitnessType::ThreeCirclesWithPoles: return three_circles;
  }
  fail(ErrorCode::InternalInvariantViolation, "bad witness type");
}

std::vector<std::string> circle_names(const SymbolicWitness& w) {
  std::set<std::string> names;
  for (const auto& arc : w.arcs) {
    auto pos = arc.name.find(":half");
    if (pos != std::string::npos) names.insert(arc.name.substr(0, pos));
  }
  return {names.begin(), names.end()};
}

}  // namespace

WitnessCheck verify_witness(const SymbolicWitness& w, const SimplicialGraph& g) {
  auto failed = [](std::string msg) { return WitnessCheck{false, std::move(msg)}; };

  std::map<std::string, int> point_index;
  for (const auto& p : w.points) {
    if (point_index.count(p.label)) return failed("duplicate point label " + p.label);
    point_index[p.label] = static_cast<int>(point_index.size());
    if (p.generators) {
      const auto& [u, v] = *p.generators;
      if (!g.has_vertex(u) || !g.has_vertex(v))
        return failed("point " + p.label + " references unknown generators");
      if (g.has_edge(u, v))
        return failed("point " + p.label + " generators are adjacent (finite order)");
    }
  }

  std::set<std::string> arc_names;
  for (const auto& arc : w.arcs) {
    if (!arc_names.insert(arc.name).second) return failed("duplicate arc name " + arc.name);
    if (!point_index.count(arc.from) || !point_index.count(arc.to))
      return failed("arc " + arc.name + " has an unknown endpoint");
    if (auto msg = induced_cycle_failure(g, arc.cycle); !msg.empty())
      return failed("arc " + arc.name + ": " + msg);
    std::set<std::string> on_cycle(arc.cycle.begin(), arc.cycle.end());
    if (arc.side.empty()) return failed("arc " + arc.name + " has an empty side");
    for (const auto& s : arc.side)
      if (!on_cycle.count(s)) return failed("arc " + arc.name + " side leaves its cycle");
    if (arc.translated_by && !on_cycle.count(*arc.translated_by))
      return failed("arc " + arc.name + " translated by a generator off its cycle");
    for (const auto& label : {arc.from, arc.to}) {
      const auto& p = w.points[point_index[label]];
      if (!p.generators) continue;
      if (!on_cycle.count(p.generators->first) || !on_cycle.count(p.generators->second))
        return failed("arc " + arc.name + " endpoint " + label + " not on its cycle");
    }
  }

  Multigraph abstract(static_cast<int>(w.points.size()));
  for (const auto& arc : w.arcs) abstract.add(point_index[arc.from], point_index[arc.to]);
  if (!multigraphs_isomorphic(smooth(abstract), reference_pattern(w.claimed_type)))
    return failed(std::string("abstract graph is not a subdivision of ") +
                  witness_type_name(w.claimed_type));

  if (w.involution) {
    const auto& inv = *w.involution;
    if (!g.has_vertex(inv.generator)) return failed("involution generator not in graph");
    auto is_permutation = [](const std::map<std::string, std::string>& m,
                             const std::set<std::string>& domain) {
      std::set<std::string> image;
      for (const auto& [k, v] : m) {
        if (!domain.count(k) || !domain.count(v)) return false;
        image.insert(v);
      }
      return m.size() == domain.size() && image.size() == domain.size();
    };
    std::set<std::string> point_labels;
    for (const auto& p : w.points) point_labels.insert(p.label);
    if (!is_permutation(inv.point_map, point_labels))
      return failed("involution point map is not a permutation of the points");
    if (!is_permutation(inv.arc_map, arc_names))
      return failed("involution arc map is not a permutation of the arcs");
    for (const auto& [k, v] : inv.point_map)
      if (inv.point_map.at(v) != k) return failed("point map is not an involution");
    for (const auto& [k, v] : inv.arc_map)
      if (inv.arc_map.at(v) != k) return failed("arc map is not an involution");
    std::map<std::string, std::pair<std::string, std::string>> ends;
    for (const auto& arc : w.arcs) ends[arc.name] = {arc.from, arc.to};
    for (const auto& [name, image] : inv.arc_map) {
      auto [f1, t1] = ends[name];
      auto [f2, t2] = ends[image];
      const std::string mf = inv.point_map.at(f1);
      const std::string mt = inv.point_map.at(t1);
      if (!((mf == f2 && mt == t2) || (mf == t2 && mt == f2)))
        return failed("arc map is inconsistent with endpoint incidence at " + name);
    }
    for (const auto& p : inv.action_fixed_points) {
      if (!point_labels.count(p)) return failed("action-fixed point " + p + " is not a point");
      if (inv.point_map.at(p) != p) return failed("action-fixed point " + p + " moves");
    }
    for (const auto& name : inv.reversed_circles) {
      const std::string h1 = name + ":half1";
      const std::string h2 = name + ":half2";
      if (!arc_names.count(h1) || !arc_names.count(h2))
        return failed("reversed circle " + name + " has no halves");
      if (inv.arc_map.at(h1) != h2) return failed("circle " + name + " is not reversed");
    }
  }
  return {};
}

bool obstruction_check(const SymbolicWitness& w) {
  if (w.claimed_type != WitnessType::ThreeCirclesWithPoles || !w.involution) return false;
  const auto& inv = *w.involution;
  auto circles = circle_names(w);
  if (circles.size() != 3) return false;
  for (const auto& name : circles)
    if (std::find(inv.reversed_circles.begin(), inv.reversed_circles.end(), name) ==
        inv.reversed_circles.end())
      return false;
  // Poles: the points meeting no circle half.
  std::set<std::string> on_circles;
  for (const auto& arc : w.arcs)
    if (arc.name.find(":half") != std::string::npos) {
      on_circles.insert(arc.from);
      on_circles.insert(arc.to);
    }
  std::vector<std::string> poles;
  for (const auto& p : w.points)
    if (!on_circles.count(p.label)) poles.push_back(p.label);
  if (poles.size() != 2) return false;
  for (const auto& pole : poles) {
    if (std::find(inv.action_fixed_points.begin(), inv.action_fixed_points.end(), pole) ==
        inv.action_fixed_points.end())
      return false;
    auto it = inv.point_map.find(pole);
    if (it == inv.point_map.end() || it->second != pole) return false;
  }
  return true;
}

namespace {

void require_valid(const SimplicialGraph& g, const SubdivisionEmbedding& emb, PatternId expected,
                   ErrorCode mismatch_code) {
  if (emb.pattern != expected)
    fail(mismatch_code, std::string("expected a ") + pattern_name(expected) + " embedding");
  if (auto msg = validate_embedding(g, emb); !msg.empty()) fail(mismatch_code, msg);
}

void require_induced_cycle(const SimplicialGraph& g, const Path& cycle, ErrorCode code) {
  if (auto msg = induced_cycle_failure(g, cycle); !msg.empty()) fail(code, msg);
}

}  // namespace

SymbolicWitness theta_witness(const SimplicialGraph& g, const SubdivisionEmbedding& emb) {
  require_valid(g, emb, PatternId::Theta, ErrorCode::InvalidEmbedding);

  std::vector<Path> branches = emb.branches;
  for (const Path& b : branches)
    if (b.size() < 3) fail(ErrorCode::BranchTooShort, "every branch must have length at least 2");
  // Longest branch first, so the branch shared by the two cycles below has
  // length at least three.
  std::stable_sort(branches.begin(), branches.end(),
                   [](const Path& p, const Path& q) { return p.size() > q.size(); });
  if (branches[0].size() < 4)
    fail(ErrorCode::BranchTooShort, "some branch must have length at least 3");

  const std::string p_img = emb.image_of("p");
  const std::string q_img = emb.image_of("q");
  const std::string a = std::min(p_img, q_img);
  const std::string b = std::max(p_img, q_img);
  for (auto& br : branches)
    if (br.front() != a) br = reversed(br);

  const Path d2 = make_cycle({branches[0], reversed(branches[1])});
  const Path d3 = make_cycle({branches[0], reversed(branches[2])});
  require_induced_cycle(g, d2, ErrorCode::InvalidEmbedding);
  require_induced_cycle(g, d3, ErrorCode::InvalidEmbedding);

  SymbolicWitness w;
  w.claimed_type = WitnessType::Theta;
  w.points = {limit_point(a, b), limit_point(b, a)};
  w.arcs = {
      {"D2:half1", limit_label(a, b), limit_label(b, a), d2, branches[0], std::nullopt},
      {"D2:half2", limit_label(b, a), limit_label(a, b), d2, branches[1], std::nullopt},
      {"Z", limit_label(a, b), limit_label(b, a), d3, branches[2], std::nullopt},
  };
  return w;
}

namespace {

// Oriented branch lookup for a K33 embedding, slots ordered a,b,c,x,y,z.
struct BranchTable {
  std::array<std::string, 6> img;
  std::array<Path, 9> path;

  explicit BranchTable(const SubdivisionEmbedding& emb) {
    const PatternSpec& spec = pattern_spec(PatternId::K33);
    for (int i = 0; i < 6; ++i) img[i] = emb.image_of(spec.vertex_names[i]);
    for (int e = 0; e < 9; ++e) path[e] = emb.branches[e];
  }

  const Path& branch(int s0, int s1) const { return path[3 * s0 + s1 - 3]; }
  Path from(int s0, int s1, int start_slot) const {
    const Path& p = branch(s0, s1);
    return p.front() == img[start_slot] ? p : reversed(p);
  }
};

}  // namespace

K33BoundaryWitness k33_boundary_witness(const SimplicialGraph& g,
                                        const SubdivisionEmbedding& emb) {
  require_valid(g, emb, PatternId::K33, ErrorCode::InvalidEmbedding);
  if (classify_bad_edges(g, emb).count != 0)
    fail(ErrorCode::NotInduced, "the K33 subdivision must be induced");
  if (emb.total_length() == 9) return {std::nullopt, true};

  // Relabel so the branch between the a and x roles is subdivided: take the
  // subdivided branch with the smallest endpoint images.
  const PatternSpec& spec = pattern_spec(PatternId::K33);
  int chosen = -1;
  std::pair<std::string, std::string> best_key;
  for (int e = 0; e < 9; ++e) {
    if (emb.branches[e].size() < 3) continue;
    const auto& pe = spec.edges[e];
    const std::string iu = emb.image_of(spec.vertex_names[pe.u]);
    const std::string iv = emb.image_of(spec.vertex_names[pe.v]);
    std::pair<std::string, std::string> key = {std::min(iu, iv), std::max(iu, iv)};
    if (chosen < 0 || key < best_key) {
      chosen = e;
      best_key = key;
    }
  }

  BranchTable tab(emb);
  const int sa = spec.edges[chosen].u;
  const int sx = spec.edges[chosen].v;
  std::vector<int> side0_rest, side1_rest;
  for (int s = 0; s < 3; ++s)
    if (s != sa) side0_rest.push_back(s);
  for (int s = 3; s < 6; ++s)
    if (s != sx) side1_rest.push_back(s);
  auto by_img = [&](int p, int q) { return tab.img[p] < tab.img[q]; };
  std::sort(side0_rest.begin(), side0_rest.end(), by_img);
  std::sort(side1_rest.begin(), side1_rest.end(), by_img);
  const int sb = side0_rest[0], sc = side0_rest[1];
  const int sy = side1_rest[0], sz = side1_rest[1];
  const std::string a = tab.img[sa], b = tab.img[sb], c = tab.img[sc];
  const std::string x = tab.img[sx], y = tab.img[sy], z = tab.img[sz];

  const Path d2 = make_cycle({tab.from(sa, sx, sx), tab.from(sa, sy, sa), tab.from(sb, sy, sy),
                              tab.from(sb, sx, sb)});
  const Path d3 = make_cycle({tab.from(sa, sx, sx), tab.from(sa, sz, sa), tab.from(sb, sz, sz),
                              tab.from(sb, sx, sb)});
  const Path d2p = make_cycle({tab.from(sa, sx, sx), tab.from(sa, sy, sa), tab.from(sc, sy, sy),
                               tab.from(sc, sx, sc)});
  const Path d3p = make_cycle({tab.from(sa, sx, sx), tab.from(sa, sz, sa), tab.from(sc, sz, sz),
                               tab.from(sc, sx, sc)});
  for (const Path* cycle : {&d2, &d3, &d2p, &d3p})
    require_induced_cycle(g, *cycle, ErrorCode::InternalInvariantViolation);

  SymbolicWitness w;
  w.claimed_type = WitnessType::K33;
  w.points = {limit_point(a, b), limit_point(b, a), limit_point(x, y),
              limit_point(y, x), limit_point(c, a), limit_point(z, x)};
  w.arcs = {
      {"D2:ax", limit_label(a, b), limit_label(x, y), d2, tab.branch(sa, sx), std::nullopt},
      {"D2:bx", limit_label(x, y), limit_label(b, a), d2, tab.branch(sb, sx), std::nullopt},
      {"D2:by", limit_label(b, a), limit_label(y, x), d2, tab.branch(sb, sy), std::nullopt},
      {"D2:ay", limit_label(y, x), limit_label(a, b), d2, tab.branch(sa, sy), std::nullopt},
      {"Z:az", limit_label(a, b), limit_label(z, x), d3, tab.branch(sa, sz), std::nullopt},
      {"Z:bz", limit_label(z, x), limit_label(b, a), d3, tab.branch(sb, sz), std::nullopt},
      {"A:cy", limit_label(x, y), limit_label(c, a), d2p, tab.branch(sc, sy), std::nullopt},
      {"A:cx", limit_label(c, a), limit_label(y, x), d2p, tab.branch(sc, sx), std::nullopt},
      {"B:cz", limit_label(c, a), limit_label(z, x), d3p, tab.branch(sc, sz), std::nullopt},
  };
  return {std::move(w), false};
}

namespace {

// Branch lookup by pattern vertex names for the two six-vertex patterns.
struct NamedBranches {
  const PatternSpec* spec;
  const SubdivisionEmbedding* emb;
  std::map<std::string, std::string> img;

  NamedBranches(const PatternSpec& s, const SubdivisionEmbedding& e) : spec(&s), emb(&e) {
    for (const auto& name : s.vertex_names) img[name] = e.image_of(name);
  }

  Path branch(const std::string& u, const std::string& v) const {
    for (size_t e = 0; e < spec->edges.size(); ++e) {
      const auto& pe = spec->edges[e];
      if ((spec->vertex_names[pe.u] == u && spec->vertex_names[pe.v] == v) ||
          (spec->vertex_names[pe.u] == v && spec->vertex_names[pe.v] == u)) {
        const Path& p = emb->branches[e];
        return p.front() == img.at(u) ? p : reversed(p);
      }
    }
    fail(ErrorCode::InternalInvariantViolation, "missing branch " + u + "-" + v);
  }
};

}  // namespace

SymbolicWitness fig5right_witness(const SimplicialGraph& g, const SubdivisionEmbedding& emb) {
  require_valid(g, emb, PatternId::Fig5Right, ErrorCode::PatternMismatch);
  NamedBranches nb(pattern_spec(PatternId::Fig5Right), emb);

  const Path d1 =
      make_cycle({nb.branch("x", "c"), nb.branch("c", "z"), nb.branch("z", "a"), nb.branch("a", "x")});
  const Path d2 =
      make_cycle({nb.branch("x", "b"), nb.branch("b", "z"), nb.branch("z", "y"), nb.branch("y", "x")});
  const Path d3 =
      make_cycle({nb.branch("c", "b"), nb.branch("b", "a"), nb.branch("a", "y"), nb.branch("y", "c")});
  const Path d4 = make_cycle({nb.branch("b", "z"), nb.branch("z", "y"), nb.branch("y", "b")});
  for (const Path* cycle : {&d1, &d2, &d3, &d4})
    require_induced_cycle(g, *cycle, ErrorCode::PatternMismatch);

  const std::string a = nb.img["a"], b = nb.img["b"], c = nb.img["c"];
  const std::string x = nb.img["x"], y = nb.img["y"], z = nb.img["z"];
  SymbolicWitness w;
  w.claimed_type = WitnessType::K33;
  w.points = {limit_point(b, y), limit_point(y, b), limit_point(c, a),
              limit_point(a, c), limit_point(z, x), limit_point(x, z)};
  w.arcs = {
      {"D1:cx", limit_label(x, z), limit_label(c, a), d1, nb.branch("c", "x"), std::nullopt},
      {"D1:cz", limit_label(c, a), limit_label(z, x), d1, nb.branch("c", "z"), std::nullopt},
      {"D1:az", limit_label(z, x), limit_label(a, c), d1, nb.branch("a", "z"), std::nullopt},
      {"D1:ax", limit_label(a, c), limit_label(x, z), d1, nb.branch("a", "x"), std::nullopt},
      {"D2:zy", limit_label(z, x), limit_label(y, b), d2, nb.branch("z", "y"), std::nullopt},
      {"D2:yx", limit_label(y, b), limit_label(x, z), d2, nb.branch("y", "x"), std::nullopt},
      {"D3:cb", limit_label(c, a), limit_label(b, y), d3, nb.branch("c", "b"), std::nullopt},
      {"D3:ba", limit_label(b, y), limit_label(a, c), d3, nb.branch("b", "a"), std::nullopt},
      {"D4:by", limit_label(b, y), limit_label(y, b), d4, nb.branch("y", "b"), std::nullopt},
  };
  return w;
}

SymbolicWitness pi_witness(const SimplicialGraph& g, const SubdivisionEmbedding& emb) {
  require_valid(g, emb, PatternId::Fig5Left, ErrorCode::PatternMismatch);
  NamedBranches nb(pattern_spec(PatternId::Fig5Left), emb);

  const std::string x = nb.img["x"], y = nb.img["y"], z = nb.img["z"];
  if (g.has_edge(x, z)) fail(ErrorCode::PatternMismatch, "pole generators are adjacent");

  SymbolicWitness w;
  w.claimed_type = WitnessType::ThreeCirclesWithPoles;
  w.points = {limit_point(x, z), limit_point(z, x)};
  WitnessInvolution inv;
  inv.generator = y;
  inv.action_fixed_points = {limit_label(x, z), limit_label(z, x)};
  inv.point_map[limit_label(x, z)] = limit_label(x, z);
  inv.point_map[limit_label(z, x)] = limit_label(z, x);

  const std::array<std::pair<std::string, std::string>, 3> circles = {
      std::make_pair(std::string("A"), std::string("a")),
      std::make_pair(std::string("B"), std::string("b")),
      std::make_pair(std::string("C"), std::string("c"))};
  for (const auto& [name, slot] : circles) {
    const std::string s = nb.img[slot];
    const Path circle = make_cycle({nb.branch("x", slot), nb.branch(slot, "y"), Path{y, x}});
    require_induced_cycle(g, circle, ErrorCode::PatternMismatch);

    const bool loxodromic = !g.has_edge(x, s);
    std::string top_label, bot_label;
    std::optional<std::pair<std::string, std::string>> bot_gens;
    Path aux, side;
    if (loxodromic) {
      // Pole to (x s)^inf along the four-branch cycle through z; circles A
      // and B share the cycle through b, circle C runs through c.
      const std::string via = slot == "c" ? "c" : "b";
      aux = make_cycle(
          {nb.branch("x", "a"), nb.branch("a", "z"), nb.branch("z", via), nb.branch(via, "x")});
      top_label = limit_label(x, s);
      bot_label = limit_label(s, x);
      bot_gens = std::make_pair(s, x);
      side = nb.branch(slot, "z");
    } else {
      // x s has finite order, so y s is loxodromic; use the cycle through z
      // and y and attach at (y s)^inf.
      aux = make_cycle({Path{x, s}, nb.branch(slot, "z"), Path{z, y}, Path{y, x}});
      top_label = limit_label(y, s);
      bot_label = x + "*" + limit_label(y, s);
      side = nb.branch(slot, "z");
    }
    require_induced_cycle(g, aux, ErrorCode::PatternMismatch);

    w.points.push_back(loxodromic ? limit_point(x, s) : limit_point(y, s));
    w.points.push_back(bot_gens ? FormalBoundaryPoint{bot_label, bot_gens}
                                : named_point(bot_label));

    Path half1_side, half2_side;
    if (loxodromic) {
      half1_side = nb.branch("x", slot);
      half2_side = nb.branch(slot, "y");
      half2_side.push_back(x);
    } else {
      half1_side = nb.branch(slot, "y");
      half2_side = Path{s, x, y};
    }
    w.arcs.push_back({name + ":half1", top_label, bot_label, circle, half1_side, std::nullopt});
    w.arcs.push_back({name + ":half2", bot_label, top_label, circle, half2_side, std::nullopt});
    w.arcs.push_back({name + ":top", limit_label(x, z), top_label, aux, side, std::nullopt});
    w.arcs.push_back({name + ":bot", limit_label(z, x), bot_label, aux, side, x});

    inv.point_map[top_label] = top_label;
    inv.point_map[bot_label] = bot_label;
    inv.arc_map[name + ":half1"] = name + ":half2";
    inv.arc_map[name + ":half2"] = name + ":half1";
    inv.arc_map[name + ":top"] = name + ":top";
    inv.arc_map[name + ":bot"] = name + ":bot";
    inv.reversed_circles.push_back(name);

    // The generator's fixed pair on this circle: limit of the product of its
    // two neighbors along the circle.
    const Path sy_branch = nb.branch(slot, "y");
    const std::string m = sy_branch[sy_branch.size() - 2];
    inv.fixed_point_labels[name] = {limit_label(x, m), limit_label(m, x)};
    if (g.has_edge(y, s)) {
      inv.action_fixed_points.push_back(top_label);
      inv.action_fixed_points.push_back(bot_label);
    }
  }
  w.involution = std::move(inv);
  return w;
}

}  // namespace racg
