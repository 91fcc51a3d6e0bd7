#include "racg/pattern.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>

#include "racg/errors.hpp"

namespace racg {

const char* pattern_name(PatternId id) {
  switch (id) {
    case PatternId::K5: return "K5";
    case PatternId::K33: return "K33";
    case PatternId::Theta: return "Theta";
    case PatternId::Fig5Left: return "Fig5Left";
    case PatternId::Fig5Right: return "Fig5Right";
  }
  return "?";
}

PatternId pattern_from_name(const std::string& name) {
  if (name == "K5" || name == "k5") return PatternId::K5;
  if (name == "K33" || name == "k33") return PatternId::K33;
  if (name == "Theta" || name == "theta") return PatternId::Theta;
  if (name == "Fig5Left" || name == "fig5left" || name == "pi" || name == "Pi")
    return PatternId::Fig5Left;
  if (name == "Fig5Right" || name == "fig5right") return PatternId::Fig5Right;
  fail(ErrorCode::BadParams, "unknown pattern '" + name + "'");
}

namespace {

using EdgeKey = std::tuple<int, int, int>;  // (u, v, kind)

std::vector<std::vector<int>> compute_automorphisms(const PatternSpec& spec) {
  const int n = static_cast<int>(spec.vertex_names.size());
  std::multiset<EdgeKey> reference;
  for (const auto& e : spec.edges)
    reference.emplace(e.u, e.v, static_cast<int>(e.kind));

  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> autos;
  do {
    std::multiset<EdgeKey> image;
    for (const auto& e : spec.edges) {
      int u = perm[e.u], v = perm[e.v];
      if (u > v) std::swap(u, v);
      image.emplace(u, v, static_cast<int>(e.kind));
    }
    if (image == reference) autos.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return autos;
}

PatternSpec finish(PatternSpec spec) {
  const int n = static_cast<int>(spec.vertex_names.size());
  spec.min_degree.assign(n, 0);
  for (const auto& e : spec.edges) {
    ++spec.min_degree[e.u];
    ++spec.min_degree[e.v];
  }
  if (spec.side_of.empty()) spec.side_of.assign(n, -1);
  spec.automorphisms = compute_automorphisms(spec);
  return spec;
}

PatternSpec make_k5() {
  PatternSpec s;
  s.id = PatternId::K5;
  s.vertex_names = {"a", "b", "c", "d", "e"};
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v) s.edges.push_back({u, v, BranchKind::Free});
  return finish(std::move(s));
}

PatternSpec make_k33() {
  PatternSpec s;
  s.id = PatternId::K33;
  s.vertex_names = {"a", "b", "c", "x", "y", "z"};
  for (int u = 0; u < 3; ++u)
    for (int v = 3; v < 6; ++v) s.edges.push_back({u, v, BranchKind::Free});
  s.side_of = {0, 0, 0, 1, 1, 1};
  return finish(std::move(s));
}

PatternSpec make_theta() {
  PatternSpec s;
  s.id = PatternId::Theta;
  s.vertex_names = {"p", "q"};
  for (int k = 0; k < 3; ++k) s.edges.push_back({0, 1, BranchKind::Free});
  return finish(std::move(s));
}

PatternSpec make_fig5_left() {
  PatternSpec s = make_k33();
  s.id = PatternId::Fig5Left;
  s.induced = true;
  // x-y and y-z are the extra edges; never subdivided.
  s.edges.push_back({3, 4, BranchKind::ForcedEdge});
  s.edges.push_back({4, 5, BranchKind::ForcedEdge});
  return finish(std::move(s));
}

PatternSpec make_fig5_right() {
  PatternSpec s;
  s.id = PatternId::Fig5Right;
  s.vertex_names = {"a", "b", "c", "x", "y", "z"};
  s.side_of = {0, 0, 0, 1, 1, 1};
  s.induced = true;
  const int a = 0, b = 1, c = 2, x = 3, y = 4, z = 5;
  auto kind = [&](int u, int v) {
    // Branches [a,y], [c,y], [b,x], [b,z] are single edges; the remaining
    // five branches are forced subdivided by triangle-freeness.
    if ((u == a && v == y) || (u == c && v == y) || (u == b && v == x) || (u == b && v == z))
      return BranchKind::ForcedEdge;
    return BranchKind::ForcedSubdivided;
  };
  for (int u = 0; u < 3; ++u)
    for (int v = 3; v < 6; ++v) s.edges.push_back({u, v, kind(u, v)});
  s.edges.push_back({x, y, BranchKind::ForcedEdge});
  s.edges.push_back({y, z, BranchKind::ForcedEdge});
  s.edges.push_back({a, b, BranchKind::ForcedEdge});
  s.edges.push_back({b, c, BranchKind::ForcedEdge});
  return finish(std::move(s));
}

}  // namespace

const PatternSpec& pattern_spec(PatternId id) {
  static const PatternSpec k5 = make_k5();
  static const PatternSpec k33 = make_k33();
  static const PatternSpec theta = make_theta();
  static const PatternSpec fig5l = make_fig5_left();
  static const PatternSpec fig5r = make_fig5_right();
  switch (id) {
    case PatternId::K5: return k5;
    case PatternId::K33: return k33;
    case PatternId::Theta: return theta;
    case PatternId::Fig5Left: return fig5l;
    case PatternId::Fig5Right: return fig5r;
  }
  fail(ErrorCode::InternalInvariantViolation, "bad pattern id");
}

std::string pattern_edge_name(const PatternSpec& spec, int edge_index) {
  const auto& e = spec.edges[edge_index];
  std::string base = spec.vertex_names[e.u] + "-" + spec.vertex_names[e.v];
  int occurrence = 0, total = 0;
  for (int i = 0; i < static_cast<int>(spec.edges.size()); ++i) {
    if (spec.edges[i].u == e.u && spec.edges[i].v == e.v) {
      ++total;
      if (i < edge_index) ++occurrence;
    }
  }
  if (total > 1) base += "#" + std::to_string(occurrence + 1);
  return base;
}

int pattern_edge_index(const PatternSpec& spec, const std::string& name) {
  for (int i = 0; i < static_cast<int>(spec.edges.size()); ++i)
    if (pattern_edge_name(spec, i) == name) return i;
  fail(ErrorCode::ValidationError, "unknown pattern edge '" + name + "'");
}

}  // namespace racg
