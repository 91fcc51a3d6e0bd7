#include "racg/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "json.hpp"
#include "racg/errors.hpp"

namespace racg {

using ordered_json = nlohmann::ordered_json;

namespace {

bool valid_label(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '#' || c == '\''))
      return false;
  return true;
}

[[noreturn]] void parse_fail(int line, int column, const std::string& msg) {
  fail(ErrorCode::ParseError,
       "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg);
}

SimplicialGraph parse_edge_list(const std::string& text) {
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::string> vertices;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (ls >> tok) {
      if (tok[0] == '#') break;  // trailing comment
      tokens.push_back(tok);
    }
    if (tokens.empty()) continue;
    if (tokens.size() != 2)
      parse_fail(lineno, 1, "expected a 'u w' pair, got " + std::to_string(tokens.size()) +
                                " token(s)");
    for (const auto& t : tokens)
      if (!valid_label(t)) parse_fail(lineno, 1, "invalid vertex label '" + t + "'");
    edges.emplace_back(tokens[0], tokens[1]);
  }
  return SimplicialGraph::from_edges(edges);
}

struct DotToken {
  std::string text;
  int line, column;
};

std::vector<DotToken> dot_tokens(const std::string& text) {
  std::vector<DotToken> out;
  int line = 1, col = 1;
  size_t i = 0;
  auto advance = [&](char c) {
    if (c == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(c);
      ++i;
      continue;
    }
    if (c == '/' && i + 1 < text.size() && text[i + 1] == '/') {
      while (i < text.size() && text[i] != '\n') {
        advance(text[i]);
        ++i;
      }
      continue;
    }
    const int tl = line, tc = col;
    if (c == '-' && i + 1 < text.size() && text[i + 1] == '-') {
      out.push_back({"--", tl, tc});
      advance('-');
      advance('-');
      i += 2;
      continue;
    }
    if (std::string("{};[]=,").find(c) != std::string::npos) {
      out.push_back({std::string(1, c), tl, tc});
      advance(c);
      ++i;
      continue;
    }
    if (valid_label(std::string(1, c))) {
      std::string word;
      while (i < text.size() && valid_label(std::string(1, text[i]))) {
        word += text[i];
        advance(text[i]);
        ++i;
      }
      out.push_back({word, tl, tc});
      continue;
    }
    parse_fail(tl, tc, std::string("unexpected character '") + c + "'");
  }
  return out;
}

SimplicialGraph parse_dot(const std::string& text) {
  const auto tokens = dot_tokens(text);
  size_t pos = 0;
  auto peek = [&]() -> const DotToken* { return pos < tokens.size() ? &tokens[pos] : nullptr; };
  auto expect = [&](const std::string& want) {
    const DotToken* t = peek();
    if (!t)
      parse_fail(0, 0, "unexpected end of input, expected '" + want + "'");
    if (t->text != want)
      parse_fail(t->line, t->column, "expected '" + want + "', got '" + t->text + "'");
    ++pos;
  };

  const DotToken* head = peek();
  if (!head) parse_fail(1, 1, "empty input");
  if (head->text == "digraph")
    parse_fail(head->line, head->column, "directed graphs are not supported");
  if (head->text != "graph")
    parse_fail(head->line, head->column, "expected 'graph'");
  ++pos;
  if (peek() && peek()->text != "{") ++pos;  // optional graph name
  expect("{");

  std::vector<std::pair<std::string, std::string>> edges;
  while (peek() && peek()->text != "}") {
    const DotToken* u = peek();
    if (!valid_label(u->text))
      parse_fail(u->line, u->column, "expected a vertex label, got '" + u->text + "'");
    ++pos;
    const DotToken* dash = peek();
    if (!dash) parse_fail(u->line, u->column, "dangling vertex statement");
    if (dash->text == "->")
      parse_fail(dash->line, dash->column, "directed edges are not supported");
    if (dash->text != "--")
      parse_fail(dash->line, dash->column, "expected '--' after '" + u->text + "'");
    ++pos;
    const DotToken* w = peek();
    if (!w || !valid_label(w->text))
      parse_fail(dash->line, dash->column, "expected a vertex label after '--'");
    ++pos;
    edges.emplace_back(u->text, w->text);
    if (peek() && peek()->text == "[") {  // skip attribute list
      int depth = 0;
      while (peek()) {
        if (peek()->text == "[") ++depth;
        if (peek()->text == "]") {
          --depth;
          ++pos;
          if (depth == 0) break;
          continue;
        }
        ++pos;
      }
    }
    if (peek() && peek()->text == ";") ++pos;
  }
  expect("}");
  if (peek()) parse_fail(peek()->line, peek()->column, "content after closing brace");
  return SimplicialGraph::from_edges(edges);
}

SimplicialGraph graph_from_json(const ordered_json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
    fail(ErrorCode::ParseError, "graph object needs 'vertices' and 'edges'");
  std::vector<std::string> vertices;
  for (const auto& v : j.at("vertices")) {
    if (!v.is_string() || !valid_label(v.get<std::string>()))
      fail(ErrorCode::ParseError, "invalid vertex label in 'vertices'");
    vertices.push_back(v.get<std::string>());
  }
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2)
      fail(ErrorCode::ParseError, "each edge must be a two-element array");
    const std::string u = e[0].get<std::string>();
    const std::string w = e[1].get<std::string>();
    for (const auto& t : {u, w})
      if (std::find(vertices.begin(), vertices.end(), t) == vertices.end())
        fail(ErrorCode::ParseError, "edge references unknown vertex '" + t + "'");
    edges.emplace_back(u, w);
  }
  return SimplicialGraph::make(std::move(vertices), edges);
}

SimplicialGraph parse_json_graph(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const std::exception& e) {
    fail(ErrorCode::ParseError, e.what());
  }
  return graph_from_json(j);
}

ordered_json graph_to_json(const SimplicialGraph& g) {
  ordered_json j;
  j["vertices"] = g.labels();
  ordered_json edges = ordered_json::array();
  for (const auto& [u, w] : g.edges()) edges.push_back(ordered_json::array({u, w}));
  j["edges"] = std::move(edges);
  return j;
}

}  // namespace

SimplicialGraph parse_graph(const std::string& text, GraphFormat format) {
  switch (format) {
    case GraphFormat::EdgeList: return parse_edge_list(text);
    case GraphFormat::Dot: return parse_dot(text);
    case GraphFormat::Json: return parse_json_graph(text);
  }
  fail(ErrorCode::InternalInvariantViolation, "bad graph format");
}

GraphFormat format_from_filename(const std::string& name) {
  auto ends_with = [&](const std::string& suffix) {
    return name.size() >= suffix.size() &&
           name.compare(name.size() - suffix.size(), suffix.size(), suffix) == 0;
  };
  if (ends_with(".dot") || ends_with(".gv")) return GraphFormat::Dot;
  if (ends_with(".json")) return GraphFormat::Json;
  return GraphFormat::EdgeList;
}

std::string emit_graph(const SimplicialGraph& g, GraphFormat format) {
  std::ostringstream out;
  switch (format) {
    case GraphFormat::EdgeList:
      for (const auto& [u, w] : g.edges()) out << u << " " << w << "\n";
      break;
    case GraphFormat::Dot:
      out << "graph {\n";
      for (const auto& [u, w] : g.edges()) out << "  " << u << " -- " << w << ";\n";
      out << "}\n";
      break;
    case GraphFormat::Json:
      out << graph_to_json(g).dump(2) << "\n";
      break;
  }
  return out.str();
}

namespace {

// --- graph families ---

std::string idx_label(const std::string& stem, int i) { return stem + std::to_string(i); }

void append_subdivided(std::vector<std::pair<std::string, std::string>>& edges,
                       const std::string& u, const std::string& v, int count) {
  if (count < 0) fail(ErrorCode::BadParams, "negative subdivision count");
  std::string prev = u;
  for (int i = 1; i <= count; ++i) {
    std::string mid = u + v + std::to_string(i);
    edges.emplace_back(prev, mid);
    prev = std::move(mid);
  }
  edges.emplace_back(prev, v);
}

std::vector<int> expand_counts(const std::vector<int>& params, size_t want,
                               const std::string& family) {
  if (params.size() == 1) return std::vector<int>(want, params[0]);
  if (params.size() != want)
    fail(ErrorCode::BadParams, family + " expects " + std::to_string(want) +
                                   " subdivision counts (or one broadcast value)");
  return params;
}

SimplicialGraph finish_triangle_checked(const std::vector<std::pair<std::string, std::string>>& e,
                                        const std::string& family) {
  SimplicialGraph g = SimplicialGraph::from_edges(e);
  if (!is_triangle_free(g))
    fail(ErrorCode::BadParams, family + ": subdivision counts create a triangle");
  return g;
}

}  // namespace

SimplicialGraph generate(const std::string& family, const std::vector<int>& params) {
  auto need_one = [&](int min_value) {
    if (params.size() != 1 || params[0] < min_value)
      fail(ErrorCode::BadParams,
           family + " expects one parameter >= " + std::to_string(min_value));
    return params[0];
  };

  if (family == "cycle") {
    const int n = need_one(3);
    std::vector<std::pair<std::string, std::string>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(idx_label("v", i), idx_label("v", (i + 1) % n));
    return SimplicialGraph::from_edges(e);
  }
  if (family == "path") {
    const int n = need_one(2);
    std::vector<std::pair<std::string, std::string>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(idx_label("v", i), idx_label("v", i + 1));
    return SimplicialGraph::from_edges(e);
  }
  if (family == "mobius") {
    const int n = need_one(3);
    std::vector<std::pair<std::string, std::string>> e;
    for (int i = 0; i < 2 * n; ++i)
      e.emplace_back(idx_label("v", i), idx_label("v", (i + 1) % (2 * n)));
    for (int i = 0; i < n; ++i) e.emplace_back(idx_label("v", i), idx_label("v", i + n));
    return SimplicialGraph::from_edges(e);
  }
  if (family == "petersen") {
    if (!params.empty()) fail(ErrorCode::BadParams, "petersen takes no parameters");
    std::vector<std::pair<std::string, std::string>> e;
    for (int i = 0; i < 5; ++i) {
      e.emplace_back(idx_label("u", i), idx_label("u", (i + 1) % 5));
      e.emplace_back(idx_label("w", i), idx_label("w", (i + 2) % 5));
      e.emplace_back(idx_label("u", i), idx_label("w", i));
    }
    return SimplicialGraph::from_edges(e);
  }
  if (family == "k33_subdiv" || family == "pi") {
    const auto counts = expand_counts(params, 9, family);
    const std::string side0[3] = {"a", "b", "c"};
    const std::string side1[3] = {"x", "y", "z"};
    std::vector<std::pair<std::string, std::string>> e;
    int k = 0;
    for (const auto& s : side0)
      for (const auto& t : side1) append_subdivided(e, s, t, counts[k++]);
    if (family == "pi") {
      e.emplace_back("x", "y");
      e.emplace_back("y", "z");
      return finish_triangle_checked(e, family);
    }
    return SimplicialGraph::from_edges(e);
  }
  if (family == "k5_subdiv") {
    const auto counts = expand_counts(params, 10, family);
    const std::string v[5] = {"a", "b", "c", "d", "e"};
    std::vector<std::pair<std::string, std::string>> e;
    int k = 0;
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j) append_subdivided(e, v[i], v[j], counts[k++]);
    return SimplicialGraph::from_edges(e);
  }
  if (family == "fig5_right") {
    const auto counts = expand_counts(params, 5, family);
    std::vector<std::pair<std::string, std::string>> e = {
        {"a", "y"}, {"c", "y"}, {"b", "x"}, {"b", "z"},
        {"x", "y"}, {"y", "z"}, {"a", "b"}, {"b", "c"}};
    const std::pair<std::string, std::string> black[5] = {
        {"a", "x"}, {"a", "z"}, {"b", "y"}, {"c", "x"}, {"c", "z"}};
    for (int i = 0; i < 5; ++i) append_subdivided(e, black[i].first, black[i].second, counts[i]);
    return finish_triangle_checked(e, family);
  }
  fail(ErrorCode::BadParams, "unknown family '" + family + "'");
}

std::vector<std::string> known_families() {
  return {"cycle", "path", "mobius", "petersen", "k33_subdiv", "k5_subdiv", "pi", "fig5_right"};
}

// --- document serialization ---

namespace {

ordered_json embedding_to_json(const SubdivisionEmbedding& emb) {
  const PatternSpec& spec = pattern_spec(emb.pattern);
  ordered_json j;
  j["pattern"] = pattern_name(emb.pattern);
  ordered_json em = ordered_json::object();
  for (const auto& name : spec.vertex_names) em[name] = emb.essential_map.at(name);
  j["essential_map"] = std::move(em);
  ordered_json branches = ordered_json::array();
  for (size_t e = 0; e < emb.branches.size(); ++e) {
    ordered_json b;
    b["edge"] = pattern_edge_name(spec, static_cast<int>(e));
    b["path"] = emb.branches[e];
    branches.push_back(std::move(b));
  }
  j["branches"] = std::move(branches);
  return j;
}

SubdivisionEmbedding embedding_from_json(const ordered_json& j) {
  SubdivisionEmbedding emb;
  emb.pattern = pattern_from_name(j.at("pattern").get<std::string>());
  const PatternSpec& spec = pattern_spec(emb.pattern);
  for (const auto& [k, v] : j.at("essential_map").items())
    emb.essential_map[k] = v.get<std::string>();
  emb.branches.assign(spec.edges.size(), {});
  for (const auto& b : j.at("branches")) {
    const int e = pattern_edge_index(spec, b.at("edge").get<std::string>());
    emb.branches[e] = b.at("path").get<std::vector<std::string>>();
  }
  return emb;
}

BadEdgeClass bad_edge_class_from_name(const std::string& name) {
  for (BadEdgeClass c :
       {BadEdgeClass::SameBranch, BadEdgeClass::NonEssAdjacentBranches,
        BadEdgeClass::NonEssDisjointBranches, BadEdgeClass::EssToIncidentBranch,
        BadEdgeClass::EssToDisjointBranch, BadEdgeClass::EssEssSameSide})
    if (name == bad_edge_class_name(c)) return c;
  fail(ErrorCode::ValidationError, "unknown bad edge class '" + name + "'");
}

ordered_json report_to_json(const BadEdgeReport& rep) {
  ordered_json j;
  j["count"] = rep.count;
  ordered_json edges = ordered_json::array();
  for (const auto& b : rep.bad_edges) {
    ordered_json e;
    e["u"] = b.u;
    e["w"] = b.w;
    e["class"] = bad_edge_class_name(b.cls);
    edges.push_back(std::move(e));
  }
  j["bad_edges"] = std::move(edges);
  return j;
}

BadEdgeReport report_from_json(const ordered_json& j, const SubdivisionEmbedding& emb) {
  BadEdgeReport rep;
  rep.embedding = emb;
  rep.count = j.at("count").get<int>();
  for (const auto& e : j.at("bad_edges")) {
    BadEdge b;
    b.u = e.at("u").get<std::string>();
    b.w = e.at("w").get<std::string>();
    b.cls = bad_edge_class_from_name(e.at("class").get<std::string>());
    rep.bad_edges.push_back(std::move(b));
  }
  return rep;
}

TerminalPattern terminal_from_name(const std::string& name) {
  for (TerminalPattern t :
       {TerminalPattern::InducedK33, TerminalPattern::Fig5Left, TerminalPattern::Fig5Right})
    if (name == terminal_pattern_name(t)) return t;
  fail(ErrorCode::ValidationError, "unknown terminal pattern '" + name + "'");
}

RewriteRule rewrite_rule_from_name(const std::string& name) {
  for (RewriteRule r : {RewriteRule::ChordWithinBranch, RewriteRule::AdjacentBranchChord,
                        RewriteRule::DisjointBranchChord})
    if (name == rewrite_rule_name(r)) return r;
  fail(ErrorCode::ValidationError, "unknown rewrite rule '" + name + "'");
}

ordered_json action_to_json(const ReductionAction& a) {
  ordered_json j;
  switch (a.type) {
    case ReductionAction::Type::ShortenRewrite:
      j["type"] = "rewrite";
      j["rule"] = rewrite_rule_name(*a.rule);
      break;
    case ReductionAction::Type::Double:
      j["type"] = "double";
      j["vertex"] = *a.vertex;
      break;
    case ReductionAction::Type::Terminal:
      j["type"] = "terminal";
      j["pattern"] = terminal_pattern_name(*a.terminal);
      break;
  }
  return j;
}

ReductionAction action_from_json(const ordered_json& j) {
  ReductionAction a;
  const std::string type = j.at("type").get<std::string>();
  if (type == "rewrite") {
    a.type = ReductionAction::Type::ShortenRewrite;
    a.rule = rewrite_rule_from_name(j.at("rule").get<std::string>());
  } else if (type == "double") {
    a.type = ReductionAction::Type::Double;
    a.vertex = j.at("vertex").get<std::string>();
  } else if (type == "terminal") {
    a.type = ReductionAction::Type::Terminal;
    a.terminal = terminal_from_name(j.at("pattern").get<std::string>());
  } else {
    fail(ErrorCode::ValidationError, "unknown action type '" + type + "'");
  }
  return a;
}

ordered_json certificate_to_json(const ReductionCertificate& cert) {
  ordered_json j;
  j["initial_graph"] = graph_to_json(cert.initial_graph);
  ordered_json steps = ordered_json::array();
  for (const auto& step : cert.steps) {
    ordered_json s;
    s["graph"] = graph_to_json(step.graph_before);
    s["embedding"] = embedding_to_json(step.embedding);
    s["report"] = report_to_json(step.report);
    s["action"] = action_to_json(step.action);
    steps.push_back(std::move(s));
  }
  j["steps"] = std::move(steps);
  j["terminal"] = terminal_pattern_name(cert.terminal);
  j["terminal_embedding"] = embedding_to_json(cert.terminal_embedding);
  j["doubling_sequence"] = cert.doubling_sequence;
  return j;
}

ReductionCertificate certificate_from_json(const ordered_json& j) {
  ReductionCertificate cert;
  cert.initial_graph = graph_from_json(j.at("initial_graph"));
  for (const auto& s : j.at("steps")) {
    ReductionStep step;
    step.graph_before = graph_from_json(s.at("graph"));
    step.embedding = embedding_from_json(s.at("embedding"));
    step.report = report_from_json(s.at("report"), step.embedding);
    step.action = action_from_json(s.at("action"));
    cert.steps.push_back(std::move(step));
  }
  cert.terminal = terminal_from_name(j.at("terminal").get<std::string>());
  cert.terminal_embedding = embedding_from_json(j.at("terminal_embedding"));
  cert.doubling_sequence = j.at("doubling_sequence").get<std::vector<std::string>>();
  return cert;
}

ordered_json optional_labels(const std::optional<std::vector<std::string>>& v) {
  if (!v) return nullptr;
  return *v;
}

std::optional<std::vector<std::string>> optional_labels_from(const ordered_json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<std::vector<std::string>>();
}

ordered_json inseparability_to_json(const InseparabilityReport& r) {
  ordered_json j;
  j["connected"] = r.connected;
  j["separating_vertex"] = optional_labels(r.separating_vertex);
  j["separating_edge"] = optional_labels(r.separating_edge);
  j["cut_pair"] = optional_labels(r.cut_pair);
  j["separating_vertex_suspension"] = optional_labels(r.separating_vertex_suspension);
  j["inseparable"] = r.inseparable;
  return j;
}

InseparabilityReport inseparability_from_json(const ordered_json& j) {
  InseparabilityReport r;
  r.connected = j.at("connected").get<bool>();
  r.separating_vertex = optional_labels_from(j.at("separating_vertex"));
  r.separating_edge = optional_labels_from(j.at("separating_edge"));
  r.cut_pair = optional_labels_from(j.at("cut_pair"));
  r.separating_vertex_suspension = optional_labels_from(j.at("separating_vertex_suspension"));
  r.inseparable = j.at("inseparable").get<bool>();
  return r;
}

ordered_json witness_to_json(const SymbolicWitness& w) {
  ordered_json j;
  j["type"] = witness_type_name(w.claimed_type);
  ordered_json points = ordered_json::array();
  for (const auto& p : w.points) {
    ordered_json pj;
    pj["label"] = p.label;
    pj["generators"] =
        p.generators ? ordered_json::array({p.generators->first, p.generators->second})
                     : ordered_json(nullptr);
    points.push_back(std::move(pj));
  }
  j["points"] = std::move(points);
  ordered_json arcs = ordered_json::array();
  for (const auto& a : w.arcs) {
    ordered_json aj;
    aj["name"] = a.name;
    aj["from"] = a.from;
    aj["to"] = a.to;
    aj["cycle"] = a.cycle;
    aj["side"] = a.side;
    aj["translated_by"] = a.translated_by ? ordered_json(*a.translated_by) : ordered_json(nullptr);
    arcs.push_back(std::move(aj));
  }
  j["arcs"] = std::move(arcs);
  if (w.involution) {
    const auto& inv = *w.involution;
    ordered_json ij;
    ij["generator"] = inv.generator;
    ordered_json pm = ordered_json::object();
    for (const auto& [k, v] : inv.point_map) pm[k] = v;
    ij["point_map"] = std::move(pm);
    ordered_json am = ordered_json::object();
    for (const auto& [k, v] : inv.arc_map) am[k] = v;
    ij["arc_map"] = std::move(am);
    ij["action_fixed_points"] = inv.action_fixed_points;
    ij["reversed_circles"] = inv.reversed_circles;
    ordered_json fp = ordered_json::object();
    for (const auto& [k, v] : inv.fixed_point_labels)
      fp[k] = ordered_json::array({v.first, v.second});
    ij["fixed_point_labels"] = std::move(fp);
    j["involution"] = std::move(ij);
  } else {
    j["involution"] = nullptr;
  }
  return j;
}

SymbolicWitness witness_from_json(const ordered_json& j) {
  SymbolicWitness w;
  const std::string type = j.at("type").get<std::string>();
  bool known = false;
  for (WitnessType t : {WitnessType::Theta, WitnessType::K33, WitnessType::ThreeCirclesWithPoles})
    if (type == witness_type_name(t)) {
      w.claimed_type = t;
      known = true;
    }
  if (!known) fail(ErrorCode::ValidationError, "unknown witness type '" + type + "'");
  for (const auto& pj : j.at("points")) {
    FormalBoundaryPoint p;
    p.label = pj.at("label").get<std::string>();
    if (!pj.at("generators").is_null())
      p.generators = std::make_pair(pj.at("generators")[0].get<std::string>(),
                                    pj.at("generators")[1].get<std::string>());
    w.points.push_back(std::move(p));
  }
  for (const auto& aj : j.at("arcs")) {
    WitnessArc a;
    a.name = aj.at("name").get<std::string>();
    a.from = aj.at("from").get<std::string>();
    a.to = aj.at("to").get<std::string>();
    a.cycle = aj.at("cycle").get<std::vector<std::string>>();
    a.side = aj.at("side").get<std::vector<std::string>>();
    if (!aj.at("translated_by").is_null()) a.translated_by = aj.at("translated_by").get<std::string>();
    w.arcs.push_back(std::move(a));
  }
  if (!j.at("involution").is_null()) {
    const auto& ij = j.at("involution");
    WitnessInvolution inv;
    inv.generator = ij.at("generator").get<std::string>();
    for (const auto& [k, v] : ij.at("point_map").items()) inv.point_map[k] = v.get<std::string>();
    for (const auto& [k, v] : ij.at("arc_map").items()) inv.arc_map[k] = v.get<std::string>();
    inv.action_fixed_points = ij.at("action_fixed_points").get<std::vector<std::string>>();
    inv.reversed_circles = ij.at("reversed_circles").get<std::vector<std::string>>();
    for (const auto& [k, v] : ij.at("fixed_point_labels").items())
      inv.fixed_point_labels[k] = {v[0].get<std::string>(), v[1].get<std::string>()};
    w.involution = std::move(inv);
  }
  return w;
}

VerdictTag verdict_tag_from_name(const std::string& name) {
  for (VerdictTag t :
       {VerdictTag::GraphPlanarBoundary, VerdictTag::EveryBoundaryNonPlanar,
        VerdictTag::PiObstruction, VerdictTag::MengerCurve, VerdictTag::SierpinskiCarpetCandidate})
    if (name == verdict_tag_name(t)) return t;
  fail(ErrorCode::ValidationError, "unknown verdict tag '" + name + "'");
}

ordered_json classification_to_json(const ClassificationReport& r) {
  ordered_json j;
  j["input_graph"] = graph_to_json(r.input_graph);
  j["triangle_free"] = r.triangle_free;
  j["graph_planar"] = r.graph_planar;
  j["kuratowski_witness"] =
      r.kuratowski_witness ? embedding_to_json(*r.kuratowski_witness) : ordered_json(nullptr);
  j["inseparability"] = inseparability_to_json(r.inseparability);
  j["hyperbolic"] = r.hyperbolic;
  j["isolated_flats"] = r.isolated_flats;
  j["isolated_flats_strategy"] = r.isolated_flats_strategy;
  j["reduction"] = r.reduction ? certificate_to_json(*r.reduction) : ordered_json(nullptr);
  j["reduction_skipped"] = r.reduction_skipped;
  j["reduction_skip_reason"] = r.reduction_skip_reason;
  j["boundary_witness"] =
      r.boundary_witness ? witness_to_json(*r.boundary_witness) : ordered_json(nullptr);
  j["join_of_cantor_sets"] = r.join_of_cantor_sets;
  j["pi_obstruction"] = r.pi_obstruction ? ordered_json(*r.pi_obstruction) : ordered_json(nullptr);
  ordered_json verdicts = ordered_json::array();
  for (const auto& v : r.verdicts) {
    ordered_json vj;
    vj["tag"] = verdict_tag_name(v.tag);
    vj["citation"] = v.citation;
    vj["hypotheses"] = v.hypotheses;
    vj["statement"] = v.statement;
    verdicts.push_back(std::move(vj));
  }
  j["verdicts"] = std::move(verdicts);
  return j;
}

ClassificationReport classification_from_json(const ordered_json& j) {
  ClassificationReport r;
  r.input_graph = graph_from_json(j.at("input_graph"));
  r.triangle_free = j.at("triangle_free").get<bool>();
  r.graph_planar = j.at("graph_planar").get<bool>();
  if (!j.at("kuratowski_witness").is_null())
    r.kuratowski_witness = embedding_from_json(j.at("kuratowski_witness"));
  r.inseparability = inseparability_from_json(j.at("inseparability"));
  r.hyperbolic = j.at("hyperbolic").get<bool>();
  r.isolated_flats = j.at("isolated_flats").get<bool>();
  r.isolated_flats_strategy = j.at("isolated_flats_strategy").get<std::string>();
  if (!j.at("reduction").is_null()) r.reduction = certificate_from_json(j.at("reduction"));
  r.reduction_skipped = j.at("reduction_skipped").get<bool>();
  r.reduction_skip_reason = j.at("reduction_skip_reason").get<std::string>();
  if (!j.at("boundary_witness").is_null())
    r.boundary_witness = witness_from_json(j.at("boundary_witness"));
  r.join_of_cantor_sets = j.at("join_of_cantor_sets").get<bool>();
  if (!j.at("pi_obstruction").is_null()) r.pi_obstruction = j.at("pi_obstruction").get<bool>();
  for (const auto& vj : j.at("verdicts")) {
    Verdict v;
    v.tag = verdict_tag_from_name(vj.at("tag").get<std::string>());
    v.citation = vj.at("citation").get<std::string>();
    v.hypotheses = vj.at("hypotheses").get<std::vector<std::string>>();
    v.statement = vj.at("statement").get<std::string>();
    r.verdicts.push_back(std::move(v));
  }
  return r;
}

}  // namespace

const char* document_kind_name(DocumentKind k) {
  switch (k) {
    case DocumentKind::Reduction: return "reduction";
    case DocumentKind::Classification: return "classification";
    case DocumentKind::Witness: return "witness";
  }
  return "?";
}

CertificateDocument make_reduction_document(const SimplicialGraph& input,
                                            ReductionCertificate cert, int budget) {
  CertificateDocument doc;
  doc.kind = DocumentKind::Reduction;
  doc.budget = budget;
  doc.input_graph = input;
  doc.reduction = std::move(cert);
  return doc;
}

CertificateDocument make_classification_document(ClassificationReport report, int budget) {
  CertificateDocument doc;
  doc.kind = DocumentKind::Classification;
  doc.budget = budget;
  doc.input_graph = report.input_graph;
  doc.classification = std::move(report);
  return doc;
}

CertificateDocument make_witness_document(const SimplicialGraph& input, SymbolicWitness witness,
                                          int budget) {
  CertificateDocument doc;
  doc.kind = DocumentKind::Witness;
  doc.budget = budget;
  doc.input_graph = input;
  doc.witness = std::move(witness);
  return doc;
}

std::string emit_document(const CertificateDocument& doc) {
  ordered_json j;
  j["schema_version"] = doc.schema_version;
  j["kind"] = document_kind_name(doc.kind);
  j["budget"] = doc.budget;
  j["input_graph"] = graph_to_json(doc.input_graph);
  switch (doc.kind) {
    case DocumentKind::Reduction:
      if (!doc.reduction) fail(ErrorCode::ValidationError, "reduction document without payload");
      j["payload"] = certificate_to_json(*doc.reduction);
      break;
    case DocumentKind::Classification:
      if (!doc.classification)
        fail(ErrorCode::ValidationError, "classification document without payload");
      j["payload"] = classification_to_json(*doc.classification);
      break;
    case DocumentKind::Witness:
      if (!doc.witness) fail(ErrorCode::ValidationError, "witness document without payload");
      j["payload"] = witness_to_json(*doc.witness);
      break;
  }
  return j.dump(2) + "\n";
}

CertificateDocument parse_document(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const std::exception& e) {
    fail(ErrorCode::ValidationError, std::string("malformed JSON: ") + e.what());
  }
  try {
    CertificateDocument doc;
    doc.schema_version = j.at("schema_version").get<std::string>();
    if (doc.schema_version != "1")
      fail(ErrorCode::SchemaVersionMismatch,
           "unsupported schema version '" + doc.schema_version + "'");
    const std::string kind = j.at("kind").get<std::string>();
    doc.budget = j.at("budget").get<int>();
    doc.input_graph = graph_from_json(j.at("input_graph"));
    if (kind == "reduction") {
      doc.kind = DocumentKind::Reduction;
      doc.reduction = certificate_from_json(j.at("payload"));
    } else if (kind == "classification") {
      doc.kind = DocumentKind::Classification;
      doc.classification = classification_from_json(j.at("payload"));
    } else if (kind == "witness") {
      doc.kind = DocumentKind::Witness;
      doc.witness = witness_from_json(j.at("payload"));
    } else {
      fail(ErrorCode::ValidationError, "unknown document kind '" + kind + "'");
    }
    return doc;
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    fail(ErrorCode::ValidationError, std::string("malformed document: ") + e.what());
  }
}

std::string render_report(const ClassificationReport& r) {
  std::ostringstream out;
  out << "graph: " << r.input_graph.vertex_count() << " vertices, "
      << r.input_graph.edge_count() << " edges\n";
  out << "triangle-free: yes\n";
  out << "planar: " << (r.graph_planar ? "yes" : "no");
  if (r.kuratowski_witness)
    out << " (witness: " << pattern_name(r.kuratowski_witness->pattern) << " subdivision)";
  out << "\n";
  out << "inseparable: " << (r.inseparability.inseparable ? "yes" : "no");
  auto show = [&](const char* name, const std::optional<std::vector<std::string>>& w) {
    if (!w) return;
    out << " [" << name << ":";
    for (const auto& v : *w) out << " " << v;
    out << "]";
  };
  show("separating vertex", r.inseparability.separating_vertex);
  show("separating edge", r.inseparability.separating_edge);
  show("cut pair", r.inseparability.cut_pair);
  show("vertex suspension", r.inseparability.separating_vertex_suspension);
  out << "\n";
  out << "hyperbolic (no induced square): " << (r.hyperbolic ? "yes" : "no") << "\n";
  out << "isolated flats (" << r.isolated_flats_strategy
      << "): " << (r.isolated_flats ? "yes" : "no") << "\n";
  if (r.reduction) {
    out << "reduction: terminal " << terminal_pattern_name(r.reduction->terminal) << " after "
        << r.reduction->doubling_sequence.size() << " doubling move(s)";
    if (!r.reduction->doubling_sequence.empty()) {
      out << " over";
      for (const auto& v : r.reduction->doubling_sequence) out << " " << v;
    }
    out << "\n";
  } else if (r.reduction_skipped) {
    out << "reduction: skipped (" << r.reduction_skip_reason << ")\n";
  }
  if (r.join_of_cantor_sets)
    out << "boundary witness: join of two Cantor sets (unsubdivided K33)\n";
  else if (r.boundary_witness)
    out << "boundary witness: " << witness_type_name(r.boundary_witness->claimed_type) << " with "
        << r.boundary_witness->points.size() << " points / " << r.boundary_witness->arcs.size()
        << " arcs\n";
  if (r.pi_obstruction)
    out << "involution obstruction: " << (*r.pi_obstruction ? "present" : "absent") << "\n";
  out << "verdicts:\n";
  if (r.verdicts.empty()) out << "  (none)\n";
  for (const auto& v : r.verdicts) {
    out << "  - " << verdict_tag_name(v.tag) << " [" << v.citation << "]: " << v.statement << "\n";
    for (const auto& h : v.hypotheses) out << "      requires: " << h << "\n";
  }
  return out.str();
}

}  // namespace racg
