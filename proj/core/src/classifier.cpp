#include "racg/classifier.hpp"

#include "racg/errors.hpp"

namespace racg {

const char* verdict_tag_name(VerdictTag t) {
  switch (t) {
    case VerdictTag::GraphPlanarBoundary: return "GraphPlanarBoundary";
    case VerdictTag::EveryBoundaryNonPlanar: return "EveryBoundaryNonPlanar";
    case VerdictTag::PiObstruction: return "PiObstruction";
    case VerdictTag::MengerCurve: return "MengerCurve";
    case VerdictTag::SierpinskiCarpetCandidate: return "SierpinskiCarpetCandidate";
  }
  return "?";
}

ClassificationReport classify(const SimplicialGraph& g, const SearchOptions& opts) {
  if (!is_triangle_free(g))
    fail(ErrorCode::NotTriangleFree, "classification requires a triangle-free defining graph");

  ClassificationReport r;
  r.input_graph = g;
  r.triangle_free = true;

  PlanarityResult pl = is_planar(g, opts);
  r.graph_planar = pl.planar;
  r.kuratowski_witness = pl.witness;
  r.inseparability = is_inseparable(g);
  r.hyperbolic = is_hyperbolic_racg(g);
  const auto& strategy = default_isolated_flats_strategy();
  r.isolated_flats = has_isolated_flats(g, strategy);
  r.isolated_flats_strategy = strategy.name;

  if (r.graph_planar) {
    r.verdicts.push_back(
        {VerdictTag::GraphPlanarBoundary,
         "planar-defining-graph-boundary",
         {"defining graph is planar"},
         "the Davis complex boundary is planar and the group is virtually the fundamental "
         "group of a compact 3-manifold"});
    if (r.inseparability.inseparable && r.hyperbolic) {
      r.verdicts.push_back(
          {VerdictTag::SierpinskiCarpetCandidate,
           "planar-inseparable-hyperbolic-carpet",
           {"defining graph is planar", "defining graph is inseparable",
            "group is hyperbolic (no induced square)"},
           "the Gromov boundary is a Sierpinski carpet"});
    }
    return r;
  }

  try {
    r.reduction = reduce(g, opts);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::GraphTooLarge || e.code() == ErrorCode::DeadlineExceeded) {
      r.reduction_skipped = true;
      r.reduction_skip_reason = e.what();
    } else {
      throw;
    }
  }

  if (r.reduction) {
    if (auto check = verify_certificate(*r.reduction); !check.ok)
      fail(ErrorCode::InternalInvariantViolation,
           "reduction certificate failed verification: " + check.failure);
    const SimplicialGraph& final_graph = r.reduction->steps.back().graph_before;
    const SubdivisionEmbedding& terminal = r.reduction->terminal_embedding;
    switch (r.reduction->terminal) {
      case TerminalPattern::InducedK33: {
        K33BoundaryWitness bw = k33_boundary_witness(final_graph, terminal);
        r.join_of_cantor_sets = bw.join_of_cantor_sets;
        r.boundary_witness = bw.witness;
        r.verdicts.push_back(
            {VerdictTag::EveryBoundaryNonPlanar,
             "induced-k33-subdivision-boundary",
             {"a finite-index special subgroup has an induced K33 subdivision in its "
              "defining graph"},
             "every visual boundary of the group is non-planar"});
        break;
      }
      case TerminalPattern::Fig5Right: {
        r.boundary_witness = fig5right_witness(final_graph, terminal);
        r.verdicts.push_back(
            {VerdictTag::EveryBoundaryNonPlanar,
             "four-circle-configuration-boundary",
             {"a finite-index special subgroup has the induced four-chord configuration in "
              "its defining graph"},
             "every visual boundary of the group is non-planar"});
        break;
      }
      case TerminalPattern::Fig5Left: {
        // The terminal subgraph must really be an induced copy of the
        // obstruction pattern.
        if (!find_subdivision(final_graph, PatternId::Fig5Left, opts))
          fail(ErrorCode::InternalInvariantViolation,
               "terminal graph lost its induced obstruction pattern");
        SymbolicWitness pw = pi_witness(final_graph, terminal);
        r.pi_obstruction = obstruction_check(pw);
        r.boundary_witness = std::move(pw);
        r.verdicts.push_back(
            {VerdictTag::PiObstruction,
             "pi-pattern-planar-example",
             {},
             "the reduction terminates at the known planar-boundary obstruction pattern; "
             "the boundary may be planar"});
        r.verdicts.push_back(
            {VerdictTag::PiObstruction,
             "pi-pattern-involution-obstruction",
             {"the boundary is connected", "the boundary is locally connected",
              "the boundary has no local cut points"},
             "the boundary is non-planar"});
        break;
      }
    }
  }

  if (r.inseparability.inseparable && (r.hyperbolic || r.isolated_flats)) {
    std::vector<std::string> hyp = {"defining graph is non-planar",
                                    "defining graph is inseparable"};
    hyp.push_back(r.hyperbolic ? "group is hyperbolic (no induced square)"
                               : "group has isolated flats (strategy " +
                                     r.isolated_flats_strategy + ")");
    r.verdicts.push_back({VerdictTag::MengerCurve, "menger-curve-characterization",
                          std::move(hyp), "every visual boundary of the group is a Menger curve"});
  }
  return r;
}

}  // namespace racg
