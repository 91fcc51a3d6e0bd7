#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "racg/classifier.hpp"
#include "racg/errors.hpp"
#include "racg/io.hpp"
#include "racg/reduction.hpp"
#include "racg/subdivision.hpp"
#include "racg/witness.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitBudget = 2;
constexpr int kExitVerifyFailed = 3;

int exit_code_for(const racg::Error& e) {
  switch (e.code()) {
    case racg::ErrorCode::GraphTooLarge:
    case racg::ErrorCode::DeadlineExceeded:
      return kExitBudget;
    default:
      return kExitInputError;
  }
}

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) racg::fail(racg::ErrorCode::ParseError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

racg::GraphFormat resolve_format(const std::string& flag, const std::string& path) {
  if (flag == "edgelist") return racg::GraphFormat::EdgeList;
  if (flag == "dot") return racg::GraphFormat::Dot;
  if (flag == "json") return racg::GraphFormat::Json;
  if (flag == "auto") return racg::format_from_filename(path);
  racg::fail(racg::ErrorCode::BadParams, "unknown format '" + flag + "'");
}

struct CommonOpts {
  int budget = 30;
  double timeout_seconds = 0;
  std::string format = "auto";

  racg::SearchOptions search() const {
    racg::SearchOptions opts;
    opts.budget = budget;
    if (timeout_seconds > 0)
      opts.deadline = std::chrono::steady_clock::now() +
                      std::chrono::milliseconds(static_cast<long>(timeout_seconds * 1000));
    return opts;
  }
};

void add_common(CLI::App* cmd, CommonOpts* opts, bool with_format = true) {
  cmd->add_option("--budget", opts->budget, "vertex budget for subdivision searches")
      ->capture_default_str();
  cmd->add_option("--timeout", opts->timeout_seconds, "soft time limit in seconds");
  if (with_format)
    cmd->add_option("--format", opts->format, "input format: auto|edgelist|dot|json")
        ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Boundary classification for right-angled Coxeter groups over triangle-free "
               "defining graphs"};
  app.require_subcommand(1);

  // analyze
  auto* analyze = app.add_subcommand("analyze", "full classification report");
  std::string analyze_file;
  bool analyze_json = false;
  CommonOpts analyze_opts;
  analyze->add_option("file", analyze_file, "graph file ('-' for stdin)")->required();
  analyze->add_flag("--json", analyze_json, "emit the report as a JSON document");
  add_common(analyze, &analyze_opts);

  // reduce
  auto* reduce_cmd = app.add_subcommand("reduce", "run the doubling reduction, emit a certificate");
  std::string reduce_file;
  CommonOpts reduce_opts;
  reduce_cmd->add_option("file", reduce_file, "graph file ('-' for stdin)")->required();
  add_common(reduce_cmd, &reduce_opts);

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "independently check an emitted document");
  std::string verify_file;
  verify_cmd->add_option("file", verify_file, "certificate JSON file")->required();

  // planarity
  auto* planarity_cmd = app.add_subcommand("planarity", "planarity test with witness");
  std::string planarity_file;
  bool planarity_json = false;
  CommonOpts planarity_opts;
  planarity_cmd->add_option("file", planarity_file, "graph file ('-' for stdin)")->required();
  planarity_cmd->add_flag("--json", planarity_json, "JSON output");
  add_common(planarity_cmd, &planarity_opts);

  // gen
  auto* gen_cmd = app.add_subcommand("gen", "generate a named graph family");
  std::string gen_family;
  std::vector<int> gen_params;
  std::string gen_format = "edgelist";
  gen_cmd->add_option("family", gen_family, "one of: cycle path mobius petersen k33_subdiv "
                                            "k5_subdiv pi fig5_right")
      ->required();
  gen_cmd->add_option("params", gen_params, "family parameters");
  gen_cmd->add_option("--format", gen_format, "output format: edgelist|dot|json")
      ->capture_default_str();

  // witness
  auto* witness_cmd = app.add_subcommand("witness", "build a symbolic boundary witness");
  std::string witness_file, witness_pattern;
  CommonOpts witness_opts;
  witness_cmd->add_option("file", witness_file, "graph file ('-' for stdin)")->required();
  witness_cmd->add_option("--pattern", witness_pattern, "theta | k33 | pi | fig5right")
      ->required();
  add_common(witness_cmd, &witness_opts);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) {
      auto g = racg::parse_graph(read_file(analyze_file),
                                 resolve_format(analyze_opts.format, analyze_file));
      auto report = racg::classify(g, analyze_opts.search());
      if (analyze_json)
        std::cout << racg::emit_document(
            racg::make_classification_document(std::move(report), analyze_opts.budget));
      else
        std::cout << racg::render_report(report);
      return kExitOk;
    }

    if (*reduce_cmd) {
      auto g = racg::parse_graph(read_file(reduce_file),
                                 resolve_format(reduce_opts.format, reduce_file));
      auto cert = racg::reduce(g, reduce_opts.search());
      std::cout << racg::emit_document(
          racg::make_reduction_document(g, std::move(cert), reduce_opts.budget));
      return kExitOk;
    }

    if (*verify_cmd) {
      auto doc = racg::parse_document(read_file(verify_file));
      switch (doc.kind) {
        case racg::DocumentKind::Reduction: {
          if (!(doc.input_graph == doc.reduction->initial_graph)) {
            std::cerr << "verification failed: document input graph differs from the "
                         "certificate's initial graph\n";
            return kExitVerifyFailed;
          }
          auto result = racg::verify_certificate(*doc.reduction);
          if (!result.ok) {
            std::cerr << "verification failed: " << result.failure << "\n";
            return kExitVerifyFailed;
          }
          std::cout << "reduction certificate verifies: terminal "
                    << racg::terminal_pattern_name(doc.reduction->terminal) << " after "
                    << doc.reduction->doubling_sequence.size() << " doubling move(s)\n";
          return kExitOk;
        }
        case racg::DocumentKind::Witness: {
          auto result = racg::verify_witness(*doc.witness, doc.input_graph);
          if (!result.ok) {
            std::cerr << "verification failed: " << result.failure << "\n";
            return kExitVerifyFailed;
          }
          std::cout << "witness verifies: "
                    << racg::witness_type_name(doc.witness->claimed_type) << " with "
                    << doc.witness->points.size() << " points\n";
          return kExitOk;
        }
        case racg::DocumentKind::Classification: {
          racg::SearchOptions opts;
          opts.budget = doc.budget;
          auto rerun = racg::classify(doc.input_graph, opts);
          const std::string expected =
              racg::emit_document(racg::make_classification_document(std::move(rerun), doc.budget));
          const std::string actual = racg::emit_document(doc);
          if (expected != actual) {
            std::cerr << "verification failed: report does not match an independent re-run\n";
            return kExitVerifyFailed;
          }
          std::cout << "classification report verifies (" << doc.classification->verdicts.size()
                    << " verdict(s))\n";
          return kExitOk;
        }
      }
      return kExitInputError;
    }

    if (*planarity_cmd) {
      auto g = racg::parse_graph(read_file(planarity_file),
                                 resolve_format(planarity_opts.format, planarity_file));
      auto result = racg::is_planar(g, planarity_opts.search());
      if (planarity_json) {
        std::cout << "{\"planar\": " << (result.planar ? "true" : "false") << ", \"witness\": "
                  << (result.witness
                          ? std::string("\"") + racg::pattern_name(result.witness->pattern) + "\""
                          : "null")
                  << "}\n";
      } else if (result.planar) {
        std::cout << "planar\n";
      } else {
        std::cout << "non-planar";
        if (result.witness)
          std::cout << " (" << racg::pattern_name(result.witness->pattern)
                    << " subdivision witness on";
        if (result.witness) {
          for (const auto& [pv, gv] : result.witness->essential_map) std::cout << " " << gv;
          std::cout << ")";
        }
        std::cout << "\n";
      }
      return kExitOk;
    }

    if (*gen_cmd) {
      auto g = racg::generate(gen_family, gen_params);
      racg::GraphFormat fmt = racg::GraphFormat::EdgeList;
      if (gen_format == "dot") fmt = racg::GraphFormat::Dot;
      else if (gen_format == "json") fmt = racg::GraphFormat::Json;
      else if (gen_format != "edgelist")
        racg::fail(racg::ErrorCode::BadParams, "unknown format '" + gen_format + "'");
      std::cout << racg::emit_graph(g, fmt);
      return kExitOk;
    }

    if (*witness_cmd) {
      auto g = racg::parse_graph(read_file(witness_file),
                                 resolve_format(witness_opts.format, witness_file));
      const auto opts = witness_opts.search();
      racg::SymbolicWitness w;
      if (witness_pattern == "theta") {
        auto emb = racg::find_subdivision(g, racg::PatternId::Theta, opts);
        if (!emb) racg::fail(racg::ErrorCode::PatternMismatch, "no Theta subdivision found");
        w = racg::theta_witness(g, *emb);
      } else if (witness_pattern == "k33") {
        auto sel = racg::select_canonical_k33(g, opts);
        if (!sel) racg::fail(racg::ErrorCode::PatternMismatch, "no K33 subdivision found");
        if (sel->second.count != 0)
          racg::fail(racg::ErrorCode::NotInduced, "no induced K33 subdivision exists");
        auto bw = racg::k33_boundary_witness(g, sel->first);
        if (bw.join_of_cantor_sets) {
          std::cout << "unsubdivided K33: the boundary is a join of two Cantor sets "
                       "(non-planar); no arc witness applies\n";
          return kExitOk;
        }
        w = std::move(*bw.witness);
      } else if (witness_pattern == "pi" || witness_pattern == "fig5left") {
        auto emb = racg::find_subdivision(g, racg::PatternId::Fig5Left, opts);
        if (!emb)
          racg::fail(racg::ErrorCode::PatternMismatch, "no induced obstruction pattern found");
        w = racg::pi_witness(g, *emb);
      } else if (witness_pattern == "fig5right") {
        auto emb = racg::find_subdivision(g, racg::PatternId::Fig5Right, opts);
        if (!emb)
          racg::fail(racg::ErrorCode::PatternMismatch, "no induced four-chord pattern found");
        w = racg::fig5right_witness(g, *emb);
      } else {
        racg::fail(racg::ErrorCode::BadParams, "unknown pattern '" + witness_pattern + "'");
      }
      std::cout << racg::emit_document(
          racg::make_witness_document(g, std::move(w), witness_opts.budget));
      return kExitOk;
    }
  } catch (const racg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
