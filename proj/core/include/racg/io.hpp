#ifndef RACG_IO_HPP
#define RACG_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include "racg/classifier.hpp"
#include "racg/graph.hpp"
#include "racg/reduction.hpp"
#include "racg/witness.hpp"

namespace racg {

enum class GraphFormat { EdgeList, Dot, Json };

/// Parses one of the three supported graph formats:
///  - edge list: one "u w" pair per line, lines starting with '#' (and
///    trailing tokens starting with '#') are comments,
///  - a strict undirected DOT subset: graph { a -- b; ... },
///  - JSON: {"vertices": [...], "edges": [["u","w"], ...]}.
SimplicialGraph parse_graph(const std::string& text, GraphFormat format);

/// Guesses the format from a file name (".dot", ".json", otherwise edge
/// list).
GraphFormat format_from_filename(const std::string& name);

std::string emit_graph(const SimplicialGraph& g, GraphFormat format);

/// Named graph families. Per-branch subdivision counts may be given in full
/// (k33_subdiv: 9, k5_subdiv: 10, pi: 9, fig5_right: 5) or as a single
/// broadcast value; cycle/path/mobius take one size parameter and petersen
/// none.
SimplicialGraph generate(const std::string& family, const std::vector<int>& params);

std::vector<std::string> known_families();

enum class DocumentKind { Reduction, Classification, Witness };
const char* document_kind_name(DocumentKind k);

/// Envelope for everything the tool emits: versioned, carrying the input
/// graph verbatim so a verifier needs nothing else.
struct CertificateDocument {
  std::string schema_version = "1";
  DocumentKind kind = DocumentKind::Reduction;
  int budget = 30;
  SimplicialGraph input_graph;
  std::optional<ReductionCertificate> reduction;
  std::optional<ClassificationReport> classification;
  std::optional<SymbolicWitness> witness;
};

CertificateDocument make_reduction_document(const SimplicialGraph& input,
                                            ReductionCertificate cert, int budget);
CertificateDocument make_classification_document(ClassificationReport report, int budget);
CertificateDocument make_witness_document(const SimplicialGraph& input, SymbolicWitness witness,
                                          int budget);

/// Lossless, byte-stable serialization: emit(parse(emit(x))) == emit(x).
std::string emit_document(const CertificateDocument& doc);
CertificateDocument parse_document(const std::string& text);

/// Human-readable classification summary for terminal output.
std::string render_report(const ClassificationReport& report);

}  // namespace racg

#endif
