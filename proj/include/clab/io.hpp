#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "clab/hypergraph.hpp"
#include "clab/report.hpp"

namespace clab {

// On-disk instance format: a single JSON object with keys `n`, `edges`,
// optional `labels` (one per vertex) and optional `meta` (string map).
// Rationals elsewhere in reports are serialized as "num/den" strings.
struct HypergraphDocument {
    int n = 0;
    std::vector<std::vector<int>> edges;  // each sorted ascending after parse
    std::optional<std::vector<std::string>> labels;
    std::map<std::string, std::string> meta;

    bool operator==(const HypergraphDocument&) const = default;
};

// distinct failure modes, so callers can tell bad syntax from bad content
struct MalformedDocumentError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IndexOutOfRangeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct EmptyEdgeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parses and canonicalizes (sorts vertices within edges, sorts and dedupes
// the edge list).  Any canonicalization performed on the way in is reported
// through `warnings` when provided.
HypergraphDocument parse_document(const std::string& text, std::vector<std::string>* warnings = nullptr);

std::string serialize_document(const HypergraphDocument& doc);

Hypergraph document_to_hypergraph(const HypergraphDocument& doc);
HypergraphDocument hypergraph_to_document(const Hypergraph& h, std::map<std::string, std::string> meta = {});

std::string report_to_json(const VerificationReport& rep);

// whole-file helpers used by the CLI
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace clab
