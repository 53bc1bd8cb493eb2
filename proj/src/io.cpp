#include "clab/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace clab {

namespace {

using nlohmann::json;

void warn(std::vector<std::string>* warnings, const std::string& msg) {
    if (warnings) warnings->push_back(msg);
}

// canonical edge order of the document form: by size, then lexicographic
bool edge_less(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

}  // namespace

HypergraphDocument parse_document(const std::string& text, std::vector<std::string>* warnings) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw MalformedDocumentError(std::string("document is not valid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw MalformedDocumentError("document must be an object with keys 'n' and 'edges'");
    if (!j["n"].is_number_integer() || j["n"].get<long>() < 0)
        throw MalformedDocumentError("'n' must be a nonnegative integer");
    if (!j["edges"].is_array()) throw MalformedDocumentError("'edges' must be an array");

    HypergraphDocument doc;
    doc.n = j["n"].get<int>();
    for (const auto& je : j["edges"]) {
        if (!je.is_array()) throw MalformedDocumentError("each edge must be an array of integers");
        std::vector<int> edge;
        for (const auto& jv : je) {
            if (!jv.is_number_integer()) throw MalformedDocumentError("each edge must be an array of integers");
            long v = jv.get<long>();
            if (v < 0 || v >= doc.n)
                throw IndexOutOfRangeError("vertex " + std::to_string(v) + " outside 0.." + std::to_string(doc.n - 1));
            edge.push_back(int(v));
        }
        if (edge.empty()) throw EmptyEdgeError("empty edge rejected");
        doc.edges.push_back(std::move(edge));
    }

    // canonicalize: sorted vertices, no repeats, canonical edge order, no
    // duplicate edges -- warn whenever the input was not already canonical
    for (auto& e : doc.edges) {
        if (!std::is_sorted(e.begin(), e.end())) {
            std::sort(e.begin(), e.end());
            warn(warnings, "edge vertices reordered");
        }
        auto last = std::unique(e.begin(), e.end());
        if (last != e.end()) {
            e.erase(last, e.end());
            warn(warnings, "repeated vertex inside an edge dropped");
        }
    }
    if (!std::is_sorted(doc.edges.begin(), doc.edges.end(), edge_less)) {
        std::sort(doc.edges.begin(), doc.edges.end(), edge_less);
        warn(warnings, "edge list reordered");
    }
    auto last = std::unique(doc.edges.begin(), doc.edges.end());
    if (last != doc.edges.end()) {
        doc.edges.erase(last, doc.edges.end());
        warn(warnings, "duplicate edges dropped");
    }

    if (j.contains("labels")) {
        if (!j["labels"].is_array()) throw MalformedDocumentError("'labels' must be an array of strings");
        std::vector<std::string> labels;
        for (const auto& jl : j["labels"]) {
            if (!jl.is_string()) throw MalformedDocumentError("'labels' must be an array of strings");
            labels.push_back(jl.get<std::string>());
        }
        if (int(labels.size()) != doc.n) throw MalformedDocumentError("'labels' length must equal n");
        doc.labels = std::move(labels);
    }
    if (j.contains("meta")) {
        if (!j["meta"].is_object()) throw MalformedDocumentError("'meta' must be an object of strings");
        for (const auto& [k, v] : j["meta"].items()) {
            if (!v.is_string()) throw MalformedDocumentError("'meta' must be an object of strings");
            doc.meta[k] = v.get<std::string>();
        }
    }
    return doc;
}

std::string serialize_document(const HypergraphDocument& doc) {
    json j;
    j["n"] = doc.n;
    j["edges"] = doc.edges;
    if (doc.labels) j["labels"] = *doc.labels;
    if (!doc.meta.empty()) j["meta"] = doc.meta;
    return j.dump(2) + "\n";
}

Hypergraph document_to_hypergraph(const HypergraphDocument& doc) {
    std::vector<VertexSet> edges;
    for (const auto& e : doc.edges) {
        VertexSet s(doc.n);
        for (int v : e) s.add(v);
        edges.push_back(std::move(s));
    }
    return Hypergraph(doc.n, std::move(edges));
}

HypergraphDocument hypergraph_to_document(const Hypergraph& h, std::map<std::string, std::string> meta) {
    HypergraphDocument doc;
    doc.n = h.vertex_count();
    for (const auto& e : h.edges()) doc.edges.push_back(e.elements());
    doc.meta = std::move(meta);
    return doc;
}

std::string report_to_json(const VerificationReport& rep) {
    json j;
    j["name"] = rep.name;
    j["pass"] = rep.pass();
    j["checks"] = json::array();
    for (const auto& it : rep.items) {
        json c;
        c["label"] = it.label;
        c["pass"] = it.pass;
        if (!it.witness.empty()) c["witness"] = it.witness;
        j["checks"].push_back(std::move(c));
    }
    return j.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace clab
