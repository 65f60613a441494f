#include "uq/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace uq {

namespace {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

ordered interval_fields(const Interval& iv) {
    ordered out;
    if (iv.trivial()) {
        out["value"] = iv.value().to_string();
    } else {
        out["L"] = iv.lower().to_string();
        out["U"] = iv.upper().to_string();
    }
    return out;
}

Interval interval_from(const json& j) {
    if (j.contains("value")) return Interval::point(Rational::parse(j.at("value")));
    return Interval::open(Rational::parse(j.at("L")), Rational::parse(j.at("U")));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

}  // namespace

std::string serialize_instance(const Instance& instance) {
    ordered doc;
    doc["kind"] = to_string(instance.kind());
    doc["vertex_count"] = instance.vertex_count();
    ordered verts = ordered::array();
    for (VertexId v = 0; v < instance.vertex_count(); ++v) {
        ordered rec = interval_fields(instance.interval(v));
        rec["id"] = v;
        if (!instance.interval(v).trivial()) {
            rec["w"] = instance.true_weight(v).to_string();
            rec["what"] = instance.predicted_weight(v).to_string();
        }
        verts.push_back(std::move(rec));
    }
    doc["vertices"] = std::move(verts);
    if (instance.kind() != InstanceKind::sorting) {
        ordered edges = ordered::array();
        for (const auto& edge : instance.hyperedges()) edges.push_back(edge);
        doc["hyperedges"] = std::move(edges);
    }
    return doc.dump(2) + "\n";
}

Instance parse_instance(const std::string& text) {
    json doc = json::parse(text);
    InstanceKind kind = instance_kind_from_string(doc.at("kind"));
    Hypergraph graph;
    graph.vertex_count = doc.at("vertex_count");
    if (kind != InstanceKind::sorting) {
        for (const auto& edge : doc.at("hyperedges"))
            graph.edges.push_back(edge.get<std::vector<VertexId>>());
    } else if (doc.contains("hyperedges")) {
        throw std::invalid_argument("sorting instance files must not list hyperedges");
    }
    std::vector<VertexRecord> records;
    for (const auto& item : doc.at("vertices")) {
        Interval iv = interval_from(item);
        VertexId id = item.at("id");
        if (iv.trivial()) {
            records.push_back({id, iv, iv.value(), iv.value()});
        } else {
            records.push_back({id, iv, Rational::parse(item.at("w")),
                               Rational::parse(item.at("what"))});
        }
    }
    return Instance::build(std::move(graph), std::move(records), kind);
}

void write_instance_file(const Instance& instance, const std::string& path) {
    write_file(path, serialize_instance(instance));
}

Instance read_instance_file(const std::string& path) {
    return parse_instance(read_file(path));
}

std::string serialize_sample_set(const WeightSampleSet& samples) {
    ordered doc;
    doc["kind"] = to_string(samples.kind);
    doc["vertex_count"] = samples.hypergraph.vertex_count;
    ordered verts = ordered::array();
    for (VertexId v = 0; v < samples.hypergraph.vertex_count; ++v) {
        ordered rec = interval_fields(samples.intervals[v]);
        rec["id"] = v;
        verts.push_back(std::move(rec));
    }
    doc["vertices"] = std::move(verts);
    if (samples.kind != InstanceKind::sorting) {
        ordered edges = ordered::array();
        for (const auto& edge : samples.hypergraph.edges) edges.push_back(edge);
        doc["hyperedges"] = std::move(edges);
    }
    ordered rows = ordered::array();
    for (const auto& assignment : samples.samples) {
        ordered row = ordered::array();
        for (const auto& w : assignment) row.push_back(w.to_string());
        rows.push_back(std::move(row));
    }
    doc["samples"] = std::move(rows);
    return doc.dump(2) + "\n";
}

WeightSampleSet parse_sample_set(const std::string& text) {
    json doc = json::parse(text);
    WeightSampleSet set;
    set.kind = instance_kind_from_string(doc.at("kind"));
    set.hypergraph.vertex_count = doc.at("vertex_count");
    std::vector<std::pair<VertexId, Interval>> entries;
    for (const auto& item : doc.at("vertices"))
        entries.emplace_back(item.at("id").get<VertexId>(), interval_from(item));
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [id, iv] : entries) set.intervals.push_back(iv);
    if (set.kind == InstanceKind::sorting)
        set.hypergraph.edges = derive_sorting_edges(set.intervals);
    else
        for (const auto& edge : doc.at("hyperedges"))
            set.hypergraph.edges.push_back(edge.get<std::vector<VertexId>>());
    for (const auto& row : doc.at("samples")) {
        std::vector<Rational> assignment;
        for (const auto& w : row) assignment.push_back(Rational::parse(w));
        set.samples.push_back(std::move(assignment));
    }
    set.validate();
    return set;
}

void write_sample_set_file(const WeightSampleSet& samples, const std::string& path) {
    write_file(path, serialize_sample_set(samples));
}

WeightSampleSet read_sample_set_file(const std::string& path) {
    return parse_sample_set(read_file(path));
}

std::string serialize_vertex_set(const std::vector<VertexId>& set) {
    ordered doc;
    doc["mandatory_set"] = set;
    return doc.dump(2) + "\n";
}

std::vector<VertexId> parse_vertex_set(const std::string& text) {
    json doc = json::parse(text);
    return doc.at("mandatory_set").get<std::vector<VertexId>>();
}

}  // namespace uq
