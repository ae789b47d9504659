#include "strucnet/graph_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace strucnet {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& message) { throw ParseError("graph file: " + message); }

int resolve(const std::vector<std::string>& labels, const json& value) {
    if (!value.is_string()) fail("edge endpoints must be node labels");
    const std::string label = value.get<std::string>();
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == label) return static_cast<int>(i);
    fail("unknown node label '" + label + "'");
}

}  // namespace

StructureGraph parse_graph(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        fail(e.what());
    }
    if (!doc.is_object()) fail("top level must be an object");
    if (!doc.contains("nodes") || !doc["nodes"].is_array()) fail("missing \"nodes\" array");
    if (!doc.contains("edges") || !doc["edges"].is_array()) fail("missing \"edges\" array");

    std::vector<std::string> labels;
    for (const auto& v : doc["nodes"]) {
        if (!v.is_string()) fail("node labels must be strings");
        labels.push_back(v.get<std::string>());
    }

    std::vector<Edge> edges;
    auto add = [&](Edge e) {
        for (auto existing : edges)
            if (existing == e) fail("duplicate edge " + labels[e.first] + " -> " + labels[e.second]);
        edges.push_back(e);
    };
    for (const auto& item : doc["edges"]) {
        int from, to;
        bool bidir = false;
        if (item.is_array()) {
            if (item.size() != 2) fail("edge pairs must have exactly two labels");
            from = resolve(labels, item[0]);
            to = resolve(labels, item[1]);
        } else if (item.is_object()) {
            if (!item.contains("from") || !item.contains("to")) fail("edge objects need \"from\" and \"to\"");
            from = resolve(labels, item["from"]);
            to = resolve(labels, item["to"]);
            if (item.contains("bidir")) {
                if (!item["bidir"].is_boolean()) fail("\"bidir\" must be a boolean");
                bidir = item["bidir"].get<bool>();
            }
        } else {
            fail("edges must be [from, to] pairs or {from, to, bidir} objects");
        }
        add({from, to});
        if (bidir && from != to) add({to, from});
    }

    try {
        return StructureGraph(std::move(labels), std::move(edges));
    } catch (const std::invalid_argument& e) {
        fail(e.what());
    }
}

StructureGraph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_graph(buffer.str());
}

std::string serialize_graph(const StructureGraph& g) {
    nlohmann::ordered_json doc;
    doc["nodes"] = g.labels();
    auto& edges = doc["edges"] = nlohmann::ordered_json::array();
    for (auto [from, to] : g.edges()) edges.push_back({g.label(from), g.label(to)});
    return doc.dump(2) + "\n";
}

std::string to_dot(const StructureGraph& g, const std::vector<int>& bottle,
                   const std::vector<int>& neck) {
    const int n = g.size();
    std::vector<char> in_bottle(n, 0), in_neck(n, 0);
    for (int v : bottle) in_bottle.at(v) = 1;
    for (int v : neck) in_neck.at(v) = 1;

    auto quoted = [](const std::string& s) {
        std::string out = "\"";
        for (char c : s) {
            if (c == '"' || c == '\\') out += '\\';
            out += c;
        }
        return out + "\"";
    };

    std::ostringstream dot;
    dot << "digraph structure {\n";
    for (int v = 0; v < n; ++v) {
        dot << "  " << quoted(g.label(v));
        if (in_bottle[v] && in_neck[v])
            dot << " [style=filled, fillcolor=violet]";
        else if (in_bottle[v])
            dot << " [style=filled, fillcolor=blue]";
        else if (in_neck[v])
            dot << " [style=filled, fillcolor=red]";
        dot << ";\n";
    }
    for (auto [from, to] : g.edges())
        dot << "  " << quoted(g.label(from)) << " -> " << quoted(g.label(to)) << ";\n";
    dot << "}\n";
    return dot.str();
}

}  // namespace strucnet
