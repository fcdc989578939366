#pragma once

#include <array>
#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "tcreal/labeling.hpp"
#include "tcreal/multigraph.hpp"

namespace tcreal {

// {"mode", "n", "edges": [{"id","u","v","tree","label"}], "central_cycle"}
inline nlohmann::json to_json(const LabeledMultigraph& g, const std::optional<std::array<VertexId, 4>>& cycle) {
    nlohmann::json out;
    out["mode"] = to_string(g.mode());
    out["n"] = g.vertex_count();
    auto edges = nlohmann::json::array();
    EdgeId next = 0;
    for (EdgeId e = 0; e < g.edge_capacity(); ++e) {
        const auto& r = g.edge(e);
        if (!r.alive) continue;
        nlohmann::json je;
        je["id"] = next++;
        je["u"] = r.u;
        je["v"] = r.v;
        je["tree"] = to_string(r.tree);
        je["label"] = r.label == 0 ? nlohmann::json(nullptr) : nlohmann::json(r.label);
        edges.push_back(std::move(je));
    }
    out["edges"] = std::move(edges);
    out["central_cycle"] = cycle ? nlohmann::json(*cycle) : nlohmann::json(nullptr);
    return out;
}

struct LoadedGraph {
    LabeledMultigraph graph;
    std::optional<std::array<VertexId, 4>> central_cycle;
};

// Throws std::invalid_argument on malformed input.
inline LoadedGraph graph_from_json(const nlohmann::json& j) {
    try {
        LoadedGraph out{LabeledMultigraph(parse_mode(j.at("mode").get<std::string>())), std::nullopt};
        auto n = j.at("n").get<std::int64_t>();
        if (n < 0) throw std::invalid_argument("negative vertex count");
        for (std::int64_t i = 0; i < n; ++i) out.graph.add_vertex();
        const auto& edges = j.at("edges");
        if (!edges.is_array()) throw std::invalid_argument("edges must be an array");
        std::vector<const nlohmann::json*> by_id(edges.size(), nullptr);
        for (const auto& je : edges) {
            auto id = je.at("id").get<std::int64_t>();
            if (id < 0 || std::size_t(id) >= by_id.size() || by_id[id]) {
                throw std::invalid_argument("edge ids must be 0..m-1 without repeats");
            }
            by_id[id] = &je;
        }
        for (const auto* je : by_id) {
            auto u = je->at("u").get<std::int64_t>();
            auto v = je->at("v").get<std::int64_t>();
            if (u < 0 || v < 0 || u >= n || v >= n) throw std::invalid_argument("edge endpoint out of range");
            auto tree = je->contains("tree") ? parse_tree_flag(je->at("tree").get<std::string>()) : TreeFlag::none;
            auto e = out.graph.add_edge(VertexId(u), VertexId(v), tree);
            if (je->contains("label") && !je->at("label").is_null()) {
                auto t = je->at("label").get<std::int64_t>();
                if (t <= 0 || t > std::int64_t(npos)) throw std::invalid_argument("labels must be positive integers");
                out.graph.set_label(e, Label(t));
            }
        }
        if (j.contains("central_cycle") && !j.at("central_cycle").is_null()) {
            auto c = j.at("central_cycle").get<std::vector<std::int64_t>>();
            if (c.size() != 4) throw std::invalid_argument("central_cycle needs four vertices");
            std::array<VertexId, 4> cyc{};
            for (int i = 0; i < 4; ++i) {
                if (c[i] < 0 || c[i] >= n) throw std::invalid_argument("central_cycle vertex out of range");
                cyc[i] = VertexId(c[i]);
            }
            out.central_cycle = cyc;
        }
        return out;
    } catch (const nlohmann::json::exception& ex) {
        throw std::invalid_argument(std::string("malformed graph json: ") + ex.what());
    }
}

inline LoadedGraph graph_from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& ex) {
        throw std::invalid_argument(std::string("malformed graph json: ") + ex.what());
    }
    return graph_from_json(j);
}

// Graphviz rendering: tree membership as colour, labels on edges, central
// cycle vertices filled.
inline std::string to_dot(const LabeledMultigraph& g, const std::optional<std::array<VertexId, 4>>& cycle) {
    std::ostringstream out;
    out << "graph realization {\n  node [shape=circle];\n";
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        bool central = cycle && std::find(cycle->begin(), cycle->end(), v) != cycle->end();
        out << "  " << v;
        if (central) out << " [style=filled, fillcolor=lightgray]";
        out << ";\n";
    }
    for (EdgeId e = 0; e < g.edge_capacity(); ++e) {
        const auto& r = g.edge(e);
        if (!r.alive) continue;
        const char* colour = "gray";
        switch (r.tree) {
            case TreeFlag::t1: colour = "red"; break;
            case TreeFlag::t2: colour = "blue"; break;
            case TreeFlag::both: colour = "purple"; break;
            default: break;
        }
        out << "  " << r.u << " -- " << r.v << " [color=" << colour;
        if (r.label != 0) out << ", label=\"" << r.label << "\"";
        out << "];\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace tcreal
