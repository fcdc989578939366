#pragma once

#include <vector>

#include "brute.hpp"
#include "tcreal/tcreal.hpp"

// Plain edge lists out of library graphs, for the brute-force checks.
namespace support {

inline std::vector<brute::Edge> edges_of(const tcreal::LabeledMultigraph& g) {
    std::vector<brute::Edge> out;
    for (tcreal::EdgeId e = 0; e < g.edge_capacity(); ++e) {
        if (g.edge(e).alive) out.emplace_back(g.edge(e).u, g.edge(e).v);
    }
    return out;
}

inline std::vector<brute::Edge> edges_of(const tcreal::LabeledMultigraph& g, const std::vector<tcreal::EdgeId>& ids) {
    std::vector<brute::Edge> out;
    for (auto e : ids) out.emplace_back(g.edge(e).u, g.edge(e).v);
    return out;
}

inline std::vector<brute::LabeledEdge> labeled_edges(const tcreal::LabeledMultigraph& g,
                                                     const tcreal::TemporalLabeling& lab) {
    std::vector<brute::LabeledEdge> out;
    for (tcreal::EdgeId e = 0; e < g.edge_capacity(); ++e) {
        if (g.edge(e).alive) out.push_back({g.edge(e).u, g.edge(e).v, lab[e]});
    }
    return out;
}

inline std::vector<std::uint32_t> sorted_degrees(const tcreal::LabeledMultigraph& g) {
    std::vector<std::uint32_t> deg(g.vertex_count());
    for (tcreal::VertexId v = 0; v < g.vertex_count(); ++v) deg[v] = g.degree(v);
    std::sort(deg.begin(), deg.end(), std::greater<>());
    return deg;
}

inline tcreal::LabeledMultigraph make_graph(std::size_t n, const std::vector<brute::Edge>& edges,
                                            tcreal::GraphMode mode = tcreal::GraphMode::simple) {
    tcreal::LabeledMultigraph g(mode);
    for (std::size_t i = 0; i < n; ++i) g.add_vertex();
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

inline tcreal::TemporalLabeling labels(std::vector<tcreal::Label> values) {
    tcreal::TemporalLabeling lab;
    lab.labels = std::move(values);
    return lab;
}

}  // namespace support
