#pragma once

#include <algorithm>
#include <array>
#include <span>
#include <vector>

#include "tcreal/multigraph.hpp"

namespace tcreal {

// One positive time per edge id; 0 marks an unlabeled edge.
struct TemporalLabeling {
    std::vector<Label> labels;

    Label operator[](EdgeId e) const { return labels.at(e); }
    std::size_t size() const { return labels.size(); }

    Label max_label() const {
        Label m = 0;
        for (auto t : labels) m = std::max(m, t);
        return m;
    }
};

inline void apply_labeling(LabeledMultigraph& g, const TemporalLabeling& lab) {
    if (lab.size() != g.edge_capacity()) throw precondition_error("labeling does not match the edge set");
    for (EdgeId e = 0; e < lab.size(); ++e) {
        if (!g.edge(e).alive) continue;
        if (lab[e] == 0) g.clear_label(e);
        else g.set_label(e, lab[e]);
    }
}

inline TemporalLabeling labeling_of(const LabeledMultigraph& g) {
    TemporalLabeling lab;
    lab.labels.resize(g.edge_capacity(), 0);
    for (EdgeId e = 0; e < g.edge_capacity(); ++e) {
        if (g.edge(e).alive) lab.labels[e] = g.edge(e).label;
    }
    return lab;
}

namespace detail {

inline EdgeId find_single_edge(const LabeledMultigraph& g, VertexId a, VertexId b) {
    EdgeId found = npos;
    for (auto e : g.incident(a)) {
        if (g.other(e, a) != b) continue;
        if (found != npos) throw precondition_error("central cycle edge has a parallel copy");
        found = e;
    }
    if (found == npos) throw precondition_error("central cycle edge is missing");
    return found;
}

}  // namespace detail

// Labels tree 1 from the leaves up, then the central structure (shared edge
// or 4-cycle) in one or two rounds, then tree 2 from the centre out. Edges in
// neither tree get fresh labels above everything else.
inline TemporalLabeling pivot_label(const LabeledMultigraph& g, const Certificate& cert) {
    const auto n = g.vertex_count();
    const auto cap = g.edge_capacity();
    if (cap != g.edge_count()) throw precondition_error("graph must be compacted before labeling");
    TemporalLabeling lab;
    lab.labels.assign(cap, 0);
    if (n == 0) return lab;

    std::vector<char> central(cap, 0);
    std::vector<VertexId> roots;
    std::array<EdgeId, 4> ring{};
    if (cert.central_cycle) {
        const auto& c = *cert.central_cycle;
        for (int i = 0; i < 4; ++i) {
            ring[i] = detail::find_single_edge(g, c[i], c[(i + 1) % 4]);
            central[ring[i]] = 1;
        }
        roots.assign(c.begin(), c.end());
    } else if (cert.shared.size() == 1) {
        auto e = cert.shared[0];
        if (e >= cap) throw precondition_error("shared edge out of range");
        central[e] = 1;
        roots = {g.edge(e).u, g.edge(e).v};
    } else if (cert.shared.empty()) {
        roots = {0};
    } else {
        throw precondition_error("two shared edges need a central cycle");
    }
    for (auto e : cert.shared) {
        if (e >= cap || !central[e]) throw precondition_error("shared edge off the central structure");
    }

    std::vector<char> member1(cap, 0), member2(cap, 0);
    for (auto e : cert.tree1) member1.at(e) = 1;
    for (auto e : cert.tree2) member2.at(e) = 1;

    // Tree edges off the central structure, packed per vertex in edge id
    // order, so the searches below stay within small arrays.
    struct Arc {
        VertexId to;
        EdgeId edge;
    };
    std::vector<std::uint32_t> start(n + 1);
    std::vector<Arc> arcs;
    auto pack = [&](const std::vector<char>& member) {
        std::fill(start.begin(), start.end(), 0);
        for (EdgeId e = 0; e < cap; ++e) {
            if (!member[e] || central[e]) continue;
            const auto& r = g.edge(e);
            ++start[r.u + 1];
            ++start[r.v + 1];
        }
        for (std::size_t v = 0; v < n; ++v) start[v + 1] += start[v];
        arcs.resize(start[n]);
        std::vector<std::uint32_t> fill(start.begin(), start.end() - 1);
        for (EdgeId e = 0; e < cap; ++e) {
            if (!member[e] || central[e]) continue;
            const auto& r = g.edge(e);
            arcs[fill[r.u]++] = {r.v, e};
            arcs[fill[r.v]++] = {r.u, e};
        }
    };

    auto forest_bfs = [&](const std::vector<char>& member, std::vector<VertexId>& order, std::vector<EdgeId>& up) {
        pack(member);
        std::vector<char> seen(n, 0);
        order.clear();
        order.reserve(n);
        up.assign(n, npos);
        for (auto r : roots) {
            if (!seen[r]) {
                seen[r] = 1;
                order.push_back(r);
            }
        }
        for (std::size_t i = 0; i < order.size(); ++i) {
            auto v = order[i];
            for (auto k = start[v]; k < start[v + 1]; ++k) {
                auto [w, e] = arcs[k];
                if (seen[w]) continue;
                seen[w] = 1;
                up[w] = e;
                order.push_back(w);
            }
        }
        if (order.size() != n) throw precondition_error("certificate tree does not span the graph");
    };

    std::vector<VertexId> order;
    std::vector<EdgeId> up;
    Label next = 0;

    forest_bfs(member1, order, up);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        if (up[*it] != npos) lab.labels[up[*it]] = ++next;
    }
    const Label top = next;

    if (cert.central_cycle) {
        auto low_pair = std::min(ring[0], ring[2]) < std::min(ring[1], ring[3]) ? 0 : 1;
        lab.labels[ring[low_pair]] = lab.labels[ring[low_pair + 2]] = top + 1;
        lab.labels[ring[1 - low_pair]] = lab.labels[ring[3 - low_pair]] = top + 2;
    } else if (cert.shared.size() == 1) {
        lab.labels[cert.shared[0]] = top + 1;
    }

    next = top + 2;
    forest_bfs(member2, order, up);
    for (auto v : order) {
        if (up[v] == npos) continue;
        if (lab.labels[up[v]] != 0) throw precondition_error("trees overlap off the central structure");
        lab.labels[up[v]] = ++next;
    }

    for (EdgeId e = 0; e < cap; ++e) {
        if (lab.labels[e] != 0) continue;
        if (member1[e] || member2[e]) throw precondition_error("certificate tree contains a cycle");
        lab.labels[e] = ++next;
    }
    return lab;
}

// Every tree edge gets time 1; the rest get 2, 3, ... in id order. Only
// temporally connected under non-strict journeys.
inline TemporalLabeling label_plain_tree(const LabeledMultigraph& g, std::span<const EdgeId> tree) {
    const auto n = g.vertex_count();
    TemporalLabeling lab;
    lab.labels.assign(g.edge_capacity(), 0);
    for (auto e : tree) {
        if (e >= g.edge_capacity() || !g.edge(e).alive) throw precondition_error("tree edge out of range");
        lab.labels[e] = 1;
    }
    // n-1 edges reaching every vertex make a spanning tree.
    std::vector<char> seen(n, 0);
    std::vector<VertexId> queue;
    if (n > 0) {
        seen[0] = 1;
        queue.push_back(0);
    }
    for (std::size_t i = 0; i < queue.size(); ++i) {
        for (auto e : g.incident(queue[i])) {
            auto w = g.other(e, queue[i]);
            if (lab.labels[e] != 1 || seen[w]) continue;
            seen[w] = 1;
            queue.push_back(w);
        }
    }
    if (queue.size() != n || (n > 0 && tree.size() != n - 1)) {
        throw precondition_error("edges do not form a spanning tree");
    }
    Label next = 1;
    for (EdgeId e = 0; e < g.edge_capacity(); ++e) {
        if (g.edge(e).alive && lab.labels[e] == 0) lab.labels[e] = ++next;
    }
    return lab;
}

}  // namespace tcreal
