#pragma once

#include <cstdint>
#include <functional>
#include <unordered_set>
#include <utility>
#include <vector>

#include "tcreal/degree_sequence.hpp"
#include "tcreal/labeling.hpp"
#include "tcreal/multigraph.hpp"
#include "tcreal/verify.hpp"

// Exhaustive search, independent of the constructions. Only practical for
// very small inputs.
namespace tcreal {

struct OracleCaps {
    std::size_t max_n = 6;
    std::size_t max_m = 9;
};

using EdgeList = std::vector<std::pair<VertexId, VertexId>>;

// Calls visit for every labeled realization of d on vertices 0..n-1 where
// vertex i gets the i-th largest degree. Stops early when visit returns true.
// Returns whether some call returned true.
inline bool for_each_realization(const DegreeSequence& d, GraphMode mode,
                                 const std::function<bool(const EdgeList&)>& visit) {
    const auto deg = d.entries();
    const std::size_t n = deg.size();
    std::vector<std::uint32_t> rem(deg.begin(), deg.end());
    std::vector<std::uint64_t> suffix(n + 1, 0);
    for (std::size_t i = n; i-- > 0;) suffix[i] = suffix[i + 1] + rem[i];
    EdgeList edges;

    // Vertex i must be saturated by pairs (i, j) for j > i.
    std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t j) -> bool {
        if (i + 1 >= n) return (n == 0 || rem[n - 1] == 0) ? visit(edges) : false;
        if (j == n) {
            if (rem[i] != 0) return false;
            return rec(i + 1, i + 2);
        }
        std::uint32_t most = std::min(rem[i], rem[j]);
        if (mode == GraphMode::simple) most = std::min<std::uint32_t>(most, 1);
        // Remaining later vertices must be able to absorb what is left of i.
        std::uint64_t room = 0;
        for (std::size_t k = j + 1; k < n; ++k) room += mode == GraphMode::simple ? std::min<std::uint32_t>(rem[k], 1) : rem[k];
        for (std::uint32_t c = most + 1; c-- > 0;) {
            if (rem[i] - c > room) break;
            rem[i] -= c;
            rem[j] -= c;
            for (std::uint32_t k = 0; k < c; ++k) edges.emplace_back(VertexId(i), VertexId(j));
            bool done = rec(i, j + 1);
            for (std::uint32_t k = 0; k < c; ++k) edges.pop_back();
            rem[i] += c;
            rem[j] += c;
            if (done) return true;
        }
        return false;
    };
    return rec(0, 1);
}

// Searches for a call order over the edges (each edge used at most once)
// after which every vertex has heard from every other. Calls that teach
// neither side anything are skipped since they never change the state.
inline bool has_tc_edge_order(std::size_t n, const EdgeList& edges) {
    if (n > 8) throw precondition_error("edge-order search supports at most 8 vertices");
    if (edges.size() > 32) throw precondition_error("edge-order search supports at most 32 edges");
    if (n <= 1) return true;
    using State = std::pair<std::uint64_t, std::uint32_t>;
    struct Hash {
        std::size_t operator()(const State& s) const { return std::hash<std::uint64_t>()(s.first * 0x9e3779b97f4a7c15ull ^ s.second); }
    };
    std::unordered_set<State, Hash> dead;
    const std::uint64_t full_row = (std::uint64_t(1) << n) - 1;
    std::uint64_t full = 0;
    std::uint64_t start = 0;
    for (std::size_t v = 0; v < n; ++v) {
        full |= full_row << (8 * v);
        start |= (std::uint64_t(1) << v) << (8 * v);
    }
    auto row = [](std::uint64_t k, VertexId v) { return (k >> (8 * v)) & 0xffu; };
    std::function<bool(std::uint64_t, std::uint32_t)> dfs = [&](std::uint64_t know, std::uint32_t used) -> bool {
        if (know == full) return true;
        if (dead.count({know, used})) return false;
        for (std::size_t e = 0; e < edges.size(); ++e) {
            if (used >> e & 1u) continue;
            auto [u, v] = edges[e];
            auto ru = row(know, u), rv = row(know, v);
            if (ru == rv) continue;
            auto m = ru | rv;
            auto next = know;
            next &= ~(std::uint64_t(0xff) << (8 * u));
            next &= ~(std::uint64_t(0xff) << (8 * v));
            next |= (m << (8 * u)) | (m << (8 * v));
            if (dfs(next, used | (std::uint32_t(1) << e))) return true;
        }
        dead.insert({know, used});
        return false;
    };
    return dfs(start, 0);
}

// Tries every proper labeling with values in 1..m, ties allowed.
inline bool has_tc_proper_labeling(std::size_t n, const EdgeList& edges) {
    const std::size_t m = edges.size();
    if (m > 7) throw precondition_error("tie-allowing search supports at most 7 edges");
    LabeledMultigraph g(GraphMode::multi);
    for (std::size_t v = 0; v < n; ++v) g.add_vertex();
    for (auto [u, v] : edges) g.add_edge(u, v);
    TemporalLabeling lab;
    lab.labels.assign(m, 1);
    if (n <= 1) return true;
    if (m == 0) return false;
    for (;;) {
        if (is_proper(g, lab) && is_tc(g, lab)) return true;
        std::size_t i = 0;
        while (i < m && lab.labels[i] == m) lab.labels[i++] = 1;
        if (i == m) return false;
        ++lab.labels[i];
    }
}

// True iff some realization of d admits a proper simple labeling that is
// temporally connected. Bijective labelings suffice, which is what the
// edge-order search covers.
inline bool oracle_tc_realizable(const DegreeSequence& d, GraphMode mode, OracleCaps caps = {}) {
    if (d.size() > caps.max_n) throw precondition_error("oracle vertex cap exceeded");
    if (d.sum() / 2 > caps.max_m) throw precondition_error("oracle edge cap exceeded");
    if (!is_realizable(d, mode)) return false;
    const std::size_t n = d.size();
    return for_each_realization(d, mode, [&](const EdgeList& edges) { return has_tc_edge_order(n, edges); });
}

// Non-increasing sequences of length n over 0..max_value that are graphical
// (simple) or multigraphical (multi). max_value defaults to n-1 or 2n.
inline std::vector<DegreeSequence> enumerate_sequences(std::size_t n, GraphMode mode, std::uint32_t max_value = npos) {
    if (max_value == npos) max_value = mode == GraphMode::simple ? std::uint32_t(n == 0 ? 0 : n - 1) : std::uint32_t(2 * n);
    std::vector<DegreeSequence> out;
    std::vector<std::uint32_t> cur;
    std::function<void(std::uint32_t)> rec = [&](std::uint32_t cap) {
        if (cur.size() == n) {
            DegreeSequence d(cur);
            if (is_realizable(d, mode)) out.push_back(std::move(d));
            return;
        }
        for (std::uint32_t v = cap + 1; v-- > 0;) {
            cur.push_back(v);
            rec(v);
            cur.pop_back();
        }
    };
    rec(max_value);
    return out;
}

}  // namespace tcreal
