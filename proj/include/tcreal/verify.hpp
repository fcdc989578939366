#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tcreal/labeling.hpp"
#include "tcreal/multigraph.hpp"

namespace tcreal {

inline constexpr std::uint64_t unreachable = std::numeric_limits<std::uint64_t>::max();

using ArrivalRow = std::vector<std::uint64_t>;

namespace detail {

struct DisjointSets {
    std::vector<std::uint32_t> parent;
    explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
    std::uint32_t find(std::uint32_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

inline void require_total(const LabeledMultigraph& g, const TemporalLabeling& lab) {
    if (lab.size() != g.edge_capacity()) throw precondition_error("labeling does not match the edge set");
    for (EdgeId e = 0; e < g.edge_capacity(); ++e) {
        if (g.edge(e).alive && lab[e] == 0) throw precondition_error("unlabeled edge " + std::to_string(e));
    }
}

inline std::vector<EdgeId> edges_by_label(const LabeledMultigraph& g, const TemporalLabeling& lab) {
    std::vector<EdgeId> order;
    order.reserve(g.edge_count());
    for (EdgeId e = 0; e < g.edge_capacity(); ++e) {
        if (g.edge(e).alive) order.push_back(e);
    }
    std::stable_sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) { return lab[a] < lab[b]; });
    return order;
}

}  // namespace detail

// Two edges sharing an endpoint with the same label, if any.
inline std::optional<std::pair<EdgeId, EdgeId>> first_label_conflict(const LabeledMultigraph& g,
                                                                     const TemporalLabeling& lab) {
    detail::require_total(g, lab);
    std::vector<std::pair<Label, EdgeId>> around;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        around.clear();
        for (auto e : g.incident(v)) around.emplace_back(lab[e], e);
        std::sort(around.begin(), around.end());
        for (std::size_t i = 1; i < around.size(); ++i) {
            if (around[i].first == around[i - 1].first) return std::make_pair(around[i - 1].second, around[i].second);
        }
    }
    return std::nullopt;
}

inline bool is_proper(const LabeledMultigraph& g, const TemporalLabeling& lab) {
    return !first_label_conflict(g, lab).has_value();
}

// Every live edge carries exactly one label.
inline bool is_simple(const LabeledMultigraph& g, const TemporalLabeling& lab) {
    if (lab.size() != g.edge_capacity()) return false;
    for (EdgeId e = 0; e < g.edge_capacity(); ++e) {
        if (g.edge(e).alive && lab[e] == 0) return false;
    }
    return true;
}

// Earliest arrival times from src. Strict journeys need increasing labels;
// non-strict ones allow equal consecutive labels.
inline ArrivalRow earliest_arrival(const LabeledMultigraph& g, const TemporalLabeling& lab, VertexId src,
                                   bool strict = true) {
    detail::require_total(g, lab);
    if (src >= g.vertex_count()) throw precondition_error("source out of range");
    ArrivalRow arr(g.vertex_count(), unreachable);
    arr[src] = 0;
    auto order = detail::edges_by_label(g, lab);
    if (strict) {
        // arr < t excludes arrivals from the current round, so in-place
        // updates are safe.
        for (auto e : order) {
            const auto& r = g.edge(e);
            const std::uint64_t t = lab[e];
            if (arr[r.u] < t && t < arr[r.v]) arr[r.v] = t;
            else if (arr[r.v] < t && t < arr[r.u]) arr[r.u] = t;
        }
        return arr;
    }
    detail::DisjointSets sets(g.vertex_count());
    std::vector<char> hit(g.vertex_count(), 0);
    std::vector<VertexId> touched;
    for (std::size_t i = 0; i < order.size();) {
        std::size_t j = i;
        const std::uint64_t t = lab[order[i]];
        while (j < order.size() && lab[order[j]] == t) ++j;
        touched.clear();
        for (std::size_t k = i; k < j; ++k) {
            const auto& r = g.edge(order[k]);
            touched.push_back(r.u);
            touched.push_back(r.v);
            sets.unite(r.u, r.v);
        }
        for (auto v : touched) {
            if (arr[v] <= t) hit[sets.find(v)] = 1;
        }
        for (auto v : touched) {
            if (hit[sets.find(v)] && arr[v] > t) arr[v] = t;
        }
        for (auto v : touched) hit[sets.find(v)] = 0;
        for (auto v : touched) sets.parent[v] = v;
        i = j;
    }
    return arr;
}

inline std::vector<ArrivalRow> reachability_table(const LabeledMultigraph& g, const TemporalLabeling& lab,
                                                  bool strict = true) {
    std::vector<ArrivalRow> table;
    table.reserve(g.vertex_count());
    for (VertexId s = 0; s < g.vertex_count(); ++s) table.push_back(earliest_arrival(g, lab, s, strict));
    return table;
}

namespace detail {

// Propagates "who has reached me" bitsets through the edges in label order.
// Returns the bitset table, n rows of ceil(n/64) words.
inline std::vector<std::uint64_t> knowledge(const LabeledMultigraph& g, const TemporalLabeling& lab, bool strict) {
    require_total(g, lab);
    const std::size_t n = g.vertex_count();
    const std::size_t words = (n + 63) / 64;
    std::vector<std::uint64_t> know(n * words, 0);
    for (std::size_t v = 0; v < n; ++v) know[v * words + v / 64] |= std::uint64_t(1) << (v % 64);
    auto order = edges_by_label(g, lab);
    std::vector<std::uint32_t> stamp(n, 0);
    DisjointSets sets(n);
    std::vector<std::uint64_t> saved;
    std::vector<VertexId> touched;
    std::uint32_t round = 0;
    for (std::size_t i = 0; i < order.size();) {
        std::size_t j = i;
        const Label t = lab[order[i]];
        ++round;
        bool disjoint = true;
        while (j < order.size() && lab[order[j]] == t) {
            const auto& r = g.edge(order[j]);
            for (auto x : {r.u, r.v}) {
                if (stamp[x] == round) disjoint = false;
                stamp[x] = round;
            }
            ++j;
        }
        if (disjoint) {
            for (std::size_t k = i; k < j; ++k) {
                const auto& r = g.edge(order[k]);
                auto* a = &know[r.u * words];
                auto* b = &know[r.v * words];
                for (std::size_t w = 0; w < words; ++w) a[w] = b[w] = a[w] | b[w];
            }
            i = j;
            continue;
        }
        // Several same-time edges share an endpoint.
        if (strict) {
            // Each edge only passes on what was known before time t.
            touched.clear();
            for (std::size_t k = i; k < j; ++k) {
                const auto& r = g.edge(order[k]);
                touched.push_back(r.u);
                touched.push_back(r.v);
            }
            std::sort(touched.begin(), touched.end());
            touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
            saved.assign(touched.size() * words, 0);
            for (std::size_t k = 0; k < touched.size(); ++k) {
                std::copy_n(&know[touched[k] * words], words, &saved[k * words]);
            }
            auto before = [&](VertexId v) {
                auto k = std::size_t(std::lower_bound(touched.begin(), touched.end(), v) - touched.begin());
                return &saved[k * words];
            };
            for (std::size_t k = i; k < j; ++k) {
                const auto& r = g.edge(order[k]);
                auto* pu = before(r.u);
                auto* pv = before(r.v);
                for (std::size_t w = 0; w < words; ++w) {
                    know[r.u * words + w] |= pv[w];
                    know[r.v * words + w] |= pu[w];
                }
            }
        } else {
            // Same-time edges chain: every vertex of a same-time component
            // learns everything the component knows.
            for (std::size_t k = i; k < j; ++k) {
                const auto& r = g.edge(order[k]);
                sets.unite(r.u, r.v);
            }
            touched.clear();
            for (std::size_t k = i; k < j; ++k) {
                touched.push_back(g.edge(order[k]).u);
                touched.push_back(g.edge(order[k]).v);
            }
            for (auto v : touched) {
                auto root = sets.find(v);
                if (root == v) continue;
                for (std::size_t w = 0; w < words; ++w) know[root * words + w] |= know[v * words + w];
            }
            for (auto v : touched) {
                auto root = sets.find(v);
                if (root == v) continue;
                std::copy_n(&know[root * words], words, &know[v * words]);
            }
            for (auto v : touched) sets.parent[v] = v;
        }
        i = j;
    }
    return know;
}

inline std::optional<std::pair<VertexId, VertexId>> first_gap(const LabeledMultigraph& g, const TemporalLabeling& lab,
                                                              bool strict) {
    const std::size_t n = g.vertex_count();
    const std::size_t words = (n + 63) / 64;
    auto know = knowledge(g, lab, strict);
    for (std::size_t src = 0; src < n; ++src) {
        for (std::size_t dst = 0; dst < n; ++dst) {
            if (!((know[dst * words + src / 64] >> (src % 64)) & 1u)) return std::make_pair(VertexId(src), VertexId(dst));
        }
    }
    return std::nullopt;
}

}  // namespace detail

// First ordered pair (source, target) with no journey, if any.
inline std::optional<std::pair<VertexId, VertexId>> first_unreachable_pair(const LabeledMultigraph& g,
                                                                           const TemporalLabeling& lab,
                                                                           bool strict = true) {
    return detail::first_gap(g, lab, strict);
}

inline bool is_tc(const LabeledMultigraph& g, const TemporalLabeling& lab) {
    return !detail::first_gap(g, lab, true).has_value();
}

inline bool is_tc_nonstrict(const LabeledMultigraph& g, const TemporalLabeling& lab) {
    return !detail::first_gap(g, lab, false).has_value();
}

// Reason the certificate is invalid for g, or nullopt if it is valid.
inline std::optional<std::string> certificate_problem(const LabeledMultigraph& g, const Certificate& c) {
    const std::size_t n = g.vertex_count();
    const std::size_t cap = g.edge_capacity();
    std::vector<char> in1(cap, 0), in2(cap, 0);
    auto check_tree = [&](const std::vector<EdgeId>& tree, std::vector<char>& mark,
                          const char* name) -> std::optional<std::string> {
        if (n > 0 && tree.size() != n - 1) return std::string(name) + " does not have n-1 edges";
        detail::DisjointSets sets(n);
        for (auto e : tree) {
            if (e >= cap || !g.edge(e).alive) return std::string(name) + " references a missing edge";
            if (mark[e]) return std::string(name) + " lists an edge twice";
            mark[e] = 1;
            if (!sets.unite(g.edge(e).u, g.edge(e).v)) return std::string(name) + " contains a cycle";
        }
        return std::nullopt;
    };
    if (auto p = check_tree(c.tree1, in1, "tree1")) return p;
    if (auto p = check_tree(c.tree2, in2, "tree2")) return p;

    std::vector<EdgeId> common;
    for (auto e : c.tree1) {
        if (in2[e]) common.push_back(e);
    }
    auto listed = c.shared;
    std::sort(listed.begin(), listed.end());
    std::sort(common.begin(), common.end());
    if (listed != common) return "shared list differs from the tree intersection";
    if (common.size() > 2) return "more than two shared edges";

    std::vector<char> on_cycle(cap, 0);
    if (common.size() == 2 || c.central_cycle) {
        if (!c.central_cycle) return "two shared edges without a central cycle";
        if (common.size() != 2) return "central cycle needs exactly two shared edges";
        if (g.edge_count() + 4 != 2 * n) return "central cycle certificate needs exactly 2n-4 edges";
        const auto& cyc = *c.central_cycle;
        for (int i = 0; i < 4; ++i) {
            if (cyc[i] >= n) return "central cycle vertex out of range";
            for (int j = 0; j < i; ++j) {
                if (cyc[i] == cyc[j]) return "central cycle repeats a vertex";
            }
        }
        if (g.multiplicity(cyc[0], cyc[2]) != 0 || g.multiplicity(cyc[1], cyc[3]) != 0) return "central cycle has a chord";
        int count1 = 0, count2 = 0;
        for (int i = 0; i < 4; ++i) {
            auto a = cyc[i], b = cyc[(i + 1) % 4];
            if (g.multiplicity(a, b) != 1) return "central cycle edge missing or parallel";
            for (auto e : g.incident(a)) {
                if (g.other(e, a) != b) continue;
                on_cycle[e] = 1;
                count1 += in1[e];
                count2 += in2[e];
            }
        }
        for (auto e : common) {
            if (!on_cycle[e]) return "shared edge is not on the central cycle";
        }
        if (count1 != 3 || count2 != 3) return "each tree must contain three central cycle edges";
    }

    std::vector<char> used(cap, 0);
    for (auto [a, b] : c.matching_pairs) {
        if (a >= cap || b >= cap || !g.edge(a).alive || !g.edge(b).alive) return "matching pair references a missing edge";
        if (!in1[a] || in2[a] || on_cycle[a]) return "matching pair tree-1 edge is misplaced";
        if (!in2[b] || in1[b] || on_cycle[b]) return "matching pair tree-2 edge is misplaced";
        if (used[a] || used[b]) return "matching pairs reuse an edge";
        used[a] = used[b] = 1;
        const auto &ra = g.edge(a), &rb = g.edge(b);
        if (ra.u == rb.u || ra.u == rb.v || ra.v == rb.u || ra.v == rb.v) return "matching pair shares an endpoint";
    }
    return std::nullopt;
}

inline bool validate_certificate(const LabeledMultigraph& g, const Certificate& c) {
    return !certificate_problem(g, c).has_value();
}

}  // namespace tcreal
