#pragma once

// Slow reference checks written without the library's algorithms. They only
// use plain edge lists so a bug in the library cannot leak into them.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

namespace brute {

using Edge = std::pair<std::uint32_t, std::uint32_t>;

struct LabeledEdge {
    std::uint32_t u;
    std::uint32_t v;
    std::uint64_t t;
};

// Tries every subset of the n(n-1)/2 vertex pairs.
inline bool graphical(std::vector<std::uint32_t> d) {
    const std::size_t n = d.size();
    std::vector<Edge> pairs;
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << pairs.size()); ++mask) {
        std::vector<std::uint32_t> deg(n, 0);
        for (std::size_t k = 0; k < pairs.size(); ++k) {
            if (mask >> k & 1u) {
                ++deg[pairs[k].first];
                ++deg[pairs[k].second];
            }
        }
        if (deg == d) return true;
    }
    return false;
}

// Loopless multigraph search: the first vertex with residual degree is
// joined to some other vertex with residual degree, over all choices.
inline bool multigraphical(std::vector<std::uint32_t> d) {
    std::set<std::vector<std::uint32_t>> failed;
    std::function<bool(std::vector<std::uint32_t>)> rec = [&](std::vector<std::uint32_t> r) -> bool {
        std::sort(r.begin(), r.end(), std::greater<>());
        while (!r.empty() && r.back() == 0) r.pop_back();
        if (r.empty()) return true;
        if (r.size() == 1) return false;
        if (failed.count(r)) return false;
        for (std::size_t j = 1; j < r.size(); ++j) {
            auto next = r;
            --next[0];
            --next[j];
            if (rec(next)) return true;
        }
        failed.insert(r);
        return false;
    };
    return rec(d);
}

inline std::vector<std::uint32_t> degrees(std::size_t n, const std::vector<Edge>& edges) {
    std::vector<std::uint32_t> deg(n, 0);
    for (auto [u, v] : edges) {
        ++deg[u];
        ++deg[v];
    }
    return deg;
}

inline bool connected(std::size_t n, const std::vector<Edge>& edges) {
    if (n == 0) return true;
    std::vector<char> seen(n, 0);
    seen[0] = 1;
    for (bool grew = true; grew;) {
        grew = false;
        for (auto [u, v] : edges) {
            if (seen[u] != seen[v]) {
                seen[u] = seen[v] = 1;
                grew = true;
            }
        }
    }
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

inline bool spanning_tree(std::size_t n, const std::vector<Edge>& edges) {
    return n > 0 && edges.size() == n - 1 && connected(n, edges);
}

// Every (vertex, arrival time) state reachable from src, by fixpoint
// iteration. Strict journeys need increasing times.
inline std::vector<bool> reaches(std::size_t n, const std::vector<LabeledEdge>& edges, std::uint32_t src,
                                 bool strict = true) {
    const auto none = std::numeric_limits<std::uint64_t>::max();
    std::set<std::pair<std::uint32_t, std::uint64_t>> states{{src, 0}};
    for (bool grew = true; grew;) {
        grew = false;
        auto snapshot = states;
        for (auto [v, at] : snapshot) {
            for (const auto& e : edges) {
                bool ok = strict ? e.t > at : e.t >= at;
                if (!ok || at == none) continue;
                if (e.u == v && states.insert({e.v, e.t}).second) grew = true;
                if (e.v == v && states.insert({e.u, e.t}).second) grew = true;
            }
        }
    }
    std::vector<bool> out(n, false);
    for (auto [v, at] : states) out[v] = true;
    return out;
}

inline bool temporally_connected(std::size_t n, const std::vector<LabeledEdge>& edges, bool strict = true) {
    for (std::uint32_t s = 0; s < n; ++s) {
        auto r = reaches(n, edges, s, strict);
        if (std::find(r.begin(), r.end(), false) != r.end()) return false;
    }
    return true;
}

inline bool proper(const std::vector<LabeledEdge>& edges) {
    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            const auto& a = edges[i];
            const auto& b = edges[j];
            bool touch = a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v;
            if (touch && a.t == b.t) return false;
        }
    }
    return true;
}

}  // namespace brute
