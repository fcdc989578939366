#pragma once

#include <array>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "tcreal/degree_sequence.hpp"
#include "tcreal/detail/fixtures.hpp"
#include "tcreal/labeling.hpp"
#include "tcreal/multigraph.hpp"
#include "tcreal/verify.hpp"

namespace tcreal {

enum class DecisionReason {
    NotGraphical,
    NotMultigraphical,
    TooFewEdges,
    BoundaryFailsC4,
    TwoLeaves,
    OkC4Pivotable,
    OkOneSharedEdge,
    OkTwoEdgeDisjoint,
    OkSmallN,
};

inline const char* to_string(DecisionReason r) {
    switch (r) {
        case DecisionReason::NotGraphical: return "NotGraphical";
        case DecisionReason::NotMultigraphical: return "NotMultigraphical";
        case DecisionReason::TooFewEdges: return "TooFewEdges";
        case DecisionReason::BoundaryFailsC4: return "BoundaryFailsC4";
        case DecisionReason::TwoLeaves: return "TwoLeaves";
        case DecisionReason::OkC4Pivotable: return "OkC4Pivotable";
        case DecisionReason::OkOneSharedEdge: return "OkOneSharedEdge";
        case DecisionReason::OkTwoEdgeDisjoint: return "OkTwoEdgeDisjoint";
        case DecisionReason::OkSmallN: return "OkSmallN";
    }
    return "?";
}

struct Decision {
    bool realizable = false;
    DecisionReason reason = DecisionReason::TooFewEdges;
};

inline Decision check_tc_realizable(const DegreeSequence& d, GraphMode mode) {
    using R = DecisionReason;
    if (!is_realizable(d, mode)) return {false, mode == GraphMode::simple ? R::NotGraphical : R::NotMultigraphical};
    const auto n = std::int64_t(d.size());
    if (n == 0) return {true, R::OkSmallN};
    const auto m = std::int64_t(d.sum() / 2);
    if (n <= 2 && m >= 2 * n - 3) return {true, R::OkSmallN};
    if (m < 2 * n - 4) return {false, R::TooFewEdges};
    if (m == 2 * n - 4) {
        bool ok = d.min() >= 2 && (mode == GraphMode::multi || d.max() < n - 1);
        return {ok, ok ? R::OkC4Pivotable : R::BoundaryFailsC4};
    }
    if (d.at(std::size_t(n - 2)) >= 2 && d.min() >= 1) {
        bool disjoint = d.sum() >= std::uint64_t(4 * (n - 1)) && d.min() >= 2;
        return {true, disjoint ? R::OkTwoEdgeDisjoint : R::OkOneSharedEdge};
    }
    return {false, R::TwoLeaves};
}

namespace detail {

inline std::optional<bool>& debug_override() {
    static std::optional<bool> value;
    return value;
}

// TCREAL_DEBUG_ASSERT=1 turns on the per-step sequence checks, which cost
// O(n) each.
inline bool debug_asserts() {
    if (debug_override()) return *debug_override();
    static const bool from_env = [] {
        const char* v = std::getenv("TCREAL_DEBUG_ASSERT");
        return v != nullptr && std::string_view(v) == "1";
    }();
    return from_env;
}

enum class Phase { one_shared, one_shared_multi, edst, edst_multi, c4, c4_multi };

enum class StepKind : std::uint8_t {
    attach,          // new vertex to listed degrees; last edge t1, previous t2
    pendant,         // new leaf on a degree-a vertex, edge in both trees
    insert_on_t2,    // new vertex on a tree-2 edge, plus a tree-1 edge to degree a
    subdivide_t1,    // new vertex on a tree-1 edge, one half shared
    surplus_edge,    // plain edge between degrees a and b
    attach_pair,     // new vertex to degree b (t2) then degree a (t1), repeats allowed
    wheel,           // cycle of length b, every cycle vertex joined to degree a
    merge_matching,  // split the current matching pair through a new degree-4 vertex
    six_gadget,      // six-vertex gadget hung off degree a, creates the central cycle
    square_gadget,   // three-vertex path closing a 4-cycle through degree a
};

struct Step {
    StepKind kind;
    std::uint32_t a = 0;
    std::uint32_t b = 0;
    std::uint32_t offset = 0;
    std::uint32_t len = 0;
};

inline constexpr std::span<const FixtureEdge> no_edges{};
inline const Fixture empty_graph{0, no_edges, std::nullopt, std::nullopt, std::nullopt};
inline const Fixture single_vertex{1, no_edges, std::nullopt, std::nullopt, std::nullopt};

// Peels the sequence down to a base graph while recording each reduction,
// then builds the base and undoes the reductions in reverse on the graph.
// Every undo step picks vertices by their current degree through the graph's
// buckets, so each step costs time proportional to the edges it adds.
class Builder {
public:
    Builder(DegreeSequence d, GraphMode mode) : seq_(std::move(d)), g_(mode) {
        g_.reserve(seq_.size(), seq_.sum() / 2);
        if (debug_asserts()) original_ = seq_;
    }

    Realization run(Phase phase) {
        const Fixture& base = descend(phase);
        place(base);
        for (auto it = steps_.rbegin(); it != steps_.rend(); ++it) undo(*it);
        return finish();
    }

private:
    static std::uint64_t full(std::size_t n) { return n == 0 ? 0 : 4 * std::uint64_t(n - 1); }

    void check(bool ok, const char* what) const {
        if (!ok) throw invariant_error(std::string(what) + " at " + to_string(seq_));
    }

    void check_phase(Phase phase) const {
        const auto n = seq_.size();
        const auto s = seq_.sum();
        switch (phase) {
            case Phase::one_shared:
            case Phase::one_shared_multi:
                check(is_realizable(seq_, phase == Phase::one_shared ? GraphMode::simple : GraphMode::multi),
                      "sequence lost realizability");
                check(n <= 2 || (s + 2 >= full(n) && seq_.at(n - 2) >= 2 && seq_.min() >= 1),
                      "one-shared-edge conditions broken");
                break;
            case Phase::edst:
            case Phase::edst_multi:
                check(is_realizable(seq_, phase == Phase::edst ? GraphMode::simple : GraphMode::multi),
                      "sequence lost realizability");
                check(s >= full(n) && seq_.min() >= 2, "two-tree conditions broken");
                break;
            case Phase::c4:
                check(is_graphical(seq_), "sequence lost graphicality");
                check(s + 4 == full(n) && seq_.min() >= 2 && seq_.max() + 1 < n, "boundary conditions broken");
                break;
            case Phase::c4_multi:
                check(is_multigraphical(seq_), "sequence lost multigraphicality");
                check(s + 4 == full(n) && seq_.min() >= 2, "boundary conditions broken");
                break;
        }
    }

    void push(StepKind kind, std::uint32_t a = 0, std::uint32_t b = 0) { steps_.push_back({kind, a, b, 0, 0}); }

    // values come largest first from the lay-off; they are undone smallest first.
    void push_attach(const std::vector<std::uint32_t>& values) {
        Step s{StepKind::attach, 0, 0, std::uint32_t(pool_.size()), std::uint32_t(values.size())};
        pool_.insert(pool_.end(), values.rbegin(), values.rend());
        steps_.push_back(s);
    }

    void push_pendant() {
        auto d1 = seq_.max();
        seq_.remove(1);
        seq_.decrement(d1);
        push(StepKind::pendant, d1 - 1);
    }

    const Fixture& descend(Phase phase) {
        for (;;) {
            if (debug_asserts()) check_phase(phase);
            const auto n = seq_.size();
            const auto s = seq_.sum();
            switch (phase) {
                case Phase::one_shared: {
                    if (n == 0) return empty_graph;
                    if (n == 1) return single_vertex;
                    if (n == 2) {
                        check(seq_ == DegreeSequence{1, 1}, "unexpected two-vertex sequence");
                        return single_edge;
                    }
                    if (s >= full(n) && seq_.min() >= 2) {
                        phase = Phase::edst;
                        break;
                    }
                    if (seq_.min() == 1) {
                        push_pendant();
                        phase = Phase::edst;
                        break;
                    }
                    check(s + 2 == full(n), "expected 4(n-1)-2 degree sum");
                    if (seq_.min() == 2) {
                        if (n == 3) return triangle;
                        push_attach(seq_.lay_off_last());
                        break;
                    }
                    check(seq_.min() == 3, "expected minimum degree 3");
                    if (seq_.at(1) == 3) {
                        check(seq_.max() + 3 == n && seq_.count(3) + (seq_.max() == 3 ? 0 : 1) == n, "expected (n-3,3,...,3)");
                        if (n == 6) return cubic6;
                        if (n == 7) return one_four7;
                        if (n == 8) return one_five8;
                        push(StepKind::wheel, 3, std::uint32_t(n - 6));
                        seq_ = DegreeSequence{3, 3, 3, 3, 3, 3};
                        return cubic6;
                    }
                    auto d1 = seq_.max();
                    check(seq_.count(3) + 1 >= d1, "too few degree-3 entries");
                    push(StepKind::wheel, 1, d1 - 1);
                    seq_.remove(d1);
                    seq_.remove(3, d1 - 1);
                    seq_.add(1);
                    break;
                }
                case Phase::one_shared_multi: {
                    if (n == 0) return empty_graph;
                    if (n == 1) return single_vertex;
                    if (n == 2) {
                        if (s == 2) return single_edge;
                        phase = Phase::edst_multi;
                        break;
                    }
                    if (seq_.min() == 1) {
                        push_pendant();
                        phase = Phase::edst_multi;
                        break;
                    }
                    if (s >= full(n)) {
                        phase = Phase::edst_multi;
                        break;
                    }
                    check(s + 2 == full(n), "expected 4(n-1)-2 degree sum");
                    if (seq_.min() == 3) {
                        phase = Phase::one_shared;
                        break;
                    }
                    check(seq_.min() == 2, "expected minimum degree 2");
                    push(StepKind::subdivide_t1);
                    seq_.remove(2);
                    phase = Phase::edst_multi;
                    break;
                }
                case Phase::edst: {
                    if (n == 4) {
                        check(seq_ == DegreeSequence{3, 3, 3, 3}, "expected (3,3,3,3)");
                        return k4;
                    }
                    if (s > full(n) || seq_.min() == 2) {
                        push_attach(seq_.lay_off_last());
                        break;
                    }
                    check(seq_.min() == 3, "expected minimum degree 3");
                    auto d1 = seq_.max();
                    seq_.remove(3);
                    seq_.decrement(d1);
                    push(StepKind::insert_on_t2, d1 - 1);
                    break;
                }
                case Phase::edst_multi: {
                    if (s > full(n)) {
                        auto a = seq_.max();
                        seq_.remove(a);
                        auto b = seq_.max();
                        seq_.remove(b);
                        seq_.add(a - 1);
                        seq_.add(b - 1);
                        push(StepKind::surplus_edge, a - 1, b - 1);
                        break;
                    }
                    if (n == 2) {
                        check(seq_ == DegreeSequence{2, 2}, "expected (2,2)");
                        return double_edge;
                    }
                    if (n == 3 && seq_ == DegreeSequence{3, 3, 2}) return three_two;
                    if (seq_.min() == 3) {
                        phase = Phase::edst;
                        break;
                    }
                    check(seq_.min() == 2, "expected minimum degree 2");
                    seq_.remove(2);
                    auto a = seq_.max();
                    seq_.decrement(a);
                    auto b = seq_.max();
                    seq_.decrement(b);
                    push(StepKind::attach_pair, a - 1, b - 1);
                    break;
                }
                case Phase::c4: {
                    if (seq_.min() == 2) {
                        if (n == 4) return square;
                        push_attach(seq_.lay_off_last());
                        break;
                    }
                    check(seq_.min() == 3, "expected minimum degree 3");
                    auto d1 = seq_.max();
                    if (d1 <= 4) {
                        if (n == 8) {
                            check(d1 == 3, "expected (3,...,3)");
                            return cubic8;
                        }
                        check(d1 == 4, "expected (4,...,4,3,...,3)");
                        seq_.remove(4);
                        push(StepKind::merge_matching);
                        break;
                    }
                    check(seq_.count(3) >= 6, "too few degree-3 entries");
                    seq_.remove(3, 6);
                    seq_.remove(d1);
                    seq_.add(d1 - 2);
                    push(StepKind::six_gadget, d1 - 2);
                    phase = Phase::edst;
                    break;
                }
                case Phase::c4_multi: {
                    bool simple_route = (n >= 3 && seq_.at(n - 3) >= 3) || seq_ == DegreeSequence{2, 2, 2, 2} ||
                                        seq_ == DegreeSequence{3, 3, 2, 2, 2};
                    if (simple_route) {
                        phase = Phase::c4;
                        break;
                    }
                    auto d1 = seq_.max();
                    check(d1 >= 4 && seq_.count(2) >= 3, "unexpected multigraph boundary shape");
                    seq_.remove(2, 3);
                    seq_.remove(d1);
                    seq_.add(d1 - 2);
                    push(StepKind::square_gadget, d1 - 2);
                    phase = Phase::edst_multi;
                    break;
                }
            }
        }
    }

    void place(const Fixture& f) {
        for (std::uint32_t i = 0; i < f.n; ++i) g_.add_vertex();
        std::vector<EdgeId> ids;
        for (const auto& e : f.edges) ids.push_back(g_.add_edge(e.u, e.v, e.tree));
        cycle_ = f.cycle;
        if (f.t2_pair) t2_pair_ = std::make_pair(ids[f.t2_pair->first], ids[f.t2_pair->second]);
        if (f.matching) {
            const auto& m = *f.matching;
            matching_ = {{{ids[m[0].first], ids[m[0].second]}, {ids[m[1].first], ids[m[1].second]}}};
        }
    }

    VertexId vertex_of_degree(std::uint32_t x, VertexId avoid = npos) const {
        auto v = g_.find_vertex_with_degree(x);
        while (v && *v == avoid) v = g_.buckets().next_in_bucket(*v);
        if (!v) throw invariant_error("no vertex of degree " + std::to_string(x) + " while rebuilding");
        return *v;
    }

    bool touches(EdgeId e, VertexId v) const { return g_.edge(e).u == v || g_.edge(e).v == v; }

    void undo(const Step& s) {
        switch (s.kind) {
            case StepKind::attach: {
                check(s.len >= 2, "attach step needs two edges");
                auto r = g_.attach_vertex(std::span<const std::uint32_t>(pool_.data() + s.offset, s.len));
                g_.set_tree(r.edges[s.len - 1], TreeFlag::t1);
                g_.set_tree(r.edges[s.len - 2], TreeFlag::t2);
                break;
            }
            case StepKind::pendant: {
                std::uint32_t t = s.a;
                auto r = g_.attach_vertex(std::span<const std::uint32_t>(&t, 1));
                g_.set_tree(r.edges[0], TreeFlag::both);
                break;
            }
            case StepKind::insert_on_t2: {
                auto anchor = vertex_of_degree(s.a);
                check(t2_pair_.has_value(), "no disjoint tree-2 pair");
                auto [e, f] = *t2_pair_;
                if (touches(e, anchor)) std::swap(e, f);
                check(!touches(e, anchor), "both tree-2 pair edges touch the anchor");
                auto sub = g_.subdivide_edge(e);
                g_.set_tree(sub.first, TreeFlag::t2);
                g_.set_tree(sub.second, TreeFlag::t2);
                g_.add_edge(anchor, sub.vertex, TreeFlag::t1);
                t2_pair_ = std::make_pair(f, sub.first);
                break;
            }
            case StepKind::subdivide_t1: {
                EdgeId pick = npos;
                for (auto e : g_.incident(0)) {
                    if (in_t1(g_.edge(e).tree)) {
                        pick = e;
                        break;
                    }
                }
                check(pick != npos, "no tree-1 edge at vertex 0");
                auto sub = g_.subdivide_edge(pick);
                g_.set_tree(sub.first, TreeFlag::both);
                g_.set_tree(sub.second, TreeFlag::t1);
                break;
            }
            case StepKind::surplus_edge: {
                auto x = vertex_of_degree(s.b);
                auto y = vertex_of_degree(s.a, x);
                g_.add_edge(x, y);
                break;
            }
            case StepKind::attach_pair: {
                std::uint32_t t[2] = {s.b, s.a};
                auto r = g_.attach_vertex(std::span<const std::uint32_t>(t, 2), true);
                g_.set_tree(r.edges[0], TreeFlag::t2);
                g_.set_tree(r.edges[1], TreeFlag::t1);
                break;
            }
            case StepKind::wheel: {
                const auto len = s.b;
                check(len >= 3, "wheel needs a cycle of length 3 or more");
                auto hub = vertex_of_degree(s.a);
                std::vector<VertexId> c(len);
                for (auto& v : c) v = g_.add_vertex();
                // Tree 1: spokes to c[0..len-2] and the edge c[len-2]c[len-1].
                // Tree 2: spoke to c[len-1] and the path c[len-1], c[0], ..., c[len-2].
                for (std::uint32_t i = 0; i + 1 < len; ++i) g_.add_edge(hub, c[i], TreeFlag::t1);
                g_.add_edge(hub, c[len - 1], TreeFlag::t2);
                for (std::uint32_t i = 0; i + 2 < len; ++i) g_.add_edge(c[i], c[i + 1], TreeFlag::t2);
                g_.add_edge(c[len - 2], c[len - 1], TreeFlag::t1);
                g_.add_edge(c[len - 1], c[0], TreeFlag::t2);
                break;
            }
            case StepKind::merge_matching: {
                check(matching_.has_value(), "no matching pairs");
                auto [first, second] = *matching_;
                auto [e1, e2] = first;
                auto [f1, f2] = second;
                auto p = g_.edge(e1).u, q = g_.edge(e1).v;
                auto x = g_.edge(e2).u, y = g_.edge(e2).v;
                g_.remove_edge(e1);
                g_.remove_edge(e2);
                auto w = g_.add_vertex();
                auto a1 = g_.add_edge(p, w, TreeFlag::t1);
                auto a2 = g_.add_edge(q, w, TreeFlag::t1);
                auto b1 = g_.add_edge(x, w, TreeFlag::t2);
                auto b2 = g_.add_edge(y, w, TreeFlag::t2);
                auto new_e2 = touches(f1, x) ? b2 : b1;
                auto new_e1 = touches(f2, p) ? a2 : a1;
                check(!touches(f1, g_.other(new_e2, w)) && !touches(f2, g_.other(new_e1, w)),
                      "matching pair update failed");
                matching_ = {{{f1, new_e2}, {new_e1, f2}}};
                break;
            }
            case StepKind::six_gadget: {
                std::array<VertexId, 7> id{};
                id[0] = vertex_of_degree(s.a);
                for (int i = 1; i < 7; ++i) id[i] = g_.add_vertex();
                for (const auto& e : six_gadget_edges) g_.add_edge(id[e.u], id[e.v], e.tree);
                cycle_ = std::array<VertexId, 4>{id[0], id[1], id[2], id[3]};
                break;
            }
            case StepKind::square_gadget: {
                auto a = vertex_of_degree(s.a);
                auto x = g_.add_vertex(), y = g_.add_vertex(), z = g_.add_vertex();
                g_.add_edge(a, x, TreeFlag::t1);
                g_.add_edge(x, y, TreeFlag::both);
                g_.add_edge(y, z, TreeFlag::both);
                g_.add_edge(a, z, TreeFlag::t2);
                cycle_ = std::array<VertexId, 4>{a, x, y, z};
                break;
            }
        }
    }

    Realization finish() {
        auto remap = g_.compact();
        Certificate cert = certificate_from_flags(g_, cycle_);
        if (debug_asserts()) {
            std::vector<std::uint32_t> deg;
            for (VertexId v = 0; v < g_.vertex_count(); ++v) deg.push_back(g_.degree(v));
            if (!(DegreeSequence(deg) == original_)) throw invariant_error("realization has the wrong degrees");
            if (!validate(g_)) throw invariant_error("graph store invariants broken");
            if (matching_ && cycle_) {
                for (auto [a, b] : *matching_) cert.matching_pairs.emplace_back(remap[a], remap[b]);
            }
            if (auto why = certificate_problem(g_, cert)) throw invariant_error("bad certificate: " + *why);
        }
        return {std::move(g_), std::move(cert)};
    }

    DegreeSequence seq_;
    DegreeSequence original_;
    LabeledMultigraph g_;
    std::vector<Step> steps_;
    std::vector<std::uint32_t> pool_;
    std::optional<std::array<VertexId, 4>> cycle_;
    std::optional<std::pair<EdgeId, EdgeId>> t2_pair_;
    std::optional<std::array<std::pair<EdgeId, EdgeId>, 2>> matching_;
};

inline std::uint64_t four_n_minus_four(const DegreeSequence& d) { return d.empty() ? 0 : 4 * std::uint64_t(d.size() - 1); }

inline bool one_shared_ready(const DegreeSequence& d) {
    const auto n = d.size();
    if (d.sum() + 2 < four_n_minus_four(d)) return false;
    if (n <= 2) return n < 2 || d.min() >= 1;
    return d.at(n - 2) >= 2 && d.min() >= 1;
}

}  // namespace detail

// Two edge-disjoint spanning trees. Needs a graphical sequence with degree
// sum at least 4(n-1) and minimum degree 2.
inline Realization build_two_edst(const DegreeSequence& d) {
    if (!is_graphical(d) || d.empty() || d.sum() < detail::four_n_minus_four(d) || d.min() < 2) {
        throw precondition_error("build_two_edst needs a graphical sequence with sum >= 4(n-1) and min degree >= 2");
    }
    return detail::Builder(d, GraphMode::simple).run(detail::Phase::edst);
}

inline Realization build_two_edst_multi(const DegreeSequence& d) {
    if (!is_multigraphical(d) || d.empty() || d.sum() < detail::four_n_minus_four(d) || d.min() < 2) {
        throw precondition_error(
            "build_two_edst_multi needs a multigraphical sequence with sum >= 4(n-1) and min degree >= 2");
    }
    return detail::Builder(d, GraphMode::multi).run(detail::Phase::edst_multi);
}

// Two spanning trees sharing at most one edge.
inline Realization build_one_shared(const DegreeSequence& d) {
    if (!is_graphical(d) || !detail::one_shared_ready(d)) {
        throw precondition_error("build_one_shared needs a graphical sequence with sum >= 4(n-1)-2, "
                                 "d_(n-1) >= 2 and d_n >= 1");
    }
    return detail::Builder(d, GraphMode::simple).run(detail::Phase::one_shared);
}

inline Realization build_one_shared_multi(const DegreeSequence& d) {
    if (!is_multigraphical(d) || !detail::one_shared_ready(d)) {
        throw precondition_error("build_one_shared_multi needs a multigraphical sequence with sum >= 4(n-1)-2, "
                                 "d_(n-1) >= 2 and d_n >= 1");
    }
    return detail::Builder(d, GraphMode::multi).run(detail::Phase::one_shared_multi);
}

// Exactly 2n-4 edges with two spanning trees sharing two edges of an induced
// 4-cycle.
inline Realization build_c4_pivotable(const DegreeSequence& d) {
    const auto n = d.size();
    if (!is_graphical(d) || n < 4 || d.sum() + 4 != detail::four_n_minus_four(d) || d.min() < 2 || d.max() + 1 >= n) {
        throw precondition_error("build_c4_pivotable needs a graphical sequence with sum 4(n-1)-4, "
                                 "d_1 < n-1 and d_n >= 2");
    }
    return detail::Builder(d, GraphMode::simple).run(detail::Phase::c4);
}

inline Realization build_c4_pivotable_multi(const DegreeSequence& d) {
    const auto n = d.size();
    if (!is_multigraphical(d) || n < 4 || d.sum() + 4 != detail::four_n_minus_four(d) || d.min() < 2) {
        throw precondition_error("build_c4_pivotable_multi needs a multigraphical sequence with sum 4(n-1)-4 "
                                 "and d_n >= 2");
    }
    return detail::Builder(d, GraphMode::multi).run(detail::Phase::c4_multi);
}

struct TcResult {
    Decision decision;
    std::optional<Realization> realization;
    TemporalLabeling labeling;
};

// Decides, builds and labels. On success the labels are also stored on the
// graph's edges.
inline TcResult realize_tc(const DegreeSequence& d, GraphMode mode) {
    TcResult out;
    out.decision = check_tc_realizable(d, mode);
    if (!out.decision.realizable) return out;
    const bool simple = mode == GraphMode::simple;
    if (out.decision.reason == DecisionReason::OkC4Pivotable) {
        out.realization = simple ? build_c4_pivotable(d) : build_c4_pivotable_multi(d);
    } else {
        out.realization = simple ? build_one_shared(d) : build_one_shared_multi(d);
    }
    out.labeling = pivot_label(out.realization->graph, out.realization->certificate);
    apply_labeling(out.realization->graph, out.labeling);
    return out;
}

struct NonStrictResult {
    bool realizable = false;
    std::optional<LabeledMultigraph> graph;
    std::vector<EdgeId> tree;
    TemporalLabeling labeling;
};

namespace detail {

// Any realization: repeatedly lay off the smallest entry, then rebuild.
inline LabeledMultigraph any_realization(DegreeSequence d, GraphMode mode) {
    std::vector<std::vector<std::uint32_t>> steps;
    while (!d.empty()) {
        if (mode == GraphMode::simple) {
            steps.push_back(d.lay_off_last());
            continue;
        }
        // One edge at a time between the smallest and the largest entry.
        auto k = d.min();
        d.remove(k);
        std::vector<std::uint32_t> values;
        for (std::uint32_t i = 0; i < k; ++i) {
            auto top = d.max();
            d.decrement(top);
            values.push_back(top - 1);
        }
        steps.push_back(std::move(values));
    }
    LabeledMultigraph g(mode);
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
        std::vector<std::uint32_t> targets(it->rbegin(), it->rend());
        g.attach_vertex(targets, mode == GraphMode::multi);
    }
    return g;
}

// Merges components with degree-preserving swaps. Needs m >= n-1 and no
// isolated vertices; each swap trades a cycle edge ab of the growing
// component and any edge cd of the next one for ac and bd.
inline void make_connected(LabeledMultigraph& g) {
    const auto n = g.vertex_count();
    DisjointSets sets(n);
    std::vector<char> forest(g.edge_capacity(), 0);
    for (EdgeId e = 0; e < g.edge_capacity(); ++e) forest[e] = sets.unite(g.edge(e).u, g.edge(e).v);
    struct Part {
        EdgeId tree_edge = npos;
        std::vector<EdgeId> spare;
    };
    std::vector<std::uint32_t> index(n, npos);
    std::vector<Part> parts;
    for (VertexId v = 0; v < n; ++v) {
        auto r = sets.find(v);
        if (index[r] == npos) {
            index[r] = std::uint32_t(parts.size());
            parts.emplace_back();
        }
    }
    for (EdgeId e = 0; e < g.edge_capacity(); ++e) {
        auto& p = parts[index[sets.find(g.edge(e).u)]];
        if (forest[e]) p.tree_edge = e;
        else p.spare.push_back(e);
    }
    if (parts.size() <= 1) return;
    std::stable_partition(parts.begin(), parts.end(), [](const Part& p) { return !p.spare.empty(); });
    std::vector<EdgeId> spare = std::move(parts[0].spare);
    for (std::size_t i = 1; i < parts.size(); ++i) {
        if (spare.empty() || parts[i].tree_edge == npos) throw invariant_error("cannot connect realization");
        auto ab = spare.back();
        spare.pop_back();
        auto cd = parts[i].tree_edge;
        auto a = g.edge(ab).u, b = g.edge(ab).v;
        auto c = g.edge(cd).u, dd = g.edge(cd).v;
        g.remove_edge(ab);
        g.remove_edge(cd);
        g.add_edge(a, c);
        g.add_edge(b, dd);
        spare.insert(spare.end(), parts[i].spare.begin(), parts[i].spare.end());
    }
    g.compact();
}

}  // namespace detail

// Connected realization labeled so that every spanning-tree edge has time 1.
// Temporally connected only when journeys may reuse a time step.
inline NonStrictResult realize_nonstrict(const DegreeSequence& d, GraphMode mode = GraphMode::simple) {
    NonStrictResult out;
    const auto n = d.size();
    if (!is_realizable(d, mode)) return out;
    if (n >= 2 && (d.sum() / 2 + 1 < n || d.min() < 1)) return out;
    out.realizable = true;
    auto g = detail::any_realization(d, mode);
    detail::make_connected(g);
    std::vector<char> seen(n, 0);
    std::vector<VertexId> queue;
    if (n > 0) {
        seen[0] = 1;
        queue.push_back(0);
    }
    for (std::size_t i = 0; i < queue.size(); ++i) {
        for (auto e : g.incident(queue[i])) {
            auto w = g.other(e, queue[i]);
            if (seen[w]) continue;
            seen[w] = 1;
            out.tree.push_back(e);
            queue.push_back(w);
        }
    }
    if (queue.size() != n) throw invariant_error("non-strict realization is disconnected");
    out.labeling = label_plain_tree(g, out.tree);
    apply_labeling(g, out.labeling);
    out.graph = std::move(g);
    return out;
}

}  // namespace tcreal
