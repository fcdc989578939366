#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tcreal/common.hpp"

namespace tcreal {

enum class TreeFlag : std::uint8_t { none = 0, t1 = 1, t2 = 2, both = 3 };

inline bool in_t1(TreeFlag f) { return (std::uint8_t(f) & 1u) != 0; }
inline bool in_t2(TreeFlag f) { return (std::uint8_t(f) & 2u) != 0; }

inline const char* to_string(TreeFlag f) {
    switch (f) {
        case TreeFlag::t1: return "t1";
        case TreeFlag::t2: return "t2";
        case TreeFlag::both: return "both";
        default: return "none";
    }
}

inline TreeFlag parse_tree_flag(const std::string& s) {
    if (s == "none") return TreeFlag::none;
    if (s == "t1") return TreeFlag::t1;
    if (s == "t2") return TreeFlag::t2;
    if (s == "both") return TreeFlag::both;
    throw std::invalid_argument("unknown tree flag: " + s);
}

struct EdgeRecord {
    VertexId u = 0;
    VertexId v = 0;
    Label label = 0;  // 0 = unlabeled
    std::uint32_t pos_u = 0;  // index in u's incidence list
    std::uint32_t pos_v = 0;
    TreeFlag tree = TreeFlag::none;
    bool alive = true;
};

struct GraphStoreAccess;

// Vertices grouped by current degree. Each non-empty degree owns an
// insertion-ordered vertex list; non-empty degrees are chained in
// decreasing order. Every update is O(1).
class DegreeBuckets {
public:
    std::size_t vertex_count() const { return nodes_.size(); }
    std::uint32_t degree(VertexId v) const { return nodes_[v].deg; }
    void reserve(std::size_t n) { nodes_.reserve(n); }

    VertexId add_vertex() {
        VertexId v = VertexId(nodes_.size());
        nodes_.push_back({});
        ensure_degree_slot(0);
        if (slots_[0].size == 0) link_degree_bottom(0);
        push_back(v, 0);
        return v;
    }

    // Drops the most recently added vertex, which must have degree 0.
    void pop_vertex() {
        VertexId v = VertexId(nodes_.size() - 1);
        if (nodes_[v].deg != 0) throw invariant_error("can only pop an isolated vertex");
        erase(v, 0);
        if (slots_[0].size == 0) unlink_degree(0);
        nodes_.pop_back();
    }

    void increment(VertexId v) {
        auto d = nodes_[v].deg;
        ensure_degree_slot(d + 1);
        if (slots_[d + 1].size == 0) link_degree_above(d + 1, d);
        erase(v, d);
        push_back(v, d + 1);
        nodes_[v].deg = d + 1;
        if (slots_[d].size == 0) unlink_degree(d);
    }

    void decrement(VertexId v) {
        auto d = nodes_[v].deg;
        if (d == 0) throw invariant_error("degree underflow");
        if (slots_[d - 1].size == 0) link_degree_below(d - 1, d);
        erase(v, d);
        push_back(v, d - 1);
        nodes_[v].deg = d - 1;
        if (slots_[d].size == 0) unlink_degree(d);
    }

    // Earliest-inserted vertex currently holding degree x.
    std::optional<VertexId> first(std::uint32_t x) const {
        ++ops_;
        if (x >= slots_.size() || slots_[x].size == 0) return std::nullopt;
        return slots_[x].head;
    }

    std::optional<VertexId> next_in_bucket(VertexId v) const {
        ++ops_;
        return nodes_[v].next == npos ? std::nullopt : std::optional<VertexId>(nodes_[v].next);
    }

    std::uint32_t bucket_size(std::uint32_t x) const { return x < slots_.size() ? slots_[x].size : 0; }

    // (degree, members) pairs in decreasing degree order.
    std::vector<std::pair<std::uint32_t, std::vector<VertexId>>> snapshot() const {
        std::vector<std::pair<std::uint32_t, std::vector<VertexId>>> out;
        for (auto d = top_; d != npos; d = slots_[d].lower) {
            std::vector<VertexId> members;
            for (auto v = slots_[d].head; v != npos; v = nodes_[v].next) members.push_back(v);
            out.emplace_back(d, std::move(members));
        }
        return out;
    }

    std::uint64_t ops() const { return ops_; }

private:
    friend struct GraphStoreAccess;

    struct Slot {
        VertexId head = npos;
        VertexId tail = npos;
        std::uint32_t size = 0;
        std::uint32_t higher = npos;  // next non-empty larger degree
        std::uint32_t lower = npos;   // next non-empty smaller degree
    };

    void ensure_degree_slot(std::uint32_t d) {
        if (d >= slots_.size()) slots_.resize(std::size_t(d) + 1);
    }

    void push_back(VertexId v, std::uint32_t d) {
        ++ops_;
        auto& s = slots_[d];
        nodes_[v].prev = s.tail;
        nodes_[v].next = npos;
        if (s.tail == npos) s.head = v;
        else nodes_[s.tail].next = v;
        s.tail = v;
        ++s.size;
    }

    void erase(VertexId v, std::uint32_t d) {
        ++ops_;
        auto& s = slots_[d];
        if (nodes_[v].prev == npos) s.head = nodes_[v].next;
        else nodes_[nodes_[v].prev].next = nodes_[v].next;
        if (nodes_[v].next == npos) s.tail = nodes_[v].prev;
        else nodes_[nodes_[v].next].prev = nodes_[v].prev;
        nodes_[v].prev = nodes_[v].next = npos;
        --s.size;
    }

    void link_degree_bottom(std::uint32_t d) {
        if (top_ == npos) {
            top_ = bottom_ = d;
            return;
        }
        slots_[d].higher = bottom_;
        slots_[d].lower = npos;
        slots_[bottom_].lower = d;
        bottom_ = d;
    }

    void link_degree_above(std::uint32_t d, std::uint32_t below) {
        auto above = slots_[below].higher;
        slots_[d].higher = above;
        slots_[d].lower = below;
        slots_[below].higher = d;
        if (above == npos) top_ = d;
        else slots_[above].lower = d;
    }

    void link_degree_below(std::uint32_t d, std::uint32_t above) {
        auto below = slots_[above].lower;
        slots_[d].higher = above;
        slots_[d].lower = below;
        slots_[above].lower = d;
        if (below == npos) bottom_ = d;
        else slots_[below].higher = d;
    }

    void unlink_degree(std::uint32_t d) {
        auto& s = slots_[d];
        if (s.higher == npos) top_ = s.lower;
        else slots_[s.higher].lower = s.lower;
        if (s.lower == npos) bottom_ = s.higher;
        else slots_[s.lower].higher = s.higher;
        s.higher = s.lower = npos;
    }

    // Degree and list links side by side: a bucket move touches one record.
    struct Node {
        std::uint32_t deg = 0;
        VertexId prev = npos;
        VertexId next = npos;
    };

    std::vector<Node> nodes_;
    std::vector<Slot> slots_;
    std::uint32_t top_ = npos;
    std::uint32_t bottom_ = npos;
    mutable std::uint64_t ops_ = 0;
};

namespace detail {

// Edge ids at one vertex. Up to four live in the object itself, which covers
// most vertices without a separate allocation.
class IncidenceList {
public:
    IncidenceList() = default;
    IncidenceList(const IncidenceList& o) { assign(o); }
    IncidenceList(IncidenceList&& o) noexcept { take(o); }
    IncidenceList& operator=(const IncidenceList& o) {
        if (this != &o) {
            release();
            assign(o);
        }
        return *this;
    }
    IncidenceList& operator=(IncidenceList&& o) noexcept {
        if (this != &o) {
            release();
            take(o);
        }
        return *this;
    }
    ~IncidenceList() { release(); }

    std::size_t size() const { return size_; }
    bool empty() const { return size_ == 0; }
    EdgeId* data() { return on_heap() ? heap_ : small_; }
    const EdgeId* data() const { return on_heap() ? heap_ : small_; }
    EdgeId* begin() { return data(); }
    EdgeId* end() { return data() + size_; }
    const EdgeId* begin() const { return data(); }
    const EdgeId* end() const { return data() + size_; }
    EdgeId& operator[](std::size_t i) { return data()[i]; }
    EdgeId operator[](std::size_t i) const { return data()[i]; }
    EdgeId back() const { return data()[size_ - 1]; }
    void pop_back() { --size_; }
    operator std::span<const EdgeId>() const { return {data(), size_}; }

    void push_back(EdgeId e) {
        if (size_ == cap_) grow();
        data()[size_++] = e;
    }

private:
    static constexpr std::uint32_t inline_cap = 4;

    bool on_heap() const { return cap_ > inline_cap; }

    void grow() {
        const auto cap = cap_ * 2;
        auto* bigger = new EdgeId[cap];
        std::copy(begin(), end(), bigger);
        release();
        heap_ = bigger;
        cap_ = cap;
    }

    void release() {
        if (on_heap()) delete[] heap_;
        cap_ = inline_cap;
    }

    void assign(const IncidenceList& o) {
        size_ = o.size_;
        if (o.on_heap()) {
            cap_ = o.cap_;
            heap_ = new EdgeId[cap_];
        }
        std::copy(o.begin(), o.end(), data());
    }

    void take(IncidenceList& o) {
        size_ = o.size_;
        cap_ = o.cap_;
        if (o.on_heap()) heap_ = o.heap_;
        else std::copy(o.small_, o.small_ + o.size_, small_);
        o.size_ = 0;
        o.cap_ = inline_cap;
    }

    std::uint32_t size_ = 0;
    std::uint32_t cap_ = inline_cap;
    union {
        EdgeId small_[inline_cap];
        EdgeId* heap_;
    };
};

}  // namespace detail

struct AttachResult {
    VertexId vertex = 0;
    std::vector<EdgeId> edges;
};

struct SubdivideResult {
    VertexId vertex = 0;
    EdgeId first = 0;   // (u, w)
    EdgeId second = 0;  // (w, v)
};

// Multigraph on dense vertex ids with stable edge ids. Removed edges leave a
// tombstone until compact() renumbers the survivors.
class LabeledMultigraph {
public:
    explicit LabeledMultigraph(GraphMode mode = GraphMode::simple) : mode_(mode) {}

    GraphMode mode() const { return mode_; }
    std::size_t vertex_count() const { return adj_.size(); }
    std::size_t edge_count() const { return alive_edges_; }
    std::size_t edge_capacity() const { return edges_.size(); }
    std::uint32_t degree(VertexId v) const { return buckets_.degree(v); }
    const EdgeRecord& edge(EdgeId e) const { return edges_.at(e); }
    std::span<const EdgeId> incident(VertexId v) const { return adj_.at(v); }
    const DegreeBuckets& buckets() const { return buckets_; }
    std::uint64_t ops() const { return ops_ + buckets_.ops(); }

    VertexId other(EdgeId e, VertexId v) const {
        const auto& r = edges_[e];
        return r.u == v ? r.v : r.u;
    }

    // Scans the shorter incidence list.
    std::uint32_t multiplicity(VertexId u, VertexId v) const {
        if (u >= vertex_count() || v >= vertex_count()) return 0;
        if (adj_[v].size() < adj_[u].size()) std::swap(u, v);
        std::uint32_t count = 0;
        for (auto e : adj_[u]) count += other(e, u) == v;
        return count;
    }

    void reserve(std::size_t n, std::size_t m) {
        edges_.reserve(m);
        adj_.reserve(n);
        stamp_.reserve(n);
        buckets_.reserve(n);
    }

    VertexId add_vertex() {
        ++ops_;
        adj_.emplace_back();
        stamp_.push_back(0);
        return buckets_.add_vertex();
    }

    // The parallel-edge check in simple mode costs O(min(deg u, deg v)).
    EdgeId add_edge(VertexId u, VertexId v, TreeFlag tree = TreeFlag::none) {
        if (u >= vertex_count() || v >= vertex_count()) throw precondition_error("edge endpoint out of range");
        if (u == v) throw precondition_error("self-loops are not allowed");
        if (mode_ == GraphMode::simple && multiplicity(u, v) > 0) throw precondition_error("parallel edge in simple mode");
        return link(u, v, tree);
    }


    void remove_edge(EdgeId e) {
        ++ops_;
        if (e >= edges_.size() || !edges_[e].alive) throw precondition_error("no such edge");
        auto& r = edges_[e];
        detach(r.u, r.pos_u);
        detach(r.v, r.pos_v);
        buckets_.decrement(r.u);
        buckets_.decrement(r.v);
        r.alive = false;
        --alive_edges_;
    }

    void set_tree(EdgeId e, TreeFlag f) { edges_.at(e).tree = f; }

    void set_label(EdgeId e, Label t) {
        if (t == 0) throw precondition_error("labels are positive");
        edges_.at(e).label = t;
    }

    void clear_label(EdgeId e) { edges_.at(e).label = 0; }

    std::optional<VertexId> find_vertex_with_degree(std::uint32_t x) const { return buckets_.first(x); }

    // Replaces edge (u,v) by a path u-w-v through a new vertex w. The new
    // edges start with no tree membership.
    SubdivideResult subdivide_edge(EdgeId e) {
        if (e >= edges_.size() || !edges_[e].alive) throw precondition_error("no such edge");
        auto u = edges_[e].u;
        auto v = edges_[e].v;
        remove_edge(e);
        SubdivideResult out;
        out.vertex = add_vertex();
        out.first = link(u, out.vertex);
        out.second = link(out.vertex, v);
        return out;
    }

    // Adds a vertex joined to one existing vertex per entry of targets, where
    // each entry is the degree the neighbour must have at the moment it is
    // picked. Targets are consumed in order, so earlier picks can change the
    // degrees seen by later ones. The pick is the earliest-inserted vertex of
    // that degree that is neither the new vertex nor (unless repeats are
    // allowed) an earlier pick.
    AttachResult attach_vertex(std::span<const std::uint32_t> targets, bool allow_repeat_target = false) {
        const bool repeat = allow_repeat_target && mode_ == GraphMode::multi;
        AttachResult out;
        out.vertex = add_vertex();
        ++generation_;
        stamp_[out.vertex] = generation_;
        out.edges.reserve(targets.size());
        for (auto x : targets) {
            auto pick = buckets_.first(x);
            while (pick && (*pick == out.vertex || (!repeat && stamp_[*pick] == generation_))) {
                pick = buckets_.next_in_bucket(*pick);
            }
            if (!pick) {
                // Undo so a failed attach leaves no half-built vertex behind.
                for (auto it = out.edges.rbegin(); it != out.edges.rend(); ++it) remove_edge(*it);
                pop_isolated_vertex(out.vertex);
                throw precondition_error("no vertex with the requested degree " + std::to_string(x));
            }
            stamp_[*pick] = generation_;
            out.edges.push_back(link(out.vertex, *pick));
        }
        return out;
    }

    // Drops tombstones and renumbers live edges in id order. Returns the
    // old-to-new map, with npos for removed edges.
    std::vector<EdgeId> compact() {
        std::vector<EdgeId> remap(edges_.size(), npos);
        EdgeId kept = 0;
        for (EdgeId e = 0; e < edges_.size(); ++e) {
            if (!edges_[e].alive) continue;
            remap[e] = kept;
            edges_[kept++] = edges_[e];
        }
        edges_.resize(kept);
        for (auto& list : adj_) {
            for (auto& e : list) e = remap[e];
        }
        return remap;
    }

private:
    friend struct GraphStoreAccess;

    // add_edge for pairs known to be new, such as edges at a fresh vertex.
    EdgeId link(VertexId u, VertexId v, TreeFlag tree = TreeFlag::none) {
        ++ops_;
        EdgeId e = EdgeId(edges_.size());
        EdgeRecord r;
        r.u = u;
        r.v = v;
        r.tree = tree;
        r.pos_u = std::uint32_t(adj_[u].size());
        r.pos_v = std::uint32_t(adj_[v].size());
        edges_.push_back(r);
        adj_[u].push_back(e);
        adj_[v].push_back(e);
        buckets_.increment(u);
        buckets_.increment(v);
        ++alive_edges_;
        return e;
    }

    void detach(VertexId x, std::uint32_t pos) {
        auto& list = adj_[x];
        EdgeId moved = list.back();
        list[pos] = moved;
        list.pop_back();
        if (pos < list.size()) {
            auto& m = edges_[moved];
            // No loops, so exactly one endpoint of the moved edge is x.
            if (m.u == x) m.pos_u = pos;
            else m.pos_v = pos;
        }
    }

    void pop_isolated_vertex(VertexId v) {
        if (v + 1 != adj_.size()) throw invariant_error("can only pop the newest vertex");
        buckets_.pop_vertex();
        adj_.pop_back();
        stamp_.pop_back();
    }

    GraphMode mode_;
    std::vector<EdgeRecord> edges_;
    std::vector<detail::IncidenceList> adj_;
    DegreeBuckets buckets_;
    std::vector<std::uint32_t> stamp_;
    std::uint32_t generation_ = 0;
    std::size_t alive_edges_ = 0;
    std::uint64_t ops_ = 0;
};

// Recomputes degrees, incidence positions, multiplicities and bucket
// membership from the edge records and compares with the stored state.
inline bool validate(const LabeledMultigraph& g) {
    const auto n = g.vertex_count();
    std::vector<std::uint32_t> deg(n, 0);
    std::unordered_map<std::uint64_t, std::uint32_t> mult;
    std::size_t alive = 0;
    for (EdgeId e = 0; e < g.edge_capacity(); ++e) {
        const auto& r = g.edge(e);
        if (!r.alive) continue;
        ++alive;
        if (r.u >= n || r.v >= n || r.u == r.v) return false;
        auto incident_u = g.incident(r.u);
        auto incident_v = g.incident(r.v);
        if (r.pos_u >= incident_u.size() || incident_u[r.pos_u] != e) return false;
        if (r.pos_v >= incident_v.size() || incident_v[r.pos_v] != e) return false;
        ++deg[r.u];
        ++deg[r.v];
        auto a = std::min(r.u, r.v), b = std::max(r.u, r.v);
        auto& m = mult[(std::uint64_t(a) << 32) | b];
        ++m;
        if (g.mode() == GraphMode::simple && m > 1) return false;
    }
    if (alive != g.edge_count()) return false;
    for (auto& [k, m] : mult) {
        if (g.multiplicity(VertexId(k >> 32), VertexId(k & 0xffffffffu)) != m) return false;
    }
    std::size_t seen = 0;
    std::uint32_t last = npos;
    for (auto& [d, members] : g.buckets().snapshot()) {
        if (members.empty() || (last != npos && d >= last)) return false;
        if (members.size() != g.buckets().bucket_size(d)) return false;
        last = d;
        for (auto v : members) {
            if (v >= n || deg[v] != d || g.degree(v) != d) return false;
            ++seen;
        }
    }
    if (seen != n) return false;
    for (VertexId v = 0; v < n; ++v) {
        if (g.incident(v).size() != deg[v]) return false;
    }
    return true;
}

// Tree membership and the optional central 4-cycle that certify a
// realization. Matching pairs are an internal aid and normally dropped.
struct Certificate {
    std::vector<EdgeId> tree1;
    std::vector<EdgeId> tree2;
    std::vector<EdgeId> shared;
    std::optional<std::array<VertexId, 4>> central_cycle;
    std::vector<std::pair<EdgeId, EdgeId>> matching_pairs;
};

inline Certificate certificate_from_flags(const LabeledMultigraph& g,
                                          std::optional<std::array<VertexId, 4>> cycle = std::nullopt) {
    Certificate c;
    for (EdgeId e = 0; e < g.edge_capacity(); ++e) {
        const auto& r = g.edge(e);
        if (!r.alive) continue;
        if (in_t1(r.tree)) c.tree1.push_back(e);
        if (in_t2(r.tree)) c.tree2.push_back(e);
        if (r.tree == TreeFlag::both) c.shared.push_back(e);
    }
    c.central_cycle = cycle;
    return c;
}

struct Realization {
    LabeledMultigraph graph;
    Certificate certificate;
};

}  // namespace tcreal
