#pragma once

#include <array>
#include <optional>
#include <span>
#include <utility>

#include "tcreal/multigraph.hpp"

// Small base graphs the constructions start from. Several are only pinned
// down up to isomorphism by their defining properties; those edge lists were
// found by exhaustive search and are re-checked by tests/test_fixtures.cpp.
namespace tcreal::detail {

struct FixtureEdge {
    VertexId u;
    VertexId v;
    TreeFlag tree;
};

struct Fixture {
    std::uint32_t n;
    std::span<const FixtureEdge> edges;
    std::optional<std::array<VertexId, 4>> cycle;
    // Edge indices into edges. Two disjoint tree-2 edges, and two
    // (tree-1, tree-2) matching pairs, where a fixture needs them.
    std::optional<std::pair<std::uint32_t, std::uint32_t>> t2_pair;
    std::optional<std::array<std::pair<std::uint32_t, std::uint32_t>, 2>> matching;
};

using enum TreeFlag;

inline constexpr FixtureEdge k4_edges[] = {
    {0, 1, t1}, {0, 2, t2}, {0, 3, t2}, {1, 2, t1}, {1, 3, t2}, {2, 3, t1},
};

inline constexpr FixtureEdge triangle_edges[] = {
    {0, 1, t1}, {1, 2, both}, {2, 0, t2},
};

inline constexpr FixtureEdge square_edges[] = {
    {0, 1, t1}, {1, 2, both}, {2, 3, both}, {3, 0, t2},
};

// (3,3,3,3,3,3), trees share edge 0-1.
inline constexpr FixtureEdge cubic6_edges[] = {
    {0, 1, both}, {0, 2, t1}, {0, 3, t1}, {1, 2, t2}, {1, 4, t1},
    {2, 5, t2},   {3, 4, t2}, {3, 5, t1}, {4, 5, t2},
};

// (4,3,3,3,3,3,3), trees share edge 0-1.
inline constexpr FixtureEdge one_four7_edges[] = {
    {0, 1, both}, {0, 2, t1}, {0, 3, t1}, {0, 4, t1}, {1, 2, t2}, {1, 3, t2},
    {2, 5, t1},   {3, 6, t2}, {4, 5, t2}, {4, 6, t1}, {5, 6, t2},
};

// (5,3,3,3,3,3,3,3), trees share edge 0-4.
inline constexpr FixtureEdge one_five8_edges[] = {
    {0, 1, t1}, {0, 2, t1}, {0, 3, t2}, {0, 4, both}, {0, 5, t1}, {1, 2, t2}, {1, 3, t1},
    {2, 3, t2}, {4, 6, t1}, {4, 7, t2}, {5, 6, t2},   {5, 7, t1}, {6, 7, t2},
};

// Cubic on 8 vertices with induced 4-cycle (0,1,4,3); trees share 0-1 and 0-3.
inline constexpr FixtureEdge cubic8_edges[] = {
    {0, 1, both}, {0, 2, t1}, {0, 3, both}, {1, 2, t2}, {1, 4, t1}, {2, 5, t1},
    {3, 4, t2},   {3, 6, t1}, {4, 7, t2},   {5, 6, t2}, {5, 7, t1}, {6, 7, t2},
};

inline constexpr FixtureEdge double_edge_edges[] = {
    {0, 1, t1}, {0, 1, t2},
};

inline constexpr FixtureEdge three_two_edges[] = {
    {0, 1, t1}, {0, 1, t2}, {0, 2, t1}, {1, 2, t2},
};

inline constexpr FixtureEdge single_edge_edges[] = {
    {0, 1, both},
};

// Gadget hung off an anchor a: vertices a=0, x=1, y=2, z=3, x'=4, y'=5, z'=6.
// Central cycle (a,x,y,z); the trees share x-y and y-z.
inline constexpr FixtureEdge six_gadget_edges[] = {
    {1, 2, both}, {2, 3, both}, {3, 6, t1}, {5, 6, t1}, {4, 5, t1},
    {1, 4, t2},   {0, 1, t1},   {0, 3, t2}, {2, 5, t2}, {4, 6, t2},
};

inline const Fixture k4{4, k4_edges, std::nullopt, std::pair<std::uint32_t, std::uint32_t>{1, 4}, std::nullopt};
inline const Fixture triangle{3, triangle_edges, std::nullopt, std::nullopt, std::nullopt};
inline const Fixture square{4, square_edges, std::array<VertexId, 4>{0, 1, 2, 3}, std::nullopt, std::nullopt};
inline const Fixture cubic6{6, cubic6_edges, std::nullopt, std::nullopt, std::nullopt};
inline const Fixture one_four7{7, one_four7_edges, std::nullopt, std::nullopt, std::nullopt};
inline const Fixture one_five8{8, one_five8_edges, std::nullopt, std::nullopt, std::nullopt};
inline const Fixture cubic8{8, cubic8_edges, std::array<VertexId, 4>{0, 1, 4, 3}, std::nullopt,
                            std::array<std::pair<std::uint32_t, std::uint32_t>, 2>{{{1, 8}, {5, 11}}}};
inline const Fixture double_edge{2, double_edge_edges, std::nullopt, std::nullopt, std::nullopt};
inline const Fixture three_two{3, three_two_edges, std::nullopt, std::nullopt, std::nullopt};
inline const Fixture single_edge{2, single_edge_edges, std::nullopt, std::nullopt, std::nullopt};

}  // namespace tcreal::detail
