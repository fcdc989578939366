#include <gtest/gtest.h>

#include "support/brute.hpp"
#include "support/convert.hpp"
#include "tcreal/tcreal.hpp"

using namespace tcreal;
using support::sorted_degrees;

namespace {

// Degree match and certificate checks, the latter redone with brute-force
// spanning-tree tests.
void expect_certified(const DegreeSequence& d, const Realization& r) {
    const auto& g = r.graph;
    const auto& c = r.certificate;
    const auto n = g.vertex_count();
    EXPECT_EQ(sorted_degrees(g), d.entries()) << d;
    EXPECT_TRUE(validate(g)) << d;
    EXPECT_EQ(certificate_problem(g, c), std::nullopt) << d;
    if (n >= 2) {
        EXPECT_TRUE(brute::spanning_tree(n, support::edges_of(g, c.tree1))) << d;
        EXPECT_TRUE(brute::spanning_tree(n, support::edges_of(g, c.tree2))) << d;
    }
}

void expect_tc_output(const DegreeSequence& d, GraphMode mode) {
    auto res = realize_tc(d, mode);
    ASSERT_TRUE(res.decision.realizable) << d;
    ASSERT_TRUE(res.realization) << d;
    expect_certified(d, *res.realization);
    const auto& g = res.realization->graph;
    auto edges = support::labeled_edges(g, res.labeling);
    EXPECT_TRUE(brute::proper(edges)) << d;
    EXPECT_TRUE(brute::temporally_connected(g.vertex_count(), edges)) << d;
    // The bound covers graphs whose edges all lie in a tree; extra edges get
    // fresh labels above it.
    const auto& c = res.realization->certificate;
    if (c.tree1.size() + c.tree2.size() - c.shared.size() == g.edge_count()) {
        EXPECT_LE(res.labeling.max_label(), 2 * g.vertex_count() + 2) << d;
    }
}

}  // namespace

TEST(Decision, Examples) {
    auto c4 = check_tc_realizable(DegreeSequence{2, 2, 2, 2}, GraphMode::simple);
    EXPECT_TRUE(c4.realizable);
    EXPECT_EQ(c4.reason, DecisionReason::OkC4Pivotable);

    auto star = DegreeSequence{4, 2, 2, 2, 2};
    EXPECT_FALSE(check_tc_realizable(star, GraphMode::simple).realizable);
    EXPECT_EQ(check_tc_realizable(star, GraphMode::simple).reason, DecisionReason::BoundaryFailsC4);
    EXPECT_TRUE(check_tc_realizable(star, GraphMode::multi).realizable);

    for (auto mode : {GraphMode::simple, GraphMode::multi}) {
        EXPECT_FALSE(check_tc_realizable(DegreeSequence{0, 0}, mode).realizable);
        auto k2 = check_tc_realizable(DegreeSequence{1, 1}, mode);
        EXPECT_TRUE(k2.realizable);
        EXPECT_EQ(k2.reason, DecisionReason::OkSmallN);
        EXPECT_TRUE(check_tc_realizable(DegreeSequence{0}, mode).realizable);
    }

    auto sparse = check_tc_realizable(DegreeSequence{2, 2, 1, 1}, GraphMode::simple);
    EXPECT_FALSE(sparse.realizable);
    EXPECT_EQ(sparse.reason, DecisionReason::TooFewEdges);

    EXPECT_EQ(check_tc_realizable(DegreeSequence{1, 1, 1}, GraphMode::simple).reason, DecisionReason::NotGraphical);
    EXPECT_EQ(check_tc_realizable(DegreeSequence{5, 1}, GraphMode::multi).reason, DecisionReason::NotMultigraphical);
    EXPECT_EQ(check_tc_realizable(DegreeSequence{4, 4, 4, 4, 4, 4, 1, 1}, GraphMode::simple).reason,
              DecisionReason::TwoLeaves);
}

TEST(BuildTwoEdst, CompleteGraphOnFour) {
    DegreeSequence d{3, 3, 3, 3};
    auto r = build_two_edst(d);
    expect_certified(d, r);
    EXPECT_TRUE(r.certificate.shared.empty());
    EXPECT_EQ(r.graph.edge_count(), 6u);
}

TEST(BuildTwoEdst, Examples) {
    for (auto d : {DegreeSequence{4, 3, 3, 3, 3}, DegreeSequence{4, 4, 4, 4, 2, 2},
                   DegreeSequence{5, 5, 4, 4, 3, 3, 2, 2}}) {
        auto r = build_two_edst(d);
        expect_certified(d, r);
        EXPECT_TRUE(r.certificate.shared.empty()) << d;
    }
}

TEST(BuildTwoEdst, RejectsBadInput) {
    EXPECT_THROW(build_two_edst(DegreeSequence{3, 3, 2, 2}), precondition_error);
    EXPECT_THROW(build_two_edst(DegreeSequence{3, 3, 3, 3, 1, 1}), precondition_error);
}

TEST(BuildTwoEdstMulti, BaseCases) {
    DegreeSequence two{2, 2};
    auto r = build_two_edst_multi(two);
    expect_certified(two, r);
    EXPECT_EQ(r.graph.multiplicity(0, 1), 2u);
    EXPECT_TRUE(r.certificate.shared.empty());

    // A double edge between the two degree-3 vertices plus a path through
    // the third.
    DegreeSequence three{3, 3, 2};
    auto s = build_two_edst_multi(three);
    expect_certified(three, s);
    std::vector<std::uint32_t> mult;
    for (VertexId u = 0; u < 3; ++u)
        for (VertexId v = u + 1; v < 3; ++v) mult.push_back(s.graph.multiplicity(u, v));
    std::sort(mult.begin(), mult.end());
    EXPECT_EQ(mult, (std::vector<std::uint32_t>{1, 1, 2}));
    auto hub = s.graph.degree(0) == 2 ? 0 : s.graph.degree(1) == 2 ? 1 : 2;
    for (VertexId v = 0; v < 3; ++v) {
        if (v != VertexId(hub)) {
            EXPECT_EQ(s.graph.multiplicity(hub, v), 1u);
        }
    }
}

TEST(BuildTwoEdstMulti, SurplusEdges) {
    for (auto d : {DegreeSequence{4, 4, 4}, DegreeSequence{6, 4, 2}, DegreeSequence{5, 5, 4, 2}}) {
        auto r = build_two_edst_multi(d);
        expect_certified(d, r);
        EXPECT_TRUE(r.certificate.shared.empty()) << d;
    }
}

TEST(BuildOneShared, Examples) {
    for (auto d : {DegreeSequence{2, 2, 2}, DegreeSequence{3, 3, 3, 3, 3, 3}, DegreeSequence{4, 3, 3, 3, 1},
                   DegreeSequence{4, 3, 3, 3, 3, 3, 3}, DegreeSequence{5, 3, 3, 3, 3, 3, 3, 3}}) {
        auto r = build_one_shared(d);
        expect_certified(d, r);
        EXPECT_LE(r.certificate.shared.size(), 1u) << d;
    }
    auto cubic = build_one_shared(DegreeSequence{3, 3, 3, 3, 3, 3});
    EXPECT_EQ(cubic.graph.edge_count(), 9u);
    EXPECT_EQ(cubic.certificate.shared.size(), 1u);
}

TEST(BuildOneSharedMulti, Examples) {
    for (auto d : {DegreeSequence{4, 2, 2}, DegreeSequence{3, 3, 2, 2}, DegreeSequence{1, 1},
                   DegreeSequence{7, 3, 2, 2}, DegreeSequence{6, 3, 2, 2, 1}}) {
        auto r = build_one_shared_multi(d);
        expect_certified(d, r);
        EXPECT_LE(r.certificate.shared.size(), 1u) << d;
    }
}

TEST(BuildC4, Examples) {
    DegreeSequence square{2, 2, 2, 2};
    auto r = build_c4_pivotable(square);
    expect_certified(square, r);
    EXPECT_EQ(r.certificate.shared.size(), 2u);
    ASSERT_TRUE(r.certificate.central_cycle);

    for (auto d : {DegreeSequence{3, 3, 3, 3, 3, 3, 3, 3}, DegreeSequence{4, 3, 3, 3, 3, 3, 3, 3, 3},
                   DegreeSequence{3, 3, 2, 2, 2}, DegreeSequence{4, 4, 2, 2, 2, 2}}) {
        auto c = build_c4_pivotable(d);
        expect_certified(d, c);
        EXPECT_EQ(c.certificate.shared.size(), 2u) << d;
        EXPECT_TRUE(c.certificate.central_cycle) << d;
    }
    EXPECT_THROW(build_c4_pivotable(DegreeSequence{4, 2, 2, 2, 2}), precondition_error);
}

TEST(BuildC4Multi, Examples) {
    for (auto d : {DegreeSequence{6, 2, 2, 2, 2, 2}, DegreeSequence{2, 2, 2, 2}, DegreeSequence{4, 2, 2, 2, 2},
                   DegreeSequence{3, 3, 2, 2, 2}, DegreeSequence{8, 2, 2, 2, 2, 2, 2}}) {
        auto r = build_c4_pivotable_multi(d);
        expect_certified(d, r);
        EXPECT_EQ(r.certificate.shared.size(), 2u) << d;
    }
}

TEST(RealizeTc, SquareLabels) {
    auto res = realize_tc(DegreeSequence{2, 2, 2, 2}, GraphMode::simple);
    ASSERT_TRUE(res.realization);
    auto labels = res.labeling.labels;
    std::sort(labels.begin(), labels.end());
    EXPECT_EQ(labels, (std::vector<Label>{1, 1, 2, 2}));
    expect_tc_output(DegreeSequence{2, 2, 2, 2}, GraphMode::simple);
}

TEST(RealizeTc, SingleVertex) {
    auto res = realize_tc(DegreeSequence{0}, GraphMode::simple);
    ASSERT_TRUE(res.realization);
    EXPECT_EQ(res.realization->graph.vertex_count(), 1u);
    EXPECT_EQ(res.labeling.size(), 0u);
    EXPECT_TRUE(is_tc(res.realization->graph, res.labeling));
}

TEST(RealizeTc, NotRealizableGivesNoGraph) {
    auto res = realize_tc(DegreeSequence{2, 2, 1, 1}, GraphMode::simple);
    EXPECT_FALSE(res.decision.realizable);
    EXPECT_FALSE(res.realization);
}

TEST(RealizeTc, SmallSweepAgainstBruteForce) {
    for (auto mode : {GraphMode::simple, GraphMode::multi}) {
        for (std::size_t n = 1; n <= 6; ++n) {
            for (const auto& d : enumerate_sequences(n, mode, std::uint32_t(std::min<std::size_t>(2 * n, 7)))) {
                if (!check_tc_realizable(d, mode).realizable) continue;
                expect_tc_output(d, mode);
            }
        }
    }
}

// Graph store primitives per vertex and edge stay under a fixed constant as
// n grows, for each certificate kind.
TEST(RealizeTc, OperationCountIsLinear) {
    auto family = [](std::size_t n, std::uint32_t bulk, std::vector<std::uint32_t> tail) {
        std::vector<std::uint32_t> v(n - tail.size(), bulk);
        v.insert(v.end(), tail.begin(), tail.end());
        return DegreeSequence(v);
    };
    for (auto mode : {GraphMode::simple, GraphMode::multi}) {
        for (std::size_t n : {1000u, 10000u, 100000u}) {
            const DegreeSequence cases[] = {
                family(n, 4, {3, 3, 2, 2}),     // one shared edge
                family(n, 4, {2, 2, 2, 2}),     // m = 2n-4
                family(n, 6, {}),               // edge-disjoint trees
                family(n, 12, {2, 2, 2, 2}),    // surplus edges
            };
            for (const auto& d : cases) {
                auto r = realize_tc(d, mode);
                ASSERT_TRUE(r.realization) << to_string(mode) << " n=" << n;
                const auto& g = r.realization->graph;
                double per = double(g.ops()) / double(g.vertex_count() + g.edge_count());
                EXPECT_LE(per, 12.0) << to_string(mode) << " n=" << n << " " << to_string(r.decision.reason);
            }
        }
    }
}

TEST(RealizeTc, DebugAssertsPass) {
    detail::debug_override() = true;
    for (auto mode : {GraphMode::simple, GraphMode::multi}) {
        for (const auto& d : enumerate_sequences(7, mode, 6)) {
            if (!check_tc_realizable(d, mode).realizable) continue;
            EXPECT_NO_THROW(realize_tc(d, mode)) << d;
        }
    }
    detail::debug_override().reset();
}

TEST(Nonstrict, Examples) {
    auto k2 = realize_nonstrict(DegreeSequence{1, 1});
    ASSERT_TRUE(k2.realizable);
    EXPECT_EQ(k2.labeling.labels, (std::vector<Label>{1}));

    auto path = realize_nonstrict(DegreeSequence{2, 1, 1});
    ASSERT_TRUE(path.realizable);
    EXPECT_EQ(path.labeling.labels, (std::vector<Label>{1, 1}));

    EXPECT_FALSE(realize_nonstrict(DegreeSequence{1, 1, 1, 1}).realizable);
    EXPECT_TRUE(realize_nonstrict(DegreeSequence{0}).realizable);
    EXPECT_FALSE(realize_nonstrict(DegreeSequence{0, 0}).realizable);
}

TEST(Nonstrict, OutputsAreConnectedAndTc) {
    for (std::size_t n = 1; n <= 7; ++n) {
        for (const auto& d : enumerate_sequences(n, GraphMode::simple)) {
            auto res = realize_nonstrict(d);
            bool expected = n == 1 || (d.sum() / 2 >= n - 1 && d.min() >= 1);
            ASSERT_EQ(res.realizable, expected) << d;
            if (!res.realizable) continue;
            const auto& g = *res.graph;
            EXPECT_EQ(sorted_degrees(g), d.entries()) << d;
            EXPECT_TRUE(validate(g));
            auto edges = support::labeled_edges(g, res.labeling);
            EXPECT_TRUE(brute::temporally_connected(n, edges, false)) << d;
        }
    }
}

TEST(Nonstrict, Multigraphs) {
    for (auto d : {DegreeSequence{4, 2, 1, 1}, DegreeSequence{6, 2, 2, 2}, DegreeSequence{3, 3}}) {
        auto res = realize_nonstrict(d, GraphMode::multi);
        ASSERT_TRUE(res.realizable) << d;
        EXPECT_EQ(sorted_degrees(*res.graph), d.entries());
        EXPECT_TRUE(is_tc_nonstrict(*res.graph, res.labeling));
    }
}
