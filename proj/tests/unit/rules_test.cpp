#include <gtest/gtest.h>

#include "brute.hpp"
#include "families.hpp"
#include "tlp/modulator.hpp"
#include "tlp/oracle.hpp"
#include "tlp/rules.hpp"

using namespace tlp;
using tlp::testing::Builder;
using tlp::testing::random_graph;

namespace {

std::vector<Edge> E(std::initializer_list<std::pair<int, int>> xs) {
    std::vector<Edge> out;
    for (auto [a, b] : xs) out.emplace_back(a, b);
    return out;
}

// C4 on 0..3 with S = {0, 1}; 2 is the attachment point for extra structure.
Builder c4_core() {
    Builder b;
    auto v = b.add_vertices(4);
    for (int i = 0; i < 4; ++i) b.add_edge(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>((i + 1) % 4)]);
    return b;
}

bool definition_complete_split(const Graph& g, const VertexSet& a, const VertexSet& b) {
    if (a.size() < 2 || b.size() < 2) return false;
    const VertexSet na = open_neighborhood(g, a), nb = open_neighborhood(g, b);
    for (Vertex x : na)
        for (Vertex y : nb)
            if (!g.adjacent(x, y)) return false;
    const VertexSet all = set_union(na, nb);
    for (Vertex x : all)
        for (Vertex y : all)
            if (x < y && !g.adjacent(x, y)) return false;
    return true;
}

}  // namespace

TEST(Rules, StepNamesRoundTrip) {
    for (int i = 0; i <= static_cast<int>(Step::Terminal); ++i) {
        const Step s = static_cast<Step>(i);
        EXPECT_EQ(step_from_string(to_string(s)), s);
    }
    EXPECT_FALSE(step_from_string("R9").has_value());
}

TEST(Rules, BlockingPairExamples) {
    EXPECT_TRUE(is_blocking_pair(path_graph(3), {1}, 0, 2));
    EXPECT_FALSE(is_blocking_pair(complete_graph(3), {2}, 0, 1));
    // v = 0, w = 1 adjacent, both see the non-edge {2, 3}.
    const Graph g = Graph::with_vertices(4, E({{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}));
    EXPECT_TRUE(is_blocking_pair(g, {2, 3}, 0, 1));
    EXPECT_THROW(is_blocking_pair(g, {2, 3}, 0, 0), std::invalid_argument);
    EXPECT_THROW(is_blocking_pair(path_graph(4), {0}, 1, 3), std::invalid_argument);
}

TEST(Rules, SplitExamples) {
    const Graph star = complete_bipartite(1, 3);
    EXPECT_EQ(is_complete_split(star, {{0, 1}, {2, 3}}), definition_complete_split(star, {0, 1}, {2, 3}));
    const Graph two = Graph::with_vertices(4, E({{0, 1}, {2, 3}}));
    EXPECT_TRUE(is_complete_split(two, {{0, 1}, {2, 3}}));
    const Graph c4 = cycle_graph(4);
    EXPECT_FALSE(is_complete_split(c4, {{0, 1}, {2, 3}}));
    EXPECT_FALSE(is_complete_split(c4, {{0, 2}, {1, 3}}));
    EXPECT_TRUE(is_split(c4, {{0, 2}, {1, 3}}));
    EXPECT_FALSE(is_split(c4, {{0}, {1, 2, 3}}));
    EXPECT_FALSE(is_split(c4, {{0, 1}, {1, 2, 3}}));
}

TEST(Rules, CompleteSplitMatchesDefinition) {
    Rng rng(41);
    for (int round = 0; round < 300; ++round) {
        const Graph g = random_graph(rng, rng.between(4, 8), rng.between(20, 70));
        VertexSet a, b;
        for (Vertex v : g.vertices()) (rng.chance(1, 2) ? a : b).push_back(v);
        EXPECT_EQ(is_complete_split(g, {a, b}), definition_complete_split(g, a, b));
    }
}

TEST(Rules, SidesOfModulatorExamples) {
    // S = {3} sees both ends of the outside path 0-1-2, which are not twins.
    const Graph p3_apex = Graph::with_vertices(4, E({{0, 1}, {1, 2}, {3, 0}, {3, 2}}));
    const auto apex = partition_s_plus_minus(p3_apex, {3});
    EXPECT_EQ(apex.minus, VertexSet{3});

    const Graph lonely = Graph::with_vertices(4, E({{0, 1}, {1, 2}}));
    EXPECT_EQ(partition_s_plus_minus(lonely, {3}).plus, VertexSet{3});
}

TEST(Rules, SidesOfModulatorMatchDefinition) {
    Rng rng(42);
    for (int round = 0; round < 200; ++round) {
        const Graph g = random_graph(rng, rng.between(5, 10), rng.between(20, 50));
        VertexSet s;
        for (Vertex v : g.vertices())
            if (rng.chance(1, 3)) s.push_back(v);
        const auto sides = partition_s_plus_minus(g, s);
        const Graph rest = delete_vertices(g, s);
        for (Vertex v : s) {
            bool plus = true;
            for (const auto& c : components(rest)) {
                const VertexSet nv = neighbors_in(g, v, c);
                const Graph h = induced_subgraph(g, c);
                for (Vertex a : nv)
                    for (Vertex bb : nv)
                        if (closed_neighborhood(h, a) != closed_neighborhood(h, bb)) plus = false;
            }
            EXPECT_EQ(set_contains(sides.plus, v), plus);
            EXPECT_EQ(set_contains(sides.minus, v), !plus);
        }
    }
}

TEST(Rules, MarkingGraphAndMatching) {
    Rng rng(43);
    for (int round = 0; round < 200; ++round) {
        const Instance inst = tlp::testing::rule_family(Step::R2, rng);
        const auto gm = build_good_modulator(inst.graph, inst.k);
        if (gm.no_instance || gm.good_modulator.empty()) continue;
        const Graph& g = gm.instance.graph;
        const VertexSet& s = gm.good_modulator;
        const auto sides = partition_s_plus_minus(g, s);
        const auto q = build_marking_graph(g, s);
        for (auto [v, w] : q.pairs) {
            EXPECT_TRUE(set_contains(sides.plus, v));
            EXPECT_TRUE(set_contains(sides.plus, w));
        }
        for (std::size_t r = 0; r < q.components.size(); ++r) {
            EXPECT_GE(q.components[r].size(), 2u);
            EXPECT_TRUE(set_intersection(open_neighborhood(g, q.components[r]), sides.minus).empty());
            for (int l : q.adjacency[r]) EXPECT_LT(l, q.left_size());
        }
        const int cap = gm.instance.k + 2;
        const auto m = greedy_capped_matching(q, cap);
        EXPECT_TRUE(is_capped_matching(q, m));
        EXPECT_TRUE(is_maximal_capped_matching(q, m));
        if (!m.edges.empty()) {
            CappedMatching shrunk = m;
            shrunk.edges.pop_back();
            EXPECT_TRUE(is_capped_matching(q, shrunk));
            EXPECT_FALSE(is_maximal_capped_matching(q, shrunk));
            CappedMatching doubled = m;
            doubled.edges.push_back(m.edges.back());
            EXPECT_FALSE(is_capped_matching(q, doubled));
        }
    }
}

TEST(Rules, DetachNotApplicableWithoutCandidates) {
    // Only a single vertex lies outside S.
    EXPECT_FALSE(detach_unmatched_component(cycle_graph(4), 1, {0, 1, 2}).has_value());
    EXPECT_THROW(detach_unmatched_component(cycle_graph(4), 0, {0, 1, 2}), std::invalid_argument);
    EXPECT_THROW(detach_unmatched_component(cycle_graph(4), 1, {}), std::invalid_argument);
}

TEST(Rules, DetachFiresWhenComponentsOutnumberCapacity) {
    // S = {a, b} nonadjacent; many edges each complete to both a and b. Every
    // component is blocked by {a, b}, so |Y| > 3 (k + 2) forces an unmatched one.
    Builder b;
    const Vertex a = b.add_vertex(), c = b.add_vertex();
    const int k = 1;
    for (int i = 0; i < 3 * (k + 2) + 1; ++i) {
        auto e = b.add_vertices(2);
        b.add_edge(e[0], e[1]);
        b.join({a, c}, e);
    }
    const Graph g = b.build();
    const auto r = detach_unmatched_component(g, k, {a, c});
    ASSERT_TRUE(r.has_value());
    EXPECT_EQ(r->rule, Step::R2);
    EXPECT_EQ(r->deleted_edges.size(), 1u);
    EXPECT_EQ(r->result.graph, delete_edges(g, r->deleted_edges));
}

TEST(Rules, PruneIsolatedExamples) {
    // K2,5 with k = 1: five false twins on the same two S-vertices.
    const Graph g = complete_bipartite(2, 5);
    EXPECT_TRUE(is_good_modulator(g, {0, 1}));
    const auto r = prune_isolated_vertices(g, 1, {0, 1});
    ASSERT_TRUE(r.has_value());
    EXPECT_EQ(r->deleted_vertices, VertexSet{6});
    EXPECT_EQ(r->result.graph, delete_vertex(g, 6));
    EXPECT_FALSE(prune_isolated_vertices(complete_bipartite(2, 4), 1, {0, 1}).has_value());
}

TEST(Rules, PruneCompleteComponentExamples) {
    // S = {0, 1} nonadjacent, both complete to a K6 (k = 1 marks k + 3 = 4 per trace).
    Builder b;
    auto s = b.add_vertices(2);
    auto clique = b.add_vertices(6);
    b.add_clique(clique);
    b.join(s, clique);
    const Graph g = b.build();
    const auto r = prune_complete_component(g, 1, {0, 1});
    ASSERT_TRUE(r.has_value());
    EXPECT_EQ(r->rule, Step::R4);
    EXPECT_EQ(r->deleted_vertices.size(), 1u);

    Builder small;
    auto s2 = small.add_vertices(2);
    auto c2 = small.add_vertices(4);
    small.add_clique(c2);
    small.join(s2, c2);
    EXPECT_FALSE(prune_complete_component(small.build(), 1, {0, 1}).has_value());
}

TEST(Rules, ShrinkTwinClassExamples) {
    const auto r = shrink_twin_class(complete_graph(3), 1, {});
    ASSERT_TRUE(r.has_value());
    EXPECT_EQ(r->deleted_vertices, VertexSet{2});
    EXPECT_FALSE(shrink_twin_class(path_graph(5), 1, {}).has_value());
    // Twins inside S do not count.
    EXPECT_FALSE(shrink_twin_class(complete_graph(3), 1, {0}).has_value());
    EXPECT_THROW(shrink_twin_class(complete_graph(3), 0, {}), std::invalid_argument);
}

TEST(Rules, TrimUnattachedBranchExamples) {
    Builder b = c4_core();
    auto tail = b.add_vertices(3);  // 2-4-5-6
    b.add_edge(2, tail[0]);
    b.add_edge(tail[0], tail[1]);
    b.add_edge(tail[1], tail[2]);
    const Graph g = b.build();
    ASSERT_TRUE(is_good_modulator(g, {0, 1}));
    const auto r = trim_unattached_branch(g, 1, {0, 1});
    ASSERT_TRUE(r.has_value());
    EXPECT_EQ(r->deleted_vertices, (VertexSet{5, 6}));

    // Everything outside S touches S.
    EXPECT_FALSE(trim_unattached_branch(cycle_graph(4), 1, {0, 1}).has_value());
}

TEST(Rules, DropParallelComponentExamples) {
    const int k = 1;
    Builder b = c4_core();
    for (int i = 0; i < k + 4; ++i) b.add_edge(2, b.add_vertex());
    const Graph g = b.build();
    ASSERT_TRUE(is_good_modulator(g, {0, 1}));
    const auto r = drop_parallel_component(g, k, {0, 1});
    ASSERT_TRUE(r.has_value());
    EXPECT_EQ(r->deleted_vertices, VertexSet{4});

    Builder few = c4_core();
    for (int i = 0; i < k + 3; ++i) few.add_edge(2, few.add_vertex());
    EXPECT_FALSE(drop_parallel_component(few.build(), k, {0, 1}).has_value());
}

TEST(Rules, ContractBagChainExamples) {
    // P7 on 0..6 next to a C4 on 7..10 holding S = {7, 8}.
    Builder b;
    auto p = b.add_vertices(7);
    for (int i = 0; i + 1 < 7; ++i) b.add_edge(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(i + 1)]);
    auto c = b.add_vertices(4);
    for (int i = 0; i < 4; ++i) b.add_edge(c[static_cast<std::size_t>(i)], c[static_cast<std::size_t>((i + 1) % 4)]);
    const Graph g = b.build();
    ASSERT_TRUE(is_good_modulator(g, {7, 8}));
    const auto chains = find_bag_chains(g, {7, 8});
    ASSERT_EQ(chains.size(), 1u);
    EXPECT_EQ(chains[0].bags.size(), 7u);
    EXPECT_EQ(chains[0].keep, 2u);
    const auto r = contract_bag_chain(g, 1, {7, 8});
    ASSERT_TRUE(r.has_value());
    EXPECT_EQ(r->deleted_vertices, (VertexSet{3, 4}));
    EXPECT_EQ(r->added_edges, E({{2, 5}}));
    const Graph outside = induced_subgraph(r->result.graph, {0, 1, 2, 5, 6});
    EXPECT_TRUE(is_connected(outside));
    EXPECT_EQ(outside.size(), 4u);
    EXPECT_TRUE(is_forest(outside));

    // P5 is too short.
    Builder shorter;
    auto q = shorter.add_vertices(5);
    for (int i = 0; i + 1 < 5; ++i) shorter.add_edge(q[static_cast<std::size_t>(i)], q[static_cast<std::size_t>(i + 1)]);
    auto c2 = shorter.add_vertices(4);
    for (int i = 0; i < 4; ++i) shorter.add_edge(c2[static_cast<std::size_t>(i)], c2[static_cast<std::size_t>((i + 1) % 4)]);
    EXPECT_FALSE(contract_bag_chain(shorter.build(), 1, {5, 6}).has_value());
}

TEST(Rules, BagChainsSatisfyNeighborhoodEquation) {
    Rng rng(44);
    int seen = 0;
    for (int round = 0; round < 300; ++round) {
        const Instance inst = tlp::testing::rule_family(Step::R8, rng);
        const auto gm = build_good_modulator(inst.graph, inst.k);
        if (gm.no_instance || gm.good_modulator.empty()) continue;
        const Graph& g = gm.instance.graph;
        const VertexSet rest = set_difference(g.vertices(), gm.good_modulator);
        const auto twins = true_twin_partition(g, rest);
        for (const auto& chain : find_bag_chains(g, gm.good_modulator)) {
            ++seen;
            const std::size_t m = chain.bags.size();
            EXPECT_GE(m, 6u);
            EXPECT_GE(chain.keep, 2u);
            EXPECT_LE(chain.keep + 3, m);
            for (std::size_t i = 2; i + 2 < m; ++i) EXPECT_LE(chain.bags[chain.keep].size(), chain.bags[i].size());
            for (const auto& bag : chain.bags) EXPECT_NE(std::find(twins.begin(), twins.end(), bag), twins.end());
            for (std::size_t i = 1; i + 1 < m; ++i)
                EXPECT_EQ(open_neighborhood(g, chain.bags[i]), set_union(chain.bags[i - 1], chain.bags[i + 1]));
        }
    }
    EXPECT_GT(seen, 50);
}

TEST(Rules, DispatchRejectsBookkeepingSteps) {
    EXPECT_THROW(apply_rule(Step::R1, cycle_graph(4), 1, {0}), std::invalid_argument);
    EXPECT_THROW(apply_rule(Step::Terminal, cycle_graph(4), 1, {0}), std::invalid_argument);
}

TEST(Rules, EachRuleIsSafeOnItsFamily) {
    Rng rng(45);
    for (Step rule : {Step::R2, Step::R3, Step::R4, Step::R5, Step::R6, Step::R7, Step::R8}) {
        int fired = 0;
        for (int round = 0; round < 400 && fired < 15; ++round) {
            const Instance inst = tlp::testing::rule_family(rule, rng);
            const auto gm = build_good_modulator(inst.graph, inst.k);
            if (gm.no_instance || gm.good_modulator.empty() || gm.instance.k == 0) continue;
            const auto r = apply_rule(rule, gm.instance.graph, gm.instance.k, gm.good_modulator);
            if (!r) continue;
            ++fired;
            EXPECT_EQ(r->rule, rule);
            EXPECT_LE(r->result.graph.order() + r->result.graph.size(), gm.instance.graph.order() + gm.instance.graph.size() - 1);
            const int before = tlp::testing::brute_min_deletion(gm.instance.graph, gm.instance.k);
            const int after = tlp::testing::brute_min_deletion(r->result.graph, r->result.k);
            EXPECT_EQ(before >= 0, after >= 0) << to_string(rule) << " on " << to_string(gm.instance.graph);
        }
        EXPECT_GE(fired, 15) << to_string(rule);
    }
}
