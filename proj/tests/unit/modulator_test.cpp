#include <gtest/gtest.h>

#include <bit>

#include "brute.hpp"
#include "families.hpp"
#include "tlp/modulator.hpp"
#include "tlp/oracle.hpp"

using namespace tlp;
using tlp::testing::Builder;
using tlp::testing::random_graph;

namespace {

Graph disjoint_bulls(int count) {
    Builder b;
    for (int i = 0; i < count; ++i) {
        auto v = b.add_vertices(5);
        b.add_clique({v[0], v[1], v[2]});
        b.add_edge(v[0], v[3]);
        b.add_edge(v[1], v[4]);
    }
    return b.build();
}

// t + 1 cycles of the given length sharing vertex 0 only.
Graph glued_cycles(int count, int len) {
    Builder b;
    const Vertex c = b.add_vertex();
    for (int i = 0; i < count; ++i) {
        auto rest = b.add_vertices(len - 1);
        b.add_edge(c, rest.front());
        b.add_edge(c, rest.back());
        for (std::size_t j = 0; j + 1 < rest.size(); ++j) b.add_edge(rest[j], rest[j + 1]);
    }
    return b.build();
}

WeightedFvsInstance unit_weights(const Graph& g, Weight budget) {
    WeightedFvsInstance inst{g, {}, budget};
    for (Vertex v : g.vertices()) inst.weights[v] = 1;
    return inst;
}

}  // namespace

TEST(Modulator, PackingExamples) {
    EXPECT_EQ(pack_small_obstructions(disjoint_bulls(2)).size(), 2u);
    EXPECT_TRUE(pack_small_obstructions(path_graph(7)).empty());
}

TEST(Modulator, PackingIsDisjointAndMaximal) {
    Rng rng(31);
    for (int round = 0; round < 200; ++round) {
        const Graph g = random_graph(rng, rng.between(5, 13), rng.between(20, 60));
        const auto pack = pack_small_obstructions(g);
        VertexSet used;
        for (const auto& h : pack) {
            EXPECT_TRUE(h.is_small());
            EXPECT_TRUE(is_valid_obstruction(g, h));
            EXPECT_TRUE(set_intersection(used, h.vertex_set()).empty());
            used = set_union(used, h.vertex_set());
        }
        EXPECT_FALSE(find_small_obstruction(delete_vertices(g, used)).has_value());
    }
}

TEST(Modulator, WeightedFvsExamples) {
    const auto tri = wfvs_2approx(unit_weights(complete_graph(3), 1));
    ASSERT_TRUE(tri.has_value());
    EXPECT_LE(tri->size(), 2u);
    EXPECT_TRUE(is_forest(delete_vertices(complete_graph(3), *tri)));
    const auto forest = wfvs_2approx(unit_weights(path_graph(6), Weight(1, 2)));
    ASSERT_TRUE(forest.has_value());
    EXPECT_TRUE(forest->empty());
    // Optimum 2: budget 1 may still be answered (weight 2 <= 2 * 1), budget 1/2 may not.
    const auto k4 = wfvs_2approx(unit_weights(complete_graph(4), 1));
    if (k4) EXPECT_EQ(k4->size(), 2u);
    EXPECT_FALSE(wfvs_2approx(unit_weights(complete_graph(4), Weight(1, 2))).has_value());
    auto missing = unit_weights(complete_graph(3), 1);
    missing.weights.erase(2);
    EXPECT_THROW(wfvs_2approx(missing), std::invalid_argument);
    auto negative = unit_weights(complete_graph(3), 1);
    negative.weights[0] = -1;
    EXPECT_THROW(wfvs_2approx(negative), std::invalid_argument);
}

TEST(Modulator, WeightedFvsWithinTwiceOptimum) {
    Rng rng(32);
    for (int round = 0; round < 150; ++round) {
        const Graph g = random_graph(rng, rng.between(3, 11), rng.between(15, 45));
        WeightedFvsInstance inst{g, {}, 0};
        std::vector<long long> w;
        for (Vertex v : g.vertices()) {
            w.push_back(rng.between(0, 9));
            inst.weights[v] = Weight(w.back(), 3);
        }
        const long long opt = tlp::testing::brute_min_fvs(g, w);
        inst.budget = Weight(rng.between(0, 30), 3);
        const auto got = wfvs_2approx(inst);
        if (got) {
            EXPECT_TRUE(is_forest(delete_vertices(g, *got)));
            EXPECT_LE(total_weight(inst, *got), 2 * Weight(opt, 3));
            EXPECT_LE(total_weight(inst, *got), 2 * inst.budget);
        } else {
            EXPECT_GT(Weight(opt, 3), inst.budget);
        }
    }
}

TEST(Modulator, FindModulatorExamples) {
    GeneratorConfig cfg;
    cfg.seed = 5;
    const auto tlp_mod = find_modulator(generate(cfg).graph, 1);
    ASSERT_TRUE(tlp_mod.has_value());
    EXPECT_TRUE(tlp_mod->modulator.empty());

    const auto c4 = find_modulator(cycle_graph(4), 1);
    ASSERT_TRUE(c4.has_value());
    EXPECT_LE(c4->modulator.size(), 7u);
    EXPECT_TRUE(is_three_leaf_power(delete_vertices(cycle_graph(4), c4->modulator)));

    EXPECT_FALSE(find_modulator(disjoint_bulls(3), 2).has_value());
    EXPECT_THROW(find_modulator(cycle_graph(4), 0), std::invalid_argument);
}

TEST(Modulator, FindModulatorSizeAndVerdict) {
    Rng rng(33);
    for (int round = 0; round < 150; ++round) {
        const Instance inst = tlp::testing::mixed_instance(rng, 12, 3);
        if (inst.k == 0) continue;
        const auto mod = find_modulator(inst.graph, inst.k);
        const int opt = tlp::testing::brute_min_deletion(inst.graph, inst.k);
        if (opt >= 0) ASSERT_TRUE(mod.has_value());
        if (mod) {
            EXPECT_LE(mod->modulator.size(), static_cast<std::size_t>(7 * inst.k));
            EXPECT_TRUE(is_three_leaf_power(delete_vertices(inst.graph, mod->modulator)));
        }
    }
}

TEST(Modulator, FlowerOrCoverExamples) {
    for (int t = 0; t <= 3; ++t) {
        const Graph g = glued_cycles(t + 1, 4 + t % 2);
        const auto r = flower_or_cover(g, t, 0);
        ASSERT_EQ(r.arm, FlowerCoverResult::Arm::Flower);
        EXPECT_EQ(r.flower.size(), static_cast<std::size_t>(t + 1));
        for (const auto& h : r.flower) EXPECT_TRUE(is_valid_obstruction(g, h));
    }
    const auto chordal = flower_or_cover(complete_graph(4), 2, 0);
    EXPECT_EQ(chordal.arm, FlowerCoverResult::Arm::Cover);
    EXPECT_TRUE(chordal.cover.empty());
    EXPECT_THROW(flower_or_cover(cycle_graph(4), 1, 99), std::invalid_argument);
    EXPECT_THROW(flower_or_cover(glued_cycles(2, 4), -1, 0), std::invalid_argument);
    Builder b;  // two disjoint C4s: removing one vertex leaves a hole behind
    for (int i = 0; i < 2; ++i) {
        auto v = b.add_vertices(4);
        for (int j = 0; j < 4; ++j) b.add_edge(v[static_cast<std::size_t>(j)], v[static_cast<std::size_t>((j + 1) % 4)]);
    }
    EXPECT_THROW(flower_or_cover(b.build(), 1, 0), std::invalid_argument);
}

TEST(Modulator, FlowerOrCoverOutcomesCheckOut) {
    Rng rng(34);
    int checked = 0;
    for (int round = 0; round < 600 && checked < 150; ++round) {
        // Chordal base plus one extra vertex wired at random.
        GeneratorConfig cfg;
        cfg.seed = rng.next();
        cfg.max_bags = 9;
        cfg.max_bag_size = 2;
        Graph base = generate(cfg).graph;
        if (base.order() > 13) continue;
        const Vertex v = static_cast<Vertex>(base.order());
        std::vector<Edge> es = base.edges();
        for (Vertex u : base.vertices())
            if (rng.chance(1, 3)) es.emplace_back(u, v);
        const Graph g = Graph::with_vertices(v + 1, es);
        if (!is_chordal(delete_vertex(g, v))) continue;
        ++checked;
        const int t = rng.between(0, 3);
        const auto r = flower_or_cover(g, t, v);
        switch (r.arm) {
            case FlowerCoverResult::Arm::Flower:
                EXPECT_EQ(r.flower.size(), static_cast<std::size_t>(t + 1));
                for (std::size_t i = 0; i < r.flower.size(); ++i) {
                    EXPECT_TRUE(is_valid_obstruction(g, r.flower[i]));
                    EXPECT_EQ(r.flower[i].kind, ObstructionKind::Hole);
                    for (std::size_t j = i + 1; j < r.flower.size(); ++j)
                        EXPECT_EQ(set_intersection(r.flower[i].vertex_set(), r.flower[j].vertex_set()), VertexSet{v});
                }
                break;
            case FlowerCoverResult::Arm::Cover:
                EXPECT_TRUE(r.flower.empty());
                EXPECT_FALSE(set_contains(r.cover, v));
                EXPECT_LE(r.cover.size(), static_cast<std::size_t>(12 * t));
                EXPECT_TRUE(is_chordal(delete_vertices(g, r.cover)));
                break;
            case FlowerCoverResult::Arm::Forced: {
                // No t vertices besides v hit every hole.
                const VertexSet others = set_difference(g.vertices(), VertexSet{v});
                const int n = static_cast<int>(others.size());
                for (std::uint32_t m = 0; m < (1u << n); ++m) {
                    if (std::popcount(m) > t) continue;
                    VertexSet del;
                    for (int i = 0; i < n; ++i)
                        if (m >> i & 1u) del.push_back(others[static_cast<std::size_t>(i)]);
                    EXPECT_FALSE(is_chordal(delete_vertices(g, del)));
                }
                break;
            }
        }
    }
    EXPECT_GE(checked, 100);
}

TEST(Modulator, DeleteFlowerCenter) {
    const Graph g = glued_cycles(2, 4);
    const auto r = flower_or_cover(g, 1, 0);
    ASSERT_EQ(r.arm, FlowerCoverResult::Arm::Flower);
    const Instance out = delete_flower_center(g, 1, r.flower, 0);
    EXPECT_EQ(out.k, 0);
    EXPECT_EQ(out.graph, delete_vertex(g, 0));
    EXPECT_THROW(delete_flower_center(g, 0, r.flower, 0), std::invalid_argument);
    EXPECT_THROW(delete_flower_center(g, 2, r.flower, 0), std::invalid_argument);
    EXPECT_THROW(delete_flower_center(g, 1, {r.flower[0], r.flower[0]}, 0), std::invalid_argument);
    EXPECT_THROW(delete_flower_center(g, 1, r.flower, 1), std::invalid_argument);
}

TEST(Modulator, GoodModulatorPredicate) {
    EXPECT_TRUE(is_good_modulator(cycle_graph(4), {0, 1}));
    const Graph bull = disjoint_bulls(1);
    EXPECT_FALSE(is_good_modulator(bull, {0}));
    EXPECT_TRUE(is_good_modulator(path_graph(5), {}));
    EXPECT_FALSE(is_good_modulator(cycle_graph(4), {}));
}

TEST(Modulator, BuildGoodModulatorExamples) {
    const auto tlp_res = build_good_modulator(path_graph(6), 1);
    EXPECT_FALSE(tlp_res.no_instance);
    EXPECT_TRUE(tlp_res.good_modulator.empty());

    const auto c4 = build_good_modulator(cycle_graph(4), 1);
    EXPECT_FALSE(c4.no_instance);
    EXPECT_EQ(c4.instance.k, 1);
    EXPECT_TRUE(is_good_modulator(c4.instance.graph, c4.good_modulator));
    EXPECT_LE(c4.good_modulator.size(), 91u);

    // Three C4s through one vertex with k = 1: whichever petal lands in the
    // modulator, the other two force that vertex out.
    const auto flower = build_good_modulator(glued_cycles(3, 4), 1);
    EXPECT_FALSE(flower.no_instance);
    EXPECT_EQ(flower.instance.k, 0);
    ASSERT_EQ(flower.trace.deletions.size(), 1u);
    EXPECT_EQ(flower.trace.deletions[0].vertex, 0);
    EXPECT_EQ(flower.trace.deletions[0].witnesses.size(), 2u);

    EXPECT_TRUE(build_good_modulator(disjoint_bulls(3), 2).no_instance);
}

TEST(Modulator, BuildGoodModulatorProperties) {
    Rng rng(35);
    for (int round = 0; round < 120; ++round) {
        const Instance inst = tlp::testing::mixed_instance(rng, 12, 3);
        const auto res = build_good_modulator(inst.graph, inst.k);
        const int before = tlp::testing::brute_min_deletion(inst.graph, inst.k);
        if (res.no_instance) {
            EXPECT_EQ(before, -1);
            continue;
        }
        const int k2 = res.instance.k;
        EXPECT_LE(k2, inst.k);
        EXPECT_LE(res.instance.graph.order(), inst.graph.order());
        EXPECT_EQ(before >= 0, tlp::testing::brute_min_deletion(res.instance.graph, k2) >= 0);
        EXPECT_LE(res.good_modulator.size(), static_cast<std::size_t>(84 * k2 * k2 + 7 * k2));
        EXPECT_TRUE(is_good_modulator(res.instance.graph, res.good_modulator));
        int k_run = inst.k;
        for (const auto& d : res.trace.deletions) {
            EXPECT_EQ(d.k_before, k_run--);
            if (d.witnesses.empty()) continue;
            EXPECT_EQ(d.witnesses.size(), static_cast<std::size_t>(d.k_before) + 1);
            for (std::size_t i = 0; i < d.witnesses.size(); ++i)
                for (std::size_t j = i + 1; j < d.witnesses.size(); ++j)
                    EXPECT_EQ(set_intersection(d.witnesses[i].vertex_set(), d.witnesses[j].vertex_set()), VertexSet{d.vertex});
        }
    }
}
