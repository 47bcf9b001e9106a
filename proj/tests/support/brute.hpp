#pragma once

// Brute-force reference implementations used as test oracles. They share
// nothing with the library beyond the Graph container and are meant for
// graphs with at most ~16 vertices.

#include <cstdint>
#include <string>
#include <vector>

#include "tlp/graph.hpp"

namespace tlp::testing {

/// Dense bitmask view of a graph; vertex i is g.vertices()[i].
struct Bits {
    explicit Bits(const Graph& g);
    int n = 0;
    std::vector<std::uint32_t> adj;
    VertexSet ids;

    int degree_in(int v, std::uint32_t mask) const;
    bool connected(std::uint32_t mask) const;
    std::uint32_t mask_of(const VertexSet& xs) const;
    VertexSet set_of(std::uint32_t mask) const;
};

/// "bull", "dart", "gem" or "" by trying every labeling of the five vertices.
std::string small_shape(const Bits& b, std::uint32_t five);

/// Induced cycle of length at least four: connected and 2-regular.
bool is_hole_mask(const Bits& b, std::uint32_t mask);

struct BruteObstruction {
    std::string kind;  // bull, dart, gem, hole
    VertexSet vertices;
};

/// Every vertex set inducing an obstruction.
std::vector<BruteObstruction> all_obstructions(const Graph& g);

/// No induced bull, dart, gem or hole, checked over all subsets.
bool brute_is_three_leaf_power(const Graph& g);

/// Smallest deletion set size turning g into a 3-leaf power, or -1 if above `limit`.
int brute_min_deletion(const Graph& g, int limit);

/// Minimum total weight of a feedback vertex set, by subset enumeration.
/// Weights are indexed like g.vertices() and scaled to integers by the caller.
long long brute_min_fvs(const Graph& g, const std::vector<long long>& weights);

bool brute_is_forest(const Graph& g);

/// Every connected induced subgraph preserves distances.
bool brute_is_distance_hereditary(const Graph& g);

}  // namespace tlp::testing
