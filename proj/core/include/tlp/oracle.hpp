#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "tlp/graph.hpp"
#include "tlp/instance.hpp"

namespace tlp {

enum class Verdict { Yes, No, Indeterminate };

struct SolveResult {
    Verdict verdict = Verdict::Indeterminate;
    /// Deletion set of size <= k when the verdict is Yes.
    VertexSet witness;
    std::uint64_t nodes = 0;
};

struct SolveOptions {
    /// Search-tree nodes explored before giving up with Indeterminate.
    std::uint64_t node_budget = 2'000'000;
};

/// Decides whether at most k vertex deletions turn g into a 3-leaf power by
/// branching on the vertices of an obstruction (a small one when present).
SolveResult exact_solve(const Instance& inst, const SolveOptions& opts = {});

/// std::mt19937_64 with bounded draws by rejection sampling, so a seed gives
/// the same stream on every platform (std distributions are
/// implementation-defined).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    /// Uniform in [0, n); n must be positive.
    std::uint64_t below(std::uint64_t n);
    /// Uniform in [lo, hi].
    int between(int lo, int hi);
    /// True with probability num / den.
    bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

    template <typename T>
    void shuffle(std::vector<T>& xs) {
        for (std::size_t i = xs.size(); i > 1; --i) std::swap(xs[i - 1], xs[below(i)]);
    }

private:
    std::mt19937_64 engine_;
};

struct GeneratorConfig {
    std::uint64_t seed = 0;
    int min_bags = 1;
    int max_bags = 8;
    int min_bag_size = 1;
    int max_bag_size = 3;
    /// Percent chance that a new forest node links to an earlier one rather
    /// than starting a new tree.
    int link_percent = 85;
    /// Extra edges between arbitrary vertex pairs.
    int noise_edges = 0;
    /// Extra vertices, each joined to 1..4 random earlier vertices.
    int noise_vertices = 0;
    /// Budget written into the instance; with noise_edges == 0 and
    /// planted_k >= noise_vertices the instance is a yes-instance.
    int planted_k = 0;
};

/// Substitutes cliques into the nodes of a random forest, shuffles the ids of
/// that 3-leaf power, then appends noise vertices (highest ids) and noise edges.
/// Throws std::invalid_argument on an empty range or negative count.
Instance generate(const GeneratorConfig& cfg);

}  // namespace tlp
