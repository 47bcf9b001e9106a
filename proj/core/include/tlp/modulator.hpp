#pragma once

#include <map>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tlp/graph.hpp"
#include "tlp/instance.hpp"
#include "tlp/recognition.hpp"

namespace tlp {

using Weight = boost::multiprecision::cpp_rational;

struct WeightedFvsInstance {
    Graph graph;
    std::map<Vertex, Weight> weights;
    Weight budget;
};

Weight total_weight(const WeightedFvsInstance& inst, const VertexSet& s);

/// Local-ratio 2-approximation for weighted feedback vertex set (semidisjoint
/// cycles first, otherwise degree-proportional rounds), followed by reverse
/// deletion. Returns a feedback vertex set of weight at most 2 * budget, or
/// nullopt when no feedback vertex set of weight at most budget exists.
/// Throws std::invalid_argument for a missing or negative weight.
std::optional<VertexSet> wfvs_2approx(const WeightedFvsInstance& inst);

/// Greedy maximal packing of vertex-disjoint small obstructions; each pick
/// is the lexicographically smallest one left.
std::vector<Obstruction> pack_small_obstructions(const Graph& g);

struct ModulatorResult {
    VertexSet modulator;
    std::vector<Obstruction> packing;
};

/// A modulator of at most 7k vertices, or nullopt when g has no modulator of
/// at most k vertices. Requires k > 0.
///
/// Packs small obstructions (more than k of them means no), then solves
/// weighted feedback vertex set on the true-twin quotient of the residue,
/// weighting each representative by the size of its class.
std::optional<ModulatorResult> find_modulator(const Graph& g, int k);

/// Outcome of searching for holes through a single vertex v.
///   Flower: t + 1 holes whose pairwise intersection is exactly {v}.
///   Cover:  at most t vertices, none equal to v, whose deletion leaves a
///           chordal graph.
///   Forced: exhaustive search showed every such cover has more than t
///           vertices, so every deletion set that must stay within t
///           vertices outside v has to contain v itself.
struct FlowerCoverResult {
    enum class Arm { Flower, Cover, Forced };
    Arm arm = Arm::Cover;
    std::vector<Obstruction> flower;
    VertexSet cover;
};

/// Requires g \ v chordal (throws std::invalid_argument otherwise) and t >= 0.
/// Greedily packs shortest holes through v; if fewer than t + 1 are found,
/// a bounded search tree computes a minimum cover of size at most t.
FlowerCoverResult flower_or_cover(const Graph& g, int t, Vertex v);

/// Vertex deletion justified by k + 1 obstructions pairwise meeting exactly
/// in {v}. Returns (g \ v, k - 1); throws std::invalid_argument if k <= 0 or
/// the witnesses do not check out.
Instance delete_flower_center(const Graph& g, int k, const std::vector<Obstruction>& witnesses, Vertex v);

/// S is good when g \ S is a 3-leaf power and g \ (S \ {v}) is one for every v in S.
bool is_good_modulator(const Graph& g, const VertexSet& s);

struct ForcedDeletion {
    Vertex vertex = 0;
    int k_before = 0;
    /// k_before + 1 obstructions meeting exactly in `vertex`; empty when the
    /// deletion was certified by the exhaustive cover search instead.
    std::vector<Obstruction> witnesses;
};

struct GoodModulatorTrace {
    /// Packing used by the last modulator computation.
    std::vector<Obstruction> packing;
    /// Modulator the good modulator was grown from.
    VertexSet modulator;
    /// Small obstructions through v, pairwise meeting in {v}.
    std::map<Vertex, std::vector<Obstruction>> local_packings;
    std::map<Vertex, VertexSet> local_covers;
    std::map<Vertex, VertexSet> local_sets;
    std::vector<ForcedDeletion> deletions;
};

struct GoodModulatorResult {
    /// Set when the input is certified to be a no-instance.
    bool no_instance = false;
    Instance instance;
    VertexSet good_modulator;
    GoodModulatorTrace trace;
};

/// Equivalent instance (G', k') with k' <= k and |V(G')| <= |V(g)| plus a good
/// modulator of G' of size at most 84k'^2 + 7k'. Vertices forced into every
/// small solution are deleted along the way (budget decremented), after which
/// the construction restarts on the smaller instance.
GoodModulatorResult build_good_modulator(const Graph& g, int k);

}  // namespace tlp
