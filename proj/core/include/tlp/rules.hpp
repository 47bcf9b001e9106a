#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tlp/graph.hpp"
#include "tlp/instance.hpp"

namespace tlp {

/// Reduction rules in the order the driver tries them, plus the two
/// bookkeeping steps that show up in traces.
enum class Step { R1, R2, R3, R4, R5, R6, R7, R8, GoodModulator, Terminal };

std::string to_string(Step s);
std::optional<Step> step_from_string(const std::string& s);

struct SplitCandidate {
    VertexSet a;
    VertexSet b;
};

/// (A, B) partitions V(g), both sides have at least two vertices, and N(A) is
/// complete to N(B).
bool is_split(const Graph& g, const SplitCandidate& cand);

/// A split whose boundary N(A) ∪ N(B) is a clique.
bool is_complete_split(const Graph& g, const SplitCandidate& cand);

/// {v, w} ⊆ N(x) blocks x unless v ~ w and both see the same clique inside x.
/// Throws std::invalid_argument if v == w or either is outside N(x).
bool is_blocking_pair(const Graph& g, const VertexSet& x, Vertex v, Vertex w);

struct ModulatorSides {
    /// Vertices whose neighborhood in every component of g \ S is a true twin-set there.
    VertexSet plus;
    VertexSet minus;
};

ModulatorSides partition_s_plus_minus(const Graph& g, const VertexSet& s);

/// Bipartite marking graph between (pair of S⁺, tag) and the non-trivial
/// components of g \ S without neighbors in S⁻.
struct MarkingGraphQ {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    /// Right side, ascending by smallest vertex.
    std::vector<VertexSet> components;
    /// For each right element, its left neighbors as pair_index * 3 + (tag - 1), ascending.
    std::vector<std::vector<int>> adjacency;

    int left_size() const { return static_cast<int>(pairs.size()) * 3; }
};

MarkingGraphQ build_marking_graph(const Graph& g, const VertexSet& s);

struct CappedMatching {
    /// (left index, right index) pairs.
    std::vector<std::pair<int, int>> edges;
    int cap = 0;
};

/// Each right element in turn takes its first left neighbor with spare
/// capacity. The result is maximal.
CappedMatching greedy_capped_matching(const MarkingGraphQ& q, int cap);

bool is_capped_matching(const MarkingGraphQ& q, const CappedMatching& m);
bool is_maximal_capped_matching(const MarkingGraphQ& q, const CappedMatching& m);

struct BagChain {
    /// B_1 .. B_m in order.
    std::vector<VertexSet> bags;
    /// 0-based position of the kept middle bag (among positions 2 .. m-3).
    std::size_t keep = 0;
};

/// Maximal chains in the bag forest of g \ S whose inner bags B_2 .. B_{m-1}
/// have forest degree two and no neighbors in S, restricted to m >= 6.
/// Oriented so that B_2 starts with the smaller vertex id.
std::vector<BagChain> find_bag_chains(const Graph& g, const VertexSet& s);

struct RuleApplication {
    Step rule = Step::R2;
    Instance result;
    VertexSet deleted_vertices;
    std::vector<Edge> deleted_edges;
    std::vector<Edge> added_edges;
    std::string note;
};

// Every rule below requires k > 0 and, except shrink_twin_class, a non-empty
// good modulator s; violations throw std::invalid_argument. A rule whose
// hypotheses fail returns nullopt.

/// Removes the edges of a component left unmatched by the capped matching.
std::optional<RuleApplication> detach_unmatched_component(const Graph& g, int k, const VertexSet& s);

/// Deletes an isolated vertex of g \ S not marked for any small trace pattern in S.
std::optional<RuleApplication> prune_isolated_vertices(const Graph& g, int k, const VertexSet& s);

/// Same marking inside each complete component of g \ S.
std::optional<RuleApplication> prune_complete_component(const Graph& g, int k, const VertexSet& s);

/// Deletes one vertex of a true twin-set outside S with at least k + 2 vertices.
std::optional<RuleApplication> shrink_twin_class(const Graph& g, int k, const VertexSet& s);

/// Trims a branch hanging off a bag with no contact to S down to its attachment.
std::optional<RuleApplication> trim_unattached_branch(const Graph& g, int k, const VertexSet& s);

/// Deletes one of k + 4 components around a bag sharing a neighborhood and attachment type.
std::optional<RuleApplication> drop_parallel_component(const Graph& g, int k, const VertexSet& s);

/// Shortcuts a long chain of bags to its ends and a smallest middle bag.
std::optional<RuleApplication> contract_bag_chain(const Graph& g, int k, const VertexSet& s);

/// Dispatch for R2 .. R8.
std::optional<RuleApplication> apply_rule(Step rule, const Graph& g, int k, const VertexSet& s);

}  // namespace tlp
