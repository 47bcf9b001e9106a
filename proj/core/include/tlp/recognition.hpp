#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tlp/graph.hpp"

namespace tlp {

enum class ObstructionKind { Bull, Dart, Gem, Hole };

std::string to_string(ObstructionKind kind);

/// Induced subgraph certifying that a graph is not a 3-leaf power.
///
/// `vertices` is in role order:
///   Bull: (p1, b1, b2, p2, t)  p1-b1-b2-p2 is the induced P4, t is adjacent
///                              to b1 and b2 only; p1 < p2.
///   Dart: (c, a0, a1, a2, p)   c is adjacent to all others, a0-a1-a2 is a
///                              path, p is a pendant on c; a0 < a2.
///   Gem:  (c, x0, x1, x2, x3)  c is adjacent to all others, x0-x1-x2-x3 is
///                              the induced P4; x0 < x3.
///   Hole: cyclic order, smallest id first, second id smaller than last.
struct Obstruction {
    ObstructionKind kind = ObstructionKind::Hole;
    std::vector<Vertex> vertices;

    bool is_small() const { return vertices.size() <= 5; }
    VertexSet vertex_set() const { return make_set(vertices); }

    friend bool operator==(const Obstruction&, const Obstruction&) = default;
};

std::string to_string(const Obstruction& h);

/// True iff g[h.vertices] is the graph named by h.kind with the documented
/// role order (for holes: an induced cycle of length at least 4).
bool is_valid_obstruction(const Graph& g, const Obstruction& h);

/// Classifies g[x] for |x| in {4, 5}; nullopt if it is not an obstruction.
std::optional<Obstruction> classify_small(const Graph& g, const VertexSet& x);

/// Perfect elimination ordering test on a maximum cardinality search order.
bool is_chordal(const Graph& g);

/// A hole of g, or nullopt if g is chordal.
std::optional<Obstruction> find_hole(const Graph& g);

/// Shortest hole through v. Candidates are nonadjacent pairs x < y of
/// neighbors of v joined by a shortest path avoiding N[v] \ {x, y}; ties go
/// to the lexicographically smallest (x, y).
std::optional<Obstruction> find_hole_through(const Graph& g, Vertex v);

/// Induced bull, dart, gem, C4 or C5 whose sorted vertex tuple is
/// lexicographically smallest; nullopt if there is none.
std::optional<Obstruction> find_small_obstruction(const Graph& g);

/// nullopt iff g is a 3-leaf power. Prefers small obstructions; falls back
/// to a hole.
std::optional<Obstruction> find_obstruction(const Graph& g);

bool is_three_leaf_power(const Graph& g);

/// Forest plus bags. Node i of `forest` owns `bags[i]`.
struct TreeCliqueDecomposition {
    Graph forest;
    std::vector<VertexSet> bags;
};

class NotLeafPower : public std::runtime_error {
public:
    explicit NotLeafPower(Obstruction witness);
    const Obstruction& witness() const noexcept { return witness_; }

private:
    Obstruction witness_;
};

/// Complete components get a single bag; connected incomplete components
/// get their maximal true twin-sets, which must form a tree. Nodes are
/// numbered by the smallest vertex of their bag. Throws NotLeafPower.
TreeCliqueDecomposition tree_clique_decomposition(const Graph& g);

/// Substitutes each forest node by a clique on its bag.
Graph graph_from_decomposition(const TreeCliqueDecomposition& d);

/// Local distance-hereditary test: p must be an induced path of g and v a
/// vertex outside it. True iff p has at least 3 edges and v is adjacent to
/// both ends, in which case g[p + v] is not distance-hereditary and hence
/// not a 3-leaf power. Throws std::invalid_argument if p is not an induced
/// path or contains v.
bool apex_over_long_path(const Graph& g, const std::vector<Vertex>& p, Vertex v);

bool is_induced_path(const Graph& g, const std::vector<Vertex>& p);

}  // namespace tlp
