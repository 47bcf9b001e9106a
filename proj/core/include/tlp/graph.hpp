#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace tlp {

using Vertex = int;

/// Sorted, duplicate-free list of vertex ids. Every function in this library
/// that takes or returns a VertexSet relies on ascending order.
using VertexSet = std::vector<Vertex>;

/// Undirected edge, stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Undirected simple graph over stable integer ids.
///
/// Values are immutable once built; every editing operation returns a new
/// graph in which surviving vertices keep their ids.
class Graph {
public:
    Graph() = default;

    /// Throws GraphError on self-loops, duplicate edges or endpoints that
    /// are not listed in `vertices`.
    Graph(VertexSet vertices, std::span<const Edge> edges);

    /// Vertices 0..n-1.
    static Graph with_vertices(int n, std::span<const Edge> edges);

    const VertexSet& vertices() const noexcept { return ids_; }
    std::size_t order() const noexcept { return ids_.size(); }
    std::size_t size() const noexcept { return edge_count_; }
    bool empty() const noexcept { return ids_.empty(); }

    bool contains(Vertex v) const noexcept;
    const VertexSet& neighbors(Vertex v) const;
    std::size_t degree(Vertex v) const { return neighbors(v).size(); }
    bool adjacent(Vertex a, Vertex b) const;

    /// All edges, ascending.
    std::vector<Edge> edges() const;

    /// Position of v in vertices(); throws GraphError if absent.
    std::size_t index_of(Vertex v) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    VertexSet ids_;
    std::vector<VertexSet> adj_;
    std::size_t edge_count_ = 0;
};

// Set helpers over sorted vectors.
VertexSet make_set(std::vector<Vertex> xs);
bool set_contains(const VertexSet& s, Vertex v);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
bool is_subset(const VertexSet& a, const VertexSet& b);

// Editing. All throw GraphError when given ids or edges not in g.
Graph induced_subgraph(const Graph& g, const VertexSet& x);
Graph delete_vertices(const Graph& g, const VertexSet& x);
Graph delete_vertex(const Graph& g, Vertex v);
Graph delete_edges(const Graph& g, std::span<const Edge> t);
/// Adds edges between existing vertices; edges already present are skipped.
Graph add_edges(const Graph& g, std::span<const Edge> t);

// Neighborhoods.
/// N(X): vertices outside X adjacent to some vertex of X.
VertexSet open_neighborhood(const Graph& g, const VertexSet& x);
/// N[X] = N(X) ∪ X.
VertexSet closed_neighborhood(const Graph& g, const VertexSet& x);
VertexSet closed_neighborhood(const Graph& g, Vertex v);
/// N(v) ∩ X.
VertexSet neighbors_in(const Graph& g, Vertex v, const VertexSet& x);

bool is_clique(const Graph& g, const VertexSet& x);
bool is_independent(const Graph& g, const VertexSet& x);
bool is_complete(const Graph& g);

/// x and y must be disjoint; throws GraphError otherwise.
bool is_complete_to(const Graph& g, const VertexSet& x, const VertexSet& y);
bool is_anticomplete_to(const Graph& g, const VertexSet& x, const VertexSet& y);

/// Connected components, each ascending, listed by smallest member.
std::vector<VertexSet> components(const Graph& g);
bool is_connected(const Graph& g);
bool is_forest(const Graph& g);

/// Maximal classes of pairwise true twins of g[scope] (equal closed
/// neighborhoods inside scope), listed by smallest member.
std::vector<VertexSet> true_twin_partition(const Graph& g, const VertexSet& scope);
std::vector<VertexSet> true_twin_partition(const Graph& g);

// Named graphs on ids 0..n-1.
Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_bipartite(int a, int b);

std::string to_string(const Graph& g);

}  // namespace tlp
