#include "tlp/recognition.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "dense.hpp"

namespace tlp {

std::string to_string(ObstructionKind kind) {
    switch (kind) {
        case ObstructionKind::Bull: return "bull";
        case ObstructionKind::Dart: return "dart";
        case ObstructionKind::Gem: return "gem";
        case ObstructionKind::Hole: return "hole";
    }
    return "?";
}

std::string to_string(const Obstruction& h) {
    std::string out = to_string(h.kind) + "(";
    for (std::size_t i = 0; i < h.vertices.size(); ++i) out += (i ? "," : "") + std::to_string(h.vertices[i]);
    return out + ")";
}

NotLeafPower::NotLeafPower(Obstruction witness)
    : std::runtime_error("not a 3-leaf power: " + to_string(witness)), witness_(std::move(witness)) {}

namespace {

std::vector<Vertex> normalize_cycle(std::vector<Vertex> cyc) {
    auto min_it = std::min_element(cyc.begin(), cyc.end());
    std::rotate(cyc.begin(), min_it, cyc.end());
    if (cyc.size() > 2 && cyc.back() < cyc[1]) std::reverse(cyc.begin() + 1, cyc.end());
    return cyc;
}

bool is_induced_cycle(const Graph& g, const std::vector<Vertex>& cyc) {
    const std::size_t n = cyc.size();
    if (n < 4 || make_set(cyc).size() != n) return false;
    for (Vertex v : cyc)
        if (!g.contains(v)) return false;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const bool consecutive = j == i + 1 || (i == 0 && j == n - 1);
            if (g.adjacent(cyc[i], cyc[j]) != consecutive) return false;
        }
    return true;
}

// Shortest x-y path whose interior avoids `blocked`, using neighbors in
// ascending order so the result is deterministic. Empty if none.
std::vector<Vertex> shortest_path_avoiding(const Graph& g, Vertex x, Vertex y, const VertexSet& blocked) {
    std::map<Vertex, Vertex> parent;
    std::deque<Vertex> queue{x};
    parent[x] = x;
    while (!queue.empty()) {
        const Vertex u = queue.front();
        queue.pop_front();
        for (Vertex w : g.neighbors(u)) {
            if (parent.count(w)) continue;
            if (w != y && set_contains(blocked, w)) continue;
            parent[w] = u;
            if (w == y) {
                std::vector<Vertex> path{y};
                for (Vertex c = y; c != x;) {
                    c = parent[c];
                    path.push_back(c);
                }
                std::reverse(path.begin(), path.end());
                return path;
            }
            queue.push_back(w);
        }
    }
    return {};
}

}  // namespace

bool is_valid_obstruction(const Graph& g, const Obstruction& h) {
    for (Vertex v : h.vertices)
        if (!g.contains(v)) return false;
    if (h.kind == ObstructionKind::Hole) return is_induced_cycle(g, h.vertices);
    if (h.vertices.size() != 5) return false;
    auto c = classify_small(g, h.vertex_set());
    return c && *c == h;
}

bool is_chordal(const Graph& g) {
    const detail::DenseAdjacency a(g);
    const int n = static_cast<int>(a.size());
    // Maximum cardinality search; number[v] counts down, so a higher number
    // means the vertex was visited earlier and sits later in the PEO.
    std::vector<int> weight(static_cast<std::size_t>(n), 0), number(static_cast<std::size_t>(n), -1);
    for (int step = n - 1; step >= 0; --step) {
        int pick = -1;
        for (int v = 0; v < n; ++v)
            if (number[v] < 0 && (pick < 0 || weight[v] > weight[pick])) pick = v;
        number[pick] = step;
        for (int w : a.nbrs(pick))
            if (number[w] < 0) ++weight[w];
    }
    for (int v = 0; v < n; ++v) {
        int parent = -1;
        for (int w : a.nbrs(v))
            if (number[w] > number[v] && (parent < 0 || number[w] < number[parent])) parent = w;
        if (parent < 0) continue;
        for (int w : a.nbrs(v))
            if (number[w] > number[v] && w != parent && !a.adj(w, parent)) return false;
    }
    return true;
}

std::optional<Obstruction> find_hole_through(const Graph& g, Vertex v) {
    const VertexSet& nb = g.neighbors(v);
    const VertexSet closed = closed_neighborhood(g, v);
    std::optional<std::vector<Vertex>> best;
    for (std::size_t i = 0; i < nb.size(); ++i) {
        for (std::size_t j = i + 1; j < nb.size(); ++j) {
            const Vertex x = nb[i], y = nb[j];
            if (g.adjacent(x, y)) continue;
            auto path = shortest_path_avoiding(g, x, y, closed);
            if (path.empty()) continue;
            if (!best || path.size() + 1 < best->size()) {
                path.insert(path.begin(), v);
                best = std::move(path);
            }
        }
    }
    if (!best) return std::nullopt;
    return Obstruction{ObstructionKind::Hole, normalize_cycle(std::move(*best))};
}

std::optional<Obstruction> find_hole(const Graph& g) {
    if (is_chordal(g)) return std::nullopt;
    for (Vertex v : g.vertices())
        if (auto h = find_hole_through(g, v)) return h;
    throw std::logic_error("chordality test and hole search disagree");
}

std::optional<Obstruction> find_obstruction(const Graph& g) {
    if (auto h = find_small_obstruction(g)) return h;
    return find_hole(g);
}

namespace {

// Twin classes of one connected, incomplete component and the adjacent class
// pairs (as indices). The component is a 3-leaf power iff these pairs form a tree.
struct Quotient {
    std::vector<VertexSet> classes;
    std::vector<std::pair<std::size_t, std::size_t>> links;
};

// class_of_index is scratch space of size g.order(), shared across components.
Quotient twin_quotient(const Graph& g, const VertexSet& comp, std::vector<std::size_t>& class_of_index) {
    Quotient q;
    q.classes = true_twin_partition(g, comp);
    for (std::size_t i = 0; i < q.classes.size(); ++i)
        for (Vertex v : q.classes[i]) class_of_index[g.index_of(v)] = i;
    for (std::size_t i = 0; i < q.classes.size(); ++i) {
        std::vector<std::size_t> next;
        for (Vertex w : g.neighbors(q.classes[i].front())) {
            const std::size_t j = class_of_index[g.index_of(w)];
            if (j > i) next.push_back(j);
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        for (std::size_t j : next) q.links.emplace_back(i, j);
        // A tree has fewer links than classes; stop early on dense inputs.
        if (q.links.size() >= q.classes.size()) break;
    }
    return q;
}

}  // namespace

bool is_three_leaf_power(const Graph& g) {
    std::vector<std::size_t> scratch(g.order());
    for (const VertexSet& comp : components(g)) {
        if (is_clique(g, comp)) continue;
        const Quotient q = twin_quotient(g, comp, scratch);
        if (q.links.size() + 1 != q.classes.size()) return false;
    }
    return true;
}

TreeCliqueDecomposition tree_clique_decomposition(const Graph& g) {
    std::vector<VertexSet> bags;
    std::vector<Edge> forest_edges;
    std::vector<std::pair<std::size_t, std::size_t>> bag_links;  // indices into `bags`
    std::vector<std::size_t> scratch(g.order());
    for (const VertexSet& comp : components(g)) {
        const Graph c = induced_subgraph(g, comp);
        if (is_complete(c)) {
            bags.push_back(comp);
            continue;
        }
        auto [classes, links] = twin_quotient(g, comp, scratch);
        const std::size_t base = bags.size();
        for (auto [i, j] : links) bag_links.emplace_back(base + i, base + j);
        if (links.size() + 1 != classes.size()) {
            auto witness = find_obstruction(c);
            if (!witness) throw std::logic_error("twin quotient is not a tree but no obstruction was found");
            throw NotLeafPower(std::move(*witness));
        }
        bags.insert(bags.end(), classes.begin(), classes.end());
    }

    // Renumber nodes by smallest bag member.
    std::vector<std::size_t> order(bags.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return bags[a].front() < bags[b].front(); });
    std::vector<int> node_of(bags.size());
    TreeCliqueDecomposition out;
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
        node_of[order[pos]] = static_cast<int>(pos);
        out.bags.push_back(bags[order[pos]]);
    }
    for (auto [a, b] : bag_links) forest_edges.emplace_back(node_of[a], node_of[b]);
    out.forest = Graph::with_vertices(static_cast<int>(out.bags.size()), forest_edges);
    return out;
}

Graph graph_from_decomposition(const TreeCliqueDecomposition& d) {
    VertexSet vs;
    std::vector<Edge> es;
    for (const VertexSet& bag : d.bags) {
        vs.insert(vs.end(), bag.begin(), bag.end());
        for (std::size_t i = 0; i < bag.size(); ++i)
            for (std::size_t j = i + 1; j < bag.size(); ++j) es.emplace_back(bag[i], bag[j]);
    }
    for (const Edge& e : d.forest.edges())
        for (Vertex x : d.bags[static_cast<std::size_t>(e.u)])
            for (Vertex y : d.bags[static_cast<std::size_t>(e.v)]) es.emplace_back(x, y);
    return Graph(make_set(std::move(vs)), es);
}

bool is_induced_path(const Graph& g, const std::vector<Vertex>& p) {
    if (p.empty() || make_set(p).size() != p.size()) return false;
    for (Vertex v : p)
        if (!g.contains(v)) return false;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (g.adjacent(p[i], p[j]) != (j == i + 1)) return false;
    return true;
}

bool apex_over_long_path(const Graph& g, const std::vector<Vertex>& p, Vertex v) {
    if (!is_induced_path(g, p)) throw std::invalid_argument("not an induced path");
    if (std::find(p.begin(), p.end(), v) != p.end()) throw std::invalid_argument("apex lies on the path");
    return p.size() >= 4 && g.adjacent(v, p.front()) && g.adjacent(v, p.back());
}

}  // namespace tlp
