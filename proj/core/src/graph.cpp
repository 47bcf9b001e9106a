#include "tlp/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

namespace tlp {

Graph::Graph(VertexSet vertices, std::span<const Edge> edges)
    : ids_(std::move(vertices)) {
    std::sort(ids_.begin(), ids_.end());
    if (std::adjacent_find(ids_.begin(), ids_.end()) != ids_.end())
        throw GraphError("duplicate vertex id");
    adj_.resize(ids_.size());
    for (const Edge& e : edges) {
        if (e.u == e.v) throw GraphError("self-loop at vertex " + std::to_string(e.u));
        const auto iu = index_of(e.u);
        const auto iv = index_of(e.v);
        adj_[iu].push_back(e.v);
        adj_[iv].push_back(e.u);
    }
    for (auto& nb : adj_) {
        std::sort(nb.begin(), nb.end());
        if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
            throw GraphError("duplicate edge");
        edge_count_ += nb.size();
    }
    edge_count_ /= 2;
}

Graph Graph::with_vertices(int n, std::span<const Edge> edges) {
    VertexSet ids(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) ids[static_cast<std::size_t>(i)] = i;
    return Graph(std::move(ids), edges);
}

bool Graph::contains(Vertex v) const noexcept {
    return std::binary_search(ids_.begin(), ids_.end(), v);
}

std::size_t Graph::index_of(Vertex v) const {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
    if (it == ids_.end() || *it != v) throw GraphError("unknown vertex id " + std::to_string(v));
    return static_cast<std::size_t>(it - ids_.begin());
}

const VertexSet& Graph::neighbors(Vertex v) const { return adj_[index_of(v)]; }

bool Graph::adjacent(Vertex a, Vertex b) const {
    const auto& nb = neighbors(a);
    return std::binary_search(nb.begin(), nb.end(), b);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (std::size_t i = 0; i < ids_.size(); ++i)
        for (Vertex w : adj_[i])
            if (ids_[i] < w) out.emplace_back(ids_[i], w);
    return out;
}

VertexSet make_set(std::vector<Vertex> xs) {
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return xs;
}

bool set_contains(const VertexSet& s, Vertex v) { return std::binary_search(s.begin(), s.end(), v); }

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool is_subset(const VertexSet& a, const VertexSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

Graph induced_subgraph(const Graph& g, const VertexSet& x) {
    for (Vertex v : x)
        if (!g.contains(v)) throw GraphError("unknown vertex id " + std::to_string(v));
    std::vector<Edge> es;
    for (Vertex v : x)
        for (Vertex w : g.neighbors(v))
            if (v < w && set_contains(x, w)) es.emplace_back(v, w);
    return Graph(x, es);
}

Graph delete_vertices(const Graph& g, const VertexSet& x) {
    for (Vertex v : x)
        if (!g.contains(v)) throw GraphError("unknown vertex id " + std::to_string(v));
    return induced_subgraph(g, set_difference(g.vertices(), x));
}

Graph delete_vertex(const Graph& g, Vertex v) { return delete_vertices(g, VertexSet{v}); }

Graph delete_edges(const Graph& g, std::span<const Edge> t) {
    std::vector<Edge> drop(t.begin(), t.end());
    std::sort(drop.begin(), drop.end());
    for (const Edge& e : drop)
        if (!g.contains(e.u) || !g.contains(e.v) || !g.adjacent(e.u, e.v))
            throw GraphError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " not present");
    std::vector<Edge> keep;
    for (const Edge& e : g.edges())
        if (!std::binary_search(drop.begin(), drop.end(), e)) keep.push_back(e);
    return Graph(g.vertices(), keep);
}

Graph add_edges(const Graph& g, std::span<const Edge> t) {
    std::vector<Edge> es = g.edges();
    for (const Edge& e : t) {
        if (!g.contains(e.u) || !g.contains(e.v))
            throw GraphError("edge endpoint not in graph");
        if (e.u == e.v) throw GraphError("self-loop at vertex " + std::to_string(e.u));
        es.push_back(e);
    }
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
    return Graph(g.vertices(), es);
}

VertexSet open_neighborhood(const Graph& g, const VertexSet& x) {
    std::vector<Vertex> out;
    for (Vertex v : x)
        for (Vertex w : g.neighbors(v))
            if (!set_contains(x, w)) out.push_back(w);
    return make_set(std::move(out));
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& x) {
    return set_union(open_neighborhood(g, x), x);
}

VertexSet closed_neighborhood(const Graph& g, Vertex v) {
    VertexSet out = g.neighbors(v);
    out.insert(std::lower_bound(out.begin(), out.end(), v), v);
    return out;
}

VertexSet neighbors_in(const Graph& g, Vertex v, const VertexSet& x) {
    return set_intersection(g.neighbors(v), x);
}

bool is_clique(const Graph& g, const VertexSet& x) {
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j)
            if (!g.adjacent(x[i], x[j])) return false;
    return true;
}

bool is_independent(const Graph& g, const VertexSet& x) {
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j)
            if (g.adjacent(x[i], x[j])) return false;
    return true;
}

bool is_complete(const Graph& g) {
    const auto n = g.order();
    return n == 0 || g.size() == n * (n - 1) / 2;
}

namespace {
void require_disjoint(const VertexSet& x, const VertexSet& y) {
    if (!set_intersection(x, y).empty()) throw GraphError("vertex sets overlap");
}
}  // namespace

bool is_complete_to(const Graph& g, const VertexSet& x, const VertexSet& y) {
    require_disjoint(x, y);
    for (Vertex a : x)
        for (Vertex b : y)
            if (!g.adjacent(a, b)) return false;
    return true;
}

bool is_anticomplete_to(const Graph& g, const VertexSet& x, const VertexSet& y) {
    require_disjoint(x, y);
    for (Vertex a : x)
        for (Vertex b : y)
            if (g.adjacent(a, b)) return false;
    return true;
}

std::vector<VertexSet> components(const Graph& g) {
    const auto& ids = g.vertices();
    std::vector<char> seen(ids.size(), 0);
    std::vector<VertexSet> out;
    for (std::size_t s = 0; s < ids.size(); ++s) {
        if (seen[s]) continue;
        VertexSet comp;
        std::deque<std::size_t> queue{s};
        seen[s] = 1;
        while (!queue.empty()) {
            const auto i = queue.front();
            queue.pop_front();
            comp.push_back(ids[i]);
            for (Vertex w : g.neighbors(ids[i])) {
                const auto j = g.index_of(w);
                if (!seen[j]) {
                    seen[j] = 1;
                    queue.push_back(j);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

bool is_forest(const Graph& g) { return g.size() + components(g).size() == g.order(); }

std::vector<VertexSet> true_twin_partition(const Graph& g, const VertexSet& scope) {
    // Key each vertex by its closed neighborhood inside scope.
    std::map<VertexSet, VertexSet> classes;
    for (Vertex v : scope) {
        VertexSet key = neighbors_in(g, v, scope);
        key.insert(std::lower_bound(key.begin(), key.end(), v), v);
        classes[std::move(key)].push_back(v);
    }
    std::vector<VertexSet> out;
    out.reserve(classes.size());
    for (auto& [key, members] : classes) out.push_back(std::move(members));
    std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) { return a.front() < b.front(); });
    return out;
}

std::vector<VertexSet> true_twin_partition(const Graph& g) { return true_twin_partition(g, g.vertices()); }

Graph complete_graph(int n) {
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
    return Graph::with_vertices(n, es);
}

Graph cycle_graph(int n) {
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
    return Graph::with_vertices(n, es);
}

Graph path_graph(int n) {
    std::vector<Edge> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    return Graph::with_vertices(n, es);
}

Graph complete_bipartite(int a, int b) {
    std::vector<Edge> es;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) es.emplace_back(i, a + j);
    return Graph::with_vertices(a + b, es);
}

std::string to_string(const Graph& g) {
    std::ostringstream os;
    os << "V={";
    for (std::size_t i = 0; i < g.vertices().size(); ++i) os << (i ? "," : "") << g.vertices()[i];
    os << "} E={";
    bool first = true;
    for (const Edge& e : g.edges()) {
        os << (first ? "" : ",") << e.u << "-" << e.v;
        first = false;
    }
    os << "}";
    return os.str();
}

}  // namespace tlp
