#include <algorithm>
#include <array>

#include "dense.hpp"
#include "tlp/recognition.hpp"

namespace tlp {

namespace {

// Role-ordered obstruction on the vertices `xs` (4 or 5 of them), given a
// symmetric adjacency predicate. Returns nullopt for non-obstructions.
template <typename Adj>
std::optional<Obstruction> classify(const std::vector<Vertex>& xs, Adj adj) {
    const std::size_t n = xs.size();
    if (n != 4 && n != 5) return std::nullopt;
    std::array<int, 5> deg{};
    int edges = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (adj(i, j)) {
                ++deg[i];
                ++deg[j];
                ++edges;
            }
    auto with_degree = [&](int d) {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < n; ++i)
            if (deg[i] == d) out.push_back(i);
        return out;
    };
    auto other_neighbor = [&](std::size_t of, std::size_t not1, std::size_t not2) {
        for (std::size_t j = 0; j < n; ++j)
            if (j != of && j != not1 && j != not2 && adj(of, j)) return j;
        return n;
    };

    if (with_degree(2).size() == n && static_cast<std::size_t>(edges) == n) {
        // 2-regular on 4 or 5 vertices is a single cycle.
        std::vector<Vertex> cyc;
        std::size_t start = 0;
        for (std::size_t i = 1; i < n; ++i)
            if (xs[i] < xs[start]) start = i;
        std::size_t a = n, b = n;
        for (std::size_t j = 0; j < n; ++j)
            if (j != start && adj(start, j)) (a == n ? a : b) = j;
        std::size_t prev = start, cur = xs[a] < xs[b] ? a : b;
        cyc.push_back(xs[start]);
        while (cur != start) {
            cyc.push_back(xs[cur]);
            const std::size_t nxt = other_neighbor(cur, prev, n);
            prev = cur;
            cur = nxt;
        }
        return Obstruction{ObstructionKind::Hole, std::move(cyc)};
    }
    if (n != 5) return std::nullopt;

    const auto d1 = with_degree(1), d2 = with_degree(2), d3 = with_degree(3), d4 = with_degree(4);
    if (edges == 5 && d1.size() == 2 && d2.size() == 1 && d3.size() == 2) {
        std::size_t p1 = d1[0], p2 = d1[1];
        if (xs[p2] < xs[p1]) std::swap(p1, p2);
        const std::size_t b1 = other_neighbor(p1, n, n);
        const std::size_t b2 = other_neighbor(p2, n, n);
        if (b1 == b2 || !adj(b1, b2) || !adj(d2[0], b1) || !adj(d2[0], b2)) return std::nullopt;
        return Obstruction{ObstructionKind::Bull, {xs[p1], xs[b1], xs[b2], xs[p2], xs[d2[0]]}};
    }
    if (edges == 6 && d1.size() == 1 && d2.size() == 2 && d3.size() == 1 && d4.size() == 1) {
        std::size_t a0 = d2[0], a2 = d2[1];
        if (xs[a2] < xs[a0]) std::swap(a0, a2);
        return Obstruction{ObstructionKind::Dart, {xs[d4[0]], xs[a0], xs[d3[0]], xs[a2], xs[d1[0]]}};
    }
    if (edges == 7 && d2.size() == 2 && d3.size() == 2 && d4.size() == 1) {
        const std::size_t c = d4[0];
        std::size_t x0 = d2[0], x3 = d2[1];
        if (xs[x3] < xs[x0]) std::swap(x0, x3);
        const std::size_t x1 = other_neighbor(x0, c, n);
        const std::size_t x2 = other_neighbor(x3, c, n);
        if (x1 == n || x2 == n || x1 == x2) return std::nullopt;
        return Obstruction{ObstructionKind::Gem, {xs[c], xs[x0], xs[x1], xs[x2], xs[x3]}};
    }
    return std::nullopt;
}

// Enumerates connected induced subgraphs of size 4 and 5 whose smallest
// index is `root` (ESU scheme: each set is visited exactly once).
class RootedSearch {
public:
    RootedSearch(const detail::DenseAdjacency& a, int root) : a_(a), root_(root) {}

    std::optional<Obstruction> run() {
        sub_.assign(1, root_);
        std::vector<int> ext;
        for (int u : a_.nbrs(root_))
            if (u > root_) ext.push_back(u);
        extend(ext);
        return best_;
    }

private:
    void consider() {
        std::vector<Vertex> ids;
        for (int i : sub_) ids.push_back(a_.id(i));
        auto h = classify(ids, [&](std::size_t i, std::size_t j) { return a_.adj(sub_[i], sub_[j]); });
        if (!h) return;
        std::vector<Vertex> key = make_set(ids);
        if (!best_ || key < best_key_) {
            best_key_ = std::move(key);
            best_ = std::move(h);
        }
    }

    bool in_closed_sub(int u) const {
        for (int s : sub_)
            if (s == u || a_.adj(s, u)) return true;
        return false;
    }

    void extend(std::vector<int> ext) {
        if (sub_.size() >= 4) consider();
        if (sub_.size() == 5) return;
        while (!ext.empty()) {
            const int w = ext.back();
            ext.pop_back();
            std::vector<int> next = ext;
            for (int u : a_.nbrs(w))
                if (u > root_ && !in_closed_sub(u)) next.push_back(u);
            sub_.push_back(w);
            extend(std::move(next));
            sub_.pop_back();
        }
    }

    const detail::DenseAdjacency& a_;
    int root_;
    std::vector<int> sub_;
    std::vector<Vertex> best_key_;
    std::optional<Obstruction> best_;
};

}  // namespace

std::optional<Obstruction> classify_small(const Graph& g, const VertexSet& x) {
    return classify(x, [&](std::size_t i, std::size_t j) { return g.adjacent(x[i], x[j]); });
}

std::optional<Obstruction> find_small_obstruction(const Graph& g) {
    if (g.order() < 4) return std::nullopt;
    detail::DenseAdjacency a(g);
    for (int r = 0; r < static_cast<int>(a.size()); ++r)
        if (auto h = RootedSearch(a, r).run()) return h;
    return std::nullopt;
}

}  // namespace tlp
