#include <algorithm>
#include <array>

#include "rules_common.hpp"
#include "tlp/rules.hpp"

namespace tlp {

namespace {

constexpr std::array<const char*, 10> kStepNames{"R1", "R2", "R3", "R4", "R5", "R6", "R7", "R8", "GoodModulator", "Terminal"};

bool is_twin_set_in(const Graph& g, const VertexSet& x, const VertexSet& scope) {
    if (x.size() < 2) return true;
    VertexSet first = neighbors_in(g, x.front(), scope);
    first.insert(std::lower_bound(first.begin(), first.end(), x.front()), x.front());
    for (std::size_t i = 1; i < x.size(); ++i) {
        VertexSet other = neighbors_in(g, x[i], scope);
        other.insert(std::lower_bound(other.begin(), other.end(), x[i]), x[i]);
        if (other != first) return false;
    }
    return true;
}

}  // namespace

std::string to_string(Step s) { return kStepNames[static_cast<std::size_t>(s)]; }

std::optional<Step> step_from_string(const std::string& s) {
    for (std::size_t i = 0; i < kStepNames.size(); ++i)
        if (s == kStepNames[i]) return static_cast<Step>(i);
    return std::nullopt;
}

bool is_split(const Graph& g, const SplitCandidate& cand) {
    if (cand.a.size() < 2 || cand.b.size() < 2) return false;
    if (!set_intersection(cand.a, cand.b).empty() || set_union(cand.a, cand.b) != g.vertices()) return false;
    return is_complete_to(g, open_neighborhood(g, cand.a), open_neighborhood(g, cand.b));
}

bool is_complete_split(const Graph& g, const SplitCandidate& cand) {
    return is_split(g, cand) && is_clique(g, set_union(open_neighborhood(g, cand.a), open_neighborhood(g, cand.b)));
}

bool is_blocking_pair(const Graph& g, const VertexSet& x, Vertex v, Vertex w) {
    if (v == w) throw std::invalid_argument("blocking pair needs two distinct vertices");
    const VertexSet nx = open_neighborhood(g, x);
    if (!set_contains(nx, v) || !set_contains(nx, w)) throw std::invalid_argument("blocking pair must lie in N(X)");
    const VertexSet nv = neighbors_in(g, v, x);
    return !(g.adjacent(v, w) && nv == neighbors_in(g, w, x) && is_clique(g, nv));
}

ModulatorSides partition_s_plus_minus(const Graph& g, const VertexSet& s) {
    const Graph rest = delete_vertices(g, s);
    const auto comps = components(rest);
    ModulatorSides out;
    for (Vertex v : s) {
        bool plus = true;
        for (const VertexSet& c : comps)
            if (!is_twin_set_in(g, neighbors_in(g, v, c), c)) {
                plus = false;
                break;
            }
        (plus ? out.plus : out.minus).push_back(v);
    }
    return out;
}

MarkingGraphQ build_marking_graph(const Graph& g, const VertexSet& s) {
    const ModulatorSides sides = partition_s_plus_minus(g, s);
    MarkingGraphQ q;
    for (std::size_t i = 0; i < sides.plus.size(); ++i)
        for (std::size_t j = i + 1; j < sides.plus.size(); ++j) q.pairs.emplace_back(sides.plus[i], sides.plus[j]);

    for (const VertexSet& c : components(delete_vertices(g, s))) {
        if (c.size() < 2) continue;
        if (!set_intersection(open_neighborhood(g, c), sides.minus).empty()) continue;
        const VertexSet nc = open_neighborhood(g, c);
        std::vector<int> adj;
        for (std::size_t p = 0; p < q.pairs.size(); ++p) {
            const auto [v, w] = q.pairs[p];
            const int base = static_cast<int>(p) * 3;
            if (set_contains(nc, v) && set_contains(nc, w) && is_blocking_pair(g, c, v, w)) adj.push_back(base);
            bool common = false, hanging = false;
            for (Vertex x : c) {
                if (!g.adjacent(x, v) || !g.adjacent(x, w)) continue;
                common = true;
                for (Vertex y : neighbors_in(g, x, c))
                    if (!g.adjacent(y, v) && !g.adjacent(y, w)) hanging = true;
            }
            if (common) adj.push_back(base + 1);
            if (hanging) adj.push_back(base + 2);
        }
        q.components.push_back(c);
        q.adjacency.push_back(std::move(adj));
    }
    return q;
}

CappedMatching greedy_capped_matching(const MarkingGraphQ& q, int cap) {
    CappedMatching m;
    m.cap = cap;
    std::vector<int> load(static_cast<std::size_t>(q.left_size()), 0);
    for (std::size_t r = 0; r < q.components.size(); ++r)
        for (int l : q.adjacency[r])
            if (load[static_cast<std::size_t>(l)] < cap) {
                ++load[static_cast<std::size_t>(l)];
                m.edges.emplace_back(l, static_cast<int>(r));
                break;
            }
    return m;
}

bool is_capped_matching(const MarkingGraphQ& q, const CappedMatching& m) {
    std::vector<int> load(static_cast<std::size_t>(q.left_size()), 0);
    std::vector<int> right(q.components.size(), 0);
    for (auto [l, r] : m.edges) {
        if (l < 0 || l >= q.left_size() || r < 0 || static_cast<std::size_t>(r) >= q.components.size()) return false;
        const auto& adj = q.adjacency[static_cast<std::size_t>(r)];
        if (!std::binary_search(adj.begin(), adj.end(), l)) return false;
        if (++load[static_cast<std::size_t>(l)] > m.cap || ++right[static_cast<std::size_t>(r)] > 1) return false;
    }
    return true;
}

bool is_maximal_capped_matching(const MarkingGraphQ& q, const CappedMatching& m) {
    if (!is_capped_matching(q, m)) return false;
    std::vector<int> load(static_cast<std::size_t>(q.left_size()), 0);
    std::vector<char> matched(q.components.size(), 0);
    for (auto [l, r] : m.edges) {
        ++load[static_cast<std::size_t>(l)];
        matched[static_cast<std::size_t>(r)] = 1;
    }
    for (std::size_t r = 0; r < q.components.size(); ++r) {
        if (matched[r]) continue;
        for (int l : q.adjacency[r])
            if (load[static_cast<std::size_t>(l)] < m.cap) return false;
    }
    return true;
}

std::optional<RuleApplication> detach_unmatched_component(const Graph& g, int k, const VertexSet& s) {
    detail::require_rule_inputs(g, k, s, "detach_unmatched_component");
    const MarkingGraphQ q = build_marking_graph(g, s);
    const CappedMatching m = greedy_capped_matching(q, k + 2);
    std::vector<char> matched(q.components.size(), 0);
    for (auto [l, r] : m.edges) matched[static_cast<std::size_t>(r)] = 1;
    for (std::size_t r = 0; r < q.components.size(); ++r) {
        if (matched[r]) continue;
        const VertexSet& u = q.components[r];
        RuleApplication out;
        out.rule = Step::R2;
        out.deleted_edges = induced_subgraph(g, u).edges();
        out.result = Instance{delete_edges(g, out.deleted_edges), k};
        out.note = "component " + detail::describe(u) + " unmatched";
        return out;
    }
    return std::nullopt;
}

}  // namespace tlp
