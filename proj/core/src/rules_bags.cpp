#include <algorithm>

#include "rules_common.hpp"
#include "tlp/recognition.hpp"
#include "tlp/rules.hpp"

namespace tlp {

std::vector<BagChain> find_bag_chains(const Graph& g, const VertexSet& s) {
    const TreeCliqueDecomposition d = tree_clique_decomposition(delete_vertices(g, s));
    const Graph& f = d.forest;
    const std::size_t nodes = d.bags.size();
    std::vector<char> inner(nodes, 0);
    for (std::size_t u = 0; u < nodes; ++u) {
        const Vertex node = static_cast<Vertex>(u);
        inner[u] = f.degree(node) == 2 && set_intersection(open_neighborhood(g, d.bags[u]), s).empty();
    }
    auto inner_neighbors = [&](Vertex u) {
        std::vector<Vertex> out;
        for (Vertex w : f.neighbors(u))
            if (inner[static_cast<std::size_t>(w)]) out.push_back(w);
        return out;
    };

    std::vector<BagChain> chains;
    std::vector<char> seen(nodes, 0);
    for (std::size_t start = 0; start < nodes; ++start) {
        if (!inner[start] || seen[start]) continue;
        // Walk to one end of the run, then collect it in order.
        Vertex end = static_cast<Vertex>(start), prev = -1;
        for (;;) {
            Vertex next = -1;
            for (Vertex w : inner_neighbors(end))
                if (w != prev) next = w;
            if (next < 0 || next == static_cast<Vertex>(start)) break;
            prev = end;
            end = next;
        }
        std::vector<Vertex> run{end};
        prev = -1;
        for (Vertex cur = end;;) {
            Vertex next = -1;
            for (Vertex w : inner_neighbors(cur))
                if (w != prev) next = w;
            if (next < 0) break;
            run.push_back(next);
            prev = cur;
            cur = next;
        }
        for (Vertex u : run) seen[static_cast<std::size_t>(u)] = 1;
        if (run.size() < 4) continue;

        auto outer = [&](Vertex u, Vertex along) {
            for (Vertex w : f.neighbors(u))
                if (w != along) return w;
            return Vertex{-1};
        };
        std::vector<Vertex> path{outer(run.front(), run[1])};
        path.insert(path.end(), run.begin(), run.end());
        path.push_back(outer(run.back(), run[run.size() - 2]));
        if (d.bags[static_cast<std::size_t>(path[path.size() - 2])].front() < d.bags[static_cast<std::size_t>(path[1])].front())
            std::reverse(path.begin(), path.end());

        BagChain chain;
        for (Vertex u : path) chain.bags.push_back(d.bags[static_cast<std::size_t>(u)]);
        chain.keep = 2;
        for (std::size_t i = 3; i + 2 < chain.bags.size(); ++i)
            if (chain.bags[i].size() < chain.bags[chain.keep].size()) chain.keep = i;
        chains.push_back(std::move(chain));
    }
    return chains;
}

std::optional<RuleApplication> contract_bag_chain(const Graph& g, int k, const VertexSet& s) {
    detail::require_rule_inputs(g, k, s, "contract_bag_chain");
    const auto chains = find_bag_chains(g, s);
    if (chains.empty()) return std::nullopt;
    const BagChain& c = chains.front();
    const std::size_t m = c.bags.size();

    RuleApplication out;
    out.rule = Step::R8;
    for (std::size_t i = 2; i + 2 < m; ++i)
        if (i != c.keep) out.deleted_vertices = set_union(out.deleted_vertices, c.bags[i]);
    const VertexSet ends = set_union(c.bags[1], c.bags[m - 2]);
    for (Vertex x : c.bags[c.keep])
        for (Vertex y : ends)
            if (!g.adjacent(x, y)) out.added_edges.emplace_back(x, y);
    std::sort(out.added_edges.begin(), out.added_edges.end());
    out.result = Instance{add_edges(delete_vertices(g, out.deleted_vertices), out.added_edges), k};
    out.note = "chain of " + std::to_string(m) + " bags, keeping " + detail::describe(c.bags[c.keep]);
    return out;
}

std::optional<RuleApplication> apply_rule(Step rule, const Graph& g, int k, const VertexSet& s) {
    switch (rule) {
        case Step::R2: return detach_unmatched_component(g, k, s);
        case Step::R3: return prune_isolated_vertices(g, k, s);
        case Step::R4: return prune_complete_component(g, k, s);
        case Step::R5: return shrink_twin_class(g, k, s);
        case Step::R6: return trim_unattached_branch(g, k, s);
        case Step::R7: return drop_parallel_component(g, k, s);
        case Step::R8: return contract_bag_chain(g, k, s);
        default: throw std::invalid_argument("apply_rule handles R2 through R8 only");
    }
}

}  // namespace tlp
