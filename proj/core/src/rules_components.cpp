#include <algorithm>
#include <array>
#include <map>

#include "rules_common.hpp"
#include "tlp/rules.hpp"

namespace tlp {

namespace {

// Marks, for every T ⊆ S with 2 <= |T| <= 4 and every trace A ⊆ T, the first
// `cap` vertices of `pool` (ascending) whose neighborhood in T is exactly A.
// Only T ∩ N(pool) affects the traces, so T is enumerated through that part
// and padded with untouched vertices of S when needed.
class TraceMarker {
public:
    TraceMarker(const Graph& g, const VertexSet& pool, const VertexSet& s, int cap)
        : g_(g), pool_(pool), cap_(cap), marked_(pool.size(), 0) {
        relevant_ = set_intersection(s, open_neighborhood(g, pool));
        spare_ = s.size() - relevant_.size();
    }

    std::vector<char> run() {
        std::vector<Vertex> t;
        enumerate(0, t);
        return marked_;
    }

private:
    bool all_marked() const { return unmarked_ == 0; }

    void enumerate(std::size_t from, std::vector<Vertex>& t) {
        if (all_marked()) return;
        if (t.size() >= 2 || t.size() + spare_ >= 2) mark_for(t);
        if (t.size() == 4) return;
        for (std::size_t i = from; i < relevant_.size() && !all_marked(); ++i) {
            t.push_back(relevant_[i]);
            enumerate(i + 1, t);
            t.pop_back();
        }
    }

    void mark_for(const std::vector<Vertex>& t) {
        std::array<int, 16> taken{};
        for (std::size_t i = 0; i < pool_.size(); ++i) {
            unsigned trace = 0;
            for (std::size_t j = 0; j < t.size(); ++j)
                if (g_.adjacent(pool_[i], t[j])) trace |= 1u << j;
            if (taken[trace] >= cap_) continue;
            ++taken[trace];
            if (!marked_[i]) {
                marked_[i] = 1;
                --unmarked_;
            }
        }
    }

    const Graph& g_;
    const VertexSet& pool_;
    int cap_;
    std::vector<char> marked_;
    std::size_t unmarked_ = pool_.size();
    VertexSet relevant_;
    std::size_t spare_ = 0;
};

std::optional<Vertex> first_unmarked(const Graph& g, const VertexSet& pool, const VertexSet& s, int cap) {
    const auto marked = TraceMarker(g, pool, s, cap).run();
    for (std::size_t i = 0; i < pool.size(); ++i)
        if (!marked[i]) return pool[i];
    return std::nullopt;
}

}  // namespace

std::optional<RuleApplication> prune_isolated_vertices(const Graph& g, int k, const VertexSet& s) {
    detail::require_rule_inputs(g, k, s, "prune_isolated_vertices");
    VertexSet isolated;
    for (const VertexSet& c : components(delete_vertices(g, s)))
        if (c.size() == 1) isolated.push_back(c.front());
    isolated = make_set(std::move(isolated));
    if (s.size() >= 2 && isolated.size() <= static_cast<std::size_t>(k) + 3) return std::nullopt;
    auto u = first_unmarked(g, isolated, s, k + 3);
    if (!u) return std::nullopt;
    return detail::vertex_deletion(Step::R3, g, k, VertexSet{*u}, "isolated vertex " + std::to_string(*u) + " unmarked");
}

std::optional<RuleApplication> prune_complete_component(const Graph& g, int k, const VertexSet& s) {
    detail::require_rule_inputs(g, k, s, "prune_complete_component");
    const Graph rest = delete_vertices(g, s);
    for (const VertexSet& c : components(rest)) {
        if (s.size() >= 2 && c.size() <= static_cast<std::size_t>(k) + 3) continue;
        if (!is_clique(rest, c)) continue;
        if (auto u = first_unmarked(g, c, s, k + 3))
            return detail::vertex_deletion(Step::R4, g, k, VertexSet{*u},
                                           "vertex " + std::to_string(*u) + " of complete component " + detail::describe(c) + " unmarked");
    }
    return std::nullopt;
}

std::optional<RuleApplication> shrink_twin_class(const Graph& g, int k, const VertexSet& s) {
    detail::require_rule_inputs(g, k, s, "shrink_twin_class", false);
    for (const VertexSet& cls : true_twin_partition(g)) {
        const VertexSet outside = set_difference(cls, s);
        if (outside.size() >= static_cast<std::size_t>(k) + 2)
            return detail::vertex_deletion(Step::R5, g, k, VertexSet{outside.back()}, "twin class " + detail::describe(outside));
    }
    return std::nullopt;
}

std::optional<RuleApplication> trim_unattached_branch(const Graph& g, int k, const VertexSet& s) {
    detail::require_rule_inputs(g, k, s, "trim_unattached_branch");
    const Graph rest = delete_vertices(g, s);
    for (const VertexSet& bag : true_twin_partition(rest)) {
        const VertexSet nb = open_neighborhood(g, bag);
        for (const VertexSet& d : components(delete_vertices(rest, bag))) {
            if (!set_intersection(open_neighborhood(g, d), s).empty()) continue;
            VertexSet cut = set_difference(d, nb);
            if (cut.empty()) continue;
            return detail::vertex_deletion(Step::R6, g, k, std::move(cut),
                                           "branch " + detail::describe(d) + " off bag " + detail::describe(bag));
        }
    }
    return std::nullopt;
}

std::optional<RuleApplication> drop_parallel_component(const Graph& g, int k, const VertexSet& s) {
    detail::require_rule_inputs(g, k, s, "drop_parallel_component");
    const Graph rest = delete_vertices(g, s);
    for (const VertexSet& bag : true_twin_partition(rest)) {
        const VertexSet nb = open_neighborhood(g, bag);
        // (neighborhood, inside N(B)) -> components in ascending order
        std::map<std::pair<VertexSet, bool>, std::vector<VertexSet>> groups;
        for (const VertexSet& d : components(delete_vertices(rest, bag))) {
            const std::size_t hit = set_intersection(d, nb).size();
            if (hit == 0) continue;
            groups[{open_neighborhood(g, d), hit == d.size()}].push_back(d);
        }
        for (const auto& [key, ds] : groups) {
            if (ds.size() < static_cast<std::size_t>(k) + 4) continue;
            return detail::vertex_deletion(Step::R7, g, k, ds.front(),
                                           std::to_string(ds.size()) + " parallel components at bag " + detail::describe(bag));
        }
    }
    return std::nullopt;
}

}  // namespace tlp
