#include <algorithm>
#include <numeric>

#include "tlp/modulator.hpp"

namespace tlp {

Weight total_weight(const WeightedFvsInstance& inst, const VertexSet& s) {
    Weight sum = 0;
    for (Vertex v : s) sum += inst.weights.at(v);
    return sum;
}

namespace {

class LocalRatioFvs {
public:
    explicit LocalRatioFvs(const WeightedFvsInstance& inst) : ids_(inst.graph.vertices()) {
        const std::size_t n = ids_.size();
        adj_.resize(n);
        weight_.resize(n);
        alive_.assign(n, 1);
        for (std::size_t i = 0; i < n; ++i) {
            auto it = inst.weights.find(ids_[i]);
            if (it == inst.weights.end()) throw std::invalid_argument("missing weight for vertex " + std::to_string(ids_[i]));
            if (it->second < 0) throw std::invalid_argument("negative weight");
            weight_[i] = it->second;
            for (Vertex w : inst.graph.neighbors(ids_[i])) adj_[i].push_back(static_cast<int>(inst.graph.index_of(w)));
        }
    }

    VertexSet solve() {
        std::vector<int> picked;
        for (;;) {
            cleanup();
            if (std::none_of(alive_.begin(), alive_.end(), [](char a) { return a != 0; })) break;
            const auto cycle = semidisjoint_cycle();
            if (!cycle.empty()) {
                Weight gamma = weight_[static_cast<std::size_t>(cycle.front())];
                for (int u : cycle) gamma = std::min(gamma, weight_[static_cast<std::size_t>(u)]);
                for (int u : cycle) weight_[static_cast<std::size_t>(u)] -= gamma;
            } else {
                std::optional<Weight> gamma;
                for (std::size_t u = 0; u < ids_.size(); ++u) {
                    if (!alive_[u]) continue;
                    Weight ratio = weight_[u] / Weight(degree(static_cast<int>(u)) - 1);
                    if (!gamma || ratio < *gamma) gamma = ratio;
                }
                for (std::size_t u = 0; u < ids_.size(); ++u)
                    if (alive_[u]) weight_[u] -= *gamma * Weight(degree(static_cast<int>(u)) - 1);
            }
            for (std::size_t u = 0; u < ids_.size(); ++u)
                if (alive_[u] && weight_[u] == 0) {
                    alive_[u] = 0;
                    picked.push_back(static_cast<int>(u));
                }
        }

        // Reverse deletion: drop picks that later picks made redundant.
        std::vector<char> in_solution(ids_.size(), 0);
        for (int u : picked) in_solution[static_cast<std::size_t>(u)] = 1;
        for (auto it = picked.rbegin(); it != picked.rend(); ++it) {
            in_solution[static_cast<std::size_t>(*it)] = 0;
            if (!acyclic_without(in_solution)) in_solution[static_cast<std::size_t>(*it)] = 1;
        }
        VertexSet out;
        for (std::size_t u = 0; u < ids_.size(); ++u)
            if (in_solution[u]) out.push_back(ids_[u]);
        return out;
    }

private:
    int degree(int u) const {
        int d = 0;
        for (int w : adj_[static_cast<std::size_t>(u)]) d += alive_[static_cast<std::size_t>(w)];
        return d;
    }

    void cleanup() {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t u = 0; u < ids_.size(); ++u)
                if (alive_[u] && degree(static_cast<int>(u)) <= 1) {
                    alive_[u] = 0;
                    changed = true;
                }
        }
    }

    // Follows degree-2 vertices from `start` through `first`. Returns the
    // visited degree-2 vertices and the vertex the walk stopped at.
    std::pair<std::vector<int>, int> walk(int start, int first) const {
        std::vector<int> seen;
        int prev = start, cur = first;
        while (cur != start && degree(cur) == 2) {
            seen.push_back(cur);
            int next = -1;
            for (int w : adj_[static_cast<std::size_t>(cur)])
                if (alive_[static_cast<std::size_t>(w)] && w != prev) next = w;
            prev = cur;
            cur = next;
        }
        return {seen, cur};
    }

    // A cycle in which all but at most one vertex have degree 2; empty if
    // none exists. Assumes minimum degree 2.
    std::vector<int> semidisjoint_cycle() const {
        for (std::size_t v = 0; v < ids_.size(); ++v) {
            if (!alive_[v] || degree(static_cast<int>(v)) != 2) continue;
            std::vector<int> ends;
            for (int w : adj_[v])
                if (alive_[static_cast<std::size_t>(w)]) ends.push_back(w);
            auto [left, left_end] = walk(static_cast<int>(v), ends[0]);
            if (left_end == static_cast<int>(v)) {
                left.push_back(static_cast<int>(v));
                return left;
            }
            auto [right, right_end] = walk(static_cast<int>(v), ends[1]);
            if (left_end == right_end) {
                std::vector<int> cyc = left;
                cyc.insert(cyc.end(), right.begin(), right.end());
                cyc.push_back(static_cast<int>(v));
                cyc.push_back(left_end);
                return cyc;
            }
        }
        return {};
    }

    bool acyclic_without(const std::vector<char>& removed) const {
        std::vector<int> parent(ids_.size());
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[static_cast<std::size_t>(x)] != x) {
                parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
                x = parent[static_cast<std::size_t>(x)];
            }
            return x;
        };
        for (std::size_t u = 0; u < ids_.size(); ++u) {
            if (removed[u]) continue;
            for (int w : adj_[u]) {
                if (static_cast<std::size_t>(w) <= u || removed[static_cast<std::size_t>(w)]) continue;
                const int a = find(static_cast<int>(u)), b = find(w);
                if (a == b) return false;
                parent[static_cast<std::size_t>(a)] = b;
            }
        }
        return true;
    }

    VertexSet ids_;
    std::vector<std::vector<int>> adj_;
    std::vector<Weight> weight_;
    std::vector<char> alive_;
};

}  // namespace

std::optional<VertexSet> wfvs_2approx(const WeightedFvsInstance& inst) {
    if (inst.budget < 0) throw std::invalid_argument("negative budget");
    VertexSet fvs = LocalRatioFvs(inst).solve();
    if (total_weight(inst, fvs) > 2 * inst.budget) return std::nullopt;
    return fvs;
}

}  // namespace tlp
