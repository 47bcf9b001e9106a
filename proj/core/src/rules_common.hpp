#pragma once

#include <stdexcept>
#include <string>

#include "tlp/rules.hpp"

namespace tlp::detail {

inline void require_rule_inputs(const Graph& g, int k, const VertexSet& s, const char* rule, bool need_modulator = true) {
    if (k <= 0) throw std::invalid_argument(std::string(rule) + " requires k > 0");
    if (need_modulator && s.empty()) throw std::invalid_argument(std::string(rule) + " requires a non-empty modulator");
    for (Vertex v : s)
        if (!g.contains(v)) throw std::invalid_argument(std::string(rule) + ": modulator vertex " + std::to_string(v) + " not in graph");
}

inline RuleApplication vertex_deletion(Step rule, const Graph& g, int k, VertexSet deleted, std::string note) {
    RuleApplication out;
    out.rule = rule;
    out.result = Instance{delete_vertices(g, deleted), k};
    out.deleted_vertices = std::move(deleted);
    out.note = std::move(note);
    return out;
}

inline std::string describe(const VertexSet& xs) {
    std::string out = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
    return out + "}";
}

}  // namespace tlp::detail
