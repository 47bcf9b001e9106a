#include <istream>
#include <ostream>
#include <string>

#include <json.hpp>

#include "tlp/kernel.hpp"

namespace tlp {

namespace {

using nlohmann::json;

json edges_json(const std::vector<Edge>& es) {
    json out = json::array();
    for (const Edge& e : es) out.push_back({e.u, e.v});
    return out;
}

std::vector<Edge> edges_from(const json& j) {
    std::vector<Edge> out;
    for (const auto& e : j) out.emplace_back(e.at(0).get<Vertex>(), e.at(1).get<Vertex>());
    return out;
}

const char* replacement_name(Replacement r) {
    switch (r) {
        case Replacement::K1: return "K1";
        case Replacement::K22: return "K22";
        case Replacement::None: break;
    }
    return nullptr;
}

ObstructionKind kind_from(const std::string& s) {
    for (auto k : {ObstructionKind::Bull, ObstructionKind::Dart, ObstructionKind::Gem, ObstructionKind::Hole})
        if (to_string(k) == s) return k;
    throw std::runtime_error("unknown obstruction kind '" + s + "'");
}

}  // namespace

void write_trace_jsonl(std::ostream& out, const RuleTrace& trace) {
    for (const TraceRecord& rec : trace) {
        json j = {
            {"type", "step"},
            {"step", to_string(rec.step)},
            {"k_before", rec.k_before},
            {"k_after", rec.k_after},
            {"n_before", rec.n_before},
            {"n_after", rec.n_after},
        };
        if (!rec.deleted_vertices.empty()) j["deleted_vertices"] = rec.deleted_vertices;
        if (!rec.deleted_edges.empty()) j["deleted_edges"] = edges_json(rec.deleted_edges);
        if (!rec.added_edges.empty()) j["added_edges"] = edges_json(rec.added_edges);
        if (!rec.modulator.empty()) j["modulator"] = rec.modulator;
        if (!rec.witnesses.empty()) {
            json ws = json::array();
            for (const Obstruction& h : rec.witnesses) ws.push_back({{"kind", to_string(h.kind)}, {"vertices", h.vertices}});
            j["witnesses"] = std::move(ws);
        }
        if (const char* r = replacement_name(rec.replacement)) j["replacement"] = r;
        if (!rec.note.empty()) j["note"] = rec.note;
        out << j.dump() << '\n';
    }
}

RuleTrace read_trace_jsonl(std::istream& in) {
    RuleTrace trace;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const json j = json::parse(line);
        if (j.value("type", "") != "step") continue;
        TraceRecord rec;
        const std::string name = j.at("step").get<std::string>();
        auto step = step_from_string(name);
        if (!step) throw std::runtime_error("unknown step '" + name + "'");
        rec.step = *step;
        rec.k_before = j.at("k_before").get<int>();
        rec.k_after = j.at("k_after").get<int>();
        rec.n_before = j.at("n_before").get<std::size_t>();
        rec.n_after = j.at("n_after").get<std::size_t>();
        if (j.contains("deleted_vertices")) rec.deleted_vertices = j["deleted_vertices"].get<VertexSet>();
        if (j.contains("deleted_edges")) rec.deleted_edges = edges_from(j["deleted_edges"]);
        if (j.contains("added_edges")) rec.added_edges = edges_from(j["added_edges"]);
        if (j.contains("modulator")) rec.modulator = j["modulator"].get<VertexSet>();
        if (j.contains("witnesses"))
            for (const auto& w : j["witnesses"])
                rec.witnesses.push_back(Obstruction{kind_from(w.at("kind").get<std::string>()), w.at("vertices").get<std::vector<Vertex>>()});
        if (j.contains("replacement")) rec.replacement = j["replacement"] == "K1" ? Replacement::K1 : Replacement::K22;
        rec.note = j.value("note", "");
        trace.push_back(std::move(rec));
    }
    return trace;
}

}  // namespace tlp
