#include "tlp/kernel.hpp"

#include <algorithm>
#include <array>

#include "tlp/modulator.hpp"

namespace tlp {

using boost::multiprecision::cpp_int;

Instance constant_instance(Replacement r) {
    switch (r) {
        case Replacement::K1: return Instance{Graph::with_vertices(1, {}), 0};
        case Replacement::K22: {
            const std::vector<Edge> es{{0, 2}, {0, 3}, {1, 2}, {1, 3}};
            return Instance{Graph::with_vertices(4, es), 0};
        }
        case Replacement::None: break;
    }
    throw std::invalid_argument("no constant instance for Replacement::None");
}

namespace {

constexpr std::array kRuleOrder{Step::R2, Step::R3, Step::R4, Step::R5, Step::R6, Step::R7, Step::R8};

class Compressor {
public:
    explicit Compressor(const Instance& inst) : cur_(inst) {
        if (inst.k < 0) throw std::invalid_argument("negative budget");
        step_limit_ = inst.graph.order() + inst.graph.size() + static_cast<std::size_t>(inst.k) + 2;
    }

    CompressResult run() {
        for (;;) {
            if (++steps_ > step_limit_) throw InvariantViolation("compress exceeded its step bound");
            if (cur_.k == 0) return finish(is_three_leaf_power(cur_.graph) ? Replacement::K1 : Replacement::K22, "budget exhausted");

            GoodModulatorResult gm = build_good_modulator(cur_.graph, cur_.k);
            Graph g = cur_.graph;
            int k = cur_.k;
            for (const ForcedDeletion& del : gm.trace.deletions) {
                TraceRecord rec = start(Step::R1, g, k);
                g = delete_vertex(g, del.vertex);
                k -= 1;
                rec.deleted_vertices = {del.vertex};
                rec.witnesses = del.witnesses;
                rec.note = del.witnesses.empty() ? "every small solution contains this vertex" : "flower center";
                close(rec, g, k);
            }
            if (!(Instance{g, k} == gm.instance)) throw InvariantViolation("recorded deletions do not reproduce the reduced instance");
            cur_ = gm.instance;
            if (gm.no_instance) return finish(Replacement::K22, "no modulator within budget");

            TraceRecord rec = start(Step::GoodModulator, cur_.graph, cur_.k);
            rec.modulator = gm.good_modulator;
            close(rec, cur_.graph, cur_.k);
            if (gm.good_modulator.size() <= static_cast<std::size_t>(cur_.k)) return finish(Replacement::K1, "modulator within budget");
            if (!gm.trace.deletions.empty()) continue;

            bool applied = false;
            for (Step rule : kRuleOrder) {
                auto app = apply_rule(rule, cur_.graph, cur_.k, gm.good_modulator);
                if (!app) continue;
                TraceRecord r = start(rule, cur_.graph, cur_.k);
                r.deleted_vertices = app->deleted_vertices;
                r.deleted_edges = app->deleted_edges;
                r.added_edges = app->added_edges;
                r.note = app->note;
                cur_ = std::move(app->result);
                close(r, cur_.graph, cur_.k);
                applied = true;
                break;
            }
            if (!applied) {
                CompressResult out = finish(Replacement::None, "no rule applies");
                out.modulator = gm.good_modulator;
                out.trace.back().modulator = gm.good_modulator;
                return out;
            }
        }
    }

private:
    static TraceRecord start(Step step, const Graph& g, int k) {
        TraceRecord rec;
        rec.step = step;
        rec.k_before = k;
        rec.n_before = g.order();
        return rec;
    }

    void close(TraceRecord& rec, const Graph& g, int k) {
        rec.k_after = k;
        rec.n_after = g.order();
        if (rec.k_after > rec.k_before || rec.n_after > rec.n_before) throw InvariantViolation("a step grew the instance");
        trace_.push_back(std::move(rec));
    }

    CompressResult finish(Replacement r, std::string note) {
        TraceRecord rec = start(Step::Terminal, cur_.graph, cur_.k);
        rec.replacement = r;
        rec.note = std::move(note);
        if (r != Replacement::None) cur_ = constant_instance(r);
        close(rec, cur_.graph, cur_.k);
        return CompressResult{cur_, std::move(trace_), {}};
    }

    Instance cur_;
    RuleTrace trace_;
    std::size_t steps_ = 0;
    std::size_t step_limit_ = 0;
};

cpp_int pow_int(const cpp_int& base, unsigned e) {
    cpp_int out = 1;
    for (unsigned i = 0; i < e; ++i) out *= base;
    return out;
}

}  // namespace

CompressResult compress(const Instance& inst) { return Compressor(inst).run(); }

Instance replay(const Instance& input, const RuleTrace& trace) {
    Instance cur = input;
    for (const TraceRecord& rec : trace) {
        if (rec.k_before != cur.k || rec.n_before != cur.graph.order())
            throw InvariantViolation(to_string(rec.step) + " record does not match the running instance");
        try {
            if (!rec.deleted_edges.empty()) cur.graph = delete_edges(cur.graph, rec.deleted_edges);
            if (!rec.deleted_vertices.empty()) cur.graph = delete_vertices(cur.graph, rec.deleted_vertices);
            if (!rec.added_edges.empty()) cur.graph = add_edges(cur.graph, rec.added_edges);
        } catch (const GraphError& e) {
            throw InvariantViolation(to_string(rec.step) + " record does not fit the running instance: " + e.what());
        }
        cur.k = rec.k_after;
        if (rec.replacement != Replacement::None) cur = constant_instance(rec.replacement);
        if (cur.graph.order() != rec.n_after) throw InvariantViolation(to_string(rec.step) + " record leaves the wrong vertex count");
    }
    return cur;
}

cpp_int kernel_size_bound(int k) {
    if (k < 0) throw std::invalid_argument("negative budget");
    if (k == 0) return 4;
    const cpp_int kk = k;
    const cpp_int s = 84 * kk * kk + 7 * kk;
    const cpp_int isolated = 2 * (kk + 3) * pow_int(s, 4) / 3;
    const cpp_int incomplete = (kk + 1) * (kk + 4) * s * (s + 2 * kk + 15);
    const cpp_int per_component = std::max(isolated, incomplete);
    return s + isolated + 2 * (kk + 2) * s * s * per_component;
}

OutsideCensus census_outside(const Graph& g, const VertexSet& s) {
    const Graph rest = delete_vertices(g, s);
    OutsideCensus c;
    for (const VertexSet& comp : components(rest)) {
        if (comp.size() == 1) {
            ++c.isolated_vertices;
            continue;
        }
        ++c.nontrivial_components;
        if (is_clique(rest, comp))
            c.largest_complete = std::max(c.largest_complete, comp.size());
        else
            c.largest_incomplete = std::max(c.largest_incomplete, comp.size());
    }
    return c;
}

std::vector<std::string> bound_violations(const Graph& g, int k, const VertexSet& s) {
    const OutsideCensus c = census_outside(g, s);
    const cpp_int kk = k, sz = static_cast<long long>(s.size());
    const cpp_int s4 = pow_int(sz, 4);
    std::vector<std::string> out;
    if (cpp_int(c.nontrivial_components) > 2 * (kk + 2) * sz * sz)
        out.push_back("non-trivial components: " + std::to_string(c.nontrivial_components));
    // Compare 3 * count against 2(k+3)|S|^4 to stay in integers.
    if (3 * cpp_int(c.isolated_vertices) > 2 * (kk + 3) * s4)
        out.push_back("isolated vertices: " + std::to_string(c.isolated_vertices));
    if (3 * cpp_int(c.largest_complete) > 2 * (kk + 3) * s4)
        out.push_back("complete component size: " + std::to_string(c.largest_complete));
    if (cpp_int(c.largest_incomplete) > (kk + 1) * (kk + 4) * sz * (sz + 2 * kk + 15))
        out.push_back("incomplete component size: " + std::to_string(c.largest_incomplete));
    return out;
}

}  // namespace tlp
