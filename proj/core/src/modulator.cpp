#include "tlp/modulator.hpp"

#include <algorithm>

namespace tlp {

std::vector<Obstruction> pack_small_obstructions(const Graph& g) {
    std::vector<Obstruction> packing;
    Graph rest = g;
    while (auto h = find_small_obstruction(rest)) {
        rest = delete_vertices(rest, h->vertex_set());
        packing.push_back(std::move(*h));
    }
    return packing;
}

std::optional<ModulatorResult> find_modulator(const Graph& g, int k) {
    if (k <= 0) throw std::invalid_argument("find_modulator requires k > 0");
    ModulatorResult out;
    out.packing = pack_small_obstructions(g);
    if (out.packing.size() > static_cast<std::size_t>(k)) return std::nullopt;

    VertexSet packed;
    for (const auto& h : out.packing) packed = set_union(packed, h.vertex_set());
    const Graph rest = delete_vertices(g, packed);

    // The residue has no small obstructions, so its twin quotient is
    // triangle-free and hitting its cycles is the same as hitting holes.
    const auto classes = true_twin_partition(rest);
    VertexSet reps;
    WeightedFvsInstance wfvs;
    for (const auto& c : classes) {
        reps.push_back(c.front());
        wfvs.weights[c.front()] = Weight(static_cast<long long>(c.size()));
    }
    wfvs.graph = induced_subgraph(rest, make_set(reps));
    wfvs.budget = Weight(k);
    auto fvs = wfvs_2approx(wfvs);
    if (!fvs) return std::nullopt;

    out.modulator = packed;
    for (const auto& c : classes)
        if (set_contains(*fvs, c.front())) out.modulator = set_union(out.modulator, c);
    return out;
}

namespace {

// Some set of at most `budget` vertices other than v hitting every hole
// through v; nullopt if none exists.
std::optional<VertexSet> hole_cover_through(const Graph& g, Vertex v, int budget) {
    auto h = find_hole_through(g, v);
    if (!h) return VertexSet{};
    if (budget == 0) return std::nullopt;
    for (Vertex u : h->vertices) {
        if (u == v) continue;
        if (auto rest = hole_cover_through(delete_vertex(g, u), v, budget - 1))
            return set_union(*rest, VertexSet{u});
    }
    return std::nullopt;
}

bool meet_exactly_in(const std::vector<Obstruction>& hs, Vertex v) {
    for (std::size_t i = 0; i < hs.size(); ++i)
        for (std::size_t j = i + 1; j < hs.size(); ++j)
            if (set_intersection(hs[i].vertex_set(), hs[j].vertex_set()) != VertexSet{v}) return false;
    return true;
}

}  // namespace

FlowerCoverResult flower_or_cover(const Graph& g, int t, Vertex v) {
    if (t < 0) throw std::invalid_argument("flower_or_cover requires t >= 0");
    if (!g.contains(v)) throw std::invalid_argument("unknown vertex");
    if (!is_chordal(delete_vertex(g, v))) throw std::invalid_argument("g minus v is not chordal");

    FlowerCoverResult out;
    Graph rest = g;
    while (out.flower.size() < static_cast<std::size_t>(t) + 1) {
        auto h = find_hole_through(rest, v);
        if (!h) break;
        rest = delete_vertices(rest, set_difference(h->vertex_set(), VertexSet{v}));
        out.flower.push_back(std::move(*h));
    }
    if (out.flower.size() == static_cast<std::size_t>(t) + 1) {
        out.arm = FlowerCoverResult::Arm::Flower;
        return out;
    }
    // Each packed hole needs its own cover vertex, so start the search there.
    for (int budget = static_cast<int>(out.flower.size()); budget <= t; ++budget) {
        if (auto cover = hole_cover_through(g, v, budget)) {
            out.arm = FlowerCoverResult::Arm::Cover;
            out.cover = std::move(*cover);
            out.flower.clear();
            return out;
        }
    }
    out.arm = FlowerCoverResult::Arm::Forced;
    out.flower.clear();
    return out;
}

Instance delete_flower_center(const Graph& g, int k, const std::vector<Obstruction>& witnesses, Vertex v) {
    if (k <= 0) throw std::invalid_argument("flower deletion requires k > 0");
    if (witnesses.size() < static_cast<std::size_t>(k) + 1) throw std::invalid_argument("need k + 1 witnesses");
    for (const auto& h : witnesses)
        if (!is_valid_obstruction(g, h) || !set_contains(h.vertex_set(), v))
            throw std::invalid_argument("witness " + to_string(h) + " is not an obstruction through the center");
    if (!meet_exactly_in(witnesses, v)) throw std::invalid_argument("witnesses must pairwise meet exactly in the center");
    return Instance{delete_vertex(g, v), k - 1};
}

bool is_good_modulator(const Graph& g, const VertexSet& s) {
    if (!is_three_leaf_power(delete_vertices(g, s))) return false;
    for (Vertex v : s)
        if (!is_three_leaf_power(delete_vertices(g, set_difference(s, VertexSet{v})))) return false;
    return true;
}

GoodModulatorResult build_good_modulator(const Graph& g, int k) {
    if (k < 0) throw std::invalid_argument("negative budget");
    GoodModulatorResult res;
    Instance cur{g, k};
    for (;;) {
        res.instance = cur;
        if (cur.k == 0) {
            res.no_instance = !is_three_leaf_power(cur.graph);
            res.good_modulator.clear();
            return res;
        }
        auto mod = find_modulator(cur.graph, cur.k);
        if (!mod) {
            res.no_instance = true;
            return res;
        }
        GoodModulatorTrace& tr = res.trace;
        tr.packing = mod->packing;
        tr.modulator = mod->modulator;
        tr.local_packings.clear();
        tr.local_covers.clear();
        tr.local_sets.clear();

        const VertexSet& s = mod->modulator;
        std::optional<ForcedDeletion> forced;
        VertexSet good = s;
        for (Vertex v : s) {
            Graph local = delete_vertices(cur.graph, set_difference(s, VertexSet{v}));
            // Every obstruction left in `local` passes through v.
            std::vector<Obstruction> through_v;
            while (through_v.size() < static_cast<std::size_t>(cur.k) + 1) {
                auto h = find_small_obstruction(local);
                if (!h) break;
                local = delete_vertices(local, set_difference(h->vertex_set(), VertexSet{v}));
                through_v.push_back(std::move(*h));
            }
            if (through_v.size() == static_cast<std::size_t>(cur.k) + 1) {
                forced = ForcedDeletion{v, cur.k, through_v};
                break;
            }
            const int t = cur.k - static_cast<int>(through_v.size());
            auto fc = flower_or_cover(local, t, v);
            if (fc.arm == FlowerCoverResult::Arm::Flower) {
                std::vector<Obstruction> witnesses = through_v;
                witnesses.insert(witnesses.end(), fc.flower.begin(), fc.flower.end());
                forced = ForcedDeletion{v, cur.k, std::move(witnesses)};
                break;
            }
            if (fc.arm == FlowerCoverResult::Arm::Forced) {
                forced = ForcedDeletion{v, cur.k, {}};
                break;
            }
            VertexSet sv = fc.cover;
            for (const auto& h : through_v) sv = set_union(sv, h.vertex_set());
            sv = set_difference(sv, VertexSet{v});
            tr.local_packings[v] = through_v;
            tr.local_covers[v] = fc.cover;
            tr.local_sets[v] = sv;
            good = set_union(good, sv);
        }
        if (forced) {
            if (!forced->witnesses.empty())
                cur = delete_flower_center(cur.graph, cur.k, forced->witnesses, forced->vertex);
            else
                cur = Instance{delete_vertex(cur.graph, forced->vertex), cur.k - 1};
            tr.deletions.push_back(std::move(*forced));
            continue;
        }
        res.good_modulator = std::move(good);
        return res;
    }
}

}  // namespace tlp
