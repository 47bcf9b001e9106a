#include "tlp/oracle.hpp"

#include <limits>
#include <stdexcept>

#include "tlp/recognition.hpp"

namespace tlp {

namespace {

class BranchingSolver {
public:
    explicit BranchingSolver(std::uint64_t budget) : budget_(budget) {}

    // Yes: `chosen` holds the deletions. Indeterminate once the budget is spent.
    Verdict solve(const Graph& g, int k) {
        if (++nodes_ > budget_) return Verdict::Indeterminate;
        auto h = find_small_obstruction(g);
        if (!h) h = find_hole(g);
        if (!h) return Verdict::Yes;
        if (k == 0) return Verdict::No;
        bool exhausted = false;
        for (Vertex v : h->vertex_set()) {
            chosen_.push_back(v);
            const Verdict r = solve(delete_vertex(g, v), k - 1);
            if (r == Verdict::Yes) return r;
            chosen_.pop_back();
            if (r == Verdict::Indeterminate) exhausted = true;
        }
        return exhausted ? Verdict::Indeterminate : Verdict::No;
    }

    VertexSet witness() const { return make_set(chosen_); }
    std::uint64_t nodes() const { return nodes_; }

private:
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::vector<Vertex> chosen_;
};

}  // namespace

SolveResult exact_solve(const Instance& inst, const SolveOptions& opts) {
    if (inst.k < 0) throw std::invalid_argument("negative budget");
    BranchingSolver solver(opts.node_budget);
    SolveResult out;
    out.verdict = solver.solve(inst.graph, inst.k);
    out.nodes = solver.nodes();
    if (out.verdict == Verdict::Yes) out.witness = solver.witness();
    return out;
}

std::uint64_t Rng::below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("empty range");
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - (max % n + 1) % n;
    for (;;) {
        const std::uint64_t r = engine_();
        if (r <= limit) return r % n;
    }
}

int Rng::between(int lo, int hi) {
    if (hi < lo) throw std::invalid_argument("empty range");
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

Instance generate(const GeneratorConfig& cfg) {
    if (cfg.min_bags < 1 || cfg.max_bags < cfg.min_bags) throw std::invalid_argument("bad bag-count range");
    if (cfg.min_bag_size < 1 || cfg.max_bag_size < cfg.min_bag_size) throw std::invalid_argument("bad bag-size range");
    if (cfg.noise_edges < 0 || cfg.noise_vertices < 0 || cfg.planted_k < 0) throw std::invalid_argument("negative count");
    if (cfg.link_percent < 0 || cfg.link_percent > 100) throw std::invalid_argument("link_percent outside 0..100");

    Rng rng(cfg.seed);
    const int nodes = rng.between(cfg.min_bags, cfg.max_bags);
    std::vector<std::vector<int>> bags(static_cast<std::size_t>(nodes));
    int n = 0;
    for (auto& bag : bags) {
        const int size = rng.between(cfg.min_bag_size, cfg.max_bag_size);
        for (int i = 0; i < size; ++i) bag.push_back(n++);
    }
    std::vector<int> relabel(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) relabel[static_cast<std::size_t>(i)] = i;
    rng.shuffle(relabel);
    auto id = [&](int x) { return relabel[static_cast<std::size_t>(x)]; };

    std::vector<Edge> es;
    auto join = [&](const std::vector<int>& a, const std::vector<int>& b) {
        for (int x : a)
            for (int y : b) es.emplace_back(id(x), id(y));
    };
    for (std::size_t u = 0; u < bags.size(); ++u) {
        const auto& bag = bags[u];
        for (std::size_t i = 0; i < bag.size(); ++i)
            for (std::size_t j = i + 1; j < bag.size(); ++j) es.emplace_back(id(bag[i]), id(bag[j]));
        if (u > 0 && rng.chance(static_cast<std::uint64_t>(cfg.link_percent), 100))
            join(bag, bags[static_cast<std::size_t>(rng.below(u))]);
    }

    auto adjacent = [&](Vertex a, Vertex b) {
        const Edge e(a, b);
        for (const Edge& f : es)
            if (f == e) return true;
        return false;
    };
    for (int i = 0; i < cfg.noise_vertices; ++i) {
        const Vertex v = n++;
        if (v == 0) continue;
        const int want = std::min(rng.between(1, 4), static_cast<int>(v));
        for (int added = 0; added < want;) {
            const Vertex w = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(v)));
            if (adjacent(v, w)) continue;
            es.emplace_back(v, w);
            ++added;
        }
    }
    const long long pairs = static_cast<long long>(n) * (n - 1) / 2;
    const int extra = static_cast<int>(std::min<long long>(cfg.noise_edges, pairs - static_cast<long long>(es.size())));
    for (int added = 0; added < extra;) {
        const Vertex a = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));
        const Vertex b = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));
        if (a == b || adjacent(a, b)) continue;
        es.emplace_back(a, b);
        ++added;
    }
    return Instance{Graph::with_vertices(n, es), cfg.planted_k};
}

}  // namespace tlp
