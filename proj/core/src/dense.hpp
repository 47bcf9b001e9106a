#pragma once

#include <cstdint>
#include <vector>

#include "tlp/graph.hpp"

namespace tlp::detail {

// Bit-matrix copy of a graph indexed 0..n-1 in ascending id order.
class DenseAdjacency {
public:
    explicit DenseAdjacency(const Graph& g) : ids_(g.vertices()), n_(ids_.size()), words_((n_ + 63) / 64) {
        bits_.assign(n_ * words_, 0);
        nbrs_.resize(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            for (Vertex w : g.neighbors(ids_[i])) {
                const auto j = g.index_of(w);
                bits_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64);
                nbrs_[i].push_back(static_cast<int>(j));
            }
        }
    }

    std::size_t size() const { return n_; }
    bool adj(int i, int j) const {
        return (bits_[static_cast<std::size_t>(i) * words_ + static_cast<std::size_t>(j) / 64] >> (j % 64)) & 1U;
    }
    const std::vector<int>& nbrs(int i) const { return nbrs_[static_cast<std::size_t>(i)]; }
    Vertex id(int i) const { return ids_[static_cast<std::size_t>(i)]; }

private:
    VertexSet ids_;
    std::size_t n_;
    std::size_t words_;
    std::vector<std::uint64_t> bits_;
    std::vector<std::vector<int>> nbrs_;
};

}  // namespace tlp::detail
