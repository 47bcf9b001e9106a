#pragma once

#include "tlp/graph.hpp"

namespace tlp {

/// A 3-Leaf Power Deletion instance: is there a set of at most k vertices
/// whose removal leaves a 3-leaf power?
struct Instance {
    Graph graph;
    int k = 0;

    friend bool operator==(const Instance&, const Instance&) = default;
};

}  // namespace tlp
