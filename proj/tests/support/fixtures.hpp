#pragma once

#include <initializer_list>
#include <vector>

#include "leafkernel/graph.hpp"
#include "leafkernel/reduction.hpp"

namespace leafkernel::testing {

inline Graph make(std::size_t n, std::initializer_list<Edge> edges) {
    return Graph::from_edges(n, std::vector<Edge>(edges));
}

inline Graph path(std::size_t n) {
    std::vector<Edge> e;
    for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>(i + 1));
    return Graph::from_edges(n, e);
}

inline Graph cycle(std::size_t n) {
    std::vector<Edge> e;
    for (std::size_t i = 0; i < n; ++i) e.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>((i + 1) % n));
    return Graph::from_edges(n, e);
}

inline Graph complete(std::size_t n) {
    std::vector<Edge> e;
    for (VertexId i = 0; i < n; ++i) {
        for (VertexId j = i + 1; j < n; ++j) e.emplace_back(i, j);
    }
    return Graph::from_edges(n, e);
}

inline Graph star(std::size_t leaves) {
    std::vector<Edge> e;
    for (VertexId i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return Graph::from_edges(leaves + 1, e);
}

// Triangles {0,1,2} and {4,5,6} joined through the 2-vertex 3 (adjacent to 0 and 4).
inline Graph joined_triangles() {
    return make(7, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {4, 5}, {5, 6}, {4, 6}});
}

inline Instance instance(Graph g, Problem p, std::int64_t parameter) {
    Instance inst;
    inst.graph = std::move(g);
    inst.problem = p;
    inst.parameter = parameter;
    return inst;
}

}  // namespace leafkernel::testing
