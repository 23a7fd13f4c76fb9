#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "leafkernel/graph.hpp"
#include "leafkernel/spanning_tree.hpp"

namespace leafkernel {

struct DualEdge {
    std::size_t a = 0, b = 0;  // face indices
    Edge chord;                // the shared chord, smaller id first
};

struct BlockEmbedding {
    VertexSet vertices;
    // Cyclic; starts at the lowest id and continues toward its lower-id
    // cycle neighbor. A single-edge block lists its two endpoints.
    std::vector<VertexId> outer_cycle;
    std::vector<std::vector<VertexId>> faces;  // bounded faces, cyclic
    std::vector<DualEdge> dual;                // edges of T_Q
    VertexSet cutvertices;                     // cutvertices of the host graph in this block
    std::size_t edge_count = 0;

    bool is_edge() const { return vertices.size() == 2; }
    bool is_leaf_block() const { return cutvertices.size() <= 1; }
    std::size_t dual_degree(std::size_t face) const;
    bool is_leaf_face(std::size_t face) const { return dual_degree(face) <= 1; }
};

struct OuterplanarEmbedding {
    std::vector<BlockEmbedding> blocks;  // ordered by lowest vertex id
    VertexSet cutvertices;
    VertexSet isolated;
};

struct NotOuterplanar {
    std::size_t block = 0;  // index into the block list of bridges_and_blocks
    VertexSet block_vertices;
    std::string reason;
};

using EmbedResult = std::variant<OuterplanarEmbedding, NotOuterplanar>;

EmbedResult recognize_and_embed(const Graph& g);

// Structural self-check of an embedding against its graph: outer cycles are
// Hamiltonian cycles of the blocks, every chord lies on two faces and every
// outer edge on one, the dual is a tree and #faces = m - n + 1 per block.
// Throws std::logic_error naming the first violation.
void check_embedding(const Graph& g, const OuterplanarEmbedding& emb);

class ColoringError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Greedy coloring along the reversed degeneracy order; colors 0..2, indexed
// by vertex id (-1 for absent ids). Rejects graphs of degeneracy > 2.
std::vector<int> three_color_outerplanar(const Graph& g);

// Largest color class of the coloring above (lowest color on ties).
VertexSet largest_color_class(const Graph& g);

// g[L(T)], keeping g's ids.
Graph induced_leaf_subgraph(const Graph& g, const TreeRecord& t);

}  // namespace leafkernel
