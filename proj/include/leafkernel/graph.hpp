#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace leafkernel {

using VertexId = std::uint32_t;
using Edge = std::pair<VertexId, VertexId>;
using VertexSet = std::vector<VertexId>;  // kept sorted and duplicate free

inline constexpr VertexId kNoVertex = static_cast<VertexId>(-1);

class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Simple undirected graph over stable vertex ids. Ids are never reused:
// removed vertices leave a hole and new vertices get the next free id.
// Neighbor lists are kept sorted.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n);

    // Builds the graph on ids [0, n). Duplicate pairs are merged, loops and
    // out-of-range ids throw GraphError.
    static Graph from_edges(std::size_t n, std::span<const Edge> edges);

    bool contains(VertexId v) const { return v < alive_.size() && alive_[v]; }
    std::size_t order() const { return order_; }
    std::size_t size() const { return size_; }
    bool empty() const { return order_ == 0; }
    VertexId id_bound() const { return static_cast<VertexId>(alive_.size()); }

    const std::vector<VertexId>& neighbors(VertexId v) const;
    std::size_t degree(VertexId v) const { return neighbors(v).size(); }
    bool adjacent(VertexId u, VertexId v) const;

    std::vector<VertexId> vertices() const;
    std::vector<Edge> edges() const;  // (u, v) with u < v, lexicographic

    VertexId add_vertex();
    // Returns false if the edge was already present.
    bool add_edge(VertexId u, VertexId v);
    bool remove_edge(VertexId u, VertexId v);
    void remove_vertex(VertexId v);

    // Replaces the path a-v-b by a fresh vertex adjacent to
    // (N(a) + N(b)) - {v}. Requires N(v) = {a, b} and a, b non-adjacent.
    VertexId contract_path(VertexId a, VertexId v, VertexId b);

    // Merges the endpoints of edge uv into a fresh vertex.
    VertexId contract_edge(VertexId u, VertexId v);

    // Induced subgraph that keeps the ids of this graph.
    Graph induced(std::span<const VertexId> keep) const;

    // Throws GraphError if symmetry, simplicity or liveness is broken.
    void check_invariants() const;

    friend bool operator==(const Graph& lhs, const Graph& rhs);

private:
    void require(VertexId v) const;
    static void insert_sorted(std::vector<VertexId>& list, VertexId v);
    static bool erase_sorted(std::vector<VertexId>& list, VertexId v);

    std::vector<std::vector<VertexId>> adj_;
    std::vector<char> alive_;
    std::size_t order_ = 0;
    std::size_t size_ = 0;
};

// Induced subgraph relabelled to ids [0, k); to_parent[i] is the id of
// vertex i in the parent graph.
struct Subgraph {
    Graph graph;
    std::vector<VertexId> to_parent;
};

Subgraph induced_compact(const Graph& g, std::span<const VertexId> keep);

// Relabels the live vertices of g to [0, n) preserving their order.
Subgraph compact(const Graph& g);

struct StructureReport {
    std::vector<VertexSet> components;
    std::vector<Edge> bridges;
    std::vector<VertexSet> blocks;  // biconnected components, isolated vertices excluded
    VertexSet cutvertices;
    std::vector<VertexId> degeneracy_order;
    std::size_t degeneracy = 0;
};

// Components in order of their smallest vertex; each component sorted.
std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);

// Components of g - removed.
std::vector<VertexSet> components_without(const Graph& g, std::span<const VertexId> removed);

// Fills components, bridges, blocks and cutvertices.
StructureReport bridges_and_blocks(const Graph& g);

struct DegeneracyResult {
    std::vector<VertexId> order;
    std::size_t degeneracy = 0;
};

// Repeatedly removes a minimum degree vertex, lowest id first.
DegeneracyResult degeneracy_order(const Graph& g);

// Full structural report (all queries above).
StructureReport analyze(const Graph& g);

bool is_independent(const Graph& g, std::span<const VertexId> set);

// True iff g - removed is connected. An empty remainder counts as connected
// only when g has no edges.
bool remainder_connected(const Graph& g, std::span<const VertexId> removed);

std::string describe_edge(VertexId u, VertexId v);

// Vertex-disjoint cycles, each listed in cyclic order.
struct CycleCollection {
    std::vector<std::vector<VertexId>> cycles;

    std::size_t size() const { return cycles.size(); }
    bool empty() const { return cycles.empty(); }
};

// Checks that every entry is a cycle of g (length >= 3, consecutive vertices
// adjacent, wraparound included) and that the cycles are vertex-disjoint.
// On failure the reason is written to `why` when given.
bool is_valid_cycle_collection(const Graph& g, const CycleCollection& c, std::string* why = nullptr);

}  // namespace leafkernel
