#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "leafkernel/graph.hpp"

namespace leafkernel {

enum class Strategy { generic, branching, maxleaf };
enum class OpType { o1 = 1, o2 = 2, o3 = 3, o4 = 4 };

std::string_view to_string(Strategy s);
Strategy parse_strategy(std::string_view name);

struct Expansion {
    OpType op{};
    VertexId expanded = kNoVertex;
    std::vector<VertexId> added;  // ascending id

    friend bool operator==(const Expansion&, const Expansion&) = default;
};

inline constexpr std::int64_t kNotInTree = -1;

// Spanning tree plus the full history of its construction. Vectors are
// indexed by vertex id of the graph the tree was built on.
struct TreeRecord {
    Strategy strategy = Strategy::generic;
    VertexId root = kNoVertex;
    std::size_t order = 0;                  // number of tree vertices
    std::vector<VertexId> parent;           // kNoVertex for the root and non-members
    std::vector<std::int64_t> insertion;    // kNotInTree for non-members
    std::vector<std::uint32_t> children;    // child count
    std::vector<OpType> expanded_by;        // meaningful for inner vertices only
    std::vector<char> inner;
    std::vector<Expansion> expansions;      // O3 contributes two consecutive entries
    VertexSet leaves;                       // childless tree vertices
    std::map<VertexId, std::size_t> dead_at;     // leaf -> number of expansions done when it died
    std::map<VertexId, VertexId> assignment;     // O2-expanded vertex -> dead leaf assigned to it
    VertexSet unassigned;                   // L_u
    std::vector<std::vector<VertexId>> runs;

    bool contains(VertexId v) const { return v < insertion.size() && insertion[v] != kNotInTree; }
};

class TreeBuildError : public std::runtime_error {
public:
    TreeBuildError(const std::string& what, VertexSet witness)
        : std::runtime_error(what), witness_(std::move(witness)) {}
    const VertexSet& witness() const { return witness_; }

private:
    VertexSet witness_;
};

class TreeIntegrityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Leaf-expansion builder. GENERIC and BRANCHING work on the graph with all
// edges between two 2-vertices removed; the record refers to g's ids either
// way. Root defaults to the lowest id.
TreeRecord build_spanning_tree(const Graph& g, Strategy strategy, VertexId root = kNoVertex);

// Re-runs an expansion log on g, checking that every step is a legal
// expansion of a current leaf, and recomputes all bookkeeping.
TreeRecord replay_tree(const Graph& g, Strategy strategy, VertexId root, const std::vector<Expansion>& log);

// Throws TreeIntegrityError unless t is a spanning tree of g whose edges are
// edges of g.
void check_spanning(const Graph& g, const TreeRecord& t);

struct RunStats {
    std::vector<VertexId> vertices;
    std::size_t p2 = 0;      // |R ∩ P_{>=2}|, i.e. |R|
    std::size_t p3 = 0;      // |R ∩ P_{>=3}|
    std::size_t x3 = 0;      // |R ∩ X3|
    std::size_t children = 0;  // |ch(T_R)|
};

struct TreeStats {
    std::size_t n = 0;
    std::size_t leaves = 0;
    std::size_t x1 = 0, x2 = 0, x3 = 0, x4 = 0;
    std::size_t x3_p1 = 0, x3_p2 = 0;
    std::map<std::size_t, std::size_t> p;  // children count d -> |P_d|, d >= 1
    std::size_t unassigned = 0;
    std::vector<RunStats> runs;

    std::int64_t sum_d_pd(std::size_t from) const;         // Σ_{d>=from} d|P_d|
    std::int64_t sum_weighted_pd() const;                  // Σ_{d>=2} (2d-3)|P_d|
    std::int64_t leaf_surplus() const;                     // |L_u| + Σ(2d-3)|P_d| - |X3 ∩ P>=2|
};

// Recomputes all counts from the record and asserts the counting identity
// that matches the record (with or without O4). Throws TreeIntegrityError.
TreeStats tree_stats(const TreeRecord& t);

struct LeafBound {
    bool holds = false;
    std::int64_t margin = 0;  // lhs - rhs of the strategy's inequality
};

// 4|L| >= n + 3|C| (BRANCHING), 4|L| >= n (GENERIC), 5|L| >= n (MAXLEAF).
// Cycles must be vertex-disjoint cycles of g[L(T)].
LeafBound leaf_bound_check(const Graph& g, const TreeRecord& t, const CycleCollection& cycles);

// True iff every run's vertices form a subtree rooted at its first vertex.
bool runs_form_subtrees(const TreeRecord& t);

// Index of the run that opens the cycle (its first-inserted vertex is a child
// of a run vertex outside the run), or nullopt.
std::optional<std::size_t> opening_run(const TreeRecord& t, const std::vector<VertexId>& cycle);

// Parent-array text format followed by the expansion log.
void write_tree(std::ostream& out, const TreeRecord& t);

struct TreeText {
    Strategy strategy = Strategy::generic;
    VertexId root = kNoVertex;
    std::map<VertexId, VertexId> parent;  // child -> parent
    std::vector<Expansion> expansions;
};

TreeText read_tree(std::istream& in);

}  // namespace leafkernel
