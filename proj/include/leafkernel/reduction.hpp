#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "leafkernel/graph.hpp"

namespace leafkernel {

enum class Problem { nsis, cvc, maxleaf };

std::string_view to_string(Problem p);
Problem parse_problem(std::string_view name);

struct Instance {
    Graph graph;
    Problem problem = Problem::nsis;
    std::int64_t parameter = 0;  // l for NSIS, k for CVC and MaxLeaf
};

enum class Answer { yes, no };

enum class StepKind {
    drop_isolated,      // NSIS preprocessing: isolated vertex joins the solution
    strip_leaf_pair,    // separator rule, deg(a) = deg(b) = 1: remove a
    strip_leaf,         // separator rule, one endpoint of degree 1: remove it, k - 1
    contract_separator, // separator rule, both endpoints of degree >= 2: contract a-v-b, k - 2
    remove_pendant,     // (1,2)-rule: drop the 1-vertex, its 2-vertex neighbor becomes the pendant
    contract_bridge,    // adjacent 2-vertices joined by a bridge
    remove_edge,        // adjacent 2-vertices joined by a non-bridge edge
};

std::string_view to_string(StepKind k);
StepKind parse_step_kind(std::string_view name);

// One applied rule. For separator steps `removed`/`middle`/`other` are a, v, b
// (the removed vertex is always `removed`); for contractions `created` is the
// fresh vertex. delta_k is the change of the CVC parameter, delta_parameter
// the change of the instance's own parameter.
struct TraceStep {
    StepKind kind{};
    VertexId removed = kNoVertex;
    VertexId middle = kNoVertex;
    VertexId other = kNoVertex;
    VertexId created = kNoVertex;
    std::int64_t delta_k = 0;
    std::int64_t delta_parameter = 0;

    friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

struct ReductionTrace {
    std::vector<TraceStep> steps;

    void write(std::ostream& out) const;
    static ReductionTrace read(std::istream& in);
};

class ReductionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Reduced {
    Instance instance;
    ReductionTrace trace;
    std::optional<Answer> decided;  // set when a rule settled the instance
};

// Applies one trace step to g, checking the local preconditions of the rule.
void apply_step(Graph& g, const TraceStep& step);

// Replays a whole trace from the original graph.
Graph replay(Graph g, const ReductionTrace& trace);

// Keeps the only nontrivial component (or one vertex of an edgeless graph);
// every discarded isolated vertex lowers l by one.
Reduced nsis_preprocess(const Instance& inst);

// One application of the separator rule in CVC form. `separator` must consist
// of degree-2 vertices and leave at least two components.
Reduced separator_rule_cvc_once(const Instance& inst, const VertexSet& separator);

// Exact test for a separator made of degree-2 vertices. Returns a witness or
// nullopt. Disconnected graphs yield the empty witness.
std::optional<VertexSet> find_deg2_separator(const Graph& g);

// Dual separator rule applied until no all-degree-2 separator remains.
Reduced reduce_dual_separator_exhaustive(const Instance& inst);

// (1,2)-rule, adjacent 2-vertices rule and the trivial rule, to fixpoint.
Reduced reduce_maxleaf(const Instance& inst);

}  // namespace leafkernel
