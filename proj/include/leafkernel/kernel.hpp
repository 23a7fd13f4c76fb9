#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "leafkernel/graph.hpp"
#include "leafkernel/reduction.hpp"

namespace leafkernel {

enum class Pipeline { nsis_9k, nsis_12k, maxleaf_5k };

std::string_view to_string(Pipeline p);
Pipeline parse_pipeline(std::string_view name);
std::int64_t size_factor(Pipeline p);  // 9, 12 or 5

enum class CertificateKind { empty, nsis_set, maxleaf_tree };

struct Certificate {
    CertificateKind kind = CertificateKind::empty;
    VertexSet set;                  // nsis_set
    VertexId root = kNoVertex;      // maxleaf_tree
    std::vector<Edge> parent_of;    // maxleaf_tree: (child, parent)

    friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct KernelOutcome {
    Pipeline pipeline = Pipeline::nsis_9k;
    std::int64_t parameter = 0;            // parameter of the input
    std::optional<Answer> decided;
    Certificate certificate;               // for decided YES
    Instance reduced;                      // for Reduced outcomes, graph ids as produced by the rules
    std::int64_t cvc_parameter = 0;        // n' - l' for NSIS pipelines
    ReductionTrace trace;
    std::size_t tree_leaves = 0;           // |L(T)| on the reduced graph, when a tree was built
    std::size_t leaf_solution = 0;         // independent leaf set size or undirected leaf count

    bool is_reduced() const { return !decided.has_value(); }
};

class KernelError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

KernelOutcome kernelize_nsis(const Instance& inst, Pipeline variant);
KernelOutcome kernelize_maxleaf(const Instance& inst);
KernelOutcome kernelize(const Instance& inst, Pipeline pipeline);

// Maps an NSIS solution of the reduced graph back to the input graph.
VertexSet lift_nsis_set(const ReductionTrace& trace, const VertexSet& reduced_solution);

// Maps spanning-tree edges of the reduced graph back to the input graph.
std::vector<Edge> lift_maxleaf_tree(const Graph& original, const ReductionTrace& trace, std::vector<Edge> tree);

// Orients tree edges away from the lowest id.
Certificate tree_certificate(const std::vector<Edge>& edges, VertexId root);

// Undirected leaves of a spanning tree given as (child, parent) pairs; a
// lone root counts as one leaf.
std::size_t count_tree_leaves(std::size_t order, const std::vector<Edge>& parent_of);

// Checks a certificate against the original graph. A parameter <= 0 is
// satisfied by the empty certificate.
bool verify_certificate(const Graph& g, const Certificate& c, std::int64_t parameter, std::string* why = nullptr);

}  // namespace leafkernel
