#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "leafkernel/graph.hpp"
#include "leafkernel/reduction.hpp"

namespace leafkernel {

struct OracleResult {
    std::int64_t optimum = 0;
    VertexSet witness;             // vertex sets (NSIS, CVC, dominating set)
    std::vector<Edge> tree_edges;  // max-leaf witness
};

class OracleGuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kSubsetOracleLimit = 20;
inline constexpr std::size_t kTreeOracleLimit = 10;

// Largest independent S with g - S connected (empty remainder per
// remainder_connected). n <= 20.
OracleResult max_nsis_bruteforce(const Graph& g);

// Smallest connected vertex cover; the empty set counts iff g has no edges.
// n <= 20.
OracleResult min_cvc_bruteforce(const Graph& g);

// Maximum number of leaves over all spanning trees, found by enumerating the
// spanning trees. A single vertex counts as one leaf. Connected, n <= 10.
OracleResult max_leaf_bruteforce(const Graph& g);

// Same optimum through minimum connected dominating sets: n - gamma_c for
// n >= 3. Witness tree grown from the dominating set. Connected, n <= 20.
OracleResult max_leaf_via_dominating_set(const Graph& g);

// Some set of 2-vertices whose removal leaves >= 2 components, smallest
// first (so the empty set for a disconnected graph), or nullopt. At most 20
// vertices of degree 2.
std::optional<VertexSet> deg2_separator_witness(const Graph& g);

// Maximum number of vertex-disjoint cycles, with a witness. n <= 10.
CycleCollection best_cycle_collection_bruteforce(const Graph& g);

// Ground-truth decision for an instance, by enumeration.
Answer oracle_answer(const Instance& inst);

}  // namespace leafkernel
