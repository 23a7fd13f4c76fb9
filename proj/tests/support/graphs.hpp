#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "leafkernel/graph.hpp"

namespace leafkernel::testing {

// Canonical upper-triangle adjacency bits (n <= 11).
std::uint64_t canonical_form(const Graph& g);

// All connected graphs on n vertices up to isomorphism (n <= 8).
std::vector<Graph> connected_graphs(std::size_t n);

// Connected planar graphs on 1..max_n vertices, up to isomorphism.
std::vector<Graph> connected_planar_graphs(std::size_t max_n);

bool is_planar(const Graph& g);

// Seeded random planar and outerplanar graphs with sizes in [lo, hi].
std::vector<Graph> random_planar_corpus(std::size_t count, std::size_t lo, std::size_t hi, std::uint64_t seed);
std::vector<Graph> random_outerplanar_corpus(std::size_t count, std::size_t lo, std::size_t hi, std::uint64_t seed);

}  // namespace leafkernel::testing

namespace leafkernel::testing {

// Reducer output for a connected graph with a parameter large enough that no
// rule decides the instance; nullopt if it was decided anyway.
std::optional<Graph> nsis_reduced(const Graph& g);
std::optional<Graph> maxleaf_reduced(const Graph& g);

}  // namespace leafkernel::testing
