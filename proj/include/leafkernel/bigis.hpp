#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "leafkernel/graph.hpp"

namespace leafkernel {

// One iteration of the induction: which case fired, how many vertices it
// removed (r), and what it added to I (i) and to C (c).
struct BigisStep {
    std::string rule;  // "1", "2", "3", "4", "5a", "5b"
    std::size_t removed = 0;
    std::size_t added = 0;
    std::size_t cycles = 0;
};

struct BigisResult {
    VertexSet independent;
    CycleCollection cycles;
    std::vector<BigisStep> steps;
};

// Raised when no case applies, when the configuration the case analysis
// excludes shows up, or when a step breaks 9i >= 4r - 3c. `repro` holds the
// offending graph as an edge list in the caller's ids.
class BigisError : public std::runtime_error {
public:
    BigisError(const std::string& what, std::string repro)
        : std::runtime_error(what), repro_(std::move(repro)) {}
    const std::string& repro() const { return repro_; }

private:
    std::string repro_;
};

// Independent set I and vertex-disjoint cycles C of an outerplanar h with
// 9|I| >= 4n - 3|C|.
BigisResult independent_set_with_cycles(const Graph& h);

}  // namespace leafkernel
