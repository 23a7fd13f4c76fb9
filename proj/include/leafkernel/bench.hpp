#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "leafkernel/generators.hpp"
#include "leafkernel/kernel.hpp"

namespace leafkernel {

struct CorpusEntry {
    std::string family;
    SizeSpec size;
};

// "grid:100x250,100x500;planar:500" ; an empty string is an empty corpus.
std::vector<CorpusEntry> parse_corpus(std::string_view spec);

struct BenchRow {
    std::string instance;
    std::size_t n = 0;
    std::size_t m = 0;
    std::int64_t parameter = 0;
    std::string outcome;       // yes, no or reduced
    std::size_t kernel_size = 0;
    double wall_ms = 0.0;
};

std::vector<BenchRow> run_bench(const std::vector<CorpusEntry>& corpus, Pipeline pipeline, std::uint64_t seed,
                                std::int64_t parameter = -1);

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows);

}  // namespace leafkernel
