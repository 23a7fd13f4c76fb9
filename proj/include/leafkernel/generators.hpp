#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

#include "leafkernel/graph.hpp"
#include "leafkernel/reduction.hpp"

namespace leafkernel {

// Bounded draws use rejection on top of mt19937_64 so streams are identical
// across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    std::uint64_t below(std::uint64_t bound);
    bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

private:
    std::mt19937_64 engine_;
};

Graph grid(std::size_t w, std::size_t h);
Graph hub3(std::size_t k);   // cycle of 3k plus k hubs, cubic
Graph hub4(std::size_t k);   // cycle of 4k plus k hubs on consecutive triples
Graph triangles(std::size_t t);
Graph outerplanar_random(std::size_t n, std::uint64_t seed);
Graph planar_random(std::size_t n, std::uint64_t seed);

struct SizeSpec {
    std::size_t a = 0;
    std::size_t b = 0;  // second factor for "AxB", else equal to a
    bool two = false;
    std::string text() const;
};

SizeSpec parse_size(std::string_view text);

// Families: grid, hub3, hub4, triangles, outerplanar, planar. A grid of size
// N is N x N. The default parameter is max(1, n / 4).
Graph generate(std::string_view family, const SizeSpec& size, std::uint64_t seed);
Instance generate_instance(std::string_view family, const SizeSpec& size, std::uint64_t seed, Problem problem,
                           std::int64_t parameter = -1);

}  // namespace leafkernel
