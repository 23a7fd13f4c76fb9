#include "doctest.h"
#include "graphs.hpp"

using namespace leafkernel;
using namespace leafkernel::testing;

TEST_CASE("enumeration matches the known counts of connected graphs") {
    const std::size_t connected[] = {1, 1, 2, 6, 21, 112, 853};
    for (std::size_t n = 1; n <= 7; ++n) CHECK(connected_graphs(n).size() == connected[n - 1]);
}

TEST_CASE("planar filter") {
    const std::size_t planar[] = {1, 1, 2, 6, 20, 99, 646};
    std::size_t total = 0;
    for (std::size_t n = 1; n <= 7; ++n) {
        std::size_t c = 0;
        for (const auto& g : connected_graphs(n)) c += is_planar(g);
        CHECK(c == planar[n - 1]);
        total += c;
    }
    CHECK(connected_planar_graphs(7).size() == total);
}

TEST_CASE("canonical form ignores labels") {
    const Graph a = Graph::from_edges(4, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
    const Graph b = Graph::from_edges(4, std::vector<Edge>{{2, 0}, {0, 3}, {3, 1}});
    const Graph star = Graph::from_edges(4, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}});
    CHECK(canonical_form(a) == canonical_form(b));
    CHECK(canonical_form(a) != canonical_form(star));
}
