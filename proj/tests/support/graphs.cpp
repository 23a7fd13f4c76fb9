#include "graphs.hpp"

#include <algorithm>
#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "leafkernel/generators.hpp"
#include "leafkernel/reduction.hpp"

namespace leafkernel::testing {

namespace {

std::vector<std::size_t> refine(const std::vector<std::vector<int>>& adj) {
    const std::size_t n = adj.size();
    std::vector<std::size_t> color(n, 0);
    for (std::size_t v = 0; v < n; ++v) color[v] = adj[v].size();
    for (;;) {
        std::vector<std::pair<std::size_t, std::vector<std::size_t>>> sig(n);
        for (std::size_t v = 0; v < n; ++v) {
            sig[v].first = color[v];
            for (int w : adj[v]) sig[v].second.push_back(color[w]);
            std::sort(sig[v].second.begin(), sig[v].second.end());
        }
        auto sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        std::vector<std::size_t> next(n);
        for (std::size_t v = 0; v < n; ++v) {
            next[v] = static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
        }
        const auto classes = [](const std::vector<std::size_t>& c) {
            return std::set<std::size_t>(c.begin(), c.end()).size();
        };
        const bool stable = classes(next) == classes(color);
        color = std::move(next);
        if (stable) return color;
    }
}

}  // namespace

std::uint64_t canonical_form(const Graph& g) {
    const Subgraph s = compact(g);
    const std::size_t n = s.graph.order();
    if (n > 11) throw std::invalid_argument("canonical_form is limited to 11 vertices");
    std::vector<std::vector<int>> adj(n);
    std::vector<std::vector<char>> a(n, std::vector<char>(n, 0));
    for (auto [u, v] : s.graph.edges()) {
        adj[u].push_back(static_cast<int>(v));
        adj[v].push_back(static_cast<int>(u));
        a[u][v] = a[v][u] = 1;
    }
    const auto color = refine(adj);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return color[x] < color[y] || (color[x] == color[y] && x < y); });
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t i = 0; i < n;) {
        std::size_t j = i;
        while (j < n && color[order[j]] == color[order[i]]) ++j;
        cells.emplace_back(i, j);
        i = j;
    }
    std::uint64_t best = ~std::uint64_t{0};
    auto code = [&] {
        std::uint64_t c = 0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) c = (c << 1) | static_cast<std::uint64_t>(a[order[i]][order[j]]);
        }
        return c;
    };
    auto rec = [&](auto&& self, std::size_t cell) -> void {
        if (cell == cells.size()) {
            best = std::min(best, code());
            return;
        }
        auto first = order.begin() + static_cast<std::ptrdiff_t>(cells[cell].first);
        auto last = order.begin() + static_cast<std::ptrdiff_t>(cells[cell].second);
        std::sort(first, last);
        do {
            self(self, cell + 1);
        } while (std::next_permutation(first, last));
    };
    rec(rec, 0);
    return best;
}

std::vector<Graph> connected_graphs(std::size_t n) {
    if (n == 0 || n > 8) throw std::invalid_argument("connected_graphs supports 1..8 vertices");
    if (n == 1) return {Graph(1)};
    std::vector<Graph> out;
    std::unordered_set<std::uint64_t> seen;
    for (const Graph& base : connected_graphs(n - 1)) {
        const std::size_t k = n - 1;
        for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
            auto edges = base.edges();
            for (std::size_t v = 0; v < k; ++v) {
                if (mask >> v & 1) edges.emplace_back(static_cast<VertexId>(v), static_cast<VertexId>(k));
            }
            Graph g = Graph::from_edges(n, edges);
            if (seen.insert(canonical_form(g)).second) out.push_back(std::move(g));
        }
    }
    return out;
}

bool is_planar(const Graph& g) {
    const Subgraph s = compact(g);
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS> bg(s.graph.order());
    for (auto [u, v] : s.graph.edges()) boost::add_edge(u, v, bg);
    return boost::boyer_myrvold_planarity_test(bg);
}

std::vector<Graph> connected_planar_graphs(std::size_t max_n) {
    std::vector<Graph> out;
    for (std::size_t n = 1; n <= max_n; ++n) {
        for (auto& g : connected_graphs(n)) {
            if (is_planar(g)) out.push_back(std::move(g));
        }
    }
    return out;
}

std::vector<Graph> random_planar_corpus(std::size_t count, std::size_t lo, std::size_t hi, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Graph> out;
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t n = lo + rng.below(hi - lo + 1);
        out.push_back(planar_random(n, seed * 1000003 + i));
    }
    return out;
}

std::vector<Graph> random_outerplanar_corpus(std::size_t count, std::size_t lo, std::size_t hi, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Graph> out;
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t n = lo + rng.below(hi - lo + 1);
        out.push_back(outerplanar_random(n, seed * 1000003 + i));
    }
    return out;
}

std::optional<Graph> nsis_reduced(const Graph& g) {
    Instance inst;
    inst.graph = g;
    inst.problem = Problem::nsis;
    inst.parameter = static_cast<std::int64_t>(g.order()) + 1;
    auto r = reduce_dual_separator_exhaustive(inst);
    if (r.decided) return std::nullopt;
    return std::move(r.instance.graph);
}

std::optional<Graph> maxleaf_reduced(const Graph& g) {
    Instance inst;
    inst.graph = g;
    inst.problem = Problem::maxleaf;
    inst.parameter = static_cast<std::int64_t>(g.order()) + 1;
    auto r = reduce_maxleaf(inst);
    if (r.decided) return std::nullopt;
    return std::move(r.instance.graph);
}

}  // namespace leafkernel::testing
