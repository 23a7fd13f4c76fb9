#include "leafkernel/generators.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace leafkernel {

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("empty range");
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    for (;;) {
        const std::uint64_t x = engine_();
        if (x < limit) return x % bound;
    }
}

namespace {

VertexId id(std::size_t v) { return static_cast<VertexId>(v); }

Edge edge(std::size_t u, std::size_t v) { return {id(std::min(u, v)), id(std::max(u, v))}; }

void add_cycle(std::vector<Edge>& edges, std::size_t len) {
    if (len < 2) return;
    if (len == 2) {
        edges.push_back(edge(0, 1));
        return;
    }
    for (std::size_t i = 0; i < len; ++i) edges.push_back(edge(i, (i + 1) % len));
}

std::size_t parse_number(std::string_view text) {
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
        throw std::invalid_argument("bad size '" + std::string(text) + "'");
    }
    return value;
}

}  // namespace

Graph grid(std::size_t w, std::size_t h) {
    std::vector<Edge> edges;
    for (std::size_t y = 0; y < h; ++y) {
        for (std::size_t x = 0; x < w; ++x) {
            const std::size_t v = y * w + x;
            if (x + 1 < w) edges.push_back(edge(v, v + 1));
            if (y + 1 < h) edges.push_back(edge(v, v + w));
        }
    }
    return Graph::from_edges(w * h, edges);
}

Graph hub3(std::size_t k) {
    std::vector<Edge> edges;
    add_cycle(edges, 3 * k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < 3; ++j) edges.push_back(edge(3 * i + j, 3 * k + i));
    }
    return Graph::from_edges(4 * k, edges);
}

Graph hub4(std::size_t k) {
    std::vector<Edge> edges;
    add_cycle(edges, 4 * k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 1; j <= 3; ++j) edges.push_back(edge(4 * i + j, 4 * k + i));
    }
    return Graph::from_edges(5 * k, edges);
}

Graph triangles(std::size_t t) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < t; ++i) {
        edges.push_back(edge(3 * i, 3 * i + 1));
        edges.push_back(edge(3 * i + 1, 3 * i + 2));
        edges.push_back(edge(3 * i, 3 * i + 2));
    }
    return Graph::from_edges(3 * t, edges);
}

Graph outerplanar_random(std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Edge> edges;
    add_cycle(edges, n);
    if (n >= 4) {
        std::vector<std::vector<std::size_t>> work;
        work.emplace_back(n);
        std::iota(work.back().begin(), work.back().end(), std::size_t{0});
        while (!work.empty()) {
            auto poly = std::move(work.back());
            work.pop_back();
            const std::size_t k = poly.size();
            if (k < 4 || !rng.chance(3, 4)) continue;
            std::size_t i = 0;
            std::size_t j = 0;
            do {
                i = rng.below(k);
                j = rng.below(k);
                if (i > j) std::swap(i, j);
            } while (j - i < 2 || (i == 0 && j == k - 1));
            edges.push_back(edge(poly[i], poly[j]));
            work.emplace_back(poly.begin() + static_cast<std::ptrdiff_t>(i), poly.begin() + static_cast<std::ptrdiff_t>(j) + 1);
            std::vector<std::size_t> rest(poly.begin() + static_cast<std::ptrdiff_t>(j), poly.end());
            rest.insert(rest.end(), poly.begin(), poly.begin() + static_cast<std::ptrdiff_t>(i) + 1);
            work.push_back(std::move(rest));
        }
    }
    return Graph::from_edges(n, edges);
}

Graph planar_random(std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Edge> edges;
    if (n <= 3) {
        add_cycle(edges, n);
        return Graph::from_edges(n, edges);
    }
    std::vector<std::array<std::size_t, 3>> faces{{0, 1, 2}, {0, 1, 2}};
    add_cycle(edges, 3);
    for (std::size_t v = 3; v < n; ++v) {
        const std::size_t f = rng.below(faces.size());
        const auto [a, b, c] = faces[f];
        edges.push_back(edge(a, v));
        edges.push_back(edge(b, v));
        edges.push_back(edge(c, v));
        faces[f] = {a, b, v};
        faces.push_back({b, c, v});
        faces.push_back({a, c, v});
    }
    for (std::size_t i = edges.size(); i > 1; --i) std::swap(edges[i - 1], edges[rng.below(i)]);
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::vector<Edge> kept;
    for (const auto& e : edges) {
        const auto a = find(e.first);
        const auto b = find(e.second);
        if (a != b) {
            parent[a] = b;
            kept.push_back(e);
        } else if (!rng.chance(2, 5)) {
            kept.push_back(e);
        }
    }
    return Graph::from_edges(n, kept);
}

std::string SizeSpec::text() const {
    return two ? std::to_string(a) + "x" + std::to_string(b) : std::to_string(a);
}

SizeSpec parse_size(std::string_view text) {
    SizeSpec s;
    const auto x = text.find('x');
    if (x == std::string_view::npos) {
        s.a = s.b = parse_number(text);
    } else {
        s.a = parse_number(text.substr(0, x));
        s.b = parse_number(text.substr(x + 1));
        s.two = true;
    }
    return s;
}

Graph generate(std::string_view family, const SizeSpec& size, std::uint64_t seed) {
    auto single = [&] {
        if (size.two) throw std::invalid_argument("family '" + std::string(family) + "' takes a single size");
        return size.a;
    };
    if (family == "grid") return grid(size.a, size.b);
    if (family == "hub3") return hub3(single());
    if (family == "hub4") return hub4(single());
    if (family == "triangles") return triangles(single());
    if (family == "outerplanar") return outerplanar_random(single(), seed);
    if (family == "planar") return planar_random(single(), seed);
    throw std::invalid_argument("unknown family '" + std::string(family) + "'");
}

Instance generate_instance(std::string_view family, const SizeSpec& size, std::uint64_t seed, Problem problem,
                           std::int64_t parameter) {
    Instance inst;
    inst.problem = problem;
    inst.graph = generate(family, size, seed);
    inst.parameter = parameter >= 0 ? parameter : std::max<std::int64_t>(1, static_cast<std::int64_t>(inst.graph.order()) / 4);
    return inst;
}

}  // namespace leafkernel
