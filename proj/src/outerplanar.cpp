#include "leafkernel/outerplanar.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>

namespace leafkernel {

namespace {

struct BlockFailure {
    std::string reason;
};

std::variant<BlockEmbedding, BlockFailure> embed_block(const Graph& g, const VertexSet& block,
                                                       std::vector<int>& local) {
    BlockEmbedding emb;
    emb.vertices = block;
    const int k = static_cast<int>(block.size());
    for (int i = 0; i < k; ++i) local[block[i]] = i;
    std::vector<std::vector<int>> real(k);
    for (int i = 0; i < k; ++i) {
        for (VertexId w : g.neighbors(block[i])) {
            if (local[w] >= 0) real[i].push_back(local[w]);
        }
        std::sort(real[i].begin(), real[i].end());
        emb.edge_count += real[i].size();
    }
    emb.edge_count /= 2;
    auto cleanup = [&] {
        for (VertexId v : block) local[v] = -1;
    };
    auto fail = [&](std::string why) {
        cleanup();
        return BlockFailure{std::move(why)};
    };
    if (k == 2) {
        emb.outer_cycle = {block[0], block[1]};
        cleanup();
        return emb;
    }
    if (static_cast<int>(emb.edge_count) > 2 * k - 3) return fail("more than 2n - 3 edges");

    // eliminate 2-vertices, adding the edge between their neighbors
    std::vector<std::set<int>> adj(k);
    for (int i = 0; i < k; ++i) adj[i].insert(real[i].begin(), real[i].end());
    std::vector<char> alive(k, 1);
    std::vector<int> stack;
    for (int i = 0; i < k; ++i) {
        if (adj[i].size() == 2) stack.push_back(i);
    }
    std::vector<std::tuple<int, int, int>> removed;
    int left = k;
    while (left > 3) {
        int v = -1;
        while (!stack.empty()) {
            const int c = stack.back();
            stack.pop_back();
            if (alive[c] && adj[c].size() == 2) {
                v = c;
                break;
            }
        }
        if (v < 0) return fail("no vertex of degree 2 during elimination");
        const int a = *adj[v].begin();
        const int b = *adj[v].rbegin();
        adj[a].erase(v);
        adj[b].erase(v);
        adj[a].insert(b);
        adj[b].insert(a);
        alive[v] = 0;
        --left;
        removed.emplace_back(v, a, b);
        for (int x : {a, b}) {
            if (adj[x].size() < 2) return fail("block lost 2-connectivity during elimination");
            if (adj[x].size() == 2) stack.push_back(x);
        }
    }
    std::vector<int> rest;
    for (int i = 0; i < k; ++i) {
        if (alive[i]) rest.push_back(i);
    }
    for (int x : rest) {
        for (int y : rest) {
            if (x != y && !adj[x].count(y)) return fail("elimination does not end in a triangle");
        }
    }
    std::vector<int> next(k, -1), prev(k, -1);
    next[rest[0]] = rest[1];
    next[rest[1]] = rest[2];
    next[rest[2]] = rest[0];
    prev[rest[1]] = rest[0];
    prev[rest[2]] = rest[1];
    prev[rest[0]] = rest[2];
    for (auto it = removed.rbegin(); it != removed.rend(); ++it) {
        auto [v, a, b] = *it;
        if (next[b] == a) std::swap(a, b);
        if (next[a] != b) return fail("reinserted vertex does not fit between consecutive cycle vertices");
        next[a] = v;
        prev[v] = a;
        next[v] = b;
        prev[b] = v;
    }

    const bool forward = next[0] < prev[0];
    std::vector<int> cycle;
    std::vector<int> pos(k, -1);
    for (int c = 0, i = 0; i < k; ++i, c = forward ? next[c] : prev[c]) {
        pos[c] = i;
        cycle.push_back(c);
    }
    for (int i = 0; i < k; ++i) {
        const int a = cycle[i];
        const int b = cycle[(i + 1) % k];
        if (!std::binary_search(real[a].begin(), real[a].end(), b)) return fail("outer cycle uses a non-edge");
    }
    for (int c : cycle) emb.outer_cycle.push_back(block[c]);

    // intervals over cycle positions; chords must not cross
    std::vector<std::vector<int>> higher(k);
    std::vector<std::pair<int, int>> chords;
    for (int u = 0; u < k; ++u) {
        for (int w : real[u]) {
            const int i = pos[u];
            const int j = pos[w];
            if (i < j) {
                higher[i].push_back(j);
                if (j - i >= 2 && !(i == 0 && j == k - 1)) chords.emplace_back(i, j);
            }
        }
    }
    for (auto& h : higher) std::sort(h.begin(), h.end());
    std::sort(chords.begin(), chords.end(), [](auto x, auto y) {
        return x.first != y.first ? x.first < y.first : x.second > y.second;
    });
    std::vector<std::pair<int, int>> open;
    for (auto [i, j] : chords) {
        while (!open.empty() && open.back().second <= i) open.pop_back();
        if (!open.empty() && open.back().second < j) return fail("chords cross");
        open.emplace_back(i, j);
    }

    std::vector<std::pair<int, int>> tops = chords;
    tops.emplace_back(0, k - 1);
    std::sort(tops.begin(), tops.end());
    std::map<std::pair<int, int>, std::size_t> face_of;
    for (std::size_t f = 0; f < tops.size(); ++f) face_of[tops[f]] = f;
    emb.faces.resize(tops.size());
    for (std::size_t f = 0; f < tops.size(); ++f) {
        const auto [i, j] = tops[f];
        int cur = i;
        emb.faces[f].push_back(block[cycle[cur]]);
        while (cur != j) {
            const auto& h = higher[cur];
            auto it = std::upper_bound(h.begin(), h.end(), j);
            int step = -1;
            while (it != h.begin()) {
                --it;
                if (!(cur == i && *it == j)) {
                    step = *it;
                    break;
                }
            }
            if (step < 0) return fail("face walk got stuck");
            if (step - cur >= 2) {
                const VertexId x = block[cycle[cur]];
                const VertexId y = block[cycle[step]];
                emb.dual.push_back({f, face_of.at({cur, step}), {std::min(x, y), std::max(x, y)}});
            }
            cur = step;
            emb.faces[f].push_back(block[cycle[cur]]);
        }
    }
    cleanup();
    return emb;
}

}  // namespace

std::size_t BlockEmbedding::dual_degree(std::size_t face) const {
    std::size_t d = 0;
    for (const auto& e : dual) d += (e.a == face || e.b == face) ? 1 : 0;
    return d;
}

EmbedResult recognize_and_embed(const Graph& g) {
    const StructureReport report = bridges_and_blocks(g);
    OuterplanarEmbedding out;
    out.cutvertices = report.cutvertices;
    for (const auto& c : report.components) {
        if (c.size() == 1) out.isolated.push_back(c.front());
    }
    std::sort(out.isolated.begin(), out.isolated.end());
    std::vector<char> is_cut(g.id_bound(), 0);
    for (VertexId v : report.cutvertices) is_cut[v] = 1;
    std::vector<std::size_t> order(report.blocks.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return report.blocks[x] < report.blocks[y];
    });
    std::vector<int> local(g.id_bound(), -1);
    for (std::size_t idx : order) {
        const auto& block = report.blocks[idx];
        auto r = embed_block(g, block, local);
        if (auto* bad = std::get_if<BlockFailure>(&r)) {
            return NotOuterplanar{idx, block, bad->reason};
        }
        auto emb = std::get<BlockEmbedding>(std::move(r));
        for (VertexId v : block) {
            if (is_cut[v]) emb.cutvertices.push_back(v);
        }
        out.blocks.push_back(std::move(emb));
    }
    return out;
}

void check_embedding(const Graph& g, const OuterplanarEmbedding& emb) {
    auto fail = [](const std::string& what) { throw std::logic_error("embedding check: " + what); };
    for (const auto& b : emb.blocks) {
        const std::size_t k = b.vertices.size();
        std::set<VertexId> members(b.vertices.begin(), b.vertices.end());
        std::map<Edge, int> on_faces;
        for (VertexId v : b.vertices) {
            for (VertexId w : g.neighbors(v)) {
                if (v < w && members.count(w)) on_faces[{v, w}] = 0;
            }
        }
        if (on_faces.size() != b.edge_count) fail("edge count mismatch");
        if (b.is_edge()) {
            if (!b.faces.empty()) fail("single-edge block with faces");
            continue;
        }
        if (b.outer_cycle.size() != k || std::set<VertexId>(b.outer_cycle.begin(), b.outer_cycle.end()) != members) {
            fail("outer cycle is not Hamiltonian on its block");
        }
        std::set<Edge> outer;
        for (std::size_t i = 0; i < k; ++i) {
            const VertexId x = b.outer_cycle[i];
            const VertexId y = b.outer_cycle[(i + 1) % k];
            if (!g.adjacent(x, y)) fail("outer cycle uses a non-edge");
            outer.insert({std::min(x, y), std::max(x, y)});
        }
        for (const auto& f : b.faces) {
            for (std::size_t i = 0; i < f.size(); ++i) {
                const VertexId x = f[i];
                const VertexId y = f[(i + 1) % f.size()];
                auto it = on_faces.find({std::min(x, y), std::max(x, y)});
                if (it == on_faces.end()) fail("face uses a non-edge");
                ++it->second;
            }
        }
        for (const auto& [e, count] : on_faces) {
            const int want = outer.count(e) ? 1 : 2;
            if (count != want) fail("edge " + describe_edge(e.first, e.second) + " lies on the wrong number of faces");
        }
        if (b.faces.size() != b.edge_count - k + 1) fail("face count differs from m - n + 1");
        if (b.dual.size() + 1 != b.faces.size()) fail("dual has the wrong number of edges");
        std::vector<std::size_t> parent(b.faces.size());
        std::iota(parent.begin(), parent.end(), std::size_t{0});
        auto find = [&](std::size_t x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const auto& e : b.dual) {
            const std::size_t ra = find(e.a);
            const std::size_t rb = find(e.b);
            if (ra == rb) fail("dual graph has a cycle");
            parent[ra] = rb;
        }
    }
}

std::vector<int> three_color_outerplanar(const Graph& g) {
    const DegeneracyResult d = degeneracy_order(g);
    if (d.degeneracy > 2) throw ColoringError("degeneracy " + std::to_string(d.degeneracy) + " exceeds 2");
    std::vector<int> color(g.id_bound(), -1);
    for (auto it = d.order.rbegin(); it != d.order.rend(); ++it) {
        bool used[3] = {false, false, false};
        for (VertexId w : g.neighbors(*it)) {
            if (color[w] >= 0) used[color[w]] = true;
        }
        int c = 0;
        while (used[c]) ++c;
        color[*it] = c;
    }
    return color;
}

VertexSet largest_color_class(const Graph& g) {
    const auto color = three_color_outerplanar(g);
    VertexSet classes[3];
    for (VertexId v : g.vertices()) classes[color[v]].push_back(v);
    std::size_t best = 0;
    for (std::size_t c = 1; c < 3; ++c) {
        if (classes[c].size() > classes[best].size()) best = c;
    }
    return classes[best];
}

Graph induced_leaf_subgraph(const Graph& g, const TreeRecord& t) {
    return g.induced(t.leaves);
}

}  // namespace leafkernel
