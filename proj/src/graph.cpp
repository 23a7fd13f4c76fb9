#include "leafkernel/graph.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace leafkernel {

std::string describe_edge(VertexId u, VertexId v) {
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

Graph::Graph(std::size_t n) : adj_(n), alive_(n, 1), order_(n) {}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u >= n || v >= n) {
            throw GraphError("edge " + describe_edge(u, v) + " has an endpoint outside [0, " +
                             std::to_string(n) + ")");
        }
        if (u == v) throw GraphError("self-loop " + describe_edge(u, v));
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& list : g.adj_) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        g.size_ += list.size();
    }
    g.size_ /= 2;
    return g;
}

void Graph::require(VertexId v) const {
    if (!contains(v)) throw GraphError("vertex " + std::to_string(v) + " is not in the graph");
}

const std::vector<VertexId>& Graph::neighbors(VertexId v) const {
    require(v);
    return adj_[v];
}

bool Graph::adjacent(VertexId u, VertexId v) const {
    const auto& nu = neighbors(u);
    const auto& nv = neighbors(v);
    if (nu.size() <= nv.size()) return std::binary_search(nu.begin(), nu.end(), v);
    return std::binary_search(nv.begin(), nv.end(), u);
}

std::vector<VertexId> Graph::vertices() const {
    std::vector<VertexId> out;
    out.reserve(order_);
    for (VertexId v = 0; v < id_bound(); ++v) {
        if (alive_[v]) out.push_back(v);
    }
    return out;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(size_);
    for (VertexId u = 0; u < id_bound(); ++u) {
        if (!alive_[u]) continue;
        for (VertexId v : adj_[u]) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

void Graph::insert_sorted(std::vector<VertexId>& list, VertexId v) {
    auto it = std::lower_bound(list.begin(), list.end(), v);
    if (it == list.end() || *it != v) list.insert(it, v);
}

bool Graph::erase_sorted(std::vector<VertexId>& list, VertexId v) {
    auto it = std::lower_bound(list.begin(), list.end(), v);
    if (it == list.end() || *it != v) return false;
    list.erase(it);
    return true;
}

VertexId Graph::add_vertex() {
    adj_.emplace_back();
    alive_.push_back(1);
    ++order_;
    return id_bound() - 1;
}

bool Graph::add_edge(VertexId u, VertexId v) {
    require(u);
    require(v);
    if (u == v) throw GraphError("self-loop " + describe_edge(u, v));
    auto& nu = adj_[u];
    auto it = std::lower_bound(nu.begin(), nu.end(), v);
    if (it != nu.end() && *it == v) return false;
    nu.insert(it, v);
    insert_sorted(adj_[v], u);
    ++size_;
    return true;
}

bool Graph::remove_edge(VertexId u, VertexId v) {
    require(u);
    require(v);
    if (!erase_sorted(adj_[u], v)) return false;
    erase_sorted(adj_[v], u);
    --size_;
    return true;
}

void Graph::remove_vertex(VertexId v) {
    require(v);
    for (VertexId w : adj_[v]) erase_sorted(adj_[w], v);
    size_ -= adj_[v].size();
    adj_[v].clear();
    adj_[v].shrink_to_fit();
    alive_[v] = 0;
    --order_;
}

VertexId Graph::contract_path(VertexId a, VertexId v, VertexId b) {
    require(a);
    require(v);
    require(b);
    const auto& nv = adj_[v];
    const bool path_ok = nv.size() == 2 && ((nv[0] == a && nv[1] == b) || (nv[0] == b && nv[1] == a));
    if (!path_ok) {
        throw GraphError("contract_path: vertex " + std::to_string(v) + " is not adjacent to exactly {" +
                         std::to_string(a) + "," + std::to_string(b) + "}");
    }
    if (adjacent(a, b)) {
        throw GraphError("contract_path: endpoints " + describe_edge(a, b) + " are adjacent");
    }
    std::vector<VertexId> merged;
    merged.reserve(adj_[a].size() + adj_[b].size());
    std::set_union(adj_[a].begin(), adj_[a].end(), adj_[b].begin(), adj_[b].end(),
                   std::back_inserter(merged));
    merged.erase(std::remove(merged.begin(), merged.end(), v), merged.end());
    remove_vertex(a);
    remove_vertex(v);
    remove_vertex(b);
    const VertexId fresh = add_vertex();
    for (VertexId w : merged) add_edge(fresh, w);
    return fresh;
}

VertexId Graph::contract_edge(VertexId u, VertexId v) {
    if (!adjacent(u, v)) throw GraphError("contract_edge: " + describe_edge(u, v) + " is not an edge");
    std::vector<VertexId> merged;
    std::set_union(adj_[u].begin(), adj_[u].end(), adj_[v].begin(), adj_[v].end(),
                   std::back_inserter(merged));
    merged.erase(std::remove_if(merged.begin(), merged.end(),
                                [&](VertexId w) { return w == u || w == v; }),
                 merged.end());
    remove_vertex(u);
    remove_vertex(v);
    const VertexId fresh = add_vertex();
    for (VertexId w : merged) add_edge(fresh, w);
    return fresh;
}

Graph Graph::induced(std::span<const VertexId> keep) const {
    Graph h;
    h.adj_.resize(adj_.size());
    h.alive_.assign(alive_.size(), 0);
    for (VertexId v : keep) {
        require(v);
        if (!h.alive_[v]) {
            h.alive_[v] = 1;
            ++h.order_;
        }
    }
    for (VertexId v = 0; v < h.id_bound(); ++v) {
        if (!h.alive_[v]) continue;
        for (VertexId w : adj_[v]) {
            if (h.alive_[w]) h.adj_[v].push_back(w);
        }
        h.size_ += h.adj_[v].size();
    }
    h.size_ /= 2;
    return h;
}

void Graph::check_invariants() const {
    std::size_t live = 0;
    std::size_t ends = 0;
    for (VertexId v = 0; v < id_bound(); ++v) {
        if (!alive_[v]) {
            if (!adj_[v].empty()) throw GraphError("dead vertex " + std::to_string(v) + " has neighbors");
            continue;
        }
        ++live;
        const auto& list = adj_[v];
        for (std::size_t i = 0; i < list.size(); ++i) {
            const VertexId w = list[i];
            if (w == v) throw GraphError("self-loop at " + std::to_string(v));
            if (i > 0 && list[i - 1] >= w) throw GraphError("neighbor list of " + std::to_string(v) + " not strictly sorted");
            if (!contains(w)) throw GraphError("edge " + describe_edge(v, w) + " points to a dead vertex");
            if (!std::binary_search(adj_[w].begin(), adj_[w].end(), v)) {
                throw GraphError("asymmetric edge " + describe_edge(v, w));
            }
        }
        ends += list.size();
    }
    if (live != order_) throw GraphError("vertex count out of sync");
    if (ends != 2 * size_) throw GraphError("edge count out of sync");
}

bool operator==(const Graph& lhs, const Graph& rhs) {
    if (lhs.order_ != rhs.order_ || lhs.size_ != rhs.size_) return false;
    const VertexId bound = std::max(lhs.id_bound(), rhs.id_bound());
    for (VertexId v = 0; v < bound; ++v) {
        const bool a = lhs.contains(v);
        const bool b = rhs.contains(v);
        if (a != b) return false;
        if (a && lhs.adj_[v] != rhs.adj_[v]) return false;
    }
    return true;
}

Subgraph induced_compact(const Graph& g, std::span<const VertexId> keep) {
    Subgraph out;
    out.to_parent.assign(keep.begin(), keep.end());
    std::sort(out.to_parent.begin(), out.to_parent.end());
    out.to_parent.erase(std::unique(out.to_parent.begin(), out.to_parent.end()), out.to_parent.end());
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < out.to_parent.size(); ++i) {
        for (VertexId w : g.neighbors(out.to_parent[i])) {
            auto it = std::lower_bound(out.to_parent.begin(), out.to_parent.end(), w);
            if (it != out.to_parent.end() && *it == w) {
                const auto j = static_cast<VertexId>(it - out.to_parent.begin());
                if (i < j) edges.emplace_back(static_cast<VertexId>(i), j);
            }
        }
    }
    out.graph = Graph::from_edges(out.to_parent.size(), edges);
    return out;
}

Subgraph compact(const Graph& g) {
    const auto vs = g.vertices();
    return induced_compact(g, vs);
}

namespace {

std::vector<VertexSet> components_masked(const Graph& g, const std::vector<char>& blocked) {
    std::vector<VertexSet> out;
    std::vector<char> seen(g.id_bound(), 0);
    std::vector<VertexId> stack;
    for (VertexId s = 0; s < g.id_bound(); ++s) {
        if (!g.contains(s) || seen[s] || blocked[s]) continue;
        VertexSet comp;
        seen[s] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            const VertexId v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (VertexId w : g.neighbors(v)) {
                if (!seen[w] && !blocked[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

}  // namespace

std::vector<VertexSet> connected_components(const Graph& g) {
    return components_masked(g, std::vector<char>(g.id_bound(), 0));
}

bool is_connected(const Graph& g) { return connected_components(g).size() == 1; }

std::vector<VertexSet> components_without(const Graph& g, std::span<const VertexId> removed) {
    std::vector<char> blocked(g.id_bound(), 0);
    for (VertexId v : removed) {
        if (g.contains(v)) blocked[v] = 1;
    }
    return components_masked(g, blocked);
}

StructureReport bridges_and_blocks(const Graph& g) {
    StructureReport report;
    report.components = connected_components(g);

    const VertexId bound = g.id_bound();
    std::vector<std::uint32_t> disc(bound, 0), low(bound, 0);
    std::vector<char> is_cut(bound, 0);
    std::uint32_t timer = 0;

    struct Frame {
        VertexId v;
        VertexId parent;
        std::size_t next;
    };
    std::vector<Frame> stack;
    std::vector<Edge> edge_stack;

    for (const auto& comp : report.components) {
        const VertexId root = comp.front();
        if (g.degree(root) == 0) continue;
        disc[root] = low[root] = ++timer;
        stack.push_back({root, kNoVertex, 0});
        std::size_t root_children = 0;
        while (!stack.empty()) {
            Frame& f = stack.back();
            const auto& nbrs = g.neighbors(f.v);
            if (f.next < nbrs.size()) {
                const VertexId w = nbrs[f.next++];
                if (w == f.parent) continue;
                if (disc[w] == 0) {
                    edge_stack.emplace_back(f.v, w);
                    disc[w] = low[w] = ++timer;
                    if (f.v == root) ++root_children;
                    stack.push_back({w, f.v, 0});
                } else if (disc[w] < disc[f.v]) {
                    edge_stack.emplace_back(f.v, w);
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
                continue;
            }
            const VertexId v = f.v;
            const VertexId parent = f.parent;
            stack.pop_back();
            if (parent == kNoVertex) continue;
            low[parent] = std::min(low[parent], low[v]);
            if (low[v] > disc[parent]) report.bridges.emplace_back(std::min(parent, v), std::max(parent, v));
            if (low[v] >= disc[parent]) {
                if (parent != root) is_cut[parent] = 1;
                VertexSet block;
                while (true) {
                    const Edge e = edge_stack.back();
                    edge_stack.pop_back();
                    block.push_back(e.first);
                    block.push_back(e.second);
                    if (e.first == parent && e.second == v) break;
                }
                std::sort(block.begin(), block.end());
                block.erase(std::unique(block.begin(), block.end()), block.end());
                report.blocks.push_back(std::move(block));
            }
        }
        if (root_children >= 2) is_cut[root] = 1;
    }
    for (VertexId v = 0; v < bound; ++v) {
        if (is_cut[v]) report.cutvertices.push_back(v);
    }
    std::sort(report.bridges.begin(), report.bridges.end());
    std::sort(report.blocks.begin(), report.blocks.end());
    return report;
}

DegeneracyResult degeneracy_order(const Graph& g) {
    DegeneracyResult out;
    std::vector<std::size_t> deg(g.id_bound(), 0);
    std::set<std::pair<std::size_t, VertexId>> queue;
    for (VertexId v : g.vertices()) {
        deg[v] = g.degree(v);
        queue.emplace(deg[v], v);
    }
    std::vector<char> removed(g.id_bound(), 0);
    out.order.reserve(g.order());
    while (!queue.empty()) {
        const auto [d, v] = *queue.begin();
        queue.erase(queue.begin());
        removed[v] = 1;
        out.order.push_back(v);
        out.degeneracy = std::max(out.degeneracy, d);
        for (VertexId w : g.neighbors(v)) {
            if (removed[w]) continue;
            queue.erase({deg[w], w});
            --deg[w];
            queue.emplace(deg[w], w);
        }
    }
    return out;
}

StructureReport analyze(const Graph& g) {
    StructureReport report = bridges_and_blocks(g);
    auto dg = degeneracy_order(g);
    report.degeneracy_order = std::move(dg.order);
    report.degeneracy = dg.degeneracy;
    return report;
}

bool is_independent(const Graph& g, std::span<const VertexId> set) {
    std::vector<char> in(g.id_bound(), 0);
    for (VertexId v : set) {
        if (!g.contains(v)) return false;
        in[v] = 1;
    }
    for (VertexId v : set) {
        for (VertexId w : g.neighbors(v)) {
            if (in[w]) return false;
        }
    }
    return true;
}

bool remainder_connected(const Graph& g, std::span<const VertexId> removed) {
    std::vector<char> gone(g.id_bound(), 0);
    std::size_t count = 0;
    for (VertexId v : removed) {
        if (g.contains(v) && !gone[v]) {
            gone[v] = 1;
            ++count;
        }
    }
    if (count == g.order()) return g.size() == 0;
    return components_without(g, removed).size() == 1;
}

}  // namespace leafkernel

namespace leafkernel {

bool is_valid_cycle_collection(const Graph& g, const CycleCollection& c, std::string* why) {
    auto fail = [&](std::string msg) {
        if (why) *why = std::move(msg);
        return false;
    };
    std::vector<char> used(g.id_bound(), 0);
    for (std::size_t i = 0; i < c.cycles.size(); ++i) {
        const auto& cyc = c.cycles[i];
        if (cyc.size() < 3) return fail("cycle " + std::to_string(i) + " has fewer than 3 vertices");
        for (std::size_t j = 0; j < cyc.size(); ++j) {
            const VertexId v = cyc[j];
            if (!g.contains(v)) return fail("cycle " + std::to_string(i) + " uses unknown vertex " + std::to_string(v));
            if (used[v]) return fail("vertex " + std::to_string(v) + " appears twice");
            used[v] = 1;
            const VertexId w = cyc[(j + 1) % cyc.size()];
            if (!g.contains(w) || !g.adjacent(v, w)) {
                return fail("cycle " + std::to_string(i) + " misses edge " + describe_edge(v, w));
            }
        }
    }
    return true;
}

}  // namespace leafkernel
