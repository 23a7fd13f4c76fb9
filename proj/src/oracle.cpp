#include "leafkernel/oracle.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>

namespace leafkernel {

namespace {

using Mask = std::uint64_t;

struct Masked {
    Subgraph sub;
    std::vector<Mask> adj;
    Mask full = 0;
};

Masked to_masks(const Graph& g, std::size_t limit, const char* who) {
    if (g.order() > limit) {
        throw OracleGuardError(std::string(who) + " refuses graphs with more than " + std::to_string(limit) +
                               " vertices (got " + std::to_string(g.order()) + ")");
    }
    Masked m{compact(g), {}, 0};
    const std::size_t n = m.sub.graph.order();
    m.adj.assign(n, 0);
    for (VertexId v = 0; v < n; ++v) {
        for (VertexId w : m.sub.graph.neighbors(v)) m.adj[v] |= Mask{1} << w;
    }
    m.full = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
    return m;
}

Mask reach(const std::vector<Mask>& adj, Mask within, Mask start) {
    Mask seen = start & within;
    Mask frontier = seen;
    while (frontier) {
        Mask next = 0;
        for (Mask f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
        next &= within & ~seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

bool mask_connected(const std::vector<Mask>& adj, Mask within) {
    if (within == 0) return false;
    return reach(adj, within, within & (~within + 1)) == within;
}

std::size_t mask_components(const std::vector<Mask>& adj, Mask within) {
    std::size_t count = 0;
    while (within) {
        within &= ~reach(adj, within, within & (~within + 1));
        ++count;
    }
    return count;
}

VertexSet unmask(const Masked& m, Mask s) {
    VertexSet out;
    for (; s; s &= s - 1) out.push_back(m.sub.to_parent[std::countr_zero(s)]);
    return out;
}

bool has_edges(const Masked& m) {
    return std::any_of(m.adj.begin(), m.adj.end(), [](Mask a) { return a != 0; });
}

}  // namespace

OracleResult max_nsis_bruteforce(const Graph& g) {
    const Masked m = to_masks(g, kSubsetOracleLimit, "max_nsis_bruteforce");
    const std::size_t n = m.adj.size();
    const bool edges = has_edges(m);
    auto feasible_remainder = [&](Mask s) {
        const Mask rest = m.full & ~s;
        return rest == 0 ? !edges : mask_connected(m.adj, rest);
    };
    OracleResult best{-1, {}, {}};
    Mask best_set = 0;
    if (feasible_remainder(0)) best.optimum = 0;
    // Gray code walk; `conflicts` counts edges inside the current set
    Mask s = 0;
    std::int64_t conflicts = 0;
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t i = 1; i < total; ++i) {
        const int v = std::countr_zero(i);
        const Mask bit = Mask{1} << v;
        const auto touching = static_cast<std::int64_t>(std::popcount(m.adj[v] & s));
        if (s & bit) {
            s &= ~bit;
            conflicts -= touching;
        } else {
            s |= bit;
            conflicts += touching;
        }
        const auto size = static_cast<std::int64_t>(std::popcount(s));
        if (conflicts == 0 && size > best.optimum && feasible_remainder(s)) {
            best.optimum = size;
            best_set = s;
        }
    }
    if (best.optimum >= 0) best.witness = unmask(m, best_set);
    std::sort(best.witness.begin(), best.witness.end());
    return best;
}

OracleResult min_cvc_bruteforce(const Graph& g) {
    const Masked m = to_masks(g, kSubsetOracleLimit, "min_cvc_bruteforce");
    const std::size_t n = m.adj.size();
    OracleResult best{-1, {}, {}};
    if (!has_edges(m)) {
        best.optimum = 0;
        return best;
    }
    Mask best_set = 0;
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t c = 1; c < total; ++c) {
        const auto size = static_cast<std::int64_t>(std::popcount(c));
        if (best.optimum >= 0 && size >= best.optimum) continue;
        bool cover = true;
        for (std::size_t v = 0; v < n && cover; ++v) {
            if (!(c >> v & 1) && (m.adj[v] & ~c)) cover = false;
        }
        if (cover && mask_connected(m.adj, c)) {
            best.optimum = size;
            best_set = c;
        }
    }
    if (best.optimum >= 0) best.witness = unmask(m, best_set);
    std::sort(best.witness.begin(), best.witness.end());
    return best;
}

OracleResult max_leaf_bruteforce(const Graph& g) {
    const Masked m = to_masks(g, kTreeOracleLimit, "max_leaf_bruteforce");
    const std::size_t n = m.adj.size();
    if (n == 0 || !mask_connected(m.adj, m.full)) throw OracleGuardError("max_leaf_bruteforce needs a connected graph");
    const auto& h = m.sub.graph;
    const std::vector<Edge> edges = h.edges();
    OracleResult best{n == 1 ? 1 : 0, {}, {}};
    if (n == 1) return best;

    std::vector<VertexId> parent(n);
    std::iota(parent.begin(), parent.end(), VertexId{0});
    std::vector<std::pair<VertexId, VertexId>> undo;
    auto find = [&](VertexId x) {
        while (parent[x] != x) x = parent[x];
        return x;
    };
    std::vector<int> degree(n, 0);
    std::vector<std::size_t> chosen;

    // can the forest plus edges[from..] still connect everything?
    auto completable = [&](std::size_t from) {
        std::vector<VertexId> p(parent);
        std::function<VertexId(VertexId)> f = [&](VertexId x) { return p[x] == x ? x : p[x] = f(p[x]); };
        std::size_t comps = 0;
        for (VertexId v = 0; v < n; ++v) comps += f(v) == v ? 1 : 0;
        for (std::size_t i = from; i < edges.size() && comps > 1; ++i) {
            const VertexId a = f(edges[i].first);
            const VertexId b = f(edges[i].second);
            if (a != b) {
                p[a] = b;
                --comps;
            }
        }
        return comps == 1;
    };

    std::function<void(std::size_t)> rec = [&](std::size_t idx) {
        if (chosen.size() == n - 1) {
            const auto leaves = std::count(degree.begin(), degree.end(), 1);
            if (leaves > best.optimum) {
                best.optimum = leaves;
                best.tree_edges.clear();
                for (std::size_t e : chosen) {
                    best.tree_edges.emplace_back(m.sub.to_parent[edges[e].first], m.sub.to_parent[edges[e].second]);
                }
            }
            return;
        }
        if (idx == edges.size() || edges.size() - idx < n - 1 - chosen.size()) return;
        const auto [u, v] = edges[idx];
        const VertexId a = find(u);
        const VertexId b = find(v);
        if (a != b) {
            parent[a] = b;
            ++degree[u];
            ++degree[v];
            chosen.push_back(idx);
            rec(idx + 1);
            chosen.pop_back();
            --degree[u];
            --degree[v];
            parent[a] = a;
        }
        if (completable(idx + 1)) rec(idx + 1);
    };
    rec(0);
    return best;
}

OracleResult max_leaf_via_dominating_set(const Graph& g) {
    const Masked m = to_masks(g, kSubsetOracleLimit, "max_leaf_via_dominating_set");
    const std::size_t n = m.adj.size();
    if (n == 0 || !mask_connected(m.adj, m.full)) {
        throw OracleGuardError("max_leaf_via_dominating_set needs a connected graph");
    }
    OracleResult best;
    if (n <= 2) {
        best.optimum = static_cast<std::int64_t>(n);
        if (n == 2) best.tree_edges.emplace_back(m.sub.to_parent[0], m.sub.to_parent[1]);
        return best;
    }
    Mask best_set = 0;
    int best_size = static_cast<int>(n) + 1;
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t d = 1; d < total; ++d) {
        const int size = std::popcount(d);
        if (size >= best_size) continue;
        Mask closed = d;
        for (Mask f = d; f; f &= f - 1) closed |= m.adj[std::countr_zero(f)];
        if (closed == m.full && mask_connected(m.adj, d)) {
            best_size = size;
            best_set = d;
        }
    }
    best.optimum = static_cast<std::int64_t>(n) - best_size;
    best.witness = unmask(m, best_set);
    std::sort(best.witness.begin(), best.witness.end());
    // BFS tree inside the dominating set, every other vertex hung below it
    std::vector<int> seen(n, 0);
    const int start = std::countr_zero(best_set);
    std::vector<int> queue{start};
    seen[start] = 1;
    for (std::size_t i = 0; i < queue.size(); ++i) {
        const int v = queue[i];
        for (Mask f = m.adj[v]; f; f &= f - 1) {
            const int w = std::countr_zero(f);
            if (!seen[w] && (best_set >> w & 1)) {
                seen[w] = 1;
                queue.push_back(w);
                best.tree_edges.emplace_back(m.sub.to_parent[v], m.sub.to_parent[w]);
            }
        }
    }
    for (std::size_t w = 0; w < n; ++w) {
        if (best_set >> w & 1) continue;
        const int v = std::countr_zero(m.adj[w] & best_set);
        best.tree_edges.emplace_back(m.sub.to_parent[v], m.sub.to_parent[w]);
    }
    return best;
}

std::optional<VertexSet> deg2_separator_witness(const Graph& g) {
    const Masked m = to_masks(g, 64, "deg2_separator_witness");
    std::vector<int> deg2;
    for (std::size_t v = 0; v < m.adj.size(); ++v) {
        if (std::popcount(m.adj[v]) == 2) deg2.push_back(static_cast<int>(v));
    }
    if (deg2.size() > kSubsetOracleLimit) {
        throw OracleGuardError("deg2_separator_witness refuses graphs with more than 20 vertices of degree 2");
    }
    const std::uint64_t total = std::uint64_t{1} << deg2.size();
    std::optional<Mask> found;
    int found_size = 0;
    for (std::uint64_t sel = 0; sel < total; ++sel) {
        const int size = std::popcount(sel);
        if (found && size >= found_size) continue;
        Mask s = 0;
        for (std::uint64_t f = sel; f; f &= f - 1) s |= Mask{1} << deg2[std::countr_zero(f)];
        if (mask_components(m.adj, m.full & ~s) >= 2) {
            found = s;
            found_size = size;
        }
    }
    if (!found) return std::nullopt;
    VertexSet out = unmask(m, *found);
    std::sort(out.begin(), out.end());
    return out;
}

CycleCollection best_cycle_collection_bruteforce(const Graph& g) {
    const Masked m = to_masks(g, kTreeOracleLimit, "best_cycle_collection_bruteforce");
    const int n = static_cast<int>(m.adj.size());
    struct Cycle {
        Mask mask;
        std::vector<int> seq;
    };
    std::vector<std::vector<Cycle>> by_min(n);
    std::vector<int> path;
    std::function<void(int, int, Mask)> walk = [&](int s, int v, Mask used) {
        for (Mask f = m.adj[v]; f; f &= f - 1) {
            const int w = std::countr_zero(f);
            if (w == s && path.size() >= 3 && path[1] < path.back()) by_min[s].push_back({used, path});
            if (w <= s || (used >> w & 1)) continue;
            path.push_back(w);
            walk(s, w, used | Mask{1} << w);
            path.pop_back();
        }
    };
    for (int s = 0; s < n; ++s) {
        path = {s};
        walk(s, s, Mask{1} << s);
    }
    // decide vertices in id order: either unused or the minimum of a cycle
    std::map<std::pair<int, Mask>, std::pair<int, int>> memo;  // -> (best count, chosen cycle or -1)
    std::function<int(int, Mask)> solve = [&](int v, Mask used) -> int {
        if (v >= n) return 0;
        if (used >> v & 1) return solve(v + 1, used);
        auto key = std::make_pair(v, used);
        if (auto it = memo.find(key); it != memo.end()) return it->second.first;
        int best = solve(v + 1, used);
        int pick = -1;
        for (std::size_t c = 0; c < by_min[v].size(); ++c) {
            if (by_min[v][c].mask & used) continue;
            const int got = 1 + solve(v + 1, used | by_min[v][c].mask);
            if (got > best) {
                best = got;
                pick = static_cast<int>(c);
            }
        }
        memo[key] = {best, pick};
        return best;
    };
    solve(0, 0);
    CycleCollection out;
    Mask used = 0;
    for (int v = 0; v < n; ++v) {
        if (used >> v & 1) continue;
        auto it = memo.find({v, used});
        if (it == memo.end() || it->second.second < 0) continue;
        const auto& c = by_min[v][it->second.second];
        used |= c.mask;
        std::vector<VertexId> seq;
        for (int x : c.seq) seq.push_back(m.sub.to_parent[x]);
        out.cycles.push_back(std::move(seq));
    }
    return out;
}

Answer oracle_answer(const Instance& inst) {
    const Graph& g = inst.graph;
    const std::int64_t p = inst.parameter;
    switch (inst.problem) {
        case Problem::nsis:
            if (p <= 0) return Answer::yes;
            return max_nsis_bruteforce(g).optimum >= p ? Answer::yes : Answer::no;
        case Problem::cvc: {
            if (p < 0) return Answer::no;
            const auto r = min_cvc_bruteforce(g);
            return r.optimum >= 0 && r.optimum <= p ? Answer::yes : Answer::no;
        }
        case Problem::maxleaf:
            if (g.empty() || !is_connected(g)) return Answer::no;
            if (p <= 0) return Answer::yes;
            return max_leaf_via_dominating_set(g).optimum >= p ? Answer::yes : Answer::no;
    }
    return Answer::no;
}

}  // namespace leafkernel
