#include "leafkernel/reduction.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <istream>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

namespace leafkernel {

namespace {

constexpr std::array<std::pair<StepKind, std::string_view>, 7> kStepNames{{
    {StepKind::drop_isolated, "drop_isolated"},
    {StepKind::strip_leaf_pair, "strip_leaf_pair"},
    {StepKind::strip_leaf, "strip_leaf"},
    {StepKind::contract_separator, "contract_separator"},
    {StepKind::remove_pendant, "remove_pendant"},
    {StepKind::contract_bridge, "contract_bridge"},
    {StepKind::remove_edge, "remove_edge"},
}};

std::string vid(VertexId v) { return v == kNoVertex ? "-" : std::to_string(v); }

VertexId parse_vid(const std::string& token) {
    if (token == "-") return kNoVertex;
    return static_cast<VertexId>(std::stoul(token));
}

bool reaches_without_edge(const Graph& g, VertexId from, VertexId to) {
    std::vector<char> seen(g.id_bound(), 0);
    std::vector<VertexId> stack{from};
    seen[from] = 1;
    while (!stack.empty()) {
        const VertexId v = stack.back();
        stack.pop_back();
        for (VertexId w : g.neighbors(v)) {
            if ((v == from && w == to) || (v == to && w == from)) continue;
            if (w == to) return true;
            if (!seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
        }
    }
    return false;
}

struct TwoPath {
    std::vector<VertexId> vertices;
    bool cycle = false;
};

std::vector<TwoPath> two_paths(const Graph& g) {
    std::vector<TwoPath> out;
    std::vector<char> seen(g.id_bound(), 0);
    for (VertexId s = 0; s < g.id_bound(); ++s) {
        if (!g.contains(s) || seen[s] || g.degree(s) != 2) continue;
        seen[s] = 1;
        std::deque<VertexId> path{s};
        bool cycle = false;
        for (int side = 0; side < 2 && !cycle; ++side) {
            VertexId prev = s;
            VertexId cur = g.neighbors(s)[side];
            while (g.degree(cur) == 2) {
                if (cur == s) {
                    cycle = true;
                    break;
                }
                if (seen[cur]) break;
                seen[cur] = 1;
                if (side == 0) {
                    path.push_back(cur);
                } else {
                    path.push_front(cur);
                }
                const auto& nb = g.neighbors(cur);
                const VertexId next = nb[0] == prev ? nb[1] : nb[0];
                prev = cur;
                cur = next;
            }
        }
        TwoPath p;
        p.vertices.assign(path.begin(), path.end());
        p.cycle = cycle;
        out.push_back(std::move(p));
    }
    return out;
}


// Mutable state shared by the NSIS/CVC reducers.
struct SeparatorReducer {
    Graph& g;
    Problem problem;
    std::int64_t& parameter;
    ReductionTrace& trace;

    std::int64_t parameter_delta(std::int64_t delta_n, std::int64_t delta_k) const {
        return problem == Problem::cvc ? delta_k : delta_n - delta_k;
    }

    // Applies the separator rule to the 2-vertex v. The caller guarantees that
    // the two neighbors of v lie in distinct components of G - S for a
    // separator S of 2-vertices containing v.
    VertexId apply_on(VertexId v) {
        const auto& nb = g.neighbors(v);
        if (nb.size() != 2) throw ReductionError("separator rule applied to a vertex of degree " + std::to_string(nb.size()));
        const VertexId a = nb[0];
        const VertexId b = nb[1];
        const std::size_t da = g.degree(a);
        const std::size_t db = g.degree(b);
        TraceStep step;
        step.middle = v;
        if (da == 1 && db == 1) {
            step.kind = StepKind::strip_leaf_pair;
            step.removed = a;
            step.other = b;
            step.delta_k = 0;
            step.delta_parameter = parameter_delta(-1, 0);
            g.remove_vertex(a);
        } else if (da == 1 || db == 1) {
            step.kind = StepKind::strip_leaf;
            step.removed = da == 1 ? a : b;
            step.other = da == 1 ? b : a;
            step.delta_k = -1;
            step.delta_parameter = parameter_delta(-1, -1);
            g.remove_vertex(step.removed);
        } else {
            step.kind = StepKind::contract_separator;
            step.removed = a;
            step.other = b;
            step.delta_k = -2;
            step.delta_parameter = parameter_delta(-2, -2);
            step.created = g.contract_path(a, v, b);
        }
        parameter += step.delta_parameter;
        trace.steps.push_back(step);
        return step.created;
    }

    // The rule as stated: drop adjacent members of S (lower id first), then
    // act on the lowest-id member whose neighbors are separated.
    void apply_rule(const VertexSet& separator) {
        std::vector<char> in_s(g.id_bound(), 0);
        for (VertexId v : separator) {
            if (!g.contains(v) || g.degree(v) != 2) {
                throw ReductionError("separator vertex " + std::to_string(v) + " is not a 2-vertex");
            }
            in_s[v] = 1;
        }
        if (components_without(g, separator).size() < 2) throw ReductionError("vertex set is not a separator");
        VertexSet s(separator.begin(), separator.end());
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        VertexSet kept;
        for (VertexId v : s) {
            const auto& nb = g.neighbors(v);
            const bool drop = std::any_of(nb.begin(), nb.end(), [&](VertexId w) { return w > v && in_s[w]; });
            if (drop) {
                in_s[v] = 0;
            } else {
                kept.push_back(v);
            }
        }
        const auto comps = components_without(g, kept);
        if (comps.size() < 2) throw ReductionError("separator lost separation after removing adjacent members");
        std::vector<std::size_t> comp_of(g.id_bound(), comps.size());
        for (std::size_t i = 0; i < comps.size(); ++i) {
            for (VertexId v : comps[i]) comp_of[v] = i;
        }
        for (VertexId v : kept) {
            const auto& nb = g.neighbors(v);
            if (comp_of[nb[0]] != comp_of[nb[1]]) {
                apply_on(v);
                return;
            }
        }
        throw ReductionError("no separator vertex joins two components");
    }

    // Phase 1: 1-vertices hanging on 2-vertices.
    bool strip_pendants() {
        std::set<VertexId> queue;
        auto consider = [&](VertexId a) {
            if (g.contains(a) && g.degree(a) == 1 && g.degree(g.neighbors(a)[0]) == 2) queue.insert(a);
        };
        for (VertexId v = 0; v < g.id_bound(); ++v) consider(v);
        bool changed = false;
        while (!queue.empty()) {
            const VertexId a = *queue.begin();
            queue.erase(queue.begin());
            if (!g.contains(a) || g.degree(a) != 1) continue;
            const VertexId v = g.neighbors(a)[0];
            if (g.degree(v) != 2) continue;
            apply_on(v);
            changed = true;
            if (g.contains(v)) consider(v);
            for (VertexId w : g.contains(v) ? g.neighbors(v) : std::vector<VertexId>{}) consider(w);
        }
        return changed;
    }

    bool still_path(const std::vector<VertexId>& p) const {
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (!g.contains(p[i]) || g.degree(p[i]) != 2) return false;
            if (i + 1 < p.size() && !g.adjacent(p[i], p[i + 1])) return false;
        }
        return true;
    }

    // Phase 2: shorten maximal paths of 2-vertices with three or more vertices.
    bool compress_paths() {
        bool changed = false;
        for (auto& tp : two_paths(g)) {
            auto& p = tp.vertices;
            if (tp.cycle) {
                // whole graph is a cycle; contract p0 p1 p2 with S = {p1, p3}
                while (p.size() >= 4 && still_path(p)) {
                    const VertexId c = apply_on(p[1]);
                    p.erase(p.begin(), p.begin() + 3);
                    p.insert(p.begin(), c);
                    changed = true;
                }
                continue;
            }
            // S = {p1, p3} isolates p2, so p0-p1-p2 may be contracted
            while (p.size() >= 4 && still_path(p)) {
                const VertexId c = apply_on(p[1]);
                p.erase(p.begin(), p.begin() + 3);
                p.insert(p.begin(), c);
                changed = true;
            }
            if (p.size() == 3 && still_path(p)) {
                // S = {p0, p2} isolates p1: act on p0
                apply_on(p[0]);
                changed = true;
            }
        }
        return changed;
    }

    // Phase 3: with every 2-path of length <= 2, cut each one once and glue
    // the components of the remainder back together through the cut vertices.
    bool merge_components() {
        std::vector<char> in_s(g.id_bound(), 0);
        VertexSet s;
        for (const auto& tp : two_paths(g)) {
            if (tp.cycle) continue;
            const auto& p = tp.vertices;
            if (p.size() == 1) {
                s.push_back(p[0]);
            } else if (p.size() == 2) {
                s.push_back(std::min(p[0], p[1]));
            }
        }
        for (VertexId v : s) in_s[v] = 1;
        const auto comps = components_without(g, s);
        if (comps.size() < 2) return false;

        std::vector<std::size_t> parent(comps.size());
        std::iota(parent.begin(), parent.end(), std::size_t{0});
        auto find = [&](std::size_t c) {
            while (parent[c] != c) c = parent[c] = parent[parent[c]];
            return c;
        };
        std::vector<std::size_t> comp_of(g.id_bound(), comps.size());
        for (std::size_t i = 0; i < comps.size(); ++i) {
            for (VertexId v : comps[i]) comp_of[v] = i;
        }
        auto comp_id = [&](VertexId v) { return v < comp_of.size() ? comp_of[v] : comps.size(); };

        std::vector<char> done(g.id_bound(), 0);
        std::deque<VertexId> queue;
        auto enqueue_around = [&](VertexId u) {
            if (!g.contains(u)) return;
            for (VertexId w : g.neighbors(u)) {
                if (w < in_s.size() && in_s[w] && !done[w]) queue.push_back(w);
            }
        };
        const std::size_t start = 0;
        for (VertexId u : comps[start]) enqueue_around(u);

        bool changed = false;
        while (!queue.empty()) {
            const VertexId v = queue.front();
            queue.pop_front();
            if (done[v] || !g.contains(v) || g.degree(v) != 2) continue;
            const auto nb = g.neighbors(v);
            const std::size_t ca = comp_id(nb[0]);
            const std::size_t cb = comp_id(nb[1]);
            if (ca >= comps.size() || cb >= comps.size()) continue;
            const std::size_t ra = find(ca);
            const std::size_t rb = find(cb);
            if (ra == rb) {
                done[v] = 1;
                continue;
            }
            if (g.degree(nb[0]) < 2 || g.degree(nb[1]) < 2) continue;
            const std::size_t marked = find(start);
            const std::size_t fresh = ra == marked ? rb : ra;
            done[v] = 1;
            const VertexId c = apply_on(v);
            changed = true;
            parent[fresh] = marked;
            comp_of.resize(g.id_bound(), comps.size());
            done.resize(g.id_bound(), 0);
            in_s.resize(g.id_bound(), 0);
            comp_of[c] = marked;
            enqueue_around(c);
            for (VertexId u : comps[fresh]) enqueue_around(u);
        }
        return changed;
    }
};

void require_problem(const Instance& inst, Problem p, const char* op) {
    if (inst.problem != p) {
        throw ReductionError(std::string(op) + " expects a " + std::string(to_string(p)) + " instance");
    }
}

}  // namespace

std::string_view to_string(Problem p) {
    switch (p) {
        case Problem::nsis: return "nsis";
        case Problem::cvc: return "cvc";
        case Problem::maxleaf: return "maxleaf";
    }
    return "?";
}

Problem parse_problem(std::string_view name) {
    if (name == "nsis") return Problem::nsis;
    if (name == "cvc") return Problem::cvc;
    if (name == "maxleaf") return Problem::maxleaf;
    throw ReductionError("unknown problem '" + std::string(name) + "'");
}

std::string_view to_string(StepKind k) {
    for (auto [kind, name] : kStepNames) {
        if (kind == k) return name;
    }
    return "?";
}

StepKind parse_step_kind(std::string_view name) {
    for (auto [kind, text] : kStepNames) {
        if (text == name) return kind;
    }
    throw ReductionError("unknown trace step '" + std::string(name) + "'");
}

void ReductionTrace::write(std::ostream& out) const {
    for (const auto& s : steps) {
        out << "step " << to_string(s.kind) << ' ' << vid(s.removed) << ' ' << vid(s.middle) << ' '
            << vid(s.other) << ' ' << vid(s.created) << ' ' << s.delta_k << ' ' << s.delta_parameter << '\n';
    }
}

ReductionTrace ReductionTrace::read(std::istream& in) {
    ReductionTrace trace;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ss(line);
        std::string tag, kind, r, m, o, c;
        TraceStep step;
        if (!(ss >> tag >> kind >> r >> m >> o >> c >> step.delta_k >> step.delta_parameter) || tag != "step") {
            throw ReductionError("malformed trace line " + std::to_string(line_no));
        }
        step.kind = parse_step_kind(kind);
        step.removed = parse_vid(r);
        step.middle = parse_vid(m);
        step.other = parse_vid(o);
        step.created = parse_vid(c);
        trace.steps.push_back(step);
    }
    return trace;
}

void apply_step(Graph& g, const TraceStep& step) {
    auto fail = [&](const std::string& why) {
        throw ReductionError("cannot replay " + std::string(to_string(step.kind)) + ": " + why);
    };
    auto path_ok = [&] {
        if (!g.contains(step.middle) || !g.contains(step.removed) || !g.contains(step.other)) return false;
        const auto& nb = g.neighbors(step.middle);
        return nb.size() == 2 && ((nb[0] == step.removed && nb[1] == step.other) ||
                                  (nb[1] == step.removed && nb[0] == step.other));
    };
    switch (step.kind) {
        case StepKind::drop_isolated:
            if (!g.contains(step.removed) || g.degree(step.removed) != 0) fail("vertex is not isolated");
            g.remove_vertex(step.removed);
            return;
        case StepKind::strip_leaf_pair:
            if (!path_ok() || g.degree(step.removed) != 1 || g.degree(step.other) != 1) fail("not a 3-vertex path");
            g.remove_vertex(step.removed);
            return;
        case StepKind::strip_leaf:
            if (!path_ok() || g.degree(step.removed) != 1 || g.degree(step.other) < 2) fail("bad degrees");
            g.remove_vertex(step.removed);
            return;
        case StepKind::contract_separator: {
            if (!path_ok() || g.degree(step.removed) < 2 || g.degree(step.other) < 2) fail("bad degrees");
            const VertexId c = g.contract_path(step.removed, step.middle, step.other);
            if (c != step.created) fail("fresh id mismatch");
            return;
        }
        case StepKind::remove_pendant:
            if (!g.contains(step.removed) || !g.contains(step.middle) || g.degree(step.removed) != 1 ||
                g.degree(step.middle) != 2 || !g.adjacent(step.removed, step.middle)) {
                fail("not a 1-vertex next to a 2-vertex");
            }
            g.remove_vertex(step.removed);
            return;
        case StepKind::contract_bridge: {
            if (!g.contains(step.removed) || !g.contains(step.other) || g.degree(step.removed) != 2 ||
                g.degree(step.other) != 2 || !g.adjacent(step.removed, step.other)) {
                fail("not two adjacent 2-vertices");
            }
            if (reaches_without_edge(g, step.removed, step.other)) fail("edge is not a bridge");
            const VertexId c = g.contract_edge(step.removed, step.other);
            if (c != step.created) fail("fresh id mismatch");
            return;
        }
        case StepKind::remove_edge:
            if (!g.contains(step.removed) || !g.contains(step.other) || g.degree(step.removed) != 2 ||
                g.degree(step.other) != 2 || !g.adjacent(step.removed, step.other)) {
                fail("not two adjacent 2-vertices");
            }
            if (!reaches_without_edge(g, step.removed, step.other)) fail("edge is a bridge");
            g.remove_edge(step.removed, step.other);
            return;
    }
}

Graph replay(Graph g, const ReductionTrace& trace) {
    for (const auto& step : trace.steps) apply_step(g, step);
    return g;
}

Reduced nsis_preprocess(const Instance& inst) {
    require_problem(inst, Problem::nsis, "nsis_preprocess");
    Reduced out{inst, {}, std::nullopt};
    if (inst.parameter <= 0) {
        out.decided = Answer::yes;
        return out;
    }
    if (inst.graph.empty()) {
        out.decided = Answer::no;
        return out;
    }
    const auto comps = connected_components(inst.graph);
    std::size_t nontrivial = 0;
    for (const auto& c : comps) nontrivial += c.size() >= 2 ? 1 : 0;
    if (nontrivial >= 2) {
        out.decided = Answer::no;
        return out;
    }
    bool kept_one = nontrivial == 1;
    for (const auto& c : comps) {
        if (c.size() != 1) continue;
        if (!kept_one) {
            kept_one = true;
            continue;
        }
        TraceStep step;
        step.kind = StepKind::drop_isolated;
        step.removed = c.front();
        step.delta_k = 0;
        step.delta_parameter = -1;
        out.instance.graph.remove_vertex(c.front());
        out.instance.parameter -= 1;
        out.trace.steps.push_back(step);
    }
    if (out.instance.parameter <= 0) out.decided = Answer::yes;
    return out;
}

Reduced separator_rule_cvc_once(const Instance& inst, const VertexSet& separator) {
    require_problem(inst, Problem::cvc, "separator_rule_cvc_once");
    Reduced out{inst, {}, std::nullopt};
    SeparatorReducer r{out.instance.graph, Problem::cvc, out.instance.parameter, out.trace};
    r.apply_rule(separator);
    return out;
}

std::optional<VertexSet> find_deg2_separator(const Graph& g) {
    if (g.empty()) return std::nullopt;
    if (connected_components(g).size() >= 2) return VertexSet{};
    VertexSet deg2;
    for (VertexId v : g.vertices()) {
        if (g.degree(v) == 2) deg2.push_back(v);
    }
    if (deg2.empty()) return std::nullopt;

    for (const auto& tp : two_paths(g)) {
        const auto& p = tp.vertices;
        if (tp.cycle) {
            if (p.size() >= 4) return VertexSet{std::min(p[0], p[2]), std::max(p[0], p[2])};
            continue;
        }
        if (p.size() >= 3) return VertexSet{std::min(p[0], p[2]), std::max(p[0], p[2])};
        const auto& front = g.neighbors(p.front());
        const VertexId x = p.size() == 1 ? front[0] : (front[0] == p[1] ? front[1] : front[0]);
        const auto& back = g.neighbors(p.back());
        const VertexId y = p.size() == 1 ? back[1] : (back[0] == p[p.size() - 2] ? back[1] : back[0]);
        if (g.degree(x) == 1) return VertexSet{p.front()};
        if (g.degree(y) == 1) return VertexSet{p.back()};
    }
    if (components_without(g, deg2).size() >= 2) return deg2;
    return std::nullopt;
}

Reduced reduce_dual_separator_exhaustive(const Instance& inst) {
    require_problem(inst, Problem::nsis, "reduce_dual_separator_exhaustive");
    if (!is_connected(inst.graph)) throw ReductionError("reduce_dual_separator_exhaustive needs a connected graph");
    Reduced out{inst, {}, std::nullopt};
    SeparatorReducer r{out.instance.graph, Problem::nsis, out.instance.parameter, out.trace};
    while (true) {
        const bool stripped = r.strip_pendants();
        const bool compressed = r.compress_paths();
        if (stripped || compressed) continue;
        if (r.merge_components()) continue;
        if (auto witness = find_deg2_separator(out.instance.graph)) {
            r.apply_rule(*witness);
            continue;
        }
        break;
    }
    return out;
}

Reduced reduce_maxleaf(const Instance& inst) {
    require_problem(inst, Problem::maxleaf, "reduce_maxleaf");
    if (!is_connected(inst.graph)) throw ReductionError("reduce_maxleaf needs a connected graph");
    Reduced out{inst, {}, std::nullopt};
    Graph& g = out.instance.graph;
    const std::int64_t k = inst.parameter;

    std::set<VertexId> pendants;   // 1-vertices next to a 2-vertex
    std::set<VertexId> twos;       // 2-vertices with a 2-neighbor
    std::vector<char> bridge_path(g.id_bound(), 0);
    auto consider = [&](VertexId v) {
        if (!g.contains(v)) return;
        const auto& nb = g.neighbors(v);
        if (nb.size() == 1 && g.degree(nb[0]) == 2) pendants.insert(v);
        if (nb.size() == 2 && (g.degree(nb[0]) == 2 || g.degree(nb[1]) == 2)) twos.insert(v);
    };
    auto consider_around = [&](VertexId v) {
        if (!g.contains(v)) return;
        consider(v);
        for (VertexId w : g.neighbors(v)) consider(w);
    };
    for (VertexId v = 0; v < g.id_bound(); ++v) consider(v);

    while (true) {
        if (g.order() == 1) {
            out.decided = k <= 1 ? Answer::yes : Answer::no;
            break;
        }
        if (g.order() == 2 && g.size() == 1) {
            out.decided = k <= 2 ? Answer::yes : Answer::no;
            break;
        }
        if (!pendants.empty()) {
            const VertexId u = *pendants.begin();
            pendants.erase(pendants.begin());
            if (!g.contains(u) || g.degree(u) != 1) continue;
            const VertexId v = g.neighbors(u)[0];
            if (g.degree(v) != 2) continue;
            TraceStep step;
            step.kind = StepKind::remove_pendant;
            step.removed = u;
            step.middle = v;
            g.remove_vertex(u);
            out.trace.steps.push_back(step);
            consider_around(v);
            continue;
        }
        if (twos.empty()) break;
        const VertexId u = *twos.begin();
        twos.erase(twos.begin());
        if (!g.contains(u) || g.degree(u) != 2) continue;
        const auto nb = g.neighbors(u);
        VertexId v = kNoVertex;
        for (VertexId w : nb) {
            if (g.degree(w) == 2) {
                v = w;
                break;
            }
        }
        if (v == kNoVertex) continue;
        const bool known = bridge_path[u] || bridge_path[v];
        const bool is_bridge = known || !reaches_without_edge(g, u, v);
        TraceStep step;
        step.removed = u;
        step.other = v;
        if (is_bridge) {
            step.kind = StepKind::contract_bridge;
            step.created = g.contract_edge(u, v);
            bridge_path.resize(g.id_bound(), 0);
            bridge_path[step.created] = 1;
            out.trace.steps.push_back(step);
            consider_around(step.created);
        } else {
            step.kind = StepKind::remove_edge;
            g.remove_edge(u, v);
            out.trace.steps.push_back(step);
            consider_around(u);
            consider_around(v);
        }
    }
    return out;
}

}  // namespace leafkernel
