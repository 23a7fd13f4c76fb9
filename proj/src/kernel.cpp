#include "leafkernel/kernel.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "leafkernel/bigis.hpp"
#include "leafkernel/outerplanar.hpp"
#include "leafkernel/spanning_tree.hpp"

namespace leafkernel {

namespace {

void append(ReductionTrace& into, const ReductionTrace& more) {
    into.steps.insert(into.steps.end(), more.steps.begin(), more.steps.end());
}

KernelOutcome decided(Pipeline p, const Instance& inst, Answer a, ReductionTrace trace = {}) {
    KernelOutcome out;
    out.pipeline = p;
    out.parameter = inst.parameter;
    out.decided = a;
    out.trace = std::move(trace);
    return out;
}

Certificate set_certificate(VertexSet set) {
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    Certificate c;
    c.kind = CertificateKind::nsis_set;
    c.set = std::move(set);
    return c;
}

std::vector<Edge> tree_edges(const TreeRecord& t) {
    std::vector<Edge> out;
    for (VertexId v = 0; v < t.parent.size(); ++v) {
        if (t.contains(v) && t.parent[v] != kNoVertex) out.emplace_back(v, t.parent[v]);
    }
    return out;
}

}  // namespace

std::string_view to_string(Pipeline p) {
    switch (p) {
        case Pipeline::nsis_9k: return "nsis-9k";
        case Pipeline::nsis_12k: return "nsis-12k";
        case Pipeline::maxleaf_5k: return "maxleaf-5k";
    }
    return "?";
}

Pipeline parse_pipeline(std::string_view name) {
    if (name == "nsis-9k") return Pipeline::nsis_9k;
    if (name == "nsis-12k") return Pipeline::nsis_12k;
    if (name == "maxleaf-5k") return Pipeline::maxleaf_5k;
    throw std::invalid_argument("unknown pipeline '" + std::string(name) + "'");
}

std::int64_t size_factor(Pipeline p) {
    switch (p) {
        case Pipeline::nsis_9k: return 9;
        case Pipeline::nsis_12k: return 12;
        case Pipeline::maxleaf_5k: return 5;
    }
    return 0;
}

VertexSet lift_nsis_set(const ReductionTrace& trace, const VertexSet& reduced_solution) {
    std::set<VertexId> s(reduced_solution.begin(), reduced_solution.end());
    for (auto it = trace.steps.rbegin(); it != trace.steps.rend(); ++it) {
        const TraceStep& st = *it;
        switch (st.kind) {
            case StepKind::drop_isolated:
                s.insert(st.removed);
                break;
            case StepKind::strip_leaf_pair:
                s.erase(st.middle);
                s.insert(st.removed);
                s.insert(st.other);
                break;
            case StepKind::strip_leaf:
                s.erase(st.middle);
                s.insert(st.removed);
                break;
            case StepKind::contract_separator:
                if (s.erase(st.created)) s.insert(st.middle);
                break;
            default:
                throw KernelError("trace step " + std::string(to_string(st.kind)) + " does not belong to an NSIS reduction");
        }
    }
    return VertexSet(s.begin(), s.end());
}

std::vector<Edge> lift_maxleaf_tree(const Graph& original, const ReductionTrace& trace, std::vector<Edge> tree) {
    // the neighbor of u outside the contracted edge, per contract_bridge step
    std::vector<VertexId> outer(trace.steps.size(), kNoVertex);
    Graph g = original;
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        const TraceStep& st = trace.steps[i];
        if (st.kind == StepKind::contract_bridge) {
            for (VertexId w : g.neighbors(st.removed)) {
                if (w != st.other) outer[i] = w;
            }
        }
        apply_step(g, st);
    }
    for (std::size_t i = trace.steps.size(); i-- > 0;) {
        const TraceStep& st = trace.steps[i];
        switch (st.kind) {
            case StepKind::remove_pendant:
                tree.emplace_back(st.removed, st.middle);
                break;
            case StepKind::contract_bridge:
                for (auto& [a, b] : tree) {
                    if (a == st.created) a = b == outer[i] ? st.removed : st.other;
                    if (b == st.created) b = a == outer[i] ? st.removed : st.other;
                }
                tree.emplace_back(st.removed, st.other);
                break;
            case StepKind::remove_edge:
                break;
            default:
                throw KernelError("trace step " + std::string(to_string(st.kind)) + " does not belong to a MaxLeaf reduction");
        }
    }
    return tree;
}

Certificate tree_certificate(const std::vector<Edge>& edges, VertexId root) {
    std::map<VertexId, std::vector<VertexId>> adj;
    for (auto [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    Certificate c;
    c.kind = CertificateKind::maxleaf_tree;
    c.root = root;
    std::set<VertexId> seen{root};
    std::vector<VertexId> queue{root};
    for (std::size_t i = 0; i < queue.size(); ++i) {
        auto& nb = adj[queue[i]];
        std::sort(nb.begin(), nb.end());
        for (VertexId w : nb) {
            if (seen.insert(w).second) {
                queue.push_back(w);
                c.parent_of.emplace_back(w, queue[i]);
            }
        }
    }
    std::sort(c.parent_of.begin(), c.parent_of.end());
    return c;
}

std::size_t count_tree_leaves(std::size_t order, const std::vector<Edge>& parent_of) {
    if (order == 1) return 1;
    std::map<VertexId, std::size_t> deg;
    for (auto [a, b] : parent_of) {
        ++deg[a];
        ++deg[b];
    }
    return static_cast<std::size_t>(std::count_if(deg.begin(), deg.end(), [](auto& e) { return e.second == 1; }));
}

KernelOutcome kernelize_nsis(const Instance& inst, Pipeline variant) {
    if (inst.problem != Problem::nsis) throw KernelError("NSIS pipeline needs an nsis instance");
    if (variant == Pipeline::maxleaf_5k) throw KernelError("not an NSIS pipeline");
    if (inst.parameter <= 0) {
        auto out = decided(variant, inst, Answer::yes);
        out.certificate = set_certificate({});
        return out;
    }
    Reduced pre = nsis_preprocess(inst);
    if (pre.decided) {
        auto out = decided(variant, inst, *pre.decided, pre.trace);
        if (*pre.decided == Answer::yes) out.certificate = set_certificate(lift_nsis_set(pre.trace, {}));
        return out;
    }
    Reduced red = reduce_dual_separator_exhaustive(pre.instance);
    ReductionTrace trace = pre.trace;
    append(trace, red.trace);
    const Graph& g = red.instance.graph;
    const std::int64_t ell = red.instance.parameter;
    if (ell <= 0) {
        auto out = decided(variant, inst, Answer::yes, trace);
        out.certificate = set_certificate(lift_nsis_set(trace, {}));
        return out;
    }

    const TreeRecord t = build_spanning_tree(g, Strategy::branching);
    const Graph leaf_graph = induced_leaf_subgraph(g, t);
    VertexSet solution;
    if (variant == Pipeline::nsis_12k) {
        solution = largest_color_class(leaf_graph);
    } else {
        solution = independent_set_with_cycles(leaf_graph).independent;
    }

    KernelOutcome out;
    out.pipeline = variant;
    out.parameter = inst.parameter;
    out.tree_leaves = t.leaves.size();
    out.leaf_solution = solution.size();
    if (static_cast<std::int64_t>(solution.size()) >= ell) {
        out.decided = Answer::yes;
        out.certificate = set_certificate(lift_nsis_set(trace, solution));
        out.trace = std::move(trace);
        return out;
    }
    const auto n = static_cast<std::int64_t>(g.order());
    if (n >= size_factor(variant) * ell) {
        throw KernelError("reduced instance with n' = " + std::to_string(n) + " and l' = " + std::to_string(ell) +
                          " breaks the size bound");
    }
    out.reduced = red.instance;
    out.cvc_parameter = n - ell;
    out.trace = std::move(trace);
    return out;
}

KernelOutcome kernelize_maxleaf(const Instance& inst) {
    if (inst.problem != Problem::maxleaf) throw KernelError("MaxLeaf pipeline needs a maxleaf instance");
    const Pipeline p = Pipeline::maxleaf_5k;
    if (inst.graph.empty() || !is_connected(inst.graph)) return decided(p, inst, Answer::no);
    if (inst.parameter <= 0) return decided(p, inst, Answer::yes);

    Reduced red = reduce_maxleaf(inst);
    const Graph& g = red.instance.graph;
    const std::int64_t k = red.instance.parameter;
    if (red.decided) {
        auto out = decided(p, inst, *red.decided, red.trace);
        if (*red.decided == Answer::yes) {
            auto edges = lift_maxleaf_tree(inst.graph, red.trace, g.edges());
            out.certificate = tree_certificate(edges, inst.graph.vertices().front());
        }
        return out;
    }
    const TreeRecord t = build_spanning_tree(g, Strategy::maxleaf);
    const auto edges = tree_edges(t);
    const std::size_t leaves = count_tree_leaves(g.order(), edges);
    KernelOutcome out;
    out.pipeline = p;
    out.parameter = inst.parameter;
    out.tree_leaves = t.leaves.size();
    out.leaf_solution = leaves;
    if (static_cast<std::int64_t>(leaves) >= k) {
        out.decided = Answer::yes;
        out.certificate = tree_certificate(lift_maxleaf_tree(inst.graph, red.trace, edges), inst.graph.vertices().front());
        out.trace = std::move(red.trace);
        return out;
    }
    const auto n = static_cast<std::int64_t>(g.order());
    if (n >= 5 * k) {
        throw KernelError("reduced instance with n' = " + std::to_string(n) + " and k' = " + std::to_string(k) +
                          " breaks the size bound");
    }
    out.reduced = red.instance;
    out.trace = std::move(red.trace);
    return out;
}

KernelOutcome kernelize(const Instance& inst, Pipeline pipeline) {
    return pipeline == Pipeline::maxleaf_5k ? kernelize_maxleaf(inst) : kernelize_nsis(inst, pipeline);
}

bool verify_certificate(const Graph& g, const Certificate& c, std::int64_t parameter, std::string* why) {
    auto fail = [&](std::string msg) {
        if (why) *why = std::move(msg);
        return false;
    };
    switch (c.kind) {
        case CertificateKind::empty:
            return parameter <= 0 ? true : fail("empty certificate for a positive parameter");
        case CertificateKind::nsis_set: {
            std::set<VertexId> seen;
            for (VertexId v : c.set) {
                if (!g.contains(v)) return fail("unknown vertex " + std::to_string(v));
                if (!seen.insert(v).second) return fail("vertex " + std::to_string(v) + " listed twice");
            }
            if (c.set.empty() && parameter <= 0) return true;
            if (static_cast<std::int64_t>(c.set.size()) < parameter) {
                return fail("set has " + std::to_string(c.set.size()) + " vertices, need " + std::to_string(parameter));
            }
            if (!is_independent(g, c.set)) return fail("set is not independent");
            if (!remainder_connected(g, c.set)) return fail("removing the set disconnects the graph");
            return true;
        }
        case CertificateKind::maxleaf_tree: {
            if (!g.contains(c.root)) return fail("root is not a vertex");
            if (c.parent_of.size() + 1 != g.order()) return fail("tree does not have n - 1 edges");
            std::map<VertexId, VertexId> parent;
            for (auto [child, par] : c.parent_of) {
                if (!g.contains(child) || !g.contains(par)) return fail("tree names an unknown vertex");
                if (!g.adjacent(child, par)) return fail("tree edge " + describe_edge(child, par) + " is not a graph edge");
                if (child == c.root || !parent.emplace(child, par).second) return fail("vertex " + std::to_string(child) + " has two parents");
            }
            // n - 1 edges without a cycle span the graph
            std::map<VertexId, VertexId> rep;
            auto find = [&](VertexId x) {
                auto it = rep.try_emplace(x, x).first;
                while (it->second != x) {
                    x = it->second;
                    it = rep.try_emplace(x, x).first;
                }
                return x;
            };
            for (auto [child, par] : c.parent_of) {
                const VertexId a = find(child);
                const VertexId b = find(par);
                if (a == b) return fail("tree edges contain a cycle");
                rep[a] = b;
            }
            const std::size_t leaves = count_tree_leaves(g.order(), c.parent_of);
            if (static_cast<std::int64_t>(leaves) < parameter) {
                return fail("tree has " + std::to_string(leaves) + " leaves, need " + std::to_string(parameter));
            }
            return true;
        }
    }
    return fail("unknown certificate kind");
}

}  // namespace leafkernel
