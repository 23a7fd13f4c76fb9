#include "leafkernel/spanning_tree.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace leafkernel {

namespace {

class Builder {
public:
    Builder(const Graph& g, Strategy strategy) : g_(g), strategy_(strategy) {
        const std::size_t bound = g.id_bound();
        t_.strategy = strategy;
        t_.parent.assign(bound, kNoVertex);
        t_.insertion.assign(bound, kNotInTree);
        t_.children.assign(bound, 0);
        t_.expanded_by.assign(bound, OpType::o1);
        t_.inner.assign(bound, 0);
        out_.assign(bound, 0);
        in_.assign(bound, 0);
        x_of_.assign(bound, kNoVertex);
        blocked_by_.assign(bound, kNoVertex);
        o1_key_.assign(bound, {-1, -1});
        filter_ = strategy != Strategy::maxleaf && filtered_connected();
        for (VertexId v : g.vertices()) {
            for (VertexId w : g.neighbors(v)) out_[v] += usable(v, w) ? 1 : 0;
        }
    }

    bool usable(VertexId u, VertexId w) const {
        return !filter_ || g_.degree(u) != 2 || g_.degree(w) != 2;
    }

    // Dropping the edges between 2-vertices disconnects K3 and graphs that
    // violate the precondition; those are built on g itself.
    bool filtered_connected() const {
        if (g_.empty()) return true;
        std::vector<char> seen(g_.id_bound(), 0);
        std::vector<VertexId> stack{g_.vertices().front()};
        seen[stack.back()] = 1;
        std::size_t reached = 1;
        while (!stack.empty()) {
            const VertexId v = stack.back();
            stack.pop_back();
            for (VertexId w : g_.neighbors(v)) {
                if (seen[w] || (g_.degree(v) == 2 && g_.degree(w) == 2)) continue;
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
        return reached == g_.order();
    }

    void start(VertexId root) {
        if (!g_.contains(root)) throw TreeBuildError("root " + std::to_string(root) + " is not a vertex", {});
        t_.root = root;
        add(root, kNoVertex);
    }

    bool spanning() const { return t_.order == g_.order(); }

    // Picks and performs the next operation; false if none applies.
    bool step() {
        died_.clear();
        if (!o1_.empty()) {
            expand(by_ins_[o1_.rbegin()->second], OpType::o1);
            return true;
        }
        if (!o23_.empty()) {
            const VertexId v = by_ins_[*o23_.rbegin()];
            const VertexId x = x_of_[v];
            if (out_[x] >= 2) {
                expand(v, OpType::o3);
                expand(x, OpType::o3);
            } else {
                expand(v, OpType::o2);
                assign(v, x);
            }
            return true;
        }
        if (strategy_ == Strategy::maxleaf && !live_.empty()) {
            expand(by_ins_[*live_.rbegin()], OpType::o4);
            return true;
        }
        return false;
    }

    // Replays one logged expansion after checking that it is legal now.
    void apply(const Expansion& e, const Expansion* next) {
        died_.clear();
        const VertexId v = e.expanded;
        auto fail = [&](const std::string& why) {
            throw TreeIntegrityError("expansion of " + std::to_string(v) + " rejected: " + why);
        };
        if (!is_leaf(v)) fail("not a leaf of the current tree");
        if (pending_o3_ != kNoVertex) {
            if (e.op != OpType::o3 || v != pending_o3_) fail("O3 must expand the vertex it just added");
            pending_o3_ = kNoVertex;
            check_added(e);
            expand(v, OpType::o3);
            return;
        }
        switch (e.op) {
            case OpType::o1:
                if (out_[v] < 2) fail("O1 needs two outside neighbors");
                break;
            case OpType::o2: {
                if (!o1_.empty()) fail("O1 takes precedence");
                if (out_[v] != 1) fail("O2 needs exactly one outside neighbor");
                const VertexId x = outside_neighbor(v);
                if (!(out_[x] == 0 || in_[x] >= 2)) fail("O2 condition on the added vertex fails");
                break;
            }
            case OpType::o3: {
                if (!o1_.empty()) fail("O1 takes precedence");
                if (out_[v] != 1) fail("O3 needs exactly one outside neighbor");
                const VertexId x = outside_neighbor(v);
                if (out_[x] < 2) fail("O3 condition on the added vertex fails");
                if (next == nullptr || next->op != OpType::o3 || next->expanded != x) fail("O3 is not followed by its second half");
                pending_o3_ = x;
                break;
            }
            case OpType::o4:
                if (strategy_ != Strategy::maxleaf) fail("O4 only exists in the MAXLEAF builder");
                if (!o1_.empty() || !o23_.empty()) fail("O4 used while O1-O3 apply");
                if (out_[v] == 0) fail("O4 needs a leaf that is not dead");
                break;
        }
        check_added(e);
        expand(v, e.op);
        if (e.op == OpType::o2) assign(v, e.added.front());
    }

    VertexSet stall_witness() const {
        VertexSet w;
        for (VertexId v : g_.vertices()) {
            if (!is_leaf(v)) continue;
            for (VertexId x : g_.neighbors(v)) {
                if (usable(v, x) && !in_tree(x)) w.push_back(x);
            }
        }
        std::sort(w.begin(), w.end());
        w.erase(std::unique(w.begin(), w.end()), w.end());
        return w;
    }

    TreeRecord finish() {
        if (pending_o3_ != kNoVertex) throw TreeIntegrityError("log ends inside an O3 operation");
        std::set<VertexId> assigned;
        for (const auto& [x, leaf] : t_.assignment) assigned.insert(leaf);
        for (VertexId v : g_.vertices()) {
            if (is_leaf(v)) {
                t_.leaves.push_back(v);
                if (!assigned.count(v)) t_.unassigned.push_back(v);
            }
        }
        std::vector<VertexId> run;
        for (const auto& e : t_.expansions) {
            if (t_.children[e.expanded] >= 2) {
                run.push_back(e.expanded);
            } else if (!run.empty()) {
                t_.runs.push_back(std::move(run));
                run.clear();
            }
        }
        if (!run.empty()) t_.runs.push_back(std::move(run));
        return std::move(t_);
    }

private:
    bool in_tree(VertexId v) const { return t_.insertion[v] != kNotInTree; }
    bool is_leaf(VertexId v) const { return g_.contains(v) && in_tree(v) && !t_.inner[v]; }

    VertexId outside_neighbor(VertexId v) const {
        for (VertexId w : g_.neighbors(v)) {
            if (usable(v, w) && !in_tree(w)) return w;
        }
        return kNoVertex;
    }

    void check_added(const Expansion& e) const {
        std::vector<VertexId> expect;
        for (VertexId w : g_.neighbors(e.expanded)) {
            if (usable(e.expanded, w) && !in_tree(w)) expect.push_back(w);
        }
        if (expect != e.added) {
            throw TreeIntegrityError("expansion of " + std::to_string(e.expanded) +
                                     " does not add exactly its outside neighbors");
        }
    }

    void forget(VertexId v) {
        if (o1_key_[v].first >= 0) {
            o1_.erase(o1_key_[v]);
            o1_key_[v] = {-1, -1};
        }
        o23_.erase(t_.insertion[v]);
        live_.erase(t_.insertion[v]);
    }

    void classify(VertexId v) {
        forget(v);
        const std::int64_t ins = t_.insertion[v];
        if (out_[v] >= 2) {
            o1_key_[v] = {strategy_ == Strategy::branching ? out_[v] : 0, ins};
            o1_.insert(o1_key_[v]);
            live_.insert(ins);
        } else if (out_[v] == 1) {
            if (x_of_[v] == kNoVertex) x_of_[v] = outside_neighbor(v);
            live_.insert(ins);
            evaluate(v);
        } else if (!t_.dead_at.count(v)) {
            t_.dead_at[v] = t_.expansions.size();
            died_.push_back(v);
        }
    }

    void evaluate(VertexId v) {
        const VertexId x = x_of_[v];
        if (out_[x] == 1 && in_[x] == 1) {
            blocked_by_[x] = v;
        } else {
            o23_.insert(t_.insertion[v]);
        }
    }

    void add(VertexId y, VertexId parent) {
        t_.insertion[y] = static_cast<std::int64_t>(by_ins_.size());
        by_ins_.push_back(y);
        t_.parent[y] = parent;
        ++t_.order;
        for (VertexId w : g_.neighbors(y)) {
            if (!usable(y, w)) continue;
            --out_[w];
            ++in_[w];
        }
        for (VertexId w : g_.neighbors(y)) {
            if (!usable(y, w)) continue;
            if (in_tree(w)) {
                if (!t_.inner[w]) classify(w);
            } else if (blocked_by_[w] != kNoVertex) {
                const VertexId v = blocked_by_[w];
                blocked_by_[w] = kNoVertex;
                if (is_leaf(v) && out_[v] == 1 && x_of_[v] == w) evaluate(v);
            }
        }
        classify(y);
    }

    void expand(VertexId v, OpType op) {
        forget(v);
        t_.inner[v] = 1;
        t_.expanded_by[v] = op;
        Expansion e{op, v, {}};
        for (VertexId w : g_.neighbors(v)) {
            if (usable(v, w) && !in_tree(w)) e.added.push_back(w);
        }
        for (VertexId y : e.added) add(y, v);
        t_.children[v] = static_cast<std::uint32_t>(e.added.size());
        t_.expansions.push_back(std::move(e));
    }

    void assign(VertexId v, VertexId x) {
        if (died_.empty()) throw TreeIntegrityError("O2 at " + std::to_string(v) + " killed no leaf");
        VertexId pick = died_.front();
        if (std::find(died_.begin(), died_.end(), x) != died_.end()) {
            pick = x;
        } else {
            for (VertexId d : died_) {
                if (t_.insertion[d] < t_.insertion[pick]) pick = d;
            }
        }
        t_.assignment[v] = pick;
    }

    const Graph& g_;
    Strategy strategy_;
    bool filter_ = false;
    TreeRecord t_;
    std::vector<std::int64_t> out_, in_;
    std::vector<VertexId> x_of_, blocked_by_, by_ins_, died_;
    std::vector<std::pair<std::int64_t, std::int64_t>> o1_key_;
    std::set<std::pair<std::int64_t, std::int64_t>> o1_;
    std::set<std::int64_t> o23_;
    std::set<std::int64_t> live_;
    VertexId pending_o3_ = kNoVertex;
};

VertexId default_root(const Graph& g, VertexId root) {
    if (g.empty()) throw TreeBuildError("cannot span an empty graph", {});
    if (root != kNoVertex) return root;
    return g.vertices().front();
}

}  // namespace

std::string_view to_string(Strategy s) {
    switch (s) {
        case Strategy::generic: return "generic";
        case Strategy::branching: return "branching";
        case Strategy::maxleaf: return "maxleaf";
    }
    return "?";
}

Strategy parse_strategy(std::string_view name) {
    if (name == "generic") return Strategy::generic;
    if (name == "branching") return Strategy::branching;
    if (name == "maxleaf") return Strategy::maxleaf;
    throw std::invalid_argument("unknown strategy '" + std::string(name) + "'");
}

TreeRecord build_spanning_tree(const Graph& g, Strategy strategy, VertexId root) {
    root = default_root(g, root);
    if (!is_connected(g)) throw TreeBuildError("graph is disconnected", {});
    Builder b(g, strategy);
    b.start(root);
    while (!b.spanning()) {
        if (!b.step()) {
            auto witness = b.stall_witness();
            std::string list;
            for (VertexId v : witness) list += (list.empty() ? "" : " ") + std::to_string(v);
            throw TreeBuildError("no expansion applies; 2-vertex separator {" + list + "}", std::move(witness));
        }
    }
    return b.finish();
}

TreeRecord replay_tree(const Graph& g, Strategy strategy, VertexId root, const std::vector<Expansion>& log) {
    root = default_root(g, root);
    Builder b(g, strategy);
    b.start(root);
    for (std::size_t i = 0; i < log.size(); ++i) {
        b.apply(log[i], i + 1 < log.size() ? &log[i + 1] : nullptr);
    }
    if (!b.spanning()) throw TreeIntegrityError("expansion log does not span the graph");
    return b.finish();
}

void check_spanning(const Graph& g, const TreeRecord& t) {
    if (t.order != g.order()) throw TreeIntegrityError("tree has " + std::to_string(t.order) + " vertices, graph " + std::to_string(g.order()));
    if (!g.contains(t.root) || !t.contains(t.root)) throw TreeIntegrityError("root is not a graph vertex");
    for (VertexId v : g.vertices()) {
        if (!t.contains(v)) throw TreeIntegrityError("vertex " + std::to_string(v) + " is not spanned");
        if (v == t.root) continue;
        const VertexId p = t.parent[v];
        if (p == kNoVertex || !g.contains(p) || !g.adjacent(v, p)) {
            throw TreeIntegrityError("tree edge at " + std::to_string(v) + " is not a graph edge");
        }
        if (t.insertion[p] >= t.insertion[v]) throw TreeIntegrityError("parent of " + std::to_string(v) + " inserted later");
    }
}

std::int64_t TreeStats::sum_d_pd(std::size_t from) const {
    std::int64_t s = 0;
    for (auto [d, count] : p) {
        if (d >= from) s += static_cast<std::int64_t>(d * count);
    }
    return s;
}

std::int64_t TreeStats::sum_weighted_pd() const {
    std::int64_t s = 0;
    for (auto [d, count] : p) {
        if (d >= 2) s += (2 * static_cast<std::int64_t>(d) - 3) * static_cast<std::int64_t>(count);
    }
    return s;
}

std::int64_t TreeStats::leaf_surplus() const {
    return static_cast<std::int64_t>(unassigned) + sum_weighted_pd() - static_cast<std::int64_t>(x3_p2);
}

TreeStats tree_stats(const TreeRecord& t) {
    TreeStats s;
    s.n = t.order;
    s.leaves = t.leaves.size();
    s.unassigned = t.unassigned.size();
    std::size_t inner = 0;
    for (const auto& e : t.expansions) {
        const VertexId v = e.expanded;
        if (!t.inner[v] || t.expanded_by[v] != e.op) throw TreeIntegrityError("expansion log disagrees with the record");
        ++inner;
        const std::size_t c = t.children[v];
        if (c != e.added.size() || c == 0) throw TreeIntegrityError("child count mismatch at " + std::to_string(v));
        ++s.p[c];
        switch (e.op) {
            case OpType::o1: ++s.x1; break;
            case OpType::o2: ++s.x2; break;
            case OpType::o3:
                ++s.x3;
                ++(c == 1 ? s.x3_p1 : s.x3_p2);
                break;
            case OpType::o4: ++s.x4; break;
        }
    }
    for (const auto& run : t.runs) {
        RunStats r;
        r.vertices = run;
        r.p2 = run.size();
        std::size_t child_sum = 0;
        for (VertexId v : run) {
            child_sum += t.children[v];
            r.p3 += t.children[v] >= 3 ? 1 : 0;
            r.x3 += t.expanded_by[v] == OpType::o3 ? 1 : 0;
        }
        r.children = child_sum - (run.size() - 1);
        s.runs.push_back(std::move(r));
    }

    auto fail = [](const std::string& what) { throw TreeIntegrityError(what); };
    const auto n1 = static_cast<std::int64_t>(s.n) - 1;
    if (inner + s.leaves != s.n) fail("inner and leaf counts do not add up to n");
    if (s.sum_d_pd(1) != n1) fail("child counts do not sum to n - 1");
    if (s.x3_p1 != s.x3_p2) fail("O3 operations are not paired");
    if (static_cast<std::int64_t>(s.x2 + s.x3_p1 + s.x4) + s.sum_d_pd(2) != n1) fail("one-child identity violated");
    if (s.x4 == 0 && static_cast<std::int64_t>(s.x2 + s.x3_p2) + s.sum_d_pd(2) != n1) fail("child-count identity with paired O3 violated");
    if (t.assignment.size() != s.x2 || s.x2 + s.unassigned != s.leaves) fail("assignment does not cover X2 exactly");
    if (s.x4 == 0 && s.n >= 2) {
        const std::int64_t rhs = static_cast<std::int64_t>(s.n) + 2 + s.leaf_surplus();
        if (4 * static_cast<std::int64_t>(s.leaves) != rhs) fail("leaf-count identity 4|L| = n + 2 + ... violated");
    }
    return s;
}

LeafBound leaf_bound_check(const Graph& g, const TreeRecord& t, const CycleCollection& cycles) {
    std::string why;
    if (!is_valid_cycle_collection(g, cycles, &why)) throw std::invalid_argument(why);
    std::vector<char> leaf(g.id_bound(), 0);
    for (VertexId v : t.leaves) {
        if (v < leaf.size()) leaf[v] = 1;
    }
    for (const auto& c : cycles.cycles) {
        for (VertexId v : c) {
            if (!leaf[v]) throw std::invalid_argument("cycle vertex " + std::to_string(v) + " is not a leaf");
        }
    }
    const auto n = static_cast<std::int64_t>(g.order());
    const auto l = static_cast<std::int64_t>(t.leaves.size());
    LeafBound out;
    switch (t.strategy) {
        case Strategy::branching: out.margin = 4 * l - n - 3 * static_cast<std::int64_t>(cycles.size()); break;
        case Strategy::generic: out.margin = 4 * l - n; break;
        case Strategy::maxleaf: out.margin = 5 * l - n; break;
    }
    out.holds = out.margin >= 0;
    return out;
}

bool runs_form_subtrees(const TreeRecord& t) {
    for (const auto& run : t.runs) {
        std::set<VertexId> members(run.begin(), run.end());
        for (std::size_t i = 1; i < run.size(); ++i) {
            if (!members.count(t.parent[run[i]])) return false;
        }
    }
    return true;
}

std::optional<std::size_t> opening_run(const TreeRecord& t, const std::vector<VertexId>& cycle) {
    if (cycle.empty()) return std::nullopt;
    VertexId first = cycle.front();
    for (VertexId v : cycle) {
        if (t.insertion[v] < t.insertion[first]) first = v;
    }
    const VertexId p = t.parent[first];
    for (std::size_t i = 0; i < t.runs.size(); ++i) {
        const auto& run = t.runs[i];
        if (std::find(run.begin(), run.end(), p) != run.end() &&
            std::find(run.begin(), run.end(), first) == run.end()) {
            return i;
        }
    }
    return std::nullopt;
}

void write_tree(std::ostream& out, const TreeRecord& t) {
    out << "r " << t.root << ' ' << to_string(t.strategy) << '\n';
    std::vector<VertexId> by_ins(t.order);
    for (VertexId v = 0; v < t.insertion.size(); ++v) {
        if (t.insertion[v] != kNotInTree) by_ins[t.insertion[v]] = v;
    }
    for (VertexId v : by_ins) {
        out << "t " << v << ' ';
        if (t.parent[v] == kNoVertex) {
            out << '-';
        } else {
            out << t.parent[v];
        }
        out << ' ' << t.insertion[v] << '\n';
    }
    for (const auto& e : t.expansions) {
        out << "x " << static_cast<int>(e.op) << ' ' << e.expanded;
        for (VertexId w : e.added) out << ' ' << w;
        out << '\n';
    }
}

TreeText read_tree(std::istream& in) {
    TreeText t;
    std::string line;
    std::size_t line_no = 0;
    bool have_root = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ss(line);
        std::string tag;
        ss >> tag;
        auto bad = [&] { return std::invalid_argument("malformed tree line " + std::to_string(line_no)); };
        if (tag == "r") {
            std::string strategy;
            if (!(ss >> t.root >> strategy)) throw bad();
            t.strategy = parse_strategy(strategy);
            have_root = true;
        } else if (tag == "t") {
            VertexId v = 0;
            std::string p;
            std::int64_t ins = 0;
            if (!(ss >> v >> p >> ins)) throw bad();
            if (p != "-") t.parent[v] = static_cast<VertexId>(std::stoul(p));
        } else if (tag == "x") {
            int op = 0;
            Expansion e;
            if (!(ss >> op >> e.expanded) || op < 1 || op > 4) throw bad();
            e.op = static_cast<OpType>(op);
            VertexId w = 0;
            while (ss >> w) e.added.push_back(w);
            t.expansions.push_back(std::move(e));
        } else {
            throw bad();
        }
    }
    if (!have_root) throw std::invalid_argument("tree text has no root line");
    return t;
}

}  // namespace leafkernel
