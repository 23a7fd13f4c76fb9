#include "leafkernel/bigis.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>
#include <variant>

#include "leafkernel/outerplanar.hpp"

namespace leafkernel {

namespace {

std::string serialize(const Graph& g, const std::vector<VertexId>& to_parent) {
    std::ostringstream out;
    out << "vertices";
    for (VertexId v : g.vertices()) out << ' ' << to_parent[v];
    out << "\nedges";
    for (auto [u, v] : g.edges()) out << ' ' << to_parent[u] << '-' << to_parent[v];
    out << '\n';
    return out.str();
}

// A leaf-face written as v1 ... vl where v1 vl is the edge it shares with the
// rest of the block (any consecutive pair for a block that is one cycle).
struct OrientedFace {
    std::vector<VertexId> seq;

    VertexId front() const { return seq.front(); }
    VertexId back() const { return seq.back(); }
    std::size_t length() const { return seq.size(); }
    OrientedFace reversed() const { return {std::vector<VertexId>(seq.rbegin(), seq.rend())}; }
};

std::vector<VertexId> rotate_to(const std::vector<VertexId>& cyc, VertexId first, VertexId last) {
    const std::size_t k = cyc.size();
    const auto at = static_cast<std::size_t>(std::find(cyc.begin(), cyc.end(), first) - cyc.begin());
    std::vector<VertexId> seq(k);
    if (cyc[(at + k - 1) % k] == last) {
        for (std::size_t i = 0; i < k; ++i) seq[i] = cyc[(at + i) % k];
    } else {
        for (std::size_t i = 0; i < k; ++i) seq[i] = cyc[(at + k - i) % k];
    }
    return seq;
}

struct Move {
    std::string rule;
    std::vector<VertexId> remove;
    std::vector<VertexId> add;
    std::vector<std::vector<VertexId>> cycles;
};

class Solver {
public:
    explicit Solver(const Graph& g, std::vector<VertexId> to_parent)
        : g_(g), to_parent_(std::move(to_parent)) {}

    // Chooses the move for a connected graph of minimum degree >= 2.
    Move choose() {
        auto embedded = recognize_and_embed(g_);
        if (auto* bad = std::get_if<NotOuterplanar>(&embedded)) {
            throw BigisError("graph handed to the case analysis is not outerplanar: " + bad->reason, repro());
        }
        const auto& emb = std::get<OuterplanarEmbedding>(embedded);
        const BlockEmbedding* q = nullptr;
        for (const auto& b : emb.blocks) {
            if (b.is_leaf_block()) {
                q = &b;
                break;
            }
        }
        if (q == nullptr) throw BigisError("no leaf block", repro());
        if (q->is_edge()) throw BigisError("leaf block is a single edge although every degree is at least 2", repro());
        block_ = q;
        in_q_.assign(g_.id_bound(), 0);
        for (VertexId v : q->vertices) in_q_[v] = 1;

        std::vector<std::size_t> leaf_faces;
        for (std::size_t f = 0; f < q->faces.size(); ++f) {
            if (q->is_leaf_face(f)) leaf_faces.push_back(f);
        }
        std::sort(leaf_faces.begin(), leaf_faces.end(), [&](std::size_t x, std::size_t y) {
            return *std::min_element(q->faces[x].begin(), q->faces[x].end()) <
                   *std::min_element(q->faces[y].begin(), q->faces[y].end());
        });
        std::vector<OrientedFace> oriented;
        for (std::size_t f : leaf_faces) oriented.push_back(orient(f));

        // Case 2
        for (const auto& f : oriented) {
            if (f.length() % 2 == 1 && interior_ok(f)) {
                Move m{"2", f.seq, {}, {f.seq}};
                for (std::size_t i = 1; i + 1 < f.length(); i += 2) m.add.push_back(f.seq[i]);
                return m;
            }
        }
        // Case 3
        for (const auto& f : oriented) {
            if (f.length() % 2 == 1 || !interior_ok(f)) continue;
            for (const auto& o : ends_lowest_first(f)) {
                const VertexId last = o.back();
                if (g_.degree(last) != 3 || degree_q(last) != 3) continue;
                std::set<VertexId> face(o.seq.begin(), o.seq.end());
                VertexId w = kNoVertex;
                for (VertexId x : g_.neighbors(last)) {
                    if (!face.count(x)) w = x;
                }
                if (w == kNoVertex) continue;
                Move m{"3", o.seq, {}, {o.seq}};
                m.remove.push_back(w);
                for (std::size_t i = 1; i < o.length(); i += 2) m.add.push_back(o.seq[i]);
                return m;
            }
        }
        // Case 4
        for (std::size_t a = 0; a < oriented.size(); ++a) {
            const auto& f1 = oriented[a];
            if (f1.length() % 2 == 1 || !interior_ok(f1)) continue;
            for (std::size_t b = a + 1; b < oriented.size(); ++b) {
                const auto& f2 = oriented[b];
                if (f2.length() % 2 == 1 || !interior_ok(f2)) continue;
                for (const auto& o1 : ends_lowest_first(f1)) {
                    const VertexId x = o1.back();
                    if (g_.degree(x) != 4 || degree_q(x) != 4) continue;
                    for (const auto& o2 : ends_lowest_first(f2)) {
                        if (o2.back() != x) continue;
                        std::set<VertexId> both(o1.seq.begin(), o1.seq.end());
                        both.insert(o2.seq.begin(), o2.seq.end());
                        if (both.size() != o1.length() + o2.length() - 1) continue;
                        Move m{"4", std::vector<VertexId>(both.begin(), both.end()), {}, {o1.seq}};
                        for (std::size_t i = 1; i < o1.length(); i += 2) m.add.push_back(o1.seq[i]);
                        for (std::size_t i = 1; i + 1 < o2.length(); i += 2) m.add.push_back(o2.seq[i]);
                        return m;
                    }
                }
            }
        }
        // Case 5
        if (q->faces.size() == 1 || q->faces.size() == 2) {
            const std::string rule = q->faces.size() == 1 ? "5a" : "5b";
            for (const auto& f : q->faces) {
                if (f.size() % 2 == 1) {
                    throw BigisError("case " + rule + " with an odd face that the earlier cases should have taken", repro());
                }
            }
            const auto& cyc = q->outer_cycle;
            Move m{rule, cyc, {}, {}};
            std::size_t parity = 0;
            for (std::size_t i = 0; i < cyc.size(); ++i) {
                if (std::binary_search(q->cutvertices.begin(), q->cutvertices.end(), cyc[i])) parity = (i + 1) % 2;
            }
            for (std::size_t i = parity; i < cyc.size(); i += 2) m.add.push_back(cyc[i]);
            return m;
        }
        throw BigisError("none of the cases applies to a leaf block with " + std::to_string(q->faces.size()) + " faces",
                         repro());
    }

    std::string repro() const { return serialize(g_, to_parent_); }

private:
    std::size_t degree_q(VertexId v) const {
        std::size_t d = 0;
        for (VertexId w : g_.neighbors(v)) d += in_q_[w] ? 1 : 0;
        return d;
    }

    bool interior_ok(const OrientedFace& f) const {
        for (std::size_t i = 1; i + 1 < f.length(); ++i) {
            if (g_.degree(f.seq[i]) != 2) return false;
        }
        return true;
    }

    // Both orientations, the one ending at the lower id first.
    std::vector<OrientedFace> ends_lowest_first(const OrientedFace& f) const {
        if (f.back() < f.front()) return {f, f.reversed()};
        return {f.reversed(), f};
    }

    OrientedFace orient(std::size_t face) const {
        const auto& cyc = block_->faces[face];
        for (const auto& e : block_->dual) {
            if (e.a == face || e.b == face) return {rotate_to(cyc, e.chord.first, e.chord.second)};
        }
        // the block is a single cycle: put the vertex of larger degree, if
        // any, at an end so that the rest are interior
        VertexId first = *std::min_element(cyc.begin(), cyc.end());
        for (VertexId v : cyc) {
            if (g_.degree(v) > 2) first = v;
        }
        const std::size_t k = cyc.size();
        const auto at = static_cast<std::size_t>(std::find(cyc.begin(), cyc.end(), first) - cyc.begin());
        return {rotate_to(cyc, first, cyc[(at + k - 1) % k])};
    }

    const Graph& g_;
    std::vector<VertexId> to_parent_;
    const BlockEmbedding* block_ = nullptr;
    std::vector<char> in_q_;
};

}  // namespace

BigisResult independent_set_with_cycles(const Graph& h) {
    BigisResult out;
    const auto embedded = recognize_and_embed(h);
    if (const auto* bad = std::get_if<NotOuterplanar>(&embedded)) {
        throw BigisError("input is not outerplanar: " + bad->reason, "");
    }
    std::vector<Subgraph> work;
    for (const auto& comp : connected_components(h)) work.push_back(induced_compact(h, comp));

    while (!work.empty()) {
        Subgraph sub = std::move(work.back());
        work.pop_back();
        Graph& g = sub.graph;
        std::set<VertexId> low;
        for (VertexId v : g.vertices()) {
            if (g.degree(v) <= 1) low.insert(v);
        }
        auto record = [&](const Move& m) {
            BigisStep step{m.rule, m.remove.size(), m.add.size(), m.cycles.size()};
            const auto i = static_cast<std::int64_t>(step.added);
            const auto r = static_cast<std::int64_t>(step.removed);
            const auto c = static_cast<std::int64_t>(step.cycles);
            if (9 * i < 4 * r - 3 * c) {
                throw BigisError("case " + m.rule + " breaks 9i >= 4r - 3c", serialize(g, sub.to_parent));
            }
            for (VertexId v : m.add) out.independent.push_back(sub.to_parent[v]);
            for (const auto& cyc : m.cycles) {
                std::vector<VertexId> mapped;
                for (VertexId v : cyc) mapped.push_back(sub.to_parent[v]);
                out.cycles.cycles.push_back(std::move(mapped));
            }
            out.steps.push_back(std::move(step));
            std::set<VertexId> touched;
            for (VertexId v : m.remove) {
                for (VertexId w : g.neighbors(v)) touched.insert(w);
            }
            for (VertexId v : m.remove) g.remove_vertex(v);
            for (VertexId w : touched) {
                if (g.contains(w) && g.degree(w) <= 1) low.insert(w);
            }
        };
        bool split = false;
        while (!g.empty() && !split) {
            if (!low.empty()) {
                const VertexId v = *low.begin();
                low.erase(low.begin());
                if (!g.contains(v)) continue;
                Move m{"1", {v}, {v}, {}};
                for (VertexId w : g.neighbors(v)) m.remove.push_back(w);
                record(m);
                continue;
            }
            const auto comps = connected_components(g);
            if (comps.size() > 1) {
                for (const auto& comp : comps) {
                    Subgraph part = induced_compact(g, comp);
                    for (auto& v : part.to_parent) v = sub.to_parent[v];
                    work.push_back(std::move(part));
                }
                split = true;
                continue;
            }
            Solver solver(g, sub.to_parent);
            record(solver.choose());
        }
    }
    std::sort(out.independent.begin(), out.independent.end());
    return out;
}

}  // namespace leafkernel
